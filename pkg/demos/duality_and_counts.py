"""Self-duality, descent-pair tables and global-descent series.

Run: python demos/duality_and_counts.py
"""

from hopfperm.cli import main
from hopfperm.structure_lab import cofree, crossed, descent_pairs, duality

print("theta on S_3 (symmetric, det =", duality.theta_determinant(3), ")")
print(duality.theta_table(3).to_csv())
print("d-table for n = 4 obeys all descent-pair symmetries:", descent_pairs.verify_gessel_identities(4))
print()
print("Global descents cut permutations into primitive blocks")
print("  blocks of 563241:", [str(b) for b in cofree.global_descent_blocks("563241")])
g1 = cofree.g_series(1, 8)
print("  primitives by degree:", g1.leading(8))
print("  reciprocal of the factorial series agrees:", cofree.g1_by_reciprocal(8) == g1)
print()
print("Hopf kernel of the descent map has n! - sum_{k<n} k! elements")
print("  ", [len(crossed.hopf_kernel_basis(n)) for n in range(1, 7)])
print()
print("Cocycle on primitives M(1), M(2):")
print("  ", crossed.sigma_on_primitives(1, 2))
print()
print("The same checks from the command line:")
main(["verify", "--suite", "crossed", "--max-degree", "5"])
