"""From permutations to quasi-symmetric functions.

The descent map sends F_u to F_{Des u}; on monomials it keeps only the
closed permutations.  The splitting Z goes back through the maximal shuffles.

Run: python demos/descent_map.py
"""

from hopfperm import M, QM, descent_map, format_expansion, product, splitting_Z
from hopfperm.perm_core import Subset
from hopfperm.qsym_algebra import cube_product_witnesses, expand_polynomial
from hopfperm.ssym_algebra import F, expand_word_series

show = format_expansion

prod = product(M("12"), M("21"))
print("M12 * M21      =", show(prod))
print("its image      =", show(descent_map(prod)))
print("M(2) * M(1,1)  =", show(product(QM("(2)"), QM("(1,1)"))))
print()
print("Non-closed permutations vanish:  D(M2413) =", show(descent_map(M("2413"))))
print("Z(M(2,2)) =", show(splitting_Z(QM("(2,2)"))))
print()
S, T, R = Subset((), 1), Subset((1,), 3), Subset((1, 2), 4)
wit = cube_product_witnesses(S, T, R)
print("M(1) * M(1,2) =", show(product(QM("(1)"), QM("(1,2)"))))
print("  the coefficient 2 on M(1,1,2) comes from the cube faces of", [str(z) for z in wit])
print()
print("Realizations in three variables for F2413")
words = expand_word_series("2413", 3)
print("  noncommutative words:", len(words), "e.g.", sorted(words)[:3])
print("  commutative image:  ", expand_polynomial(descent_map(F("2413")), 3))
