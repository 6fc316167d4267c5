"""Fundamental and monomial bases of the permutation Hopf algebra.

Run: python demos/basis_tour.py
"""

from hopfperm import F, M, antipode, coproduct, format_expansion, m_to_f, product
from hopfperm.ssym_algebra import alpha_witnesses, antipode_power, takeuchi_antipode

show = format_expansion

print("Shuffle product in the fundamental basis")
print("  F12 * F312 =", show(product(F("12"), F("312"))))
print()
print("Splitting coproduct")
print("  Delta F42531 =", show(coproduct(F("42531"))))
print()
print("A monomial element is an alternating sum over an upper interval")
print("  M4123 =", show(m_to_f(M("4123"))))
print()
print("Monomial products have nonnegative coefficients")
print("  M12 * M21 =", show(product(M("12"), M("21"))))
print("  shuffles witnessing the 2 on M2431:", [str(z) for z in alpha_witnesses("12", "21", "2431")])
print()
print("Monomial coproduct only cuts at global descents")
print("  Delta M3412 =", show(coproduct(M("3412"))))
print("  Delta M2413 =", show(coproduct(M("2413"))), " (no global descent, so primitive)")
print()
print("Antipodes: closed form against the generic convolution formula")
closed, generic = antipode(F("231")), takeuchi_antipode(F("231"))
print("  S(F231) =", show(closed), "| agree:", closed == generic)
print("  S(M3412) =", show(antipode(M("3412"))))
print()
print("The antipode has infinite order")
for k in (2, 4, 6):
    print(f"  S^{k}(M231) =", show(antipode_power(M("231"), k)))
