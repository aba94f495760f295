"""Three division composition algebras on one 8-dimensional space.

The same vectors carry three different products: the Okubo product ``*``
(non-unital, from twisted 3x3 Hermitian matrices), the octonion product ``.``
(unital, recovered by the Kaplansky trick (e*x)*(y*e)) and the para-octonion
product (conjugate octonion product).  Every computation below is exact over
Q(sqrt 3); nothing is floating point.

Run:  python demos/01_three_products.py
"""

from okuboplane import (
    AlgebraKind,
    Vec8,
    check_identity,
    conjugate_oct,
    mul,
    norm,
    solve_left,
    product_conversion_crosscheck,
)
from okuboplane.algebra import E, random_vec, trial_rng

OK, OC, PA = AlgebraKind.OKUBO, AlgebraKind.OCTONION, AlgebraKind.PARA_OCTONION
i1, i2 = Vec8.basis(1), Vec8.basis(2)

print("== products of basis elements ==")
print(f"okubo     i1 * i1      = {mul(OK, i1, i1)}")
print(f"okubo     e * i1       = {mul(OK, E, i1)}")
print(f"octonion  e . i1       = {mul(OC, E, i1)}   (e is the unit)")
print(f"para      e . i1       = {mul(PA, E, i1)}   (the para-unit conjugates)")

print()
print("== the norm composes over all three products ==")
rng = trial_rng(0, 0)
x, y = random_vec(rng), random_vec(rng)
print(f"x = {x}")
print(f"y = {y}")
for kind in (OK, OC, PA):
    lhs = norm(mul(kind, x, y))
    assert lhs == norm(x) * norm(y)
    print(f"{kind.value:9s} n(x o y) = n(x) n(y) = {lhs}")

print()
print("== symmetric composition (x o y) o x = n(x) y separates the algebras ==")
for kind in (OK, PA):
    assert mul(kind, mul(kind, x, y), x) == y.scale(norm(x))
    print(f"{kind.value:9s} (x o y) o x = n(x) y   holds")
bad = mul(OC, mul(OC, i1, i1), i1)
print(f"octonion  (i1 . i1) . i1 = {bad}  but  n(i1) i1 = {i1}  -- fails")

print()
print("== alternativity and the Moufang laws hold only for the octonions ==")
for kind in (OC, OK, PA):
    left_alt = all(
        check_identity(kind, "AlternativeLeft", Vec8.basis(i), Vec8.basis(j), E)
        for i in range(8)
        for j in range(8)
    )
    print(f"{kind.value:9s} left alternativity on all basis pairs: {left_alt}")

print()
print("== division works without a unit ==")
a, b = random_vec(trial_rng(0, 1)), random_vec(trial_rng(0, 2))
sol = solve_left(OK, a, b)
assert mul(OK, a, sol) == b
print("okubo     a * x = b  solved exactly by  x = (b * a) / n(a)")

print()
print("== each product is a twist of the others (six conversions) ==")
assert product_conversion_crosscheck(x, y)
print("x*y = tau(conj x) . tau2(conj y),  x para y = conj(x) . conj(y),  ...  all six hold")
print("octonion conjugation of x:", conjugate_oct(x))
