"""The order filtration: ord, maximal representations, induced elements.

ord(s) is the largest number of nonzero semigroup elements summing to s.
A representation over the generators whose coefficient sum reaches ord(s)
is maximal; lowering its coefficients induces elements whose order is
exactly the lowered coefficient sum.
"""

from numsem import (
    apery_strata,
    build,
    induced_elements,
    maximal_representations,
    order_of,
    support_size,
)

S = build([13, 19, 24, 44, 49, 54, 55, 59, 60, 66])

for s in (13, 38, 66, 105):
    reps = maximal_representations(S, s)
    print("ord(%d) = %d with %d maximal representation(s)" % (s, order_of(S, s), len(reps)))
    for rep in reps:
        terms = " + ".join(
            "%d*%d" % (c, g) for g, c in zip(rep.gens, rep.coeffs) if c
        )
        print("   %d = %s   support %s" % (s, terms, rep.support()))

rep = maximal_representations(S, 105)[0]
print("\nelements induced by the representation of 105:")
for h in range(rep.order + 1):
    print("  level %d -> %s" % (h, induced_elements(rep, h)))

print("\nsupport size of 105:", support_size(S, 105).size)

strata = apery_strata(S)
print("\nApery set stratified by order:")
for k, elems in strata.strata.items():
    print("  order %d: %s" % (k, list(elems)))
print("top order d =", strata.d)
print("Artinian quotient Hilbert function:", list(strata.h_r_prime))

T = build([7, 8, 9])
print("\nin <7,8,9> the element 24 has two maximal representations:")
for rep in maximal_representations(T, 24):
    print("  coefficients", rep.coeffs, "support", rep.support())
