"""First steps: build a numerical semigroup and read off its basic data.

A numerical semigroup is the set of all non-negative integer combinations
of a coprime generator list.  The smallest nonzero element is the
multiplicity e, the number of minimal generators is the embedding
dimension v, and the largest integer left out is the Frobenius number.
"""

from numsem import build, GcdNotOne, NonMinimal

S = build([13, 19, 24, 44, 49, 54, 55, 59, 60, 66])
print("generators:", S.gens)
print("multiplicity e =", S.e, " embedding dimension v =", S.v)
print("Frobenius number:", S.frobenius())
print("number of gaps:", len(S.gaps()))

print("\nmembership:")
for x in (0, 31, 57, 200):
    print("  %3d in S: %s" % (x, S.contains(x)))

print("\nApery set (smallest member of each residue class mod e):")
print(" ", list(S.apery()))
print("  largest Apery element = e + Frobenius =", S.e + S.frobenius())

print("\nvalidation examples:")
try:
    build([4, 6])
except GcdNotOne as exc:
    print("  build([4, 6]) ->", exc)
try:
    build([13, 19, 24, 38])
except NonMinimal as exc:
    print("  build([13, 19, 24, 38]) ->", exc)
