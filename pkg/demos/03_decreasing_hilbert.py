"""A decreasing Hilbert function, watched through the D_k / C_k tables.

H_R(n) counts the semigroup elements of order exactly n.  It can dip below
an earlier value only when the order of some element jumps by more than one
after adding the multiplicity; D_k collects those jumps and C_k the
elements that are not landed on.  Level by level,
H_R(k) - H_R(k-1) = |C_k| - |D_k|.
"""

from numsem import (
    audit_delta,
    build,
    hilbert_function,
    is_tangent_cone_cm,
    strata_tables,
)

S = build([13, 19, 24, 44, 49, 54, 55, 59, 60, 66])
profile = hilbert_function(S)
print("H_R =", profile.arrow_text())
print("stable from level", profile.stable_at, "at the multiplicity", S.e)
print("decreasing levels:", list(profile.decreasing_levels))

tables = strata_tables(S)
print("\nk :  D_k (order jumps)          C_k (new arrivals)")
for k in range(2, tables.r_stop):
    print(
        "%2d:  %-25s %s"
        % (k, list(tables.d_sets.get(k, ())), list(tables.c_sets.get(k, ())))
    )
print("first jump level k0 =", tables.k0)
print("everything empty from level", tables.r_stop, "on")

print("\nper-level audit (Hilbert delta vs |C_k| - |D_k|):")
for k, (delta, sizes) in audit_delta(S).levels.items():
    print("  level %d: %+d = %+d" % (k, delta, sizes))

print("\ntangent cone Cohen-Macaulay?", is_tangent_cone_cm(S))
T = build([5, 6, 7])
print("for the arithmetic instance <5,6,7>:", is_tangent_cone_cm(T))
print("  its Hilbert function:", hilbert_function(T).arrow_text())
