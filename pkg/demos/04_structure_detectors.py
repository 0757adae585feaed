"""Structure detectors: what a decreasing Hilbert function forces.

Each detector evaluates hypotheses and conclusions independently and
reports witnesses.  NotApplicable is a first-class verdict: a detector is
silent on instances outside its hypotheses instead of reporting false.
"""

from numsem import (
    build,
    check_chain_structure,
    check_offset3,
    check_offset4,
    check_power_apery_tail,
    classify_c3,
    is_symmetric,
    match_ap2_size4_case,
)

E13 = build([13, 19, 24, 44, 49, 54, 55, 59, 60, 66])

print("== v = e - 3 detector on the reference instance ==")
v = check_offset3(E13)
print("decreasing:", v.decreasing, " at level 2:", v.decreasing_at_2)
print("short Artinian profile [1, e-4, 3]:", v.short_profile)
print("two-generator C_2 / C_3 shape:", v.pattern, "witness pair:", v.witnesses)
print("the four statements agree:", v.consistent)

print("\n== C_3 shape when |Ap_2| = 3 ==")
print("witnesses:", classify_c3(E13).witnesses)

print("\n== v = e - 4 detector ==")
A = build([17, 19, 22, 31, 40, 42, 43, 45, 46, 47, 49, 52, 54])
v4 = check_offset4(A)
print("profile (|Ap_2|, |Ap_3|):", v4.profile)
print("pattern witnesses:", v4.witnesses, "level:", v4.level)

print("\n== |Ap_2| = 4 case taxonomy ==")
for gens in (
    (17, 19, 22, 31, 40, 42, 43, 45, 46, 47, 49, 52, 54),
    (17, 22, 29, 37, 49, 64, 69, 70, 79, 82, 84, 89, 94),
):
    m = match_ap2_size4_case(build(list(gens)))
    print("case", m.case, "witnesses", m.witnesses, "C_3 fills the shape:", m.equality)

print("\n== two-generator chain structure ==")
C = build([17, 19, 22, 43, 45, 46, 47, 48, 49, 50, 52, 54, 59])
chain = check_chain_structure(C)
print("first decrease at", chain.ell, "top Apery order", chain.d)
print("witness pair:", chain.witnesses, "all conclusions hold:", chain.ok)
print("such a semigroup is never symmetric:", not is_symmetric(C))

print("\n== one-generator Apery tail ==")
D = build([30, 33, 37, 73, 75, 76, 77, 78, 79, 80, 81, 82, 83, 84, 85, 86,
           87, 88, 89, 91, 92, 94, 95, 98, 101])
tail = check_power_apery_tail(D)
print("single-element strata from r0 =", tail.r0, "to d =", tail.d,
      "carried by multiples of", tail.witness)
