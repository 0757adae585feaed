"""Classification at the minimal multiplicity.

Three steps: the residue table shows which witness-pair classes can carry a
decreasing v = e - 3 instance (none below e = 13, exactly two at e = 13);
the ten-generator family realizes them; the bounded exhaustive search
recovers every decreasing instance inside a generator cap.
"""

from numsem import (
    SearchConfig,
    SpParameters,
    construct_sp,
    hilbert_function,
    recover_sp_parameters,
    residue_table,
    search_decreasing,
    search_results_csv,
    sp_generator_list,
)

print("== residue admissibility ==")
for e in (10, 11, 12, 13):
    rows = residue_table(e)
    good = [r.h for r in rows if r.admissible]
    print("e = %d: admissible h values %s" % (e, good or "none"))

print("\n== the ten-generator family at e = 13 ==")
for p in (1, 6, 12):
    kprime = {1: 1, 6: 0, 12: -2}[p]
    params = SpParameters(p, 1, kprime, 2, 2, 3)
    S = construct_sp(params)
    print("p = %2d -> %s" % (p, sp_generator_list(params)))
    print("        H_R =", hilbert_function(S).arrow_text())
    print("        parameters recovered:", recover_sp_parameters(S))

print("\n== bounded search, v = e - 3 ==")
empty = search_decreasing(SearchConfig(e_range=(10, 12), v_offset=3, gen_bound_per_e=20))
print("e in 10..12, generators up to 20e: %d decreasing instances" % len(empty))

hits = search_decreasing(SearchConfig(e_range=(13, 13), v_offset=3, gen_bound_per_e=5))
print("e = 13, generators up to 5e: %d decreasing instances" % len(hits))
print(search_results_csv(hits[:6]))

print("== bounded search, v = e - 4 ==")
hits4 = search_decreasing(SearchConfig(e_range=(17, 17), v_offset=4, gen_bound=59))
print("e = 17, generators up to 59: %d decreasing instances" % len(hits4))
for S in hits4[:4]:
    print(" ", S.gens, hilbert_function(S).arrow_text())
