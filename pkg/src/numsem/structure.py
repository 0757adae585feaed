"""Structural pattern detectors for decreasing Hilbert functions.

Each detector evaluates the hypotheses and the conclusion of one structure
statement independently, reports every witness assignment it finds, and
returns NotApplicable (a first-class verdict, distinct from false) when the
hypotheses do not hold.  Detectors never trust each other: every reported
witness is re-verified against the computed C_k / D_k sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .core import NumericalSemigroup
from .errors import HypothesisFailed, InternalInconsistency
from .filtration import hilbert_function, strata_tables
from .grading import apery_strata

__all__ = [
    "Ap24Match",
    "C3Pattern",
    "ChainReport",
    "ClassificationReport",
    "PowerTailVerdict",
    "Offset3Verdict",
    "Offset4Verdict",
    "check_chain_structure",
    "check_offset3",
    "check_offset4",
    "check_power_apery_tail",
    "classification_report",
    "classify_c3",
    "is_symmetric",
    "match_ap2_size4_case",
]


def is_symmetric(S: NumericalSemigroup) -> bool:
    """Gap reflection test: x in S iff f - x is a gap."""
    f = S.f
    if f < 0:
        return True
    return all(S.contains(x) != S.contains(f - x) for x in range(f + 1))


def _ap1(S: NumericalSemigroup) -> tuple[int, ...]:
    return apery_strata(S).strata.get(1, ())


def _set(tables, which: str, k: int) -> set[int]:
    store = tables.c_sets if which == "c" else tables.d_sets
    return set(store.get(k, ()))


# -- C_3 pattern on two generators ------------------------------------------


@dataclass(frozen=True)
class C3Pattern:
    """C_3 = {3a, 2a+b, a+2b, 3b} together with C_2 = {2a, a+b, 2b}."""

    witnesses: tuple[tuple[int, int], ...]

    @property
    def pair(self) -> tuple[int, int]:
        return self.witnesses[0]


def classify_c3(S: NumericalSemigroup) -> C3Pattern | None:
    """Find the two-generator shape of C_3 when |Ap_2| = 3 and |C_3| >= 4."""
    strata = apery_strata(S)
    if strata.size(2) != 3:
        raise HypothesisFailed("|Ap_2| = %d, need 3" % strata.size(2))
    tables = strata_tables(S)
    c3 = _set(tables, "c", 3)
    if len(c3) <= 3:
        return None
    c2 = _set(tables, "c", 2)
    wits = []
    for a, b in combinations(_ap1(S), 2):
        if c2 == {2 * a, a + b, 2 * b} and c3 == {3 * a, 2 * a + b, a + 2 * b, 3 * b}:
            wits.append((a, b))
    if not wits:
        raise InternalInconsistency("|C_3| >= 4 with |Ap_2| = 3 but no witness pair")
    return C3Pattern(tuple(wits))


# -- |Ap_2| = 4 case analysis -------------------------------------------------


@dataclass(frozen=True)
class Ap24Match:
    """One matching case of the five |Ap_2| = 4 shapes.

    ``case`` is a tag in 'a'..'e'.  For the containment cases (b, d) the
    match records whether C_3 actually fills the whole candidate set.
    """

    case: str
    witnesses: tuple[tuple[int, ...], ...]
    equality: bool
    all_cases: tuple[str, ...] = ()


def _ap24_candidates(ap1, ap2, c3):
    """Yield (case tag, role tuple, whether C_3 fills the candidate set)."""
    for a, b, c in permutations(ap1, 3):
        # (a): 2a, a+b, a+c, b+c with triple-supported C_3
        if b < c and ap2 == {2 * a, a + b, a + c, b + c}:
            cand = {a + b + c, 3 * a, 2 * a + b, 2 * a + c}
            if c3 == cand:
                yield "a", (a, b, c), True
        # (b): 2a, a+b, 2b, a+c ; containment case
        if ap2 == {2 * a, a + b, 2 * b, a + c}:
            cand = {3 * a, 2 * a + b, a + 2 * b, 3 * b, 2 * a + c}
            if c3 <= cand:
                yield "b", (a, b, c), c3 == cand
        # (d): 2a, a+b, 2b, 2c ; containment case
        if a < b and ap2 == {2 * a, a + b, 2 * b, 2 * c}:
            cand = {3 * a, 2 * a + b, a + 2 * b, 3 * b, 3 * c}
            if c3 <= cand:
                yield "d", (a, b, c), c3 == cand
        # (e): 2a, 2b, a+c, b+c
        if a < b and ap2 == {2 * a, 2 * b, a + c, b + c}:
            cand = {3 * a, 2 * a + c, 2 * b + c, 3 * b}
            if c3 == cand:
                yield "e", (a, b, c), True
    # (c): 2a, a+b, 2b, h+k with {h, k} disjoint from the pattern pair
    for a, b in combinations(ap1, 2):
        if {2 * a, a + b, 2 * b} <= ap2:
            rest = ap2 - {2 * a, a + b, 2 * b}
            if len(rest) != 1:
                continue
            extra = next(iter(rest))
            cand = {3 * a, 2 * a + b, a + 2 * b, 3 * b}
            if c3 != cand:
                continue
            for h, k in combinations(ap1, 2):
                if {h, k} & {a, b}:
                    continue
                if h + k == extra:
                    yield "c", (a, b, h, k), True


def match_ap2_size4_case(S: NumericalSemigroup) -> Ap24Match | None:
    """Match the |Ap_2| = 4 shape taxonomy; None when no case fits."""
    strata = apery_strata(S)
    if strata.size(2) != 4:
        raise HypothesisFailed("|Ap_2| = %d, need 4" % strata.size(2))
    ap2 = set(strata.strata[2])
    c3 = _set(strata_tables(S), "c", 3)
    by_case: dict[str, list] = {}
    eq_by_case: dict[str, bool] = {}
    for case, roles, equality in _ap24_candidates(_ap1(S), ap2, c3):
        by_case.setdefault(case, []).append(roles)
        eq_by_case[case] = eq_by_case.get(case, False) or equality
    if not by_case:
        return None
    case = sorted(by_case)[0]
    return Ap24Match(
        case, tuple(by_case[case]), eq_by_case[case], tuple(sorted(by_case))
    )


# -- v = e - 3 equivalence ----------------------------------------------------


@dataclass(frozen=True)
class Offset3Verdict:
    """Independent evaluation of the v = e-3 decrease conditions.

    ``decreasing``, ``decreasing_at_2``, ``short_profile`` (H_{R'} equals
    [1, e-4, 3]) and ``pattern`` (C_2 and D_2 + e = C_3 on two generators)
    are each computed on their own; ``consistent`` records that they agree
    the way the equivalence demands.
    """

    applicable: bool
    decreasing: bool = False
    decreasing_at_2: bool = False
    short_profile: bool = False
    pattern: bool = False
    witnesses: tuple[tuple[int, int], ...] = ()

    @property
    def consistent(self) -> bool:
        if not self.applicable:
            return True
        third = self.short_profile and self.pattern
        return self.decreasing == self.decreasing_at_2 == third

    @property
    def holds(self) -> bool:
        return self.applicable and self.decreasing


def check_offset3(S: NumericalSemigroup) -> Offset3Verdict:
    if S.v != S.e - 3:
        return Offset3Verdict(applicable=False)
    profile = hilbert_function(S)
    strata = apery_strata(S)
    tables = strata_tables(S)
    c2, c3 = _set(tables, "c", 2), _set(tables, "c", 3)
    d2_shift = {x + S.e for x in _set(tables, "d", 2)}
    wits = []
    for a, b in combinations(_ap1(S), 2):
        want3 = {3 * a, 2 * a + b, a + 2 * b, 3 * b}
        if c2 == {2 * a, a + b, 2 * b} and c3 == want3 and d2_shift == want3:
            wits.append((a, b))
    verdict = Offset3Verdict(
        applicable=True,
        decreasing=profile.is_decreasing,
        decreasing_at_2=2 in profile.decreasing_levels,
        short_profile=strata.h_r_prime == (1, S.e - 4, 3),
        pattern=bool(wits),
        witnesses=tuple(wits),
    )
    return verdict


# -- v = e - 4 equivalences ---------------------------------------------------


@dataclass(frozen=True)
class Offset4Verdict:
    """v = e-4 decrease detector, split by the (|Ap_2|, |Ap_3|) profile.

    For profile (4, 0): the two C_3 = D_2 + e shapes on three generators,
    equivalent to a decrease at level 2.  For profile (3, 1): the
    two-generator C_3 shape with the D_h + e chain carrying 4*n_i, h = 2 or
    3, equivalent to a decrease at some level <= 3.
    """

    applicable: bool
    profile: tuple[int, int] | None = None
    decreasing: bool = False
    target_decrease: bool = False
    pattern: bool = False
    witnesses: tuple[tuple[int, ...], ...] = ()
    level: int | None = None

    @property
    def consistent(self) -> bool:
        if not self.applicable:
            return True
        return self.target_decrease == self.pattern

    @property
    def holds(self) -> bool:
        return self.applicable and self.decreasing


def _chain_values(a: int, b: int, h: int) -> set[int]:
    """{h*a + b, (h-1)*a + 2b, ..., (h+1)*b}."""
    return {(h + 1 - m) * a + m * b for m in range(1, h + 2)}


def check_offset4(S: NumericalSemigroup) -> Offset4Verdict:
    if S.v != S.e - 4:
        return Offset4Verdict(applicable=False)
    strata = apery_strata(S)
    profile = (strata.size(2), strata.size(3))
    hp = hilbert_function(S)
    tables = strata_tables(S)
    ap1 = _ap1(S)
    if profile == (4, 0):
        ap2 = set(strata.strata[2])
        c3 = _set(tables, "c", 3)
        d2_shift = {x + S.e for x in _set(tables, "d", 2)}
        wits = []
        for a, b, c in permutations(ap1, 3):
            pat1 = ap2 == {2 * a, a + b, 2 * b, a + c} and c3 == d2_shift == {
                3 * a,
                2 * a + b,
                a + 2 * b,
                3 * b,
                2 * a + c,
            }
            pat2 = (
                a < b
                and ap2 == {2 * a, a + b, 2 * b, 2 * c}
                and c3
                == d2_shift
                == {3 * a, 2 * a + b, a + 2 * b, 3 * b, 3 * c}
            )
            if pat1 or pat2:
                wits.append((a, b, c))
        return Offset4Verdict(
            applicable=True,
            profile=profile,
            decreasing=hp.is_decreasing,
            target_decrease=2 in hp.decreasing_levels,
            pattern=bool(wits),
            witnesses=tuple(wits),
            level=2 if wits else None,
        )
    if profile == (3, 1):
        ap2 = set(strata.strata[2])
        c3 = _set(tables, "c", 3)
        wits = []
        level = None
        for a, b in permutations(ap1, 2):
            if ap2 != {2 * a, a + b, 2 * b}:
                continue
            if c3 != {3 * a, 2 * a + b, a + 2 * b, 3 * b}:
                continue
            for h in (2, 3):
                dh_shift = {x + S.e for x in _set(tables, "d", h)}
                if dh_shift == {4 * a} | _chain_values(a, b, h):
                    wits.append((a, b))
                    level = h if level is None else min(level, h)
        return Offset4Verdict(
            applicable=True,
            profile=profile,
            decreasing=hp.is_decreasing,
            target_decrease=any(l <= 3 for l in hp.decreasing_levels),
            pattern=bool(wits),
            witnesses=tuple(wits),
            level=level,
        )
    return Offset4Verdict(applicable=False, profile=profile)


# -- two-generator chain structure (|Ap_2| = 3, |Ap_3| = 1) -------------------


@dataclass(frozen=True)
class ChainReport:
    """Chain structure when |Ap_2| = 3, |Ap_3| = 1 and H_R decreases.

    Verifies ell <= d, the full two-generator chains C_2..C_ell, that
    (d+1)*n_i lands in D_ell + e, the power tail Ap_k = {k n_i} when
    (ell, d) != (3, 3), the shape of D_ell + e, and non-symmetry.
    """

    applicable: bool
    ell: int | None = None
    d: int | None = None
    witnesses: tuple[tuple[int, int], ...] = ()
    ell_at_most_d: bool = False
    chain_ok: bool = False
    power_in_d_ell: bool = False
    tail_ok: bool = False
    d_ell_pattern_ok: bool = False
    not_symmetric: bool = False

    @property
    def ok(self) -> bool:
        if not self.applicable:
            return True
        return (
            self.ell_at_most_d
            and self.chain_ok
            and self.power_in_d_ell
            and self.tail_ok
            and self.d_ell_pattern_ok
            and self.not_symmetric
        )


def check_chain_structure(S: NumericalSemigroup) -> ChainReport:
    strata = apery_strata(S)
    hp = hilbert_function(S)
    if strata.size(2) != 3 or strata.size(3) != 1 or not hp.is_decreasing:
        return ChainReport(applicable=False)
    tables = strata_tables(S)
    ell = min(hp.decreasing_levels)
    d = strata.d
    wits = []
    any_pattern = False
    any_tail = False
    for a, b in permutations(_ap1(S), 2):
        chain_ok = all(
            _set(tables, "c", r) == {(r - m) * a + m * b for m in range(r + 1)}
            for r in range(2, ell + 1)
        )
        if not chain_ok:
            continue
        d_ell_shift = {x + S.e for x in _set(tables, "d", ell)}
        if (d + 1) * a not in d_ell_shift:
            continue
        wits.append((a, b))
        if d_ell_shift == {(d + 1) * a} | _chain_values(a, b, ell):
            any_pattern = True
        if (ell, d) == (3, 3) or all(
            set(strata.strata.get(k, ())) == {k * a} for k in range(3, d + 1)
        ):
            any_tail = True
    return ChainReport(
        applicable=True,
        ell=ell,
        d=d,
        witnesses=tuple(wits),
        ell_at_most_d=ell <= d,
        chain_ok=bool(wits),
        power_in_d_ell=bool(wits),
        tail_ok=any_tail,
        d_ell_pattern_ok=any_pattern,
        not_symmetric=not is_symmetric(S),
    )


# -- single-element Apery tail ------------------------------------------------


@dataclass(frozen=True)
class PowerTailVerdict:
    """If some |Ap_r| = 1 with least such r_0 < d, the tail is one generator's
    powers: Ap_k = {k*n_i} for r_0 <= k <= d, and k*n_i stays in Ap_k below r_0."""

    applicable: bool
    r0: int | None = None
    d: int | None = None
    witness: int | None = None
    tail_ok: bool = False
    head_ok: bool = False

    @property
    def ok(self) -> bool:
        return (not self.applicable) or (self.tail_ok and self.head_ok)


def check_power_apery_tail(S: NumericalSemigroup) -> PowerTailVerdict:
    strata = apery_strata(S)
    d = strata.d
    singles = [r for r in range(3, d + 1) if strata.size(r) == 1]
    if not singles:
        return PowerTailVerdict(applicable=False)
    r0 = min(singles)
    if r0 >= d:
        return PowerTailVerdict(applicable=False, r0=r0, d=d)
    for a in _ap1(S):
        tail_ok = all(set(strata.strata[k]) == {k * a} for k in range(r0, d + 1))
        if tail_ok:
            head_ok = all(k * a in strata.strata.get(k, ()) for k in range(1, r0))
            return PowerTailVerdict(True, r0, d, a, True, head_ok)
    return PowerTailVerdict(True, r0, d, None, False, False)


# -- aggregate report ---------------------------------------------------------


@dataclass(frozen=True)
class ClassificationReport:
    """All structure detectors, plus recovered family parameters when e = 13."""

    symmetric: bool
    c3_pattern: C3Pattern | None
    ap24_case: Ap24Match | None
    offset3: Offset3Verdict
    offset4: Offset4Verdict
    chain: ChainReport
    power_tail: PowerTailVerdict
    sp_params: "SpParameters | None"


def classification_report(S: NumericalSemigroup) -> ClassificationReport:
    from .search import recover_sp_parameters

    strata = apery_strata(S)
    c3_pattern = None
    if strata.size(2) == 3:
        c3_pattern = classify_c3(S)
    ap24 = None
    if strata.size(2) == 4:
        ap24 = match_ap2_size4_case(S)
    return ClassificationReport(
        symmetric=is_symmetric(S),
        c3_pattern=c3_pattern,
        ap24_case=ap24,
        offset3=check_offset3(S),
        offset4=check_offset4(S),
        chain=check_chain_structure(S),
        power_tail=check_power_apery_tail(S),
        sp_params=recover_sp_parameters(S),
    )
