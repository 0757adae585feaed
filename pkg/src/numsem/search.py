"""Classification searches for decreasing Hilbert functions.

Three layers:

* residue admissibility — for a candidate pair with n_j = h * n_i modulo e,
  the nine products of degree <= 3 must occupy distinct nonzero residue
  classes, and the classes still missing from a full system must be covered
  by the five degree-4/5 products.  This reproduces the printed admissibility
  table row by row.

* the ten-generator family at e = 13 — parameters (p, k, k', alpha, beta,
  gamma) pin down a minimal generating set realizing a decrease at level 2.

* bounded exhaustive search — instead of arbitrary generator sets, enumerate
  witness pairs (or triples), lay down the forced Apery skeleton, and
  complete the remaining residue classes.  Every candidate value for a
  missing class sits below that class's smallest element in the subsemigroup
  generated by the skeleton (the final Apery element can only be smaller),
  so the enumeration is exhaustive within the generator bound.  Each
  completed candidate is validated end to end before it is reported.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from ._bitset import closure_bits, largest_missing, shift_sum, window_mask
from .core import NumericalSemigroup, build
from .errors import (
    BadRange,
    ConstraintViolation,
    InternalInconsistency,
    NonMinimal,
)
from .filtration import hilbert_function

__all__ = [
    "ResidueRow",
    "SearchConfig",
    "SpParameters",
    "construct_sp",
    "recover_sp_parameters",
    "residue_admissible",
    "residue_table",
    "search_decreasing",
    "search_results_csv",
    "sp_generator_list",
]


# -- residue admissibility ----------------------------------------------------


@dataclass(frozen=True)
class ResidueRow:
    """One row of the admissibility table for n_j = h * n_i (mod e).

    ``base_classes`` are the residues of n_i, 2n_i, 3n_i, n_j, n_i+n_j,
    2n_i+n_j, 2n_j, n_i+2n_j, 3n_j in that order (n_i normalized to class 1).
    ``extra_classes`` are the residues of 2n_i+2n_j, 3n_i+n_j, n_i+3n_j,
    3n_i+2n_j, 2n_i+3n_j, the products available to complete the residue
    system when the embedding dimension is e - 3.
    """

    e: int
    h: int
    base_classes: tuple[int, ...]
    extra_classes: tuple[int, ...]
    admissible: bool

    @property
    def missing_classes(self) -> tuple[int, ...]:
        return tuple(sorted(set(range(1, self.e)) - set(self.base_classes)))


def residue_admissible(e: int, h: int) -> ResidueRow:
    """Admissibility of the class pair (1, h) modulo e.

    Accepts 1 <= h <= e-1; the printed table starts at h = 4 because smaller
    h collides with a base class, which this check reproduces.
    """
    if e < 2:
        raise BadRange("modulus e must be at least 2")
    if not 1 <= h <= e - 1:
        raise BadRange("h must satisfy 1 <= h <= e-1")
    base = tuple(x % e for x in (1, 2, 3, h, h + 1, h + 2, 2 * h, 2 * h + 1, 3 * h))
    extra = tuple(x % e for x in (2 * h + 2, h + 3, 3 * h + 1, 2 * h + 3, 3 * h + 2))
    distinct = len(set(base)) == 9 and 0 not in base
    covered = distinct and set(range(1, e)) - set(base) <= set(extra)
    return ResidueRow(e, h, base, extra, distinct and covered)


def residue_table(e: int) -> list[ResidueRow]:
    """Rows h = 4 .. e-1 of the admissibility table."""
    if e < 10:
        raise BadRange("the table is defined for e >= 10")
    return [residue_admissible(e, h) for h in range(4, e)]


# -- the ten-generator family at e = 13 ---------------------------------------

_SP_E = 13


@dataclass(frozen=True)
class SpParameters:
    """Parameters of the minimal-multiplicity family.

    n_i = 13k + p and n_j = 13k' + 4p; the constraints below are the
    defining inequalities of the family.  Whether a parameter tuple really
    yields a minimal generating set is checked a posteriori by construct_sp.
    """

    p: int
    k: int
    kprime: int
    alpha: int
    beta: int
    gamma: int

    def __post_init__(self):
        if not 1 <= self.p <= 12:
            raise ConstraintViolation("p must be in [1, 12]")
        if self.k < 1:
            raise ConstraintViolation("k must be at least 1")
        if not -2 <= self.kprime <= 4 * self.k - 2:
            raise ConstraintViolation("k' must be in [-2, 4k-2]")
        if not 4 * self.kprime > 3 * self.k - self.p:
            raise ConstraintViolation("need 4k' > 3k - p")
        if min(self.alpha, self.beta, self.gamma) < 0:
            raise ConstraintViolation("alpha, beta, gamma must be non-negative")
        if not (self.alpha < self.gamma and self.beta < self.gamma):
            raise ConstraintViolation("need alpha < gamma and beta < gamma")

    @property
    def n_i(self) -> int:
        return self.k * _SP_E + self.p

    @property
    def n_j(self) -> int:
        return self.kprime * _SP_E + 4 * self.p


def sp_generator_list(params: SpParameters) -> tuple[int, ...]:
    """The family's ten generators: e, n_i, n_j, then the rest ascending."""
    e, a, b = _SP_E, params.n_i, params.n_j
    if b <= e:
        raise ConstraintViolation("n_j = %d is not above the multiplicity" % b)
    rest = [
        3 * a - e,
        2 * a + b - e,
        a + 2 * b - e,
        3 * b - e,
        2 * a + 2 * b - params.alpha * e,
        3 * a + b - params.beta * e,
        3 * a + 2 * b - params.gamma * e,
    ]
    if min(rest) <= e:
        raise ConstraintViolation("a derived generator falls below the multiplicity")
    return (e, a, b) + tuple(sorted(rest))


def construct_sp(params: SpParameters) -> NumericalSemigroup:
    """Build and validate a family member.

    Raises NonMinimal when the ten values do not minimally generate a
    semigroup with e = 13 and v = 10.
    """
    S = build(sp_generator_list(params))
    if S.e != _SP_E or S.v != 10:
        raise NonMinimal(
            "family candidate has (e, v) = (%d, %d), not (13, 10)" % (S.e, S.v)
        )
    return S


def recover_sp_parameters(S: NumericalSemigroup) -> SpParameters | None:
    """Read the family parameters back off a semigroup, if it belongs."""
    from .structure import check_offset3

    if S.e != _SP_E or S.v != 10:
        return None
    verdict = check_offset3(S)
    if not (verdict.applicable and verdict.pattern):
        return None
    pair = None
    for a, b in verdict.witnesses:
        if b % 13 == (4 * a) % 13:
            pair = (a, b)
            break
        if a % 13 == (4 * b) % 13:
            pair = (b, a)
            break
    if pair is None:
        return None
    a, b = pair
    p, k = a % 13, a // 13
    kprime = (b - 4 * p) // 13
    apery = set(S.apery())

    def drop(value: int) -> int:
        for lam in range(1, value // 13 + 1):
            if value - lam * 13 in apery:
                return lam
        raise InternalInconsistency("no Apery element below %d in its class" % value)

    try:
        return SpParameters(
            p, k, kprime, drop(2 * a + 2 * b), drop(3 * a + b), drop(3 * a + 2 * b)
        )
    except ConstraintViolation:
        return None


# -- bounded exhaustive search -------------------------------------------------


@dataclass(frozen=True)
class SearchConfig:
    """Bounded search space: multiplicities, v = e - v_offset, generator cap.

    ``gen_bound_per_e`` scales the cap with the multiplicity (the usual way
    to state it); ``gen_bound`` is an absolute cap.  Exactly one is set.
    """

    e_range: tuple[int, int]
    v_offset: int
    gen_bound: int | None = None
    gen_bound_per_e: int | None = None
    workers: int = 1

    def __post_init__(self):
        if (self.gen_bound is None) == (self.gen_bound_per_e is None):
            raise BadRange("set exactly one of gen_bound / gen_bound_per_e")
        if self.v_offset not in (3, 4):
            raise BadRange("v_offset must be 3 or 4")
        if self.workers < 1:
            raise BadRange("workers must be at least 1")

    def bound_for(self, e: int) -> int:
        if self.gen_bound is not None:
            bound = self.gen_bound
        else:
            bound = self.gen_bound_per_e * e
        if bound < 3 * e:
            raise BadRange("generator bound %d is below 3e = %d" % (bound, 3 * e))
        return bound


def _candidate_is_hit(e: int, gens: tuple[int, ...]) -> bool:
    """Fast end-to-end check: gens minimally generate and H_R decreases."""
    maxg = max(gens)
    cutoff = (e - 1) * maxg + 1
    f = largest_missing(closure_bits(gens, cutoff), cutoff)
    if f < 0:
        return False
    gen_bits = 0
    for g in gens:
        gen_bits |= 1 << g
    levels_cap = 8
    while True:
        # Window wide enough that every level check below it is conclusive.
        limit = f + (levels_cap + 2) * e
        mask = window_mask(limit)
        level_cur = closure_bits(gens, limit) & ~1
        level_next = shift_sum(level_cur, gens, mask)
        if level_cur & ~level_next != gen_bits:
            return False  # some generator is redundant
        h_prev = 1  # H_R(0)
        for _ in range(levels_cap):
            h_cur = (level_cur & ~level_next).bit_count()
            if h_cur < h_prev:
                return True
            if level_next == ((level_cur << e) & mask):
                return False  # stabilized; the function never moves again
            h_prev = h_cur
            level_cur = level_next
            level_next = shift_sum(level_cur, gens, mask)
        if levels_cap > e:  # (r+1)M = rM + e holds by r = e - 1
            raise InternalInconsistency("candidate filtration did not stabilize")
        levels_cap = min(2 * levels_cap, e + 1)


def _completion_candidates(
    skeleton: tuple[int, ...], e: int, missing: list[int], bound: int
) -> list[list[int]] | None:
    """Per missing residue class, the admissible completion values.

    The Apery element of a missing class in the final semigroup lies
    strictly below the class's smallest element in the skeleton
    subsemigroup (which has order >= 2 there), in steps of e.
    """
    limit = (e - 1) * max(skeleton) + 1
    bits = closure_bits(skeleton, limit)
    choices: list[list[int]] = []
    for cls in missing:
        cap = bound
        x = cls
        while x <= limit:
            if (bits >> x) & 1:
                cap = min(cap, x - e)
                break
            x += e
        values = list(range(cls + e, cap + 1, e))
        if not values:
            return None
        choices.append(values)
    return choices


def _expand_skeleton(
    e: int, forced: tuple[int, ...], occupied: set[int], bound: int
) -> list[tuple[int, ...]]:
    """Complete a forced skeleton over its missing classes and validate."""
    hits = []
    if max(forced) > bound:
        return hits
    missing = sorted(set(range(e)) - occupied)
    choices = _completion_candidates(forced, e, missing, bound)
    if choices is None:
        return hits
    for extras in itertools.product(*choices):
        gens = forced + extras
        if _candidate_is_hit(e, gens):
            hits.append(tuple(sorted(gens)))
    return hits


def _offset3_class_pairs(e: int) -> list[tuple[int, int]]:
    """Class pairs whose nine degree-<=3 products are distinct and nonzero."""
    pairs = []
    for ci in range(1, e):
        for cj in range(ci + 1, e):
            base = {
                ci,
                2 * ci % e,
                3 * ci % e,
                cj,
                (ci + cj) % e,
                (2 * ci + cj) % e,
                2 * cj % e,
                (ci + 2 * cj) % e,
                3 * cj % e,
            }
            if len(base) == 9 and 0 not in base:
                pairs.append((ci, cj))
    return pairs


def _search_offset3_task(args) -> list[tuple[int, ...]]:
    """All validated hits for one (e, n_i) cell of the v = e-3 search."""
    e, n_i, bound, class_pairs = args
    hits: list[tuple[int, ...]] = []
    ci = n_i % e
    partners = set()
    for a, b in class_pairs:
        if a == ci:
            partners.add(b)
        if b == ci:
            partners.add(a)
    if not partners:
        return hits
    for n_j in range(n_i + 1, bound + 1):
        if n_j % e not in partners:
            continue
        forced = (
            e,
            n_i,
            n_j,
            3 * n_i - e,
            2 * n_i + n_j - e,
            n_i + 2 * n_j - e,
            3 * n_j - e,
        )
        occupied = {x % e for x in forced}
        occupied |= {(2 * n_i) % e, (n_i + n_j) % e, (2 * n_j) % e}
        hits.extend(_expand_skeleton(e, forced, occupied, bound))
    return hits


def _search_offset4_task(args) -> list[tuple[int, ...]]:
    """All validated hits for one (e, n_i) cell of the v = e-4 search.

    Covers the two exhaustive shapes of a v = e-4 decrease: the
    (|Ap_2|, |Ap_3|) = (3, 1) two-generator chains with the order jump at
    level 2 or 3, and the (4, 0) three-generator shapes.
    """
    e, n_i, bound = args
    hits: list[tuple[int, ...]] = []
    a = n_i
    values = [x for x in range(e + 1, bound + 1) if x % e]

    for n_j in values:
        if n_j == a or n_j % e == a % e:
            continue
        b = n_j
        ap2 = (2 * a % e, (a + b) % e, 2 * b % e)
        # (3, 1) with the jump at level 2: D_2 + e carries 4a
        forced = (e, a, b, 4 * a - e, 2 * a + b - e, a + 2 * b - e, 3 * b - e)
        occupied = {x % e for x in forced} | set(ap2) | {3 * a % e}
        if len(occupied) == 11:
            hits.extend(_expand_skeleton(e, forced, occupied, bound))
        # (3, 1) with the jump at level 3: one C_3 element stays an Apery
        # element of order 3, the other three drop by e to generators
        if a < b:
            c3 = (3 * a, 2 * a + b, a + 2 * b, 3 * b)
            for ap3 in c3:
                forced = (e, a, b) + tuple(x - e for x in c3 if x != ap3)
                occupied = {x % e for x in forced} | set(ap2) | {ap3 % e}
                if len(occupied) == 10:
                    hits.extend(_expand_skeleton(e, forced, occupied, bound))
        # (4, 0): three-generator shapes
        for n_k in values:
            if n_k in (a, b):
                continue
            c = n_k
            pat1 = (
                e,
                a,
                b,
                c,
                3 * a - e,
                2 * a + b - e,
                a + 2 * b - e,
                3 * b - e,
                2 * a + c - e,
            )
            occupied = {x % e for x in pat1} | set(ap2) | {(a + c) % e}
            if len(occupied) == 13:
                hits.extend(_expand_skeleton(e, pat1, occupied, bound))
            if a < b:
                pat2 = (
                    e,
                    a,
                    b,
                    c,
                    3 * a - e,
                    2 * a + b - e,
                    a + 2 * b - e,
                    3 * b - e,
                    3 * c - e,
                )
                occupied = {x % e for x in pat2} | set(ap2) | {2 * c % e}
                if len(occupied) == 13:
                    hits.extend(_expand_skeleton(e, pat2, occupied, bound))
    return hits


def _tasks_for(config: SearchConfig) -> list[tuple]:
    lo, hi = config.e_range
    tasks = []
    for e in range(lo, hi + 1):
        bound = config.bound_for(e)
        if config.v_offset == 3:
            pairs = tuple(_offset3_class_pairs(e))
            if not pairs:
                continue
            for n_i in range(e + 1, bound + 1):
                if n_i % e:
                    tasks.append((3, (e, n_i, bound, pairs)))
        else:
            for n_i in range(e + 1, bound + 1):
                if n_i % e:
                    tasks.append((4, (e, n_i, bound)))
    return tasks


def _run_task(task) -> list[tuple[int, ...]]:
    kind, args = task
    if kind == 3:
        return _search_offset3_task(args)
    return _search_offset4_task(args)


def search_decreasing(config: SearchConfig) -> list[NumericalSemigroup]:
    """All semigroups in the configured space whose Hilbert function decreases.

    Deterministic for any worker count: results are deduplicated by their
    minimal generating set and sorted by (e, generators).  Every hit is
    rebuilt from scratch and re-verified as decreasing before it is
    returned; an empty list is a valid outcome.
    """
    lo, hi = config.e_range
    if lo > hi:
        return []
    tasks = _tasks_for(config)
    raw: set[tuple[int, ...]] = set()
    if config.workers == 1 or len(tasks) <= 1:
        for task in tasks:
            raw.update(_run_task(task))
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            for chunk in pool.map(_run_task, tasks, chunksize=8):
                raw.update(chunk)
    out = []
    for gens in sorted(raw):
        S = build(gens)
        if not hilbert_function(S).is_decreasing:
            raise InternalInconsistency("search hit fails re-verification: %s" % (gens,))
        out.append(S)
    return out


def search_results_csv(results: list[NumericalSemigroup]) -> str:
    """CSV rows: e, v, generators, Hilbert values, decreasing levels.

    Lists inside a cell are semicolon-separated so the row stays unquoted.
    """
    lines = ["e,v,generators,hilbert,decreasing_levels"]
    for S in results:
        profile = hilbert_function(S)
        lines.append(
            "%d,%d,%s,%s,%s"
            % (
                S.e,
                S.v,
                ";".join(map(str, S.gens)),
                ";".join(map(str, profile.values)),
                ";".join(map(str, profile.decreasing_levels)),
            )
        )
    return "\n".join(lines) + "\n"
