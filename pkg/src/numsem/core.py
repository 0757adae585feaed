"""Core numerical semigroup arithmetic.

A numerical semigroup is a cofinite additive submonoid of the naturals,
identified with its unique minimal generating set.  The smallest nonzero
element is the multiplicity e, the number of minimal generators is the
embedding dimension v, and the largest integer outside the semigroup is the
Frobenius number f.

Membership lives in a bitset over a finite window.  Everything above f is a
member, so the window only needs to be wide enough for the callers; it is
grown (copy-on-extend, under a lock) when a query lands beyond it.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Iterable, Iterator

from ._bitset import closure_bits, largest_missing, window_mask
from .errors import (
    EmptyGenerators,
    GcdNotOne,
    InvalidGenerator,
    NonMinimal,
)

__all__ = [
    "AperySet",
    "NumericalSemigroup",
    "apery",
    "build",
    "contains",
    "frobenius",
    "gaps",
    "parse_generators",
]


def parse_generators(text: str) -> list[int]:
    """Parse a comma-separated list of positive integers, e.g. ``"13,19,24"``."""
    items = [piece.strip() for piece in text.split(",") if piece.strip()]
    if not items:
        raise EmptyGenerators("no generators in %r" % text)
    gens = []
    for item in items:
        try:
            value = int(item)
        except ValueError:
            raise InvalidGenerator("not an integer: %r" % item) from None
        gens.append(value)
    return gens


@dataclass(frozen=True)
class AperySet:
    """The e smallest semigroup elements, one per residue class mod e.

    Equivalently the members s with s - e outside the semigroup.  Contains 0
    and e + f; its maximum is e + f.
    """

    elems: tuple[int, ...]

    def __iter__(self) -> Iterator[int]:
        return iter(self.elems)

    def __len__(self) -> int:
        return len(self.elems)

    def __contains__(self, x: int) -> bool:
        return x in self.elems


class NumericalSemigroup:
    """A numerical semigroup given by its minimal generators.

    The constructor validates the generator list: it must be non-empty,
    positive, have gcd 1, and be minimal (no generator representable by the
    others).  Instances are immutable apart from the membership window, which
    extends on demand and is safe to share between threads.
    """

    __slots__ = ("gens", "e", "v", "f", "_bits", "_horizon", "_lock", "_cache")

    def __init__(self, gens: Iterable[int]):
        cleaned = self._validate(gens)
        object.__setattr__(self, "gens", cleaned)
        object.__setattr__(self, "e", cleaned[0])
        object.__setattr__(self, "v", len(cleaned))
        bits, horizon, f = self._initial_table(cleaned)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "_bits", bits)
        object.__setattr__(self, "_horizon", horizon)
        object.__setattr__(self, "_lock", threading.Lock())
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):  # pragma: no cover - guard rail
        raise AttributeError("NumericalSemigroup is immutable")

    # -- construction -----------------------------------------------------

    @staticmethod
    def _validate(gens: Iterable[int]) -> tuple[int, ...]:
        raw = list(gens)
        if not raw:
            raise EmptyGenerators("generator list is empty")
        for g in raw:
            if not isinstance(g, int) or isinstance(g, bool) or g <= 0:
                raise InvalidGenerator("generator %r is not a positive integer" % (g,))
        ordered = sorted(raw)
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise NonMinimal("generator %d appears twice" % a)
        common = math.gcd(*ordered)
        if common != 1:
            raise GcdNotOne("gcd of %s is %d" % (ordered, common))
        # A generator is redundant iff the others already reach it.
        for i, g in enumerate(ordered):
            others = ordered[:i] + ordered[i + 1 :]
            if others and (closure_bits(others, g) >> g) & 1:
                raise NonMinimal("generator %d is a sum of the others" % g)
        return tuple(ordered)

    @staticmethod
    def _initial_table(gens: tuple[int, ...]) -> tuple[int, int, int]:
        e = gens[0]
        if e == 1:
            horizon = 8
            return window_mask(horizon), horizon, -1
        # Every residue class mod e is reached with at most e - 1 generators,
        # so the Frobenius number is below this cutoff.
        cutoff = (e - 1) * gens[-1] + 1
        bits = closure_bits(gens, cutoff)
        f = largest_missing(bits, cutoff)
        horizon = f + 3 * e
        if horizon > cutoff:
            bits = closure_bits(gens, horizon)
        else:
            horizon = cutoff
        return bits, horizon, f

    # -- membership --------------------------------------------------------

    @property
    def horizon(self) -> int:
        return self._horizon

    def _extend(self, upto: int) -> None:
        with self._lock:
            if upto <= self._horizon:
                return
            new_horizon = max(upto, 2 * self._horizon)
            new_bits = closure_bits(self.gens, new_horizon)
            object.__setattr__(self, "_bits", new_bits)
            object.__setattr__(self, "_horizon", new_horizon)

    def contains(self, s: int) -> bool:
        """Membership test; negative integers are never members."""
        if s < 0:
            return False
        if s > self.f:
            return True
        return bool((self._bits >> s) & 1)

    __contains__ = contains

    def members_upto(self, limit: int) -> int:
        """Membership bitset over [0, limit]."""
        if limit > self._horizon:
            self._extend(limit)
        return self._bits & window_mask(limit)

    # -- classical invariants ----------------------------------------------

    def frobenius(self) -> int:
        """Largest integer outside the semigroup (-1 when the semigroup is N)."""
        return self.f

    def apery(self) -> AperySet:
        """Apery set with respect to the multiplicity."""
        return self._memo("apery", self._compute_apery)

    def _compute_apery(self) -> AperySet:
        e = self.e
        found: dict[int, int] = {}
        bits = self._bits
        x = 0
        top = self.f + e  # the largest Apery element
        while len(found) < e and x <= max(top, 0):
            if (bits >> x) & 1:
                r = x % e
                if r not in found:
                    found[r] = x
            x += 1
        return AperySet(tuple(sorted(found.values())))

    def gaps(self) -> set[int]:
        """The finite complement of the semigroup in the naturals."""
        return {x for x in range(self.f + 1) if not self.contains(x)}

    def genus(self) -> int:
        return len(self.gaps())

    # -- plumbing ------------------------------------------------------------

    def _memo(self, key: str, fn):
        cache = self._cache
        if key not in cache:
            value = fn()
            with self._lock:
                cache.setdefault(key, value)
        return cache[key]

    def __eq__(self, other) -> bool:
        return isinstance(other, NumericalSemigroup) and self.gens == other.gens

    def __hash__(self) -> int:
        return hash(self.gens)

    def __repr__(self) -> str:
        return "NumericalSemigroup(%s)" % ", ".join(map(str, self.gens))


def build(gens: Iterable[int]) -> NumericalSemigroup:
    """Validate a generator list and build the semigroup it generates."""
    return NumericalSemigroup(gens)


def contains(S: NumericalSemigroup, s: int) -> bool:
    return S.contains(s)


def frobenius(S: NumericalSemigroup) -> int:
    return S.frobenius()


def apery(S: NumericalSemigroup) -> AperySet:
    return S.apery()


def gaps(S: NumericalSemigroup) -> set[int]:
    return S.gaps()
