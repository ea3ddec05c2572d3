"""One-indexed permutation algebra.

A permutation of length ``n`` is stored as a tuple ``p`` of the values
``1..n`` where ``p[i - 1]`` is the image of ``i``.  Every public function in
this module takes and returns values in that one-indexed form, so
``[2, 4, 1, 3]`` reads exactly as it is written in one-line notation.
"""
from __future__ import annotations

import itertools
import os
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Literal, Sequence

Permutation = tuple[int, ...]

DEFAULT_ENUMERATION_LIMIT = 8
ENUMERATION_LIMIT_ENV = "PERMWORDLE_MAX_N"


class PermutationError(ValueError):
    """Raised for malformed permutation literals and invalid arguments."""


class LimitExceeded(ValueError):
    """Raised when an exhaustive enumeration is requested above the limit."""


def enumeration_limit() -> int:
    """The largest ``n`` for which exhaustive enumeration is allowed.

    Overridable through the ``PERMWORDLE_MAX_N`` environment variable.
    """
    raw = os.environ.get(ENUMERATION_LIMIT_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_ENUMERATION_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise PermutationError(
            f"{ENUMERATION_LIMIT_ENV} must be an integer, got {raw!r}"
        ) from None


def check_limit(n: int, limit: int | None = None) -> None:
    limit = enumeration_limit() if limit is None else limit
    if n > limit:
        raise LimitExceeded(f"n={n} exceeds the enumeration limit {limit}")


def as_permutation(values: Sequence[int]) -> Permutation:
    """Validate ``values`` as a one-indexed bijection and return it as a tuple.

    The error message names the first duplicated or missing value.
    """
    p = tuple(int(v) for v in values)
    n = len(p)
    if n == 0:
        raise PermutationError("a permutation must have length n >= 1")
    seen: set[int] = set()
    for v in p:
        if not 1 <= v <= n:
            raise PermutationError(f"value {v} out of range 1..{n}")
        if v in seen:
            raise PermutationError(f"value {v} is duplicated")
        seen.add(v)
    # pigeonhole: no duplicates and all in range means nothing is missing
    return p


_LITERAL_RE = re.compile(r"^\s*\[\s*(-?\d+(\s*,\s*-?\d+)*)?\s*\]\s*$")


def parse_permutation(text: str) -> Permutation:
    """Parse a literal such as ``[2,4,1,3]``.

    >>> parse_permutation("[2, 4, 1, 3]")
    (2, 4, 1, 3)
    """
    if not _LITERAL_RE.match(text):
        raise PermutationError(f"not a bracketed permutation literal: {text!r}")
    body = text.strip()[1:-1].strip()
    values = [int(tok) for tok in body.split(",")] if body else []
    n = len(values)
    missing = sorted(set(range(1, n + 1)) - set(values))
    dupes = sorted(v for v, c in Counter(values).items() if c > 1)
    if dupes or missing:
        parts = []
        if dupes:
            parts.append("duplicated " + ", ".join(map(str, dupes)))
        if missing:
            parts.append("missing " + ", ".join(map(str, missing)))
        raise PermutationError(f"{text.strip()} is not a permutation: " + "; ".join(parts))
    return as_permutation(values)


def format_permutation(p: Sequence[int]) -> str:
    return "[" + ",".join(str(v) for v in p) + "]"


def identity(n: int) -> Permutation:
    if n < 1:
        raise PermutationError(f"identity needs n >= 1, got {n}")
    return tuple(range(1, n + 1))


def inverse(p: Sequence[int]) -> Permutation:
    """Return ``q`` with ``q[p[i]] = i``."""
    q = [0] * len(p)
    for i, v in enumerate(p, start=1):
        q[v - 1] = i
    return tuple(q)


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """Return ``p o q``, i.e. ``result[i] = p[q[i]]``."""
    if len(p) != len(q):
        raise PermutationError(f"length mismatch: {len(p)} vs {len(q)}")
    return tuple(p[v - 1] for v in q)


def is_derangement(p: Sequence[int]) -> bool:
    return all(v != i for i, v in enumerate(p, start=1))


@dataclass(frozen=True)
class DisplacementVector:
    """Per-index shift distances reduced into ``0..n-1``."""

    values: tuple[int, ...]
    direction: Literal["right", "left"] = "right"

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        """One-indexed access, ``D[1]`` is the first entry."""
        if not 1 <= i <= len(self.values):
            raise IndexError(i)
        return self.values[i - 1]

    def __contains__(self, value: object) -> bool:
        return value in self.values


def displacement(p: Sequence[int]) -> DisplacementVector:
    """Rightward displacement ``(p[i] - i) mod n``.

    >>> displacement([5, 3, 2, 6, 1, 4]).values
    (4, 1, 5, 2, 2, 4)
    """
    n = len(p)
    return DisplacementVector(
        tuple((v - i) % n for i, v in enumerate(p, start=1)), "right"
    )


def left_displacement(p: Sequence[int]) -> DisplacementVector:
    """Leftward displacement ``(i - p[i]) mod n``."""
    n = len(p)
    return DisplacementVector(
        tuple((i - v) % n for i, v in enumerate(p, start=1)), "left"
    )


@dataclass(frozen=True)
class CycleDecomposition:
    """Disjoint cycles in canonical order.

    Each cycle starts at its minimal element and the cycles are sorted by that
    element, so two equal permutations always decompose identically.
    """

    cycles: tuple[tuple[int, ...], ...]

    @property
    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles))

    @property
    def multiplicities(self) -> dict[int, int]:
        return dict(sorted(Counter(len(c) for c in self.cycles).items()))

    def __str__(self) -> str:
        return "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles)


def cycle_decomposition(p: Sequence[int]) -> CycleDecomposition:
    """
    >>> str(cycle_decomposition([2, 3, 1, 5, 4, 7, 6, 9, 10, 8]))
    '(1,2,3)(4,5)(6,7)(8,9,10)'
    """
    n = len(p)
    seen = [False] * (n + 1)
    cycles = []
    # scanning starts in ascending order, so each cycle is found from its minimum
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = p[x - 1]
        cycles.append(tuple(cycle))
    return CycleDecomposition(tuple(cycles))


def from_cycles(cycles: Sequence[Sequence[int]], n: int | None = None) -> Permutation:
    """Build the permutation sending ``c[a]`` to ``c[a+1]`` for each cycle."""
    if n is None:
        n = sum(len(c) for c in cycles)
    p = list(range(1, n + 1))
    for c in cycles:
        for a, x in enumerate(c):
            p[x - 1] = c[(a + 1) % len(c)]
    return as_permutation(p)


def mirror(p: Sequence[int]) -> Permutation:
    """Reverse positions and values: ``result[i] = n + 1 - p[n + 1 - i]``.

    This conjugation turns rightward shifts into leftward shifts and commutes
    with the wordle feedback and guess update rules.
    """
    n = len(p)
    return tuple(n + 1 - v for v in reversed(p))


def enumerate_permutations(n: int, *, limit: int | None = None) -> Iterator[Permutation]:
    """Every permutation of length ``n`` in lexicographic order."""
    if n < 1:
        raise PermutationError(f"n must be >= 1, got {n}")
    check_limit(n, limit)
    return itertools.permutations(range(1, n + 1))


def enumerate_derangements(n: int, *, limit: int | None = None) -> Iterator[Permutation]:
    """Every derangement of length ``n`` in lexicographic order.

    Built by depth-first placement with the fixed-point test pruned early, so
    it does not walk all ``n!`` permutations.
    """
    if n < 1:
        raise PermutationError(f"n must be >= 1, got {n}")
    check_limit(n, limit)
    used = [False] * (n + 1)
    prefix: list[int] = []

    def extend(pos: int) -> Iterator[Permutation]:
        if pos > n:
            yield tuple(prefix)
            return
        for v in range(1, n + 1):
            if used[v] or v == pos:
                continue
            used[v] = True
            prefix.append(v)
            yield from extend(pos + 1)
            prefix.pop()
            used[v] = False

    return extend(1)


def subfactorial(n: int) -> int:
    """Number of derangements of length ``n`` via ``!n = (n-1)(!(n-1) + !(n-2))``."""
    a, b = 1, 0  # !0, !1
    if n == 0:
        return a
    for k in range(2, n + 1):
        a, b = b, (k - 1) * (a + b)
    return b

