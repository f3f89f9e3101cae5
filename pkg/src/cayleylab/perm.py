"""Permutations of {1..n}: exact composition, cycles, and factorial-base ranking."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

# Whole-graph operations enumerate n! vertices; keep degrees desk-sized.
MAX_DEGREE = 8

_CYCLE = re.compile(r"\(([0-9,]*)\)")


@dataclass(frozen=True, slots=True)
class Permutation:
    """A bijection on {1..n}, stored as the image tuple of 0-based points.

    Products read left to right and act on points from the right:
    ``(a * b).apply(i) == b.apply(a.apply(i))``.  For example

    >>> a = Permutation.parse("(1,2)", 3)
    >>> b = Permutation.parse("(2,3)", 3)
    >>> str(a * b)
    '(1,3,2)'
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if not 1 <= n <= MAX_DEGREE:
            raise ValueError(f"degree must be in 1..{MAX_DEGREE}, got {n}")
        if sorted(self.images) != list(range(n)):
            raise ValueError(f"not a bijection on 0..{n - 1}: {self.images!r}")

    # ------------------------------------------------------------------
    # constructors

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(n)))

    @staticmethod
    def transposition(n: int, i: int, j: int) -> "Permutation":
        """The transposition (i,j) on {1..n}; points are 1-based."""
        if i == j:
            raise ValueError("a transposition needs two distinct points")
        for p in (i, j):
            if not 1 <= p <= n:
                raise ValueError(f"point {p} out of range 1..{n}")
        img = list(range(n))
        img[i - 1], img[j - 1] = j - 1, i - 1
        return Permutation(tuple(img))

    @staticmethod
    def from_cycles(n: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        """Build from disjoint cycles of 1-based points."""
        img = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            for p in cyc:
                if not 1 <= p <= n:
                    raise ValueError(f"point {p} out of range 1..{n}")
                if p in seen:
                    raise ValueError(f"point {p} appears in two cycles")
                seen.add(p)
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                img[a - 1] = b - 1
        return Permutation(tuple(img))

    @staticmethod
    def parse(text: str, n: int) -> "Permutation":
        """Parse cycle notation such as ``(1,2,3)(4,5)``; ``()`` is the identity.

        Whitespace is ignored anywhere in the input.
        """
        compact = re.sub(r"\s+", "", text)
        if compact in ("", "()"):
            return Permutation.identity(n)
        cycles: list[list[int]] = []
        pos = 0
        for m in _CYCLE.finditer(compact):
            if m.start() != pos:
                raise ValueError(f"cannot parse permutation {text!r}")
            pos = m.end()
            if m.group(1):
                cycles.append([int(x) for x in m.group(1).split(",")])
        if pos != len(compact):
            raise ValueError(f"cannot parse permutation {text!r}")
        return Permutation.from_cycles(n, cycles)

    @staticmethod
    def unrank(n: int, r: int) -> "Permutation":
        """The permutation with lexicographic index r, 0 <= r < n!.

        ``unrank(n, 0)`` is the identity; ``unrank`` and ``rank`` are
        mutually inverse.
        """
        if not 0 <= r < math.factorial(n):
            raise ValueError(f"rank {r} out of range for degree {n}")
        pool = list(range(n))
        img = []
        for k in range(n - 1, -1, -1):
            f = math.factorial(k)
            img.append(pool.pop(r // f))
            r %= f
        return Permutation(tuple(img))

    # ------------------------------------------------------------------
    # queries

    @property
    def n(self) -> int:
        return len(self.images)

    def apply(self, point: int) -> int:
        """Image of a 1-based point."""
        return self.images[point - 1] + 1

    @property
    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images))

    @property
    def is_transposition(self) -> bool:
        return sum(1 for i, x in enumerate(self.images) if x != i) == 2

    def support(self) -> frozenset[int]:
        """The set of 1-based points moved."""
        return frozenset(i + 1 for i, x in enumerate(self.images) if x != i)

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of length >= 2, in 1-based points.

        Canonical form: each cycle starts at its minimum point, cycles are
        sorted by first point.
        """
        out = []
        seen = [False] * self.n
        for start in range(self.n):
            if seen[start] or self.images[start] == start:
                continue
            cyc = []
            p = start
            while not seen[p]:
                seen[p] = True
                cyc.append(p + 1)
                p = self.images[p]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths including fixed points, in decreasing order."""
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (self.n - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def cycle_count(self) -> int:
        """Number of cycles, counting fixed points."""
        return len(self.cycle_type())

    def rank(self) -> int:
        """Lexicographic index in 0..n!-1; the identity has rank 0."""
        r = 0
        seen = 0
        n = self.n
        for idx, x in enumerate(self.images):
            smaller = x - (seen & ((1 << x) - 1)).bit_count()
            r += smaller * math.factorial(n - 1 - idx)
            seen |= 1 << x
        return r

    # ------------------------------------------------------------------
    # algebra

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"degree mismatch: {self.n} vs {other.n}")
        return Permutation(tuple(other.images[x] for x in self.images))

    def inverse(self) -> "Permutation":
        img = [0] * self.n
        for i, x in enumerate(self.images):
            img[x] = i
        return Permutation(tuple(img))

    def conjugate(self, g: "Permutation") -> "Permutation":
        """g^-1 * self * g; preserves cycle type."""
        return g.inverse() * self * g

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(str(p) for p in c) + ")" for c in cycs)


def all_permutations(n: int) -> Iterator[Permutation]:
    """All n! permutations of degree n in rank order."""
    for r in range(math.factorial(n)):
        yield Permutation.unrank(n, r)
