"""Permutations of {0, ..., n-1}.

Products act on the right: ``(p * q)(i) == q(p(i))``, so ``p * q`` means
"apply p, then q".  Conjugation follows the same convention,
``h ** g == g**-1 * h * g``.
"""
from __future__ import annotations

import re
from math import lcm

from .errors import MalformedPermutation

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Perm:
    __slots__ = ("images", "_hash")

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise MalformedPermutation(f"not a bijection on 0..{len(images) - 1}: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree):
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree, cycles, one_indexed=False):
        """Build a permutation from an iterable of cycles (sequences of points)."""
        shift = 1 if one_indexed else 0
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            pts = [int(x) - shift for x in cycle]
            for x in pts:
                if x < 0 or x >= degree:
                    raise MalformedPermutation(f"point {x + shift} outside degree {degree}")
                if x in seen:
                    raise MalformedPermutation(f"point {x + shift} repeated in cycle notation")
                seen.add(x)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = b
        return cls(images)

    @classmethod
    def parse(cls, degree, text, one_indexed=False):
        """Parse cycle notation such as ``"(0 1 2)(3 4)"``; ``"()"`` is the identity."""
        stripped = text.strip()
        if not stripped:
            raise MalformedPermutation("empty cycle string")
        if _CYCLE_RE.sub("", stripped).strip():
            raise MalformedPermutation(f"unparseable cycle notation: {text!r}")
        cycles = []
        for body in _CYCLE_RE.findall(stripped):
            tokens = body.replace(",", " ").split()
            try:
                cycles.append([int(t) for t in tokens])
            except ValueError:
                raise MalformedPermutation(f"non-integer point in {text!r}") from None
        return cls.from_cycles(degree, cycles, one_indexed=one_indexed)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i]

    def __mul__(self, other):
        if not isinstance(other, Perm):
            return NotImplemented
        if len(other.images) != len(self.images):
            raise MalformedPermutation("degree mismatch in product")
        q = other.images
        return Perm._trusted(tuple(q[i] for i in self.images))

    def __invert__(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm._trusted(tuple(inv))

    inverse = __invert__

    def __pow__(self, k):
        if isinstance(k, Perm):
            return ~k * self * k
        result = Perm.identity(self.degree)
        base = self if k >= 0 else ~self
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self):
        """Nontrivial cycles, each starting from its smallest point."""
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self):
        return lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def cycle_string(self, one_indexed=False):
        shift = 1 if one_indexed else 0
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(x + shift) for x in c) + ")" for c in cycs)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Perm({self.cycle_string()}, degree={self.degree})"

    @classmethod
    def _trusted(cls, images):
        p = cls.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p
