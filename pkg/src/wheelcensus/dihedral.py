"""The dihedral group acting on rim words, canonical forms and orbit scans.

Group elements act on positions: position ``i`` is first sent to
``n-1-i`` when the element is a reflection, then shifted by ``rotation``.
The canonical form of a word is the lexicographically least word in its
orbit.

Full orbit scans work on integers whose most significant bit is position
0, so integer order coincides with lexicographic order on the text form.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from wheelcensus.errors import BudgetExceededError

MAX_ENUMERATION_N = 24
MAX_WORD_N = 64

_CHUNK = 1 << 18


@dataclass(frozen=True)
class DihedralElement:
    """Element of D_n: an optional reversal followed by a rotation."""

    n: int
    rotation: int = 0
    reflected: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"group degree must be >= 1, got {self.n}")
        if not 0 <= self.rotation < self.n:
            raise ValueError(f"rotation must lie in 0..{self.n - 1}, got {self.rotation}")

    @classmethod
    def identity(cls, n: int) -> "DihedralElement":
        return cls(n)

    @classmethod
    def elements(cls, n: int) -> Iterator["DihedralElement"]:
        for reflected in (False, True):
            for r in range(n):
                yield cls(n, r, reflected)

    def __call__(self, i: int) -> int:
        """Image of position ``i``."""
        j = self.n - 1 - i if self.reflected else i
        return (j + self.rotation) % self.n

    def __mul__(self, other: "DihedralElement") -> "DihedralElement":
        # (self * other)(i) == self(other(i))
        if self.n != other.n:
            raise ValueError(f"cannot compose elements of D_{self.n} and D_{other.n}")
        shift = -other.rotation if self.reflected else other.rotation
        return DihedralElement(
            self.n, (self.rotation + shift) % self.n, self.reflected != other.reflected
        )

    def __pow__(self, k: int) -> "DihedralElement":
        result = DihedralElement.identity(self.n)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = result * base
        return result

    def inverse(self) -> "DihedralElement":
        if self.reflected:
            return self
        return DihedralElement(self.n, (-self.rotation) % self.n, False)


def act(g: DihedralElement, word: str) -> str:
    """Apply ``g`` to ``word``: the letter at position i moves to g(i)."""
    if len(word) != g.n:
        raise ValueError(f"word length {len(word)} does not match group degree {g.n}")
    out = [""] * g.n
    for i, c in enumerate(word):
        out[g(i)] = c
    return "".join(out)


def orbit(word: str) -> set[str]:
    n = len(word)
    if n == 0:
        return {word}
    rev = word[::-1]
    return {w[r:] + w[:r] for w in (word, rev) for r in range(n)}


def orbit_size(word: str) -> int:
    if len(word) > MAX_WORD_N:
        raise ValueError(f"word length must be <= {MAX_WORD_N}, got {len(word)}")
    return len(orbit(word))


def canonical_form(word: str) -> str:
    """Lexicographically least word in the dihedral orbit of ``word``."""
    if not 1 <= len(word) <= MAX_WORD_N:
        raise ValueError(f"word length must be in 1..{MAX_WORD_N}, got {len(word)}")
    return min(orbit(word))


def is_canonical(word: str) -> bool:
    return canonical_form(word) == word


def _threads() -> int:
    raw = os.environ.get("CENSUS_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return min(8, os.cpu_count() or 1)


def _scan_chunk(n: int, start: int, stop: int) -> np.ndarray:
    full = np.uint64((1 << n) - 1)
    v = np.arange(start, stop, dtype=np.uint64)
    rev = np.zeros_like(v)
    one = np.uint64(1)
    for i in range(n):
        rev |= ((v >> np.uint64(i)) & one) << np.uint64(n - 1 - i)
    keep = np.ones(v.shape, dtype=bool)
    for base in (v, rev):
        keep &= base >= v
        for r in range(1, n):
            rotated = ((base << np.uint64(r)) | (base >> np.uint64(n - r))) & full
            keep &= rotated >= v
    return v[keep]


def check_budget(n: int) -> None:
    if not 3 <= n <= MAX_ENUMERATION_N:
        raise BudgetExceededError(
            f"enumeration supports 3 <= n <= {MAX_ENUMERATION_N}, got n={n}"
        )


@lru_cache(maxsize=None)
def _representatives(n: int) -> np.ndarray:
    """Sorted integers (MSB = position 0) of all canonical words of length n."""
    check_budget(n)
    bounds = [(s, min(s + _CHUNK, 1 << n)) for s in range(0, 1 << n, _CHUNK)]
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        parts = list(pool.map(lambda b: _scan_chunk(n, *b), bounds))
    reps = np.concatenate(parts)
    reps.setflags(write=False)
    return reps


def _to_word(value: int, n: int) -> str:
    return format(value, f"0{n}b")


def weight_counts(n: int) -> list[int]:
    """Number of dihedral orbits of each weight p = 0..n."""
    weights = np.bitwise_count(_representatives(n))
    return np.bincount(weights, minlength=n + 1).astype(int).tolist()


def enumerate_representatives(n: int, p: int | None = None) -> list[str]:
    """One canonical word per dihedral orbit, ascending.

    With ``p`` given only orbits of words with exactly ``p`` ones are kept.
    """
    check_budget(n)
    if p is not None and not 0 <= p <= n:
        raise ValueError(f"p must lie in 0..{n}, got {p}")
    reps = _representatives(n)
    if p is not None:
        reps = reps[np.bitwise_count(reps) == p]
    return [_to_word(int(v), n) for v in reps]
