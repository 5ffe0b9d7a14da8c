"""Distances between rim edges and the distance tuple of a rim signature."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations

from wheelcensus.dihedral import MAX_ENUMERATION_N, enumerate_representatives, orbit
from wheelcensus.errors import BudgetExceededError
from wheelcensus.wheel import RimSignature


def edge_distance(n: int, i: int, j: int) -> int:
    """Cycle distance between rim edges i and j (0 when they share a vertex)."""
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"edge indices must lie in 0..{n - 1}, got {i} and {j}")
    if i == j:
        raise ValueError(f"distance needs two distinct edges, got i = j = {i}")
    gap = (j - i) % n
    return min(gap - 1, n - gap - 1)


@dataclass(frozen=True)
class DistanceTuple:
    """counts[l] is the number of unordered negative-edge pairs at distance l."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.n // 2 + 1:
            raise ValueError(f"expected {self.n // 2 + 1} entries, got {len(self.counts)}")

    @property
    def pairs(self) -> int:
        return sum(self.counts)

    def to_list(self) -> list[int]:
        return list(self.counts)


def _as_signature(sig: RimSignature | str) -> RimSignature:
    if isinstance(sig, RimSignature):
        return sig
    return RimSignature(len(sig), sig)


def distance_tuple(sig: RimSignature | str) -> DistanceTuple:
    sig = _as_signature(sig)
    counts = [0] * (sig.n // 2 + 1)
    for i, j in combinations(sig.negative_edges, 2):
        counts[edge_distance(sig.n, i, j)] += 1
    return DistanceTuple(sig.n, tuple(counts))


def min_pair_distance(sig: RimSignature | str) -> int:
    sig = _as_signature(sig)
    edges = sig.negative_edges
    if len(edges) < 2:
        raise ValueError(f"need at least 2 negative edges, got {len(edges)}")
    return min(edge_distance(sig.n, i, j) for i, j in combinations(edges, 2))


@dataclass
class KeyLemmaReport:
    """Outcome of comparing dihedral orbits with distance tuples for one (n, p).

    ``violations`` lists distance tuples shared by two or more orbits.
    ``invariance_failures`` lists words whose tuple differs from that of
    their orbit representative; it must always be empty.
    ``reflection_required`` lists canonical words of uniquely-determined
    classes whose orbit is not a single rotation orbit, i.e. where a
    rotation alone cannot map every pair of equal-tuple words onto each
    other.
    """

    n: int
    p: int
    classes: int = 0
    violations: list[dict] = field(default_factory=list)
    invariance_failures: list[str] = field(default_factory=list)
    reflection_required: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.invariance_failures

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "classes": self.classes,
            "violations": self.violations,
            "invariance_failures": self.invariance_failures,
            "reflection_required": self.reflection_required,
        }


def _rotations(word: str) -> set[str]:
    return {word[r:] + word[:r] for r in range(len(word))}


def check_key_lemma(n: int, p: int) -> KeyLemmaReport:
    """Check whether distance tuples separate the weight-p dihedral orbits."""
    if n < 4:
        raise ValueError(f"key-lemma check needs n >= 4, got n={n}")
    if n > MAX_ENUMERATION_N:
        raise BudgetExceededError(f"key-lemma check supports n <= {MAX_ENUMERATION_N}, got n={n}")
    if not 0 <= p <= n:
        raise ValueError(f"p must lie in 0..{n}, got p={p}")
    report = KeyLemmaReport(n, p)
    by_tuple: dict[tuple[int, ...], list[str]] = defaultdict(list)
    for rep in enumerate_representatives(n, p):
        report.classes += 1
        counts = distance_tuple(rep).counts
        by_tuple[counts].append(rep)
        for member in sorted(orbit(rep)):
            if distance_tuple(member).counts != counts:
                report.invariance_failures.append(member)
    for counts in sorted(by_tuple):
        reps = by_tuple[counts]
        if len(reps) > 1:
            report.violations.append({"tuple": list(counts), "orbits": reps})
        elif is_chiral(reps[0]):
            report.reflection_required.append(reps[0])
    report.reflection_required.sort()
    return report


def is_chiral(word: str) -> bool:
    """True iff the reversal of ``word`` is not one of its rotations."""
    return word[::-1] not in _rotations(word)
