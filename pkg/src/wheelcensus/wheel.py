"""Signed wheels, vertex switching and the rim normal form.

A wheel W_n has hub ``v`` and rim vertices ``v1..vn``.  Rim edge ``i``
(0-based) joins ``v{i+1}`` and ``v{i+2}`` (indices mod n) and spoke ``i``
joins the hub to ``v{i+1}``.  Signs are stored as ``'0'``/``'1'`` strings,
index 0 leftmost, where ``'1'`` marks a negative edge.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Union

from wheelcensus import _exact

#: Vertex id of the hub.  Rim vertices are the integers ``1..n``.
HUB = "v"

VertexId = Union[int, str]

_FLIP = str.maketrans("01", "10")


def _check_word(word: str, n: int, name: str) -> None:
    if len(word) != n:
        raise ValueError(f"{name} must have exactly {n} positions, got {len(word)}")
    if word.strip("01"):
        raise ValueError(f"{name} must consist of '0'/'1' characters, got {word!r}")


def _flip_at(word: str, positions) -> str:
    chars = list(word)
    for i in positions:
        chars[i] = "1" if chars[i] == "0" else "0"
    return "".join(chars)


def _xor(a: str, b: str) -> str:
    return "".join("0" if x == y else "1" for x, y in zip(a, b))


@dataclass(frozen=True)
class SignedWheel:
    """A wheel with a sign on every rim edge and every spoke."""

    n: int
    rim: str
    spokes: str

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"a wheel needs n >= 3 rim vertices, got n={self.n}")
        _check_word(self.rim, self.n, "rim")
        _check_word(self.spokes, self.n, "spokes")

    @classmethod
    def positive(cls, n: int) -> "SignedWheel":
        return cls(n, "0" * n, "0" * n)

    def edges(self) -> Iterator[tuple[VertexId, VertexId, int]]:
        """Yield ``(u, w, sign)`` for every edge; sign is +1 or -1."""
        n = self.n
        for i in range(n):
            yield i + 1, (i + 1) % n + 1, -1 if self.rim[i] == "1" else 1
        for i in range(n):
            yield HUB, i + 1, -1 if self.spokes[i] == "1" else 1

    def to_dict(self) -> dict:
        return {"n": self.n, "rim": self.rim, "spokes": self.spokes}

    @classmethod
    def from_dict(cls, data: dict) -> "SignedWheel":
        return cls(int(data["n"]), str(data["rim"]), str(data["spokes"]))

    def to_dot(self, name: str | None = None) -> str:
        name = name or f"W{self.n}"
        lines = [f"graph {name} {{", f"  {HUB};"]
        lines += [f"  v{j};" for j in range(1, self.n + 1)]
        for u, w, sign in self.edges():
            style = "solid" if sign > 0 else "dashed"
            label = "+1" if sign > 0 else "-1"
            u_id = u if u == HUB else f"v{u}"
            lines.append(f'  {u_id} -- v{w} [sign="{label}", style={style}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class RimSignature:
    """A signed wheel whose negative edges all lie on the rim."""

    n: int
    word: str

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"a wheel needs n >= 3 rim vertices, got n={self.n}")
        _check_word(self.word, self.n, "word")

    @classmethod
    def from_edges(cls, n: int, negative: set[int] | list[int]) -> "RimSignature":
        """Build from 0-based negative rim edge indices."""
        bad = [i for i in negative if not 0 <= i < n]
        if bad:
            raise ValueError(f"rim edge indices out of range 0..{n - 1}: {bad}")
        negative = set(negative)
        return cls(n, "".join("1" if i in negative else "0" for i in range(n)))

    @property
    def weight(self) -> int:
        return self.word.count("1")

    @property
    def negative_edges(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.word) if c == "1")

    def to_wheel(self) -> SignedWheel:
        return SignedWheel(self.n, self.word, "0" * self.n)


def _rim_vertex(w: SignedWheel, u: VertexId) -> int | None:
    if u == HUB:
        return None
    if isinstance(u, bool) or not isinstance(u, int) or not 1 <= u <= w.n:
        raise ValueError(f"invalid vertex id {u!r}: expected {HUB!r} or an integer in 1..{w.n}")
    return u


def switch_vertex(w: SignedWheel, u: VertexId) -> SignedWheel:
    """Negate every edge incident to ``u`` (the hub or a 1-based rim vertex)."""
    j = _rim_vertex(w, u)
    if j is None:
        return SignedWheel(w.n, w.rim, w.spokes.translate(_FLIP))
    # v_j is an endpoint of rim edges j-2 and j-1 (mod n)
    rim = _flip_at(w.rim, ((j - 2) % w.n, (j - 1) % w.n))
    return SignedWheel(w.n, rim, _flip_at(w.spokes, (j - 1,)))


def normalize_to_rim(w: SignedWheel) -> RimSignature:
    """Switch each rim vertex with a negative spoke, in ascending order."""
    for j in range(1, w.n + 1):
        if w.spokes[j - 1] == "1":
            w = switch_vertex(w, j)
    return RimSignature(w.n, w.rim)


def is_balanced(w: SignedWheel) -> bool:
    """True iff every cycle is positive.

    Assigns +-1 potentials along a BFS spanning tree rooted at the hub and
    checks each edge against the product of its endpoint potentials.
    """
    adjacency: dict[VertexId, list[tuple[VertexId, int]]] = {HUB: []}
    for j in range(1, w.n + 1):
        adjacency[j] = []
    edges = list(w.edges())
    for u, v, s in edges:
        adjacency[u].append((v, s))
        adjacency[v].append((u, s))
    potential: dict[VertexId, int] = {HUB: 1}
    queue = deque([HUB])
    while queue:
        u = queue.popleft()
        for v, s in adjacency[u]:
            if v not in potential:
                potential[v] = potential[u] * s
                queue.append(v)
    return all(potential[u] * potential[v] == s for u, v, s in edges)


def is_switching_equivalent(w1: SignedWheel, w2: SignedWheel) -> bool:
    """True iff the edge-wise sign product of the two wheels is balanced."""
    if w1.n != w2.n:
        raise ValueError(f"wheels have different rim lengths: {w1.n} != {w2.n}")
    product = SignedWheel(w1.n, _xor(w1.rim, w2.rim), _xor(w1.spokes, w2.spokes))
    return is_balanced(product)


def count_switching_classes(n: int) -> int:
    """Number of switching classes on W_n: 2**(m - (n+1) + 1) with m = 2n."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    edges, vertices = 2 * n, n + 1
    return _exact.power(2, edges - vertices + 1)
