"""Finite quivers, paths, subquiver embeddings and vertex relabelings.

Vertices are the integers 1..n.  Arrows carry symbolic string ids, which
stay stable under relabeling.  Path words are stored in traversal order:
the first-traversed arrow comes first.  (Algebraic texts often write the
product of arrows in composition order, i.e. reversed; every word in this
package, including relation words in files, is a traversal-order word.)
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, NamedTuple, Optional

_ID_RE = re.compile(r"\w+\Z", re.ASCII)


class CompositionError(ValueError):
    """Raised when two paths with mismatched endpoints are composed."""


class SearchBudgetExceeded(RuntimeError):
    """Raised when a subquiver search exceeds its node budget."""


@dataclass(frozen=True, order=True)
class Arrow:
    id: str
    source: int
    target: int

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


@dataclass(frozen=True)
class Path:
    """An oriented path: ``word`` lists arrow ids in traversal order.

    The empty word is the trivial path at ``source`` (= ``target``).
    """

    source: int
    target: int
    word: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def is_trivial(self) -> bool:
        return not self.word

    def sort_key(self):
        return (len(self.word), self.word, self.source)

    def __str__(self) -> str:
        if not self.word:
            return f"e{self.source}"
        return ".".join(self.word)


def compose(p: Path, q: Path) -> Path:
    """Concatenate two paths: first traverse ``p``, then ``q``."""
    if p.target != q.source:
        raise CompositionError(
            f"cannot compose: {p} ends at {p.target}, {q} starts at {q.source}"
        )
    return Path(p.source, q.target, p.word + q.word)


@dataclass(frozen=True)
class Quiver:
    """Finite directed multigraph on vertices 1..n with named arrows."""

    n: int
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        for a in self.arrows:
            if not _ID_RE.match(a.id):
                raise ValueError(f"arrow id {a.id!r} is not an ASCII word")
            if a.id in seen:
                raise ValueError(f"duplicate arrow id {a.id!r}")
            seen.add(a.id)
            if not (1 <= a.source <= self.n and 1 <= a.target <= self.n):
                raise ValueError(f"arrow {a.id} has endpoint outside 1..{self.n}")

    @cached_property
    def arrow_by_id(self) -> dict[str, Arrow]:
        return {a.id: a for a in self.arrows}

    @cached_property
    def _out(self) -> dict[int, tuple[Arrow, ...]]:
        out: dict[int, list[Arrow]] = {v: [] for v in self.vertices()}
        for a in self.arrows:
            out[a.source].append(a)
        return {v: tuple(sorted(out[v], key=lambda a: (a.target, a.id))) for v in out}

    @cached_property
    def _inc(self) -> dict[int, tuple[Arrow, ...]]:
        inc: dict[int, list[Arrow]] = {v: [] for v in self.vertices()}
        for a in self.arrows:
            inc[a.target].append(a)
        return {v: tuple(sorted(inc[v], key=lambda a: (a.source, a.id))) for v in inc}

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def arrow(self, arrow_id: str) -> Arrow:
        try:
            return self.arrow_by_id[arrow_id]
        except KeyError:
            raise KeyError(f"unknown arrow id {arrow_id!r}") from None

    def out_arrows(self, v: int) -> tuple[Arrow, ...]:
        self._check_vertex(v)
        return self._out[v]

    def in_arrows(self, v: int) -> tuple[Arrow, ...]:
        self._check_vertex(v)
        return self._inc[v]

    def r(self, i: int, j: int) -> int:
        """Number of arrows i -> j."""
        self._check_vertex(i)
        self._check_vertex(j)
        return sum(1 for a in self._out[i] if a.target == j)

    def _check_vertex(self, v: int) -> None:
        if not (1 <= v <= self.n):
            raise ValueError(f"unknown vertex {v} (quiver has vertices 1..{self.n})")

    def trivial_path(self, v: int) -> Path:
        self._check_vertex(v)
        return Path(v, v, ())

    def path(self, source: int, word) -> Path:
        """Build a path from a traversal-order word, validating composability."""
        self._check_vertex(source)
        at = source
        for arrow_id in word:
            a = self.arrow(arrow_id)
            if a.source != at:
                raise CompositionError(
                    f"word {tuple(word)} breaks at {arrow_id!r}: "
                    f"expected source {at}, got {a.source}"
                )
            at = a.target
        return Path(source, at, tuple(word))

    def has_path(self, p: Path) -> bool:
        """True if ``p`` is a valid path of this quiver (ids and endpoints)."""
        if not (1 <= p.source <= self.n):
            return False
        at = p.source
        for arrow_id in p.word:
            a = self.arrow_by_id.get(arrow_id)
            if a is None or a.source != at:
                return False
            at = a.target
        return at == p.target


class StructurePredicates(NamedTuple):
    has_loop: bool
    has_oriented_cycle: bool
    has_length2_path: bool


def structure_predicates(q: Quiver) -> StructurePredicates:
    has_loop = any(a.is_loop for a in q.arrows)
    has_two = any(q.out_arrows(a.target) for a in q.arrows)
    return StructurePredicates(has_loop, has_oriented_cycle(q), has_two)


def has_oriented_cycle(q: Quiver) -> bool:
    # Kahn peeling: a cycle survives repeated removal of sources.
    indeg = {v: 0 for v in q.vertices()}
    for a in q.arrows:
        indeg[a.target] += 1
    stack = [v for v in q.vertices() if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for a in q.out_arrows(v):
            indeg[a.target] -= 1
            if indeg[a.target] == 0:
                stack.append(a.target)
    return seen < q.n


@dataclass(frozen=True)
class Embedding:
    """A simple directed path v_1 -> ... -> v_m realized by chosen arrows.

    ``cycle_arrow`` (with 1-based ``return_index`` i) is an optional extra
    arrow v_m -> v_i with i < m, turning the line into the one-cycle shape.
    """

    vertices: tuple[int, ...]
    arrows: tuple[str, ...]
    cycle_arrow: Optional[str] = None
    return_index: Optional[int] = None

    @property
    def m(self) -> int:
        return len(self.vertices)

    def validate(self, q: Quiver) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("embedding vertices must be distinct")
        if len(self.arrows) != max(len(self.vertices) - 1, 0):
            raise ValueError("embedding needs exactly m-1 arrows")
        for k, arrow_id in enumerate(self.arrows):
            a = q.arrow(arrow_id)
            if (a.source, a.target) != (self.vertices[k], self.vertices[k + 1]):
                raise ValueError(f"arrow {arrow_id!r} does not realize step {k}")
        if (self.cycle_arrow is None) != (self.return_index is None):
            raise ValueError("cycle_arrow and return_index go together")
        if self.cycle_arrow is not None:
            a = q.arrow(self.cycle_arrow)
            i = self.return_index
            if not (1 <= i < self.m):
                raise ValueError("return index must satisfy 1 <= i < m")
            if (a.source, a.target) != (self.vertices[-1], self.vertices[i - 1]):
                raise ValueError("cycle arrow does not return into the path")


DEFAULT_SEARCH_BUDGET = 1_000_000


def find_a_embeddings(
    q: Quiver, m: int, budget: int = DEFAULT_SEARCH_BUDGET
) -> Iterator[Embedding]:
    """Yield every simple directed path on m distinct vertices.

    One embedding per choice of vertices AND arrows, in lexicographic order
    on the vertex sequence with arrow ids breaking ties.  Backtracking with
    a visited set; raises SearchBudgetExceeded after ``budget`` search nodes
    (the problem is longest-path-hard in general, instances here are small).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    steps = 0

    def walk(vertices: list[int], arrows: list[str], visited: set[int]):
        nonlocal steps
        steps += 1
        if steps > budget:
            raise SearchBudgetExceeded(f"embedding search exceeded {budget} nodes")
        if len(vertices) == m:
            yield Embedding(tuple(vertices), tuple(arrows))
            return
        for a in sorted(q.out_arrows(vertices[-1]), key=lambda a: (a.target, a.id)):
            if a.target in visited:
                continue
            vertices.append(a.target)
            arrows.append(a.id)
            visited.add(a.target)
            yield from walk(vertices, arrows, visited)
            visited.discard(a.target)
            arrows.pop()
            vertices.pop()

    for start in q.vertices():
        yield from walk([start], [], {start})


def is_extendable(q: Quiver, emb: Embedding) -> Optional[Arrow]:
    """A witness arrow from the last embedded vertex back into the path, if any."""
    last = emb.vertices[-1]
    inside = set(emb.vertices)
    candidates = [
        a for a in q.out_arrows(last) if a.target in inside and a.target != last
    ]
    if not candidates:
        return None
    return min(candidates, key=lambda a: (a.target, a.id))


def find_x_embedding(
    q: Quiver, m: int, budget: int = DEFAULT_SEARCH_BUDGET
) -> Optional[Embedding]:
    """First extendable A_m embedding, completed by a return arrow.

    Among the return arrows of that embedding the one with maximal return
    index is chosen (ties by arrow id), so the cycle is as short as possible.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    for emb in find_a_embeddings(q, m, budget=budget):
        last = emb.vertices[-1]
        pos = {v: k + 1 for k, v in enumerate(emb.vertices[:-1])}
        returns = [a for a in q.out_arrows(last) if a.target in pos]
        if not returns:
            continue
        best_pos = max(pos[a.target] for a in returns)
        best = min((a for a in returns if pos[a.target] == best_pos), key=lambda a: a.id)
        return Embedding(emb.vertices, emb.arrows, best.id, best_pos)
    return None


@dataclass(frozen=True)
class Relabeling:
    """A bijection of 1..n; ``mapping[old - 1]`` is the new label."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(self.mapping))
        n = len(self.mapping)
        if sorted(self.mapping) != list(range(1, n + 1)):
            raise ValueError("relabeling must be a permutation of 1..n")

    @property
    def n(self) -> int:
        return len(self.mapping)

    def apply(self, v: int) -> int:
        return self.mapping[v - 1]

    def inverse(self) -> "Relabeling":
        inv = [0] * self.n
        for old, new in enumerate(self.mapping, start=1):
            inv[new - 1] = old
        return Relabeling(tuple(inv))

    @staticmethod
    def identity(n: int) -> "Relabeling":
        return Relabeling(tuple(range(1, n + 1)))


def relabel(q: Quiver, sigma: Relabeling) -> Quiver:
    """Rename vertices by ``sigma``; arrow ids and their order are kept."""
    if sigma.n != q.n:
        raise ValueError("relabeling size does not match quiver")
    return Quiver(
        q.n,
        tuple(Arrow(a.id, sigma.apply(a.source), sigma.apply(a.target)) for a in q.arrows),
    )


def relabeling_from_embedding(q: Quiver, emb: Embedding) -> Relabeling:
    """Send the embedded vertices to 1..m in path order, the rest to m+1..n
    in ascending original order."""
    emb.validate(q)
    mapping = [0] * q.n
    for k, v in enumerate(emb.vertices, start=1):
        mapping[v - 1] = k
    nxt = len(emb.vertices) + 1
    for v in q.vertices():
        if mapping[v - 1] == 0:
            mapping[v - 1] = nxt
            nxt += 1
    return Relabeling(tuple(mapping))
