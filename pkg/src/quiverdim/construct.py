"""Ideal constructions that pin the global dimension, and the planner.

The base ideal kills every length-2 path whose middle vertex exceeds both
endpoints ("local max"); it always forces global dimension at most 2.  Two
refinements steer the dimension higher along an embedded line or one-cycle:
adding the consecutive length-2 relations along the line, or consecutive
relations plus a family of length-3 relations at the tail.  The planner
picks a construction for a requested target and only issues a certificate
after recomputing the global dimension from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import homology
from .algebra import Algebra, RelationSet, reduce_relations
from .homology import ExtNat
from .quiver import (
    Embedding,
    Path,
    Quiver,
    Relabeling,
    find_a_embeddings,
    find_x_embedding,
    is_extendable,
    relabel,
    relabeling_from_embedding,
    structure_predicates,
)

# certificate kinds
SEMISIMPLE = "semisimple"
HEREDITARY = "hereditary"
LOCAL_MAX = "local-max"
LINE_CHAIN = "line-chain"  # non-extendable line, consecutive relations
CYCLE_CHAIN = "cycle-chain"  # one-cycle, consecutive relations
CYCLE_CUBIC = "cycle-cubic"  # one-cycle, consecutive + length-3 tail


def _require_loopless(q: Quiver) -> None:
    for a in q.arrows:
        if a.is_loop:
            raise ValueError(f"quiver has a loop {a.id!r} at {a.source}")


def local_max_ideal(q: Quiver) -> RelationSet:
    """All length-2 paths through a middle vertex larger than both ends."""
    _require_loopless(q)
    gens = []
    for v in q.vertices():
        ins = [a for a in q.in_arrows(v) if a.source < v]
        outs = [b for b in q.out_arrows(v) if b.target < v]
        for a in ins:
            for b in outs:
                gens.append(Path(a.source, b.target, (a.id, b.id)))
    return reduce_relations(gens)


def _consecutive_pairs(q: Quiver, lo: int, hi: int) -> list[Path]:
    """All 2-paths i -> i+1 -> i+2 for lo <= i <= hi, over all arrow choices."""
    gens = []
    for i in range(lo, hi + 1):
        firsts = [a for a in q.out_arrows(i) if a.target == i + 1]
        seconds = [b for b in q.out_arrows(i + 1) if b.target == i + 2]
        if not firsts or not seconds:
            raise ValueError(f"missing consecutive arrows at {i} -> {i+1} -> {i+2}")
        for a in firsts:
            for b in seconds:
                gens.append(Path(i, i + 2, (a.id, b.id)))
    return gens


def chain_ideal(q: Quiver, m: int) -> RelationSet:
    """Local-max ideal plus consecutive relations along 1..m (needs m >= 2)."""
    _require_loopless(q)
    if not (2 <= m <= q.n):
        raise ValueError(f"m must be within 2..{q.n}")
    gens = list(local_max_ideal(q))
    if m >= 3:
        gens.extend(_consecutive_pairs(q, 1, m - 2))
    return reduce_relations(gens)


def chain_cubic_ideal(q: Quiver, m: int) -> RelationSet:
    """Local-max ideal, consecutive relations up to m-4, and every length-3
    path (m-3) -> (m-2) -> (m-1) -> m (needs m >= 4)."""
    _require_loopless(q)
    if not (4 <= m <= q.n):
        raise ValueError(f"m must be within 4..{q.n}")
    base = list(local_max_ideal(q))
    gens = list(base)
    if m >= 5:
        gens.extend(_consecutive_pairs(q, 1, m - 4))
    cubics = []
    for a in (x for x in q.out_arrows(m - 3) if x.target == m - 2):
        for b in (x for x in q.out_arrows(m - 2) if x.target == m - 1):
            for c in (x for x in q.out_arrows(m - 1) if x.target == m):
                cubics.append(Path(m - 3, m, (a.id, b.id, c.id)))
    if not cubics:
        raise ValueError(f"missing consecutive arrows along {m-3}..{m}")
    base_words = {g.word for g in base}
    for cube in cubics:
        for k in range(2):
            assert cube.word[k : k + 2] not in base_words, (
                "length-3 relation overlaps a local-max relation"
            )
    gens.extend(cubics)
    return reduce_relations(gens)


def gldim2_achievable(q: Quiver) -> tuple[bool, Optional[tuple[Path, Relabeling]]]:
    """Loopless with a composable arrow pair?  The witness is the first
    length-2 path and the relabeling that moves its middle vertex to n."""
    if any(a.is_loop for a in q.arrows):
        return False, None
    two_paths = sorted(
        (
            Path(a.source, b.target, (a.id, b.id))
            for a in q.arrows
            for b in q.out_arrows(a.target)
        ),
        key=Path.sort_key,
    )
    if not two_paths:
        return False, None
    witness = two_paths[0]
    middle = q.arrow(witness.word[0]).target
    mapping = [0] * q.n
    mapping[middle - 1] = q.n
    nxt = 1
    for v in q.vertices():
        if v != middle:
            mapping[v - 1] = nxt
            nxt += 1
    return True, (witness, Relabeling(tuple(mapping)))


@dataclass(frozen=True)
class Certificate:
    """A verified construction: the ideal (in the quiver's original labels),
    how it was found, and the recomputed homological data."""

    kind: str
    target: int
    m: Optional[int]
    embedding: Optional[Embedding]
    relabeling: Relabeling
    ideal: RelationSet
    claimed_gldim: ExtNat
    verified_gldim: ExtNat
    pdims: dict[int, ExtNat]


@dataclass(frozen=True)
class PlanResult:
    certificate: Optional[Certificate]
    attempts: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.certificate is not None


def _pull_back(q: Quiver, relabeled: RelationSet, sigma: Relabeling) -> RelationSet:
    """Rewrite relation paths in the original labels (arrow ids are stable)."""
    inv = sigma.inverse()
    return RelationSet(
        tuple(
            Path(inv.apply(g.source), inv.apply(g.target), g.word) for g in relabeled
        )
    )


def _certify(
    q: Quiver,
    kind: str,
    target: int,
    ideal: RelationSet,
    sigma: Relabeling,
    emb: Optional[Embedding],
    m: Optional[int],
) -> Certificate:
    algebra = Algebra(q, ideal)
    algebra.require_admissible()
    pdims = homology.pdims_of_simples(algebra)
    verified = max(pdims.values(), default=0)
    if verified != target:
        raise AssertionError(
            f"internal error: construction {kind} claimed gldim {target} "
            f"but verification found {verified}"
        )
    return Certificate(
        kind=kind,
        target=target,
        m=m,
        embedding=emb,
        relabeling=sigma,
        ideal=ideal,
        claimed_gldim=target,
        verified_gldim=verified,
        pdims=pdims,
    )


def achieve_gldim(q: Quiver, target: int) -> PlanResult:
    """Find an admissible monomial ideal with the requested global dimension.

    Routes, in order: empty ideal (targets 0 and 1), the local-max ideal
    after moving a composable pair's middle vertex to n (target 2), and for
    target k >= 3 a non-extendable line on k+1 vertices with consecutive
    relations, a one-cycle on k vertices with consecutive relations, or a
    one-cycle on k+1 vertices with the length-3 tail family.  Failure only
    means these constructions do not apply, not that the target is
    impossible.
    """
    if target < 0:
        raise ValueError("target must be >= 0")
    attempts: list[str] = []
    identity = Relabeling.identity(q.n)
    empty = RelationSet(())

    if target == 0:
        if not q.arrows:
            cert = _certify(q, SEMISIMPLE, 0, empty, identity, None, None)
            return PlanResult(cert, tuple(attempts))
        return PlanResult(None, ("quiver has arrows, so the zero ideal is not semisimple",))

    if target == 1:
        preds = structure_predicates(q)
        if q.arrows and not preds.has_oriented_cycle:
            cert = _certify(q, HEREDITARY, 1, empty, identity, None, None)
            return PlanResult(cert, tuple(attempts))
        why = "no arrows" if not q.arrows else "oriented cycle forces relations"
        return PlanResult(None, (f"global dimension 1 needs an acyclic quiver with arrows: {why}",))

    if target == 2:
        ok, witness = gldim2_achievable(q)
        if not ok:
            return PlanResult(
                None,
                ("global dimension 2 needs a loopless quiver with a composable arrow pair",),
            )
        _, sigma = witness
        ideal = _pull_back(q, local_max_ideal(relabel(q, sigma)), sigma)
        cert = _certify(q, LOCAL_MAX, 2, ideal, sigma, None, None)
        return PlanResult(cert, tuple(attempts))

    # target >= 3
    try:
        _require_loopless(q)
    except ValueError as exc:
        return PlanResult(None, (str(exc) + "; loops force infinite global dimension",))

    m = target + 1
    line = next(
        (e for e in find_a_embeddings(q, m) if is_extendable(q, e) is None), None
    )
    if line is not None:
        sigma = relabeling_from_embedding(q, line)
        ideal = _pull_back(q, chain_ideal(relabel(q, sigma), m), sigma)
        cert = _certify(q, LINE_CHAIN, target, ideal, sigma, line, m)
        return PlanResult(cert, tuple(attempts))
    attempts.append(f"no non-extendable line on {m} vertices")

    cycle = find_x_embedding(q, target)
    if cycle is not None:
        sigma = relabeling_from_embedding(q, cycle)
        ideal = _pull_back(q, chain_ideal(relabel(q, sigma), target), sigma)
        cert = _certify(q, CYCLE_CHAIN, target, ideal, sigma, cycle, target)
        return PlanResult(cert, tuple(attempts))
    attempts.append(f"no one-cycle on {target} vertices")

    cycle = find_x_embedding(q, m)
    if cycle is not None:
        sigma = relabeling_from_embedding(q, cycle)
        ideal = _pull_back(q, chain_cubic_ideal(relabel(q, sigma), m), sigma)
        cert = _certify(q, CYCLE_CUBIC, target, ideal, sigma, cycle, m)
        return PlanResult(cert, tuple(attempts))
    attempts.append(f"no one-cycle on {m} vertices")

    attempts.append(f"target {target} is not achievable by the supported constructions")
    return PlanResult(None, tuple(attempts))
