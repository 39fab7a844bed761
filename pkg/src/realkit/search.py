"""Propagate-and-guess realizability search, plus the preferred-semantics reduction."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

from .charfun import CharRelation, RelationStatus, is_char_table, kb_from_char
from .errors import GuardExceeded, RealkitError
from .frameworks import Formalism, KnowledgeBase, Semantics, max_masks, semantics
from .interp import InterpretationSet, cube
from .propagate import Target, closure

DEFAULT_MAX_ATOMS = 4
DEFAULT_MAX_ATOMS_PRF = 3


class VerificationError(RealkitError):
    """The oracle disagrees with a knowledge base returned by the search."""


@dataclass(frozen=True)
class Limits:
    max_atoms: int | None = None
    node_budget: int | None = None
    verify: bool = True


@dataclass(frozen=True)
class RealizeQuery:
    kind: Formalism
    sigma: Semantics
    target: InterpretationSet
    limits: Limits = field(default_factory=Limits)

    def __post_init__(self):
        object.__setattr__(self, "kind", Formalism(self.kind))
        object.__setattr__(self, "sigma", Semantics(self.sigma))


@dataclass(frozen=True)
class Realization:
    """A knowledge base together with the functional relation it was read from.

    For preferred semantics ``relation`` characterizes ``adm_target``, the
    admissible set that was realized to obtain the preferred set.
    """

    kb: KnowledgeBase
    relation: CharRelation
    kind: Formalism
    sigma: Semantics
    target: InterpretationSet
    adm_target: InterpretationSet | None = None


class _Budget:
    def __init__(self, limit: int | None):
        self.limit = limit
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise GuardExceeded(f"search exceeded its budget of {self.limit} nodes")


def _first_open(pos: list[int], neg: list[int], n: int) -> tuple[int, int] | None:
    for w, (p, q) in enumerate(zip(pos, neg)):
        open_ = ~(p | q) & ((1 << n) - 1)
        if open_:
            # lowest statement index = most significant bit
            return w, 1 << (open_.bit_length() - 1)
    return None


def _search(
    t: Target, kind: Formalism, sigma: Semantics, pos: list[int], neg: list[int], budget: _Budget
) -> Iterator[tuple[int, ...]]:
    budget.tick()
    status = closure(t, kind, sigma, pos, neg)
    if status is RelationStatus.INCOHERENT:
        return
    if status is RelationStatus.FUNCTIONAL:
        # propagation is sound but not a complete checker
        if is_char_table(pos, t.n, t.members, sigma):
            yield tuple(pos)
        return
    w, bit = _first_open(pos, neg, t.n)
    for value in (True, False):
        p2, n2 = list(pos), list(neg)
        (p2 if value else n2)[w] |= bit
        yield from _search(t, kind, sigma, p2, n2, budget)


def _guard(q: RealizeQuery, default: int) -> None:
    limit = default if q.limits.max_atoms is None else q.limits.max_atoms
    n = len(q.target.vocab)
    if n > limit:
        raise GuardExceeded(f"realizability search limited to {limit} statements, got {n}")


def _realizations(q: RealizeQuery, budget: _Budget) -> Iterator[Realization]:
    if q.sigma is Semantics.PRF:
        yield from _prf_realizations(q, budget)
        return
    V = q.target
    t = Target.of(V)
    size = V.vocab.n_two_valued
    full = V.vocab.full_mask
    for table in _search(t, q.kind, q.sigma, [0] * size, [0] * size, budget):
        rel = CharRelation(V.vocab, table, tuple(full & ~x for x in table))
        kb = kb_from_char(rel, q.kind, q.sigma)
        if q.limits.verify:
            _verify(kb, q.sigma, V)
        yield Realization(kb, rel, q.kind, q.sigma, V)


def _verify(kb: KnowledgeBase, sigma: Semantics, V: InterpretationSet) -> None:
    # the search guard already bounds the vocabulary
    got = semantics(kb, sigma, max_atoms=len(V.vocab))
    if got != V:
        raise VerificationError(f"{sigma}(kb) = {got}, expected {V}")


def realize(q: RealizeQuery) -> Realization | None:
    """First realization in guess order, or None if V is not realizable."""
    _guard(q, DEFAULT_MAX_ATOMS_PRF if q.sigma is Semantics.PRF else DEFAULT_MAX_ATOMS)
    return next(_realizations(q, _Budget(q.limits.node_budget)), None)


def realize_all(q: RealizeQuery) -> Iterator[Realization]:
    """Every realization reachable by exhaustive branching, lazily."""
    _guard(q, DEFAULT_MAX_ATOMS_PRF if q.sigma is Semantics.PRF else DEFAULT_MAX_ATOMS)
    return _realizations(q, _Budget(q.limits.node_budget))


def is_realizable(kind: Formalism | str, sigma: Semantics | str, V: InterpretationSet, **limits) -> bool:
    return realize(RealizeQuery(kind, sigma, V, Limits(**limits))) is not None


# --- preferred ------------------------------------------------------------------


def strictly_below(V: InterpretationSet) -> list[tuple[int, int]]:
    """Interpretations strictly below some member of V in the information order."""
    n = len(V.vocab)
    members = V.masks()
    out = []
    for tm, fm in cube(n):
        if (tm, fm) in members:
            continue
        if any(tm & ~vt == 0 and fm & ~vf == 0 for vt, vf in members):
            out.append((tm, fm))
    return sorted(out, key=lambda m: InterpretationSet.from_masks(V.vocab, [m]).sort_key())


def _prf_realizations(q: RealizeQuery, budget: _Budget) -> Iterator[Realization]:
    V = q.target
    members = V.masks()
    if max_masks(members) != members:
        return
    below = strictly_below(V)
    inner = Limits(max_atoms=q.limits.max_atoms, node_budget=None, verify=False)
    seen = set()
    for k in range(len(below) + 1):
        for extra in itertools.combinations(below, k):
            key = frozenset(extra)
            if key in seen:
                continue
            seen.add(key)
            adm_target = InterpretationSet.from_masks(V.vocab, members | key)
            sub = RealizeQuery(q.kind, Semantics.ADM, adm_target, inner)
            for r in _realizations(sub, budget):
                if q.limits.verify:
                    _verify(r.kb, Semantics.PRF, V)
                yield Realization(r.kb, r.relation, q.kind, Semantics.PRF, V, adm_target)


def realize_prf(kind: Formalism | str, V: InterpretationSet, limits: Limits | None = None) -> Realization | None:
    return realize(RealizeQuery(kind, Semantics.PRF, V, limits or Limits()))
