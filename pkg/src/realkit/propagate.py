"""Semantics and formalism propagators and the fixpoint driver.

Every rule maps (target set V, relation F) to triples that any total
characterization of V extending F must contain.  Internally a triple is
``(w, bit, value)`` with ``w`` a two-valued index and ``bit`` the statement's
mask bit; the public wrappers convert to :class:`~realkit.charfun.Triple`.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable

from .charfun import CharRelation, RelationStatus, Triple, status_of, _name
from .errors import VocabularyMismatch
from .frameworks import Formalism, Semantics
from .interp import Interpretation, InterpretationSet, completion_indices, cube

Raw = tuple[int, int, bool]


class Target:
    """Per-query precomputation over the interpretation cube."""

    def __init__(self, n: int, members: frozenset[tuple[int, int]]):
        self.n = n
        self.full = (1 << n) - 1
        self.size = 1 << n
        self.bits = tuple(1 << (n - 1 - i) for i in range(n))
        self.members = members
        self.has_vu = (0, 0) in members
        self.two_valued_only = all(tm | fm == self.full for tm, fm in members)
        self.inside = []   # (tm, fm, comps, boolean mask) for v in V
        self.outside = []  # same for v not in V
        for tm, fm in cube(n):
            entry = (tm, fm, completion_indices(n, tm, fm), tm | fm)
            (self.inside if (tm, fm) in members else self.outside).append(entry)
        self.adm_in = tuple(_adm_in(self))
        self.mod_in = tuple(
            (tm, bit, bool(tm & bit)) for tm, fm in sorted(members) if tm | fm == self.full for bit in self.bits
        )

    @classmethod
    def of(cls, V: InterpretationSet) -> "Target":
        return _target(len(V.vocab), V.masks())


@lru_cache(maxsize=4096)
def _target(n: int, members: frozenset[tuple[int, int]]) -> Target:
    return Target(n, members)


def _split(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def _conflict(t: Target) -> list[Raw]:
    return [(w, bit, x) for w in range(t.size) for bit in t.bits for x in (True, False)]


def _missing_pairs(comps, tm, fm, boolean, pos, neg, limit=2) -> list[tuple[int, int]]:
    """Boolean (completion, bit) pairs whose conforming triple is absent."""
    out = []
    for w in comps:
        miss = boolean & ~((pos[w] & tm) | (neg[w] & fm))
        for bit in _split(miss):
            out.append((w, bit))
            if len(out) >= limit:
                return out
    return out


def _last_excluder(comps, tm, fm, boolean, pos, neg) -> list[Raw]:
    """Flip the single remaining (or, if none remains, every) Boolean pair."""
    missing = _missing_pairs(comps, tm, fm, boolean, pos, neg)
    if len(missing) == 1:
        w, bit = missing[0]
        return [(w, bit, not tm & bit)]
    if not missing:
        return [(w, bit, not tm & bit) for w in comps for bit in _split(boolean)]
    return []


# --- admissible ---------------------------------------------------------------


def _adm_in(t: Target) -> Iterable[Raw]:
    for tm, fm, comps, boolean in t.inside:
        for w in comps:
            for bit in _split(boolean):
                yield (w, bit, bool(tm & bit))


def adm_rules(t: Target, pos, neg) -> list[Raw]:
    if not t.has_vu:
        return _conflict(t)
    out = list(t.adm_in)
    for tm, fm, comps, boolean in t.outside:
        if boolean:
            out.extend(_last_excluder(comps, tm, fm, boolean, pos, neg))
    return out


# --- complete -----------------------------------------------------------------


def _witnessed(comps, umask, pos, neg) -> int:
    """u-bits that already have both a t- and an f-witness among comps."""
    hit_t = hit_f = 0
    for w in comps:
        hit_t |= pos[w]
        hit_f |= neg[w]
    return umask & hit_t & hit_f


def _lacking(comps, bit, src) -> list[int]:
    out = []
    for w in comps:
        if not src[w] & bit:
            out.append(w)
            if len(out) > 1:
                break
    return out


def com_rules(t: Target, pos, neg) -> list[Raw]:
    out = list(t.adm_in)
    full = t.full
    for tm, fm, comps, boolean in t.inside:
        for bit in _split(full & ~boolean):
            # a u-coordinate of a member needs a t- and an f-witness
            for x, src in ((True, pos), (False, neg)):
                lacking = _lacking(comps, bit, src)
                if len(lacking) == 1:
                    out.append((lacking[0], bit, not x))
                elif not lacking:
                    out.extend((w, bit, not x) for w in comps)
    for tm, fm, comps, boolean in t.outside:
        umask = full & ~boolean
        both = _witnessed(comps, umask, pos, neg)
        if boolean and both == umask:
            out.extend(_last_excluder(comps, tm, fm, boolean, pos, neg))
        if not umask or _missing_pairs(comps, tm, fm, boolean, pos, neg, limit=1):
            continue
        for bit in _split(umask):
            if umask & ~both & ~bit:
                continue
            # bit is the only coordinate left that can exclude v: all
            # completions must agree on it
            for x, src in ((True, pos), (False, neg)):
                lacking = _lacking(comps, bit, src)
                if len(lacking) == 1:
                    out.append((lacking[0], bit, x))
                elif not lacking:
                    # already agreeing; restating keeps the rule monotone
                    out.extend((w, bit, x) for w in comps)
    return out


# --- two-valued models --------------------------------------------------------


def mod_rules(t: Target, pos, neg) -> list[Raw]:
    if not t.two_valued_only:
        return _conflict(t)
    out = list(t.mod_in)
    full = t.full
    for w in range(t.size):
        if (w, full & ~w) in t.members:
            continue
        out.extend(_last_excluder((w,), w, full & ~w, full, pos, neg))
    return out


SEMANTICS_RULES: dict[Semantics, Callable] = {
    Semantics.ADM: adm_rules,
    Semantics.COM: com_rules,
    Semantics.MOD: mod_rules,
}


# --- formalism ------------------------------------------------------------------


def setaf_rules(t: Target, pos, neg) -> list[Raw]:
    out = [(0, bit, True) for bit in t.bits]
    for v in range(t.size):
        for bit in _split(pos[v]):
            # everything truth-below v
            sub = v
            while sub:
                sub = (sub - 1) & v
                out.append((sub, bit, True))
        for bit in _split(neg[v]):
            rest = t.full & ~v
            sup = rest
            while sup:
                out.append((v | sup, bit, False))
                sup = (sup - 1) & rest
    return out


def af_rules(t: Target, pos, neg) -> list[Raw]:
    out = setaf_rules(t, pos, neg)
    for bit in t.bits:
        ts = [v for v in range(t.size) if pos[v] & bit]
        for i, v1 in enumerate(ts):
            for v2 in ts[i + 1:]:
                out.append((v1 | v2, bit, True))
    return out


def badf_rules(t: Target, pos, neg) -> list[Raw]:
    out = []
    for abit in t.bits:
        for bbit in t.bits:
            for x, src, other in ((True, pos, neg), (False, neg, pos)):
                # does flipping b from f to t move a from not-x to x somewhere?
                if not any(other[w] & abit and src[w | bbit] & abit for w in range(t.size) if not w & bbit):
                    continue
                for v in range(t.size):
                    if not v & bbit and src[v] & abit:
                        out.append((v | bbit, abit, x))
    return out


FORMALISM_RULES: dict[Formalism, Callable] = {
    Formalism.ADF: lambda t, pos, neg: [],
    Formalism.BADF: badf_rules,
    Formalism.SETAF: setaf_rules,
    Formalism.AF: af_rules,
}


def closure(t: Target, kind: Formalism, sigma: Semantics, pos: list[int], neg: list[int]) -> RelationStatus:
    """Extend pos/neg in place to the propagation fixpoint."""
    rules = (SEMANTICS_RULES[sigma], FORMALISM_RULES[kind])
    while True:
        changed = False
        for rule in rules:
            for w, bit, x in rule(t, pos, neg):
                src = pos if x else neg
                if not src[w] & bit:
                    src[w] |= bit
                    changed = True
        for p, q in zip(pos, neg):
            if p & q:
                return RelationStatus.INCOHERENT
        if not changed:
            return status_of(pos, neg, t.full)


# --- public wrappers ------------------------------------------------------------


def _check(V: InterpretationSet, F: CharRelation) -> Target:
    if V.vocab != F.vocab:
        raise VocabularyMismatch("target set and relation use different vocabularies")
    return Target.of(V)


def _to_triples(vocab, raw: Iterable[Raw]) -> frozenset[Triple]:
    return frozenset(Triple(Interpretation.from_index(vocab, w), _name(vocab, bit), bool(x)) for w, bit, x in raw)


def propagate_adm(V: InterpretationSet, F: CharRelation) -> frozenset[Triple]:
    return _to_triples(V.vocab, adm_rules(_check(V, F), F.pos, F.neg))


def propagate_com(V: InterpretationSet, F: CharRelation) -> frozenset[Triple]:
    return _to_triples(V.vocab, com_rules(_check(V, F), F.pos, F.neg))


def propagate_mod(V: InterpretationSet, F: CharRelation) -> frozenset[Triple]:
    return _to_triples(V.vocab, mod_rules(_check(V, F), F.pos, F.neg))


def propagate_semantics(sigma: Semantics | str, V: InterpretationSet, F: CharRelation) -> frozenset[Triple]:
    sigma = Semantics(sigma)
    if sigma not in SEMANTICS_RULES:
        raise ValueError(f"no propagator for {sigma}; preferred is reduced to admissible")
    return _to_triples(V.vocab, SEMANTICS_RULES[sigma](_check(V, F), F.pos, F.neg))


def propagate_formalism(kind: Formalism | str, V: InterpretationSet, F: CharRelation) -> frozenset[Triple]:
    kind = Formalism(kind)
    return _to_triples(V.vocab, FORMALISM_RULES[kind](_check(V, F), F.pos, F.neg))


def propagate_fixpoint(
    kind: Formalism | str, sigma: Semantics | str, V: InterpretationSet, F: CharRelation
) -> tuple[CharRelation, RelationStatus]:
    kind, sigma = Formalism(kind), Semantics(sigma)
    if sigma not in SEMANTICS_RULES:
        raise ValueError(f"no propagator for {sigma}; preferred is reduced to admissible")
    t = _check(V, F)
    pos, neg = list(F.pos), list(F.neg)
    status = closure(t, kind, sigma, pos, neg)
    return CharRelation(F.vocab, tuple(pos), tuple(neg)), status
