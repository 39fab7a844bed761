"""Characterization relations and functions, and the KB constructions built on them.

A characterization function maps every two-valued interpretation to a
two-valued interpretation.  Its partial/incoherent approximation, the
relation built during search, is stored as two per-interpretation bitmasks:
``pos[w]`` holds the statements ``a`` with ``(w, a, t)`` and ``neg[w]`` those
with ``(w, a, f)``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, NamedTuple

from .errors import VocabularyMismatch
from .frameworks import (
    Adf,
    Af,
    Badf,
    Formalism,
    KnowledgeBase,
    Semantics,
    Setaf,
)
from .interp import (
    Interpretation,
    InterpretationSet,
    Vocabulary,
    completion_indices,
    cube,
    parse_interpretation,
)


class RelationStatus(str, enum.Enum):
    INCOHERENT = "incoherent"
    PARTIAL = "partial"
    FUNCTIONAL = "functional"


class Triple(NamedTuple):
    interp: Interpretation
    statement: str
    value: bool

    def __str__(self) -> str:
        return f"({self.interp.token},{self.statement},{'t' if self.value else 'f'})"


def _as_bool(x) -> bool:
    if isinstance(x, str):
        if x not in ("t", "f"):
            raise ValueError(f"triple value must be t or f, got {x!r}")
        return x == "t"
    return bool(x)


def status_of(pos: list[int] | tuple[int, ...], neg: list[int] | tuple[int, ...], full: int) -> RelationStatus:
    functional = True
    for p, q in zip(pos, neg):
        if p & q:
            return RelationStatus.INCOHERENT
        if p | q != full:
            functional = False
    return RelationStatus.FUNCTIONAL if functional else RelationStatus.PARTIAL


@dataclass(frozen=True)
class CharRelation:
    vocab: Vocabulary
    pos: tuple[int, ...]
    neg: tuple[int, ...]

    @classmethod
    def empty(cls, vocab: Vocabulary) -> "CharRelation":
        zeros = (0,) * vocab.n_two_valued
        return cls(vocab, zeros, zeros)

    @classmethod
    def from_triples(cls, vocab: Vocabulary, triples: Iterable) -> "CharRelation":
        return cls.empty(vocab).with_triples(triples)

    def with_triples(self, triples: Iterable) -> "CharRelation":
        pos, neg = list(self.pos), list(self.neg)
        for v, a, x in triples:
            if isinstance(v, str):
                v = parse_interpretation(v, self.vocab)
            elif v.vocab != self.vocab:
                raise VocabularyMismatch("triple over a foreign vocabulary")
            bit = self.vocab.bit(a)
            if _as_bool(x):
                pos[v.index] |= bit
            else:
                neg[v.index] |= bit
        return CharRelation(self.vocab, tuple(pos), tuple(neg))

    def raw(self) -> Iterator[tuple[int, int, bool]]:
        """(index, statement bit, value) for every triple, sorted."""
        n = len(self.vocab)
        for w in range(self.vocab.n_two_valued):
            for i in range(n):
                bit = 1 << (n - 1 - i)
                if self.pos[w] & bit:
                    yield w, bit, True
                if self.neg[w] & bit:
                    yield w, bit, False

    def triples(self) -> Iterator[Triple]:
        for w, bit, x in self.raw():
            yield Triple(Interpretation.from_index(self.vocab, w), _name(self.vocab, bit), x)

    def __iter__(self) -> Iterator[Triple]:
        return self.triples()

    def __len__(self) -> int:
        return sum(bin(p).count("1") + bin(q).count("1") for p, q in zip(self.pos, self.neg))

    def __contains__(self, triple) -> bool:
        v, a, x = triple
        if isinstance(v, str):
            v = parse_interpretation(v, self.vocab)
        bit = self.vocab.bit(a)
        return bool((self.pos if _as_bool(x) else self.neg)[v.index] & bit)

    def __le__(self, other: "CharRelation") -> bool:
        return all(p & ~q == 0 for p, q in zip(self.pos + self.neg, other.pos + other.neg))

    @property
    def status(self) -> RelationStatus:
        return status_of(self.pos, self.neg, self.vocab.full_mask)

    def to_function(self) -> "CharFunction":
        if self.status is not RelationStatus.FUNCTIONAL:
            raise ValueError(f"relation is {self.status.value}, not functional")
        return CharFunction(self.vocab, self.pos)

    def true_set(self, statement: str) -> list[int]:
        """Indices w with (w, statement, t) in the relation (V^t_a)."""
        bit = self.vocab.bit(statement)
        return [w for w, p in enumerate(self.pos) if p & bit]


def _name(vocab: Vocabulary, bit: int) -> str:
    return vocab.statements[len(vocab) - bit.bit_length()]


def relation_status(F: CharRelation) -> RelationStatus:
    return F.status


@dataclass(frozen=True)
class CharFunction:
    """Total map on two-valued interpretations; ``table[w]`` is the index of f(w)."""

    vocab: Vocabulary
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.vocab.n_two_valued:
            raise ValueError("characterization table must cover every two-valued interpretation")
        full = self.vocab.full_mask
        if any(x & ~full or x < 0 for x in self.table):
            raise ValueError("table entry outside the vocabulary")

    @classmethod
    def from_mapping(cls, vocab: Vocabulary, mapping: Mapping[str, str], default: str | None = None) -> "CharFunction":
        table = [None] * vocab.n_two_valued
        for src, dst in mapping.items():
            table[parse_interpretation(src, vocab).index] = parse_interpretation(dst, vocab).index
        if default is not None:
            d = parse_interpretation(default, vocab).index
            table = [d if x is None else x for x in table]
        if any(x is None for x in table):
            raise ValueError("mapping is not total")
        return cls(vocab, tuple(table))

    def __call__(self, v: Interpretation) -> Interpretation:
        if v.vocab != self.vocab:
            raise VocabularyMismatch("argument over a foreign vocabulary")
        return Interpretation.from_index(self.vocab, self.table[v.index])

    def items(self) -> Iterator[tuple[Interpretation, Interpretation]]:
        for w, x in enumerate(self.table):
            yield Interpretation.from_index(self.vocab, w), Interpretation.from_index(self.vocab, x)

    def to_relation(self) -> CharRelation:
        full = self.vocab.full_mask
        return CharRelation(self.vocab, tuple(self.table), tuple(full & ~x for x in self.table))


def char_from_adf(adf: Adf) -> CharFunction:
    n = len(adf.vocab)
    table = []
    for w in range(adf.vocab.n_two_valued):
        x = 0
        for i, models in enumerate(adf.masks):
            if models >> w & 1:
                x |= 1 << (n - 1 - i)
        table.append(x)
    return CharFunction(adf.vocab, tuple(table))


def adf_from_char(f: CharFunction) -> Adf:
    n = len(f.vocab)
    masks = []
    for i in range(n):
        bit = 1 << (n - 1 - i)
        masks.append(sum(1 << w for w, x in enumerate(f.table) if x & bit))
    return Adf.from_masks(f.vocab, masks)


def is_char_table(table, n: int, members: frozenset[tuple[int, int]], sigma: Semantics) -> bool:
    """Characterization test on raw data; ``members`` are (true, false) mask pairs."""
    full = (1 << n) - 1
    if sigma is Semantics.MOD:
        if any(tm | fm != full for tm, fm in members):
            return False
        return all((table[w] == w) == ((w, full & ~w) in members) for w in range(1 << n))
    if sigma not in (Semantics.ADM, Semantics.COM):
        raise ValueError(f"no characterization predicate for {sigma}")
    for tm, fm in cube(n):
        comps = completion_indices(n, tm, fm)
        boolean = tm | fm
        ok = all((table[w] ^ tm) & boolean == 0 for w in comps)
        if ok and sigma is Semantics.COM:
            umask = full & ~boolean
            hit_t = hit_f = 0
            for w in comps:
                hit_t |= table[w]
                hit_f |= full & ~table[w]
            ok = umask & hit_t & hit_f == umask
        if ok != ((tm, fm) in members):
            return False
    return True


def is_characterization(f: CharFunction, V: InterpretationSet, sigma: Semantics | str) -> bool:
    if f.vocab != V.vocab:
        raise VocabularyMismatch("function and interpretation set use different vocabularies")
    return is_char_table(f.table, len(f.vocab), V.masks(), Semantics(sigma))


# --- canonical knowledge bases ----------------------------------------------


def _af_from_relation(F: CharRelation) -> Af:
    vocab = F.vocab
    attacks = set()
    for a in vocab:
        vt = F.true_set(a)
        top = 0
        for w in vt:
            top |= w
        if top not in vt:
            raise ValueError(f"true set of {a} has no truth-order maximum")
        for b in vocab:
            if not top & vocab.bit(b):
                attacks.add((b, a))
    return Af(vocab, frozenset(attacks))


def _minimal_sets(sets: Iterable[int]) -> list[int]:
    uniq = sorted(set(sets), key=lambda s: (bin(s).count("1"), s))
    out: list[int] = []
    for s in uniq:
        if not any(m & s == m for m in out):
            out.append(s)
    return out


def setaf_clauses(true_set: Iterable[int], full: int) -> list[int]:
    """Attacking sets (as bitmasks) whose CNF has exactly ``true_set`` as models.

    Distributes the DNF over the truth-order maximal members (one negative
    literal per false statement) into CNF and drops subsumed clauses.
    """
    vt = set(true_set)
    maxima = [w for w in vt if not any(w != x and w & x == w for x in vt)]
    choices = []
    for m in sorted(maxima):
        falses = full & ~m
        choices.append([1 << k for k in range(full.bit_length()) if falses >> k & 1])
    if not choices:
        raise ValueError("empty true set has no SETAF condition")
    clauses = (sum(set(pick)) for pick in itertools.product(*choices))
    return _minimal_sets(clauses)


def _setaf_from_relation(F: CharRelation) -> Setaf:
    vocab = F.vocab
    full = vocab.full_mask
    attacks = set()
    for a in vocab:
        vt = F.true_set(a)
        clauses = setaf_clauses(vt, full)
        expected = {w for w in range(vocab.n_two_valued) if all(w & c != c for c in clauses)}
        if expected != set(vt):
            raise ValueError(f"true set of {a} is not downward-closed with v_f")
        for c in clauses:
            attacks.add((frozenset(_name(vocab, 1 << k) for k in range(len(vocab)) if c >> k & 1), a))
    return Setaf(vocab, frozenset(attacks))


def badf_polarities(F: CharRelation) -> tuple[frozenset, frozenset]:
    """Supporting and attacking links read off flip witnesses in F."""
    vocab = F.vocab
    sup, att = set(), set()
    for a in vocab:
        abit = vocab.bit(a)
        for b in vocab:
            bbit = vocab.bit(b)
            for w in range(vocab.n_two_valued):
                if w & bbit:
                    continue
                up = w | bbit
                if F.neg[w] & abit and F.pos[up] & abit:
                    sup.add((b, a))
                if F.pos[w] & abit and F.neg[up] & abit:
                    att.add((b, a))
    return frozenset(sup), frozenset(att)


def kb_from_char(F: CharRelation, kind: Formalism | str, sigma: Semantics | str | None = None) -> KnowledgeBase:
    """Canonical knowledge base of the given kind for a functional relation.

    The construction does not depend on the semantics; ``sigma`` is accepted
    for symmetry with the search interface.
    """
    kind = Formalism(kind)
    f = F.to_function()
    if kind is Formalism.ADF:
        return adf_from_char(f)
    if kind is Formalism.AF:
        return _af_from_relation(F)
    if kind is Formalism.SETAF:
        return _setaf_from_relation(F)
    sup, att = badf_polarities(F)
    return Badf(adf_from_char(f), sup, att)
