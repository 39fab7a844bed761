"""Knowledge bases (AF, SETAF, bipolar ADF, ADF) and brute-force semantics.

Acceptance conditions are explicit model sets over the full vocabulary,
stored as an integer bitset: bit ``w`` is set iff the two-valued
interpretation with index ``w`` satisfies the condition.  Links are never
stored; they are the statements a condition actually depends on.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Union

from .errors import GuardExceeded, VocabularyMismatch
from .interp import (
    Interpretation,
    InterpretationSet,
    Vocabulary,
    completion_indices,
    cube,
)

DEFAULT_ORACLE_ATOMS = 6


class Semantics(str, enum.Enum):
    ADM = "adm"
    COM = "com"
    PRF = "prf"
    MOD = "mod"

    def __str__(self) -> str:
        return self.value


class Formalism(str, enum.Enum):
    AF = "af"
    SETAF = "setaf"
    BADF = "badf"
    ADF = "adf"

    def __str__(self) -> str:
        return self.name


class Polarity(str, enum.Enum):
    SUPPORTING = "supporting"
    ATTACKING = "attacking"
    BOTH = "both"
    NEITHER = "neither"


@dataclass(frozen=True)
class AcceptanceCondition:
    vocab: Vocabulary
    models: int

    def __post_init__(self):
        if self.models < 0 or self.models >> self.vocab.n_two_valued:
            raise ValueError("model bitset exceeds the vocabulary's two-valued interpretations")

    @classmethod
    def from_predicate(cls, vocab: Vocabulary, pred: Callable[[dict[str, bool]], bool]) -> "AcceptanceCondition":
        """Tabulate ``pred`` on every two-valued interpretation (name -> bool)."""
        models = 0
        for w in range(vocab.n_two_valued):
            env = {a: bool(w & vocab.bit(i)) for i, a in enumerate(vocab)}
            if pred(env):
                models |= 1 << w
        return cls(vocab, models)

    @classmethod
    def from_models(cls, vocab: Vocabulary, models: Iterable[Interpretation | str]) -> "AcceptanceCondition":
        mask = 0
        for m in InterpretationSet(vocab, models):
            mask |= 1 << m.index
        return cls(vocab, mask)

    @classmethod
    def tautology(cls, vocab: Vocabulary) -> "AcceptanceCondition":
        return cls(vocab, (1 << vocab.n_two_valued) - 1)

    @classmethod
    def contradiction(cls, vocab: Vocabulary) -> "AcceptanceCondition":
        return cls(vocab, 0)

    def holds(self, index: int) -> bool:
        return bool(self.models >> index & 1)

    def model_set(self) -> InterpretationSet:
        return InterpretationSet(
            self.vocab, (Interpretation.from_index(self.vocab, w) for w in range(self.vocab.n_two_valued) if self.holds(w))
        )

    def parents(self) -> tuple[str, ...]:
        return tuple(b for b in self.vocab if _depends_on(self.models, self.vocab.n_two_valued, self.vocab.bit(b)))


def _depends_on(models: int, size: int, bit: int) -> bool:
    for w in range(size):
        if not w & bit and (models >> w & 1) != (models >> (w | bit) & 1):
            return True
    return False


def eval_condition(cond: AcceptanceCondition, w: Interpretation) -> bool:
    if w.vocab != cond.vocab:
        raise VocabularyMismatch("condition and interpretation use different vocabularies")
    return cond.holds(w.index)


@dataclass(frozen=True)
class Adf:
    vocab: Vocabulary
    conditions: tuple[AcceptanceCondition, ...]

    def __post_init__(self):
        if len(self.conditions) != len(self.vocab):
            raise ValueError("an ADF needs exactly one acceptance condition per statement")
        for c in self.conditions:
            if c.vocab != self.vocab:
                raise VocabularyMismatch("acceptance condition over a foreign vocabulary")

    @classmethod
    def from_predicates(cls, vocab: Vocabulary, preds: Mapping[str, Callable[[dict[str, bool]], bool]]) -> "Adf":
        missing = set(vocab) - set(preds)
        if missing:
            raise ValueError(f"no acceptance condition for {sorted(missing)}")
        return cls(vocab, tuple(AcceptanceCondition.from_predicate(vocab, preds[a]) for a in vocab))

    @classmethod
    def from_masks(cls, vocab: Vocabulary, masks: Iterable[int]) -> "Adf":
        return cls(vocab, tuple(AcceptanceCondition(vocab, m) for m in masks))

    def condition(self, name: str) -> AcceptanceCondition:
        return self.conditions[self.vocab.index(name)]

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(c.models for c in self.conditions)

    def links(self) -> frozenset[tuple[str, str]]:
        return frozenset((b, a) for a, c in zip(self.vocab, self.conditions) for b in c.parents())


@dataclass(frozen=True)
class Badf:
    base: Adf
    supporting: frozenset[tuple[str, str]]
    attacking: frozenset[tuple[str, str]]

    def __post_init__(self):
        object.__setattr__(self, "supporting", frozenset(self.supporting))
        object.__setattr__(self, "attacking", frozenset(self.attacking))
        for b, a in self.supporting:
            if link_polarity(self.base, b, a) not in (Polarity.SUPPORTING, Polarity.BOTH):
                raise ValueError(f"link ({b},{a}) is not supporting")
        for b, a in self.attacking:
            if link_polarity(self.base, b, a) not in (Polarity.ATTACKING, Polarity.BOTH):
                raise ValueError(f"link ({b},{a}) is not attacking")
        unlabelled = self.base.links() - self.supporting - self.attacking
        if unlabelled:
            raise ValueError(f"links without polarity: {sorted(unlabelled)}")

    @property
    def vocab(self) -> Vocabulary:
        return self.base.vocab

    @classmethod
    def from_adf(cls, adf: Adf) -> "Badf":
        """Label every link of a bipolar ADF by its definitional polarity."""
        sup, att = set(), set()
        for b, a in adf.links():
            pol = link_polarity(adf, b, a)
            if pol is Polarity.NEITHER:
                raise ValueError(f"ADF is not bipolar: link ({b},{a})")
            (sup if pol is Polarity.SUPPORTING else att).add((b, a))
        return cls(adf, frozenset(sup), frozenset(att))


@dataclass(frozen=True)
class Af:
    vocab: Vocabulary
    attacks: frozenset[tuple[str, str]]

    def __post_init__(self):
        object.__setattr__(self, "attacks", frozenset(self.attacks))
        names = set(self.vocab)
        for b, a in self.attacks:
            if b not in names or a not in names:
                raise ValueError(f"attack ({b},{a}) leaves the vocabulary")


@dataclass(frozen=True)
class Setaf:
    vocab: Vocabulary
    attacks: frozenset[tuple[frozenset[str], str]]

    def __post_init__(self):
        attacks = frozenset((frozenset(B), a) for B, a in self.attacks)
        object.__setattr__(self, "attacks", attacks)
        names = set(self.vocab)
        for B, a in attacks:
            if not B:
                raise ValueError("attacking sets must be non-empty")
            if not B <= names or a not in names:
                raise ValueError(f"attack ({sorted(B)},{a}) leaves the vocabulary")


KnowledgeBase = Union[Af, Setaf, Badf, Adf]


def kind_of(kb: KnowledgeBase) -> Formalism:
    if isinstance(kb, Af):
        return Formalism.AF
    if isinstance(kb, Setaf):
        return Formalism.SETAF
    if isinstance(kb, Badf):
        return Formalism.BADF
    if isinstance(kb, Adf):
        return Formalism.ADF
    raise TypeError(f"not a knowledge base: {kb!r}")


# --- translations -----------------------------------------------------------


def af_to_adf(af: Af) -> Adf:
    vocab = af.vocab
    masks = []
    for a in vocab:
        attackers = 0
        for b, target in af.attacks:
            if target == a:
                attackers |= vocab.bit(b)
        masks.append(_all_false_on(vocab, attackers))
    return Adf.from_masks(vocab, masks)


def _all_false_on(vocab: Vocabulary, bits: int) -> int:
    models = 0
    for w in range(vocab.n_two_valued):
        if not w & bits:
            models |= 1 << w
    return models


def setaf_to_adf(setaf: Setaf) -> Adf:
    vocab = setaf.vocab
    masks = []
    for a in vocab:
        clauses = [sum(vocab.bit(b) for b in B) for B, target in setaf.attacks if target == a]
        models = 0
        for w in range(vocab.n_two_valued):
            # each attacking set needs a false member
            if all((w & c) != c for c in clauses):
                models |= 1 << w
        masks.append(models)
    return Adf.from_masks(vocab, masks)


def as_adf(kb: KnowledgeBase) -> Adf:
    if isinstance(kb, Af):
        return af_to_adf(kb)
    if isinstance(kb, Setaf):
        return setaf_to_adf(kb)
    if isinstance(kb, Badf):
        return kb.base
    if isinstance(kb, Adf):
        return kb
    raise TypeError(f"not a knowledge base: {kb!r}")


# --- links and fragments ----------------------------------------------------


def _polarity_bits(models: int, size: int, bit: int) -> tuple[bool, bool]:
    supporting = attacking = True
    for w in range(size):
        if w & bit:
            continue
        lo, hi = models >> w & 1, models >> (w | bit) & 1
        if lo and not hi:
            supporting = False
        if hi and not lo:
            attacking = False
    return supporting, attacking


def link_polarity(adf: Adf, b: str, a: str) -> Polarity:
    cond = adf.condition(a)
    sup, att = _polarity_bits(cond.models, adf.vocab.n_two_valued, adf.vocab.bit(b))
    if sup and att:
        return Polarity.BOTH
    if sup:
        return Polarity.SUPPORTING
    if att:
        return Polarity.ATTACKING
    return Polarity.NEITHER


def is_bipolar_masks(masks: tuple[int, ...], n: int) -> bool:
    size = 1 << n
    for models in masks:
        for i in range(n):
            sup, att = _polarity_bits(models, size, 1 << i)
            if not (sup or att):
                return False
    return True


def _is_setaf_mask(models: int, n: int) -> bool:
    if not models & 1:
        return False
    for w in range(1 << n):
        if models >> w & 1:
            bits = w
            while bits:
                low = bits & -bits
                if not models >> (w & ~low) & 1:
                    return False
                bits ^= low
    return True


def _is_af_mask(models: int, n: int) -> bool:
    if not _is_setaf_mask(models, n):
        return False
    ms = [w for w in range(1 << n) if models >> w & 1]
    return all(models >> (x | y) & 1 for x in ms for y in ms)


def classify_fragment(adf: Adf) -> frozenset[Formalism]:
    n = len(adf.vocab)
    out = {Formalism.ADF}
    masks = adf.masks
    if is_bipolar_masks(masks, n):
        out.add(Formalism.BADF)
    if all(_is_setaf_mask(m, n) for m in masks):
        out.add(Formalism.SETAF)
        if all(_is_af_mask(m, n) for m in masks):
            out.add(Formalism.AF)
    return frozenset(out)


# --- operator and semantics -------------------------------------------------


@lru_cache(maxsize=None)
def completion_set(n: int, tm: int, fm: int) -> int:
    """Bitset over two-valued indices of the completions of (tm, fm)."""
    out = 0
    for w in completion_indices(n, tm, fm):
        out |= 1 << w
    return out


def gamma_masks(masks: tuple[int, ...], n: int, tm: int, fm: int) -> tuple[int, int]:
    comp = completion_set(n, tm, fm)
    rt = rf = 0
    for i, models in enumerate(masks):
        bit = 1 << (n - 1 - i)
        if comp & ~models == 0:
            rt |= bit
        elif comp & models == 0:
            rf |= bit
    return rt, rf


def gamma(adf: Adf, v: Interpretation) -> Interpretation:
    if v.vocab != adf.vocab:
        raise VocabularyMismatch("ADF and interpretation use different vocabularies")
    tm, fm = gamma_masks(adf.masks, len(adf.vocab), v.true_mask, v.false_mask)
    return Interpretation(adf.vocab, tm, fm)


def _leq_masks(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return a[0] & ~b[0] == 0 and a[1] & ~b[1] == 0


def max_masks(items: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    items = list(items)
    return frozenset(v for v in items if not any(w != v and _leq_masks(v, w) for w in items))


@lru_cache(maxsize=1 << 16)
def semantics_masks(masks: tuple[int, ...], n: int, sigma: Semantics) -> frozenset[tuple[int, int]]:
    """Brute-force scan of all 3^n interpretations."""
    full = (1 << n) - 1
    adm, com = [], []
    for tm, fm in cube(n):
        g = gamma_masks(masks, n, tm, fm)
        if _leq_masks((tm, fm), g):
            adm.append((tm, fm))
            if g == (tm, fm):
                com.append((tm, fm))
    if sigma is Semantics.ADM:
        return frozenset(adm)
    if sigma is Semantics.COM:
        return frozenset(com)
    if sigma is Semantics.PRF:
        return max_masks(adm)
    return frozenset(v for v in com if v[0] | v[1] == full)


def _guard(vocab: Vocabulary, max_atoms: int | None) -> None:
    limit = DEFAULT_ORACLE_ATOMS if max_atoms is None else max_atoms
    if len(vocab) > limit:
        raise GuardExceeded(f"brute-force semantics limited to {limit} statements, got {len(vocab)}")


def semantics(kb: KnowledgeBase, sigma: Semantics | str, max_atoms: int | None = None) -> InterpretationSet:
    """sigma(kb) by exhaustive evaluation of the three-valued operator."""
    adf = as_adf(kb)
    _guard(adf.vocab, max_atoms)
    found = semantics_masks(adf.masks, len(adf.vocab), Semantics(sigma))
    return InterpretationSet.from_masks(adf.vocab, found)


def setaf_semantics(setaf: Setaf, sigma: Semantics | str, max_atoms: int | None = None) -> InterpretationSet:
    """SETAF semantics from the acceptability definitions, without any ADF."""
    sigma = Semantics(sigma)
    vocab = setaf.vocab
    _guard(vocab, max_atoms)
    attacks = [(B, a) for B, a in setaf.attacks]

    def acceptable(a, v):
        return all(any(v[b] == "f" for b in B) for B, t in attacks if t == a)

    def unacceptable(a, v):
        return any(all(v[b] == "t" for b in B) for B, t in attacks if t == a)

    adm, com = [], []
    for v in vocab.interpretations():
        if all((v[a] != "t" or acceptable(a, v)) and (v[a] != "f" or unacceptable(a, v)) for a in vocab):
            adm.append(v)
            if all((v[a] == "t") == acceptable(a, v) and (v[a] == "f") == unacceptable(a, v) for a in vocab):
                com.append(v)
    if sigma is Semantics.ADM:
        return InterpretationSet(vocab, adm)
    if sigma is Semantics.COM:
        return InterpretationSet(vocab, com)
    if sigma is Semantics.PRF:
        return InterpretationSet.from_masks(vocab, max_masks((v.true_mask, v.false_mask) for v in adm))
    return InterpretationSet(vocab, (v for v in adm if v.is_two_valued))
