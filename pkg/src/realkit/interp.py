"""Three-valued interpretations over a fixed, ordered vocabulary.

Interpretations are stored as a pair of bitmasks (statements mapped to t,
statements mapped to f).  Statement ``i`` of an ``n``-statement vocabulary
owns bit ``1 << (n - 1 - i)``, so the integer index of a two-valued
interpretation (t=1, f=0, first statement most significant) is simply its
true-mask and index order coincides with lexicographic order of tokens
written with f < t.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import ParseError, VocabularyMismatch

T, F, U = "t", "f", "u"
TRUTH_VALUES = (T, F, U)

# canonical print order inside a u-count class
_RANK = {T: 0, F: 1, U: 2}


@dataclass(frozen=True)
class Vocabulary:
    statements: tuple[str, ...]

    def __init__(self, statements: Iterable[str]):
        names = tuple(statements)
        if not names:
            raise ValueError("vocabulary must contain at least one statement")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate statement names in {names!r}")
        for name in names:
            if not isinstance(name, str) or not name or any(c.isspace() for c in name):
                raise ValueError(f"invalid statement name {name!r}")
        object.__setattr__(self, "statements", names)

    def __len__(self) -> int:
        return len(self.statements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.statements)

    def __str__(self) -> str:
        return " ".join(self.statements)

    def index(self, name: str) -> int:
        try:
            return self.statements.index(name)
        except ValueError:
            raise KeyError(f"unknown statement {name!r}") from None

    def bit(self, name_or_index: str | int) -> int:
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        return 1 << (len(self.statements) - 1 - i)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.statements)) - 1

    @property
    def n_two_valued(self) -> int:
        return 1 << len(self.statements)

    def two_valued(self) -> Iterator["Interpretation"]:
        """All two-valued interpretations in index order (v_f first)."""
        full = self.full_mask
        for w in range(self.n_two_valued):
            yield Interpretation(self, w, full & ~w)

    def interpretations(self) -> Iterator["Interpretation"]:
        """All 3^n interpretations."""
        for tm, fm in cube(len(self.statements)):
            yield Interpretation(self, tm, fm)

    def all_unknown(self) -> "Interpretation":
        return Interpretation(self, 0, 0)

    def all_false(self) -> "Interpretation":
        return Interpretation(self, 0, self.full_mask)

    def all_true(self) -> "Interpretation":
        return Interpretation(self, self.full_mask, 0)


@lru_cache(maxsize=None)
def cube(n: int) -> tuple[tuple[int, int], ...]:
    """Every (true_mask, false_mask) pair over ``n`` statements."""
    out = []
    for code in range(3 ** n):
        tm = fm = 0
        for i in range(n):
            code, digit = divmod(code, 3)
            bit = 1 << i
            if digit == 1:
                tm |= bit
            elif digit == 2:
                fm |= bit
        out.append((tm, fm))
    return tuple(out)


@lru_cache(maxsize=None)
def completion_indices(n: int, tm: int, fm: int) -> tuple[int, ...]:
    """Indices of the two-valued interpretations extending (tm, fm)."""
    umask = ((1 << n) - 1) & ~(tm | fm)
    out = []
    sub = umask
    while True:
        out.append(tm | sub)
        if sub == 0:
            break
        sub = (sub - 1) & umask
    out.sort()
    return tuple(out)


@dataclass(frozen=True)
class Interpretation:
    vocab: Vocabulary
    true_mask: int
    false_mask: int

    def __post_init__(self):
        full = self.vocab.full_mask
        if self.true_mask & self.false_mask or (self.true_mask | self.false_mask) & ~full:
            raise ValueError("inconsistent interpretation masks")

    @classmethod
    def from_index(cls, vocab: Vocabulary, index: int) -> "Interpretation":
        if not 0 <= index < vocab.n_two_valued:
            raise ValueError(f"index {index} out of range")
        return cls(vocab, index, vocab.full_mask & ~index)

    @classmethod
    def from_mapping(cls, vocab: Vocabulary, values: dict[str, str]) -> "Interpretation":
        return parse_interpretation("".join(values.get(a, U) for a in vocab), vocab)

    def __getitem__(self, name: str) -> str:
        bit = self.vocab.bit(name)
        if self.true_mask & bit:
            return T
        if self.false_mask & bit:
            return F
        return U

    @property
    def token(self) -> str:
        return "".join(self[a] for a in self.vocab)

    def __str__(self) -> str:
        return self.token

    def __repr__(self) -> str:
        return f"Interpretation({self.token!r})"

    @property
    def unknown_mask(self) -> int:
        return self.vocab.full_mask & ~(self.true_mask | self.false_mask)

    @property
    def is_two_valued(self) -> bool:
        return self.unknown_mask == 0

    @property
    def index(self) -> int:
        if not self.is_two_valued:
            raise ValueError(f"{self.token} is not two-valued")
        return self.true_mask

    def updated(self, name: str, value: str) -> "Interpretation":
        bit = self.vocab.bit(name)
        tm, fm = self.true_mask & ~bit, self.false_mask & ~bit
        if value == T:
            tm |= bit
        elif value == F:
            fm |= bit
        elif value != U:
            raise ValueError(f"invalid truth value {value!r}")
        return Interpretation(self.vocab, tm, fm)

    def sort_key(self) -> tuple:
        """Canonical order: more u first, then t < f < u position-wise."""
        tok = self.token
        return (-tok.count(U), tuple(_RANK[c] for c in tok))


def parse_interpretation(token: str, vocab: Vocabulary) -> Interpretation:
    if len(token) != len(vocab):
        raise ParseError(f"token {token!r} has length {len(token)}, vocabulary has {len(vocab)}")
    tm = fm = 0
    for i, c in enumerate(token):
        bit = vocab.bit(i)
        if c == T:
            tm |= bit
        elif c == F:
            fm |= bit
        elif c != U:
            raise ParseError(f"invalid character {c!r} in token {token!r}")
    return Interpretation(vocab, tm, fm)


class InterpretationSet:
    """A finite set of interpretations sharing one vocabulary.

    Iteration follows the canonical order (u-count descending, then
    position-wise t < f < u).
    """

    __slots__ = ("vocab", "_members")

    def __init__(self, vocab: Vocabulary, members: Iterable[Interpretation | str] = ()):
        items = set()
        for m in members:
            if isinstance(m, str):
                m = parse_interpretation(m, vocab)
            elif m.vocab != vocab:
                raise VocabularyMismatch(f"{m.token} is not over vocabulary ({vocab})")
            items.add(m)
        self.vocab = vocab
        self._members = frozenset(items)

    @classmethod
    def from_masks(cls, vocab: Vocabulary, masks: Iterable[tuple[int, int]]) -> "InterpretationSet":
        return cls(vocab, (Interpretation(vocab, tm, fm) for tm, fm in masks))

    @property
    def members(self) -> frozenset[Interpretation]:
        return self._members

    def masks(self) -> frozenset[tuple[int, int]]:
        return frozenset((m.true_mask, m.false_mask) for m in self._members)

    def __iter__(self) -> Iterator[Interpretation]:
        return iter(sorted(self._members, key=Interpretation.sort_key))

    def __len__(self) -> int:
        return len(self._members)

    def __contains__(self, item) -> bool:
        if isinstance(item, str):
            item = parse_interpretation(item, self.vocab)
        return item in self._members

    def __eq__(self, other) -> bool:
        if not isinstance(other, InterpretationSet):
            return NotImplemented
        return self.vocab == other.vocab and self._members == other._members

    def __hash__(self) -> int:
        return hash((self.vocab, self._members))

    def __le__(self, other: "InterpretationSet") -> bool:
        _same_vocab(self.vocab, other.vocab)
        return self._members <= other._members

    def __or__(self, other: "InterpretationSet") -> "InterpretationSet":
        _same_vocab(self.vocab, other.vocab)
        return InterpretationSet(self.vocab, self._members | other._members)

    def __sub__(self, other: "InterpretationSet") -> "InterpretationSet":
        _same_vocab(self.vocab, other.vocab)
        return InterpretationSet(self.vocab, self._members - other._members)

    def tokens(self) -> list[str]:
        return [m.token for m in self]

    def sort_key(self) -> tuple:
        return (len(self), tuple(m.sort_key() for m in self))

    def __str__(self) -> str:
        return "{" + ",".join(self.tokens()) + "}"

    def __repr__(self) -> str:
        return f"InterpretationSet({self.tokens()!r})"


def _same_vocab(v1: Vocabulary, v2: Vocabulary) -> None:
    if v1 != v2:
        raise VocabularyMismatch(f"vocabularies differ: ({v1}) vs ({v2})")


def leq_i(v1: Interpretation, v2: Interpretation) -> bool:
    """Information order: v2 agrees with every Boolean value of v1."""
    _same_vocab(v1.vocab, v2.vocab)
    return (v1.true_mask & ~v2.true_mask) == 0 and (v1.false_mask & ~v2.false_mask) == 0


def lt_i(v1: Interpretation, v2: Interpretation) -> bool:
    return v1 != v2 and leq_i(v1, v2)


def meet_i(v1: Interpretation, v2: Interpretation) -> Interpretation:
    """Consensus: keep Boolean values both sides share, u elsewhere."""
    _same_vocab(v1.vocab, v2.vocab)
    return Interpretation(v1.vocab, v1.true_mask & v2.true_mask, v1.false_mask & v2.false_mask)


def completions(v: Interpretation) -> InterpretationSet:
    n = len(v.vocab)
    full = v.vocab.full_mask
    idx = completion_indices(n, v.true_mask, v.false_mask)
    return InterpretationSet(v.vocab, (Interpretation(v.vocab, w, full & ~w) for w in idx))


def max_i(V: InterpretationSet) -> InterpretationSet:
    members = list(V.members)
    keep = [v for v in members if not any(lt_i(v, w) for w in members)]
    return InterpretationSet(V.vocab, keep)


def is_antichain(V: InterpretationSet) -> bool:
    members = list(V.members)
    return not any(lt_i(v, w) for v in members for w in members)


def _require_two_valued(*vs: Interpretation) -> None:
    for v in vs:
        if not v.is_two_valued:
            raise ValueError(f"{v.token} is not two-valued")


def truth_leq(v1: Interpretation, v2: Interpretation) -> bool:
    _same_vocab(v1.vocab, v2.vocab)
    _require_two_valued(v1, v2)
    return v1.true_mask & ~v2.true_mask == 0


def truth_join(v1: Interpretation, v2: Interpretation) -> Interpretation:
    _same_vocab(v1.vocab, v2.vocab)
    _require_two_valued(v1, v2)
    return Interpretation.from_index(v1.vocab, v1.true_mask | v2.true_mask)


def truth_meet(v1: Interpretation, v2: Interpretation) -> Interpretation:
    _same_vocab(v1.vocab, v2.vocab)
    _require_two_valued(v1, v2)
    return Interpretation.from_index(v1.vocab, v1.true_mask & v2.true_mask)
