"""Signatures by exhaustive knowledge-base enumeration, and expressiveness comparison."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from .errors import GuardExceeded
from .frameworks import (
    Adf,
    Af,
    Badf,
    Formalism,
    KnowledgeBase,
    Semantics,
    Setaf,
    as_adf,
    is_bipolar_masks,
    semantics_masks,
)
from .interp import InterpretationSet, Vocabulary

ENUMERATION_GUARD = {
    Formalism.AF: 3,
    Formalism.SETAF: 3,
    Formalism.BADF: 2,
    Formalism.ADF: 2,
}


def _check_guard(kind: Formalism, vocab: Vocabulary) -> None:
    limit = ENUMERATION_GUARD[kind]
    if len(vocab) > limit:
        raise GuardExceeded(f"{kind} enumeration limited to {limit} statements, got {len(vocab)}")


def _powerset(items: list) -> Iterator[tuple]:
    return itertools.chain.from_iterable(itertools.combinations(items, k) for k in range(len(items) + 1))


def enumerate_kbs(kind: Formalism | str, vocab: Vocabulary) -> Iterator[KnowledgeBase]:
    """Every knowledge base of the given kind over vocab, each exactly once."""
    kind = Formalism(kind)
    _check_guard(kind, vocab)
    names = list(vocab)
    if kind is Formalism.AF:
        pairs = [(b, a) for b in names for a in names]
        for attacks in _powerset(pairs):
            yield Af(vocab, frozenset(attacks))
    elif kind is Formalism.SETAF:
        groups = [frozenset(c) for k in range(1, len(names) + 1) for c in itertools.combinations(names, k)]
        pairs = [(B, a) for a in names for B in groups]
        for attacks in _powerset(pairs):
            yield Setaf(vocab, frozenset(attacks))
    else:
        n = len(vocab)
        for masks in itertools.product(range(1 << vocab.n_two_valued), repeat=n):
            if kind is Formalism.BADF:
                if is_bipolar_masks(masks, n):
                    yield Badf.from_adf(Adf.from_masks(vocab, masks))
            else:
                yield Adf.from_masks(vocab, masks)


def _set_key(s: frozenset[tuple[int, int]], vocab: Vocabulary) -> tuple:
    return InterpretationSet.from_masks(vocab, s).sort_key()


@dataclass(frozen=True)
class Signature:
    kind: Formalism
    sigma: Semantics
    vocab: Vocabulary
    sets: tuple[InterpretationSet, ...]

    def __contains__(self, V: InterpretationSet) -> bool:
        return V in self._lookup

    @cached_property
    def _lookup(self) -> frozenset[InterpretationSet]:
        return frozenset(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[InterpretationSet]:
        return iter(self.sets)

    def __str__(self) -> str:
        return " ".join(str(s) for s in self.sets)


@lru_cache(maxsize=None)
def _signature_masks(kind: Formalism, sigma: Semantics, vocab: Vocabulary) -> tuple[frozenset, ...]:
    n = len(vocab)
    found = set()
    for kb in enumerate_kbs(kind, vocab):
        found.add(semantics_masks(as_adf(kb).masks, n, sigma))
    return tuple(sorted(found, key=lambda s: _set_key(s, vocab)))


def brute_signature(kind: Formalism | str, sigma: Semantics | str, vocab: Vocabulary) -> Signature:
    kind, sigma = Formalism(kind), Semantics(sigma)
    sets = tuple(InterpretationSet.from_masks(vocab, s) for s in _signature_masks(kind, sigma, vocab))
    return Signature(kind, sigma, vocab, sets)


class Verdict(str, enum.Enum):
    EQUAL = "equal"
    LEFT_LESS = "left-strictly-less"
    RIGHT_LESS = "right-strictly-less"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class Comparison:
    verdict: Verdict
    left_only: tuple[InterpretationSet, ...]
    right_only: tuple[InterpretationSet, ...]
    exhaustive: bool = True


def _verdict(left_only, right_only) -> Verdict:
    if left_only and right_only:
        return Verdict.INCOMPARABLE
    if left_only:
        return Verdict.RIGHT_LESS
    if right_only:
        return Verdict.LEFT_LESS
    return Verdict.EQUAL


def _sorted_sets(sets: Iterable[InterpretationSet]) -> tuple[InterpretationSet, ...]:
    return tuple(sorted(sets, key=InterpretationSet.sort_key))


def compare(
    kind1: Formalism | str,
    sigma1: Semantics | str,
    kind2: Formalism | str,
    sigma2: Semantics | str,
    vocab: Vocabulary,
    candidates: Iterable[InterpretationSet] | None = None,
) -> Comparison:
    """Compare two signatures by inclusion.

    Without ``candidates`` both signatures are enumerated.  With candidates,
    membership of each candidate set is decided by the realizability search
    instead, and the verdict only reflects those sets (``exhaustive=False``).
    """
    if candidates is None:
        left = set(brute_signature(kind1, sigma1, vocab))
        right = set(brute_signature(kind2, sigma2, vocab))
        return Comparison(_verdict(left - right, right - left), _sorted_sets(left - right), _sorted_sets(right - left))

    from .search import is_realizable

    left_only, right_only = [], []
    for V in candidates:
        in_left = is_realizable(kind1, sigma1, V)
        in_right = is_realizable(kind2, sigma2, V)
        if in_left and not in_right:
            left_only.append(V)
        elif in_right and not in_left:
            right_only.append(V)
    return Comparison(_verdict(left_only, right_only), _sorted_sets(left_only), _sorted_sets(right_only), exhaustive=False)


def all_interpretation_sets(vocab: Vocabulary) -> Iterator[InterpretationSet]:
    """Every subset of the 3^n interpretations (512 sets for two statements)."""
    everything = list(vocab.interpretations())
    for bits in range(1 << len(everything)):
        yield InterpretationSet(vocab, (v for i, v in enumerate(everything) if bits >> i & 1))
