"""Text formats: interpretation-set files and the ADF / BADF / AF / SETAF fact dialects.

Interpretation-set files::

    # comment
    vocab a b c
    uuu
    tff

Knowledge bases are written as ASP-style facts.  ADFs use ``s(a).`` and
``ac(a, formula).`` with formulas built from ``and``, ``or``, ``neg``,
``c(v)``, ``c(f)`` and statement names; BADFs add ``sup(b,a).`` and
``att(b,a).``.  AFs use ``arg(a).`` and ``att(b,a).``.  The SETAF dialect,
``arg(a).`` plus ``attset((b1,...,bk),a).``, is a local convention.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from .errors import ParseError
from .frameworks import Adf, Af, Badf, Formalism, KnowledgeBase, Setaf, kind_of
from .interp import InterpretationSet, Vocabulary, parse_interpretation

# --- interpretation sets ----------------------------------------------------------


def _content_lines(text: str, comment: str) -> Iterator[tuple[int, str]]:
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split(comment, 1)[0].strip()
        if line:
            yield lineno, line


def parse_interpretation_set(text: str) -> InterpretationSet:
    vocab = None
    tokens: list[str] = []
    seen = set()
    for lineno, line in _content_lines(text, "#"):
        if vocab is None:
            head, *names = line.split()
            if head != "vocab" or not names:
                raise ParseError(f"line {lineno}: expected 'vocab' followed by statement names")
            try:
                vocab = Vocabulary(names)
            except ValueError as exc:
                raise ParseError(f"line {lineno}: {exc}") from None
            continue
        if line in seen:
            raise ParseError(f"line {lineno}: duplicate interpretation {line}")
        try:
            parse_interpretation(line, vocab)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        seen.add(line)
        tokens.append(line)
    if vocab is None:
        raise ParseError("missing 'vocab' line")
    return InterpretationSet(vocab, tokens)


def format_interpretation_set(V: InterpretationSet) -> str:
    lines = ["vocab " + " ".join(V.vocab)]
    lines.extend(V.tokens())
    return "\n".join(lines) + "\n"


# --- terms ------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z0-9_]+)|(?P<punct>[(),.]))")


@dataclass(frozen=True)
class Term:
    """A name, a compound ``f(args)``, or a tuple when ``functor`` is empty."""

    functor: str
    args: tuple["Term", ...] = ()

    @property
    def is_atom(self) -> bool:
        return bool(self.functor) and not self.args


def _tokenize(text: str) -> list[tuple[str, int]]:
    out = []
    pos = 0
    text = "\n".join(line.split("%", 1)[0] for line in text.splitlines())
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            snippet = text[pos:].strip()[:20]
            raise ParseError(f"unexpected input near {snippet!r}")
        out.append((m.group("name") or m.group("punct"), m.start()))
        pos = m.end()
    return out


class _TermParser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, got {tok!r}")
        self.i += 1
        return tok

    def term(self) -> Term:
        tok = self.take()
        if tok == "(":
            args = self.args()
            return Term("", args)
        if tok in ",.)":
            raise ParseError(f"unexpected {tok!r}")
        if self.peek() == "(":
            self.take("(")
            return Term(tok, self.args())
        return Term(tok)

    def args(self) -> tuple[Term, ...]:
        items = [self.term()]
        while self.peek() == ",":
            self.take(",")
            items.append(self.term())
        self.take(")")
        return tuple(items)

    def facts(self) -> list[Term]:
        out = []
        while self.peek() is not None:
            t = self.term()
            if not t.functor:
                raise ParseError("a fact cannot be a bare tuple")
            self.take(".")
            out.append(t)
        return out


def parse_facts(text: str) -> list[Term]:
    return _TermParser(text).facts()


# --- formulas ---------------------------------------------------------------------


def eval_formula(term: Term, vocab: Vocabulary) -> int:
    """Model bitset of a formula (bit w set iff two-valued index w satisfies it)."""
    size = vocab.n_two_valued
    every = (1 << size) - 1
    f, args = term.functor, term.args
    if f == "c" and len(args) == 1 and args[0].is_atom and args[0].functor in ("v", "f"):
        return every if args[0].functor == "v" else 0
    if f in ("and", "or", "imp", "iff", "xor") and len(args) == 2:
        x, y = eval_formula(args[0], vocab), eval_formula(args[1], vocab)
        if f == "and":
            return x & y
        if f == "or":
            return x | y
        if f == "imp":
            return (every & ~x) | y
        if f == "iff":
            return every & ~(x ^ y)
        return x ^ y
    if f == "neg" and len(args) == 1:
        return every & ~eval_formula(args[0], vocab)
    if term.is_atom:
        try:
            bit = vocab.bit(f)
        except (KeyError, ValueError):
            raise ParseError(f"unknown statement {f!r} in formula") from None
        return sum(1 << w for w in range(size) if w & bit)
    raise ParseError(f"malformed formula term {f or 'tuple'}/{len(args)}")


def _minterm(vocab: Vocabulary, w: int) -> str:
    lits = [a if w & vocab.bit(a) else f"neg({a})" for a in vocab]
    return _nest("and", lits)


def _nest(op: str, items: list[str]) -> str:
    out = items[-1]
    for item in reversed(items[:-1]):
        out = f"{op}({item},{out})"
    return out


def format_formula(models: int, vocab: Vocabulary) -> str:
    """Disjunction of full minterms, one per model; constants for the extremes."""
    size = vocab.n_two_valued
    if models == 0:
        return "c(f)"
    if models == (1 << size) - 1:
        return "c(v)"
    return _nest("or", [_minterm(vocab, w) for w in range(size) if models >> w & 1])


# --- knowledge bases --------------------------------------------------------------


def _atom_name(t: Term, what: str) -> str:
    if not t.is_atom:
        raise ParseError(f"{what} must be a plain name")
    return t.functor


def detect_dialect(facts: list[Term]) -> Formalism:
    functors = {f.functor for f in facts}
    if "s" in functors or "ac" in functors:
        return Formalism.BADF if functors & {"sup", "att"} else Formalism.ADF
    if "attset" in functors:
        return Formalism.SETAF
    if "arg" in functors:
        return Formalism.AF
    raise ParseError("cannot detect the knowledge-base dialect")


def _vocab(facts: list[Term], decl: str) -> Vocabulary:
    names = []
    for f in facts:
        if f.functor == decl:
            if len(f.args) != 1:
                raise ParseError(f"{decl}/1 expected")
            names.append(_atom_name(f.args[0], "statement"))
    if not names:
        raise ParseError(f"no {decl}(...) facts")
    try:
        return Vocabulary(names)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _pair(f: Term, vocab: Vocabulary) -> tuple[str, str]:
    if len(f.args) != 2:
        raise ParseError(f"{f.functor}/2 expected")
    b, a = (_atom_name(x, "argument") for x in f.args)
    for x in (b, a):
        if x not in vocab.statements:
            raise ParseError(f"unknown statement {x!r} in {f.functor} fact")
    return b, a


def _check_functors(facts: list[Term], allowed: set[str], dialect: str) -> None:
    for f in facts:
        if f.functor not in allowed:
            raise ParseError(f"unexpected fact {f.functor}/{len(f.args)} in {dialect} file")


def _parse_adf(facts: list[Term], bipolar: bool) -> Adf | Badf:
    _check_functors(facts, {"s", "ac", "sup", "att"} if bipolar else {"s", "ac"}, "ADF")
    vocab = _vocab(facts, "s")
    conds: dict[str, int] = {}
    sup, att = set(), set()
    for f in facts:
        if f.functor == "ac":
            if len(f.args) != 2:
                raise ParseError("ac/2 expected")
            a = _atom_name(f.args[0], "statement")
            if a not in vocab.statements:
                raise ParseError(f"acceptance condition for undeclared statement {a!r}")
            if a in conds:
                raise ParseError(f"second acceptance condition for {a!r}")
            conds[a] = eval_formula(f.args[1], vocab)
        elif f.functor == "sup":
            sup.add(_pair(f, vocab))
        elif f.functor == "att":
            att.add(_pair(f, vocab))
    missing = [a for a in vocab if a not in conds]
    if missing:
        raise ParseError(f"no acceptance condition for {', '.join(missing)}")
    adf = Adf.from_masks(vocab, [conds[a] for a in vocab])
    if not bipolar:
        return adf
    try:
        return Badf(adf, frozenset(sup), frozenset(att))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _parse_af(facts: list[Term]) -> Af:
    _check_functors(facts, {"arg", "att"}, "AF")
    vocab = _vocab(facts, "arg")
    attacks = frozenset(_pair(f, vocab) for f in facts if f.functor == "att")
    return Af(vocab, attacks)


def _parse_setaf(facts: list[Term]) -> Setaf:
    _check_functors(facts, {"arg", "attset"}, "SETAF")
    vocab = _vocab(facts, "arg")
    attacks = set()
    for f in facts:
        if f.functor != "attset":
            continue
        if len(f.args) != 2:
            raise ParseError("attset/2 expected")
        group, target = f.args
        members = group.args if not group.functor else (group,)
        names = frozenset(_atom_name(m, "attacker") for m in members)
        a = _atom_name(target, "attacked argument")
        unknown = sorted(x for x in names | {a} if x not in vocab.statements)
        if unknown:
            raise ParseError(f"unknown statements {unknown} in attset fact")
        attacks.add((names, a))
    return Setaf(vocab, frozenset(attacks))


def parse_kb(text: str, dialect: Formalism | str | None = None) -> KnowledgeBase:
    """Parse a knowledge-base file, detecting the dialect unless one is given.

    Detection cannot tell an attack-free SETAF from an attack-free AF, or a
    link-free BADF from an ADF; pass ``dialect`` when the kind matters.
    """
    facts = parse_facts(text)
    if not facts:
        raise ParseError("empty knowledge-base file")
    kind = Formalism(dialect) if dialect is not None else detect_dialect(facts)
    if kind is Formalism.ADF:
        return _parse_adf(facts, bipolar=False)
    if kind is Formalism.BADF:
        return _parse_adf(facts, bipolar=True)
    if kind is Formalism.SETAF:
        return _parse_setaf(facts)
    return _parse_af(facts)


def _sorted_pairs(pairs, vocab: Vocabulary) -> list[tuple[str, str]]:
    return sorted(pairs, key=lambda p: (vocab.index(p[1]), vocab.index(p[0])))


def format_kb(kb: KnowledgeBase) -> str:
    kind = kind_of(kb)
    vocab = kb.vocab
    lines = []
    if kind in (Formalism.ADF, Formalism.BADF):
        adf = kb.base if isinstance(kb, Badf) else kb
        lines += [f"s({a})." for a in vocab]
        lines += [f"ac({a},{format_formula(m, vocab)})." for a, m in zip(vocab, adf.masks)]
        if isinstance(kb, Badf):
            lines += [f"sup({b},{a})." for b, a in _sorted_pairs(kb.supporting, vocab)]
            lines += [f"att({b},{a})." for b, a in _sorted_pairs(kb.attacking, vocab)]
    elif kind is Formalism.AF:
        lines += [f"arg({a})." for a in vocab]
        lines += [f"att({b},{a})." for b, a in _sorted_pairs(kb.attacks, vocab)]
    else:
        lines += [f"arg({a})." for a in vocab]

        def key(attack):
            B, a = attack
            return (vocab.index(a), len(B), sorted(vocab.index(b) for b in B))

        for B, a in sorted(kb.attacks, key=key):
            group = ",".join(sorted(B, key=vocab.index))
            lines.append(f"attset(({group}),{a}).")
    return "\n".join(lines) + "\n"


def read_kb(path: str, dialect: Formalism | str | None = None) -> KnowledgeBase:
    with open(path, encoding="utf-8") as fh:
        return parse_kb(fh.read(), dialect)


def read_interpretation_set(path: str) -> InterpretationSet:
    with open(path, encoding="utf-8") as fh:
        return parse_interpretation_set(fh.read())

