"""Command-line front end.

Exit status: 0 for an affirmative answer, 1 for a definite negative one
(not realizable, semantics differ), 2 for any operational error.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from .atlas import brute_signature, compare
from .errors import RealkitError
from .formats import format_kb, read_interpretation_set, read_kb
from .frameworks import Formalism, Semantics, semantics
from .interp import Vocabulary
from .search import Limits, RealizeQuery, realize, realize_all

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2

_FORMALISMS = [f.value for f in Formalism]
_SEMANTICS = [s.value for s in Semantics]


def _env_max_atoms() -> int | None:
    raw = os.environ.get("REALKIT_MAX_ATOMS")
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise RealkitError(f"REALKIT_MAX_ATOMS must be an integer, got {raw!r}") from None


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_realize(args) -> int:
    V = read_interpretation_set(args.input)
    max_atoms = args.max_atoms if args.max_atoms is not None else _env_max_atoms()
    q = RealizeQuery(args.formalism, args.semantics, V, Limits(max_atoms=max_atoms, verify=not args.no_verify))
    if not args.all:
        r = realize(q)
        if r is None:
            print("not realizable", file=sys.stderr)
            return EXIT_NO
        _emit(format_kb(r.kb), args.output)
        return EXIT_YES
    chunks = []
    for i, r in enumerate(realize_all(q), 1):
        chunk = f"% realization {i}\n{format_kb(r.kb)}"
        if args.output is None:
            sys.stdout.write(chunk + "\n")
            sys.stdout.flush()
        chunks.append(chunk)
    if not chunks:
        print("not realizable", file=sys.stderr)
        return EXIT_NO
    if args.output is not None:
        _emit("\n".join(chunks), args.output)
    return EXIT_YES


def _oracle(path: str, sigma: str):
    kb = read_kb(path)
    return semantics(kb, sigma, max_atoms=_env_max_atoms())


def cmd_semantics(args) -> int:
    found = _oracle(args.kb, args.semantics)
    print(" ".join(found.tokens()))
    return EXIT_YES


def cmd_check(args) -> int:
    found = _oracle(args.kb, args.semantics)
    expected = read_interpretation_set(args.expect)
    if found.vocab != expected.vocab:
        raise RealkitError(f"vocabularies differ: kb has '{found.vocab}', expected file has '{expected.vocab}'")
    if found == expected:
        print("ok")
        return EXIT_YES
    print("semantics differ (- expected only, + computed only)")
    for v in expected - found:
        print(f"- {v.token}")
    for v in found - expected:
        print(f"+ {v.token}")
    return EXIT_NO


def _atoms_vocab(n: int) -> Vocabulary:
    if n < 1:
        raise RealkitError("--atoms must be at least 1")
    names = "abcdefghijklmnopqrstuvwxyz"
    return Vocabulary(names[i] if i < 26 else f"a{i}" for i in range(n))


def cmd_signature(args) -> int:
    sig = brute_signature(args.formalism, args.semantics, _atoms_vocab(args.atoms))
    print(sig)
    return EXIT_YES


def _side(text: str) -> tuple[Formalism, Semantics]:
    try:
        kind, sigma = text.split(":")
        return Formalism(kind.lower()), Semantics(sigma.lower())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected FORMALISM:SEMANTICS, got {text!r}") from None


def _set_list(sets) -> str:
    return " ".join(str(s) for s in sets) if sets else "-"


def cmd_compare(args) -> int:
    (k1, s1), (k2, s2) = args.left, args.right
    result = compare(k1, s1, k2, s2, _atoms_vocab(args.atoms))
    print(result.verdict.value)
    print(f"left only: {_set_list(result.left_only)}")
    print(f"right only: {_set_list(result.right_only)}")
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="realkit", description="Realizability of three-valued argumentation semantics.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("realize", help="construct a knowledge base with the given semantics")
    r.add_argument("--formalism", required=True, choices=_FORMALISMS)
    r.add_argument("--semantics", required=True, choices=_SEMANTICS)
    r.add_argument("--input", required=True, help="interpretation-set file")
    r.add_argument("--all", action="store_true", help="stream every realization")
    r.add_argument("--max-atoms", type=int, default=None)
    r.add_argument("--no-verify", action="store_true", help="skip the brute-force check of results")
    r.add_argument("--output", default=None)
    r.set_defaults(func=cmd_realize)

    s = sub.add_parser("semantics", help="evaluate a knowledge base")
    s.add_argument("--kb", required=True)
    s.add_argument("--semantics", required=True, choices=_SEMANTICS)
    s.set_defaults(func=cmd_semantics)

    c = sub.add_parser("check", help="compare a knowledge base's semantics with an expected set")
    c.add_argument("--kb", required=True)
    c.add_argument("--semantics", required=True, choices=_SEMANTICS)
    c.add_argument("--expect", required=True)
    c.set_defaults(func=cmd_check)

    g = sub.add_parser("signature", help="list a signature by enumeration")
    g.add_argument("--formalism", required=True, choices=_FORMALISMS)
    g.add_argument("--semantics", required=True, choices=_SEMANTICS)
    g.add_argument("--atoms", required=True, type=int)
    g.set_defaults(func=cmd_signature)

    m = sub.add_parser("compare", help="compare two signatures by inclusion")
    m.add_argument("--atoms", required=True, type=int)
    m.add_argument("--left", required=True, type=_side, metavar="F:SIGMA")
    m.add_argument("--right", required=True, type=_side, metavar="F:SIGMA")
    m.set_defaults(func=cmd_compare)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, which matches our error code
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    try:
        return args.func(args)
    except (RealkitError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
