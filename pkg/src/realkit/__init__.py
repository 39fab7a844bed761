"""Realizability of admissible, complete, preferred and model semantics for
AFs, SETAFs, bipolar ADFs and ADFs over a fixed vocabulary."""

from .atlas import Comparison, Signature, Verdict, brute_signature, compare, enumerate_kbs
from .charfun import (
    CharFunction,
    CharRelation,
    RelationStatus,
    Triple,
    adf_from_char,
    char_from_adf,
    is_characterization,
    kb_from_char,
    relation_status,
)
from .errors import GuardExceeded, ParseError, RealkitError, VocabularyMismatch
from .formats import (
    format_interpretation_set,
    format_kb,
    parse_interpretation_set,
    parse_kb,
    read_interpretation_set,
    read_kb,
)
from .frameworks import (
    AcceptanceCondition,
    Adf,
    Af,
    Badf,
    Formalism,
    KnowledgeBase,
    Polarity,
    Semantics,
    Setaf,
    af_to_adf,
    as_adf,
    classify_fragment,
    eval_condition,
    gamma,
    link_polarity,
    semantics,
    setaf_semantics,
    setaf_to_adf,
)
from .interp import (
    Interpretation,
    InterpretationSet,
    Vocabulary,
    completions,
    is_antichain,
    leq_i,
    lt_i,
    max_i,
    meet_i,
    parse_interpretation,
    truth_join,
    truth_leq,
    truth_meet,
)
from .propagate import (
    propagate_adm,
    propagate_com,
    propagate_fixpoint,
    propagate_formalism,
    propagate_mod,
    propagate_semantics,
)
from .search import (
    Limits,
    Realization,
    RealizeQuery,
    VerificationError,
    is_realizable,
    realize,
    realize_all,
    realize_prf,
)

__all__ = [
    "AcceptanceCondition",
    "Adf",
    "adf_from_char",
    "Af",
    "af_to_adf",
    "as_adf",
    "Badf",
    "brute_signature",
    "char_from_adf",
    "CharFunction",
    "CharRelation",
    "classify_fragment",
    "compare",
    "Comparison",
    "completions",
    "enumerate_kbs",
    "eval_condition",
    "Formalism",
    "format_interpretation_set",
    "format_kb",
    "gamma",
    "GuardExceeded",
    "Interpretation",
    "InterpretationSet",
    "is_antichain",
    "is_characterization",
    "is_realizable",
    "kb_from_char",
    "KnowledgeBase",
    "leq_i",
    "Limits",
    "link_polarity",
    "lt_i",
    "max_i",
    "meet_i",
    "parse_interpretation",
    "parse_interpretation_set",
    "parse_kb",
    "ParseError",
    "Polarity",
    "propagate_adm",
    "propagate_com",
    "propagate_fixpoint",
    "propagate_formalism",
    "propagate_mod",
    "propagate_semantics",
    "read_interpretation_set",
    "read_kb",
    "Realization",
    "realize",
    "realize_all",
    "realize_prf",
    "RealizeQuery",
    "RealkitError",
    "relation_status",
    "RelationStatus",
    "semantics",
    "Semantics",
    "Setaf",
    "setaf_semantics",
    "setaf_to_adf",
    "Signature",
    "Triple",
    "truth_join",
    "truth_leq",
    "truth_meet",
    "Verdict",
    "VerificationError",
    "Vocabulary",
    "VocabularyMismatch",
]

__version__ = "0.1.0"
