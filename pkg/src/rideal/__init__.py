"""State-complexity toolkit for regular right ideals.

Witness automata, transformation-semigroup closure, atoms with their
quotient complexities, operation-level constructions, and a harness that
verifies the known complexity formulas at small state counts.
"""

from .atoms import (
    Atom,
    Atomaton,
    AtomTable,
    EMPTY_INTERVAL,
    Interval,
    atom_bound,
    atom_complexity,
    atom_table,
    atomaton,
    atoms_of,
    atoms_with_complexity,
    closed_form_atomaton_rn,
    label_isomorphic,
    recognize_interval,
)
from .automata import (
    Dfa,
    EPSILON,
    Nfa,
    accepts,
    as_nfa,
    complexity,
    determinize,
    distinguishing_word,
    equivalent,
    is_right_ideal,
    isomorphic,
    minimize,
    reachable_part,
    reverse,
    state_complexities,
)
from .errors import InputError, ResourceLimitError
from .operations import (
    BooleanOp,
    DirectProduct,
    boolean,
    concat,
    direct_product,
    reverse_complexity,
    star,
)
from .serialize import (
    automaton_from_json,
    automaton_to_json,
    dfa_from_dict,
    dfa_to_dict,
    dfa_to_dot,
    nfa_from_dict,
    nfa_to_dict,
    nfa_to_dot,
)
from .transformations import (
    SemigroupClosure,
    Transformation,
    compose,
    cycle,
    generate_semigroup,
    identity,
    is_permutation,
    syntactic_semigroup_size,
    transformation_of_word,
    transposition,
    unitary,
)
from .verify import (
    Claim,
    ComplexityReport,
    OracleAudit,
    VerifyResult,
    boolean_bound,
    random_operation_audit,
    verify_main_results,
)
from .witnesses import WitnessSpec, build_ln, build_pn, build_rn, build_witness

__all__ = [
    "Atom",
    "Atomaton",
    "AtomTable",
    "BooleanOp",
    "Claim",
    "ComplexityReport",
    "Dfa",
    "DirectProduct",
    "EMPTY_INTERVAL",
    "EPSILON",
    "InputError",
    "Interval",
    "Nfa",
    "OracleAudit",
    "ResourceLimitError",
    "SemigroupClosure",
    "Transformation",
    "VerifyResult",
    "WitnessSpec",
    "accepts",
    "as_nfa",
    "atom_bound",
    "atom_complexity",
    "atom_table",
    "atomaton",
    "atoms_of",
    "atoms_with_complexity",
    "automaton_from_json",
    "automaton_to_json",
    "boolean",
    "boolean_bound",
    "build_ln",
    "build_pn",
    "build_rn",
    "build_witness",
    "closed_form_atomaton_rn",
    "complexity",
    "compose",
    "concat",
    "cycle",
    "determinize",
    "dfa_from_dict",
    "dfa_to_dict",
    "dfa_to_dot",
    "direct_product",
    "distinguishing_word",
    "equivalent",
    "generate_semigroup",
    "identity",
    "is_permutation",
    "is_right_ideal",
    "isomorphic",
    "label_isomorphic",
    "minimize",
    "nfa_from_dict",
    "nfa_to_dict",
    "nfa_to_dot",
    "random_operation_audit",
    "reachable_part",
    "recognize_interval",
    "reverse",
    "reverse_complexity",
    "star",
    "state_complexities",
    "syntactic_semigroup_size",
    "transformation_of_word",
    "transposition",
    "unitary",
    "verify_main_results",
]
