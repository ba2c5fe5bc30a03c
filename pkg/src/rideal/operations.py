"""Operation-level constructions and their complexity measurements.

Binary boolean operations go through the direct product of two complete
DFAs over one shared alphabet; concatenation and star go through small
epsilon-NFAs whose epsilon edges are folded away by determinization.
Every operation returns the minimal DFA of the result language.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .automata import Dfa, Nfa, EPSILON, determinize, minimize, reverse
from .errors import InputError
from .transformations import Transformation


class BooleanOp(enum.Enum):
    """The four proper binary boolean operations on languages."""

    UNION = "union"
    INTERSECTION = "intersection"
    DIFFERENCE = "difference"
    SYMMETRIC_DIFFERENCE = "symmetric_difference"

    def combine(self, in_left: bool, in_right: bool) -> bool:
        if self is BooleanOp.UNION:
            return in_left or in_right
        if self is BooleanOp.INTERSECTION:
            return in_left and in_right
        if self is BooleanOp.DIFFERENCE:
            return in_left and not in_right
        return in_left != in_right


def _same_alphabet(d1: Dfa, d2: Dfa) -> None:
    if d1.alphabet != d2.alphabet:
        raise InputError(
            f"alphabet mismatch: {d1.alphabet} vs {d2.alphabet}; "
            "operations require one shared alphabet"
        )


def _unique_final_sink(d: Dfa) -> int | None:
    if len(d.finals) != 1:
        return None
    (f,) = d.finals
    return f if all(t.image[f] == f for t in d.delta) else None


@dataclass(frozen=True)
class DirectProduct:
    """Complete pair-state automaton of two DFAs, finals left unset.

    Pair (i, j) is state i * right_n + j.  When both factors have a unique
    final sink, ``last_row`` / ``last_column`` hold the pair states whose
    left / right component is that sink (the classic H and V sets).
    """

    dfa: Dfa  # finals empty
    left: Dfa
    right: Dfa
    last_row: frozenset[int] | None
    last_column: frozenset[int] | None

    def pair_state(self, i: int, j: int) -> int:
        return i * self.right.n + j

    def with_finals(self, op: BooleanOp) -> Dfa:
        finals = frozenset(
            self.pair_state(i, j)
            for i in range(self.left.n)
            for j in range(self.right.n)
            if op.combine(i in self.left.finals, j in self.right.finals)
        )
        return Dfa(
            n=self.dfa.n,
            alphabet=self.dfa.alphabet,
            delta=self.dfa.delta,
            initial=self.dfa.initial,
            finals=finals,
        )


def direct_product(d1: Dfa, d2: Dfa) -> DirectProduct:
    """All m*n pair states with componentwise transitions, initial (1,1)."""
    _same_alphabet(d1, d2)
    m, n = d1.n, d2.n
    delta = tuple(
        Transformation(
            tuple(
                t1.image[p // n] * n + t2.image[p % n] for p in range(m * n)
            )
        )
        for t1, t2 in zip(d1.delta, d2.delta)
    )
    product = Dfa(
        n=m * n,
        alphabet=d1.alphabet,
        delta=delta,
        initial=d1.initial * n + d2.initial,
        finals=frozenset(),
    )
    sink1, sink2 = _unique_final_sink(d1), _unique_final_sink(d2)
    last_row = last_column = None
    if sink1 is not None and sink2 is not None:
        last_row = frozenset(sink1 * n + j for j in range(n))
        last_column = frozenset(i * n + sink2 for i in range(m))
    return DirectProduct(
        dfa=product, left=d1, right=d2, last_row=last_row, last_column=last_column
    )


def boolean(d1: Dfa, d2: Dfa, op: BooleanOp) -> Dfa:
    """Minimal DFA of the boolean combination of the two languages."""
    return minimize(direct_product(d1, d2).with_finals(op))


def concat(d1: Dfa, d2: Dfa) -> Dfa:
    """Minimal DFA of L(d1)·L(d2).

    Built from the epsilon-NFA that runs d1, jumping on the empty word
    from every final state of d1 to d2's initial state; only d2's finals
    accept.
    """
    _same_alphabet(d1, d2)
    m = d1.n
    eta: dict[tuple[int, str], frozenset[int]] = {}
    for letter, t in zip(d1.alphabet, d1.delta):
        for q in range(m):
            eta[(q, letter)] = frozenset({t.image[q]})
    for letter, t in zip(d2.alphabet, d2.delta):
        for q in range(d2.n):
            eta[(m + q, letter)] = frozenset({m + t.image[q]})
    for f in d1.finals:
        eta[(f, EPSILON)] = frozenset({m + d2.initial})
    nfa = Nfa(
        n=m + d2.n,
        alphabet=d1.alphabet,
        eta=eta,
        initials=frozenset({d1.initial}),
        finals=frozenset(m + f for f in d2.finals),
    )
    return minimize(determinize(nfa)[0])


def star(d: Dfa) -> Dfa:
    """Minimal DFA of L(d)*.

    A fresh state, both initial and final, copies the original initial
    state's outgoing transitions; every original final state jumps back to
    the original initial state on the empty word.
    """
    s = d.n
    eta: dict[tuple[int, str], frozenset[int]] = {}
    for letter, t in zip(d.alphabet, d.delta):
        for q in range(d.n):
            eta[(q, letter)] = frozenset({t.image[q]})
        eta[(s, letter)] = frozenset({t.image[d.initial]})
    for f in d.finals:
        eta[(f, EPSILON)] = frozenset({d.initial})
    nfa = Nfa(
        n=d.n + 1,
        alphabet=d.alphabet,
        eta=eta,
        initials=frozenset({s}),
        finals=d.finals | {s},
    )
    return minimize(determinize(nfa)[0])


def reverse_complexity(d: Dfa) -> int:
    """Complexity of the reverse language."""
    det, _ = determinize(reverse(minimize(d)))
    return minimize(det).n
