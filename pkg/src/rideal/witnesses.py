"""Witness automaton streams.

Three parameterized families, all on states {1..n} (0-based internally)
with initial state 1:

* ``build_rn`` — the right-ideal witness: a: (1,...,n-1), b: (2,...,n-1),
  c: (n-1 -> 1), d: (n-1 -> n), final state {n}, which is a sink.
  Alphabet restrictions keep their letter labels, and "bad" swaps the
  roles of a and b inside the three-letter restriction.
* ``build_pn`` — same skeleton but with b the transposition (1,2); its
  transition semigroup already has maximal size n^(n-1).
* ``build_ln`` — the three-letter regular comparison stream:
  a: (1,...,n), b: (1,2), c: (n -> 1), final {n}.  Not a right ideal.

n = 1 and n = 2 degenerate gracefully for the right-ideal family: every
letter whose defining points collapse becomes the identity, leaving
R_1 = Sigma* and R_2 = {a,b,c}* d {a,b,c,d}*.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .automata import Dfa
from .errors import InputError
from .transformations import Transformation, cycle, identity, transposition, unitary

R_FAMILIES = ("r:abcd", "r:ad", "r:abd", "r:bad")
CLI_FAMILIES = R_FAMILIES + ("p", "l")


@dataclass(frozen=True)
class WitnessSpec:
    """A family name from CLI_FAMILIES plus the state count."""

    family: str
    n: int

    def __post_init__(self):
        if self.family not in CLI_FAMILIES:
            raise InputError(
                f"unknown family {self.family!r}; expected one of {CLI_FAMILIES}"
            )
        if self.n < 1:
            raise InputError("n must be at least 1")


def _r_letter(letter: str, n: int) -> Transformation:
    if n == 1:
        return identity(1)
    if letter == "a":
        return cycle(range(0, n - 1), n)
    if letter == "b":
        return cycle(range(1, n - 1), n)
    if letter == "c":
        return unitary(n - 2, 0, n)
    if letter == "d":
        return unitary(n - 2, n - 1, n)
    raise InputError(f"letter {letter!r} is not one of a,b,c,d")


def build_rn(n: int, letters: str = "abcd") -> Dfa:
    """Right-ideal witness on n states over the requested letters.

    ``letters`` is a subsequence of "abcd" naming the restriction, or the
    special value "bad" for the a/b role swap of the "abd" restriction.
    """
    if n < 1:
        raise InputError("n must be at least 1")
    swap = letters == "bad"
    alphabet = "abd" if swap else letters
    if not alphabet or any(x not in "abcd" for x in alphabet):
        raise InputError(f"letters must be drawn from a,b,c,d (got {letters!r})")
    if list(alphabet) != sorted(set(alphabet)):
        raise InputError(f"letters must be distinct and in a<b<c<d order (got {letters!r})")
    role = {"a": "b", "b": "a"} if swap else {}
    delta = tuple(_r_letter(role.get(x, x), n) for x in alphabet)
    return Dfa(
        n=n,
        alphabet=tuple(alphabet),
        delta=delta,
        initial=0,
        finals=frozenset({n - 1}),
    )


def build_pn(n: int) -> Dfa:
    """Four-letter variant of the right-ideal witness with b = (1,2).

    Defined for n >= 4; n = 3 is permitted with a warning (a and b then
    coincide, so no claims are made about that member).
    """
    if n < 3:
        raise InputError("build_pn needs n >= 3")
    if n == 3:
        warnings.warn("build_pn(3) is outside the family's intended range", stacklevel=2)
    delta = (
        cycle(range(0, n - 1), n),
        transposition(0, 1, n),
        unitary(n - 2, 0, n),
        unitary(n - 2, n - 1, n),
    )
    return Dfa(n=n, alphabet=("a", "b", "c", "d"), delta=delta, initial=0,
               finals=frozenset({n - 1}))


def build_ln(n: int) -> Dfa:
    """Three-letter regular comparison stream: a full cycle, a transposition,
    and a unitary map into the cycle; final state {n}.  Not a right ideal."""
    if n < 2:
        raise InputError("build_ln needs n >= 2")
    delta = (
        cycle(range(0, n), n),
        transposition(0, 1, n),
        unitary(n - 1, 0, n),
    )
    return Dfa(n=n, alphabet=("a", "b", "c"), delta=delta, initial=0,
               finals=frozenset({n - 1}))


def build_witness(spec: WitnessSpec) -> Dfa:
    """Build the automaton for a CLI-facing family name."""
    if spec.family == "p":
        return build_pn(spec.n)
    if spec.family == "l":
        return build_ln(spec.n)
    return build_rn(spec.n, spec.family.split(":", 1)[1])
