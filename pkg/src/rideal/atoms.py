"""Atoms of a regular language and the automaton whose states they are.

An atom is a non-empty intersection in which every left quotient of the
language appears exactly once, complemented or not; its basis is the set
of quotients appearing uncomplemented.  The atoms form an NFA (one state
per atom) that is obtained mechanically from the minimal DFA by the
reverse / determinize / reverse pipeline, with each state labeled by the
subset of minimal-DFA states that is its basis.

Determinizing that NFA from a single atom state yields the minimal DFA of
the atom directly (its reverse is deterministic and it has no empty
states), so atom complexity is a plain reachable-subset count with no
extra minimization pass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache

from .automata import Dfa, Nfa, determinize, minimize, reverse
from .errors import InputError
from .witnesses import build_ln, build_rn


@dataclass(frozen=True)
class Atom:
    """One atom, identified by its basis over the minimal DFA's states."""

    basis: frozenset[int]
    cobasis: frozenset[int]
    complexity: int | None = None

    @property
    def cobasis_size(self) -> int:
        return len(self.cobasis)


@dataclass(frozen=True, eq=False)
class Atomaton:
    """NFA over atoms, each state labeled by its basis subset.

    ``source`` is the minimal DFA the labels refer to.  Initial states are
    the atoms whose basis contains the source's initial state; the unique
    final state's label is the source's final-state set.
    """

    nfa: Nfa
    labels: tuple[frozenset[int], ...]
    source: Dfa

    def state_of(self, label: frozenset[int]) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"{set(label)} is not an atom basis") from None

    @property
    def initial_labels(self) -> list[frozenset[int]]:
        return [self.labels[q] for q in sorted(self.nfa.initials)]

    @property
    def final_label(self) -> frozenset[int]:
        (f,) = self.nfa.finals
        return self.labels[f]


def _label_key(label: frozenset[int]) -> int:
    return sum(1 << q for q in label)


@lru_cache(maxsize=16)
def _atomaton_of_minimal(d: Dfa) -> Atomaton:
    det, labels = determinize(reverse(d))
    return Atomaton(nfa=reverse(det), labels=labels, source=d)


def atomaton(dfa: Dfa) -> Atomaton:
    """Atoms of dfa's language as a labeled NFA (minimizes dfa first)."""
    return _atomaton_of_minimal(minimize(dfa))


def atoms_of(dfa: Dfa) -> list[Atom]:
    """All atoms, ordered by basis read as a binary number."""
    at = atomaton(dfa)
    universe = frozenset(range(at.source.n))
    return [
        Atom(basis=label, cobasis=universe - label)
        for label in sorted(at.labels, key=_label_key)
    ]


def _complexity_from_state(at: Atomaton, state: int) -> int:
    focused = replace(at.nfa, initials=frozenset({state}))
    det, _ = determinize(focused)
    return det.n


def atom_complexity(dfa: Dfa, basis: frozenset[int] | set[int]) -> int:
    """Quotient complexity of the atom with the given basis."""
    at = atomaton(dfa)
    return _complexity_from_state(at, at.state_of(frozenset(basis)))


def atoms_with_complexity(dfa: Dfa) -> list[Atom]:
    """atoms_of plus the measured complexity of every atom."""
    at = atomaton(dfa)
    universe = frozenset(range(at.source.n))
    order = sorted(range(len(at.labels)), key=lambda s: _label_key(at.labels[s]))
    return [
        Atom(
            basis=at.labels[s],
            cobasis=universe - at.labels[s],
            complexity=_complexity_from_state(at, s),
        )
        for s in order
    ]


def atom_bound(n: int, r: int) -> int:
    """Largest possible atom complexity for a right ideal of complexity n,
    for an atom whose co-basis has size r.

    r = 0 gives 2^(n-1); otherwise
    1 + sum_{k=1..r} sum_{h=k+1..k+n-r} C(n-1,h-1) * C(h-1,k).
    """
    if n < 1:
        raise InputError("n must be at least 1")
    if not 0 <= r <= n - 1:
        raise InputError(f"co-basis size {r} impossible for a right ideal with n={n}")
    if r == 0:
        return 2 ** (n - 1)
    total = 1
    for k in range(1, r + 1):
        for h in range(k + 1, k + n - r + 1):
            total += math.comb(n - 1, h - 1) * math.comb(h - 1, k)
    return total


def closed_form_atomaton_rn(n: int) -> Atomaton:
    """The atoms NFA of the four-letter right-ideal witness, built directly.

    States are the subsets of {1..n} containing n.  Letters a and b act by
    taking images of the label; c and d have the two-successor/no-successor
    pattern determined by membership of 1 and n-1 in the label.  Intended
    for n >= 4 (n = 3 is permitted and checked against the pipeline).
    """
    if n < 3:
        raise InputError("closed_form_atomaton_rn needs n >= 3")
    source = minimize(build_rn(n, "abcd"))
    sink = n - 1  # 0-based sink state (the unique final state)
    first = 0
    feeder = n - 2  # 0-based state mapped by c and d
    labels = tuple(
        frozenset(q for q in range(n - 1) if mask & (1 << q)) | {sink}
        for mask in range(2 ** (n - 1))
    )
    index = {label: s for s, label in enumerate(labels)}
    t_a = source.transformation("a")
    t_b = source.transformation("b")

    eta: dict[tuple[int, str], frozenset[int]] = {}
    for s, label in enumerate(labels):
        eta[(s, "a")] = frozenset({index[frozenset(t_a.image[q] for q in label)]})
        eta[(s, "b")] = frozenset({index[frozenset(t_b.image[q] for q in label)]})
        hit = label & {first, feeder}
        if not hit:
            eta[(s, "c")] = frozenset({s, index[label | {feeder}]})
        elif hit == {first, feeder}:
            eta[(s, "c")] = frozenset({index[label - {feeder}], s})
        if feeder in label:
            eta[(s, "d")] = frozenset({index[label - {feeder}], s})

    nfa = Nfa(
        n=len(labels),
        alphabet=("a", "b", "c", "d"),
        eta=eta,
        initials=frozenset(s for s, label in enumerate(labels) if first in label),
        finals=frozenset({index[frozenset({sink})]}),
    )
    return Atomaton(nfa=nfa, labels=labels, source=source)


def label_isomorphic(a1: Atomaton, a2: Atomaton) -> bool:
    """Label-preserving comparison of two labeled atom NFAs.

    Checks equality of the label sets, initial/final labels, and, for every
    label and letter, the successor label sets; state numbering is ignored.
    """
    if a1.nfa.alphabet != a2.nfa.alphabet:
        return False
    if set(a1.labels) != set(a2.labels):
        return False
    if set(a1.initial_labels) != set(a2.initial_labels):
        return False
    if a1.final_label != a2.final_label:
        return False
    for label in a1.labels:
        s1, s2 = a1.state_of(label), a2.state_of(label)
        for letter in a1.nfa.alphabet:
            out1 = {a1.labels[q] for q in a1.nfa.targets(s1, letter)}
            out2 = {a2.labels[q] for q in a2.nfa.targets(s2, letter)}
            if out1 != out2:
                return False
    return True


@dataclass(frozen=True)
class Interval:
    """The collection of all subsets of ``upper`` containing ``lower``.

    ``lower is None`` marks the designated empty interval (the empty
    collection); the ``type`` of a non-empty interval is (|lower|, |upper|).
    """

    lower: frozenset[int] | None
    upper: frozenset[int] | None

    @property
    def is_empty(self) -> bool:
        return self.lower is None

    @property
    def type(self) -> tuple[int, int] | None:
        if self.is_empty:
            return None
        return (len(self.lower), len(self.upper))


EMPTY_INTERVAL = Interval(None, None)


def recognize_interval(states) -> Interval | None:
    """Recognize a collection of sets as an interval [V, U], if it is one.

    V is the intersection and U the union of the members; the collection is
    the interval exactly when it has 2^(|U minus V|) members all lying
    between V and U.  The empty collection is the designated empty
    interval.  Returns None for collections that are not intervals.
    """
    members = [frozenset(s) for s in states]
    if not members:
        return EMPTY_INTERVAL
    lower = frozenset.intersection(*members)
    upper = frozenset.union(*members)
    if len(set(members)) != 2 ** len(upper - lower):
        return None
    if not all(lower <= m <= upper for m in members):
        return None
    return Interval(lower=lower, upper=upper)


def atom_determinization_collections(
    at: Atomaton, state: int
) -> list[frozenset[frozenset[int]]]:
    """Reachable states of the minimal DFA of one atom, each rendered as the
    collection of basis labels it stands for (the empty collection included
    when reachable)."""
    focused = replace(at.nfa, initials=frozenset({state}))
    _, subsets = determinize(focused)
    return [frozenset(at.labels[q] for q in subset) for subset in subsets]


@dataclass(frozen=True)
class TableCell:
    n: int
    r: int
    right_ideal: int | None  # None when impossible (r = n) or not computed
    regular: int | None
    impossible: bool = False  # right-ideal side only


@dataclass(frozen=True)
class AtomTable:
    """Measured maximal atom complexities by state count and co-basis size.

    ``cells`` covers r = 0..n for each n; the right-ideal column is measured
    on the four-letter right-ideal witness and the regular column on the
    three-letter comparison stream (which exists for n >= 2).  ``max_row``
    and ``ratio_row`` summarize each column pair.
    """

    n_max: int
    cells: tuple[TableCell, ...]
    max_row: dict[int, tuple[int | None, int | None]]
    ratio_row: dict[int, tuple[float | None, float | None]]

    def cell(self, n: int, r: int) -> TableCell:
        for c in self.cells:
            if c.n == n and c.r == r:
                return c
        raise InputError(f"no cell (n={n}, r={r})")


def _max_by_cobasis(atoms: list[Atom]) -> dict[int, int]:
    by_r: dict[int, int] = {}
    for atom in atoms:
        r = atom.cobasis_size
        by_r[r] = max(by_r.get(r, 0), atom.complexity)
    return by_r


def atom_table(n_max: int, include_regular: bool = True) -> AtomTable:
    """Measure atom complexities for 1 <= n <= n_max and assemble the table."""
    if n_max < 1:
        raise InputError("n_max must be at least 1")
    cells = []
    max_row: dict[int, tuple[int | None, int | None]] = {}
    for n in range(1, n_max + 1):
        ideal = _max_by_cobasis(atoms_with_complexity(build_rn(n, "abcd")))
        regular: dict[int, int] = {}
        if include_regular and n >= 2:
            regular = _max_by_cobasis(atoms_with_complexity(build_ln(n)))
        for r in range(0, n + 1):
            cells.append(
                TableCell(
                    n=n,
                    r=r,
                    right_ideal=ideal.get(r),
                    regular=regular.get(r),
                    impossible=r == n,
                )
            )
        max_row[n] = (
            max(ideal.values()) if ideal else None,
            max(regular.values()) if regular else None,
        )
    ratio_row: dict[int, tuple[float | None, float | None]] = {}
    for n in range(2, n_max + 1):
        pairs = []
        for side in (0, 1):
            cur, prev = max_row[n][side], max_row[n - 1][side]
            pairs.append(cur / prev if cur is not None and prev is not None else None)
        ratio_row[n] = (pairs[0], pairs[1])
    return AtomTable(n_max=n_max, cells=tuple(cells), max_row=max_row, ratio_row=ratio_row)
