"""Automaton data model and the fundamental constructions.

Complete DFAs are immutable value objects: per-letter behaviour is a
Transformation of the state set, so a DFA is hashable and two DFAs compare
equal exactly when they are bit-identical.  Minimization renumbers states
canonically (breadth-first from the initial state, letters in alphabet
order), which makes "isomorphic" a plain equality check on canonical forms.

States are 0-based internally; serialization and rendering are 1-based.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace
from typing import Union

from .errors import InputError, ResourceLimitError
from .transformations import Transformation

EPSILON = ""

DEFAULT_SUBSET_CAP = 2**22


@dataclass(frozen=True)
class Dfa:
    """Complete deterministic automaton over an ordered alphabet."""

    n: int
    alphabet: tuple[str, ...]
    delta: tuple[Transformation, ...]  # one per letter, alphabet order
    initial: int
    finals: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "delta", tuple(self.delta))
        object.__setattr__(self, "finals", frozenset(self.finals))
        if self.n < 1:
            raise InputError("a DFA needs at least one state")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise InputError("alphabet letters must be distinct")
        if len(self.delta) != len(self.alphabet):
            raise InputError("delta must provide one transformation per letter")
        for t in self.delta:
            if t.degree != self.n:
                raise InputError("transformation degree must equal the state count")
        if not 0 <= self.initial < self.n:
            raise InputError("initial state out of range")
        if not all(0 <= q < self.n for q in self.finals):
            raise InputError("final state out of range")

    def letter_index(self, letter: str) -> int:
        try:
            return self.alphabet.index(letter)
        except ValueError:
            raise InputError(f"letter {letter!r} not in alphabet {self.alphabet}") from None

    def transformation(self, letter: str) -> Transformation:
        return self.delta[self.letter_index(letter)]

    def step(self, q: int, letter: str) -> int:
        return self.transformation(letter).image[q]


@dataclass(frozen=True, eq=False)
class Nfa:
    """Nondeterministic automaton, optionally with transitions on the empty word.

    ``eta`` maps (state, letter) to a target set; missing entries mean the
    empty set.  The empty-word label is EPSILON ("").
    """

    n: int
    alphabet: tuple[str, ...]
    eta: dict[tuple[int, str], frozenset[int]]
    initials: frozenset[int]
    finals: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "initials", frozenset(self.initials))
        object.__setattr__(self, "finals", frozenset(self.finals))
        if self.n < 0:
            raise InputError("state count must be non-negative")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise InputError("alphabet letters must be distinct")
        letters = set(self.alphabet)
        normalized = {}
        for (q, a), targets in self.eta.items():
            if not 0 <= q < self.n:
                raise InputError(f"transition source {q} out of range")
            if a != EPSILON and a not in letters:
                raise InputError(f"transition letter {a!r} not in alphabet")
            targets = frozenset(targets)
            if not all(0 <= p < self.n for p in targets):
                raise InputError("transition target out of range")
            if targets:
                normalized[(q, a)] = targets
        object.__setattr__(self, "eta", normalized)
        for q in self.initials | self.finals:
            if not 0 <= q < self.n:
                raise InputError("initial/final state out of range")

    @property
    def has_epsilon(self) -> bool:
        return any(a == EPSILON for (_, a) in self.eta)

    def targets(self, q: int, letter: str) -> frozenset[int]:
        return self.eta.get((q, letter), frozenset())


Automaton = Union[Dfa, Nfa]


def as_nfa(dfa: Dfa) -> Nfa:
    eta = {
        (q, letter): frozenset({t.image[q]})
        for letter, t in zip(dfa.alphabet, dfa.delta)
        for q in range(dfa.n)
    }
    return Nfa(
        n=dfa.n,
        alphabet=dfa.alphabet,
        eta=eta,
        initials=frozenset({dfa.initial}),
        finals=dfa.finals,
    )


def accepts(dfa: Dfa, w: str) -> bool:
    """True iff the state reached from the initial state under w is final."""
    q = dfa.initial
    for letter in w:
        q = dfa.step(q, letter)
    return q in dfa.finals


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def determinize(
    nfa: Nfa, cap: int = DEFAULT_SUBSET_CAP
) -> tuple[Dfa, tuple[frozenset[int], ...]]:
    """Subset construction, returning the DFA and the subset label per state.

    Only subsets reachable from the initial subset appear, discovered
    breadth-first with letters taken in alphabet order; state 0 is the
    initial subset.  The empty subset, when reachable, is kept as an
    ordinary dead state.  Epsilon closure is folded into the initial subset
    and into every per-letter successor.
    """
    succ = [[0] * nfa.n for _ in nfa.alphabet]
    eps = [0] * nfa.n
    for (q, a), targets in nfa.eta.items():
        mask = 0
        for p in targets:
            mask |= 1 << p
        if a == EPSILON:
            eps[q] |= mask
        else:
            succ[nfa.alphabet.index(a)][q] |= mask

    has_eps = any(eps)

    def closure(mask: int) -> int:
        if not has_eps:
            return mask
        pending = mask
        while pending:
            q = (pending & -pending).bit_length() - 1
            pending &= pending - 1
            new = eps[q] & ~mask
            mask |= new
            pending |= new
        return mask

    start = closure(sum(1 << q for q in nfa.initials))
    index = {start: 0}
    subsets = [start]
    trans: list[list[int]] = []
    queue = deque([start])
    while queue:
        mask = queue.popleft()
        row = []
        for letter_succ in succ:
            out = 0
            for q in _bits(mask):
                out |= letter_succ[q]
            out = closure(out)
            target = index.get(out)
            if target is None:
                target = len(subsets)
                if target >= cap:
                    raise ResourceLimitError(
                        f"determinization exceeded subset cap {cap}",
                        partial_count=len(subsets),
                    )
                index[out] = target
                subsets.append(out)
                queue.append(out)
            row.append(target)
        trans.append(row)

    final_mask = sum(1 << q for q in nfa.finals)
    dfa = Dfa(
        n=len(subsets),
        alphabet=nfa.alphabet,
        delta=tuple(
            Transformation(tuple(trans[s][a] for s in range(len(subsets))))
            for a in range(len(nfa.alphabet))
        ),
        initial=0,
        finals=frozenset(s for s, mask in enumerate(subsets) if mask & final_mask),
    )
    labels = tuple(frozenset(_bits(mask)) for mask in subsets)
    return dfa, labels


def reverse(a: Automaton) -> Nfa:
    """Reverse every transition and swap initial and final state sets."""
    nfa = as_nfa(a) if isinstance(a, Dfa) else a
    eta: dict[tuple[int, str], set[int]] = {}
    for (q, letter), targets in nfa.eta.items():
        for p in targets:
            eta.setdefault((p, letter), set()).add(q)
    return Nfa(
        n=nfa.n,
        alphabet=nfa.alphabet,
        eta={k: frozenset(v) for k, v in eta.items()},
        initials=nfa.finals,
        finals=nfa.initials,
    )


def _bfs_order(dfa: Dfa) -> list[int]:
    """Reachable states in breadth-first discovery order, letters in alphabet order."""
    order = [dfa.initial]
    seen = {dfa.initial}
    queue = deque(order)
    while queue:
        q = queue.popleft()
        for t in dfa.delta:
            p = t.image[q]
            if p not in seen:
                seen.add(p)
                order.append(p)
                queue.append(p)
    return order


def _renumber(dfa: Dfa, order: list[int]) -> Dfa:
    new_id = {q: i for i, q in enumerate(order)}
    return Dfa(
        n=len(order),
        alphabet=dfa.alphabet,
        delta=tuple(
            Transformation(tuple(new_id[t.image[q]] for q in order)) for t in dfa.delta
        ),
        initial=new_id[dfa.initial],
        finals=frozenset(new_id[q] for q in dfa.finals if q in new_id),
    )


def reachable_part(dfa: Dfa) -> Dfa:
    """Restriction to the states reachable from the initial state,
    renumbered in breadth-first discovery order."""
    return _renumber(dfa, _bfs_order(dfa))


def minimize(dfa: Dfa) -> Dfa:
    """Minimal DFA of the same language, canonically numbered.

    Partition refinement on the reachable part, then breadth-first
    renumbering, so isomorphic minimal DFAs come out bit-identical.
    """
    d = reachable_part(dfa)
    block = [1 if q in d.finals else 0 for q in range(d.n)]
    while True:
        count = len(set(block))
        signatures = [
            (block[q], tuple(block[t.image[q]] for t in d.delta)) for q in range(d.n)
        ]
        ids: dict[tuple, int] = {}
        new_block = []
        for sig in signatures:
            if sig not in ids:
                ids[sig] = len(ids)
            new_block.append(ids[sig])
        block = new_block
        if len(ids) == count:
            break
    count = len(set(block))

    representative: dict[int, int] = {}
    for q in range(d.n):
        representative.setdefault(block[q], q)
    quotient = Dfa(
        n=count,
        alphabet=d.alphabet,
        delta=tuple(
            Transformation(
                tuple(block[t.image[representative[b]]] for b in range(count))
            )
            for t in d.delta
        ),
        initial=block[d.initial],
        finals=frozenset(block[q] for q in d.finals),
    )
    return reachable_part(quotient)


def complexity(dfa: Dfa) -> int:
    """Number of states of the minimal DFA of dfa's language."""
    return minimize(dfa).n


def state_complexities(dfa: Dfa) -> list[int]:
    """Complexity of the language of each state of the minimal DFA."""
    d = minimize(dfa)
    return [complexity(replace(d, initial=q)) for q in range(d.n)]


def distinguishing_word(
    dfa: Dfa, p: int, q: int, with_respect_to: frozenset[int] | set[int]
) -> str | None:
    """Shortest word sent into the target set from exactly one of p, q.

    Ties are broken lexicographically by alphabet order.  Returns None when
    p and q are indistinguishable with respect to the set.
    """
    for s in (p, q):
        if not 0 <= s < dfa.n:
            raise InputError(f"state {s} out of range")
    targets = frozenset(with_respect_to)

    def split(pair: tuple[int, int]) -> bool:
        return (pair[0] in targets) != (pair[1] in targets)

    start = (p, q)
    if split(start):
        return ""
    seen = {start}
    queue = deque([(start, "")])
    while queue:
        (a, b), word = queue.popleft()
        for letter, t in zip(dfa.alphabet, dfa.delta):
            nxt = (t.image[a], t.image[b])
            if split(nxt):
                return word + letter
            if nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, word + letter))
    return None


def is_right_ideal(dfa: Dfa) -> bool:
    """True iff the language satisfies L = L·Σ*.

    A right ideal's minimal DFA has exactly one final state and that state
    is a sink: once a word is in the language every extension stays in it,
    so the final state's language is Σ* and minimality collapses it to one
    self-looping state.
    """
    d = minimize(dfa)
    if len(d.finals) != 1:
        return False
    (f,) = d.finals
    return all(t.image[f] == f for t in d.delta)


def isomorphic(d1: Dfa, d2: Dfa) -> bool:
    """Structural identity up to state renaming.

    Exact for DFAs whose states are all reachable (canonical breadth-first
    renumberings are compared); inputs with unreachable states are compared
    through their canonical minimizations.
    """
    if d1.alphabet != d2.alphabet:
        raise InputError(f"alphabet mismatch: {d1.alphabet} vs {d2.alphabet}")
    r1, r2 = reachable_part(d1), reachable_part(d2)
    if r1.n == d1.n and r2.n == d2.n:
        return r1 == r2
    return minimize(d1) == minimize(d2)


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    """True iff the two DFAs accept the same language."""
    if d1.alphabet != d2.alphabet:
        raise InputError(f"alphabet mismatch: {d1.alphabet} vs {d2.alphabet}")
    return minimize(d1) == minimize(d2)
