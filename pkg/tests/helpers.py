"""Independent oracles used by the tests.

Everything here works from raw transition tables (brute-force word
enumeration, product tuples, subset BFS on frozensets) so it shares no
code path with the constructions it checks.
"""

from __future__ import annotations

import random
from collections import deque

from rideal import Dfa, Nfa, Transformation, accepts


def words_upto(alphabet, max_len: int) -> list[str]:
    """All words up to max_len in shortlex order."""
    words = [""]
    layer = [""]
    for _ in range(max_len):
        layer = [w + a for w in layer for a in alphabet]
        words.extend(layer)
    return words


def language_set(dfa: Dfa, max_len: int) -> set[str]:
    return {w for w in words_upto(dfa.alphabet, max_len) if accepts(dfa, w)}


def random_dfa(rng: random.Random, max_states: int, alphabet=("a", "b")) -> Dfa:
    n = rng.randint(1, max_states)
    delta = tuple(
        Transformation(tuple(rng.randrange(n) for _ in range(n))) for _ in alphabet
    )
    finals = frozenset(q for q in range(n) if rng.random() < 0.5)
    return Dfa(n=n, alphabet=tuple(alphabet), delta=delta, initial=0, finals=finals)


def quotient_count_oracle(dfa: Dfa) -> int:
    """Number of distinct left quotients, by brute force.

    Reachable states are separated by their acceptance signature over all
    words of length at most k-1 (k = reachable-state count), the classical
    sufficient horizon.
    """
    reached = {dfa.initial}
    queue = deque([dfa.initial])
    while queue:
        q = queue.popleft()
        for t in dfa.delta:
            p = t.image[q]
            if p not in reached:
                reached.add(p)
                queue.append(p)
    words = words_upto(dfa.alphabet, len(reached) - 1)
    signatures = set()
    for q in sorted(reached):
        sig = []
        for w in words:
            p = q
            for letter in w:
                p = dfa.delta[dfa.alphabet.index(letter)].image[p]
            sig.append(p in dfa.finals)
        signatures.add(tuple(sig))
    return len(signatures)


def atom_count_oracle(dfa: Dfa) -> int:
    """Number of atoms, by brute force over the joint-state product.

    Tracks the tuple (state reached from q under w, for every q); the
    distinct final-membership patterns of reachable tuples are exactly the
    bases of the non-empty atomic intersections.
    """
    start = tuple(range(dfa.n))
    seen = {start}
    queue = deque([start])
    bases = set()
    while queue:
        tup = queue.popleft()
        bases.add(frozenset(i for i, q in enumerate(tup) if q in dfa.finals))
        for t in dfa.delta:
            nxt = tuple(t.image[q] for q in tup)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return len(bases)


def separating_word(d1: Dfa, d2: Dfa) -> str | None:
    """Shortest word accepted by exactly one of the two DFAs (same alphabet)."""
    assert d1.alphabet == d2.alphabet
    start = (d1.initial, d2.initial)

    def split(pair):
        return (pair[0] in d1.finals) != (pair[1] in d2.finals)

    if split(start):
        return ""
    seen = {start}
    queue = deque([(start, "")])
    while queue:
        (p, q), word = queue.popleft()
        for i, letter in enumerate(d1.alphabet):
            nxt = (d1.delta[i].image[p], d2.delta[i].image[q])
            if split(nxt):
                return word + letter
            if nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, word + letter))
    return None


def reachable_subsets_bruteforce(nfa: Nfa) -> set[frozenset[int]]:
    """Subsets reachable in the subset construction, via frozenset BFS."""
    def step(subset: frozenset[int], letter: str) -> frozenset[int]:
        out: set[int] = set()
        for q in subset:
            out |= nfa.targets(q, letter)
        return frozenset(out)

    assert not nfa.has_epsilon, "oracle covers epsilon-free NFAs only"
    start = frozenset(nfa.initials)
    seen = {start}
    queue = deque([start])
    while queue:
        subset = queue.popleft()
        for letter in nfa.alphabet:
            nxt = step(subset, letter)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen
