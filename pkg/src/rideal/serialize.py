"""JSON and DOT renderings of automata.

JSON uses 1-based state ids.  A DFA is {n, alphabet, delta, initial,
finals} with delta mapping each letter to its image array; an NFA is
{n, alphabet, eta, initials, finals} with eta keyed by source state then
letter (the empty-string letter is an epsilon transition).  DOT output is
deterministic: nodes ascending, edges grouped by endpoint pair with
comma-joined letters in alphabet order, finals drawn as double circles.
"""

from __future__ import annotations

import json
from typing import Any

from .automata import Dfa, EPSILON, Nfa
from .errors import InputError
from .transformations import Transformation


def dfa_to_dict(dfa: Dfa) -> dict[str, Any]:
    return {
        "n": dfa.n,
        "alphabet": list(dfa.alphabet),
        "delta": {
            letter: [q + 1 for q in t.image]
            for letter, t in zip(dfa.alphabet, dfa.delta)
        },
        "initial": dfa.initial + 1,
        "finals": sorted(q + 1 for q in dfa.finals),
    }


def dfa_from_dict(obj: dict[str, Any]) -> Dfa:
    try:
        n = int(obj["n"])
        alphabet = tuple(obj["alphabet"])
        delta = tuple(
            Transformation(tuple(int(q) - 1 for q in obj["delta"][letter]))
            for letter in alphabet
        )
        initial = int(obj["initial"]) - 1
        finals = frozenset(int(q) - 1 for q in obj["finals"])
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed DFA JSON: {exc}") from exc
    return Dfa(n=n, alphabet=alphabet, delta=delta, initial=initial, finals=finals)


def nfa_to_dict(nfa: Nfa) -> dict[str, Any]:
    eta: dict[str, dict[str, list[int]]] = {}
    for (q, letter), targets in sorted(
        nfa.eta.items(), key=lambda item: (item[0][0], item[0][1])
    ):
        eta.setdefault(str(q + 1), {})[letter] = sorted(p + 1 for p in targets)
    return {
        "n": nfa.n,
        "alphabet": list(nfa.alphabet),
        "eta": eta,
        "initials": sorted(q + 1 for q in nfa.initials),
        "finals": sorted(q + 1 for q in nfa.finals),
    }


def nfa_from_dict(obj: dict[str, Any]) -> Nfa:
    try:
        n = int(obj["n"])
        alphabet = tuple(obj["alphabet"])
        eta = {
            (int(q) - 1, letter): frozenset(int(p) - 1 for p in targets)
            for q, by_letter in obj["eta"].items()
            for letter, targets in by_letter.items()
        }
        initials = frozenset(int(q) - 1 for q in obj["initials"])
        finals = frozenset(int(q) - 1 for q in obj["finals"])
    except (KeyError, TypeError, AttributeError) as exc:
        raise InputError(f"malformed NFA JSON: {exc}") from exc
    return Nfa(n=n, alphabet=alphabet, eta=eta, initials=initials, finals=finals)


def automaton_to_json(a: Dfa | Nfa) -> str:
    obj = dfa_to_dict(a) if isinstance(a, Dfa) else nfa_to_dict(a)
    return json.dumps(obj)


def automaton_from_json(text: str) -> Dfa | Nfa:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise InputError("automaton JSON must be an object")
    if "delta" in obj:
        return dfa_from_dict(obj)
    if "eta" in obj:
        return nfa_from_dict(obj)
    raise InputError("automaton JSON needs a 'delta' (DFA) or 'eta' (NFA) field")


def _dot_lines(
    n: int,
    finals: frozenset[int],
    initials: list[int],
    edges: dict[tuple[int, int], list[str]],
) -> str:
    lines = ["digraph {", "  rankdir=LR;", '  __start [shape=none, label=""];']
    for q in range(n):
        shape = "doublecircle" if q in finals else "circle"
        lines.append(f"  {q + 1} [shape={shape}];")
    for q in sorted(initials):
        lines.append(f"  __start -> {q + 1};")
    for (src, dst), letters in sorted(edges.items()):
        label = ",".join(letters)
        lines.append(f'  {src + 1} -> {dst + 1} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dfa_to_dot(dfa: Dfa) -> str:
    edges: dict[tuple[int, int], list[str]] = {}
    for letter, t in zip(dfa.alphabet, dfa.delta):
        for q in range(dfa.n):
            edges.setdefault((q, t.image[q]), []).append(letter)
    return _dot_lines(dfa.n, dfa.finals, [dfa.initial], edges)


def nfa_to_dot(nfa: Nfa) -> str:
    letter_order = {letter: i for i, letter in enumerate(nfa.alphabet)}
    letter_order[EPSILON] = len(letter_order)
    edges: dict[tuple[int, int], list[str]] = {}
    for (q, letter), targets in nfa.eta.items():
        for p in targets:
            edges.setdefault((q, p), []).append(letter if letter != EPSILON else "ε")
    for letters in edges.values():
        letters.sort(key=lambda x: letter_order.get(x, len(letter_order)))
    return _dot_lines(nfa.n, nfa.finals, sorted(nfa.initials), edges)
