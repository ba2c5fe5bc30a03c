"""Total transformations of a finite state set and semigroup closure.

Composition order is fixed package-wide as a *right action*: states are
written to the left of the map they pass through, so ``compose(s, t)``
means "apply s first, then t".  With that convention the transformation
induced by a word uv is ``compose(t_u, t_v)``.  Getting this backwards is
the classic bug; every function here sticks to the right-action reading.

States are 0-based throughout the API; human-facing renderings (``str``,
cycle notation) are 1-based.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import InputError, ResourceLimitError

if TYPE_CHECKING:
    from .automata import Dfa

DEFAULT_SEMIGROUP_CAP = 5_000_000


@dataclass(frozen=True)
class Transformation:
    """A total map of {0..n-1} into itself, stored as its image tuple."""

    image: tuple[int, ...]

    def __post_init__(self):
        n = len(self.image)
        if n == 0:
            raise InputError("transformation must have positive degree")
        for q in self.image:
            if not 0 <= q < n:
                raise InputError(f"image entry {q} out of range for degree {n}")

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, q: int) -> int:
        return self.image[q]

    def __str__(self) -> str:
        return "[" + ",".join(str(q + 1) for q in self.image) + "]"

    def cycle_notation(self) -> str:
        """Render a permutation as its non-trivial cycles, 1-based.

        The identity renders as "()".  Raises InputError on a
        non-permutation, whose orbit structure is not a cycle decomposition.
        """
        if not is_permutation(self):
            raise InputError("cycle notation is defined for permutations only")
        seen = [False] * self.degree
        parts = []
        for start in range(self.degree):
            if seen[start] or self.image[start] == start:
                seen[start] = True
                continue
            cyc = [start]
            seen[start] = True
            q = self.image[start]
            while q != start:
                cyc.append(q)
                seen[q] = True
                q = self.image[q]
            parts.append("(" + ",".join(str(p + 1) for p in cyc) + ")")
        return "".join(parts) if parts else "()"


def identity(n: int) -> Transformation:
    return Transformation(tuple(range(n)))


def cycle(elems: Sequence[int], n: int) -> Transformation:
    """The cyclic permutation (elems[0], elems[1], ..., elems[-1]) of degree n.

    Zero or one element gives the identity.
    """
    if len(set(elems)) != len(elems):
        raise InputError("cycle elements must be pairwise distinct")
    image = list(range(n))
    for i, p in enumerate(elems):
        if not 0 <= p < n:
            raise InputError(f"cycle element {p} out of range for degree {n}")
        image[p] = elems[(i + 1) % len(elems)]
    return Transformation(tuple(image))


def transposition(p: int, q: int, n: int) -> Transformation:
    if p == q:
        raise InputError("transposition needs two distinct points")
    return cycle([p, q], n)


def unitary(p: int, q: int, n: int) -> Transformation:
    """The map sending p to q and fixing everything else (identity if p == q)."""
    if not (0 <= p < n and 0 <= q < n):
        raise InputError(f"unitary points ({p},{q}) out of range for degree {n}")
    image = list(range(n))
    image[p] = q
    return Transformation(tuple(image))


def compose(s: Transformation, t: Transformation) -> Transformation:
    """Apply s, then t: the result maps q to t(s(q))."""
    if s.degree != t.degree:
        raise InputError(f"degree mismatch: {s.degree} vs {t.degree}")
    ti = t.image
    return Transformation(tuple(ti[q] for q in s.image))


def is_permutation(t: Transformation) -> bool:
    return len(set(t.image)) == t.degree


def transformation_of_word(dfa: "Dfa", w: str) -> Transformation:
    """The transformation a non-empty word induces on a DFA's state set."""
    if len(w) == 0:
        raise InputError("the empty word induces no transformation")
    result = dfa.transformation(w[0])
    for letter in w[1:]:
        result = compose(result, dfa.transformation(letter))
    return result


@dataclass(frozen=True)
class SemigroupClosure:
    """Closure of a generator set under composition.

    ``elements`` are in breadth-first discovery order; ``witnesses`` maps
    each element to a shortest generator word inducing it (ties broken by
    generator declaration order).
    """

    degree: int
    elements: tuple[Transformation, ...]
    witnesses: dict[Transformation, str]

    @property
    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, t: Transformation) -> bool:
        return t in self.witnesses


def generate_semigroup(
    generators: Iterable[tuple[str, Transformation]],
    cap: int = DEFAULT_SEMIGROUP_CAP,
) -> SemigroupClosure:
    """Close a labeled generator set under right-composition.

    Breadth-first closure over non-empty generator words, deduplicated by
    image tuple, so the recorded witness words are shortest.  Raises
    ResourceLimitError (carrying the partial count) if the closure grows
    past ``cap``.
    """
    gens = list(generators)
    if not gens:
        raise InputError("generator set must be non-empty")
    if cap < 1:
        raise InputError("cap must be at least 1")
    n = gens[0][1].degree
    for _, t in gens:
        if t.degree != n:
            raise InputError("generators must share one degree")

    # bytes + translate gives C-speed composition for degree <= 255
    tables = [(letter, bytes(t.image) + bytes(range(n, 256))) for letter, t in gens]
    found: dict[bytes, str] = {}
    frontier: list[bytes] = []
    for letter, t in gens:
        elem = bytes(t.image)
        if elem not in found:
            found[elem] = letter
            frontier.append(elem)
    while frontier:
        next_frontier = []
        for elem in frontier:
            word = found[elem]
            for letter, table in tables:
                composed = elem.translate(table)
                if composed not in found:
                    found[composed] = word + letter
                    next_frontier.append(composed)
                    if len(found) > cap:
                        raise ResourceLimitError(
                            f"semigroup closure exceeded cap {cap}",
                            partial_count=len(found),
                        )
        frontier = next_frontier

    elements = tuple(Transformation(tuple(e)) for e in found)
    witnesses = {t: found[bytes(t.image)] for t in elements}
    return SemigroupClosure(degree=n, elements=elements, witnesses=witnesses)


def syntactic_semigroup_size(dfa: "Dfa", cap: int = DEFAULT_SEMIGROUP_CAP) -> int:
    """Size of the transition semigroup of the minimal DFA of dfa's language."""
    from .automata import minimize

    d = minimize(dfa)
    gens = [(letter, d.transformation(letter)) for letter in d.alphabet]
    return generate_semigroup(gens, cap=cap).size
