"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as the
criteria execute.
"""

import json
import time

from rideal import (
    BooleanOp,
    atom_bound,
    atomaton,
    atoms_of,
    atoms_with_complexity,
    boolean,
    closed_form_atomaton_rn,
    complexity,
    concat,
    cycle,
    generate_semigroup,
    label_isomorphic,
    random_operation_audit,
    recognize_interval,
    reverse_complexity,
    star,
    state_complexities,
    syntactic_semigroup_size,
    transformation_of_word,
    transposition,
    unitary,
)
from rideal.atoms import atom_determinization_collections
from rideal.cli import cli_main
from rideal.witnesses import build_ln, build_rn

TABLE1_RIGHT_IDEAL = {
    1: [1],
    2: [2, 2],
    3: [4, 5, 4],
    4: [8, 13, 16, 8],
    5: [16, 33, 53, 43, 16],
    6: [32, 81, 156, 166, 106, 32],
    7: [64, 193, 427, 542, 462, 249, 64],
}
TABLE1_RIGHT_IDEAL_MAX = {3: 5, 4: 16, 5: 53, 6: 166, 7: 542}
TABLE1_REGULAR = {
    3: [7, 10, 10, 7],
    4: [15, 29, 43, 29, 15],
    5: [31, 76, 141, 141, 76, 31],
    6: [63, 187, 406, 501, 406, 187, 63],
}


class _Criterion:
    """Times a criterion and prints one PASS/FAIL line when it closes."""

    def __init__(self, number: int, label: str, limit_s: float | None = None):
        self.number = number
        self.label = label
        self.limit_s = limit_s

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        status = "PASS" if exc_type is None else "FAIL"
        budget = f", budget {self.limit_s:g}s" if self.limit_s else ""
        print(f"{status} criterion {self.number} ({self.label}) [{elapsed:.2f}s{budget}]")
        if exc_type is None and self.limit_s is not None:
            assert elapsed < self.limit_s, (
                f"criterion {self.number} exceeded its {self.limit_s:g}s budget"
            )
        return False


def test_criterion_01_witness_minimality():
    with _Criterion(1, "witness minimality", limit_s=1.0):
        for n in range(1, 9):
            assert complexity(build_rn(n, "ad")) == n


def test_criterion_02_syntactic_semigroup():
    with _Criterion(2, "syntactic semigroup cardinality", limit_s=60.0):
        expected = {3: 9, 4: 64, 5: 625, 6: 7776, 7: 117649}
        for n, size in expected.items():
            assert syntactic_semigroup_size(build_rn(n, "abcd")) == size == n ** (n - 1)


def test_criterion_03_quotient_complexities():
    with _Criterion(3, "quotient complexities"):
        for n in range(3, 9):
            assert state_complexities(build_rn(n, "ad")) == [n] * (n - 1) + [1]


def test_criterion_04_reverse_and_atom_count():
    with _Criterion(4, "reverse complexity and atom count", limit_s=10.0):
        for n in range(1, 9):
            assert reverse_complexity(build_rn(n, "ad")) == 2 ** (n - 1)
            assert len(atoms_of(build_rn(n, "abcd"))) == 2 ** (n - 1)


def test_criterion_05_atom_complexities_right_ideal():
    with _Criterion(5, "atom complexities meet bounds", limit_s=120.0):
        for n in range(1, 8):
            atoms = atoms_with_complexity(build_rn(n, "abcd"))
            for atom in atoms:
                assert atom.complexity == atom_bound(n, atom.cobasis_size)
            per_r = {}
            for atom in atoms:
                r = atom.cobasis_size
                per_r[r] = max(per_r.get(r, 0), atom.complexity)
            assert [per_r[r] for r in range(n)] == TABLE1_RIGHT_IDEAL[n]
            if n in TABLE1_RIGHT_IDEAL_MAX:
                assert max(per_r.values()) == TABLE1_RIGHT_IDEAL_MAX[n]


def test_criterion_06_regular_comparison_column():
    with _Criterion(6, "regular comparison column", limit_s=120.0):
        for n in range(3, 7):
            per_r = {}
            for atom in atoms_with_complexity(build_ln(n)):
                r = atom.cobasis_size
                per_r[r] = max(per_r.get(r, 0), atom.complexity)
            assert [per_r[r] for r in range(n + 1)] == TABLE1_REGULAR[n]


def test_criterion_07_closed_form_atomaton():
    with _Criterion(7, "closed-form atom NFA oracle"):
        for n in range(4, 8):
            assert label_isomorphic(
                closed_form_atomaton_rn(n), atomaton(build_rn(n, "abcd"))
            )


def test_criterion_08_interval_property():
    with _Criterion(8, "interval structure of atom DFAs", limit_s=60.0):
        for n in range(4, 7):
            at = atomaton(build_rn(n, "abcd"))
            sink = n - 1
            for state in range(len(at.labels)):
                for collection in atom_determinization_collections(at, state):
                    interval = recognize_interval(collection)
                    assert interval is not None
                    assert interval.is_empty or sink in interval.lower


def test_criterion_09_star():
    with _Criterion(9, "star complexity"):
        assert complexity(star(build_rn(1, "ad"))) == 1
        for n in range(2, 9):
            assert complexity(star(build_rn(n, "ad"))) == n + 1


def test_criterion_10_product():
    with _Criterion(10, "product complexity"):
        for m in range(1, 7):
            for n in range(2, 7):
                got = complexity(concat(build_rn(m, "abd"), build_rn(n, "abd")))
                assert got == m + 2 ** (n - 2)


def test_criterion_11_boolean_mixed_roles():
    with _Criterion(11, "boolean operations, mixed roles"):
        for m in range(3, 7):
            for n in range(3, 7):
                a, b = build_rn(m, "abd"), build_rn(n, "bad")
                assert complexity(boolean(a, b, BooleanOp.INTERSECTION)) == m * n
                assert complexity(boolean(a, b, BooleanOp.SYMMETRIC_DIFFERENCE)) == m * n
                assert complexity(boolean(a, b, BooleanOp.DIFFERENCE)) == m * n - (m - 1)
                assert complexity(boolean(a, b, BooleanOp.UNION)) == m * n - (m + n - 2)


def test_criterion_12_boolean_same_roles_unequal():
    with _Criterion(12, "boolean operations, same roles, m != n"):
        for m in range(3, 7):
            for n in range(3, 7):
                if m == n:
                    continue
                a, b = build_rn(m, "abd"), build_rn(n, "abd")
                assert complexity(boolean(a, b, BooleanOp.INTERSECTION)) == m * n
                assert complexity(boolean(a, b, BooleanOp.SYMMETRIC_DIFFERENCE)) == m * n
                assert complexity(boolean(a, b, BooleanOp.DIFFERENCE)) == m * n - (m - 1)
                assert complexity(boolean(a, b, BooleanOp.UNION)) == m * n - (m + n - 2)


def test_criterion_13_transposition_word():
    with _Criterion(13, "transposition induced by a^(n-2) b"):
        for n in range(3, 9):
            word = "a" * (n - 2) + "b"
            assert transformation_of_word(build_rn(n, "abcd"), word) == transposition(0, 1, n)


def test_criterion_14_generator_closures():
    with _Criterion(14, "symmetric group and full monoid closures"):
        for n in range(3, 7):
            factorial = 1
            for k in range(2, n + 1):
                factorial *= k
            sym = generate_semigroup(
                [("a", cycle(range(n), n)), ("b", transposition(0, 1, n))]
            )
            assert sym.size == factorial
            full = generate_semigroup(
                [
                    ("a", cycle(range(n), n)),
                    ("b", transposition(0, 1, n)),
                    ("c", unitary(n - 1, 0, n)),
                ]
            )
            assert full.size == n**n


def test_criterion_15_random_operation_oracle():
    with _Criterion(15, "word-set oracle on 200 random pairs"):
        audit = random_operation_audit(seed=0, pairs=200, max_states=4, max_len=6)
        assert audit.pairs == 200
        assert audit.all_agree, audit.mismatches[:5]


def test_criterion_16_verify_determinism(capsys):
    with _Criterion(16, "byte-identical verification reports"):
        flags = ["verify", "--n-min", "3", "--n-max", "5", "--m-max", "4", "--json"]
        assert cli_main(flags) == 0
        first = capsys.readouterr().out.encode()
        assert cli_main(flags) == 0
        second = capsys.readouterr().out.encode()
        assert first == second
        json.loads(first)  # well-formed
