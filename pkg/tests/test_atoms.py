import random
from dataclasses import replace

import pytest

from rideal import (
    Dfa,
    EMPTY_INTERVAL,
    InputError,
    atom_bound,
    atom_complexity,
    atom_table,
    atomaton,
    atoms_of,
    atoms_with_complexity,
    closed_form_atomaton_rn,
    determinize,
    identity,
    label_isomorphic,
    minimize,
    recognize_interval,
    reverse,
    reverse_complexity,
)
from rideal.atoms import atom_determinization_collections
from rideal.witnesses import build_ln, build_rn

from helpers import atom_count_oracle, random_dfa


def one_state_sigma_star():
    return Dfa(n=1, alphabet=("a",), delta=(identity(1),), initial=0,
               finals=frozenset({0}))


# --- the atoms NFA -------------------------------------------------------


def test_atomaton_counts():
    assert len(atomaton(build_rn(4)).labels) == 8
    assert len(atomaton(one_state_sigma_star()).labels) == 1


def test_atomaton_count_matches_bruteforce():
    for d in (build_ln(3), build_ln(4), build_rn(4), build_rn(5, "ad")):
        assert len(atomaton(d).labels) == atom_count_oracle(minimize(d))


def test_atomaton_reverse_is_deterministic():
    at = atomaton(build_rn(5))
    rev = reverse(at.nfa)
    assert len(rev.initials) == 1
    for q in range(rev.n):
        for letter in rev.alphabet:
            assert len(rev.targets(q, letter)) <= 1


def test_atomaton_initials_and_final():
    at = atomaton(build_rn(4))
    assert all(0 in label for label in at.initial_labels)
    assert at.final_label == frozenset({3})


def test_atomaton_no_empty_states_for_right_ideals():
    # every atom state accepts something: determinize from it and look for a final
    at = atomaton(build_rn(4))
    for state in range(len(at.labels)):
        det, _ = determinize(replace(at.nfa, initials=frozenset({state})))
        assert det.finals


def test_atom_count_equals_reverse_complexity():
    rng = random.Random(31)
    samples = [build_rn(n) for n in range(1, 7)] + [build_ln(n) for n in range(2, 6)]
    samples += [random_dfa(rng, 5) for _ in range(10)]
    for d in samples:
        assert len(atoms_of(d)) == reverse_complexity(d)


# --- atoms_of -------------------------------------------------------------


def test_atoms_of_witnesses():
    atoms5 = atoms_of(build_rn(5))
    assert len(atoms5) == 16
    assert all(4 in a.basis for a in atoms5)
    assert all(4 not in a.cobasis for a in atoms5)

    atoms1 = atoms_of(build_rn(1))
    assert len(atoms1) == 1
    assert atoms1[0].cobasis == frozenset()

    assert len(atoms_of(build_rn(2))) == 2


def test_atoms_ordered_by_basis_as_binary():
    atoms = atoms_of(build_rn(4))
    keys = [sum(1 << q for q in a.basis) for a in atoms]
    assert keys == sorted(keys)


def test_atom_basis_cobasis_partition():
    for a in atoms_of(build_rn(5)):
        assert a.basis | a.cobasis == frozenset(range(5))
        assert not (a.basis & a.cobasis)


# --- atom complexity -------------------------------------------------------


def test_atom_complexity_examples():
    assert atom_complexity(build_rn(5), frozenset(range(5))) == 16
    assert atom_complexity(build_rn(4), frozenset({3})) == 8
    by_r = {
        a.cobasis_size: a.complexity for a in atoms_with_complexity(build_rn(5))
    }
    assert by_r[2] == 53


def test_atom_complexity_rejects_non_atoms():
    with pytest.raises(InputError):
        atom_complexity(build_rn(4), frozenset({0}))  # misses the sink


def test_atom_complexity_needs_no_minimization():
    # the single-atom determinization is already minimal
    for n in range(2, 7):
        at = atomaton(build_rn(n))
        for state in range(len(at.labels)):
            det, _ = determinize(replace(at.nfa, initials=frozenset({state})))
            assert minimize(det).n == det.n


def test_atom_complexities_meet_bound():
    for n in range(1, 7):
        for a in atoms_with_complexity(build_rn(n)):
            assert a.complexity == atom_bound(n, a.cobasis_size)


# --- the bound -------------------------------------------------------------


def test_atom_bound_values():
    assert atom_bound(4, 1) == 13
    assert atom_bound(4, 2) == 16
    assert atom_bound(7, 3) == 542
    for n in range(1, 9):
        assert atom_bound(n, 0) == 2 ** (n - 1)


def test_atom_bound_range_errors():
    with pytest.raises(InputError):
        atom_bound(4, 4)
    with pytest.raises(InputError):
        atom_bound(4, -1)
    with pytest.raises(InputError):
        atom_bound(0, 0)


def test_atom_bound_matches_interval_count_form():
    from math import comb

    for n in range(1, 13):
        for r in range(1, n):
            alt = 1 + sum(
                comb(n - 1, u - 1) * comb(u - 1, v - 1)
                for u in range(n - r, n)
                for v in range(1, n - r + 1)
            )
            assert atom_bound(n, r) == alt


# --- closed form ------------------------------------------------------------


def test_closed_form_rules_n4():
    at = closed_form_atomaton_rn(4)
    s24 = at.state_of(frozenset({1, 3}))  # {2,4} 1-based
    succ_c = {frozenset(at.labels[q]) for q in at.nfa.targets(s24, "c")}
    assert succ_c == {frozenset({1, 3}), frozenset({1, 2, 3})}
    assert at.nfa.targets(s24, "d") == frozenset()


def test_closed_form_structure():
    at = closed_form_atomaton_rn(5)
    assert len(at.labels) == 16
    assert {at.labels[q] for q in at.nfa.initials} == {
        label for label in at.labels if 0 in label
    }
    assert at.final_label == frozenset({4})


def test_closed_form_matches_pipeline():
    for n in range(3, 8):
        assert label_isomorphic(closed_form_atomaton_rn(n), atomaton(build_rn(n)))


def test_closed_form_small_n_rejected():
    with pytest.raises(InputError):
        closed_form_atomaton_rn(2)


# --- intervals ---------------------------------------------------------------


def test_recognize_interval_examples():
    two = recognize_interval([{1, 3}, {1, 2, 3}])
    assert two is not None
    assert (two.lower, two.upper) == (frozenset({1, 3}), frozenset({1, 2, 3}))
    assert two.type == (2, 3)

    single = recognize_interval([{0, 2}])
    assert (single.lower, single.upper) == (frozenset({0, 2}), frozenset({0, 2}))

    assert recognize_interval([{3}, {1, 3}, {2, 3}]) is None

    empty = recognize_interval([])
    assert empty is EMPTY_INTERVAL or empty == EMPTY_INTERVAL
    assert empty.is_empty and empty.type is None


def test_interval_property_of_atom_dfas():
    for n in (4, 5):
        at = atomaton(build_rn(n))
        sink = n - 1
        for state in range(len(at.labels)):
            for collection in atom_determinization_collections(at, state):
                interval = recognize_interval(collection)
                assert interval is not None
                if not interval.is_empty:
                    assert sink in interval.lower


def test_same_type_intervals_strongly_connected_under_ab():
    # permutation letters keep interval types; each type class is one orbit
    for n in (4, 5):
        at = atomaton(build_rn(n))
        for state in range(len(at.labels)):
            det, subsets = determinize(replace(at.nfa, initials=frozenset({state})))
            types = []
            for subset in subsets:
                interval = recognize_interval([at.labels[q] for q in subset])
                types.append(interval.type if interval else None)
            adjacency = {q: set() for q in range(det.n)}
            for letter in ("a", "b"):
                t = det.transformation(letter)
                for q in range(det.n):
                    p = t.image[q]
                    if types[q] is not None and types[q] == types[p]:
                        adjacency[q].add(p)
                        adjacency[p].add(q)
            for wanted in set(types) - {None}:
                members = [q for q in range(det.n) if types[q] == wanted]
                seen = {members[0]}
                stack = [members[0]]
                while stack:
                    q = stack.pop()
                    for p in adjacency[q]:
                        if p not in seen:
                            seen.add(p)
                            stack.append(p)
                assert seen == set(members)


# --- the table ----------------------------------------------------------------


def test_atom_table_sample_cells():
    table = atom_table(5)
    assert table.cell(5, 0).right_ideal == 16
    assert table.cell(5, 2).right_ideal == 53
    assert table.cell(5, 2).regular == 141
    assert table.cell(3, 1).right_ideal == 5
    assert table.cell(3, 1).regular == 10
    assert table.cell(5, 5).impossible
    assert table.cell(5, 5).right_ideal is None
    assert table.max_row[4] == (16, 43)
    assert table.ratio_row[4][0] == pytest.approx(3.20, abs=0.005)
    assert table.ratio_row[4][1] == pytest.approx(4.30, abs=0.005)
