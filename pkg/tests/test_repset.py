import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from packmatch.oracle import check_representation
from packmatch.repset import (
    FieldMatrixContext,
    RepEngine,
    RepQuery,
    Triple,
    represent,
    smallest_prime_at_least,
)


def leibniz_minor(rows, cols, prime):
    """det of the Vandermonde submatrix (rows, cols) by the permutation expansion."""
    total = 0
    for perm in itertools.permutations(range(len(cols))):
        inv = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        term = (-1) ** inv
        for a, b in enumerate(perm):
            term *= pow(cols[b], rows[a], prime)
        total += term
    return total % prime


def test_smallest_prime():
    assert [smallest_prime_at_least(n) for n in (0, 1, 2, 3, 4, 12, 14, 600)] == [
        2, 2, 2, 3, 5, 13, 17, 601,
    ]


def test_minor_vector_degree_zero_row():
    ctx = FieldMatrixContext(7, 1, 0)
    for u in range(7):
        assert ctx.minor_vector((u,)).tolist() == [1]


def test_minor_vector_empty_set():
    ctx = FieldMatrixContext(5, 0, 3)
    assert ctx.dim == 1
    assert ctx.minor_vector(()).tolist() == [1]


def test_minor_vector_hand_values():
    ctx = FieldMatrixContext(3, 1, 1)
    assert [ctx.minor_vector((u,)).tolist() for u in range(3)] == [[1, 0], [1, 1], [1, 2]]


@pytest.mark.parametrize("n, s, r", [(6, 2, 1), (7, 3, 2), (5, 2, 3), (11, 4, 2)])
def test_minor_vector_matches_permutation_expansion(n, s, r):
    ctx = FieldMatrixContext(n, s, r)
    assert ctx.dim == math.comb(s + r, s)
    for X in itertools.combinations(range(n), s):
        want = [leibniz_minor(J, X, ctx.prime) for J in ctx.row_subsets]
        got = ctx.minor_vector(X)
        assert got.tolist() == want
        assert np.any(got)


def test_minor_vector_rejects_bad_input():
    ctx = FieldMatrixContext(5, 2, 1)
    with pytest.raises(ValueError):
        ctx.minor_vector((1,))
    with pytest.raises(ValueError):
        ctx.minor_vector((3, 1))
    with pytest.raises(ValueError):
        ctx.minor_vector((1, 5))


def test_r_zero_keeps_heaviest():
    a, b = Triple((0,), "a", 5), Triple((1,), "b", 7)
    assert represent(RepQuery(2, 1, 0), [a, b]) == [b]


def test_three_singletons_radius_one():
    a, b, c = Triple((0,), "a", 3), Triple((1,), "b", 2), Triple((2,), "c", 1)
    fam = [a, b, c]
    kept = represent(RepQuery(3, 1, 1), fam)
    assert kept == [a, b]
    assert check_representation(3, 1, 1, fam, kept) is None


def test_empty_family():
    assert represent(RepQuery(4, 2, 2), []) == []


def test_arity_mismatch():
    with pytest.raises(ValueError):
        represent(RepQuery(4, 2, 1), [Triple((0,), None, 1)])


def test_ties_break_by_position():
    fam = [Triple((0,), k, 4) for k in range(3)]
    assert represent(RepQuery(1, 1, 2), fam) == [fam[0]]


def test_engine_tracks_peak():
    eng = RepEngine(6)
    fam = [Triple((x,), x, x) for x in range(6)]
    assert len(eng.represent(1, 2, fam)) == 3
    assert eng.peak == 3 and eng.calls == 1


families = st.integers(1, 12).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.integers(0, min(3, n)),
        st.integers(0, 3),
    ).flatmap(
        lambda nsr: st.tuples(
            st.just(nsr),
            st.lists(
                st.tuples(
                    st.lists(st.integers(0, nsr[0] - 1), min_size=nsr[1], max_size=nsr[1], unique=True),
                    st.integers(-10, 10),
                ),
                max_size=40,
            ),
        )
    )
)


def build(raw):
    return [Triple(tuple(sorted(X)), k, w) for k, (X, w) in enumerate(raw)]


@settings(max_examples=300, deadline=None)
@given(families)
def test_representation_properties(data):
    (n, s, r), raw = data
    fam = build(raw)
    kept = represent(RepQuery(n, s, r), fam)
    assert len(kept) <= math.comb(s + r, s)
    assert all(any(t is f for f in fam) for t in kept)
    assert check_representation(n, s, r, fam, kept) is None
    again = represent(RepQuery(n, s, r), kept)
    assert check_representation(n, s, r, fam, again) is None
    assert represent(RepQuery(n, s, r), fam) == kept
