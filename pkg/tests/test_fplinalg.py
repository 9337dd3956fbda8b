import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qubatch import (DimensionMismatchError, DomainError, FpVector, Subspace, contains,
                     gaussian_binomial, intersect, meets_trivially, rref, sum_subspaces)
from qubatch.fplinalg import all_vectors, intersect_all, span
from qubatch.lattice import enumerate_subspaces
from qubatch.oracle import span_elements


def S(text, p=2):
    return Subspace.from_string(text, p)


def elements(s):
    return span_elements(s.basis, s.p, s.k)


# vectors -------------------------------------------------------------------


def test_vector_arithmetic_and_text():
    a = FpVector.from_string("12", 3)
    b = FpVector.from_string("21", 3)
    assert str(a + b) == "00"
    assert str(a - b) == "21"
    assert str(-a) == "21"
    assert str(a.scale(2)) == "21"
    assert (a + b).is_zero()
    assert FpVector.from_index(a.index, 2, 3) == a


def test_vector_rejects_bad_input():
    with pytest.raises(DomainError):
        FpVector((0, 3), 3)
    with pytest.raises(DomainError):
        FpVector((0, 1), 4)
    with pytest.raises(DimensionMismatchError):
        FpVector.from_string("01", 2) + FpVector.from_string("011", 2)


def test_all_vectors_order():
    assert [str(v) for v in all_vectors(2, 3)] == ["00", "01", "02", "10", "11", "12", "20", "21", "22"]


# rref ---------------------------------------------------------------------------


def test_rref_examples():
    s = rref([(1, 1, 0), (0, 1, 1)], p=2)
    assert s.basis == ((1, 0, 1), (0, 1, 1))
    assert s.dim == 2

    t = rref([], p=2, k=3)
    assert t.is_trivial() and t.dim == 0

    d = rref([(1, 0, 0), (1, 0, 0)], p=2)
    assert d.basis == ((1, 0, 0),) and d.dim == 1


def test_rref_from_vectors_and_mixed_ambient():
    u = FpVector.from_string("110", 2)
    assert str(span(u)) == "110"
    with pytest.raises(DimensionMismatchError):
        rref([u, FpVector.from_string("11", 2)])
    with pytest.raises(DimensionMismatchError):
        rref([u, FpVector.from_string("110", 3)])
    with pytest.raises(DomainError):
        rref([])


def test_subspace_text_round_trip():
    s = S("100;011")
    assert str(s) == "100;011"
    assert S("011;111") == s
    assert str(Subspace.trivial(3, 2)) == "000"
    assert S("000") == Subspace.trivial(3, 2)


def test_subspace_rejects_non_canonical_basis():
    with pytest.raises(DomainError):
        Subspace(2, 3, ((1, 1, 0), (0, 1, 1)))


def test_contains_examples():
    s = S("101")
    assert contains(s, (1, 0, 1))
    assert contains(s, (0, 0, 0))
    assert not contains(s, (1, 0, 0))
    assert contains(S("100;010"), (1, 1, 0))


def test_intersect_examples():
    assert intersect(S("100"), S("010")).is_trivial()
    s = S("100;011")
    assert intersect(s, s) == s
    assert intersect(S("100;010"), S("100;001")) == S("100")


def test_sum_examples():
    assert sum_subspaces(S("10"), S("01")).is_full()
    s = S("101")
    assert sum_subspaces(s, Subspace.trivial(3, 2)) == s
    assert sum_subspaces(S("100"), S("011")) == S("100;011")


def test_ambient_mismatch_errors():
    with pytest.raises(DimensionMismatchError):
        intersect(S("10"), S("100"))
    with pytest.raises(DimensionMismatchError):
        sum_subspaces(S("10"), S("10", 3))
    with pytest.raises(DimensionMismatchError):
        contains(S("10"), (1, 0, 0))


def test_gaussian_binomial_examples():
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(4, 1, 2) == 15
    assert gaussian_binomial(3, 1, 3) == 13
    for k in range(6):
        assert gaussian_binomial(k, 0, 5) == 1
    with pytest.raises(DomainError):
        gaussian_binomial(3, 4, 2)
    with pytest.raises(DomainError):
        gaussian_binomial(3, -1, 2)


def test_intersect_all_and_trivial_meet():
    spaces = [S("100;010"), S("100;001"), S("110;001")]
    assert intersect_all(spaces).is_trivial()
    assert intersect_all(spaces[:2]) == S("100")
    assert not meets_trivially(S("100;010"), S("100;001"))
    assert meets_trivially(S("100"), S("010;001"))


# properties ------------------------------------------------------------------


def test_gaussian_binomial_symmetry():
    for p in (2, 3, 5):
        for k in range(13):
            for m in range(k + 1):
                assert gaussian_binomial(k, m, p) == gaussian_binomial(k, k - m, p)


def all_subspaces(k, p):
    out = [Subspace.trivial(k, p)]
    for m in range(1, k + 1):
        out += enumerate_subspaces(k, m, p).subspaces
    return out


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4)])
def test_dimension_formula_exhaustive(p, k):
    spaces = all_subspaces(k, p)
    for a, b in itertools.combinations_with_replacement(spaces, 2):
        assert sum_subspaces(a, b).dim + intersect(a, b).dim == a.dim + b.dim


@pytest.mark.parametrize("p,k", [(2, 3), (2, 4), (3, 3)])
def test_intersect_and_sum_match_element_sets(p, k):
    spaces = all_subspaces(k, p)
    for a, b in itertools.combinations(spaces, 2):
        ea, eb = elements(a), elements(b)
        assert elements(intersect(a, b)) == ea & eb
        assert elements(sum_subspaces(a, b)) == frozenset(
            tuple((x + y) % p for x, y in zip(u, v)) for u in ea for v in eb)
        assert meets_trivially(a, b) == (len(ea & eb) == 1)


@st.composite
def row_lists(draw, max_k=8):
    p = draw(st.sampled_from([2, 3, 5]))
    k = draw(st.integers(1, max_k if p == 2 else 4))
    n = draw(st.integers(0, k + 2))
    rows = draw(st.lists(st.lists(st.integers(0, p - 1), min_size=k, max_size=k),
                         min_size=n, max_size=n))
    return p, k, [tuple(r) for r in rows]


@settings(max_examples=200, deadline=None)
@given(row_lists(), st.randoms(use_true_random=False))
def test_canonical_form_unique_under_row_operations(data, rnd):
    p, k, rows = data
    s = rref(rows, p=p, k=k)
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    assert rref(shuffled, p=p, k=k) == s
    # add random multiples of other rows and rescale by units
    mixed = [list(r) for r in shuffled]
    for _ in range(3 * len(mixed)):
        if len(mixed) < 2:
            break
        i, j = rnd.sample(range(len(mixed)), 2)
        c = rnd.randrange(p)
        mixed[i] = [(x + c * y) % p for x, y in zip(mixed[i], mixed[j])]
    units = [rnd.randrange(1, p) for _ in mixed]
    mixed = [[(x * u) % p for x in r] for r, u in zip(mixed, units)]
    assert rref(mixed, p=p, k=k) == s
    # idempotence
    assert rref(s.basis, p=p, k=k) == s


@settings(max_examples=200, deadline=None)
@given(row_lists(), st.data())
def test_contains_matches_span_closure(data, draw):
    p, k, rows = data
    s = rref(rows, p=p, k=k)
    elems = span_elements(rows, p, k) if rows else frozenset({(0,) * k})
    assert len(elems) == p**s.dim
    v = tuple(draw.draw(st.lists(st.integers(0, p - 1), min_size=k, max_size=k)))
    assert contains(s, v) == (v in elems)
    for e in list(elems)[:5]:
        assert contains(s, e)


def test_contains_exhaustive_small():
    rng = random.Random(7)
    for _ in range(30):
        k = rng.randint(1, 4)
        rows = [tuple(rng.randrange(3) for _ in range(k)) for _ in range(rng.randint(0, 3))]
        s = rref(rows, p=3, k=k)
        elems = span_elements(rows, 3, k)
        for v in all_vectors(k, 3):
            assert contains(s, v) == (v.coords in elems)


def test_elements_and_mask():
    s = S("101;011")
    assert frozenset(s.elements()) == elements(s)
    assert bin(s.element_mask).count("1") == 3
