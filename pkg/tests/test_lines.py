"""Equiangular line systems: Seidel matrices, bounds, covers <-> lines."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from drackn.constructions import thas_somma
from drackn.covers import drackn_verify
from drackn.cyclotomic import CycNum, zeta
from drackn.errors import UnsupportedError, VerificationError
from drackn.groups import regular_expand
from drackn.lines import (
    SeidelMatrix,
    _root_exponent,
    absolute_bound,
    cover_to_lines,
    double_real,
    find_symmetric_conference,
    lines_to_cover,
    relative_bound,
    seidel_to_linesets,
    tight_frame_check,
    two_eigenvalue_data,
)
from drackn.quadratic import QuadNum


def test_relative_bound_values():
    assert relative_bound(9, 3) == Fraction(1, 4)
    assert relative_bound(6, 3) == Fraction(1, 5)
    assert relative_bound(5, 5) == 0
    with pytest.raises(ValueError):
        relative_bound(3, 4)
    with pytest.raises(ValueError):
        relative_bound(3, 0)
    with pytest.raises(ValueError):
        relative_bound(1, 1)


def test_absolute_bound_values():
    assert absolute_bound(3, "complex") == 9
    assert absolute_bound(7, "real") == 28
    assert absolute_bound(1, "real") == 1
    assert absolute_bound(4) == 16  # complex by default
    with pytest.raises(ValueError):
        absolute_bound(0)
    with pytest.raises(ValueError):
        absolute_bound(3, "quaternionic")


def test_seidel_matrix_validation():
    SeidelMatrix([[0, 1], [1, 0]])  # smallest legal example
    with pytest.raises(ValueError):
        SeidelMatrix([[0]])  # too small
    with pytest.raises(ValueError):
        SeidelMatrix([[0, 1, 1], [1, 0, 1]])  # not square
    with pytest.raises(ValueError):
        SeidelMatrix([[1, 1], [1, 0]])  # nonzero diagonal
    with pytest.raises(ValueError):
        SeidelMatrix([[0, 2], [2, 0]])  # entry not unit-modulus
    with pytest.raises(ValueError):
        SeidelMatrix([[0, 1], [-1, 0]])  # not Hermitian
    z = zeta(3)
    with pytest.raises(ValueError):
        SeidelMatrix([[0, z], [z.conjugate(), 0]])  # needs root_order=3
    with pytest.raises(ValueError):
        SeidelMatrix([[0, z], [z.conjugate(), 0]], root_order=2)
    with pytest.raises(ValueError):
        SeidelMatrix([[0, 1], [1, 0]], root_order=4)  # root_order must be prime
    SeidelMatrix([[0, z], [z.conjugate(), 0]], root_order=3)


def test_seidel_negate_involution():
    s = SeidelMatrix([[0, 1, -1], [1, 0, 1], [-1, 1, 0]])
    assert s.negate().negate() == s
    assert s.negate().entry(0, 1) == -1


def test_two_eigenvalue_data_k2():
    spec = two_eigenvalue_data(SeidelMatrix([[0, 1], [1, 0]]))
    assert (spec.theta, spec.tau) == (1, -1)
    assert (spec.m_theta, spec.m_tau) == (1, 1)


def test_two_eigenvalue_data_cover_block():
    cl = cover_to_lines(thas_somma(3, 2))
    spec = two_eigenvalue_data(cl.seidel)
    assert (spec.theta, spec.tau) == (2, -4)
    # block multiplicities are m / (r - 1) = 12/2 and 6/2
    assert (spec.m_theta, spec.m_tau) == (6, 3)


def test_two_eigenvalue_data_rejects_generic_matrix():
    rows = [
        [0, -1, 1, 1],
        [-1, 0, 1, 1],
        [1, 1, 0, 1],
        [1, 1, 1, 0],
    ]
    with pytest.raises(VerificationError) as exc:
        two_eigenvalue_data(SeidelMatrix(rows))
    assert exc.value.condition == "not-two-eigenvalue"


def test_cover_to_lines_933():
    cl = cover_to_lines(thas_somma(3, 2))
    lt, lth = cl.lines_tau, cl.lines_theta
    assert (lt.n, lt.d, lt.alpha_sq, lt.field) == (9, 6, Fraction(1, 16), "complex")
    assert (lth.n, lth.d, lth.alpha_sq, lth.field) == (9, 3, Fraction(1, 4), "complex")
    for lines in (lt, lth):
        assert tight_frame_check(lines)
        assert lines.alpha_sq == relative_bound(lines.n, lines.d)
    # 9 lines in complex dimension 3 meet the absolute bound d^2
    assert lth.n == absolute_bound(lth.d, lth.field)
    assert lt.n < absolute_bound(lt.d, lt.field)


def test_cover_to_lines_char_index_range():
    f = thas_somma(3, 2)
    cl1 = cover_to_lines(f, char_index=2)
    assert cl1.lines_theta.d == 3
    with pytest.raises(ValueError):
        cover_to_lines(f, char_index=0)
    with pytest.raises(ValueError):
        cover_to_lines(f, char_index=3)


def test_lines_to_cover_round_trip():
    f = thas_somma(3, 2)
    cl = cover_to_lines(f)
    arc, cert = lines_to_cover(cl.seidel, 3)
    assert (cert.params.n, cert.params.r, cert.params.c) == (9, 3, 3)
    assert cert == drackn_verify(arc)
    # folding the rebuilt cover's block gives back the same Seidel matrix
    assert cover_to_lines(arc).seidel == cl.seidel


def test_lines_to_cover_rejects_bad_parameters():
    s = cover_to_lines(thas_somma(3, 2)).seidel
    # negating swaps the eigenvalues; the derived c is 5/3
    with pytest.raises(VerificationError) as exc:
        lines_to_cover(s.negate(), 3)
    assert exc.value.condition == "parameters"
    with pytest.raises(UnsupportedError):
        lines_to_cover(s, 4)


def test_root_exponent():
    assert _root_exponent(Fraction(1), 3) == 0
    assert _root_exponent(Fraction(-1), 2) == 1
    assert _root_exponent(Fraction(-1), 3) is None
    assert _root_exponent(Fraction(1, 2), 2) is None
    z = zeta(3)
    assert _root_exponent(z, 3) == 1
    assert _root_exponent(z * z, 3) == 2
    assert _root_exponent(z, 5) is None
    assert _root_exponent(CycNum.zeta_pow(3, 0), 3) == 0
    assert _root_exponent(1 + z, 3) is None


def test_double_real_small_cases():
    # one +1 entry: two disjoint edges
    adj, fibres = double_real(SeidelMatrix([[0, 1], [1, 0]]))
    assert fibres == [(0, 1), (2, 3)]
    expect = np.zeros((4, 4), dtype=np.int64)
    for x, y in ((0, 2), (1, 3)):
        expect[x, y] = expect[y, x] = 1
    assert np.array_equal(adj, expect)
    # all +1 entries on 3 vertices: two disjoint triangles
    adj3, _ = double_real(SeidelMatrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]]))
    evens = adj3[np.ix_((0, 2, 4), (0, 2, 4))]
    odds = adj3[np.ix_((1, 3, 5), (1, 3, 5))]
    assert evens.sum() == odds.sum() == 6  # triangles
    assert adj3.sum() == 12  # and nothing between them


def test_double_real_needs_pm1_entries():
    z = zeta(3)
    s = SeidelMatrix([[0, z], [z.conjugate(), 0]], root_order=3)
    with pytest.raises(VerificationError) as exc:
        double_real(s)
    assert exc.value.condition == "entry-not-root-of-unity"


def test_conference_search_and_doubling():
    s = find_symmetric_conference(6, seed=0)
    sq = s.mat * s.mat
    assert (sq - sq.plus_scalar_diag(0)).is_zero()  # sanity on helper use
    assert all(
        sq.entry(u, v) == (5 if u == v else 0) for u in range(6) for v in range(6)
    )
    # deterministic for a fixed seed
    assert find_symmetric_conference(6, seed=0) == s
    spec = two_eigenvalue_data(s)
    assert spec.theta == QuadNum.sqrt(5)
    assert spec.tau == -QuadNum.sqrt(5)
    assert (spec.m_theta, spec.m_tau) == (3, 3)

    lt, lth = seidel_to_linesets(s)
    assert (lt.d, lth.d) == (3, 3)
    assert lt.alpha_sq == lth.alpha_sq == Fraction(1, 5)
    assert lt.field == lth.field == "real"
    assert lt.alpha_sq == relative_bound(6, 3)

    arc, cert = lines_to_cover(s, 2)
    assert (cert.params.n, cert.params.r, cert.params.c) == (6, 2, 2)
    assert cert.spectrum_str() == "5^1 sqrt(5)^3 -1^5 -sqrt(5)^3"
    adj, fibres = double_real(s)
    assert np.array_equal(adj, regular_expand(arc))


def test_conference_search_rejects_odd_order():
    with pytest.raises(ValueError):
        find_symmetric_conference(5)


def test_seidel_to_linesets_dimension_split():
    s = SeidelMatrix([[0, 1], [1, 0]])
    lt, lth = seidel_to_linesets(s)
    assert lt.d + lth.d == s.n
    assert (lt.d, lth.d) == (1, 1)
