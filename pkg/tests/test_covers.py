"""Arc tables, gauge normalization, full cover verification, and quotients."""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
import pytest

from drackn.constructions import dcff, thas_somma
from drackn.covers import (
    ArcMatrix,
    arc_from_adjacency,
    drackn_verify,
    normalize,
    quotient,
    validate_cover,
)
from drackn.errors import (
    CoverStructureError,
    GroupMismatchError,
    UnsupportedError,
    VerificationError,
)
from drackn.groups import AbelianGroup, regular_expand


def cover_933() -> ArcMatrix:
    return thas_somma(3, 2)


def test_verify_933_certificate():
    cert = drackn_verify(cover_933())
    p = cert.params
    assert (p.n, p.r, p.c) == (9, 3, 3)
    assert p.delta == -2
    assert p.theta == 2
    assert p.tau == -4
    assert cert.spectrum_str() == "8^1 2^12 -1^8 -4^6"
    assert cert.checks_passed == (
        "arc-structure",
        "regular",
        "connected",
        "antipodal",
        "distance-regular",
        "character-blocks",
        "multiplicities-integral",
    )


def test_certificate_spectrum_invariants():
    cert = drackn_verify(cover_933())
    n, r = cert.params.n, cert.params.r
    assert sum(m for _, m in cert.spectrum) == r * n
    assert sum(ev * m for ev, m in cert.spectrum) == 0
    assert cert.spectrum[0] == (Fraction(8), 1)


def test_normalize_first_row_is_identity():
    f = cover_933()
    g = normalize(f)
    ident = g.group.identity
    assert all(g.entry(0, v) == ident for v in range(1, g.n))
    assert g.is_normalized()
    # normalizing twice changes nothing
    assert normalize(g) == g


def test_gauge_shift_leaves_certificate_unchanged():
    f = cover_933()
    base = drackn_verify(f)
    rng = random.Random(41)
    G = f.group
    els = G.elements()
    shifts = [rng.choice(els) for _ in range(f.n)]
    entries = [
        [
            None
            if u == v
            else G.add(G.sub(f.entry(u, v), shifts[u]), shifts[v])
            for v in range(f.n)
        ]
        for u in range(f.n)
    ]
    shifted = ArcMatrix(G, entries)
    cert = drackn_verify(shifted)
    assert cert == base
    assert normalize(shifted) == normalize(f)


def test_validate_cover_accepts_valid_table():
    validate_cover(cover_933())  # must not raise


def test_arc_matrix_rejects_bad_tables():
    Z2 = AbelianGroup((2,))
    e, x = (0,), (1,)
    # diagonal must be None
    with pytest.raises(CoverStructureError):
        ArcMatrix(Z2, [[e, x], [x, e]])
    # antisymmetry: f(v, u) must equal -f(u, v)
    Z3 = AbelianGroup((3,))
    with pytest.raises(CoverStructureError):
        ArcMatrix(Z3, [[None, (1,)], [(1,), None]])
    # ragged rows
    with pytest.raises(CoverStructureError):
        ArcMatrix(Z2, [[None, x], [x]])
    # entries of the wrong shape for the group are rejected outright
    with pytest.raises(GroupMismatchError):
        ArcMatrix(Z2, [[None, (2, 0)], [(2, 0), None]])


def test_verify_disconnected_expansion_fails():
    # all-identity arc table expands to r disjoint copies of K_n
    Z2 = AbelianGroup((2,))
    e = (0,)
    n = 5
    entries = [[None if u == v else e for v in range(n)] for u in range(n)]
    f = ArcMatrix(Z2, entries)
    with pytest.raises(VerificationError) as exc:
        drackn_verify(f)
    assert exc.value.condition == "not-connected"


def test_verify_needs_prime_exponent_group():
    Z4 = AbelianGroup((4,))
    n = 3
    e = (0,)
    entries = [[None if u == v else e for v in range(n)] for u in range(n)]
    with pytest.raises(UnsupportedError):
        drackn_verify(ArcMatrix(Z4, entries))


def test_verify_irregular_c_fails():
    # swap one arc of the (9,3,3) table: the expansion stays a cover of K_9
    # wrt matchings but the distance partition degenerates
    f = cover_933()
    G = f.group
    entries = [list(row) for row in f.entries]
    u, v = 0, 1
    bad = G.add(f.entry(u, v), (1,))
    entries[u][v] = bad
    entries[v][u] = G.neg(bad)
    with pytest.raises(VerificationError):
        drackn_verify(ArcMatrix(G, entries))


def test_quotient_no_generators_is_identity():
    f = cover_933()
    assert quotient(f, []) is f
    assert quotient(f, [(0,)]) is f  # identity generator is discarded


def test_quotient_by_full_group_gives_trivial_cover():
    f = dcff(1, 1)  # (4, 2, 2) with deck group Z/2
    q = quotient(f, [(1,)])
    assert q.group.order == 1
    assert q.group.orders == ()
    assert all(q.entry(u, v) == () for u in range(q.n) for v in range(q.n) if u != v)


def test_quotient_order_two_subgroups_of_dcff13():
    f = dcff(1, 3)  # (16, 8, 2) with deck group (Z/2)^3
    G = f.group
    for gen in G.elements():
        if gen == G.identity:
            continue
        q = quotient(f, [gen])
        cert = drackn_verify(q)
        assert (cert.params.n, cert.params.r, cert.params.c) == (16, 4, 4)


def test_quotient_composition():
    f = dcff(1, 3)
    g1 = (1, 0, 0)
    both = quotient(f, [g1, (0, 1, 0)])
    step1 = quotient(f, [g1])  # pivot coord 0 dropped; coords (1, 2) remain
    step2 = quotient(step1, [(1, 0)])  # original (0, 1, 0) in the new coords
    assert both == step2
    cert = drackn_verify(both)
    assert (cert.params.n, cert.params.r, cert.params.c) == (16, 2, 8)


def test_quotient_needs_elementary_abelian():
    Z4 = AbelianGroup((4,))
    n = 3
    e = (0,)
    entries = [[None if u == v else e for v in range(n)] for u in range(n)]
    f = ArcMatrix(Z4, entries)
    with pytest.raises(UnsupportedError):
        quotient(f, [(2,)])


def test_arc_from_adjacency_round_trip():
    f = cover_933()
    adj = regular_expand(f)
    r = f.group.order
    fibres = [tuple(range(u * r, (u + 1) * r)) for u in range(f.n)]
    g = arc_from_adjacency(adj, fibres, f.group)
    assert g == f
    cert = drackn_verify(g)
    assert (cert.params.n, cert.params.r, cert.params.c) == (9, 3, 3)


def test_arc_from_adjacency_shuffled_fibre_order_r2():
    # for r = 2 any vertex order inside fibres is compatible with the deck action
    f = dcff(1, 1)
    adj = regular_expand(f)
    fibres = [(1, 0), (2, 3), (5, 4), (6, 7)]
    g = arc_from_adjacency(adj, fibres, f.group)
    cert = drackn_verify(g)
    assert (cert.params.n, cert.params.r, cert.params.c) == (4, 2, 2)


def test_arc_from_adjacency_rejects_fibre_internal_edge():
    # complete graph on 8 vertices has edges inside any claimed fibre
    size = 8
    adj = np.ones((size, size), dtype=np.int64) - np.eye(size, dtype=np.int64)
    fibres = [(0, 1), (2, 3), (4, 5), (6, 7)]
    with pytest.raises(CoverStructureError) as exc:
        arc_from_adjacency(adj, fibres, AbelianGroup((2,)))
    assert exc.value.condition == "fibre-internal-edge"


def test_arc_from_adjacency_rejects_bad_inputs():
    Z2 = AbelianGroup((2,))
    with pytest.raises(CoverStructureError) as exc:
        arc_from_adjacency(np.zeros((3, 4), dtype=np.int64), [(0, 1)], Z2)
    assert exc.value.condition == "not-square"
    # partition must cover 0..size-1 with cells of size r
    adj = regular_expand(dcff(1, 1))
    with pytest.raises(CoverStructureError) as exc:
        arc_from_adjacency(adj, [(0, 1), (2, 3), (4, 5), (6, 6)], Z2)
    assert exc.value.condition == "fibre-partition"
    asym = np.zeros((4, 4), dtype=np.int64)
    asym[0, 1] = 1
    with pytest.raises(CoverStructureError) as exc:
        arc_from_adjacency(asym, [(0, 1), (2, 3)], Z2)
    assert exc.value.condition == "not-symmetric"


def test_arc_from_adjacency_rejects_non_matching():
    # doubled edge pattern between two fibres: not a perfect matching
    adj = np.zeros((4, 4), dtype=np.int64)
    for x, y in ((0, 2), (0, 3), (1, 2), (1, 3)):
        adj[x, y] = adj[y, x] = 1
    with pytest.raises(CoverStructureError) as exc:
        arc_from_adjacency(adj, [(0, 1), (2, 3)], AbelianGroup((2,)))
    assert exc.value.condition == "non-matching"


def test_arc_from_adjacency_rejects_non_translation_matching():
    # r = 3: reorder one fibre so its matchings are no longer translations
    f = cover_933()
    adj = regular_expand(f)
    r = 3
    fibres = [tuple(range(u * r, (u + 1) * r)) for u in range(f.n)]
    fibres[3] = (fibres[3][0], fibres[3][2], fibres[3][1])
    with pytest.raises(CoverStructureError) as exc:
        arc_from_adjacency(adj, fibres, f.group)
    assert exc.value.condition == "non-translation-matching"
