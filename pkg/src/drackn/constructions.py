"""Explicit cover constructions and the generalized Hadamard bridge.

Two infinite families are built here:

* ``thas_somma(p, m, s)``: vertices GF(p)^m, deck group (Z/p)^s, arc values
  B(v, w) for an s-tuple B of alternating bilinear forms such that
  w -> B(v, w) is onto for every v != 0.  Parameters (p^m, p^s, p^(m-s)).

* ``dcff(t, d)``: a characteristic-2 family from a skew product on
  K = GF(2^(td)) over F = GF(2^t) and a symmetric Latin square on F.
  Vertices K x F, deck group (Z/2)^(td), parameters
  (2^(t(d+1)), 2^(td), 2^t), with d odd.

Both constructions verify their output before returning it.

A cover with delta = -2 (equivalently n = rc) is the same thing as a
self-adjoint generalized Hadamard matrix with constant diagonal over the
deck group; ``cover_to_gh`` / ``gh_to_cover`` convert between the two views
and ``gh_validate`` checks the Hadamard row-pair identity itself.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .arith import gfp_rank, is_prime
from .covers import ArcMatrix, CoverCertificate, drackn_verify
from .errors import (
    CoverStructureError,
    RoutesDisagreeError,
    UnsupportedError,
    VerificationError,
)
from .gf import FFElement, FiniteField, embed_subfield
from .groups import AbelianGroup

#: Largest field size for which the exhaustive skew-product checks run.
_SKEW_CHECK_LIMIT = 1 << 10


# -- alternating-form covers --------------------------------------------------


@dataclass(frozen=True)
class AlternatingForm:
    """An s-tuple of alternating m x m matrices over GF(p), onto as a pencil.

    Encodes B: GF(p)^m x GF(p)^m -> GF(p)^s by B(v, w)_k = v M_k w^T.  Each
    M_k must be alternating (M^T = -M with zero diagonal, stated explicitly
    so p = 2 is covered), and for every v != 0 the stacked s x m matrix
    (v M_1; ...; v M_s) must have rank s, making w -> B(v, w) onto.
    """

    p: int
    m: int
    s: int
    mats: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if not 1 <= self.s <= self.m:
            raise ValueError(f"need 1 <= s <= m, got s={self.s}, m={self.m}")
        mats = tuple(
            tuple(tuple(int(x) % self.p for x in row) for row in mat) for mat in self.mats
        )
        object.__setattr__(self, "mats", mats)
        if len(mats) != self.s:
            raise ValueError(f"expected {self.s} matrices, got {len(mats)}")
        for k, mat in enumerate(mats):
            if len(mat) != self.m or any(len(row) != self.m for row in mat):
                raise ValueError(f"matrix {k} is not {self.m} x {self.m}")
            for i in range(self.m):
                if mat[i][i] != 0:
                    raise ValueError(f"matrix {k} has nonzero diagonal entry at {i}")
                for j in range(self.m):
                    if (mat[i][j] + mat[j][i]) % self.p != 0:
                        raise ValueError(f"matrix {k} is not alternating at ({i},{j})")
        for v in itertools.product(range(self.p), repeat=self.m):
            if not any(v):
                continue
            stacked = [
                [sum(v[i] * mat[i][j] for i in range(self.m)) % self.p for j in range(self.m)]
                for mat in mats
            ]
            if gfp_rank(stacked, self.p) != self.s:
                raise ValueError(
                    f"form pencil is not onto at v = {v}: rank < {self.s}"
                )

    def apply(self, v, w) -> tuple[int, ...]:
        return tuple(
            sum(v[i] * mat[i][j] * w[j] for i in range(self.m) for j in range(self.m))
            % self.p
            for mat in self.mats
        )


def standard_symplectic(p: int, m: int) -> AlternatingForm:
    """The block-diagonal symplectic form on GF(p)^m (m even), as s = 1 pencil."""
    if m % 2 or m < 2:
        raise ValueError(f"the standard symplectic form needs even m >= 2, got {m}")
    mat = [[0] * m for _ in range(m)]
    for b in range(0, m, 2):
        mat[b][b + 1] = 1
        mat[b + 1][b] = (-1) % p
    return AlternatingForm(p, m, 1, (tuple(tuple(row) for row in mat),))


def thas_somma(p: int, m: int, s: int = 1, form: AlternatingForm | None = None) -> ArcMatrix:
    """Cover of K_{p^m} with deck group (Z/p)^s from an alternating form pencil.

    With the default (s = 1, m even) standard symplectic form, or any valid
    ``AlternatingForm``, this produces a verified (p^m, p^s, p^(m-s)) cover.
    """
    if form is None:
        if s != 1 or m % 2:
            raise UnsupportedError(
                "no default form for s > 1 or odd m: pass an AlternatingForm"
            )
        form = standard_symplectic(p, m)
    if (form.p, form.m, form.s) != (p, m, s):
        raise ValueError(
            f"form is over (p={form.p}, m={form.m}, s={form.s}), "
            f"requested (p={p}, m={m}, s={s})"
        )
    vertices = list(itertools.product(range(p), repeat=m))
    n = len(vertices)
    group = AbelianGroup((p,) * s)
    entries: list[list] = [[None] * n for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            val = form.apply(vertices[u], vertices[v])
            entries[u][v] = val
            entries[v][u] = group.neg(val)
    arc = ArcMatrix(group, entries)
    cert = drackn_verify(arc)
    want = (p**m, p**s, p ** (m - s))
    got = (cert.params.n, cert.params.r, cert.params.c)
    if got != want:
        raise RoutesDisagreeError(f"alternating-form cover verified as {got}, want {want}")
    return arc


# -- characteristic-2 skew-product covers -------------------------------------


@dataclass(frozen=True)
class SkewProduct:
    """A biadditive product K x K -> K (K = GF(2^(td)), F = GF(2^t)) that is

    * F-homogeneous in each slot: (sx)*y = s(x*y) = x*(sy) for s in F,
    * square-bijective: x -> x*x is a bijection of K, and
    * F-commuting: x*y = y*x exactly when x and y are F-dependent.

    The product is stored by its values on basis pairs and extended
    biadditively.  ``default_skew`` uses x*y = x . y^(2^t).
    """

    t: int
    d: int
    field: FiniteField
    subfield: FiniteField
    table: tuple[tuple[FFElement, ...], ...]

    def __post_init__(self):
        td = self.t * self.d
        if len(self.table) != td or any(len(row) != td for row in self.table):
            raise ValueError(f"skew table must be {td} x {td} over GF(2^{td})")

    def mul(self, x: FFElement, y: FFElement) -> FFElement:
        acc = self.field.zero
        for a, xa in enumerate(x.coeffs):
            if not xa:
                continue
            row = self.table[a]
            for b, yb in enumerate(y.coeffs):
                if yb:
                    acc = acc + row[b]
        return acc

    def validate(self) -> None:
        K, F = self.field, self.subfield
        if K.order > _SKEW_CHECK_LIMIT:
            raise UnsupportedError(
                f"exhaustive skew validation is limited to |K| <= {_SKEW_CHECK_LIMIT}"
            )
        emb = embed_subfield(F, K)
        basis = [K.element(tuple(1 if i == a else 0 for i in range(K.t))) for a in range(K.t)]
        for s in F.elements():
            se = emb[s]
            for ea in basis:
                for eb in basis:
                    prod = self.mul(ea, eb)
                    if self.mul(se * ea, eb) != se * prod or self.mul(ea, se * eb) != se * prod:
                        raise ValueError(
                            f"skew product is not F-homogeneous at s={s.coeffs}, "
                            f"basis pair ({ea.coeffs}, {eb.coeffs})"
                        )
        squares = {self.mul(x, x).coeffs for x in K.elements()}
        if len(squares) != K.order:
            raise ValueError("x -> x*x is not a bijection")
        lines: dict[tuple, frozenset] = {}
        f_scalars = [emb[s] for s in F.elements()]
        for x in K.elements():
            lines[x.coeffs] = frozenset((se * x).coeffs for se in f_scalars)
        for x in K.elements():
            for y in K.elements():
                commutes = self.mul(x, y) == self.mul(y, x)
                dependent = y.coeffs in lines[x.coeffs] or x.coeffs in lines[y.coeffs]
                if commutes != dependent:
                    raise ValueError(
                        f"commuting/F-dependence mismatch at ({x.coeffs}, {y.coeffs})"
                    )


def default_skew(t: int, d: int) -> SkewProduct:
    """The skew product x*y = x . y^(2^t) on GF(2^(td))."""
    K = FiniteField(2, t * d)
    F = FiniteField(2, t)
    basis = [K.element(tuple(1 if i == a else 0 for i in range(K.t))) for a in range(K.t)]
    table = tuple(
        tuple(ea * eb.frobenius(t) for eb in basis) for ea in basis
    )
    return SkewProduct(t=t, d=d, field=K, subfield=F, table=table)


@dataclass(frozen=True)
class LatinSquare:
    """A symmetric Latin square on the elements of GF(2^t)."""

    field: FiniteField
    table: tuple[tuple[FFElement, ...], ...]

    def __post_init__(self):
        q = self.field.order
        els = self.field.elements()
        if len(self.table) != q or any(len(row) != q for row in self.table):
            raise ValueError(f"latin table must be {q} x {q}")
        full = set(e.coeffs for e in els)
        for i, row in enumerate(self.table):
            if {e.coeffs for e in row} != full:
                raise ValueError(f"row {i} is not a permutation of the field")
            for j in range(q):
                if self.table[i][j] != self.table[j][i]:
                    raise ValueError(f"latin square is not symmetric at ({i},{j})")

    def value(self, i: int, j: int) -> FFElement:
        return self.table[i][j]


def default_latin(t: int) -> LatinSquare:
    """s(i, j) = i + j on GF(2^t)."""
    F = FiniteField(2, t)
    els = list(F.elements())
    table = tuple(tuple(a + b for b in els) for a in els)
    return LatinSquare(field=F, table=table)


def dcff(
    t: int,
    d: int,
    skew: SkewProduct | None = None,
    latin: LatinSquare | None = None,
) -> ArcMatrix:
    """Characteristic-2 cover with parameters (2^(t(d+1)), 2^(td), 2^t), d odd.

    Vertices are pairs (a, i) in GF(2^(td)) x GF(2^t); the arc value is

        f((a,i), (b,j)) = a*b + b*a + s(i,j) (a*a + b*b)

    computed in GF(2^(td)) and read off as a (Z/2)^(td) element.
    """
    if t < 1 or d < 1:
        raise ValueError(f"need t >= 1 and d >= 1, got t={t}, d={d}")
    if d % 2 == 0:
        raise UnsupportedError(f"the skew-product family needs odd d, got {d}")
    if skew is None:
        skew = default_skew(t, d)
    if (skew.t, skew.d) != (t, d):
        raise ValueError(f"skew product is for (t={skew.t}, d={skew.d})")
    if latin is None:
        latin = default_latin(t)
    K, F = skew.field, skew.subfield
    if latin.field != F:
        raise ValueError("latin square must live on the skew product's subfield")
    skew.validate()
    emb = embed_subfield(F, K)
    f_els = list(F.elements())
    vertices = [(a, i) for a in K.elements() for i in range(len(f_els))]
    n = len(vertices)
    group = AbelianGroup((2,) * (t * d))
    square = {a.coeffs: skew.mul(a, a) for a in K.elements()}
    entries: list[list] = [[None] * n for _ in range(n)]
    for u in range(n):
        a, i = vertices[u]
        for v in range(u + 1, n):
            b, j = vertices[v]
            s_ij = emb[latin.value(i, j)]
            val = skew.mul(a, b) + skew.mul(b, a) + s_ij * (square[a.coeffs] + square[b.coeffs])
            entries[u][v] = val.coeffs
            entries[v][u] = val.coeffs  # -x = x in characteristic 2
    arc = ArcMatrix(group, entries)
    cert = drackn_verify(arc)
    want = (2 ** (t * (d + 1)), 2 ** (t * d), 2**t)
    got = (cert.params.n, cert.params.r, cert.params.c)
    if got != want:
        raise RoutesDisagreeError(f"skew-product cover verified as {got}, want {want}")
    return arc


# -- generalized Hadamard bridge ----------------------------------------------


class GHMatrix:
    """A square matrix with entries in an abelian group (diagonal included)."""

    __slots__ = ("group", "entries")

    def __init__(self, group: AbelianGroup, entries):
        rows = tuple(tuple(group.coerce(e) for e in row) for row in entries)
        n = len(rows)
        if n < 1 or any(len(row) != n for row in rows):
            raise CoverStructureError("not-square", f"need a square table, got {n} rows")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("GHMatrix is immutable")

    @property
    def n(self) -> int:
        return len(self.entries)

    def entry(self, u: int, v: int):
        return self.entries[u][v]

    def __eq__(self, other):
        if not isinstance(other, GHMatrix):
            return NotImplemented
        return self.group == other.group and self.entries == other.entries

    def __hash__(self):
        return hash((self.group, self.entries))

    def __repr__(self):
        return f"GHMatrix(n={self.n}, group={self.group})"


def _gh_defect(h: GHMatrix) -> str | None:
    """None if h satisfies the generalized Hadamard row-pair identity, else
    a witness string."""
    n, group = h.n, h.group
    r = group.order
    if n % r:
        return f"order {n} is not a multiple of the group order {r}"
    lam = n // r
    for u in range(n):
        for v in range(u + 1, n):
            counts = Counter(
                group.sub(h.entry(u, k), h.entry(v, k)) for k in range(n)
            )
            if any(counts[g] != lam for g in group.elements()):
                worst = max(group.elements(), key=lambda g: abs(counts[g] - lam))
                return (
                    f"rows {u},{v}: difference {worst} appears "
                    f"{counts[worst]} times, want {lam}"
                )
    return None


def gh_validate(h: GHMatrix) -> bool:
    """True iff every row pair's differences hit each group element n/r times."""
    return _gh_defect(h) is None


def cover_to_gh(f: ArcMatrix) -> GHMatrix:
    """View a delta = -2 cover (n = rc) as a generalized Hadamard matrix.

    The arc table with identity diagonal is itself the Hadamard matrix; this
    holds exactly when delta = -2, and other covers raise
    ``UnsupportedError``.
    """
    cert = drackn_verify(f)
    if cert.params.delta != -2:
        raise UnsupportedError(
            f"the Hadamard view needs delta = -2 (n = rc), got delta = {cert.params.delta}"
        )
    g = f.group
    n = f.n
    entries = [
        [g.identity if u == v else f.entry(u, v) for v in range(n)] for u in range(n)
    ]
    h = GHMatrix(g, entries)
    defect = _gh_defect(h)
    if defect is not None:
        raise RoutesDisagreeError(f"verified delta=-2 cover fails the Hadamard identity: {defect}")
    return h


def gh_to_cover(h: GHMatrix) -> tuple[ArcMatrix, CoverCertificate]:
    """Rebuild and verify the cover of a self-adjoint generalized Hadamard
    matrix with constant diagonal.

    Requires h(v,u) = -h(u,v) for all u, v (so twice the diagonal is zero)
    and a constant diagonal g0; the arc table is h(u,v) - g0 off the
    diagonal.  The verified cover must come out with n = rc.
    """
    group = h.group
    n = h.n
    for u in range(n):
        for v in range(n):
            if h.entry(v, u) != group.neg(h.entry(u, v)):
                raise VerificationError(
                    "gh-not-self-adjoint", f"h({v},{u}) != -h({u},{v})"
                )
    g0 = h.entry(0, 0)
    if any(h.entry(u, u) != g0 for u in range(n)):
        raise VerificationError("gh-diagonal", "diagonal is not constant")
    defect = _gh_defect(h)
    if defect is not None:
        raise VerificationError("gh-row-pairs", defect)
    entries = [
        [None if u == v else group.sub(h.entry(u, v), g0) for v in range(n)]
        for u in range(n)
    ]
    arc = ArcMatrix(group, entries)
    cert = drackn_verify(arc)
    if cert.params.n != cert.params.r * cert.params.c:
        raise RoutesDisagreeError(
            f"Hadamard-derived cover verified with delta = {cert.params.delta}, want -2"
        )
    return arc, cert
