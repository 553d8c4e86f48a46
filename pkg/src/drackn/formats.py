"""Bit-exact text formats for covers, Seidel matrices, generalized Hadamard
matrices, and construction ingredients (form pencils, skew products, Latin
squares).

Every emitter produces one canonical rendering (header line, parameter line,
then matrix rows), and every parser reads exactly the declared number of rows
after the two header lines and ignores trailing content.  That makes emitted
payloads pipeable: a command may append report lines after the matrix block
without breaking a downstream parser.

Encodings:

* ``DRACKN-COVER v1`` — ``n=<int> group=<d1,d2,...>``; entries are ``.`` on
  the diagonal or comma-joined exponent tuples (``2`` for Z/3, ``1,0,1`` for
  (Z/2)^3).  The trivial group (a plain K_n) is written ``group=1`` with
  entries ``0``.
* ``SEIDEL v1`` — ``n=<int> r=<prime|generic>``; for prime r each entry is an
  integer k meaning zeta_r^k (r=2: 0 is +1, 1 is -1); for ``generic`` the
  entries are literal ``1`` / ``-1``.  Diagonal is ``.``.
* ``GH v1`` — ``n=<int> group=<d1,...>``; all n^2 entries are exponent
  tuples, no diagonal marker.
* ``FORM v1`` — ``p=<int> m=<int> s=<int>``, then s blocks of m rows of m
  integers: the alternating matrices of a form pencil.
* ``SKEW v1`` — ``t=<int> d=<int>``, then a td x td table of GF(2^(td))
  elements, each a comma-joined list of td bits (coefficients over the
  default modulus of GF(2^(td))).
* ``LATIN v1`` — ``t=<int>``, then a 2^t x 2^t table of GF(2^t) elements,
  each a comma-joined list of t bits.

``emit_gram`` renders a line-set Gram matrix for display: one header line
``GRAM <label> n=... d=... alpha_sq=... field=...`` and then one line per
Gram row with space-separated entries, each entry the comma-joined
coefficient list of the value in the cyclotomic basis (a single fraction for
rational values).
"""

from __future__ import annotations

from fractions import Fraction

from .arith import is_prime
from .constructions import AlternatingForm, GHMatrix, LatinSquare, SkewProduct
from .covers import ArcMatrix
from .cyclotomic import CycNum
from .errors import FormatError
from .gf import FiniteField
from .groups import AbelianGroup
from .lines import LineSet, SeidelMatrix, _root_exponent
from .quadratic import QuadNum

COVER_TAG = "DRACKN-COVER v1"
SEIDEL_TAG = "SEIDEL v1"
GH_TAG = "GH v1"
FORM_TAG = "FORM v1"
SKEW_TAG = "SKEW v1"
LATIN_TAG = "LATIN v1"


# -- shared plumbing -----------------------------------------------------------


def _split_header(
    text: str, tag: str, keys: tuple[str, ...]
) -> tuple[dict[str, str], list[str]]:
    """Check the tag line, parse the key=value line, return (meta, body)."""
    lines = text.splitlines()
    if not lines:
        raise FormatError(f"empty input, expected header {tag!r}")
    if lines[0].strip() != tag:
        raise FormatError(f"expected header {tag!r}, got {lines[0].strip()!r}")
    if len(lines) < 2:
        raise FormatError(f"missing parameter line after {tag!r}")
    meta: dict[str, str] = {}
    for tok in lines[1].split():
        key, eq, value = tok.partition("=")
        if not eq or not key or not value:
            raise FormatError(f"malformed parameter token {tok!r}")
        if key in meta:
            raise FormatError(f"duplicate parameter {key!r}")
        meta[key] = value
    if set(meta) != set(keys):
        raise FormatError(
            f"expected parameters {', '.join(keys)}; got {', '.join(sorted(meta)) or 'none'}"
        )
    return meta, lines[2:]


def _int_of(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise FormatError(f"{what} must be an integer, got {text!r}") from None


def _take_rows(body: list[str], count: int, tag: str) -> list[str]:
    if len(body) < count:
        raise FormatError(f"{tag}: expected {count} matrix rows, found {len(body)}")
    rows = body[:count]
    for i, row in enumerate(rows):
        if not row.strip():
            raise FormatError(f"{tag}: matrix row {i + 1} is blank")
    return rows


def _split_row(line: str, n: int, where: str) -> list[str]:
    toks = line.split()
    if len(toks) != n:
        raise FormatError(f"{where}: expected {n} entries, got {len(toks)}")
    return toks


def _emit_group(group: AbelianGroup) -> str:
    return ",".join(str(d) for d in group.orders) if group.orders else "1"


def _parse_group(text: str) -> AbelianGroup:
    if text == "1":
        return AbelianGroup(())
    parts = text.split(",")
    orders = tuple(_int_of(p, "group order") for p in parts)
    if any(d < 2 for d in orders):
        raise FormatError(f"cyclic factor orders must be >= 2, got {text!r}")
    return AbelianGroup(orders)


def _emit_element(el: tuple[int, ...]) -> str:
    return ",".join(str(x) for x in el) if el else "0"


def _parse_element(tok: str, group: AbelianGroup, where: str) -> tuple[int, ...]:
    if not group.orders:
        if tok != "0":
            raise FormatError(f"{where}: trivial-group entry must be 0, got {tok!r}")
        return ()
    el = tuple(_int_of(x, f"{where}: coordinate") for x in tok.split(","))
    if len(el) != group.rank:
        raise FormatError(
            f"{where}: element {tok!r} has {len(el)} coordinates, "
            f"group has {group.rank}"
        )
    if not group.contains(el):
        raise FormatError(
            f"{where}: element {tok!r} out of range for orders {group.orders}"
        )
    return el


def _bits_of(tok: str, length: int, where: str) -> tuple[int, ...]:
    bits = tuple(_int_of(x, f"{where}: coefficient") for x in tok.split(","))
    if len(bits) != length:
        raise FormatError(f"{where}: expected {length} coefficients, got {len(bits)}")
    if any(b not in (0, 1) for b in bits):
        raise FormatError(f"{where}: coefficients must be bits, got {tok!r}")
    return bits


# -- cover format --------------------------------------------------------------


def emit_cover(f: ArcMatrix) -> str:
    n = f.n
    out = [COVER_TAG, f"n={n} group={_emit_group(f.group)}"]
    for u in range(n):
        out.append(
            " ".join(
                "." if u == v else _emit_element(f.entry(u, v)) for v in range(n)
            )
        )
    return "\n".join(out) + "\n"


def parse_cover(text: str) -> ArcMatrix:
    meta, body = _split_header(text, COVER_TAG, ("n", "group"))
    n = _int_of(meta["n"], "n")
    group = _parse_group(meta["group"])
    entries: list[list] = []
    for u, line in enumerate(_take_rows(body, n, COVER_TAG)):
        row: list = []
        for v, tok in enumerate(_split_row(line, n, f"row {u + 1}")):
            where = f"row {u + 1}, column {v + 1}"
            if u == v:
                if tok != ".":
                    raise FormatError(f"{where}: diagonal entry must be '.', got {tok!r}")
                row.append(None)
            elif tok == ".":
                raise FormatError(f"{where}: '.' is only allowed on the diagonal")
            else:
                row.append(_parse_element(tok, group, where))
        entries.append(row)
    return ArcMatrix(group, entries)


# -- Seidel format -------------------------------------------------------------


def emit_seidel(s: SeidelMatrix) -> str:
    n = s.n
    r_text = "generic" if s.root_order is None else str(s.root_order)
    out = [SEIDEL_TAG, f"n={n} r={r_text}"]
    for u in range(n):
        toks = []
        for v in range(n):
            if u == v:
                toks.append(".")
            elif s.root_order is None:
                toks.append("1" if s.entry(u, v) == 1 else "-1")
            else:
                k = _root_exponent(s.entry(u, v), s.root_order)
                if k is None:
                    raise FormatError(
                        f"entry ({u},{v}) = {s.entry(u, v)!r} is not a power of "
                        f"zeta_{s.root_order}; not representable"
                    )
                toks.append(str(k))
        out.append(" ".join(toks))
    return "\n".join(out) + "\n"


def parse_seidel(text: str) -> SeidelMatrix:
    meta, body = _split_header(text, SEIDEL_TAG, ("n", "r"))
    n = _int_of(meta["n"], "n")
    root_order: int | None
    if meta["r"] == "generic":
        root_order = None
    else:
        root_order = _int_of(meta["r"], "r")
        if not is_prime(root_order):
            raise FormatError(f"r must be a prime or 'generic', got {meta['r']!r}")
    entries: list[list] = []
    for u, line in enumerate(_take_rows(body, n, SEIDEL_TAG)):
        row: list = []
        for v, tok in enumerate(_split_row(line, n, f"row {u + 1}")):
            where = f"row {u + 1}, column {v + 1}"
            if u == v:
                if tok != ".":
                    raise FormatError(f"{where}: diagonal entry must be '.', got {tok!r}")
                row.append(Fraction(0))
            elif tok == ".":
                raise FormatError(f"{where}: '.' is only allowed on the diagonal")
            elif root_order is None:
                if tok in ("1", "+1"):
                    row.append(Fraction(1))
                elif tok == "-1":
                    row.append(Fraction(-1))
                else:
                    raise FormatError(f"{where}: generic entries must be 1 or -1, got {tok!r}")
            else:
                row.append(CycNum.zeta_pow(root_order, _int_of(tok, where)))
        entries.append(row)
    try:
        return SeidelMatrix(entries, root_order)
    except ValueError as exc:
        raise FormatError(f"invalid Seidel matrix: {exc}") from None


# -- generalized Hadamard format -----------------------------------------------


def emit_gh(h: GHMatrix) -> str:
    n = h.n
    out = [GH_TAG, f"n={n} group={_emit_group(h.group)}"]
    for u in range(n):
        out.append(" ".join(_emit_element(h.entry(u, v)) for v in range(n)))
    return "\n".join(out) + "\n"


def parse_gh(text: str) -> GHMatrix:
    meta, body = _split_header(text, GH_TAG, ("n", "group"))
    n = _int_of(meta["n"], "n")
    group = _parse_group(meta["group"])
    entries = [
        [
            _parse_element(tok, group, f"row {u + 1}, column {v + 1}")
            for v, tok in enumerate(_split_row(line, n, f"row {u + 1}"))
        ]
        for u, line in enumerate(_take_rows(body, n, GH_TAG))
    ]
    return GHMatrix(group, entries)


# -- form pencil format ----------------------------------------------------------


def emit_form(form: AlternatingForm) -> str:
    out = [FORM_TAG, f"p={form.p} m={form.m} s={form.s}"]
    for mat in form.mats:
        for row in mat:
            out.append(" ".join(str(x) for x in row))
    return "\n".join(out) + "\n"


def parse_form(text: str) -> AlternatingForm:
    meta, body = _split_header(text, FORM_TAG, ("p", "m", "s"))
    p = _int_of(meta["p"], "p")
    m = _int_of(meta["m"], "m")
    s = _int_of(meta["s"], "s")
    if p < 2 or m < 1 or s < 1:
        raise FormatError(f"need p >= 2, m >= 1, s >= 1, got p={p} m={m} s={s}")
    rows = _take_rows(body, s * m, FORM_TAG)
    mats = []
    for k in range(s):
        mat = []
        for i in range(m):
            where = f"block {k + 1}, row {i + 1}"
            toks = _split_row(rows[k * m + i], m, where)
            mat.append(tuple(_int_of(tok, where) for tok in toks))
        mats.append(tuple(mat))
    try:
        return AlternatingForm(p, m, s, tuple(mats))
    except ValueError as exc:
        raise FormatError(f"invalid form pencil: {exc}") from None


# -- skew product format ---------------------------------------------------------


def emit_skew(skew: SkewProduct) -> str:
    out = [SKEW_TAG, f"t={skew.t} d={skew.d}"]
    for row in skew.table:
        out.append(" ".join(",".join(str(b) for b in e.coeffs) for e in row))
    return "\n".join(out) + "\n"


def parse_skew(text: str) -> SkewProduct:
    """Read a skew-product table; coefficients are over the default modulus
    of GF(2^(td))."""
    meta, body = _split_header(text, SKEW_TAG, ("t", "d"))
    t = _int_of(meta["t"], "t")
    d = _int_of(meta["d"], "d")
    if t < 1 or d < 1:
        raise FormatError(f"need t >= 1 and d >= 1, got t={t} d={d}")
    td = t * d
    field = FiniteField(2, td)
    subfield = FiniteField(2, t)
    table = []
    for i, line in enumerate(_take_rows(body, td, SKEW_TAG)):
        toks = _split_row(line, td, f"row {i + 1}")
        table.append(
            tuple(
                field.element(_bits_of(tok, td, f"row {i + 1}, column {j + 1}"))
                for j, tok in enumerate(toks)
            )
        )
    try:
        return SkewProduct(t=t, d=d, field=field, subfield=subfield, table=tuple(table))
    except ValueError as exc:
        raise FormatError(f"invalid skew product: {exc}") from None


# -- Latin square format ----------------------------------------------------------


def emit_latin(latin: LatinSquare) -> str:
    out = [LATIN_TAG, f"t={latin.field.t}"]
    for row in latin.table:
        out.append(" ".join(",".join(str(b) for b in e.coeffs) for e in row))
    return "\n".join(out) + "\n"


def parse_latin(text: str) -> LatinSquare:
    meta, body = _split_header(text, LATIN_TAG, ("t",))
    t = _int_of(meta["t"], "t")
    if t < 1:
        raise FormatError(f"need t >= 1, got t={t}")
    field = FiniteField(2, t)
    q = 2**t
    table = []
    for i, line in enumerate(_take_rows(body, q, LATIN_TAG)):
        toks = _split_row(line, q, f"row {i + 1}")
        table.append(
            tuple(
                field.element(_bits_of(tok, t, f"row {i + 1}, column {j + 1}"))
                for j, tok in enumerate(toks)
            )
        )
    try:
        return LatinSquare(field=field, table=tuple(table))
    except ValueError as exc:
        raise FormatError(f"invalid Latin square: {exc}") from None


# -- Gram display -----------------------------------------------------------------


def _coeff_text(e) -> str:
    if isinstance(e, CycNum):
        return ",".join(str(c) for c in e.coeffs)
    if isinstance(e, QuadNum):
        return str(e)
    return str(Fraction(e))


def emit_gram(label: str, ls: LineSet) -> str:
    out = [f"GRAM {label} n={ls.n} d={ls.d} alpha_sq={ls.alpha_sq} field={ls.field}"]
    for row in ls.gram.rows:
        out.append(" ".join(_coeff_text(e) for e in row))
    return "\n".join(out) + "\n"
