"""Command-line surface: construct, verify, convert, and enumerate.

Every subcommand is pure text I/O: identical inputs produce byte-identical
outputs.  Matrix payloads (cover / Seidel / generalized Hadamard files) go to
stdout; one-line reports accompanying a payload go to stderr so payloads stay
pipeable.  Exit codes: 0 success, 1 verification or feasibility failure (with
a machine-readable ``FAIL <condition> <witness>`` line on stdout), 2 malformed
input or unsupported request (message on stderr).

``--jobs`` and ``--seed`` are global options (before the subcommand).  No
core command is randomized; ``--seed`` is accepted for reproducibility of any
seeded workflow built on the library (for example brute-force searches for
small Seidel matrices).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .constructions import cover_to_gh, dcff, gh_to_cover, thas_somma
from .covers import drackn_verify, quotient
from .errors import (
    CoverStructureError,
    FormatError,
    GroupMismatchError,
    UnsupportedError,
    VerificationError,
)
from .feasibility import (
    FLAG_TWO_GRAPH,
    FamilyRow,
    ParameterSet,
    family_enumerate,
    feasibility_battery,
    rows_to_tsv,
)
from .formats import (
    emit_cover,
    emit_gh,
    emit_gram,
    emit_seidel,
    parse_cover,
    parse_form,
    parse_gh,
    parse_latin,
    parse_seidel,
    parse_skew,
)
from .lines import (
    CoverLines,
    LineSet,
    absolute_bound,
    cover_to_lines,
    lines_to_cover,
    relative_bound,
    tight_frame_check,
)

_CASE_MAP = {"Ia": "I.a", "Ib": "I.b", "IIa": "II.a", "IIb": "II.b"}


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from None


def _fmt(x) -> str:
    from fractions import Fraction

    if isinstance(x, Fraction) and x.denominator == 1:
        return str(x.numerator)
    return str(x)


def _drackn_line(p: ParameterSet) -> str:
    return (
        f"DRACKN n={p.n} r={p.r} c={p.c} delta={p.delta} "
        f"theta={_fmt(p.theta)} tau={_fmt(p.tau)}"
    )


# -- subcommand bodies ---------------------------------------------------------


def _cmd_construct(args) -> int:
    if args.family == "thas-somma":
        form = parse_form(_read_input(args.form)) if args.form else None
        arc = thas_somma(args.p, args.m, args.s, form=form)
    else:
        skew = parse_skew(_read_input(args.skew)) if args.skew else None
        latin = parse_latin(_read_input(args.latin)) if args.latin else None
        arc = dcff(args.t, args.d, skew=skew, latin=latin)
    sys.stdout.write(emit_cover(arc))
    return 0


def _cmd_verify(args) -> int:
    cert = drackn_verify(parse_cover(_read_input(args.file)))
    print(_drackn_line(cert.params))
    print(f"SPECTRUM {cert.spectrum_str()}")
    print("CHECKS " + " ".join(cert.checks_passed))
    return 0


def _selected(which: str, cl: CoverLines) -> list[tuple[str, LineSet]]:
    pairs = [("tau", cl.lines_tau), ("theta", cl.lines_theta)]
    return [(label, ls) for label, ls in pairs if which in (label, "both")]


def _lineset_summary(label: str, ls: LineSet) -> str:
    rel = relative_bound(ls.n, ls.d)
    bound = absolute_bound(ls.d, ls.field)
    return (
        f"LINESET {label} n={ls.n} d={ls.d} alpha_sq={ls.alpha_sq} field={ls.field}"
        f" tight-frame={'yes' if tight_frame_check(ls) else 'no'}"
        f" relative-bound={rel}"
        f" relative-attained={'yes' if ls.alpha_sq == rel else 'no'}"
        f" absolute-bound={bound}"
        f" absolute-attained={'yes' if ls.n == bound else 'no'}"
    )


def _cmd_cover_to_lines(args) -> int:
    cl = cover_to_lines(parse_cover(_read_input(args.file)), char_index=args.char)
    sys.stdout.write(emit_seidel(cl.seidel))
    for label, ls in _selected(args.which, cl):
        print(_lineset_summary(label, ls))
    if args.full_gram:
        for label, ls in _selected(args.which, cl):
            sys.stdout.write(emit_gram(label, ls))
    return 0


def _cmd_lines_to_cover(args) -> int:
    arc, cert = lines_to_cover(parse_seidel(_read_input(args.file)), args.r)
    sys.stdout.write(emit_cover(arc))
    print(_drackn_line(cert.params), file=sys.stderr)
    return 0


def _cmd_cover_to_gh(args) -> int:
    sys.stdout.write(emit_gh(cover_to_gh(parse_cover(_read_input(args.file)))))
    return 0


def _cmd_gh_to_cover(args) -> int:
    arc, cert = gh_to_cover(parse_gh(_read_input(args.file)))
    sys.stdout.write(emit_cover(arc))
    print(_drackn_line(cert.params), file=sys.stderr)
    return 0


def _parse_subgroup(text: str) -> list[tuple[int, ...]]:
    gens = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        try:
            gens.append(tuple(int(x) for x in part.split(",")))
        except ValueError:
            raise FormatError(f"malformed subgroup generator {part!r}") from None
    return gens


def _cmd_quotient(args) -> int:
    arc = parse_cover(_read_input(args.file))
    sys.stdout.write(emit_cover(quotient(arc, _parse_subgroup(args.subgroup))))
    return 0


def _cmd_feasible(args) -> int:
    report = feasibility_battery(args.n, args.r, args.c)
    if report.passed:
        fields = report.params.format_fields()
        names = ("n", "r", "c", "delta", "theta", "tau", "m_theta", "m_tau")
        print("PASS " + " ".join(f"{k}={v}" for k, v in zip(names, fields)))
        return 0
    for cond in report.failing():
        print(f"FAIL ({cond.key}) {cond.witness}".rstrip())
    return 1


def _human_table(rows: tuple[FamilyRow, ...]) -> str:
    if not rows:
        return "no feasible rows\n"
    header = ("case", "t", "n", "r", "c", "delta", "theta", "tau", "m_theta", "m_tau", "flags")
    table = [header]
    for row in rows:
        table.append(
            (row.case_id, str(row.t))
            + row.params.format_fields()
            + (",".join(row.flags) or "-",)
        )
    widths = [max(len(line[i]) for line in table) for i in range(len(header))]
    out = [
        "  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip()
        for line in table
    ]
    return "\n".join(out) + "\n"


def _cmd_enumerate(args) -> int:
    rows = family_enumerate(_CASE_MAP[args.case], args.t_max, jobs=args.jobs)
    if not args.include_two_graph:
        rows = tuple(row for row in rows if FLAG_TWO_GRAPH not in row.flags)
    sys.stdout.write(rows_to_tsv(rows) if args.tsv else _human_table(rows))
    return 0


# -- parser wiring ---------------------------------------------------------------


def _add_input(sub, help_text="input file ('-' or omitted: stdin)"):
    sub.add_argument("file", nargs="?", default="-", help=help_text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="drackn",
        description=(
            "Construct, verify, and interconvert antipodal covers of complete "
            "graphs and the equiangular line systems they carry."
        ),
    )
    parser.add_argument(
        "--jobs", type=int, default=1, help="parallel workers (default 1)"
    )
    parser.add_argument(
        "--seed", type=int, default=0, help="seed for randomized workflows (default 0)"
    )
    subs = parser.add_subparsers(dest="subcommand", metavar="SUBCOMMAND")

    p = subs.add_parser("construct", help="build a cover from a known family")
    fams = p.add_subparsers(dest="family", metavar="FAMILY", required=True)
    ts = fams.add_parser("thas-somma", help="alternating-form cover of K_{p^m}")
    ts.add_argument("-p", type=int, required=True, help="field characteristic (prime)")
    ts.add_argument("-m", type=int, required=True, help="dimension of the point space")
    ts.add_argument("-s", type=int, default=1, help="pencil size (default 1)")
    ts.add_argument("--form", help="FORM v1 file overriding the default form pencil")
    ts.set_defaults(func=_cmd_construct)
    dc = fams.add_parser("dcff", help="characteristic-2 skew-product cover")
    dc.add_argument("-t", type=int, required=True, help="subfield degree over GF(2)")
    dc.add_argument("-d", type=int, required=True, help="extension degree (odd)")
    dc.add_argument("--skew", help="SKEW v1 file overriding the default product")
    dc.add_argument("--latin", help="LATIN v1 file overriding the default square")
    dc.set_defaults(func=_cmd_construct)

    p = subs.add_parser("verify", help="certify a cover file as an (n,r,c) cover")
    _add_input(p)
    p.set_defaults(func=_cmd_verify)

    p = subs.add_parser(
        "cover-to-lines", help="equiangular line systems carried by a cover"
    )
    _add_input(p)
    p.add_argument("--char", type=int, required=True, help="nontrivial character index")
    p.add_argument(
        "--which",
        choices=("tau", "theta", "both"),
        default="both",
        help="which line set to report (default both)",
    )
    p.add_argument(
        "--full-gram",
        action="store_true",
        help="also emit the Gram matrices (large; derivable from the Seidel file)",
    )
    p.set_defaults(func=_cmd_cover_to_lines)

    p = subs.add_parser("lines-to-cover", help="rebuild a cover from a Seidel file")
    _add_input(p)
    p.add_argument("--r", type=int, required=True, help="cover index (prime)")
    p.set_defaults(func=_cmd_lines_to_cover)

    p = subs.add_parser(
        "cover-to-gh", help="generalized Hadamard matrix of an n=rc cover"
    )
    _add_input(p)
    p.set_defaults(func=_cmd_cover_to_gh)

    p = subs.add_parser(
        "gh-to-cover", help="cover encoded by a generalized Hadamard matrix"
    )
    _add_input(p)
    p.set_defaults(func=_cmd_gh_to_cover)

    p = subs.add_parser("quotient", help="quotient a cover by a deck subgroup")
    _add_input(p)
    p.add_argument(
        "--subgroup",
        required=True,
        help="generators, ';'-separated exponent tuples (e.g. '1,0,1;0,1,0')",
    )
    p.set_defaults(func=_cmd_quotient)

    p = subs.add_parser("feasible", help="run the parameter battery on (n, r, c)")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("c", type=int)
    p.set_defaults(func=_cmd_feasible)

    p = subs.add_parser("enumerate", help="feasible rows of one parameter family")
    p.add_argument("--case", choices=tuple(_CASE_MAP), required=True)
    p.add_argument("--t-max", type=int, required=True, help="largest t to scan")
    p.add_argument("--tsv", action="store_true", help="tab-separated output")
    p.add_argument(
        "--include-unpublished",
        action="store_true",
        help="keep rows outside the published tables (already the default; "
        "such rows carry the 'unpublished' flag)",
    )
    p.add_argument(
        "--include-two-graph",
        action="store_true",
        help="also list r=2 rows (two-graph parameter sets)",
    )
    p.set_defaults(func=_cmd_enumerate)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else int(exc.code)
    if getattr(args, "func", None) is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args)
    except (VerificationError, CoverStructureError) as exc:
        print(f"FAIL {exc.condition} {exc.witness}".rstrip())
        return 1
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UnsupportedError, GroupMismatchError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
