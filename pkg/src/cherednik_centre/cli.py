"""Command-line front end.

Exit codes: 0 success, 1 domain error (the error class name goes to stderr)
or I/O failure (``error: ...`` on stderr), 2 usage/parse error (argparse
prints usage).  Output goes to stdout, or atomically to ``--out`` (write to
a temp file, then rename).  ``--format
json`` emits canonical JSON: sorted keys, two-space indent, coefficients as
exact-rational strings — parsing and re-serializing is byte-identical.

Partition arguments are comma-separated parts (``3,2``), the empty partition
is ``-``, and multipartitions join components with ``|`` (``3,2|1,1|2``).
Commands taking ``--ell`` greater than 1 read their positional label as an
ell-component multipartition (the quotient label of the block).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from typing import Callable

from . import __version__
from .abacus import (
    ell_core,
    ell_quotient,
    format_multipartition,
    from_quotient,
    parse_multipartition,
)
from .centre import CentrePresentation, centre_presentation, multipartitions_of
from .errors import DomainError, EllOutOfRange, LengthMismatch
from .hilbert import (
    dimension_hook_formula,
    format_series,
    graded_dimensions_from_presentation,
    hilbert_series_formula,
)
from .partitions import (
    beta_set,
    first_column_hooks,
    format_partition,
    hook_length,
    parse_partition,
    partitions_of,
    transpose,
    weight,
)
from .polyring import format_poly, term_sort_key, weighted_degree
from .presentation import (
    direct_presentation,
    presentation_document,
    quotient_ring_text,
    simplify,
    wreath_presentation,
)
from .wronski import wronski_relations, wronskian, wronskian_recursive, schubert_basis

ASSUMPTION = "generic c / smooth Calogero-Moser"


# ---------------------------------------------------------------------------
# helpers


def _write_atomic(path: str, content: str) -> None:
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".out-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(content)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _parse_label(text: str, ell: int):
    if ell < 1:
        raise EllOutOfRange(ell)
    if ell == 1:
        return parse_partition(text)
    label = parse_multipartition(text)
    if len(label) != ell:
        raise LengthMismatch((label, ell))
    return label


def _label_doc(label):
    if label and isinstance(label[0], tuple):
        return [list(component) for component in label]
    return list(label)


def _label_text(label) -> str:
    if label and isinstance(label[0], tuple):
        return format_multipartition(label)
    return format_partition(label)


def _poly_terms_doc(poly, prefix: str = "f") -> list[dict]:
    terms = []
    for mono in sorted(poly, key=term_sort_key):
        u_exp, gens = mono
        names: list[str] = []
        for symbol, exponent in gens:
            names.extend([f"{prefix}{symbol.row},{symbol.degree}"] * exponent)
        terms.append(
            {"coefficient": str(poly[mono]), "monomial": names, "u_power": u_exp}
        )
    return terms


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (text, json_document)


def _cmd_partition_info(args) -> tuple[str, dict]:
    lam = parse_partition(args.partition)
    n = weight(lam)
    hooks = [
        [hook_length(lam, (i, j)) for j in range(1, lam[i - 1] + 1)]
        for i in range(1, len(lam) + 1)
    ]
    beta = list(beta_set(lam, n)) if n else []
    lines = [
        f"partition: {format_partition(lam)}",
        f"weight: {n}",
        f"length: {len(lam)}",
        f"transpose: {format_partition(transpose(lam))}",
        "hooks: " + ("; ".join(" ".join(str(h) for h in row) for row in hooks) or "-"),
        f"first column hooks: {','.join(str(d) for d in first_column_hooks(lam)) or '-'}",
        f"beta-set (n={n}): {','.join(str(d) for d in beta) or '-'}",
    ]
    doc = {
        "partition": list(lam),
        "weight": n,
        "length": len(lam),
        "transpose": list(transpose(lam)),
        "hooks": hooks,
        "first_column_hooks": list(first_column_hooks(lam)),
        "beta_set": beta,
    }
    return "\n".join(lines), doc


def _cmd_abacus(args) -> tuple[str, dict]:
    ell = args.ell
    if args.action == "compose":
        quotient = parse_multipartition(args.argument)
        lam = from_quotient(quotient, ell)
        text = f"partition: {format_partition(lam)}"
        doc = {
            "quotient": _label_doc(quotient),
            "ell": ell,
            "partition": list(lam),
        }
        return text, doc
    lam = parse_partition(args.argument)
    core = ell_core(lam, ell)
    if args.action == "core":
        return f"core: {format_partition(core)}", {
            "partition": list(lam),
            "ell": ell,
            "core": list(core),
        }
    quotient = ell_quotient(lam, ell)
    text = f"quotient: {format_multipartition(quotient)}\ncore: {format_partition(core)}"
    doc = {
        "partition": list(lam),
        "ell": ell,
        "quotient": _label_doc(quotient),
        "core": list(core),
    }
    return text, doc


def _build_presentation(label, ell: int, simplified: bool):
    if ell == 1:
        built = direct_presentation(label)
    else:
        built = wreath_presentation(label, ell)
    return simplify(built) if simplified else built


def _presentation_text(built) -> str:
    if built.meta.simplified:
        return quotient_ring_text(built)
    prefix = built.meta.prefix
    gens = ", ".join(
        f"{prefix}{g.row},{g.degree} (degree {d})" for g, d in built.generators
    )
    lines = [f"generators: {gens or '-'}"]
    for rel in built.relations:
        if rel:
            degree = weighted_degree(rel)
            lines.append(f"r_{degree} = {format_poly(rel, prefix)}")
    return "\n".join(lines)


def _cmd_presentation(args) -> tuple[str, dict]:
    label = _parse_label(args.label, args.ell)
    built = _build_presentation(label, args.ell, args.simplified)
    return _presentation_text(built), presentation_document(built)


def _cmd_wronskian(args) -> tuple[str, dict]:
    lam = parse_partition(args.partition)
    wr = wronskian(schubert_basis(lam))
    doc = {
        "partition": list(lam),
        "wronskian": _poly_terms_doc(wr),
    }
    return format_poly(wr), doc


def _cmd_hilbert(args) -> tuple[str, dict]:
    label = _parse_label(args.label, args.ell)
    if args.ell == 1:
        series = hilbert_series_formula(label)
    else:
        series = graded_dimensions_from_presentation(
            wreath_presentation(label, args.ell)
        )
    text = f"series: {format_series(series)}\ndimension: {series.dimension()}"
    doc = {
        "label": _label_doc(label),
        "ell": args.ell,
        "coefficients": list(series.coefficients),
        "series": format_series(series),
        "dimension": series.dimension(),
    }
    return text, doc


def _centre_document(result: CentrePresentation) -> dict:
    blocks = []
    for blk in result.blocks:
        entry = {
            "label": _label_doc(blk.label),
            "plus": presentation_document(blk.plus_part),
            "minus": presentation_document(blk.minus_part),
            "dimension": blk.dimension,
        }
        if blk.star_label is not None:
            entry["star_label"] = _label_doc(blk.star_label)
        blocks.append(entry)
    return {
        "group": {"n": result.n, "ell": result.ell},
        "assumption": ASSUMPTION,
        "blocks": blocks,
        "total_dimension": result.total_dimension,
    }


def _cmd_centre(args) -> tuple[str, dict]:
    result = centre_presentation(args.n, args.ell, args.simplified)
    lines = [
        f"centre for n={result.n}, ell={result.ell} (assumption: {ASSUMPTION})"
    ]
    for blk in result.blocks:
        lines.append(f"block {_label_text(blk.label)}: dimension {blk.dimension}")
        if args.simplified:
            lines.append(f"  plus:  {quotient_ring_text(blk.plus_part)}")
            lines.append(f"  minus: {quotient_ring_text(blk.minus_part)}")
    lines.append(f"total dimension: {result.total_dimension}")
    return "\n".join(lines), _centre_document(result)


# ---------------------------------------------------------------------------
# selftest


def _suite_oracle_equivalence(n_max: int) -> str | None:
    for n in range(1, n_max + 1):
        for lam in partitions_of(n):
            oracle = wronski_relations(lam)
            built = direct_presentation(lam)
            if tuple(oracle.relations) != tuple(built.relations):
                return f"relation mismatch at {lam}"
    return None


def _suite_abacus(n_max: int) -> str | None:
    from .abacus import abacus_from_partition, partition_from_abacus, has_trivial_core

    for ell in range(1, 5):
        for n in range(0, n_max + 1):
            for lam in partitions_of(n):
                if partition_from_abacus(abacus_from_partition(lam, ell)) != lam:
                    return f"roundtrip failed at {lam}, ell={ell}"
            labels = list(multipartitions_of(n, ell))
            seen = set()
            for q in labels:
                lam = from_quotient(q, ell)
                if weight(lam) != n * ell or not has_trivial_core(lam, ell):
                    return f"from_quotient broken at {q}, ell={ell}"
                if ell_quotient(lam, ell) != q:
                    return f"quotient inverse broken at {q}, ell={ell}"
                seen.add(lam)
            trivial = [
                lam for lam in partitions_of(n * ell) if has_trivial_core(lam, ell)
            ]
            if sorted(seen) != sorted(trivial):
                return f"bijection image mismatch at n={n}, ell={ell}"
    return None


def _suite_hilbert(n_max: int) -> str | None:
    for n in range(0, n_max + 1):
        for lam in partitions_of(n):
            series = hilbert_series_formula(lam)
            oracle = graded_dimensions_from_presentation(direct_presentation(lam))
            if series != oracle:
                return f"series mismatch at {lam}"
            if series.dimension() != dimension_hook_formula(lam):
                return f"dimension mismatch at {lam}"
    return None


def _suite_recursive_wronskian(n_max: int) -> str | None:
    from .polyring import scale, u_power

    for n in range(1, n_max + 1):
        for lam in partitions_of(n):
            beta = beta_set(lam, n)
            monomials = [u_power(d) for d in beta]
            det_route = wronskian(_monomial_basis(monomials))
            sign = -1 if (n * (n - 1) // 2) % 2 else 1
            rec_route = wronskian_recursive(list(reversed(monomials)))
            if det_route != scale(rec_route, sign):
                return f"recursive oracle mismatch at {lam}"
    return None


def _monomial_basis(polys):
    from .wronski import SchubertBasis

    return SchubertBasis((), tuple(polys))


def _suite_wreath(total_max: int) -> str | None:
    for ell in range(2, 5):
        n_max = total_max // ell
        for n in range(0, n_max + 1):
            for q in multipartitions_of(n, ell):
                built = wreath_presentation(q, ell)
                for _, degree in built.generators:
                    if degree % ell:
                        return f"generator degree not divisible at {q}"
                series = graded_dimensions_from_presentation(built)
                for d, c in enumerate(series.coefficients):
                    if c and d % ell:
                        return f"support violation at {q}, degree {d}"
                reduced = simplify(built)
                if graded_dimensions_from_presentation(
                    reduced, max_degree=series.degree() + 2
                ) != series:
                    return f"simplify changed dimensions at {q}"
    return None


def _cmd_selftest(args) -> tuple[int, str, dict]:
    n_max = args.n_max
    suites: list[tuple[str, Callable[[], str | None]]] = [
        (
            f"direct/wronskian relation agreement (n <= {max(n_max, 6) if args.deep else n_max})",
            lambda: _suite_oracle_equivalence(max(n_max, 6) if args.deep else n_max),
        ),
        ("abacus roundtrip and quotient bijection (n <= 5, ell <= 4)",
         lambda: _suite_abacus(5)),
        (
            f"hilbert formula/oracle/hook-dimension agreement (n <= {n_max})",
            lambda: _suite_hilbert(n_max),
        ),
    ]
    if args.deep:
        suites.append(
            ("recursive-wronskian determinant cross-check (n <= 6)",
             lambda: _suite_recursive_wronskian(6))
        )
        suites.append(
            ("wreath support divisibility and simplify invariance (n*ell <= 8)",
             lambda: _suite_wreath(8))
        )
    lines = []
    entries = []
    failed = False
    for name, runner in suites:
        detail = runner()
        ok = detail is None
        failed = failed or not ok
        lines.append(f"{'ok  ' if ok else 'FAIL'} {name}" + ("" if ok else f": {detail}"))
        entries.append({"name": name, "ok": ok, "detail": detail or ""})
    lines.append("selftest: " + ("all suites passed" if not failed else "FAILURES"))
    doc = {"passed": not failed, "suites": entries}
    return (1 if failed else 0), "\n".join(lines), doc


# ---------------------------------------------------------------------------
# parser assembly


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    common.add_argument("--out", help="write output atomically to this file")

    parser = argparse.ArgumentParser(
        prog="cherednik-centre",
        description=(
            "Exact presentations (generators, graded relations, Hilbert series) "
            "of the centre of the restricted rational Cherednik algebra at t=0 "
            "for symmetric groups and their cyclic wreath products; the "
            "deformation parameter is assumed generic."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_partition = sub.add_parser("partition", help="partition utilities")
    p_sub = p_partition.add_subparsers(dest="action", required=True)
    p_info = p_sub.add_parser("info", parents=[common], help="hooks, beta-set, transpose")
    p_info.add_argument("partition", help='e.g. "3,2" ("-" for empty)')

    p_abacus = sub.add_parser("abacus", help="bead diagrams: core, quotient, compose")
    a_sub = p_abacus.add_subparsers(dest="action", required=True)
    for action, description in (
        ("core", "the ell-core of a partition"),
        ("quotient", "the ell-quotient (and core) of a partition"),
        ("compose", "rebuild the trivial-core partition from a quotient"),
    ):
        leaf = a_sub.add_parser(action, parents=[common], help=description)
        leaf.add_argument(
            "argument",
            help="partition, or multipartition for compose (components joined by |)",
        )
        leaf.add_argument("--ell", type=int, required=True, help="number of columns")

    p_pres = sub.add_parser(
        "presentation", parents=[common], help="graded presentation of a block"
    )
    p_pres.add_argument("label", help="partition, or multipartition when --ell > 1")
    p_pres.add_argument("--ell", type=int, default=1)
    group = p_pres.add_mutually_exclusive_group()
    group.add_argument("--raw", action="store_true", help="raw relations (default)")
    group.add_argument("--simplified", action="store_true", help="eliminate linear generators")

    p_wr = sub.add_parser(
        "wronskian", parents=[common], help="full symbolic Wronskian of the cell basis"
    )
    p_wr.add_argument("partition")

    p_hil = sub.add_parser("hilbert", parents=[common], help="Hilbert series of a block")
    p_hil.add_argument("label", help="partition, or multipartition when --ell > 1")
    p_hil.add_argument("--ell", type=int, default=1)

    p_centre = sub.add_parser(
        "centre", parents=[common], help="all blocks of the centre for a group"
    )
    p_centre.add_argument("n", type=int)
    p_centre.add_argument("--ell", type=int, default=1)
    p_centre.add_argument("--simplified", action="store_true")

    p_self = sub.add_parser(
        "selftest", parents=[common], help="run the oracle-equivalence suites"
    )
    p_self.add_argument("n_max", type=int, nargs="?", default=5)
    p_self.add_argument("--deep", action="store_true", help="larger bounds (minutes)")

    return parser


_HANDLERS = {
    ("partition", "info"): _cmd_partition_info,
    "presentation": _cmd_presentation,
    "wronskian": _cmd_wronskian,
    "hilbert": _cmd_hilbert,
    "centre": _cmd_centre,
}


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        code = exit_request.code
        return int(code) if code else 0
    status = 0
    try:
        if args.command == "selftest":
            status, text, doc = _cmd_selftest(args)
        elif args.command == "partition":
            text, doc = _cmd_partition_info(args)
        elif args.command == "abacus":
            text, doc = _cmd_abacus(args)
        else:
            text, doc = _HANDLERS[args.command](args)
    except DomainError as err:
        print(type(err).__name__, file=sys.stderr)
        return 1
    output = render_json(doc) if args.format == "json" else text + "\n"
    try:
        if args.out:
            _write_atomic(args.out, output)
        else:
            sys.stdout.write(output)
    except OSError as err:
        target = args.out or "<stdout>"
        print(f"error: cannot write {target}: {err.strerror or err}", file=sys.stderr)
        return 1
    return status


def main() -> None:
    sys.exit(run(sys.argv[1:]))
