"""Command-line surface.

Subcommands: analyze, residue-check, scan, ideal, schiffer, d0, qz24.
Exit codes: 0 success, 2 invalid parameters or malformed input, 3 zero
tangent vector, 4 oracle disagreement, 5 internal structural error.

All scalar I/O uses the canonical literal syntax (``p/q`` or
``p/q+r/s*w``, ``inf`` for the point at infinity).  Output is JSON (or CSV
for scans) and byte-identical across runs for identical inputs and seed;
timing is only emitted under --timing, which intentionally breaks that.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import report
from .canonical_ideal import canonical_cubic, sym2_relation
from .curve import validate_params
from .deformation import (
    TangentVector,
    base_locus,
    cone_directions,
    conic_condition,
    delta_nu_c_test,
    kernel_W,
    ks_rank,
    pairing_matrix,
    residue_pairing,
    supported_on,
)
from .errors import (
    DegenerateInput,
    InvalidParameters,
    OracleMismatch,
    StructuralError,
    Trigonal4Error,
    ZeroTangent,
)
from .numeric import DEFAULT_NODES, numeric_residue_pairing, residue_relative_error
from .prng import SplitMix64, sample_params, sample_tangent
from .qz24 import cube_family_report, evaluate_at
from .rulings import d0_cycle
from .scalars import Scalar, parse_projective
from .series import DEFAULT_ORDER

EXIT_OK = 0
EXIT_INVALID_PARAMS = 2
EXIT_ZERO_TANGENT = 3
EXIT_ORACLE_MISMATCH = 4
EXIT_STRUCTURAL = 5

NUMERIC_TOLERANCE = 1e-8


def _parse_u(text: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise InvalidParameters("expected three comma-separated scalar literals for --u")
    return validate_params(*(Scalar.parse(p) for p in parts))


def _parse_xi(text: str) -> TangentVector:
    parts = text.split(",")
    if len(parts) != 3:
        raise DegenerateInput("expected three comma-separated scalar literals for --xi")
    xi = TangentVector(tuple(Scalar.parse(p) for p in parts))
    if xi.is_zero():
        raise ZeroTangent("the zero tangent vector is not a direction")
    return xi


def _parse_point(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 4:
        raise DegenerateInput("expected four comma-separated scalar literals for --point")
    return tuple(Scalar.parse(p) for p in parts)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_analyze(args, out) -> int:
    started = time.perf_counter()
    params = _parse_u(args.u)
    xi = _parse_xi(args.xi)
    order = args.series_order
    cert = delta_nu_c_test(params, xi, order)
    document = {
        "input": {"u": report.params_json(params)["u"], "xi": report.tangent_json(xi)},
        "ks_rank": ks_rank(params, xi),
        "pairing_matrix": report.pairing_matrix_json(pairing_matrix(params, xi)),
        "kernel_basis": [report.differential_json(d) for d in cert.kernel_basis],
        "conic": report.conic_json(cert.conic),
        "base_locus": report.divisor_json(cert.base_locus),
        "supported": cert.supported,
        "certificate": report.certificate_json(cert),
        "series_order": order,
        "tags": {
            "input": "base-membership",
            "ks_rank": "ks-rank-two",
            "pairing_matrix": "pairing-closed-form",
            "kernel_basis": "kernel-covector",
            "conic": "conic-criterion",
            "base_locus": "base-locus-fibers",
            "supported": "support-annihilation",
            "certificate": "certificate-three-way",
        },
    }
    if args.timing:
        document["elapsed_ms"] = round(1000 * (time.perf_counter() - started), 3)
    out.write(report.dumps(document))
    return EXIT_OK


def cmd_residue_check(args, out) -> int:
    params = _parse_u(args.u)
    j = args.j
    if j not in (1, 2, 3):
        raise InvalidParameters("--j must be 1, 2 or 3")
    direction = [Scalar.zero()] * 3
    direction[j - 1] = Scalar.one()
    matrix = pairing_matrix(params, TangentVector(tuple(direction)))
    entries = []
    all_match = True
    worst = 0.0
    for l in range(4):
        for k in range(4):
            closed = matrix.entry(l, k)
            oracle = residue_pairing(params, j, l, k, args.series_order)
            match = closed == oracle
            all_match = all_match and match
            row = {
                "l": l,
                "k": k,
                "closed": str(closed),
                "oracle": str(oracle),
                "match": match,
            }
            if args.numeric:
                numeric = numeric_residue_pairing(params, j, l, k, args.quad_nodes)
                err = residue_relative_error(closed, numeric)
                worst = max(worst, err)
                row["numeric"] = f"{numeric.real:.12e}{numeric.imag:+.12e}j"
                row["rel_err"] = f"{err:.3e}"
            entries.append(row)
    document = {
        "u": report.params_json(params)["u"],
        "j": j,
        "entries": entries,
        "all_match": all_match,
        "tags": {
            "closed": "pairing-closed-form",
            "oracle": "pairing-residue-oracle",
            "numeric": "numeric-contour-quadrature",
        },
    }
    if args.numeric:
        document["numeric_tolerance"] = args.numeric_tolerance
        document["worst_rel_err"] = f"{worst:.3e}"
    out.write(report.dumps(document))
    if not all_match or (args.numeric and worst > args.numeric_tolerance):
        raise OracleMismatch("pairing oracles disagree")
    return EXIT_OK


def _scan_rows(args):
    if args.grid:
        kind, _, count_text = args.grid.partition(":")
        if kind != "cone" or not count_text.isdigit():
            raise DegenerateInput("--grid takes the form cone:N")
        if not args.u:
            raise InvalidParameters("--grid cone:N needs --u")
        params = _parse_u(args.u)
        for i in range(int(count_text)):
            yield i, params, cone_directions(params, Scalar.of(i))
    else:
        if args.random is None:
            raise DegenerateInput("scan needs --random N or --grid cone:N")
        rng = SplitMix64(args.seed)
        for i in range(args.random):
            params = sample_params(rng)
            xi = sample_tangent(rng)
            yield i, params, xi


def cmd_scan(args, out) -> int:
    counts: dict = {}
    csv = args.format == "csv"
    if csv:
        out.write("index,u1,u2,u3,xi1,xi2,xi3,conic_value,variant\n")
    for i, params, xi in _scan_rows(args):
        cert = delta_nu_c_test(params, xi)
        variant = cert.variant.value
        counts[variant] = counts.get(variant, 0) + 1
        if csv:
            cells = (
                [str(i)]
                + [str(c) for c in params.u]
                + [str(c) for c in xi.a]
                + [str(cert.conic.value), variant]
            )
            out.write(",".join(cells) + "\n")
        else:
            out.write(
                report.dumps_line(
                    {
                        "index": i,
                        "u": report.params_json(params)["u"],
                        "xi": report.tangent_json(xi),
                        "conic_value": str(cert.conic.value),
                        "variant": variant,
                    }
                )
            )
    summary = {"summary": {k: counts[k] for k in sorted(counts)}, "tag": "certificate-three-way"}
    if csv:
        out.write(f"# summary: {summary['summary']}\n")
    else:
        out.write(report.dumps_line(summary))
    return EXIT_OK


def cmd_ideal(args, out) -> int:
    params = _parse_u(args.u)
    quadric = sym2_relation(params)
    cubic = canonical_cubic(params)
    document = {
        "u": report.params_json(params)["u"],
        "quadric": report.quadric_json(quadric),
        "cubic": report.cubic_json(cubic),
        "monomial_order": report.MONOMIAL_ORDER,
        "tags": {"quadric": "quadric-cone", "cubic": "canonical-cubic"},
    }
    out.write(report.dumps(document))
    return EXIT_OK


def cmd_schiffer(args, out) -> int:
    params = _parse_u(args.u)
    point = _parse_point(args.point)
    quadric = sym2_relation(params)
    cubic = canonical_cubic(params)
    qv = quadric.evaluate(point)
    cv = cubic.evaluate(point)
    document = {
        "u": report.params_json(params)["u"],
        "point": [str(c) for c in point],
        "quadric_value": str(qv),
        "cubic_value": str(cv),
        "is_schiffer": not qv and not cv,
        "tags": {
            "is_schiffer": "schiffer-ideal-membership",
            "quadric_value": "quadric-cone",
            "cubic_value": "canonical-cubic",
        },
    }
    out.write(report.dumps(document))
    return EXIT_OK


def cmd_d0(args, out) -> int:
    params = _parse_u(args.u)
    t1 = parse_projective(args.t1)
    t2 = parse_projective(args.t2) if args.t2 is not None else None
    cycle = d0_cycle(params, t1, t2)
    document = {
        "u": report.params_json(params)["u"],
        "t1": report.projective_json(cycle.t1),
        "t2": report.projective_json(cycle.t2),
        "plus": report.divisor_json(cycle.plus),
        "minus": report.divisor_json(cycle.minus),
        "witness": cycle.witness,
        "tags": {
            "t2": "parameter-relation",
            "plus": "ruling-lines",
            "minus": "ruling-lines",
            "witness": "rational-triviality-witness",
        },
    }
    out.write(report.dumps(document))
    return EXIT_OK


def cmd_qz24(args, out) -> int:
    a_value = Scalar.parse(args.a) if args.a is not None else None
    probe = cube_family_report(a_value)
    document = {
        "a": str(a_value) if a_value is not None else None,
        "covector": [report.rational_function_json(c) for c in probe.covector],
        "conic_value": report.rational_function_json(probe.conic_value),
        "variant": "NotOnConic" if not probe.on_conic else "OnConic",
        "open_question": probe.annotation,
        "tags": {"covector": "cube-family-probe", "conic_value": "conic-criterion"},
    }
    if a_value is not None:
        document["covector_at_a"] = [str(evaluate_at(c, a_value)) for c in probe.covector]
        document["value_at_a"] = str(evaluate_at(probe.conic_value, a_value))
    out.write(report.dumps(document))
    return EXIT_OK


# ---------------------------------------------------------------------------
# Wiring
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trigonal4",
        description="Exact deformation invariants of a family of trigonal genus-4 curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--series-order", type=int, default=DEFAULT_ORDER)
        p.add_argument("--timing", action="store_true")

    p = sub.add_parser("analyze", help="full per-direction report")
    p.add_argument("--u", required=True)
    p.add_argument("--xi", required=True)
    add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("residue-check", help="closed form vs residue oracle, all 16 entries")
    p.add_argument("--u", required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--numeric", action="store_true")
    p.add_argument("--quad-nodes", type=int, default=DEFAULT_NODES)
    p.add_argument("--numeric-tolerance", type=float, default=NUMERIC_TOLERANCE)
    add_common(p)
    p.set_defaults(func=cmd_residue_check)

    p = sub.add_parser("scan", help="stratify sampled directions by certificate variant")
    p.add_argument("--random", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--grid")
    p.add_argument("--u")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("ideal", help="quadric and cubic of the canonical ideal")
    p.add_argument("--u", required=True)
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("schiffer", help="ideal-membership test of a projective point")
    p.add_argument("--u", required=True)
    p.add_argument("--point", required=True)
    p.set_defaults(func=cmd_schiffer)

    p = sub.add_parser("d0", help="ruling-section difference and triviality witness")
    p.add_argument("--u", required=True)
    p.add_argument("--t1", required=True)
    p.add_argument("--t2")
    p.set_defaults(func=cmd_d0)

    p = sub.add_parser("qz24", help="exact probe of the cube-root one-parameter family")
    p.add_argument("--a")
    p.set_defaults(func=cmd_qz24)

    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except InvalidParameters as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return EXIT_INVALID_PARAMS
    except ZeroTangent as exc:
        print(f"invalid tangent: {exc}", file=sys.stderr)
        return EXIT_ZERO_TANGENT
    except OracleMismatch as exc:
        print(f"oracle disagreement: {exc}", file=sys.stderr)
        return EXIT_ORACLE_MISMATCH
    except StructuralError as exc:
        print(f"structural error: {exc}", file=sys.stderr)
        return EXIT_STRUCTURAL
    except DegenerateInput as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID_PARAMS
    except Trigonal4Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STRUCTURAL


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
