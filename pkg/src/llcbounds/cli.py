"""Command-line front end.

Subcommands: ``bound`` (generic counting tuple), ``nn-bound`` (network shape),
``compare`` (both singular points over a range of H - H*), ``figure``
(bound grid over families, points, M and H), ``ledger`` (per-depth candidate
table), and ``verify`` (randomized agreement harness).

Exit codes: 0 success, 1 verification failure, 2 invalid input,
3 shelf cap exceeded, 4 output I/O error.  Errors are reported as a JSON
object on standard error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Any, Optional

from . import counting, ledger, networks, oracle
from .counting import ProblemSpec, Shelf, ShelfSequence
from .errors import (
    LLCBoundsError,
    NotFoundWithin,
    ShelfCapExceeded,
    ValidationError,
)
from .rational import decimal_str, format_rational

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID = 2
EXIT_CAP = 3
EXIT_IO = 4

GENERIC_NOTE = (
    "upper bound; valid under the caller-asserted expansion and "
    "independence conditions of the counting rule"
)

TAIL_FAMILIES = ("exp", "swish", "odd", "arithmetic")


def _tail_order_function(family: str, params: dict) -> Any:
    if family == "arithmetic":
        start = params["start"]
        step = params["step"]
        if start < 1 or step < 1:
            raise ValidationError("arithmetic tail needs start >= 1 and step >= 1")
        return lambda s: start + step * (s - 1)
    support = networks.NAMED_FAMILIES[family]()
    return support.order


def build_shelves(shelf_pairs: list[tuple[int, int]], tail: Optional[dict]) -> ShelfSequence:
    """Explicit shelves optionally continued by a named infinite family.

    The tail contributes its family prices above the last explicit price
    (lower ones are skipped), each with a constant inventory (default 1,
    override with the ``n`` parameter).
    """
    if tail is None:
        return ShelfSequence.finite(shelf_pairs)

    params = dict(tail.get("params") or {})
    family = tail.get("family")
    if family not in TAIL_FAMILIES:
        raise ValidationError(f"unknown tail family {family!r}; expected one of {TAIL_FAMILIES}")
    inventory = params.pop("n", 1)
    if family == "arithmetic":
        if set(params) != {"start", "step"}:
            raise ValidationError("arithmetic tail params must be {start, step} (plus optional n)")
    elif params:
        raise ValidationError(f"unexpected tail params for family {family!r}: {sorted(params)}")
    order = _tail_order_function(family, params)

    head = [Shelf(*pair) for pair in shelf_pairs]
    last_price = head[-1].m if head else 0
    skip = 0
    while order(skip + 1) <= last_price:
        skip += 1

    def generate(s: int) -> tuple[int, int]:
        if s <= len(head):
            return head[s - 1]
        return order(skip + s - len(head)), inventory

    return ShelfSequence.infinite(generate)


# -- SpecFile parsing ----------------------------------------------------------


def _require_keys(obj: dict, allowed: set, required: set, context: str) -> None:
    keys = set(obj)
    unknown = keys - allowed
    if unknown:
        raise ValidationError(f"{context}: unknown fields {sorted(unknown)}")
    missing = required - keys
    if missing:
        raise ValidationError(f"{context}: missing fields {sorted(missing)}")


def parse_generic_spec(data: dict) -> ProblemSpec:
    _require_keys(
        data,
        allowed={"r", "alpha", "beta", "shelves", "infinite_tail"},
        required={"r", "alpha", "beta", "shelves"},
        context="problem spec",
    )
    pairs = []
    for entry in data["shelves"]:
        _require_keys(entry, allowed={"m", "n"}, required={"m", "n"}, context="shelf")
        pairs.append((entry["m"], entry["n"]))
    tail = data.get("infinite_tail")
    if tail is not None:
        _require_keys(
            tail, allowed={"family", "params"}, required={"family"}, context="infinite_tail"
        )
    if not pairs and tail is None:
        raise ValidationError("problem spec: shelves may be empty only with an infinite_tail")
    shelves = build_shelves(pairs, tail)
    return ProblemSpec(r=data["r"], alpha=data["alpha"], beta=data["beta"], shelves=shelves)


def parse_network_spec(data: dict) -> tuple[networks.NetworkShape, networks.ActivationSupport, str]:
    _require_keys(
        data,
        allowed={"N", "H", "M", "H_star", "activation", "point"},
        required={"N", "H", "M", "H_star", "activation", "point"},
        context="network spec",
    )
    activation = data["activation"]
    _require_keys(
        activation, allowed={"family", "exponents"}, required={"family"}, context="activation"
    )
    shape = networks.NetworkShape(
        N=data["N"], H=data["H"], M=data["M"], H_star=data["H_star"]
    )
    support = _support_from(activation["family"], activation.get("exponents"))
    point = data["point"]
    if point not in ("P1", "P2"):
        raise ValidationError(f"point must be P1 or P2, got {point!r}")
    return shape, support, point


def _support_from(family: str, exponents: Optional[list]) -> networks.ActivationSupport:
    if family in networks.NAMED_FAMILIES:
        if exponents is not None:
            raise ValidationError(f"family {family!r} does not take exponents")
        return networks.NAMED_FAMILIES[family]()
    if family == "poly":
        if not exponents:
            raise ValidationError("poly activation needs exponents")
        return networks.ActivationSupport.polynomial(exponents)
    if family == "custom":
        # Config files cannot carry code, so a custom family is the infinite
        # arithmetic progression determined by its leading exponents.
        if not exponents or len(exponents) < 2:
            raise ValidationError("custom activation needs at least two exponents")
        steps = {b - a for a, b in zip(exponents, exponents[1:])}
        if len(steps) != 1 or min(exponents) < 1 or (step := steps.pop()) < 1:
            raise ValidationError(
                "custom exponents must start a strictly increasing arithmetic progression"
            )
        start = exponents[0]
        return networks.ActivationSupport.custom(lambda s: start + step * (s - 1))
    raise ValidationError(f"unknown activation family {family!r}")


def load_spec_file(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    if not isinstance(data, dict):
        raise ValidationError("spec file must contain a JSON object")
    return data


# -- result records and output formats -----------------------------------------


def result_record(
    result: counting.BoundResult, note: str, provenance: dict
) -> dict:
    return {
        "lambda": format_rational(result.lambda_bound),
        "lambda_decimal": decimal_str(result.lambda_bound),
        "multiplicity": result.multiplicity,
        "K": result.K,
        "L": result.L,
        "n_star": list(result.n_star),
        "case": result.case.value,
        "assumptions_note": note,
        "provenance": provenance,
    }


def _flatten(value: Any) -> str:
    """Render a provenance value as a single CSV-safe token."""
    if isinstance(value, dict):
        return "|".join(f"{k}={_flatten(v)}" for k, v in value.items())
    if isinstance(value, list):
        return ";".join(_flatten(v) for v in value)
    return str(value)


def render_record(record: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        headers = list(record)
        row = [
            ";".join(str(x) for x in value)
            if isinstance(value, list)
            else _flatten(value)
            for value in record.values()
        ]
        return ",".join(headers) + "\n" + ",".join(row) + "\n"
    lines = [f"{key} = {_flatten(value)}" for key, value in record.items()]
    return "\n".join(lines) + "\n"


def render_table(headers: list[str], rows: list[list[str]], fmt: str, summary: dict) -> str:
    if fmt == "json":
        payload = {
            "rows": [dict(zip(headers, row)) for row in rows],
            **summary,
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        out = [",".join(headers)]
        out.extend(",".join(row) for row in rows)
        return "\n".join(out) + "\n"
    widths = [
        max(len(header), *(len(row[i]) for row in rows)) if rows else len(header)
        for i, header in enumerate(headers)
    ]
    out = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    for row in rows:
        out.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)))
    for key, value in summary.items():
        out.append(f"{key}: {value}")
    return "\n".join(out) + "\n"


def _write_output(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


# -- subcommand implementations -------------------------------------------------


def _spec_from_args(args: argparse.Namespace) -> tuple[ProblemSpec, dict]:
    inline = args.r is not None or args.alpha is not None or args.beta is not None
    if args.spec and inline:
        raise ValidationError("give either --spec FILE or inline flags, not both")
    if args.spec:
        data = load_spec_file(args.spec)
        return parse_generic_spec(data), data
    if not inline:
        raise ValidationError("need --spec FILE or inline --r/--alpha/--beta flags")
    if args.r is None or args.alpha is None or args.beta is None:
        raise ValidationError("inline specs need all of --r, --alpha, --beta")
    pairs = []
    if args.shelves:
        for chunk in args.shelves.split(","):
            m_text, _, n_text = chunk.partition(":")
            try:
                pairs.append((int(m_text), int(n_text)))
            except ValueError:
                raise ValidationError(f"bad shelf {chunk!r}; expected m:n") from None
    tail = None
    if args.tail:
        family, _, param_text = args.tail.partition(":")
        params: dict[str, int] = {}
        if param_text:
            if family == "arithmetic":
                try:
                    start, step = (int(x) for x in param_text.split(","))
                except ValueError:
                    raise ValidationError(
                        f"bad tail {args.tail!r}; expected arithmetic:start,step"
                    ) from None
                params = {"start": start, "step": step}
            else:
                params = {"n": int(param_text)}
        tail = {"family": family, "params": params}
    if not pairs and tail is None:
        raise ValidationError("inline spec needs --shelves and/or --tail")
    spec = ProblemSpec(
        r=args.r, alpha=args.alpha, beta=args.beta, shelves=build_shelves(pairs, tail)
    )
    provenance = {"r": args.r, "alpha": args.alpha, "beta": args.beta}
    if args.shelves:
        provenance["shelves"] = args.shelves
    if args.tail:
        provenance["infinite_tail"] = args.tail
    return spec, provenance


def cmd_bound(args: argparse.Namespace) -> int:
    spec, provenance = _spec_from_args(args)
    record = result_record(counting.compute_bound(spec), GENERIC_NOTE, provenance)
    _write_output(render_record(record, args.format), args.out)
    return EXIT_OK


def cmd_nn_bound(args: argparse.Namespace) -> int:
    if args.spec:
        data = load_spec_file(args.spec)
        shape, support, point = parse_network_spec(data)
    else:
        for name in ("N", "H", "M", "Hstar", "activation", "point"):
            if getattr(args, name) is None:
                raise ValidationError(f"--{name} is required without --spec")
        shape = networks.NetworkShape(N=args.N, H=args.H, M=args.M, H_star=args.Hstar)
        exponents = (
            [int(x) for x in args.exponents.split(",")] if args.exponents else None
        )
        support = _support_from(args.activation, exponents)
        point = args.point
    if point == "P1":
        network_bound = networks.bound_P1(shape, support)
    else:
        network_bound = networks.bound_P2(shape)
    problem = network_bound.problem
    preview = problem.shelves.prefix(network_bound.result.L)
    provenance = {
        "N": shape.N,
        "H": shape.H,
        "M": shape.M,
        "H_star": shape.H_star,
        "point": point,
        "r": problem.r,
        "alpha": problem.alpha,
        "beta": problem.beta,
        "shelves_used": [f"{s.m}:{s.n}" for s in preview],
    }
    record = result_record(
        network_bound.result, network_bound.assumption_note, provenance
    )
    _write_output(render_record(record, args.format), args.out)
    return EXIT_OK


COMPARE_HEADERS = [
    "family",
    "M",
    "N",
    "H_star",
    "H_minus_Hstar",
    "lambda_P1_num",
    "lambda_P1_den",
    "lambda_P2_num",
    "lambda_P2_den",
    "lambda_P1_decimal",
    "lambda_P2_decimal",
    "winner",
]


def cmd_compare(args: argparse.Namespace) -> int:
    support = _support_from(args.activation, None)
    rows = []
    last_win = 0
    ever_lost = False
    for h in range(1, args.scan_max + 1):
        shape = networks.NetworkShape(N=args.N, H=args.Hstar + h, M=args.M, H_star=args.Hstar)
        record = networks.compare_P1_P2(shape, support)
        if record.lambda_p2 <= record.lambda_p1:
            last_win = h
        else:
            ever_lost = True
        rows.append(
            [
                args.activation,
                str(args.M),
                str(args.N),
                str(args.Hstar),
                str(h),
                str(record.lambda_p1.numerator),
                str(record.lambda_p1.denominator),
                str(record.lambda_p2.numerator),
                str(record.lambda_p2.denominator),
                decimal_str(record.lambda_p1),
                decimal_str(record.lambda_p2),
                record.winner,
            ]
        )
    crossover = str(last_win) if ever_lost else "NotFound"
    summary = {"crossover_threshold": crossover}
    if args.format == "csv":
        rows.append(
            [args.activation, str(args.M), str(args.N), str(args.Hstar), crossover]
            + [""] * 6
            + ["CrossoverAt"]
        )
    _write_output(render_table(COMPARE_HEADERS, rows, args.format, summary), args.out)
    return EXIT_OK


FIGURE_HEADERS = [
    "family",
    "point",
    "M",
    "N",
    "H_star",
    "H",
    "H_minus_Hstar",
    "lambda_num",
    "lambda_den",
    "lambda_decimal",
]


def cmd_figure(args: argparse.Namespace) -> int:
    m_values = [int(x) for x in args.M_list.split(",")]
    if args.H_max <= args.Hstar:
        raise ValidationError("--H-max must exceed --Hstar")
    rows = []
    for family in ("exp", "swish", "tanh"):
        support = _support_from(family, None)
        points = ["P1", "P2"] if args.Hstar >= 1 else ["P1"]
        for point in points:
            for M in m_values:
                for H in range(args.Hstar + 1, args.H_max + 1):
                    shape = networks.NetworkShape(
                        N=args.N, H=H, M=M, H_star=args.Hstar
                    )
                    if point == "P1":
                        value = networks.bound_P1(shape, support).lambda_bound
                    else:
                        value = networks.bound_P2(shape).lambda_bound
                    rows.append(
                        [
                            family,
                            point,
                            str(M),
                            str(args.N),
                            str(args.Hstar),
                            str(H),
                            str(H - args.Hstar),
                            str(value.numerator),
                            str(value.denominator),
                            decimal_str(value),
                        ]
                    )
    _write_output(render_table(FIGURE_HEADERS, rows, args.format, {}), args.out)
    return EXIT_OK


LEDGER_HEADERS = ["stage", "depth", "value", "is_min"]


def cmd_ledger(args: argparse.Namespace) -> int:
    spec, _ = _spec_from_args(args)
    candidates = ledger.chart_candidates(spec)
    summary_min = ledger.ledger_min(spec)
    theorem = counting.compute_bound(spec)
    rows = [
        [
            candidate.stage,
            "terminal" if candidate.is_terminal else str(candidate.depth),
            format_rational(candidate.value),
            "min" if candidate.value == summary_min.value else "",
        ]
        for candidate in candidates
    ]
    summary = {
        "min": format_rational(summary_min.value),
        "advisory_multiplicity": summary_min.advisory_multiplicity,
        "theorem_multiplicity": theorem.multiplicity,
    }
    if args.format == "csv":
        rows.append(
            [
                "Summary",
                "min",
                format_rational(summary_min.value),
                f"advisory={summary_min.advisory_multiplicity};theorem={theorem.multiplicity}",
            ]
        )
    _write_output(render_table(LEDGER_HEADERS, rows, args.format, summary), args.out)
    return EXIT_OK


# -- randomized verification harness --------------------------------------------


def random_problem_spec(
    rng: random.Random,
    max_shelves: int = 6,
    max_price: int = 12,
    max_inventory: int = 8,
    max_rank: int = 5,
    max_demand: int = 30,
    max_budget: int = 60,
) -> ProblemSpec:
    """One random finite tuple within the documented parameter box."""
    gamma = rng.randint(1, max_shelves)
    prices = sorted(rng.sample(range(1, max_price + 1), gamma))
    shelves = [(m, rng.randint(0, max_inventory)) for m in prices]
    return ProblemSpec(
        r=rng.randint(0, max_rank),
        alpha=rng.randint(1, max_demand),
        beta=rng.randint(1, max_budget),
        shelves=ShelfSequence.finite(shelves),
    )


def _describe(spec: ProblemSpec) -> str:
    gamma = spec.shelves.gamma
    assert gamma is not None
    shelf_text = ",".join(f"{s.m}:{s.n}" for s in spec.shelves.prefix(gamma))
    return f"r={spec.r} alpha={spec.alpha} beta={spec.beta} shelves={shelf_text}"


def _raise_some_prices(rng: random.Random, spec: ProblemSpec) -> ProblemSpec:
    gamma = spec.shelves.gamma
    assert gamma is not None
    shelves = spec.shelves.prefix(gamma)
    raised = []
    bump = 0
    for shelf in shelves:
        bump += rng.randint(0, 2)
        raised.append((shelf.m + bump, shelf.n))
    return ProblemSpec(spec.r, spec.alpha, spec.beta, ShelfSequence.finite(raised))


def _raise_some_inventories(rng: random.Random, spec: ProblemSpec) -> ProblemSpec:
    gamma = spec.shelves.gamma
    assert gamma is not None
    shelves = spec.shelves.prefix(gamma)
    raised = [(shelf.m, shelf.n + rng.randint(0, 3)) for shelf in shelves]
    return ProblemSpec(spec.r, spec.alpha, spec.beta, ShelfSequence.finite(raised))


def run_verification(cases: int, seed: int, max_shelves: int) -> tuple[bool, str]:
    """Randomized agreement harness; returns (all_agree, report_text)."""
    rng = random.Random(seed)
    failures = []
    for index in range(cases):
        spec = random_problem_spec(rng, max_shelves=max_shelves)
        result = counting.compute_bound(spec)
        checks = [
            ("oracle_bound", oracle.oracle_bound(spec), result.lambda_bound),
            (
                "oracle_multiplicity",
                oracle.oracle_multiplicity(spec),
                result.multiplicity,
            ),
            ("ledger_min", ledger.ledger_min(spec).value, result.lambda_bound),
        ]
        pricier = _raise_some_prices(rng, spec)
        checks.append(
            (
                "price_monotonicity",
                counting.compute_bound(pricier).lambda_bound <= result.lambda_bound,
                True,
            )
        )
        stocked = _raise_some_inventories(rng, spec)
        checks.append(
            (
                "inventory_monotonicity",
                counting.compute_bound(stocked).lambda_bound >= result.lambda_bound,
                True,
            )
        )
        gamma = spec.shelves.gamma
        assert gamma is not None
        position = rng.randint(0, gamma)
        try:
            padded = counting.insert_empty_shelf(spec, position)
        except LLCBoundsError:
            padded = None
        if padded is not None:
            padded_result = counting.compute_bound(padded)
            checks.append(
                (
                    "empty_shelf_invariance",
                    (padded_result.lambda_bound, padded_result.multiplicity),
                    (result.lambda_bound, result.multiplicity),
                )
            )
        for name, got, expected in checks:
            if got != expected:
                failures.append(
                    f"case {index}: {name} gave {got} but expected {expected} "
                    f"on {_describe(spec)}"
                )

    lines = [
        f"cases: {cases}",
        f"seed: {seed}",
        f"max_shelves: {max_shelves}",
        f"failures: {len(failures)}",
    ]
    lines.extend(failures)
    return not failures, "\n".join(lines) + "\n"


def cmd_verify(args: argparse.Namespace) -> int:
    ok, report = run_verification(args.cases, args.seed, args.max_shelves)
    _write_output(report, args.out)
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


# -- argument parsing ------------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("text", "json", "csv"), default="text",
        help="output format (default text)",
    )
    parser.add_argument("--out", default=None, help="write output to FILE instead of stdout")


def _add_generic_spec_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--spec", default=None, help="JSON spec file")
    parser.add_argument("--r", type=int, default=None, help="Fisher information rank")
    parser.add_argument("--alpha", type=int, default=None, help="demand (a-parameter count)")
    parser.add_argument("--beta", type=int, default=None, help="budget (b-parameter count)")
    parser.add_argument(
        "--shelves", default=None, help="comma list of m:n shelves, e.g. 1:1,3:1,5:1"
    )
    parser.add_argument(
        "--tail",
        default=None,
        help="infinite tail family: exp|swish|odd[:n] or arithmetic:start,step",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="llcbounds",
        description="Exact rational upper bounds for local learning coefficients "
        "of three-layer networks via a budget-constrained counting rule.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bound = sub.add_parser("bound", help="bound for a generic counting tuple")
    _add_common(p_bound)
    _add_generic_spec_flags(p_bound)
    p_bound.set_defaults(func=cmd_bound)

    p_nn = sub.add_parser("nn-bound", help="bound for a three-layer network shape")
    _add_common(p_nn)
    p_nn.add_argument("--spec", default=None, help="JSON network spec file")
    p_nn.add_argument("--N", type=int, default=None, help="input units")
    p_nn.add_argument("--H", type=int, default=None, help="hidden units")
    p_nn.add_argument("--M", type=int, default=None, help="output units")
    p_nn.add_argument("--Hstar", type=int, default=None, help="true hidden units")
    p_nn.add_argument(
        "--activation",
        choices=("exp", "swish", "tanh", "poly", "custom"),
        default=None,
    )
    p_nn.add_argument("--exponents", default=None, help="comma list for poly/custom")
    p_nn.add_argument("--point", choices=("P1", "P2"), default=None)
    p_nn.set_defaults(func=cmd_nn_bound)

    p_cmp = sub.add_parser("compare", help="P1 vs P2 over a range of H - H*")
    _add_common(p_cmp)
    p_cmp.add_argument("--N", type=int, default=1)
    p_cmp.add_argument("--M", type=int, required=True)
    p_cmp.add_argument("--Hstar", type=int, default=1)
    p_cmp.add_argument(
        "--activation", choices=("exp", "swish", "tanh"), required=True
    )
    p_cmp.add_argument("--scan-max", dest="scan_max", type=int, default=20)
    p_cmp.set_defaults(func=cmd_compare)

    p_fig = sub.add_parser("figure", help="bound grid over families, points, M and H")
    _add_common(p_fig)
    p_fig.add_argument("--Hstar", type=int, default=2)
    p_fig.add_argument("--N", type=int, default=1)
    p_fig.add_argument("--M-list", dest="M_list", default="1,2,3")
    p_fig.add_argument("--H-max", dest="H_max", type=int, default=20)
    p_fig.set_defaults(func=cmd_figure, format="csv")

    p_led = sub.add_parser("ledger", help="per-depth candidate table")
    _add_common(p_led)
    _add_generic_spec_flags(p_led)
    p_led.set_defaults(func=cmd_ledger)

    p_ver = sub.add_parser("verify", help="randomized agreement harness")
    _add_common(p_ver)
    p_ver.add_argument("--cases", type=int, default=100)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--max-shelves", dest="max_shelves", type=int, default=6)
    p_ver.set_defaults(func=cmd_verify)

    return parser


def _emit_error(name: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": name, "message": message}) + "\n")


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ShelfCapExceeded as exc:
        _emit_error("ShelfCapExceeded", str(exc))
        return EXIT_CAP
    except NotFoundWithin as exc:
        _emit_error("NotFoundWithin", str(exc))
        return EXIT_INVALID
    except (ValidationError, json.JSONDecodeError, KeyError, TypeError) as exc:
        name = type(exc).__name__ if isinstance(exc, ValidationError) else "InvalidInput"
        _emit_error(name, str(exc))
        return EXIT_INVALID
    except OSError as exc:
        _emit_error("IOError", str(exc))
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
