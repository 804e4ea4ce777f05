"""Command line interface for the Jack vertex-operator lab."""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

from .cache import JackExpansionCache
from .config import Settings, current_settings
from .errors import IntegrityError, JackVertexError, PartitionError, ResourceGuardError
from .jack.filtration import jack_Q_filtration
from .lr.stanley import (
    lr_oracle,
    make_report,
    marked_rect_lr,
    marked_representations,
    rect_lr,
)
from .partitions import Partition, contains, filtration_closed_form, rect_filtration, upper_norm
from .ratfield import RatFunc
from .serialization import (
    deserialize_ratfunc,
    dumps,
    serialize_fraction,
    serialize_lr_report,
    serialize_ratfunc,
    serialize_symfun,
)
from .symfun import BASES, inner
from .vandermonde.laurent import (
    CLOSED_FORM_NAMES,
    delta_coefficient,
    dyson_constant,
    prop39_exponent,
    prop39_values,
)
from .verify import SUITES, VerifyOptions, verify

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


def _partition(text: Optional[str], flag: str) -> Partition:
    if text is None:
        raise PartitionError(f"{flag} is required")
    return Partition.parse(text)


def _int_list(text: str) -> List[int]:
    try:
        return [int(token) for token in text.split(",") if token.strip()]
    except ValueError as exc:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jack-vertex", description="Exact Jack symmetric function laboratory"
    )
    parser.add_argument("--cache-dir", default=None, help="Override JACK_VERTEX_CACHE_DIR")
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--json", dest="output", action="store_const", const="json", help="JSON output (default)")
    mode.add_argument("--plain", dest="output", action="store_const", const="plain", help="Plain text output")
    parser.set_defaults(output="json")
    subparsers = parser.add_subparsers(dest="command", required=True)

    expand = subparsers.add_parser("expand", help="Expand a Jack function in a chosen basis")
    expand.add_argument("--lambda", dest="lam", required=True, help="Partition, e.g. 2,1")
    expand.add_argument("--norm", choices=("P", "Q", "J"), default="J")
    expand.add_argument("--basis", choices=BASES, default="p")
    expand.add_argument("--method", choices=("gram_schmidt", "filtration"), default="gram_schmidt")

    lr = subparsers.add_parser("lr", help="Evaluate <J_mu J_nu, J_lambda>")
    lr.add_argument("--mu", required=True)
    lr.add_argument("--nu", required=True)
    lr.add_argument("--lambda", dest="lam", required=True)
    lr.add_argument("--route", choices=("oracle", "rect", "marked"), default="oracle")

    dyson = subparsers.add_parser("dyson", help="Coefficients of the even Vandermonde power")
    dyson.add_argument("--s", type=int, required=True)
    dyson.add_argument("--t", type=int, required=True)
    target = dyson.add_mutually_exclusive_group(required=True)
    target.add_argument("--beta", help="Exponent vector, e.g. 1,-1")
    target.add_argument("--named", choices=CLOSED_FORM_NAMES)
    dyson.add_argument("--i", type=int, default=1, help="Index for general_i")

    filtration = subparsers.add_parser("filtration", help="Rectangular filtration of a partition")
    filtration.add_argument("--lambda", dest="lam", required=True)

    check = subparsers.add_parser("verify", help="Run a verification suite")
    check.add_argument("--suite", choices=sorted(SUITES), required=True)
    check.add_argument("--max-weight", type=int, default=None)
    check.add_argument("--t-values", default="1,2")
    check.add_argument("--nu", default="2,1", help="Fixed nu for the positivity suite")
    check.add_argument("--s", type=int, default=4, help="Largest s for the dyson suite")
    check.add_argument("--t", type=int, default=2, help="Largest t for the dyson suite")

    return parser


def _expand(args: argparse.Namespace, settings: Settings) -> Dict[str, Any]:
    lam = _partition(args.lam, "--lambda")
    payload: Dict[str, Any] = {
        "lambda": list(lam),
        "norm": args.norm,
        "method": args.method,
    }
    if args.method == "filtration":
        raw, scalar = jack_Q_filtration(lam)
        q = raw.scale(scalar)
        if args.norm == "Q":
            expansion = q
        elif args.norm == "J":
            expansion = q.scale(upper_norm(lam))
        else:
            expansion = q / inner(q, q)
        payload["filtration"] = [list(rect) for rect in rect_filtration(lam)]
        payload["c_prime"] = {"text": str(scalar), **serialize_ratfunc(scalar)}
    else:
        cache = JackExpansionCache(settings.cache_dir, fsync=settings.cache_fsync)
        expansion = cache.fetch(lam, args.norm)
    payload["expansion"] = serialize_symfun(expansion, args.basis)
    return payload


def _lr(args: argparse.Namespace) -> Dict[str, Any]:
    mu = _partition(args.mu, "--mu")
    nu = _partition(args.nu, "--nu")
    lam = _partition(args.lam, "--lambda")
    if mu.weight + nu.weight != lam.weight:
        raise PartitionError(
            f"weight mismatch: |mu| + |nu| = {mu.weight + nu.weight} but |lambda| = {lam.weight}"
        )
    oracle = lr_oracle(mu, nu, lam)
    if args.route == "oracle":
        return serialize_lr_report(make_report(mu, nu, lam, oracle))
    if args.route == "rect":
        if not lam.is_rectangle():
            raise PartitionError(f"{lam} is not rectangular")
        mu_bar, closed = rect_lr(lam, nu) if contains(lam, nu) else (None, RatFunc.constant(0))
        value = closed if mu == mu_bar else RatFunc.constant(0)
        report = make_report(mu, nu, lam, value, route="rect_closed", expected=oracle)
    else:
        reps = marked_representations(lam)
        if not reps:
            raise PartitionError(f"{lam} is not of the form (r^(s-1), r-n)")
        r, s, n = reps[0]
        value = marked_rect_lr(r, s, n, mu, nu)
        report = make_report(mu, nu, lam, value, route="marked_closed", expected=oracle)
    payload = serialize_lr_report(report)
    payload["routes_agree"] = report.value == oracle
    return payload


def _dyson(args: argparse.Namespace) -> Dict[str, Any]:
    s, t = args.s, args.t
    payload: Dict[str, Any] = {"s": s, "t": t}
    printed = None
    if args.named is not None:
        beta = prop39_exponent(s, args.named, args.i)
        closed = prop39_values(s, t, args.named, args.i)
        payload["named"] = args.named
        if args.named == "general_i":
            payload["i"] = args.i
        if args.named == "one_one_two":
            printed = prop39_values(s, t, args.named, args.i, reading="printed")
            payload["printed_closed_form"] = serialize_fraction(printed)
    else:
        beta = tuple(_int_list(args.beta))
        closed = dyson_constant(s, t) if not any(beta) else None
    coefficient = delta_coefficient(beta, s, t)
    payload["beta"] = list(beta)
    payload["coefficient"] = coefficient
    if closed is not None:
        payload["closed_form"] = serialize_fraction(closed)
        payload["agree"] = closed == coefficient
        if printed is not None:
            payload["printed_agree"] = printed == coefficient
    return payload


def _filtration(args: argparse.Namespace) -> Dict[str, Any]:
    lam = _partition(args.lam, "--lambda")
    rects = rect_filtration(lam)
    _, scalar = jack_Q_filtration(lam)
    return {
        "lambda": list(lam),
        "filtration": [list(rect) for rect in rects],
        "closed_form_agrees": filtration_closed_form(lam) == rects,
        "c_prime": {"text": str(scalar), **serialize_ratfunc(scalar)},
    }


def _verify(args: argparse.Namespace, settings: Settings) -> Dict[str, Any]:
    options = VerifyOptions(
        max_weight=args.max_weight,
        t_values=tuple(_int_list(args.t_values)),
        nu=Partition.parse(args.nu),
        s=args.s,
        t=args.t,
    )
    result = verify(args.suite, options, settings=settings)
    return result.to_payload()


def _plain(payload: Dict[str, Any]) -> str:
    lines: List[str] = []
    for key in sorted(payload):
        value = payload[key]
        if key == "expansion":
            lines.append(f"expansion ({value['basis']}):")
            for term in value["terms"]:
                parts = ",".join(str(p) for p in term["partition"])
                lines.append(f"  {value['basis']}[{parts}]: {deserialize_ratfunc(term['coeff'])}")
            continue
        if isinstance(value, dict) and "text" in value:
            value = value["text"]
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _emit(payload: Dict[str, Any], output: str) -> None:
    sys.stdout.write(_plain(payload) if output == "plain" else dumps(payload))


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    settings = current_settings().with_cache_dir(args.cache_dir)
    if not logging.getLogger().handlers:
        logging.basicConfig(
            level=getattr(logging, settings.log_level, logging.INFO),
            format="%(asctime)s %(levelname)s %(name)s - %(message)s",
        )

    try:
        if args.command == "expand":
            payload = _expand(args, settings)
        elif args.command == "lr":
            payload = _lr(args)
        elif args.command == "dyson":
            payload = _dyson(args)
        elif args.command == "filtration":
            payload = _filtration(args)
        elif args.command == "verify":
            payload = _verify(args, settings)
            _emit(payload, args.output)
            return EXIT_OK if payload["passed"] else EXIT_FAILED
        else:
            parser.error("Unknown command")
            return EXIT_USAGE
    except ResourceGuardError as exc:
        sys.stderr.write(dumps({"error": str(exc), "what": exc.what, "requested": exc.requested, "bound": exc.bound}))
        return EXIT_GUARD
    except IntegrityError as exc:
        sys.stderr.write(dumps({"error": str(exc), "case": exc.case}))
        return EXIT_FAILED
    except (PartitionError, ValueError, JackVertexError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE

    _emit(payload, args.output)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
