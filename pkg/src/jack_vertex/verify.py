"""Verification suites: every closed form checked against the oracle, case by case.

A suite is a planner producing picklable case tuples and a worker turning
one case into ``(key, record)`` pairs. Records carry a ``status`` of
``ok``, ``fail`` (an identity that must hold did not) or ``mismatch`` (a
printed reading disagrees with the oracle; informational). A suite passes
when no record failed.
"""

from __future__ import annotations

import itertools
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .cache import JackExpansionCache
from .config import Settings, current_settings, enforce_bound
from .errors import IntegrityError
from .frobenius import (
    GCoeffKey,
    brute_force_chains,
    cor35_check,
    enumerate_chains,
    frobenius_rect_check,
    g_coeff,
    g_coeff_by_chains,
    general_frobenius_check,
)
from .jack.filtration import jack_Q_filtration, rect_removal_check
from .jack.oracle import gram_schmidt, jack_J, jack_P, jack_Q
from .jack.pieri import pieri_coeff
from .lr.stanley import (
    conjugate_duality_check,
    j_n1_in_qbasis,
    complement_dominance_check,
    marked_rect_lr,
    marked_representations,
    rect_lr,
)
from .lr.sweep import positivity_sweep
from .partitions import (
    Partition,
    dominates,
    filtration_closed_form,
    lower_norm,
    partitions_in_box,
    partitions_of,
    rect_filtration,
    upper_norm,
)
from .ratfield import ALPHA, RatFunc
from .reports import Record, ReportStore
from .serialization import serialize_fraction, serialize_lr_report, serialize_ratfunc, serialize_symfun
from .symfun import inner, monomial_coeff
from .vandermonde.action import (
    delta_q_terms,
    qbasis_delta_coefficient,
    measured_scalar,
    paired_coefficient,
    parameter,
    printed_near_rectangle_scalar,
    x_prime_image,
    x_prime_rank,
)
from .vandermonde.kernel import expand_H1, kernel_violations
from .vandermonde.laurent import (
    delta_coefficient,
    dyson_constant,
    prop39_exponent,
    prop39_values,
)

logger = logging.getLogger(__name__)

OK, FAIL, MISMATCH = "ok", "fail", "mismatch"

Case = Tuple[Any, ...]
Result = List[Tuple[str, Record]]


@dataclass(frozen=True)
class VerifyOptions:
    max_weight: Optional[int] = None
    t_values: Tuple[int, ...] = (1, 2)
    nu: Partition = Partition((2, 1))
    s: int = 4
    t: int = 2


@dataclass
class SuiteResult:
    suite: str
    cases: int
    records: int
    failures: List[Record] = field(default_factory=list)
    mismatches: int = 0
    cache_spot_check: Optional[bool] = None
    report_path: Optional[Path] = None

    @property
    def passed(self) -> bool:
        return not self.failures and self.cache_spot_check is not False

    def to_payload(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "cases": self.cases,
            "records": self.records,
            "failures": len(self.failures),
            "mismatches": self.mismatches,
            "first_failure": self.failures[0] if self.failures else None,
            "cache_spot_check": self.cache_spot_check,
            "report_path": str(self.report_path) if self.report_path else None,
        }


def _value(value: RatFunc) -> Dict[str, Any]:
    return {"text": str(value), **serialize_ratfunc(value)}


def _status(ok: bool, failing: str = FAIL) -> str:
    return OK if ok else failing


def _p(lam: Sequence[int]) -> Partition:
    return Partition(lam)


# -- pieri ---------------------------------------------------------------


def _plan_pieri(options: VerifyOptions) -> List[Case]:
    weight = options.max_weight or 8
    return [
        ("pieri", tuple(mu), n)
        for total in range(1, weight + 1)
        for n in range(1, total + 1)
        for mu in partitions_of(total - n)
    ]


def _run_pieri(case: Case) -> Result:
    _, mu, n = case
    mu = _p(mu)
    product = jack_J(mu) * jack_J(_p((n,)))
    out: Result = []
    for lam in partitions_of(mu.weight + n):
        oracle = inner(product, jack_J(lam))
        closed = pieri_coeff(mu, n, lam)
        out.append(
            (
                f"{mu}|{n}|{lam}",
                {
                    "mu": list(mu),
                    "n": n,
                    "lambda": list(lam),
                    "oracle": _value(oracle),
                    "status": _status(oracle == closed),
                },
            )
        )
    return out


# -- rect_lr ---------------------------------------------------------------


def _rectangles(max_weight: int) -> Iterable[Tuple[int, int]]:
    for r in range(1, max_weight + 1):
        for s in range(1, max_weight // r + 1):
            yield r, s


def _plan_rect_lr(options: VerifyOptions) -> List[Case]:
    weight = options.max_weight or 8
    cases: List[Case] = [
        ("rect", r, s, tuple(nu))
        for r, s in _rectangles(weight)
        for nu in partitions_in_box(r, s)
    ]
    cases.extend(
        ("complement_dominance", r, s, tuple(nu))
        for r, s in _rectangles(min(weight, 6))
        for nu in partitions_in_box(r, s)
    )
    return cases


def _run_rect_lr(case: Case) -> Result:
    kind, r, s, nu = case
    nu = _p(nu)
    rect = _p([r] * s)
    if kind == "complement_dominance":
        bad = complement_dominance_check(r, s, nu)
        return [
            (
                f"complement_dominance|{rect}|{nu}",
                {"violations": [list(w) for w in bad], "status": _status(not bad)},
            )
        ]
    mu_bar, closed = rect_lr(rect, nu)
    j_nu, j_rect = jack_J(nu), jack_J(rect)
    out: Result = []
    for mu in partitions_of(rect.weight - nu.weight):
        oracle = inner(jack_J(mu) * j_nu, j_rect)
        expected = closed if mu == mu_bar else RatFunc.constant(0)
        out.append(
            (
                f"rect|{rect}|{mu}|{nu}",
                {
                    "rect": list(rect),
                    "mu": list(mu),
                    "nu": list(nu),
                    "oracle": _value(oracle),
                    "route": "rect_closed" if mu == mu_bar else "vanishing",
                    "status": _status(oracle == expected),
                },
            )
        )
    return out


# -- marked_lr -------------------------------------------------------------


def _plan_marked_lr(options: VerifyOptions) -> List[Case]:
    weight = options.max_weight or 8
    return [
        ("marked", w, tuple(mu), tuple(nu))
        for w in range(1, weight + 1)
        for m in range(0, w + 1)
        for nu in partitions_of(m)
        for mu in partitions_of(w - m)
    ]


def _run_marked_lr(case: Case) -> Result:
    _, w, mu, nu = case
    mu, nu = _p(mu), _p(nu)
    product = jack_J(mu) * jack_J(nu)
    out: Result = []
    for lam in partitions_of(w):
        reps = marked_representations(lam)
        if not reps:
            continue
        oracle = inner(product, jack_J(lam))
        for r, s, n in reps:
            resolved = marked_rect_lr(r, s, n, mu, nu)
            printed = marked_rect_lr(r, s, n, mu, nu, reading="printed")
            base = f"{lam}|{r},{s},{n}|{mu}|{nu}"
            record = {
                "lambda": list(lam),
                "r": r,
                "s": s,
                "n": n,
                "mu": list(mu),
                "nu": list(nu),
                "oracle": _value(oracle),
            }
            out.append((base, {**record, "reading": "resolved", "status": _status(resolved == oracle)}))
            if printed != oracle:
                out.append(
                    (
                        base + "|printed",
                        {**record, "reading": "printed", "printed": _value(printed), "status": MISMATCH},
                    )
                )
    return out


# -- filtration ------------------------------------------------------------


def _plan_filtration(options: VerifyOptions) -> List[Case]:
    weight = options.max_weight or 8
    cases: List[Case] = [
        ("lambda", tuple(lam)) for n in range(1, weight + 1) for lam in partitions_of(n)
    ]
    cases.extend(
        ("removal", k, s, n)
        for k in range(0, weight)
        for s in range(1, weight // (k + 1) + 1)
        for n in range(0, k + 2)
    )
    return cases


def _run_filtration(case: Case) -> Result:
    if case[0] == "removal":
        _, k, s, n = case
        key = f"removal|{k}|{s}|{n}"
        try:
            d = rect_removal_check(k, s, n)
        except IntegrityError as exc:
            return [(key, {"error": str(exc), "status": FAIL})]
        return [(key, {"k": k, "s": s, "n": n, "scalar": _value(d), "status": OK})]
    lam = _p(case[1])
    key = f"lambda|{lam}"
    closed_ok = filtration_closed_form(lam) == rect_filtration(lam)
    try:
        _, scalar = jack_Q_filtration(lam)
    except IntegrityError as exc:
        return [(key, {"lambda": list(lam), "error": str(exc), "status": FAIL})]
    return [
        (
            key,
            {
                "lambda": list(lam),
                "filtration": [list(rect) for rect in rect_filtration(lam)],
                "closed_form_agrees": closed_ok,
                "c_prime": _value(scalar),
                "status": _status(closed_ok),
            },
        )
    ]


# -- frobenius -------------------------------------------------------------


def _plan_frobenius(options: VerifyOptions) -> List[Case]:
    weight = min(options.max_weight or 6, 6)
    ts = tuple(sorted(set(options.t_values)))
    cases: List[Case] = [
        ("rect", k, s, t)
        for k in range(1, weight + 1)
        for s in range(1, weight // k + 1)
        for t in ts
    ]
    cases.extend(("cor35", t) for t in sorted(set(ts) | {1, 2, 3}))
    cases.extend(
        ("general", tuple(lam), t)
        for n in range(1, weight + 1)
        for lam in partitions_of(n)
        for t in ts
    )
    cases.extend(("chains", k, s, t) for k, s, t in ((1, 2, 1), (2, 2, 1)))
    return cases


def _run_frobenius(case: Case) -> Result:
    kind = case[0]
    if kind == "rect":
        _, k, s, t = case
        result = frobenius_rect_check(k, s, t)
        record: Record = {"k": k, "s": s, "t": t, "match": result.match}
        if not result.match:
            record["diff"] = serialize_symfun(result.diff())
        record["status"] = _status(result.match, MISMATCH)
        return [(f"rect|{k}|{s}|{t}", record)]
    if kind == "cor35":
        check = cor35_check(case[1])
        return [
            (
                f"cor35|{case[1]}",
                {
                    "t": case[1],
                    "lhs": serialize_fraction(check["lhs"]),  # type: ignore[arg-type]
                    "rhs": serialize_fraction(check["rhs"]),  # type: ignore[arg-type]
                    "match": check["match"],
                    "status": _status(bool(check["match"]), MISMATCH),
                },
            )
        ]
    if kind == "general":
        _, lam, t = case
        comparison = general_frobenius_check(_p(lam), t)
        record = {"lambda": list(lam), "t": t, "match": comparison.match}
        if comparison.scalar is not None:
            record["c_prime"] = _value(comparison.scalar)
        record["status"] = _status(comparison.match)
        return [(f"general|{_p(lam)}|{t}", record)]
    _, k, s, t = case
    out: Result = []
    for mu in partitions_of(k * s):
        key = GCoeffKey(_p([k] * s), mu, t)
        dfs = list(enumerate_chains(key))
        brute = brute_force_chains(key)
        agree = len(dfs) == len(brute) and g_coeff(key) == g_coeff_by_chains(key)
        out.append(
            (
                f"chains|{k}|{s}|{t}|{mu}",
                {"mu": list(mu), "dfs": len(dfs), "brute_force": len(brute), "status": _status(agree)},
            )
        )
    return out


# -- positivity ------------------------------------------------------------


def _claimed_positive(nu: Partition) -> bool:
    return len(nu) <= 1 or nu == Partition((2, 1))


def _plan_positivity(options: VerifyOptions) -> List[Case]:
    weight = options.max_weight or 9
    nu = options.nu
    cases: List[Case] = [("sweep", tuple(nu), weight)]
    cases.extend(
        ("duality", tuple(mu), tuple(nu), tuple(lam))
        for total in range(nu.weight, min(weight, 4) + 1)
        for mu in partitions_of(total - nu.weight)
        for lam in partitions_of(total)
    )
    return cases


def _run_positivity(case: Case, skip: Iterable[str] = ()) -> Result:
    if case[0] == "duality":
        _, mu, nu, lam = case
        ok = conjugate_duality_check(_p(mu), _p(nu), _p(lam))
        return [(f"duality|{_p(mu)}|{_p(nu)}|{_p(lam)}", {"status": _status(ok)})]
    _, nu, weight = case
    nu = _p(nu)
    claimed = _claimed_positive(nu)
    out: Result = []
    for report in positivity_sweep(nu, weight, skip=frozenset(skip)):
        record = serialize_lr_report(report)
        status = report.status
        if status == MISMATCH and claimed:
            status = FAIL
        omega = report.corner_omega
        if omega is not None and not report.value.is_zero() and omega != nu:
            status = FAIL
        record["status"] = status
        out.append((report.key, record))
    return out


# -- basis -----------------------------------------------------------------


def _near_rectangles(max_weight: int) -> List[Partition]:
    found = []
    for n in range(1, max_weight + 1):
        for lam in partitions_of(n):
            if lam[0] - lam[-1] <= 1:
                found.append(lam)
    return found


def _plan_basis(options: VerifyOptions) -> List[Case]:
    weight = options.max_weight or 8
    cases: List[Case] = [("oracle", n) for n in range(1, weight + 1)]
    cases.extend(("variants", n) for n in range(1, min(weight, 6) + 1))
    cases.extend(("j_n1", n) for n in range(1, min(weight - 1, 5) + 1))
    cases.extend(("xrank", n) for n in range(1, min(weight, 6) + 1))
    cases.extend(("near_rect", tuple(lam)) for lam in _near_rectangles(weight))
    cases.extend(
        ("near_rect_scalar", k, s, t)
        for t in options.t_values
        for s in range(1, 4)
        for k in range(1, 3)
        if (k + 1) * s + k <= min(weight, 8)
    )
    return cases


def _oracle_records(n: int) -> Result:
    out: Result = []
    parts = partitions_of(n)
    for i, lam in enumerate(parts):
        j_lam = jack_J(lam)
        norm_ok = inner(j_lam, j_lam) == lower_norm(lam) * upper_norm(lam)
        ortho_ok = all(inner(j_lam, jack_J(mu)).is_zero() for mu in parts[i + 1 :])
        p_lam = jack_P(lam)
        tri_ok = monomial_coeff(p_lam, lam) == RatFunc.constant(1) and all(
            dominates(lam, mu) or monomial_coeff(p_lam, mu).is_zero()
            for mu in parts
            if mu != lam
        )
        out.append(
            (
                f"oracle|{lam}",
                {
                    "lambda": list(lam),
                    "norm": norm_ok,
                    "orthogonal": ortho_ok,
                    "triangular": tri_ok,
                    "status": _status(norm_ok and ortho_ok and tri_ok),
                },
            )
        )
    return out


def _run_basis(case: Case) -> Result:
    kind = case[0]
    if kind == "oracle":
        return _oracle_records(case[1])
    if kind == "variants":
        n = case[1]
        first, second = gram_schmidt(n, ALPHA, "revlex"), gram_schmidt(n, ALPHA, "conjugate")
        ok = all(first[lam].Q == second[lam].Q for lam in first)
        return [(f"variants|{n}", {"status": _status(ok)})]
    if kind == "j_n1":
        n = case[1]
        ok = j_n1_in_qbasis(n) == jack_J(_p((n, 1)))
        return [(f"j_n1|{n}", {"status": _status(ok)})]
    if kind == "xrank":
        n = case[1]
        rank = x_prime_rank(n, 1)
        return [(f"xrank|{n}", {"rank": rank, "dimension": len(partitions_of(n)), "status": _status(rank == len(partitions_of(n)))})]
    if kind == "near_rect":
        lam = _p(case[1])
        scalar = measured_scalar(lam, 1)
        support_ok = all(len(mu) <= len(lam) for mu in delta_q_terms(tuple(lam), 1))
        record: Record = {"lambda": list(lam), "support": support_ok}
        if scalar is not None:
            record["scalar"] = serialize_fraction(scalar)
        record["status"] = _status(scalar is not None and scalar != 0 and support_ok)
        return [(f"near_rect|{lam}", record)]
    _, k, s, t = case
    lam = _p([k + 1] * s + [k])
    scalar = measured_scalar(lam, t)
    printed = printed_near_rectangle_scalar(s, t)
    record = {"lambda": list(lam), "t": t, "printed": serialize_fraction(printed)}
    if scalar is not None:
        record["measured"] = serialize_fraction(scalar)
    record["status"] = MISMATCH if scalar != printed else OK
    return [(f"near_rect_scalar|{lam}|{t}", record)]


# -- dyson -----------------------------------------------------------------


def _plan_dyson(options: VerifyOptions) -> List[Case]:
    s_max, t_max = options.s, options.t
    cases: List[Case] = [
        ("constant", s, t) for s in range(1, s_max + 1) for t in range(1, t_max + 1)
    ]
    for s in range(3, s_max + 1):
        for t in range(1, t_max + 1):
            cases.extend(("prop39", s, t, "general_i", i) for i in range(1, s // 2 + 1) if i <= 2)
            cases.append(("prop39", s, t, "two_two", 1))
            cases.append(("prop39", s, t, "one_one_two", 1))
    cases.extend(
        ("q_route", s, t) for s in range(1, min(s_max, 4) + 1) for t in range(1, min(t_max, 2) + 1)
    )
    cases.extend(
        ("rect_action", k, s, t)
        for k in range(1, 4)
        for s in range(1, min(s_max, 3) + 1)
        for t in range(1, min(t_max, 2) + 1)
    )
    cases.extend(
        ("kernel", s, t) for s in range(1, min(s_max, 3) + 1) for t in range(1, min(t_max, 2) + 1)
    )
    cases.extend(
        ("paired", s, t) for s in range(2, min(s_max, 4) + 1) for t in range(1, min(t_max, 2) + 1)
    )
    return cases


def _run_dyson(case: Case) -> Result:
    kind = case[0]
    if kind == "constant":
        _, s, t = case
        value = delta_coefficient((0,) * s, s, t)
        return [(f"constant|{s}|{t}", {"s": s, "t": t, "value": value, "status": _status(value == dyson_constant(s, t))})]
    if kind == "prop39":
        _, s, t, which, i = case
        direct = delta_coefficient(prop39_exponent(s, which, i), s, t)
        resolved = prop39_values(s, t, which, i)
        out: Result = [
            (
                f"prop39|{s}|{t}|{which}|{i}",
                {"direct": direct, "closed": serialize_fraction(resolved), "status": _status(resolved == direct)},
            )
        ]
        if which == "one_one_two":
            printed = prop39_values(s, t, which, i, reading="printed")
            if printed != direct:
                out.append(
                    (
                        f"prop39|{s}|{t}|{which}|{i}|printed",
                        {"direct": direct, "printed": serialize_fraction(printed), "status": MISMATCH},
                    )
                )
        return out
    if kind == "q_route":
        _, s, t = case
        out = []
        for beta in itertools.product(range(-2, 3), repeat=s):
            if sum(beta) != 0:
                continue
            direct = delta_coefficient(beta, s, t)
            routed = qbasis_delta_coefficient(beta, s, t)
            out.append(
                (
                    f"q_route|{s}|{t}|{','.join(map(str, beta))}",
                    {"direct": direct, "q_route": serialize_fraction(routed), "status": _status(routed == direct)},
                )
            )
        return out
    if kind == "rect_action":
        _, k, s, t = case
        rect = _p([k] * s)
        ok = x_prime_image(rect, t) == jack_Q(rect, parameter(t))
        return [(f"rect_action|{k}|{s}|{t}", {"status": _status(ok)})]
    if kind == "kernel":
        _, s, t = case
        problems = kernel_violations(expand_H1(s, t, 6))
        return [(f"kernel|{s}|{t}", {"violations": problems, "status": _status(not problems)})]
    _, s, t = case
    out = []
    for n in (1, 2):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                if len(lam) + len(mu) > s:
                    continue
                direct, routed = paired_coefficient(lam, mu, s, t)
                out.append(
                    (
                        f"paired|{s}|{t}|{lam}|{mu}",
                        {"direct": direct, "q_route": serialize_fraction(routed), "status": _status(routed == direct)},
                    )
                )
    return out


SUITES: Dict[str, Tuple[Callable[[VerifyOptions], List[Case]], Callable[[Case], Result]]] = {
    "pieri": (_plan_pieri, _run_pieri),
    "rect_lr": (_plan_rect_lr, _run_rect_lr),
    "marked_lr": (_plan_marked_lr, _run_marked_lr),
    "filtration": (_plan_filtration, _run_filtration),
    "frobenius": (_plan_frobenius, _run_frobenius),
    "positivity": (_plan_positivity, _run_positivity),
    "basis": (_plan_basis, _run_basis),
    "dyson": (_plan_dyson, _run_dyson),
}


def _case_id(case: Case) -> str:
    return "/".join(str(part) for part in case)


def _execute(suite: str, case: Case) -> Result:
    return SUITES[suite][1](case)


def _guard(suite: str, options: VerifyOptions, settings: Settings) -> None:
    if options.max_weight is not None:
        enforce_bound("max_weight", options.max_weight, settings.max_weight)
    if suite == "dyson":
        enforce_bound("s*t", options.s * options.t, settings.max_delta_st)


def _settled(store: Optional[ReportStore]) -> Tuple[Set[str], Set[str]]:
    """(case ids, record keys) already stored without a failure; failed ones are rerun."""
    if store is None:
        return set(), set()
    cases: Set[str] = set()
    failed_cases: Set[str] = set()
    keys: Set[str] = set()
    for record in store.records():
        case = str(record.get("case"))
        if record.get("status") == FAIL:
            failed_cases.add(case)
        else:
            keys.add(str(record.get("key")))
        cases.add(case)
    return cases - failed_cases, keys


def run_suite(
    suite: str,
    options: Optional[VerifyOptions] = None,
    *,
    settings: Optional[Settings] = None,
    store: Optional[ReportStore] = None,
) -> SuiteResult:
    """Run one suite, recording every case; cases settled in ``store`` without a failure are skipped."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {sorted(SUITES)}")
    options = options or VerifyOptions()
    settings = settings or current_settings()
    _guard(suite, options, settings)
    plan, work = SUITES[suite]
    cases = plan(options)
    done, settled_keys = _settled(store)
    pending = [case for case in cases if _case_id(case) not in done or case[0] == "sweep"]
    logger.info("suite %s: %s case(s), %s pending", suite, len(cases), len(pending))

    outputs: List[Tuple[Case, Result]] = []
    serial = [case for case in pending if case[0] == "sweep"]
    parallel = [case for case in pending if case[0] != "sweep"]
    for case in serial:
        outputs.append((case, _run_positivity(case, settled_keys)))
    if settings.workers > 1 and len(parallel) > 1:
        with ProcessPoolExecutor(max_workers=settings.workers) as pool:
            results = pool.map(_execute, itertools.repeat(suite), parallel, chunksize=4)
            outputs.extend(zip(parallel, results))
    else:
        for case in parallel:
            outputs.append((case, work(case)))
            logger.debug("suite %s finished case %s", suite, _case_id(case))

    result = SuiteResult(suite=suite, cases=len(cases), records=0)
    for case, records in outputs:
        for key, record in records:
            record = {**record, "case": _case_id(case)}
            if store is not None:
                store.add(key, record)
    all_records = store.records() if store is not None else [
        {**record, "key": key, "case": _case_id(case)} for case, records in outputs for key, record in records
    ]
    result.records = len(all_records)
    result.failures = [r for r in all_records if r.get("status") == FAIL]
    result.mismatches = sum(1 for r in all_records if r.get("status") == MISMATCH)
    if store is not None:
        store.flush()
        result.report_path = store.path
    for failure in result.failures[:1]:
        logger.error("suite %s failed at %s", suite, failure.get("key"))
    if result.mismatches:
        logger.warning("suite %s recorded %s printed-reading mismatch(es)", suite, result.mismatches)
    return result


def cache_spot_check(
    cache: JackExpansionCache, max_weight: int, rng: Optional[random.Random] = None
) -> Optional[bool]:
    """Store one random J expansion, then compare a random cached entry with a fresh computation."""
    rng = rng or random.Random()
    n = rng.randint(1, max(1, min(max_weight, 5)))
    cache.fetch(rng.choice(partitions_of(n)), "J")
    return cache.spot_check(rng)


def verify(
    suite: str,
    options: Optional[VerifyOptions] = None,
    *,
    settings: Optional[Settings] = None,
    rng: Optional[random.Random] = None,
) -> SuiteResult:
    """run_suite with the persistent report store and the per-run cache spot check."""
    settings = settings or current_settings()
    store = ReportStore.for_suite(settings.cache_dir, suite, fsync=settings.cache_fsync)
    result = run_suite(suite, options, settings=settings, store=store)
    cache = JackExpansionCache(settings.cache_dir, fsync=settings.cache_fsync)
    weight = (options.max_weight if options and options.max_weight else 5)
    result.cache_spot_check = cache_spot_check(cache, weight, rng)
    logger.info("suite %s %s", suite, "passed" if result.passed else "failed")
    return result


__all__ = [
    "FAIL",
    "MISMATCH",
    "OK",
    "SUITES",
    "SuiteResult",
    "VerifyOptions",
    "cache_spot_check",
    "run_suite",
    "verify",
]
