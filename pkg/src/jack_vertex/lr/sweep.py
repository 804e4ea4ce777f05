"""Exhaustive positivity sweeps of <J_mu J_nu, J_lam> for a fixed nu."""

from __future__ import annotations

import logging
from dataclasses import replace
from typing import Callable, Container, List, Optional

from ..config import current_settings, enforce_bound
from ..jack.oracle import jack_J
from ..partitions import Partition, partitions_of, upside_down_corner_strip
from ..symfun import inner
from .stanley import LRReport, make_report

logger = logging.getLogger(__name__)


def _status(report: LRReport) -> str:
    if report.value.is_zero() or report.is_nonneg_int:
        return "ok"
    return "mismatch"


def positivity_sweep(
    nu: Partition,
    max_weight: int,
    *,
    skip: Container[str] = (),
    on_report: Optional[Callable[[LRReport], None]] = None,
) -> List[LRReport]:
    """Oracle reports for every (mu, lam) with |lam| <= max_weight and |mu| = |lam| - |nu|.

    Reports whose key is in ``skip`` are not recomputed. Triples where
    lam - mu is an upside-down diagram inside one corner of lam carry that
    diagram as ``corner_omega``.
    """
    nu = Partition(nu)
    enforce_bound("max_weight", max_weight, current_settings().max_weight)
    j_nu = jack_J(nu)
    reports: List[LRReport] = []
    for total in range(nu.weight, max_weight + 1):
        lams = partitions_of(total)
        for mu in partitions_of(total - nu.weight):
            pending = [
                lam for lam in lams if f"{mu}|{nu}|{lam}|oracle" not in skip
            ]
            if not pending:
                continue
            product = jack_J(mu) * j_nu
            for lam in pending:
                value = inner(product, jack_J(lam))
                report = make_report(
                    mu, nu, lam, value, corner_omega=upside_down_corner_strip(lam, mu)
                )
                report = replace(report, status=_status(report))
                if report.status != "ok":
                    logger.warning("non-positive coefficient for %s: %s", report.key, value)
                reports.append(report)
                if on_report is not None:
                    on_report(report)
        logger.debug("positivity sweep for nu=%s finished weight %s", nu, total)
    logger.info("positivity sweep for nu=%s produced %s report(s)", nu, len(reports))
    return reports


__all__ = ["positivity_sweep"]
