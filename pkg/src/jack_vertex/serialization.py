"""Stable JSON forms of partitions, rational functions, symmetric functions and LR reports."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple

from .lr.stanley import LRReport
from .partitions import Partition, sort_key
from .ratfield import ALPHA, RatFunc
from .symfun import BASES, SymFun, coordinates, from_coordinates

Payload = Dict[str, Any]


def serialize_partition(lam: Partition) -> List[int]:
    return list(Partition(lam))


def deserialize_partition(data: Any) -> Partition:
    if isinstance(data, str):
        return Partition.parse(data)
    return Partition(int(p) for p in data)


def serialize_ratfunc(value: RatFunc) -> Payload:
    num, den = value.integer_lists()
    return {"num": num, "den": den}


def deserialize_ratfunc(data: Mapping[str, Any]) -> RatFunc:
    return RatFunc.from_integer_lists(
        [int(c) for c in data["num"]], [int(c) for c in data["den"]]
    )


def serialize_fraction(value: Fraction) -> Payload:
    return serialize_ratfunc(RatFunc.constant(value))


@dataclass(frozen=True)
class SerializedSymFun:
    """A symmetric function as basis-tagged coefficient lists."""

    basis: str
    terms: Tuple[Tuple[Partition, RatFunc], ...]

    @classmethod
    def from_symfun(
        cls, f: SymFun, basis: str = "p", alpha: RatFunc = ALPHA
    ) -> "SerializedSymFun":
        coords = coordinates(f, basis, alpha)
        ordered = tuple((lam, coords[lam]) for lam in sorted(coords, key=sort_key))
        return cls(basis, ordered)

    def to_symfun(self, alpha: RatFunc = ALPHA) -> SymFun:
        return from_coordinates(dict(self.terms), self.basis, alpha)

    def to_payload(self) -> Payload:
        return {
            "basis": self.basis,
            "terms": [
                {"partition": serialize_partition(lam), "coeff": serialize_ratfunc(coeff)}
                for lam, coeff in self.terms
            ],
        }

    @classmethod
    def from_payload(cls, data: Mapping[str, Any]) -> "SerializedSymFun":
        basis = str(data.get("basis", "p"))
        if basis not in BASES:
            raise ValueError(f"unknown basis tag {basis!r}")
        terms = tuple(
            (deserialize_partition(entry["partition"]), deserialize_ratfunc(entry["coeff"]))
            for entry in data.get("terms", [])
        )
        return cls(basis, terms)


def serialize_symfun(f: SymFun, basis: str = "p", alpha: RatFunc = ALPHA) -> Payload:
    return SerializedSymFun.from_symfun(f, basis, alpha).to_payload()


def deserialize_symfun(data: Mapping[str, Any], alpha: RatFunc = ALPHA) -> SymFun:
    return SerializedSymFun.from_payload(data).to_symfun(alpha)


def serialize_lr_report(report: LRReport) -> Payload:
    payload: Payload = {
        "mu": serialize_partition(report.mu),
        "nu": serialize_partition(report.nu),
        "lambda": serialize_partition(report.lam),
        "value": serialize_ratfunc(report.value),
        "value_text": str(report.value),
        "is_polynomial": report.is_polynomial,
        "is_nonneg_int": report.is_nonneg_int,
        "route": report.route,
        "status": report.status,
    }
    if report.corner_omega is not None:
        payload["corner_omega"] = serialize_partition(report.corner_omega)
    if report.expected is not None:
        payload["expected"] = serialize_ratfunc(report.expected)
    return payload


def deserialize_lr_report(data: Mapping[str, Any]) -> LRReport:
    corner: Optional[Partition] = None
    if data.get("corner_omega") is not None:
        corner = deserialize_partition(data["corner_omega"])
    expected: Optional[RatFunc] = None
    if data.get("expected") is not None:
        expected = deserialize_ratfunc(data["expected"])
    return LRReport(
        mu=deserialize_partition(data["mu"]),
        nu=deserialize_partition(data["nu"]),
        lam=deserialize_partition(data["lambda"]),
        value=deserialize_ratfunc(data["value"]),
        is_polynomial=bool(data["is_polynomial"]),
        is_nonneg_int=bool(data["is_nonneg_int"]),
        route=str(data.get("route", "oracle")),
        status=str(data.get("status", "ok")),
        corner_omega=corner,
        expected=expected,
    )


def dumps(payload: Any) -> str:
    """Canonical text form: sorted keys, two-space indent, trailing newline."""
    return json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def load_json(path: Path) -> Any:
    if not path.exists():
        return None
    raw = path.read_text(encoding="utf-8")
    return json.loads(raw) if raw else None


__all__ = [
    "SerializedSymFun",
    "deserialize_lr_report",
    "deserialize_partition",
    "deserialize_ratfunc",
    "deserialize_symfun",
    "dumps",
    "load_json",
    "serialize_fraction",
    "serialize_lr_report",
    "serialize_partition",
    "serialize_ratfunc",
    "serialize_symfun",
]
