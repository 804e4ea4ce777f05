"""Exact Jack symmetric functions, vertex-operator identities and Littlewood-Richardson checks."""

from typing import Optional, Sequence

from .partitions import Partition
from .ratfield import ALPHA, RatFunc
from .symfun import SymFun


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entrypoint proxy that defers importing the CLI until needed."""

    from .cli import main as _cli_main

    return _cli_main(argv)


__all__ = ["ALPHA", "Partition", "RatFunc", "SymFun", "main"]
