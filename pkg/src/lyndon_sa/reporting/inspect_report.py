from __future__ import annotations

from collections.abc import Iterable, Sequence


def format_row(values: Iterable[int | bool]) -> str:
    """Whitespace-separated decimals; booleans print as 0/1."""
    return " ".join(str(int(v)) for v in values)


def format_grouping(groups: Sequence[Sequence[int]]) -> str:
    return " | ".join(format_row(members) for members in groups)


def oracle_verdict(row: str, oracle_row: str) -> str:
    return "OK" if row == oracle_row else "DIFF"
