from __future__ import annotations

from dataclasses import dataclass


@dataclass
class CheckReport:
    """Outcome of one exact identity check.

    ``location`` is the 1-based (row, column) of the first failing entry when
    the check compares matrices.
    """

    name: str
    passed: bool
    location: tuple[int, int] | None = None
    detail: str = ""

    def __bool__(self):
        return self.passed

    def as_dict(self) -> dict:
        return {
            "check": self.name,
            "passed": self.passed,
            "location": list(self.location) if self.location else None,
            "detail": self.detail,
        }


def compare(name: str, lhs, rhs, detail: str = "") -> CheckReport:
    loc = lhs.first_difference(rhs)
    if loc is None:
        return CheckReport(name, True, detail=detail)
    i, j = loc
    msg = f"entry ({i},{j}): {lhs.entry(i, j)} != {rhs.entry(i, j)}" if i else "size mismatch"
    return CheckReport(name, False, loc, msg)
