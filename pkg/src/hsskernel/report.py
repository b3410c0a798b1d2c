"""Check records and their json / csv / text encodings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any

PASS = "pass"
FAIL = "fail"


def exact(x) -> str:
    """Lossless ``num/den`` string for a rational."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def exact_list(xs) -> list[str]:
    return [exact(x) for x in xs]


@dataclass
class Check:
    name: str
    status: str
    values: dict[str, Any] = field(default_factory=dict)
    residual: float | None = None
    tolerance: float | None = None
    wall_time: float | None = None

    @property
    def passed(self) -> bool:
        return self.status == PASS


def numeric_check(name: str, residual: float, tolerance: float, **values) -> Check:
    ok = residual <= tolerance  # NaN fails
    return Check(name, PASS if ok else FAIL, values, float(residual), float(tolerance))


@dataclass
class Report:
    version: str
    command: str
    seed: int | None
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, checks) -> None:
        self.checks.extend(checks)

    def to_dict(self, timings: bool = False) -> dict:
        d = asdict(self)
        if not timings:
            for c in d["checks"]:
                c.pop("wall_time")
        d["passed"] = self.passed
        return d

    def render(self, fmt: str = "text", timings: bool = False) -> str:
        if fmt == "json":
            return json.dumps(self.to_dict(timings), indent=2, sort_keys=True) + "\n"
        if fmt == "csv":
            return self._csv(timings)
        if fmt == "text":
            return self._text(timings)
        raise ValueError(f"unknown format {fmt!r}")

    def _csv(self, timings: bool) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        buf.write(f"# version={self.version}\n# command={self.command}\n# seed={self.seed}\n")
        header = ["name", "status", "residual", "tolerance"]
        if timings:
            header.append("wall_time")
        w.writerow(header + ["values"])
        for c in self.checks:
            row = [c.name, c.status, _num(c.residual), _num(c.tolerance)]
            if timings:
                row.append(_num(c.wall_time))
            row.append(json.dumps(c.values, sort_keys=True, separators=(",", ":")))
            w.writerow(row)
        return buf.getvalue()

    def _text(self, timings: bool) -> str:
        lines = [f"hsskernel {self.version}", f"command: {self.command}", f"seed: {self.seed}", ""]
        for c in self.checks:
            head = f"[{c.status.upper()}] {c.name}"
            if c.residual is not None:
                head += f"  residual={_num(c.residual)} tol={_num(c.tolerance)}"
            if timings and c.wall_time is not None:
                head += f"  time={c.wall_time:.3f}s"
            lines.append(head)
            for k in sorted(c.values):
                v = c.values[k]
                if isinstance(v, (list, tuple)):
                    v = "[" + ", ".join(map(str, v)) + "]"
                elif isinstance(v, dict):
                    v = ", ".join(f"{kk}: {vv}" for kk, vv in v.items())
                lines.append(f"    {k}: {v}")
        n_fail = sum(not c.passed for c in self.checks)
        lines.append("")
        lines.append(f"{len(self.checks)} checks, {n_fail} failed")
        return "\n".join(lines) + "\n"


def _num(x) -> str:
    return "" if x is None else repr(float(x))
