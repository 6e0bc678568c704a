"""Reference-table and surface-grid generation for iteration counts.

A reference table answers: over a grid of test strengths (rows, keyed by
ln LR+) and priors (columns, phi), how many consecutive positive results
does a target PPV take? Cells hold the raw real-valued count so printed
decimals are reproducible; a parallel ceiled view applies the plan rules
(0 when the prior already meets the target, otherwise at least one whole
test).

Tables are keyed by ln LR+ directly rather than (sensitivity,
specificity) pairs because infinitely many pairs share one LR+ and the
count depends on the test only through it.

Emitters produce CSV (RFC 4180 quoting), GitHub-flavored Markdown, and
JSON records. CSV/Markdown print two decimals for golden-file comparison;
JSON carries full precision. Output is deterministic byte-for-byte for a
given spec and FORMAT_VERSION.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

from .core import iterations_from_log_lr, raw_iteration_count
from .errors import InvalidAxis, InvalidTarget

__all__ = [
    "FORMAT_VERSION",
    "PAPER_LOG_LR_AXIS",
    "PAPER_PHI_AXIS",
    "PAPER_TARGETS",
    "ReferenceTableSpec",
    "ReferenceTable",
    "generate_reference_table",
    "surface_grid",
    "render_csv",
    "render_markdown",
    "render_json",
    "render_surface_csv",
    "render_surface_json",
    "write_table",
]

FORMAT_VERSION = "1"

# the published reference axes: ln LR+ from 0.5 to 5.0 by 0.5, six priors
PAPER_LOG_LR_AXIS: tuple[float, ...] = tuple(0.5 * k for k in range(1, 11))
PAPER_PHI_AXIS: tuple[float, ...] = (0.02, 0.05, 0.07, 0.1, 0.15, 0.2)
PAPER_TARGETS: tuple[float, ...] = (0.99, 0.95, 0.75, 0.50)


def _validate_target(target_rho: float) -> float:
    target_rho = float(target_rho)
    if math.isnan(target_rho) or not 0.0 < target_rho < 1.0:
        raise InvalidTarget(f"table target PPV must lie in (0, 1), got {target_rho!r}")
    return target_rho


def _validate_axis(name: str, values, lower: float, upper: float, open_ended: bool) -> tuple[float, ...]:
    vals = tuple(float(v) for v in values)
    if not vals:
        raise InvalidAxis(f"{name} axis must be non-empty")
    for v in vals:
        if math.isnan(v) or not lower < v or not (v < upper if open_ended else v <= upper):
            raise InvalidAxis(f"{name} axis value {v!r} outside valid domain")
    if any(x >= y for x, y in zip(vals, vals[1:])):
        raise InvalidAxis(f"{name} axis must be strictly increasing, got {vals}")
    return vals


@dataclass(frozen=True)
class ReferenceTableSpec:
    """Axes and target for one reference table."""

    target_rho: float
    log_lr_values: tuple[float, ...]
    phi_values: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "target_rho", _validate_target(self.target_rho))
        object.__setattr__(
            self,
            "log_lr_values",
            _validate_axis("log_lr", self.log_lr_values, 0.0, math.inf, True),
        )
        object.__setattr__(
            self, "phi_values", _validate_axis("phi", self.phi_values, 0.0, 1.0, True)
        )


def paper_spec(target_rho: float) -> ReferenceTableSpec:
    """Spec on the published axes for the given target."""
    return ReferenceTableSpec(target_rho, PAPER_LOG_LR_AXIS, PAPER_PHI_AXIS)


@dataclass(frozen=True)
class ReferenceTable:
    """Grid of raw iteration counts; rows ln LR+, columns phi.

    Counts fall along each row (stronger prior needs fewer tests) and down
    each column (stronger test needs fewer tests).
    """

    spec: ReferenceTableSpec
    cells: tuple[tuple[float, ...], ...]

    @property
    def ceiled_cells(self) -> tuple[tuple[int, ...], ...]:
        """Whole-test view: plan rules applied cell-wise (0 if already met)."""
        return tuple(
            tuple(
                iterations_from_log_lr(llr, phi, self.spec.target_rho).n_i
                for phi in self.spec.phi_values
            )
            for llr in self.spec.log_lr_values
        )


def generate_reference_table(spec: ReferenceTableSpec) -> ReferenceTable:
    """Evaluate the iteration-count formula over the spec's grid."""
    cells = tuple(
        tuple(
            raw_iteration_count(llr, phi, spec.target_rho) for phi in spec.phi_values
        )
        for llr in spec.log_lr_values
    )
    return ReferenceTable(spec, cells)


def _range_axis(name: str, rng: tuple[float, float, float]) -> tuple[float, ...]:
    start, stop, step = (float(x) for x in rng)
    if math.isnan(start) or math.isnan(stop) or math.isnan(step):
        raise InvalidAxis(f"{name} range contains NaN")
    if step <= 0.0:
        raise InvalidAxis(f"{name} range step must be positive, got {step}")
    if stop < start:
        raise InvalidAxis(f"{name} range stop {stop} below start {start}")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return tuple(start + i * step for i in range(count))


def surface_grid(
    target_rho: float,
    log_lr_range: tuple[float, float, float],
    phi_range: tuple[float, float, float],
) -> list[tuple[float, float, float]]:
    """Dense (ln LR+, phi, raw_n) grid for surface plotting.

    Ranges are (start, stop, step) with stop inclusive up to rounding; a
    degenerate start == stop range yields a single lattice line. Values
    agree exactly with generate_reference_table wherever the axis floats
    coincide, because both call the same cell formula.
    """
    spec = ReferenceTableSpec(
        target_rho,
        _range_axis("log_lr", log_lr_range),
        _range_axis("phi", phi_range),
    )
    return [
        (llr, phi, raw_iteration_count(llr, phi, spec.target_rho))
        for llr in spec.log_lr_values
        for phi in spec.phi_values
    ]


# ---------------------------------------------------------------------------
# emitters
# ---------------------------------------------------------------------------


def _fmt_axis(value: float) -> str:
    return format(value, "g")


def render_csv(table: ReferenceTable) -> str:
    """CSV with raw two-decimal cells followed by the ceiled columns."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    phis = table.spec.phi_values
    header = (
        ["ln_lr_plus"]
        + [f"raw_phi={_fmt_axis(p)}" for p in phis]
        + [f"n_i_phi={_fmt_axis(p)}" for p in phis]
    )
    writer.writerow(["format_version", FORMAT_VERSION, "target_rho", _fmt_axis(table.spec.target_rho)])
    writer.writerow(header)
    for llr, raw_row, ceil_row in zip(
        table.spec.log_lr_values, table.cells, table.ceiled_cells
    ):
        writer.writerow(
            [format(llr, ".2f")]
            + [format(v, ".2f") for v in raw_row]
            + [str(v) for v in ceil_row]
        )
    return buf.getvalue()


def render_markdown(table: ReferenceTable) -> str:
    """GitHub-flavored table of raw counts, then the ceiled view."""
    phis = table.spec.phi_values
    head = "| ln LR+ | " + " | ".join(_fmt_axis(p) for p in phis) + " |"
    rule = "|---" * (len(phis) + 1) + "|"
    lines = [
        f"Iterations to reach PPV {_fmt_axis(table.spec.target_rho)} "
        f"(columns: prevalence phi; format v{FORMAT_VERSION})",
        "",
        head,
        rule,
    ]
    for llr, row in zip(table.spec.log_lr_values, table.cells):
        lines.append(
            f"| {llr:.2f} | " + " | ".join(format(v, ".2f") for v in row) + " |"
        )
    lines += ["", "Whole tests (ceiling, minimum one):", "", head, rule]
    for llr, row in zip(table.spec.log_lr_values, table.ceiled_cells):
        lines.append(f"| {llr:.2f} | " + " | ".join(str(v) for v in row) + " |")
    lines.append("")
    return "\n".join(lines)


def render_json(table: ReferenceTable) -> str:
    """Full-precision JSON records, one per cell."""
    records = [
        {"log_lr": llr, "phi": phi, "raw_n": raw, "n_i": ceiled}
        for llr, raw_row, ceil_row in zip(
            table.spec.log_lr_values, table.cells, table.ceiled_cells
        )
        for phi, raw, ceiled in zip(table.spec.phi_values, raw_row, ceil_row)
    ]
    doc = {
        "format_version": FORMAT_VERSION,
        "target_rho": table.spec.target_rho,
        "log_lr_values": list(table.spec.log_lr_values),
        "phi_values": list(table.spec.phi_values),
        "records": records,
    }
    return json.dumps(doc, indent=2) + "\n"


def render_surface_csv(points: list[tuple[float, float, float]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["ln_lr_plus", "phi", "raw_n"])
    for llr, phi, raw in points:
        writer.writerow([_fmt_axis(llr), _fmt_axis(phi), format(raw, ".4f")])
    return buf.getvalue()


def render_surface_json(target_rho: float, points: list[tuple[float, float, float]]) -> str:
    doc = {
        "format_version": FORMAT_VERSION,
        "target_rho": target_rho,
        "points": [{"log_lr": a, "phi": b, "raw_n": c} for a, b, c in points],
    }
    return json.dumps(doc, indent=2) + "\n"


_RENDERERS = {"csv": render_csv, "markdown": render_markdown, "json": render_json}


def write_table(table: ReferenceTable, path: str, fmt: str = "csv") -> None:
    """Write a table in the given format; deterministic bytes per spec."""
    try:
        renderer = _RENDERERS[fmt]
    except KeyError:
        raise ValueError(f"unknown table format {fmt!r}") from None
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(renderer(table))
