"""Verification reports: the check registry and two serializations.

A report is an ordered list of (name, value, tolerance) records, one per
registered check, plus free-form metadata.  The machine format is one check
per line, "name value tolerance PASS|FAIL", with metadata as '# meta' comment
lines; numbers use 17 significant digits so parsing round-trips doubles
exactly.  The text format is for humans and may carry extra header lines.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidInputError

# every check a full verification run emits, in report order, with the
# frozen default tolerance; measurement bounds are calibrated on the
# cylinder at two resolutions, identity checks sit at round-off scale
REGISTRY: tuple[tuple[str, float], ...] = (
    ("gauss_residual_max", 1e-3),
    ("det_drift_max", 1e-8),
    ("normal_unit_max_dev", 1e-9),
    ("normal_orthogonality_max_dev", 1e-9),
    ("parallel_identity_residual", 1e-11),
    ("equidistance_max_dev", 1e-9),
    ("metric_match_primary", 5e-3),
    ("hopf_match_primary", 5e-3),
    ("mean_match_primary", 5e-3),
    ("conformality_primary", 5e-3),
    ("isothermic_primary", 5e-3),
    ("mean_constancy_primary", 5e-3),
    ("hopf_constancy_primary", 5e-3),
    ("hopf_phase_primary", 5e-3),
    ("lawson_match_primary", 1e-12),
    ("metric_match_shifted", 5e-3),
    ("hopf_match_shifted", 5e-3),
    ("mean_match_shifted", 5e-3),
    ("conformality_shifted", 5e-3),
    ("isothermic_shifted", 5e-3),
    ("mean_constancy_shifted", 5e-3),
    ("hopf_constancy_shifted", 5e-3),
    ("hopf_phase_shifted", 5e-3),
    ("lawson_match_shifted", 1e-12),
    ("mean_sign_opposite", 0.5),
)


def registry_names() -> tuple[str, ...]:
    return tuple(name for name, _ in REGISTRY)


def default_tolerances() -> dict[str, float]:
    return dict(REGISTRY)


@dataclass(frozen=True)
class CheckRecord:
    name: str
    value: float
    tolerance: float

    @property
    def passed(self) -> bool:
        # NaN compares false, so it fails, as it should
        return self.value <= self.tolerance


@dataclass(frozen=True, eq=False)
class VerificationReport:
    records: tuple[CheckRecord, ...]
    metadata: dict[str, str] = field(default_factory=dict)

    def overall_pass(self) -> bool:
        return all(r.passed for r in self.records)

    def record(self, name: str) -> CheckRecord:
        for r in self.records:
            if r.name == name:
                return r
        raise InvalidInputError(f"no check named {name!r} in report")

    def values(self) -> dict[str, float]:
        return {r.name: r.value for r in self.records}


def render_text(report: VerificationReport) -> str:
    lines = ["verification report", "==================="]
    for key, val in report.metadata.items():
        lines.append(f"{key} = {val}")
    if report.metadata:
        lines.append("")
    width = max(len(r.name) for r in report.records) if report.records else 0
    for r in report.records:
        status = "PASS" if r.passed else "FAIL"
        lines.append(
            f"  [{status}] {r.name:<{width}}  {r.value:.6e}  (tol {r.tolerance:.1e})"
        )
    n_pass = sum(r.passed for r in report.records)
    overall = "PASS" if report.overall_pass() else "FAIL"
    lines.append("")
    lines.append(f"overall: {overall} ({n_pass}/{len(report.records)} checks)")
    return "\n".join(lines) + "\n"


def render_machine(report: VerificationReport) -> str:
    lines = ["# verification-report"]
    for key, val in report.metadata.items():
        lines.append(f"# meta {key} = {val}")
    for r in report.records:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.name} {r.value:.17g} {r.tolerance:.17g} {status}")
    return "\n".join(lines) + "\n"


def parse_machine(text: str) -> VerificationReport:
    """Invert render_machine; malformed lines are rejected, not skipped."""
    records = []
    metadata = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line.lstrip("#").strip()
            if body.startswith("meta "):
                key, _, val = body[len("meta ") :].partition(" = ")
                metadata[key.strip()] = val.strip()
            continue
        parts = line.split()
        if len(parts) != 4 or parts[3] not in ("PASS", "FAIL"):
            raise InvalidInputError(f"malformed report line: {raw!r}")
        try:
            value, tolerance = float(parts[1]), float(parts[2])
        except ValueError:
            raise InvalidInputError(f"malformed report numbers: {raw!r}") from None
        rec = CheckRecord(parts[0], value, tolerance)
        stated = parts[3] == "PASS"
        if rec.passed != stated:
            raise InvalidInputError(
                f"inconsistent status for {parts[0]}: value {parts[1]} vs "
                f"tolerance {parts[2]} says {'PASS' if rec.passed else 'FAIL'}"
            )
        records.append(rec)
    return VerificationReport(records=tuple(records), metadata=metadata)
