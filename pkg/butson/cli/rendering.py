"""
Human-readable rendering of run reports
"""

from typing import List, Optional

from butson.cli.models import RunReport
from butson.conjecture.models import ConjectureVerdict, RootValue
from butson.matrices.models import VerificationReport
from butson.search.models import SearchReport
from butson.spectra.models import Angle, SpectrumReport


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def format_root(root: RootValue) -> str:
    if root.n == 1:
        return "1"
    return f"zeta_{root.n}^{root.t}"


def format_angle(angle: Optional[Angle]) -> str:
    if angle is None:
        return "-"
    if angle.num == 0:
        return "0"
    return f"{angle.num}/{angle.den}"


def _table(header: List[str], rows: List[List[str]]) -> List[str]:
    widths = [max(len(cell) for cell in column) for column in zip(header, *rows)]
    lines = ["  ".join(cell.ljust(width) for cell, width in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * width for width in widths))
    lines.extend("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in rows)
    return lines


def render_verification(report: VerificationReport) -> List[str]:
    lines = [f"BH({report.m},{report.l}): {_yes_no(report.is_bh)}"]
    if report.failing_cell is not None:
        cell = report.failing_cell
        lines.append(
            f"Gram cell ({cell.row}, {cell.col}) is not {cell.expected}; coefficients {cell.coeffs}"
        )
    if report.structure is not None:
        flags = report.structure
        lines.append(
            f"symmetric: {_yes_no(flags.symmetric)}  circulant: {_yes_no(flags.circulant)}  "
            f"unreal: {_yes_no(flags.unreal)}"
        )
    return lines


def render_spectrum(report: SpectrumReport) -> List[str]:
    rows = []
    for index, finding in enumerate(report.findings):
        value = finding.value.to_complex()
        rows.append([
            str(index),
            format_angle(finding.angle),
            f"{value.real:+.12f} {value.imag:+.12f}i",
            str(finding.order) if finding.order is not None else "-",
        ])
    lines = [f"Spectrum of B = M / sqrt({report.m}), {report.method} path, order bound {report.order_bound}"]
    lines.extend(_table(["#", "angle (turns)", "value", "order"], rows))
    if report.common_k is not None:
        lines.append(f"common k: {report.common_k}")
    else:
        reason = report.failure.value if report.failure else "unknown"
        lines.append(f"no common k ({reason})")
    return lines


def render_conjecture(verdict: ConjectureVerdict) -> List[str]:
    rows = []
    for result in verdict.per_i:
        values = ", ".join(format_root(root) for root in result.distinct_values)
        if result.unclassified:
            values += f" (+{result.unclassified} unclassified)"
        rows.append([
            str(result.i),
            _yes_no(result.all_in_mu_l),
            _yes_no(result.all_in_mu_k),
            values,
        ])
    lines = [f"Scaled powers sqrt({verdict.m})^(1-i) M^i, k = {verdict.k}"]
    lines.extend(_table(["i", f"in mu_{verdict.l}", f"in mu_{verdict.k}", "entry values"], rows))
    if verdict.holds:
        lines.append("conjecture holds for this matrix")
    else:
        lines.append(f"counterexample at i = {verdict.counterexample_i}")
    return lines


def render_search(report: SearchReport) -> List[str]:
    counters = [
        ("scanned", report.scanned),
        ("skipped", report.skipped),
        ("bh", report.bh_count),
        ("tested", report.tested),
        ("holds", report.holds_count),
        ("counterexamples", report.counterexample_count),
        ("no common k", report.no_common_k_count),
    ]
    lines = _table(["counter", "value"], [[name, str(value)] for name, value in counters])
    if report.counterexamples:
        lines.append("")
        lines.extend(_table(
            ["first row", "k", "i"],
            [[" ".join(map(str, c.first_row)), str(c.k), str(c.counterexample_i)] for c in report.counterexamples]
        ))
    return lines


def render_report(report: RunReport) -> str:
    result = report.result
    if isinstance(result, VerificationReport):
        lines = render_verification(result)
    elif isinstance(result, SpectrumReport):
        lines = render_spectrum(result)
    elif isinstance(result, ConjectureVerdict):
        lines = render_conjecture(result)
    else:
        lines = render_search(result)

    lines.insert(0, f"input: {report.input.source} (m={report.input.m}, l={report.input.l})")
    if report.elapsed_ms is not None:
        lines.append(f"elapsed: {report.elapsed_ms:.1f} ms")
    return "\n".join(lines)
