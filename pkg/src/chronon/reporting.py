"""Plain-text reports, CSV tables and self-contained SVG line plots.

Everything written here is byte-deterministic for identical inputs: numbers
go through one formatting function, the SVG is assembled from fixed
templates, and no timestamps or environment state leak into the output.
"""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "PASS"
FAIL = "FAIL"
INFO = "INFO"
SKIP = "SKIP"


def fmt_number(v) -> str:
    """Scientific notation below 1e-3 in magnitude, plain decimal otherwise."""
    if isinstance(v, str):
        return v
    if isinstance(v, complex):
        return f"{fmt_number(v.real)}{'+' if v.imag >= 0 else '-'}{fmt_number(abs(v.imag))}j"
    x = float(v)
    if x == 0.0:
        return "0"
    if abs(x) < 1e-3:
        return f"{x:.6e}"
    return f"{x:.9g}"


@dataclass
class ReportLine:
    name: str
    measured: str
    expected: str
    status: str

    def render(self) -> str:
        return f"{self.name}: measured {self.measured}, expected {self.expected}: {self.status}"


@dataclass
class Report:
    title: str
    lines: list[ReportLine] = field(default_factory=list)

    def add(self, name: str, measured, expected, ok: bool | None) -> None:
        """ok=None records an informational line that cannot fail."""
        status = INFO if ok is None else (PASS if ok else FAIL)
        self.lines.append(ReportLine(name, fmt_number(measured), fmt_number(expected), status))

    def skip(self, name: str, reason: str) -> None:
        self.lines.append(ReportLine(name, "-", reason, SKIP))

    @property
    def passed(self) -> bool:
        return all(line.status != FAIL for line in self.lines)

    def render(self) -> str:
        out = [f"== {self.title} =="]
        out.extend(line.render() for line in self.lines)
        out.append(f"verdict: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(out) + "\n"

    def extend(self, other: "Report") -> None:
        self.lines.extend(other.lines)


def write_csv(path, header: list[str], rows: list[list]) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(fmt_number(v) for v in row) + "\n")


_PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"]
_W, _H = 800, 500
_ML, _MR, _MT, _MB = 70, 20, 40, 50


def _ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if hi == lo:
        hi = lo + 1.0
    return [lo + (hi - lo) * i / (count - 1) for i in range(count)]


def render_line_plot(series_list, labels, path, title: str = "") -> None:
    """Write a static SVG line chart; identical inputs give identical bytes.

    ``series_list`` holds TimeSeries-like objects with .times and .values.
    """
    if not series_list:
        raise ValueError("render_line_plot needs at least one series")
    if len(labels) != len(series_list):
        raise ValueError("one label per series required")
    xs = [t for s in series_list for t in s.times]
    ys = [v for s in series_list for v in s.values]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    if y_hi == y_lo:
        y_lo, y_hi = y_lo - 0.5, y_hi + 0.5
    pad = 0.05 * (y_hi - y_lo)
    y_lo, y_hi = y_lo - pad, y_hi + pad
    pw = _W - _ML - _MR
    ph = _H - _MT - _MB

    def sx(x):
        return _ML + (x - x_lo) / (x_hi - x_lo) * pw

    def sy(y):
        return _MT + (y_hi - y) / (y_hi - y_lo) * ph

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        f'<text x="{_W // 2}" y="24" text-anchor="middle" font-family="sans-serif" '
        f'font-size="16">{title}</text>',
        f'<line x1="{_ML}" y1="{_MT + ph}" x2="{_ML + pw}" y2="{_MT + ph}" '
        'stroke="black" stroke-width="1"/>',
        f'<line x1="{_ML}" y1="{_MT}" x2="{_ML}" y2="{_MT + ph}" '
        'stroke="black" stroke-width="1"/>',
    ]
    for xt in _ticks(x_lo, x_hi):
        px = sx(xt)
        parts.append(f'<line x1="{px:.2f}" y1="{_MT + ph}" x2="{px:.2f}" '
                     f'y2="{_MT + ph + 5}" stroke="black" stroke-width="1"/>')
        parts.append(f'<text x="{px:.2f}" y="{_MT + ph + 20}" text-anchor="middle" '
                     f'font-family="sans-serif" font-size="11">{xt:.4g}</text>')
    for yt in _ticks(y_lo, y_hi):
        py = sy(yt)
        parts.append(f'<line x1="{_ML - 5}" y1="{py:.2f}" x2="{_ML}" y2="{py:.2f}" '
                     'stroke="black" stroke-width="1"/>')
        parts.append(f'<text x="{_ML - 8}" y="{py + 4:.2f}" text-anchor="end" '
                     f'font-family="sans-serif" font-size="11">{yt:.4g}</text>')
    parts.append(f'<text x="{_ML + pw // 2}" y="{_H - 10}" text-anchor="middle" '
                 'font-family="sans-serif" font-size="13">t</text>')
    for idx, (series, label) in enumerate(zip(series_list, labels)):
        color = _PALETTE[idx % len(_PALETTE)]
        pts = " ".join(f"{sx(t):.2f},{sy(v):.2f}"
                       for t, v in zip(series.times, series.values))
        parts.append(f'<polyline points="{pts}" fill="none" stroke="{color}" '
                     'stroke-width="1.5"/>')
        ly = _MT + 18 * idx
        parts.append(f'<line x1="{_ML + pw - 150}" y1="{ly + 6}" x2="{_ML + pw - 120}" '
                     f'y2="{ly + 6}" stroke="{color}" stroke-width="2"/>')
        parts.append(f'<text x="{_ML + pw - 114}" y="{ly + 10}" '
                     f'font-family="sans-serif" font-size="12">{label}</text>')
    parts.append("</svg>")
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(parts) + "\n")
