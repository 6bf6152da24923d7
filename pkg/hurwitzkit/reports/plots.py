"""SVG plots rendered from saved reports through jinja2 templates."""

import logging
from pathlib import Path
from typing import Dict, List, Tuple

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from ..cohen_lenstra.measure import mu_mass
from ..core.errors import ValidationError
from ..models.abelian import AbelianLGroupType
from ..models.experiment import Report

logger = logging.getLogger(__name__)

TEMPLATE_DIR = Path(__file__).parent / "templates"
PLOT_KINDS = ("betti-vs-n", "distribution-vs-mu", "hq-vs-q")

WIDTH, HEIGHT = 640, 420
LEFT, RIGHT, TOP, BOTTOM = 70, 610, 40, 370


def _environment() -> Environment:
    return Environment(loader=FileSystemLoader(str(TEMPLATE_DIR)), undefined=StrictUndefined,
                       trim_blocks=True, lstrip_blocks=True, autoescape=True)


def _scale(lo: float, hi: float, a: float, b: float):
    span = (hi - lo) or 1.0
    return lambda v: round(a + (v - lo) * (b - a) / span, 2)


def _ticks(lo: float, hi: float, count: int, to_pos, integral: bool) -> List[dict]:
    if integral:
        step = max(1, int((hi - lo) // count) or 1)
        values = list(range(int(lo), int(hi) + 1, step))
    else:
        values = [lo + (hi - lo) * i / count for i in range(count + 1)]
    return [{"pos": to_pos(v), "label": str(v) if integral else f"{v:.3g}"} for v in values]


def _frame(title: str, x_label: str, y_label: str) -> dict:
    return {
        "width": WIDTH, "height": HEIGHT, "left": LEFT, "right": RIGHT, "top": TOP, "bottom": BOTTOM,
        "title": title, "x_label": x_label, "y_label": y_label,
    }


def _betti(report: Report) -> Tuple[str, dict]:
    if report.kind != "homology":
        raise ValidationError(f"betti-vs-n needs a homology report, got {report.kind}")
    series = [(r["n"], r["betti"], r.get("bijective")) for r in report.rows if r.get("betti") is not None]
    if not series:
        raise ValidationError("betti-vs-n: the report has no Betti numbers")
    ns = [s[0] for s in series]
    values = [s[1] for s in series]
    x = _scale(min(ns), max(ns), LEFT + 20, RIGHT - 20)
    y = _scale(0, max(values) or 1, BOTTOM, TOP + 20)
    p = report.summary.get("p", 0)
    ctx = _frame(f"b_{p}(n) over the window", "n", f"b_{p}(n) [Theorem th:stability]")
    ctx["x_ticks"] = _ticks(min(ns), max(ns), len(ns), x, True)
    ctx["y_ticks"] = _ticks(0, max(values) or 1, 5, y, max(values) >= 5)
    ctx["points"] = [{"x": x(n), "y": y(v), "n": n, "value": v, "stable": bool(b)} for n, v, b in series]
    return "betti.svg.j2", ctx


def _distribution_series(report: Report) -> Tuple[Dict[str, float], Dict[str, float]]:
    if report.kind == "ff-census":
        observed = report.summary.get("l_part_distribution") or {}
        mu = report.summary.get("mu_masses") or {}
        return observed, mu
    if report.kind == "cl-sample":
        observed = report.summary.get("distribution") or {}
        l = int(report.config["l"])
        mu = {key: mu_mass(AbelianLGroupType.parse(key, l)).value for key in observed}
        return observed, mu
    raise ValidationError(f"distribution-vs-mu needs an ff-census or cl-sample report, got {report.kind}")


def _distribution(report: Report) -> Tuple[str, dict]:
    observed, mu = _distribution_series(report)
    if not observed:
        raise ValidationError("distribution-vs-mu: the report has no distribution")
    keys = sorted(observed, key=lambda k: (sum(int(e) for e in k.split(".")), k))
    top = max(max(observed.values()), max(mu.get(k, 0.0) for k in keys))
    y = _scale(0, top, BOTTOM, TOP + 20)
    slot = (RIGHT - LEFT) / len(keys)
    w = round(slot * 0.35, 2)
    ctx = _frame("l-part distribution against the Cohen-Lenstra measure", "partition of the l-part",
                 "mass [§8 μ]")
    ctx["x_ticks"] = [{"pos": round(LEFT + slot * (i + 0.5), 2), "label": k} for i, k in enumerate(keys)]
    ctx["y_ticks"] = _ticks(0, top, 5, y, False)
    ctx["bars"] = [
        {
            "label": k, "x": round(LEFT + slot * (i + 0.5) - w, 2), "w": w,
            "observed": observed[k], "mu": mu.get(k, 0.0),
            "y_obs": y(observed[k]), "y_mu": y(mu.get(k, 0.0)),
        }
        for i, k in enumerate(keys)
    ]
    return "distribution.svg.j2", ctx


def _hq(report: Report) -> Tuple[str, dict]:
    if report.kind != "kcomplex":
        raise ValidationError(f"hq-vs-q needs a kcomplex report, got {report.kind}")
    h = {int(q): v for q, v in (report.summary.get("h") or {}).items() if v is not None}
    if not h:
        raise ValidationError("hq-vs-q: H_q(K) vanishes throughout the window")
    censored = set(report.summary.get("censored") or [])
    qs = sorted(h)
    hi = max(max(h.values()), max(qs)) + 1
    x = _scale(0, max(qs) + 1, LEFT + 20, RIGHT - 20)
    y = _scale(0, hi, BOTTOM, TOP + 20)
    ctx = _frame(f"Top degree h_q of H_q(K({report.summary.get('module', 'M')}))", "q",
                 "h_q [Theorem Koszulbound]")
    ctx["x_ticks"] = _ticks(0, max(qs) + 1, max(qs) + 1, x, True)
    ctx["y_ticks"] = _ticks(0, hi, min(hi, 8), y, True)
    ctx["points"] = [{"x": x(q), "y": y(h[q]), "q": q, "value": h[q], "censored": q in censored} for q in qs]
    offset = report.summary.get("a1_surrogate")
    ctx["level"] = None
    if offset is not None:
        end = max(qs) + 1
        ctx["level"] = {"x1": x(0), "y1": y(offset), "x2": x(end), "y2": y(min(end + offset, hi)),
                        "offset": offset}
    return "hq.svg.j2", ctx


_BUILDERS = {"betti-vs-n": _betti, "distribution-vs-mu": _distribution, "hq-vs-q": _hq}


def render_plot(report: Report, kind: str) -> str:
    """SVG text for ``kind``; raises ValidationError when the report lacks the series."""
    if kind not in _BUILDERS:
        raise ValidationError(f"Unknown plot kind {kind!r}; expected one of {', '.join(PLOT_KINDS)}")
    template, ctx = _BUILDERS[kind](report)
    return _environment().get_template(template).render(**ctx)


def plot(report: Report, kind: str, path: str) -> Path:
    """Write the plot; nothing is written when the series is missing."""
    svg = render_plot(report, kind)
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", encoding="utf-8", newline="\n") as f:
        f.write(svg)
    logger.info(f"Wrote {kind} plot to {out}")
    return out

