"""Line-oriented ``key: value`` certificates."""

from __future__ import annotations

from ..designs import DesignParameters
from .verify import PAIR_SETS, BlockActionReport, PairwiseReport


def _fmt(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, bool):
        return "yes" if x else "no"
    if isinstance(x, dict):
        return " ".join(f"{k}:{v}" for k, v in x.items()) or "-"
    if isinstance(x, (tuple, list)):
        return " ".join(map(str, x)) or "-"
    return str(x)


def format_certificate(tag: str, params: DesignParameters, report: PairwiseReport | None,
                       blocks: BlockActionReport | None = None, group_label: str = "",
                       group_order: int | None = None, extra: dict | None = None,
                       timing: bool = True) -> str:
    lines = [f"row: {tag}"]
    if group_label:
        lines.append(f"group: {group_label}")
    if group_order is not None:
        lines.append(f"group_order: {group_order}")
    lines += [
        f"v: {params.v}",
        f"b: {params.b}",
        f"k: {_fmt(params.k)}",
        f"r: {_fmt(params.r)}",
        f"lambda: {_fmt(params.lam)}",
        f"t_max: {params.t_max}",
        f"intersections: {_fmt(params.intersection_profile)}",
        f"mu: {_fmt(params.mu)}",
    ]
    if report is not None:
        lines.append(f"method: {report.method}")
        for name in PAIR_SETS:
            lines.append(f"orbits.{name}: {_fmt(report.counts[name])}")
        for name, ok in report.conditions.items():
            lines.append(f"condition.{name}: {_fmt(ok)}")
    if blocks is not None:
        lines += [
            f"faithful_on_points: {_fmt(blocks.faithful_on_points)}",
            f"faithful_on_blocks: {_fmt(blocks.faithful_on_blocks)}",
            f"rank_on_blocks: {blocks.rank_on_blocks}",
            f"primitive_on_blocks: {_fmt(blocks.primitive_on_blocks)}",
            f"design_type: {blocks.design_tag}",
            f"imprimitive_case: {blocks.imprimitive_case}",
            f"nicely_affine: {_fmt(blocks.nicely_affine.holds if blocks.nicely_affine else None)}",
        ]
    for k, val in (extra or {}).items():
        lines.append(f"{k}: {_fmt(val)}")
    if report is not None:
        lines.append(f"verdict: {'pairwise-transitive' if report.verdict else 'not-pairwise-transitive'}")
        if timing:
            lines.append(f"seconds: {report.seconds:.3f}")
    return "\n".join(lines) + "\n"
