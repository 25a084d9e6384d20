"""Certify every catalog row: parameters, verdicts and block-action data."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from ..constructions import CatalogRow, catalog
from ..designs import DesignParameters, is_trivial, parameters
from ..pairwise import BlockActionReport, PairwiseReport, classify_block_action, format_certificate, verify

CONSTRUCTION_ONLY = "construction-only: parameters verified, group check skipped"


@dataclass
class RowCertificate:
    tag: str
    params: DesignParameters | None
    report: PairwiseReport | None
    blocks: BlockActionReport | None
    expected_verdict: bool
    passed: bool
    status: str
    problems: list[str] = field(default_factory=list)
    seconds: float = 0.0
    group_label: str = ""
    group_order: int | None = None

    def text(self, timing: bool = True) -> str:
        if self.params is None:
            return f"row: {self.tag}\nstatus: {self.status}\n"
        extra = {
            "expected_verdict": "pairwise-transitive" if self.expected_verdict else "not-pairwise-transitive",
            "status": self.status,
            "check": "pass" if self.passed else "FAIL " + "; ".join(self.problems),
        }
        return format_certificate(self.tag, self.params, self.report, self.blocks,
                                  group_label=self.group_label, group_order=self.group_order,
                                  extra=extra, timing=timing)


@dataclass
class CertificateBundle:
    rows: list[RowCertificate]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def failing(self) -> list[str]:
        return [r.tag for r in self.rows if not r.passed]

    def body(self, timing: bool = False) -> str:
        return "\n".join(r.text(timing) for r in self.rows)

    def summary(self) -> str:
        ran = [r for r in self.rows if r.status != "skipped"]
        fails = self.failing()
        out = f"{len(ran)} rows certified, {len(self.rows) - len(ran)} skipped, {len(fails)} failing"
        if fails:
            out += ": " + ", ".join(fails)
        return out


def _check_parameters(row: CatalogRow, p: DesignParameters) -> list[str]:
    problems = []
    if row.expected is not None and (p.v, p.k, p.lam) != row.expected:
        problems.append(f"parameters {(p.v, p.k, p.lam)} != expected {row.expected}")
    if row.mu is not None and p.mu != row.mu:
        problems.append(f"mu {p.mu} != expected {row.mu}")
    return problems


def certify_row(row: CatalogRow, mode: str = "both") -> RowCertificate:
    start = time.perf_counter()
    design, group = row.design, row.group
    p = parameters(design)
    problems = _check_parameters(row, p)
    if group is None:
        cert = RowCertificate(row.tag, p, None, None, row.expected_verdict, not problems,
                              CONSTRUCTION_ONLY, problems)
    else:
        report = verify(design, group, mode)
        blocks = None
        if p.is_2_design and not is_trivial(p):
            blocks = classify_block_action(design, group)
        if report.verdict != row.expected_verdict:
            problems.append(f"verdict {report.verdict} != expected {row.expected_verdict}")
        cert = RowCertificate(row.tag, p, report, blocks, row.expected_verdict, not problems,
                              "verified", problems)
        cert.group_label, cert.group_order = group.label, group.order()
    cert.seconds = time.perf_counter() - start
    return cert


def certify_all(max_points: int = 200, mode: str = "both", tags=None) -> CertificateBundle:
    """Certify each catalog row with at most ``max_points`` points; others are listed as skipped."""
    out = []
    for row in catalog():
        if tags is not None and row.tag not in tags:
            continue
        if row.v > max_points:
            out.append(RowCertificate(row.tag, None, None, None, row.expected_verdict, True, "skipped"))
            continue
        out.append(certify_row(row, mode))
    return CertificateBundle(out)
