"""analyze -> plan -> realize over records, plus the per-category report."""

from __future__ import annotations

from dataclasses import dataclass, field

from .analyzer import Kind, NegationAnalysis, analyze
from .generator import RealizedSentence, realize
from .hangul import ConjugationTable, default_table
from .lexicons import RuleLexicons
from .planner import TransformPlan, plan
from .records import TransferRecord

REPORT_COLUMNS = ("NS-AP-AO", "AS-NP-AO", "AS-AP-NO", "NS-NP-AO", "NS-AP-NO", "AS-NP-NO", "Others")
SINGLE_COLUMNS = REPORT_COLUMNS[:3]
DOUBLE_COLUMNS = REPORT_COLUMNS[3:6]


@dataclass(frozen=True)
class Outcome:
    record: TransferRecord
    analysis: NegationAnalysis
    plan: TransformPlan | None
    realized: RealizedSentence


def translate(record: TransferRecord, lex: RuleLexicons,
              table: ConjugationTable | None = None) -> Outcome:
    analysis = analyze(record.english, lex)
    tplan = plan(analysis, record.frame, lex, record.stages) if analysis.is_negative else None
    return Outcome(record, analysis, tplan, realize(record.frame, tplan, table or default_table()))


def report_column(analysis: NegationAnalysis) -> str:
    code = analysis.structure.value
    return code if code in REPORT_COLUMNS else "Others"


@dataclass
class CategoryReport:
    counts: dict[str, int] = field(default_factory=lambda: dict.fromkeys(REPORT_COLUMNS, 0))
    kind_counts: dict[str, int] = field(default_factory=lambda: {k.value: 0 for k in Kind})
    total: int = 0

    @classmethod
    def from_analyses(cls, analyses) -> "CategoryReport":
        rep = cls()
        for a in analyses:
            rep.counts[report_column(a)] += 1
            rep.kind_counts[a.kind.value] += 1
            rep.total += 1
        assert sum(rep.counts.values()) == rep.total
        return rep

    @property
    def negative(self) -> int:
        return self.total - self.kind_counts[Kind.NonNegative.value]

    @property
    def negative_share(self) -> float:
        return 100.0 * self.negative / self.total if self.total else 0.0

    def render(self, delimited: bool = False) -> str:
        if delimited:
            lines = ["\t".join(("category",) + REPORT_COLUMNS),
                     "\t".join(["count"] + [str(self.counts[c]) for c in REPORT_COLUMNS])]
            lines += [f"kind\t{k}\t{v}" for k, v in self.kind_counts.items()]
            lines.append(f"total\t{self.total}\tnegative\t{self.negative}\t{self.negative_share:.1f}%")
            return "\n".join(lines)
        width = max(len(c) for c in REPORT_COLUMNS) + 2
        header = "".join(c.ljust(width) for c in REPORT_COLUMNS)
        values = "".join(str(self.counts[c]).ljust(width) for c in REPORT_COLUMNS)
        singles = sum(self.counts[c] for c in SINGLE_COLUMNS)
        doubles = sum(self.counts[c] for c in DOUBLE_COLUMNS)
        kinds = "  ".join(f"{k}={v}" for k, v in self.kind_counts.items())
        return "\n".join([
            f"Single negative: {singles}    Double negative: {doubles}    "
            f"Others: {self.counts['Others']}",
            header.rstrip(),
            values.rstrip(),
            f"kinds: {kinds}",
            f"negative records: {self.negative} of {self.total} ({self.negative_share:.1f}%)",
        ])
