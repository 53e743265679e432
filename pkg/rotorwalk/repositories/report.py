"""Report and tree export writers"""
import csv
import io
from pathlib import Path
from typing import Iterable, List, Optional, TextIO, Tuple, Union

from rotorwalk.core.exceptions import ConfigError
from rotorwalk.models.enums import OutputFormat
from rotorwalk.schemas.report import ClassifyReport, CommandReport, SimulateReport

CSV_COLUMNS = ["h", "n", "E_n", "ratio", "escape_prob", "verdict", "seed"]


def csv_rows(report: CommandReport) -> List[dict]:
    """Tabular view of a report; only simulate and classify have one"""
    if isinstance(report, SimulateReport):
        return [row.model_dump(mode="json") for row in report.rows]
    if isinstance(report, ClassifyReport):
        return [{
            "h": "", "n": "", "E_n": "", "ratio": "", "escape_prob": "",
            "verdict": report.classification.verdict.value,
            "seed": "" if report.config.seed is None else report.config.seed,
        }]
    raise ConfigError([f"format: CSV output is only available for simulate and classify, not {report.command}"])


class ReportRepository:
    """Writes command reports as JSON or CSV"""

    def __init__(self, stream: TextIO):
        self.stream = stream

    def write_json(self, report: CommandReport) -> None:
        self.stream.write(report.model_dump_json(indent=2))
        self.stream.write("\n")

    def write_csv(self, report: CommandReport) -> None:
        writer = csv.DictWriter(self.stream, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(csv_rows(report))

    def write(self, report: CommandReport, output_format: OutputFormat = OutputFormat.JSON) -> None:
        if output_format is OutputFormat.CSV:
            self.write_csv(report)
        else:
            self.write_json(report)


def render(report: CommandReport, output_format: OutputFormat = OutputFormat.JSON) -> str:
    buffer = io.StringIO()
    ReportRepository(buffer).write(report, output_format)
    return buffer.getvalue()


def save_report(report: CommandReport, path: Union[str, Path], output_format: OutputFormat) -> None:
    """Render first so a CSV error leaves no partial file behind"""
    text = render(report, output_format)
    Path(path).write_text(text, encoding="utf-8")


def save_edge_list(edges: Iterable[Tuple[int, int, int, int]], path: Union[str, Path],
                   header: Optional[str] = "parent child child_type depth") -> int:
    """One "parent child child_type depth" line per edge; returns the number of edges written"""
    count = 0
    with open(path, "w", encoding="utf-8") as handle:
        if header:
            handle.write(f"# {header}\n")
        for parent, child, child_type, depth in edges:
            handle.write(f"{parent} {child} {child_type} {depth}\n")
            count += 1
    return count
