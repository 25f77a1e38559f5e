# bench_cli/emit.py
"""Report writers: CSV rows, a markdown size table and plot-ready blocks."""
import csv
import io
import sys
from typing import Dict, List, Optional

from metrics.counters import Counters

from .runner import MEAN, BenchReport, BenchRow

CSV_COLUMNS = ("algorithm", "n", "k", "seed", "repeat", "elapsed_ms",
               "relinks", "merge_visits", "comparisons", "depth", "verified")
FORMATS = ("csv", "markdown", "plotdata")


def _csv_record(row: BenchRow) -> Dict[str, object]:
    return {
        "algorithm": row.algorithm,
        "n": row.n,
        "k": "" if row.k is None else row.k,
        "seed": row.seed,
        "repeat": row.repeat,
        "elapsed_ms": f"{row.elapsed_ms:.4f}",
        "relinks": row.counters.relink_count,
        "merge_visits": row.counters.merge_visit_count,
        "comparisons": row.counters.comparison_count,
        "depth": row.counters.recursion_depth_max,
        "verified": "true" if row.verified else "false",
    }


def to_csv(report: BenchReport) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in report.rows:
        writer.writerow(_csv_record(row))
    return buffer.getvalue()


def parse_csv(text: str) -> BenchReport:
    """
    Read rows written by ``to_csv``. Counters not present in the CSV come
    back as zero.

    :raises ValueError: header differs from CSV_COLUMNS
    """
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    report = BenchReport()
    for record in reader:
        counters = Counters(
            relink_count=int(record["relinks"]),
            merge_visit_count=int(record["merge_visits"]),
            comparison_count=int(record["comparisons"]),
            recursion_depth_max=int(record["depth"]),
        )
        repeat = record["repeat"]
        report.rows.append(BenchRow(
            algorithm=record["algorithm"],
            n=int(record["n"]),
            k=int(record["k"]) if record["k"] else None,
            seed=int(record["seed"]),
            repeat=repeat if repeat == MEAN else int(repeat),
            elapsed_ms=float(record["elapsed_ms"]),
            counters=counters,
            verified=record["verified"] == "true",
        ))
    return report


def to_markdown(report: BenchReport) -> str:
    """One row per algorithm label, one column per n, mean milliseconds in the cells."""
    sizes = report.sizes()
    lines = [
        "| algorithm | " + " | ".join(f"n={n}" for n in sizes) + " |",
        "|---|" + "---:|" * len(sizes),
    ]
    for label in report.labels():
        cells = []
        for n in sizes:
            mean = report.mean_elapsed(label, n)
            cells.append("" if mean is None else f"{mean:.3f}")
        lines.append(f"| {label} | " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def to_plotdata(report: BenchReport) -> str:
    """Per label a ``# label`` line then ``n mean_ms`` lines; blocks split by one blank line."""
    blocks: List[str] = []
    for label in report.labels():
        lines = [f"# {label}"]
        for n in report.sizes():
            mean = report.mean_elapsed(label, n)
            if mean is not None:
                lines.append(f"{n} {mean:.4f}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


_WRITERS = {"csv": to_csv, "markdown": to_markdown, "plotdata": to_plotdata}


def render(report: BenchReport, fmt: str) -> str:
    """
    :raises ValueError: empty report or unknown format
    """
    if not report.rows:
        raise ValueError("cannot emit an empty report")
    if fmt not in _WRITERS:
        raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")
    return _WRITERS[fmt](report)


def emit(report: BenchReport, fmt: str, destination: Optional[str] = None) -> None:
    """
    Write the report to ``destination`` (a file path) or to standard output.

    :raises ValueError: empty report or unknown format
    :raises OSError: destination cannot be written
    """
    text = render(report, fmt)
    if destination is None or destination == "-":
        sys.stdout.write(text)
        return
    with open(destination, "w", encoding="utf-8", newline="") as f:
        f.write(text)
