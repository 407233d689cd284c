import csv
import io

from atomic.domain.perms import (
    all_permutations,
    cosine,
    entropy,
    inversion_count,
    invsum,
    ninvsum,
)
from atomic.schemas.reports import EntropyRow, ImageReport

ENTROPY_COLUMNS = ["one_line", "length", "invsum", "ninvsum", "entropy", "cosine"]


def entropy_rows(n: int) -> list[EntropyRow]:
    return [
        EntropyRow(
            one_line=list(w.one_line),
            length=inversion_count(w),
            invsum=invsum(w),
            ninvsum=ninvsum(w),
            entropy=entropy(w),
            cosine=cosine(w),
        )
        for w in all_permutations(n)
    ]


def entropy_csv(n: int) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(ENTROPY_COLUMNS)
    for row in entropy_rows(n):
        writer.writerow(
            [
                "".join(map(str, row.one_line)) if n < 10 else " ".join(map(str, row.one_line)),
                row.length,
                row.invsum,
                row.ninvsum,
                row.entropy,
                row.cosine,
            ]
        )
    return buffer.getvalue()


def image_csv(report: ImageReport) -> str:
    """One row per attained value with its element count when known."""
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(["value", "count"])
    counts = report.element_counts or {}
    for value in report.values:
        writer.writerow([value, counts.get(value, "")])
    return buffer.getvalue()
