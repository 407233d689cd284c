from pydantic import BaseModel

from atomic.domain.enums import OutputFormat
from atomic.schemas.reports import ImageReport, ShiReport


def _compact(values: list[int]) -> str:
    """[0,1,2,4,5,6] -> "0-2, 4-6"."""
    if not values:
        return "-"
    runs = []
    start = prev = values[0]
    for v in values[1:]:
        if v == prev + 1:
            prev = v
            continue
        runs.append((start, prev))
        start = prev = v
    runs.append((start, prev))
    return ", ".join(str(a) if a == b else f"{a}-{b}" for a, b in runs)


def shi_pyramid(report: ShiReport) -> str:
    """Coefficients arranged by root height, the highest root on top."""
    rows: dict[int, list[int]] = {}
    for entry in report.entries:
        rows.setdefault(entry.height, []).append(entry.coefficient)
    if not rows:
        return ""
    cells = {h: [f"{k:>3}" for k in row] for h, row in rows.items()}
    width = max(len("".join(row)) for row in cells.values())
    return "\n".join("".join(cells[h]).center(width).rstrip() for h in sorted(cells, reverse=True))


def image_text(report: ImageReport) -> str:
    lines = [
        f"type {report.type} weight {report.weight}",
        f"orbit size {report.orbit_size}",
        f"values {_compact(report.values)}",
        f"missing {_compact(report.missing)}",
    ]
    if report.max_value is not None and report.certified_max is None:
        lines.insert(2, f"max {report.max_value}")
    if report.certified_max is not None:
        lines.insert(2, f"certified up to {report.certified_max}")
    lines.append("interval" if report.is_interval else "not an interval")
    return "\n".join(lines)


def render(report: BaseModel | list[BaseModel], fmt: OutputFormat) -> str:
    if isinstance(report, list):
        if fmt is OutputFormat.JSON:
            return "[" + ",".join(item.model_dump_json() for item in report) + "]"
        return "\n".join(render(item, fmt) for item in report)
    if fmt is OutputFormat.JSON:
        return report.model_dump_json()
    if isinstance(report, ImageReport):
        return image_text(report)
    if isinstance(report, ShiReport):
        return f"type {report.type} word {report.word} length {report.length}\n{shi_pyramid(report)}"
    return "\n".join(f"{key} {value}" for key, value in report.model_dump().items())
