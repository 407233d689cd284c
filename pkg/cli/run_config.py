from pydantic import BaseModel, Field, field_validator

from atomic.domain.enums import OutputFormat
from atomic.domain.rootdata import TypeLabel, parse_type


def parse_int_list(text: str | None) -> list[int] | None:
    """"1,1,2" or "1 1 2" -> [1, 1, 2]."""
    if text is None:
        return None
    cleaned = text.replace(",", " ").split()
    return [int(x) for x in cleaned]


class RunConfig(BaseModel):
    type_string: str | None = None
    weight_coords: list[int] | None = None
    word: list[int] | None = None
    radius: int | None = Field(default=None, gt=0)
    max_size: int | None = Field(default=None, ge=0)
    n: int | None = Field(default=None, gt=0)
    thread_count: int = Field(default=1, gt=0)
    output_format: OutputFormat = OutputFormat.TEXT
    stress: bool = False

    @field_validator("type_string")
    @classmethod
    def _type_must_parse(cls, value: str | None) -> str | None:
        if value is not None:
            parse_type(value)
        return value

    @property
    def label(self) -> TypeLabel | None:
        return parse_type(self.type_string) if self.type_string is not None else None
