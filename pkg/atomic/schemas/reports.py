from pydantic import BaseModel, ConfigDict, Field


def gaps(values: list[int], upper: int) -> list[int]:
    present = set(values)
    return [v for v in range(upper + 1) if v not in present]


class ImageReport(BaseModel):
    model_config = ConfigDict(validate_by_name=True, validate_by_alias=True, serialize_by_alias=True)

    type: str
    weight: list[int]
    max_value: int | None = Field(default=None, alias="max")
    values: list[int]
    missing: list[int]
    orbit_size: int
    element_counts: dict[int, int] | None = None
    certified_max: int | None = None

    @classmethod
    def from_values(
        cls,
        type: str,
        weight: list[int],
        values: set[int] | list[int],
        orbit_size: int,
        max_value: int | None = None,
        element_counts: dict[int, int] | None = None,
        certified_max: int | None = None,
    ) -> "ImageReport":
        ordered = sorted(set(values))
        if certified_max is not None:
            ordered = [v for v in ordered if v <= certified_max]
            upper = certified_max
            max_value = certified_max if max_value is None else max_value
        else:
            upper = max_value if max_value is not None else max(ordered)
        return cls(
            type=type,
            weight=weight,
            max_value=max_value,
            values=ordered,
            missing=gaps(ordered, upper),
            orbit_size=orbit_size,
            element_counts=element_counts,
            certified_max=certified_max,
        )

    @property
    def is_interval(self) -> bool:
        return not self.missing


class CoreCountReport(BaseModel):
    n: int
    max_size: int
    sizes: dict[int, int]
    missing: list[int]
    cores: dict[int, list[list[int]]] | None = None


class W0Report(BaseModel):
    type: str
    weight: list[int]
    value: int
    closed_form: int | None = None


class ShiEntry(BaseModel):
    root: list[int]
    height: int
    coefficient: int


class ShiReport(BaseModel):
    type: str
    word: list[int]
    entries: list[ShiEntry]
    length: int
    admissible: bool


class AffineReport(BaseModel):
    type: str
    word: list[int]
    translation: list[int]
    finite_word: list[int]
    gamma: list[int]
    atomic_length: int | None = None


class EntropyRow(BaseModel):
    one_line: list[int]
    length: int
    invsum: int
    ninvsum: int
    entropy: int
    cosine: int


class SusanfeEntry(BaseModel):
    root: list[int]
    word: list[int]
    restricted_length: int


class SpecialReflectionReport(BaseModel):
    type: str
    word: list[int]
    indices: list[int]
    constant: int
    expected_constant: int
    parabolic_word: list[int]
    coset_word: list[int]


class EntropyStats(BaseModel):
    n: int
    permutations: int
    invsum_total: int
    average_cosine: str
    identities_hold: bool


class FixtureResult(BaseModel):
    name: str
    expected: str
    actual: str
    passed: bool


class UtopicCount(BaseModel):
    type: str
    indices: list[int]
    count: int
    fibonacci_minus_one: int
