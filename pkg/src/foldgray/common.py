from __future__ import annotations

import enum
from dataclasses import dataclass, fields


class Kind(str, enum.Enum):
    STAMP = "stamp"
    SEMI = "semi"
    OPEN = "open"

    @classmethod
    def coerce(cls, value: "Kind | str") -> "Kind":
        if isinstance(value, cls):
            return value
        aliases = {
            "stamp": cls.STAMP, "stampfoldings": cls.STAMP, "stamp_foldings": cls.STAMP,
            "semi": cls.SEMI, "semimeanders": cls.SEMI, "semi_meanders": cls.SEMI,
            "open": cls.OPEN, "openmeanders": cls.OPEN, "open_meanders": cls.OPEN,
        }
        try:
            return aliases[str(value).lower()]
        except KeyError:
            raise ValueError(f"unknown kind {value!r}") from None


GENERATED_KINDS = (Kind.STAMP, Kind.SEMI)


@dataclass(frozen=True)
class GenConfig:
    n: int
    kind: Kind = Kind.STAMP

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", Kind.coerce(self.kind))
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.kind not in GENERATED_KINDS:
            raise ValueError(f"no Gray code generator for kind {self.kind.value!r}")


@dataclass
class OpCounters:
    """Elementary-operation tallies collected by the generators.

    ``rotations`` counts single head moves, ``scans`` counts list elements
    visited while searching (index lookups and level checks), ``splices``
    counts node insertions, removals and window re-links.
    """

    rotations: int = 0
    scans: int = 0
    splices: int = 0
    nsm_calls: int = 0
    emissions: int = 0
    max_ops_per_emission: int = 0

    @property
    def total(self) -> int:
        return self.rotations + self.scans + self.splices + self.nsm_calls

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}
