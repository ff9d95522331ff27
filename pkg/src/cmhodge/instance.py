"""Instance specifications: the line-oriented input format, its parser and
serializer, and construction of the validated in-memory objects.

Format (``#`` starts a comment, blank lines are ignored)::

    name my-instance          # optional
    group 4                   # group order; the table follows
    table
    0 1 2 3
    1 2 3 0
    2 3 0 1
    3 0 1 2
    iota 2
    factor 0                  # subgroup element list, one line per factor
    cmtype 0 1                # point indices into the embedding set
    degrees all               # or a list of p values; optional, default all

Exactly one ``group``/``table``/``iota``/``cmtype`` each; at least one
``factor``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .cmtypes import CMType, validate_cm_type
from .errors import CmhodgeError, ParseError, ValidationError
from .groups import EmbeddingSet, GroupTable, build_group, embedding_set


@dataclass(frozen=True)
class InstanceSpec:
    name: str
    order: int
    mult: tuple[tuple[int, ...], ...]
    iota: int
    factors: tuple[tuple[int, ...], ...]
    cm_type: tuple[int, ...]
    degrees: tuple[int, ...] | None  # None means "all"

    def with_cm_type(self, points) -> "InstanceSpec":
        return replace(self, cm_type=tuple(sorted(points)))


@dataclass(frozen=True)
class BuiltInstance:
    spec: InstanceSpec
    group: GroupTable
    embeddings: EmbeddingSet
    cm_type: CMType

    @property
    def degrees(self) -> list[int]:
        if self.spec.degrees is None:
            return list(range(self.embeddings.size // 2 + 1))
        return list(self.spec.degrees)


def build_instance(spec: InstanceSpec) -> BuiltInstance:
    """Construct and validate the group, embedding set and CM-type; wraps
    any structural failure in ``ValidationError`` naming the cause."""
    try:
        group = build_group(spec.order, spec.mult, spec.iota)
        embeddings = embedding_set(group, spec.factors)
        phi = validate_cm_type(embeddings, spec.cm_type)
    except CmhodgeError as exc:
        raise ValidationError(f"{type(exc).__name__}: {exc}") from exc
    if spec.degrees is not None:
        half = embeddings.size // 2
        for p in spec.degrees:
            if not 0 <= p <= half:
                raise ValidationError(f"degree {p} outside 0..{half}")
    return BuiltInstance(spec, group, embeddings, phi)


def _ints(parts: list[str], line_no: int) -> list[int]:
    try:
        return [int(x) for x in parts]
    except ValueError as exc:
        raise ParseError(f"expected integers, got {parts!r}", line_no) from exc


def parse_instance(text: str) -> InstanceSpec:
    """Parse the documented line format; errors carry the line number."""
    name = ""
    order: int | None = None
    rows: list[tuple[int, ...]] = []
    iota: int | None = None
    factors: list[tuple[int, ...]] = []
    cm_type: tuple[int, ...] | None = None
    degrees: tuple[int, ...] | None = None

    lines = text.splitlines()
    i = 0
    while i < len(lines):
        line_no = i + 1
        line = lines[i].split("#", 1)[0].strip()
        i += 1
        if not line:
            continue
        key, *parts = line.split()
        if key == "name":
            name = " ".join(parts)
        elif key == "group":
            if order is not None:
                raise ParseError("duplicate group line", line_no)
            if len(parts) != 1:
                raise ParseError("group wants exactly one integer (the order)", line_no)
            order = _ints(parts, line_no)[0]
        elif key == "table":
            if order is None:
                raise ParseError("table must come after the group line", line_no)
            if rows:
                raise ParseError("duplicate table", line_no)
            for r in range(order):
                if i >= len(lines):
                    raise ParseError(f"table row {r} missing", len(lines))
                row_line = lines[i].split("#", 1)[0].strip()
                row = _ints(row_line.split(), i + 1)
                if len(row) != order:
                    raise ParseError(f"table row has {len(row)} entries, expected {order}", i + 1)
                rows.append(tuple(row))
                i += 1
        elif key == "iota":
            if iota is not None:
                raise ParseError("duplicate iota line", line_no)
            if len(parts) != 1:
                raise ParseError("iota wants exactly one integer", line_no)
            iota = _ints(parts, line_no)[0]
        elif key == "factor":
            factors.append(tuple(_ints(parts, line_no)))
        elif key == "cmtype":
            if cm_type is not None:
                raise ParseError("duplicate cmtype line", line_no)
            cm_type = tuple(_ints(parts, line_no))
        elif key == "degrees":
            if parts == ["all"]:
                degrees = None
            else:
                degrees = tuple(_ints(parts, line_no))
        else:
            raise ParseError(f"unknown directive {key!r}", line_no)

    if order is None:
        raise ParseError("missing group line")
    if len(rows) != order:
        raise ParseError("missing or incomplete table")
    if iota is None:
        raise ParseError("missing iota line")
    if not factors:
        raise ParseError("at least one factor line is required")
    if cm_type is None:
        raise ParseError("missing cmtype line")
    return InstanceSpec(
        name=name,
        order=order,
        mult=tuple(rows),
        iota=iota,
        factors=tuple(factors),
        cm_type=cm_type,
        degrees=degrees,
    )


def serialize_instance(spec: InstanceSpec) -> str:
    out = []
    if spec.name:
        out.append(f"name {spec.name}")
    out.append(f"group {spec.order}")
    out.append("table")
    for row in spec.mult:
        out.append(" ".join(str(x) for x in row))
    out.append(f"iota {spec.iota}")
    for factor in spec.factors:
        out.append("factor " + " ".join(str(x) for x in factor))
    out.append("cmtype " + " ".join(str(x) for x in spec.cm_type))
    if spec.degrees is None:
        out.append("degrees all")
    else:
        out.append("degrees " + " ".join(str(p) for p in spec.degrees))
    return "\n".join(out) + "\n"
