"""Windmill graphs, labellings, and the (near) graceful verifier.

A windmill is a one-point union of cycles; every vane shares the central
vertex, which always carries the label 0.  A labelling with m edges is
graceful when the nonzero vertex labels are distinct values in [1, m] and the
cyclic absolute differences hit every value in [1, m] exactly once.  The
near graceful convention used by every constructive routine here omits the
vertex label m and the edge label m, using m+1 instead for both.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass

from .errors import MalformedLabelling

GRACEFUL = "graceful"
NEAR_GRACEFUL = "near-graceful"
MODES = (GRACEFUL, NEAR_GRACEFUL)


@dataclass(frozen=True)
class WindmillSpec:
    """Multiset of (cycle length, vane count) sharing one central vertex."""

    vanes: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        seen = set()
        for item in self.vanes:
            if not (isinstance(item, tuple) and len(item) == 2):
                raise MalformedLabelling(f"bad vane group {item!r}")
            length, count = item
            if not (isinstance(length, int) and isinstance(count, int)):
                raise MalformedLabelling(f"bad vane group {item!r}")
            if length < 3:
                raise MalformedLabelling(f"cycle length {length} < 3")
            if count < 1:
                raise MalformedLabelling(f"vane count {count} < 1")
            if length in seen:
                raise MalformedLabelling(f"cycle length {length} listed twice")
            seen.add(length)
        if self.edge_count < 3:
            raise MalformedLabelling("windmill needs at least 3 edges")

    @staticmethod
    def of(*groups: tuple[int, int]) -> "WindmillSpec":
        return WindmillSpec(tuple(sorted((l, c) for l, c in groups if c)))

    @property
    def edge_count(self) -> int:
        return sum(length * count for length, count in self.vanes)

    @property
    def vane_count(self) -> int:
        return sum(count for _, count in self.vanes)

    def count_of(self, length: int) -> int:
        for l, c in self.vanes:
            if l == length:
                return c
        return 0

    @staticmethod
    def parse(text: str) -> "WindmillSpec":
        """Parse the CLI grammar ``c3=4,c4=3`` (closed length set {3,4,5,6})."""
        groups = []
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            try:
                key, value = part.split("=")
                length = int(key.lstrip("cC"))
                count = int(value)
            except ValueError as exc:
                raise MalformedLabelling(f"bad graph spec component {part!r}") from exc
            if not key.lower().startswith("c") or length not in (3, 4, 5, 6):
                raise MalformedLabelling(f"unsupported cycle length in {part!r}")
            if count > 0:
                groups.append((length, count))
        if not groups:
            raise MalformedLabelling(f"empty graph spec {text!r}")
        return WindmillSpec.of(*groups)

    def to_text(self) -> str:
        return ",".join(f"c{l}={c}" for l, c in self.vanes)


@dataclass(frozen=True)
class Labelling:
    """Vertex labels per vane; each tuple starts at the central 0.

    A vane ``(0, a, b, c)`` is the cycle 0-a-b-c-0; the closing edge back to
    the centre is implicit.
    """

    spec: WindmillSpec
    vanes: tuple[tuple[int, ...], ...]
    mode: str

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise MalformedLabelling(f"unknown mode {self.mode!r}")
        lengths = Counter(len(v) for v in self.vanes)
        expected = Counter({l: c for l, c in self.spec.vanes})
        if lengths != expected:
            raise MalformedLabelling(
                f"vane lengths {dict(lengths)} do not match spec {dict(expected)}"
            )
        for vane in self.vanes:
            if not vane or vane[0] != 0:
                raise MalformedLabelling(f"vane {vane} must start at the central 0")
            for label in vane:
                if not isinstance(label, int) or isinstance(label, bool):
                    raise MalformedLabelling(f"non-integer label in {vane}")

    def vertex_labels(self) -> list[int]:
        """All non-central labels, with multiplicity."""
        return [label for vane in self.vanes for label in vane[1:]]

    def vanes_of_length(self, length: int) -> tuple[tuple[int, ...], ...]:
        return tuple(v for v in self.vanes if len(v) == length)


def edge_multiset(labelling: Labelling) -> Counter:
    """Absolute differences of cyclically consecutive labels, per vane."""
    edges: Counter = Counter()
    for vane in labelling.vanes:
        for a, b in zip(vane, vane[1:] + (vane[0],)):
            edges[abs(a - b)] += 1
    return edges


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    m: int
    mode_checked: str
    duplicate_vertices: tuple[int, ...] = ()
    out_of_range_vertices: tuple[int, ...] = ()
    missing_edges: tuple[int, ...] = ()
    extra_edges: tuple[int, ...] = ()
    note: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def summary(self) -> str:
        if self.ok:
            return f"ok ({self.mode_checked}, m={self.m})" + (
                f" [{self.note}]" if self.note else ""
            )
        parts = []
        if self.duplicate_vertices:
            parts.append(f"duplicate vertices {list(self.duplicate_vertices)}")
        if self.out_of_range_vertices:
            parts.append(f"vertices out of range {list(self.out_of_range_vertices)}")
        if self.missing_edges:
            parts.append(f"missing edges {list(self.missing_edges)}")
        if self.extra_edges:
            parts.append(f"extra edges {list(self.extra_edges)}")
        return f"FAILED ({self.mode_checked}, m={self.m}): " + "; ".join(parts)


def _check(labelling: Labelling, allowed_vertices: set[int], target_edges: Counter) -> tuple:
    vertices = labelling.vertex_labels()
    counts = Counter(vertices)
    duplicates = tuple(sorted(v for v, c in counts.items() if c > 1))
    out_of_range = tuple(sorted(v for v in counts if v not in allowed_vertices))
    actual = edge_multiset(labelling)
    missing = tuple(sorted((target_edges - actual).elements()))
    extra = tuple(sorted((actual - target_edges).elements()))
    return duplicates, out_of_range, missing, extra


def verify(labelling: Labelling, permissive_near: bool = False) -> VerificationReport:
    """Check the labelling against its declared mode.

    Graceful: nonzero vertex labels distinct in [1, m]; edge labels exactly
    [1, m].  Near graceful: vertex labels in [1, m-1] or m+1, edge labels
    [1, m-1] plus m+1.  With ``permissive_near`` a near labelling may instead
    use edge labels [1, m] with vertices up to m+1 (flagged in the note).
    """
    m = labelling.spec.edge_count
    if labelling.mode == GRACEFUL:
        allowed = set(range(1, m + 1))
        target = Counter(range(1, m + 1))
        dup, oor, missing, extra = _check(labelling, allowed, target)
        ok = not (dup or oor or missing or extra)
        return VerificationReport(ok, m, GRACEFUL, dup, oor, missing, extra)

    allowed = set(range(1, m)) | {m + 1}
    target = Counter(list(range(1, m)) + [m + 1])
    dup, oor, missing, extra = _check(labelling, allowed, target)
    if not (dup or oor or missing or extra):
        return VerificationReport(True, m, NEAR_GRACEFUL, note="omits m, uses m+1")
    if permissive_near:
        allowed = set(range(1, m + 2))
        target = Counter(range(1, m + 1))
        dup2, oor2, missing2, extra2 = _check(labelling, allowed, target)
        if not (dup2 or oor2 or missing2 or extra2):
            return VerificationReport(
                True, m, NEAR_GRACEFUL, note="permissive variant: edges [1,m], vertices up to m+1"
            )
    return VerificationReport(False, m, NEAR_GRACEFUL, dup, oor, missing, extra)


def expected_mode(spec: WindmillSpec) -> str:
    """Graceful exactly when the edge count is 0 or 3 (mod 4).

    Windmills are Eulerian, so the classical parity obstruction applies; all
    constructive families in this package match this prediction.
    """
    return GRACEFUL if spec.edge_count % 4 in (0, 3) else NEAR_GRACEFUL


# ---------------------------------------------------------------------------
# Serialisation
# ---------------------------------------------------------------------------


def to_json_obj(labelling: Labelling) -> dict:
    return {
        "spec": [{"cycle": l, "count": c} for l, c in labelling.spec.vanes],
        "mode": labelling.mode,
        "vanes": [list(v) for v in labelling.vanes],
    }


def to_json(labelling: Labelling, indent: int | None = None) -> str:
    return json.dumps(to_json_obj(labelling), indent=indent)


def from_json_obj(obj: dict) -> Labelling:
    try:
        spec = WindmillSpec.of(*((g["cycle"], g["count"]) for g in obj["spec"]))
        mode = obj["mode"]
        vanes = tuple(tuple(int(x) for x in vane) for vane in obj["vanes"])
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedLabelling(f"bad labelling JSON: {exc}") from exc
    return Labelling(spec=spec, vanes=vanes, mode=mode)


def from_json(text: str) -> Labelling:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedLabelling(f"bad JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise MalformedLabelling("labelling JSON must be an object")
    return from_json_obj(obj)


def to_dot(labelling: Labelling) -> str:
    """Graphviz export; nodes are named v<label>, edges carry the difference."""
    lines = ["graph windmill {"]
    emitted = {0}
    lines.append('  v0 [label="0"];')
    for vane in labelling.vanes:
        for label in vane[1:]:
            if label not in emitted:
                emitted.add(label)
                lines.append(f'  v{label} [label="{label}"];')
    for vane in labelling.vanes:
        cycle = vane + (vane[0],)
        for a, b in zip(cycle, cycle[1:]):
            lines.append(f'  v{a} -- v{b} [label="{abs(a - b)}"];')
    lines.append("}")
    return "\n".join(lines)
