"""Family-level dispatchers: label a whole windmill from sequence machinery.

Each public ``label_*`` routine picks sequences, shifts and compositions for
one windmill family and returns a verified labelling.  The triangle/square
dispatcher additionally reports a construction trace naming the rule it used;
the coverage audit replays the same rule arithmetic without building
anything.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .assemble import (
    _hexagon_pair_rows,
    apply_hexagon_merge,
    fivetuples_c5,
    fivetuples_shifted,
    quadruples_from_twofold,
    triples_from_pairs,
)
from .errors import (
    BoundViolation,
    InvalidSequence,
    MalformedLabelling,
    MissingRequiredTriangle,
    NotInTable,
    OutOfRange,
    TooManyHexagons,
    Unlabellable,
    UnsupportedCombination,
)
from .sequences import (
    SequenceKind,
    SkolemTypeSequence,
    concat,
    double,
    exists,
    fixed_small_twofold,
    gen_hooked_skolem,
    gen_langford_doubledefect,
    gen_power4,
    gen_skolem,
    gen_twofold_langford,
    gen_twofold_skolem,
    langford_sequence,
    pairs_of,
    validate,
)
from .windmill import (
    GRACEFUL,
    Labelling,
    NEAR_GRACEFUL,
    WindmillSpec,
    expected_mode,
    from_json_obj,
    verify,
)

RULES = frozenset(
    {
        "triangles-only",
        "twofold-direct",
        "twofold-parity",
        "langford-block",
        "langford-plus-twofold",
        "composite-low",
        "composite-high",
        "extension-case1",
        "extension-case2",
        "extension-case3",
        "extension-case4",
        "base-case",
        "gap-fixture",
    }
)


@dataclass
class ConstructionTrace:
    """Which rule produced a labelling, with the parameters it chose."""

    rule: str
    parameters: dict
    children: tuple["ConstructionTrace", ...] = ()

    def __post_init__(self) -> None:
        if self.rule not in RULES:
            raise ValueError(f"unknown rule {self.rule!r}")

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()

    def format(self, indent: int = 0) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.parameters.items())
        lines = ["  " * indent + f"{self.rule}({params})"]
        for child in self.children:
            lines.append(child.format(indent + 1))
        return "\n".join(lines)


def _checked(labelling: Labelling) -> Labelling:
    report = verify(labelling)
    if not report.ok:
        raise InvalidSequence(f"constructed labelling failed: {report.summary()}")
    return labelling


# ---------------------------------------------------------------------------
# Triangle windmills and 5-cycle windmills
# ---------------------------------------------------------------------------


def _triangle_sequence(t: int, straddle: bool = False) -> SkolemTypeSequence:
    """(Hooked) Skolem sequence of order t used for the triangle block.

    With ``straddle`` the hooked sequence is additionally required to carry
    the hook-adjacent pairs that turn into the replaceable triangles of the
    square-block extension; a constrained search supplies one if the closed
    form does not.
    """
    if t % 4 in (0, 1):
        return gen_skolem(t)
    seq = gen_hooked_skolem(t)
    if not straddle or _is_straddling(seq, t):
        return seq
    found = _straddling_hooked(t)
    if found is None:
        raise Unlabellable(
            f"no hooked sequence of order {t} with the extension's triangle pairs"
        )
    return found


def _is_straddling(seq: SkolemTypeSequence, t: int) -> bool:
    pairs = pairs_of(seq)
    if t % 4 == 2:
        return pairs.single(2) == (2 * t - 1, 2 * t + 1)
    return (
        pairs.single(1) == (2 * t - 2, 2 * t - 1)
        and pairs.single(4) == (2 * t - 3, 2 * t + 1)
    )


@lru_cache(maxsize=None)
def _straddling_hooked(t: int) -> SkolemTypeSequence | None:
    """Hooked Skolem sequence of order t with forced hook-adjacent pairs."""
    length = 2 * t + 1
    entries = [0] * length
    if t % 4 == 2:
        forced = {2: (2 * t - 1, 2 * t + 1)}
    elif t % 4 == 3:
        forced = {1: (2 * t - 2, 2 * t - 1), 4: (2 * t - 3, 2 * t + 1)}
    else:
        return None
    for sym, (a, b) in forced.items():
        entries[a - 1] = entries[b - 1] = sym
    remaining = set(range(1, t + 1)) - set(forced)
    free_limit = 2 * t - 2 if t % 4 == 2 else 2 * t - 4

    def fill() -> bool:
        if not remaining:
            return True
        best_opts: list[tuple[int, int]] | None = None
        for cell in range(1, free_limit + 1):
            if entries[cell - 1] != 0:
                continue
            opts = []
            for sym in remaining:
                right = cell + sym
                if right <= free_limit and entries[right - 1] == 0:
                    opts.append((sym, cell))
                left = cell - sym
                if left >= 1 and entries[left - 1] == 0:
                    opts.append((sym, left))
            if not opts:
                return False
            if best_opts is None or len(opts) < len(best_opts):
                best_opts = opts
                if len(opts) == 1:
                    break
        if best_opts is None:
            return not remaining
        for sym, a in sorted(best_opts, key=lambda x: (-x[0], x[1])):
            entries[a - 1] = entries[a + sym - 1] = sym
            remaining.remove(sym)
            if fill():
                return True
            remaining.add(sym)
            entries[a - 1] = entries[a + sym - 1] = 0
        return False

    if not fill():
        return None
    seq = SkolemTypeSequence(tuple(entries))
    if not validate(seq, SequenceKind("hooked-skolem")).ok:  # pragma: no cover
        return None
    return seq


def label_c3(t: int) -> Labelling:
    """(Near) graceful triangle windmill; graceful exactly for t = 0, 1 (mod 4)."""
    if t < 1:
        raise OutOfRange(f"need t >= 1, got {t}")
    seq = _triangle_sequence(t)
    tris = triples_from_pairs(pairs_of(seq), c=t, variant=1)
    spec = WindmillSpec.of((3, t))
    return _checked(Labelling(spec, tuple(tris), expected_mode(spec)))


def label_c5(p: int) -> Labelling:
    """(Near) graceful 5-cycle windmill; graceful exactly for p = 0, 3 (mod 4)."""
    if p < 1:
        raise OutOfRange(f"need p >= 1, got {p}")
    spec = WindmillSpec.of((5, p))
    vanes = tuple(fivetuples_c5(p))
    return _checked(Labelling(spec, vanes, expected_mode(spec)))


# ---------------------------------------------------------------------------
# Triangle + square windmills
# ---------------------------------------------------------------------------

_EXT_CASE_OF_RESIDUE = {0: 1, 1: 2, 2: 3, 3: 4}
# 4*s bounds for the extension: case -> (low offset, high offset) so that
# low <= 4*s' <= high with low = 2k + lo - 12w, high = 6k + hi - 12w.
_EXT_OFFSETS = {1: (2, -5), 2: (-1, -8), 3: (-2, -9), 4: (-3, -10)}
_EXT_SHIFT = {1: 0, 2: 3, 3: 4, 4: 5}


def _ext_bounds_hold(case: int, w: int, k: int, s: int) -> bool:
    lo_off, hi_off = _EXT_OFFSETS[case]
    return 2 * k + lo_off - 12 * w <= 4 * s <= 6 * k + hi_off - 12 * w


def _ext_required_triangles(case: int, w: int, s: int) -> list[tuple[int, int]]:
    base = 4 * s + 12 * w
    if case == 3:
        return [(base + 5, base + 7)]
    if case == 4:
        return [(base + 7, base + 8), (base + 6, base + 10)]
    return []


def _ext_replacement_triangles(case: int, w: int, s: int, k: int) -> list[tuple[int, int]]:
    base = 16 * k + 4 * s + 12 * w
    if case == 3:
        return [(base + 1, base + 3)]
    if case == 4:
        return [(base + 3, base + 4), (base + 2, base + 6)]
    return []


def extend_c3c4(
    base: Labelling, k: int, case: int, *, published_bounds: bool = True
) -> Labelling:
    """Graft 4k-1 squares onto a triangle+square labelling.

    The new squares come from the two-fold Langford block of defect 6k-1; in
    the near graceful cases the base must contain one or two specific
    hook-adjacent triangles, which are swapped for translated copies so the
    top edge labels stay unique.  ``published_bounds`` enforces the published
    interval preconditions; disabling it falls back on the direct
    label-collision checks alone.
    """
    if k < 1:
        raise BoundViolation(f"need k >= 1, got {k}")
    if not 1 <= case <= 4:
        raise BoundViolation(f"case must be 1..4, got {case}")
    lengths = {length for length, _ in base.spec.vanes}
    if not lengths <= {3, 4}:
        raise MalformedLabelling("extension applies to triangle+square windmills only")
    t = base.spec.count_of(3)
    s = base.spec.count_of(4)
    if _EXT_CASE_OF_RESIDUE[t % 4] != case:
        raise BoundViolation(f"case {case} does not match t={t}")
    w = t // 4
    if case == 1 and w < 1:
        raise BoundViolation("case 1 needs at least four triangles")
    if published_bounds and not _ext_bounds_hold(case, w, k, s):
        raise BoundViolation(f"(t={t}, s={s}, k={k}) outside the case-{case} interval")
    expected = GRACEFUL if case in (1, 2) else NEAR_GRACEFUL
    if base.mode != expected:
        raise MalformedLabelling(f"case {case} needs a {expected} base")

    vanes = list(base.vanes)
    for (a, b), (na, nb) in zip(
        _ext_required_triangles(case, w, s), _ext_replacement_triangles(case, w, s, k)
    ):
        target = {0, a, b}
        for idx, vane in enumerate(vanes):
            if len(vane) == 3 and set(vane) == target:
                vanes[idx] = (0, na, nb)
                break
        else:
            raise MissingRequiredTriangle(f"base lacks triangle (0, {a}, {b})")

    c = 4 * s + 12 * w + _EXT_SHIFT[case]
    quads = quadruples_from_twofold(gen_twofold_langford(k), c)
    new_spec = WindmillSpec.of((3, t), (4, s + 4 * k - 1))
    tris = [v for v in vanes if len(v) == 3]
    squares = [v for v in vanes if len(v) == 4] + quads
    return _checked(Labelling(new_spec, tuple(tris + squares), base.mode))


def _smallest_extension_k(t: int, s: int) -> tuple[int, int] | None:
    """Smallest k whose interval admits a base of s - 4k + 1 squares."""
    case = _EXT_CASE_OF_RESIDUE[t % 4]
    w = t // 4
    if case == 1 and w < 1:
        return None
    for k in range(1, (s + 2) // 4 + 1):
        s_base = s - 4 * k + 1
        if s_base < 1:
            break
        if _ext_bounds_hold(case, w, k, s_base):
            return k, s_base
    return None


def _composite_parameters(t: int, s: int) -> tuple[str, int, int] | None:
    """Locate s inside the tiling of composite orders: rule, x, y."""
    if s < max(3 * t + 2, 2 * t + 6) or 2 * s > 13 * t + 37:
        return None
    x = (s - (2 * t - 3)) // 9
    if x < 1 or t < 2 * x - 3:
        return None
    off = s - (2 * t + 9 * x - 3)
    if not 0 <= off <= 8:  # pragma: no cover - arithmetic guarantee
        return None
    if off < 4:
        rule, y = "composite-low", off
    elif off == 4:
        # boundary cell is expressible both ways; the empty tail is simpler
        rule, y = "composite-high", 0
    else:
        rule, y = "composite-high", off - 4
    if y == 4 and t + 2 * x == 6:
        # the order-4 tail block carries the label 6, which collides with the
        # power-of-4 block's top vertex at this one corner; fall through
        return None
    return rule, x, y


def _composite_sequence(rule: str, t: int, x: int, y: int) -> SkolemTypeSequence:
    if rule == "composite-low":
        # trimmed power-of-4 prefix, double Langford core, the closing (1,1),
        # then one of the small catalogued two-fold sequences
        parts = [
            gen_power4(x, trimmed=True),
            double(gen_langford_doubledefect(t + 4 * x - 1)),
            gen_power4(0, trimmed=True),
            fixed_small_twofold(y),
        ]
    else:
        parts = [
            gen_power4(x),
            double(gen_langford_doubledefect(t + 4 * x + 1)),
            fixed_small_twofold(y),
        ]
    return concat(parts)


def _build_c3c4(t: int, s: int, rule: str, params: dict, straddle: bool) -> Labelling:
    if rule == "twofold-direct" or rule == "twofold-parity":
        composite = gen_twofold_skolem(s)
    elif rule == "langford-block":
        composite = double(gen_langford_doubledefect(t + 1))
    elif rule == "langford-plus-twofold":
        composite = concat(
            [double(gen_langford_doubledefect(t + 1)), gen_twofold_skolem(params["k"])]
        )
    else:
        composite = _composite_sequence(rule, t, params["x"], params["y"])
    quads = quadruples_from_twofold(composite, c=t)
    if len(quads) != s:  # pragma: no cover - arithmetic guarantee
        raise InvalidSequence(f"composite gave {len(quads)} squares, wanted {s}")
    tris = triples_from_pairs(
        pairs_of(_triangle_sequence(t, straddle)), c=4 * s + t, variant=1
    )
    spec = WindmillSpec.of((3, t), (4, s))
    return _checked(Labelling(spec, tuple(tris) + tuple(quads), expected_mode(spec)))


def _dispatch_c3c4(t: int, s: int, straddle: bool) -> tuple[Labelling, ConstructionTrace]:
    if t < 1:
        raise Unlabellable("windmills without triangle vanes are not covered")
    if s < 0:
        raise OutOfRange(f"need s >= 0, got {s}")
    if s == 0:
        return label_c3(t), ConstructionTrace("triangles-only", {"t": t})

    # Extension bases at small t must carry the replaceable triangles; only
    # the catalogued rows do (no order-3 hooked sequence can straddle).
    if straddle and t <= 3 and _base_case_available(t, s):
        return base_case_c3c4(t, s), ConstructionTrace("base-case", {"t": t, "s": s})

    if s <= t:
        params = {"t": t, "s": s, "c_squares": t, "c_triangles": 4 * s + t}
        return (
            _build_c3c4(t, s, "twofold-direct", params, straddle),
            ConstructionTrace("twofold-direct", params),
        )
    if t >= 4 and s <= 2 * t:
        params = {"t": t, "s": s, "table": "odd" if s % 2 else "even"}
        return (
            _build_c3c4(t, s, "twofold-parity", params, straddle),
            ConstructionTrace("twofold-parity", params),
        )
    if t >= 4 and s == 2 * t + 1:
        params = {"t": t, "s": s, "defect": t + 1}
        return (
            _build_c3c4(t, s, "langford-block", params, straddle),
            ConstructionTrace("langford-block", params),
        )
    if t >= 4 and 2 * t + 2 <= s <= 3 * t + 1:
        params = {"t": t, "s": s, "defect": t + 1, "k": s - (2 * t + 1)}
        return (
            _build_c3c4(t, s, "langford-plus-twofold", params, straddle),
            ConstructionTrace("langford-plus-twofold", params),
        )
    if t >= 4:
        located = _composite_parameters(t, s)
        if located is not None:
            rule, x, y = located
            d = t + 4 * x - 1 if rule == "composite-low" else t + 4 * x + 1
            params = {"t": t, "s": s, "x": x, "y": y, "defect": d}
            return (
                _build_c3c4(t, s, rule, params, straddle),
                ConstructionTrace(rule, params),
            )
    if t <= 3 and _base_case_available(t, s):
        lab = base_case_c3c4(t, s)
        return lab, ConstructionTrace("base-case", {"t": t, "s": s})

    found = _smallest_extension_k(t, s)
    if found is not None:
        k, s_base = found
        case = _EXT_CASE_OF_RESIDUE[t % 4]
        base, base_trace = _dispatch_c3c4(t, s_base, straddle=case in (3, 4))
        lab = extend_c3c4(base, k, case)
        params = {"t": t, "s": s, "k": k, "s_base": s_base}
        return lab, ConstructionTrace(f"extension-case{case}", params, (base_trace,))

    gap = _load_gap_fixture(t, s)
    if gap is not None:
        return gap, ConstructionTrace("gap-fixture", {"t": t, "s": s})
    raise Unlabellable(f"no rule covers C3^{t}C4^{s}")


def label_c3c4(t: int, s: int) -> tuple[Labelling, ConstructionTrace]:
    """Verified labelling of the t-triangle, s-square windmill, with its trace.

    Graceful exactly when t = 0, 1 (mod 4).  Rule precedence: direct
    constructions, then catalogued base cases, then the square-block
    extension, then gap fixtures.
    """
    return _dispatch_c3c4(t, s, straddle=False)


def replay(trace: ConstructionTrace) -> bool:
    """Re-check a trace's parameters against its rule's preconditions."""
    p = trace.parameters
    rule = trace.rule
    ok = True
    if rule == "twofold-direct":
        ok = 1 <= p["s"] <= p["t"]
    elif rule == "twofold-parity":
        ok = p["t"] >= 4 and p["t"] < p["s"] <= 2 * p["t"]
    elif rule == "langford-block":
        ok = p["t"] >= 4 and p["s"] == 2 * p["t"] + 1 and p["defect"] == p["t"] + 1
    elif rule == "langford-plus-twofold":
        ok = p["t"] >= 4 and 2 * p["t"] + 2 <= p["s"] <= 3 * p["t"] + 1 and 1 <= p["k"] <= p["t"]
    elif rule in ("composite-low", "composite-high"):
        t, s, x, y = p["t"], p["s"], p["x"], p["y"]
        ok = (
            t >= 4
            and 0 <= y <= 4
            and x >= 1
            and t >= 2 * x - 3
            and 3 * t + 2 <= s
            and 2 * s <= 13 * t + 37
            and s == (2 * t + 9 * x + y - 3 if rule == "composite-low" else 2 * t + 9 * x + y + 1)
        )
    elif rule.startswith("extension-case"):
        case = int(rule[-1])
        t, s, k, s_base = p["t"], p["s"], p["k"], p["s_base"]
        ok = (
            _EXT_CASE_OF_RESIDUE[t % 4] == case
            and s == s_base + 4 * k - 1
            and _ext_bounds_hold(case, t // 4, k, s_base)
        )
    elif rule == "base-case":
        ok = p["t"] in (1, 2, 3) and _base_case_available(p["t"], p["s"])
    elif rule == "gap-fixture":
        ok = _load_gap_fixture(p["t"], p["s"]) is not None
    return ok and all(replay(child) for child in trace.children)


# ---------------------------------------------------------------------------
# Fixture store (catalogued base cases and audit-gap fills)
# ---------------------------------------------------------------------------

_BASE_CASE_RANGE = {1: range(1, 21), 2: range(1, 21), 3: range(1, 20)}


def _fixture_text(name: str) -> str | None:
    path = resources.files("windmills") / "fixtures" / name
    try:
        return path.read_text()
    except FileNotFoundError:
        return None


@lru_cache(maxsize=None)
def _load_fixture(name: str) -> Labelling | None:
    text = _fixture_text(name)
    if text is None:
        return None
    obj = json.loads(text)
    labelling = from_json_obj(obj)
    report = verify(labelling)
    if not report.ok:
        raise InvalidSequence(f"fixture {name} failed verification: {report.summary()}")
    return labelling


def _base_case_available(t: int, s: int) -> bool:
    return t in _BASE_CASE_RANGE and s in _BASE_CASE_RANGE[t]


def base_case_c3c4(t: int, s: int) -> Labelling:
    """Catalogued labelling for one, two or three triangles and few squares."""
    if not _base_case_available(t, s):
        raise NotInTable(f"no catalogued labelling for C3^{t}C4^{s}")
    lab = _load_fixture(f"c3c4_base_t{t}_s{s}.json")
    if lab is None:  # pragma: no cover - packaged data
        raise NotInTable(f"fixture file for C3^{t}C4^{s} is missing")
    return lab


def _load_gap_fixture(t: int, s: int) -> Labelling | None:
    return _load_fixture(f"c3c4_gap_t{t}_s{s}.json")


# ---------------------------------------------------------------------------
# Triangle + 5-cycle windmills
# ---------------------------------------------------------------------------

_C3C5_FIXTURE = ((0, 5, 7), (0, 8, 4, 3, 6))


def label_c3c5(t: int, p: int) -> Labelling:
    """Triangles plus 5-cycles; needs t >= 2p+1 and a compatible residue pair.

    The 5-cycle block is re-shifted clear of the triangle labels and the
    triangles come from a Langford sequence with defect p+1, so coverage is
    exactly the residue grid on which that Langford sequence exists.
    """
    if (t, p) == (1, 1):
        spec = WindmillSpec.of((3, 1), (5, 1))
        return _checked(Labelling(spec, _C3C5_FIXTURE, GRACEFUL))
    if p < 1 or t < 1:
        raise OutOfRange(f"need t, p >= 1, got ({t}, {p})")
    if t < 2 * p + 1:
        raise UnsupportedCombination(f"t={t} below the bound 2p+1={2 * p + 1}")
    if not exists("langford", order=t, defect=p + 1):
        raise UnsupportedCombination(
            f"no defect-{p + 1} Langford sequence of order {t}"
            f" (p mod 4 = {p % 4}, t mod 4 = {t % 4} is uncovered)"
        )
    fives = fivetuples_shifted(p, p + 3 * t)
    lang = langford_sequence(p + 1, t)
    tris = triples_from_pairs(pairs_of(lang), c=p + t, variant=1)
    spec = WindmillSpec.of((3, t), (5, p))
    return _checked(Labelling(spec, tuple(tris) + tuple(fives), expected_mode(spec)))


# ---------------------------------------------------------------------------
# Triangle + hexagon windmills
# ---------------------------------------------------------------------------


def label_c3c6(t: int, h: int) -> Labelling:
    """Triangles plus hexagons by merging triangle pairs around their symbol sum."""
    if t < 1 or h < 0:
        raise OutOfRange(f"need t >= 1 and h >= 0, got ({t}, {h})")
    if h > 2 * t + 1:
        raise TooManyHexagons(f"h={h} exceeds the bound 2t+1={2 * t + 1}")
    n = t + 2 * h
    seq = gen_skolem(n) if n % 4 in (0, 1) else gen_hooked_skolem(n)
    vanes = list(triples_from_pairs(pairs_of(seq), c=n, variant=2))
    pair_pool = _hexagon_pair_rows(n)
    if len(pair_pool) < h:  # pragma: no cover - equivalent to the h bound
        raise TooManyHexagons(f"only {len(pair_pool)} mergeable pairs for n={n}")
    for pair in pair_pool[:h]:
        vanes = apply_hexagon_merge(vanes, pair, n)
    spec = WindmillSpec.of((3, t), (6, h)) if h else WindmillSpec.of((3, t))
    ordered = tuple(v for v in vanes if len(v) == 3) + tuple(
        v for v in vanes if len(v) == 6
    )
    return _checked(Labelling(spec, ordered, expected_mode(spec)))


# ---------------------------------------------------------------------------
# Coverage audit
# ---------------------------------------------------------------------------

GAP = "GAP"


def coverage_audit(t_max: int, s_max: int) -> dict[tuple[int, int], str]:
    """Which rule the dispatcher would use per cell; GAP where none applies.

    This replays the dispatch arithmetic only (no labellings are built); a
    cell counts as extension-covered only if some admissible k leads back to
    a covered cell.
    """
    if t_max < 1 or s_max < 1:
        raise OutOfRange("audit bounds must be >= 1")
    grid: dict[tuple[int, int], str] = {}
    for t in range(1, t_max + 1):
        for s in range(0, s_max + 1):
            grid[(t, s)] = _audit_cell(t, s, grid)
    return grid


def _audit_cell(t: int, s: int, grid: dict[tuple[int, int], str]) -> str:
    if s == 0:
        return "triangles-only"
    if s <= t:
        return "twofold-direct"
    if t >= 4 and s <= 2 * t:
        return "twofold-parity"
    if t >= 4 and s == 2 * t + 1:
        return "langford-block"
    if t >= 4 and 2 * t + 2 <= s <= 3 * t + 1:
        return "langford-plus-twofold"
    if t >= 4:
        located = _composite_parameters(t, s)
        if located is not None:
            return located[0]
    if t <= 3 and _base_case_available(t, s):
        return "base-case"
    case = _EXT_CASE_OF_RESIDUE[t % 4]
    w = t // 4
    if not (case == 1 and w < 1):
        for k in range(1, (s + 2) // 4 + 1):
            s_base = s - 4 * k + 1
            if s_base < 1:
                break
            if _ext_bounds_hold(case, w, k, s_base):
                base_rule = grid.get((t, s_base))
                if base_rule is None:
                    base_rule = _audit_cell(t, s_base, grid)
                if base_rule != GAP:
                    return "extension"
    return GAP
