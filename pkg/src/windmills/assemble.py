"""Turn sequence pairings into vane label tuples.

Triangles come from fold-1 pairings, squares from two-fold pairings,
5-cycles from a pair of interlocking sequences, and hexagons from merging
two triangles around their symbol sum.
"""

from __future__ import annotations

from .errors import (
    BoundViolation,
    LabelClash,
    MissingTriple,
    OutOfRange,
    PreconditionFailed,
    ShiftTooSmall,
)
from .sequences import (
    PairSet,
    SkolemTypeSequence,
    gen_hooked_skolem,
    gen_near_skolem_topdefect,
    gen_skolem,
    pairs_of,
)

Triple = tuple[int, int, int]


def triples_from_pairs(pairs: PairSet, c: int, variant: int) -> list[Triple]:
    """Triangle vanes from fold-1 pairs, one per symbol in increasing order.

    Variant 1 emits (0, left+c, right+c); variant 2 emits (0, symbol, right+c).
    Either way the triangle's edges are {symbol, left+c, right+c}, so c must
    be at least the largest symbol for the two ranges to stay disjoint.
    """
    if variant not in (1, 2):
        raise ValueError(f"variant must be 1 or 2, got {variant}")
    symbols = pairs.symbols
    if not symbols:
        return []
    if c < max(symbols):
        raise ShiftTooSmall(f"shift {c} below largest symbol {max(symbols)}")
    triples = []
    for sym in symbols:
        a, b = pairs.single(sym)
        if variant == 1:
            triples.append((0, a + c, b + c))
        else:
            triples.append((0, sym, b + c))
    return triples


def quadruples_from_twofold(seq: SkolemTypeSequence, c: int) -> list[tuple[int, int, int, int]]:
    """Square vanes (0, d+c, j, f+c) from the two pairs (c',d), (e,f) of each j.

    The edge labels are exactly the shifted positions [c+1, c+4s].  The vertex
    labels are checked for actual collisions rather than against per-family
    shift bounds: composites interleave their symbol ranges too tightly for a
    single closed-form bound.
    """
    if c < 0:
        raise BoundViolation(f"shift must be non-negative, got {c}")
    if seq.is_hooked:
        raise BoundViolation("two-fold quadruple input must be hook-free")
    pairs = pairs_of(seq)
    quads = []
    seen: set[int] = set()
    for sym in pairs.symbols:
        prs = pairs.pairs_for(sym)
        if len(prs) != 2:
            raise BoundViolation(f"symbol {sym} has {len(prs)} pairs, expected 2")
        (_, d), (_, f) = prs
        quad = (0, d + c, sym, f + c)
        for label in quad[1:]:
            if label in seen:
                raise BoundViolation(f"vertex label {label} repeats (shift {c} too small)")
            seen.add(label)
        quads.append(quad)
    return quads


# ---------------------------------------------------------------------------
# 5-cycle vanes
# ---------------------------------------------------------------------------

_FIVETUPLE_LITERALS = {
    2: [(0, 11, 2, 9, 1), (0, 6, 3, 7, 5)],
    3: [(0, 15, 1, 14, 12), (0, 5, 6, 3, 10), (0, 9, 13, 2, 8)],
}

# Hand-searched companion sequences for the two small orders whose closed-form
# companions do not exist: symbol sets match the hooked base's position set,
# with no right endpoint at a base hook-adjacent position.
_SMALL_COMPANIONS = {
    2: (5, 3, 1, 1, 3, 5, 2, 0, 2),
    3: (2, 4, 2, 7, 5, 4, 1, 1, 3, 5, 7, 3),
}


def _fivetuple_sources(p: int):
    """Base sequence, companion pairing and forbidden right-endpoint cells."""
    k = p % 4
    base = gen_skolem(p) if k in (0, 1) else gen_hooked_skolem(p)
    if k == 0:
        companion = gen_skolem(2 * p)
        forbidden = set(range(1, p + 1))
    elif k == 1:
        companion = gen_hooked_skolem(2 * p)
        forbidden = set(range(1, p + 1))
    else:
        if p in _SMALL_COMPANIONS:
            companion = SkolemTypeSequence(_SMALL_COMPANIONS[p])
        else:
            companion = gen_near_skolem_topdefect(2 * p + 1)
        forbidden = set(range(1, p)) | {p + 1}
    return base, companion, forbidden


def fivetuples_shifted(p: int, shift: int) -> list[tuple[int, int, int, int, int]]:
    """5-cycle vanes (0, D_b + shift, b, a, D_a + shift) for every base pair.

    (a, b) runs over the base sequence's pairs; D_x is the right endpoint of
    symbol x in the companion sequence.  The companion must keep its right
    endpoints off a prefix of cells so that D + shift clears the base values.
    """
    base, companion, forbidden = _fivetuple_sources(p)
    base_pairs = pairs_of(base)
    comp_pairs = pairs_of(companion)
    for sym in comp_pairs.symbols:
        _, right = comp_pairs.single(sym)
        if right in forbidden:
            raise PreconditionFailed(
                f"companion for p={p} has a right endpoint at cell {right}"
            )
    tuples = []
    for i in range(1, p + 1):
        a, b = base_pairs.single(i)
        _, d_b = comp_pairs.single(b)
        _, d_a = comp_pairs.single(a)
        tuples.append((0, d_b + shift, b, a, d_a + shift))
    return tuples


def fivetuples_c5(p: int) -> list[tuple[int, int, int, int, int]]:
    """5-cycle vanes labelling the p-vane 5-cycle windmill (shift = p)."""
    if p < 1:
        raise OutOfRange(f"need p >= 1, got {p}")
    if p in _FIVETUPLE_LITERALS:
        return list(_FIVETUPLE_LITERALS[p])
    return fivetuples_shifted(p, p)


# ---------------------------------------------------------------------------
# Hexagons
# ---------------------------------------------------------------------------


def _hexagon_pair_rows(n: int) -> list[tuple[int, int]]:
    # Residue-class pair families (i, j); sums i+j are pairwise distinct and
    # sit strictly between n and the smallest shifted right endpoint.
    k, r = divmod(n, 5)
    pairs: list[tuple[int, int]] = []
    if r == 0:
        pairs += [(k + z, 4 * k + z + 1) for z in range(k)]
        pairs += [(2 * k + z + 1, 3 * k + z + 1) for z in range(k)]
    elif r == 1:
        pairs += [(k + z + 1, 4 * k + z + 1) for z in range(k + 1)]
        pairs += [(2 * k + z + 2, 3 * k + z + 1) for z in range(k - 1)]
    elif r == 2:
        pairs += [(k + z + 1, 4 * k + z + 2) for z in range(k + 1)]
        pairs += [(2 * k + z + 2, 3 * k + z + 2) for z in range(k)]
    elif r == 3:
        pairs += [(k + z + 1, 4 * k + z + 3) for z in range(k + 1)]
        pairs += [(2 * k + z + 2, 3 * k + z + 3) for z in range(k)]
    else:
        pairs += [(k + z + 1, 4 * k + z + 4) for z in range(k + 1)]
        pairs += [(2 * k + z + 3, 3 * k + z + 3) for z in range(k)]
    return [(i, j) for i, j in pairs if 1 <= i <= n and 1 <= j <= n and i != j]


def hexagon_pairs(n: int) -> list[tuple[int, int]]:
    """Triangle symbol pairs (i, j) that may merge into hexagons via i+j."""
    if n < 5:
        raise OutOfRange(f"need n >= 5, got {n}")
    return _hexagon_pair_rows(n)


def hexagon_merge(vanes, pair: tuple[int, int], n: int) -> tuple[int, ...]:
    """Merge the triangles (0,i,x) and (0,j,y) into (0, x, i, i+j, j, y).

    The two triangles must be present in symbol-keyed form and the sum i+j
    must not collide with any vertex label anywhere in the labelling; the
    merged hexagon reproduces the two triangles' edge labels exactly.
    """
    i, j = pair
    if i == j:
        raise ValueError("pair must use two distinct symbols")

    def find(sym: int) -> tuple[int, ...]:
        for vane in vanes:
            if len(vane) == 3 and vane[1] == sym:
                return vane
        raise MissingTriple(f"no triangle (0, {sym}, _) present")

    tri_i = find(i)
    tri_j = find(j)
    total = i + j
    for vane in vanes:
        if total in vane:
            raise LabelClash(f"vertex label {total} already used in {vane}")
    return (0, tri_i[2], i, total, j, tri_j[2])


def apply_hexagon_merge(vanes, pair: tuple[int, int], n: int) -> list[tuple[int, ...]]:
    """Non-mutating merge: returns the vane list with the two triangles replaced."""
    merged = hexagon_merge(vanes, pair, n)
    i, j = pair
    out = [v for v in vanes if not (len(v) == 3 and v[1] in (i, j))]
    out.append(merged)
    return out
