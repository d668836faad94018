"""Gluing two arrangements along a shared triangle.

A gluing is a projective map carrying the first l >= 3 lines of the right
arrangement onto the first l lines of the left one, with no accidental line
coincidences elsewhere. It is generic when l = 3 and the only shared
singular points are the three triangle vertices; generic gluings all
produce the same combinatorics, which glue_combinatorics builds purely
combinatorially.

The constructive search normalizes both triangles onto the coordinate
triangle, then walks a fixed sequence of diagonal maps diag(1, s, t) with
(s, t) ranging over pairs of distinct primes. Genericity fails only on
finitely many parameter choices, so the deterministic sequence finds a
generic map quickly and reproducibly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import lcm

from .characters import Character
from .combinatorics import Combinatorics, NoTriangleError
from .cyclotomic import CycloNum
from .realization import (
    Arrangement,
    ProjLine,
    ProjMap,
    ProjPoint,
    intersect,
)

__all__ = [
    "GluingSpec",
    "GluingSearchExhausted",
    "check_gluing",
    "check_generic",
    "find_generic_gluing",
    "glue_arrangements",
    "glue_combinatorics",
    "glue_characters",
]


class GluingSearchExhausted(RuntimeError):
    """The bounded parameter sequence produced no generic gluing."""


@dataclass(frozen=True)
class GluingSpec:
    """A candidate gluing: left and right arrangements, the map, and the
    number of shared lines."""

    left: Arrangement
    right: Arrangement
    map: ProjMap
    shared_count: int
    parameter: tuple[int, int] | None = None  # (s, t) when found by search


def _triangle_vertices(arr: Arrangement) -> tuple[ProjPoint, ProjPoint, ProjPoint]:
    """Pairwise intersections of the first three lines; error when concurrent."""
    v12 = intersect(arr.line(1), arr.line(2))
    v23 = intersect(arr.line(2), arr.line(3))
    v13 = intersect(arr.line(1), arr.line(3))
    if len({v12, v23, v13}) != 3:
        raise NoTriangleError(
            "the first three lines are concurrent; no triangle to glue along"
        )
    return v12, v23, v13


def _triangle_normalization(arr: Arrangement) -> ProjMap:
    """The map sending the coordinate triangle x=0, y=0, z=0 onto the first
    three lines of the arrangement.

    Pinned uniquely by sending the unit point to a reference point: the
    intersection of lines 4 and 5 when present and off the triangle, else
    the first point [1 : t : t^2] off the triangle (a line meets that cubic
    curve at most twice, so t <= 7 always suffices).
    """
    order = arr.order
    v12, v23, v13 = _triangle_vertices(arr)
    triangle = [arr.line(1), arr.line(2), arr.line(3)]

    def off_triangle(p: ProjPoint) -> bool:
        return not any(p.lies_on(line) for line in triangle)

    ref: ProjPoint | None = None
    if arr.n_lines >= 5:
        candidate = intersect(arr.line(4), arr.line(5))
        if off_triangle(candidate):
            ref = candidate
    if ref is None:
        for t in range(1, 8):
            candidate = ProjPoint(
                (
                    CycloNum.one(order),
                    CycloNum.from_rational(order, t),
                    CycloNum.from_rational(order, t * t),
                )
            )
            if off_triangle(candidate):
                ref = candidate
                break
    assert ref is not None

    # Columns scale the vertex coordinates so the unit point maps to ref:
    # solve V * lam = ref with V the matrix whose columns are the vertices.
    v_cols = (v23.coords, v13.coords, v12.coords)  # images of e0, e1, e2
    v_matrix = ProjMap([[v_cols[c][r] for c in range(3)] for r in range(3)])
    lam = v_matrix.inverse().apply_point(ref).coords
    return ProjMap(
        [[v_cols[c][r] * lam[c] for c in range(3)] for r in range(3)]
    )


def _prime_pairs():
    """Pairs of distinct primes (s, t), s < t, grouped by ascending larger
    prime: (2,3), (2,5), (3,5), (2,7), (3,7), (5,7), (2,11), ..."""
    primes: list[int] = []
    n = 2
    while True:
        if all(n % p for p in primes):
            for p in primes:
                yield (p, n)
            primes.append(n)
        n += 1


def check_gluing(spec: GluingSpec) -> bool:
    """Both gluing conditions for the declared number of shared lines:
    the first l right lines map onto the first l left lines, and no later
    right line maps onto a later left line."""
    left, right, phi, l = spec.left, spec.right, spec.map, spec.shared_count
    _triangle_vertices(left)
    _triangle_vertices(right)
    if l < 3 or l > min(left.n_lines, right.n_lines):
        return False
    images = [phi.apply_line(line) for line in right.lines]
    for i in range(l):
        if images[i].coeffs != left.lines[i].coeffs:
            return False
    tail_left = {line.coeffs for line in left.lines[l:]}
    for img in images[l:]:
        if img.coeffs in tail_left:
            return False
    return True


def check_generic(spec: GluingSpec) -> bool:
    """Genericity: exactly the triangle is shared.

    Requires l = 3; the three vertex images must match vertex for vertex;
    no other right line may land on a left line; and apart from the
    vertices the two singular loci must stay transverse (no singular point
    of one side on any line of the other), so that every new incidence is
    an honest double point.
    """
    left, right, phi = spec.left, spec.right, spec.map
    if spec.shared_count != 3:
        return False
    lv12, lv23, lv13 = _triangle_vertices(left)
    rv12, rv23, rv13 = _triangle_vertices(right)
    if (
        phi.apply_point(rv12) != lv12
        or phi.apply_point(rv23) != lv23
        or phi.apply_point(rv13) != lv13
    ):
        return False

    left_coeffs = {line.coeffs for line in left.lines}
    images = [phi.apply_line(line) for line in right.lines[3:]]
    if any(img.coeffs in left_coeffs for img in images):
        return False

    vertices_left = {lv12, lv23, lv13}
    vertices_right = {rv12, rv23, rv13}
    sing_left = spec.left.singular_points()
    sing_right = spec.right.singular_points()

    # A right singular point on a right triangle line necessarily lands on
    # the matching left triangle line; anything beyond that is a collision.
    for p, through in sing_right.items():
        if p in vertices_right:
            continue
        q = phi.apply_point(p)
        if q in sing_left:
            return False
        for j, line in enumerate(left.lines, start=1):
            if q.lies_on(line) and not (j <= 3 and j in through):
                return False
    for p in sing_left:
        if p in vertices_left:
            continue
        if any(p.lies_on(img) for img in images):
            return False
    return True


def find_generic_gluing(
    left: Arrangement, right: Arrangement, max_candidates: int = 200
) -> GluingSpec:
    """Deterministically search the diagonal family for a generic gluing."""
    if left.order != right.order:
        raise ValueError(
            f"cyclotomic orders differ ({left.order} vs {right.order}); lift first"
        )
    order = left.order
    m_left = _triangle_normalization(left)
    m_right_inv = _triangle_normalization(right).inverse()

    zero = CycloNum.zero(order)
    one = CycloNum.one(order)
    pairs = _prime_pairs()
    for _ in range(max_candidates):
        s, t = next(pairs)
        diag = ProjMap(
            [
                [one, zero, zero],
                [zero, CycloNum.from_rational(order, s), zero],
                [zero, zero, CycloNum.from_rational(order, t)],
            ]
        )
        phi = m_left.compose(diag).compose(m_right_inv)
        spec = GluingSpec(left, right, phi, 3, parameter=(s, t))
        if check_gluing(spec) and check_generic(spec):
            return spec
    raise GluingSearchExhausted(
        f"no generic gluing within {max_candidates} diagonal candidates; "
        "extend the parameter sequence"
    )


def glue_arrangements(spec: GluingSpec) -> Arrangement:
    """The glued arrangement: the left lines, then the images of the unshared
    right lines, renamed D1..Dd."""
    if not check_gluing(spec):
        raise ValueError("not a gluing: the declared map fails the gluing conditions")
    phi, l = spec.map, spec.shared_count
    lines = list(spec.left.lines) + [
        phi.apply_line(line) for line in spec.right.lines[l:]
    ]
    renamed = [
        ProjLine(f"D{i}", line.coeffs) for i, line in enumerate(lines, start=1)
    ]
    return Arrangement(spec.left.order, renamed)


def glue_combinatorics(c: Combinatorics, c2: Combinatorics) -> Combinatorics:
    """The combinatorics of any generic (l = 3) gluing of realizations.

    Keeps all points of the first structure, merges the three triangle
    vertex points, shifts the second structure's other points past the
    first, and adds one transverse double point per (left, right) pair of
    non-triangle lines.
    """
    for comb in (c, c2):
        report = comb.validate()
        if not report.ok:
            raise ValueError("cannot glue an invalid combinatorics: " + "; ".join(report.messages()))
    n, k = c.n_lines, c2.n_lines
    vertex_pairs = [(1, 2), (1, 3), (2, 3)]
    verts_c = [c.point_through(i, j) for i, j in vertex_pairs]
    verts_c2 = [c2.point_through(i, j) for i, j in vertex_pairs]
    if len(set(verts_c)) != 3 or len(set(verts_c2)) != 3:
        raise NoTriangleError("the first three lines are concurrent; cannot glue")

    def shift(i: int) -> int:
        return i if i <= 3 else i + n - 3

    merged = [
        tuple(sorted(set(v) | {shift(i) for i in w}))
        for v, w in zip(verts_c, verts_c2)
    ]
    points: list[tuple[int, ...]] = list(merged)
    points += [p for p in c.points if p not in verts_c]
    points += [
        tuple(sorted(shift(i) for i in p))
        for p in c2.points
        if p not in verts_c2
    ]
    # Transverse double points; a cross pair already meeting at a merged
    # vertex (extra lines through a shared vertex) gets no fresh point.
    at_vertices = {pair for p in merged for pair in combinations(p, 2)}
    points += [
        (i, j)
        for i in range(4, n + 1)
        for j in range(n + 1, n + k - 2)
        if (i, j) not in at_vertices
    ]
    return Combinatorics([f"D{i}" for i in range(1, n + k - 2)], points)


def glue_characters(
    x: Character, x2: Character, l: int, base: Combinatorics | None = None
) -> Character:
    """The glued character: shared lines multiply their values, the rest
    carry over; moduli are reconciled by lcm."""
    n, k = x.base.n_lines, x2.base.n_lines
    if l < 0 or l > min(n, k):
        raise ValueError(f"shared count {l} out of range for {n} and {k} lines")
    d = n + k - l
    modulus = lcm(x.modulus, x2.modulus)
    e = [v * (modulus // x.modulus) for v in x.exponents]
    e2 = [v * (modulus // x2.modulus) for v in x2.exponents]
    exponents = (
        [e[i] + e2[i] for i in range(l)]
        + e[l:n]
        + e2[l:k]
    )
    if base is None:
        if l != 3:
            raise ValueError(
                "a target combinatorics is required unless the gluing is "
                "along a triangle (l = 3)"
            )
        base = glue_combinatorics(x.base, x2.base)
    if base.n_lines != d:
        raise ValueError(
            f"target combinatorics has {base.n_lines} lines, expected {d}"
        )
    return Character(base, modulus, tuple(exponents))
