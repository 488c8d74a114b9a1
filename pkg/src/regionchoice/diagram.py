"""Flat knot/link projections as combinatorial maps on the sphere.

A projection is encoded by a flat PD code: one 4-tuple of arc labels per
crossing, listed in counterclockwise slot order.  A *dart* is a pair
``(crossing, slot)`` naming one arc end.  The strand continues through a
crossing from slot ``s`` to slot ``(s + 2) % 4``; faces are the orbits of
"traverse the arc, then turn to the clockwise-adjacent slot at the arrival
crossing".  With these conventions a connected diagram with ``n`` crossings
embeds on the sphere iff the face trace yields exactly ``n + 2`` faces.

Regions are numbered canonically by the smallest dart in their corner list;
crossings keep their input order.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import lru_cache

Dart = tuple[int, int]


class DiagramError(ValueError):
    """The given PD code does not describe a valid spherical projection."""


class InternalInvariantError(RuntimeError):
    """A structural property guaranteed by construction failed to hold."""


@dataclass(frozen=True)
class FlatDiagram:
    """A flat projection: crossings with counterclockwise dart order."""

    crossings: tuple[tuple[int, int, int, int], ...]
    name: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "crossings",
                           tuple(tuple(c) for c in self.crossings))
        _validate(self)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def arc_count(self) -> int:
        return 2 * len(self.crossings)

    @property
    def region_count(self) -> int:
        return len(self.crossings) + 2

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"FlatDiagram({list(map(list, self.crossings))!r}{tag})"


@dataclass(frozen=True)
class Region:
    """A face of the projection, with its corners in trace order.

    A corner ``(c, s)`` is the wedge at crossing ``c`` between the arcs in
    slots ``s`` and ``(s + 1) % 4``.
    """

    index: int
    corners: tuple[Dart, ...]

    def corner_count(self, crossing: int) -> int:
        return sum(1 for c, _ in self.corners if c == crossing)


@dataclass(frozen=True)
class Arc:
    """An edge of the projection with its two end darts and side regions."""

    label: int
    darts: tuple[Dart, Dart]
    sides: tuple[int, int]


@dataclass(frozen=True)
class CheckerboardColoring:
    """A proper two-coloring of regions across arcs; +1 black, -1 white."""

    signs: tuple[int, ...]

    def __getitem__(self, region: int) -> int:
        return self.signs[region]


@dataclass(frozen=True)
class SplicedComponent:
    """One component of a spliced diagram, viewed with the other deleted.

    ``diagram`` is ``None`` for a crossing-free loop.  ``region_map`` sends
    every region of the original diagram to the component region containing
    it; ``strand_sides`` are the component regions on the two sides of the
    strand created by the smoothing, and ``strand_arc`` is the component arc
    carrying that strand (``None`` for a bare loop).
    """

    diagram: FlatDiagram | None
    region_map: tuple[int, ...]
    crossings: tuple[int, ...]
    strand_arc: int | None
    strand_sides: tuple[int, int]

    @property
    def region_count(self) -> int:
        if self.diagram is None:
            return 2
        return self.diagram.region_count


@dataclass(frozen=True)
class ComponentSplit:
    """Result of the orientation-respecting smoothing at a self-crossing."""

    crossing: int
    first: SplicedComponent
    second: SplicedComponent


# ---------------------------------------------------------------------------
# core map machinery


def _mates(diagram: FlatDiagram) -> dict[Dart, Dart]:
    by_label: dict[int, list[Dart]] = {}
    for c, tup in enumerate(diagram.crossings):
        for s, label in enumerate(tup):
            by_label.setdefault(label, []).append((c, s))
    return {d: (pair[0] if d == pair[1] else pair[1])
            for pair in by_label.values() for d in pair}


def _trace_faces(crossings: tuple[tuple[int, int, int, int], ...]):
    """Face orbits of the map, each started at its smallest dart."""
    by_label: dict[int, list[Dart]] = {}
    for c, tup in enumerate(crossings):
        for s, label in enumerate(tup):
            by_label.setdefault(label, []).append((c, s))
    mate = {d: (p[0] if d == p[1] else p[1])
            for p in by_label.values() for d in p}

    faces = []
    seen: set[Dart] = set()
    for start in sorted(mate):
        if start in seen:
            continue
        orbit = []
        d = start
        while True:
            orbit.append(d)
            seen.add(d)
            c, s = mate[d]
            d = (c, (s + 3) % 4)
            if d == start:
                break
            if d in seen:
                raise InternalInvariantError("face trace is not a permutation")
        faces.append(tuple(orbit))
    return faces


def _validate(diagram: FlatDiagram) -> None:
    n = len(diagram.crossings)
    if n == 0:
        raise DiagramError("diagram has no crossings")
    counts: dict[int, int] = {}
    for tup in diagram.crossings:
        if len(tup) != 4:
            raise DiagramError(f"crossing {tup!r} does not have 4 darts")
        for label in tup:
            if not isinstance(label, int) or label < 1 or label > 2 * n:
                raise DiagramError(f"arc label {label!r} outside 1..{2 * n}")
            counts[label] = counts.get(label, 0) + 1
    for label in range(1, 2 * n + 1):
        got = counts.get(label, 0)
        if got == 0:
            raise DiagramError(f"missing arc label {label}")
        if got != 2:
            raise DiagramError(f"unpaired arc label {label} (appears {got}x)")

    faces = _trace_faces(diagram.crossings)
    if len(faces) != n + 2:
        raise DiagramError(
            f"non-spherical map: {n} crossings but {len(faces)} faces "
            f"(expected {n + 2})")
    for orbit in faces:
        per_crossing: dict[int, int] = {}
        for c, _ in orbit:
            per_crossing[c] = per_crossing.get(c, 0) + 1
        for c, k in per_crossing.items():
            if k > 2:
                raise DiagramError(
                    f"region touches crossing v{c + 1} {k} times "
                    "(more than twice is outside the supported domain)")


@lru_cache(maxsize=None)
def regions(diagram: FlatDiagram) -> tuple[Region, ...]:
    """The ``n + 2`` faces of the diagram in canonical order."""
    faces = _trace_faces(diagram.crossings)
    faces.sort(key=lambda orbit: min(orbit))
    return tuple(Region(i, orbit) for i, orbit in enumerate(faces))


@lru_cache(maxsize=None)
def _region_at_corner(diagram: FlatDiagram) -> dict[Dart, int]:
    return {corner: reg.index
            for reg in regions(diagram) for corner in reg.corners}


def region_at_corner(diagram: FlatDiagram, crossing: int, slot: int) -> int:
    """Region occupying the corner between slots ``slot`` and ``slot + 1``."""
    return _region_at_corner(diagram)[(crossing, slot)]


def corner_count(diagram: FlatDiagram, region: int, crossing: int) -> int:
    """How many corners the region has at the crossing (0, 1 or 2)."""
    return regions(diagram)[region].corner_count(crossing)


def is_reducible(diagram: FlatDiagram, crossing: int) -> bool:
    """True iff some region touches the crossing twice."""
    return any(reg.corner_count(crossing) == 2 for reg in regions(diagram))


def reducible_crossings(diagram: FlatDiagram) -> tuple[int, ...]:
    return tuple(c for c in range(diagram.crossing_count)
                 if is_reducible(diagram, c))


@lru_cache(maxsize=None)
def arcs(diagram: FlatDiagram) -> tuple[Arc, ...]:
    """Arcs sorted by label, each with its two (distinct) side regions."""
    corner = _region_at_corner(diagram)
    by_label: dict[int, list[Dart]] = {}
    for c, tup in enumerate(diagram.crossings):
        for s, label in enumerate(tup):
            by_label.setdefault(label, []).append((c, s))
    out = []
    for label in sorted(by_label):
        d1, d2 = sorted(by_label[label])
        # the two faces traversing the arc are the ones owning its darts
        sides = (corner[d1], corner[d2])
        if sides[0] == sides[1]:
            raise InternalInvariantError(
                f"arc {label} has the same region on both sides")
        out.append(Arc(label, (d1, d2), sides))
    return tuple(out)


def arc_by_label(diagram: FlatDiagram, label: int) -> Arc:
    for arc in arcs(diagram):
        if arc.label == label:
            return arc
    raise DiagramError(f"no arc labelled {label}")


def _strand_orbits(diagram: FlatDiagram) -> list[list[Dart]]:
    """Orbits of the curve-traversal permutation (two per component)."""
    mate = _mates(diagram)
    orbits = []
    seen: set[Dart] = set()
    for start in sorted(mate):
        if start in seen:
            continue
        orbit = []
        d = start
        while True:
            orbit.append(d)
            seen.add(d)
            c, s = mate[d]
            d = (c, (s + 2) % 4)
            if d == start:
                break
        orbits.append(orbit)
    return orbits


@lru_cache(maxsize=None)
def component_count(diagram: FlatDiagram) -> int:
    """Number of closed curves underlying the projection."""
    orbits = _strand_orbits(diagram)
    if len(orbits) % 2 != 0:
        raise InternalInvariantError("odd number of directed strand orbits")
    return len(orbits) // 2


def is_knot(diagram: FlatDiagram) -> bool:
    return component_count(diagram) == 1


@lru_cache(maxsize=None)
def checkerboard(diagram: FlatDiagram) -> CheckerboardColoring:
    """Proper 2-coloring of regions across arcs, region 0 colored +1."""
    m = diagram.region_count
    adjacency: list[set[int]] = [set() for _ in range(m)]
    for arc in arcs(diagram):
        a, b = arc.sides
        adjacency[a].add(b)
        adjacency[b].add(a)
    signs = [0] * m
    signs[0] = 1
    queue = [0]
    while queue:
        r = queue.pop()
        for nb in adjacency[r]:
            if signs[nb] == 0:
                signs[nb] = -signs[r]
                queue.append(nb)
            elif signs[nb] != -signs[r]:
                raise InternalInvariantError(
                    "region adjacency graph is not bipartite")
    if 0 in signs:
        raise InternalInvariantError("region adjacency graph is disconnected")
    return CheckerboardColoring(tuple(signs))


# ---------------------------------------------------------------------------
# flat-PD documents


def parse_flat_pd(text: str) -> FlatDiagram:
    """Parse a flat-PD document (JSON with "crossings" and optional "name")."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "crossings" not in doc:
        raise DiagramError('document must be an object with a "crossings" key')
    crossings = doc["crossings"]
    if (not isinstance(crossings, list)
            or not all(isinstance(c, list) for c in crossings)):
        raise DiagramError('"crossings" must be a list of 4-element lists')
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise DiagramError('"name" must be a string')
    return FlatDiagram(tuple(tuple(c) for c in crossings), name)


def to_flat_pd(diagram: FlatDiagram) -> str:
    doc: dict = {"crossings": [list(c) for c in diagram.crossings]}
    if diagram.name:
        doc["name"] = diagram.name
    return json.dumps(doc)


def to_dot(diagram: FlatDiagram) -> str:
    """Render the 4-valent graph in DOT, regions annotated on edges."""
    lines = ["graph diagram {"]
    for c in range(diagram.crossing_count):
        lines.append(f'  v{c + 1} [shape=point, xlabel="v{c + 1}"];')
    for arc in arcs(diagram):
        (c1, _), (c2, _) = arc.darts
        r1, r2 = sorted(arc.sides)
        lines.append(
            f'  v{c1 + 1} -- v{c2 + 1} [label="a{arc.label}: r{r1 + 1}|r{r2 + 1}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Reidemeister edits


def _relabel(crossings: list[list[int]], name: str | None) -> FlatDiagram:
    """Renumber arc labels to 1..2n by smallest incident dart."""
    first_seen: dict[int, Dart] = {}
    for c, tup in enumerate(crossings):
        for s, label in enumerate(tup):
            first_seen.setdefault(label, (c, s))
    order = sorted(first_seen, key=lambda lab: first_seen[lab])
    new_label = {old: i + 1 for i, old in enumerate(order)}
    return FlatDiagram(
        tuple(tuple(new_label[x] for x in tup) for tup in crossings), name)


def apply_r1(diagram: FlatDiagram, arc_label: int, side: str) -> FlatDiagram:
    """Insert a kink on the arc, on the chosen side of its traversal."""
    if side not in ("left", "right"):
        raise DiagramError(f"side must be 'left' or 'right', got {side!r}")
    arc = arc_by_label(diagram, arc_label)
    (c1, s1), (c2, s2) = arc.darts
    base = max(lab for tup in diagram.crossings for lab in tup)
    p, q, loop = base + 1, base + 2, base + 3
    crossings = [list(tup) for tup in diagram.crossings]
    crossings[c1][s1] = p
    crossings[c2][s2] = q
    if side == "left":
        crossings.append([p, q, loop, loop])
    else:
        crossings.append([p, loop, loop, q])
    return _relabel(crossings, diagram.name)


def _shared_regions(diagram: FlatDiagram, arc1: Arc, arc2: Arc) -> list[int]:
    return sorted(set(arc1.sides) & set(arc2.sides))


def apply_r2(diagram: FlatDiagram, arc1_label: int, arc2_label: int) -> FlatDiagram:
    """Push the first arc across the second through a shared region."""
    if arc1_label == arc2_label:
        raise DiagramError("cannot push an arc across itself")
    arc1 = arc_by_label(diagram, arc1_label)
    arc2 = arc_by_label(diagram, arc2_label)
    shared = _shared_regions(diagram, arc1, arc2)
    if not shared:
        raise DiagramError(
            f"arcs {arc1_label} and {arc2_label} share no region")
    region = regions(diagram)[shared[0]]
    corner = _region_at_corner(diagram)

    # dart of each arc owned by the shared region; its mate is the far end
    e = arc1.darts[0] if corner[arc1.darts[0]] == region.index else arc1.darts[1]
    f = arc2.darts[0] if corner[arc2.darts[0]] == region.index else arc2.darts[1]
    mate = _mates(diagram)
    (c1, s1), (c2, s2) = e, mate[e]
    (c3, s3), (c4, s4) = f, mate[f]

    base = max(lab for tup in diagram.crossings for lab in tup)
    p0, p1, p2, q_l, q_m, q_r = range(base + 1, base + 7)
    crossings = [list(tup) for tup in diagram.crossings]
    crossings[c1][s1] = p0
    crossings[c2][s2] = p2
    crossings[c3][s3] = q_r
    crossings[c4][s4] = q_l
    crossings.append([q_m, p1, q_l, p0])
    crossings.append([q_r, p1, q_m, p2])
    return _relabel(crossings, diagram.name)


def random_diagram(seed: int, move_count: int) -> FlatDiagram:
    """Grow a knot projection from the one-crossing curl by random moves."""
    if move_count < 0:
        raise DiagramError("move_count must be non-negative")
    rng = random.Random(seed)
    diagram = FlatDiagram(((1, 2, 2, 1),), name=f"random-{seed}-{move_count}")
    for _ in range(move_count):
        labels = [arc.label for arc in arcs(diagram)]
        if rng.random() < 0.5:
            diagram = apply_r1(diagram, rng.choice(labels),
                               rng.choice(("left", "right")))
        else:
            pairs = [(a.label, b.label)
                     for a in arcs(diagram) for b in arcs(diagram)
                     if a.label != b.label and _shared_regions(diagram, a, b)]
            diagram = apply_r2(diagram, *rng.choice(pairs))
    return FlatDiagram(diagram.crossings, f"random-{seed}-{move_count}")


# ---------------------------------------------------------------------------
# splicing


class _UnionFind:
    def __init__(self, size: int) -> None:
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _entry_slots(diagram: FlatDiagram, v: int) -> tuple[int, int]:
    """Slots through which the oriented knot enters crossing ``v``."""
    mate = _mates(diagram)
    entries = []
    d = start = (0, 0)
    while True:
        c, s = mate[d]
        if c == v:
            entries.append(s)
        d = (c, (s + 2) % 4)
        if d == start:
            break
    if len(entries) != 2:
        raise InternalInvariantError(
            f"knot traversal enters v{v + 1} {len(entries)} times")
    return entries[0], entries[1]


def splice(diagram: FlatDiagram, v: int) -> ComponentSplit:
    """Orientation-respecting smoothing of a knot at a self-crossing."""
    if not is_knot(diagram):
        raise DiagramError("splice requires a knot projection")
    if not 0 <= v < diagram.crossing_count:
        raise DiagramError(f"no crossing v{v + 1}")
    mate = _mates(diagram)
    corner = _region_at_corner(diagram)
    i1, i2 = _entry_slots(diagram, v)

    # the smoothing joins entry i1 to exit i2+2 and entry i2 to exit i1+2,
    # pairing adjacent slots into the two new strands
    pair_of = {}
    for a, b in (((i1) % 4, (i2 + 2) % 4), ((i2) % 4, (i1 + 2) % 4)):
        pair_of[a], pair_of[b] = b, a

    def step(d: Dart) -> Dart:
        c, s = mate[d]
        if c == v:
            return (v, pair_of[s])
        return (c, (s + 2) % 4)

    # components of the spliced link, as a partition of the arcs
    n = diagram.crossing_count
    arc_comp = _UnionFind(2 * n + 1)
    seen: set[Dart] = set()
    for start in sorted(mate):
        if start in seen:
            continue
        d = start
        first_label = diagram.crossings[d[0]][d[1]]
        while True:
            seen.add(d)
            arc_comp.union(first_label, diagram.crossings[d[0]][d[1]])
            d = step(d)
            if d == start:
                break
    roots = sorted({arc_comp.find(lab) for lab in range(1, 2 * n + 1)})
    if len(roots) != 2:
        raise InternalInvariantError(
            f"splice produced {len(roots)} components, expected 2")
    comp_of_arc = {lab: roots.index(arc_comp.find(lab))
                   for lab in range(1, 2 * n + 1)}
    # component 0 is the one carrying the smallest dart
    if comp_of_arc[diagram.crossings[0][0]] != 0:
        comp_of_arc = {lab: 1 - k for lab, k in comp_of_arc.items()}

    # region quotients: splicing merges the two corners of v not cut off by
    # a new strand; deleting a component merges regions across its arcs
    m = diagram.region_count
    quotients = [_UnionFind(m), _UnionFind(m)]
    cut_corners = {s for s in range(4) if pair_of[s] == (s + 1) % 4}
    merged_corners = [s for s in range(4) if s not in cut_corners]
    for uf in quotients:
        uf.union(corner[(v, merged_corners[0])], corner[(v, merged_corners[1])])
    for arc in arcs(diagram):
        # deleting component 1-k merges faces across its arcs in quotient k
        uf = quotients[1 - comp_of_arc[arc.label]]
        uf.union(arc.sides[0], arc.sides[1])

    strand_pairs: list[tuple[int, int] | None] = [None, None]
    for a, b in (((i1) % 4, (i2 + 2) % 4), ((i2) % 4, (i1 + 2) % 4)):
        strand_pairs[comp_of_arc[diagram.crossings[v][a]]] = (a, b)

    components = []
    for k in (0, 1):
        components.append(
            _build_component(diagram, v, k, comp_of_arc, mate, pair_of,
                             quotients[k], strand_pairs[k], corner))
    return ComponentSplit(v, components[0], components[1])


def _component_classes(uf: _UnionFind, m: int) -> tuple[dict[int, int], list[int]]:
    roots = sorted({uf.find(r) for r in range(m)})
    index = {root: i for i, root in enumerate(roots)}
    return index, [index[uf.find(r)] for r in range(m)]


def _build_component(diagram, v, k, comp_of_arc, mate, pair_of,
                     uf, strand_pair, corner) -> SplicedComponent:
    n = diagram.crossing_count
    m = diagram.region_count

    def strand_comps(c: int) -> tuple[int, int]:
        return (comp_of_arc[diagram.crossings[c][0]],
                comp_of_arc[diagram.crossings[c][1]])

    kept = tuple(c for c in range(n) if c != v and strand_comps(c) == (k, k))
    _, raw_map = _component_classes(uf, m)
    class_count = len(set(raw_map))
    if class_count != len(kept) + 2:
        raise InternalInvariantError(
            f"component has {class_count} region classes for {len(kept)} "
            "crossings")

    # side regions of the smoothed strand, in the component's quotient
    side_arc = diagram.crossings[v][strand_pair[0]]
    d1, d2 = sorted(d for d, lab in _dart_labels(diagram) if lab == side_arc)
    raw_sides = (raw_map[corner[d1]], raw_map[corner[d2]])
    if raw_sides[0] == raw_sides[1]:
        raise InternalInvariantError("smoothed strand has equal side regions")

    if not kept:
        # bare loop: two regions, the one containing region 0's class first
        order = sorted(set(raw_map))
        renum = {cls: i for i, cls in enumerate(order)}
        region_map = tuple(renum[c] for c in raw_map)
        return SplicedComponent(None, region_map, (), None,
                                (renum[raw_sides[0]], renum[raw_sides[1]]))

    # walk the strand between kept crossings to form the component's arcs
    local = {c: i for i, c in enumerate(kept)}
    endpoint_of: dict[Dart, Dart] = {}
    through_v: set[frozenset] = set()
    for c in kept:
        for s in range(4):
            d = (c, s)
            passed_v = False
            while True:
                cc, ss = mate[d]
                if cc == v:
                    passed_v = True
                    d = (v, pair_of[ss])
                elif cc in local:
                    endpoint_of[(c, s)] = (cc, ss)
                    break
                else:
                    d = (cc, (ss + 2) % 4)
            if passed_v:
                through_v.add(frozenset(((c, s), endpoint_of[(c, s)])))
    arcs_found = sorted({frozenset((d, e)) for d, e in endpoint_of.items()},
                        key=lambda fs: sorted(fs))
    label_of = {fs: i + 1 for i, fs in enumerate(arcs_found)}
    dart_label: dict[Dart, int] = {}
    for fs, lab in label_of.items():
        for d in fs:
            dart_label[d] = lab
    crossings = tuple(tuple(dart_label[(c, s)] for s in range(4)) for c in kept)
    sub = FlatDiagram(crossings, None)

    # match the component's own faces to the quotient classes
    class_to_region: dict[int, int] = {}
    sub_corner = _region_at_corner(sub)
    for c in kept:
        for s in range(4):
            cls = raw_map[corner[(c, s)]]
            reg = sub_corner[(local[c], s)]
            if class_to_region.setdefault(cls, reg) != reg:
                raise InternalInvariantError(
                    "component faces do not refine the region quotient")
    if len(set(class_to_region.values())) != sub.region_count:
        raise InternalInvariantError(
            "component faces do not biject with region classes")
    region_map = tuple(class_to_region[c] for c in raw_map)

    if len(through_v) != 1:
        raise InternalInvariantError(
            f"{len(through_v)} component arcs pass the smoothing site")
    strand_arc = label_of[next(iter(through_v))]
    return SplicedComponent(sub, region_map, kept, strand_arc,
                            (class_to_region[raw_sides[0]],
                             class_to_region[raw_sides[1]]))


def _dart_labels(diagram: FlatDiagram):
    for c, tup in enumerate(diagram.crossings):
        for s, lab in enumerate(tup):
            yield (c, s), lab


D0 = FlatDiagram(((1, 2, 2, 1),), name="d0")
