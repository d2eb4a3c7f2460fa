"""Doubly-pointed genus-one diagrams W(p,q,r,s) as combinatorial strand models.

Cutting the torus along the alpha curve leaves an annulus, drawn as a square
whose left and right edges are the two copies of alpha; the top and bottom
edges are identified.  Each edge carries p marked slots, numbered 0..p-1 from
bottom to top, and right slot i is glued to left slot (i + s) mod p.

Slot layout (fixed once; the whole package depends on it):

  left edge, bottom to top:   [p-2q-r lower feet][2q z-rainbow feet][r middle feet]
  right edge, bottom to top:  [p-2q-r lower feet][r middle feet][2q w-rainbow feet]

Strands of the beta curve:

  lower stripe j   : left slot j            -- right slot j
  middle stripe j  : left slot l+2q+j       -- right slot l+j      (l = p-2q-r)
  z-rainbow i      : left slots l+q-1-i, l+q+i      (i = 0 innermost)
  w-rainbow i      : right slots l+r+q-1-i, l+r+q+i

The basepoint z sits inside the innermost z-rainbow (between left slots
l+q-1 and l+q); w sits inside the innermost w-rainbow (between right slots
l+r+q-1 and l+r+q).  With no rainbows, z sits between the lower and middle
bands at the left and w in the band wrapping through the top/bottom seam.
Middle stripes therefore run above z and below w; lower stripes run the
other way around.

Orientation convention: the innermost z-rainbow runs from its upper foot to
its lower foot (clockwise around z); with no rainbow, stripes run left to
right.  Components not containing a reference strand of the first kind fall
back to the next rule in that order.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

Foot = Tuple[str, int]  # ('L' or 'R', slot index)


class DiagramError(ValueError):
    """Invalid diagram parameters or an operation on an unsuitable diagram."""


@dataclass(frozen=True, order=True)
class OneOneParams:
    """The four-tuple describing a doubly-pointed genus-one diagram."""

    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        if self.p < 1:
            raise DiagramError(f"need p >= 1, got p={self.p}")
        if self.q < 0 or self.r < 0:
            raise DiagramError(f"need q, r >= 0 in {self}")
        if 2 * self.q + self.r > self.p:
            raise DiagramError(f"constraint 2q + r <= p violated: {self}")
        if not 0 <= self.s < self.p:
            raise DiagramError(f"constraint 0 <= s < p violated: {self}")

    @property
    def lower(self) -> int:
        return self.p - 2 * self.q - self.r

    def mirror(self) -> "OneOneParams":
        """Mirror diagram parameters (p, q, p-2q-r, (p-s+2q) mod p)."""
        out = OneOneParams(self.p, self.q, self.p - 2 * self.q - self.r,
                           (self.p - self.s + 2 * self.q) % self.p)
        return out

    def is_simple(self) -> bool:
        return self.q == 0

    def __str__(self) -> str:
        if self.q == 0:
            return f"K({self.p},{self.s},{self.r})"
        return f"W({self.p},{self.q},{self.r},{self.s})"

    def w_str(self) -> str:
        return f"W({self.p},{self.q},{self.r},{self.s})"


_PARAM_RE = re.compile(r"^\s*([WK])\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*(?:,\s*(-?\d+)\s*)?\)\s*$")


def parse_params(text: str) -> OneOneParams:
    """Parse 'W(p,q,r,s)' or 'K(p,q,k)' (the latter meaning W(p,0,k,q))."""
    m = _PARAM_RE.match(text)
    if not m:
        raise DiagramError(f"cannot parse diagram {text!r}")
    kind = m.group(1)
    nums = [int(g) for g in m.groups()[1:] if g is not None]
    if kind == "W":
        if len(nums) != 4:
            raise DiagramError(f"W needs four parameters: {text!r}")
        return OneOneParams(*nums)
    if len(nums) != 3:
        raise DiagramError(f"K needs three parameters: {text!r}")
    p, q, k = nums
    if not 0 <= q < max(p, 1):
        raise DiagramError(f"K(p,q,k) needs 0 <= q < p: {text!r}")
    return OneOneParams(p, 0, k, q)


@dataclass(frozen=True)
class Strand:
    """One arc of beta in the cut-open annulus."""

    kind: str          # 'lower' | 'middle' | 'zrainbow' | 'wrainbow'
    index: int         # stripe index within its band, or rainbow depth (0 = innermost)
    feet: Tuple[Foot, Foot]

    def other_end(self, end: int) -> int:
        return 1 - end


class StrandModel:
    """Deterministic combinatorial model of W(p,q,r,s).

    Carries the strand list, the alpha gluing, the traversal of beta into
    oriented components, per-crossing signs, and the face structure of the
    complement (used for gradings).  Immutable after construction.
    """

    def __init__(self, params: OneOneParams):
        self.params = params
        p, q, r, s = params.p, params.q, params.r, params.s
        low = params.lower
        self.p, self.q, self.r, self.s, self.low = p, q, r, s, low

        strands: List[Strand] = []
        for j in range(low):
            strands.append(Strand("lower", j, (("L", j), ("R", j))))
        for j in range(r):
            strands.append(Strand("middle", j, (("L", low + 2 * q + j), ("R", low + j))))
        for i in range(q):
            strands.append(Strand("zrainbow", i,
                                  (("L", low + q - 1 - i), ("L", low + q + i))))
        for i in range(q):
            strands.append(Strand("wrainbow", i,
                                  (("R", low + r + q - 1 - i), ("R", low + r + q + i))))
        self.strands = strands

        end_at: Dict[Foot, Tuple[int, int]] = {}
        for k, st in enumerate(strands):
            for e, foot in enumerate(st.feet):
                if foot in end_at:
                    raise AssertionError(f"layout collision at {foot} in {params}")
                end_at[foot] = (k, e)
        self._end_at = end_at

        self._traverse()
        self._orient()

    # -- gluing ------------------------------------------------------------

    def glue_from_left(self, j: int) -> Foot:
        return ("R", (j - self.s) % self.p)

    def glue_from_right(self, i: int) -> Foot:
        return ("L", (i + self.s) % self.p)

    def point_of_foot(self, foot: Foot) -> int:
        """Points are indexed by left slot; a right foot i sits at point (i+s) mod p."""
        side, slot = foot
        return slot if side == "L" else (slot + self.s) % self.p

    # -- traversal and orientation ------------------------------------------

    def _traverse(self) -> None:
        seen: Dict[int, int] = {}  # strand -> entry end under the traversal
        comps: List[List[Tuple[int, int]]] = []
        for k0 in range(len(self.strands)):
            if k0 in seen:
                continue
            comp: List[Tuple[int, int]] = []
            k, e = k0, 0
            while True:
                seen[k] = e
                comp.append((k, e))
                side, slot = self.strands[k].feet[1 - e]
                nxt = self.glue_from_left(slot) if side == "L" else self.glue_from_right(slot)
                k, e = self._end_at[nxt]
                if (k, e) == (k0, 0):
                    break
                if k in seen:
                    # hit an already-walked strand other than the start: the
                    # walk must close up exactly, anything else is a bug
                    raise AssertionError(f"traversal did not close at {self.params}")
            comps.append(comp)
        self.components = comps

    def _orient(self) -> None:
        """Fix a direction on each component; record per-strand entry ends."""
        entry: Dict[int, int] = {}
        for comp in self.components:
            ends = {k: e for k, e in comp}
            flip = None
            # reference: innermost z-rainbow entered at its upper foot
            zr = [k for k, _ in comp if self.strands[k].kind == "zrainbow"]
            if zr:
                k_ref = min(zr, key=lambda k: self.strands[k].index)
                flip = ends[k_ref] != 1
            else:
                stripes = [k for k, _ in comp
                           if self.strands[k].kind in ("lower", "middle")]
                if stripes:
                    k_ref = min(stripes, key=lambda k: (self.strands[k].kind != "lower",
                                                        self.strands[k].index))
                    flip = ends[k_ref] != 0  # stripes run left to right
                else:
                    k_ref = min((k for k, _ in comp),
                                key=lambda k: (self.strands[k].kind != "zrainbow",
                                               self.strands[k].index))
                    flip = ends[k_ref] != 1
            for k, e in comp:
                entry[k] = (1 - e) if flip else e
        self.entry_end = entry

    def component_count(self) -> int:
        return len(self.components)

    def is_knot_diagram(self) -> bool:
        """Single beta component representing a nontrivial class."""
        return self.component_count() == 1 and self.homology_class() != (0, 0)

    # -- signs, homology, order ----------------------------------------------

    def point_sign(self, point: int) -> int:
        """+1 when beta crosses alpha left-to-right at this point.

        The crossing at a point runs from the strand end on the right-edge
        side to the strand end on the left-edge side exactly when beta is
        moving in the +x direction there.
        """
        j = point
        k, e = self._end_at[("L", j)]
        # beta departs into the 'L'-side strand iff that strand is entered here
        departs_left = self.entry_end[k] == e
        return 1 if departs_left else -1

    def homology_class(self) -> Tuple[int, int]:
        """(a, b): signed alpha crossings and winding along alpha.

        Defined for any orientation assignment; callers interested in the
        knot class should require a single component first.
        """
        a = sum(self.point_sign(j) for j in range(self.p))
        b = 0
        for comp in self.components:
            for k, _ in comp:
                st = self.strands[k]
                e_in = self.entry_end[k]
                side, slot = st.feet[1 - e_in]
                if side == "R":
                    if slot + self.s >= self.p:
                        b += 1
                else:
                    if slot - self.s < 0:
                        b -= 1
        return a, b

    def lens_order(self) -> int:
        """|alpha . beta|, the order of H1 of the ambient space (0 = infinite)."""
        if self.component_count() != 1:
            raise DiagramError(f"{self.params} has several beta components")
        a, _ = self.homology_class()
        return abs(a)

    # -- local structure at z ---------------------------------------------------

    def ray_sequence(self) -> List[Tuple[int, str]]:
        """Strand crossings of the upward vertical ray through z, in order.

        Entries are (strand index, tag) with tag 'upper'/'lower' for rainbow
        crossings and 'body' for stripes; the list wraps once around the
        vertical circle through z.
        """
        seq: List[Tuple[int, str]] = []
        by_kind: Dict[Tuple[str, int], int] = {
            (st.kind, st.index): k for k, st in enumerate(self.strands)
        }
        for i in range(self.q):
            seq.append((by_kind[("zrainbow", i)], "upper"))
        for j in range(self.r):
            seq.append((by_kind[("middle", j)], "body"))
        for j in range(self.low):
            seq.append((by_kind[("lower", j)], "body"))
        for i in range(self.q - 1, -1, -1):
            seq.append((by_kind[("zrainbow", i)], "lower"))
        return seq

    def crossing_direction(self, strand: int, tag: str) -> int:
        """+1 when the strand travels in +x at the given ray crossing."""
        st = self.strands[strand]
        e = self.entry_end[strand]
        if st.kind in ("lower", "middle"):
            entered_left = st.feet[e][0] == "L"
            return 1 if entered_left else -1
        if st.kind == "zrainbow":
            clockwise = e == 1  # entered at the upper foot
            if tag == "upper":
                return 1 if clockwise else -1
            return -1 if clockwise else 1
        raise DiagramError("w-rainbows do not meet the ray through z")

    # -- faces --------------------------------------------------------------------

    def faces(self) -> "FaceData":
        if not hasattr(self, "_faces"):
            self._faces = _build_faces(self)
        return self._faces

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> str:
        data = {
            "params": self.params.w_str(),
            "gluing_shift": self.s,
            "strands": [
                {
                    "kind": st.kind,
                    "index": st.index,
                    "feet": [list(f) for f in st.feet],
                    "entered_at": self.entry_end[k],
                }
                for k, st in enumerate(self.strands)
            ],
            "components": [[k for k, _ in comp] for comp in self.components],
            "point_signs": [self.point_sign(j) for j in range(self.p)],
            "homology_class": list(self.homology_class()),
        }
        return json.dumps(data, sort_keys=False, indent=2)


def build(params: OneOneParams) -> StrandModel:
    """Construct the strand model; rebuilding is bit-identical by design."""
    return StrandModel(params)


# ---------------------------------------------------------------------------
# faces of the complement of alpha and beta (a DCEL on the torus)
# ---------------------------------------------------------------------------

@dataclass
class FaceData:
    """Faces of the torus cut along alpha and beta.

    half_edges: directed edges as integers; face_of[h] identifies the orbit.
    corners[v] lists the four faces around point v in counterclockwise
    order starting east of alpha above the beta strand:
    (NE on the left-edge side, SE on the left-edge side,
     SW on the right-edge side, NW on the right-edge side).
    z_face / w_face: faces holding the two basepoints.
    """

    n_faces: int
    face_of: Dict[Tuple[str, int, int], int]
    corners: Dict[int, Tuple[int, int, int, int]]
    z_face: int
    w_face: int


def _build_faces(model: StrandModel) -> FaceData:
    p = model.p

    # Directed edge keys: ('a', j, d) is the alpha arc from point j to j+1,
    # d=+1 upward, d=-1 the reverse; ('b', k, d) is strand k from foot d=0
    # to foot 1 (d=+1) or back (d=-1).
    def a_edge(j: int, d: int):
        return ("a", j % p, d)

    def b_edge(k: int, d: int):
        return ("b", k, d)

    # Rotation system: counterclockwise order of edge-ends around a point,
    # with x pointing east (into the square from the left edge) and y north:
    #   alpha-up, L-side strand end, alpha-down, R-side strand end.
    # Each incident directed edge is listed by the direction LEAVING the point.
    out_edges: Dict[int, List[Tuple[str, int, int]]] = {}
    for j in range(p):
        kL, eL = model._end_at[("L", j)]
        kR, eR = model._end_at[model.glue_from_left(j)]
        up = a_edge(j, +1)
        down = a_edge((j - 1) % p, -1)
        left_strand = b_edge(kL, +1 if eL == 0 else -1)
        right_strand = b_edge(kR, +1 if eR == 0 else -1)
        out_edges[j] = [up, left_strand, down, right_strand]

    def target(edge) -> int:
        typ, idx, d = edge
        if typ == "a":
            return (idx + 1) % p if d == +1 else idx
        st = model.strands[idx]
        return model.point_of_foot(st.feet[1 if d == +1 else 0])

    def reverse(edge):
        typ, idx, d = edge
        return (typ, idx, -d)

    # next half-edge along a (counterclockwise) face: arrive at v along e,
    # turn to the edge just clockwise of the reversed edge.
    def face_next(edge):
        v = target(edge)
        ring = out_edges[v]
        i = ring.index(reverse(edge))
        return ring[(i - 1) % len(ring)]

    face_of: Dict[Tuple[str, int, int], int] = {}
    n_faces = 0
    all_edges = [a_edge(j, d) for j in range(p) for d in (+1, -1)]
    all_edges += [b_edge(k, d) for k in range(len(model.strands)) for d in (+1, -1)]
    for e0 in all_edges:
        if e0 in face_of:
            continue
        e = e0
        while True:
            face_of[e] = n_faces
            e = face_next(e)
            if e == e0:
                break
        n_faces += 1
    # Euler check: V - E + F = 0 on the torus
    if p - 2 * p + n_faces != 0:
        raise AssertionError(f"face count {n_faces} fails Euler check for {model.params}")

    # Corners around point j, counterclockwise starting between alpha-up and
    # the L-side strand end: the face left of each outgoing ring edge.
    corners: Dict[int, Tuple[int, int, int, int]] = {}
    for j in range(p):
        ring = out_edges[j]
        # face between ring[i] and ring[i+1] is the face containing the
        # half-edge entering along reverse(ring[i+1]) ... equivalently the
        # face of ring[i] seen counterclockwise; use face_of of the directed
        # edge whose face-cycle passes this corner: the corner between
        # ring[i] and ring[(i+1)] is the face of reverse(ring[(i+1) % 4])'s
        # successor; simplest: the face left of ring[i] when leaving j is
        # face_of[ring[i]] only if faces are left-of-directed-edge orbits,
        # which they are by the face_next construction.
        corners[j] = tuple(face_of[ring[i]] for i in range(4))  # type: ignore

    # Basepoint faces.  z sits east of the left edge between slots
    # l+q-1 and l+q: the face left of the upward alpha arc there is on the
    # right-edge side, so z's face is the one right of that arc, i.e. the
    # face left of the downward arc.
    lzq = (model.low + model.q - 1) % p
    z_face = face_of[a_edge(lzq, -1)]
    wr = (model.low + model.r + model.q - 1 + model.s) % p
    w_face = face_of[a_edge(wr, +1)]
    return FaceData(n_faces=n_faces, face_of=face_of, corners=corners,
                    z_face=z_face, w_face=w_face)


# ---------------------------------------------------------------------------
# suture data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SutureTriple:
    """Intersection counts of the three suture curves with the two handles.

    gamma1 is a push-off of beta with reversed orientation, gamma2 a
    reversed push-off of a small circle around z, and gamma3 their band sum
    along a short arc from the innermost z-rainbow (or the stripe nearest z)
    to the circle.  The second handle curve is the straight z-to-w arc,
    which meets every z-rainbow, every middle stripe and every w-rainbow
    exactly once.
    """

    params: OneOneParams
    gamma1_alpha1: int
    gamma2_alpha1: int
    gamma3_alpha1: int
    gamma1_alpha2: int
    gamma2_alpha2: int
    gamma3_alpha2: int
    genus: int = 2

    def total_alpha1(self) -> int:
        return self.gamma1_alpha1 + self.gamma2_alpha1 + self.gamma3_alpha1

    def total_alpha2(self) -> int:
        return self.gamma1_alpha2 + self.gamma2_alpha2 + self.gamma3_alpha2


def suture_triple(model: StrandModel) -> SutureTriple:
    p, q, r = model.p, model.q, model.r
    g1a1 = p
    g2a1 = 0
    g3a1 = g1a1 + g2a1  # the band-sum arc stays near z, away from alpha
    g1a2 = 2 * q + r
    g2a2 = 1
    g3a2 = g1a2 + g2a2
    return SutureTriple(model.params, g1a1, g2a1, g3a1, g1a2, g2a2, g3a2)
