"""Deciders for separation axioms and connectedness.

Every decider quantifies "for every fuzzy soft point" over the points whose
grades come from the configured finite lattice and which lie inside the
carrier.  A verdict therefore always names the lattice it was decided
against; over a different lattice the answer may differ, and that is not a
bug but the finite reading of the axiom.

Conventions, fixed here and echoed in every verdict:

* T0 ranges over disjoint point pairs, T1 and T2 over distinct pairs,
  following the letter of each axiom.  ``point_pair_relation`` overrides
  the relation for all three when set.
* Point and set disjointness default to the pointwise reading; the
  cross-parameter reading is available through ``disjointness_mode``.
* "k does not contain the point" in the regularity axiom is read as plain
  non-membership.  ``regular_reading = "disjoint"`` switches to the
  stronger reading (point and closed set disjoint).

All scans are brute force in canonical order, so the first witness of a
failure is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import GradeLattice
from .points import enumerate_points, point_in
from .softsets import DISJOINTNESS_MODES, FuzzySoftSet, disjoint
from .topology import FuzzySoftTopology, SubspaceView

PAIR_RELATIONS = ("distinct", "disjoint")
REGULAR_READINGS = ("membership", "disjoint")


class DeciderPreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class DeciderConfig:
    """Everything a verdict depends on besides the space itself."""

    lattice: GradeLattice
    disjointness_mode: str = "pointwise"
    point_pair_relation: Optional[str] = None  # None: per-axiom default
    regular_reading: str = "membership"
    cap: int = 10**6

    def __post_init__(self) -> None:
        if self.disjointness_mode not in DISJOINTNESS_MODES:
            raise ValueError(f"unknown disjointness mode: {self.disjointness_mode!r}")
        if self.point_pair_relation is not None and (
            self.point_pair_relation not in PAIR_RELATIONS
        ):
            raise ValueError(f"unknown pair relation: {self.point_pair_relation!r}")
        if self.regular_reading not in REGULAR_READINGS:
            raise ValueError(f"unknown regular reading: {self.regular_reading!r}")

    @classmethod
    def auto_for(cls, space: FuzzySoftTopology, **overrides) -> "DeciderConfig":
        """Default lattice: the complement closure of every grade occurring
        in the carrier and the opens."""
        grades = set(space.carrier.occurring_grades())
        for o in space.opens:
            grades |= o.occurring_grades()
        return cls(lattice=GradeLattice.close(grades), **overrides)

    def relation_for(self, axiom: str) -> str:
        if self.point_pair_relation is not None:
            return self.point_pair_relation
        return "disjoint" if axiom == "T0" else "distinct"

    def to_payload(self) -> dict:
        return {
            "lattice": [str(g) for g in self.lattice],
            "disjointness_mode": self.disjointness_mode,
            "point_pair_relation": self.point_pair_relation or "per-axiom",
            "regular_reading": self.regular_reading,
            "cap": self.cap,
        }


@dataclass(frozen=True)
class Witness:
    """A self-describing counterexample part of a failed verdict."""

    kind: str
    rendered: tuple[str, ...]
    note: str = ""

    def render(self) -> str:
        body = " / ".join(self.rendered)
        return f"{body} ({self.note})" if self.note else body

    def to_payload(self) -> dict:
        payload = {"kind": self.kind, "parts": list(self.rendered)}
        if self.note:
            payload["note"] = self.note
        return payload


def point_pair_witness(p, q, note: str = "") -> Witness:
    return Witness("point-pair", (p.render(), q.render()), note)


def set_witness(kind: str, *sets: FuzzySoftSet, note: str = "") -> Witness:
    return Witness(kind, tuple(s.render() for s in sets), note)


@dataclass(frozen=True)
class AxiomVerdict:
    axiom: str
    holds: bool
    config: DeciderConfig
    witness: Optional[Witness] = None
    detail: str = ""

    def __post_init__(self) -> None:
        if not self.holds and self.witness is None:
            raise ValueError("a failed verdict must carry a witness")

    def to_payload(self) -> dict:
        payload = {
            "axiom": self.axiom,
            "holds": self.holds,
            "config": self.config.to_payload(),
        }
        if self.witness is not None:
            payload["witness"] = self.witness.to_payload()
        if self.detail:
            payload["detail"] = self.detail
        return payload


# ---------------------------------------------------------------------------
# scan scaffolding

class _Scan:
    """Point enumeration plus membership masks for one (space, config) run.

    Masks are plain ints with bit i meaning "open number i"; they keep the
    pair loops at O(points^2 * opens) with small constants while every scan
    stays in canonical order.
    """

    def __init__(self, space: FuzzySoftTopology, cfg: DeciderConfig):
        self.space = space
        self.cfg = cfg
        self.points = [
            p
            for p in enumerate_points(
                space.universe, space.parameters, cfg.lattice, cfg.cap
            )
            if point_in(p, space.carrier)
        ]
        self.forms = [p.as_fss() for p in self.points]
        self.open_masks = [self._membership_mask(p) for p in self.points]

    def _membership_mask(self, p) -> int:
        mask = 0
        for i, o in enumerate(self.space.opens):
            if point_in(p, o):
                mask |= 1 << i
        return mask

    def open_disjoint_masks(self) -> list[int]:
        opens = self.space.opens
        masks = [0] * len(opens)
        for i, a in enumerate(opens):
            masks[i] |= 1 << i if disjoint(a, a, self.cfg.disjointness_mode) else 0
            for j in range(i + 1, len(opens)):
                if disjoint(a, opens[j], self.cfg.disjointness_mode):
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
        return masks

    def cover_mask(self, target: FuzzySoftSet) -> int:
        """Opens lying above ``target``."""
        mask = 0
        for i, o in enumerate(self.space.opens):
            if target.leq(o):
                mask |= 1 << i
        return mask

    def pair_ok(self, axiom: str, i: int, j: int) -> bool:
        relation = self.cfg.relation_for(axiom)
        if relation == "distinct":
            return True  # enumerated points are pairwise distinct
        return disjoint(self.forms[i], self.forms[j], self.cfg.disjointness_mode)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# separation axioms

def is_t0(space: FuzzySoftTopology, cfg: DeciderConfig) -> AxiomVerdict:
    """Some open contains exactly one point of each qualifying pair."""
    scan = _Scan(space, cfg)
    for i in range(len(scan.points)):
        for j in range(i + 1, len(scan.points)):
            if not scan.pair_ok("T0", i, j):
                continue
            if scan.open_masks[i] ^ scan.open_masks[j] == 0:
                return AxiomVerdict(
                    "T0",
                    False,
                    cfg,
                    point_pair_witness(
                        scan.points[i],
                        scan.points[j],
                        "no open contains exactly one of the pair",
                    ),
                )
    return AxiomVerdict("T0", True, cfg, detail=f"{len(scan.points)} points scanned")


def is_t1(space: FuzzySoftTopology, cfg: DeciderConfig) -> AxiomVerdict:
    """Both one-sided separations exist for each qualifying pair."""
    scan = _Scan(space, cfg)
    for i in range(len(scan.points)):
        for j in range(i + 1, len(scan.points)):
            if not scan.pair_ok("T1", i, j):
                continue
            mi, mj = scan.open_masks[i], scan.open_masks[j]
            if mi & ~mj == 0:
                return AxiomVerdict(
                    "T1",
                    False,
                    cfg,
                    point_pair_witness(
                        scan.points[i],
                        scan.points[j],
                        "no open contains the first point without the second",
                    ),
                )
            if mj & ~mi == 0:
                return AxiomVerdict(
                    "T1",
                    False,
                    cfg,
                    point_pair_witness(
                        scan.points[i],
                        scan.points[j],
                        "no open contains the second point without the first",
                    ),
                )
    return AxiomVerdict("T1", True, cfg, detail=f"{len(scan.points)} points scanned")


def is_t2(space: FuzzySoftTopology, cfg: DeciderConfig) -> AxiomVerdict:
    """Disjoint opens separate each qualifying pair."""
    scan = _Scan(space, cfg)
    disjoint_masks = scan.open_disjoint_masks()
    for i in range(len(scan.points)):
        for j in range(i + 1, len(scan.points)):
            if not scan.pair_ok("T2", i, j):
                continue
            mi, mj = scan.open_masks[i], scan.open_masks[j]
            if not any(disjoint_masks[b] & mj for b in _bits(mi)):
                return AxiomVerdict(
                    "T2",
                    False,
                    cfg,
                    point_pair_witness(
                        scan.points[i],
                        scan.points[j],
                        "no pair of disjoint opens separates the points",
                    ),
                )
    return AxiomVerdict("T2", True, cfg, detail=f"{len(scan.points)} points scanned")


def points_all_closed(space: FuzzySoftTopology, cfg: DeciderConfig) -> AxiomVerdict:
    """Every lattice point of the carrier is, as a soft set, a closed set."""
    scan = _Scan(space, cfg)
    closed = set(space.closed_sets)
    for p, form in zip(scan.points, scan.forms):
        if form not in closed:
            return AxiomVerdict(
                "points-closed",
                False,
                cfg,
                Witness("point", (p.render(),), "its soft-set form is not closed"),
            )
    return AxiomVerdict(
        "points-closed", True, cfg, detail=f"{len(scan.points)} points scanned"
    )


def _not_containing(p_form: FuzzySoftSet, p, k: FuzzySoftSet, cfg: DeciderConfig) -> bool:
    if cfg.regular_reading == "membership":
        return not point_in(p, k)
    return disjoint(p_form, k, cfg.disjointness_mode)


def is_regular(space: FuzzySoftTopology, cfg: DeciderConfig) -> AxiomVerdict:
    """Points and closed sets avoiding them split into disjoint opens."""
    scan = _Scan(space, cfg)
    disjoint_masks = scan.open_disjoint_masks()
    closed_cover = [scan.cover_mask(k) for k in space.closed_sets]
    for p, form, mask in zip(scan.points, scan.forms, scan.open_masks):
        for k, cover in zip(space.closed_sets, closed_cover):
            if not _not_containing(form, p, k, cfg):
                continue
            if not any(disjoint_masks[b] & cover for b in _bits(mask)):
                return AxiomVerdict(
                    "regular",
                    False,
                    cfg,
                    Witness(
                        "point-closed",
                        (p.render(), k.render()),
                        "no disjoint opens around the point and the closed set",
                    ),
                )
    return AxiomVerdict(
        "regular", True, cfg, detail=f"{len(scan.points)} points scanned"
    )


def is_normal(space: FuzzySoftTopology, cfg: DeciderConfig) -> AxiomVerdict:
    """Disjoint closed pairs split into disjoint open covers."""
    scan = _Scan(space, cfg)
    disjoint_masks = scan.open_disjoint_masks()
    closeds = space.closed_sets
    covers = [scan.cover_mask(k) for k in closeds]
    for i, a in enumerate(closeds):
        for j in range(i, len(closeds)):
            b = closeds[j]
            if not disjoint(a, b, cfg.disjointness_mode):
                continue
            if not any(disjoint_masks[x] & covers[j] for x in _bits(covers[i])):
                return AxiomVerdict(
                    "normal",
                    False,
                    cfg,
                    set_witness(
                        "closed-pair",
                        a,
                        b,
                        note="no disjoint opens cover the closed pair",
                    ),
                )
    return AxiomVerdict("normal", True, cfg, detail=f"{len(closeds)} closed sets")


def _conjunction(axiom: str, first: AxiomVerdict, second: AxiomVerdict,
                 cfg: DeciderConfig) -> AxiomVerdict:
    for part in (first, second):
        if not part.holds:
            return AxiomVerdict(
                axiom,
                False,
                cfg,
                part.witness,
                detail=f"{part.axiom} fails",
            )
    return AxiomVerdict(
        axiom, True, cfg, detail=f"{first.axiom} and {second.axiom} both hold"
    )


def is_t3(space: FuzzySoftTopology, cfg: DeciderConfig) -> AxiomVerdict:
    return _conjunction("T3", is_regular(space, cfg), is_t1(space, cfg), cfg)


def is_t4(space: FuzzySoftTopology, cfg: DeciderConfig) -> AxiomVerdict:
    return _conjunction("T4", is_normal(space, cfg), is_t1(space, cfg), cfg)


# ---------------------------------------------------------------------------
# connectedness

def find_separation(
    space: FuzzySoftTopology, cfg: DeciderConfig
) -> Optional[tuple[FuzzySoftSet, FuzzySoftSet]]:
    """First pair of disjoint nonempty opens whose union is the carrier."""
    opens = space.opens
    for i, a in enumerate(opens):
        if a.is_null():
            continue
        for b in opens[i + 1 :]:
            if b.is_null():
                continue
            if not disjoint(a, b, cfg.disjointness_mode):
                continue
            if a.union(b) == space.carrier:
                return (a, b)
    return None


def is_connected(space: FuzzySoftTopology, cfg: DeciderConfig) -> AxiomVerdict:
    pair = find_separation(space, cfg)
    if pair is None:
        return AxiomVerdict("connected", True, cfg, detail="no separation exists")
    return AxiomVerdict(
        "connected",
        False,
        cfg,
        set_witness("separation", *pair, note="disjoint opens covering the carrier"),
    )


def clopen_witness(space: FuzzySoftTopology) -> Optional[FuzzySoftSet]:
    """First nonempty proper subset of the carrier that is clopen."""
    for o in space.opens:
        if o.is_null() or o == space.carrier:
            continue
        if space.is_closed(o):
            return o
    return None


def subspace_separation(
    view: SubspaceView,
    k: FuzzySoftSet,
    h: FuzzySoftSet,
    cfg: DeciderConfig,
) -> bool:
    """Whether k and h split the subspace in the closure sense: each misses
    the parent closure of the other.

    Whether this coincides with "k, h are a separation of the subspace" is a
    question for the auditor, not an assumption made here.
    """
    if k.is_null() or h.is_null():
        raise DeciderPreconditionError("separation parts must be nonempty")
    if k.union(h) != view.carrier:
        raise DeciderPreconditionError("parts must union to the subspace carrier")
    parent = view.parent
    return (
        k.intersection(parent.closure(h)).is_null()
        and h.intersection(parent.closure(k)).is_null()
    )
