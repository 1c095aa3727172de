"""Fuzzy soft topologies: validation, closure structure, neighbourhoods,
subspaces.

A topology on a carrier soft set is a finite family of "open" soft sets
that contains the null set and the carrier and is closed under pairwise
intersection (min) and pairwise union (max).  Closed sets are the pointwise
complements 1 - o of the opens; because the complement is taken against the
all-one set, a closed set may well exceed the carrier (the complement of
the null set is always the all-one set).

Closure and interior are computed by direct scan:

* closure(g) is the intersection of every closed superset of g.  The scan
  is always total because the all-one set is closed and contains anything.
* interior(g) is the union of every open subset of g.

No lattice-theoretic shortcut is taken; on families of this size the scan
is the definition, which keeps the engine self-evidently faithful.  Results
are memoised per topology instance, which changes nothing observable.

A subspace at a carrier g below the parent carrier has opens {g min o}.
Its subspace-relative closed sets are the traces {k min g} of the parent's
closed sets, and relative closure scans those traces.  Relative closure
provably equals closure-in-the-parent intersected with g; both routes are
exposed so the equation can be checked rather than assumed.  The induced
family also forms a topology in its own right, whose absolute closed sets
(1 - o) are a different family in general; the claim registry audits the
gap between the two readings instead of hiding it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .algebra import ContextMismatchError, GradeLattice
from .points import FuzzySoftPoint, point_in
from .softsets import FuzzySoftSet, enumerate_lattice_sets


class CarrierBoundError(ValueError):
    """A set escapes the carrier it must stay below."""


@dataclass(frozen=True)
class AxiomViolation:
    """One failed topology axiom with a minimal witness."""

    axiom: str  # "carrier-bound" | "contains-null" | "contains-carrier"
    #             | "intersection-closed" | "union-closed"
    members: tuple[FuzzySoftSet, ...]
    detail: str

    def render(self) -> str:
        return f"{self.axiom}: {self.detail}"


class TopologyValidationError(ValueError):
    def __init__(self, violations: tuple[AxiomViolation, ...]):
        self.violations = violations
        super().__init__(
            "; ".join(v.render() for v in violations) or "invalid topology"
        )


def _canonical_family(sets) -> tuple[FuzzySoftSet, ...]:
    return tuple(sorted(set(sets), key=lambda s: s.sort_key()))


@dataclass(frozen=True)
class FuzzySoftTopology:
    """A validated family of opens over a carrier.

    Construct through :func:`validate_topology` (or a generator closure that
    guarantees the axioms); the constructor itself only re-checks the cheap
    structural invariants, not closure under min/max.
    """

    carrier: FuzzySoftSet
    opens: tuple[FuzzySoftSet, ...]

    def __post_init__(self) -> None:
        keys = [o.sort_key() for o in self.opens]
        if keys != sorted(set(keys)):
            raise ValueError("opens must be deduplicated and canonically ordered")
        present = set(self.opens)
        if self.null_set not in present:
            raise ValueError("the null set must be open")
        if self.carrier not in present:
            raise ValueError("the carrier must be open")
        for o in self.opens:
            if not o.leq(self.carrier):
                raise CarrierBoundError(f"open exceeds the carrier: {o.render()}")

    @property
    def universe(self):
        return self.carrier.universe

    @property
    def parameters(self):
        return self.carrier.parameters

    @property
    def null_set(self) -> FuzzySoftSet:
        return FuzzySoftSet.null(self.carrier.universe, self.carrier.parameters)

    @cached_property
    def closed_sets(self) -> tuple[FuzzySoftSet, ...]:
        """Complements 1 - o of the opens, deduplicated, canonical order."""
        return _canonical_family(o.complement() for o in self.opens)

    @cached_property
    def _open_set(self) -> frozenset[FuzzySoftSet]:
        return frozenset(self.opens)

    @cached_property
    def _closed_set(self) -> frozenset[FuzzySoftSet]:
        return frozenset(self.closed_sets)

    @cached_property
    def _closure_memo(self) -> dict:
        return {}

    @cached_property
    def _interior_memo(self) -> dict:
        return {}

    def _check_context(self, g: FuzzySoftSet) -> None:
        if g.universe != self.universe or g.parameters != self.parameters:
            raise ContextMismatchError("set does not belong to this space")

    def is_open(self, g: FuzzySoftSet) -> bool:
        self._check_context(g)
        return g in self._open_set

    def is_closed(self, g: FuzzySoftSet) -> bool:
        self._check_context(g)
        return g in self._closed_set

    def is_clopen(self, g: FuzzySoftSet) -> bool:
        return self.is_open(g) and self.is_closed(g)

    def closure(self, g: FuzzySoftSet) -> FuzzySoftSet:
        """Intersection of every closed superset of ``g``."""
        self._check_context(g)
        cached = self._closure_memo.get(g)
        if cached is not None:
            return cached
        result = None
        for k in self.closed_sets:
            if g.leq(k):
                result = k if result is None else result.intersection(k)
        assert result is not None  # the all-one set is always closed
        self._closure_memo[g] = result
        return result

    def interior(self, g: FuzzySoftSet) -> FuzzySoftSet:
        """Union of every open subset of ``g``."""
        self._check_context(g)
        cached = self._interior_memo.get(g)
        if cached is not None:
            return cached
        result = self.null_set
        for o in self.opens:
            if o.leq(g):
                result = result.union(o)
        self._interior_memo[g] = result
        return result

    def is_neighborhood(self, n: FuzzySoftSet, p: FuzzySoftPoint) -> bool:
        """Whether some open sits between the point and ``n``."""
        self._check_context(n)
        return any(point_in(p, o) and o.leq(n) for o in self.opens)

    def neighborhood_system(
        self, p: FuzzySoftPoint, lattice: GradeLattice, cap: int = 10**6
    ) -> tuple[FuzzySoftSet, ...]:
        """All lattice-representable neighbourhoods of ``p`` below the
        carrier, in canonical order."""
        candidates = enumerate_lattice_sets(
            self.universe, self.parameters, lattice, bound=self.carrier, cap=cap
        )
        return tuple(n for n in candidates if self.is_neighborhood(n, p))

    def is_finer_than(self, other: "FuzzySoftTopology") -> bool:
        """Every open of ``other`` is open here.  Carriers must agree."""
        if self.carrier != other.carrier:
            raise ContextMismatchError(
                "finer/coarser comparison needs a shared carrier"
            )
        return self._open_set.issuperset(other.opens)

    def subspace(self, g: FuzzySoftSet) -> "SubspaceView":
        """The subspace at carrier ``g``: opens are the traces g min o."""
        self._check_context(g)
        if not g.leq(self.carrier):
            raise CarrierBoundError("subspace carrier must lie below the carrier")
        induced = _canonical_family(g.intersection(o) for o in self.opens)
        space = validate_topology(g, induced)
        return SubspaceView(parent=self, space=space)


def validate_topology(
    carrier: FuzzySoftSet, candidates
) -> FuzzySoftTopology:
    """Validate a candidate family against the three axioms.

    Returns the topology with the family deduplicated and canonically
    ordered, or raises :class:`TopologyValidationError` carrying one
    minimal witness per violated axiom.  Candidates over a different
    universe or parameter set are a usage error, reported immediately.
    """
    family = list(candidates)
    for c in family:
        if c.universe != carrier.universe or c.parameters != carrier.parameters:
            raise ContextMismatchError("candidate open does not belong to the space")
    opens = _canonical_family(family)
    violations: list[AxiomViolation] = []

    for o in opens:
        if not o.leq(carrier):
            violations.append(
                AxiomViolation(
                    "carrier-bound",
                    (o,),
                    f"candidate exceeds the carrier: {o.render()}",
                )
            )
    null = FuzzySoftSet.null(carrier.universe, carrier.parameters)
    if null not in set(opens):
        violations.append(
            AxiomViolation("contains-null", (), "the null set is not in the family")
        )
    if carrier not in set(opens):
        violations.append(
            AxiomViolation(
                "contains-carrier", (), "the carrier is not in the family"
            )
        )
    present = set(opens)
    inter_witness = None
    union_witness = None
    for i, a in enumerate(opens):
        if inter_witness is not None and union_witness is not None:
            break
        for b in opens[i + 1 :]:
            if inter_witness is None and a.intersection(b) not in present:
                inter_witness = (a, b)
            if union_witness is None and a.union(b) not in present:
                union_witness = (a, b)
            if inter_witness is not None and union_witness is not None:
                break
    if inter_witness is not None:
        a, b = inter_witness
        violations.append(
            AxiomViolation(
                "intersection-closed",
                inter_witness,
                f"missing intersection of {a.render()} and {b.render()}",
            )
        )
    if union_witness is not None:
        a, b = union_witness
        violations.append(
            AxiomViolation(
                "union-closed",
                union_witness,
                f"missing union of {a.render()} and {b.render()}",
            )
        )
    if violations:
        raise TopologyValidationError(tuple(violations))
    return FuzzySoftTopology(carrier, opens)


@dataclass(frozen=True)
class SubspaceView:
    """A subspace together with the parent it was cut from.

    ``space`` is the induced topology (a full citizen: it can be handed to
    any decider).  The subspace-relative closed sets and relative closure
    live here because they are defined through the parent.
    """

    parent: FuzzySoftTopology
    space: FuzzySoftTopology

    @property
    def carrier(self) -> FuzzySoftSet:
        return self.space.carrier

    @property
    def opens(self) -> tuple[FuzzySoftSet, ...]:
        return self.space.opens

    @cached_property
    def relative_closed_sets(self) -> tuple[FuzzySoftSet, ...]:
        """Traces k min g of the parent's closed sets."""
        g = self.carrier
        return _canonical_family(
            k.intersection(g) for k in self.parent.closed_sets
        )

    def is_relatively_closed(self, h: FuzzySoftSet) -> bool:
        return h in set(self.relative_closed_sets)

    def closure_in(self, h: FuzzySoftSet) -> FuzzySoftSet:
        """Closure inside the subspace: intersection of every relative
        closed superset of ``h``.

        Must (and does) coincide with ``parent.closure(h) min carrier``;
        the parent-route is left to the caller so agreement stays a check,
        not a tautology.
        """
        if not h.leq(self.carrier):
            raise CarrierBoundError(
                "closure_in expects a subset of the subspace carrier"
            )
        result = None
        for k in self.relative_closed_sets:
            if h.leq(k):
                result = k if result is None else result.intersection(k)
        assert result is not None  # the carrier itself is a relative closed set
        return result
