"""Topology enumeration and generation for the audit corpus.

Sets over a fixed (universe, parameters, lattice) shape are encoded as
integers: each cell (parameter, element) holds a lattice index, and the id
is the big-endian mixed-radix number of the index vector.  Id order then
coincides with the canonical sort order of the decoded sets, id 0 is the
null set and the last id is the all-one carrier.  Meet, join and
complement become table lookups, which keeps enumerating tens of
thousands of generator families cheap.

The corpus pins the carrier to the all-one set.  Sub-carrier spaces enter
the test bed through the named catalogue instead, where the interesting
complement pathologies are constructed by hand.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

from .algebra import CapExceededError, FuzzySet, GradeLattice, Universe
from .softsets import FuzzySoftSet, ParameterSet

DEFAULT_MAX_GENERATORS = 3
DEFAULT_MAX_OPENS = 64
DEFAULT_POOL_CAP = 4096
DEFAULT_FAMILY_CAP = 10**6


class SetPool:
    """All lattice-valued sets over one shape, addressed by integer id."""

    def __init__(self, universe: Universe, parameters: ParameterSet,
                 lattice: GradeLattice, cap: int = DEFAULT_POOL_CAP):
        self.universe = universe
        self.parameters = parameters
        self.lattice = lattice
        self.cells = len(parameters) * len(universe)
        self.radix = len(lattice)
        size = self.radix**self.cells
        if size > cap:
            raise CapExceededError("lattice set pool", size, cap)
        self.size = size
        self.null_id = 0
        self.full_id = size - 1
        self._grades = tuple(lattice)
        self._grade_index = {g: i for i, g in enumerate(self._grades)}
        self._decoded: dict[int, FuzzySoftSet] = {}
        self._build_tables()

    # cell order: parameter-major, then universe order; big-endian so that
    # id order equals the lexicographic order of grade vectors
    def _vector(self, set_id: int) -> tuple[int, ...]:
        digits = []
        for _ in range(self.cells):
            set_id, d = divmod(set_id, self.radix)
            digits.append(d)
        return tuple(reversed(digits))

    def _encode(self, vector: tuple[int, ...]) -> int:
        set_id = 0
        for d in vector:
            set_id = set_id * self.radix + d
        return set_id

    def _build_tables(self) -> None:
        n, radix, cells = self.size, self.radix, self.cells
        vectors = [self._vector(i) for i in range(n)]
        self._vectors = vectors
        top = radix - 1
        self.comp = [self._encode(tuple(top - d for d in v)) for v in vectors]
        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for i in range(n):
            vi = vectors[i]
            row_m, row_j = meet[i], join[i]
            for j in range(i, n):
                vj = vectors[j]
                m = self._encode(tuple(map(min, vi, vj)))
                u = self._encode(tuple(map(max, vi, vj)))
                row_m[j] = m
                row_j[j] = u
                meet[j][i] = m
                join[j][i] = u
        self.meet = meet
        self.join = join
        # disjointness as bitmask rows: bit j of disj_mask[i] set when
        # meet(i, j) is null
        self.disj_mask = [
            sum(1 << j for j in range(n) if meet[i][j] == 0) for i in range(n)
        ]

    def leq(self, i: int, j: int) -> bool:
        return self.meet[i][j] == i

    def decode(self, set_id: int) -> FuzzySoftSet:
        got = self._decoded.get(set_id)
        if got is not None:
            return got
        vec = self._vectors[set_id]
        values = []
        per = len(self.universe)
        for k in range(len(self.parameters)):
            chunk = vec[k * per : (k + 1) * per]
            values.append(
                FuzzySet(self.universe, tuple(self._grades[d] for d in chunk))
            )
        fss = FuzzySoftSet(self.universe, self.parameters, tuple(values))
        self._decoded[set_id] = fss
        return fss

    def encode(self, fss: FuzzySoftSet) -> int:
        digits = []
        for value in fss.values:
            for g in value.grades:
                digits.append(self._grade_index[g])
        return self._encode(tuple(digits))

    # ---- points over the pool ----------------------------------------
    # A point is (parameter index, nonzero value vector); pt_in_mask[p]
    # has bit s set when the point lies in pool set s.

    def build_points(self) -> None:
        if hasattr(self, "points"):
            return
        per = len(self.universe)
        radix = self.radix
        points = []
        for pi in range(len(self.parameters)):
            for vec in itertools.product(range(radix), repeat=per):
                if any(vec):
                    points.append((pi, vec))
        self.points = points
        masks = []
        form_ids = []
        nparams = len(self.parameters)
        for pi, vec in points:
            mask = 0
            for s, sv in enumerate(self._vectors):
                chunk = sv[pi * per : (pi + 1) * per]
                if all(a <= b for a, b in zip(vec, chunk)):
                    mask |= 1 << s
            masks.append(mask)
            form = [0] * (nparams * per)
            form[pi * per : (pi + 1) * per] = list(vec)
            form_ids.append(self._encode(tuple(form)))
        self.pt_in_mask = masks
        self.pt_form_id = form_ids

    def decode_point(self, index: int):
        from .points import FuzzySoftPoint

        pi, vec = self.points[index]
        value = FuzzySet(self.universe, tuple(self._grades[d] for d in vec))
        return FuzzySoftPoint(self.parameters.names[pi], value, self.parameters)


@dataclass(frozen=True)
class CorpusSpec:
    universe: Universe
    parameters: ParameterSet
    lattice: GradeLattice
    max_generators: int = DEFAULT_MAX_GENERATORS
    max_opens: int = DEFAULT_MAX_OPENS
    pool_cap: int = DEFAULT_POOL_CAP
    family_cap: int = DEFAULT_FAMILY_CAP

    @classmethod
    def desk(cls, **overrides) -> "CorpusSpec":
        return cls(
            universe=Universe.of("x", "y"),
            parameters=ParameterSet.of("e1", "e2"),
            lattice=GradeLattice.close({Fraction(1, 2)}),
            **overrides,
        )

    def family_count(self, pool_size: int) -> int:
        total = 0
        for k in range(self.max_generators + 1):
            total += _comb(pool_size, k)
        return total

    def to_payload(self) -> dict:
        return {
            "universe": list(self.universe),
            "parameters": list(self.parameters),
            "lattice": [str(g) for g in self.lattice],
            "max_generators": self.max_generators,
            "max_opens": self.max_opens,
        }


def _comb(n: int, k: int) -> int:
    import math

    return math.comb(n, k)


def close_family(pool: SetPool, generators: tuple[int, ...],
                 max_opens: int) -> Optional[frozenset[int]]:
    """Min/max closure of {null, full} + generators; None when it would
    exceed max_opens."""
    base = frozenset((pool.null_id, pool.full_id)) | frozenset(generators)
    return _close_from(pool, base, max_opens)


def _close_from(pool: SetPool, start: frozenset[int],
                max_opens: int) -> Optional[frozenset[int]]:
    meet, join = pool.meet, pool.join
    elems = sorted(start)
    members = set(elems)
    i = 1
    # each unordered pair is visited once, when its later element's turn comes
    while i < len(elems):
        x = elems[i]
        mrow, jrow = meet[x], join[x]
        for k in range(i):
            y = elems[k]
            m = mrow[y]
            if m not in members:
                members.add(m)
                if len(members) > max_opens:
                    return None
                elems.append(m)
            u = jrow[y]
            if u not in members:
                members.add(u)
                if len(members) > max_opens:
                    return None
                elems.append(u)
        i += 1
    return frozenset(members)


@dataclass
class EnumerationStats:
    families_scanned: int = 0
    skipped_over_max_opens: int = 0
    distinct: int = 0


class SpaceCorpus:
    """Deduplicated enumeration of all topologies generated by small
    families, as id tuples over one pool."""

    def __init__(self, spec: CorpusSpec):
        self.spec = spec
        self.pool = SetPool(
            spec.universe, spec.parameters, spec.lattice, cap=spec.pool_cap
        )
        count = spec.family_count(self.pool.size)
        if count > spec.family_cap:
            raise CapExceededError("generator families", count, spec.family_cap)
        self.stats = EnumerationStats()
        self.spaces: list[tuple[int, ...]] = []
        self._enumerate()

    def _enumerate(self) -> None:
        pool, spec, stats = self.pool, self.spec, self.stats
        seen: set[frozenset[int]] = set()
        ids = range(pool.size)

        def record(closure: Optional[frozenset[int]]) -> Optional[frozenset[int]]:
            stats.families_scanned += 1
            if closure is None:
                stats.skipped_over_max_opens += 1
            elif closure not in seen:
                seen.add(closure)
            return closure

        record(close_family(pool, (), spec.max_opens))
        singles: list[Optional[frozenset[int]]] = []
        if spec.max_generators >= 1:
            for a in ids:
                singles.append(record(close_family(pool, (a,), spec.max_opens)))
        if spec.max_generators >= 2:
            for a in ids:
                base_a = singles[a]
                for b in range(a + 1, pool.size):
                    if base_a is None:
                        pair = record(None)
                    else:
                        pair = record(
                            _close_from(pool, base_a | {b}, spec.max_opens)
                        )
                    if spec.max_generators >= 3:
                        for c in range(b + 1, pool.size):
                            if pair is None:
                                record(None)
                            else:
                                record(
                                    _close_from(pool, pair | {c}, spec.max_opens)
                                )
        if spec.max_generators >= 4:
            raise ValueError("enumeration supports at most 3 generators")
        self.spaces = sorted(
            (tuple(sorted(s)) for s in seen), key=lambda t: (len(t), t)
        )
        stats.distinct = len(self.spaces)

    def label(self, index: int) -> str:
        return f"enum-{index:05d}"

    def materialize(self, space_ids: tuple[int, ...]):
        from .topology import FuzzySoftTopology

        pool = self.pool
        return FuzzySoftTopology(
            carrier=pool.decode(pool.full_id),
            opens=tuple(pool.decode(i) for i in sorted(space_ids)),
        )


def random_space_ids(seed: int, spec: CorpusSpec, pool: SetPool) -> tuple[int, ...]:
    """Generator family drawn uniformly, closed; deterministic in seed."""
    rng = random.Random(seed)
    for _ in range(1000):
        k = rng.randint(0, spec.max_generators)
        gens = tuple(sorted(rng.sample(range(pool.size), k)))
        closure = close_family(pool, gens, spec.max_opens)
        if closure is not None:
            return tuple(sorted(closure))
    raise RuntimeError("no family within the opens bound after 1000 draws")


def random_space(seed: int, spec: CorpusSpec, pool: Optional[SetPool] = None):
    if pool is None:
        pool = SetPool(spec.universe, spec.parameters, spec.lattice,
                       cap=spec.pool_cap)
    ids = random_space_ids(seed, spec, pool)
    from .topology import FuzzySoftTopology

    return FuzzySoftTopology(
        carrier=pool.decode(pool.full_id),
        opens=tuple(pool.decode(i) for i in ids),
    )


# ---------------------------------------------------------------------------
# Named catalogue: hand-built spaces that the big enumeration cannot reach.
# The enumerated corpus pins the carrier to all-one and tops out well below
# the discrete family, so crisp discrete spaces, sub-carrier spaces and the
# known clopen/closure pathologies are written out explicitly here.


@dataclass(frozen=True)
class NamedSpace:
    """One fixed space: its own pool plus the open family as ids."""

    label: str
    pool: SetPool
    ids: tuple[int, ...]
    note: str

    @property
    def carrier_id(self) -> int:
        return self.ids[-1]

    def materialize(self):
        from .topology import FuzzySoftTopology

        pool = self.pool
        return FuzzySoftTopology(
            carrier=pool.decode(self.carrier_id),
            opens=tuple(pool.decode(i) for i in self.ids),
        )


def _named(label: str, elements: tuple[str, ...], params: tuple[str, ...],
           lattice_seeds: tuple[str, ...], opens, note: str,
           carrier=None) -> NamedSpace:
    universe = Universe.of(*elements)
    parameters = ParameterSet.of(*params)
    lattice = GradeLattice.close(lattice_seeds) if lattice_seeds \
        else GradeLattice.close(())
    pool = SetPool(universe, parameters, lattice)
    top = pool.full_id if carrier is None \
        else pool.encode(FuzzySoftSet.build(universe, parameters, carrier))
    ids = {pool.null_id, top}
    for assignment in opens:
        if assignment == "all":
            ids.update(range(pool.size))
            continue
        sid = pool.encode(FuzzySoftSet.build(universe, parameters, assignment))
        if pool.meet[sid][top] != sid:
            raise ValueError(f"{label}: open not below the carrier")
        ids.add(sid)
    return NamedSpace(label=label, pool=pool, ids=tuple(sorted(ids)), note=note)


def named_spaces() -> tuple[NamedSpace, ...]:
    """The fixed catalogue, in a stable order."""
    half = {"x": Fraction(1, 2)}
    spaces = (
        _named("named-running", ("x", "y"), ("e1",), ("1/2",),
               [{"e1": {"x": "1/2"}}],
               "two-element universe, one parameter, one half-open"),
        _named("named-discrete-crisp-1x1", ("x",), ("e1",), (),
               ["all"], "every crisp set open; single cell"),
        _named("named-discrete-crisp-1x2", ("x",), ("e1", "e2"), (),
               ["all"], "every crisp set open; two parameters"),
        _named("named-discrete-crisp-2x1", ("x", "y"), ("e1",), (),
               ["all"], "every crisp set open; two elements"),
        _named("named-discrete-crisp-2x2", ("x", "y"), ("e1", "e2"), (),
               ["all"], "every crisp set open; four cells"),
        _named("named-indiscrete-2x2", ("x", "y"), ("e1", "e2"), (),
               [], "only the null set and the carrier are open"),
        _named("named-halfstep-1x1", ("x",), ("e1",), ("1/2",),
               ["all"], "discrete over the three-grade chain on one cell"),
        _named("named-split-half", ("x", "y"), ("e1",), ("1/2",),
               [{"e1": {"x": "1/2"}}, {"e1": {"y": "1/2"}}],
               "half-high carrier split into two disjoint half-opens",
               carrier={"e1": {"x": "1/2", "y": "1/2"}}),
        _named("named-subcarrier-indiscrete", ("x",), ("e1",), ("1/3",),
               [], "indiscrete with a carrier strictly below all-one",
               carrier={"e1": {"x": "1/3"}}),
    )
    return spaces
