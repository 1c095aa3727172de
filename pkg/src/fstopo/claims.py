"""Checkable claims about spaces, set pools and fixed worked examples.

Everything the auditor can evaluate lives here, keyed by a short ident.
Claims carry one of three classifications:

* ``asserted-invariant``: expected to hold on every case; any failure is
  a soundness alarm for the library itself.
* ``audited``: checked empirically, counterexamples are recorded as
  results rather than errors.
* ``reproduced-example``: a fixed worked example replayed exactly.

Space-scope claims run once per topology through a ``SpaceCase`` built
over the integer set-pool encoding; pool-scope claims run once per
distinct shape; fixed-scope claims run once per audit.  Where a claim
quantifies over pairs or subsets inside one case, it either scans them
completely or probes a deterministic arithmetic sample (no hashing, so
results never depend on interpreter state); each claim's ``coverage``
string says which.  Cases flagged ``exhaustive`` widen every probe to a
full scan, bounded by ``EXHAUSTIVE_LIMIT``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import FuzzySet, Universe
from .corpus import SetPool
from .points import FuzzySoftPoint, point_in
from .softsets import FuzzySoftSet, ParameterSet

ASSERTED = "asserted-invariant"
AUDITED = "audited"
REPRODUCED = "reproduced-example"
CLASSIFICATIONS = (ASSERTED, AUDITED, REPRODUCED)

PAIR_PROBES = 36
TRIPLE_PROBES = 24
SUBSET_PROBES = 12
CLOSED_PROBES = 6
EXHAUSTIVE_LIMIT = 40000
_STRIDE = 7919  # prime, larger than any probe total we stride over
_MAX_FAILS = 3


@dataclass(frozen=True)
class Claim:
    ident: str
    classification: str
    scope: str  # "space" | "pool" | "fixed"
    statement: str
    coverage: str
    # complete=True means the default evaluation scans its whole domain,
    # so a clean run counts as proof by exhaustion at the audited sizes
    complete: bool = True


def _probe(total: int, count: int, salt: int):
    """Deterministic index sample; the whole range when it fits."""
    if total <= count:
        return range(total)
    return [(salt + k * _STRIDE) % total for k in range(count)]


def _scan_indices(case: "SpaceCase", total: int, count: int, salt: int):
    if case.exhaustive:
        if total <= EXHAUSTIVE_LIMIT:
            return range(total)
        return _probe(total, count * 8, salt)
    return _probe(total, count, salt)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class SpaceCase:
    """Per-topology caches over the integer encoding.

    ``order`` is the global case index used to salt probes; ``exhaustive``
    widens probes to full scans for this case.
    """

    def __init__(self, label: str, pool: SetPool, ids: tuple[int, ...],
                 order: int = 0, exhaustive: bool = False):
        pool.build_points()
        self.label = label
        self.pool = pool
        self.ids = ids
        self.order = order
        self.exhaustive = exhaustive
        self.carrier = ids[-1]
        self.opens = list(ids)
        self.open_set = frozenset(ids)
        self.closeds = sorted({pool.comp[o] for o in ids})
        self.closed_set = frozenset(self.closeds)
        self.pts = [i for i in range(len(pool.points))
                    if (pool.pt_in_mask[i] >> self.carrier) & 1]
        self._cl: list[int] | None = None
        self._int: list[int] | None = None
        self._omasks: list[int] | None = None
        self._odisj: list[int] | None = None
        self._ax: dict = {}
        self._conn: dict[int, tuple] = {}

    # -- operator tables ---------------------------------------------------

    def cl(self) -> list[int]:
        """Closure of every pool set: meet of the closed supersets."""
        if self._cl is None:
            pool = self.pool
            meet = pool.meet
            closeds = self.closeds
            top = pool.full_id
            row = []
            for g in range(pool.size):
                acc = top
                mg = meet[g]
                for k in closeds:
                    if mg[k] == g:
                        acc = meet[acc][k]
                row.append(acc)
            self._cl = row
        return self._cl

    def interior(self) -> list[int]:
        """Interior of every pool set: join of the open subsets."""
        if self._int is None:
            pool = self.pool
            meet, join = pool.meet, pool.join
            opens = self.opens
            row = []
            for g in range(pool.size):
                acc = 0
                mg = meet[g]
                for o in opens:
                    if mg[o] == o:
                        acc = join[acc][o]
                row.append(acc)
            self._int = row
        return self._int

    # -- point structure ---------------------------------------------------

    def omasks(self) -> list[int]:
        """Per point (aligned with self.pts) a bitmask over open indices."""
        if self._omasks is None:
            pin = self.pool.pt_in_mask
            opens = self.opens
            res = []
            for p in self.pts:
                pm = pin[p]
                m = 0
                for i, o in enumerate(opens):
                    if (pm >> o) & 1:
                        m |= 1 << i
                res.append(m)
            self._omasks = res
        return self._omasks

    def odisj(self) -> list[int]:
        """Per open index, the bitmask of open indices disjoint from it."""
        if self._odisj is None:
            disj = self.pool.disj_mask
            opens = self.opens
            rows = []
            for a in opens:
                da = disj[a]
                m = 0
                for j, b in enumerate(opens):
                    if (da >> b) & 1:
                        m |= 1 << j
                rows.append(m)
            self._odisj = rows
        return self._odisj

    def cover_mask(self, k: int) -> int:
        """Bitmask of open indices whose set contains ``k``."""
        meet = self.pool.meet[k]
        m = 0
        for i, o in enumerate(self.opens):
            if meet[o] == k:
                m |= 1 << i
        return m

    # -- separation axioms -------------------------------------------------

    def ax(self, name: str):
        if name not in self._ax:
            self._ax[name] = getattr(self, "_decide_" + name)()
        return self._ax[name]

    def _decide_t0(self):
        return _t0_fail(self.pool, self.pts, self.omasks())

    def _decide_t1(self):
        return _t1_fail(self.pts, self.omasks())

    def _decide_t2(self):
        return _t2_fail(self.pts, self.omasks(), self.odisj())

    def _decide_points_closed(self):
        form = self.pool.pt_form_id
        closed = self.closed_set
        for p in self.pts:
            if form[p] not in closed:
                return p
        return None

    def _decide_regular(self):
        covers = [self.cover_mask(k) for k in self.closeds]
        return _regular_fail(self.pool, self.closeds, covers, self.pts,
                             self.omasks(), self.odisj())

    def _decide_normal(self):
        covers = [self.cover_mask(k) for k in self.closeds]
        return _normal_fail(self.pool, self.closeds, covers, self.odisj())

    def t0(self) -> bool:
        return self.ax("t0") is None

    def t1(self) -> bool:
        return self.ax("t1") is None

    def t2(self) -> bool:
        return self.ax("t2") is None

    def regular(self) -> bool:
        return self.ax("regular") is None

    def normal(self) -> bool:
        return self.ax("normal") is None

    def t3(self) -> bool:
        return self.t1() and self.regular()

    def t4(self) -> bool:
        return self.t1() and self.normal()

    def points_closed(self) -> bool:
        return self.ax("points_closed") is None

    # -- connectedness -----------------------------------------------------

    def traces(self, g: int) -> list[int]:
        meet = self.pool.meet
        return sorted({meet[o][g] for o in self.opens})

    def conn(self, g: int):
        """(connected, separation pair or None) of the subspace at ``g``."""
        if g not in self._conn:
            sep = _sep_pair(self.pool, self.traces(g), g)
            self._conn[g] = (sep is None, sep)
        return self._conn[g]

    def connected(self) -> bool:
        return self.conn(self.carrier)[0]

    # -- rendering ---------------------------------------------------------

    def render_set(self, gid: int) -> str:
        return self.pool.decode(gid).render()

    def render_point(self, index: int) -> str:
        return self.pool.decode_point(index).render()


# -- id-level axiom scans, shared by spaces and their subspaces ------------


def _t0_fail(pool: SetPool, pts, omasks):
    """First disjoint point pair no open tells apart, else None."""
    form = pool.pt_form_id
    disj = pool.disj_mask
    for a in range(len(pts)):
        da = disj[form[pts[a]]]
        ma = omasks[a]
        for b in range(a + 1, len(pts)):
            if (da >> form[pts[b]]) & 1 and ma == omasks[b]:
                return pts[a], pts[b]
    return None


def _t1_fail(pts, omasks):
    """First ordered pair with no open holding one point and not the other."""
    for a in range(len(pts)):
        ma = omasks[a]
        for b in range(a + 1, len(pts)):
            mb = omasks[b]
            if ma & ~mb == 0:
                return pts[a], pts[b]
            if mb & ~ma == 0:
                return pts[b], pts[a]
    return None


def _t2_fail(pts, omasks, odisj):
    """First distinct pair with no disjoint pair of separating opens."""
    for a in range(len(pts)):
        ma = omasks[a]
        for b in range(a + 1, len(pts)):
            mb = omasks[b]
            if not any(odisj[i] & mb for i in _bits(ma)):
                return pts[a], pts[b]
    return None


def _regular_fail(pool: SetPool, closeds, covers, pts, omasks, odisj):
    """First (point, closed set) pair that disjoint opens cannot split.

    Pairs are eligible when the point is not a member of the closed set.
    """
    pin = pool.pt_in_mask
    for a, p in enumerate(pts):
        pm = pin[p]
        ma = omasks[a]
        for ci, k in enumerate(closeds):
            if (pm >> k) & 1:
                continue
            cov = covers[ci]
            if not any(odisj[i] & cov for i in _bits(ma)):
                return p, k
    return None


def _normal_fail(pool: SetPool, closeds, covers, odisj):
    """First disjoint closed pair without disjoint open covers."""
    disj = pool.disj_mask
    for i in range(len(closeds)):
        di = disj[closeds[i]]
        ci = covers[i]
        for j in range(i + 1, len(closeds)):
            if not (di >> closeds[j]) & 1:
                continue
            if not any(odisj[b] & covers[j] for b in _bits(ci)):
                return closeds[i], closeds[j]
    return None


def _sep_pair(pool: SetPool, opens, carrier):
    """First pair of disjoint nonempty opens joining to the carrier."""
    disj = pool.disj_mask
    join = pool.join
    for i in range(len(opens)):
        a = opens[i]
        if a == 0:
            continue
        da = disj[a]
        ja = join[a]
        for b in opens[i + 1:]:
            if b and (da >> b) & 1 and ja[b] == carrier:
                return a, b
    return None


def _sub_structs(case: SpaceCase, g: int):
    """(relative opens, relative closeds, point indices) of the subspace."""
    meet = case.pool.meet
    r_opens = sorted({meet[o][g] for o in case.opens})
    r_closeds = sorted({meet[k][g] for k in case.closeds})
    pin = case.pool.pt_in_mask
    pts = [p for p in case.pts if (pin[p] >> g) & 1]
    return r_opens, r_closeds, pts


def _sub_axiom(case: SpaceCase, g: int, name: str) -> bool:
    pool = case.pool
    r_opens, r_closeds, pts = _sub_structs(case, g)
    omasks = []
    pin = pool.pt_in_mask
    for p in pts:
        pm = pin[p]
        m = 0
        for i, o in enumerate(r_opens):
            if (pm >> o) & 1:
                m |= 1 << i
        omasks.append(m)
    if name == "t0":
        return _t0_fail(pool, pts, omasks) is None
    if name == "t1":
        return _t1_fail(pts, omasks) is None
    if name == "t2":
        return _t2_fail(pts, omasks, _open_disj(pool, r_opens)) is None
    if name in ("regular", "t3"):
        covers = [_cover_over(pool, r_opens, k) for k in r_closeds]
        reg = _regular_fail(pool, r_closeds, covers, pts, omasks,
                            _open_disj(pool, r_opens)) is None
        if name == "regular":
            return reg
        return reg and _t1_fail(pts, omasks) is None
    if name == "normal":
        covers = [_cover_over(pool, r_opens, k) for k in r_closeds]
        return _normal_fail(pool, r_closeds, covers,
                            _open_disj(pool, r_opens)) is None
    raise ValueError(f"unknown axiom {name!r}")


def _open_disj(pool: SetPool, opens):
    disj = pool.disj_mask
    rows = []
    for a in opens:
        da = disj[a]
        m = 0
        for j, b in enumerate(opens):
            if (da >> b) & 1:
                m |= 1 << j
        rows.append(m)
    return rows


def _cover_over(pool: SetPool, opens, k):
    meet = pool.meet[k]
    m = 0
    for i, o in enumerate(opens):
        if meet[o] == k:
            m |= 1 << i
    return m


# -- space-scope evaluators ------------------------------------------------
# Each returns (instances checked, hypothesis hits, failure strings).

SPACE_EVALS: dict = {}
POOL_EVALS: dict = {}
FIXED_EVALS: dict = {}


def _reg_space(ident):
    def inner(fn):
        SPACE_EVALS[ident] = fn
        return fn
    return inner


def _reg_pool(ident):
    def inner(fn):
        POOL_EVALS[ident] = fn
        return fn
    return inner


def _reg_fixed(ident):
    def inner(fn):
        FIXED_EVALS[ident] = fn
        return fn
    return inner


@_reg_space("TOP.AX3-union")
def _eval_ax3_union(case: SpaceCase):
    join = case.pool.join
    opens, members = case.opens, case.open_set
    fails = []
    n = 0
    for i in range(len(opens)):
        ja = join[opens[i]]
        for j in range(i, len(opens)):
            n += 1
            if ja[opens[j]] not in members:
                if len(fails) < _MAX_FAILS:
                    fails.append(
                        f"union of opens {case.render_set(opens[i])} and "
                        f"{case.render_set(opens[j])} is not open")
    return n, n, fails


@_reg_space("TOP.AX3-intersection")
def _eval_ax3_intersection(case: SpaceCase):
    meet = case.pool.meet
    opens, members = case.opens, case.open_set
    fails = []
    n = 0
    for i in range(len(opens)):
        ma = meet[opens[i]]
        for j in range(i, len(opens)):
            n += 1
            if ma[opens[j]] not in members:
                if len(fails) < _MAX_FAILS:
                    fails.append(
                        f"intersection of opens {case.render_set(opens[i])} "
                        f"and {case.render_set(opens[j])} is not open")
    return n, n, fails


def _dual_eval(case: SpaceCase, flip: bool):
    comp = case.pool.comp
    cl, it = case.cl(), case.interior()
    fails = []
    for g in range(case.pool.size):
        if flip:
            ok = comp[it[g]] == cl[comp[g]]
        else:
            ok = it[comp[g]] == comp[cl[g]]
        if not ok and len(fails) < _MAX_FAILS:
            fails.append(f"duality breaks at {case.render_set(g)}")
    return case.pool.size, case.pool.size, fails


@_reg_space("CL.1")
def _eval_cl1(case: SpaceCase):
    return _dual_eval(case, False)


@_reg_space("CL.2")
def _eval_cl2(case: SpaceCase):
    return _dual_eval(case, True)


def _pair_scan(case: SpaceCase, salt: int, check):
    """Drive ``check(g, h)`` over probed ordered pairs.

    ``check`` returns None for a hypothesis miss, True for a pass and a
    failure string otherwise.  Returns the usual result triple.
    """
    n = case.pool.size
    checked = 0
    hits = 0
    fails: list[str] = []
    for t in _scan_indices(case, n * n, PAIR_PROBES, salt):
        g, h = divmod(t, n)
        checked += 1
        r = check(g, h)
        if r is None:
            continue
        hits += 1
        if r is not True and len(fails) < _MAX_FAILS:
            fails.append(r)
    return checked, hits, fails


@_reg_space("CL.3")
def _eval_cl3(case: SpaceCase):
    meet = case.pool.meet
    cl = case.cl()

    def check(g, h):
        if meet[g][h] != g:
            return None
        if meet[cl[g]][cl[h]] == cl[g]:
            return True
        return (f"{case.render_set(g)} <= {case.render_set(h)} but the "
                f"closures are not ordered")

    return _pair_scan(case, case.order * 131 + 3, check)


@_reg_space("CL.4")
def _eval_cl4(case: SpaceCase):
    meet = case.pool.meet
    it = case.interior()

    def check(g, h):
        if meet[g][h] != g:
            return None
        if meet[it[g]][it[h]] == it[g]:
            return True
        return (f"{case.render_set(g)} <= {case.render_set(h)} but the "
                f"interiors are not ordered")

    return _pair_scan(case, case.order * 131 + 4, check)


@_reg_space("CL.5")
def _eval_cl5(case: SpaceCase):
    cl = case.cl()
    fails = []
    for g in range(case.pool.size):
        if cl[cl[g]] != cl[g] and len(fails) < _MAX_FAILS:
            fails.append(f"closure not idempotent at {case.render_set(g)}")
    return case.pool.size, case.pool.size, fails


@_reg_space("CL.6")
def _eval_cl6(case: SpaceCase):
    it = case.interior()
    fails = []
    for g in range(case.pool.size):
        if it[it[g]] != it[g] and len(fails) < _MAX_FAILS:
            fails.append(f"interior not idempotent at {case.render_set(g)}")
    return case.pool.size, case.pool.size, fails


@_reg_space("CL.7-COND")
def _eval_cl7_cond(case: SpaceCase):
    cl = case.cl()
    checked = 2
    hits = 0
    fails = []
    if 0 in case.closed_set:
        hits += 1
        if cl[0] != 0:
            fails.append("the null set is closed yet not fixed by closure")
    if case.carrier in case.closed_set:
        hits += 1
        if cl[case.carrier] != case.carrier:
            fails.append("the carrier is closed yet not fixed by closure")
    return checked, hits, fails


@_reg_space("CL.7-ABS")
def _eval_cl7_abs(case: SpaceCase):
    cl = case.cl()
    fails = []
    if cl[0] != 0:
        fails.append(
            f"closure of the null set is {case.render_set(cl[0])}, not null")
    if cl[case.carrier] != case.carrier:
        fails.append(
            f"closure of the carrier is {case.render_set(cl[case.carrier])}, "
            f"not the carrier")
    return 2, 2, fails


@_reg_space("CL.8")
def _eval_cl8(case: SpaceCase):
    it = case.interior()
    fails = []
    if it[0] != 0:
        fails.append("interior does not fix the null set")
    if it[case.carrier] != case.carrier:
        fails.append("interior does not fix the carrier")
    return 2, 2, fails


@_reg_space("CL.9")
def _eval_cl9(case: SpaceCase):
    join = case.pool.join
    cl = case.cl()

    def check(g, h):
        if cl[join[g][h]] == join[cl[g]][cl[h]]:
            return True
        return (f"closure of the union of {case.render_set(g)} and "
                f"{case.render_set(h)} is not the union of the closures")

    return _pair_scan(case, case.order * 131 + 9, check)


@_reg_space("CL.10")
def _eval_cl10(case: SpaceCase):
    meet = case.pool.meet
    it = case.interior()

    def check(g, h):
        if it[meet[g][h]] == meet[it[g]][it[h]]:
            return True
        return (f"interior of the intersection of {case.render_set(g)} and "
                f"{case.render_set(h)} is not the intersection of the "
                f"interiors")

    return _pair_scan(case, case.order * 131 + 10, check)


@_reg_space("CL.11")
def _eval_cl11(case: SpaceCase):
    meet = case.pool.meet
    cl = case.cl()

    def check(g, h):
        lhs = cl[meet[g][h]]
        if meet[lhs][meet[cl[g]][cl[h]]] == lhs:
            return True
        return (f"closure of the intersection of {case.render_set(g)} and "
                f"{case.render_set(h)} exceeds the intersection of the "
                f"closures")

    return _pair_scan(case, case.order * 131 + 11, check)


@_reg_space("CL.12-rev")
def _eval_cl12_rev(case: SpaceCase):
    meet, join = case.pool.meet, case.pool.join
    it = case.interior()

    def check(g, h):
        lhs = join[it[g]][it[h]]
        if meet[lhs][it[join[g][h]]] == lhs:
            return True
        return (f"union of the interiors of {case.render_set(g)} and "
                f"{case.render_set(h)} exceeds the interior of the union")

    return _pair_scan(case, case.order * 131 + 12, check)


@_reg_space("CL.12")
def _eval_cl12(case: SpaceCase):
    meet, join = case.pool.meet, case.pool.join
    it = case.interior()

    def check(g, h):
        lhs = it[join[g][h]]
        if meet[lhs][join[it[g]][it[h]]] == lhs:
            return True
        return (f"interior of the union of {case.render_set(g)} and "
                f"{case.render_set(h)} exceeds the union of the interiors")

    return _pair_scan(case, case.order * 131 + 120, check)


@_reg_space("CL.FIXED")
def _eval_cl_fixed(case: SpaceCase):
    cl = case.cl()
    closed = case.closed_set
    fails = []
    for g in range(case.pool.size):
        if (g in closed) != (cl[g] == g) and len(fails) < _MAX_FAILS:
            side = "closed but moved" if g in closed else "fixed but not closed"
            fails.append(f"{case.render_set(g)}: {side}")
    return case.pool.size, case.pool.size, fails


@_reg_space("NBD.1")
def _eval_nbd1(case: SpaceCase):
    it = case.interior()
    pin = case.pool.pt_in_mask
    checked = 0
    hits = 0
    fails = []
    for p in case.pts:
        pm = pin[p]
        for nb in range(case.pool.size):
            checked += 1
            if not (pm >> it[nb]) & 1:
                continue
            hits += 1
            if not (pm >> nb) & 1 and len(fails) < _MAX_FAILS:
                fails.append(
                    f"{case.render_point(p)} has neighborhood "
                    f"{case.render_set(nb)} without belonging to it")
    return checked, hits, fails


@_reg_space("NBD.2")
def _eval_nbd2(case: SpaceCase):
    it = case.interior()
    meet = case.pool.meet
    pin = case.pool.pt_in_mask
    n = case.pool.size
    pts = case.pts
    total = len(pts) * n * n
    checked = hits = 0
    fails: list[str] = []
    for t in _scan_indices(case, total, PAIR_PROBES, case.order * 131 + 21):
        pi, rest = divmod(t, n * n)
        nb, m = divmod(rest, n)
        checked += 1
        p = pts[pi]
        if meet[nb][m] != nb:  # need nb <= m
            continue
        if not (pin[p] >> it[nb]) & 1:
            continue
        hits += 1
        if not (pin[p] >> it[m]) & 1 and len(fails) < _MAX_FAILS:
            fails.append(
                f"{case.render_set(m)} extends a neighborhood of "
                f"{case.render_point(p)} but is no neighborhood itself")
    return checked, hits, fails


@_reg_space("NBD.3")
def _eval_nbd3(case: SpaceCase):
    it = case.interior()
    meet = case.pool.meet
    pin = case.pool.pt_in_mask
    n = case.pool.size
    pts = case.pts
    total = len(pts) * n * n
    checked = hits = 0
    fails: list[str] = []
    for t in _scan_indices(case, total, TRIPLE_PROBES, case.order * 131 + 22):
        pi, rest = divmod(t, n * n)
        n1, n2 = divmod(rest, n)
        checked += 1
        p = pts[pi]
        pm = pin[p]
        if not ((pm >> it[n1]) & 1 and (pm >> it[n2]) & 1):
            continue
        hits += 1
        if not (pm >> it[meet[n1][n2]]) & 1 and len(fails) < _MAX_FAILS:
            fails.append(
                f"intersection of two neighborhoods of {case.render_point(p)} "
                f"is no neighborhood")
    return checked, hits, fails


@_reg_space("NBD.4")
def _eval_nbd4(case: SpaceCase):
    it = case.interior()
    pin = case.pool.pt_in_mask
    opens = case.open_set
    meet = case.pool.meet
    checked = hits = 0
    fails = []
    for p in case.pts:
        pm = pin[p]
        for nb in range(case.pool.size):
            checked += 1
            o = it[nb]
            if not (pm >> o) & 1:
                continue
            hits += 1
            ok = o in opens and meet[o][nb] == o and (pm >> o) & 1
            if not ok and len(fails) < _MAX_FAILS:
                fails.append(
                    f"no open set sits between {case.render_point(p)} and "
                    f"its neighborhood {case.render_set(nb)}")
    return checked, hits, fails


@_reg_space("NBD.OPEN-IFF")
def _eval_nbd_open_iff(case: SpaceCase):
    it = case.interior()
    meet = case.pool.meet
    opens = case.open_set
    fails = []
    for g in range(case.pool.size):
        nbhd_of_all = meet[g][it[g]] == g
        if (g in opens) != nbhd_of_all and len(fails) < _MAX_FAILS:
            side = ("open but not a neighborhood of each of its points"
                    if g in opens else
                    "a neighborhood of each of its points but not open")
            fails.append(f"{case.render_set(g)}: {side}")
    return case.pool.size, case.pool.size, fails


@_reg_space("SUB.CLOSED")
def _eval_sub_closed(case: SpaceCase):
    meet = case.pool.meet

    def check(g, h):
        if meet[h][g] != h:
            return None
        r_closeds = sorted({meet[k][g] for k in case.closeds})
        sub_cl = _sub_closure(case.pool, r_closeds, g, h)
        if (h in r_closeds) == (sub_cl == h):
            return True
        return (f"in the subspace at {case.render_set(g)}, relative "
                f"closedness of {case.render_set(h)} disagrees with being "
                f"fixed by relative closure")

    return _pair_scan(case, case.order * 131 + 31, check)


@_reg_space("SUB.CLOSED-ABS")
def _eval_sub_closed_abs(case: SpaceCase):
    meet, comp = case.pool.meet, case.pool.comp

    def check(g, h):
        if meet[h][g] != h:
            return None
        r_closeds = {meet[k][g] for k in case.closeds}
        abs_closeds = {comp[meet[o][g]] for o in case.opens}
        if (h in r_closeds) == (h in abs_closeds):
            return True
        return (f"in the subspace at {case.render_set(g)}, the trace "
                f"reading and the absolute-complement reading disagree "
                f"about {case.render_set(h)}")

    return _pair_scan(case, case.order * 131 + 32, check)


def _sub_closure(pool: SetPool, r_closeds, g: int, h: int) -> int:
    meet = pool.meet
    acc = g
    mh = meet[h]
    for k in r_closeds:
        if mh[k] == h:
            acc = meet[acc][k]
    return acc


@_reg_space("SUB.CLOSURE")
def _eval_sub_closure(case: SpaceCase):
    meet = case.pool.meet
    cl = case.cl()

    def check(g, h):
        if meet[h][g] != h:
            return None
        r_closeds = sorted({meet[k][g] for k in case.closeds})
        if _sub_closure(case.pool, r_closeds, g, h) == meet[cl[h]][g]:
            return True
        return (f"relative closure of {case.render_set(h)} in the subspace "
                f"at {case.render_set(g)} is not the trace of the ambient "
                f"closure")

    return _pair_scan(case, case.order * 131 + 33, check)


def _chain_eval(case: SpaceCase, upper: str, lower: str):
    hyp = getattr(case, upper)()
    if not hyp:
        return 1, 0, []
    if getattr(case, lower)():
        return 1, 1, []
    return 1, 1, [f"space satisfies {upper.upper()} but not {lower.upper()}"]


@_reg_space("SEP.CHAIN-T2T1")
def _eval_chain_t2t1(case: SpaceCase):
    return _chain_eval(case, "t2", "t1")


@_reg_space("SEP.CHAIN-T1T0")
def _eval_chain_t1t0(case: SpaceCase):
    return _chain_eval(case, "t1", "t0")


@_reg_space("SEP.CHAIN-T3T2")
def _eval_chain_t3t2(case: SpaceCase):
    if not case.t1():
        return 1, 0, []
    return _chain_eval(case, "t3", "t2")


@_reg_space("SEP.CHAIN-T4T3")
def _eval_chain_t4t3(case: SpaceCase):
    if not case.t1():
        return 1, 0, []
    return _chain_eval(case, "t4", "t3")


@_reg_space("SEP.T0-DISCRETE")
def _eval_t0_discrete(case: SpaceCase):
    if len(case.ids) != case.pool.size:
        return 1, 0, []
    if case.t0():
        return 1, 1, []
    return 1, 1, ["discrete space is not T0"]


def _heredity_eval(case: SpaceCase, axiom: str, salt: int):
    if not getattr(case, axiom)():
        return 1, 0, []
    checked = hits = 0
    fails: list[str] = []
    n = case.pool.size
    for g in _scan_indices(case, n, SUBSET_PROBES, salt):
        checked += 1
        hits += 1
        if not _sub_axiom(case, g, axiom) and len(fails) < _MAX_FAILS:
            fails.append(
                f"{axiom.upper()} space with a non-{axiom.upper()} subspace "
                f"at {case.render_set(g)}")
    return checked, hits, fails


@_reg_space("SEP.SUB-T0")
def _eval_sub_t0(case: SpaceCase):
    return _heredity_eval(case, "t0", case.order * 131 + 41)


@_reg_space("SEP.SUB-T1")
def _eval_sub_t1(case: SpaceCase):
    return _heredity_eval(case, "t1", case.order * 131 + 42)


@_reg_space("SEP.SUB-T2")
def _eval_sub_t2(case: SpaceCase):
    return _heredity_eval(case, "t2", case.order * 131 + 43)


@_reg_space("SEP.T3-HERED")
def _eval_t3_hered(case: SpaceCase):
    if not case.t3():
        return 1, 0, []
    checked = hits = 0
    fails: list[str] = []
    n = case.pool.size
    for g in _scan_indices(case, n, SUBSET_PROBES, case.order * 131 + 44):
        checked += 1
        hits += 1
        if not _sub_axiom(case, g, "t3") and len(fails) < _MAX_FAILS:
            fails.append(f"T3 space with a non-T3 subspace at "
                         f"{case.render_set(g)}")
    return checked, hits, fails


@_reg_space("SEP.SUB-NORMAL")
def _eval_sub_normal(case: SpaceCase):
    if not case.normal():
        return 1, 0, []
    checked = hits = 0
    fails: list[str] = []
    closeds = case.closeds
    c = len(closeds)
    for i in _scan_indices(case, c, CLOSED_PROBES, case.order * 131 + 45):
        g = closeds[i]
        checked += 1
        hits += 1
        if not _sub_axiom(case, g, "normal") and len(fails) < _MAX_FAILS:
            fails.append(
                f"normal space with a non-normal closed subspace at "
                f"{case.render_set(g)}")
    return checked, hits, fails


@_reg_space("SEP.PTSCLOSED-T1")
def _eval_ptsclosed_t1(case: SpaceCase):
    if not case.points_closed():
        return 1, 0, []
    if case.t1():
        return 1, 1, []
    a, b = case.ax("t1")
    return 1, 1, [
        f"every point is closed yet T1 fails: no open holds "
        f"{case.render_point(a)} apart from {case.render_point(b)}"]


@_reg_space("SEP.PTSCLOSED-T2")
def _eval_ptsclosed_t2(case: SpaceCase):
    if not case.points_closed():
        return 1, 0, []
    if case.t2():
        return 1, 1, []
    a, b = case.ax("t2")
    return 1, 1, [
        f"every point is closed yet T2 fails at "
        f"{case.render_point(a)} and {case.render_point(b)}"]


def _t2char_property(case: SpaceCase):
    """First ordered point pair (p, q) with no open s holding p while q
    stays outside the closure of s; None when the property holds."""
    cl = case.cl()
    pin = case.pool.pt_in_mask
    opens = case.opens
    pts = case.pts
    omasks = case.omasks()
    for a in range(len(pts)):
        for b in range(len(pts)):
            if a == b:
                continue
            pm_b = pin[pts[b]]
            found = False
            for i in _bits(omasks[a]):
                if not (pm_b >> cl[opens[i]]) & 1:
                    found = True
                    break
            if not found:
                return pts[a], pts[b]
    return None


@_reg_space("SEP.T2CHAR-fwd")
def _eval_t2char_fwd(case: SpaceCase):
    if not case.t2():
        return 1, 0, []
    bad = _t2char_property(case)
    if bad is None:
        return 1, 1, []
    p, q = bad
    return 1, 1, [
        f"T2 space where no open around {case.render_point(p)} has a "
        f"closure avoiding {case.render_point(q)}"]


@_reg_space("SEP.T2CHAR-rev")
def _eval_t2char_rev(case: SpaceCase):
    if _t2char_property(case) is not None:
        return 1, 0, []
    if case.t2():
        return 1, 1, []
    a, b = case.ax("t2")
    return 1, 1, [
        f"closure-avoiding opens exist around every point pair, yet T2 "
        f"fails at {case.render_point(a)} and {case.render_point(b)}"]


def _regchar_property(case: SpaceCase):
    """First (point, open) pair without an interpolating open whose
    closure stays inside; None when the property holds."""
    cl = case.cl()
    meet = case.pool.meet
    opens = case.opens
    omasks = case.omasks()
    for a, p in enumerate(case.pts):
        ma = omasks[a]
        for i in _bits(ma):
            g = opens[i]
            ok = False
            for j in _bits(ma):
                s = opens[j]
                if meet[cl[s]][g] == cl[s]:
                    ok = True
                    break
            if not ok:
                return p, g
    return None


@_reg_space("SEP.REGCHAR-fwd")
def _eval_regchar_fwd(case: SpaceCase):
    if not case.t3():
        return 1, 0, []
    bad = _regchar_property(case)
    if bad is None:
        return 1, 1, []
    p, g = bad
    return 1, 1, [
        f"T3 space where no open around {case.render_point(p)} closes up "
        f"inside {case.render_set(g)}"]


@_reg_space("SEP.REGCHAR-rev")
def _eval_regchar_rev(case: SpaceCase):
    if not case.t1():
        return 1, 0, []
    if _regchar_property(case) is not None:
        return 1, 0, []
    if case.regular():
        return 1, 1, []
    p, k = case.ax("regular")
    return 1, 1, [
        f"T1 space with interpolating opens everywhere, yet not regular: "
        f"{case.render_point(p)} against closed {case.render_set(k)}"]


def _normchar_property(case: SpaceCase, probe: bool):
    """Violations of: closed k inside open g admits an open s with
    k <= s and closure of s inside g.  Scans (closed, open) index pairs,
    probed when asked to."""
    cl = case.cl()
    meet = case.pool.meet
    opens = case.opens
    closeds = case.closeds
    total = len(closeds) * len(opens)
    if probe and not case.exhaustive:
        indices = _probe(total, CLOSED_PROBES * 2, case.order * 131 + 46)
    else:
        indices = range(total)
    checked = hits = 0
    first_bad = None
    for t in indices:
        ci, oi = divmod(t, len(opens))
        k, g = closeds[ci], opens[oi]
        checked += 1
        if meet[k][g] != k:
            continue
        hits += 1
        ok = False
        for s in opens:
            if meet[k][s] == k and meet[cl[s]][g] == cl[s]:
                ok = True
                break
        if not ok and first_bad is None:
            first_bad = (k, g)
    return checked, hits, first_bad


@_reg_space("SEP.NORMCHAR-fwd")
def _eval_normchar_fwd(case: SpaceCase):
    if not case.normal():
        return 1, 0, []
    checked, hits, bad = _normchar_property(case, probe=True)
    if bad is None:
        return checked, hits, []
    k, g = bad
    return checked, hits, [
        f"normal space where closed {case.render_set(k)} inside open "
        f"{case.render_set(g)} has no interpolating open"]


@_reg_space("SEP.NORMCHAR-rev")
def _eval_normchar_rev(case: SpaceCase):
    # confirming the interpolation property needs the full scan, so this
    # facet only runs on exhaustive cases
    if not case.exhaustive:
        return 0, 0, []
    _, _, bad = _normchar_property(case, probe=False)
    if bad is not None:
        return 1, 0, []
    if case.normal():
        return 1, 1, []
    k1, k2 = case.ax("normal")
    return 1, 1, [
        f"interpolation holds for every nested closed/open pair, yet the "
        f"space is not normal: {case.render_set(k1)} against "
        f"{case.render_set(k2)}"]


@_reg_space("CON.INDISCRETE")
def _eval_con_indiscrete(case: SpaceCase):
    if len(case.ids) != 2:
        return 1, 0, []
    if case.connected():
        return 1, 1, []
    return 1, 1, ["indiscrete space is disconnected"]


@_reg_space("CON.DISCRETE")
def _eval_con_discrete(case: SpaceCase):
    if len(case.ids) != case.pool.size:
        return 1, 0, []
    if not case.connected():
        return 1, 1, []
    return 1, 1, ["discrete space is connected"]


@_reg_space("CON.CLOPEN-fwd")
def _eval_con_clopen_fwd(case: SpaceCase):
    if case.connected():
        return 1, 0, []
    clopen = _proper_clopen(case)
    if clopen is not None:
        return 1, 1, []
    a, b = case.conn(case.carrier)[1]
    return 1, 1, [
        f"disconnected by {case.render_set(a)} and {case.render_set(b)}, "
        f"yet no open other than the null set and the carrier is closed"]


@_reg_space("CON.CLOPEN-rev")
def _eval_con_clopen_rev(case: SpaceCase):
    clopen = _proper_clopen(case)
    if clopen is None:
        return 1, 0, []
    if not case.connected():
        return 1, 1, []
    return 1, 1, [
        f"{case.render_set(clopen)} is clopen, neither null nor the "
        f"carrier, yet the space is connected"]


def _proper_clopen(case: SpaceCase):
    for o in case.opens:
        if o != 0 and o != case.carrier and o in case.closed_set:
            return o
    return None


@_reg_space("CON.COARSER")
def _eval_con_coarser(case: SpaceCase):
    if not case.connected():
        return 1, 0, []
    pool = case.pool
    meet, join = pool.meet, pool.join
    opens = case.opens
    t = len(opens)
    total = t * t
    checked = hits = 0
    fails: list[str] = []
    if case.exhaustive:
        indices = range(total)
    else:
        indices = _probe(total, CLOSED_PROBES * 2, case.order * 131 + 51)
    for idx in indices:
        i, j = divmod(idx, t)
        if i >= j:
            continue
        checked += 1
        hits += 1
        # coarser family generated inside the open family, so it is a
        # topology on the same carrier by construction
        family = {0, case.carrier, opens[i], opens[j],
                  meet[opens[i]][opens[j]], join[opens[i]][opens[j]]}
        sep = _sep_pair(pool, sorted(family), case.carrier)
        if sep is not None and len(fails) < _MAX_FAILS:
            a, b = sep
            fails.append(
                f"coarsening to the family generated by "
                f"{case.render_set(opens[i])} and {case.render_set(opens[j])} "
                f"splits the space into {case.render_set(a)} and "
                f"{case.render_set(b)}")
    return checked, hits, fails


@_reg_space("CON.SUBSPACE-SIDE")
def _eval_con_subspace_side(case: SpaceCase):
    connected, sep = case.conn(case.carrier)
    if connected:
        return 1, 0, []
    g1, g2 = sep
    meet = case.pool.meet
    n = case.pool.size
    checked = hits = 0
    fails: list[str] = []
    for h in _scan_indices(case, n, SUBSET_PROBES, case.order * 131 + 52):
        checked += 1
        if h == 0 or meet[h][case.carrier] != h:
            continue
        if not case.conn(h)[0]:
            continue
        hits += 1
        if meet[h][g1] != h and meet[h][g2] != h and len(fails) < _MAX_FAILS:
            fails.append(
                f"connected subspace {case.render_set(h)} sits inside "
                f"neither side of the separation {case.render_set(g1)} / "
                f"{case.render_set(g2)}")
    return checked, hits, fails


@_reg_space("CON.UNION-COMMON")
def _eval_con_union_common(case: SpaceCase):
    pool = case.pool
    meet, join = pool.meet, pool.join
    carrier = case.carrier

    def check(g, h):
        if meet[g][carrier] != g or meet[h][carrier] != h:
            return None
        if g == 0 or h == 0 or meet[g][h] == 0:
            return None
        if not (case.conn(g)[0] and case.conn(h)[0]):
            return None
        if case.conn(join[g][h])[0]:
            return True
        return (f"overlapping connected subspaces {case.render_set(g)} and "
                f"{case.render_set(h)} with a disconnected union")

    return _pair_scan(case, case.order * 131 + 53, check)


@_reg_space("CON.UNION-HUB")
def _eval_con_union_hub(case: SpaceCase):
    pool = case.pool
    meet, join = pool.meet, pool.join
    n = pool.size
    carrier = case.carrier
    total = n * n * n
    checked = hits = 0
    fails: list[str] = []
    for t in _scan_indices(case, total, TRIPLE_PROBES, case.order * 131 + 54):
        hub, rest = divmod(t, n * n)
        g, h = divmod(rest, n)
        checked += 1
        members = (hub, g, h)
        if any(m == 0 or meet[m][carrier] != m for m in members):
            continue
        if meet[hub][g] == 0 or meet[hub][h] == 0:
            continue
        if not all(case.conn(m)[0] for m in members):
            continue
        hits += 1
        union = join[join[hub][g]][h]
        if not case.conn(union)[0] and len(fails) < _MAX_FAILS:
            fails.append(
                f"connected subspaces {case.render_set(g)} and "
                f"{case.render_set(h)} both meeting {case.render_set(hub)} "
                f"have a disconnected union")
    return checked, hits, fails


@_reg_space("CON.SEPCHAR-fwd")
def _eval_con_sepchar_fwd(case: SpaceCase):
    pool = case.pool
    meet = pool.meet
    cl = case.cl()
    n = pool.size
    checked = hits = 0
    fails: list[str] = []
    for g in _scan_indices(case, n, SUBSET_PROBES, case.order * 131 + 55):
        if meet[g][case.carrier] != g:
            continue
        traces = case.traces(g)
        disj = pool.disj_mask
        join = pool.join
        for i in range(len(traces)):
            a = traces[i]
            if a == 0:
                continue
            for b in traces[i + 1:]:
                if not b or not (disj[a] >> b) & 1 or join[a][b] != g:
                    continue
                checked += 1
                hits += 1
                if (meet[a][cl[b]] == 0 and meet[b][cl[a]] == 0):
                    continue
                if len(fails) < _MAX_FAILS:
                    fails.append(
                        f"separation {case.render_set(a)} / "
                        f"{case.render_set(b)} of the subspace at "
                        f"{case.render_set(g)} meets an ambient closure")
    return checked, hits, fails


@_reg_space("CON.SEPCHAR-rev")
def _eval_con_sepchar_rev(case: SpaceCase):
    pool = case.pool
    meet = pool.meet
    cl = case.cl()
    n = pool.size
    checked = hits = 0
    fails: list[str] = []
    for g in _scan_indices(case, n, SUBSET_PROBES, case.order * 131 + 56):
        if g == 0 or meet[g][case.carrier] != g:
            continue
        vec = pool._vector(g)
        cells = [c for c, v in enumerate(vec) if v]
        if len(cells) < 2:
            continue
        trace_set = set(case.traces(g))
        for mask in range(1, (1 << len(cells)) - 1):
            a_vec = list(vec)
            for bit, c in enumerate(cells):
                if not (mask >> bit) & 1:
                    a_vec[c] = 0
            a = pool._encode(tuple(a_vec))
            b = pool._encode(tuple(v - av for v, av in zip(vec, a_vec)))
            checked += 1
            if meet[a][cl[b]] != 0 or meet[b][cl[a]] != 0:
                continue
            hits += 1
            if (a in trace_set and b in trace_set):
                continue
            if len(fails) < _MAX_FAILS:
                fails.append(
                    f"{case.render_set(a)} / {case.render_set(b)} split "
                    f"{case.render_set(g)} with closure-disjoint sides, yet "
                    f"are not both relatively open")
    return checked, hits, fails


@_reg_space("CON.BETWEEN")
def _eval_con_between(case: SpaceCase):
    pool = case.pool
    meet = pool.meet
    cl = case.cl()
    n = pool.size
    checked = hits = 0
    fails: list[str] = []
    for g in _scan_indices(case, n, CLOSED_PROBES, case.order * 131 + 57):
        if g == 0 or meet[g][case.carrier] != g:
            continue
        if not case.conn(g)[0]:
            continue
        top = meet[cl[g]][case.carrier]
        for k in range(n):
            if meet[g][k] != g or meet[k][top] != k:
                continue
            checked += 1
            hits += 1
            if not case.conn(k)[0] and len(fails) < _MAX_FAILS:
                fails.append(
                    f"{case.render_set(k)} lies between connected "
                    f"{case.render_set(g)} and its closure, yet is "
                    f"disconnected")
    return checked, hits, fails


@_reg_space("CON.CLOSURE-CONN")
def _eval_con_closure_conn(case: SpaceCase):
    pool = case.pool
    meet = pool.meet
    cl = case.cl()
    n = pool.size
    checked = hits = 0
    fails: list[str] = []
    for g in _scan_indices(case, n, SUBSET_PROBES, case.order * 131 + 58):
        if g == 0 or meet[g][case.carrier] != g:
            continue
        if not case.conn(g)[0]:
            continue
        checked += 1
        hits += 1
        closure_in_carrier = meet[cl[g]][case.carrier]
        if not case.conn(closure_in_carrier)[0] and len(fails) < _MAX_FAILS:
            fails.append(
                f"connected {case.render_set(g)} with a disconnected "
                f"closure {case.render_set(closure_in_carrier)}")
    return checked, hits, fails


# -- pool-scope evaluators -------------------------------------------------


def _point_id_masks(pool: SetPool):
    """Per point, the bitmask over pool ids of the sets containing it."""
    pool.build_points()
    return pool.pt_in_mask


@_reg_pool("ALG.INVOLUTION")
def _eval_alg_involution(pool: SetPool):
    comp = pool.comp
    fails = []
    for g in range(pool.size):
        if comp[comp[g]] != g and len(fails) < _MAX_FAILS:
            fails.append(f"complement not involutive at "
                         f"{pool.decode(g).render()}")
    return pool.size, pool.size, fails


@_reg_pool("ALG.DEMORGAN-UNION")
def _eval_demorgan_union(pool: SetPool):
    comp, meet, join = pool.comp, pool.meet, pool.join
    checked = 0
    fails = []
    for g in range(pool.size):
        for h in range(g, pool.size):
            checked += 1
            if comp[join[g][h]] != meet[comp[g]][comp[h]]:
                if len(fails) < _MAX_FAILS:
                    fails.append(
                        f"complement of a union misses at "
                        f"{pool.decode(g).render()} / {pool.decode(h).render()}")
    return checked, checked, fails


@_reg_pool("ALG.DEMORGAN-INTERSECTION")
def _eval_demorgan_intersection(pool: SetPool):
    comp, meet, join = pool.comp, pool.meet, pool.join
    checked = 0
    fails = []
    for g in range(pool.size):
        for h in range(g, pool.size):
            checked += 1
            if comp[meet[g][h]] != join[comp[g]][comp[h]]:
                if len(fails) < _MAX_FAILS:
                    fails.append(
                        f"complement of an intersection misses at "
                        f"{pool.decode(g).render()} / {pool.decode(h).render()}")
    return checked, checked, fails


@_reg_pool("PT.1")
def _eval_pt1(pool: SetPool):
    masks = _point_id_masks(pool)
    comp = pool.comp
    checked = 0
    fails = []
    for p in range(len(pool.points)):
        pm = masks[p]
        for g in range(pool.size):
            checked += 1
            if (pm >> g) & 1 and (pm >> comp[g]) & 1:
                if len(fails) < _MAX_FAILS:
                    fails.append(
                        f"{pool.decode_point(p).render()} belongs to "
                        f"{pool.decode(g).render()} and to its complement")
    return checked, checked, fails


@_reg_pool("PT.3")
def _eval_pt3(pool: SetPool):
    per = len(pool.universe)
    join = pool.join
    checked = 0
    fails = []
    for g in range(pool.size):
        checked += 1
        vec = pool._vector(g)
        acc = 0
        for pi in range(len(pool.parameters)):
            part = [0] * len(vec)
            part[pi * per:(pi + 1) * per] = vec[pi * per:(pi + 1) * per]
            acc = join[acc][pool._encode(tuple(part))]
        if acc != g and len(fails) < _MAX_FAILS:
            fails.append(f"{pool.decode(g).render()} is not the union of "
                         f"its single-parameter restrictions")
    return checked, checked, fails


@_reg_pool("PT.4")
def _eval_pt4(pool: SetPool):
    masks = _point_id_masks(pool)
    form = pool.pt_form_id
    pts = pool.points
    checked = 0
    fails = []
    for a in range(len(pts)):
        pa, va = pts[a]
        for b in range(len(pts)):
            checked += 1
            member = (masks[a] >> form[b]) & 1 == 1
            expected = pa == pts[b][0] and all(
                x <= y for x, y in zip(va, pts[b][1]))
            if member != expected and len(fails) < _MAX_FAILS:
                fails.append(
                    f"membership of {pool.decode_point(a).render()} in the "
                    f"form of {pool.decode_point(b).render()} is "
                    f"mischaracterized")
    return checked, checked, fails


@_reg_pool("PT.5-sound")
def _eval_pt5_sound(pool: SetPool):
    masks = _point_id_masks(pool)
    join = pool.join
    checked = 0
    fails = []
    for p in range(len(pool.points)):
        pm = masks[p]
        members = [g for g in range(pool.size) if (pm >> g) & 1]
        for g in members:
            jg = join[g]
            for h in range(pool.size):
                checked += 1
                if not (pm >> jg[h]) & 1 and len(fails) < _MAX_FAILS:
                    fails.append(
                        f"{pool.decode_point(p).render()} belongs to "
                        f"{pool.decode(g).render()} but not to a union "
                        f"extending it")
    return checked, checked, fails


@_reg_pool("PT.5-converse")
def _eval_pt5_converse(pool: SetPool):
    masks = _point_id_masks(pool)
    join = pool.join
    checked = 0
    fails = []
    for p in range(len(pool.points)):
        pm = masks[p]
        outside = [g for g in range(pool.size) if not (pm >> g) & 1]
        for i, g in enumerate(outside):
            jg = join[g]
            for h in outside[i:]:
                checked += 1
                if (pm >> jg[h]) & 1 and len(fails) < _MAX_FAILS:
                    fails.append(
                        f"{pool.decode_point(p).render()} belongs to the "
                        f"union of {pool.decode(g).render()} and "
                        f"{pool.decode(h).render()} but to neither part")
    return checked, checked, fails


@_reg_pool("PT.6")
def _eval_pt6(pool: SetPool):
    masks = _point_id_masks(pool)
    meet = pool.meet
    checked = 0
    fails = []
    for p in range(len(pool.points)):
        pm = masks[p]
        members = [g for g in range(pool.size) if (pm >> g) & 1]
        outside = [g for g in range(pool.size) if not (pm >> g) & 1]
        for i, g in enumerate(members):
            mg = meet[g]
            for h in members[i:]:
                checked += 1
                if not (pm >> mg[h]) & 1 and len(fails) < _MAX_FAILS:
                    fails.append(
                        f"{pool.decode_point(p).render()} belongs to two "
                        f"sets but not to their intersection")
        for g in outside:
            mg = meet[g]
            for h in range(pool.size):
                checked += 1
                if (pm >> mg[h]) & 1 and len(fails) < _MAX_FAILS:
                    fails.append(
                        f"{pool.decode_point(p).render()} belongs to an "
                        f"intersection without belonging to "
                        f"{pool.decode(g).render()}")
    return checked, checked, fails


# -- fixed evaluators: recorded worked examples ----------------------------


def _hostel_context():
    universe = Universe.of("h1", "h2", "h3", "h4")
    parameters = ParameterSet.of("e1", "e2", "e3", "e4", "e5")
    return universe, parameters


@_reg_fixed("EX.POINT-COMPLEMENT")
def _eval_ex_point_complement():
    universe, parameters = _hostel_context()
    value = FuzzySet.from_mapping(
        universe, {"h1": "1/10", "h2": "9/10", "h4": "2/5"})
    point = FuzzySoftPoint("e1", value, parameters)
    got = point.as_fss().complement().value_for("e1")
    want = FuzzySet.from_mapping(
        universe, {"h1": "9/10", "h2": "1/10", "h3": "1", "h4": "3/5"})
    if got == want:
        return 1, 1, []
    return 1, 1, [f"complement row came out as {got.render()}"]


@_reg_fixed("EX.COMPLEMENT-NONMEMBER")
def _eval_ex_complement_nonmember():
    universe = Universe.of("h1", "h2")
    parameters = ParameterSet.of("e1", "e2")
    point = FuzzySoftPoint(
        "e1", FuzzySet.from_mapping(universe, {"h1": "1/10", "h2": "1/5"}),
        parameters)
    h = FuzzySoftSet.build(universe, parameters, {
        "e1": {"h1": "1/10", "h2": "9/10"},
        "e2": {"h1": "1/5", "h2": "3/10"},
    })
    fails = []
    if not point_in(point, h):
        fails.append("the recorded point does not belong to the recorded set")
    if point_in(point.complement(), h.complement()):
        fails.append("the complemented point landed inside the complemented "
                     "set; membership is not preserved here and that is the "
                     "recorded outcome")
    return 1, 1, fails


@_reg_fixed("EX.POINT-MEMBERSHIP")
def _eval_ex_point_membership():
    universe = Universe.of("h1", "h2", "h3", "h4", "h5", "h6")
    parameters = ParameterSet.of("e1", "e2", "e3")
    point = FuzzySoftPoint(
        "e3",
        FuzzySet.from_mapping(universe, {"h1": "1/10", "h2": "1/5",
                                         "h3": "4/5", "h4": "1/5",
                                         "h5": "1/2"}),
        parameters)
    g = FuzzySoftSet.build(universe, parameters, {
        "e3": {"h1": "1/5", "h2": "3/10", "h3": "4/5", "h4": "1/5",
               "h5": "1/2", "h6": "3/5"},
    })
    if point_in(point, g):
        return 1, 1, []
    return 1, 1, ["the recorded point fails to belong to the recorded set"]


# -- registry --------------------------------------------------------------


def _claims() -> tuple[Claim, ...]:
    A, U, R = ASSERTED, AUDITED, REPRODUCED
    probe_pairs = (f"ordered set pairs probed ({PAIR_PROBES} per case), "
                   f"full scan on exhaustive cases")
    probe_subsets = (f"carriers probed ({SUBSET_PROBES} per case), full scan "
                     f"on exhaustive cases")
    every_set = "every lattice set of each case"
    per_case = "decided once per case"
    return (
        Claim("TOP.AX3-union", A, "space",
              "The open family is closed under pairwise union.",
              "every open pair of each case"),
        Claim("TOP.AX3-intersection", A, "space",
              "The open family is closed under pairwise intersection.",
              "every open pair of each case"),
        Claim("CL.1", A, "space",
              "The interior of a complement is the complement of the "
              "closure.", every_set),
        Claim("CL.2", A, "space",
              "The closure of a complement is the complement of the "
              "interior.", every_set),
        Claim("CL.3", A, "space",
              "Closure is monotone with respect to set inclusion.",
              probe_pairs, complete=False),
        Claim("CL.4", A, "space",
              "Interior is monotone with respect to set inclusion.",
              probe_pairs, complete=False),
        Claim("CL.5", A, "space", "Closure is idempotent.", every_set),
        Claim("CL.6", A, "space", "Interior is idempotent.", every_set),
        Claim("CL.7-COND", A, "space",
              "Whenever the null set (resp. the carrier) is closed, closure "
              "fixes it.", per_case),
        Claim("CL.7-ABS", AUDITED, "space",
              "Closure fixes the null set and the carrier unconditionally.",
              per_case),
        Claim("CL.8", A, "space",
              "Interior fixes the null set and the carrier.", per_case),
        Claim("CL.9", A, "space",
              "Closure distributes over pairwise union.",
              probe_pairs, complete=False),
        Claim("CL.10", A, "space",
              "Interior distributes over pairwise intersection.",
              probe_pairs, complete=False),
        Claim("CL.11", A, "space",
              "The closure of an intersection lies below the intersection "
              "of the closures.", probe_pairs, complete=False),
        Claim("CL.12", U, "space",
              "The interior of a union lies below the union of the "
              "interiors.", probe_pairs, complete=False),
        Claim("CL.12-rev", A, "space",
              "The union of the interiors lies below the interior of the "
              "union.", probe_pairs, complete=False),
        Claim("CL.FIXED", A, "space",
              "A set is closed exactly when closure fixes it.", every_set),
        Claim("NBD.1", A, "space",
              "A neighborhood of a point contains that point.",
              "every (point, set) pair of each case"),
        Claim("NBD.2", A, "space",
              "Any superset of a neighborhood is again a neighborhood.",
              probe_pairs, complete=False),
        Claim("NBD.3", A, "space",
              "The intersection of two neighborhoods of a point is a "
              "neighborhood of it.",
              f"(point, set, set) triples probed ({TRIPLE_PROBES} per "
              f"case), full scan on exhaustive cases when it fits",
              complete=False),
        Claim("NBD.4", A, "space",
              "Every neighborhood contains an open neighborhood of the "
              "same point.", "every (point, set) pair of each case"),
        Claim("NBD.OPEN-IFF", A, "space",
              "A set is open exactly when it is a neighborhood of each of "
              "its points.", every_set),
        Claim("SUB.CLOSED", A, "space",
              "In a subspace, a set is relatively closed exactly when the "
              "relative closure fixes it.", probe_pairs, complete=False),
        Claim("SUB.CLOSED-ABS", U, "space",
              "Relative closedness matches complementing traces inside the "
              "whole lattice rather than tracing the ambient closed sets.",
              probe_pairs, complete=False),
        Claim("SUB.CLOSURE", A, "space",
              "The relative closure of a subspace subset is the trace of "
              "its ambient closure.", probe_pairs, complete=False),
        Claim("SEP.CHAIN-T2T1", A, "space",
              "Every T2 space is T1.", per_case),
        Claim("SEP.CHAIN-T1T0", A, "space",
              "Every T1 space is T0.", per_case),
        Claim("SEP.CHAIN-T3T2", U, "space",
              "Every T3 space is T2.", per_case),
        Claim("SEP.CHAIN-T4T3", U, "space",
              "Every T4 space is T3.", per_case),
        Claim("SEP.T0-DISCRETE", A, "space",
              "The discrete space over a shape is T0.", per_case),
        Claim("SEP.SUB-T0", A, "space",
              "Every subspace of a T0 space is T0.",
              probe_subsets, complete=False),
        Claim("SEP.SUB-T1", A, "space",
              "Every subspace of a T1 space is T1.",
              probe_subsets, complete=False),
        Claim("SEP.SUB-T2", A, "space",
              "Every subspace of a T2 space is T2.",
              probe_subsets, complete=False),
        Claim("SEP.T3-HERED", U, "space",
              "Every subspace of a T3 space is T3.",
              probe_subsets, complete=False),
        Claim("SEP.SUB-NORMAL", U, "space",
              "Every closed subspace of a normal space is normal.",
              f"closed carriers probed ({CLOSED_PROBES} per case), full "
              f"scan on exhaustive cases", complete=False),
        Claim("SEP.PTSCLOSED-T1", U, "space",
              "If every point of a space is closed, the space is T1.",
              per_case),
        Claim("SEP.PTSCLOSED-T2", U, "space",
              "If every point of a space is closed, the space is T2.",
              per_case),
        Claim("SEP.T2CHAR-fwd", U, "space",
              "In a T2 space, around either point of a distinct pair some "
              "open set has a closure avoiding the other point.", per_case),
        Claim("SEP.T2CHAR-rev", U, "space",
              "If around either point of every distinct pair some open set "
              "has a closure avoiding the other point, the space is T2.",
              per_case),
        Claim("SEP.REGCHAR-fwd", U, "space",
              "In a T3 space, every open set around a point contains an "
              "open around the same point whose closure stays inside.",
              per_case),
        Claim("SEP.REGCHAR-rev", U, "space",
              "A T1 space where every open set around a point contains an "
              "open around the same point whose closure stays inside is "
              "regular.", per_case),
        Claim("SEP.NORMCHAR-fwd", U, "space",
              "In a normal space, between a closed set and an open set "
              "containing it sits an open set whose closure stays inside.",
              f"(closed, open) pairs probed ({CLOSED_PROBES * 2} per case), "
              f"full scan on exhaustive cases", complete=False),
        Claim("SEP.NORMCHAR-rev", U, "space",
              "If between every closed set and every open set containing "
              "it sits an open whose closure stays inside, the space is "
              "normal.", "evaluated on exhaustive cases only",
              complete=False),
        Claim("CON.INDISCRETE", A, "space",
              "The indiscrete space is connected.", per_case),
        Claim("CON.DISCRETE", U, "space",
              "The discrete space over a shape is disconnected.", per_case),
        Claim("CON.CLOPEN-fwd", U, "space",
              "A disconnected space has an open set other than the null "
              "set and the carrier that is also closed.", per_case),
        Claim("CON.CLOPEN-rev", U, "space",
              "A space with an open set other than the null set and the "
              "carrier that is also closed is disconnected.", per_case),
        Claim("CON.COARSER", A, "space",
              "Dropping to a coarser open family preserves connectedness.",
              f"generated coarsenings probed ({CLOSED_PROBES * 2} per "
              f"case), all open pairs on exhaustive cases", complete=False),
        Claim("CON.SUBSPACE-SIDE", A, "space",
              "A connected subspace of a separated space lies inside one "
              "side of the separation.", probe_subsets, complete=False),
        Claim("CON.UNION-COMMON", A, "space",
              "The union of two overlapping connected subspaces is "
              "connected.", probe_pairs, complete=False),
        Claim("CON.UNION-HUB", A, "space",
              "The union of connected subspaces each overlapping a common "
              "connected hub is connected.",
              f"(hub, set, set) triples probed ({TRIPLE_PROBES} per case)",
              complete=False),
        Claim("CON.SEPCHAR-fwd", U, "space",
              "Both sides of any subspace separation avoid each other's "
              "ambient closure.", probe_subsets, complete=False),
        Claim("CON.SEPCHAR-rev", U, "space",
              "Cell-wise splittings of a subspace carrier whose sides "
              "avoid each other's ambient closure are separations by "
              "relatively open sets.", probe_subsets, complete=False),
        Claim("CON.BETWEEN", U, "space",
              "Every set between a connected subspace and its closure is "
              "connected.",
              f"carriers probed ({CLOSED_PROBES} per case), every "
              f"in-between set for each", complete=False),
        Claim("CON.CLOSURE-CONN", U, "space",
              "The closure of a connected subspace is connected.",
              probe_subsets, complete=False),
        Claim("ALG.INVOLUTION", A, "pool",
              "Complement is an involution on lattice sets.",
              "every set of each pool"),
        Claim("ALG.DEMORGAN-UNION", A, "pool",
              "The complement of a union is the intersection of the "
              "complements.", "every set pair of each pool"),
        Claim("ALG.DEMORGAN-INTERSECTION", A, "pool",
              "The complement of an intersection is the union of the "
              "complements.", "every set pair of each pool"),
        Claim("PT.1", U, "pool",
              "No point belongs to both a set and its complement.",
              "every (point, set) pair of each pool"),
        Claim("PT.3", A, "pool",
              "Every set is the union of its single-parameter "
              "restrictions.", "every set of each pool"),
        Claim("PT.4", A, "pool",
              "A point belongs to another point's set form exactly when "
              "the supports match and the values are ordered.",
              "every point pair of each pool"),
        Claim("PT.5-sound", A, "pool",
              "A point of one set belongs to any union extending that "
              "set.", "every (point, member set, set) triple of each pool"),
        Claim("PT.5-converse", U, "pool",
              "A point of a union of two sets belongs to one of them.",
              "every (point, set, set) triple with both memberships "
              "failing"),
        Claim("PT.6", A, "pool",
              "A point belongs to an intersection exactly when it belongs "
              "to both sets.", "every (point, set, set) triple of each pool"),
        Claim("EX.POINT-COMPLEMENT", R, "fixed",
              "A recorded complement table for a single point over a "
              "four-element universe comes out exactly.", "fixed data"),
        Claim("EX.COMPLEMENT-NONMEMBER", R, "fixed",
              "A recorded membership survives while its complemented "
              "counterpart fails, exactly as recorded.", "fixed data"),
        Claim("EX.POINT-MEMBERSHIP", R, "fixed",
              "A recorded six-element membership check comes out exactly.",
              "fixed data"),
    )


CLAIMS: tuple[Claim, ...] = _claims()
CLAIM_INDEX: dict[str, Claim] = {c.ident: c for c in CLAIMS}


def select_claims(pattern: str | None) -> tuple[Claim, ...]:
    """Claims matching an ident, a facet family ("CON.CLOPEN" takes its
    -fwd and -rev facets) or a group prefix ("CL" takes every CL.* claim)."""
    if pattern is None or pattern == "all":
        return CLAIMS
    chosen = tuple(c for c in CLAIMS
                   if c.ident == pattern
                   or c.ident.startswith(pattern + "-")
                   or c.ident.startswith(pattern + "."))
    return chosen


def registry_selfcheck() -> None:
    """Structural sanity of the registry; raises on any defect."""
    seen = set()
    for claim in CLAIMS:
        if claim.ident in seen:
            raise AssertionError(f"duplicate claim ident {claim.ident}")
        seen.add(claim.ident)
        if claim.classification not in CLASSIFICATIONS:
            raise AssertionError(f"bad classification on {claim.ident}")
        table = {"space": SPACE_EVALS, "pool": POOL_EVALS,
                 "fixed": FIXED_EVALS}[claim.scope]
        if claim.ident not in table:
            raise AssertionError(f"no evaluator for {claim.ident}")
    for table in (SPACE_EVALS, POOL_EVALS, FIXED_EVALS):
        for ident in table:
            if ident not in seen:
                raise AssertionError(f"evaluator {ident} has no claim entry")


def evaluate_space_case(case: SpaceCase, idents=None) -> dict:
    """Run the chosen space-scope evaluators; dict ident -> result triple."""
    results = {}
    for claim in CLAIMS:
        if claim.scope != "space":
            continue
        if idents is not None and claim.ident not in idents:
            continue
        results[claim.ident] = SPACE_EVALS[claim.ident](case)
    return results


def evaluate_pool_claims(pool: SetPool, idents=None) -> dict:
    results = {}
    for claim in CLAIMS:
        if claim.scope != "pool":
            continue
        if idents is not None and claim.ident not in idents:
            continue
        results[claim.ident] = POOL_EVALS[claim.ident](pool)
    return results


def evaluate_fixed_claims(idents=None) -> dict:
    results = {}
    for claim in CLAIMS:
        if claim.scope != "fixed":
            continue
        if idents is not None and claim.ident not in idents:
            continue
        results[claim.ident] = FIXED_EVALS[claim.ident]()
    return results
