# A tour of the separation deciders on three classical-looking spaces.
#
# The punchline: the classical intuitions do not all survive.  Points here
# carry grades, and a point lying strictly below another can never be
# separated from it, so the crisp "discrete" space on two elements is not
# even T1.

from fstopo import (
    DeciderConfig,
    FuzzySoftSet,
    GradeLattice,
    ParameterSet,
    Universe,
    is_connected,
    is_normal,
    is_regular,
    is_t0,
    is_t1,
    is_t2,
    validate_topology,
)

U = Universe.of("x", "y")
E = ParameterSet.of("e1")
null = FuzzySoftSet.null(U, E)
full = FuzzySoftSet.full(U, E)
ox = FuzzySoftSet.build(U, E, {"e1": {"x": 1}})
oy = FuzzySoftSet.build(U, E, {"e1": {"y": 1}})

spaces = {
    "indiscrete": validate_topology(full, [null, full]),
    "one-sided": validate_topology(full, [null, ox, full]),
    "discrete": validate_topology(full, [null, ox, oy, full]),
}

crisp = DeciderConfig(lattice=GradeLattice.close([]))

header = f"{'space':<12}" + "".join(
    f"{name:>6}" for name in ("T0", "T1", "T2", "reg", "norm", "conn"))
print(header)
for label, space in spaces.items():
    verdicts = [
        is_t0(space, crisp), is_t1(space, crisp), is_t2(space, crisp),
        is_regular(space, crisp), is_normal(space, crisp),
        is_connected(space, crisp),
    ]
    row = f"{label:<12}" + "".join(
        f"{'yes' if v.holds else 'no':>6}" for v in verdicts)
    print(row)

# show the witness that sinks T1 on the discrete space
verdict = is_t1(spaces["discrete"], crisp)
print()
print("why discrete fails T1:", verdict.witness.render())

# every verdict names its lattice, and the lattice matters: the chain
# null < {x:1/2} < full over a single desk is T1 against crisp points
# (there is only one) but not against {0, 1/2, 1} points
u1 = Universe.of("x")
n1 = FuzzySoftSet.null(u1, E)
f1 = FuzzySoftSet.full(u1, E)
h1 = FuzzySoftSet.build(u1, E, {"e1": {"x": "1/2"}})
chain = validate_topology(f1, [n1, h1, f1])

rich = DeciderConfig(lattice=GradeLattice.close(["1/2"]))
print()
print("chain space, T1 against {0,1}:    ", is_t1(chain, crisp).holds)
print("chain space, T1 against {0,1/2,1}:", is_t1(chain, rich).holds)
print("   ", is_t1(chain, rich).witness.render())
