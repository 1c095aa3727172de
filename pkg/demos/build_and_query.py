# Build a small space by hand and poke at its closure structure.
#
# Two desks x, y judged under two lamps e1, e2, grades in {0, 1/2, 1}.
# The open family is a chain: null < a < carrier.

from fstopo import (
    FuzzySoftSet,
    ParameterSet,
    Universe,
    validate_topology,
)
from fstopo.points import FuzzySoftPoint, point_in

U = Universe.of("x", "y")
E = ParameterSet.of("e1", "e2")

carrier = FuzzySoftSet.build(U, E, {"e1": {"x": "1/2", "y": "1/2"}})
a = FuzzySoftSet.build(U, E, {"e1": {"x": "1/2"}})
null = FuzzySoftSet.null(U, E)

space = validate_topology(carrier, [null, a, carrier])
print("opens:")
for o in space.opens:
    print("  ", o.render())

print("closed sets (complements, may exceed the carrier):")
for k in space.closed_sets:
    print("  ", k.render())

# closure of a probe set that is not itself open
probe = FuzzySoftSet.build(U, E, {"e1": {"y": "1/2"}})
print("probe          ", probe.render())
print("closure(probe) ", space.closure(probe).render())
print("interior(probe)", space.interior(probe).render())

# interior and closure are dual through the complement
lhs = space.closure(probe.complement())
rhs = space.interior(probe).complement()
print("duality holds:", lhs == rhs)

# neighborhood test: the carrier is a neighborhood of the half-point of x,
# because the open a sits between them
p = FuzzySoftPoint("e1", a.value_for("e1"), E)
print("point:", p.render())
print("  in a:", point_in(p, a))
print("  carrier is a neighborhood:", space.is_neighborhood(carrier, p))
print("  probe is a neighborhood:  ", space.is_neighborhood(probe, p))
