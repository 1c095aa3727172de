# Hunt counterexamples for two audited claims and print what comes back.
#
# CON.CLOPEN says a space is disconnected exactly when some nonempty
# proper open is also closed.  Both directions break here: complements
# run against the all-one set, not the carrier, so "closed" and
# "complement of an open inside the carrier" come apart.

from fstopo import search_counterexample

for ident in ("CON.CLOPEN-fwd", "CON.CLOPEN-rev", "CL.12"):
    status, witnesses = search_counterexample(ident, budget=400)
    print(f"{ident}: {status}")
    for w in witnesses[:2]:
        print(f"   [{w['case']}] {w['detail']}")
    print()

# PT.1 is a recorded oddity rather than a failure: a point whose grades
# stay at or below 1/2 belongs to a set and to its complement at once
status, witnesses = search_counterexample("PT.1", budget=50)
print("PT.1:", status)
print("  ", witnesses[0]["detail"])
