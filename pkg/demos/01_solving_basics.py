"""Solving instances: files, decisions, witnesses, and the brute-force check.

A walk through the core workflow: parse an instance document, decide it
with the dynamic program, verify the returned labeling, and cross-check
the decision against exhaustive search.
"""

from gltc import (
    brute_force_solve,
    check_witness,
    parse_instance,
    serialize_instance,
    solve,
)

# Two transmitters (vertices) that interfere: their frequencies must differ
# by more than 1. Each may use frequencies {1, 2, 3}.
DOCUMENT = """\
gltc 2 1
v 1 1 2 3
v 2 1 2 3
e 1 2 0 1
"""

inst = parse_instance(DOCUMENT)
print("instance:")
print(serialize_instance(inst))

result = solve(inst)
print("decision:", "YES" if result.decision else "NO")
print("witness:", result.witness)
assert check_witness(inst, result.witness), "the returned labeling must be proper"

# The brute-force reference explores all 9 labelings and must agree.
oracle_decision, oracle_witness = brute_force_solve(inst)
print("brute force agrees:", oracle_decision == result.decision)

# Shrinking both lists to {1, 2} leaves no pair at distance > 1: a NO.
tight = parse_instance("gltc 2 1\nv 1 1 2\nv 2 1 2\ne 1 2 0 1\n")
print("tight variant decision:", "YES" if solve(tight).decision else "NO")

# Disconnected instances are decided component by component; the answer is
# YES exactly when every component is.
two_parts = parse_instance(
    "gltc 5 3\n"
    "v 1 1 2\nv 2 1 2\nv 3 1 2\nv 4 1 2\nv 5 1 2\n"
    "e 1 2 0\ne 3 4 0\ne 4 5 0\n"
)
both = solve(two_parts)
print("disconnected instance:", "YES" if both.decision else "NO", both.witness)
