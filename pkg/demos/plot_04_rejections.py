"""
Why some inputs have no greedy drawing
======================================

The decision runs in stages.  Each rejected input below stops at a
different one.
"""

from ortho_greedy import test_greedy
from ortho_greedy.fixtures import five_leaf_tree, internal_reflex, three_strips, u_shape

cases = {
    "tree with five leaves": five_leaf_tree().rep,
    "face with a reflex corner": internal_reflex().rep,
    "U-shaped outline": u_shape().rep,
    "three parallel strips": three_strips().rep,
}
for label, rep in cases.items():
    v = test_greedy(rep)
    print(f"{label:28s} {v.status:15s} stage={v.stage:10s} {v.reason}")
