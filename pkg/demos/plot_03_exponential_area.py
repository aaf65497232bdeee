"""
Exponential area
================

A staircase whose conflicts nest forces every greedy drawing to double a
gap at each step, so the width grows like ``2**(q-1)``.
"""

from ortho_greedy import build_shape_dag, find_good_ordering
from ortho_greedy.coords import draw_with_orderings
from ortho_greedy.fixtures import exponential_instance, exponential_labels
from ortho_greedy.ordering import good_orderings

for q in (2, 4, 8, 12, 16):
    rep = exponential_instance(q).rep
    dx, dy = build_shape_dag(rep, "x"), build_shape_dag(rep, "y")
    ox, oy = find_good_ordering(dx), find_good_ordering(dy)
    d = draw_with_orderings(rep, ox.ordering.order, oy.ordering.order).drawing
    ids = {name: i for i, name in enumerate(exponential_labels(q))}
    far = d.x[ids["v1"]] - d.x[ids["z1"]]
    near = d.x[ids["v1"]] - d.x[ids[f"z{q}"]]
    print(f"q={q:2d}  width={d.width:6d}  2**(q-1)={2 ** (q - 1):6d}  ratio={far / near:.1f}")

###############################################################################
# For small q only two orderings of the x-DAG are good.
dx = build_shape_dag(exponential_instance(4).rep, "x")
for order in good_orderings(dx):
    print("good:", order)
