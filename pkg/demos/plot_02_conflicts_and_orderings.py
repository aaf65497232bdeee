"""
Conflicts, good orderings and gap inequalities
==============================================

A representation with a conflict is not universal: some drawings of it
fail.  When its shape DAGs admit good st-orderings we can still choose
coordinates that make the drawing greedy.
"""

from pathlib import Path

from ortho_greedy import build_shape_dag, dilation, enumerate_conflicts, find_good_ordering, is_greedy
from ortho_greedy.coords import draw_with_orderings
from ortho_greedy.fixtures import conflict_example
from ortho_greedy.svg import render_svg

out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)

rep = conflict_example().rep

###############################################################################
# Two vertical paths that neither shape DAG orders horizontally: an
# x-conflict.  The responsible vertices are the facing ends of the paths.
for c in enumerate_conflicts(rep):
    print(c.axis, "conflict between nodes", c.nodes, "responsible vertices", c.responsible)

###############################################################################
# A good st-ordering of each shape DAG.
dx, dy = build_shape_dag(rep, "x"), build_shape_dag(rep, "y")
ox, oy = find_good_ordering(dx), find_good_ordering(dy)
print("x-ordering:", ox.ordering.order, "via", ox.method)
print("y-ordering:", oy.ordering.order, "via", oy.method)

###############################################################################
# Each minimal conflict turns one gap into a pair of inequalities.
res = draw_with_orderings(rep, ox.ordering.order, oy.ordering.order)
print("A =\n", res.system_x.A)
print("B =\n", res.system_x.B)
print("x-gaps:", res.gaps_x, "y-gaps:", res.gaps_y)

###############################################################################
# The result is greedy, with both checks agreeing.
report = is_greedy(res.drawing)
print("greedy:", report.is_greedy, "(routing", report.method_a, ", cells", report.method_b, ")")
print("dilation:", round(dilation(res.drawing).max_ratio, 4))
(out / "conflict.svg").write_text(render_svg(res.drawing, "conflict resolved"))
