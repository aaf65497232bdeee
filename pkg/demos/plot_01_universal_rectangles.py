"""
Universal greedy representations
================================

Some rectilinear representations are greedy however they are drawn.  We
start from a single rectangle, grow it with random primitives, and check
that every drawing we try stays greedy.
"""

import random
from pathlib import Path

from ortho_greedy import draw_universal_min_area, generate_universal, is_greedy, test_universal
from ortho_greedy.repgraph import Drawing
from ortho_greedy.shapedags import build_shape_dag
from ortho_greedy.svg import render_svg

out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)

###############################################################################
# A generated representation.  Both shape DAGs are single paths, which is
# what makes it universal.
rep = generate_universal(seed=3, steps=10)
verdict = test_universal(rep)
print("vertices:", rep.n, "edges:", rep.m)
print("universal:", verdict.is_universal)
print("x-path:", verdict.hamiltonian_x)
print("y-path:", verdict.hamiltonian_y)

###############################################################################
# The smallest drawing puts each node at its index on the path.
d = draw_universal_min_area(rep, verdict)
print("width x height:", d.width, "x", d.height)
(out / "universal.svg").write_text(render_svg(d, "universal greedy"))

###############################################################################
# Any coordinates that keep the two node orders give another drawing of the
# same representation.  All of them are greedy.
dx, dy = build_shape_dag(rep, "x"), build_shape_dag(rep, "y")
rng = random.Random(0)
for trial in range(5):
    cx = {}
    acc = 0
    for a in verdict.hamiltonian_x:
        acc += rng.randint(1, 5)
        cx[a] = acc
    cy = {}
    acc = 0
    for a in verdict.hamiltonian_y:
        acc += rng.randint(1, 5)
        cy[a] = acc
    e = Drawing(rep, [cx[dx.node_of[v]] for v in range(rep.n)], [cy[dy.node_of[v]] for v in range(rep.n)])
    print(f"stretch {trial}: {e.width} x {e.height}, greedy = {is_greedy(e).is_greedy}")
