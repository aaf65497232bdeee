"""
A generator campaign
====================

Generate many universal representations, decide each with three
independent tests, draw them and measure dilation.
"""

from fractions import Fraction

from ortho_greedy.pipeline import cmd_corpus

summary = cmd_corpus(range(1, 101), steps=20)
print(summary["instances"], "instances,", summary["passed"], "passed, failed:", summary["failed"])

worst = max(Fraction(r["dilation_squared"]) for r in summary["rows"])
print("largest dilation:", round(float(worst) ** 0.5, 4), "(bound", round(18 ** 0.5, 4), ")")
sizes = sorted(r["vertices"] for r in summary["rows"])
print("vertices: min", sizes[0], "median", sizes[len(sizes) // 2], "max", sizes[-1])
