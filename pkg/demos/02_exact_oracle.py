"""The exhaustive oracle: exact optima on desk-scale graphs.

The backtracking solver proves optimality by exhausting the label space,
so it doubles as the ground truth that sandwiches every constructive
labeler: optimum <= constructed span <= max degree + 2.
"""

import time

from outerlabel import Graph, label_outerplanar, lambda_exact, span
from outerlabel import generators as gen
from outerlabel.exact import SearchStats

# --- tiny named graphs -------------------------------------------------------

for name, g in [
    ("single edge", Graph.from_edges([(0, 1)])),
    ("3-path", gen.gen_path(3)),
    ("triangle", gen.gen_cycle(3)),
    ("7-cycle", gen.gen_cycle(7)),
]:
    lam, witness = lambda_exact(g, 2, 8)
    print(f"{name:11s} optimum = {lam}")

# Cycles never need more than 4 = max degree + 2, and the triangle shows
# the bound is tight already at degree 2.

# --- sandwiching a constructive labeling -------------------------------------

print("\nsandwich on random outerplanar graphs:")
for seed in range(4):
    g = gen.gen_random_outerplanar(8, 0.5, seed=seed,
                                   constraints={"max_degree": 4})
    lam, _ = lambda_exact(g, 2, 6)
    f = label_outerplanar(g)
    print(f" seed {seed}: optimum {lam} <= constructed {span(f)} <= 6")

# --- search statistics and budgets -------------------------------------------

g = gen.gen_random_outerplanar(10, 0.5, seed=1)
stats = SearchStats()
t0 = time.perf_counter()
lam, _ = lambda_exact(g, 2, g.max_degree() + 2, stats=stats)
print(f"\nn={g.n}: optimum {lam} after {stats.nodes} nodes "
      f"({time.perf_counter() - t0:.3f}s)")

# A node budget gives a clean "unknown" instead of a partial answer.
lam, witness = lambda_exact(g, 2, g.max_degree() + 2, budget=5)
print("with a 5-node budget:", (lam, witness))
