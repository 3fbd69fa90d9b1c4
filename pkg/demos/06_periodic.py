"""Rotating weight banks: an empirical look at an open generalisation.

Step n uses bank n mod m.  There is no closed form here; we only look at
how fast the terms grow.
"""
from agrec import PeriodicParams, empirical_growth, eval_periodic

two = PeriodicParams(((1, 0, 1), (2, 0, 1)), 1)
print("two banks, x_0..x_8:", [str(x) for x in eval_periodic(two, 8)])
g = empirical_growth(two, 80, tol=1e-9)
print("step ratios:", [round(v, 9) for v in g.step_ratios])
print("2-step ratio:", g.period_ratio, "stabilized:", g.stabilized)

three = PeriodicParams((("1/2", 1, "1/2"), (1, -1, 1), (2, "1/3", "1/4")), 1)
g = empirical_growth(three, 90, tol=1e-9)
print("\nthree banks, 3-step ratio:", g.period_ratio, "stabilized:", g.stabilized)
