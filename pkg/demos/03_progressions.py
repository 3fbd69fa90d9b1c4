"""Partial sums of arithmetic-geometric and geometric-arithmetic progressions."""
from fractions import Fraction

from agrec import agp_sum, agp_sum_limit, gap_sum, rec1_term, rec2_term
from agrec.progressions import ProgressionSpec

half = Fraction(1, 2)

# sum_{k=0}^n (k+1)/2^k -> 4
for n in (2, 5, 10, 20, 40):
    s = agp_sum(1, 1, half, n)
    print(f"n={n:2d}  S_n={s}  gap to limit={float(agp_sum_limit(1, 1, half) - s):.3e}")

# first n terms of a r^k + k d
print("\ngap_sum(1, 2, 3, 4) =", gap_sum(1, 2, 3, 4))

# first-order recurrences and their r = 1 fallback
print("rec1 (a=1, r=2, d=3) a_0..a_5:", [str(rec1_term(1, 2, 3, n)) for n in range(6)])
print("rec2 (a=1, r=2, d=3) a_0..a_5:", [str(rec2_term(1, 2, 3, n)) for n in range(6)])
print("rec1 with r=1:", [str(rec1_term(7, 1, 2, n)) for n in range(6)])

summary = ProgressionSpec("agp", 2, -1, Fraction(3, 2)).summary(6)
print("\nterms:", ", ".join(map(str, summary.terms)))
print("direct sum", summary.direct, "closed form", summary.closed, "consistent:", summary.consistent)
