"""Five evaluation engines, one answer.

The direct convolution is O(n^2); the reduced recurrence, Binet closed form,
companion-matrix powers and generating-function division all go through
the second-order reduction.  All work in exact rationals.
"""
from fractions import Fraction

from agrec import AgpParams, cross_check, eigenvalues, eval_matrix_at, reduce

p = AgpParams(Fraction(-3, 4), Fraction(5, 2), Fraction(2, 3), Fraction(7))
report = cross_check(p, 40)
print(p)
print("engines:", ", ".join(report.terms), "-> agreement:", report.agreement)
print("x_40 =", report.terms["conv"][40])

eig = eigenvalues(reduce(p))
print("discriminant:", eig.delta, "class:", eig.kind.value)
print("lambda1 =", eig.lambda1.simplified())

# Complex-conjugate roots: the radical parts still cancel exactly.
q = AgpParams(1, -2, 1, 1)
print("\ncomplex pair:", eigenvalues(reduce(q)).kind.value, "agree:", cross_check(q, 30).agreement)

# Point queries far out are cheap with the matrix engine.
even_fib = AgpParams(1, 1, 1, 1)
x = eval_matrix_at(even_fib, 5000)
print("\nx_5000 for a=d=r=x0=1 (= F_10000) has", len(str(x)), "digits")
