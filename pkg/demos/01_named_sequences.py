"""Classical integer sequences hiding inside one full-history recurrence.

x_{n+1} = a x_n + (a+d) r x_{n-1} + (a+2d) r^2 x_{n-2} + ... + (a+nd) r^n x_0
"""
from agrec import catalog_get, catalog_names, classical_values, eval_convolution, reduce

for name in catalog_names():
    entry = catalog_get(name)
    p = entry.params
    xs = eval_convolution(p, 10)
    print(f"{name}: {p}")
    print(f"  {entry.index_map}")
    print("  x_1..x_10 =", ", ".join(map(str, xs[1:])))
    print("  textbook  =", ", ".join(map(str, classical_values(name, 10))))

# The weights for Fibonacci are (5k/2)(1/2)^k: 0, 5/4, 5/4, 15/16, ...
fib = catalog_get("fibonacci").params
print("\nFibonacci weights:", [str(fib.coefficient(k)) for k in range(6)])

# Every one of them collapses to a second-order recurrence.
s = reduce(fib)
print(f"reduced: x_(n+1) = {s.P} x_n + {s.Q} x_(n-1), x1={s.x1}, x2={s.x2}")
