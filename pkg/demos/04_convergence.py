"""Ratios of terms rho apart approach lambda1^rho."""
from agrec import catalog_get, empirical_ratio, ratio_limit

for name in ("fibonacci", "pell", "balancing", "jacobsthal"):
    p = catalog_get(name).params
    for rho in (1, 2, 3):
        exact = ratio_limit(p, rho)
        approx = empirical_ratio(p, rho, 80)
        print(f"{name:<11} rho={rho}  lambda1^rho = {str(exact.simplified()):<22}"
              f" float {float(exact):.15f}  |x_(n+rho)/x_n - limit| = {abs(approx - float(exact)):.1e}")
