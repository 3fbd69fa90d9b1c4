"""Printed formulas checked against the direct convolution."""
from agrec import erratum_report

for f in erratum_report():
    print(f"[{f.verdict.value}] {f.claim_location}")
    print(f"    printed {f.printed_form!r} gives {f.printed_value}")
    print(f"    derived {f.derived_form!r} gives {f.derived_value}; convolution gives {f.oracle_value}")
    print("    witness:", ", ".join(f"{k}={v}" for k, v in f.witness.items()))
