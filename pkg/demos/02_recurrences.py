"""
Linear recurrences far out
==========================

Classify a recurrence into sections modulo m, then evaluate it at huge
indices without iterating.
"""

import time

from pioenum import lrs
from pioenum.poly import PolyQ, cyclotomic

x = PolyQ.x()

# 2^n + (-2)^n vanishes on odd n and grows on even n
spec = lrs.LrsSpec((4, 0), (0, 8))
cls = lrs.classify(spec)
print("modulus", cls.modulus, {j: str(v) for j, v in cls.verdicts.items()})
print("f(10^9 + 1) =", lrs.eval(spec, cls, 10**9 + 1))

# a quasipolynomial: roots 1 (triple) and the primitive cube roots of unity
spec = lrs.lrs_from_charpoly((x - 1) ** 3 * cyclotomic(3), (1, 5, -2, 7, 0))
cls = lrs.classify(spec)
for j, v in cls.verdicts.items():
    print(f"  residue {j} mod {cls.modulus}: {v}")
t0 = time.perf_counter()
print("f(10^18) =", lrs.eval(spec, cls, 10**18), f"in {1e6 * (time.perf_counter() - t0):.0f} us")

# Fibonacci: exponential, so eval falls back to companion-matrix powering
fib = lrs.LrsSpec((1, 1), (1, 1))
value = lrs.eval(fib, None, 10**5)
print("F(10^5) has", value.bit_length(), "bits")
