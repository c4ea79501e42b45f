"""
Signed counts and closed forms
==============================

Products like prod (1 - q^k)^l have coefficients that are tiny compared with
the partition counts they are built from.  Closed forms find them directly.
"""

from pioenum import cancellative as c
from pioenum.catalan import catalan_parity_aware

# pentagonal numbers: a single isqrt decides q^n in prod (1 - q^k)
print([c.q_pm(n) for n in range(16)])
print("coefficient at 10^12:", c.q_pm(10**12))

# the square of the product via a multiplicative function of 12n + 1
print([c.glaisher_q2(n) for n in range(18)])
print("n = 58, 59:", c.glaisher_q2(58), c.glaisher_q2(59))

# the cube via triangular numbers
print([c.jacobi_q3(n) for n in range(11)])

# Ramanujan tau from the 24th power
print("tau(1..9):", c.tau_series(9))

# squares with signs: the coefficients stay small
s = c.signed_square_series("s", 3000)
print("max |s_n| for n <= 3000:", max(map(abs, s)))

# Catalan numbers are odd exactly at powers of two
print([catalan_parity_aware(n) for n in range(1, 12)])
