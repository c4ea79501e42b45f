"""
Partitions into a finite set of parts
=====================================

p_A(n) is a quasipolynomial in n.  Build it by convolution, compare with the
explicit binomial sum and save it as text.
"""

from pioenum import quasipoly as qp

A = (1, 2, 3)
q = qp.bell_quasipoly(A)
print("modulus", q.modulus, "declared class", q.declared_class)
for i, poly in enumerate(q.polys, start=1):
    print(f"  n = {i} mod {q.modulus}: {poly}")

# once fitted, the value at n = 10^12 costs a handful of rational operations
print("p_A(10^12) =", qp.qp_eval(q, 10**12))
assert all(q.value(n) == qp.robins_vignat_direct(A, n) for n in range(60))

# weights on the number of parts: -q_2(n) + 2 q_3(n)
w = qp.weighted_finite_support({2: -1, 3: 2}, "Q")
print("weighted distinct-part count at n = 9:", qp.qp_eval(w, 9))

# the text form round-trips
text = q.to_text()
print(text)
assert qp.QuasiPolynomial.from_text(text) == q
