"""
Counting partitions exactly
===========================

A short walk through the unsigned counters: the pentagonal recurrence,
k-part tables and a few restricted families.
"""

from pioenum import genfun, partitions

# p(n) for a whole prefix comes from one pass of the pentagonal recurrence
p = partitions.p_pentagonal(100)
print("p(0..15) =", p[:16])
print("p(100)   =", p[100])

# the sigma recurrence is slower but independent, a handy cross-check
assert partitions.p_sigma_recurrence(100) == p[100]

# rows of the k-part table sum to p(n)
table = partitions.build_pk_table(12)
print("p_k(12) for k = 1..12:", table.row(12), "sum", table.total(12))

# total number of parts over all partitions, two ways
for n in (4, 10, 30):
    a = partitions.weighted_parts_sum(lambda k: k, n, "P")
    b = partitions.total_parts_divisor_form(n, "P")
    print(f"parts over partitions of {n}: {a} (divisor form {b})")

# restricted families from a multiplicity predicate
print("multiplicities divide n:", [genfun.f_m(n) for n in range(1, 16)])
print("parts divide n:         ", [genfun.f_p(n) for n in range(1, 16)])

# distinct squares: 128 is the last n with no representation
dsq = genfun.distinct_squares_series(200)
print("no distinct-square partition:", [n for n in range(1, 201) if dsq[n] == 0][-5:])
