"""Acceptance criteria, one reported PASS/FAIL line each."""
import io
import itertools
import math
import random
import time
from fractions import Fraction

from pioenum import cancellative as C
from pioenum import cli, genfun, lrs
from pioenum import partitions as P
from pioenum import quasipoly as Q
from pioenum.catalan import catalan, catalan_parity_aware
from pioenum.oracle import enumerate_partitions, oracle_diophantine, oracle_lrs, oracle_parts_in
from pioenum.poly import PolyQ, cyclotomic

X = PolyQ.x()


def _timed(f, *args):
    t0 = time.perf_counter()
    value = f(*args)
    return value, time.perf_counter() - t0


def _best_time(f, *args, repeat=5):
    return min(_timed(f, *args)[1] for _ in range(repeat))


# 1 -------------------------------------------------------------------------

def test_c1_golden_prefixes(report):
    out = io.StringIO()
    code, dt = _timed(cli.main, ["verify", "paper-prefixes"], out, io.StringIO())
    ok = code == 0 and dt < 60
    assert report("criterion 1 golden prefixes", ok, f"{out.getvalue().strip()}; {dt:.2f}s < 60s")


# 2 -------------------------------------------------------------------------

def _signed_conv(a, b, n):
    return sum(a[i] * b[n - i] for i in range(n + 1))


def test_c2_oracle_equivalence(report):
    t0 = time.perf_counter()
    N = 40
    failures = []

    def check(tag, n, got, want):
        if got != want:
            failures.append(f"{tag} n={n}: {got} != {want}")

    pk, qk = P.build_pk_table(N), P.build_qk_table(N)
    squares = {k * k for k in range(1, 7)}
    is_sq = lambda j: math.isqrt(j) ** 2 == j
    dsq, sq = genfun.distinct_squares_series(N), genfun.squares_series(N)
    fsm = genfun.square_multiplicities_series(N)
    e2, e3 = C.eta_power_coeffs(2, N), C.eta_power_coeffs(3, N)
    ppm2 = C.p_pm2_series(N)
    s_ser, t_ser = C.signed_square_series("s", N), C.signed_square_series("t", N)
    gw = {1: 3, 2: -1, 4: 2}
    wfs = {v: Q.weighted_finite_support(gw, v) for v in "PQ"}
    signed_distinct, signed_all = [], []
    for n in range(N + 1):
        lams = enumerate_partitions(n)
        dist = [lam for lam in lams if lam.has_distinct_parts()]
        mult = [lam.multiplicities for lam in lams]
        signed_distinct.append(sum((-1) ** lam.length for lam in dist))
        signed_all.append(sum((-1) ** lam.length for lam in lams))
        # restricted_count instances
        check("all", n, genfun.restricted_count(genfun.ADMIT_ALL, n), len(lams))
        if n:
            check("f_m", n, genfun.f_m(n), sum(all(n % j == 0 for j in m.values()) for m in mult))
            check("f_p", n, genfun.f_p(n), sum(all(n % i == 0 for i in m) for m in mult))
        check("f_sm", n, fsm[n], sum(all(is_sq(j) for j in m.values()) for m in mult))
        check("f_sq", n, sq[n], sum(set(m) <= squares for m in mult))
        check("f_dsq", n, dsq[n], sum(set(lam.parts) <= squares for lam in dist))
        check("mary3", n, genfun.mary_partitions(3, n), sum(set(m) <= {1, 3, 9, 27} for m in mult))
        check("f_bp", n, genfun.mary_partitions(2, n), sum(set(m) <= {1, 2, 4, 8, 16, 32} for m in mult))
        check("odd>=3", n, genfun.partitions_into_set(lambda k: 2 * k + 1, 1, [3, 5], n),
              sum(all(i % 2 and i > 1 for i in m) for m in mult))
        if n == 0:
            continue
        # tables and weighted sums
        for k in range(1, n + 1):
            check(f"p_{k}", n, pk.get(k, n), sum(lam.length == k for lam in lams))
            check(f"q_{k}", n, qk.get(k, n), sum(lam.length == k for lam in dist))
        for v, group in (("P", lams), ("Q", dist)):
            check(f"sum k {v}", n, P.weighted_parts_sum(lambda k: k, n, v), sum(lam.length for lam in group))
            check(f"sum k^2+1 {v}", n, P.weighted_parts_sum(lambda k: k * k + 1, n, v),
                  sum(lam.length**2 + 1 for lam in group))
            check(f"divisor form {v}", n, P.total_parts_divisor_form(n, v), sum(lam.length for lam in group))
            check(f"finite support {v}", n, wfs[v].value(n), sum(gw.get(lam.length, 0) for lam in group))
        check("f_cdp", n, P.compositions_distinct_parts(n), sum(math.factorial(lam.length) for lam in dist))
        # signed counts
        check("q_pm", n, C.q_pm(n), signed_distinct[n])
        check("p_pm", n, C.p_pm(n), signed_all[n])
        check("eta^2", n, e2[n], _signed_conv(signed_distinct, signed_distinct, n))
        check("glaisher", n, C.glaisher_q2(n), _signed_conv(signed_distinct, signed_distinct, n))
        check("eta^3", n, e3[n], sum(signed_distinct[i] * _signed_conv(signed_distinct, signed_distinct, n - i)
                                     for i in range(n + 1)))
        check("jacobi", n, C.jacobi_q3(n), e3[n])
        check("p_pm2", n, ppm2[n], _signed_conv(signed_all, signed_all, n))
        check("s_n", n, s_ser[n], sum((-1) ** lam.length for lam in dist if set(lam.parts) <= squares))
        check("t_n", n, t_ser[n], sum((-1) ** lam.length for lam in lams if set(lam.parts) <= squares))
    for n in range(1, 2001):
        for form in ("x+2y^2", "x^2+2y^2"):
            check(form, n, C.two_square_forms(n, form), oracle_diophantine(n, form))
    dt = time.perf_counter() - t0
    ok = not failures and dt < 300
    assert report("criterion 2 oracle equivalence", ok,
                  f"{failures[0] if failures else 'n<=40 and two-square forms n<=2000'}; {dt:.1f}s < 300s")


# 3 -------------------------------------------------------------------------

def _quasipoly_spec(rng):
    while True:
        p = (X - 1) ** rng.randint(0, 3)
        for _ in range(rng.randint(0, 3)):
            p = p * cyclotomic(rng.choice([2, 3, 4, 5, 6]))
        if 1 <= p.degree <= 6:
            return lrs.lrs_from_charpoly(p, [rng.randint(-30, 30) for _ in range(p.degree)])


def _iterate_to(spec, indices):
    want, out = set(indices), {}
    window = list(spec.initials)
    coeffs = spec.coeffs
    top = max(want)
    for n in range(1, top + 1):
        if n in want:
            out[n] = window[0]
        window.append(sum(a * v for a, v in zip(coeffs, window)))
        del window[0]
    return out


def test_c3_lrs_classifier(report):
    t0 = time.perf_counter()
    rng = random.Random(2024)
    # (a)
    spec = lrs.LrsSpec((4, 0), (0, 8))
    c = lrs.classify(spec)
    part_a = (c.modulus == 2 and c.verdicts[1].is_polynomial and c.verdicts[1].poly.is_zero()
              and not c.verdicts[2].is_polynomial)
    # (b)
    part_b = True
    for _ in range(6):
        spec = _quasipoly_spec(rng)
        c = lrs.classify(spec)
        if not all(v.is_polynomial for v in c.verdicts.values()):
            part_b = False
            break
        ns = [rng.randint(1, 10**6) for _ in range(50)]
        truth = _iterate_to(spec, ns)
        if any(lrs.eval(spec, c, n) != truth[n] for n in ns):
            part_b = False
            break
    # (c)
    part_c = True
    for _ in range(200):
        k = rng.randint(1, 4)
        coeffs = [rng.randint(-4, 4) for _ in range(k)]
        coeffs[0] = coeffs[0] or rng.choice([-1, 1])
        init = [rng.randint(-9, 9) for _ in range(k)]
        spec = lrs.LrsSpec(tuple(coeffs), tuple(init))
        c = lrs.classify(spec)
        if any(lrs.eval(spec, c, n) != oracle_lrs(coeffs, init, n) for n in range(1, 61)):
            part_c = False
            break
    dt = time.perf_counter() - t0
    ok = part_a and part_b and part_c and dt < 120
    assert report("criterion 3 LRS classifier", ok, f"a={part_a} b={part_b} c={part_c}; {dt:.1f}s < 120s")


# 4 -------------------------------------------------------------------------

def test_c4_identities(report):
    N = 3000
    e1, e2, e3 = (C.eta_power_coeffs(l, N) for l in (1, 2, 3))
    pent = all(C.q_pm(n) == e1[n] for n in range(N + 1))
    jac = all(C.jacobi_q3(n) == e3[n] for n in range(N + 1))
    gla = all(C.glaisher_q2(n) == e2[n] for n in range(N + 1))
    tau = [0] + C.tau_series(N)
    mult = all(tau[m * n] == tau[m] * tau[n]
               for m in range(1, 61) for n in range(1, 61) if math.gcd(m, n) == 1 and m * n <= N)
    hecke = all(tau[p ** (k + 2)] == tau[p] * tau[p ** (k + 1)] - p**11 * tau[p**k]
                for p in (2, 3, 5, 7) for k in range(12) if p ** (k + 2) <= N)
    ok = pent and jac and gla and mult and hecke
    assert report("criterion 4 identities n<=3000", ok,
                  f"pentagonal={pent} jacobi={jac} glaisher={gla} tau-mult={mult} tau-prime-power={hecke}")


# 5 -------------------------------------------------------------------------

def _random_qp(rng):
    m, d = rng.randint(1, 4), rng.randint(0, 3)
    polys = tuple(PolyQ([Fraction(rng.randint(-7, 7), rng.randint(1, 4)) for _ in range(d + 1)])
                  for _ in range(m))
    N = rng.randint(0, 4)
    return Q.QuasiPolynomial(m, polys, N, tuple(rng.randint(-9, 9) for _ in range(N)), m, d)


def test_c5_quasipolynomial_calculus(report):
    t0 = time.perf_counter()
    bell_ok = True
    for r in (1, 2, 3):
        for A in itertools.combinations(range(1, 7), r):
            q = Q.bell_quasipoly(A)
            for n in range(201):
                v = q.value(n)
                if not (v == Q.robins_vignat_direct(A, n) == oracle_parts_in(A, n)):
                    bell_ok = False
    rng = random.Random(99)
    conv_ok = True
    for _ in range(50):
        f, g = _random_qp(rng), _random_qp(rng)
        h = Q.qp_convolve(f, g)
        M, D = math.lcm(f.class_modulus, g.class_modulus), f.degree + g.degree + 1
        if h.declared_class != (M, D) or M % h.modulus or max(p.degree for p in h.polys) > D:
            conv_ok = False
        # extra points past the fitted range in every residue class
        start = h.threshold + M * (D + 3)
        for n in range(start, start + M):
            direct = sum(f.value(i) * g.value(n - i) for i in range(n + 1))
            if h.value(n) != direct:
                conv_ok = False
    dt = time.perf_counter() - t0
    ok = bell_ok and conv_ok and dt < 120
    assert report("criterion 5 quasipolynomial calculus", ok,
                  f"bell=RV=oracle {bell_ok}; 50 convolutions {conv_ok}; {dt:.1f}s < 120s")


# 6 -------------------------------------------------------------------------

def test_c6_performance(report):
    t_qpm = _best_time(C.q_pm, 10**12)
    spec = lrs.lrs_from_charpoly((X - 1) ** 3 * cyclotomic(3), (1, 5, -2, 7, 0))
    cls = lrs.classify(spec)
    assert all(v.is_polynomial for v in cls.verdicts.values())
    t_lrs = _best_time(lrs.eval, spec, cls, 10**9)
    t_par = _best_time(catalan_parity_aware, 2**40)
    t_cat = _best_time(catalan, 5000, repeat=3)
    t_p = _best_time(P.partition_count, 2000, repeat=1)
    checks = {
        "q_pm(1e12)": (t_qpm < 0.010, f"{t_qpm * 1e3:.3f}ms < 10ms"),
        "lrs eval 1e9": (t_lrs < 0.100, f"{t_lrs * 1e3:.3f}ms < 100ms"),
        "parity(2^40)": (t_par < 0.010, f"{t_par * 1e3:.4f}ms < 10ms"),
        "catalan(5000)/parity": (t_cat >= 100 * t_par, f"ratio {t_cat / t_par:.0f} >= 100"),
        "p(2000)": (t_p < 2.0, f"{t_p:.3f}s < 2s"),
    }
    ok = all(v[0] for v in checks.values())
    assert report("criterion 6 performance gates", ok, "; ".join(f"{k} {v[1]}" for k, v in checks.items()))


# 7 -------------------------------------------------------------------------

def test_c7_profile_exponent(report):
    out = io.StringIO()
    code = cli.main(["profile", "p", "--start", "100", "--factor", "2", "--count", "6", "--repeat", "1"],
                    out, io.StringIO())
    last = out.getvalue().strip().splitlines()[-1]
    d = float(last.split("=")[1].split()[0])
    ok = code == 0 and math.isfinite(d)
    assert report("criterion 7 profile exponent finite", ok, f"fitted d = {d:.3f} for p(n), n=100..3200")
