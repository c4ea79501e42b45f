"""Published reference values and the checks that recompute them."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from . import cancellative as canc
from . import catalan as cat
from . import genfun, lrs, numutil, oracle, partitions, quasipoly
from .poly import PolyQ
from .sequences import compute


@dataclass(frozen=True)
class PrefixCheck:
    label: str
    sequence: str
    indices: Tuple[int, ...]
    expected: Tuple[int, ...]
    param: Optional[int] = None


@dataclass(frozen=True)
class ValueCheck:
    label: str
    compute: Callable[[], object]
    expected: object


@dataclass(frozen=True)
class Mismatch:
    label: str
    index: Optional[int]
    expected: object
    got: object

    def __str__(self) -> str:
        at = "" if self.index is None else f" at n={self.index}"
        return f"{self.label}{at}: expected {self.expected}, got {self.got}"


def _span(lo: int, values: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    return tuple(range(lo, lo + len(values))), tuple(values)


def _prefix(label: str, seq: str, lo: int, values: Sequence[int], param: Optional[int] = None) -> PrefixCheck:
    idx, vals = _span(lo, values)
    return PrefixCheck(label, seq, idx, vals, param)


S_WINDOW = _prefix("s_n window 2990..3000", "s", 2990, [111, -112, 61, 46, -114, 116, -21, 11, -30, -17, 37])
S_MAX = ValueCheck("max |s_n| for n <= 3000", lambda: max(map(abs, canc.signed_square_series("s", 3000))), 319)

PREFIXES: List[PrefixCheck] = [
    _prefix("Catalan", "catalan", 1, [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]),
    _prefix("Fibonacci", "fib", 1, [1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144]),
    _prefix("p(n)", "p", 1, [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176]),
    _prefix("q(n)", "q", 1, [1, 1, 2, 2, 3, 4, 5]),
    _prefix("total parts, all partitions (A006128)", "ptotal", 1, [1, 3, 6, 12, 20, 35, 54, 86, 128, 192]),
    # the ten printed terms are the values at n = 2..11
    _prefix("total parts, distinct parts (A015723)", "qtotal", 2, [1, 3, 3, 5, 8, 10, 13, 18, 25, 30]),
    _prefix("f_cdp", "fcdp", 1, [1, 1, 3, 3, 5, 11, 13, 19, 27]),
    _prefix("f_m", "fm", 1, [1, 2, 3, 5, 4, 10, 6, 17, 14, 26, 13, 66, 19, 63, 60]),
    _prefix("f_p", "fp", 1, [1, 2, 2, 4, 2, 8, 2, 10, 5, 11, 2, 45, 2, 14, 14]),
    _prefix("f_sq", "fsq", 1, [1, 1, 1, 2, 2, 2, 2, 3, 4, 4, 4, 5, 6, 6, 6, 8]),
    _prefix("f_dsq", "fdsq", 1, [1, 0, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 1, 0]),
    PrefixCheck("f_dsq spot values", "fdsq", (25, 128), (2, 0)),
    _prefix("f_sm", "fsm", 1, [1, 1, 2, 3, 3, 5, 6, 8, 12, 12, 17, 23, 27, 32, 41, 52]),
    _prefix("f_dm (exhaustive)", "fdm", 1, [1, 2, 2, 4, 5, 7, 10, 13, 15, 21, 28, 31, 45, 55, 62]),
    PrefixCheck("f_bp(2n)", "mary", tuple(range(0, 24, 2)), (1, 2, 4, 6, 10, 14, 20, 26, 36, 46, 60, 74), 2),
    _prefix("q^{+-,2} prefix", "etapow", 0, [1, -2, -1, 2, 1, 2, -2, 0, -2, -2, 1, 0, 0, 2, 3, -2, 2, 0], 2),
    _prefix("q^{+-,2} window 58..75", "etapow", 58, [0, -2, 0, -2, 0, -2, 2, 0, -4, 0, 0, -2, -1, 2, 0, 2, 0, 0], 2),
    _prefix("G(12n+1) prefix", "glaisher2", 0, [1, -2, -1, 2, 1, 2, -2, 0, -2, -2, 1, 0, 0, 2, 3, -2, 2, 0]),
    _prefix("G(12n+1) window 58..75", "glaisher2", 58, [0, -2, 0, -2, 0, -2, 2, 0, -4, 0, 0, -2, -1, 2, 0, 2, 0, 0]),
    _prefix("p^{+-,2}", "ppm2", 0, [1, -2, 1, -2, 4, -4, 5, -6, 9, -12, 13, -16, 21, -26]),
    _prefix("tau", "tau", 1, [1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643]),
    _prefix("t_n window 32..49", "t", 32, [1, -2, 3, -4, 3, -2, 1, 0, 1, -2, 3, -4, 3, -2, 1, 0, 0, -2]),
    S_WINDOW,
]


def _classify_line(spec: lrs.LrsSpec) -> str:
    c = lrs.classify(spec)
    return f"m={c.modulus}; " + "; ".join(f"r{j}: {c.verdicts[j]}" for j in range(1, c.modulus + 1))


def _convolved_class(a: Tuple[int, int], b: Tuple[int, int]) -> Tuple[int, int]:
    def build(m: int, d: int) -> quasipoly.QuasiPolynomial:
        polys = tuple(PolyQ([r] * (d + 1)) for r in range(1, m + 1))
        return quasipoly.QuasiPolynomial(m, polys)
    return quasipoly.qp_convolve(build(*a), build(*b)).declared_class


def _tau_recurrence() -> bool:
    tau = canc.tau_series(3000)
    for p in (2, 3, 5, 7):
        k = 0
        while p ** (k + 2) <= 3000:
            lhs = tau[p ** (k + 2) - 1]
            rhs = tau[p - 1] * tau[p ** (k + 1) - 1] - p ** 11 * tau[p ** k - 1]
            if lhs != rhs:
                return False
            k += 1
    return True


_ident = lambda k: k

VALUES: List[ValueCheck] = [
    ValueCheck("factorize(697)", lambda: numutil.factorize(697), [(17, 1), (41, 1)]),
    ValueCheck("factorize(709)", lambda: numutil.factorize(709), [(709, 1)]),
    ValueCheck("exhaustive p(4)", lambda: oracle.oracle_count(4), 5),
    ValueCheck("exhaustive q(5)", lambda: oracle.oracle_count(5, lambda l: l.has_distinct_parts()), 3),
    ValueCheck("exhaustive total parts n=6", lambda: oracle.oracle_count(6, weight=lambda l: l.length), 35),
    ValueCheck("exhaustive f_dm(3)", lambda: oracle.oracle_count(3, lambda l: l.has_distinct_multiplicities()), 2),
    ValueCheck("exhaustive distinct squares 128", lambda: oracle.oracle_diophantine(128, "distinct-squares"), 0),
    ValueCheck("exhaustive distinct squares 25", lambda: oracle.oracle_diophantine(25, "distinct-squares"), 2),
    ValueCheck("minimal polynomial of the zero sequence", lambda: str(lrs.minimal_polynomial(lrs.LrsSpec((1, 0), (0, 0)))), "1"),
    ValueCheck("minimal polynomial of Fibonacci", lambda: str(lrs.minimal_polynomial(lrs.LrsSpec((1, 1), (1, 1)))), "x^2 - x - 1"),
    ValueCheck("root-of-unity modulus of x^2 - 4", lambda: lrs.ratio_unity_modulus(PolyQ([-4, 0, 1])), 2),
    ValueCheck("sections of 2^n + (-2)^n", lambda: _classify_line(lrs.LrsSpec((4, 0), (0, 8))),
               "m=2; r1: poly 0; r2: exponential"),
    ValueCheck("Fibonacci f(12)", lambda: lrs.eval(lrs.LrsSpec((1, 1), (1, 1)), None, 12), 144),
    ValueCheck("holonomic Catalan c_10", lambda: lrs.holonomic_eval(lrs.catalan_holonomic_spec(), 10), 4862),
    ValueCheck("convolution class (2,1)*(3,2)", lambda: _convolved_class((2, 1), (3, 2)), (6, 4)),
    ValueCheck("combination modulus 2 with 3",
               lambda: quasipoly.qp_combine(1, quasipoly.single_part(2), 1, quasipoly.single_part(3)).modulus, 6),
    ValueCheck("sum_k p_k(10)", lambda: partitions.build_pk_table(10).total(10), 42),
    ValueCheck("sum_k q_k(7)", lambda: partitions.build_qk_table(7).total(7), 5),
    ValueCheck("p(0..6)", lambda: partitions.p_pentagonal(6), [1, 1, 2, 3, 5, 7, 11]),
    ValueCheck("p(14)", lambda: partitions.p_pentagonal(14)[14], 135),
    ValueCheck("sigma recurrence p(4)", lambda: partitions.p_sigma_recurrence(4), 5),
    ValueCheck("sigma recurrence p(12)", lambda: partitions.p_sigma_recurrence(12), 77),
    ValueCheck("weighted sum g=1, n=8", lambda: partitions.weighted_parts_sum(lambda k: 1, 8), 22),
    ValueCheck("weighted sum g=id, n=6", lambda: partitions.weighted_parts_sum(_ident, 6), 35),
    ValueCheck("weighted sum g=id distinct, n=6", lambda: partitions.weighted_parts_sum(_ident, 6, "Q"), 8),
    ValueCheck("divisor form, n=4", lambda: partitions.total_parts_divisor_form(4), 12),
    ValueCheck("divisor form distinct, n=7", lambda: partitions.total_parts_divisor_form(7, "Q"), 10),
    ValueCheck("f_cdp(3)", lambda: partitions.compositions_distinct_parts(3), 3),
    ValueCheck("f_cdp(6)", lambda: partitions.compositions_distinct_parts(6), 11),
    ValueCheck("product to order 5, coefficient 5",
               lambda: genfun.restricted_series(genfun.ADMIT_ALL, 5)[5], 7),
    ValueCheck("admit-all n=9", lambda: genfun.restricted_count(genfun.ADMIT_ALL, 9), 30),
    ValueCheck("f_m(12)", lambda: genfun.f_m(12), 66),
    ValueCheck("f_p(12)", lambda: genfun.f_p(12), 45),
    ValueCheck("parts in squares, n=16", lambda: genfun.partitions_into_set(lambda k: k * k, 1, [1], 16), 8),
    ValueCheck("parts in N, n=11", lambda: genfun.partitions_into_set(_ident, 1, [1], 11), 56),
    ValueCheck("distinct squares n=1", lambda: genfun.distinct_squares_count(1), 1),
    ValueCheck("square multiplicities n=9", lambda: genfun.square_multiplicities_count(9), 12),
    ValueCheck("square multiplicities n=16", lambda: genfun.square_multiplicities_count(16), 52),
    ValueCheck("binary partitions n=8", lambda: genfun.mary_partitions(2, 8), 10),
    ValueCheck("binary partitions n=22", lambda: genfun.mary_partitions(2, 22), 74),
    ValueCheck("tau(9) from the 24th power", lambda: canc.eta_power_coeffs(24, 8)[8], -113643),
    ValueCheck("G(697)", lambda: canc.glaisher_q2(58), 0),
    ValueCheck("G(709)", lambda: canc.glaisher_q2(59), -2),
    ValueCheck("tau(1), tau(2), tau(6)", lambda: [canc.ramanujan_tau(n) for n in (1, 2, 6)], [1, -24, -6048]),
    ValueCheck("one sort, used at most once",
               lambda: canc.signed_sorted_series(canc.distinct_spec(1), 40), [canc.q_pm(n) for n in range(41)]),
    ValueCheck("one sort, any multiplicity",
               lambda: canc.signed_sorted_series(canc.repeated_spec(1), 40), [canc.p_pm(n) for n in range(41)]),
    ValueCheck("two sorts, used at most once",
               lambda: canc.signed_sorted_series(canc.distinct_spec(2), 17),
               [1, -2, -1, 2, 1, 2, -2, 0, -2, -2, 1, 0, 0, 2, 3, -2, 2, 0]),
    ValueCheck("tau prime-power recurrence, p in {2,3,5,7}", _tau_recurrence, True),
    S_MAX,
    ValueCheck("c_1, c_6, c_10", lambda: [cat.catalan(n) for n in (1, 6, 10)], [1, 42, 4862]),
    ValueCheck("parity-aware c_8", lambda: cat.catalan_parity_aware(8), 1),
    ValueCheck("parity-aware c_6", lambda: cat.catalan_parity_aware(6), 42),
]

SUITES: Dict[str, Tuple[List[PrefixCheck], List[ValueCheck]]] = {
    "paper-prefixes": (PREFIXES, VALUES),
    "s-window-3000": ([S_WINDOW], [S_MAX]),
}
SUITES["golden-prefixes"] = SUITES["paper-prefixes"]


def run_prefix(check: PrefixCheck) -> Iterator[Mismatch]:
    lo, hi = min(check.indices), max(check.indices)
    values = compute(check.sequence, lo, hi, check.param)
    for n, want in zip(check.indices, check.expected):
        got = values[n - lo]
        if got != want:
            yield Mismatch(check.label, n, want, got)


def run_value(check: ValueCheck) -> Iterator[Mismatch]:
    got = check.compute()
    if got != check.expected:
        yield Mismatch(check.label, None, check.expected, got)


def run_suite(name: str) -> Tuple[int, List[Mismatch]]:
    """Number of checks run and every mismatch found."""
    prefixes, values = SUITES[name]
    mismatches: List[Mismatch] = []
    for c in prefixes:
        mismatches += run_prefix(c)
    for v in values:
        mismatches += run_value(v)
    return len(prefixes) + len(values), mismatches
