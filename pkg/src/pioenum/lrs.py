"""Integer linear recurrence sequences: section classification and fast terms.

A sequence is given by ``f(n+k) = a_{k-1} f(n+k-1) + ... + a_0 f(n)`` and
``f(1), ..., f(k)``.  :func:`classify` splits the indices into residue
classes modulo a modulus ``m`` on which the sequence is either a rational
polynomial of the section index or grows exponentially.  :func:`eval` then
costs ``O(1)`` big-number operations on polynomial classes and
``O(log n)`` matrix products elsewhere.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .numutil import DomainError, euler_phi, lcm_all
from .poly import PolyQ, cyclotomic, lagrange, resultant, squarefree_part


class ConsistencyError(AssertionError):
    """An internal certificate failed; signals a bug, not bad input."""


@dataclass(frozen=True)
class LrsSpec:
    coeffs: Tuple[int, ...]  # a_0 .. a_{k-1}
    initials: Tuple[int, ...]  # f(1) .. f(k)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(a) for a in self.coeffs))
        object.__setattr__(self, "initials", tuple(int(v) for v in self.initials))
        if len(self.coeffs) != len(self.initials):
            raise DomainError("need as many initial values as coefficients")
        if self.coeffs and self.coeffs[0] == 0:
            raise DomainError("a_0 must be nonzero")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def recurrence_polynomial(self) -> PolyQ:
        return PolyQ([-a for a in self.coeffs] + [1])

    def terms(self, count: int, start: int = 1) -> List[int]:
        """``f(start), ..., f(start + count - 1)`` by forward iteration."""
        k = self.order
        if k == 0:
            return [0] * count
        window = list(self.initials)
        out = []
        idx = 1
        while len(out) < count:
            if idx >= start:
                out.append(window[0])
            window.append(sum(a * v for a, v in zip(self.coeffs, window)))
            window.pop(0)
            idx += 1
        return out


@dataclass(frozen=True)
class Verdict:
    """Polynomial verdict when ``poly`` is set, exponential otherwise."""

    poly: Optional[PolyQ] = None

    @property
    def is_polynomial(self) -> bool:
        return self.poly is not None

    def __str__(self) -> str:
        return f"poly {self.poly}" if self.is_polynomial else "exponential"


@dataclass(frozen=True)
class SectionClassification:
    modulus: int
    verdicts: Dict[int, Verdict]  # keyed by residue j in 1..m
    charpoly: PolyQ
    minpoly: PolyQ
    section_annihilators: Dict[int, PolyQ] = field(default_factory=dict)

    def residue(self, n: int) -> int:
        return (n - 1) % self.modulus + 1


def berlekamp_massey(seq: Sequence) -> PolyQ:
    """Monic annihilator ``x^L + c_1 x^(L-1) + ... + c_L`` of minimal degree
    for the given prefix, computed over the rationals."""
    s = [Fraction(v) for v in seq]
    C, B = [Fraction(1)], [Fraction(1)]
    L, m, b = 0, 1, Fraction(1)
    for n in range(len(s)):
        d = s[n] + sum(C[i] * s[n - i] for i in range(1, min(L, len(C) - 1) + 1))
        if d == 0:
            m += 1
            continue
        coef = d / b
        T = C[:]
        need = len(B) + m
        if len(C) < need:
            C = C + [Fraction(0)] * (need - len(C))
        for i, bi in enumerate(B):
            C[i + m] -= coef * bi
        if 2 * L <= n:
            L, B, b, m = n + 1 - L, T, d, 1
        else:
            m += 1
    C = (C + [Fraction(0)] * (L + 1))[: L + 1]
    return PolyQ(reversed(C))


def apply_shift(p: PolyQ, values: Sequence, start: int = 0) -> List:
    """Apply ``p`` as a shift operator: ``(p f)(t) = sum p_i f(t + i)``."""
    cs = p.coeffs
    d = len(cs) - 1
    return [sum(c * values[t + i] for i, c in enumerate(cs)) for t in range(start, len(values) - d)]


def minimal_polynomial(spec: LrsSpec) -> PolyQ:
    """Monic generator of the annihilator ideal of the sequence."""
    k = spec.order
    if k == 0 or not any(spec.initials):
        return PolyQ([1])
    pf = berlekamp_massey(spec.terms(2 * k))
    rec = spec.recurrence_polynomial()
    if not pf.divides(rec) or pf(0) == 0:
        raise ConsistencyError(f"minimal polynomial {pf} does not divide {rec}")
    check = spec.terms(max(4 * k, rec.degree + pf.degree + 1))
    if any(apply_shift(pf, check)):
        raise ConsistencyError(f"{pf} does not annihilate the sequence")
    return pf


def _interpolate_resultant(f: PolyQ, make_g, degree: int) -> PolyQ:
    # the resultant is a polynomial in x of known degree; sample and fit
    pts = [(x0, resultant(f, make_g(x0))) for x0 in range(1, degree + 2)]
    return lagrange(pts)


def ratio_polynomial(p: PolyQ) -> PolyQ:
    """``Res_y(p(y), p(x y))``, whose roots are the ratios of roots of ``p``."""
    k = p.degree
    return _interpolate_resultant(p, lambda x0: p.scale_arg(x0), k * k)


def power_polynomial(p: PolyQ, m: int) -> PolyQ:
    """Monic polynomial whose roots are the ``m``-th powers of the roots of ``p``."""
    k = p.degree
    if k <= 0:
        return PolyQ([1])
    ym = PolyQ([0] * m + [1])
    return _interpolate_resultant(p, lambda x0: PolyQ([x0]) - ym, k).monic()


def _cyclotomic_orders(target: PolyQ) -> List[int]:
    D = target.degree
    if D <= 0:
        return []
    # phi(d) >= sqrt(d/2), so phi(d) <= D forces d <= 2 D^2
    return [d for d in range(1, 2 * D * D + 2)
            if euler_phi(d) <= D and cyclotomic(d).divides(target)]


def ratio_unity_modulus(p: PolyQ) -> int:
    """lcm of the orders of roots of unity among the roots of ``p`` and their ratios."""
    if p.degree > 0 and p(0) == 0:
        raise DomainError("polynomial has root 0")
    if p.degree <= 0:
        return 1
    orders = _cyclotomic_orders(squarefree_part(p))
    orders += _cyclotomic_orders(squarefree_part(ratio_polynomial(p.monic())))
    return lcm_all(orders)


def classify(spec: LrsSpec) -> SectionClassification:
    k = spec.order
    pf = minimal_polynomial(spec)
    m = ratio_unity_modulus(pf)
    pm = power_polynomial(pf, m)
    e = pf.degree
    npoints = max(k, 1)
    # enough section terms for Berlekamp-Massey, its check, and the fit/verify
    sec_len = max(2 * e + 2, 2 * npoints)
    values = spec.terms(m * sec_len)
    verdicts: Dict[int, Verdict] = {}
    annihilators: Dict[int, PolyQ] = {}
    for j in range(1, m + 1):
        sec = values[j - 1::m][:sec_len]
        if e == 0 or not any(sec):
            sp = PolyQ([1])
        else:
            sp = berlekamp_massey(sec[: 2 * e])
            if not sp.divides(pm) or any(apply_shift(sp, sec)):
                raise ConsistencyError(f"section {j} mod {m}: bad annihilator {sp}")
        annihilators[j] = sp
        if sp == PolyQ([-1, 1]) ** sp.degree:
            q = lagrange([(t, sec[t - 1]) for t in range(1, npoints + 1)])
            for t in range(npoints + 1, 2 * npoints + 1):
                if q(t) != sec[t - 1]:
                    raise ConsistencyError(f"section {j} mod {m}: fit fails at t={t}")
            verdicts[j] = Verdict(q)
        else:
            verdicts[j] = Verdict()
    return SectionClassification(m, verdicts, spec.recurrence_polynomial(), pf, annihilators)


def _mat_mul(A, B):
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def companion_power_term(spec: LrsSpec, n: int) -> int:
    """``f(n)`` by binary powering of the ``k x k`` companion matrix."""
    k = spec.order
    if k == 0:
        return 0
    if n <= k:
        return spec.initials[n - 1]
    # M maps (f(t), ..., f(t+k-1)) to (f(t+1), ..., f(t+k))
    M = [[1 if c == r + 1 else 0 for c in range(k)] for r in range(k - 1)]
    M.append(list(spec.coeffs))
    e = n - 1
    R = None
    while e:
        if e & 1:
            R = M if R is None else _mat_mul(R, M)
        e >>= 1
        if e:
            M = _mat_mul(M, M)
    return sum(a * v for a, v in zip(R[0], spec.initials))


def eval(spec: LrsSpec, classification: Optional[SectionClassification], n: int) -> int:
    """``f(n)``: polynomial evaluation on polynomial classes, matrix powering otherwise."""
    if n < 1:
        raise DomainError(f"index must be >= 1, got {n}")
    if classification is None:
        classification = classify(spec)
    m = classification.modulus
    j = classification.residue(n)
    verdict = classification.verdicts[j]
    if verdict.is_polynomial:
        v = verdict.poly(Fraction(n + m - j, m))
        if v.denominator != 1:
            raise ConsistencyError(f"non-integer value {v} at n={n}")
        return int(v)
    return companion_power_term(spec, n)


def eval_by_recurrence(spec: LrsSpec, n: int) -> int:
    if n < 1:
        raise DomainError(f"index must be >= 1, got {n}")
    return spec.terms(1, start=n)[0]


# --- holonomic sequences ----------------------------------------------------

@dataclass(frozen=True)
class HolonomicSpec:
    """``f(t+k) = sum_i a_i(t) f(t+i)`` for ``t >= start`` with rational ``a_i``.

    ``coeffs[i]`` is a ``(numerator, denominator)`` pair of polynomials and
    ``initials`` holds ``f(start), ..., f(start + k - 1)``.
    """

    coeffs: Tuple[Tuple[PolyQ, PolyQ], ...]
    initials: Tuple
    start: int = 1

    @property
    def order(self) -> int:
        return len(self.coeffs)


def holonomic_eval(spec: HolonomicSpec, n: int) -> Fraction:
    """The ``n``-th term by forward iteration in exact rationals."""
    k, s = spec.order, spec.start
    if n < s:
        raise DomainError(f"index {n} precedes start {s}")
    if n < s + k:
        return Fraction(spec.initials[n - s])
    window = [Fraction(v) for v in spec.initials]
    for t in range(s, n - k + 1):
        nxt = Fraction(0)
        for (num, den), v in zip(spec.coeffs, window):
            d = den(t)
            if d == 0:
                raise DomainError(f"denominator vanishes at index t={t}")
            nxt += num(t) * v / d
        window = window[1:] + [nxt]
    return window[-1]


def catalan_holonomic_spec() -> HolonomicSpec:
    return HolonomicSpec(((PolyQ([-2, 4]), PolyQ([1, 1])),), (1,))


def lrs_from_charpoly(charpoly: PolyQ, initials: Sequence[int]) -> LrsSpec:
    """Spec with recurrence polynomial ``charpoly`` (monic, integral)."""
    p = charpoly.monic()
    if not p.is_integral():
        raise DomainError(f"{charpoly} is not integral")
    return LrsSpec(tuple(int(-c) for c in p.coeffs[:-1]), tuple(initials))
