"""Rational quasipolynomials with tracked classes.

A quasipolynomial of modulus ``m`` is given by polynomials ``p_1, ..., p_m``
with ``f(n) = p_i(n)`` whenever ``n = i (mod m)`` and ``n >= threshold``.
Values below the threshold, when known, are kept in ``head`` so that the
object describes a whole sequence on ``n >= 0`` and can be convolved.

Alongside the working modulus and polynomials each object carries a declared
class ``(class_modulus, degree)``: the class promised by the closure rules.
The working modulus always divides the declared one and no polynomial
exceeds the declared degree.
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from . import genfun
from .lrs import ConsistencyError
from .numutil import DomainError, divisors, lcm_all
from .poly import PolyQ, format_coeffs, lagrange

Number = Union[int, Fraction]

# largest reduced Robins-Vignat box used as an internal cross-check
_RV_CHECK_BUDGET = 200_000


class ClassHypothesisError(ValueError):
    """Sampled values do not fit the assumed class ``(m, d)``."""


@dataclass(frozen=True)
class QuasiPolynomial:
    modulus: int
    polys: Tuple[PolyQ, ...]  # polys[i - 1] serves n = i (mod modulus)
    threshold: int = 0
    head: Optional[Tuple[Fraction, ...]] = None  # f(0..threshold-1) when known
    class_modulus: Optional[int] = None
    degree: Optional[int] = None

    def __post_init__(self):
        if self.modulus < 1 or len(self.polys) != self.modulus:
            raise DomainError("need exactly one polynomial per residue class")
        if self.threshold < 0:
            raise DomainError("threshold must be nonnegative")
        if self.head is not None:
            head = tuple(Fraction(v) for v in self.head)
            if len(head) != self.threshold:
                raise DomainError("head must list the values below the threshold")
            object.__setattr__(self, "head", head)
        elif self.threshold == 0:
            object.__setattr__(self, "head", ())
        actual = max((p.degree for p in self.polys), default=-1)
        if self.class_modulus is None:
            object.__setattr__(self, "class_modulus", self.modulus)
        if self.degree is None:
            object.__setattr__(self, "degree", max(actual, 0))
        if self.class_modulus % self.modulus:
            raise DomainError(f"modulus {self.modulus} does not divide class modulus {self.class_modulus}")
        if actual > self.degree:
            raise DomainError(f"polynomial of degree {actual} exceeds declared degree {self.degree}")

    @property
    def declared_class(self) -> Tuple[int, int]:
        return (self.class_modulus, self.degree)

    def poly_for(self, n: int) -> PolyQ:
        return self.polys[(n - 1) % self.modulus]

    def value(self, n: int) -> Fraction:
        """``f(n)`` for any ``n >= 0``, using ``head`` below the threshold."""
        if n < 0:
            raise DomainError(f"index must be nonnegative, got {n}")
        if n < self.threshold:
            if self.head is None:
                raise DomainError(f"value at n={n} below threshold {self.threshold} is unknown")
            return self.head[n]
        return Fraction(self.poly_for(n)(n))

    def values(self, count: int) -> List[Fraction]:
        return [self.value(n) for n in range(count)]

    def is_complete(self) -> bool:
        return self.head is not None

    # --- serialization -------------------------------------------------------

    def to_text(self) -> str:
        lines = [
            f"modulus {self.modulus}",
            f"threshold {self.threshold}",
            f"class {self.class_modulus} {self.degree}",
        ]
        if self.threshold:
            lines.append("head " + (" ".join(_frac_str(v) for v in self.head) if self.head is not None else "?"))
        for i, p in enumerate(self.polys, start=1):
            lines.append(f"r{i} " + (" ".join(format_coeffs(p)) if p.coeffs else "0/1"))
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "threshold": self.threshold,
            "class": [self.class_modulus, self.degree],
            "head": None if self.head is None else [_frac_str(v) for v in self.head],
            "polys": [format_coeffs(p) for p in self.polys],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: Mapping) -> "QuasiPolynomial":
        head = d.get("head")
        return cls(
            modulus=int(d["modulus"]),
            polys=tuple(PolyQ(Fraction(c) for c in cs) for cs in d["polys"]),
            threshold=int(d.get("threshold", 0)),
            head=None if head is None else tuple(Fraction(v) for v in head),
            class_modulus=int(d["class"][0]) if "class" in d else None,
            degree=int(d["class"][1]) if "class" in d else None,
        )

    @classmethod
    def from_json(cls, s: str) -> "QuasiPolynomial":
        return cls.from_dict(json.loads(s))

    @classmethod
    def from_text(cls, s: str) -> "QuasiPolynomial":
        d: Dict = {"polys": []}
        for raw in s.splitlines():
            parts = raw.split()
            if not parts:
                continue
            key, rest = parts[0], parts[1:]
            if key == "modulus":
                d["modulus"] = int(rest[0])
            elif key == "threshold":
                d["threshold"] = int(rest[0])
            elif key == "class":
                d["class"] = [int(rest[0]), int(rest[1])]
            elif key == "head":
                d["head"] = None if rest == ["?"] else rest
            elif key.startswith("r") and key[1:].isdigit():
                if int(key[1:]) != len(d["polys"]) + 1:
                    raise DomainError(f"residue lines out of order at {key}")
                d["polys"].append(rest)
            else:
                raise DomainError(f"unrecognized line {raw!r}")
        if "modulus" not in d:
            raise DomainError("missing modulus line")
        return cls.from_dict(d)


def _frac_str(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def constant(c: Number) -> QuasiPolynomial:
    return QuasiPolynomial(1, (PolyQ([c]),))


def zero() -> QuasiPolynomial:
    return constant(0)


def periodic(values: Sequence[Number]) -> QuasiPolynomial:
    """The periodic sequence with ``f(n) = values[n mod len(values)]``."""
    m = len(values)
    return QuasiPolynomial(m, tuple(PolyQ([values[i % m]]) for i in range(1, m + 1)))


def single_part(a: int) -> QuasiPolynomial:
    """Coefficients of ``1/(1 - q^a)``: 1 on multiples of ``a``, else 0."""
    if a < 1:
        raise DomainError(f"part must be positive, got {a}")
    return periodic([1] + [0] * (a - 1))


def qp_eval(q: QuasiPolynomial, n: int) -> Fraction:
    """Value at ``n``; refuses indices below the validity threshold."""
    if n < q.threshold:
        raise DomainError(f"n={n} is below the threshold {q.threshold}; compute it directly")
    return q.value(n)


def _compress(q: QuasiPolynomial) -> QuasiPolynomial:
    # smallest period of the polynomial list
    for d in divisors(q.modulus):
        if all(q.polys[i] == q.polys[i % d] for i in range(q.modulus)):
            if d == q.modulus:
                return q
            return QuasiPolynomial(d, q.polys[:d], q.threshold, q.head, q.class_modulus, q.degree)
    return q


def _fit_classes(sample: Callable[[int], Fraction], m: int, d: int, start: int,
                 error: type) -> Tuple[PolyQ, ...]:
    """Fit one polynomial per residue on ``d + 1`` points ``>= start``, check a ``(d+2)``-th."""
    polys = []
    for i in range(1, m + 1):
        first = start + (i - start) % m
        xs = [first + t * m for t in range(d + 2)]
        ys = [sample(x) for x in xs]
        p = lagrange(list(zip(xs[:-1], ys[:-1])))
        if p(xs[-1]) != ys[-1]:
            raise error(f"residue {i} mod {m}: fit on {xs[:-1]} misses n={xs[-1]}")
        polys.append(p)
    return tuple(polys)


def _scaled_ints(vals: Sequence[Fraction]) -> Tuple[List[int], int]:
    den = lcm_all(Fraction(v).denominator for v in vals)
    return [int(v * den) for v in vals], den


def _convolution_prefix(f: QuasiPolynomial, g: QuasiPolynomial, length: int) -> List[Fraction]:
    fi, fd = _scaled_ints(f.values(length))
    gi, gd = _scaled_ints(g.values(length))
    prod = genfun.series_mul(genfun.TruncatedSeries(fi), genfun.TruncatedSeries(gi))
    return [Fraction(c, fd * gd) for c in prod.coeffs]


def qp_convolve(f: QuasiPolynomial, g: QuasiPolynomial) -> QuasiPolynomial:
    """Cauchy convolution ``sum_{i<=n} f(i) g(n-i)``.

    The result has modulus ``lcm(m, m')``, degree at most ``d + d' + 1`` and
    threshold ``N + N'``; it is fitted from sampled values and checked at one
    extra point per residue class.
    """
    if not (f.is_complete() and g.is_complete()):
        raise DomainError("convolution needs every value below the threshold (head)")
    M = math.lcm(f.modulus, g.modulus)
    D = f.degree + g.degree + 1
    N = f.threshold + g.threshold
    length = N + M * (D + 2) + M
    conv = _convolution_prefix(f, g, length)
    polys = _fit_classes(conv.__getitem__, M, D, N, ConsistencyError)
    out = QuasiPolynomial(M, polys, N, tuple(conv[:N]),
                          math.lcm(f.class_modulus, g.class_modulus), D)
    return _compress(out)


def qp_combine(alpha: Number, f: QuasiPolynomial, beta: Number, g: QuasiPolynomial) -> QuasiPolynomial:
    """``alpha f + beta g`` with modulus lcm, degree max, threshold max."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    M = math.lcm(f.modulus, g.modulus)
    N = max(f.threshold, g.threshold)
    polys = tuple(f.polys[(i - 1) % f.modulus] * alpha + g.polys[(i - 1) % g.modulus] * beta
                  for i in range(1, M + 1))
    head = None
    if f.is_complete() and g.is_complete():
        head = tuple(alpha * f.value(n) + beta * g.value(n) for n in range(N))
    out = QuasiPolynomial(M, polys, N, head,
                          math.lcm(f.class_modulus, g.class_modulus), max(f.degree, g.degree))
    return _compress(out)


def interpolate_quasipoly(values: Union[Callable[[int], Number], Sequence[Number]],
                          m: int, d: int, N: int = 0) -> QuasiPolynomial:
    """Fit class ``(m, d)`` valid from ``N`` on; raises :class:`ClassHypothesisError` on a misfit."""
    if m < 1 or d < 0 or N < 0:
        raise DomainError("need m >= 1, d >= 0, N >= 0")
    if callable(values):
        sample = lambda n: Fraction(values(n))
    else:
        seq = values

        def sample(n):
            if n >= len(seq):
                raise DomainError(f"source too short: need index {n}")
            return Fraction(seq[n])
    polys = _fit_classes(sample, m, d, N, ClassHypothesisError)
    try:
        head = tuple(sample(n) for n in range(N))
    except Exception:  # the source need not be defined below N
        head = None
    return _compress(QuasiPolynomial(m, polys, N, head, m, d))


# --- partitions with parts in a finite set ------------------------------------

def _normalize_set(A: Iterable[int]) -> Tuple[int, ...]:
    A = tuple(sorted(set(int(a) for a in A)))
    if not A:
        raise DomainError("A must be nonempty")
    if A[0] < 1:
        raise DomainError("parts must be positive")
    return A


def _rv_box(A: Sequence[int]) -> int:
    D = lcm_all(A)
    return math.prod(D // a for a in A[:-1])


def robins_vignat_direct(A: Iterable[int], n: int) -> int:
    """``p_A(n)`` from the explicit binomial sum over the box ``J`` with ``D = lcm(A)``."""
    A = _normalize_set(A)
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    k = len(A)
    D = lcm_all(A)
    last = A[-1]
    total = 0
    # the last coordinate is determined by the congruence, so only the
    # first k-1 coordinates are enumerated
    for js in itertools.product(*(range(D // a) for a in A[:-1])):
        rest = n - sum(a * j for a, j in zip(A, js))
        if rest % last:
            continue
        jk = (rest // last) % (D // last)
        top = rest - last * jk
        if top < 0:
            continue
        total += math.comb(top // D + k - 1, k - 1)
    return total


def _series_check(A: Sequence[int], n: int) -> int:
    return genfun.restricted_count(genfun.parts_in(A), n)


@lru_cache(maxsize=256)
def _bell_cached(A: Tuple[int, ...]) -> QuasiPolynomial:
    q = single_part(A[0])
    for a in A[1:]:
        q = qp_convolve(q, single_part(a))
    D = lcm_all(A)
    check = robins_vignat_direct if _rv_box(A) <= _RV_CHECK_BUDGET else _series_check
    for n in (1, D + 1, 2 * D + len(A)):
        if q.value(n) != check(A, n):
            raise ConsistencyError(f"p_A quasipolynomial for A={A} disagrees at n={n}")
    return q


def bell_quasipoly(A: Iterable[int]) -> QuasiPolynomial:
    """``p_A(n)``, partitions of ``n`` with parts in the finite set ``A``, valid for all ``n >= 0``."""
    return _bell_cached(_normalize_set(A))


# --- restricted multiplicities ------------------------------------------------

def bell_general(k: int, m: int, N: int, g: Callable[[int, int], int], d: int = 0) -> QuasiPolynomial:
    """Quasipolynomial for ``[q^n] prod_{i<=k} sum_j g(i, j) q^(i j)``.

    For ``i <= k`` the map ``j -> g(i, j)`` must be a quasipolynomial of class
    ``(m, d)`` for ``j >= N``; ``d = 0`` is the eventually periodic case.  The
    declared class is ``(m k!, k(d+1) - 1)`` from ``C(k+1, 2) N`` on.  Fitting
    uses the tighter modulus ``lcm(i m)`` and degree over the parts ``i`` that
    actually occur.
    """
    if k < 1 or m < 1 or N < 0 or d < 0:
        raise DomainError("need k, m >= 1 and N, d >= 0")
    # a part whose table is 1, 0, 0, ... contributes the factor 1
    probe = N + m * (d + 1)
    active = [i for i in range(1, k + 1)
              if g(i, 0) != 1 or any(g(i, j) for j in range(1, probe + 1))]
    declared_m = m * math.factorial(k)
    declared_d = k * (d + 1) - 1
    declared_N = k * (k + 1) // 2 * N
    work_m = lcm_all(i * m for i in active)
    work_d = max(len(active) * (d + 1) - 1, 0)
    work_N = sum(i * N for i in active)
    order = max(declared_N, work_N) + work_m * (work_d + 2) + 1
    cs = [1] + [0] * order
    for i in active:
        cs = genfun.mul_sparse(cs, [(i * j, g(i, j)) for j in range(order // i + 1)])
    polys = _fit_classes(lambda n: Fraction(cs[n]), work_m, work_d, work_N, ClassHypothesisError)
    q = QuasiPolynomial(work_m, polys, declared_N, tuple(Fraction(c) for c in cs[:declared_N]),
                        declared_m, declared_d)
    return _compress(q)


# --- finite-support weights on the number of parts ----------------------------

def _indicator_zero() -> QuasiPolynomial:
    # [n == 0]: zero from n = 1 on
    return QuasiPolynomial(1, (PolyQ(),), 1, (Fraction(1),), 1, 0)


def _p_set(B: Tuple[int, ...]) -> QuasiPolynomial:
    return bell_quasipoly(B) if B else _indicator_zero()


def weighted_finite_support(g: Mapping[int, Number], variant: str = "P") -> QuasiPolynomial:
    """``sum_k g(k) p_k(n)`` (variant P) or ``sum_k g(k) q_k(n)`` (variant Q) for finitely supported ``g``.

    ``g`` maps a number of parts to its weight; zero weights are ignored.
    The result has declared class ``(s!, s-1)`` with ``s`` the largest support element.
    """
    if variant not in ("P", "Q"):
        raise DomainError(f"variant must be 'P' or 'Q', got {variant!r}")
    support = {int(k): Fraction(w) for k, w in dict(g).items() if w}
    if not support:
        return zero()
    if min(support) < 1:
        raise DomainError("support must consist of positive integers")
    s = max(support)
    coeff: Dict[Tuple[int, ...], Fraction] = {}
    for k, w in support.items():
        if variant == "P":
            # p_k = p_[k] - p_[k-1]
            for B, sign in ((tuple(range(1, k + 1)), 1), (tuple(range(1, k)), -1)):
                coeff[B] = coeff.get(B, Fraction(0)) + sign * w
        else:
            # q_k counts partitions with parts in [k] using every part
            for r in range(k + 1):
                for B in itertools.combinations(range(1, k + 1), r):
                    sign = -1 if (k - r) % 2 else 1
                    coeff[B] = coeff.get(B, Fraction(0)) + sign * w
    out = zero()
    for B, c in sorted(coeff.items()):
        if c:
            out = qp_combine(1, out, c, _p_set(B))
    return QuasiPolynomial(out.modulus, out.polys, out.threshold, out.head,
                           math.factorial(s), s - 1)
