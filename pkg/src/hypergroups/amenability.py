"""Leptin / Folner / strong Folner ratios, Reiter deficiencies, approximate-identity
certificates and the Haar level-set diagnostic.

Sets are finite collections of elements; ``K*V`` is always the set-level
support product.  Every ratio is an exact :class:`~fractions.Fraction`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .core import (FiniteFunction, Hypergroup, HypergroupError, convolve_functions, haar_mass,
                   indicator, support_product, tilde_function, translate)
from .growth import Balls

__all__ = [
    'ParameterError', 'CertificateError', 'RatioReport', 'leptin_ratio', 'folner_ratio',
    'strong_folner_ratio', 'SfLComparison', 'check_sf_implies_l', 'check_f_implies_sf',
    'LeptinSearchResult', 'leptin_search', 'SummingReport', 'summing_sequence_check',
    'ReiterWitness', 'ReiterReport', 'folner_to_reiter', 'reiter_deficiency',
    'BaiCertificate', 'bai_certificate', 'LevelSetReport', 'haar_level_set',
]


class ParameterError(HypergroupError, ValueError):
    pass


class CertificateError(HypergroupError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def _nonempty(H: Hypergroup, V) -> frozenset:
    V = frozenset(V)
    if not V:
        raise ParameterError('V must be nonempty')
    for x in V:
        H.check(x)
    return V


@dataclass
class RatioReport:
    kind: str
    K: tuple
    V: frozenset
    value: Fraction

    @property
    def decimal(self) -> float:
        return float(self.value)

    def __str__(self):
        return f'{self.kind}: {self.value} ~ {self.decimal:.6g}'


def leptin_ratio(H: Hypergroup, K, V) -> RatioReport:
    """h(K*V) / h(V)."""
    V = _nonempty(H, V)
    KV = support_product(H, K, V)
    return RatioReport('leptin', tuple(K), V, haar_mass(H, KV) / haar_mass(H, V))


def folner_ratio(H: Hypergroup, x, V) -> RatioReport:
    """h(x*V ^ V) / h(V), ^ the symmetric difference."""
    V = _nonempty(H, V)
    xV = support_product(H, [x], V)
    return RatioReport('folner-pointwise', (x,), V, haar_mass(H, xV ^ V) / haar_mass(H, V))


def strong_folner_ratio(H: Hypergroup, K, V) -> RatioReport:
    """h(K*V ^ V) / h(V)."""
    V = _nonempty(H, V)
    KV = support_product(H, K, V)
    return RatioReport('strong-folner', tuple(K), V, haar_mass(H, KV ^ V) / haar_mass(H, V))


@dataclass
class SfLComparison:
    leptin_minus_one: Fraction
    strong_folner: Fraction

    @property
    def holds(self) -> bool:
        return self.leptin_minus_one <= self.strong_folner


def check_sf_implies_l(H: Hypergroup, K, V) -> SfLComparison:
    """leptin - 1 <= strong Folner ratio (always true; a failure means broken data)."""
    cmp = SfLComparison(leptin_ratio(H, K, V).value - 1, strong_folner_ratio(H, K, V).value)
    if not cmp.holds:
        raise CertificateError(f'leptin - 1 = {cmp.leptin_minus_one} exceeds strong Folner '
                               f'ratio {cmp.strong_folner}', (tuple(K), tuple(V)))
    return cmp


def check_f_implies_sf(H: Hypergroup, K, V) -> tuple[Fraction, Fraction]:
    """(strong Folner ratio of K, sum over x in K of the pointwise Folner ratios)."""
    sf = strong_folner_ratio(H, K, V).value
    total = sum((folner_ratio(H, x, V).value for x in set(K)), Fraction(0))
    return sf, total


@dataclass
class LeptinSearchResult:
    index: int
    V: frozenset
    ratio: Fraction
    D: Fraction | None
    certified: bool
    tried: int


def leptin_search(H: Hypergroup, K, family: Iterable | Callable | None = None, budget: int = 50,
                  D=None, eps=0, generators=None) -> LeptinSearchResult:
    """Smallest observed h(K*V)/h(V) over a candidate family.

    The default family is the balls F^1, ..., F^budget with F = ``generators``
    (default: the non-identity elements of K and their involutes).  Among
    equal ratios the earliest candidate wins.
    """
    K = list(K)
    if family is None:
        F = generators
        if F is None:
            F = {y for x in K for y in (x, H.involution(x))} - {H.identity}
        balls = Balls(H, F)
        candidates = ((n, balls.ball(n)) for n in range(1, budget + 1))
    elif callable(family):
        candidates = ((n, family(n)) for n in range(1, budget + 1))
    else:
        candidates = ((n, V) for n, V in zip(range(1, budget + 1), family))
    best = None
    tried = 0
    for n, V in candidates:
        tried += 1
        r = leptin_ratio(H, K, V).value
        if best is None or r < best[2]:
            best = (n, frozenset(V), r)
    if best is None:
        raise ParameterError('empty candidate family')
    D = None if D is None else Fraction(D)
    ok = D is not None and best[2] < D + Fraction(eps)
    return LeptinSearchResult(best[0], best[1], best[2], D, ok, tried)


@dataclass
class SummingReport:
    ratios: dict = field(default_factory=dict)      # k -> [(n, ratio)]
    nesting_violations: list = field(default_factory=list)

    def last(self, k) -> Fraction:
        return self.ratios[k][-1][1]


def summing_sequence_check(H: Hypergroup, A, ks, n_max: int) -> SummingReport:
    """Ratios h(k*A_n ^ A_n)/h(A_n) for n = 0..n_max; ``A`` is a callable or a sequence."""
    get = A if callable(A) else (lambda n: A[n])
    sets = [frozenset(get(n)) for n in range(n_max + 1)]
    rep = SummingReport()
    for n in range(n_max):
        if not sets[n] <= sets[n + 1]:
            rep.nesting_violations.append(n)
    for k in ks:
        rep.ratios[k] = [(n, folner_ratio(H, k, sets[n]).value) for n in range(n_max + 1)]
    return rep


@dataclass
class ReiterWitness:
    """f = sqrt(scale_sq) * base, kept exact through the square of the scale."""

    base: FiniteFunction
    scale_sq: Fraction = Fraction(1)

    def value_sq(self, x) -> Fraction:
        return self.scale_sq * self.base(x) ** 2

    def norm_pow(self, H: Hypergroup, r: int) -> Fraction:
        """||f||_r ** r; for r = 1 the scale must be a rational square."""
        if r == 2:
            return self.scale_sq * self.base.norm_pow(H, 2)
        return _rational_sqrt(self.scale_sq) * self.base.norm_pow(H, 1)


def _rational_sqrt(q: Fraction) -> Fraction:
    n, d = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if n * n != q.numerator or d * d != q.denominator:
        raise ParameterError(f'{q} is not the square of a rational')
    return Fraction(n, d)


def folner_to_reiter(H: Hypergroup, V, r: int) -> ReiterWitness:
    """Normalised indicator 1_V / h(V)^(1/r) in l^r(H, h)."""
    V = _nonempty(H, V)
    hV = haar_mass(H, V)
    if r == 1:
        return ReiterWitness(indicator(V, H.descriptor).scaled(1 / hV))
    if r == 2:
        return ReiterWitness(indicator(V, H.descriptor), 1 / hV)
    raise ParameterError('r must be 1 or 2')


@dataclass
class ReiterReport:
    r: int
    E: tuple
    f: ReiterWitness
    per_element: dict          # x -> ||L_x f - f||_r ** r
    deficiency_pow: Fraction   # max over E of ||L_x f - f||_r ** r

    @property
    def deficiency(self) -> float:
        return float(self.deficiency_pow) ** (1 / self.r)


def reiter_deficiency(H: Hypergroup, f, E, r: int) -> ReiterReport:
    """max over x in E of ||L_x f - f||_r, reported exactly as its r-th power."""
    if r not in (1, 2):
        raise ParameterError('r must be 1 or 2')
    if isinstance(f, FiniteFunction):
        f = ReiterWitness(f)
    if any(v < 0 for v in f.base.values()):
        raise ParameterError('f must be nonnegative')
    if f.norm_pow(H, r) != 1:
        raise ParameterError(f'f is not normalised: ||f||_{r}^{r} = {f.norm_pow(H, r)}')
    E = tuple(E)
    if not E:
        raise ParameterError('E must be nonempty')
    per = {}
    for x in E:
        diff = translate(H, x, f.base) - f.base
        if r == 1:
            per[x] = _rational_sqrt(f.scale_sq) * diff.norm_pow(H, 1)
        else:
            per[x] = f.scale_sq * diff.norm_pow(H, 2)
    return ReiterReport(r, E, f, per, max(per.values()))


@dataclass
class BaiCertificate:
    K: frozenset
    V: frozenset
    u: FiniteFunction
    bound_sq: Fraction      # ||u||_A(H) <= sqrt(bound_sq) = sqrt(h(K*V)/h(V))

    @property
    def bound(self) -> float:
        return math.sqrt(self.bound_sq)


def bai_certificate(H: Hypergroup, K, V) -> BaiCertificate:
    """u = h(V)^-1 (1_{K*V} *_h 1~_V): equals 1 on K, is >= 0, and lives on K*V*V~."""
    V = _nonempty(H, V)
    K = frozenset(K)
    KV = support_product(H, K, V)
    hV = haar_mass(H, V)
    one_V = indicator(V, H.descriptor)
    u = convolve_functions(H, indicator(KV, H.descriptor), tilde_function(H, one_V)).scaled(1 / hV)
    for x, v in u.items():
        if v < 0:
            raise CertificateError(f'u({x!r}) = {v} < 0', x)
    for x in K:
        if u(x) != 1:
            raise CertificateError(f'u({x!r}) = {u(x)} != 1 on K', x)
    allowed = support_product(H, KV, [H.involution(v) for v in V])
    stray = [x for x in u if x not in allowed]
    if stray:
        raise CertificateError(f'u is supported outside K*V*V~ at {stray[0]!r}', stray[0])
    return BaiCertificate(K, V, u, haar_mass(H, KV) / hV)


@dataclass
class LevelSetReport:
    M: Fraction
    count: int
    size: int
    elements: list
    max_haar: Fraction
    counts: list            # (truncation size, count) over the nested truncations
    verdict: str

    @property
    def all_below(self) -> bool:
        return self.count == self.size


def haar_level_set(H: Hypergroup, M, T, nested: int = 4) -> LevelSetReport:
    """Count {x in T : h(x) <= M} and how the count evolves over nested prefixes of T.

    Verdicts: ``all-below`` (every element of T has h <= M: bounded-Haar
    evidence), ``saturating`` (the count stopped changing over the second half
    of T: finite level set) or ``growing``.  Evidence only, not a theorem.
    """
    M = Fraction(M)
    T = sorted(set(T), key=H.order_key)
    weights = [H.haar(x) for x in T]
    below = [x for x, w in zip(T, weights) if w <= M]
    counts = []
    for i in range(1, nested + 1):
        k = len(T) * i // nested
        counts.append((k, sum(1 for w in weights[:k] if w <= M)))
    if len(below) == len(T):
        verdict = 'all-below'
    elif len(counts) >= 2 and counts[-1][1] == counts[len(counts) // 2 - 1][1]:
        verdict = 'saturating'
    else:
        verdict = 'growing'
    return LevelSetReport(M, len(below), len(T), below, max(weights), counts, verdict)
