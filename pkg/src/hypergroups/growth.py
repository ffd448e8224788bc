"""Generator balls, Haar growth, SU(3) closed forms and product Leptin sets."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian

from .core import Hypergroup, haar_mass, support_product
from .catalog.duals import su3_dimension
from .catalog.product import ProductHypergroup

__all__ = [
    'Balls', 'ball', 'shell', 'GrowthRow', 'GrowthReport', 'growth_series',
    'su3_shell_closed_form', 'su3_ball_closed_form', 'su3_bounds_check', 'SU3_ALPHA',
    'SU3_BETA', 'SU3_LEPTIN_D', 'SU3_GENERATORS', 'LeptinEstimate', 'd_leptin_estimate',
    'ProductLeptin', 'product_leptin_combine',
]

SU3_GENERATORS = ((1, 0), (0, 1))
SU3_ALPHA = Fraction(1, 960)
SU3_BETA = Fraction(19)
SU3_LEPTIN_D = SU3_BETA / SU3_ALPHA     # 18240
SU3_DIMENSION = 8


class Balls:
    """Incrementally grown balls F^0 = {e} subset F^1 subset ... with their shells.

    ``F^n = F^{n-1} u F^{n-1} * F``; only the newest shell needs multiplying
    because ``F^{n-2} * F`` is already inside ``F^{n-1}``.
    """

    def __init__(self, H: Hypergroup, F):
        self.H = H
        self.F = sorted(set(F), key=H.order_key)
        for x in self.F:
            H.check(x)
        e = H.identity
        self._balls = [frozenset([e])]
        self._shells = [frozenset([e])]
        self._mass = [H.haar(e)]

    def _grow(self, n):
        while len(self._balls) <= n:
            prev = self._balls[-1]
            new = support_product(self.H, self._shells[-1], self.F) - prev
            if len(self._balls) == 1:
                new = support_product(self.H, prev, self.F) - prev
            self._shells.append(frozenset(new))
            self._balls.append(prev | new)
            self._mass.append(self._mass[-1] + haar_mass(self.H, new))

    def ball(self, n: int) -> frozenset:
        self._grow(n)
        return self._balls[n]

    def shell(self, n: int) -> frozenset:
        self._grow(n)
        return self._shells[n]

    def mass(self, n: int) -> Fraction:
        self._grow(n)
        return self._mass[n]

    def radius_of(self, K, limit: int) -> int | None:
        """Smallest k <= limit with K inside F^k."""
        K = set(K)
        for k in range(limit + 1):
            if K <= self.ball(k):
                return k
        return None


def ball(H: Hypergroup, F, n: int) -> frozenset:
    return Balls(H, F).ball(n)


def shell(H: Hypergroup, F, n: int) -> frozenset:
    return Balls(H, F).shell(n)


@dataclass
class GrowthRow:
    n: int
    size: int
    mass: Fraction
    normalized: float


@dataclass
class GrowthReport:
    generator: tuple
    d: int
    rows: list[GrowthRow] = field(default_factory=list)

    def masses(self) -> list[Fraction]:
        return [r.mass for r in self.rows]


def growth_series(H: Hypergroup, F, n_max: int, d: int, balls: Balls | None = None) -> GrowthReport:
    """Exact h(F^n) for n = 0..n_max with the column h(F^n) / n^d."""
    if n_max < 1:
        raise ValueError('n_max must be at least 1')
    balls = balls or Balls(H, F)
    rep = GrowthReport(tuple(balls.F), d)
    for n in range(n_max + 1):
        m = balls.mass(n)
        norm = float(m) if n == 0 else float(m / n ** d)
        rep.rows.append(GrowthRow(n, len(balls.ball(n)), m, norm))
    return rep


def su3_shell_closed_form(k: int) -> Fraction:
    """sum_{j=0}^k (j+1)^2 (k-j+1)^2 (k+2)^2 / 4: Haar mass of {(p, q): p + q = k}."""
    return sum((Fraction((j + 1) ** 2 * (k - j + 1) ** 2 * (k + 2) ** 2, 4) for j in range(k + 1)),
               Fraction(0))


def su3_ball_closed_form(n: int) -> Fraction:
    """h(F^n) for F the two fundamental weights: the degree-8 polynomial in n."""
    poly = (3 * n ** 7 + 60 * n ** 6 + 518 * n ** 5 + 2520 * n ** 4 + 7547 * n ** 3
            + 14220 * n ** 2 + 16412 * n + 10560)
    return 1 + Fraction(n * poly, 2880)


@dataclass
class BoundsReport:
    n_max: int
    ok: bool
    minimum: tuple[int, Fraction]
    maximum: tuple[int, Fraction]
    violations: list[tuple[int, Fraction]]
    note: str = ('normalisation is h(F^n)/n^8 (dim SU(3) = 8); the printed bound '
                 'reads h(F^n)/k^n, which is taken to mean the same quantity')


def su3_bounds_check(n_max: int, masses=None) -> BoundsReport:
    """Check 1/960 < h(F^n)/n^8 <= 19 exactly for n = 1..n_max.

    ``masses[n]`` may supply enumerated values; the closed form is used otherwise.
    """
    if n_max < 1:
        raise ValueError('n_max must be at least 1')
    values = []
    for n in range(1, n_max + 1):
        m = masses[n] if masses is not None else su3_ball_closed_form(n)
        values.append((n, m / n ** SU3_DIMENSION))
    bad = [(n, v) for n, v in values if not (SU3_ALPHA < v <= SU3_BETA)]
    return BoundsReport(n_max, not bad, min(values, key=lambda t: t[1]),
                        max(values, key=lambda t: t[1]), bad)


@dataclass
class LeptinEstimate:
    K: tuple
    radius: int
    ratios: list[tuple[int, Fraction]]
    sup: Fraction
    last: Fraction
    D: Fraction | None
    within_D: bool | None


def d_leptin_estimate(H: Hypergroup, K, F, l_max: int, D=None, balls: Balls | None = None) -> LeptinEstimate:
    """h(K * F^l) / h(F^l) for l = 0..l_max: finite evidence, not a limsup."""
    balls = balls or Balls(H, F)
    K = sorted(set(K), key=H.order_key)
    k = balls.radius_of(K, l_max)
    if k is None:
        raise ValueError(f'K is not inside any ball F^k with k <= {l_max}')
    ratios = []
    for l in range(l_max + 1):
        V = balls.ball(l)
        KV = support_product(H, K, V)
        ratios.append((l, haar_mass(H, KV) / balls.mass(l)))
    sup = max(r for _, r in ratios)
    D = Fraction(D) if D is not None else None
    return LeptinEstimate(tuple(K), k, ratios, sup, ratios[-1][1], D,
                          None if D is None else sup <= D)


@dataclass
class ProductLeptin:
    K: list
    V: list
    ratio: Fraction
    factor_ratios: list[Fraction]
    bound: Fraction
    ok: bool


def product_leptin_combine(H: ProductHypergroup, parts) -> ProductLeptin:
    """Leptin ratio of K = prod K_i, V = prod V_i against the product of factor ratios.

    ``parts`` is a list of (K_i, V_i) aligned with ``H.factors``.
    """
    parts = list(parts)
    if not isinstance(H, ProductHypergroup) or len(parts) != len(H.factors):
        raise ValueError('need one (K_i, V_i) per factor of a product hypergroup')
    factor_ratios = []
    for F, (Ki, Vi) in zip(H.factors, parts):
        if not Vi:
            raise ValueError('every V_i must be nonempty')
        factor_ratios.append(haar_mass(F, support_product(F, Ki, Vi)) / haar_mass(F, Vi))
    K = list(cartesian(*[sorted(Ki, key=F.order_key) for F, (Ki, _) in zip(H.factors, parts)]))
    V = list(cartesian(*[sorted(Vi, key=F.order_key) for F, (_, Vi) in zip(H.factors, parts)]))
    ratio = haar_mass(H, support_product(H, K, V)) / haar_mass(H, V)
    bound = Fraction(1)
    for r in factor_ratios:
        bound *= r
    return ProductLeptin(K, V, ratio, factor_ratios, bound, ratio <= bound)
