"""Duals of SU(2) and SU(3) as discrete commutative hypergroups.

The convolution of two irreducibles is the normalised fusion rule

    delta_a * delta_b = sum_c  m_c d_c / (d_a d_b)  delta_c

where ``a (x) b = sum_c m_c c``.  Haar weight is d_a ** 2.
"""
from __future__ import annotations

from fractions import Fraction

from ..core import Hypergroup

__all__ = ['Su2Dual', 'Su3Dual', 'build_su2_dual', 'build_su3_dual',
           'su2_dimension', 'su3_dimension', 'su3_tensor_decompose', 'su3_multiplicity']


def su2_dimension(n: int) -> int:
    return n + 1


def su3_dimension(p: int, q: int) -> int:
    """Weyl dimension of the SU(3) irrep with highest weight (p, q)."""
    return (p + 1) * (q + 1) * (p + q + 2) // 2


def _is_nat(n) -> bool:
    return isinstance(n, int) and not isinstance(n, bool) and n >= 0


def _is_weight(x) -> bool:
    return isinstance(x, tuple) and len(x) == 2 and _is_nat(x[0]) and _is_nat(x[1])


def su3_tensor_decompose(a: tuple[int, int], b: tuple[int, int]) -> dict[tuple[int, int], int]:
    """Decompose ``(p1,q1) (x) (p2,q2)`` into irreducibles.

    Littlewood-Richardson rule on the Young diagrams (p+q, q, 0), keeping
    diagrams with at most three rows and stripping full columns.  The smaller
    diagram is added to the larger one, which keeps the loops short.

    Returns ``{(p, q): multiplicity}``.
    """
    (p1, q1), (p2, q2) = a, b
    if p2 + q2 > p1 + q1:
        (p1, q1), (p2, q2) = (p2, q2), (p1, q1)
    l1, l2 = p1 + q1, q1
    m1, m2 = p2 + q2, q2
    out: dict = {}
    get = out.get
    for a3 in range(min(l2, m1) + 1):
        for a2 in range(min(l1 - l2, m1 - a3) + 1):
            a1 = m1 - a2 - a3
            # lattice word: every 2 must be preceded by enough 1s
            if m2 > a1 + a2:
                continue
            r2 = l2 + a2
            gap12 = l1 + a1 - r2
            lo = max(0, m2 - (r2 - a3))
            hi = min(a1, gap12, m2)
            # b2 twos in row 2, m2 - b2 in row 3
            q0 = r2 - a3 - m2
            for b2 in range(lo, hi + 1):
                key = (gap12 - b2, q0 + 2 * b2)
                out[key] = get(key, 0) + 1
    return out


def su3_multiplicity(a: tuple[int, int], b: tuple[int, int], c: tuple[int, int]) -> int:
    """Multiplicity of ``c`` in ``a (x) b`` without expanding the full product."""
    (p1, q1), (p2, q2) = a, b
    if p2 + q2 > p1 + q1:
        (p1, q1), (p2, q2) = (p2, q2), (p1, q1)
    l1, l2 = p1 + q1, q1
    m1, m2 = p2 + q2, q2
    p, q = c
    rest = l1 + l2 + m1 + m2 - p - 2 * q
    if rest < 0 or rest % 3:
        return 0
    n3 = rest // 3
    n1, n2 = n3 + p + q, n3 + q
    a1 = n1 - l1
    if a1 < 0:
        return 0
    count = 0
    for a3 in range(min(l2, m1 - a1, n3) + 1):
        a2 = m1 - a1 - a3
        if a2 < 0 or a2 > l1 - l2:
            continue
        b2, b3 = n2 - l2 - a2, n3 - a3
        if b2 < 0 or b3 < 0 or b2 + b3 != m2:
            continue
        if b2 > a1 or b2 > n1 - (l2 + a2) or b3 > l2 + a2 - a3 or m2 > a1 + a2:
            continue
        count += 1
    return count


class Su2Dual(Hypergroup):
    """Dual of SU(2): elements n >= 0 label the (n+1)-dimensional irreps."""

    identity = 0
    descriptor = 'su2dual'

    def contains(self, x) -> bool:
        return _is_nat(x)

    def _convolve(self, m, n):
        denom = (m + 1) * (n + 1)
        return {k: Fraction(k + 1, denom) for k in range(abs(m - n), m + n + 1, 2)}

    def _coefficient(self, x, y, z):
        if not _is_nat(z) or z < abs(x - y) or z > x + y or (x + y - z) % 2:
            return Fraction(0)
        return Fraction(z + 1, (x + 1) * (y + 1))

    def dimension(self, n) -> int:
        return su2_dimension(n)

    def default_truncation(self):
        return list(range(11))

    def default_generators(self):
        return [1]

    def closed_form_haar(self, x):
        return Fraction(su2_dimension(x) ** 2)


class Su3Dual(Hypergroup):
    """Dual of SU(3): elements are highest weights (p, q)."""

    identity = (0, 0)
    descriptor = 'su3dual'

    def contains(self, x) -> bool:
        return _is_weight(x)

    def _involution(self, x):
        return (x[1], x[0])

    def dimension(self, x) -> int:
        return su3_dimension(*x)

    def default_truncation(self, radius: int = 4):
        return [(p, k - p) for k in range(radius + 1) for p in range(k + 1)]

    def default_generators(self):
        return [(1, 0), (0, 1)]

    def _convolve(self, a, b):
        denom = su3_dimension(*a) * su3_dimension(*b)
        return {c: Fraction(m * su3_dimension(*c), denom)
                for c, m in su3_tensor_decompose(a, b).items()}

    def _coefficient(self, x, y, z):
        if not _is_weight(z):
            return Fraction(0)
        m = su3_multiplicity(x, y, z)
        if not m:
            return Fraction(0)
        return Fraction(m * su3_dimension(*z), su3_dimension(*x) * su3_dimension(*y))

    def closed_form_haar(self, x):
        return Fraction(su3_dimension(*x) ** 2)


def build_su2_dual() -> Su2Dual:
    return Su2Dual()


def build_su3_dual() -> Su3Dual:
    return Su3Dual()
