"""d-variable Chebyshev polynomial hypergroups on N_0^d."""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from ..core import Hypergroup

__all__ = ['Chebyshev', 'build_chebyshev']


class Chebyshev(Hypergroup):
    """Products of Chebyshev polynomials of the first kind.

    ``delta_n * delta_m = 2**-d  sum over signs  delta_(|n_1 +- m_1|, ..., |n_d +- m_d|)``,
    coinciding targets accumulate.  For ``d == 1`` elements are plain ints,
    otherwise d-tuples of ints.
    """

    def __init__(self, d: int = 1):
        if not isinstance(d, int) or d < 1:
            raise ValueError(f'number of variables must be a positive integer, got {d!r}')
        super().__init__()
        self.d = d
        self.identity = 0 if d == 1 else (0,) * d
        self.descriptor = f'chebyshev:{d}'

    def contains(self, x) -> bool:
        if self.d == 1:
            return isinstance(x, int) and not isinstance(x, bool) and x >= 0
        return (isinstance(x, tuple) and len(x) == self.d
                and all(isinstance(c, int) and not isinstance(c, bool) and c >= 0 for c in x))

    def _convolve(self, x, y):
        if self.d == 1:
            x, y = (x,), (y,)
        w = Fraction(1, 2 ** self.d)
        out: dict = {}
        for z in product(*[(a + b, abs(a - b)) for a, b in zip(x, y)]):
            key = z[0] if self.d == 1 else z
            out[key] = out.get(key, 0) + w
        return out

    def box(self, n: int) -> list:
        """All elements with every coordinate in 0..n."""
        if self.d == 1:
            return list(range(n + 1))
        return list(product(range(n + 1), repeat=self.d))

    def default_truncation(self):
        return self.box(4)

    def default_generators(self):
        if self.d == 1:
            return [1]
        return [tuple(int(i == j) for j in range(self.d)) for i in range(self.d)]

    def closed_form_haar(self, x):
        coords = (x,) if self.d == 1 else x
        return Fraction(2 ** sum(1 for c in coords if c))


def build_chebyshev(d: int) -> Chebyshev:
    return Chebyshev(d)
