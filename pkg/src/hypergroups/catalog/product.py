"""Finite direct products of hypergroups."""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from ..core import Hypergroup

__all__ = ['ProductHypergroup', 'build_product']


class ProductHypergroup(Hypergroup):
    """Componentwise convolution on tuples ``(x_1, ..., x_k)``."""

    def __init__(self, factors):
        factors = list(factors)
        if len(factors) < 2:
            raise ValueError('a product needs at least two factors')
        super().__init__()
        self.factors = factors
        self.identity = tuple(F.identity for F in factors)
        self.descriptor = 'product(' + ','.join(F.descriptor for F in factors) + ')'

    def contains(self, x) -> bool:
        return (isinstance(x, tuple) and len(x) == len(self.factors)
                and all(F.contains(c) for F, c in zip(self.factors, x)))

    def _involution(self, x):
        return tuple(F.involution(c) for F, c in zip(self.factors, x))

    def _convolve(self, x, y):
        parts = [F.convolve(a, b).items() for F, a, b in zip(self.factors, x, y)]
        out = {}
        for combo in product(*parts):
            w = Fraction(1)
            for _, c in combo:
                w *= c
            key = tuple(z for z, _ in combo)
            out[key] = out.get(key, 0) + w
        return out

    def _coefficient(self, x, y, z):
        if not isinstance(z, tuple) or len(z) != len(self.factors):
            return Fraction(0)
        w = Fraction(1)
        for F, a, b, c in zip(self.factors, x, y, z):
            w *= F.coefficient(a, b, c)
            if not w:
                break
        return w

    def default_truncation(self, limit: int = 150):
        parts = [F.default_truncation() for F in self.factors]
        # shrink the longest factor truncation until the product is small enough
        while True:
            size = 1
            for p in parts:
                size *= len(p)
            if size <= limit:
                break
            i = max(range(len(parts)), key=lambda j: len(parts[j]))
            parts[i] = parts[i][:-1]
        return list(product(*parts))

    def default_generators(self):
        gens = []
        for i, F in enumerate(self.factors):
            for g in F.default_generators():
                x = list(self.identity)
                x[i] = g
                gens.append(tuple(x))
        return gens

    def closed_form_haar(self, x):
        w = Fraction(1)
        for F, c in zip(self.factors, x):
            h = F.closed_form_haar(c)
            if h is None:
                return None
            w *= h
        return w


def build_product(factors) -> ProductHypergroup:
    return ProductHypergroup(factors)
