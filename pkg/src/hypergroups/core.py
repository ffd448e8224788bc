"""Discrete hypergroups: sparse exact measures, convolution, translation, Haar weights.

All arithmetic is carried out in :class:`fractions.Fraction`.  A hypergroup is a
subclass of :class:`Hypergroup` that supplies a point-convolution provider
(``_convolve``), an involution and an identity; everything else (function
convolution, translation, Haar weights, axiom checks) is generic.
"""
from __future__ import annotations

import hashlib
import threading
from collections.abc import Iterable, Mapping
from fractions import Fraction
from typing import Any, Callable, Hashable, Iterator

__all__ = [
    'HypergroupError', 'DomainError', 'StructureError',
    'SparseMap', 'Measure', 'FiniteFunction', 'Hypergroup',
    'convolve_points', 'convolve_measures', 'involution', 'translate',
    'convolve_functions', 'tilde_function', 'haar_weight', 'support_product',
    'haar_mass', 'indicator', 'point_mass',
]

Element = Hashable


class HypergroupError(Exception):
    pass


class DomainError(HypergroupError, ValueError):
    """An element or object does not belong to the hypergroup at hand."""


class StructureError(HypergroupError):
    """The structure constants violate a hypergroup axiom."""


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError('floats are not accepted; pass int, Fraction or "p/q" strings')
    return Fraction(value)


class SparseMap(Mapping):
    """Finite map element -> nonzero rational.  Zero entries are never stored."""

    __slots__ = ('_data', 'space')

    def __init__(self, entries: Mapping | Iterable = (), space: str | None = None):
        if isinstance(entries, Mapping):
            items = entries.items()
        else:
            items = entries
        data: dict = {}
        for k, v in items:
            v = _as_fraction(v)
            if v:
                data[k] = data.get(k, 0) + v
                if not data[k]:
                    del data[k]
        self._data = data
        self.space = space

    @classmethod
    def _trusted(cls, data: dict, space: str | None):
        # caller guarantees Fraction values and no zeros
        obj = cls.__new__(cls)
        obj._data = data
        obj.space = space
        return obj

    def __getitem__(self, key):
        return self._data[key]

    def get(self, key, default=Fraction(0)):
        return self._data.get(key, default)

    def __iter__(self) -> Iterator:
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __eq__(self, other) -> bool:
        if isinstance(other, SparseMap):
            return self._data == other._data
        if isinstance(other, Mapping):
            return self._data == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._data.items()))

    def __repr__(self) -> str:
        body = ', '.join(f'{k!r}: {v}' for k, v in self.sorted_items())
        return f'{type(self).__name__}({{{body}}})'

    def sorted_items(self, key: Callable | None = None) -> list:
        return sorted(self._data.items(), key=(lambda kv: key(kv[0])) if key else _default_order)

    @property
    def support(self) -> frozenset:
        return frozenset(self._data)

    def total(self) -> Fraction:
        return sum(self._data.values(), Fraction(0))

    def scaled(self, c):
        c = _as_fraction(c)
        if not c:
            return type(self)._trusted({}, self.space)
        return type(self)._trusted({k: c * v for k, v in self._data.items()}, self.space)

    def __add__(self, other):
        if not isinstance(other, SparseMap):
            return NotImplemented
        data = dict(self._data)
        for k, v in other._data.items():
            s = data.get(k, 0) + v
            if s:
                data[k] = s
            else:
                data.pop(k, None)
        return type(self)._trusted(data, self.space or other.space)

    def __sub__(self, other):
        if not isinstance(other, SparseMap):
            return NotImplemented
        return self + other.scaled(-1)

    def __neg__(self):
        return self.scaled(-1)

    def __rmul__(self, c):
        return self.scaled(c)

    def mapped(self, fn: Callable):
        """Push the entries forward along ``fn`` (summing coinciding images)."""
        return type(self)(((fn(k), v) for k, v in self._data.items()), self.space)


def _default_order(kv):
    return _order_key(kv[0])


def _order_key(x):
    # lexicographic on payload tuples; ints sort with 1-tuples
    if isinstance(x, tuple):
        return tuple(_order_key(c) for c in x)
    return (x,)


class Measure(SparseMap):
    """Finitely supported rational measure."""

    __slots__ = ()

    def is_probability(self) -> bool:
        return all(v > 0 for v in self._data.values()) and self.total() == 1


class FiniteFunction(SparseMap):
    """Finitely supported rational-valued function."""

    __slots__ = ()

    def __call__(self, x) -> Fraction:
        return self._data.get(x, Fraction(0))

    def integral(self, H: 'Hypergroup') -> Fraction:
        """Sum of f(x) h(x)."""
        return sum((v * H.haar(x) for x, v in self._data.items()), Fraction(0))

    def norm_pow(self, H: 'Hypergroup', r: int) -> Fraction:
        """Exact ``||f||_r ** r`` in l^r(H, h)."""
        return sum((abs(v) ** r * H.haar(x) for x, v in self._data.items()), Fraction(0))


def point_mass(x, space: str | None = None) -> Measure:
    return Measure._trusted({x: Fraction(1)}, space)


def indicator(A: Iterable, space: str | None = None) -> FiniteFunction:
    return FiniteFunction._trusted({x: Fraction(1) for x in A}, space)


class Hypergroup:
    """Base class for discrete commutative hypergroups with exact structure constants.

    Subclasses implement :meth:`_convolve`, :meth:`contains` and set
    ``identity``.  The involution defaults to the identity map.
    """

    identity: Any = None
    descriptor: str = '<abstract>'
    commutative = True

    def __init__(self):
        self._cache: dict = {}
        self._haar: dict = {}
        self._lock = threading.Lock()

    # -- provider interface -------------------------------------------------
    def _convolve(self, x, y) -> dict:
        """Return {z: Fraction} for delta_x * delta_y (no zero entries)."""
        raise NotImplementedError

    def contains(self, x) -> bool:
        raise NotImplementedError

    def _involution(self, x):
        return x

    def default_truncation(self) -> list:
        """A small finite set containing e, used when no truncation is given."""
        raise NotImplementedError

    def default_generators(self) -> list:
        """A finite generating set, used for ball specs when none is given."""
        raise NotImplementedError

    def closed_form_haar(self, x) -> Fraction | None:
        """Catalogued Haar weight, if the family has one."""
        return None

    @property
    def descriptor_hash(self) -> str:
        return hashlib.sha256(self.descriptor.encode()).hexdigest()

    def order_key(self, x):
        return _order_key(x)

    # -- generic structure --------------------------------------------------
    def check(self, x):
        if not self.contains(x):
            raise DomainError(f'{x!r} is not an element of {self.descriptor}')
        return x

    def _key(self, x, y):
        try:
            swap = self.commutative and self.order_key(y) < self.order_key(x)
        except TypeError:
            # incomparable keys: at least one argument is foreign
            self.check(x)
            self.check(y)
            raise
        return (y, x) if swap else (x, y)

    def convolve(self, x, y) -> Measure:
        """delta_x * delta_y, memoized."""
        key = self._key(x, y)
        m = self._cache.get(key)
        if m is None:
            self.check(x)
            self.check(y)
            m = Measure._trusted(self._convolve(*key), self.descriptor)
            with self._lock:
                m = self._cache.setdefault(key, m)
        return m

    def peek(self, x, y) -> Mapping:
        """delta_x * delta_y from the cache if present, else computed without storing it."""
        key = self._key(x, y)
        m = self._cache.get(key)
        if m is not None:
            return m
        self.check(x)
        self.check(y)
        return self._convolve(*key)

    def coefficient(self, x, y, z) -> Fraction:
        """(delta_x * delta_y)({z}), read from the cache when present."""
        key = self._key(x, y)
        m = self._cache.get(key)
        if m is not None:
            return m.get(z)
        self.check(x)
        self.check(y)
        return self._coefficient(*key, z)

    def _coefficient(self, x, y, z) -> Fraction:
        # providers may override with a direct count
        return self.convolve(x, y).get(z)

    def involution(self, x):
        return self._involution(self.check(x))

    def haar(self, x) -> Fraction:
        """Haar weight h(x) = 1 / (delta_x * delta_x~)({e})."""
        h = self._haar.get(x)
        if h is None:
            c = self.coefficient(self.check(x), self._involution(x), self.identity)
            if c <= 0:
                raise StructureError(
                    f'e is not in supp(delta_x * delta_x~) for x={x!r}; axiom H6 fails')
            h = 1 / c
            self._haar[x] = h
        return h

    def support(self, x, y) -> frozenset:
        return self.convolve(x, y).support

    def cache_items(self) -> dict:
        return dict(self._cache)

    def install_cache(self, records: Mapping):
        """Replace the structure-constant cache by precomputed records."""
        with self._lock:
            self._cache = {self._key(x, y): m if isinstance(m, Measure) else Measure(m, self.descriptor)
                           for (x, y), m in records.items()}
            self._haar.clear()

    def clear_cache(self):
        with self._lock:
            self._cache.clear()
            self._haar.clear()

    def __repr__(self):
        return f'<{type(self).__name__} {self.descriptor}>'

    def __eq__(self, other):
        return isinstance(other, Hypergroup) and other.descriptor == self.descriptor

    def __hash__(self):
        return hash(self.descriptor)


# -- module-level operations ------------------------------------------------

def convolve_points(H: Hypergroup, x, y) -> Measure:
    return H.convolve(x, y)


def _same_space(H: Hypergroup, *objs):
    for obj in objs:
        if obj.space is not None and obj.space != H.descriptor:
            raise DomainError(f'object lives on {obj.space}, not on {H.descriptor}')


def convolve_measures(H: Hypergroup, mu: Measure, nu: Measure) -> Measure:
    """Bilinear extension of the point convolution."""
    _same_space(H, mu, nu)
    acc: dict = {}
    for x, a in mu.items():
        for y, b in nu.items():
            ab = a * b
            for z, c in H.convolve(x, y).items():
                acc[z] = acc.get(z, 0) + ab * c
    return Measure({k: v for k, v in acc.items() if v}, H.descriptor)


def involution(H: Hypergroup, x):
    return H.involution(x)


def translate(H: Hypergroup, x, f: FiniteFunction) -> FiniteFunction:
    """Left translate (L_x f)(y) = (delta_x * delta_y)(f)."""
    _same_space(H, f)
    H.check(x)
    xc = H.involution(x)
    # z in supp(delta_x * delta_y) iff y in supp(delta_x~ * delta_z)
    ys = support_product(H, [xc], f.keys())
    out = {}
    for y in ys:
        m = H.convolve(x, y)
        s = Fraction(0)
        for z, c in m.items():
            v = f.get(z)
            if v:
                s += c * v
        if s:
            out[y] = s
    return FiniteFunction._trusted(out, H.descriptor)


def convolve_functions(H: Hypergroup, f: FiniteFunction, g: FiniteFunction) -> FiniteFunction:
    """(f *_h g)(x) = sum_t f(t) (L_{t~} g)(x) h(t)."""
    _same_space(H, f, g)
    acc: dict = {}
    for t, ft in f.items():
        w = ft * H.haar(t)
        for x, v in translate(H, H.involution(t), g).items():
            acc[x] = acc.get(x, 0) + w * v
    return FiniteFunction({k: v for k, v in acc.items() if v}, H.descriptor)


def tilde_function(H: Hypergroup, f: FiniteFunction) -> FiniteFunction:
    """f~(t) = f(t~); values are real so conjugation is trivial."""
    _same_space(H, f)
    return FiniteFunction._trusted({H.involution(t): v for t, v in f.items()}, H.descriptor)


def haar_weight(H: Hypergroup, x) -> Fraction:
    return H.haar(x)


def support_product(H: Hypergroup, A: Iterable, B: Iterable) -> set:
    """A*B: union of supp(delta_x * delta_y) over x in A, y in B."""
    B = list(B)
    out: set = set()
    for x in A:
        for y in B:
            out.update(H.convolve(x, y).keys())
    return out


def haar_mass(H: Hypergroup, A: Iterable) -> Fraction:
    return sum((H.haar(x) for x in set(A)), Fraction(0))
