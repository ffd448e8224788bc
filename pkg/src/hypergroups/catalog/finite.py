"""Finite groups from group-spec files, and their conjugacy-class hypergroups."""
from __future__ import annotations

import hashlib
import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from ..core import Hypergroup

__all__ = ['GroupSpecError', 'GroupSpec', 'FiniteGroup', 'ConjugacyHypergroup',
           'load_group_spec', 'parse_group_spec', 'generate_group', 'build_conjugacy',
           'DEFAULT_ORDER_CAP']

DEFAULT_ORDER_CAP = 100_000


class GroupSpecError(ValueError):
    """Malformed group spec, or the data do not describe a group."""


@dataclass
class GroupSpec:
    name: str
    degree: int | None = None
    generators: list[tuple[int, ...]] | None = None
    elements: list | None = None
    cayley: list[list[int]] | None = None

    def canonical(self) -> str:
        return json.dumps({'name': self.name, 'degree': self.degree,
                           'generators': [list(g) for g in self.generators] if self.generators is not None else None,
                           'elements': self.elements, 'cayley': self.cayley}, sort_keys=True)


def parse_group_spec(data: dict) -> GroupSpec:
    if not isinstance(data, dict):
        raise GroupSpecError('group spec must be a mapping')
    name = str(data.get('name', 'group'))
    has_gens = 'generators' in data
    has_table = 'cayley' in data
    if has_gens == has_table:
        raise GroupSpecError("group spec needs exactly one of 'generators' or 'cayley'")
    if has_gens:
        gens = data['generators']
        degree = data.get('degree')
        if not isinstance(gens, list) or not all(isinstance(g, list) for g in gens):
            raise GroupSpecError("'generators' must be a list of integer arrays")
        if degree is None:
            if not gens:
                raise GroupSpecError("'degree' is required when there are no generators")
            degree = len(gens[0])
        if not isinstance(degree, int) or degree < 1:
            raise GroupSpecError(f'bad degree {degree!r}')
        perms = []
        for g in gens:
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise GroupSpecError(f'{g!r} is not a permutation of 0..{degree - 1}')
            perms.append(tuple(int(i) for i in g))
        return GroupSpec(name, degree, generators=perms)
    table = data['cayley']
    if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
        raise GroupSpecError("'cayley' must be a square integer matrix")
    n = len(table)
    elements = data.get('elements', list(range(n)))
    if len(elements) != n:
        raise GroupSpecError("'elements' and 'cayley' sizes differ")
    return GroupSpec(name, data.get('degree'), elements=list(elements),
                     cayley=[[int(v) for v in row] for row in table])


def load_group_spec(path) -> GroupSpec:
    """Read a UTF-8 JSON group spec."""
    try:
        data = json.loads(Path(path).read_text(encoding='utf-8'))
    except json.JSONDecodeError as exc:
        raise GroupSpecError(f'{path}: {exc}') from exc
    return parse_group_spec(data)


@dataclass
class FiniteGroup:
    """Group given by its multiplication table on indices 0..n-1."""

    name: str
    elements: list
    table: np.ndarray
    identity: int
    generators: list[int] = field(default_factory=list)

    def __post_init__(self):
        n = len(self.elements)
        inv = np.empty(n, dtype=np.int64)
        rows, cols = np.nonzero(self.table == self.identity)
        inv[rows] = cols
        self.inverse = inv
        if not self.generators:
            self.generators = list(range(n))

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])


def _compose(a, b):
    # (a b)(i) = a(b(i))
    return tuple(a[i] for i in b)


def _validate_table(table: np.ndarray) -> int:
    n = table.shape[0]
    if table.ndim != 2 or table.shape != (n, n) or n == 0:
        raise GroupSpecError('Cayley table must be a non-empty square matrix')
    if table.min() < 0 or table.max() >= n:
        raise GroupSpecError('Cayley table entries out of range')
    full = np.arange(n)
    for axis in (0, 1):
        if not (np.sort(table, axis=axis) == (full[:, None] if axis == 0 else full[None, :])).all():
            raise GroupSpecError('Cayley table is not a Latin square')
    ids = [e for e in range(n) if (table[e] == full).all() and (table[:, e] == full).all()]
    if not ids:
        raise GroupSpecError('Cayley table has no identity')
    # (ab)c == a(bc), chunked over a to bound memory
    for start in range(0, n, max(1, 2_000_000 // (n * n))):
        a = np.arange(start, min(n, start + max(1, 2_000_000 // (n * n))))
        left = table[table[a]]                 # [a, b, c] -> (ab)c
        right = table[a][:, table]             # [a, b, c] -> a(bc)
        bad = np.argwhere(left != right)
        if bad.size:
            i, j, k = bad[0]
            raise GroupSpecError(f'Cayley table is not associative at ({a[i]}, {j}, {k})')
    return ids[0]


def generate_group(spec: GroupSpec, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Element list and multiplication table of the group a spec describes.

    Permutation generators are closed by breadth-first search from the
    identity; elements are numbered identity first, then in BFS order.
    """
    if spec.cayley is not None:
        table = np.asarray(spec.cayley, dtype=np.int64)
        if table.ndim != 2:
            raise GroupSpecError('Cayley table must be a square matrix')
        if table.shape[0] > cap:
            raise GroupSpecError(f'group order {table.shape[0]} exceeds cap {cap}')
        e = _validate_table(table)
        return FiniteGroup(spec.name, list(spec.elements), table, e)

    ident = tuple(range(spec.degree))
    gens = list(dict.fromkeys(spec.generators))
    index = {ident: 0}
    elements = [ident]
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = _compose(x, g)
            if y not in index:
                if len(elements) >= cap:
                    raise GroupSpecError(f'group order exceeds cap {cap}')
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    perms = np.array(elements, dtype=np.int64).reshape(len(elements), spec.degree)
    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        prods = perms[a][perms]               # row b -> a(b(i))
        table[a] = [index[tuple(r)] for r in prods.tolist()]
    return FiniteGroup(spec.name, elements, table, 0, [index[g] for g in gens])


class ConjugacyHypergroup(Hypergroup):
    """Conjugacy classes of a finite group, with normalised class products.

    ``(delta_C * delta_D)(E) = #{(c, d) in C x D : cd in E} / (|C| |D|)``.
    Elements are class ids 0..k-1, ordered by the smallest group element in
    each class.
    """

    def __init__(self, group: FiniteGroup):
        super().__init__()
        self.group = group
        digest = hashlib.sha256(np.ascontiguousarray(group.table).tobytes()).hexdigest()[:16]
        self.descriptor = f'conjugacy:{group.name}:{digest}'
        self.classes, self.class_of = self._classes()
        self.identity = int(self.class_of[group.identity])
        self._products = self._class_products()

    def _classes(self):
        G = self.group
        n = G.order
        class_of = np.full(n, -1, dtype=np.int64)
        found = []
        for x in range(n):
            if class_of[x] >= 0:
                continue
            orbit = {x}
            todo = [x]
            while todo:
                y = todo.pop()
                for g in G.generators:
                    z = G.mul(G.mul(g, y), int(G.inverse[g]))
                    if z not in orbit:
                        orbit.add(z)
                        todo.append(z)
            cid = len(found)
            found.append(tuple(sorted(orbit)))
            class_of[list(orbit)] = cid
        return found, class_of

    def _class_products(self):
        G = self.group
        k = len(self.classes)
        inv = G.inverse
        # counts[C][E][D] = #{c in C : c^-1 z_E in D}, z_E the least element of E
        products = {}
        for C in range(k):
            cls = np.array(self.classes[C])
            per_D: dict = {}
            for E in range(k):
                z = self.classes[E][0]
                ds = self.class_of[G.table[inv[cls], z]]
                for D, cnt in zip(*np.unique(ds, return_counts=True)):
                    per_D.setdefault(int(D), {})[E] = int(cnt)
            size_c = len(self.classes[C])
            for D, row in per_D.items():
                size_d = len(self.classes[D])
                products[(C, D)] = {E: Fraction(cnt * len(self.classes[E]), size_c * size_d)
                                    for E, cnt in row.items()}
        return products

    def contains(self, x) -> bool:
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < len(self.classes)

    def _involution(self, x):
        return int(self.class_of[self.group.inverse[self.classes[x][0]]])

    def _convolve(self, x, y):
        return dict(self._products[(x, y)])

    def closed_form_haar(self, x):
        return Fraction(len(self.classes[x]))

    def default_truncation(self):
        return list(range(len(self.classes)))

    def default_generators(self):
        return [c for c in range(len(self.classes)) if c != self.identity]

    def class_containing(self, element) -> int:
        """Class id of a group element, given by index or by label."""
        if not isinstance(element, (int, np.integer)):
            element = self.group.elements.index(element)
        return int(self.class_of[element])


def build_conjugacy(group: FiniteGroup) -> ConjugacyHypergroup:
    return ConjugacyHypergroup(group)
