"""Structure-constant cache files.

Format: UTF-8 JSON with a header (format tag, version, descriptor, sha256 of
the descriptor) and records ``[x, y, [[z, num, den], ...]]`` sorted by
``(x, y)`` and ``z``.  Element tuples are stored as JSON arrays.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from ..core import Hypergroup, Measure, _order_key

__all__ = ['CacheError', 'StructureCache', 'cache_store', 'cache_load', 'CACHE_FORMAT', 'CACHE_VERSION']

CACHE_FORMAT = 'hypergroup-structure-cache'
CACHE_VERSION = 1


class CacheError(Exception):
    """Cache file is corrupt, from another version, or for another hypergroup."""


@dataclass
class StructureCache:
    descriptor: str
    hash: str
    version: int
    records: dict

    def install(self, H: Hypergroup):
        if H.descriptor_hash != self.hash:
            raise CacheError(f'cache is for {self.descriptor!r}, not {H.descriptor!r}')
        H.install_cache(self.records)


def _encode(x):
    if isinstance(x, tuple):
        return [_encode(c) for c in x]
    return x


def _decode(x):
    if isinstance(x, list):
        return tuple(_decode(c) for c in x)
    if isinstance(x, int) and not isinstance(x, bool):
        return x
    raise CacheError(f'bad element payload {x!r}')


def _digest(descriptor: str) -> str:
    return hashlib.sha256(descriptor.encode()).hexdigest()


def cache_store(H: Hypergroup, path) -> str:
    """Write the hypergroup's memoized structure constants; returns the descriptor hash."""
    items = H.cache_items()
    if not items:
        raise CacheError('nothing to store: the structure-constant cache is empty')
    records = []
    for (x, y) in sorted(items, key=lambda k: (_order_key(k[0]), _order_key(k[1]))):
        m = items[(x, y)]
        records.append([_encode(x), _encode(y),
                        [[_encode(z), v.numerator, v.denominator] for z, v in m.sorted_items()]])
    doc = {'format': CACHE_FORMAT, 'version': CACHE_VERSION, 'descriptor': H.descriptor,
           'hash': H.descriptor_hash, 'records': records}
    Path(path).write_text(json.dumps(doc, separators=(',', ':')) + '\n', encoding='utf-8')
    return H.descriptor_hash


def cache_load(path, hypergroup: Hypergroup | None = None) -> StructureCache:
    """Read a cache file.  With ``hypergroup`` given, the descriptor hash must match it."""
    try:
        doc = json.loads(Path(path).read_text(encoding='utf-8'))
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise CacheError(f'corrupt cache file {path}: {exc}') from exc
    if not isinstance(doc, dict) or doc.get('format') != CACHE_FORMAT:
        raise CacheError(f'{path} is not a structure cache')
    if doc.get('version') != CACHE_VERSION:
        raise CacheError(f'cache version {doc.get("version")!r} != {CACHE_VERSION}')
    descriptor, digest = doc.get('descriptor'), doc.get('hash')
    if not isinstance(descriptor, str) or digest != _digest(descriptor):
        raise CacheError('descriptor hash mismatch')
    if hypergroup is not None and digest != hypergroup.descriptor_hash:
        raise CacheError(f'cache is for {descriptor!r}, not {hypergroup.descriptor!r}')
    records = {}
    try:
        for x, y, entries in doc['records']:
            records[(_decode(x), _decode(y))] = Measure(
                {_decode(z): Fraction(num, den) for z, num, den in entries}, descriptor)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise CacheError(f'corrupt cache records: {exc}') from exc
    return StructureCache(descriptor, digest, CACHE_VERSION, records)
