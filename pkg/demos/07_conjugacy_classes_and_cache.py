"""Class hypergroups of small finite groups, and structure-constant cache files."""
import tempfile
from pathlib import Path

from hypergroups import verify_axioms
from hypergroups.catalog import (build_conjugacy, cache_load, cache_store, generate_group,
                                 parse_group_spec)

specs = {
    'S3': {'name': 'S3', 'degree': 3, 'generators': [[1, 0, 2], [1, 2, 0]]},
    'S4': {'name': 'S4', 'degree': 4, 'generators': [[1, 0, 2, 3], [1, 2, 3, 0]]},
    'D4': {'name': 'D4', 'degree': 4, 'generators': [[1, 2, 3, 0], [0, 3, 2, 1]]},
}
for name, spec in specs.items():
    H = build_conjugacy(generate_group(parse_group_spec(spec)))
    sizes = [len(c) for c in H.classes]
    print(f'{name}: class sizes {sizes}; Haar weights {[int(H.haar(c)) for c in range(len(sizes))]}')
    print('   axioms:', 'all pass' if verify_axioms(H, H.default_truncation()).ok else 'FAIL')

S3 = build_conjugacy(generate_group(parse_group_spec(specs['S3'])))
t = S3.class_containing((1, 0, 2))
print('transpositions squared:', dict(S3.convolve(t, t)))

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / 's3.json'
    digest = cache_store(S3, path)
    print('cache hash', digest[:16], '...')
    fresh = build_conjugacy(generate_group(parse_group_spec(specs['S3'])))
    cache_load(path, fresh).install(fresh)
    print('reloaded', len(fresh.cache_items()), 'products')
