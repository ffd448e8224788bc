"""Exact axiom checks on truncations, and what a single bad structure constant does."""
import time
from fractions import Fraction

from hypergroups import verify_axioms
from hypergroups.catalog import build_chebyshev, build_su2_dual, build_su3_dual

su3 = build_su3_dual()
t = time.perf_counter()
print(verify_axioms(su3, su3.default_truncation(6)))
print(f'({time.perf_counter() - t:.1f}s)\n')

cheb2 = build_chebyshev(2)
print(verify_axioms(cheb2, cheb2.box(5)), '\n')

# Plant a fault: (delta_1 * delta_2)({1}) should be 1/3
H = build_su2_dual()
H.install_cache({(1, 2): {1: Fraction(1, 4), 3: Fraction(2, 3)}})
rep = verify_axioms(H, list(range(6)))
print(rep)
for r in rep.failures():
    print(f'  {r.name}: witness {r.witness!r} -- {r.detail}')
