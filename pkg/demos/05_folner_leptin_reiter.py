"""Folner sets in SU(2)^ and Chebyshev, the Leptin search, and Reiter witnesses."""
from hypergroups.amenability import (check_sf_implies_l, folner_ratio, folner_to_reiter,
                                     leptin_ratio, leptin_search, reiter_deficiency,
                                     summing_sequence_check)
from hypergroups.catalog import build_chebyshev, build_su2_dual

su2 = build_su2_dual()
cheb = build_chebyshev(1)

for n in (1, 10, 50, 120, 300):
    V = range(n + 1)
    print(f'n={n:>3}  folner(1, V) = {float(folner_ratio(su2, 1, V).value):.5f}'
          f'  leptin({{1}}, V) = {float(leptin_ratio(su2, [1], V).value):.5f}')

cmp = check_sf_implies_l(su2, [1], range(10))
print('leptin - 1 =', cmp.leptin_minus_one, ' strong folner =', cmp.strong_folner)

res = leptin_search(su2, [1], budget=120, D='11/10')
print(f'best ball F^{res.index}: ratio {res.ratio} ~ {float(res.ratio):.4f}, certified for D=1.1: {res.certified}')

rep = summing_sequence_check(cheb, lambda n: range(n + 1), [1, 2, 3], 40)
for k in (1, 2, 3):
    print(f'Chebyshev k={k}: last ratio {rep.last(k)}')

# normalised indicators are Reiter witnesses
for n in (2, 10, 50, 100):
    r = reiter_deficiency(cheb, folner_to_reiter(cheb, range(n + 1), 2), [1], 2)
    print(f'n={n:>3}: ||L_1 f - f||_2^2 = {r.deficiency_pow}  (deficiency {r.deficiency:.4f})')
