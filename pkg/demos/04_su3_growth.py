"""Generator balls in the dual of SU(3): exact Haar growth against the closed form."""
from hypergroups.catalog import build_su3_dual
from hypergroups.growth import (SU3_ALPHA, SU3_BETA, SU3_GENERATORS, SU3_LEPTIN_D, Balls,
                                d_leptin_estimate, growth_series, su3_ball_closed_form,
                                su3_bounds_check)

H = build_su3_dual()
balls = Balls(H, SU3_GENERATORS)

# F = {(1,0), (0,1)}; the n-th shell is the diagonal p + q = n
print('shell 3:', sorted(balls.shell(3)))

rep = growth_series(H, SU3_GENERATORS, 12, 8, balls=balls)
print(f'{"n":>3} {"|F^n|":>6} {"h(F^n)":>14} {"closed form":>14} {"h/n^8":>12}')
for row in rep.rows:
    print(f'{row.n:>3} {row.size:>6} {str(row.mass):>14} {str(su3_ball_closed_form(row.n)):>14} {row.normalized:>12.6g}')

b = su3_bounds_check(100, masses=[balls.mass(n) for n in range(101)])
print(f'\n{SU3_ALPHA} < h(F^n)/n^8 <= {SU3_BETA} for n = 1..100: {b.ok}; '
      f'smallest {float(b.minimum[1]):.6g} at n = {b.minimum[0]}')

# Leptin evidence with K = F: the ratio falls towards 1, far below 19 * 960
est = d_leptin_estimate(H, SU3_GENERATORS, SU3_GENERATORS, 100, D=SU3_LEPTIN_D, balls=balls)
for l in (0, 1, 2, 5, 10, 25, 50, 100):
    print(f'  l = {l:>3}: h(F*F^l)/h(F^l) = {float(est.ratios[l][1]):.5f}')
print('all <=', SU3_LEPTIN_D, ':', est.within_D)
