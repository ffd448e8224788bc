"""Point masses, their convolutions, and the Haar weight that falls out of them."""
from fractions import Fraction

from hypergroups import (Measure, convolve_functions, convolve_measures, convolve_points,
                         haar_weight, indicator, point_mass, tilde_function, translate)
from hypergroups.catalog import build_chebyshev, build_su2_dual

su2 = build_su2_dual()
cheb = build_chebyshev(1)

# Irreps of SU(2) labelled by n = 2*spin.  pi_1 (x) pi_1 = pi_0 + pi_2, and the
# convolution weighs each summand by its dimension: 1/4 and 3/4.
print('SU(2)^  1*1 =', dict(convolve_points(su2, 1, 1)))
print('SU(2)^  1*2 =', dict(convolve_points(su2, 1, 2)))

# Chebyshev: T_2 T_3 = (T_1 + T_5)/2
print('Cheb    2*3 =', dict(convolve_points(cheb, 2, 3)))

# Measures convolve bilinearly
nu = Measure({0: Fraction(1, 2), 1: Fraction(1, 2)})
print('delta_1 * nu =', dict(convolve_measures(su2, point_mass(1), nu)))

# The Haar weight is read off the identity coefficient: h(x) = 1/(delta_x*delta_x~)({e})
for n in range(5):
    print(f'  h({n}) on SU(2)^ = {haar_weight(su2, n)}   on Chebyshev = {haar_weight(cheb, n)}')

# Translation and function convolution
f = indicator([3])
print('L_1 1_{3} =', dict(translate(cheb, 1, f)))
one = indicator([1])
g = convolve_functions(cheb, one, tilde_function(cheb, one))
print('1_{1} *_h 1_{1}~ =', dict(g), ' (value at e is h({1}) =', g(0), ')')
