"""SU(3) fusion rules from Littlewood-Richardson, and what they say about dimensions."""
from hypergroups.catalog import build_su3_dual, su3_dimension, su3_tensor_decompose

for a, b in [((1, 0), (0, 1)), ((1, 0), (1, 0)), ((1, 1), (1, 1)), ((2, 1), (1, 2))]:
    dec = su3_tensor_decompose(a, b)
    parts = ' + '.join(f'{m}*{c}' if m > 1 else f'{c}' for c, m in sorted(dec.items(), reverse=True))
    lhs = su3_dimension(*a) * su3_dimension(*b)
    rhs = sum(m * su3_dimension(*c) for c, m in dec.items())
    print(f'{a} x {b} = {parts}    dims {lhs} = {rhs}')

# The hypergroup normalises multiplicities by dimension
H = build_su3_dual()
print('delta_(1,0) * delta_(0,1) =', dict(H.convolve((1, 0), (0, 1))))
print('h((1,1)) =', H.haar((1, 1)), '= 8^2')
print('involution of (2,1):', H.involution((2, 1)))
