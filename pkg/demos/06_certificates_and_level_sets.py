"""Approximate-identity certificates built from Leptin sets, and Haar level sets."""
from hypergroups.amenability import bai_certificate, haar_level_set
from hypergroups.catalog import build_chebyshev, build_product, build_su2_dual
from hypergroups.growth import product_leptin_combine

su2 = build_su2_dual()
cert = bai_certificate(su2, [1], range(10))
print('u on 0..11:', [str(cert.u(x)) for x in range(12)])
print(f'norm bound^2 = {cert.bound_sq}, bound = {cert.bound:.5f}')

# Products: the Leptin ratio of a product set is at most the product of the ratios
H = build_product([su2, su2])
res = product_leptin_combine(H, [([1], range(10)), ([1], range(10))])
print('product ratio', res.ratio, '<=', res.bound, ':', res.ok)

# Level sets {h <= M}: bounded Haar on Chebyshev, finite level sets on SU(2)^
for name, G, M in [('Chebyshev', build_chebyshev(1), 2), ('SU(2)^', su2, 100)]:
    rep = haar_level_set(G, M, range(201))
    print(f'{name}: {rep.count} of {rep.size} have h <= {M}; verdict {rep.verdict}; prefix counts {rep.counts}')
