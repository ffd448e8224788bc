"""Exact computations on discrete hypergroups.

Point and function convolution, Haar weights and axiom checks
(:mod:`hypergroups.core`, :mod:`hypergroups.axioms`); concrete hypergroups
(:mod:`hypergroups.catalog`); Folner/Leptin/Reiter quantities
(:mod:`hypergroups.amenability`); generator balls and growth
(:mod:`hypergroups.growth`).
"""
from .core import (DomainError, FiniteFunction, Hypergroup, HypergroupError, Measure,
                   SparseMap, StructureError, convolve_functions, convolve_measures, convolve_points,
                   haar_mass, haar_weight, indicator, involution, point_mass, support_product,
                   tilde_function, translate)
from .axioms import AxiomReport, verify_axioms
from .catalog import (Chebyshev, ConjugacyHypergroup, ProductHypergroup, Su2Dual, Su3Dual,
                      build_chebyshev, build_conjugacy, build_product, build_su2_dual,
                      build_su3_dual, cache_load, cache_store, generate_group, load_group_spec)

__version__ = '0.1.0'
