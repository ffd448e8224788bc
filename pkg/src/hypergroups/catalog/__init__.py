"""Concrete discrete hypergroups."""
from .cache import CacheError, StructureCache, cache_load, cache_store
from .duals import (Su2Dual, Su3Dual, build_su2_dual, build_su3_dual, su2_dimension,
                    su3_dimension, su3_multiplicity, su3_tensor_decompose)
from .finite import (ConjugacyHypergroup, FiniteGroup, GroupSpec, GroupSpecError,
                     build_conjugacy, generate_group, load_group_spec, parse_group_spec)
from .polynomial import Chebyshev, build_chebyshev
from .product import ProductHypergroup, build_product

__all__ = [
    'CacheError', 'StructureCache', 'cache_load', 'cache_store',
    'Su2Dual', 'Su3Dual', 'build_su2_dual', 'build_su3_dual', 'su2_dimension',
    'su3_dimension', 'su3_multiplicity', 'su3_tensor_decompose',
    'ConjugacyHypergroup', 'FiniteGroup', 'GroupSpec', 'GroupSpecError',
    'build_conjugacy', 'generate_group', 'load_group_spec', 'parse_group_spec',
    'Chebyshev', 'build_chebyshev', 'ProductHypergroup', 'build_product',
]
