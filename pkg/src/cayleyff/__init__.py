"""Algebraic Cayley graphs G_d(n, q, alpha) over finite fields.

The unit group of F_q[x]/(f) with connection set {g(alpha) : g monic
primary of degree d}: components, diameter and spectrum, each computed
by more than one route so the results cross-check.
"""

from .components import (
    components_descent,
    components_order_lcm,
    element_order,
    theorem14_bound,
    thm14_bound,
)
from .factor import Factorization, factor, is_prime, parse_factorization
from .field import BaseField, ExtField, Xelt, base_field_new, element_degree, ext_field_new, prime_field
from .graph import (
    ConnectionSet,
    GraphSpec,
    SubgroupDescriptor,
    components_bfs,
    connection_set,
    diameter_bfs,
    export_graph,
    subgroup_closure,
)
from .primary import (
    PrimaryRecord,
    count_irreducibles,
    count_primary,
    enumerate_irr_divisors,
    enumerate_irreducibles,
    enumerate_primary,
    mobius,
)
from .spectrum import (
    LogTable,
    SpectrumReport,
    build_log_table,
    eigenvalues,
    expander_check,
    find_generator,
    trivial_multiplicity,
    weil_check,
)

__version__ = "0.1.0"
