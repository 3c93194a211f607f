"""Exact-arithmetic construction and verification of Jack polynomials.

The package builds the non-symmetric family E (labeled by compositions),
the symmetric family P (labeled by partitions), and the anti-symmetric
family S (Vandermonde times a parameter-shifted P) over the field of
rational functions Q(alpha), and verifies the evaluation, norm, expansion,
and hook-product identities relating them, exactly, against independent
brute-force oracles.
"""

from .combinat import (DiagramNode, composition_lt, diagram_nodes,
                       dominance_leq, eigenvalue_vector, frequencies,
                       has_distinct_parts, node_stats, phi_composition,
                       reverse_partition, sort_to_partition, staircase)
from .jack import build_E, build_P, build_S, clear_caches
from .polyalg import (BiPoly, MultiPoly, antisymmetrize, binomial_series,
                      cherednik_apply, d2_apply, divided_difference,
                      monomial_symmetric, omega_truncated, pi_truncated,
                      symmetrize, vandermonde)
from .qalpha import ALPHA, ONE, ZERO, AlphaRational, alpha_shift
from .scalars import (c_rho, c_rho_resolved, constant, eval_E_at_ones,
                      eval_P_at_ones, gen_factorial, norm_ratio_E,
                      norm_ratio_P, u_eta, v_kappa)
from .verify import Bounds, VerifyReport, run_checks

__version__ = "0.1.0"
