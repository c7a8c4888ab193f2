"""LP bounds on the clique numbers of Paley graphs via theta numbers of the local graph."""

from .bounds import BoundReport, bound_report, hp_bound, theta_L_lp, theta_LS_lp
from .certificates import DualCertificate, dual_theta_L, dual_theta_LS, verify_certificate
from .numtheory import PrimeContext, make_context, validate_prime
from .paley import CirculantGraph, clique_number, complement, local_graph, paley_graph

__all__ = [
    "BoundReport", "CirculantGraph", "DualCertificate", "PrimeContext",
    "bound_report", "clique_number", "complement", "dual_theta_L", "dual_theta_LS",
    "hp_bound", "local_graph", "make_context", "paley_graph", "theta_LS_lp", "theta_L_lp",
    "validate_prime", "verify_certificate",
]
