"""Exact calculator and verifier for multiplicity bounds of complete intersections of quadrics and cubics."""

from .core import BoundCertificate, FamilyParams, InadmissiblePairError, LocalPair, is_admissible
from .global_bounds import Profile, global_table, mubar_total, phi, r_star
from .local_bounds import closed_form_b1, closed_form_b2, local_table, mubar
from .polytope import lattice_count, volume_plus
from .rigidity import check_family, hypertangent_ledger, r3_threshold

__version__ = "0.1.0"
