"""Exact symbolic model of the Mysior half-plane and certificate checks on it."""

from .certificates import (CatalogEntryNotClopen, CertificateError, CertificateMissing, ChainBroken,
                           HullCertificate, NotDisjoint, NotOpenAtom, Z0InCatalogEntry, claim1_check,
                           claim2_check, covering_step, exterior_certificates, omega_hull_certificate,
                           omega_limit, verify_hull_certificate, z0_hull_chain)
from .intervals import Interval, closed, open_interval, point, q
from .sets import (A1, A2, EMPTY, U, Z0, DBand, L, Line, MPoint, Pt, SetExpr, Tail, VBand, basic_nbhd,
                   line_point, single, whole_line)
from .topology import (NotRepresentable, disjoint, equal, is_clopen, is_closed, is_empty, is_open, m_closure,
                       m_theta_closure, open_witness, sample_points, subset)


def member(p: MPoint, e: SetExpr) -> bool:
    """Exact membership of a point in a representable set."""
    return p in e
