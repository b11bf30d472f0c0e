"""Filling certificates, triangle assembly, random quotients and presentations."""

from .certificates import (
    FillingCertificate,
    Lambda1Status,
    TriangleAssembly,
    assemble_triangle,
    certify_filling,
    certify_lps,
    certify_quotient,
)
from .groups import PermQuotient, cyclic_quotient, dihedral_quotient, sl2_quotient
from .schreier import classical_check, emit_presentation, schreier_generators
from .varju import varju_sample
