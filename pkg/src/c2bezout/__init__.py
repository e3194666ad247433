"""Exact equivariant cohomology of finite projective spaces with
involution: Euler classes of sums of line bundles and their expansion
into Schubert-variety classes, with a machine-verification harness for
every identity involved."""

from .grading import PiBDegree, ROC2Degree, standard_degrees, degree_add
from .point import OutsideSupportedSubring
from .projective import (Ambient, ProjClass, ambient, class_Q, class_chi_Q,
                         gen_cw, gen_cxw, gen_zeta0, gen_zeta1, proj_tau,
                         set_corrupt_rule)
from .bundles import (BundleSum, BundleInvariants, ContextViolation,
                      LineBundleSpec, bundle_invariants, euler_closed_form,
                      euler_line, euler_product, euler_type_block,
                      parse_bundles)
from .schubert import (BezoutExpansion, BinatePair, FreeOrbit, InvariantChain,
                       bezout_expansion, chiQ_class, class_of,
                       expansion_class, special_case)
from .verify import SweepConfig, VerifyReport, run_verify

__version__ = "0.1.0"

__all__ = [
    "PiBDegree", "ROC2Degree", "standard_degrees", "degree_add",
    "OutsideSupportedSubring",
    "Ambient", "ProjClass", "ambient", "class_Q", "class_chi_Q",
    "gen_cw", "gen_cxw", "gen_zeta0", "gen_zeta1", "proj_tau",
    "set_corrupt_rule",
    "BundleSum", "BundleInvariants", "ContextViolation", "LineBundleSpec",
    "bundle_invariants", "euler_closed_form", "euler_line", "euler_product",
    "euler_type_block", "parse_bundles",
    "BezoutExpansion", "BinatePair", "FreeOrbit", "InvariantChain",
    "bezout_expansion", "chiQ_class", "class_of", "expansion_class",
    "special_case",
    "SweepConfig", "VerifyReport", "run_verify",
]
