"""demkit: exact characters of current-algebra Demazure modules.

Everything is exact integer arithmetic over sparse supports; characters are
elements of the integer group ring of the weight lattice with an extra
integer grading.
"""

from .rootsystem import Root, RootSystem, parse_system, root_system
from .charalg import GradedCharacter
from .affine import (
    AffineWeight,
    Relation,
    affine_irreducible_character_truncated,
    affine_pairing,
    affine_reflect,
    demazure_character,
    demazure_operator,
    kr_character,
    presentation,
    straighten,
)
from .finite import (
    conjecture_conditions,
    demazure_weyl_character,
    surjection_exists,
    tensor_decompose,
    weyl_character,
    weyl_dimension,
)
from .theorems import (
    Certificate,
    expected_minuscule_nodes,
    minuscule_nodes,
    scan_summary,
    schur_scan,
    twofold_corollary_thresholds,
    verify_twofold_corollary,
    verify_demprop,
    verify_ev0,
    verify_genschurpos,
    verify_krdecom,
    verify_mapsdem,
    verify_minuscule,
    verify_stabilization,
    verify_twofold,
)

__version__ = "0.1.0"
