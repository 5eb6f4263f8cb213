"""hopfbx: exact-arithmetic workbench for positively based Hopf algebras.

Build bicrossproduct models from group factorizations, verify the Hopf
axioms over the nonnegative rationals or the Boolean semiring, and recover
the underlying group data (plus an explicit rescaling) from any positively
based structure-constant presentation.
"""

from .coeff import (
    SEMIRING_B,
    SEMIRING_Q,
    Bool,
    Coeff,
    FactoredPositive,
    FormalAdditionError,
    fp_from_rational,
    fp_mul,
    fp_pow,
    fp_to_rational,
    semiring_add,
    semiring_mul,
    semiring_one,
    semiring_zero,
)
from .groups import (
    ExactFactorization,
    FiniteGroup,
    GroupError,
    GroupReport,
    MatchingViolation,
    NotAnAction,
    NotExact,
    check_group,
    cyclic,
    direct_product,
    enumerate_exact_factorizations,
    enumerate_subgroups,
    factorizations_isomorphic,
    is_isomorphic_small,
    make_factorization,
    zappa_szep,
)
from .catalog import catalog_group, catalog_names
from .hopf import (
    AntipodeNotInvertible,
    AxiomReport,
    HopfData,
    HopfError,
    NotMonomial,
    coopposite,
    drinfeld_double,
    dual,
    inverse_antipode,
    opposite,
    permute_basis,
    rescale_basis,
    tensor,
    verify_axioms,
)
from .bicross import build_bicrossproduct
from .classify import (
    ClassificationResult,
    ClassifyError,
    classify,
    classify_boolean,
    normalize_unit,
    solve_rescaling,
)
from .correspondence import (
    Correspondence,
    CorrespondenceHopf,
    build_correspondence_hopf,
    classify_correspondence,
    compose,
    from_boolean_hopf,
    identity_corr,
    power_functor,
    tensor_corr,
    to_boolean_hopf,
)

__version__ = "0.1.0"
