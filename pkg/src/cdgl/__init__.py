"""Exact computer algebra for complete differential graded Lie algebras
concentrated in degrees 0 and 1: the BCH group on degree 0, the induced
group law on degree 1, the associated crossed module and categorical
group, its nerve and classifying space, the geometric realization, and
the level-wise isomorphism between the latter two.
"""

__version__ = "0.1.0"

from .algebra import (
    FreePresentation,
    GradedLieElement,
    Generator,
    Presentation,
    StructureConstantsPresentation,
    apply_differential,
    bracket,
    lyndon_basis,
    validate_presentation,
)
from .crossed import (
    Arrow,
    CategoricalGroup,
    CrossedModule,
    categorical_group,
    crossed_from_cdgl,
)
from .errors import (
    CdglError,
    ComposabilityError,
    ConstructionError,
    DomainError,
    NotLieElementError,
    PrecisionError,
    PresentationError,
)
from .groups import (
    QuotientMap,
    UniversalPerpTable,
    bch,
    bch_inverse,
    bch_table,
    bch_word,
    build_perp_table,
    exp_ad,
    homology01,
    is_maurer_cartan,
    perp,
    perp_inverse,
    two_type_reduce,
)
from .interval import bernoulli, interval_presentation, ls_interval_check
from .realization import Realization, RealizationSimplex
from .reports import CheckFailure, SuiteReport
from .serialization import (
    BUNDLED,
    bundled_path,
    load_bundled,
    load_presentation,
    presentation_from_dict,
    presentation_to_dict,
    save_presentation,
)
from .simplicial import (
    Nerve,
    NerveElement,
    TwistingFunction,
    WBar,
    WBarElement,
    check_simplicial_identities,
    check_twisting,
    twisted_map_from_tau,
)

__all__ = [name for name in dir() if not name.startswith("_")]
