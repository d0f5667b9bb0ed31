"""Exact symbolic engine for monomial ideals: Stanley decompositions,
clean and pretty clean prime filtrations, and depth invariants, with a
certified sdepth >= depth pipeline for up to five variables."""

__version__ = "0.1.0"

from .core import (
    CertificationError,
    DomainError,
    EngineError,
    InfeasibleError,
    MonomialIdeal,
    ParseError,
    PreconditionError,
    RingContext,
    colon,
    colon_ideal,
    contains,
    format_ideal,
    format_monomial,
    ideal_sum,
    intersect,
    intersect_all,
    is_subideal,
    minimal_generators,
    parse_ideal,
    parse_monomial,
    principal,
    product,
    radical,
    ring,
    saturate,
    unit_ideal,
    zero_ideal,
)
from .decomposition import (
    MonomialPrime,
    PrimaryComponent,
    PrimaryDecomposition,
    associated_primes,
    dimension_filtration_ideals,
    ideal_dimension,
    irreducible_decomposition,
    is_primary,
    maximal_prime,
    minimal_primes,
    primary_decomposition,
    prime,
    radical_prime,
)
from .depth import (
    DepthReport,
    QuotientModule,
    cyclic_module,
    depth_of_quotient,
    dimension_filtration_factors,
    hochster_depth_squarefree,
    is_sequentially_cm,
    koszul_depth,
    module_dimension,
    quotient_module,
)
from .polarize import (
    IdealPair,
    depolarize,
    full_polarization,
    reduce_step,
    tilde_step,
)
from .filtration import (
    FiltrationVerdict,
    NotSequentiallyCM,
    PrimeFiltration,
    build_clean_cm2,
    build_clean_dim1,
    build_clean_primary,
    build_composition_series,
    build_fdepth1_filtration,
    build_free_block,
    build_pretty_clean_n5,
    build_principal_peel,
    n5_factor_filtrations,
    search_prime_filtration,
    select_cm2_prime,
    verify_filtration,
)
from .stanley import (
    CharacteristicPoset,
    DecompositionVerdict,
    StanleyDecomposition,
    StanleyReport,
    StanleySpace,
    characteristic_poset,
    decomposition_from_filtration,
    glue,
    module_associated_primes,
    sdepth_exact,
    sdepth_of_quotient,
    stanley_n5,
    two_var_ideal_decomposition,
    verify_decomposition,
)
from .corpus import corpus_instances, instance_seed, random_ideal
