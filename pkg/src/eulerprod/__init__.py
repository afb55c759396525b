"""Dirichlet-series and modular-form coefficients from Euler products.

The pipeline: a linear-time sieve gives one coprime factorization per
index (:mod:`.sieve`), Euler products expand with one ring product per
composite index (:mod:`.euler`), Eisenstein series come from the same
expansion (:mod:`.eis`), products of Eisenstein series are formed by NTT
over word-sized primes (:mod:`.ntt`) and combined into eigenforms
(:mod:`.bgform`).  :mod:`.symfun` and :mod:`.lprod` handle local-factor
algebra and coefficient-level tensor products and symmetric powers.
"""
from .bgform import (
    BGDecomposition,
    HasseBound,
    MFResult,
    crt_combine,
    expand_operator,
    hasse_bound,
    lift_balanced,
    load_decomposition,
    mf_coefficients,
    multiplicative_extend,
)
from .chars import (
    DirichletCharacter,
    RingEmbedding,
    conrey_character,
    eis_constant_term,
    embed_values,
    gen_bernoulli,
    trivial_character,
)
from .eis import eisenstein_coeffs, eisenstein_coeffs_naive
from .errors import (
    CapacityError,
    DecompositionError,
    DivisibilityError,
    EulerProdError,
    IncompatiblePrimeError,
    IntegrityError,
    InvalidArgument,
    LiftError,
    PrecisionError,
    ProviderError,
)
from .euler import (
    ArrayProvider,
    CoeffSeq,
    ConstantProvider,
    EulerFactorProvider,
    MappingProvider,
    NewtonProvider,
    PolyProvider,
    expand,
    expand_precomp,
    expand_reference,
    primepower_block,
)
from .lprod import (
    ArithmeticObject,
    dirichlet_direct_sum,
    dirichlet_sym_power,
    dirichlet_tensor,
    triple_product,
    triple_product_bad_factor,
)
from .ntt import FftPrime, find_fft_prime, series_mul
from .rings import QQ, ZZ, CountingRing, OpCounter, PrimeField, QuotientRing
from .sieve import CoprimeTable, rough_coprime_sieve, smooth_sieve_expand_order
from .symfun import (
    FactorRepr,
    complete_from_poly,
    direct_sum,
    factor_from_coeffs,
    h_from_partitions,
    newton_from_poly,
    poly_from_newton,
    rankin_numerator,
    root_power,
    sym_power,
    tensor_product,
)

__version__ = "0.1.0"
