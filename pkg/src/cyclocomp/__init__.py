"""Exact arithmetic in cyclotomic completions of polynomial rings.

The objects: dense exact polynomials over Z and Q (`polyring`),
cyclotomic polynomials and the adjacency combinatorics of completion
indices (`cyclotomic`), truncated elements of completed rings with digit
expansions, restriction maps and convergent series (`completion`),
evaluation and Taylor expansion at roots of unity (`rootexp`), and the
contrasting Chinese-Remainder structure over Q (`qcrt`).
"""

from .completion import (
    AdicChain,
    DigitExpansion,
    FiltrationChain,
    KONTSEVICH_ZAGIER_SPEC,
    NAMED_SERIES,
    PochhammerChain,
    ProductChain,
    Q_INVERSE_SPEC,
    SeriesSpec,
    TruncatedElement,
    alternating_unit,
    from_digits,
    reduce,
    rho,
    series_realize,
    to_digits,
    trunc_arith,
    unit_inverse_mod,
)
from .cyclotomic import (
    AdjacencyGraph,
    CommonPrimeCertificate,
    RING_Q,
    RING_Z,
    RING_ZERO,
    RingDescriptor,
    UnitCertificate,
    arrow_witness,
    c_value,
    congruence_check,
    connected_components,
    cyclotomic_coprimality,
    cyclotomic_poly,
    is_adjacent,
    pochhammer,
    ring_z_inverted,
)
from .polyring import (
    IntPolynomial,
    NEG_INFINITY,
    RatPolynomial,
    divides,
    poly_mod_prime,
    rational_xgcd,
    resultant,
    subresultant_bezout,
)
from .qcrt import (
    CrtComponents,
    ExponentVector,
    crt_idempotents,
    crt_reconstruct,
    crt_split,
    integer_witness_search,
    rho_q_kernel_witness,
)
from .rootexp import (
    CyclotomicInteger,
    RootTaylorSeries,
    evaluate_at_root,
    expand_series,
    ohtsuki_series,
    root_multiplicity,
    tau_values,
    taylor_at_root,
)

__version__ = "0.1.0"
