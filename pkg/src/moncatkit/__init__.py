"""Sequence and shaped-sequence categories over monoidal models, with law checkers."""

from .core import (
    CategoryModel,
    CompositionError,
    Factor,
    ModelError,
    MonFunctorData,
    Morphism,
    NatTransData,
    check_hexagon,
    check_monoidal_nat,
    check_naturality,
    check_pentagon,
    check_triangle,
    check_unit_squares,
    compose_functors,
    compose_nats,
    hcompose_nats,
    identity_functor,
    identity_nat,
)
from .laws import LawReport, run_2functor_suite, run_adjunction_suite_q, run_adjunction_suite_str
from .models import (
    CategorySpecError,
    FiniteTableCategory,
    FreeMonoidThinModel,
    FreeThinModel,
    MatrixModCategory,
    load_category,
    save_category,
    validate_category,
)
from .nonstrictify import (
    EMPTY_Q,
    QObject,
    assoc_q,
    beta_q,
    embed_j,
    embed_j_functor,
    lift_nat_nonstrict,
    lift_nonstrict,
    par_q,
    q_functor,
    q_model,
    q_nat,
    realise_tilde_q,
    seq_q,
    star_q_arrows,
    star_q_objects,
)
from .strictify import (
    EMPTY_SEQ,
    StrObject,
    beta,
    coherence_factors,
    delta,
    embed_functor,
    embed_i,
    eta,
    lift_nat_strict,
    lift_strict,
    par_seq,
    realise_tilde_str,
    rho,
    seq_word,
    star_arrows,
    star_objects,
    str_functor,
    str_model,
    str_nat,
    theta,
    theta_factors,
    theta_inv,
    unit_u,
)
from .terms import (
    BULLET,
    UNIT,
    Leaf,
    MagmaTerm,
    Pair,
    Word,
    collapse,
    forget_parens,
    leaf_count,
    left_comb,
    parse_term,
    render_term,
    shapes_with_leaves,
    split,
)

__version__ = "0.1.0"
