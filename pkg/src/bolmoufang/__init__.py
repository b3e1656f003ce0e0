"""Loops of Bol-Moufang type: identity calculus, evaluation, search, classification."""

from .terms import (
    Identity,
    IdentityName,
    IdentitySyntaxError,
    NotBolMoufangError,
    decode_name,
    dual_name,
    dual_term,
    encode_name,
    enumerate_all,
    parse_identity,
)
from .loops import (
    FiniteLoop,
    NoNeutralError,
    NotLatinError,
    Witness,
    format_loop,
    from_table,
    parse_loop_text,
    read_loop_file,
    write_loop_file,
)
from .evaluate import (
    Law,
    Profile,
    Variety,
    evaluate_at,
    holds,
    law_for,
    profile,
    profile_tables,
    satisfies_variety,
)
from .search import (
    ExhaustedOrder,
    Found,
    SearchSpec,
    enumerate_loops,
    find,
    find_minimal,
    reduced_tables,
)
from .constructions import (
    CLAIMS,
    EXAMPLE_IDS,
    FiniteGroup,
    chein_double,
    cyclic_group,
    dihedral_group,
    direct_product,
    example_loop,
    symmetric_group_3,
)
from .classify import (
    EXPECTED_CLASS,
    INCLUSION_EDGES,
    SEPARATIONS,
    CellMismatch,
    Certificate,
    ClassificationMismatch,
    InclusionViolated,
    Report,
    VerificationError,
    catalog_profiles,
    classify_identity,
    reference_pool,
    transitive_closure,
    verify_examples,
    verify_figure1,
    verify_lemma_regressions,
    verify_table2,
    verify_table3,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
