"""Exact-arithmetic split theory for finite-dimensional Leibniz superalgebras.

Validate a structure-constant presentation, decompose it into root spaces
relative to a maximal abelian graded subalgebra, study connectivity of the
roots, decompose into ideals, and decide simplicity with two independent
methods.
"""

from .algebra import (
    GradedSubspace,
    Superalgebra,
    Violation,
    annihilates_from_right,
    center,
    derived_subalgebra,
    generated_ideal,
    leibniz_kernel,
)
from .analysis import (
    DEFAULT_ORACLE_BOUND,
    ClassificationResult,
    ClassifyPreconditionError,
    HypothesisReport,
    OracleBoundExceeded,
    OracleResult,
    SimplicityVerdict,
    classify,
    h_lambda_space,
    hypothesis_report,
    ideal_root_aligned,
    lemma_checks,
    lie_annihilator,
    oracle_verdict,
    root_multiplicative,
    theorem_verdict,
)
from .connections import (
    ClassDecomposition,
    ClassIdeal,
    ConnectionWitness,
    GradedConnectionWitness,
    VerificationError,
    class_ideal,
    connected,
    connection_classes,
    connectivity_summary,
    decompose,
    is_graded_ideal,
    is_subalgebra,
    neg_i_connected,
    reachable,
    validate_connection,
    validate_graded_connection,
)
from .documents import (
    DocumentError,
    canonical_json,
    document_from_algebra,
    load_path,
    parse_document,
    reinterpret,
    save_path,
)
from .fields import (
    EXHAUSTIVE_SCAN_BOUND,
    Field,
    FieldError,
    PrimeField,
    Rationals,
    field_from_json,
    parse_field_spec,
)
from .generators import (
    abelian_doc,
    change_basis_doc,
    direct_sum,
    fuzz_corpus,
    gen_example1,
    gen_example2,
    scale_cartan_doc,
)
from .linalg import Matrix, Subspace, kernel_basis, rational_eigenvalues
from .splitting import (
    NotAbelianError,
    NotGradedError,
    NotSplitError,
    Root,
    RootPartition,
    SplitDecomposition,
    SplitError,
    SplitFactViolation,
    partition_roots,
    split,
    verify_split_facts,
)

__all__ = [
    "GradedSubspace",
    "Superalgebra",
    "Violation",
    "annihilates_from_right",
    "center",
    "derived_subalgebra",
    "generated_ideal",
    "leibniz_kernel",
    "DEFAULT_ORACLE_BOUND",
    "ClassificationResult",
    "ClassifyPreconditionError",
    "HypothesisReport",
    "OracleBoundExceeded",
    "OracleResult",
    "SimplicityVerdict",
    "classify",
    "h_lambda_space",
    "hypothesis_report",
    "ideal_root_aligned",
    "lemma_checks",
    "lie_annihilator",
    "oracle_verdict",
    "root_multiplicative",
    "theorem_verdict",
    "ClassDecomposition",
    "ClassIdeal",
    "ConnectionWitness",
    "GradedConnectionWitness",
    "VerificationError",
    "class_ideal",
    "connected",
    "connection_classes",
    "connectivity_summary",
    "decompose",
    "is_graded_ideal",
    "is_subalgebra",
    "neg_i_connected",
    "reachable",
    "validate_connection",
    "validate_graded_connection",
    "DocumentError",
    "canonical_json",
    "document_from_algebra",
    "load_path",
    "parse_document",
    "reinterpret",
    "save_path",
    "EXHAUSTIVE_SCAN_BOUND",
    "Field",
    "FieldError",
    "PrimeField",
    "Rationals",
    "field_from_json",
    "parse_field_spec",
    "abelian_doc",
    "change_basis_doc",
    "direct_sum",
    "fuzz_corpus",
    "gen_example1",
    "gen_example2",
    "scale_cartan_doc",
    "Matrix",
    "Subspace",
    "kernel_basis",
    "rational_eigenvalues",
    "NotAbelianError",
    "NotGradedError",
    "NotSplitError",
    "Root",
    "RootPartition",
    "SplitDecomposition",
    "SplitError",
    "SplitFactViolation",
    "partition_roots",
    "split",
    "verify_split_facts",
]
