"""rankcalc: an exact calculus of graded belief over finite spaces.

Rankings grade disbelief by natural numbers (minimum over a proposition's
worlds, min for disjunction, addition for conditioning), support revision
by evidence weights and whole evidence fields, carry a workable notion of
(conditional) independence, correspond exactly to orders of magnitude in
an infinitesimal probability weight, and compare executably against
potential-surprise functions and consonant belief functions.

The hot verification sweeps run through a compiled extension when it is
built, with a NumPy fallback selected automatically at import
(``rankcalc.kernel_backend()`` reports which).
"""

from ._kernels import backend as kernel_backend
from .bridge import (
    OrderMeasure,
    ZPoly,
    cond_measure_order,
    measure_independent_fields,
    measure_order,
    ranking_to_measure,
    verify_correspondence,
)
from .errors import (
    EmptyConditionError,
    FormulaError,
    MaximalDoubtError,
    MeasurabilityError,
    ModelFormatError,
    NonContingentError,
    NormalizationError,
    PartitionError,
    RankcalcError,
    RevisionStepError,
    ScaleError,
    SearchBoundError,
    SpaceMismatchError,
    SpaceTooLargeError,
    TopArithmeticError,
    TotalConflictError,
)
from .extnat import TOP, ExtNat, is_top
from .independence import (
    ContractionCheck,
    IndependenceResult,
    ProvisoWitness,
    UnionLawCheck,
    check_contraction_law,
    check_union_law,
    cond_independent_on_field,
    cond_independent_on_prop,
    find_proviso_counterexample,
    independence_report,
    independent,
    independent_props,
)
from .modelfile import (
    Model,
    load_evidence,
    load_model,
    model_from_dict,
    model_to_dict,
    render_model,
    save_model,
)
from .ranking import (
    RankingFunction,
    bayes_rank,
    belief_core,
    believes,
    cond_rank,
    firmness,
    make_ranking,
    part_of,
    rank_prop,
    ranking_from_world_ranks,
    total_rank,
)
from .report import CheckLine, Report
from .revision import (
    EvidenceRanking,
    TraceEntry,
    conditionalize,
    jeffrey_conditionalize,
    revision_sequence,
)
from .rivals import (
    MassFunction,
    NonclosureWitness,
    SurpriseFunction,
    belief_of,
    check_surprise_axioms,
    comparison_report,
    conditional_doubt,
    conflict_mass,
    default_scale,
    dempster_combine,
    demonstrate_nonclosure,
    doubt_of,
    make_simple_support,
    ranking_to_surprise,
    surprise_conjunction_gap,
)
from .space import (
    DEFAULT_WORLD_CAP,
    PartitionField,
    Proposition,
    Space,
    build_space,
    eval_formula,
    field_of_proposition,
    is_measurable,
    subfield_of_variables,
)
from .verify import SuiteConfig, run_suites

__version__ = "0.1.0"
