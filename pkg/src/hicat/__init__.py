"""Combinatorial models of higher type-A cluster categories.

Builds the module, derived-window, cluster, almost-positive and
restricted-cyclic category models from gapped index tuples, realizes
their d-exangles, constructs the two ideal quotients, and verifies the
equivalence and mutation correspondences exhaustively at desk scale.
"""
from .exangles import (
    ExactnessReport,
    Exangle,
    hom_exactness_report,
    is_complex,
    realize,
)
from .models import (
    BasisMorphism,
    CategoryModel,
    MorphismMatrix,
    ObjectClass,
    almost_positive_model,
    basis_morphism,
    cluster_model,
    compose,
    compose_matrices,
    derived_model,
    make_model,
    module_model,
    morphism_matrix,
    relative_f_model,
)
from .quotients import (
    IdealSpec,
    QuotientModel,
    factors_through,
    injproj_ideal,
    projinj_ideal,
    quotient,
)
from .rigidity import (
    MutationResult,
    RigidSet,
    correspondence_check,
    exchange_exangles,
    is_rigid,
    maximal_rigid,
    mutate,
    tilting_sets,
)
from .tuples import (
    IndexTuple,
    Quiver,
    build_quiver,
    gen_derset_window,
    gen_modset,
    gen_nonconsec,
    intertwines,
    intertwines_cyclic,
    m_mix,
    normalize_cyclic,
    shift_cluster,
    shift_derived,
)
from .verify import (
    VerificationReport,
    default_grid,
    grid_points,
    run_theorem,
    sanity_reports,
    verify_equiv_module_ap,
    verify_f_exangles,
    verify_main2,
    verify_model_sanity,
)

__version__ = "0.1.0"
