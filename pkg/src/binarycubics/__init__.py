"""Exact characters, quiver representations and local cohomology tables
for GL2-equivariant D-modules on binary cubic forms.

The character layer (characters, catalog) computes multiplicities of
irreducible GL2-representations in the 14 simple equivariant D-modules
on the space of binary cubics, with exact integer arithmetic throughout.
The quiver layer (quiver, cubics) is a generic engine for quivers with
relations over the rationals -- path bases, hom spaces, decomposition
into indecomposables -- applied to the quiver presenting the equivariant
category.  verify replays every checkable identity; cli exposes it all
on the command line.
"""

from .characters import (
    Character,
    ClosedFormCharacter,
    NoStabilization,
    StabilizationPolicy,
    Weight,
    add,
    box_weights,
    dual,
    fourier,
    fourier_weight,
    from_closed_form,
    from_table,
    is_dominant,
    localize,
    m_diag,
    mult_d,
    multiply_forms,
    nu,
    shift,
    sub,
    truncate,
)
from .catalog import (
    COMPOSITION_SERIES,
    DERIVED,
    INJECTIVE_FACTORS,
    ORBITS,
    SIMPLES,
    SUPPORT,
    character_of,
    dual_partner,
    fourier_partner,
    local_cohomology,
    verify_identities,
)
from .quiver import (
    Arrow,
    BoundQuiver,
    NonAdmissibleError,
    Quiver,
    RelationSet,
    RepMorphism,
    Representation,
    UndecidedIsomorphism,
    cokernel,
    decompose,
    decompose_certified,
    direct_sum,
    end_algebra,
    hom_basis,
    hom_dim,
    image,
    is_indecomposable,
    is_isomorphic,
    kernel,
    rep_from_dict,
    rep_to_dict,
)
from .cubics import (
    NAMED_QUIVERS,
    build,
    check_tame_classification,
    check_two_vertex_component,
    embed_alpha,
    embed_beta,
    injective_envelope_of_P,
    rn_family,
    separate_node,
)

__version__ = "0.1.0"
