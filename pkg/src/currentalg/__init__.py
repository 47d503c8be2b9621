"""Exact-arithmetic workbench for current Lie algebras L tensor A.

Structure constants over Q in, canonical subspaces out: cocycle and
invariant-form decompositions, derivation spans, the four-term sequence
tying H^2 to dual-valued 1-cohomology, and graded slices of the
positive-degree loop algebra.  Everything is computed with exact rational
linear algebra; no verdict rests on floating point.
"""

from .exactlin import (
    Matrix,
    Subspace,
    determinant,
    inverse,
    kernel_basis,
    kernel_from_rows,
    rref,
    solve,
    span_from_rows,
    subspace_intersect,
    subspace_sum,
)
from .algebras import (
    AssocAlgebra,
    BilinearForm,
    CurrentAlgebra,
    LieAlgebra,
    ValidationError,
    algebra_from_dict,
    algebra_to_dict,
    annihilator_assoc,
    build_assoc,
    build_lie,
    center_lie,
    current,
    derived_subalgebra,
    killing_form,
    parse_algebra_file,
    product_form,
    residue_form,
    serialize_algebra,
    square_assoc,
)
from .cochain import (
    CochainSpaceResult,
    LieModule,
    adjoint_module,
    ce_differential,
    coadjoint_module,
    cohomology,
    trivial_module,
)
from .forms import (
    FormSpace,
    condition_space,
    hc1_space,
    invariant_symmetric_forms,
    tensor_form_span,
    verify_forms_decomposition,
    verify_h2_decomposition,
)
from .derivations import (
    LoopDerivation,
    MapSpace,
    PencilCandidates,
    antiderivation_space,
    derivation_space,
    form_to_map,
    inner_derivations,
    lambda_candidates,
    map_condition_space,
    sequence_maps,
    sl2_loop_derivation,
    theorem_der_span,
    verify_der_decomposition,
)
from .graded import (
    GradedComponent,
    graded_form_dims,
    graded_h2,
    graded_vs_whole,
    larsson_report,
)

__version__ = "0.1.0"
