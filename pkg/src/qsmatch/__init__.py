"""
qsmatch: quantum state matching with measurement-induced nonlinear qubit maps.

Build a map whose two superattractive fixed points are a reference state and
its orthogonal partner, with the basin boundary placed at a chosen overlap;
synthesize the two-qubit gate that realizes it under post-selection; and
simulate the iterated protocol.
"""
from .basin import BasinGrid, RasterConfig, rasterize, write_csv, write_image
from .dynamics import (
    FixedPointData,
    QuadraticRationalMap,
    basic_map,
    conjugate,
    eval_map,
    fixed_points,
    iterate,
    normal_form,
    same_map,
)
from .errors import DegenerateError, DomainError, PostSelectionImpossible
from .extcomplex import (
    INF,
    GeneralizedCircle,
    Location,
    circle_from_center_radius,
    classify_point,
    sample_circle,
    unit_circle,
)
from .gates import (
    SingleQubitGate,
    TwoQubitGate,
    contraction_gate,
    induced_map,
    worked_example_gate,
    single_qubit_gate,
    synthesize_unitary,
)
from .matcher import (
    InitialClass,
    Matcher,
    MatcherSpec,
    MatchVerdict,
    Outcome,
    build_matcher,
    classify_initial,
    julia_circle,
    match_state,
)
from .moebius import (
    Moebius,
    UnitaryMoebius,
    apply,
    compose,
    decompose_elementary,
    inverse,
    map_circle,
    scaling,
    transport_fixed_points,
    unitary_from_reference,
)
from .protocol import (
    StepResult,
    decomposed_step,
    expected_resources,
    monte_carlo_resources,
    protocol_step,
    simulate_trajectory,
)
from .qubit import (
    BlochVector,
    PureState,
    ReferenceSide,
    bloch_vector,
    orthogonal_partner,
    overlap,
    overlap_circle,
    reference_inside,
    state_from_z,
    z_from_state,
)

__version__ = "0.1.0"
