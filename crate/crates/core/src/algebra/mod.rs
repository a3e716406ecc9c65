//! su(3) generators, structure constants, root diagram and the
//! classification of su(2) subalgebras.

pub mod generators;
pub mod report;
pub mod roots;
pub mod rotation;
pub mod search;
pub mod structure;
pub mod triads;

pub use generators::{
    build_generator_basis, nematic_tensor, spin_matrix, Axis, Generator, GeneratorBasis,
    GeneratorMatrix, ObservableCombo,
};
pub use report::{algebra_report, AlgebraReport, InvariantCheck, TriadRecord};
pub use roots::{
    ladder_commutator, root_diagram, EigenOperator, LadderCommutator, RootDiagram, RootVector,
};
pub use rotation::{RotationStep, Su3Rotation};
pub use search::{raising_residual, search_raising_operators, RaisingSolution, SearchOutcome};
pub use structure::{
    adjoint_representation, structure_constants, AdjointMatrix, StructureConstants,
};
pub use triads::{
    classify_triad, conjugate_triad, enumerate_canonical_triads, relabel_axes_cyclic,
    triad_from_raising, SqueezeType, Su2Triad,
};
