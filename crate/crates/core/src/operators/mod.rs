//! Matrix truncations of Toeplitz, multiplication and weighted composition
//! operators in the orthonormal basis `{e_n}`.

pub mod forms;
pub mod symbol;
pub mod truncation;

pub use forms::{adjoint_kernel_residual, boundedness_functional, kernel_form_closed, kernel_form_matrix};
pub use symbol::{BiPolySymbol, BiPolyTerm};
pub use truncation::{
    block_structure_report, build_multiplication, build_toeplitz, build_weighted_composition, check_self_map, compress,
    operator_sum, BlockReport, OperatorKind, OperatorTruncation, BLOCK_THRESHOLD,
};
