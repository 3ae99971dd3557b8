//! HN ideals and toric kernels of monomial curves, the colon construction
//! over `A[X,Y]`, and its seeded specializations.

mod hn;
mod northcott;
mod specialize;

pub use hn::{
    analyze_hn, certify_hn_prime, hn_generators, hn_ideal, hn_matrix, hn_ring, hn_witness, m_vector,
    toric_kernel, HNSpec, MVector, XYZ,
};
pub use northcott::{northcott_build, northcott_report, verify_k_equals_l, NorthcottContext};
pub use specialize::{generic_specialize, SpecializationTrial};
