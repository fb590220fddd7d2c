//! Operator p-norms `||A||_{p,p}` of complex square matrices.
//!
//! Exact values at `p = 1, 2, inf`, interpolation upper bounds, ascent and
//! eigenvector lower bounds, exact formulas for structured families
//! (magic squares, circulants, Hankel-mod matrices, direct sums, rank-one
//! tensor blocks) and sampled norm profiles over `p`.
//!
//! ```
//! use pnorm::{certified_bound, CMatrix, Exponent};
//!
//! let magic = CMatrix::from_real_rows(&[&[8.0, 1.0, 6.0], &[3.0, 5.0, 7.0], &[4.0, 9.0, 2.0]]).unwrap();
//! let b = certified_bound(&magic, Exponent::Finite(3.0), 0).unwrap();
//! assert_eq!((b.lower, b.upper), (15.0, 15.0));
//! ```

pub mod error;
pub mod estimator;
pub mod exact;
pub mod exponent;
pub mod interp;
pub mod interval;
pub mod io;
pub mod matrix;
pub mod sample;
pub mod structured;
pub mod vector;

pub use error::{NormError, Result};
pub use estimator::{
    anchor_extrapolation, ascent_lower_bound, ascent_trace, certified_bound, certified_bound_with,
    eigen_lower_bound, oracle_norm, AscentResult, BoundOptions, Certifier, EigenCertificate,
    OracleResult,
};
pub use exact::{anchor_norms, is_p_isometry, norm_inf, norm_one, norm_two, AnchorNorms};
pub use exponent::{dual_exponent, Exponent};
pub use interp::{
    default_grid, is_log_affine, la_envelope, profile, profile_with, riesz_thorin_bound, upper_bound,
    LaClassification, LowerProvenance, NormBound, PNormProfile, UpperProvenance,
};
pub use interval::Interval;
pub use matrix::{adjoint, CMatrix};
pub use num_complex::Complex64;
pub use vector::{duality_map, pairing, vec_norm, CVector};
