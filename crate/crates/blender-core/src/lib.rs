//! Exact arithmetic for cones of real homogeneous forms.
//!
//! The crate provides the computational kernels behind a small lab for
//! convex cones of forms that are closed under linear changes of variable:
//! the psd cone `P_{n,2r}`, the sums of 2r-th powers `Q_{n,2r}`, the convex
//! forms `K_{n,2r}`, the one-parameter family of binary-quartic cones
//! `B_tau`, and sums of fourth powers of binary forms.  Everything on the
//! deciding path is exact: rational arithmetic, Sturm chains, and a small
//! quadratic-extension tower for the handful of square roots that show up
//! in boundary certificates.

pub mod cert;
pub mod convexity;
pub mod forms;
pub mod numeric;
pub mod quartics;
pub mod rat;
pub mod realroots;
pub mod scalar;
pub mod tower;
pub mod unipoly;
pub mod verdict;
pub mod verify;
pub mod waring;

pub use cert::{Certificate, CertificateError, CertificateTerm};
pub use forms::{BiForm, Exponent, Form, FormError, QForm, SquareMatrix, TForm};
pub use rat::Rat;
pub use realroots::{
    binary_psd_status, catalecticant, q_membership, sym_psd_status, KernelError,
    ProjectiveZero, PsdStatus, SymMatrix, SymPsdStatus, ZeroPoint,
};
pub use scalar::Scalar;
pub use tower::{Tower, TowerError};
pub use verdict::MembershipVerdict;
