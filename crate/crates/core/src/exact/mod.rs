//! Exact arithmetic: rationals, rational and GF(2) linear algebra, and
//! strict-inequality feasibility by Fourier-Motzkin elimination.

mod fm;
mod gf2;
mod qmatrix;
mod rational;

pub use fm::{
    fm_feasible, fm_solve, max_fm_rows, set_max_fm_rows, verify_certificate, FmCertificate,
    LinRow, LinSystem, DEFAULT_MAX_FM_ROWS,
};
pub use gf2::{gf2_kernel_basis, sparse_gf2_rank, BitVec, Gf2Matrix};
pub use qmatrix::{qrank, QMatrix};
pub use rational::{parse_rational, Rational};
