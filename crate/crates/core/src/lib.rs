//! Exact symbolic arithmetic for L-functions and Hasse-Weil zeta functions:
//! a period field with conjugation, determinant lines with Q-structures,
//! Frobenius modules and Euler factors, point counting over finite fields,
//! weak Hodge cohomology of explicit Hodge data, and a harness that checks
//! pole-order and special-value predictions on bundled motivic data.

pub mod conj;
pub mod frob;
pub mod hodge;
pub mod linalg;
pub mod period;
pub mod qdet;
pub mod ratpoly;
pub mod zeta;
