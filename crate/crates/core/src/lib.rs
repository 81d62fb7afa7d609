//! Axisymmetric, swirl-free incompressible flow in the unit cylinder,
//! formulated in the transported scalar `W = omega_theta / r` (azimuthal
//! vorticity over radius). `W` obeys a drift-diffusion equation whose
//! diffusion operator is the radial part of the five-dimensional Laplacian,
//!
//! ```text
//!   dW/dt + u . grad W = nu * (d_rr + (3/r) d_r + d_zz) W,    W(1, z) = 0,
//! ```
//!
//! and the velocity is recovered from `W` by a stream-function inversion
//! (solve `-(d_rr + (1/r) d_r - 1/r^2 + d_zz) phi = r W`, then take a curl).
//!
//! The domain is the unit-radius cylinder with one periodic axial cell of
//! length `z_len`. Everything is discretized with second-order central
//! differences on a cell-centered radial grid, so no node sits on the axis
//! or the wall; axis closure is by parity reflection and wall closure by a
//! linear Dirichlet ghost.
//!
//! Modules follow the pipeline: [`grid`] (fields and difference operators),
//! [`elliptic`] (stream-function solver and velocity recovery),
//! [`transport`] (time integration), [`diagnostics`] (norms and budget
//! checks), [`experiments`] (viscosity ladders, decay fits, grid
//! convergence), plus [`config`]/[`output`]/[`verify`] backing the CLI.

pub mod bessel;
pub mod config;
pub mod diagnostics;
pub mod elliptic;
pub mod error;
pub mod experiments;
pub mod grid;
pub mod output;
pub mod transport;
pub mod verify;

pub use error::{Error, Result};
