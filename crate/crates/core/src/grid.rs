//! Cell-centered grid on the meridian half-strip `(r, z) in (0,1) x [0, z_len)`
//! and the two difference operators of the model.
//!
//! Radial nodes sit at `r_i = (i + 1/2) hr` with `hr = 1/nr`, so no node lies
//! on the axis or the wall. The axial direction is periodic with nodes
//! `z_j = j hz`, `hz = z_len/nz`. Stencils close:
//!
//! * at the axis by parity reflection: even fields mirror (`f(-r) = f(r)`),
//!   odd fields flip sign,
//! * at the wall by a linear Dirichlet ghost (`ghost = -interior` for a zero
//!   wall value).
//!
//! The wall ghost is solution-order (not operator-order) accurate: applying an
//! operator to a smooth function has an O(1) defect on the wall-adjacent ring,
//! which damps to O(h^2) in any solve or time integration against it. Operator
//! consistency tests therefore measure away from that ring; solve-level tests
//! measure everywhere.
//!
//! All integrals use the 3-D cylindrical measure: `2 pi sum f r_i hr hz`.

use std::sync::Arc;

use crate::error::{Error, Result};

/// Sign behavior of a field under the reflection `r -> -r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// `f(-r, z) = f(r, z)`; scalars like `omega_theta / r` and `u^z`.
    Even,
    /// `f(-r, z) = -f(r, z)`; scalars like `omega_theta`, `phi`, and `u^r`.
    Odd,
}

impl Parity {
    #[inline]
    pub fn sign(self) -> f64 {
        match self {
            Parity::Even => 1.0,
            Parity::Odd => -1.0,
        }
    }
}

#[derive(Debug)]
pub struct Grid {
    pub nr: usize,
    pub nz: usize,
    pub z_len: f64,
    pub hr: f64,
    pub hz: f64,
    /// Cell-center radii `(i + 1/2) hr`, length `nr`.
    pub r: Vec<f64>,
    /// Axial nodes `j hz`, length `nz`.
    pub z: Vec<f64>,
}

impl Grid {
    pub fn new(nr: usize, nz: usize, z_len: f64) -> Result<Arc<Grid>> {
        if nr < 4 {
            return Err(Error::config("grid.nr", format!("need nr >= 4, got {nr}")));
        }
        if nz < 4 {
            return Err(Error::config("grid.nz", format!("need nz >= 4, got {nz}")));
        }
        if !(z_len > 0.0) || !z_len.is_finite() {
            return Err(Error::config(
                "grid.z_len",
                format!("need a positive finite period, got {z_len}"),
            ));
        }
        let hr = 1.0 / nr as f64;
        let hz = z_len / nz as f64;
        let r = (0..nr).map(|i| (i as f64 + 0.5) * hr).collect();
        let z = (0..nz).map(|j| j as f64 * hz).collect();
        Ok(Arc::new(Grid {
            nr,
            nz,
            z_len,
            hr,
            hz,
            r,
            z,
        }))
    }

    #[inline]
    pub fn idx(&self, i: usize, j: usize) -> usize {
        i * self.nz + j
    }

    /// Quadrature weight of node `(i, j)` for the 3-D cylindrical measure.
    #[inline]
    pub fn weight(&self, i: usize) -> f64 {
        2.0 * std::f64::consts::PI * self.r[i] * self.hr * self.hz
    }

    pub fn same_layout(&self, other: &Grid) -> bool {
        self.nr == other.nr && self.nz == other.nz && self.z_len == other.z_len
    }
}

/// A scalar sample on the grid, row-major with the radial index outermost.
#[derive(Debug, Clone)]
pub struct ScalarField {
    pub grid: Arc<Grid>,
    pub parity: Parity,
    pub values: Vec<f64>,
}

impl ScalarField {
    pub fn zeros(grid: &Arc<Grid>, parity: Parity) -> ScalarField {
        ScalarField {
            grid: Arc::clone(grid),
            parity,
            values: vec![0.0; grid.nr * grid.nz],
        }
    }

    pub fn from_fn(
        grid: &Arc<Grid>,
        parity: Parity,
        mut f: impl FnMut(f64, f64) -> f64,
    ) -> ScalarField {
        let mut values = Vec::with_capacity(grid.nr * grid.nz);
        for i in 0..grid.nr {
            for j in 0..grid.nz {
                values.push(f(grid.r[i], grid.z[j]));
            }
        }
        ScalarField {
            grid: Arc::clone(grid),
            parity,
            values,
        }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.grid.nz + j]
    }

    #[inline]
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut f64 {
        &mut self.values[i * self.grid.nz + j]
    }

    /// Value at radial index `i - 1` as seen from row `i`, applying the axis
    /// parity ghost when `i = 0`.
    #[inline]
    pub fn below(&self, i: usize, j: usize) -> f64 {
        if i == 0 {
            self.parity.sign() * self.values[j]
        } else {
            self.values[(i - 1) * self.grid.nz + j]
        }
    }

    /// Value at radial index `i + 1` as seen from row `i`, applying the wall
    /// Dirichlet ghost (`-interior`) when `i = nr - 1`.
    #[inline]
    pub fn above(&self, i: usize, j: usize) -> f64 {
        let nz = self.grid.nz;
        if i + 1 == self.grid.nr {
            -self.values[i * nz + j]
        } else {
            self.values[(i + 1) * nz + j]
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }

    /// Shift the field by `s` nodes in the periodic axial direction.
    pub fn translated_z(&self, s: usize) -> ScalarField {
        let (nr, nz) = (self.grid.nr, self.grid.nz);
        let mut out = ScalarField::zeros(&self.grid, self.parity);
        for i in 0..nr {
            for j in 0..nz {
                out.values[i * nz + j] = self.values[i * nz + (j + nz - s % nz) % nz];
            }
        }
        out
    }
}

/// Meridian velocity pair; `u^r` is odd across the axis and vanishes at the
/// wall, `u^z` is even across the axis with zero normal derivative at the wall.
#[derive(Debug, Clone)]
pub struct VelocityField {
    pub ur: ScalarField,
    pub uz: ScalarField,
}

impl VelocityField {
    pub fn zeros(grid: &Arc<Grid>) -> VelocityField {
        VelocityField {
            ur: ScalarField::zeros(grid, Parity::Odd),
            uz: ScalarField::zeros(grid, Parity::Even),
        }
    }

    pub fn grid(&self) -> &Arc<Grid> {
        &self.ur.grid
    }

    pub fn max_abs(&self) -> f64 {
        self.ur.max_abs().max(self.uz.max_abs())
    }

    pub fn is_finite(&self) -> bool {
        self.ur.is_finite() && self.uz.is_finite()
    }
}

/// `(d_rr + (3/r) d_r + d_zz) f` for even fields: the radial part of the
/// five-dimensional Laplacian driving the diffusion of `omega_theta / r`.
///
/// The pointwise form (rather than a flux form) is deliberate: its transpose
/// against the `r`-weighted inner product has zero column sums in the
/// interior and strictly negative sums in the axis and wall columns, which is
/// the discrete source of the L^q norm decay the transport module tests.
pub fn apply_l5(f: &ScalarField) -> ScalarField {
    assert_eq!(
        f.parity,
        Parity::Even,
        "apply_l5 takes an even field (omega_theta / r transforms evenly)"
    );
    let g = &f.grid;
    let mut out = ScalarField::zeros(&f.grid, Parity::Even);
    stencil_rows(g, &mut out.values, |i, j, _r| {
        let c = f.at(i, j);
        let lo = f.below(i, j);
        let hi = f.above(i, j);
        let inv_hr2 = 1.0 / (g.hr * g.hr);
        let d2r = (hi - 2.0 * c + lo) * inv_hr2;
        let dr = (hi - lo) / (2.0 * g.hr);
        let jm = if j == 0 { g.nz - 1 } else { j - 1 };
        let jp = if j + 1 == g.nz { 0 } else { j + 1 };
        let d2z = (f.at(i, jp) - 2.0 * c + f.at(i, jm)) / (g.hz * g.hz);
        d2r + 3.0 / g.r[i] * dr + d2z
    });
    out
}

/// `(d_rr + (1/r) d_r - 1/r^2 + d_zz) f` for odd fields: the operator whose
/// Dirichlet inversion recovers the reduced stream function `phi = psi / r`.
pub fn apply_lstream(f: &ScalarField) -> ScalarField {
    assert_eq!(
        f.parity,
        Parity::Odd,
        "apply_lstream takes an odd field (phi and omega_theta transform oddly)"
    );
    let g = &f.grid;
    let mut out = ScalarField::zeros(&f.grid, Parity::Odd);
    stencil_rows(g, &mut out.values, |i, j, r| {
        let c = f.at(i, j);
        let lo = f.below(i, j);
        let hi = f.above(i, j);
        let inv_hr2 = 1.0 / (g.hr * g.hr);
        let d2r = (hi - 2.0 * c + lo) * inv_hr2;
        let dr = (hi - lo) / (2.0 * g.hr);
        let jm = if j == 0 { g.nz - 1 } else { j - 1 };
        let jp = if j + 1 == g.nz { 0 } else { j + 1 };
        let d2z = (f.at(i, jp) - 2.0 * c + f.at(i, jm)) / (g.hz * g.hz);
        d2r + dr / r - c / (r * r) + d2z
    });
    out
}

/// `2 pi integral of f r dr dz` over one period, by the midpoint rule.
/// Summation order is fixed (row-major), so results do not depend on thread
/// count.
pub fn quadrature(f: &ScalarField) -> f64 {
    let g = &f.grid;
    let mut total = 0.0;
    for i in 0..g.nr {
        let mut row = 0.0;
        for j in 0..g.nz {
            row += f.values[i * g.nz + j];
        }
        total += row * g.r[i];
    }
    2.0 * std::f64::consts::PI * g.hr * g.hz * total
}

/// Row-parallel map writing each output row independently; the work per node
/// may read any input nodes. Disjoint writes keep results bitwise identical
/// for every thread count.
fn stencil_rows(grid: &Grid, out: &mut [f64], f: impl Fn(usize, usize, f64) -> f64 + Sync) {
    use rayon::prelude::*;
    let nz = grid.nz;
    out.par_chunks_mut(nz).enumerate().for_each(|(i, row)| {
        let r = grid.r[i];
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = f(i, j, r);
        }
    });
}
