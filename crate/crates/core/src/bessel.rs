//! Bessel functions J0 and J1 by their ascending power series.
//!
//! The solver only ever evaluates these on [0, j11] (arguments at most ~3.84),
//! where the alternating series converges in a handful of terms with no
//! cancellation trouble; there is no need for asymptotic branches.

/// First positive zero of J1. The eigenmode `J1(J11_FIRST_ZERO * r) / r`
/// of the radial diffusion operator vanishes at the wall r = 1.
pub const J11_FIRST_ZERO: f64 = 3.8317059702075123;

/// J1(x) = (x/2) * sum_{k>=0} (-1)^k (x^2/4)^k / (k! (k+1)!)
pub fn j1(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 0.5 * x;
    let mut sum = term;
    for k in 1..40u32 {
        term *= -q / (k as f64 * (k as f64 + 1.0));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs().max(1e-300) {
            break;
        }
    }
    sum
}

/// J0(x) = sum_{k>=0} (-1)^k (x^2/4)^k / (k!)^2
pub fn j0(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = term;
    for k in 1..40u32 {
        term *= -q / (k as f64 * k as f64);
        sum += term;
        if term.abs() <= 1e-17 * sum.abs().max(1e-300) {
            break;
        }
    }
    sum
}

/// `J1(a*r)/r` extended continuously to the axis, where the limit is `a/2`.
pub fn j1_over_r(a: f64, r: f64) -> f64 {
    if r.abs() < 1e-12 {
        0.5 * a
    } else {
        j1(a * r) / r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reference values computed with 30-digit arithmetic (mpmath), frozen here.
    const J1_REFS: &[(f64, f64)] = &[
        (0.25, 0.12402597732272692),
        (0.5, 0.24226845767487389),
        (1.0, 0.44005058574493352),
        (2.0, 0.57672480775687339),
        (3.0, 0.33905895852593646),
        (3.5, 0.13737752736232719),
    ];

    const J0_REFS: &[(f64, f64)] = &[
        (1.0, 0.76519768655796655),
        (2.5, -0.048383776468197996),
        (J11_FIRST_ZERO, -0.40275939570255297),
    ];

    #[test]
    fn j1_matches_reference_values() {
        for &(x, want) in J1_REFS {
            let got = j1(x);
            assert!(
                (got - want).abs() <= 1e-14,
                "J1({x}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn j0_matches_reference_values() {
        for &(x, want) in J0_REFS {
            let got = j0(x);
            assert!(
                (got - want).abs() <= 1e-14,
                "J0({x}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn j11_is_a_zero_of_j1() {
        assert!(j1(J11_FIRST_ZERO).abs() < 1e-15);
    }

    #[test]
    fn j1_over_r_is_finite_and_even_near_axis() {
        let a = J11_FIRST_ZERO;
        // Limit value a/2 at the axis; the profile is an even function of r.
        assert!((j1_over_r(a, 0.0) - 0.5 * a).abs() < 1e-15);
        let eps = 1e-6;
        assert!((j1_over_r(a, eps) - j1_over_r(a, -eps)).abs() < 1e-15);
        // Frozen value of J1(j11 * 0.5) / 0.5.
        assert!((j1_over_r(a, 0.5) - 1.1614491642302972).abs() < 1e-14);
    }
}
