//! Cylinder functions of orders 0 and 1 over nonnegative real arguments,
//! their zeros, and zeros of the J0/Y0 cross product.
//!
//! Everything here is self-contained: evaluation switches between an
//! ascending series summed in double-double and a Hankel asymptotic
//! expansion, and all roots come from verified sign-change brackets.
//! Absolute accuracy is comfortably inside 1e-12 for arguments up to 1e4.

mod dd;
mod eval;
mod zeros;

use crate::error::{Error, Result};

/// Unchecked J0; callers guarantee x >= 0.
#[inline]
pub(crate) fn j0(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    if x <= eval::SERIES_CUTOFF {
        eval::j0_small(x)
    } else {
        eval::jy_large(0, x).0
    }
}

/// Unchecked J1; callers guarantee x >= 0.
#[inline]
pub(crate) fn j1(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    if x <= eval::SERIES_CUTOFF {
        eval::j1_small(x)
    } else {
        eval::jy_large(1, x).0
    }
}

/// Unchecked Y0; callers guarantee x > 0.
#[inline]
pub(crate) fn y0(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x <= eval::SERIES_CUTOFF {
        eval::y0_small(x)
    } else {
        eval::jy_large(0, x).1
    }
}

/// Unchecked Y1; callers guarantee x > 0.
#[inline]
pub(crate) fn y1(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x <= eval::SERIES_CUTOFF {
        eval::y1_small(x)
    } else {
        eval::jy_large(1, x).1
    }
}

/// Bessel function of the first kind, orders 0 and 1.
///
/// # Errors
/// `Domain` if `order > 1` or `x` is negative or non-finite.
pub fn bessel_j(order: u32, x: f64) -> Result<f64> {
    check_order(order)?;
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain(format!(
            "J{order} needs a finite argument x >= 0, got {x}"
        )));
    }
    Ok(if order == 0 { j0(x) } else { j1(x) })
}

/// Bessel function of the second kind, orders 0 and 1.
///
/// # Errors
/// `Domain` if `order > 1` or `x <= 0` (Y is logarithmically singular at the
/// origin) or `x` is non-finite.
pub fn bessel_y(order: u32, x: f64) -> Result<f64> {
    check_order(order)?;
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!(
            "Y{order} needs a finite argument x > 0, got {x}"
        )));
    }
    Ok(if order == 0 { y0(x) } else { y1(x) })
}

fn check_order(order: u32) -> Result<()> {
    if order > 1 {
        return Err(Error::Domain(format!(
            "only orders 0 and 1 are supported, got {order}"
        )));
    }
    Ok(())
}

/// The l-th positive zero of J0 (1-based).
///
/// # Errors
/// `Domain` on `l = 0`; `Convergence` if refinement fails (not observed for
/// any reachable index).
pub fn j0_zero(l: u32) -> Result<f64> {
    zeros::j0_zero_impl(l)
}

/// The k-th positive zero (1-based) of the Dirichlet cross product
/// J0(e mu_in) Y0(e mu_out) - J0(e mu_out) Y0(e mu_in).
///
/// These are the radial eigenfrequencies of an annulus with hard walls at
/// both radii.
///
/// # Errors
/// `Domain` unless `0 < mu_in < mu_out` and `k >= 1`; `Convergence` if the
/// scan fails to bracket the requested root.
pub fn cross_product_zero(mu_in: f64, mu_out: f64, k: u32) -> Result<f64> {
    zeros::cross_product_zero_impl(mu_in, mu_out, k)
}

/// Ascending table of J0 zeros, 1-based lookup.
#[derive(Clone, Debug)]
pub struct ZeroTable {
    zeros: Vec<f64>,
}

impl ZeroTable {
    /// Builds the first `count` zeros.
    ///
    /// # Errors
    /// Propagates failures from [`j0_zero`].
    pub fn up_to(count: u32) -> Result<Self> {
        let mut zeros = Vec::with_capacity(count as usize);
        for l in 1..=count {
            zeros.push(j0_zero(l)?);
        }
        debug_assert!(zeros.windows(2).all(|w| w[0] < w[1]));
        Ok(Self { zeros })
    }

    /// zeta_l, or `None` past the table end or at l = 0.
    #[must_use]
    pub fn zeta(&self, l: u32) -> Option<f64> {
        if l == 0 {
            return None;
        }
        self.zeros.get(l as usize - 1).copied()
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    #[must_use]
    pub fn as_slice(&self) -> &[f64] {
        &self.zeros
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn checked_wrappers_reject_bad_input() {
        assert!(bessel_j(2, 1.0).is_err());
        assert!(bessel_j(0, -1.0).is_err());
        assert!(bessel_j(0, f64::NAN).is_err());
        assert!(bessel_y(0, 0.0).is_err());
        assert!(bessel_y(1, -3.0).is_err());
    }

    #[test]
    fn j0_at_origin_is_one() {
        assert_eq!(bessel_j(0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(1, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn wronskian_holds_at_unit_argument() {
        // J0 Y0' - J0' Y0 = 2/(pi x) with J0' = -J1, Y0' = -Y1.
        let w = j1(1.0) * y0(1.0) - j0(1.0) * y1(1.0);
        assert!((w - 2.0 / PI).abs() < 1e-14, "wronskian residual {w:e}");
    }

    #[test]
    fn first_zero_matches_to_twelve_digits() {
        let z = j0_zero(1).unwrap();
        assert!((z - 2.404_825_557_695_773).abs() < 1e-12);
        assert!(j0(z).abs() < 1e-12);
    }

    #[test]
    fn zero_table_is_strictly_increasing() {
        let table = ZeroTable::up_to(40).unwrap();
        assert_eq!(table.len(), 40);
        assert!(table.as_slice().windows(2).all(|w| w[0] < w[1]));
        assert!(table.zeta(0).is_none());
        assert!(table.zeta(41).is_none());
        assert_eq!(table.zeta(1), Some(table.as_slice()[0]));
    }

    #[test]
    fn cross_product_residual_is_tiny() {
        let e = cross_product_zero(0.75, 1.25, 1).unwrap();
        let f = j0(e * 0.75) * y0(e * 1.25) - j0(e * 1.25) * y0(e * 0.75);
        assert!(f.abs() < 1e-13, "residual {f:e}");
    }
}
