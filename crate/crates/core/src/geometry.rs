//! Rectangular uniform planar arrays: element index maps, phase exponents and
//! array-response (steering) vectors.
//!
//! Elements are indexed 1..=total on the public API. Internally index `k`
//! maps to grid coordinates `i = (k-1) mod nx` (horizontal) and
//! `j = floor((k-1)/nx)` (vertical), so element 1 sits at the array origin.

use std::f64::consts::TAU;

use nalgebra::DVector;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Propagation direction seen from an array, in radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction {
    pub azimuth: f64,
    pub elevation: f64,
}

impl Direction {
    pub fn new(azimuth: f64, elevation: f64) -> Result<Self> {
        if !azimuth.is_finite() || !elevation.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "direction angles must be finite, got azimuth={azimuth}, elevation={elevation}"
            )));
        }
        Ok(Self { azimuth, elevation })
    }

    pub fn from_degrees(azimuth_deg: f64, elevation_deg: f64) -> Result<Self> {
        Self::new(azimuth_deg.to_radians(), elevation_deg.to_radians())
    }
}

/// Layout of a rectangular uniform planar array.
///
/// Spacings and wavelength are in meters. The model assumes sub-half-wavelength
/// element spacing; larger spacing is accepted but flagged by
/// [`ArrayGeometry::exceeds_half_wavelength`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArrayGeometry {
    /// Horizontal element count.
    pub nx: usize,
    /// Vertical element count.
    pub ny: usize,
    /// Horizontal element spacing in meters.
    pub dx: f64,
    /// Vertical element spacing in meters.
    pub dy: f64,
    /// Carrier wavelength in meters.
    pub wavelength: f64,
}

impl ArrayGeometry {
    pub fn new(nx: usize, ny: usize, dx: f64, dy: f64, wavelength: f64) -> Result<Self> {
        if nx < 1 || ny < 1 {
            return Err(Error::InvalidParameter(format!(
                "element counts must be at least 1, got {nx}x{ny}"
            )));
        }
        if !(dx > 0.0) || !(dy > 0.0) || !dx.is_finite() || !dy.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "element spacings must be positive and finite, got dx={dx}, dy={dy}"
            )));
        }
        if !(wavelength > 0.0) || !wavelength.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "wavelength must be positive and finite, got {wavelength}"
            )));
        }
        Ok(Self { nx, ny, dx, dy, wavelength })
    }

    /// Total number of elements.
    pub fn total(&self) -> usize {
        self.nx * self.ny
    }

    /// Area of a single element, spacing_x * spacing_y.
    pub fn element_area(&self) -> f64 {
        self.dx * self.dy
    }

    /// True when either spacing exceeds half a wavelength. The correlation
    /// and area models assume sub-half-wavelength spacing, so callers should
    /// surface this as a warning.
    pub fn exceeds_half_wavelength(&self) -> bool {
        let half = self.wavelength / 2.0;
        self.dx > half || self.dy > half
    }

    /// Grid coordinates of element `k` (1-based): returns `(i, j)` with
    /// `i = (k-1) mod nx` and `j = floor((k-1)/nx)`.
    pub fn index_maps(&self, k: usize) -> Result<(usize, usize)> {
        if k < 1 || k > self.total() {
            return Err(Error::IndexOutOfRange { index: k, total: self.total() });
        }
        Ok(((k - 1) % self.nx, (k - 1) / self.nx))
    }

    /// Path-length exponent of element `k` toward `dir`, in meters:
    /// `i(k)*dx*cos(el)*sin(az) + j(k)*dy*sin(el)`.
    ///
    /// Wavelength does not enter here; the 2*pi/lambda factor is applied in
    /// [`ArrayGeometry::array_response`].
    pub fn exponent(&self, k: usize, dir: Direction) -> Result<f64> {
        let (i, j) = self.index_maps(k)?;
        Ok(i as f64 * self.dx * dir.elevation.cos() * dir.azimuth.sin()
            + j as f64 * self.dy * dir.elevation.sin())
    }

    /// Array-response vector at `dir`: entry `k` is
    /// `exp(j * 2*pi/lambda * exponent(k))`. Entry 1 is exactly 1.
    pub fn array_response(&self, dir: Direction) -> DVector<Complex64> {
        let scale = TAU / self.wavelength;
        DVector::from_iterator(
            self.total(),
            (1..=self.total()).map(|k| {
                // index is in range by construction
                let e = self.exponent(k, dir).expect("index in range");
                Complex64::from_polar(1.0, scale * e)
            }),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn geom(nx: usize, ny: usize) -> ArrayGeometry {
        ArrayGeometry::new(nx, ny, 0.5, 0.5, 1.0).unwrap()
    }

    #[test]
    fn index_maps_first_element() {
        assert_eq!(geom(8, 32).index_maps(1).unwrap(), (0, 0));
        assert_eq!(geom(3, 5).index_maps(1).unwrap(), (0, 0));
    }

    #[test]
    fn index_maps_wraps_rows() {
        // k=9 with nx=8 starts the second row
        assert_eq!(geom(8, 32).index_maps(9).unwrap(), (0, 1));
    }

    #[test]
    fn index_maps_last_element_corner() {
        let g = geom(8, 32);
        assert_eq!(g.index_maps(g.total()).unwrap(), (7, 31));
    }

    #[test]
    fn index_maps_rejects_out_of_range() {
        let g = geom(4, 4);
        assert!(matches!(g.index_maps(0), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(g.index_maps(17), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn exponent_zero_for_first_element() {
        let g = geom(8, 4);
        let d = Direction::new(0.7, -0.3).unwrap();
        assert_eq!(g.exponent(1, d).unwrap(), 0.0);
    }

    #[test]
    fn exponent_half_wavelength_at_broadside() {
        // k=2, dx = lambda/2, azimuth pi/2, elevation 0 -> cos(el)*sin(az) = 1
        let g = geom(8, 4);
        let d = Direction::new(FRAC_PI_2, 0.0).unwrap();
        assert_relative_eq!(g.exponent(2, d).unwrap(), 0.5, max_relative = 1e-15);
    }

    #[test]
    fn exponent_vanishes_in_first_column_at_zero_elevation() {
        // i = 0 kills the horizontal term, sin(0) = 0 kills the vertical one
        let g = geom(4, 4);
        for az in [0.0, 0.3, 1.1, -2.0] {
            let d = Direction::new(az, 0.0).unwrap();
            for j in 0..4 {
                let k = 1 + j * 4; // first column: i = 0
                assert_eq!(g.exponent(k, d).unwrap(), 0.0);
            }
        }
    }

    #[test]
    fn array_response_first_entry_is_one() {
        let g = geom(8, 32);
        let a = g.array_response(Direction::new(1.234, -0.456).unwrap());
        assert_eq!(a[0], Complex64::new(1.0, 0.0));
    }

    #[test]
    fn array_response_two_element_opposition() {
        // 2x1 array, dx = lambda/2, endfire azimuth: entries [1, exp(j pi)]
        let g = ArrayGeometry::new(2, 1, 0.5, 0.5, 1.0).unwrap();
        let a = g.array_response(Direction::new(FRAC_PI_2, 0.0).unwrap());
        assert_relative_eq!(a[0].re, 1.0, epsilon = 1e-15);
        assert_relative_eq!(a[0].im, 0.0, epsilon = 1e-15);
        assert_relative_eq!(a[1].re, -1.0, epsilon = 1e-12);
        assert!(a[1].im.abs() < 1e-12);
    }

    #[test]
    fn array_response_unit_modulus_and_norm() {
        let g = geom(8, 32);
        let a = g.array_response(Direction::new(PI / 7.0, PI / 5.0).unwrap());
        for v in a.iter() {
            assert!((v.norm() - 1.0).abs() < 1e-12);
        }
        assert_relative_eq!(a.norm_squared(), g.total() as f64, max_relative = 1e-12);
    }

    #[test]
    fn array_response_conjugate_symmetry() {
        // flipping the signs of cos(el)sin(az) and sin(el) conjugates every entry;
        // with elevation negated and azimuth negated both factors flip sign
        let g = geom(5, 3);
        let d = Direction::new(0.8, 0.25).unwrap();
        let neg = Direction::new(-0.8, -0.25).unwrap();
        let a = g.array_response(d);
        let b = g.array_response(neg);
        for (x, y) in a.iter().zip(b.iter()) {
            assert_relative_eq!(x.re, y.re, epsilon = 1e-12);
            assert_relative_eq!(x.im, -y.im, epsilon = 1e-12);
        }
    }

    #[test]
    fn spacing_warning_flag() {
        assert!(!geom(2, 2).exceeds_half_wavelength());
        let wide = ArrayGeometry::new(2, 2, 0.6, 0.5, 1.0).unwrap();
        assert!(wide.exceeds_half_wavelength());
    }

    #[test]
    fn rejects_degenerate_geometry() {
        assert!(ArrayGeometry::new(0, 1, 0.5, 0.5, 1.0).is_err());
        assert!(ArrayGeometry::new(2, 2, 0.0, 0.5, 1.0).is_err());
        assert!(ArrayGeometry::new(2, 2, 0.5, -0.1, 1.0).is_err());
        assert!(ArrayGeometry::new(2, 2, 0.5, 0.5, 0.0).is_err());
        assert!(Direction::new(f64::NAN, 0.0).is_err());
        assert!(Direction::new(0.0, f64::INFINITY).is_err());
    }

    proptest! {
        #[test]
        fn index_maps_is_a_bijection(nx in 1usize..12, ny in 1usize..12) {
            let g = geom(nx, ny);
            let mut seen = vec![false; nx * ny];
            for k in 1..=g.total() {
                let (i, j) = g.index_maps(k).unwrap();
                prop_assert!(i < nx && j < ny);
                let slot = j * nx + i;
                prop_assert!(!seen[slot]);
                seen[slot] = true;
            }
            prop_assert!(seen.iter().all(|&s| s));
        }

        #[test]
        fn array_response_entries_unit_modulus(
            nx in 1usize..10, ny in 1usize..10,
            az in -3.2f64..3.2, el in -1.6f64..1.6,
        ) {
            let g = geom(nx, ny);
            let a = g.array_response(Direction::new(az, el).unwrap());
            for v in a.iter() {
                prop_assert!((v.norm() - 1.0).abs() < 1e-12);
            }
            let n2 = a.norm_squared();
            prop_assert!((n2 - g.total() as f64).abs() <= 1e-10 * g.total() as f64);
        }
    }
}
