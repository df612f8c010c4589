//! Float helpers that work with and without `std`.
//!
//! `core` has no `sqrt`/`log10`/... for `f64`; with `std` disabled these
//! dispatch to `libm`.

#[cfg(feature = "std")]
mod imp {
    #[inline]
    pub fn sqrt(x: f64) -> f64 {
        x.sqrt()
    }
    #[inline]
    pub fn abs(x: f64) -> f64 {
        x.abs()
    }
    #[inline]
    pub fn floor(x: f64) -> f64 {
        x.floor()
    }
    #[inline]
    pub fn log10(x: f64) -> f64 {
        x.log10()
    }
    #[inline]
    pub fn powf(x: f64, e: f64) -> f64 {
        x.powf(e)
    }
    #[inline]
    pub fn cos(x: f64) -> f64 {
        x.cos()
    }
    #[inline]
    pub fn sin(x: f64) -> f64 {
        x.sin()
    }
}

#[cfg(not(feature = "std"))]
mod imp {
    #[inline]
    pub fn sqrt(x: f64) -> f64 {
        libm::sqrt(x)
    }
    #[inline]
    pub fn abs(x: f64) -> f64 {
        libm::fabs(x)
    }
    #[inline]
    pub fn floor(x: f64) -> f64 {
        libm::floor(x)
    }
    #[inline]
    pub fn log10(x: f64) -> f64 {
        libm::log10(x)
    }
    #[inline]
    pub fn powf(x: f64, e: f64) -> f64 {
        libm::pow(x, e)
    }
    #[inline]
    pub fn cos(x: f64) -> f64 {
        libm::cos(x)
    }
    #[inline]
    pub fn sin(x: f64) -> f64 {
        libm::sin(x)
    }
}

pub(crate) use imp::{abs, cos, floor, log10, powf, sin, sqrt};

/// 10^(x/10): dB (power) back to linear.
#[inline]
pub(crate) fn db_to_linear(db: f64) -> f64 {
    powf(10.0, db / 10.0)
}

/// 10·log10(x): linear power ratio to dB.
#[inline]
pub(crate) fn linear_to_db(x: f64) -> f64 {
    10.0 * log10(x)
}

/// Euclidean norm of a slice.
#[inline]
pub(crate) fn norm2(v: &[f64]) -> f64 {
    sqrt(v.iter().map(|&x| x * x).sum())
}

/// Dot product of equal-length slices.
#[inline]
pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}
