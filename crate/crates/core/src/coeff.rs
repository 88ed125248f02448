//! Exact amplitudes in the ring Z[ω, 1/2], ω = e^{iπ/4}.
//!
//! A value is stored as `(a + bω + cω² + dω³) / 2^h` with 64-bit numerators.
//! Every entry of H, S, T, CS, CH (and anything built from them by sums and
//! products) lives here, so equality between amplitudes is decided exactly.
//!
//! Arithmetic is checked: a numerator that leaves the `i64` range aborts with
//! a panic naming the operation. Circuits of desk-top size stay many orders
//! of magnitude below that limit because the denominator exponent absorbs
//! the growth of `1/√2` factors.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};

use num_complex::Complex64;

/// An exact element `(a + bω + cω² + dω³) / 2^h` in canonical form.
///
/// Canonical means `h == 0` or at least one numerator coefficient is odd.
/// Zero is always `(0,0,0,0;0)`, so derived equality is value equality.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, serde::Serialize)]
pub struct CycCoeff {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
    h: u32,
}

#[track_caller]
fn ck_add(x: i64, y: i64) -> i64 {
    x.checked_add(y)
        .unwrap_or_else(|| panic!("CycCoeff overflow: {x} + {y} exceeds 64-bit numerator range"))
}

#[track_caller]
fn ck_mul(x: i64, y: i64) -> i64 {
    x.checked_mul(y)
        .unwrap_or_else(|| panic!("CycCoeff overflow: {x} * {y} exceeds 64-bit numerator range"))
}

#[track_caller]
fn ck_shl(x: i64, s: u32) -> i64 {
    if x == 0 {
        return 0;
    }
    if s >= 63 || x.unsigned_abs().leading_zeros() <= s {
        panic!("CycCoeff overflow: {x} << {s} exceeds 64-bit numerator range");
    }
    x << s
}

impl CycCoeff {
    pub const ZERO: Self = Self { a: 0, b: 0, c: 0, d: 0, h: 0 };
    pub const ONE: Self = Self { a: 1, b: 0, c: 0, d: 0, h: 0 };
    /// ω = e^{iπ/4}.
    pub const OMEGA: Self = Self { a: 0, b: 1, c: 0, d: 0, h: 0 };
    /// i = ω².
    pub const I: Self = Self { a: 0, b: 0, c: 1, d: 0, h: 0 };
    /// √2 = ω − ω³.
    pub const SQRT2: Self = Self { a: 0, b: 1, c: 0, d: -1, h: 0 };
    /// 1/√2 = (ω − ω³)/2.
    pub const FRAC_1_SQRT2: Self = Self { a: 0, b: 1, c: 0, d: -1, h: 1 };
    pub const HALF: Self = Self { a: 1, b: 0, c: 0, d: 0, h: 1 };

    /// Builds and canonicalizes `(a + bω + cω² + dω³) / 2^h`.
    pub fn new(a: i64, b: i64, c: i64, d: i64, h: u32) -> Self {
        Self { a, b, c, d, h }.canonicalize()
    }

    pub fn from_int(a: i64) -> Self {
        Self::new(a, 0, 0, 0, 0)
    }

    /// Numerator coefficients and denominator exponent `(a, b, c, d, h)`.
    pub fn parts(&self) -> (i64, i64, i64, i64, u32) {
        (self.a, self.b, self.c, self.d, self.h)
    }

    /// ω^k for any integer k.
    pub fn omega_pow(k: i64) -> Self {
        Self::ONE.mul_omega_pow(k)
    }

    /// i^k for any integer k.
    pub fn i_pow(k: i64) -> Self {
        Self::omega_pow(2 * k)
    }

    /// (1/√2)^k.
    pub fn inv_sqrt2_pow(k: u32) -> Self {
        // (1/√2)^2 = 1/2
        let half = Self::new(1, 0, 0, 0, k / 2);
        if k % 2 == 1 {
            half * Self::FRAC_1_SQRT2
        } else {
            half
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0 && self.c == 0 && self.d == 0
    }

    /// Divides out common factors of two until the form is canonical.
    pub fn canonicalize(mut self) -> Self {
        if self.is_zero() {
            return Self::ZERO;
        }
        let tz = (self.a | self.b | self.c | self.d).trailing_zeros().min(self.h);
        if tz > 0 {
            self.a >>= tz;
            self.b >>= tz;
            self.c >>= tz;
            self.d >>= tz;
            self.h -= tz;
        }
        self
    }

    /// Multiplication by ω^k is a signed rotation of the coefficients.
    pub fn mul_omega_pow(self, k: i64) -> Self {
        let mut v = [self.a, self.b, self.c, self.d];
        for _ in 0..k.rem_euclid(8) {
            v = [-v[3], v[0], v[1], v[2]];
        }
        Self { a: v[0], b: v[1], c: v[2], d: v[3], h: self.h }
    }

    /// Complex conjugate: ω ↦ ω⁻¹ = −ω³.
    pub fn conj(self) -> Self {
        Self { a: self.a, b: -self.d, c: -self.c, d: -self.b, h: self.h }
    }

    /// Returns the k in 0..8 with `self == ω^k · other`, if any.
    pub fn omega_ratio(self, other: Self) -> Option<u8> {
        (0..8u8).find(|&k| other.mul_omega_pow(k as i64) == self)
    }

    pub fn to_complex(&self) -> Complex64 {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let scale = 0.5f64.powi(self.h as i32);
        let (a, b, c, d) = (self.a as f64, self.b as f64, self.c as f64, self.d as f64);
        // ω = r + ri, ω² = i, ω³ = −r + ri
        Complex64::new((a + b * r - d * r) * scale, (b * r + c + d * r) * scale)
    }

    /// Human-readable approximation, e.g. `0.707107+0.707107i`.
    pub fn approx_string(&self) -> String {
        let z = self.to_complex();
        let clean = |x: f64| if x.abs() < 5e-13 { 0.0 } else { x };
        let (re, im) = (clean(z.re), clean(z.im));
        if im < 0.0 {
            format!("{re:.6}-{:.6}i", -im)
        } else {
            format!("{re:.6}+{im:.6}i")
        }
    }

    fn lift(self, h: u32) -> [i64; 4] {
        let s = h - self.h;
        [ck_shl(self.a, s), ck_shl(self.b, s), ck_shl(self.c, s), ck_shl(self.d, s)]
    }
}

impl fmt::Debug for CycCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{};{}) ≈ {}",
            self.a,
            self.b,
            self.c,
            self.d,
            self.h,
            self.approx_string()
        )
    }
}

impl fmt::Display for CycCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.approx_string())
    }
}

impl Add for CycCoeff {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let h = self.h.max(rhs.h);
        let x = self.lift(h);
        let y = rhs.lift(h);
        Self {
            a: ck_add(x[0], y[0]),
            b: ck_add(x[1], y[1]),
            c: ck_add(x[2], y[2]),
            d: ck_add(x[3], y[3]),
            h,
        }
        .canonicalize()
    }
}

impl AddAssign for CycCoeff {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Neg for CycCoeff {
    type Output = Self;
    fn neg(self) -> Self {
        Self { a: -self.a, b: -self.b, c: -self.c, d: -self.d, h: self.h }
    }
}

impl Sub for CycCoeff {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for CycCoeff {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::ZERO;
        }
        let x = [self.a, self.b, self.c, self.d];
        let y = [rhs.a, rhs.b, rhs.c, rhs.d];
        let mut out = [0i64; 4];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                let p = ck_mul(xi, yj);
                // ω⁴ = −1
                let k = i + j;
                if k < 4 {
                    out[k] = ck_add(out[k], p);
                } else {
                    out[k - 4] = ck_add(out[k - 4], -p);
                }
            }
        }
        let h = self
            .h
            .checked_add(rhs.h)
            .expect("CycCoeff overflow: denominator exponent");
        Self { a: out[0], b: out[1], c: out[2], d: out[3], h }.canonicalize()
    }
}

impl MulAssign for CycCoeff {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl std::iter::Sum for CycCoeff {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}

impl std::iter::Product for CycCoeff {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ONE, Mul::mul)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(a: i64, b: i64, cc: i64, d: i64, h: u32) -> CycCoeff {
        CycCoeff::new(a, b, cc, d, h)
    }

    #[test]
    fn add_examples() {
        assert_eq!(c(1, 0, 0, 0, 0) + c(-1, 0, 0, 0, 0), CycCoeff::ZERO);
        assert_eq!(c(1, 0, 0, 0, 0) + c(0, 0, 1, 0, 0), c(1, 0, 1, 0, 0));
        assert_eq!((c(1, 0, 0, 0, 1) + c(1, 0, 0, 0, 1)).parts(), (1, 0, 0, 0, 0));
    }

    #[test]
    fn mul_examples() {
        let sqrt2 = c(0, 1, 0, -1, 0);
        assert_eq!((sqrt2 * sqrt2).parts(), (2, 0, 0, 0, 0));
        let w = CycCoeff::OMEGA;
        let w8: CycCoeff = std::iter::repeat_n(w, 8).product();
        assert_eq!(w8, CycCoeff::ONE);
        let r = CycCoeff::FRAC_1_SQRT2;
        assert_eq!((r * r).parts(), (1, 0, 0, 0, 1));
        let z = r.to_complex();
        assert!((z.re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15 && z.im.abs() < 1e-15);
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(CycCoeff { a: 2, b: 2, c: 0, d: 0, h: 1 }.canonicalize().parts(), (1, 1, 0, 0, 0));
        assert_eq!(CycCoeff { a: 0, b: 0, c: 0, d: 0, h: 5 }.canonicalize().parts(), (0, 0, 0, 0, 0));
        assert_eq!(CycCoeff { a: 4, b: 0, c: 0, d: 0, h: 1 }.canonicalize().parts(), (2, 0, 0, 0, 0));
        // odd-at-h=0 stays put; evens at h=0 stay put too
        assert_eq!(c(4, 0, 0, 0, 0).parts(), (4, 0, 0, 0, 0));
    }

    #[test]
    fn i_squared_and_conj() {
        assert_eq!(CycCoeff::I * CycCoeff::I, CycCoeff::from_int(-1));
        assert_eq!(CycCoeff::OMEGA * CycCoeff::OMEGA.conj(), CycCoeff::ONE);
        assert_eq!(CycCoeff::inv_sqrt2_pow(3), CycCoeff::FRAC_1_SQRT2 * CycCoeff::HALF);
        assert_eq!(CycCoeff::i_pow(3), -CycCoeff::I);
        assert_eq!(CycCoeff::omega_pow(-1), CycCoeff::OMEGA.conj());
    }

    #[test]
    fn omega_ratio_finds_phase() {
        let x = c(3, -1, 2, 5, 2);
        assert_eq!(x.mul_omega_pow(5).omega_ratio(x), Some(5));
        assert_eq!((x + x).omega_ratio(x), None);
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_aborts() {
        let big = CycCoeff::from_int(i64::MAX / 2 + 1);
        let _ = big * CycCoeff::from_int(4);
    }

    fn arb() -> impl Strategy<Value = CycCoeff> {
        (-20i64..20, -20i64..20, -20i64..20, -20i64..20, 0u32..4)
            .prop_map(|(a, b, c, d, h)| CycCoeff::new(a, b, c, d, h))
    }

    proptest! {
        #[test]
        fn ring_axioms(x in arb(), y in arb(), z in arb()) {
            prop_assert_eq!((x * y) * z, x * (y * z));
            prop_assert_eq!((x + y) + z, x + (y + z));
            prop_assert_eq!(x * (y + z), x * y + x * z);
            prop_assert_eq!(x * y, y * x);
            prop_assert_eq!(x - x, CycCoeff::ZERO);
        }

        #[test]
        fn float_embedding_is_homomorphic(
            xs in proptest::collection::vec(
                (-3i64..4, -3i64..4, -3i64..4, -3i64..4, 0u32..3)
                    .prop_map(|(a, b, c, d, h)| CycCoeff::new(a, b, c, d, h)),
                1..=20,
            ),
            y in arb(),
        ) {
            let exact: CycCoeff = xs.iter().copied().product();
            let float = xs.iter().fold(Complex64::new(1.0, 0.0), |acc, x| acc * x.to_complex());
            // cancellation can make the product far smaller than its factors
            let size: f64 = xs
                .iter()
                .map(|x| {
                    let (a, b, c, d, h) = x.parts();
                    (a.abs() + b.abs() + c.abs() + d.abs()) as f64 / f64::from(1u32 << h)
                })
                .product();
            let tol = 1e-12 * (1.0 + size + y.to_complex().norm());
            prop_assert!((exact.to_complex() - float).norm() <= tol);
            prop_assert!(((exact + y).to_complex() - (float + y.to_complex())).norm() <= tol);
        }

        #[test]
        fn canonical_form_is_unique(x in arb(), s in 0u32..5) {
            let (a, b, cc, d, h) = x.parts();
            let scaled = CycCoeff::new(a << s, b << s, cc << s, d << s, h + s);
            prop_assert_eq!(scaled, x);
            prop_assert!(h == 0 || (a | b | cc | d) & 1 == 1);
        }
    }
}
