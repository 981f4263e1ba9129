//! Signed log-domain reals and the log-gamma family.
//!
//! Products of Gamma functions at D ~ 10^3 overflow `f64` long before the
//! quantities we care about do, so everything upstream is carried as a sign
//! plus a natural log of the magnitude. The log is kept as an unevaluated
//! pair `hi + lo` so that conversion from and back to `f64` is exact to a few
//! ulp even when `|ln x|` is in the hundreds.

use core::cmp::Ordering;
use core::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

const LN2_HI: f64 = 6.931_471_803_691_238_164_90e-01;
const LN2_LO: f64 = 1.908_214_929_270_587_700_02e-10;

/// A real number stored as `sign * exp(logmag)`.
///
/// `sign == 0` is an exact zero; its log magnitude reads as `-inf`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SignedLogReal {
    sign: i8,
    hi: f64,
    lo: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Combine {
    Product,
    Sum,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn renorm(hi: f64, lo: f64) -> (f64, f64) {
    if !hi.is_finite() {
        return (hi, 0.0);
    }
    let s = hi + lo;
    (s, lo - (s - hi))
}

impl SignedLogReal {
    pub const ZERO: Self = Self {
        sign: 0,
        hi: f64::NEG_INFINITY,
        lo: 0.0,
    };
    pub const ONE: Self = Self {
        sign: 1,
        hi: 0.0,
        lo: 0.0,
    };

    /// Builds `sign * exp(logmag)`. A zero sign, or a log magnitude of `-inf`,
    /// gives exact zero.
    pub fn new(sign: i8, logmag: f64) -> Self {
        debug_assert!(!logmag.is_nan(), "NaN log magnitude");
        if sign == 0 || logmag == f64::NEG_INFINITY {
            return Self::ZERO;
        }
        Self {
            sign: sign.signum(),
            hi: logmag,
            lo: 0.0,
        }
    }

    /// Positive number with the given natural log.
    pub fn from_log(logmag: f64) -> Self {
        Self::new(1, logmag)
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            return Self::ZERO;
        }
        let sign = if x < 0.0 { -1 } else { 1 };
        let (f, e) = libm::frexp(x.abs());
        let e = e as f64;
        // e*LN2_HI is exact; the remaining pieces are small.
        let (hi, lo) = two_sum(e * LN2_HI, e * LN2_LO + libm::log(f));
        let (hi, lo) = renorm(hi, lo);
        Self { sign, hi, lo }
    }

    pub fn to_f64(self) -> f64 {
        if self.sign == 0 {
            return 0.0;
        }
        if self.hi > 710.0 {
            return self.sign as f64 * f64::INFINITY;
        }
        if self.hi < -746.0 {
            return self.sign as f64 * 0.0;
        }
        let k = libm::round(self.hi / core::f64::consts::LN_2);
        let r = ((self.hi - k * LN2_HI) - k * LN2_LO) + self.lo;
        self.sign as f64 * libm::ldexp(libm::exp(r), k as i32)
    }

    pub fn sign(self) -> i8 {
        self.sign
    }

    /// Natural log of the magnitude (`-inf` for zero).
    pub fn logmag(self) -> f64 {
        if self.sign == 0 {
            f64::NEG_INFINITY
        } else {
            self.hi + self.lo
        }
    }

    pub fn is_zero(self) -> bool {
        self.sign == 0
    }

    pub fn abs(self) -> Self {
        Self {
            sign: self.sign.abs(),
            ..self
        }
    }

    pub fn recip(self) -> Self {
        assert!(self.sign != 0, "reciprocal of zero");
        Self {
            sign: self.sign,
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    /// `|self|^p`. Zero to a positive power stays zero.
    pub fn pow_abs(self, p: f64) -> Self {
        if self.sign == 0 {
            return if p > 0.0 { Self::ZERO } else { Self::ONE };
        }
        let hi = self.hi * p;
        let err = libm::fma(self.hi, p, -hi);
        let (hi, lo) = renorm(hi, err + self.lo * p);
        Self { sign: 1, hi, lo }
    }

    /// Ordering by magnitude only.
    pub fn cmp_abs(self, other: Self) -> Ordering {
        self.logmag()
            .partial_cmp(&other.logmag())
            .unwrap_or(Ordering::Equal)
    }

    /// Multiplies by `exp(t)`.
    pub fn scale_exp(self, t: f64) -> Self {
        if self.sign == 0 {
            return self;
        }
        let (hi, e) = two_sum(self.hi, t);
        let (hi, lo) = renorm(hi, e + self.lo);
        Self { hi, lo, ..self }
    }
}

impl Default for SignedLogReal {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<f64> for SignedLogReal {
    fn from(x: f64) -> Self {
        Self::from_f64(x)
    }
}

impl Neg for SignedLogReal {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            sign: -self.sign,
            ..self
        }
    }
}

impl Mul for SignedLogReal {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.sign == 0 || rhs.sign == 0 {
            return Self::ZERO;
        }
        let (hi, e) = two_sum(self.hi, rhs.hi);
        let (hi, lo) = renorm(hi, e + self.lo + rhs.lo);
        Self {
            sign: self.sign * rhs.sign,
            hi,
            lo,
        }
    }
}

impl Div for SignedLogReal {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.recip()
    }
}

impl Add for SignedLogReal {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        sum([self, rhs])
    }
}

impl Sub for SignedLogReal {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        sum([self, -rhs])
    }
}

/// Product or sum of a non-empty list.
pub fn combine(terms: &[SignedLogReal], mode: Combine) -> SignedLogReal {
    assert!(!terms.is_empty(), "combine needs at least one term");
    match mode {
        Combine::Product => product(terms.iter().copied()),
        Combine::Sum => sum(terms.iter().copied()),
    }
}

pub fn product<I: IntoIterator<Item = SignedLogReal>>(terms: I) -> SignedLogReal {
    terms.into_iter().fold(SignedLogReal::ONE, |acc, t| acc * t)
}

/// Sum with a single shift by the largest magnitude.
pub fn sum<I>(terms: I) -> SignedLogReal
where
    I: IntoIterator<Item = SignedLogReal>,
    I::IntoIter: Clone,
{
    let iter = terms.into_iter();
    let mut top: Option<SignedLogReal> = None;
    for t in iter.clone() {
        if t.sign != 0 && top.is_none_or(|m| t.hi + t.lo > m.hi + m.lo) {
            top = Some(t);
        }
    }
    let Some(m) = top else {
        return SignedLogReal::ZERO;
    };
    let mut s = 0.0;
    for t in iter {
        if t.sign != 0 {
            s += t.sign as f64 * libm::exp((t.hi - m.hi) + (t.lo - m.lo));
        }
    }
    if s == 0.0 {
        return SignedLogReal::ZERO;
    }
    let sign = if s < 0.0 { -1 } else { 1 };
    let (hi, lo) = renorm(m.hi, m.lo + libm::log(s.abs()));
    SignedLogReal { sign, hi, lo }
}

fn check_positive(x: f64, what: &str) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(alloc::format!(
            "{what} requires a positive finite argument, got {x}"
        )))
    }
}

/// `ln Γ(x)` for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    check_positive(x, "log_gamma")?;
    Ok(libm::lgamma_r(x).0)
}

/// `ln k!`.
pub fn log_factorial(k: u64) -> f64 {
    libm::lgamma_r(k as f64 + 1.0).0
}

// Stirling tail sum_{k} B_{2k} / (2k (2k-1) y^{2k-1}), good to ~1e-17 for y >= 10.
fn stirling_tail(y: f64) -> f64 {
    const C: [f64; 8] = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
        -691.0 / 360_360.0,
        1.0 / 156.0,
        -3617.0 / 122_400.0,
    ];
    let r = 1.0 / y;
    let r2 = r * r;
    let mut acc = 0.0;
    for c in C.iter().rev() {
        acc = acc * r2 + c;
    }
    acc * r
}

/// `ln (x)_a = ln Γ(x+a) − ln Γ(x)`.
///
/// Small integer `a` is summed directly; for `x >= 10` the two Stirling
/// series are differenced analytically so nothing cancels when `a << x`.
pub fn log_pochhammer(x: f64, a: f64) -> Result<f64> {
    check_positive(x, "log_pochhammer")?;
    if !(a >= 0.0) || !a.is_finite() {
        return Err(Error::domain(alloc::format!(
            "log_pochhammer requires a non-negative increment, got {a}"
        )));
    }
    if a == 0.0 {
        return Ok(0.0);
    }
    if libm::trunc(a) == a && a <= 64.0 {
        let mut s = 0.0;
        for k in 0..a as u32 {
            s += libm::log(x + k as f64);
        }
        return Ok(s);
    }
    if x >= 10.0 {
        let y = x + a;
        let main = (x - 0.5) * libm::log1p(a / x) + a * (libm::log(y) - 1.0);
        return Ok(main + (stirling_tail(y) - stirling_tail(x)));
    }
    Ok(libm::lgamma_r(x + a).0 - libm::lgamma_r(x).0)
}

/// `ln B(a, b)`.
pub fn log_beta(a: f64, b: f64) -> Result<f64> {
    check_positive(a, "log_beta")?;
    check_positive(b, "log_beta")?;
    let (s, t) = if a <= b { (a, b) } else { (b, a) };
    Ok(log_gamma(s)? - log_pochhammer(t, s)?)
}

/// Digamma `ψ(x)` for `x > 0`.
pub fn digamma(x: f64) -> Result<f64> {
    check_positive(x, "digamma")?;
    let mut shift = 0.0;
    let mut y = x;
    while y < 10.0 {
        shift += 1.0 / y;
        y += 1.0;
    }
    const C: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 120.0,
        1.0 / 252.0,
        -1.0 / 240.0,
        1.0 / 132.0,
        -691.0 / 32_760.0,
        1.0 / 12.0,
    ];
    let r2 = 1.0 / (y * y);
    let mut acc = 0.0;
    for c in C.iter().rev() {
        acc = acc * r2 + c;
    }
    Ok(libm::log(y) - 0.5 / y - acc * r2 - shift)
}
