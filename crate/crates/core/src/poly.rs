//! Exact univariate polynomials over the integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

/// Integer polynomial, constant term first. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c·t^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `t - a`
    pub fn linear(a: i64) -> Self {
        Self::from_i64(&[-a, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + big_to_f64(c))
    }

    /// `Σ |a_k|·r^k`, used for rounding-error bounds of Horner evaluation.
    pub fn abs_eval(&self, r: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * r + big_to_f64(c).abs())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// `p(-t)`
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `t^deg · p(1/t)`
    pub fn reciprocal(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    /// Divides out the largest power of `t`; returns the stripped polynomial and the power.
    pub fn strip_t_power(&self) -> (Self, usize) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (Self::new(self.coeffs[k..].to_vec()), k)
    }

    /// Flips the sign so that the leading coefficient is positive.
    pub fn with_positive_leading(&self) -> Self {
        if self.leading().is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Alexander-style normalisation: `t ∤ p`, positive leading coefficient.
    pub fn normalized(&self) -> Self {
        self.strip_t_power().0.with_positive_leading()
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    /// Division over the integers; `None` unless `divisor` divides `self` exactly in `Z[t]`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.degree() < divisor.degree() {
            return None;
        }
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        let mut quot = vec![BigInt::zero(); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        rem.iter().all(Zero::is_zero).then(|| Self::new(quot))
    }

    /// Pseudo-remainder `lc(d)^(deg p - deg d + 1)·p mod d`.
    pub fn pseudo_rem(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "pseudo-remainder by zero");
        let lead = divisor.leading();
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= divisor.degree() {
            let shift = r.degree() - divisor.degree();
            let lr = r.leading();
            r = &r.scale(&lead) - &divisor.scale(&lr).shifted(shift);
        }
        r
    }

    /// Greatest common divisor up to a rational factor, as a primitive
    /// polynomial with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    /// Primitive polynomial with the same roots, each simple.
    pub fn square_free_part(&self) -> Self {
        if self.degree() == 0 {
            return Self::one();
        }
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .exact_div_rational(&g)
            .primitive_part()
    }

    /// Square-free decomposition: primitive square-free factors `f_i` with
    /// multiplicity `i`, such that `p = c · Π f_i^i` for a rational constant `c`.
    pub fn square_free_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree() == 0 {
            return out;
        }
        let p = self.primitive_part();
        let mut a = p.gcd(&p.derivative());
        let mut b = p.exact_div_rational(&a);
        let mut i = 1;
        while b.degree() > 0 {
            let c = a.gcd(&b);
            let f = b.exact_div_rational(&c);
            if f.degree() > 0 {
                out.push((f, i));
            }
            a = a.exact_div_rational(&c);
            b = c;
            i += 1;
        }
        out
    }

    /// Quotient over `Q`, scaled back to `Z[t]` (the result is only meaningful
    /// up to a rational constant). Panics if the division is not exact over `Q`.
    fn exact_div_rational(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem_rational(divisor);
        assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
        rational_to_primitive(&q)
    }

    fn div_rem_rational(&self, divisor: &Self) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        if self.is_zero() || self.degree() < divisor.degree() {
            return (Vec::new(), rem);
        }
        let dd = divisor.degree();
        let lead = BigRational::from_integer(divisor.leading());
        let mut quot = vec![BigRational::zero(); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] / &lead;
            if q.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * BigRational::from_integer(c.clone());
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (quot, rem)
    }

    /// Root-squaring transform: the polynomial whose roots are the squares of
    /// the roots of `self`, with the same leading coefficient sign convention
    /// `g(t²) = (-1)^deg · p(t) · p(-t)`.
    pub fn graeffe(&self) -> Self {
        let prod = self * &self.reflect();
        let sign = if self.degree() % 2 == 1 {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        Self::new(prod.coeffs.iter().step_by(2).map(|c| c * &sign).collect())
    }

    /// Largest absolute coefficient.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }

    /// Interpolates a polynomial with integer coefficients through the given
    /// points; `None` if the interpolant has non-integer coefficients.
    pub fn interpolate(points: &[(BigInt, BigInt)]) -> Option<Self> {
        let n = points.len();
        // Newton divided differences
        let xs: Vec<BigRational> = points
            .iter()
            .map(|(x, _)| BigRational::from_integer(x.clone()))
            .collect();
        let mut dd: Vec<BigRational> = points
            .iter()
            .map(|(_, y)| BigRational::from_integer(y.clone()))
            .collect();
        for level in 1..n {
            for i in (level..n).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
            }
        }
        let mut acc: Vec<BigRational> = Vec::new();
        for i in (0..n).rev() {
            // acc = acc·(t - x_i) + dd[i]
            let mut next = vec![BigRational::zero(); acc.len() + 1];
            for (k, c) in acc.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * &xs[i];
            }
            next[0] += &dd[i];
            acc = next;
        }
        let coeffs = acc
            .into_iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(coeffs))
    }

    /// The `n`-th cyclotomic polynomial, `Π_{d | n} (t^d − 1)^{μ(n/d)}`.
    pub fn cyclotomic(n: usize) -> Self {
        assert!(n >= 1);
        let divisors: Vec<usize> = (1..=n).filter(|&d| n.is_multiple_of(d)).collect();
        let binomial = |d: usize| &Self::monomial(BigInt::one(), d) - &Self::one();
        let mut num = Self::one();
        let mut den = Self::one();
        for &d in &divisors {
            match mobius(n / d) {
                1 => num = &num * &binomial(d),
                -1 => den = &den * &binomial(d),
                _ => {}
            }
        }
        num.exact_div(&den)
            .expect("the Möbius product is a polynomial")
    }
}

fn mobius(mut n: usize) -> i32 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn rational_to_primitive(q: &[BigRational]) -> IntPolynomial {
    let den = q.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    IntPolynomial::new(
        q.iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect(),
    )
    .primitive_part()
}

pub(crate) fn big_to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(if x.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

/// Natural logarithm of a positive big integer, accurate for any size.
pub fn ln_big(x: &BigInt) -> f64 {
    assert!(x.is_positive(), "logarithm of a non-positive integer");
    let bits = x.bits();
    if bits <= 1000 {
        return big_to_f64(x).ln();
    }
    let shift = bits - 900;
    let top: BigInt = x >> shift;
    big_to_f64(&top).ln() + shift as f64 * std::f64::consts::LN_2
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// Serialised as the coefficient list, constant term first.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.to_i64_vec() {
            Some(v) => v.serialize(s),
            None => self
                .coeffs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .serialize(s),
        }
    }
}
