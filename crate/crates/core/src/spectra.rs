//! Dilatation data from characteristic polynomials.
//!
//! Root moduli are certified rather than merely approximated: roots of the
//! exact square-free part are located with the Aberth–Ehrlich iteration and
//! then enclosed in inclusion disks `D(zᵢ, d·|Wᵢ|)`, where `Wᵢ` is the
//! Weierstrass correction evaluated with a rigorous rounding-error bound.
//! Every connected union of `m` disks holds exactly `m` roots.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{big_to_f64, IntPolynomial};

pub const DEFAULT_TOL: f64 = 1e-9;

/// A real number known to lie in `[value − err, value + err]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Certified {
    pub value: f64,
    pub err: f64,
}

impl Certified {
    pub fn exact(value: f64) -> Self {
        Certified { value, err: 0.0 }
    }

    fn from_interval(lo: f64, hi: f64) -> Self {
        let value = 0.5 * (lo + hi);
        // rounded outwards so that the interval still covers [lo, hi]
        let err = (hi - value).max(value - lo);
        let err = if value - err > lo || value + err < hi {
            err * (1.0 + f64::EPSILON) + f64::MIN_POSITIVE
        } else {
            err
        };
        Certified { value, err }
    }

    pub fn lo(&self) -> f64 {
        self.value - self.err
    }

    pub fn hi(&self) -> f64 {
        self.value + self.err
    }

    pub fn contains(&self, x: f64) -> bool {
        (x - self.value).abs() <= self.err
    }
}

/// Disks that jointly enclose every root of a square-free polynomial.
#[derive(Debug, Clone)]
struct RootEnclosure {
    centers: Vec<Complex64>,
    radii: Vec<f64>,
    /// Connected components of the union of disks.
    components: Vec<Vec<usize>>,
}

impl RootEnclosure {
    /// Bounds on the moduli of the roots inside one component.
    fn modulus_range(&self, comp: &[usize]) -> (f64, f64) {
        let lo = comp
            .iter()
            .map(|&i| self.centers[i].norm() - self.radii[i])
            .fold(f64::INFINITY, f64::min);
        let hi = comp
            .iter()
            .map(|&i| self.centers[i].norm() + self.radii[i])
            .fold(0.0, f64::max);
        (lo.max(0.0), hi)
    }

    fn width(&self) -> f64 {
        self.components
            .iter()
            .map(|c| {
                let (lo, hi) = self.modulus_range(c);
                hi - lo
            })
            .fold(0.0, f64::max)
    }
}

const UNIT_ROUNDOFF: f64 = f64::EPSILON / 2.0;

fn aberth(coeffs: &[f64], start_angle: f64) -> Vec<Complex64> {
    let d = coeffs.len() - 1;
    let lead = coeffs[d];
    // Fujiwara bound on the root moduli
    let bound = (1..=d)
        .map(|k| (coeffs[d - k] / lead).abs().powf(1.0 / k as f64))
        .fold(0.0, f64::max)
        * 2.0;
    let radius = bound.max(1e-3) * 0.5;
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            Complex64::from_polar(
                radius,
                start_angle + std::f64::consts::TAU * k as f64 / d as f64,
            )
        })
        .collect();
    let eval = |x: Complex64| {
        let mut p = Complex64::zero();
        let mut dp = Complex64::zero();
        for &c in coeffs.iter().rev() {
            dp = dp * x + p;
            p = p * x + c;
        }
        (p, dp)
    };
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..d {
            let (p, dp) = eval(z[i]);
            if p == Complex64::zero() {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..d)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let w = ratio / (Complex64::one() - ratio * repulsion);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / z[i].norm().max(1.0));
            }
        }
        if moved < 4.0 * f64::EPSILON {
            break;
        }
    }
    z
}

fn enclose(q: &IntPolynomial, start_angle: f64) -> Option<RootEnclosure> {
    let d = q.degree();
    let coeffs: Vec<f64> = q.coeffs().iter().map(big_to_f64).collect();
    if coeffs.iter().any(|c| !c.is_finite()) {
        return None;
    }
    let centers = aberth(&coeffs, start_angle);
    let lead = coeffs[d].abs();
    let u = UNIT_ROUNDOFF;
    let mut radii = Vec::with_capacity(d);
    for (i, &z) in centers.iter().enumerate() {
        if !z.is_finite() {
            return None;
        }
        let mut val = Complex64::zero();
        let mut magnitude = 0.0;
        for &c in coeffs.iter().rev() {
            val = val * z + c;
            magnitude = magnitude * z.norm() + c.abs();
        }
        // Horner in complex arithmetic, plus rounding of the coefficients themselves
        let gamma = (8 * d + 10) as f64 * u;
        let eval_bound = val.norm() + gamma * magnitude * (1.0 + gamma);
        let mut prod = 1.0f64;
        for (j, &w) in centers.iter().enumerate() {
            if j != i {
                prod *= (z - w).norm();
            }
        }
        let prod_lo = prod * (1.0 - (4 * d + 4) as f64 * u);
        if prod_lo <= 0.0 || !prod_lo.is_finite() {
            return None;
        }
        let r = d as f64 * eval_bound / (lead * prod_lo) * (1.0 + 1e-12);
        radii.push(r);
    }
    let components = connected_disks(&centers, &radii);
    Some(RootEnclosure {
        centers,
        radii,
        components,
    })
}

fn connected_disks(centers: &[Complex64], radii: &[f64]) -> Vec<Vec<usize>> {
    let n = centers.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if (centers[i] - centers[j]).norm() <= radii[i] + radii[j] {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut label = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if label[r] == usize::MAX {
            label[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[label[r]].push(i);
    }
    groups
}

/// Tightest enclosure over a few restarts.
fn best_enclosure(q: &IntPolynomial) -> Option<RootEnclosure> {
    [0.4, 1.1, 2.3, 0.05]
        .iter()
        .filter_map(|&a| enclose(q, a))
        .min_by(|x, y| x.width().total_cmp(&y.width()))
}

fn check_tol(c: Certified, tol: f64) -> Result<Certified> {
    if c.err <= tol && c.value.is_finite() {
        Ok(c)
    } else {
        Err(Error::ToleranceNotMet {
            achieved: c.err,
            tol,
        })
    }
}

/// Largest root modulus of `p`, certified to within `tol`.
pub fn spectral_radius(p: &IntPolynomial, tol: f64) -> Result<Certified> {
    if p.degree() == 0 {
        return Err(Error::DegreeZero);
    }
    let q = p.square_free_part();
    if q.degree() == 1 && q.coeffs()[0].abs() == q.coeffs()[1].abs() {
        return Ok(Certified::exact(1.0));
    }
    let enc = best_enclosure(&q).ok_or(Error::ToleranceNotMet {
        achieved: f64::INFINITY,
        tol,
    })?;
    let mut lo = 0.0f64;
    let mut hi = 0.0f64;
    for comp in &enc.components {
        let (clo, chi) = enc.modulus_range(comp);
        lo = lo.max(clo);
        hi = hi.max(chi);
    }
    check_tol(Certified::from_interval(lo, hi), tol)
}

/// `|lead|·Π max(1, |root|)` over all roots with multiplicity, certified to within `tol`.
pub fn mahler_measure(p: &IntPolynomial, tol: f64) -> Result<Certified> {
    if p.degree() == 0 {
        return Err(Error::DegreeZero);
    }
    let mut lo = big_to_f64(&p.content().abs());
    let mut hi = lo;
    for (f, mult) in p.square_free_decomposition() {
        let lead = big_to_f64(&f.leading().abs());
        let (mut flo, mut fhi) = (lead, lead);
        if !(f.degree() == 1 && f.coeffs()[0].abs() == f.coeffs()[1].abs()) {
            let enc = best_enclosure(&f).ok_or(Error::ToleranceNotMet {
                achieved: f64::INFINITY,
                tol,
            })?;
            for comp in &enc.components {
                let (clo, chi) = enc.modulus_range(comp);
                let m = comp.len() as i32;
                flo *= clo.max(1.0).powi(m);
                fhi *= chi.max(1.0).powi(m);
            }
        }
        lo *= flo.powi(mult as i32);
        hi *= fhi.powi(mult as i32);
    }
    let rounding = hi * 64.0 * UNIT_ROUNDOFF * (p.degree() as f64 + 1.0);
    check_tol(
        Certified::from_interval((lo - rounding).max(1.0), hi + rounding),
        tol,
    )
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Whether every root of `p` is a root of unity, decided exactly by
/// iterating the root-squaring transform on the square-free part until a
/// repeat shows up or a coefficient leaves the range allowed for roots on
/// the unit circle.
pub fn cyclotomic_test(p: &IntPolynomial) -> Result<bool> {
    if p.degree() == 0 {
        return Err(Error::DegreeZero);
    }
    if p.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let mut q = p.square_free_part().with_positive_leading();
    if !q.leading().is_one() || q.constant_term().abs() != BigInt::one() {
        return Ok(false);
    }
    let mut seen = HashSet::new();
    loop {
        let d = q.degree();
        if q.coeffs()
            .iter()
            .enumerate()
            .any(|(k, c)| c.abs() > binomial(d, k))
        {
            return Ok(false);
        }
        if !seen.insert(q.clone()) {
            return Ok(true);
        }
        q = q.graeffe().square_free_part().with_positive_leading();
    }
}

/// Independent check of [`cyclotomic_test`]: strips cyclotomic factors
/// `Φ_n`, `n ≤ 2·deg²`, by trial division and reports whether nothing
/// but a unit is left.
pub fn cyclotomic_test_by_division(p: &IntPolynomial) -> Result<bool> {
    if p.degree() == 0 {
        return Err(Error::DegreeZero);
    }
    if p.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let mut q = p.square_free_part();
    let limit = 2 * q.degree() * q.degree();
    for n in 1..=limit.max(2) {
        if q.degree() == 0 {
            break;
        }
        if euler_phi(n) > q.degree() {
            continue;
        }
        if let Some(rest) = q.exact_div(&IntPolynomial::cyclotomic(n)) {
            q = rest;
        }
    }
    Ok(q.degree() == 0 && q.constant_term().abs().is_one())
}

fn euler_phi(mut n: usize) -> usize {
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// Spectral summary of a monodromy characteristic polynomial.
///
/// When the exact test finds only roots of unity, `rho` and `mahler` are
/// reported as exactly 1.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub poly: IntPolynomial,
    pub spectral_radius: Certified,
    pub mahler_measure: Certified,
    pub is_unit_root_only: bool,
    pub log_dilatation_hom: f64,
}

impl SpectrumReport {
    pub fn new(poly: &IntPolynomial, tol: f64) -> Result<Self> {
        let (stripped, zeros) = poly.strip_t_power();
        let is_unit_root_only = zeros == 0 && cyclotomic_test(&stripped)?;
        let (spectral_radius, mahler_measure) = if is_unit_root_only {
            (Certified::exact(1.0), Certified::exact(1.0))
        } else {
            (spectral_radius(poly, tol)?, mahler_measure(poly, tol)?)
        };
        let log_dilatation_hom = if is_unit_root_only {
            0.0
        } else {
            spectral_radius.value.ln()
        };
        Ok(SpectrumReport {
            poly: poly.clone(),
            spectral_radius,
            mahler_measure,
            is_unit_root_only,
            log_dilatation_hom,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn radius_examples() {
        assert_eq!(
            spectral_radius(&p(&[-1, 1]), DEFAULT_TOL).unwrap(),
            Certified::exact(1.0)
        );
        let r = spectral_radius(&p(&[1, -1, 1]), DEFAULT_TOL).unwrap();
        assert!(r.contains(1.0) && r.err <= 1e-9);
        let golden = (3.0 + 5f64.sqrt()) / 2.0;
        let r = spectral_radius(&p(&[1, -3, 1]), DEFAULT_TOL).unwrap();
        assert!((r.value - golden).abs() < 1e-12, "{r:?}");
        assert!(matches!(
            spectral_radius(&p(&[3]), 1e-9),
            Err(Error::DegreeZero)
        ));
    }

    #[test]
    fn radius_with_repeated_roots() {
        // (t² − 3t + 1)²·(t + 1)³
        let a = p(&[1, -3, 1]);
        let b = p(&[1, 1]);
        let big = &(&a * &a) * &(&b * &(&b * &b));
        let r = spectral_radius(&big, DEFAULT_TOL).unwrap();
        assert!((r.value - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-10);
    }

    #[test]
    fn mahler_examples() {
        let plastic = mahler_measure(&p(&[-1, -1, 0, 1]), DEFAULT_TOL).unwrap();
        assert!(
            (plastic.value - 1.324717957244746).abs() < 1e-12,
            "{plastic:?}"
        );
        let cyc = &IntPolynomial::cyclotomic(5) * &IntPolynomial::cyclotomic(12);
        assert!(mahler_measure(&cyc, DEFAULT_TOL).unwrap().contains(1.0));
        // content and leading coefficient count: 2·(2t − 1)(t − 3) → 2·2·3
        let m = mahler_measure(&p(&[6, -14, 4]), DEFAULT_TOL).unwrap();
        assert!(m.contains(12.0), "{m:?}");
    }

    #[test]
    fn lehmer() {
        let l = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let m = mahler_measure(&l, DEFAULT_TOL).unwrap();
        assert!((m.value - 1.176280818259917).abs() < 1e-9);
        assert!(!cyclotomic_test(&l).unwrap());
        assert!(!cyclotomic_test_by_division(&l).unwrap());
    }

    #[test]
    fn cyclotomic_examples() {
        assert!(cyclotomic_test(&p(&[1, -1, 1])).unwrap());
        assert!(!cyclotomic_test(&p(&[1, -3, 1])).unwrap());
        assert!(cyclotomic_test(&(&p(&[-1, 1]) * &p(&[1, 1, 1]))).unwrap());
        assert!(!cyclotomic_test(&p(&[1, 0, 2])).unwrap());
        // roots on the unit circle that are not algebraic integers
        assert!(!cyclotomic_test(&p(&[5, -6, 5])).unwrap());
        assert!(matches!(
            cyclotomic_test(&p(&[0, 1])),
            Err(Error::ZeroConstantTerm)
        ));
        for n in 1..=40 {
            let phi = IntPolynomial::cyclotomic(n);
            assert!(cyclotomic_test(&phi).unwrap(), "Φ_{n}");
            assert!(cyclotomic_test_by_division(&phi).unwrap(), "Φ_{n}");
        }
    }

    #[test]
    fn phi_values() {
        let phis: Vec<usize> = (1..=12).map(euler_phi).collect();
        assert_eq!(phis, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
    }

    #[test]
    fn report_snaps_for_periodic_polynomials() {
        let r = SpectrumReport::new(&p(&[1, -1, 1]), DEFAULT_TOL).unwrap();
        assert!(r.is_unit_root_only);
        assert_eq!(r.spectral_radius, Certified::exact(1.0));
        assert_eq!(r.log_dilatation_hom, 0.0);
        let r = SpectrumReport::new(&p(&[1, -3, 1]), DEFAULT_TOL).unwrap();
        assert!(!r.is_unit_root_only);
        assert!((r.log_dilatation_hom - ((3.0 + 5f64.sqrt()) / 2.0).ln()).abs() < 1e-9);
    }
}
