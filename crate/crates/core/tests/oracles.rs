//! Independent oracles: the reduced Burau representation and the closed-form
//! Alexander polynomial of torus knots.

use lorenz_fiber::homology::{alexander_polynomial, char_poly, equal_up_to_units};
use lorenz_fiber::linalg::bareiss_determinant;
use lorenz_fiber::spectra::cyclotomic_test;
use lorenz_fiber::{
    build_braid, enumerate_all, IntPolynomial, LorenzBraid, LorenzLink, YoungDiagram,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

/// Reduced Burau matrix of `σ_i` evaluated at an integer `t`.
fn burau(n: usize, i: usize, t: &BigInt) -> Vec<Vec<BigInt>> {
    let m = n - 1;
    let mut a: Vec<Vec<BigInt>> = (0..m)
        .map(|r| (0..m).map(|c| BigInt::from(u8::from(r == c))).collect())
        .collect();
    let k = i - 1;
    a[k][k] = -t.clone();
    if k > 0 {
        a[k][k - 1] = t.clone();
    }
    if k + 1 < m {
        a[k][k + 1] = BigInt::one();
    }
    a
}

fn mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// `det(I − B̄(β))` as a polynomial, by evaluation and interpolation.
fn burau_determinant(b: &LorenzBraid) -> IntPolynomial {
    let m = b.n - 1;
    let degree = m * b.word.len();
    let points: Vec<(BigInt, BigInt)> = (0..=degree as i64)
        .map(|t| {
            let t = BigInt::from(t);
            let mut prod: Vec<Vec<BigInt>> = (0..m)
                .map(|r| (0..m).map(|c| BigInt::from(u8::from(r == c))).collect())
                .collect();
            for &g in &b.word {
                prod = mul(&prod, &burau(b.n, g, &t));
            }
            let minus: Vec<Vec<BigInt>> = (0..m)
                .map(|r| {
                    (0..m)
                        .map(|c| BigInt::from(u8::from(r == c)) - &prod[r][c])
                        .collect()
                })
                .collect();
            (t, bareiss_determinant(minus))
        })
        .collect();
    IntPolynomial::interpolate(&points).expect("integer polynomial")
}

fn burau_alexander(b: &LorenzBraid) -> IntPolynomial {
    let geometric = IntPolynomial::from_i64(&vec![1; b.n]);
    burau_determinant(b)
        .exact_div(&geometric)
        .expect("1 + t + ... + t^(n-1) divides")
        .normalized()
}

#[test]
fn seifert_alexander_matches_burau() {
    let mut knots = 0;
    for d in enumerate_all(7) {
        let braid = build_braid(&d);
        let link = LorenzLink::new(&d).unwrap();
        let seifert = alexander_polynomial(&link.seifert).unwrap();
        assert_eq!(seifert, burau_alexander(&braid), "{d}");
        knots += usize::from(link.stats.boundary_components == 1);
    }
    assert!(knots > 10);
}

fn torus_knot_alexander(p: usize, q: usize) -> IntPolynomial {
    let binomial = |k: usize| &IntPolynomial::monomial(BigInt::one(), k) - &IntPolynomial::one();
    let num = &binomial(p * q) * &binomial(1);
    let den = &binomial(p) * &binomial(q);
    num.exact_div(&den)
        .expect("torus knot formula is a polynomial")
}

#[test]
fn rectangles_are_torus_links() {
    for r in 1..=5 {
        for c in 1..=5 {
            let d = YoungDiagram::rectangle(r, c).unwrap();
            let link = LorenzLink::new(&d).unwrap();
            let (p, q) = (r + 1, c + 1);
            assert_eq!(link.stats.boundary_components, p.gcd(&q), "{r}x{c}");
            let cp = char_poly(&link.monodromy.h).unwrap();
            assert!(cyclotomic_test(&cp).unwrap(), "{r}x{c}");
            if p.gcd(&q) == 1 {
                let alex = alexander_polynomial(&link.seifert).unwrap();
                assert_eq!(alex, torus_knot_alexander(p, q), "{r}x{c}");
            }
        }
    }
}

#[test]
fn single_columns_are_two_strand_torus_links() {
    for r in 1..=4 {
        let link = LorenzLink::new(&YoungDiagram::column(r).unwrap()).unwrap();
        let alex = alexander_polynomial(&link.seifert).unwrap();
        // Δ of T(r+1, 2) is 1 − t + t² − ... ± t^r
        let expected: Vec<i64> = (0..=r)
            .map(|i| if (r - i) % 2 == 0 { 1 } else { -1 })
            .collect();
        assert!(
            equal_up_to_units(&alex, &IntPolynomial::from_i64(&expected)),
            "r = {r}: {alex}"
        );
    }
}

#[test]
fn transpose_symmetry() {
    for d in enumerate_all(9) {
        let a = LorenzLink::new(&d).unwrap();
        let b = LorenzLink::new(&d.transpose()).unwrap();
        assert_eq!(
            a.stats.boundary_components, b.stats.boundary_components,
            "{d}"
        );
        let (pa, pb) = (
            alexander_polynomial(&a.seifert).unwrap(),
            alexander_polynomial(&b.seifert).unwrap(),
        );
        assert!(equal_up_to_units(&pa, &pb), "{d}: {pa} vs {pb}");
    }
}
