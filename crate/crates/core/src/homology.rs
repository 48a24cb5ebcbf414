//! Homological monodromy of the canonical fiber, computed twice: from the
//! Seifert form and as the ordered product of Dehn-twist transvections.
//!
//! Matrix conventions (pinned so that both routes agree and internal classes
//! are shifted to their NW neighbour by `H⁻¹`):
//!
//! * Seifert route: `H = ε·V⁻¹Vᵀ` with [`SEIFERT_SIGN`] `ε = +1`.
//! * Transvection of the class `e_c`: `T_c(x) = x + ⟨x, e_c⟩·e_c` where
//!   `⟨x, y⟩ = yᵀJx`, i.e. [`TRANSVECTION_SIGN`] `= +1`.
//! * `H = T_{c_m} ⋯ T_{c_1}` with `c_1, …, c_m` the canonical cell order
//!   (columns right to left, bottom to top): the first twist acts first.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{bareiss_determinant, IntMatrix};
use crate::poly::IntPolynomial;
use crate::surface::SeifertData;

pub const SEIFERT_SIGN: i64 = 1;
pub const TRANSVECTION_SIGN: i64 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonodromyMatrix {
    pub h: IntMatrix,
    pub h_inv: IntMatrix,
}

impl MonodromyMatrix {
    pub fn dim(&self) -> usize {
        self.h.rows()
    }

    /// `Hᵀ J H == J`.
    pub fn preserves(&self, j: &IntMatrix) -> Result<bool> {
        let lhs = self.h.transpose().checked_mul(j)?.checked_mul(&self.h)?;
        Ok(&lhs == j)
    }

    pub fn determinant(&self) -> BigInt {
        self.h.determinant()
    }
}

pub fn monodromy_seifert_route(s: &SeifertData) -> Result<MonodromyMatrix> {
    let det = s.v.determinant();
    if det.abs() != BigInt::one() {
        return Err(Error::NotUnimodular {
            det: det.to_string(),
        });
    }
    let v_inv = s.v.inverse()?;
    let h = v_inv.checked_mul(&s.v.transpose())?.scaled(SEIFERT_SIGN)?;
    let h_inv = v_inv.transpose().checked_mul(&s.v)?.scaled(SEIFERT_SIGN)?;
    Ok(MonodromyMatrix { h, h_inv })
}

/// Product of one transvection per basis class, in basis order.
pub fn monodromy_twist_route(s: &SeifertData) -> Result<MonodromyMatrix> {
    let j = &s.j;
    let m = j.rows();
    let overflow = || Error::Overflow("transvection product");
    let mut h = IntMatrix::identity(m);
    let mut h_inv = IntMatrix::identity(m);
    for c in 0..m {
        // T_c = I + σ·e_c·J[c,:], so T_c·H adds J-weighted rows into row c
        let mut new_row = h.row(c).to_vec();
        for k in 0..m {
            let w = TRANSVECTION_SIGN * j[(c, k)];
            if w == 0 {
                continue;
            }
            for (x, &y) in new_row.iter_mut().zip(h.row(k)) {
                *x = x
                    .checked_add(w.checked_mul(y).ok_or_else(overflow)?)
                    .ok_or_else(overflow)?;
            }
        }
        for (col, x) in new_row.into_iter().enumerate() {
            h[(c, col)] = x;
        }
        // H⁻¹ ← H⁻¹·T_c⁻¹ with T_c⁻¹ = I − σ·e_c·J[c,:] (J[c][c] = 0)
        for r in 0..m {
            let f = h_inv[(r, c)];
            if f == 0 {
                continue;
            }
            for k in 0..m {
                let w = TRANSVECTION_SIGN * j[(c, k)];
                if w != 0 {
                    let d = f.checked_mul(w).ok_or_else(overflow)?;
                    h_inv[(r, k)] = h_inv[(r, k)].checked_sub(d).ok_or_else(overflow)?;
                }
            }
        }
    }
    Ok(MonodromyMatrix { h, h_inv })
}

/// `det(tI − A)` by Berkowitz's division-free algorithm.
pub fn char_poly(a: &IntMatrix) -> Result<IntPolynomial> {
    if !a.is_square() {
        return Err(Error::Dimension(
            "characteristic polynomial of a non-square matrix".into(),
        ));
    }
    let n = a.rows();
    let a = a.to_big();
    // coefficients, highest degree first
    let mut c = vec![BigInt::one()];
    for r in 0..n {
        let mut qs = Vec::with_capacity(r);
        let mut v: Vec<BigInt> = (0..r).map(|i| a[i][r].clone()).collect();
        for _ in 0..r {
            qs.push((0..r).map(|i| &a[r][i] * &v[i]).sum::<BigInt>());
            v = (0..r)
                .map(|i| (0..r).map(|k| &a[i][k] * &v[k]).sum())
                .collect();
        }
        let mut col = Vec::with_capacity(r + 2);
        col.push(BigInt::one());
        col.push(-&a[r][r]);
        col.extend(qs.into_iter().map(|q| -q));
        let next = (0..r + 2)
            .map(|i| (0..=i.min(c.len() - 1)).map(|k| &col[i - k] * &c[k]).sum())
            .collect();
        c = next;
    }
    c.reverse();
    Ok(IntPolynomial::new(c))
}

/// `det(tV − Vᵀ)` normalized: no factor of `t`, positive leading coefficient.
pub fn alexander_polynomial(s: &SeifertData) -> Result<IntPolynomial> {
    let m = s.v.rows();
    let (v, vt) = (s.v.to_big(), s.v.transpose().to_big());
    let points = (0..=m as i64)
        .map(|t| {
            let t = BigInt::from(t);
            let mat = (0..m)
                .map(|i| (0..m).map(|j| &t * &v[i][j] - &vt[i][j]).collect())
                .collect();
            (t, bareiss_determinant(mat))
        })
        .collect::<Vec<_>>();
    let p = IntPolynomial::interpolate(&points).ok_or(Error::NotIntegral)?;
    if p.is_zero() {
        return Ok(p);
    }
    Ok(p.normalized())
}

/// Whether `p = ±tʲ·q` for some `j ≥ 0`.
pub fn equal_up_to_units(p: &IntPolynomial, q: &IntPolynomial) -> bool {
    if p.is_zero() || q.is_zero() {
        return p.is_zero() && q.is_zero();
    }
    p.normalized() == q.normalized()
}

/// Smallest `e ≤ max` with `Hᵉ = I`.
pub fn matrix_order(h: &IntMatrix, max: usize) -> Result<Option<usize>> {
    let mut p = h.clone();
    for e in 1..=max {
        if p.is_identity() {
            return Ok(Some(e));
        }
        p = p.checked_mul(h)?;
    }
    Ok(None)
}

/// Trace of `A`, exact.
pub fn trace(a: &IntMatrix) -> BigInt {
    (0..a.rows().min(a.cols())).fold(BigInt::zero(), |acc, i| acc + a[(i, i)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{enumerate_all, YoungDiagram};
    use crate::surface::seifert_data;

    fn d(cols: &[usize]) -> YoungDiagram {
        YoungDiagram::from_columns(cols.to_vec()).unwrap()
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn hopf() {
        let (_, s) = seifert_data(&d(&[1])).unwrap();
        let a = monodromy_seifert_route(&s).unwrap();
        assert_eq!(a.h.to_rows(), vec![vec![1]]);
        assert_eq!(monodromy_twist_route(&s).unwrap(), a);
        assert_eq!(alexander_polynomial(&s).unwrap(), p(&[-1, 1]));
    }

    #[test]
    fn trefoil() {
        let (_, s) = seifert_data(&d(&[2])).unwrap();
        let a = monodromy_seifert_route(&s).unwrap();
        assert_eq!(a.h.to_rows(), vec![vec![1, 1], vec![-1, 0]]);
        assert_eq!(char_poly(&a.h).unwrap(), p(&[1, -1, 1]));
        assert_eq!(matrix_order(&a.h, 12).unwrap(), Some(6));
        assert_eq!(alexander_polynomial(&s).unwrap(), p(&[1, -1, 1]));
        assert!(a.h.checked_mul(&a.h_inv).unwrap().is_identity());
    }

    #[test]
    fn berkowitz_small_cases() {
        assert_eq!(
            char_poly(&IntMatrix::identity(3)).unwrap(),
            p(&[-1, 3, -3, 1])
        );
        // companion matrix of t³ − 2
        let comp = IntMatrix::from_rows(vec![vec![0, 0, 2], vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        assert_eq!(char_poly(&comp).unwrap(), p(&[-2, 0, 0, 1]));
        let m = IntMatrix::from_rows(vec![vec![2, -1, 3], vec![4, 0, 1], vec![-2, 5, 7]]).unwrap();
        let cp = char_poly(&m).unwrap();
        assert_eq!(cp.coeff(2), -trace(&m));
        assert_eq!(cp.constant_term(), -m.determinant());
        assert_eq!(
            char_poly(&IntMatrix::zeros(0, 0)).unwrap(),
            IntPolynomial::one()
        );
    }

    #[test]
    fn routes_agree_and_preserve_the_form() {
        for dg in enumerate_all(8) {
            let (_, s) = seifert_data(&dg).unwrap();
            let a = monodromy_seifert_route(&s).unwrap();
            let b = monodromy_twist_route(&s).unwrap();
            assert_eq!(a, b, "{dg}");
            assert!(a.preserves(&s.j).unwrap());
            assert_eq!(a.determinant().abs(), BigInt::one());
            let cp = char_poly(&a.h).unwrap();
            assert!(
                equal_up_to_units(&cp, &alexander_polynomial(&s).unwrap()),
                "{dg}"
            );
        }
    }

    #[test]
    fn rectangles_are_periodic() {
        for r in 1..=4 {
            for c in 1..=4 {
                let (_, s) = seifert_data(&YoungDiagram::rectangle(r, c).unwrap()).unwrap();
                let h = monodromy_seifert_route(&s).unwrap().h;
                let bound = (r + 1) * (c + 1);
                assert!(matrix_order(&h, bound).unwrap().is_some(), "{r}x{c}");
            }
        }
    }

    #[test]
    fn non_unimodular_rejected() {
        let (_, mut s) = seifert_data(&d(&[1])).unwrap();
        s.v[(0, 0)] = -2;
        assert!(matches!(
            monodromy_seifert_route(&s),
            Err(Error::NotUnimodular { .. })
        ));
    }
}
