//! Quadratic forms over orders: construction, evaluation, the associated
//! bilinear map, positive definiteness, orthogonal sums, extension of
//! scalars, and rational diagonalization for local analysis.
//!
//! A form of rank `n` stores the upper-triangular coefficients `c_ij` of
//! `Q(x) = sum_{i<=j} c_ij x_i x_j` as order elements.

use crate::localq::DiagonalRationalForm;
use crate::numfield::{
    self, same_field, FieldElement, FieldEmbedding, FieldError, FieldRef, OrderElement,
};
use crate::rational::Rational;
use num_traits::Zero;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QFormError {
    #[error("diagonal form needs at least one entry")]
    EmptyEntries,
    #[error("coefficient rows do not form an upper triangle of the stated rank")]
    BadShape,
    #[error("vector length {got} does not match rank {rank}")]
    RankMismatch { rank: usize, got: usize },
    #[error("form is degenerate")]
    DegenerateForm,
    #[error("operation requires coefficients in the rational field")]
    NotRationalBase,
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Clone)]
pub struct QuadraticForm {
    field: FieldRef,
    rank: usize,
    /// `rows[i][j - i]` is the coefficient of `x_i x_j` for `j >= i`.
    rows: Vec<Vec<OrderElement>>,
}

impl PartialEq for QuadraticForm {
    fn eq(&self, other: &Self) -> bool {
        same_field(&self.field, &other.field) && self.rank == other.rank && self.rows == other.rows
    }
}

impl fmt::Debug for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadraticForm(rank {}, deg {})", self.rank, self.field.degree())
    }
}

impl QuadraticForm {
    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Coefficient of `x_i x_j`, `i <= j`.
    pub fn coeff(&self, i: usize, j: usize) -> &OrderElement {
        assert!(i <= j && j < self.rank);
        &self.rows[i][j - i]
    }

    pub fn rows(&self) -> &[Vec<OrderElement>] {
        &self.rows
    }

    pub fn is_diagonal(&self) -> bool {
        self.rows
            .iter()
            .all(|row| row[1..].iter().all(|c| c.is_zero()))
    }

    pub fn diagonal_entries(&self) -> Vec<OrderElement> {
        (0..self.rank).map(|i| self.coeff(i, i).clone()).collect()
    }

    /// Diagonal entries as rationals, for forms over the rational field.
    pub fn rational_diagonal(&self) -> Result<Vec<Rational>, QFormError> {
        if !self.field.is_rational() {
            return Err(QFormError::NotRationalBase);
        }
        Ok(self
            .diagonal_entries()
            .iter()
            .map(|c| Rational::from_integer(c.coords()[0].clone()))
            .collect())
    }

    /// The symmetric matrix `A` with `A_ii = c_ii` and `A_ij = c_ij / 2`,
    /// so that `Q(x) = x^T A x`.
    pub fn half_gram(&self) -> Vec<Vec<FieldElement>> {
        let n = self.rank;
        let half = crate::rational::rat(1, 2);
        let mut a = vec![vec![FieldElement::zero(&self.field); n]; n];
        for i in 0..n {
            for j in i..n {
                let c = FieldElement::from_order(self.coeff(i, j));
                if i == j {
                    a[i][i] = c;
                } else {
                    let h = c.scale(&half);
                    a[i][j] = h.clone();
                    a[j][i] = h;
                }
            }
        }
        a
    }

    /// `half_gram` with rational entries, for forms over the rational field.
    pub fn half_gram_rational(&self) -> Result<Vec<Vec<Rational>>, QFormError> {
        if !self.field.is_rational() {
            return Err(QFormError::NotRationalBase);
        }
        Ok(self
            .half_gram()
            .into_iter()
            .map(|row| row.into_iter().map(|e| e.coords()[0].clone()).collect())
            .collect())
    }
}

/// The diagonal form `<a_1, ..., a_n>`.
pub fn diag_form(field: &FieldRef, entries: Vec<OrderElement>) -> Result<QuadraticForm, QFormError> {
    if entries.is_empty() {
        return Err(QFormError::EmptyEntries);
    }
    let n = entries.len();
    let mut rows = Vec::with_capacity(n);
    for (i, e) in entries.into_iter().enumerate() {
        if !same_field(e.field(), field) {
            return Err(QFormError::Field(FieldError::FieldMismatch));
        }
        let mut row = vec![e];
        row.extend((i + 1..n).map(|_| OrderElement::zero(field)));
        rows.push(row);
    }
    Ok(QuadraticForm {
        field: Arc::clone(field),
        rank: n,
        rows,
    })
}

/// Diagonal form with rational-integer entries.
pub fn diag_form_i64(field: &FieldRef, entries: &[i64]) -> Result<QuadraticForm, QFormError> {
    diag_form(
        field,
        entries
            .iter()
            .map(|&e| OrderElement::from_int(field, e.into()))
            .collect(),
    )
}

/// A general form from upper-triangular coefficient rows: `rows[i]` holds
/// `c_ii, c_i(i+1), ..., c_in`.
pub fn general_form(
    field: &FieldRef,
    rows: Vec<Vec<OrderElement>>,
) -> Result<QuadraticForm, QFormError> {
    let n = rows.len();
    if n == 0 {
        return Err(QFormError::EmptyEntries);
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n - i {
            return Err(QFormError::BadShape);
        }
        for e in row {
            if !same_field(e.field(), field) {
                return Err(QFormError::Field(FieldError::FieldMismatch));
            }
        }
    }
    Ok(QuadraticForm {
        field: Arc::clone(field),
        rank: n,
        rows,
    })
}

/// Exact value `Q(v)`.
pub fn evaluate(q: &QuadraticForm, v: &[OrderElement]) -> Result<OrderElement, QFormError> {
    if v.len() != q.rank {
        return Err(QFormError::RankMismatch {
            rank: q.rank,
            got: v.len(),
        });
    }
    for x in v {
        if !same_field(x.field(), &q.field) {
            return Err(QFormError::Field(FieldError::FieldMismatch));
        }
    }
    let mut acc = OrderElement::zero(&q.field);
    for i in 0..q.rank {
        if v[i].is_zero() {
            continue;
        }
        for j in i..q.rank {
            let c = q.coeff(i, j);
            if c.is_zero() || v[j].is_zero() {
                continue;
            }
            let t = c.try_mul(&v[i])?.try_mul(&v[j])?;
            acc = acc.try_add(&t)?;
        }
    }
    Ok(acc)
}

/// `b_Q(u, w) = Q(u + w) - Q(u) - Q(w)`.
pub fn bilinear(
    q: &QuadraticForm,
    u: &[OrderElement],
    w: &[OrderElement],
) -> Result<OrderElement, QFormError> {
    if u.len() != q.rank || w.len() != q.rank {
        return Err(QFormError::RankMismatch {
            rank: q.rank,
            got: u.len().max(w.len()),
        });
    }
    let sum: Result<Vec<OrderElement>, FieldError> =
        u.iter().zip(w).map(|(a, b)| a.try_add(b)).collect();
    let qsum = evaluate(q, &sum?)?;
    let qu = evaluate(q, u)?;
    let qw = evaluate(q, w)?;
    Ok(qsum.try_sub(&qu)?.try_sub(&qw)?)
}

/// Standard basis vector `e_i`.
pub fn basis_vector(q: &QuadraticForm, i: usize) -> Vec<OrderElement> {
    let mut v = vec![OrderElement::zero(&q.field); q.rank];
    v[i] = OrderElement::one(&q.field);
    v
}

/// Positive definiteness over a totally real field: all leading principal
/// minors of the symmetric matrix `A` (with `Q(x) = x^T A x`) are totally
/// positive; equivalently `Q` is positive definite at every real embedding.
pub fn is_positive_definite(q: &QuadraticForm) -> Result<bool, QFormError> {
    if !q.field.is_totally_real() {
        return Err(QFormError::Field(FieldError::NotTotallyRealField));
    }
    let a = q.half_gram();
    for k in 1..=q.rank {
        let minor = field_det(&a, k);
        if minor.is_zero() {
            return Ok(false);
        }
        if !numfield::is_totally_positive_coords(&q.field, minor.coords())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Determinant of the leading `k x k` block by Gaussian elimination over the
/// field.
fn field_det(a: &[Vec<FieldElement>], k: usize) -> FieldElement {
    let field = a[0][0].field();
    let mut m: Vec<Vec<FieldElement>> = a[..k].iter().map(|row| row[..k].to_vec()).collect();
    let mut det = FieldElement::one(field);
    let mut sign = false;
    for col in 0..k {
        let Some(p) = (col..k).find(|&r| !m[r][col].is_zero()) else {
            return FieldElement::zero(field);
        };
        if p != col {
            m.swap(p, col);
            sign = !sign;
        }
        let pivot = m[col][col].clone();
        det = det.mul(&pivot);
        let inv = pivot
            .inverse()
            .expect("zero divisor: reducible minimal polynomial");
        for r in col + 1..k {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].mul(&inv);
            for c in col..k {
                let t = f.mul(&m[col][c]);
                m[r][c] = m[r][c].sub(&t);
            }
        }
    }
    if sign {
        det.neg()
    } else {
        det
    }
}

/// Block-diagonal orthogonal sum.
pub fn orth_sum(q1: &QuadraticForm, q2: &QuadraticForm) -> Result<QuadraticForm, QFormError> {
    if !same_field(&q1.field, &q2.field) {
        return Err(QFormError::Field(FieldError::FieldMismatch));
    }
    let n1 = q1.rank;
    let n = n1 + q2.rank;
    let mut rows = Vec::with_capacity(n);
    for (i, row) in q1.rows.iter().enumerate() {
        let mut r = row.clone();
        r.extend((n1..n).map(|_| OrderElement::zero(&q1.field)));
        debug_assert_eq!(r.len(), n - i);
        rows.push(r);
    }
    rows.extend(q2.rows.iter().cloned());
    Ok(QuadraticForm {
        field: Arc::clone(&q1.field),
        rank: n,
        rows,
    })
}

/// Coefficientwise extension of scalars along a field embedding.
pub fn extend_scalars(
    q: &QuadraticForm,
    e: &FieldEmbedding,
) -> Result<QuadraticForm, QFormError> {
    if !same_field(&q.field, e.source()) {
        return Err(QFormError::Field(FieldError::FieldMismatch));
    }
    let mut rows = Vec::with_capacity(q.rank);
    for row in &q.rows {
        let mapped: Result<Vec<OrderElement>, FieldError> =
            row.iter().map(|c| numfield::map_elem(e, c)).collect();
        rows.push(mapped?);
    }
    Ok(QuadraticForm {
        field: Arc::clone(e.target()),
        rank: q.rank,
        rows,
    })
}

/// Diagonalizes a nondegenerate form with rational-integer coefficients over
/// the rationals (symmetric elimination; same rank, entries nonzero).
pub fn rational_diagonalize(q: &QuadraticForm) -> Result<DiagonalRationalForm, QFormError> {
    let mut a = q.half_gram_rational()?;
    let n = q.rank;
    if crate::poly::det_rational(a.clone()).is_zero() {
        return Err(QFormError::DegenerateForm);
    }
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(l) = (k + 1..n).find(|&l| !a[l][l].is_zero()) {
                // swap variables k and l
                a.swap(k, l);
                for row in a.iter_mut() {
                    row.swap(k, l);
                }
            } else {
                // all remaining diagonal entries vanish; use v_k <- v_k + v_l
                // with a nonzero off-diagonal entry to create a pivot
                let l = (k + 1..n)
                    .find(|&l| !a[k][l].is_zero())
                    .ok_or(QFormError::DegenerateForm)?;
                for j in 0..n {
                    let t = a[l][j].clone();
                    a[k][j] += t;
                }
                for i in 0..n {
                    let t = a[i][l].clone();
                    a[i][k] += t;
                }
            }
        }
        let pivot = a[k][k].clone();
        debug_assert!(!pivot.is_zero());
        diag.push(pivot.clone());
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
        // keep symmetry of the trailing block
        for j in k + 1..n {
            a[k][j] = Rational::zero();
            a[j][k] = Rational::zero();
        }
        for i in k + 1..n {
            for j in i + 1..n {
                let v = a[i][j].clone();
                a[j][i] = v;
            }
        }
    }
    DiagonalRationalForm::new(diag).map_err(|_| QFormError::DegenerateForm)
}
