//! Totally real number fields with explicit orders: elements, embeddings,
//! traces, norms, houses, total positivity, element discriminants.
//!
//! A field is described by a monic squarefree integer polynomial together
//! with an integral basis given over the power basis of a root. Elements
//! carry integer coordinates in the integral basis. Every sign decision is
//! made by refining certified isolating intervals of the real roots; zero
//! detection is always syntactic.

use crate::interval::RatInterval;
use crate::poly::{isolate_real_roots, refine_root_interval, IntPoly};
use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

pub type FieldRef = Arc<NumberField>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("minimal polynomial is not monic")]
    NotMonic,
    #[error("minimal polynomial is not squarefree")]
    NotSquarefree,
    #[error("minimal polynomial has the rational root {0}")]
    RationalRoot(BigInt),
    #[error("basis matrix is singular")]
    BasisSingular,
    #[error("basis matrix is not square of size degree")]
    BasisShape,
    #[error("first basis element must be 1 (row (1,0,...,0))")]
    BasisFirstRowNotOne,
    #[error("basis is not multiplicatively closed: b_{i} * b_{j} leaves the order")]
    BasisNotClosed { i: usize, j: usize },
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("operation requires a totally real field")]
    NotTotallyRealField,
    #[error("coordinate vector has length {got}, expected {expected}")]
    CoordLength { expected: usize, got: usize },
    #[error("proposed image is not a root of the source minimal polynomial")]
    InvalidImage,
    #[error("image of an order element is not integral in the target order")]
    NotIntegralImage,
}

/// A number field `Q[T]/(minpoly)` together with an order given by an
/// integral basis over the power basis.
pub struct NumberField {
    minpoly: IntPoly,
    degree: usize,
    /// Row `i` holds the power-basis coordinates of the basis element `b_i`.
    basis: Vec<Vec<Rational>>,
    /// Transposed inverse of `basis`: converts power coordinates to
    /// integral-basis coordinates.
    power_to_basis: Vec<Vec<Rational>>,
    /// `mult_table[i][j]` holds the integral coordinates of `b_i * b_j`.
    mult_table: Vec<Vec<Vec<BigInt>>>,
    /// Isolating intervals for the real roots, ascending; all `d` of them
    /// when the field is totally real.
    root_intervals: Vec<RatInterval>,
    totally_real: bool,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.minpoly == other.minpoly && self.basis == other.basis
    }
}

impl Eq for NumberField {}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "NumberField(deg {}, minpoly {}, totally_real {})",
            self.degree, self.minpoly, self.totally_real
        )
    }
}

pub fn same_field(a: &FieldRef, b: &FieldRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Validates and constructs a field with its order.
///
/// The basis matrix must be square with first row `(1, 0, ..., 0)` and
/// invertible, and all products `b_i * b_j` must have integer coordinates in
/// the basis. Irreducibility is fully verified for degree <= 3 (squarefree
/// plus no rational root); for higher degrees the caller is responsible for
/// supplying an irreducible polynomial.
pub fn make_field(minpoly: IntPoly, basis: Vec<Vec<Rational>>) -> Result<FieldRef, FieldError> {
    if minpoly.is_zero() || !minpoly.is_monic() || minpoly.deg() < 1 {
        return Err(FieldError::NotMonic);
    }
    let d = minpoly.deg();
    if !minpoly.is_squarefree() {
        return Err(FieldError::NotSquarefree);
    }
    if d == 2 || d == 3 {
        if let Some(r) = integer_root(&minpoly) {
            return Err(FieldError::RationalRoot(r));
        }
    }
    if basis.len() != d || basis.iter().any(|row| row.len() != d) {
        return Err(FieldError::BasisShape);
    }
    if basis[0][0] != Rational::one() || basis[0][1..].iter().any(|c| !c.is_zero()) {
        return Err(FieldError::BasisFirstRowNotOne);
    }
    let basis_t = transpose(&basis);
    let power_to_basis = mat_inverse(&basis_t).ok_or(FieldError::BasisSingular)?;

    // Closure: compute b_i * b_j in power coordinates, reduce mod minpoly,
    // convert back; all coordinates must be integers.
    let mut mult_table = vec![vec![Vec::new(); d]; d];
    for i in 0..d {
        for j in i..d {
            let prod = power_mul_mod(&basis[i], &basis[j], &minpoly);
            let coords = mat_apply(&power_to_basis, &prod);
            let mut int_coords = Vec::with_capacity(d);
            for c in &coords {
                if !c.denom().is_one() {
                    return Err(FieldError::BasisNotClosed { i, j });
                }
                int_coords.push(c.numer().clone());
            }
            mult_table[i][j] = int_coords.clone();
            mult_table[j][i] = int_coords;
        }
    }

    let roots = isolate_real_roots(&minpoly);
    let totally_real = roots.len() == d;
    Ok(Arc::new(NumberField {
        minpoly,
        degree: d,
        basis,
        power_to_basis,
        mult_table,
        root_intervals: roots,
        totally_real,
    }))
}

/// Field with the power basis `1, theta, ..., theta^(d-1)` as the order.
pub fn make_field_power_basis(minpoly: IntPoly) -> Result<FieldRef, FieldError> {
    if minpoly.is_zero() || minpoly.deg() == 0 {
        return Err(FieldError::NotMonic);
    }
    let d = minpoly.deg();
    let mut basis = vec![vec![Rational::zero(); d]; d];
    for (i, row) in basis.iter_mut().enumerate() {
        row[i] = Rational::one();
    }
    make_field(minpoly, basis)
}

/// The rational field, `Q[T]/(T - 1)` with basis `(1)`.
pub fn rational_field() -> FieldRef {
    make_field_power_basis(IntPoly::from_i64(&[-1, 1])).expect("rational field is valid")
}

fn integer_root(f: &IntPoly) -> Option<BigInt> {
    let c0 = f.coeff(0);
    if c0.is_zero() {
        return Some(BigInt::zero());
    }
    let mut dv = BigInt::one();
    let abs = c0.abs();
    while &dv * &dv <= abs {
        if (&abs % &dv).is_zero() {
            for cand in [dv.clone(), &abs / &dv] {
                for signed in [cand.clone(), -&cand] {
                    if f.eval_int(&signed).is_zero() {
                        return Some(signed);
                    }
                }
            }
        }
        dv += 1;
    }
    None
}

impl NumberField {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn minpoly(&self) -> &IntPoly {
        &self.minpoly
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn is_totally_real(&self) -> bool {
        self.totally_real
    }

    pub fn is_rational(&self) -> bool {
        self.degree == 1
    }

    /// Isolating intervals of the real roots (all of them iff totally real).
    pub fn root_intervals(&self) -> &[RatInterval] {
        &self.root_intervals
    }

    pub fn mult_table(&self) -> &[Vec<Vec<BigInt>>] {
        &self.mult_table
    }
}

/// Integral coordinates of `theta` itself, when `theta` lies in the order.
pub fn field_generator(field: &FieldRef) -> Result<OrderElement, FieldError> {
    let d = field.degree();
    let mut power = vec![Rational::zero(); d];
    if d == 1 {
        // theta is the root of a linear polynomial: theta = -c0.
        power[0] = Rational::from_integer(-field.minpoly.coeff(0));
    } else {
        power[1] = Rational::one();
    }
    let coords = mat_apply(&field.power_to_basis, &power);
    OrderElement::from_rational_coords(field, &coords).ok_or(FieldError::NotIntegralImage)
}

#[derive(Clone)]
pub struct OrderElement {
    field: FieldRef,
    coords: Vec<BigInt>,
}

impl PartialEq for OrderElement {
    fn eq(&self, other: &Self) -> bool {
        same_field(&self.field, &other.field) && self.coords == other.coords
    }
}

impl Eq for OrderElement {}

impl fmt::Debug for OrderElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for OrderElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

impl OrderElement {
    pub fn new(field: &FieldRef, coords: Vec<BigInt>) -> Result<Self, FieldError> {
        if coords.len() != field.degree() {
            return Err(FieldError::CoordLength {
                expected: field.degree(),
                got: coords.len(),
            });
        }
        Ok(OrderElement {
            field: Arc::clone(field),
            coords,
        })
    }

    pub fn from_i64(field: &FieldRef, coords: &[i64]) -> Result<Self, FieldError> {
        Self::new(field, coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(field: &FieldRef) -> Self {
        OrderElement {
            field: Arc::clone(field),
            coords: vec![BigInt::zero(); field.degree()],
        }
    }

    pub fn one(field: &FieldRef) -> Self {
        Self::from_int(field, BigInt::one())
    }

    /// The rational integer `n` as an order element (`b_1 = 1`).
    pub fn from_int(field: &FieldRef, n: BigInt) -> Self {
        let mut coords = vec![BigInt::zero(); field.degree()];
        coords[0] = n;
        OrderElement {
            field: Arc::clone(field),
            coords,
        }
    }

    fn from_rational_coords(field: &FieldRef, coords: &[Rational]) -> Option<Self> {
        let mut out = Vec::with_capacity(coords.len());
        for c in coords {
            if !c.denom().is_one() {
                return None;
            }
            out.push(c.numer().clone());
        }
        Some(OrderElement {
            field: Arc::clone(field),
            coords: out,
        })
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// `Some(n)` iff the element is the rational integer `n`.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, FieldError> {
        if !same_field(&self.field, &other.field) {
            return Err(FieldError::FieldMismatch);
        }
        Ok(OrderElement {
            field: Arc::clone(&self.field),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        OrderElement {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, FieldError> {
        if !same_field(&self.field, &other.field) {
            return Err(FieldError::FieldMismatch);
        }
        let d = self.field.degree();
        let table = &self.field.mult_table;
        let mut out = vec![BigInt::zero(); d];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, t) in table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] += &ab * t;
                    }
                }
            }
        }
        Ok(OrderElement {
            field: Arc::clone(&self.field),
            coords: out,
        })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        OrderElement {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    pub fn square(&self) -> Self {
        self.try_mul(self).expect("same field")
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = OrderElement::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base).expect("same field");
            }
            base = base.try_mul(&base).expect("same field");
            e >>= 1;
        }
        acc
    }

    /// Power-basis coordinates (rational).
    pub fn power_coords(&self) -> Vec<Rational> {
        let d = self.field.degree();
        let mut p = vec![Rational::zero(); d];
        for (i, v) in self.coords.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let vr = Rational::from_integer(v.clone());
            for (j, b) in self.field.basis[i].iter().enumerate() {
                if !b.is_zero() {
                    p[j] += &vr * b;
                }
            }
        }
        p
    }

    /// Matrix of multiplication by `self` in the integral basis (columns are
    /// the coordinates of `self * b_j`).
    pub fn mult_matrix(&self) -> Vec<Vec<BigInt>> {
        let d = self.field.degree();
        let table = &self.field.mult_table;
        let mut m = vec![vec![BigInt::zero(); d]; d];
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..d {
                for i in 0..d {
                    let t = &table[k][j][i];
                    if !t.is_zero() {
                        m[i][j] += c * t;
                    }
                }
            }
        }
        m
    }
}

impl std::ops::Add for &OrderElement {
    type Output = OrderElement;
    fn add(self, rhs: &OrderElement) -> OrderElement {
        self.try_add(rhs).expect("field mismatch")
    }
}

impl std::ops::Sub for &OrderElement {
    type Output = OrderElement;
    fn sub(self, rhs: &OrderElement) -> OrderElement {
        self.try_sub(rhs).expect("field mismatch")
    }
}

impl std::ops::Mul for &OrderElement {
    type Output = OrderElement;
    fn mul(self, rhs: &OrderElement) -> OrderElement {
        self.try_mul(rhs).expect("field mismatch")
    }
}

impl std::ops::Neg for &OrderElement {
    type Output = OrderElement;
    fn neg(self) -> OrderElement {
        OrderElement::neg(self)
    }
}

/// Field element with rational coordinates in the integral basis. Used for
/// minors, Gram matrices and inverse computations; order elements embed.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldElement {
    field: FieldRef,
    coords: Vec<Rational>,
}

impl FieldElement {
    pub fn new(field: &FieldRef, coords: Vec<Rational>) -> Self {
        assert_eq!(coords.len(), field.degree());
        FieldElement {
            field: Arc::clone(field),
            coords,
        }
    }

    pub fn zero(field: &FieldRef) -> Self {
        FieldElement {
            field: Arc::clone(field),
            coords: vec![Rational::zero(); field.degree()],
        }
    }

    pub fn one(field: &FieldRef) -> Self {
        let mut coords = vec![Rational::zero(); field.degree()];
        coords[0] = Rational::one();
        FieldElement {
            field: Arc::clone(field),
            coords,
        }
    }

    pub fn from_order(x: &OrderElement) -> Self {
        FieldElement {
            field: Arc::clone(&x.field),
            coords: x
                .coords
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        }
    }

    pub fn from_rational(field: &FieldRef, r: Rational) -> Self {
        let mut coords = vec![Rational::zero(); field.degree()];
        coords[0] = r;
        FieldElement {
            field: Arc::clone(field),
            coords,
        }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn to_order(&self) -> Option<OrderElement> {
        let mut out = Vec::with_capacity(self.coords.len());
        for c in &self.coords {
            if !c.denom().is_one() {
                return None;
            }
            out.push(c.numer().clone());
        }
        Some(OrderElement {
            field: Arc::clone(&self.field),
            coords: out,
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        FieldElement {
            field: Arc::clone(&self.field),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        FieldElement {
            field: Arc::clone(&self.field),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        FieldElement {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.field.degree();
        let table = &self.field.mult_table;
        let mut out = vec![Rational::zero(); d];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, t) in table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] += &ab * Rational::from_integer(t.clone());
                    }
                }
            }
        }
        FieldElement {
            field: Arc::clone(&self.field),
            coords: out,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        FieldElement {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse, `None` for zero (or a zero divisor when the
    /// minimal polynomial was reducible).
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let d = self.field.degree();
        // Solve M_x y = e_1 over the rationals.
        let table = &self.field.mult_table;
        let mut m = vec![vec![Rational::zero(); d]; d];
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..d {
                for i in 0..d {
                    let t = &table[k][j][i];
                    if !t.is_zero() {
                        m[i][j] += c * Rational::from_integer(t.clone());
                    }
                }
            }
        }
        let mut rhs = vec![Rational::zero(); d];
        rhs[0] = Rational::one();
        let sol = mat_solve(&m, &rhs)?;
        Some(FieldElement {
            field: Arc::clone(&self.field),
            coords: sol,
        })
    }

    pub fn power_coords(&self) -> Vec<Rational> {
        let d = self.field.degree();
        let mut p = vec![Rational::zero(); d];
        for (i, v) in self.coords.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            for (j, b) in self.field.basis[i].iter().enumerate() {
                if !b.is_zero() {
                    p[j] += v * b;
                }
            }
        }
        p
    }
}

// ---------------------------------------------------------------------------
// Trace, norm, characteristic polynomial, discriminant
// ---------------------------------------------------------------------------

pub fn trace(x: &OrderElement) -> Rational {
    let m = x.mult_matrix();
    let mut t = BigInt::zero();
    for (i, row) in m.iter().enumerate() {
        t += &row[i];
    }
    Rational::from_integer(t)
}

pub fn norm(x: &OrderElement) -> Rational {
    let m = x.mult_matrix();
    let mat: Vec<Vec<Rational>> = m
        .into_iter()
        .map(|row| row.into_iter().map(Rational::from_integer).collect())
        .collect();
    crate::poly::det_rational(mat)
}

/// Characteristic polynomial of multiplication by `x` (monic, integer).
pub fn char_poly(x: &OrderElement) -> IntPoly {
    let d = x.field.degree();
    let a: Vec<Vec<Rational>> = x
        .mult_matrix()
        .into_iter()
        .map(|row| row.into_iter().map(Rational::from_integer).collect())
        .collect();
    // Faddeev-LeVerrier: exact over the rationals, integral for integral x.
    let mut coeffs = vec![Rational::zero(); d + 1];
    coeffs[d] = Rational::one();
    let mut m = vec![vec![Rational::zero(); d]; d]; // M_0 = 0
    let mut c = Rational::one();
    for k in 1..=d {
        // M_k = A * M_{k-1} + c_{d-k+1} * I
        let mut am = mat_mul(&a, &m);
        for (i, row) in am.iter_mut().enumerate() {
            row[i] += &c;
        }
        m = am;
        let am2 = mat_mul(&a, &m);
        let mut tr = Rational::zero();
        for (i, row) in am2.iter().enumerate() {
            tr += &row[i];
        }
        c = -tr / Rational::from_integer(BigInt::from(k));
        coeffs[d - k] = c.clone();
    }
    IntPoly::new(
        coeffs
            .into_iter()
            .map(|q| {
                assert!(q.denom().is_one(), "char poly must be integral");
                q.numer().clone()
            })
            .collect(),
    )
}

/// Discriminant of the characteristic polynomial of `x` (0 when `x` fails to
/// generate the field).
pub fn elem_disc(x: &OrderElement) -> BigInt {
    let cp = char_poly(x);
    let disc = cp.discriminant();
    assert!(disc.denom().is_one());
    disc.numer().clone()
}

// ---------------------------------------------------------------------------
// Certified sign decisions through embedding enclosures
// ---------------------------------------------------------------------------

fn eval_power_interval(power: &[Rational], iv: &RatInterval) -> RatInterval {
    let mut acc = RatInterval::point(Rational::zero());
    for c in power.iter().rev() {
        acc = acc.mul(iv).shift(c);
    }
    acc
}

fn power_coords_of(field: &NumberField, coords: &[Rational]) -> Vec<Rational> {
    let d = field.degree;
    let mut p = vec![Rational::zero(); d];
    for (i, v) in coords.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        for (j, b) in field.basis[i].iter().enumerate() {
            if !b.is_zero() {
                p[j] += v * b;
            }
        }
    }
    p
}

/// Signs of all real embeddings of a (syntactically nonzero) element given by
/// rational coordinates in the integral basis. Terminates because embeddings
/// of nonzero elements are nonzero.
pub fn embedding_signs(field: &NumberField, coords: &[Rational]) -> Vec<i32> {
    assert!(
        coords.iter().any(|c| !c.is_zero()),
        "signs of the zero element"
    );
    let power = power_coords_of(field, coords);
    field
        .root_intervals
        .iter()
        .map(|root_iv| {
            let mut iv = root_iv.clone();
            loop {
                let enc = eval_power_interval(&power, &iv);
                if enc.is_positive() {
                    return 1;
                }
                if enc.is_negative() {
                    return -1;
                }
                iv = refine_root_interval(&field.minpoly, &iv);
            }
        })
        .collect()
}

/// `true` iff every real embedding of `x` is positive. Zero is not totally
/// positive.
pub fn is_totally_positive(x: &OrderElement) -> Result<bool, FieldError> {
    if !x.field.totally_real {
        return Err(FieldError::NotTotallyRealField);
    }
    if x.is_zero() {
        return Ok(false);
    }
    let coords: Vec<Rational> = x
        .coords
        .iter()
        .map(|c| Rational::from_integer(c.clone()))
        .collect();
    Ok(embedding_signs(&x.field, &coords).iter().all(|&s| s > 0))
}

/// Total positivity for rational coordinates (used for minors).
pub fn is_totally_positive_coords(
    field: &NumberField,
    coords: &[Rational],
) -> Result<bool, FieldError> {
    if !field.totally_real {
        return Err(FieldError::NotTotallyRealField);
    }
    if coords.iter().all(|c| c.is_zero()) {
        return Ok(false);
    }
    Ok(embedding_signs(field, coords).iter().all(|&s| s > 0))
}

/// Decides `house(x) < bound` exactly. The only possible tie, `house(x) =
/// bound`, forces `x` rational, which is resolved syntactically.
pub fn house_lt(x: &OrderElement, bound: &Rational) -> Result<bool, FieldError> {
    house_cmp(x, bound, true)
}

/// Decides `house(x) <= bound` exactly.
pub fn house_le(x: &OrderElement, bound: &Rational) -> Result<bool, FieldError> {
    house_cmp(x, bound, false)
}

fn house_cmp(x: &OrderElement, bound: &Rational, strict: bool) -> Result<bool, FieldError> {
    if !x.field.totally_real {
        return Err(FieldError::NotTotallyRealField);
    }
    if bound.is_negative() {
        return Ok(false);
    }
    if let Some(n) = x.as_integer() {
        let h = Rational::from_integer(n.abs());
        return Ok(if strict { &h < bound } else { &h <= bound });
    }
    // Irrational x: |sigma(x)| = bound would force x^2 = bound^2, hence x
    // rational. So strict refinement always decides.
    let power = x.power_coords();
    for root_iv in &x.field.root_intervals {
        let mut iv = root_iv.clone();
        loop {
            let enc = eval_power_interval(&power, &iv).abs();
            if &enc.hi < bound {
                break; // this embedding is fine
            }
            if &enc.lo > bound {
                return Ok(false);
            }
            iv = refine_root_interval(&x.field.minpoly, &iv);
        }
    }
    Ok(true)
}

/// Rational enclosure of `house(x)` of width at most `eps`.
pub fn house_enclosure(x: &OrderElement, eps: &Rational) -> Result<RatInterval, FieldError> {
    if !x.field.totally_real {
        return Err(FieldError::NotTotallyRealField);
    }
    if x.is_zero() {
        return Ok(RatInterval::point(Rational::zero()));
    }
    let encs = embedding_enclosures_of(x, eps)?;
    let mut acc = encs[0].abs();
    for e in &encs[1..] {
        acc = acc.max(&e.abs());
    }
    Ok(acc)
}

/// Enclosures of every real embedding of `x`, each of width at most `eps`.
pub fn embedding_enclosures_of(
    x: &OrderElement,
    eps: &Rational,
) -> Result<Vec<RatInterval>, FieldError> {
    if !x.field.totally_real {
        return Err(FieldError::NotTotallyRealField);
    }
    let power = x.power_coords();
    let mut out = Vec::with_capacity(x.field.root_intervals.len());
    for root_iv in &x.field.root_intervals {
        let mut iv = root_iv.clone();
        let mut enc = eval_power_interval(&power, &iv);
        while &enc.width() > eps {
            iv = refine_root_interval(&x.field.minpoly, &iv);
            enc = eval_power_interval(&power, &iv);
        }
        out.push(enc);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Embeddings between fields
// ---------------------------------------------------------------------------

/// A field embedding determined by the image of the source power-basis
/// generator.
#[derive(Clone, Debug)]
pub struct FieldEmbedding {
    source: FieldRef,
    target: FieldRef,
    image: OrderElement,
    /// Cached powers image^0 .. image^(d_src - 1).
    image_powers: Vec<OrderElement>,
}

impl FieldEmbedding {
    pub fn source(&self) -> &FieldRef {
        &self.source
    }

    pub fn target(&self) -> &FieldRef {
        &self.target
    }

    pub fn image(&self) -> &OrderElement {
        &self.image
    }
}

/// Validates that `image` is a root of the source minimal polynomial inside
/// the target order.
pub fn make_embedding(
    source: &FieldRef,
    target: &FieldRef,
    image: OrderElement,
) -> Result<FieldEmbedding, FieldError> {
    if !same_field(image.field(), target) {
        return Err(FieldError::FieldMismatch);
    }
    let minpoly = source.minpoly();
    let mut acc = OrderElement::zero(target);
    // Horner: acc = minpoly(image)
    for c in minpoly.coeffs().iter().rev() {
        acc = acc.try_mul(&image)?;
        acc = acc.try_add(&OrderElement::from_int(target, c.clone()))?;
    }
    if !acc.is_zero() {
        return Err(FieldError::InvalidImage);
    }
    let mut image_powers = Vec::with_capacity(source.degree());
    let mut p = OrderElement::one(target);
    for _ in 0..source.degree() {
        image_powers.push(p.clone());
        p = p.try_mul(&image)?;
    }
    Ok(FieldEmbedding {
        source: Arc::clone(source),
        target: Arc::clone(target),
        image,
        image_powers,
    })
}

/// The canonical embedding of the rational field into any field.
pub fn rational_embedding(target: &FieldRef) -> FieldEmbedding {
    let q = rational_field();
    make_embedding(&q, target, OrderElement::one(target)).expect("1 is a root of T - 1")
}

/// Pushes an order element of the source through the embedding. Errors with
/// `NotIntegralImage` if the image leaves the target order.
pub fn map_elem(e: &FieldEmbedding, x: &OrderElement) -> Result<OrderElement, FieldError> {
    if !same_field(x.field(), &e.source) {
        return Err(FieldError::FieldMismatch);
    }
    let power = x.power_coords();
    let mut acc = FieldElement::zero(&e.target);
    for (j, c) in power.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        acc = acc.add(&FieldElement::from_order(&e.image_powers[j]).scale(c));
    }
    acc.to_order().ok_or(FieldError::NotIntegralImage)
}

// ---------------------------------------------------------------------------
// Small exact linear algebra helpers
// ---------------------------------------------------------------------------

fn transpose(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let rows = m.len();
    let cols = m[0].len();
    let mut out = vec![vec![Rational::zero(); rows]; cols];
    for (i, row) in m.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            out[j][i] = v.clone();
        }
    }
    out
}

fn mat_apply(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| {
            let mut acc = Rational::zero();
            for (a, b) in row.iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    acc += a * b;
                }
            }
            acc
        })
        .collect()
}

fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    let mut out = vec![vec![Rational::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    out[i][j] += &a[i][l] * &b[l][j];
                }
            }
        }
    }
    out
}

/// Gauss-Jordan inverse; `None` when singular.
pub fn mat_inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv = vec![vec![Rational::zero(); n]; n];
    for (i, row) in inv.iter_mut().enumerate() {
        row[i] = Rational::one();
    }
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for v in a[col].iter_mut() {
            *v /= &p;
        }
        for v in inv[col].iter_mut() {
            *v /= &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in 0..n {
                let t = &f * &a[col][c];
                a[r][c] -= t;
                let t = &f * &inv[col][c];
                inv[r][c] -= t;
            }
        }
    }
    Some(inv)
}

/// Solves `m x = rhs`; `None` when singular.
pub fn mat_solve(m: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for v in a[col].iter_mut() {
            *v /= &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in col..=n {
                let t = &f * &a[col][c];
                a[r][c] -= t;
            }
        }
    }
    Some(a.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

fn power_mul_mod(a: &[Rational], b: &[Rational], minpoly: &IntPoly) -> Vec<Rational> {
    let d = minpoly.deg();
    let mut prod = vec![Rational::zero(); 2 * d];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                prod[i + j] += x * y;
            }
        }
    }
    // Reduce powers theta^k for k >= d using theta^d = -(lower part).
    for k in (d..2 * d).rev() {
        if prod[k].is_zero() {
            continue;
        }
        let c = prod[k].clone();
        prod[k] = Rational::zero();
        for i in 0..d {
            let m = Rational::from_integer(minpoly.coeff(i));
            if !m.is_zero() {
                let t = &c * &m;
                prod[k - d + i] -= t;
            }
        }
    }
    prod.truncate(d);
    prod
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    pub fn k49() -> FieldRef {
        make_field_power_basis(IntPoly::from_i64(&[-1, -2, 1, 1])).unwrap()
    }

    fn q_sqrt21() -> FieldRef {
        // O = Z[(1+sqrt21)/2], basis rows: (1,0), (1/2,1/2)
        make_field(
            IntPoly::from_i64(&[-21, 0, 1]),
            vec![vec![rat_int(1), rat_int(0)], vec![rat(1, 2), rat(1, 2)]],
        )
        .unwrap()
    }

    #[test]
    fn k49_is_totally_real() {
        let f = k49();
        assert!(f.is_totally_real());
        assert_eq!(f.degree(), 3);
        assert_eq!(f.root_intervals().len(), 3);
    }

    #[test]
    fn rational_field_works() {
        let q = rational_field();
        assert_eq!(q.degree(), 1);
        assert!(q.is_totally_real());
        let five = OrderElement::from_i64(&q, &[5]).unwrap();
        assert_eq!(trace(&five), rat_int(5));
        assert_eq!(norm(&five), rat_int(5));
    }

    #[test]
    fn sqrt21_basis_accepted() {
        let f = q_sqrt21();
        assert!(f.is_totally_real());
        // w^2 = 5 + w for w = (1+sqrt21)/2
        let w = OrderElement::from_i64(&f, &[0, 1]).unwrap();
        let w2 = w.square();
        assert_eq!(w2, OrderElement::from_i64(&f, &[5, 1]).unwrap());
    }

    #[test]
    fn make_field_rejections() {
        // not monic
        assert_eq!(
            make_field_power_basis(IntPoly::from_i64(&[1, 2])).unwrap_err(),
            FieldError::NotMonic
        );
        // not squarefree
        assert_eq!(
            make_field_power_basis(IntPoly::from_i64(&[1, 2, 1])).unwrap_err(),
            FieldError::NotSquarefree
        );
        // rational root: T^2 - 4
        assert_eq!(
            make_field_power_basis(IntPoly::from_i64(&[-4, 0, 1])).unwrap_err(),
            FieldError::RationalRoot(BigInt::from(2))
        );
        // basis not closed: {1, theta/2} in Q(sqrt2): (theta/2)^2 = 1/2
        let r = make_field(
            IntPoly::from_i64(&[-2, 0, 1]),
            vec![vec![rat_int(1), rat_int(0)], vec![rat_int(0), rat(1, 2)]],
        );
        assert!(matches!(r, Err(FieldError::BasisNotClosed { .. })));
        // singular basis
        let r = make_field(
            IntPoly::from_i64(&[-2, 0, 1]),
            vec![vec![rat_int(1), rat_int(0)], vec![rat_int(1), rat_int(0)]],
        );
        assert!(matches!(
            r,
            Err(FieldError::BasisSingular) | Err(FieldError::BasisNotClosed { .. })
        ));
    }

    #[test]
    fn omega_arithmetic() {
        let f = k49();
        let omega = OrderElement::from_i64(&f, &[0, 1, 0]).unwrap();
        let omega2 = omega.square();
        assert_eq!(omega2, OrderElement::from_i64(&f, &[0, 0, 1]).unwrap());
        // omega * omega^2 = omega^3 = -omega^2 + 2 omega + 1
        let omega3 = omega.try_mul(&omega2).unwrap();
        assert_eq!(omega3, OrderElement::from_i64(&f, &[1, 2, -1]).unwrap());
        // doubling and annihilation
        let two_omega = omega.try_add(&omega).unwrap();
        assert_eq!(two_omega, omega.scale(&BigInt::from(2)));
        let zero = OrderElement::zero(&f);
        assert_eq!(omega.try_mul(&zero).unwrap(), zero);
    }

    #[test]
    fn field_mismatch_detected() {
        let f = k49();
        let g = q_sqrt21();
        let x = OrderElement::one(&f);
        let y = OrderElement::one(&g);
        assert_eq!(x.try_add(&y).unwrap_err(), FieldError::FieldMismatch);
    }

    #[test]
    fn traces_and_norms() {
        let f = k49();
        let one = OrderElement::one(&f);
        assert_eq!(trace(&one), rat_int(3));
        let omega = OrderElement::from_i64(&f, &[0, 1, 0]).unwrap();
        assert_eq!(trace(&omega), rat_int(-1));
        assert_eq!(norm(&omega), rat_int(1));
        // trace(12 + 2 sqrt(13)) = 24
        let f13 = make_field(
            IntPoly::from_i64(&[-13, 0, 1]),
            vec![vec![rat_int(1), rat_int(0)], vec![rat(1, 2), rat(1, 2)]],
        )
        .unwrap();
        // 12 + 2 sqrt13 = 10 + 4 w, w = (1+sqrt13)/2
        let x = OrderElement::from_i64(&f13, &[10, 4]).unwrap();
        assert_eq!(trace(&x), rat_int(24));
    }

    #[test]
    fn trace_norm_hom_laws() {
        let f = k49();
        let x = OrderElement::from_i64(&f, &[3, -2, 1]).unwrap();
        let y = OrderElement::from_i64(&f, &[-1, 4, 2]).unwrap();
        assert_eq!(trace(&x.try_add(&y).unwrap()), trace(&x) + trace(&y));
        assert_eq!(norm(&x.try_mul(&y).unwrap()), norm(&x) * norm(&y));
    }

    #[test]
    fn total_positivity() {
        let f = k49();
        let one = OrderElement::one(&f);
        assert!(is_totally_positive(&one).unwrap());
        let omega = OrderElement::from_i64(&f, &[0, 1, 0]).unwrap();
        assert!(!is_totally_positive(&omega).unwrap());
        // 124 - 37 omega^2 is totally positive
        let x = OrderElement::from_i64(&f, &[124, 0, -37]).unwrap();
        assert!(is_totally_positive(&x).unwrap());
        // zero is not totally positive
        assert!(!is_totally_positive(&OrderElement::zero(&f)).unwrap());
    }

    #[test]
    fn houses() {
        let f = k49();
        let five = OrderElement::from_int(&f, BigInt::from(5));
        assert!(house_lt(&five, &rat_int(6)).unwrap());
        assert!(!house_lt(&five, &rat_int(5)).unwrap());
        assert!(house_le(&five, &rat_int(5)).unwrap());
        let omega = OrderElement::from_i64(&f, &[0, 1, 0]).unwrap();
        assert!(house_lt(&omega, &rat_int(2)).unwrap());
        let omega2 = omega.square();
        assert!(house_lt(&omega2, &rat(13, 4)).unwrap());
        assert!(!house_lt(&omega2, &rat_int(3)).unwrap());
        let enc = house_enclosure(&omega2, &rat(1, 1000)).unwrap();
        // house(omega^2) = 2 + 2cos(2pi/7) ~ 3.2470
        assert!(enc.width() <= rat(1, 1000));
        assert!(enc.lo > rat(32, 10) && enc.hi < rat(33, 10));
    }

    #[test]
    fn element_discriminants() {
        // beta root of T^3 - 4T - 1: disc 229
        let f229 = make_field_power_basis(IntPoly::from_i64(&[-1, -4, 0, 1])).unwrap();
        let beta = OrderElement::from_i64(&f229, &[0, 1, 0]).unwrap();
        assert_eq!(elem_disc(&beta), BigInt::from(229));
        // omega in K49: disc 49
        let f = k49();
        let omega = OrderElement::from_i64(&f, &[0, 1, 0]).unwrap();
        assert_eq!(elem_disc(&omega), BigInt::from(49));
        // rational element of a cubic field: disc 0
        let seven = OrderElement::from_int(&f, BigInt::from(7));
        assert_eq!(elem_disc(&seven), BigInt::zero());
    }

    #[test]
    fn embeddings_validate_and_map() {
        let f = k49();
        // identity embedding
        let theta = field_generator(&f).unwrap();
        let id = make_embedding(&f, &f, theta).unwrap();
        let x = OrderElement::from_i64(&f, &[2, -1, 3]).unwrap();
        assert_eq!(map_elem(&id, &x).unwrap(), x);
        // invalid image: 2 is not a root of T^2 - 21
        let q21 = q_sqrt21();
        let bad = make_embedding(&q21, &f, OrderElement::from_int(&f, BigInt::from(2)));
        assert_eq!(bad.unwrap_err(), FieldError::InvalidImage);
        // Galois automorphism of K49: omega -> omega^2 - 2
        let img = OrderElement::from_i64(&f, &[-2, 0, 1]).unwrap();
        let sigma = make_embedding(&f, &f, img).unwrap();
        let y = map_elem(&sigma, &x).unwrap();
        assert_eq!(trace(&y), trace(&x));
        // hom laws
        let z = OrderElement::from_i64(&f, &[1, 1, -2]).unwrap();
        assert_eq!(
            map_elem(&sigma, &x.try_add(&z).unwrap()).unwrap(),
            map_elem(&sigma, &x)
                .unwrap()
                .try_add(&map_elem(&sigma, &z).unwrap())
                .unwrap()
        );
        assert_eq!(
            map_elem(&sigma, &x.try_mul(&z).unwrap()).unwrap(),
            map_elem(&sigma, &x)
                .unwrap()
                .try_mul(&map_elem(&sigma, &z).unwrap())
                .unwrap()
        );
    }

    #[test]
    fn field_element_inverse() {
        let f = k49();
        let omega = OrderElement::from_i64(&f, &[0, 1, 0]).unwrap();
        let fe = FieldElement::from_order(&omega);
        let inv = fe.inverse().unwrap();
        assert_eq!(fe.mul(&inv), FieldElement::one(&f));
        assert!(FieldElement::zero(&f).inverse().is_none());
    }

    #[test]
    fn trace_within_embedding_enclosures() {
        let f = k49();
        let x = OrderElement::from_i64(&f, &[5, -3, 2]).unwrap();
        for k in 0..5 {
            let eps = rat(1, 1 << k);
            let encs = embedding_enclosures_of(&x, &eps).unwrap();
            let mut sum = RatInterval::point(Rational::zero());
            for e in &encs {
                sum = sum.add(e);
            }
            assert!(sum.contains(&trace(&x)));
        }
    }
}
