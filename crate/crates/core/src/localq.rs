//! Local obstruction theory over the rationals: Legendre and Hilbert
//! symbols, Hasse invariants, isotropy and representation over completions
//! and over Q, brute-force congruence solvability, and square testing in a
//! 2-inert cubic order with an explicit digit set.

use crate::numfield::{same_field, FieldError, FieldRef, OrderElement};
use crate::qform::QuadraticForm;
use crate::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LocalError {
    #[error("prime must be odd")]
    EvenPrime,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("zero argument to a Hilbert symbol")]
    ZeroArgument,
    #[error("zero target: use isotropy directly")]
    ZeroTarget,
    #[error("diagonal form entries must be nonzero")]
    ZeroEntry,
    #[error("a factor above the trial-division bound remained composite")]
    UnfactoredResidual,
    #[error("form must have rational-integer coefficients")]
    NotRationalBase,
    #[error("dyadic context needs a degree-3 order")]
    NotDegreeThree,
    #[error("2 is not inert: minimal polynomial has a root mod 2")]
    NotInertAtTwo,
    #[error("valuation of zero")]
    ZeroElement,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A place of the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Place {
    Real,
    Finite(u64),
}

impl std::fmt::Display for Place {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Place::Real => write!(f, "real"),
            Place::Finite(p) => write!(f, "{p}"),
        }
    }
}

/// A nondegenerate diagonal form over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalRationalForm {
    entries: Vec<Rational>,
}

impl DiagonalRationalForm {
    pub fn new(entries: Vec<Rational>) -> Result<Self, LocalError> {
        if entries.is_empty() {
            return Err(LocalError::ZeroEntry);
        }
        if entries.iter().any(|e| e.is_zero()) {
            return Err(LocalError::ZeroEntry);
        }
        Ok(DiagonalRationalForm { entries })
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        Self::new(entries.iter().map(|&e| Rational::from_integer(e.into())).collect())
            .expect("nonzero entries")
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn determinant(&self) -> Rational {
        self.entries.iter().product()
    }

    /// Orthogonal sum with a single extra entry.
    pub fn with_entry(&self, a: &Rational) -> Result<Self, LocalError> {
        let mut entries = self.entries.clone();
        entries.push(a.clone());
        DiagonalRationalForm::new(entries)
    }
}

const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization of `|n|` by trial division. A residual above the
/// bound is accepted when it must be prime and rejected otherwise.
pub fn factorize(n: &BigInt) -> Result<Vec<(u64, u32)>, LocalError> {
    let mut m = n.abs();
    if m.is_zero() {
        return Err(LocalError::ZeroArgument);
    }
    let mut out: Vec<(u64, u32)> = Vec::new();
    let mut push = |p: u64, e: u32| {
        if e > 0 {
            out.push((p, e));
        }
    };
    for p in std::iter::once(2u64).chain((3..=TRIAL_DIVISION_BOUND).step_by(2)) {
        if m.is_one() {
            break;
        }
        let pb = BigInt::from(p);
        if &pb * &pb > m && m.to_u64().is_some_and(is_prime_u64) {
            // remaining factor is prime and small enough to index a place
            push(m.to_u64().unwrap(), 1);
            m = BigInt::one();
            break;
        }
        let mut e = 0u32;
        while (&m % &pb).is_zero() {
            m /= &pb;
            e += 1;
        }
        push(p, e);
    }
    if !m.is_one() {
        // Above the bound: prime iff below bound^2; otherwise give up.
        let bound2 = BigInt::from(TRIAL_DIVISION_BOUND) * BigInt::from(TRIAL_DIVISION_BOUND);
        if m <= bound2 {
            push(m.to_u64().ok_or(LocalError::UnfactoredResidual)?, 1);
        } else {
            return Err(LocalError::UnfactoredResidual);
        }
    }
    Ok(out)
}

/// Squarefree integer in the square class of the rational `r`.
pub fn squarefree_class(r: &Rational) -> Result<BigInt, LocalError> {
    if r.is_zero() {
        return Err(LocalError::ZeroArgument);
    }
    let n = r.numer() * r.denom();
    let mut out = BigInt::one();
    for (p, e) in factorize(&n)? {
        if e % 2 == 1 {
            out *= BigInt::from(p);
        }
    }
    if n.is_negative() {
        out = -out;
    }
    Ok(out)
}

/// Legendre symbol `(a | p)` for an odd prime `p`.
pub fn legendre(a: &BigInt, p: u64) -> Result<i32, LocalError> {
    if p == 2 {
        return Err(LocalError::EvenPrime);
    }
    if !is_prime_u64(p) {
        return Err(LocalError::NotPrime(p));
    }
    let pb = BigInt::from(p);
    let am = a.mod_floor(&pb);
    if am.is_zero() {
        return Ok(0);
    }
    let e = (&pb - BigInt::one()) / BigInt::from(2);
    let r = am.modpow(&e, &pb);
    Ok(if r.is_one() { 1 } else { -1 })
}

/// p-adic valuation of a nonzero rational.
pub fn valuation(r: &Rational, p: u64) -> i64 {
    let pb = BigInt::from(p);
    let mut v = 0i64;
    let mut n = r.numer().clone();
    while (&n % &pb).is_zero() {
        n /= &pb;
        v += 1;
    }
    let mut d = r.denom().clone();
    while (&d % &pb).is_zero() {
        d /= &pb;
        v -= 1;
    }
    v
}

/// Unit part `r / p^v(r)` as a pair (numerator, denominator) coprime to `p`.
fn unit_part(r: &Rational, p: u64) -> (BigInt, BigInt) {
    let pb = BigInt::from(p);
    let mut n = r.numer().clone();
    while (&n % &pb).is_zero() {
        n /= &pb;
    }
    let mut d = r.denom().clone();
    while (&d % &pb).is_zero() {
        d /= &pb;
    }
    (n, d)
}

/// Legendre symbol of the unit part of `r` at an odd prime.
fn legendre_unit(r: &Rational, p: u64) -> Result<i32, LocalError> {
    let (n, d) = unit_part(r, p);
    legendre(&(n * d), p)
}

/// The unit part of `r` modulo `2^k` (for `p = 2`).
fn unit_mod_2k(r: &Rational, k: u32) -> u64 {
    let (n, d) = unit_part(r, 2);
    let m = BigInt::from(1u64 << k);
    let nm = n.mod_floor(&m).to_u64().unwrap();
    let dm = d.mod_floor(&m).to_u64().unwrap();
    // invert the odd denominator mod 2^k
    let mut inv = 1u64;
    let modulus = 1u64 << k;
    for _ in 0..k {
        inv = inv.wrapping_mul(2u64.wrapping_sub(dm.wrapping_mul(inv))) % modulus;
    }
    (nm * inv) % modulus
}

/// Hilbert symbol `(a, b)_v` by the closed-form evaluation.
pub fn hilbert(a: &Rational, b: &Rational, v: &Place) -> Result<i32, LocalError> {
    if a.is_zero() || b.is_zero() {
        return Err(LocalError::ZeroArgument);
    }
    match v {
        Place::Real => Ok(if a.is_negative() && b.is_negative() { -1 } else { 1 }),
        Place::Finite(2) => {
            let alpha = valuation(a, 2);
            let beta = valuation(b, 2);
            let u = unit_mod_2k(a, 3);
            let w = unit_mod_2k(b, 3);
            let eps = |x: u64| (x.wrapping_sub(1) / 2) % 2; // (x-1)/2 mod 2
            let eta = |x: u64| (x * x - 1) / 8 % 2; // (x^2-1)/8 mod 2
            let exp = eps(u) * eps(w)
                + (alpha.rem_euclid(2) as u64) * eta(w)
                + (beta.rem_euclid(2) as u64) * eta(u);
            Ok(if exp % 2 == 0 { 1 } else { -1 })
        }
        Place::Finite(p) => {
            if !is_prime_u64(*p) {
                return Err(LocalError::NotPrime(*p));
            }
            let alpha = valuation(a, *p);
            let beta = valuation(b, *p);
            let la = legendre_unit(a, *p)?;
            let lb = legendre_unit(b, *p)?;
            let eps = (p - 1) / 2 % 2;
            let mut sym = 1i32;
            if (alpha * beta).rem_euclid(2) == 1 && eps == 1 {
                sym = -sym;
            }
            if beta.rem_euclid(2) == 1 && la == -1 {
                sym = -sym;
            }
            if alpha.rem_euclid(2) == 1 && lb == -1 {
                sym = -sym;
            }
            Ok(sym)
        }
    }
}

/// Hasse invariant: product of `hilbert(a_i, a_j, v)` over `i < j`.
pub fn hasse(f: &DiagonalRationalForm, v: &Place) -> Result<i32, LocalError> {
    let mut out = 1;
    for i in 0..f.entries.len() {
        for j in i + 1..f.entries.len() {
            out *= hilbert(&f.entries[i], &f.entries[j], v)?;
        }
    }
    Ok(out)
}

/// `true` iff the rational `r` is a square in the completion at `v`.
pub fn is_square_local(r: &Rational, v: &Place) -> Result<bool, LocalError> {
    if r.is_zero() {
        return Ok(true);
    }
    match v {
        Place::Real => Ok(r.is_positive()),
        Place::Finite(2) => {
            if valuation(r, 2) % 2 != 0 {
                return Ok(false);
            }
            Ok(unit_mod_2k(r, 3) == 1)
        }
        Place::Finite(p) => {
            if valuation(r, *p) % 2 != 0 {
                return Ok(false);
            }
            Ok(legendre_unit(r, *p)? == 1)
        }
    }
}

/// Isotropy of a nondegenerate diagonal form over the completion at `v`.
pub fn is_isotropic_local(f: &DiagonalRationalForm, v: &Place) -> Result<bool, LocalError> {
    let n = f.rank();
    if let Place::Real = v {
        let pos = f.entries.iter().any(|e| e.is_positive());
        let neg = f.entries.iter().any(|e| e.is_negative());
        return Ok(pos && neg);
    }
    let d = f.determinant();
    match n {
        1 => Ok(false),
        2 => is_square_local(&(-d), v),
        3 => {
            let md = -d;
            let lhs = hilbert(&Rational::from_integer((-1).into()), &md, v)?;
            Ok(lhs == hasse(f, v)?)
        }
        4 => {
            if !is_square_local(&d, v)? {
                return Ok(true);
            }
            let m1 = Rational::from_integer((-1).into());
            Ok(hilbert(&m1, &m1, v)? == hasse(f, v)?)
        }
        _ => Ok(true),
    }
}

/// Representation of a nonzero rational over the completion at `v`:
/// `f` represents `a` iff `f + <-a>` is isotropic.
pub fn represents_local(
    f: &DiagonalRationalForm,
    a: &Rational,
    v: &Place,
) -> Result<bool, LocalError> {
    if a.is_zero() {
        return Err(LocalError::ZeroTarget);
    }
    let g = f.with_entry(&(-a))?;
    is_isotropic_local(&g, v)
}

/// The places that can obstruct: the real place and the primes dividing
/// `2 * a * prod(entries)` (numerators and denominators).
pub fn relevant_places(f: &DiagonalRationalForm, a: &Rational) -> Result<Vec<Place>, LocalError> {
    let mut primes = std::collections::BTreeSet::new();
    primes.insert(2u64);
    let mut push_rat = |r: &Rational| -> Result<(), LocalError> {
        for (p, _) in factorize(&(r.numer() * r.denom()))? {
            primes.insert(p);
        }
        Ok(())
    };
    push_rat(a)?;
    for e in &f.entries {
        push_rat(e)?;
    }
    let mut out = vec![Place::Real];
    out.extend(primes.into_iter().map(Place::Finite));
    Ok(out)
}

/// Representation over the rationals by the Hasse-Minkowski principle:
/// conjunction of the local conditions at all relevant places.
pub fn represents_rational(f: &DiagonalRationalForm, a: &Rational) -> Result<bool, LocalError> {
    if a.is_zero() {
        return Err(LocalError::ZeroTarget);
    }
    for v in relevant_places(f, a)? {
        if !represents_local(f, a, &v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First relevant place at which `f` fails to represent `a`, if any.
pub fn first_obstructed_place(
    f: &DiagonalRationalForm,
    a: &Rational,
) -> Result<Option<Place>, LocalError> {
    for v in relevant_places(f, a)? {
        if !represents_local(f, a, &v)? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// Brute-force congruence solvability: is `a` attained by the form on
/// `(Z/m)^rank`?
pub fn solvable_mod(q: &QuadraticForm, a: &BigInt, m: u64) -> Result<bool, LocalError> {
    if !q.field().is_rational() {
        return Err(LocalError::NotRationalBase);
    }
    if m == 1 {
        return Ok(true);
    }
    let n = q.rank();
    let mb = BigInt::from(m);
    let target = a.mod_floor(&mb).to_u64().unwrap();
    // coefficient matrix mod m
    let mut coeffs = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in i..n {
            coeffs[i][j] = q.coeff(i, j).coords()[0].mod_floor(&mb).to_u64().unwrap();
        }
    }
    let mut v = vec![0u64; n];
    loop {
        let mut acc = 0u64;
        for i in 0..n {
            for j in i..n {
                if coeffs[i][j] != 0 {
                    acc = (acc + coeffs[i][j] * v[i] % m * v[j]) % m;
                }
            }
        }
        if acc == target {
            return Ok(true);
        }
        // odometer
        let mut k = 0;
        loop {
            if k == n {
                return Ok(false);
            }
            v[k] += 1;
            if v[k] < m {
                break;
            }
            v[k] = 0;
            k += 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Dyadic square testing in a 2-inert cubic order
// ---------------------------------------------------------------------------

/// A degree-3 order in which 2 is inert, together with the digit set of the
/// 8 residues mod 2 (all 0/1 coordinate combinations).
#[derive(Clone, Debug)]
pub struct DyadicCubicContext {
    order: FieldRef,
    digit_set: Vec<OrderElement>,
}

impl DyadicCubicContext {
    /// Validates that the order has degree 3 and that 2 is inert (the
    /// minimal polynomial has no root mod 2, hence is irreducible there).
    pub fn new(order: &FieldRef) -> Result<Self, LocalError> {
        if order.degree() != 3 {
            return Err(LocalError::NotDegreeThree);
        }
        let two = BigInt::from(2);
        for x in 0..2i64 {
            let v = order.minpoly().eval_int(&BigInt::from(x)).mod_floor(&two);
            if v.is_zero() {
                return Err(LocalError::NotInertAtTwo);
            }
        }
        let mut digit_set = Vec::with_capacity(8);
        for bits in 0..8u8 {
            let coords = vec![
                BigInt::from((bits & 1) as i64),
                BigInt::from(((bits >> 1) & 1) as i64),
                BigInt::from(((bits >> 2) & 1) as i64),
            ];
            digit_set.push(OrderElement::new(order, coords)?);
        }
        Ok(DyadicCubicContext {
            order: std::sync::Arc::clone(order),
            digit_set,
        })
    }

    pub fn order(&self) -> &FieldRef {
        &self.order
    }

    /// The 8 residue representatives mod 2.
    pub fn digit_set(&self) -> &[OrderElement] {
        &self.digit_set
    }
}

/// 2-adic valuation in the inert order: the largest `k` with `2^k | x`,
/// which is the minimum of the coordinate valuations.
pub fn dyadic_valuation(x: &OrderElement, ctx: &DyadicCubicContext) -> Result<u64, LocalError> {
    if !same_field(x.field(), &ctx.order) {
        return Err(LocalError::Field(FieldError::FieldMismatch));
    }
    if x.is_zero() {
        return Err(LocalError::ZeroElement);
    }
    let mut v = u64::MAX;
    for c in x.coords() {
        if c.is_zero() {
            continue;
        }
        let mut cv = 0u64;
        let mut m = c.clone();
        while m.is_even() {
            m /= 2;
            cv += 1;
        }
        v = v.min(cv);
    }
    Ok(v)
}

/// Is `x` a square in the 2-adic completion of the inert order? Zero counts
/// as a square. An odd valuation rules it out; otherwise the unit part is a
/// square iff it is a square mod 8 (local square theorem in the unramified
/// case, threshold 2e + 1 = 3), decided by brute force over the 512
/// residues.
pub fn is_square_dyadic(x: &OrderElement, ctx: &DyadicCubicContext) -> Result<bool, LocalError> {
    if !same_field(x.field(), &ctx.order) {
        return Err(LocalError::Field(FieldError::FieldMismatch));
    }
    if x.is_zero() {
        return Ok(true);
    }
    let v = dyadic_valuation(x, ctx)?;
    if v % 2 == 1 {
        return Ok(false);
    }
    let div = BigInt::from(1u64) << v;
    let unit_coords: Vec<BigInt> = x.coords().iter().map(|c| c / &div).collect();
    let unit = OrderElement::new(&ctx.order, unit_coords)?;
    let eight = BigInt::from(8);
    for a in 0..8i64 {
        for b in 0..8i64 {
            for c in 0..8i64 {
                let s = OrderElement::from_i64(&ctx.order, &[a, b, c])?;
                let diff = s.square().try_sub(&unit)?;
                if diff.coords().iter().all(|t| t.mod_floor(&eight).is_zero()) {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// The unique digits `u_0, ..., u_{k-1}` from the digit set with
/// `x = sum u_i 2^i (mod 2^k)`.
pub fn dyadic_digits(
    x: &OrderElement,
    k: u32,
    ctx: &DyadicCubicContext,
) -> Result<Vec<OrderElement>, LocalError> {
    if !same_field(x.field(), &ctx.order) {
        return Err(LocalError::Field(FieldError::FieldMismatch));
    }
    let two = BigInt::from(2);
    let mut rest = x.clone();
    let mut out = Vec::with_capacity(k as usize);
    for _ in 0..k {
        let bits: Vec<BigInt> = rest.coords().iter().map(|c| c.mod_floor(&two)).collect();
        let digit = OrderElement::new(&ctx.order, bits)?;
        let diff = rest.try_sub(&digit)?;
        rest = OrderElement::new(
            &ctx.order,
            diff.coords().iter().map(|c| c / &two).collect(),
        )?;
        out.push(digit);
    }
    Ok(out)
}

/// Sum-of-three-squares criterion in the cyclic cubic order of discriminant
/// 49: a totally positive element is a sum of three squares iff its negative
/// is not a square in the 2-adic completion. Zero is trivially a sum of
/// squares; nonzero elements that are not totally positive never are.
pub fn three_squares_k49(alpha: &OrderElement) -> Result<bool, LocalError> {
    let ctx = DyadicCubicContext::new(alpha.field())?;
    // the criterion is specific to the discriminant-49 cyclic cubic order
    assert_eq!(
        alpha.field().minpoly().coeffs(),
        &[
            BigInt::from(-1),
            BigInt::from(-2),
            BigInt::from(1),
            BigInt::from(1)
        ],
        "three-squares criterion applies to the discriminant-49 cubic order"
    );
    if alpha.is_zero() {
        return Ok(true);
    }
    if !crate::numfield::is_totally_positive(alpha)? {
        return Ok(false);
    }
    Ok(!is_square_dyadic(&alpha.neg(), &ctx)?)
}
