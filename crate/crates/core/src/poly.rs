//! Integer polynomial arithmetic, Sturm sequences, and certified real root
//! isolation.
//!
//! Coefficients are stored constant-first with no trailing zeros; the zero
//! polynomial has an empty coefficient vector. Sign determinations at
//! rational points are made with homogenized integer evaluation, never with
//! floating point.

use crate::interval::RatInterval;
use crate::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// The monomial `T`.
    pub fn var() -> Self {
        IntPoly {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("leading coeff of zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn neg(&self) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of `f(p/q)` computed without forming fractions:
    /// evaluates `q^deg * f(p/q)` as an integer.
    pub fn sign_at(&self, x: &Rational) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let p = x.numer();
        let q = x.denom();
        // Horner on the homogenization: acc = sum c_i p^i q^(d-i).
        let d = self.deg();
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for i in (0..=d).rev() {
            acc = acc * p + &self.coeffs[i] * &qpow;
            qpow *= q;
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    /// Interval enclosure of `f` over `iv` by Horner evaluation.
    pub fn eval_interval(&self, iv: &RatInterval) -> RatInterval {
        let mut acc = RatInterval::point(Rational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc
                .mul(iv)
                .shift(&Rational::from_integer(c.clone()));
        }
        acc
    }

    /// `f(T + c)`.
    pub fn shift_var(&self, c: &BigInt) -> Self {
        // Horner: f(T + c) built by repeated multiply-by-(T + c) and add.
        let mut acc = IntPoly::zero();
        let linear = IntPoly::new(vec![c.clone(), BigInt::one()]);
        for coeff in self.coeffs.iter().rev() {
            acc = acc.mul(&linear).add(&IntPoly::constant(coeff.clone()));
        }
        acc
    }

    /// `(-1)^deg * f(-T)`: monic polynomial whose roots are the negated roots.
    pub fn negate_roots(&self) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let d = self.deg();
        let mut out = Vec::with_capacity(d + 1);
        for (i, c) in self.coeffs.iter().enumerate() {
            // (-1)^(d-i) c_i
            if (d - i) % 2 == 1 {
                out.push(-c);
            } else {
                out.push(c.clone());
            }
        }
        IntPoly::new(out)
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content, keeping the leading sign.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let c = self.content();
        if c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// Division with remainder by a monic divisor; exact over the integers.
    pub fn div_rem_monic(&self, g: &Self) -> (Self, Self) {
        assert!(g.is_monic(), "divisor must be monic");
        let dg = g.deg();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dg {
            return (IntPoly::zero(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dg];
        while rem.len() > dg {
            let lead = rem.last().unwrap().clone();
            let pos = rem.len() - 1 - dg;
            if !lead.is_zero() {
                quot[pos] = lead.clone();
                for (i, gc) in g.coeffs.iter().enumerate() {
                    let idx = pos + i;
                    let t = &lead * gc;
                    rem[idx] -= t;
                }
            }
            rem.pop();
        }
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    /// Pseudo-remainder computed by multiplying through with `|lc(g)|` at
    /// every elimination step, so the result is a positive multiple of the
    /// true remainder (sign-safe for Sturm sequences). No divisions.
    fn pseudo_rem_positive(&self, g: &Self) -> Self {
        let dg = g.deg();
        assert!(self.deg() >= dg);
        let glead = g.leading().clone();
        let glead_abs = glead.abs();
        let gsign: BigInt = if glead.is_negative() {
            BigInt::from(-1)
        } else {
            BigInt::one()
        };
        let mut rem = self.coeffs.clone();
        while rem.len() > dg {
            let lead = rem.last().unwrap().clone();
            if lead.is_zero() {
                rem.pop();
                continue;
            }
            // rem <- |lc(g)| * rem - sign(lc(g)) * lead * T^pos * g
            let pos = rem.len() - 1 - dg;
            for c in rem.iter_mut() {
                *c *= &glead_abs;
            }
            let factor = &gsign * &lead;
            for (i, gc) in g.coeffs.iter().enumerate() {
                let t = &factor * gc;
                rem[pos + i] -= t;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
        }
        IntPoly::new(rem)
    }

    /// Primitive gcd via a primitive pseudo-remainder sequence.
    pub fn gcd_poly(&self, other: &Self) -> Self {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.is_zero() {
                // normalize leading sign positive
                return if a.leading().is_negative() { a.neg() } else { a };
            }
            let r = a.pseudo_rem_positive(&b).primitive();
            a = b;
            b = r;
        }
    }

    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.deg() == 0 {
            return true;
        }
        self.gcd_poly(&self.derivative()).deg() == 0
    }

    /// `f / gcd(f, f')`, primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd_poly(&self.derivative());
        if g.deg() == 0 {
            let p = self.primitive();
            return if p.leading().is_negative() { p.neg() } else { p };
        }
        // gcd is primitive; divide the primitive part of f by it exactly.
        let f = self.primitive();
        let q = f.div_exact(&g);
        if q.leading().is_negative() {
            q.neg()
        } else {
            q
        }
    }

    /// Exact division when `g | f` over the rationals and both are integral.
    fn div_exact(&self, g: &Self) -> Self {
        let dg = g.deg();
        let mut rem: Vec<Rational> = self
            .coeffs
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let glead = Rational::from_integer(g.leading().clone());
        let mut quot = vec![Rational::zero(); self.coeffs.len() - dg];
        while rem.len() > dg {
            let lead = rem.last().unwrap().clone();
            let pos = rem.len() - 1 - dg;
            if !lead.is_zero() {
                let q = &lead / &glead;
                for (i, gc) in g.coeffs.iter().enumerate() {
                    let t = &q * Rational::from_integer(gc.clone());
                    rem[pos + i] -= t;
                }
                quot[pos] = q;
            }
            rem.pop();
        }
        assert!(rem.iter().all(|c| c.is_zero()), "division not exact");
        IntPoly::new(
            quot.into_iter()
                .map(|q| {
                    assert!(q.denom().is_one(), "non-integral exact quotient");
                    q.numer().clone()
                })
                .collect(),
        )
    }

    /// Cauchy bound: every complex root has absolute value < 1 + max|c_i/lc|.
    pub fn root_bound(&self) -> Rational {
        let lc = Rational::from_integer(self.leading().abs());
        let mut m = Rational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let v = Rational::from_integer(c.abs()) / &lc;
            if v > m {
                m = v;
            }
        }
        m + Rational::one()
    }

    /// Resultant of `f` and `g` via a Sylvester determinant over rationals.
    pub fn resultant(&self, g: &Self) -> Rational {
        if self.is_zero() || g.is_zero() {
            return Rational::zero();
        }
        let m = self.deg();
        let n = g.deg();
        if m == 0 {
            return Rational::from_integer(self.leading().clone()).pow(n as i32);
        }
        if n == 0 {
            return Rational::from_integer(g.leading().clone()).pow(m as i32);
        }
        let size = m + n;
        let mut mat = vec![vec![Rational::zero(); size]; size];
        for row in 0..n {
            for (i, c) in self.coeffs.iter().enumerate() {
                mat[row][row + (m - i)] = Rational::from_integer(c.clone());
            }
        }
        for row in 0..m {
            for (i, c) in g.coeffs.iter().enumerate() {
                mat[n + row][row + (n - i)] = Rational::from_integer(c.clone());
            }
        }
        det_rational(mat)
    }

    /// Discriminant `(-1)^(d(d-1)/2) res(f, f') / lc(f)`.
    pub fn discriminant(&self) -> Rational {
        let d = self.deg();
        if d == 0 {
            return Rational::one();
        }
        let res = self.resultant(&self.derivative());
        let sign = if (d * (d - 1) / 2) % 2 == 1 { -1 } else { 1 };
        Rational::from_integer(BigInt::from(sign)) * res
            / Rational::from_integer(self.leading().clone())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if i == 0 || !a.is_one() {
                write!(f, "{a}")?;
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            if i == 1 {
                write!(f, "T")?;
            } else if i > 1 {
                write!(f, "T^{i}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Determinant by fraction Gaussian elimination with partial pivoting.
pub fn det_rational(mut mat: Vec<Vec<Rational>>) -> Rational {
    let n = mat.len();
    let mut det = Rational::one();
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !mat[r][col].is_zero());
        let Some(p) = pivot_row else {
            return Rational::zero();
        };
        if p != col {
            mat.swap(p, col);
            det = -det;
        }
        let pivot = mat[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if mat[r][col].is_zero() {
                continue;
            }
            let factor = &mat[r][col] / &pivot;
            for c in col..n {
                let t = &factor * &mat[col][c];
                mat[r][c] -= t;
            }
        }
    }
    det
}

/// Sturm chain of a polynomial; counts distinct real roots in half-open
/// intervals `(a, b]` with non-root endpoints.
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(f: &IntPoly) -> Self {
        assert!(!f.is_zero(), "Sturm chain of the zero polynomial");
        let mut chain = vec![f.primitive()];
        if f.deg() >= 1 {
            chain.push(f.derivative().primitive());
            loop {
                let k = chain.len();
                let (a, b) = (&chain[k - 2], &chain[k - 1]);
                if b.is_zero() || a.deg() < b.deg() {
                    break;
                }
                let r = a.pseudo_rem_positive(b).primitive().neg();
                if r.is_zero() {
                    break;
                }
                chain.push(r);
            }
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last = 0;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    fn variations_at_neg_inf(&self) -> usize {
        self.variations_at_inf(-1)
    }

    fn variations_at_pos_inf(&self) -> usize {
        self.variations_at_inf(1)
    }

    fn variations_at_inf(&self, dir: i32) -> usize {
        let mut count = 0;
        let mut last = 0;
        for p in &self.chain {
            if p.is_zero() {
                continue;
            }
            let mut s = if p.leading().is_negative() { -1 } else { 1 };
            if dir < 0 && p.deg() % 2 == 1 {
                s = -s;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in `(a, b]`. Requires `f(a) != 0`.
    pub fn count_roots_in(&self, a: &Rational, b: &Rational) -> usize {
        debug_assert!(a <= b);
        self.variations_at(a) - self.variations_at(b)
    }

    /// Total number of distinct real roots.
    pub fn count_real_roots(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }
}

/// Isolates all distinct real roots of `f` in pairwise disjoint closed
/// rational intervals with non-root endpoints, sorted increasingly.
pub fn isolate_real_roots(f: &IntPoly) -> Vec<RatInterval> {
    assert!(!f.is_zero());
    if f.deg() == 0 {
        return vec![];
    }
    let g = f.squarefree_part();
    let chain = SturmChain::new(&g);
    let total = chain.count_real_roots();
    if total == 0 {
        return vec![];
    }
    let bound = g.root_bound();
    // Endpoints +-bound are non-roots by strictness of the Cauchy bound.
    let mut out = Vec::with_capacity(total);
    let mut stack = vec![(-bound.clone(), bound.clone(), total)];
    while let Some((lo, hi, count)) = stack.pop() {
        if count == 0 {
            continue;
        }
        if count == 1 {
            out.push(RatInterval::new(lo, hi));
            continue;
        }
        let mut mid = (&lo + &hi) / crate::rational::rat_int(2);
        // Nudge off a root if the midpoint hits one exactly.
        if g.sign_at(&mid) == 0 {
            let quarter = (&hi - &lo) / crate::rational::rat_int(4);
            mid = &mid + &quarter / crate::rational::rat_int(2);
            while g.sign_at(&mid) == 0 {
                mid = (&lo + &mid) / crate::rational::rat_int(2);
            }
        }
        let left = chain.count_roots_in(&lo, &mid);
        stack.push((lo, mid.clone(), left));
        stack.push((mid, hi, count - left));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    // Bisection can leave adjacent intervals sharing an endpoint; refine
    // until they are pairwise disjoint (roots are distinct).
    for i in 1..out.len() {
        while out[i - 1].hi >= out[i].lo {
            out[i - 1] = refine_root_interval(&g, &out[i - 1]);
            out[i] = refine_root_interval(&g, &out[i]);
        }
    }
    out
}

/// Halves the width of an isolating interval for a root of `f`, keeping the
/// root strictly inside and the endpoints off the root set.
pub fn refine_root_interval(f: &IntPoly, iv: &RatInterval) -> RatInterval {
    let four = crate::rational::rat_int(4);
    let mid = iv.midpoint();
    let sm = f.sign_at(&mid);
    if sm == 0 {
        // The root is exactly the midpoint; shrink symmetrically around it.
        let w = iv.width() / &four;
        return RatInterval::new(&mid - &w, &mid + &w);
    }
    let slo = f.sign_at(&iv.lo);
    debug_assert!(slo != 0);
    if slo != sm {
        RatInterval::new(iv.lo.clone(), mid)
    } else {
        RatInterval::new(mid, iv.hi.clone())
    }
}
