//! Exhaustive enumeration of totally real algebraic integers of bounded
//! degree and house, and the small-house cosine family that classifies all
//! totally real algebraic integers whose square is totally below a bound
//! less than 4.
//!
//! Enumeration walks coefficients top-down. A partial choice of the leading
//! coefficients determines a Hasse derivative of every completion; real-
//! rootedness of that derivative inside the search interval is necessary, so
//! branches are cut early and the admissible range for the next coefficient
//! is read off from sign conditions at the derivative's critical points.
//! Every emitted polynomial passes an exact Sturm certificate, so the
//! pruning only affects speed, never the output set.

use crate::poly::{isolate_real_roots, refine_root_interval, IntPoly, SturmChain};
use crate::rational::{rat_int, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomial must be monic of degree >= 1")]
    NotMonic,
    #[error("house bound must be positive")]
    NonPositiveBound,
    #[error("bound must be < 4 for the cosine family to be finite")]
    BoundTooLarge,
}

/// Monic integer polynomial of degree >= 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonicIntPoly(IntPoly);

impl MonicIntPoly {
    pub fn new(p: IntPoly) -> Result<Self, EnumError> {
        if p.is_zero() || !p.is_monic() || p.deg() < 1 {
            return Err(EnumError::NotMonic);
        }
        Ok(MonicIntPoly(p))
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self, EnumError> {
        Self::new(IntPoly::from_i64(coeffs))
    }

    pub fn poly(&self) -> &IntPoly {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.deg()
    }
}

impl std::fmt::Display for MonicIntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug)]
pub struct EnumerationQuery {
    pub degree_max: usize,
    pub house_bound: Rational,
    pub require_irreducible: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    /// Verified irreducible (always possible for degree <= 3).
    Proved,
    /// A rational root was found.
    Reducible,
    /// No rational root, degree >= 4: not verified further.
    Unverified,
}

#[derive(Clone, Debug)]
pub struct TotallyRealPoly {
    pub poly: MonicIntPoly,
    pub irreducibility: Irreducibility,
}

/// `true` iff all complex roots of `f` are real (Sturm count over the Cauchy
/// bound interval equals the degree). Requires `f` squarefree.
pub fn all_roots_real(f: &MonicIntPoly) -> Result<bool, EnumError> {
    let p = f.poly();
    if !p.is_squarefree() {
        return Err(EnumError::NotSquarefree);
    }
    Ok(SturmChain::new(p).count_real_roots() == p.deg())
}

/// Number of distinct real roots in the closed interval `[lo, hi]`.
fn roots_in_closed(chain: &SturmChain, f: &IntPoly, lo: &Rational, hi: &Rational) -> usize {
    let at_lo = if f.sign_at(lo) == 0 { 1 } else { 0 };
    chain.count_roots_in(lo, hi) + at_lo
}

/// Does the squarefree `f` have all roots real and inside `[-h, h]`?
fn real_rooted_within(f: &IntPoly, h: &Rational) -> bool {
    let d = f.deg();
    if d == 0 {
        return true;
    }
    let chain = SturmChain::new(f);
    if chain.count_real_roots() != d {
        return false;
    }
    roots_in_closed(&chain, f, &-h.clone(), h) == d
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut out = BigInt::one();
    for i in 0..k.min(n - k) {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    if k > n {
        BigInt::zero()
    } else {
        out
    }
}

/// Northcott box bound: `|c_{d-k}| <= C(d,k) * H^k` for a monic degree-`d`
/// polynomial with all roots of absolute value at most `H`.
fn box_bound(d: usize, k: usize, h: &Rational) -> Rational {
    let mut hp = Rational::one();
    for _ in 0..k {
        hp *= h;
    }
    Rational::from_integer(binomial(d, k)) * hp
}

/// Hasse derivative polynomial determined by the already-chosen top
/// coefficients: `g_k = sum_{j=d-k}^{d} C(j, d-k) c_j T^(j-(d-k))`, where
/// `chosen[t]` is `c_{d-t}` and `chosen[0] = 1`.
fn partial_derivative_poly(d: usize, chosen: &[BigInt], k: usize) -> IntPoly {
    let m = d - k;
    let mut coeffs = vec![BigInt::zero(); k + 1];
    for (t, c) in chosen.iter().enumerate() {
        let j = d - t; // degree of this term in f
        if j < m {
            continue;
        }
        coeffs[j - m] = binomial(j, m) * c;
    }
    IntPoly::new(coeffs)
}

/// Integer range (lo..=hi) of the next coefficient consistent with the sign
/// conditions that make `A + c` real-rooted inside `[-h, h]`, where the
/// critical points of `A + c` are the roots of the current level polynomial.
/// Bounds are relaxed outward, so no valid coefficient is ever excluded.
fn next_coeff_range(
    a: &IntPoly,
    level_poly: &IntPoly,
    root_ivs: &[crate::interval::RatInterval],
    h: &Rational,
    box_cap: &Rational,
    next_deg_parity_sign: i32, // (-1)^(k+1), sign of A + c at -infinity side
) -> Option<(BigInt, BigInt)> {
    let mut lower: Rational = -box_cap.clone();
    let mut upper: Rational = box_cap.clone();
    let k = root_ivs.len();

    let mut apply = |sign: i32, value_lo: Rational, value_hi: Rational| {
        // condition: sign * (value + c) >= 0
        if sign > 0 {
            // c >= -value; weakest consistent bound uses the upper enclosure
            let cand = -value_hi;
            if cand > lower {
                lower = cand;
            }
        } else {
            let cand = -value_lo;
            if cand < upper {
                upper = cand;
            }
        }
    };

    // interior critical points r_1 < ... < r_k: signs alternate
    // (+ at r_k, - at r_{k-1}, ...) because A + c is positive at +infinity.
    for (i, iv) in root_ivs.iter().enumerate() {
        let mut iv = iv.clone();
        // a few refinements tighten the admissible range cheaply
        for _ in 0..2 {
            iv = refine_root_interval(level_poly, &iv);
        }
        let enc = a.eval_interval(&iv);
        let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
        apply(sign, enc.lo, enc.hi);
    }
    // endpoints: value at h (sign +), value at -h (sign (-1)^(k+1))
    let vh = a.eval_rat(h);
    apply(1, vh.clone(), vh);
    let vmh = a.eval_rat(&-h.clone());
    apply(next_deg_parity_sign, vmh.clone(), vmh);

    if lower > upper {
        return None;
    }
    Some((lower.ceil().to_integer(), upper.floor().to_integer()))
}

fn classify_irreducibility(f: &IntPoly) -> Irreducibility {
    let d = f.deg();
    if d == 1 {
        return Irreducibility::Proved;
    }
    if has_integer_root(f) {
        return Irreducibility::Reducible;
    }
    if d <= 3 {
        Irreducibility::Proved
    } else {
        Irreducibility::Unverified
    }
}

fn has_integer_root(f: &IntPoly) -> bool {
    let c0 = f.coeff(0);
    if c0.is_zero() {
        return true;
    }
    let mut dv = BigInt::one();
    let abs = c0.abs();
    while &dv * &dv <= abs {
        if (&abs % &dv).is_zero() {
            for cand in [dv.clone(), &abs / &dv] {
                if f.eval_int(&cand).is_zero() || f.eval_int(&(-&cand)).is_zero() {
                    return true;
                }
            }
        }
        dv += 1;
    }
    false
}

/// Complete, duplicate-free list of squarefree monic integer polynomials of
/// degree exactly `d` whose roots are all real and of absolute value at most
/// `house_bound`, sorted by coefficients.
pub fn enum_totally_real_degree(d: usize, house_bound: &Rational) -> Vec<MonicIntPoly> {
    assert!(d >= 1);
    let h = house_bound;
    if d == 1 {
        // T - n with |n| <= H
        let lo = (-h.clone()).ceil().to_integer();
        let hi = h.floor().to_integer();
        let mut out = Vec::new();
        let mut n = lo;
        while n <= hi {
            out.push(MonicIntPoly(IntPoly::new(vec![-&n, BigInt::one()])));
            n += 1;
        }
        return out;
    }

    // top coefficient c_{d-1}: root of d*T + c_{d-1} must lie in [-h, h]
    let c1_cap = (Rational::from_integer(BigInt::from(d)) * h)
        .floor()
        .to_integer();
    let mut tops = Vec::new();
    let mut c = -&c1_cap;
    while c <= c1_cap {
        tops.push(c.clone());
        c += 1;
    }

    let mut polys: Vec<IntPoly> = tops
        .into_par_iter()
        .flat_map_iter(|c1| {
            let mut found = Vec::new();
            descend(d, &mut vec![BigInt::one(), c1], h, &mut found);
            found.into_iter()
        })
        .collect();
    polys.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
    polys.dedup();
    polys.into_iter().map(MonicIntPoly).collect()
}

fn descend(d: usize, chosen: &mut Vec<BigInt>, h: &Rational, out: &mut Vec<IntPoly>) {
    let k = chosen.len() - 1; // current level polynomial has degree k
    let g = partial_derivative_poly(d, chosen, k);
    if k == d {
        // complete polynomial: exact certificate
        if g.is_squarefree() && real_rooted_within(&g, h) {
            out.push(g);
        }
        return;
    }
    // prune: the level polynomial must be squarefree, real-rooted, within
    // range (a squarefree real-rooted completion forces this)
    if !g.is_squarefree() || !real_rooted_within(&g, h) {
        return;
    }
    let root_ivs = isolate_real_roots(&g);
    debug_assert_eq!(root_ivs.len(), k);
    // known part of the next level polynomial (constant term to be chosen)
    let a = partial_derivative_poly(d, &{
        let mut ext = chosen.clone();
        ext.push(BigInt::zero());
        ext
    }, k + 1);
    let parity_sign = if (k + 1) % 2 == 0 { 1 } else { -1 };
    let cap = box_bound(d, k + 1, h);
    let Some((lo, hi)) = next_coeff_range(&a, &g, &root_ivs, h, &cap, parity_sign) else {
        return;
    };
    let mut c = lo;
    while c <= hi {
        chosen.push(c.clone());
        descend(d, chosen, h, out);
        chosen.pop();
        c += 1;
    }
}

/// All totally real candidates of degree up to `degree_max` and house at
/// most `house_bound` (nonstrict), with irreducibility classification.
pub fn enum_totally_real(q: &EnumerationQuery) -> Result<Vec<TotallyRealPoly>, EnumError> {
    if !q.house_bound.is_positive() {
        return Err(EnumError::NonPositiveBound);
    }
    let mut out = Vec::new();
    for d in 1..=q.degree_max {
        for p in enum_totally_real_degree(d, &q.house_bound) {
            let irr = classify_irreducibility(p.poly());
            if q.require_irreducible && irr == Irreducibility::Reducible {
                continue;
            }
            out.push(TotallyRealPoly {
                poly: p,
                irreducibility: irr,
            });
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// The cosine family: minimal polynomials of 2cos(2pi/n)
// ---------------------------------------------------------------------------

/// Minimal polynomials of `2cos(2pi/k)` for `k = 1..=n`, computed by peeling
/// divisors off `p_k(y) - 2` (where `p_k(2cos t) = 2cos(kt)`).
pub fn cos_minimal_polys(n: u32) -> Vec<IntPoly> {
    let mut psi: Vec<IntPoly> = Vec::with_capacity(n as usize);
    // Chebyshev-like: p_0 = 2, p_1 = y, p_{k+1} = y p_k - p_{k-1}
    let y = IntPoly::var();
    let mut p_prev = IntPoly::constant(BigInt::from(2));
    let mut p_cur = y.clone();
    for k in 1..=n {
        let q_k = p_cur.sub(&IntPoly::constant(BigInt::from(2)));
        let mut m = q_k.squarefree_part();
        for (idx, prev) in psi.iter().enumerate() {
            let d = idx as u32 + 1;
            if k % d == 0 {
                let (quot, rem) = m.div_rem_monic(prev);
                assert!(rem.is_zero(), "cosine minimal polynomial recursion");
                m = quot;
            }
        }
        psi.push(m);
        let p_next = y.mul(&p_cur).sub(&p_prev);
        p_prev = p_cur;
        p_cur = p_next;
    }
    psi
}

/// One member of the small-square classification: for `n`, the square value
/// is `2 + 2cos(2pi/n)` and a representative root is `beta = 2cos(pi/n)`
/// with `beta^2` equal to that value.
#[derive(Clone, Debug)]
pub struct KroneckerEntry {
    pub n: u32,
    /// Minimal polynomial of `2cos(2pi/n)`.
    pub cos_minpoly: MonicIntPoly,
    /// Minimal polynomial of the representative `beta = 2cos(pi/n)`.
    pub beta_minpoly: MonicIntPoly,
    /// Minimal polynomial of the square `2 + 2cos(2pi/n)`.
    pub square_minpoly: MonicIntPoly,
}

/// All `n` with `2 + 2cos(2pi/n) < bound`, exactly. By Kronecker's theorem
/// this classifies, up to conjugation and sign, every totally real algebraic
/// integer `beta` with `beta^2` totally below `bound` (`beta = 2cos(pi/n)`).
/// The value for `n = 1` is 4, which never satisfies a bound below 4.
pub fn kronecker_family(bound: &Rational) -> Result<Vec<KroneckerEntry>, EnumError> {
    if bound >= &rat_int(4) {
        return Err(EnumError::BoundTooLarge);
    }
    let mut out = Vec::new();
    let mut n = 1u32;
    loop {
        // need psi up to 2n for the beta representative
        let psis = cos_minimal_polys(2 * n);
        let psi_n = &psis[(n - 1) as usize];
        // minimal polynomial of 2 + 2cos(2pi/n): shift roots by +2
        let square = psi_n.shift_var(&BigInt::from(-2));
        // largest root of `square` is 2 + 2cos(2pi/n); include n iff < bound
        let chain = SturmChain::new(&square);
        let b = {
            let rb = square.root_bound();
            if &rb > bound {
                rb
            } else {
                bound + Rational::one()
            }
        };
        let ge_bound = roots_in_closed(&chain, &square, bound, &b);
        let value_below = ge_bound == 0;
        if value_below {
            out.push(KroneckerEntry {
                n,
                cos_minpoly: MonicIntPoly(psi_n.clone()),
                beta_minpoly: MonicIntPoly(psis[(2 * n - 1) as usize].clone()),
                square_minpoly: MonicIntPoly(square),
            });
        } else if n >= 2 {
            // values increase monotonically to 4 for n >= 2
            break;
        }
        n += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn mp(coeffs: &[i64]) -> MonicIntPoly {
        MonicIntPoly::from_i64(coeffs).unwrap()
    }

    #[test]
    fn all_roots_real_cases() {
        assert!(all_roots_real(&mp(&[-1, -2, 1, 1])).unwrap());
        assert!(!all_roots_real(&mp(&[1, 0, 1])).unwrap());
        assert!(all_roots_real(&mp(&[-1, -4, 0, 1])).unwrap());
        let sq = MonicIntPoly::new(IntPoly::from_i64(&[1, 2, 1])).unwrap();
        assert_eq!(all_roots_real(&sq).unwrap_err(), EnumError::NotSquarefree);
    }

    #[test]
    fn degree_one_enumeration() {
        let out = enum_totally_real_degree(1, &rat_int(2));
        assert_eq!(out.len(), 5);
        for n in [-2i64, -1, 0, 1, 2] {
            assert!(out.iter().any(|p| p.poly().coeff(0) == BigInt::from(-n)));
        }
    }

    #[test]
    fn degree_two_contains_golden() {
        let out = enum_totally_real_degree(2, &rat_int(2));
        let golden = IntPoly::from_i64(&[-1, -1, 1]);
        assert!(out.iter().any(|p| p.poly() == &golden));
    }

    #[test]
    fn degree_three_contains_k49_poly() {
        let out = enum_totally_real_degree(3, &rat(181, 100));
        let k49 = IntPoly::from_i64(&[-1, -2, 1, 1]);
        assert!(out.iter().any(|p| p.poly() == &k49));
        // negated-roots polynomial also present
        let neg = k49.negate_roots();
        assert!(out.iter().any(|p| p.poly() == &neg));
    }

    /// Brute-force oracle: enumerate the whole coefficient box and filter.
    fn brute_force_degree(d: usize, h: &Rational) -> Vec<IntPoly> {
        fn rec(d: usize, coeffs: &mut Vec<BigInt>, h: &Rational, out: &mut Vec<IntPoly>) {
            if coeffs.len() == d {
                let mut full = coeffs.clone();
                full.push(BigInt::one());
                let f = IntPoly::new(full);
                if f.deg() == d && f.is_squarefree() && real_rooted_within(&f, h) {
                    out.push(f);
                }
                return;
            }
            let k = d - coeffs.len(); // choosing c_{d-k}... index coeffs[i] = c_i
            let cap = box_bound(d, k, h).floor().to_integer();
            let mut c = -&cap;
            while c <= cap {
                coeffs.push(c.clone());
                rec(d, coeffs, h, out);
                coeffs.pop();
                c += 1;
            }
        }
        let mut out = Vec::new();
        rec(d, &mut Vec::new(), h, &mut out);
        out.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
        out
    }

    #[test]
    fn matches_brute_force_oracle() {
        for (d, h) in [(2usize, rat_int(2)), (2, rat(3, 2)), (3, rat(3, 2))] {
            let fast: Vec<IntPoly> = enum_totally_real_degree(d, &h)
                .into_iter()
                .map(|p| p.0)
                .collect();
            let slow = brute_force_degree(d, &h);
            assert_eq!(fast, slow, "degree {d} bound {h}");
        }
    }

    #[test]
    fn outputs_verify_and_monotone() {
        let small = enum_totally_real(&EnumerationQuery {
            degree_max: 3,
            house_bound: rat(3, 2),
            require_irreducible: false,
        })
        .unwrap();
        for p in &small {
            assert!(all_roots_real(&p.poly).unwrap());
            assert!(real_rooted_within(p.poly.poly(), &rat(3, 2)));
        }
        let large = enum_totally_real(&EnumerationQuery {
            degree_max: 3,
            house_bound: rat_int(2),
            require_irreducible: false,
        })
        .unwrap();
        let large_set: std::collections::HashSet<_> =
            large.iter().map(|p| p.poly.poly().clone()).collect();
        for p in &small {
            assert!(large_set.contains(p.poly.poly()), "monotonicity violated");
        }
        // sampled boundary polynomials outside the box fail the house check
        let h = rat(3, 2);
        for d in [2usize, 3] {
            for k in 1..=d {
                let cap = box_bound(d, k, &h).floor().to_integer() + BigInt::one();
                let mut coeffs = vec![BigInt::zero(); d + 1];
                coeffs[d] = BigInt::one();
                coeffs[d - k] = cap;
                let f = IntPoly::new(coeffs);
                assert!(
                    !f.is_squarefree() || !real_rooted_within(&f, &h),
                    "polynomial outside the box satisfied the bound"
                );
            }
        }
    }

    #[test]
    fn irreducibility_classification() {
        let out = enum_totally_real(&EnumerationQuery {
            degree_max: 2,
            house_bound: rat_int(2),
            require_irreducible: true,
        })
        .unwrap();
        // (T-1)(T+1) = T^2 - 1 must be filtered out
        assert!(!out
            .iter()
            .any(|p| p.poly.poly() == &IntPoly::from_i64(&[-1, 0, 1])));
        // golden ratio polynomial is proved irreducible
        let g = out
            .iter()
            .find(|p| p.poly.poly() == &IntPoly::from_i64(&[-1, -1, 1]))
            .unwrap();
        assert_eq!(g.irreducibility, Irreducibility::Proved);
    }

    #[test]
    fn cos_polys_match_known_values() {
        let psis = cos_minimal_polys(21);
        // psi_1 = T - 2, psi_2 = T + 2
        assert_eq!(psis[0], IntPoly::from_i64(&[-2, 1]));
        assert_eq!(psis[1], IntPoly::from_i64(&[2, 1]));
        // psi_7 = minimal polynomial of 2cos(2pi/7) = T^3 + T^2 - 2T - 1
        assert_eq!(psis[6], IntPoly::from_i64(&[-1, -2, 1, 1]));
        // psi_13 = T^6 + T^5 - 5T^4 - 4T^3 + 6T^2 + 3T - 1
        assert_eq!(psis[12], IntPoly::from_i64(&[-1, 3, 6, -4, -5, 1, 1]));
        // psi_21 = T^6 - T^5 - 6T^4 + 6T^3 + 8T^2 - 8T + 1
        assert_eq!(psis[20], IntPoly::from_i64(&[1, -8, 8, 6, -6, -1, 1]));
    }

    #[test]
    fn kronecker_family_bounds() {
        // bound 232/71: n = 2..7
        let fam = kronecker_family(&rat(232, 71)).unwrap();
        let ns: Vec<u32> = fam.iter().map(|e| e.n).collect();
        assert_eq!(ns, vec![2, 3, 4, 5, 6, 7]);
        // squares: 0, 1, 2, (3+sqrt5)/2, 3, conjugate class of omega^2
        assert_eq!(fam[0].square_minpoly.poly(), &IntPoly::from_i64(&[0, 1]));
        assert_eq!(fam[1].square_minpoly.poly(), &IntPoly::from_i64(&[-1, 1]));
        assert_eq!(fam[2].square_minpoly.poly(), &IntPoly::from_i64(&[-2, 1]));
        assert_eq!(
            fam[3].square_minpoly.poly(),
            &IntPoly::from_i64(&[1, -3, 1])
        );
        assert_eq!(fam[4].square_minpoly.poly(), &IntPoly::from_i64(&[-3, 1]));
        // beta representatives square to the square values: spot check n=4
        assert_eq!(fam[2].beta_minpoly.poly(), &IntPoly::from_i64(&[-2, 0, 1]));
        // bound 1/2: only n = 2 (square 0)
        let fam = kronecker_family(&rat(1, 2)).unwrap();
        assert_eq!(fam.len(), 1);
        assert_eq!(fam[0].n, 2);
        // bound 5/2: n = 2, 3, 4 (squares 0, 1, 2)
        let fam = kronecker_family(&rat(5, 2)).unwrap();
        let ns: Vec<u32> = fam.iter().map(|e| e.n).collect();
        assert_eq!(ns, vec![2, 3, 4]);
        // boundary: strict comparison excludes an exact hit
        let fam = kronecker_family(&rat_int(3)).unwrap();
        let ns: Vec<u32> = fam.iter().map(|e| e.n).collect();
        assert_eq!(ns, vec![2, 3, 4, 5], "value 3 at n=6 must be excluded");
        assert_eq!(
            kronecker_family(&rat_int(4)).unwrap_err(),
            EnumError::BoundTooLarge
        );
    }

    #[test]
    fn kronecker_square_of_omega_class() {
        // the n=7 square is the conjugacy class of omega^2: verify via the
        // characteristic polynomial of omega^2 in K49
        let fam = kronecker_family(&rat(232, 71)).unwrap();
        let k49 = crate::numfield::make_field_power_basis(IntPoly::from_i64(&[-1, -2, 1, 1]))
            .unwrap();
        let omega = crate::numfield::OrderElement::from_i64(&k49, &[0, 1, 0]).unwrap();
        let cp = crate::numfield::char_poly(&omega.square());
        assert_eq!(fam[5].square_minpoly.poly(), &cp);
    }

    #[test]
    fn kronecker_members_inside_enumeration() {
        // every beta representative for bound 232/71 appears in the direct
        // enumeration with house sqrt(232/71)
        let bound = rat(232, 71);
        let fam = kronecker_family(&bound).unwrap();
        let h = crate::rational::sqrt_upper(&bound);
        for e in &fam {
            let d = e.beta_minpoly.degree();
            let list = enum_totally_real_degree(d, &h);
            assert!(
                list.iter().any(|p| p.poly() == e.beta_minpoly.poly()),
                "beta for n={} missing from enumeration",
                e.n
            );
        }
    }
}
