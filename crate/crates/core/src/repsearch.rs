//! Certificate-grade decision of `a in Q(O)` for positive definite forms:
//! the rational trace-form Gram matrix, exact LDL^T, lattice-point
//! enumeration at a fixed trace target, and exact witness filtering. A
//! completed enumeration is a proof: every solution of `Q(x) = a` has
//! `trace(Q(x)) = trace(a)`, and the enumeration visits every integer vector
//! attaining that trace value.
//!
//! A fast nested-loop census over the rational integers is kept fully
//! independent of the trace machinery and doubles as its oracle in tests.

use crate::numfield::{
    self, same_field, FieldError, FieldRef, OrderElement,
};
use crate::qform::{self, QFormError, QuadraticForm};
use crate::rational::{rational_sqrt_exact, sqrt_upper, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;
use std::ops::ControlFlow;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RepError {
    #[error("form is not positive definite")]
    NotPositiveDefinite,
    #[error("operation requires a diagonal form")]
    NotDiagonal,
    #[error("target is neither zero nor totally positive")]
    TargetNotTotallyPositive,
    #[error("enumeration target must be nonnegative")]
    NegativeTarget,
    #[error("operation requires rational-integer coefficients")]
    NotRationalBase,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Form(#[from] QFormError),
}

/// Exact LDL^T decomposition of a symmetric rational matrix with positive
/// pivots: `G = L D L^T` with `L` unit lower triangular.
pub fn ldlt(g: &[Vec<Rational>]) -> Result<(Vec<Vec<Rational>>, Vec<Rational>), RepError> {
    let n = g.len();
    let mut l = vec![vec![Rational::zero(); n]; n];
    let mut d = vec![Rational::zero(); n];
    for j in 0..n {
        let mut dj = g[j][j].clone();
        for k in 0..j {
            dj -= &l[j][k] * &l[j][k] * &d[k];
        }
        if !dj.is_positive() {
            return Err(RepError::NotPositiveDefinite);
        }
        l[j][j] = Rational::one();
        for i in j + 1..n {
            let mut v = g[i][j].clone();
            for k in 0..j {
                v -= &l[i][k] * &l[j][k] * &d[k];
            }
            l[i][j] = v / &dj;
        }
        d[j] = dj;
    }
    Ok((l, d))
}

/// The rational Gram matrix of `(v, w) -> trace(b_Q(v, w))` on the
/// coordinate lattice `Z^(n*d)`, together with its LDL^T decomposition.
/// Index `(variable i, basis element j)` maps to the flat index `i*d + j`.
pub struct TraceFormGram {
    gram: Vec<Vec<Rational>>,
    l: Vec<Vec<Rational>>,
    d: Vec<Rational>,
    field: FieldRef,
    form: QuadraticForm,
}

impl TraceFormGram {
    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn form(&self) -> &QuadraticForm {
        &self.form
    }

    /// Assembles the order-element vector for integer coordinates `v`
    /// through the index map.
    pub fn assemble(&self, v: &[BigInt]) -> Vec<OrderElement> {
        let d = self.field.degree();
        let n = self.form.rank();
        (0..n)
            .map(|i| {
                OrderElement::new(&self.field, v[i * d..(i + 1) * d].to_vec())
                    .expect("coordinate slice has length d")
            })
            .collect()
    }
}

/// Builds the trace-form Gram matrix of a positive definite form:
/// `gram[(i,j),(k,l)] = trace(b_j * b_l * b_Q(e_i, e_k))`.
pub fn trace_gram(q: &QuadraticForm) -> Result<TraceFormGram, RepError> {
    if !qform::is_positive_definite(q)? {
        return Err(RepError::NotPositiveDefinite);
    }
    let field = q.field().clone();
    let deg = field.degree();
    let n = q.rank();
    let m = n * deg;
    // b_Q(e_i, e_k): c_ik for i != k, 2 c_ii on the diagonal
    let two = BigInt::from(2);
    let mut bq = vec![vec![OrderElement::zero(&field); n]; n];
    for i in 0..n {
        for k in i..n {
            let v = if i == k {
                q.coeff(i, i).scale(&two)
            } else {
                q.coeff(i, k).clone()
            };
            bq[i][k] = v.clone();
            bq[k][i] = v;
        }
    }
    // basis products b_j * b_l
    let basis_elems: Vec<OrderElement> = (0..deg)
        .map(|j| {
            let mut coords = vec![BigInt::zero(); deg];
            coords[j] = BigInt::one();
            OrderElement::new(&field, coords).unwrap()
        })
        .collect();
    let mut gram = vec![vec![Rational::zero(); m]; m];
    for i in 0..n {
        for k in 0..n {
            if bq[i][k].is_zero() {
                continue;
            }
            for j in 0..deg {
                for l in j..deg {
                    let prod = basis_elems[j]
                        .try_mul(&basis_elems[l])?
                        .try_mul(&bq[i][k])?;
                    let t = numfield::trace(&prod);
                    gram[i * deg + j][k * deg + l] = t.clone();
                    gram[i * deg + l][k * deg + j] = t;
                }
            }
        }
    }
    let (l, d) = ldlt(&gram)?;
    Ok(TraceFormGram {
        gram,
        l,
        d,
        field,
        form: q.clone(),
    })
}

/// Outcome of an enumeration run.
#[derive(Clone, Copy, Debug)]
pub struct EnumOutcome {
    /// The search space was covered completely (no budget abort, no
    /// caller-requested stop).
    pub completed: bool,
    pub nodes: u64,
}

/// Largest integer `<= -c + sqrt(r)` (requires `r >= 0`).
fn floor_shifted_sqrt(c: &Rational, r: &Rational) -> BigInt {
    let mut cand = ((-c + sqrt_upper(r)).floor()).to_integer();
    // exact predicate: cand <= -c + sqrt(r)  <=>  cand + c <= sqrt(r)
    loop {
        let s = Rational::from_integer(cand.clone()) + c;
        let ok = !s.is_positive() || &(&s * &s) <= r;
        if ok {
            return cand;
        }
        cand -= 1;
    }
}

/// Smallest integer `>= -c - sqrt(r)` (requires `r >= 0`).
fn ceil_shifted_sqrt(c: &Rational, r: &Rational) -> BigInt {
    let mut cand = ((-c - sqrt_upper(r)).ceil()).to_integer();
    // exact predicate: cand >= -c - sqrt(r)  <=>  cand + c >= -sqrt(r)
    loop {
        let s = Rational::from_integer(cand.clone()) + c;
        let ok = !s.is_negative() || &(&s * &s) <= r;
        if ok {
            return cand;
        }
        cand += 1;
    }
}

/// Visits every integer vector `v` with `(1/2) v^T G v = t`. Candidates at
/// each level are walked from the interval center outward, so witnesses are
/// reached early in first-witness searches; completeness is unaffected. The
/// visitor may stop the run. Returns the outcome; `completed` is false when
/// stopped or out of budget.
pub fn enumerate_value_visit(
    g: &TraceFormGram,
    t: &Rational,
    node_cap: Option<u64>,
    mut visit: impl FnMut(&[BigInt]) -> ControlFlow<()>,
) -> Result<EnumOutcome, RepError> {
    if t.is_negative() {
        return Err(RepError::NegativeTarget);
    }
    let m = g.dim();
    let two_t = t * Rational::from_integer(2.into());
    let mut v = vec![BigInt::zero(); m];
    // sums[k][j] = sum_{i > k} L[i][j] v_i for j <= k, maintained on descent
    let mut sums = vec![vec![Rational::zero(); m]; m + 1];
    let mut nodes = 0u64;

    struct Ctx<'a> {
        g: &'a TraceFormGram,
        node_cap: Option<u64>,
    }

    enum Walk {
        Done,
        Stopped,
        Budget,
    }

    // Budget predicate at level k: D_k (x + c)^2 <= R, exact.
    fn fits(dk: &Rational, x: &BigInt, c: &Rational, budget: &Rational) -> Option<Rational> {
        let w = Rational::from_integer(x.clone()) + c;
        let used = dk * &w * &w;
        if &used <= budget {
            Some(budget - used)
        } else {
            None
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        ctx: &Ctx,
        k: usize,
        budget: &Rational,
        v: &mut Vec<BigInt>,
        sums: &mut Vec<Vec<Rational>>,
        nodes: &mut u64,
        visit: &mut dyn FnMut(&[BigInt]) -> ControlFlow<()>,
    ) -> Walk {
        let dk = &ctx.g.d[k];
        let c = sums[k + 1][k].clone();
        if k == 0 {
            // exact bottom level: D_0 (v_0 + c)^2 = budget
            let r = budget / dk;
            let Some(s) = rational_sqrt_exact(&r) else {
                return Walk::Done;
            };
            let mut sols = vec![-&c + &s];
            if !s.is_zero() {
                sols.push(-&c - &s);
            }
            for x in sols {
                *nodes += 1;
                if let Some(cap) = ctx.node_cap {
                    if *nodes > cap {
                        return Walk::Budget;
                    }
                }
                if x.denom().is_one() {
                    v[0] = x.numer().clone();
                    if let ControlFlow::Break(()) = visit(v) {
                        return Walk::Stopped;
                    }
                }
            }
            return Walk::Done;
        }

        let mut try_x = |x: &BigInt,
                         v: &mut Vec<BigInt>,
                         sums: &mut Vec<Vec<Rational>>,
                         nodes: &mut u64,
                         visit: &mut dyn FnMut(&[BigInt]) -> ControlFlow<()>|
         -> Option<Walk> {
            *nodes += 1;
            if let Some(cap) = ctx.node_cap {
                if *nodes > cap {
                    return Some(Walk::Budget);
                }
            }
            let Some(rem) = fits(dk, x, &c, budget) else {
                return None; // out of range on this side
            };
            v[k] = x.clone();
            // next level's partial sums: add L[k][j] * x
            let xr = Rational::from_integer(x.clone());
            {
                let (lower, upper) = sums.split_at_mut(k + 1);
                let row_above = &upper[0];
                let row = &mut lower[k];
                for j in 0..k {
                    row[j] = &row_above[j] + &ctx.g.l[k][j] * &xr;
                }
            }
            match rec(ctx, k - 1, &rem, v, sums, nodes, visit) {
                Walk::Done => Some(Walk::Done),
                other => Some(other),
            }
        };

        // zig-zag from the center of the admissible interval
        let center: BigInt = {
            let half = crate::rational::rat(1, 2);
            (-&c + half).floor().to_integer()
        };
        let mut right = center.clone();
        let mut left = &center - BigInt::one();
        let mut right_open = true;
        let mut left_open = true;
        while right_open || left_open {
            if right_open {
                match try_x(&right, v, sums, nodes, visit) {
                    Some(Walk::Done) => {}
                    Some(other) => return other,
                    None => right_open = false,
                }
                right += 1;
            }
            if left_open {
                match try_x(&left, v, sums, nodes, visit) {
                    Some(Walk::Done) => {}
                    Some(other) => return other,
                    None => left_open = false,
                }
                left -= 1;
            }
        }
        Walk::Done
    }

    let ctx = Ctx { g, node_cap };
    let walk = if m == 0 {
        Walk::Done
    } else {
        rec(&ctx, m - 1, &two_t, &mut v, &mut sums, &mut nodes, &mut visit)
    };
    Ok(EnumOutcome {
        completed: matches!(walk, Walk::Done),
        nodes,
    })
}

/// All integer vectors with `(1/2) v^T G v = t`, in lexicographic order.
pub fn enumerate_value(g: &TraceFormGram, t: &Rational) -> Result<Vec<Vec<BigInt>>, RepError> {
    let mut out = Vec::new();
    enumerate_value_visit(g, t, None, |v| {
        out.push(v.to_vec());
        ControlFlow::Continue(())
    })?;
    out.sort();
    Ok(out)
}

/// A verified solution of `Q(vector) = value`.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub vector: Vec<OrderElement>,
    pub value: OrderElement,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    First,
    All,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    /// When true, `witnesses` is the complete solution set; an empty
    /// exhaustive report proves non-representation.
    pub exhaustive: bool,
    pub witnesses: Vec<Witness>,
    pub nodes_visited: u64,
    pub trace_target: Rational,
}

impl SearchReport {
    pub fn found(&self) -> bool {
        !self.witnesses.is_empty()
    }

    /// Proof of non-representation: complete search with no witness.
    pub fn proves_not_represented(&self) -> bool {
        self.exhaustive && self.witnesses.is_empty()
    }
}

/// Decides `a in Q(O)` for a positive definite `Q` by trace-target
/// enumeration with exact filtering.
///
/// With `SearchMode::All` and no node cap, the report is exhaustive: its
/// witness list is the complete solution set. `SearchMode::First` stops at
/// the first witness (the report is then marked non-exhaustive).
pub fn represent(
    q: &QuadraticForm,
    a: &OrderElement,
    mode: SearchMode,
    node_cap: Option<u64>,
) -> Result<SearchReport, RepError> {
    if !same_field(a.field(), q.field()) {
        return Err(RepError::Field(FieldError::FieldMismatch));
    }
    let gram = trace_gram(q)?;
    if a.is_zero() {
        let zero_vec = vec![OrderElement::zero(q.field()); q.rank()];
        return Ok(SearchReport {
            exhaustive: true,
            witnesses: vec![Witness {
                vector: zero_vec,
                value: a.clone(),
            }],
            nodes_visited: 0,
            trace_target: Rational::zero(),
        });
    }
    if !numfield::is_totally_positive(a)? {
        // positive definite forms represent only 0 and totally positive values
        return Ok(SearchReport {
            exhaustive: true,
            witnesses: vec![],
            nodes_visited: 0,
            trace_target: numfield::trace(a),
        });
    }
    let t = numfield::trace(a);
    let mut witnesses = Vec::new();
    let outcome = enumerate_value_visit(&gram, &t, node_cap, |v| {
        let vector = gram.assemble(v);
        let value = qform::evaluate(q, &vector).expect("assembled vector matches form");
        if &value == a {
            witnesses.push(Witness {
                vector,
                value,
            });
            if mode == SearchMode::First {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    })?;
    witnesses.sort_by(|a, b| {
        let ka: Vec<&BigInt> = a.vector.iter().flat_map(|e| e.coords()).collect();
        let kb: Vec<&BigInt> = b.vector.iter().flat_map(|e| e.coords()).collect();
        ka.cmp(&kb)
    });
    Ok(SearchReport {
        exhaustive: outcome.completed,
        witnesses,
        nodes_visited: outcome.nodes,
        trace_target: t,
    })
}

/// Per-coordinate square bounds for solutions of a positive definite
/// diagonal form: any solution of `sum a_i x_i^2 = a` satisfies
/// `house(x_i)^2 <= max_sigma sigma(a)/sigma(a_i)`; the returned rationals
/// are exact upper enclosures of those maxima (exact values over Q).
pub fn coordinate_house_bounds(
    q: &QuadraticForm,
    a: &OrderElement,
) -> Result<Vec<Rational>, RepError> {
    if !q.is_diagonal() {
        return Err(RepError::NotDiagonal);
    }
    if !qform::is_positive_definite(q)? {
        return Err(RepError::NotPositiveDefinite);
    }
    if !numfield::is_totally_positive(a)? {
        return Err(RepError::TargetNotTotallyPositive);
    }
    let field = q.field();
    let mut out = Vec::with_capacity(q.rank());
    for i in 0..q.rank() {
        let ai = q.coeff(i, i);
        if field.is_rational() {
            let av = Rational::from_integer(a.coords()[0].clone());
            let aiv = Rational::from_integer(ai.coords()[0].clone());
            out.push(av / aiv);
            continue;
        }
        // refine embedding enclosures until the quotient interval is tight
        let mut eps = crate::rational::rat(1, 16);
        loop {
            let ea = numfield::embedding_enclosures_of(a, &eps)?;
            let ei = numfield::embedding_enclosures_of(ai, &eps)?;
            if ei.iter().all(|iv| iv.lo.is_positive()) {
                let mut quot = ea[0].div(&ei[0]);
                for k in 1..ea.len() {
                    quot = quot.max(&ea[k].div(&ei[k]));
                }
                if quot.width() <= crate::rational::rat(1, 1 << 16) {
                    out.push(quot.hi);
                    break;
                }
            }
            eps /= Rational::from_integer(16.into());
        }
    }
    Ok(out)
}

/// The set `{0 <= v < below : v in Q(Z)}` by direct nested enumeration with
/// pruning. Independent of the trace machinery.
pub fn represented_set_below(q: &QuadraticForm, below: u64) -> Result<BTreeSet<u64>, RepError> {
    if !q.field().is_rational() {
        return Err(RepError::NotRationalBase);
    }
    if !qform::is_positive_definite(q)? {
        return Err(RepError::NotPositiveDefinite);
    }
    if q.is_diagonal() {
        let entries: Vec<BigInt> = q
            .diagonal_entries()
            .iter()
            .map(|e| e.coords()[0].clone())
            .collect();
        let mut out = BTreeSet::new();
        let limit = BigInt::from(below);
        fn rec(
            entries: &[BigInt],
            i: usize,
            acc: BigInt,
            limit: &BigInt,
            out: &mut BTreeSet<u64>,
        ) {
            if i == entries.len() {
                let v: u64 = acc.try_into().expect("value below limit fits u64");
                out.insert(v);
                return;
            }
            let mut x = BigInt::zero();
            loop {
                let val = &acc + &entries[i] * &x * &x;
                if &val >= limit {
                    break;
                }
                rec(entries, i + 1, val, limit, out);
                x += 1;
            }
        }
        rec(&entries, 0, BigInt::zero(), &limit, &mut out);
        return Ok(out);
    }
    // General positive definite integer form: bounded recursion on the
    // LDL^T of the coefficient matrix, collecting all values below the cap.
    let a = q.half_gram_rational()?;
    let (l, d) = ldlt(&a)?;
    let n = q.rank();
    let budget = Rational::from_integer(BigInt::from(below)) - Rational::one();
    let mut out = BTreeSet::new();
    let mut v = vec![BigInt::zero(); n];
    let mut c = vec![Rational::zero(); n];
    fn rec(
        l: &[Vec<Rational>],
        d: &[Rational],
        q: &QuadraticForm,
        k: usize,
        budget: &Rational,
        v: &mut Vec<BigInt>,
        c: &mut Vec<Rational>,
        out: &mut BTreeSet<u64>,
    ) {
        let r = budget / &d[k];
        let lo = ceil_shifted_sqrt(&c[k], &r);
        let hi = floor_shifted_sqrt(&c[k], &r);
        let mut x = lo;
        while x <= hi {
            let w = Rational::from_integer(x.clone()) + &c[k];
            let used = &d[k] * &w * &w;
            let rem = budget - used;
            v[k] = x.clone();
            if k == 0 {
                let elems: Vec<OrderElement> = v
                    .iter()
                    .map(|x| OrderElement::from_int(q.field(), x.clone()))
                    .collect();
                let val = qform::evaluate(q, &elems).expect("rational vector");
                let vi: u64 = val.coords()[0].clone().try_into().expect("nonnegative");
                out.insert(vi);
            } else {
                for j in 0..k {
                    c[j] += &l[k][j] * Rational::from_integer(x.clone());
                }
                rec(l, d, q, k - 1, &rem, v, c, out);
                for j in 0..k {
                    c[j] -= &l[k][j] * Rational::from_integer(x.clone());
                }
            }
            x += 1;
        }
    }
    rec(&l, &d, q, n - 1, &budget, &mut v, &mut c, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::{make_field, make_field_power_basis, rational_field};
    use crate::poly::IntPoly;
    use crate::qform::{diag_form, diag_form_i64};
    use crate::rational::{rat, rat_int};

    fn k49() -> FieldRef {
        make_field_power_basis(IntPoly::from_i64(&[-1, -2, 1, 1])).unwrap()
    }

    #[test]
    fn ldlt_cases() {
        // identity
        let id = vec![
            vec![rat_int(1), rat_int(0)],
            vec![rat_int(0), rat_int(1)],
        ];
        let (l, d) = ldlt(&id).unwrap();
        assert_eq!(d, vec![rat_int(1), rat_int(1)]);
        assert_eq!(l[1][0], rat_int(0));
        // [[2,1],[1,2]] -> D = (2, 3/2)
        let g = vec![
            vec![rat_int(2), rat_int(1)],
            vec![rat_int(1), rat_int(2)],
        ];
        let (l, d) = ldlt(&g).unwrap();
        assert_eq!(d, vec![rat_int(2), rat(3, 2)]);
        assert_eq!(l[1][0], rat(1, 2));
        // [[1,2],[2,1]] not positive definite
        let g = vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(2), rat_int(1)],
        ];
        assert_eq!(ldlt(&g).unwrap_err(), RepError::NotPositiveDefinite);
    }

    #[test]
    fn trace_gram_of_unary_form_over_k49() {
        // <1> over Z[omega]: gram = 2 * [[3,-1,5],[-1,5,-4],[5,-4,13]]
        let k = k49();
        let q = diag_form_i64(&k, &[1]).unwrap();
        let g = trace_gram(&q).unwrap();
        let expect = [
            [6i64, -2, 10],
            [-2, 10, -8],
            [10, -8, 26],
        ];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(g.gram()[i][j], rat_int(expect[i][j]));
            }
        }
        // <1,1> doubles it block-diagonally
        let q2 = diag_form_i64(&k, &[1, 1]).unwrap();
        let g2 = trace_gram(&q2).unwrap();
        assert_eq!(g2.dim(), 6);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(g2.gram()[i][j], rat_int(expect[i][j]));
                assert_eq!(g2.gram()[3 + i][3 + j], rat_int(expect[i][j]));
                assert_eq!(g2.gram()[i][3 + j], rat_int(0));
            }
        }
    }

    #[test]
    fn trace_gram_over_z_is_the_form_itself() {
        let q = rational_field();
        let f = diag_form_i64(&q, &[1, 1, 1, 37]).unwrap();
        let g = trace_gram(&f).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j {
                    rat_int(2 * [1i64, 1, 1, 37][i])
                } else {
                    rat_int(0)
                };
                assert_eq!(g.gram()[i][j], expect);
            }
        }
    }

    #[test]
    fn trace_gram_invariant_random_vectors() {
        // (1/2) v^T G v = trace(Q(x_v)) on a handful of vectors
        let k = k49();
        let q = diag_form_i64(&k, &[1, 71]).unwrap();
        let g = trace_gram(&q).unwrap();
        let vectors = [
            vec![1i64, 0, 0, 0, 1, 0],
            vec![-16, -1, 4, 0, 1, 0],
            vec![2, -3, 1, 5, 0, -2],
        ];
        for v in vectors {
            let vb: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
            let mut quad = Rational::zero();
            for i in 0..6 {
                for j in 0..6 {
                    quad += &g.gram()[i][j]
                        * Rational::from_integer(vb[i].clone())
                        * Rational::from_integer(vb[j].clone());
                }
            }
            quad /= rat_int(2);
            let x = g.assemble(&vb);
            let val = qform::evaluate(&q, &x).unwrap();
            assert_eq!(quad, numfield::trace(&val));
        }
    }

    #[test]
    fn enumerate_small_values() {
        let q = rational_field();
        // G = (2): v^2 = 4 -> v = +-2
        let f = diag_form_i64(&q, &[1]).unwrap();
        let g = trace_gram(&f).unwrap();
        let sols = enumerate_value(&g, &rat_int(4)).unwrap();
        assert_eq!(sols, vec![vec![BigInt::from(-2)], vec![BigInt::from(2)]]);
        // sum of two squares = 5
        let f = diag_form_i64(&q, &[1, 1]).unwrap();
        let g = trace_gram(&f).unwrap();
        let sols = enumerate_value(&g, &rat_int(5)).unwrap();
        assert_eq!(sols.len(), 8);
        for v in &sols {
            let a: BigInt = &v[0] * &v[0] + &v[1] * &v[1];
            assert_eq!(a, BigInt::from(5));
        }
        // t = 0 -> zero vector only
        let sols = enumerate_value(&g, &rat_int(0)).unwrap();
        assert_eq!(sols, vec![vec![BigInt::zero(), BigInt::zero()]]);
        // negative target rejected
        assert_eq!(
            enumerate_value(&g, &rat_int(-1)).unwrap_err(),
            RepError::NegativeTarget
        );
        // closure under negation
        let sols = enumerate_value(&g, &rat_int(25)).unwrap();
        for v in &sols {
            let neg: Vec<BigInt> = v.iter().map(|x| -x).collect();
            assert!(sols.contains(&neg));
        }
    }

    #[test]
    fn represent_124_paper_case() {
        let q = rational_field();
        let f = diag_form_i64(&q, &[1, 1, 1, 37]).unwrap();
        let a = OrderElement::from_int(&q, 124.into());
        let rep = represent(&f, &a, SearchMode::All, None).unwrap();
        assert!(rep.proves_not_represented(), "124 not in <1,1,1,37>(Z)");
        // over Z[omega] a witness exists
        let k = k49();
        let emb = numfield::rational_embedding(&k);
        let fk = qform::extend_scalars(&f, &emb).unwrap();
        let ak = OrderElement::from_int(&k, 124.into());
        let rep = represent(&fk, &ak, SearchMode::First, None).unwrap();
        assert!(rep.found(), "124 in <1,1,1,37>(O_K49)");
        assert!(!rep.exhaustive, "first-mode short-circuit");
        let w = &rep.witnesses[0];
        assert_eq!(qform::evaluate(&fk, &w.vector).unwrap(), ak);
    }

    #[test]
    fn represent_232_paper_case() {
        let k = k49();
        let f = diag_form_i64(&k, &[1, 71]).unwrap();
        let a = OrderElement::from_int(&k, 232.into());
        let rep = represent(&f, &a, SearchMode::All, None).unwrap();
        assert!(rep.exhaustive);
        // the witness (4 omega^2 - omega - 16, omega) appears
        let x = OrderElement::from_i64(&k, &[-16, -1, 4]).unwrap();
        let omega = OrderElement::from_i64(&k, &[0, 1, 0]).unwrap();
        assert!(rep
            .witnesses
            .iter()
            .any(|w| w.vector == vec![x.clone(), omega.clone()]));
        // witnesses closed under the Galois map omega -> omega^2 - 2
        let img = OrderElement::from_i64(&k, &[-2, 0, 1]).unwrap();
        let sigma = numfield::make_embedding(&k, &k, img).unwrap();
        for w in &rep.witnesses {
            let mapped: Vec<OrderElement> = w
                .vector
                .iter()
                .map(|x| numfield::map_elem(&sigma, x).unwrap())
                .collect();
            assert!(
                rep.witnesses.iter().any(|w2| w2.vector == mapped),
                "Galois image of a witness must be a witness"
            );
        }
        // over Z there is no solution
        let q = rational_field();
        let fz = diag_form_i64(&q, &[1, 71]).unwrap();
        let az = OrderElement::from_int(&q, 232.into());
        let rep = represent(&fz, &az, SearchMode::All, None).unwrap();
        assert!(rep.proves_not_represented());
    }

    #[test]
    fn represent_zero_and_negative_targets() {
        let q = rational_field();
        let f = diag_form_i64(&q, &[1, 2]).unwrap();
        let zero = OrderElement::zero(&q);
        let rep = represent(&f, &zero, SearchMode::All, None).unwrap();
        assert!(rep.exhaustive);
        assert_eq!(rep.witnesses.len(), 1);
        assert!(rep.witnesses[0].vector.iter().all(|x| x.is_zero()));
        let neg = OrderElement::from_int(&q, (-5).into());
        let rep = represent(&f, &neg, SearchMode::All, None).unwrap();
        assert!(rep.proves_not_represented());
    }

    #[test]
    fn node_cap_reports_incomplete() {
        let q = rational_field();
        let f = diag_form_i64(&q, &[1, 1, 1]).unwrap();
        let a = OrderElement::from_int(&q, 59.into());
        let rep = represent(&f, &a, SearchMode::All, Some(3)).unwrap();
        assert!(!rep.exhaustive, "tiny budget cannot be exhaustive");
    }

    #[test]
    fn coordinate_bounds() {
        let q = rational_field();
        let f = diag_form_i64(&q, &[1, 71]).unwrap();
        let a = OrderElement::from_int(&q, 232.into());
        let b = coordinate_house_bounds(&f, &a).unwrap();
        assert_eq!(b, vec![rat_int(232), rat(232, 71)]);
        let f1 = diag_form_i64(&q, &[1]).unwrap();
        let four = OrderElement::from_int(&q, 4.into());
        assert_eq!(coordinate_house_bounds(&f1, &four).unwrap(), vec![rat_int(4)]);
        let f37 = diag_form_i64(&q, &[1, 1, 1, 37]).unwrap();
        let a124 = OrderElement::from_int(&q, 124.into());
        let b = coordinate_house_bounds(&f37, &a124).unwrap();
        assert_eq!(b[3], rat(124, 37));
        assert!(b[3] < rat_int(4));
        // non-diagonal rejected
        let k = k49();
        let f = diag_form_i64(&k, &[1, 71]).unwrap();
        let a232 = OrderElement::from_int(&k, 232.into());
        let bounds = coordinate_house_bounds(&f, &a232).unwrap();
        // over K49 the bounds are still [~232, ~232/71] (constant quotients)
        assert!(bounds[1] >= rat(232, 71) && bounds[1] < rat(233, 71));
    }

    #[test]
    fn census_below() {
        let q = rational_field();
        let f = diag_form_i64(&q, &[1]).unwrap();
        let s = represented_set_below(&f, 10).unwrap();
        assert_eq!(s.into_iter().collect::<Vec<_>>(), vec![0, 1, 4, 9]);
        let f = diag_form_i64(&q, &[1, 2, 5, 5]).unwrap();
        let s = represented_set_below(&f, 100).unwrap();
        assert!(!s.contains(&15));
        assert_eq!(s.len(), 99, "everything under 100 except 15");
    }

    #[test]
    fn census_general_matches_diagonal_path() {
        // cross-check the two implementations on a diagonal form written as
        // a general one
        let q = rational_field();
        let z = |v: i64| OrderElement::from_int(&q, v.into());
        let diag = diag_form_i64(&q, &[1, 2, 7]).unwrap();
        let gen = crate::qform::general_form(
            &q,
            vec![vec![z(1), z(0), z(0)], vec![z(2), z(0)], vec![z(7)]],
        )
        .unwrap();
        // force the general path by checking is_diagonal dispatch manually:
        // the general form IS diagonal, so compare against a real cross-term
        // form evaluated by brute force instead.
        assert_eq!(
            represented_set_below(&diag, 60).unwrap(),
            represented_set_below(&gen, 60).unwrap()
        );
        // 145-form ternary subform: values under 40 by brute force
        let tern = crate::qform::general_form(
            &q,
            vec![vec![z(1), z(0), z(1)], vec![z(2), z(1)], vec![z(4)]],
        )
        .unwrap();
        let fast = represented_set_below(&tern, 40).unwrap();
        let mut slow = BTreeSet::new();
        for x in -10i64..=10 {
            for y in -10i64..=10 {
                for w in -10i64..=10 {
                    let v = x * x + 2 * y * y + 4 * w * w + x * w + y * w;
                    if (0..40).contains(&v) {
                        slow.insert(v as u64);
                    }
                }
            }
        }
        assert_eq!(fast, slow);
    }

    #[test]
    fn represent_agrees_with_census() {
        let q = rational_field();
        let f = diag_form_i64(&q, &[1, 2, 7]).unwrap();
        let s = represented_set_below(&f, 30).unwrap();
        for a in 0..30u64 {
            let elem = OrderElement::from_int(&q, a.into());
            let rep = represent(&f, &elem, SearchMode::First, None).unwrap();
            assert_eq!(
                rep.found(),
                s.contains(&a),
                "census and trace search disagree at {a}"
            );
        }
    }

    #[test]
    fn sqrt21_field_search() {
        // (25 + sqrt21)/2 is not a sum of four squares in Z[(1+sqrt21)/2]
        let f21 = make_field(
            IntPoly::from_i64(&[-21, 0, 1]),
            vec![vec![rat_int(1), rat_int(0)], vec![rat(1, 2), rat(1, 2)]],
        )
        .unwrap();
        let form = diag_form_i64(&f21, &[1, 1, 1, 1]).unwrap();
        let a = OrderElement::from_i64(&f21, &[12, 1]).unwrap(); // 12 + w
        assert_eq!(numfield::trace(&a), rat_int(25));
        let rep = represent(&form, &a, SearchMode::All, None).unwrap();
        assert!(rep.proves_not_represented());
    }
}
