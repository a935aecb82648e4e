//! The ambient ring `P = Z[a][x_1, ..., x_k]` modulo `J = (h_{n-k+i} - a_i)`.
//!
//! The generators
//!
//! ```text
//! b_i = h_{n-k+i}(x_i, ..., x_k) - Σ_{t=0}^{i-1} (-1)^t e_t(x_1, ..., x_{i-1}) a_{i-t}
//! ```
//!
//! form a Gröbner basis for the degree-lexicographic order with
//! `x_1 > x_2 > ... > x_k`. Their leading terms `x_i^{n-k+i}` are univariate and
//! pairwise coprime, so division only ever needs a per-coordinate exponent test.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, RangeInclusive, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::coeffring::{AMonomial, APoly};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::quotient::QuotContext;
use crate::tableaux::for_each_horizontal_strip;
use crate::text::{indexed_name, parse_sum, push_signed};

/// Exponent vector of `x^α`, ordered degree-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct XMonomial(Vec<u32>);

impl XMonomial {
    pub fn one(k: usize) -> Self {
        XMonomial(vec![0; k])
    }

    pub fn new(exponents: Vec<u32>) -> Self {
        XMonomial(exponents)
    }

    /// `x_i` for `1 ≤ i ≤ k`.
    pub fn var(k: usize, i: usize) -> Self {
        let mut e = vec![0; k];
        e[i - 1] = 1;
        XMonomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &XMonomial) -> XMonomial {
        XMonomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn render(&self) -> String {
        let mut factors = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(format!("x{}", i + 1)),
                _ => factors.push(format!("x{}^{}", i + 1, e)),
            }
        }
        factors.join("*")
    }
}

/// Degree first, then the first differing exponent scanning `x_1, x_2, ...`.
pub fn deglex_compare(u: &XMonomial, v: &XMonomial) -> Ordering {
    u.degree().cmp(&v.degree()).then_with(|| u.0.cmp(&v.0))
}

impl Ord for XMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        deglex_compare(self, other)
    }
}

impl PartialOrd for XMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for XMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.render();
        f.write_str(if s.is_empty() { "1" } else { &s })
    }
}

impl fmt::Debug for XMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sparse polynomial in `x_1, ..., x_k` with coefficients in `Z[a_1, ..., a_k]`.
#[derive(Clone, PartialEq, Eq)]
pub struct XPoly {
    k: usize,
    terms: BTreeMap<XMonomial, APoly>,
}

impl XPoly {
    pub fn zero(k: usize) -> Self {
        XPoly { k, terms: BTreeMap::new() }
    }

    pub fn one(k: usize) -> Self {
        Self::constant(APoly::one(k))
    }

    /// The coefficient `c` as a polynomial of degree zero in `x`.
    pub fn constant(c: APoly) -> Self {
        let k = c.nvars();
        Self::term(c, XMonomial::one(k))
    }

    pub fn integer(k: usize, c: impl Into<BigInt>) -> Self {
        Self::constant(APoly::constant(k, c))
    }

    pub fn term(c: APoly, m: XMonomial) -> Self {
        assert_eq!(c.nvars(), m.nvars(), "x and a alphabets must have equal size");
        let mut out = XPoly::zero(m.nvars());
        if !c.is_zero() {
            out.terms.insert(m, c);
        }
        out
    }

    pub fn monomial(m: XMonomial) -> Self {
        let k = m.nvars();
        Self::term(APoly::one(k), m)
    }

    /// `x_i`, 1-based.
    pub fn x(k: usize, i: usize) -> Self {
        Self::monomial(XMonomial::var(k, i))
    }

    /// `a_i`, 1-based.
    pub fn a(k: usize, i: usize) -> Self {
        Self::constant(APoly::var(k, i))
    }

    pub fn nvars(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending deglex order.
    pub fn terms(&self) -> impl Iterator<Item = (&XMonomial, &APoly)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &XMonomial) -> APoly {
        self.terms.get(m).cloned().unwrap_or_else(|| APoly::zero(self.k))
    }

    pub fn leading_monomial(&self) -> Option<&XMonomial> {
        self.terms.keys().next_back()
    }

    fn add_term(&mut self, m: XMonomial, c: &APoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                v.add_assign_ref(c);
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn check(&self, other: &XPoly) -> Result<()> {
        if self.k == other.k {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!("{} vs {} variables", self.k, other.k)))
        }
    }

    pub fn checked_add(&self, other: &XPoly) -> Result<XPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &XPoly) -> Result<XPoly> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &XPoly) -> Result<XPoly> {
        self.check(other)?;
        let mut out = XPoly::zero(self.k);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        Ok(out)
    }

    /// Multiplies by the scalar `c ∈ Z[a]`.
    pub fn scale(&self, c: &APoly) -> XPoly {
        let mut out = XPoly::zero(self.k);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), &(v * c));
        }
        out
    }

    fn shift_scale(&self, shift: &XMonomial, c: &APoly) -> XPoly {
        let mut out = XPoly::zero(self.k);
        for (m, v) in &self.terms {
            out.add_term(m.mul(shift), &(v * c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> XPoly {
        let mut out = XPoly::one(self.k);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Parses text such as `3*x1^2*x2 - a1*x2^4 + a2` over `k` variables.
    pub fn parse(k: usize, s: &str) -> Result<XPoly> {
        let mut out = XPoly::zero(k);
        for (c, factors) in parse_sum(s)? {
            let mut x = vec![0u32; k];
            let mut a = vec![0u32; k];
            for (ident, e) in factors {
                let slot = match indexed_name(&ident) {
                    Some(("x", i)) if (1..=k).contains(&i) => &mut x[i - 1],
                    Some(("a", i)) if (1..=k).contains(&i) => &mut a[i - 1],
                    _ => return Err(Error::Parse(format!("unknown variable {ident:?} (k = {k})"))),
                };
                *slot += e;
            }
            out.add_term(XMonomial(x), &APoly::term(k, c, AMonomial::new(a)));
        }
        Ok(out)
    }
}

/// Sort key for the text form: the `a`-part decides first (higher degree,
/// then higher weight `Σ i e_i`, then grlex), and the `x`-part breaks ties
/// in descending deglex.
fn render_key(a: &AMonomial) -> (u32, u32, AMonomial) {
    let weight = a.exponents().iter().enumerate().map(|(i, &e)| (i as u32 + 1) * e).sum();
    (a.degree(), weight, a.clone())
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut flat: Vec<(&XMonomial, &AMonomial, &BigInt)> = Vec::new();
        for (x, c) in &self.terms {
            for (a, v) in c.terms() {
                flat.push((x, a, v));
            }
        }
        flat.sort_by(|(x1, a1, _), (x2, a2, _)| {
            render_key(a2).cmp(&render_key(a1)).then_with(|| x2.cmp(x1))
        });
        let mut out = String::new();
        for (x, a, v) in flat {
            let mag = v.abs();
            let (am, xm) = (a.render(), x.render());
            let mut parts = Vec::new();
            if !mag.is_one() || (am.is_empty() && xm.is_empty()) {
                parts.push(mag.to_string());
            }
            parts.extend([am, xm].into_iter().filter(|s| !s.is_empty()));
            push_signed(&mut out, v.is_negative(), &parts.join("*"));
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly({self})")
    }
}

impl<'a> Add<&'a XPoly> for &'a XPoly {
    type Output = XPoly;
    fn add(self, rhs: &'a XPoly) -> XPoly {
        self.checked_add(rhs).expect("variable count mismatch")
    }
}

impl<'a> Sub<&'a XPoly> for &'a XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &'a XPoly) -> XPoly {
        self.checked_sub(rhs).expect("variable count mismatch")
    }
}

impl<'a> Mul<&'a XPoly> for &'a XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &'a XPoly) -> XPoly {
        self.checked_mul(rhs).expect("variable count mismatch")
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly {
            k: self.k,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

fn for_each_exponent_split(m: u32, slots: usize, prefix: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
    if slots == 1 {
        prefix.push(m);
        visit(prefix);
        prefix.pop();
        return;
    }
    for e in (0..=m).rev() {
        prefix.push(e);
        for_each_exponent_split(m - e, slots - 1, prefix, visit);
        prefix.pop();
    }
}

/// `h_m` in the variables `x_i` for `i ∈ vars` (1-based; empty ranges allowed).
pub fn complete_homogeneous(k: usize, m: usize, vars: RangeInclusive<usize>) -> XPoly {
    let idx: Vec<usize> = vars.collect();
    if m == 0 {
        return XPoly::one(k);
    }
    let mut out = XPoly::zero(k);
    if idx.is_empty() {
        return out;
    }
    let one = APoly::one(k);
    for_each_exponent_split(m as u32, idx.len(), &mut Vec::new(), &mut |split| {
        let mut e = vec![0; k];
        for (&i, &s) in idx.iter().zip(split) {
            e[i - 1] = s;
        }
        out.add_term(XMonomial(e), &one);
    });
    out
}

/// `e_t` in the variables `x_i` for `i ∈ vars` (1-based; empty ranges allowed).
pub fn elementary(k: usize, t: usize, vars: RangeInclusive<usize>) -> XPoly {
    let idx: Vec<usize> = vars.collect();
    let mut out = XPoly::zero(k);
    let one = APoly::one(k);
    fn choose(idx: &[usize], t: usize, e: &mut Vec<u32>, out: &mut XPoly, one: &APoly) {
        if t == 0 {
            out.add_term(XMonomial(e.clone()), one);
            return;
        }
        for (pos, &i) in idx.iter().enumerate() {
            if idx.len() - pos < t {
                break;
            }
            e[i - 1] = 1;
            choose(&idx[pos + 1..], t - 1, e, out, one);
            e[i - 1] = 0;
        }
    }
    choose(&idx, t, &mut vec![0; k], &mut out, &one);
    out
}

/// `p_r = x_1^r + ... + x_k^r`.
pub fn power_sum(k: usize, r: usize) -> XPoly {
    if r == 0 {
        return XPoly::integer(k, k as i64);
    }
    let mut out = XPoly::zero(k);
    for i in 1..=k {
        let mut e = vec![0; k];
        e[i - 1] = r as u32;
        out.add_term(XMonomial(e), &APoly::one(k));
    }
    out
}

/// The `k` generators `b_1, ..., b_k` of `J`.
pub fn groebner_generators(ctx: QuotContext) -> Vec<XPoly> {
    let (k, n) = (ctx.k(), ctx.n());
    (1..=k)
        .map(|i| {
            let mut b = complete_homogeneous(k, n - k + i, i..=k);
            for t in 0..i {
                let sign = if t % 2 == 0 { 1 } else { -1 };
                let e = elementary(k, t, 1..=i - 1);
                b = &b - &e.scale(&APoly::var(k, i - t).scale(&BigInt::from(sign)));
            }
            b
        })
        .collect()
}

/// The Gröbner basis of `J` together with what division needs.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ctx: QuotContext,
    generators: Vec<XPoly>,
    /// `x_i^{n-k+i} - b_i`, the replacement for each leading power.
    rewrites: Vec<XPoly>,
}

impl GroebnerBasis {
    pub fn new(ctx: QuotContext) -> Self {
        let generators = groebner_generators(ctx);
        let k = ctx.k();
        let rewrites = generators
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let mut e = vec![0; k];
                e[i] = Self::bound(ctx, i);
                let lead = XPoly::monomial(XMonomial(e));
                debug_assert_eq!(b.leading_monomial(), lead.leading_monomial());
                &lead - b
            })
            .collect();
        GroebnerBasis { ctx, generators, rewrites }
    }

    /// `n - k + i` for the 0-based index `i - 1`.
    fn bound(ctx: QuotContext, i0: usize) -> u32 {
        (ctx.n() - ctx.k() + i0 + 1) as u32
    }

    pub fn context(&self) -> QuotContext {
        self.ctx
    }

    pub fn generators(&self) -> &[XPoly] {
        &self.generators
    }

    /// Index of the first generator whose leading term divides `m`.
    fn reducer(&self, m: &XMonomial) -> Option<usize> {
        (0..self.ctx.k()).find(|&i| m.0[i] >= Self::bound(self.ctx, i))
    }

    pub fn is_standard(&self, m: &XMonomial) -> bool {
        self.reducer(m).is_none()
    }

    /// The remainder of `p` under division by the basis: the unique
    /// representative supported on `x^α` with `α_i < n-k+i`.
    pub fn normal_form(&self, p: &XPoly) -> Result<XPoly> {
        if p.k != self.ctx.k() {
            return Err(Error::ContextMismatch(format!(
                "polynomial in {} variables, ring has k = {}",
                p.k,
                self.ctx.k()
            )));
        }
        let mut rest = p.clone();
        let mut out = XPoly::zero(p.k);
        // Each rewrite only introduces monomials below the one it replaces.
        while let Some((m, c)) = rest.terms.pop_last() {
            match self.reducer(&m) {
                None => {
                    out.terms.insert(m, c);
                }
                Some(i) => {
                    let mut shift = m.clone();
                    shift.0[i] -= Self::bound(self.ctx, i);
                    let add = self.rewrites[i].shift_scale(&shift, &c);
                    for (m2, c2) in add.terms {
                        debug_assert!(m2 < m);
                        rest.add_term(m2, &c2);
                    }
                }
            }
        }
        Ok(out)
    }

    /// All standard monomials `x^α` (`α_i < n-k+i`), ascending in deglex.
    pub fn monomial_basis(&self) -> Vec<XMonomial> {
        let k = self.ctx.k();
        let mut out = vec![Vec::new()];
        for i in 0..k {
            let b = Self::bound(self.ctx, i);
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<u32>| {
                    (0..b).map(move |e| {
                        let mut v = prefix.clone();
                        v.push(e);
                        v
                    })
                })
                .collect();
        }
        let mut out: Vec<XMonomial> = out.into_iter().map(XMonomial).collect();
        out.sort();
        out
    }
}

/// Convenience wrapper around [`GroebnerBasis::normal_form`].
pub fn normal_form(ctx: QuotContext, p: &XPoly) -> Result<XPoly> {
    GroebnerBasis::new(ctx).normal_form(p)
}

/// Convenience wrapper around [`GroebnerBasis::monomial_basis`].
pub fn monomial_basis(ctx: QuotContext) -> Vec<XMonomial> {
    GroebnerBasis::new(ctx).monomial_basis()
}

/// The Schur polynomial `s_λ(x_1, ..., x_k)`, summed over semistandard
/// tableaux. A tableau is built letter by letter: the cells holding `i` form a
/// horizontal strip, and their number is the exponent of `x_i`.
pub fn schur_xpoly(lambda: &Partition, k: usize) -> Result<XPoly> {
    if lambda.len() > k {
        return Err(Error::Domain(format!("{lambda} has more than k = {k} parts")));
    }
    fn extend(
        shape: &Partition,
        letter: usize,
        target: &Partition,
        k: usize,
        content: &mut Vec<u32>,
        out: &mut BTreeMap<Vec<u32>, u64>,
    ) {
        let remaining = target.size() - shape.size();
        if letter == k {
            if remaining == 0 {
                *out.entry(content.clone()).or_default() += 1;
            }
            return;
        }
        if letter + 1 == k {
            // the last letter must fill the rest
            let mut hit = false;
            for_each_horizontal_strip(shape, remaining, k, Some(target), |next, _| {
                hit |= next == target;
            });
            if hit {
                content.push(remaining as u32);
                *out.entry(content.clone()).or_default() += 1;
                content.pop();
            }
            return;
        }
        for size in 0..=remaining {
            let mut nexts = Vec::new();
            for_each_horizontal_strip(shape, size, k, Some(target), |next, _| nexts.push(next.clone()));
            for next in nexts {
                content.push(size as u32);
                extend(&next, letter + 1, target, k, content, out);
                content.pop();
            }
        }
    }
    let mut counts = BTreeMap::new();
    extend(&Partition::empty(), 0, lambda, k, &mut Vec::new(), &mut counts);
    let mut out = XPoly::zero(k);
    for (e, c) in counts {
        out.add_term(XMonomial(e), &APoly::constant(k, c));
    }
    Ok(out)
}
