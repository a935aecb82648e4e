//! The ring `S/I` in its Schur basis `(s̄_λ)_{λ ∈ P_{k,n}}`.
//!
//! Every product is computed as a Littlewood–Richardson expansion followed by
//! straightening. Straightening a partition `μ` with at most `k` parts that
//! does not fit in the `k × (n-k)` box applies one rim-hook step
//!
//! ```text
//! s̄_μ = Σ_{j=1..k} (-1)^{k-j} a_j Σ_{τ ∈ V, -|τ| = n-k+j} s̄_{μ+τ}
//! ```
//!
//! and recurses on the (strictly smaller) partitions that survive
//! [`straighten_vector`]. Results are memoized per [`QuotientRing`].

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::coeffring::{specialize, APoly, QPoly, Specialization};
use crate::combinatorics::{
    complement, enumerate_pkn, enumerate_v_set, straighten_vector, Partition, SignedStraightening,
};
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::tableaux::{
    for_each_horizontal_strip, schur_product_expand, skew_schur_expand, vertical_strip_extensions,
};
use crate::text::push_signed;

/// The pair `(k, n)` with `1 ≤ k ≤ n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuotContext {
    k: usize,
    n: usize,
}

impl QuotContext {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidParameters(format!(
                "need 1 <= k <= n, got k = {k}, n = {n}"
            )));
        }
        Ok(QuotContext { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `n - k`, the width of the box.
    pub fn width(&self) -> usize {
        self.n - self.k
    }

    /// `ω = (n-k, ..., n-k)`.
    pub fn omega(&self) -> Partition {
        Partition::rectangle(self.k, self.width())
    }

    /// `P_{k,n}` in canonical order.
    pub fn basis(&self) -> Vec<Partition> {
        enumerate_pkn(self.k, self.n).expect("validated context")
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        lambda.fits_box(self.k, self.n)
    }

    pub fn complement(&self, lambda: &Partition) -> Result<Partition> {
        complement(lambda, self.k, self.n)
    }

    fn require_basis(&self, lambda: &Partition) -> Result<()> {
        if self.contains(lambda) {
            Ok(())
        } else {
            Err(Error::Domain(format!("{lambda} is not in P_{{{},{}}}", self.k, self.n)))
        }
    }

    fn require_same(&self, other: &QuotContext) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!(
                "(k, n) = ({}, {}) vs ({}, {})",
                self.k, self.n, other.k, other.n
            )))
        }
    }
}

/// A linear combination `Σ c_λ s_λ` over `Z[a]` whose indices need not lie in the box.
pub type SchurCombination = BTreeMap<Partition, APoly>;

fn add_into(map: &mut SchurCombination, key: &Partition, value: &APoly) {
    if value.is_zero() {
        return;
    }
    match map.get_mut(key) {
        Some(v) => {
            v.add_assign_ref(value);
            if v.is_zero() {
                map.remove(key);
            }
        }
        None => {
            map.insert(key.clone(), value.clone());
        }
    }
}

/// An element of `S/I`, stored as its coordinates in the Schur basis.
#[derive(Clone, PartialEq, Eq)]
pub struct QuotElem {
    ctx: QuotContext,
    terms: SchurCombination,
}

impl QuotElem {
    pub fn zero(ctx: QuotContext) -> Self {
        QuotElem { ctx, terms: BTreeMap::new() }
    }

    /// `s̄_∅`.
    pub fn one(ctx: QuotContext) -> Self {
        Self::basis_element(ctx, &Partition::empty()).expect("∅ is always in the box")
    }

    /// `s̄_λ` for `λ ∈ P_{k,n}`.
    pub fn basis_element(ctx: QuotContext, lambda: &Partition) -> Result<Self> {
        ctx.require_basis(lambda)?;
        let mut terms = BTreeMap::new();
        terms.insert(lambda.clone(), APoly::one(ctx.k));
        Ok(QuotElem { ctx, terms })
    }

    /// Builds an element from explicit coordinates; every index must lie in `P_{k,n}`.
    pub fn from_terms(
        ctx: QuotContext,
        terms: impl IntoIterator<Item = (Partition, APoly)>,
    ) -> Result<Self> {
        let mut out = QuotElem::zero(ctx);
        for (lambda, c) in terms {
            ctx.require_basis(&lambda)?;
            if c.nvars() != ctx.k {
                return Err(Error::ContextMismatch(format!(
                    "coefficient {c} has {} parameters, expected {}",
                    c.nvars(),
                    ctx.k
                )));
            }
            add_into(&mut out.terms, &lambda, &c);
        }
        Ok(out)
    }

    pub fn context(&self) -> QuotContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coordinates in canonical order of `P_{k,n}`.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &APoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// `coeff_μ(self)`, the coordinate at `s̄_μ`.
    pub fn coeff(&self, mu: &Partition) -> Result<APoly> {
        self.ctx.require_basis(mu)?;
        Ok(self.terms.get(mu).cloned().unwrap_or_else(|| APoly::zero(self.ctx.k)))
    }

    pub fn checked_add(&self, other: &QuotElem) -> Result<QuotElem> {
        self.ctx.require_same(&other.ctx)?;
        let mut out = self.clone();
        for (l, c) in &other.terms {
            add_into(&mut out.terms, l, c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &QuotElem) -> Result<QuotElem> {
        self.checked_add(&other.scale(&APoly::constant(self.ctx.k, -1)))
    }

    /// Multiplies every coordinate by the scalar `c ∈ Z[a]`.
    pub fn scale(&self, c: &APoly) -> QuotElem {
        let mut out = QuotElem::zero(self.ctx);
        for (l, v) in &self.terms {
            add_into(&mut out.terms, l, &(v * c));
        }
        out
    }

    /// Human-readable form, largest partition first, e.g. `a1*s[4,1,1] - a2*s[3,1,1]`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (lambda, c) in self.terms.iter().rev() {
            let (neg, body) = c.render_factor(&format!("s{lambda}"));
            push_signed(&mut out, neg, &body);
        }
        out
    }
}

impl fmt::Display for QuotElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for QuotElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuotElem(k={}, n={}: {})", self.ctx.k, self.ctx.n, self.render())
    }
}

#[derive(Serialize)]
struct JsonTerm<'a> {
    partition: &'a Partition,
    coeff: &'a APoly,
}

impl Serialize for QuotElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<JsonTerm<'_>> = self
            .terms
            .iter()
            .map(|(partition, coeff)| JsonTerm { partition, coeff })
            .collect();
        let mut s = serializer.serialize_struct("QuotElem", 4)?;
        s.serialize_field("k", &self.ctx.k)?;
        s.serialize_field("n", &self.ctx.n)?;
        s.serialize_field("basis", "s")?;
        s.serialize_field("terms", &terms)?;
        s.end()
    }
}

/// A violation of one of the six symmetric forms of `g_{α,β,γ}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct S3Counterexample {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
    /// `g` evaluated at the six orderings, then `coeff_ω(s̄_α s̄_β s̄_γ)`.
    pub values: Vec<APoly>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct S3Report {
    pub ok: bool,
    pub triples_checked: usize,
    pub counterexamples: Vec<S3Counterexample>,
}

/// A structure constant that is not a nonnegative polynomial in the `b_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositivityViolation {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    /// `(-1)^{|λ|+|μ|-|ν|} coeff_ν(s̄_λ s̄_μ)` written in `b_1, ..., b_k`.
    pub in_b: APoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositivityReport {
    pub ok: bool,
    pub coefficients_checked: usize,
    pub violations: Vec<PositivityViolation>,
}

/// The ring `S/I` for a fixed `(k, n)`, carrying a straightening cache.
pub struct QuotientRing {
    ctx: QuotContext,
    straighten_cache: Memo<Partition, Arc<SchurCombination>>,
}

impl QuotientRing {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        Ok(Self::with_context(QuotContext::new(k, n)?))
    }

    pub fn with_context(ctx: QuotContext) -> Self {
        QuotientRing { ctx, straighten_cache: Memo::new() }
    }

    pub fn context(&self) -> QuotContext {
        self.ctx
    }

    pub fn k(&self) -> usize {
        self.ctx.k
    }

    pub fn n(&self) -> usize {
        self.ctx.n
    }

    pub fn one(&self) -> QuotElem {
        QuotElem::one(self.ctx)
    }

    pub fn zero(&self) -> QuotElem {
        QuotElem::zero(self.ctx)
    }

    pub fn basis_element(&self, lambda: &Partition) -> Result<QuotElem> {
        QuotElem::basis_element(self.ctx, lambda)
    }

    fn a(&self, i: usize) -> APoly {
        APoly::var(self.ctx.k, i)
    }

    fn int(&self, c: impl Into<BigInt>) -> APoly {
        APoly::constant(self.ctx.k, c)
    }

    /// One application of the rim-hook rule to `μ` (at most `k` parts, not in
    /// the box). The result is not reduced: its indices may leave `P_{k,n}`.
    pub fn rim_hook_step(&self, mu: &Partition) -> Result<SchurCombination> {
        let (k, n) = (self.ctx.k, self.ctx.n);
        if mu.len() > k {
            return Err(Error::Domain(format!("{mu} has more than k = {k} parts")));
        }
        if self.ctx.contains(mu) {
            return Err(Error::Domain(format!("{mu} already lies in P_{{{k},{n}}}")));
        }
        let base = mu.to_vector(k)?;
        let mut out = SchurCombination::new();
        for tau in enumerate_v_set(k, n) {
            let j = (-tau.sum()) as usize - (n - k);
            if let SignedStraightening::Term { sign, partition } = straighten_vector(&base.add(&tau)) {
                let sign = if (k - j).is_multiple_of(2) { sign as i64 } else { -(sign as i64) };
                add_into(&mut out, &partition, &self.a(j).scale(&BigInt::from(sign)));
            }
        }
        Ok(out)
    }

    fn straighten_terms(&self, mu: &Partition) -> Arc<SchurCombination> {
        if self.ctx.contains(mu) {
            let mut m = SchurCombination::new();
            m.insert(mu.clone(), APoly::one(self.ctx.k));
            return Arc::new(m);
        }
        self.straighten_cache.get_or_insert_with(mu, || {
            let step = self.rim_hook_step(mu).expect("caller checked the length");
            let mut out = SchurCombination::new();
            for (lambda, c) in &step {
                debug_assert!(lambda.size() < mu.size());
                for (nu, d) in self.straighten_terms(lambda).iter() {
                    add_into(&mut out, nu, &(c * d));
                }
            }
            Arc::new(out)
        })
    }

    /// `s̄_μ` expanded in the basis, for any `μ` with at most `k` parts.
    pub fn straighten_schur(&self, mu: &Partition) -> Result<QuotElem> {
        if mu.len() > self.ctx.k {
            return Err(Error::Domain(format!(
                "{mu} has more than k = {} parts (s_mu vanishes in k variables)",
                self.ctx.k
            )));
        }
        Ok(QuotElem { ctx: self.ctx, terms: (*self.straighten_terms(mu)).clone() })
    }

    /// Projects `Σ c_μ s_μ` to `S/I`. Indices with more than `k` parts are
    /// dropped since `s_μ = 0` in `k` variables.
    pub fn reduce(&self, combination: &SchurCombination) -> QuotElem {
        let mut out = SchurCombination::new();
        for (mu, c) in combination {
            if mu.len() > self.ctx.k || c.is_zero() {
                continue;
            }
            for (nu, d) in self.straighten_terms(mu).iter() {
                add_into(&mut out, nu, &(c * d));
            }
        }
        QuotElem { ctx: self.ctx, terms: out }
    }

    /// Like [`reduce`](Self::reduce) for integer coefficients.
    pub fn reduce_integral<'a>(
        &self,
        combination: impl IntoIterator<Item = (&'a Partition, BigInt)>,
    ) -> QuotElem {
        let map: SchurCombination = combination
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| (p.clone(), self.int(c)))
            .collect();
        self.reduce(&map)
    }

    fn check(&self, f: &QuotElem) -> Result<()> {
        self.ctx.require_same(&f.ctx)
    }

    /// The product in `S/I`: Littlewood–Richardson expansion, then straightening.
    pub fn multiply(&self, f: &QuotElem, g: &QuotElem) -> Result<QuotElem> {
        self.check(f)?;
        self.check(g)?;
        let k = self.ctx.k;
        let mut combination = SchurCombination::new();
        for (lambda, c1) in &f.terms {
            for (mu, c2) in &g.terms {
                let c = c1 * c2;
                for (rho, m) in schur_product_expand(lambda, mu, k).iter() {
                    debug_assert!(rho.part(0) <= 2 * self.ctx.width());
                    add_into(&mut combination, rho, &c.scale(&BigInt::from(m.clone())));
                }
            }
        }
        Ok(self.reduce(&combination))
    }

    /// `s̄_λ s̄_μ` for basis indices.
    pub fn multiply_basis(&self, lambda: &Partition, mu: &Partition) -> Result<QuotElem> {
        self.multiply(&self.basis_element(lambda)?, &self.basis_element(mu)?)
    }

    pub fn coeff(&self, f: &QuotElem, mu: &Partition) -> Result<APoly> {
        self.check(f)?;
        f.coeff(mu)
    }

    /// `g_{α,β,γ} = coeff_{γ^∨}(s̄_α s̄_β)`.
    pub fn structure_constant(&self, alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<APoly> {
        self.ctx.require_basis(gamma)?;
        let product = self.multiply_basis(alpha, beta)?;
        product.coeff(&self.ctx.complement(gamma)?)
    }

    /// All products `s̄_λ s̄_μ`, indexed by positions in [`QuotContext::basis`].
    /// Rows are evaluated in parallel.
    pub fn product_table(&self) -> Vec<Vec<QuotElem>> {
        let basis = self.ctx.basis();
        basis
            .par_iter()
            .map(|l| {
                basis
                    .iter()
                    .map(|m| self.multiply_basis(l, m).expect("basis elements"))
                    .collect()
            })
            .collect()
    }

    /// Checks `g_{α,β,γ}` against its five other orderings and against
    /// `coeff_ω(s̄_α s̄_β s̄_γ)` for every multiset `{α, β, γ} ⊆ P_{k,n}`.
    pub fn s3_report(&self) -> S3Report {
        let basis = self.ctx.basis();
        let table = self.product_table();
        let omega = self.ctx.omega();
        let comp: Vec<Partition> = basis.iter().map(|p| self.ctx.complement(p).unwrap()).collect();
        let g = |a: usize, b: usize, c: usize| table[a][b].coeff(&comp[c]).unwrap();
        let mut triples = Vec::new();
        for a in 0..basis.len() {
            for b in a..basis.len() {
                for c in b..basis.len() {
                    triples.push((a, b, c));
                }
            }
        }
        let counterexamples: Vec<S3Counterexample> = triples
            .par_iter()
            .filter_map(|&(a, b, c)| {
                let gamma = self.basis_element(&basis[c]).unwrap();
                let triple = self.multiply(&table[a][b], &gamma).unwrap().coeff(&omega).unwrap();
                let values = vec![g(a, b, c), g(a, c, b), g(b, a, c), g(b, c, a), g(c, a, b), g(c, b, a), triple];
                values.iter().any(|v| v != &values[0]).then(|| S3Counterexample {
                    alpha: basis[a].clone(),
                    beta: basis[b].clone(),
                    gamma: basis[c].clone(),
                    values,
                })
            })
            .collect();
        S3Report { ok: counterexamples.is_empty(), triples_checked: triples.len(), counterexamples }
    }

    /// Scans every `(λ, μ, ν) ∈ P_{k,n}^3` and checks that
    /// `(-1)^{|λ|+|μ|-|ν|} coeff_ν(s̄_λ s̄_μ)`, rewritten in
    /// `b_i = (-1)^{n-k-1} a_i`, has nonnegative integer coefficients.
    pub fn positivity_scan(&self) -> PositivityReport {
        let basis = self.ctx.basis();
        let table = self.product_table();
        // a_i = (-1)^{n-k-1} b_i: odd-degree monomials flip sign when n-k-1 is odd
        let flip = (self.ctx.n - self.ctx.k).is_multiple_of(2);
        let mut violations = Vec::new();
        let mut checked = 0;
        for (i, lambda) in basis.iter().enumerate() {
            for (j, mu) in basis.iter().enumerate() {
                for nu in &basis {
                    checked += 1;
                    let c = table[i][j].coeff(nu).unwrap();
                    if c.is_zero() {
                        continue;
                    }
                    let sign_odd = (lambda.size() + mu.size() + nu.size()) % 2 == 1;
                    let signed = if sign_odd { -c } else { c };
                    let in_b = signed.negate_parameters(flip);
                    if !in_b.has_nonnegative_coefficients() {
                        violations.push(PositivityViolation {
                            lambda: lambda.clone(),
                            mu: mu.clone(),
                            nu: nu.clone(),
                            in_b,
                        });
                    }
                }
            }
        }
        PositivityReport { ok: violations.is_empty(), coefficients_checked: checked, violations }
    }

    /// `s̄_λ h̄_j` for `0 ≤ j ≤ n-k`, from the closed Pieri formula
    ///
    /// `Σ_{μ ∈ P_{k,n}, μ/λ horizontal j-strip} s̄_μ
    ///   - Σ_i (-1)^i a_i Σ_{ν ⊆ λ} c^λ_{(n-k-j+1, 1^{i-1}), ν} s̄_ν`.
    pub fn pieri_h(&self, lambda: &Partition, j: usize) -> Result<QuotElem> {
        self.ctx.require_basis(lambda)?;
        let (k, width) = (self.ctx.k, self.ctx.width());
        if j > width {
            return Err(Error::Domain(format!("j = {j} exceeds n - k = {width}")));
        }
        let mut out = SchurCombination::new();
        let one = APoly::one(k);
        for_each_horizontal_strip(lambda, j, k, None, |mu, _| {
            if mu.part(0) <= width {
                add_into(&mut out, mu, &one);
            }
        });
        for i in 1..=k {
            let hook = Partition::hook(width - j + 1, i - 1);
            // -(-1)^i a_i
            let coeff = self.a(i).scale(&BigInt::from(if i % 2 == 0 { -1 } else { 1 }));
            for (nu, c) in skew_schur_expand(lambda, &hook) {
                add_into(&mut out, &nu, &coeff.scale(&BigInt::from(c)));
            }
        }
        Ok(QuotElem { ctx: self.ctx, terms: out })
    }

    /// `f · e_i`, via the dual Pieri rule and straightening.
    pub fn multiply_e(&self, f: &QuotElem, i: usize) -> Result<QuotElem> {
        self.check(f)?;
        let mut combination = SchurCombination::new();
        for (lambda, c) in &f.terms {
            for rho in vertical_strip_extensions(lambda, i, self.ctx.k) {
                add_into(&mut combination, &rho, c);
            }
        }
        Ok(self.reduce(&combination))
    }

    /// `f · h_j` for any `j ≥ 0`, via horizontal strips and straightening.
    pub fn multiply_h(&self, f: &QuotElem, j: usize) -> Result<QuotElem> {
        self.check(f)?;
        let mut combination = SchurCombination::new();
        for (lambda, c) in &f.terms {
            for_each_horizontal_strip(lambda, j, self.ctx.k, None, |rho, _| {
                add_into(&mut combination, rho, c);
            });
        }
        Ok(self.reduce(&combination))
    }

    /// `h̄_{n+m} = Σ_{j=0}^{k-1} (-1)^j a_{k-j} s̄_{(m,1^j)}` for `m ≥ 1`.
    pub fn reduce_h_overflow(&self, m: usize) -> Result<QuotElem> {
        if m == 0 {
            return Err(Error::Domain("m must be positive".into()));
        }
        let k = self.ctx.k;
        let mut combination = SchurCombination::new();
        for j in 0..k {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            add_into(&mut combination, &Partition::hook(m, j), &self.a(k - j).scale(&BigInt::from(sign)));
        }
        Ok(self.reduce(&combination))
    }
}

/// Applies a specialization coordinate-wise; zero coordinates are dropped.
pub fn specialize_elem(f: &QuotElem, s: &Specialization) -> Result<BTreeMap<Partition, QPoly>> {
    let mut out = BTreeMap::new();
    for (lambda, c) in f.terms() {
        let v = specialize(c, s)?;
        if !v.is_zero() {
            out.insert(lambda.clone(), v);
        }
    }
    Ok(out)
}

/// Renders a specialized element like `q*s[] + s[2,1]`, largest partition first.
pub fn render_specialized(terms: &BTreeMap<Partition, QPoly>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (lambda, c) in terms.iter().rev() {
        let tail = format!("s{lambda}");
        let (neg, body) = match c.constant_value() {
            Some(v) if v.is_one() => (false, tail),
            Some(v) if v == -BigInt::one() => (true, tail),
            Some(v) if v < BigInt::zero() => (true, format!("{}*{tail}", -v)),
            Some(v) => (false, format!("{v}*{tail}")),
            None => {
                let text = c.to_string();
                if c.coefficients().count() == 1 {
                    match text.strip_prefix('-') {
                        Some(rest) => (true, format!("{rest}*{tail}")),
                        None => (false, format!("{text}*{tail}")),
                    }
                } else {
                    (false, format!("({text})*{tail}"))
                }
            }
        };
        push_signed(&mut out, neg, &body);
    }
    out
}
