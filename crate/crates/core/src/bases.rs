//! The `h`, `m`, `e^t`, `p` and `h^t` families of `S/I` written in the
//! Schur basis, their change-of-basis matrices, and basis classification.
//!
//! The quotient is graded with `deg x_i = 1` and `deg a_i = n-k+i`, so every
//! change-of-basis matrix (rows and columns sorted by size) is block lower
//! triangular with integer diagonal blocks. Determinants are nevertheless
//! computed symbolically, by fraction-free elimination over `Z[a]`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::coeffring::APoly;
use crate::combinatorics::{
    cmp_graded_dominance, cmp_size_antidominance, conjugate, partitions_with_len, PartialComparison,
    Partition,
};
use crate::error::{Error, Result};
use crate::quotient::{QuotContext, QuotElem, QuotientRing, SchurCombination};
use crate::tableaux::{kostka, kostka_content};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BasisFamily {
    /// `h̄_λ`
    H,
    /// `m̄_λ`
    M,
    /// `ē_{λ^t}`
    ETranspose,
    /// `p̄_λ`
    P,
    /// `h̄_{λ^t}`
    HTranspose,
}

impl BasisFamily {
    pub const ALL: [BasisFamily; 5] =
        [BasisFamily::H, BasisFamily::M, BasisFamily::ETranspose, BasisFamily::P, BasisFamily::HTranspose];

    /// Short name used on the command line: `h`, `m`, `e`, `p`, `ht`.
    pub fn short_name(self) -> &'static str {
        match self {
            BasisFamily::H => "h",
            BasisFamily::M => "m",
            BasisFamily::ETranspose => "e",
            BasisFamily::P => "p",
            BasisFamily::HTranspose => "ht",
        }
    }
}

impl fmt::Display for BasisFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for BasisFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BasisFamily::ALL
            .into_iter()
            .find(|f| f.short_name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}; expected h, m, e, p or ht")))
    }
}

/// `h_{c_1} h_{c_2} ⋯` for any list of nonnegative integers, in `S/I`.
pub fn h_product(ring: &QuotientRing, content: &[usize]) -> QuotElem {
    let k = ring.k();
    let size: usize = content.iter().sum();
    let combination: SchurCombination = partitions_with_len(size, k)
        .into_iter()
        .filter_map(|mu| {
            let c = kostka_content(&mu, content);
            (!c.is_zero()).then(|| (mu, APoly::constant(k, BigInt::from(c))))
        })
        .collect();
    ring.reduce(&combination)
}

/// `h̄_λ`, from `h_λ = Σ_μ K_{μ,λ} s_μ` followed by straightening.
pub fn expand_h(ring: &QuotientRing, lambda: &Partition) -> Result<QuotElem> {
    require_basis(ring, lambda)?;
    Ok(h_product(ring, lambda.parts()))
}

/// `h̄_{λ^t}`. The transpose may leave the box; the Kostka expansion does not care.
pub fn expand_h_conj(ring: &QuotientRing, lambda: &Partition) -> Result<QuotElem> {
    require_basis(ring, lambda)?;
    Ok(h_product(ring, conjugate(lambda).parts()))
}

/// `ē_{λ^t}`, one dual Pieri step per part of `λ^t`.
pub fn expand_e_conj(ring: &QuotientRing, lambda: &Partition) -> Result<QuotElem> {
    require_basis(ring, lambda)?;
    let mut out = ring.one();
    for &c in conjugate(lambda).parts() {
        out = ring.multiply_e(&out, c)?;
    }
    Ok(out)
}

type InverseKostka = Arc<BTreeMap<Partition, BTreeMap<Partition, BigInt>>>;

/// Inverse Kostka matrix on partitions of `d` with at most `k` parts:
/// `m_λ = Σ_μ inv[λ][μ] s_μ`. Rows are sparse maps.
fn inverse_kostka(d: usize, k: usize) -> InverseKostka {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), InverseKostka>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("cache lock").get(&(d, k)) {
        return t.clone();
    }
    // `partitions_with_len` lists lexicographically descending, a linear
    // extension of dominance, so K[μ][ν] = 0 unless μ comes no later than ν.
    let parts = partitions_with_len(d, k);
    let mut inv: BTreeMap<Partition, BTreeMap<Partition, BigInt>> = BTreeMap::new();
    // s_λ = m_λ + Σ_{ν after λ} K_{λ,ν} m_ν, solved from the end of the list
    for (i, lambda) in parts.iter().enumerate().rev() {
        let mut row: BTreeMap<Partition, BigInt> = BTreeMap::new();
        row.insert(lambda.clone(), BigInt::one());
        for nu in &parts[i + 1..] {
            let c = kostka(lambda, nu);
            if c.is_zero() {
                continue;
            }
            let c = BigInt::from(c);
            for (mu, v) in &inv[nu] {
                let e = row.entry(mu.clone()).or_default();
                *e -= &c * v;
            }
        }
        row.retain(|_, v| !v.is_zero());
        inv.insert(lambda.clone(), row);
    }
    let table = Arc::new(inv);
    cache.lock().expect("cache lock").insert((d, k), table.clone());
    table
}

/// `m̄_λ`, by inverting the Kostka matrix on partitions of `|λ|` with at most
/// `k` parts and straightening.
pub fn expand_m(ring: &QuotientRing, lambda: &Partition) -> Result<QuotElem> {
    require_basis(ring, lambda)?;
    let inv = inverse_kostka(lambda.size(), ring.k());
    Ok(ring.reduce_integral(inv[lambda].iter().map(|(mu, c)| (mu, c.clone()))))
}

/// `p_r = Σ_{j=0}^{min(r,k)-1} (-1)^j s_{(r-j, 1^j)}` in `S/I`, for `r ≥ 1`.
pub fn power_sum_image(ring: &QuotientRing, r: usize) -> QuotElem {
    assert!(r >= 1);
    let combination: Vec<(Partition, BigInt)> = (0..r.min(ring.k()))
        .map(|j| (Partition::hook(r - j, j), BigInt::from(if j % 2 == 0 { 1 } else { -1 })))
        .collect();
    ring.reduce_integral(combination.iter().map(|(p, c)| (p, c.clone())))
}

/// `p̄_λ = p̄_{λ_1} p̄_{λ_2} ⋯`.
pub fn expand_p(ring: &QuotientRing, lambda: &Partition) -> Result<QuotElem> {
    require_basis(ring, lambda)?;
    let mut out = ring.one();
    for &r in lambda.parts().iter().rev() {
        out = ring.multiply(&out, &power_sum_image(ring, r))?;
    }
    Ok(out)
}

/// The image of the family element indexed by `λ`.
pub fn expand(ring: &QuotientRing, family: BasisFamily, lambda: &Partition) -> Result<QuotElem> {
    match family {
        BasisFamily::H => expand_h(ring, lambda),
        BasisFamily::M => expand_m(ring, lambda),
        BasisFamily::ETranspose => expand_e_conj(ring, lambda),
        BasisFamily::P => expand_p(ring, lambda),
        BasisFamily::HTranspose => expand_h_conj(ring, lambda),
    }
}

fn require_basis(ring: &QuotientRing, lambda: &Partition) -> Result<()> {
    if ring.context().contains(lambda) {
        Ok(())
    } else {
        Err(Error::Domain(format!("{lambda} is not in P_{{{},{}}}", ring.k(), ring.n())))
    }
}

/// A square matrix over `Z[a]` indexed by `P_{k,n}` in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisMatrix {
    ctx: QuotContext,
    index: Vec<Partition>,
    entries: Vec<Vec<APoly>>,
}

impl BasisMatrix {
    pub fn context(&self) -> QuotContext {
        self.ctx
    }

    pub fn index(&self) -> &[Partition] {
        &self.index
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &APoly {
        &self.entries[row][col]
    }

    pub fn rows(&self) -> &[Vec<APoly>] {
        &self.entries
    }

    /// The determinant, by Bareiss elimination over `Z[a]`.
    pub fn determinant(&self) -> APoly {
        determinant(self.entries.clone(), self.ctx.k())
    }

    fn from_elements(ctx: QuotContext, rows: Vec<QuotElem>) -> Self {
        let index = ctx.basis();
        let entries = rows
            .iter()
            .map(|f| index.iter().map(|mu| f.coeff(mu).expect("basis index")).collect())
            .collect();
        BasisMatrix { ctx, index, entries }
    }
}

/// Row `λ` holds the expansion of the family element indexed by `λ` in the
/// Schur basis. Rows are computed in parallel.
pub fn change_of_basis_matrix(ring: &QuotientRing, family: BasisFamily) -> BasisMatrix {
    let ctx = ring.context();
    let rows: Vec<QuotElem> = ctx
        .basis()
        .par_iter()
        .map(|lambda| expand(ring, family, lambda).expect("basis index"))
        .collect();
    BasisMatrix::from_elements(ctx, rows)
}

/// The Kostka matrix restricted to `P_{k,n}`: row `λ` is `s̄_λ = Σ_μ K_{λ,μ} m̄_μ`.
pub fn s_to_m_matrix(ctx: QuotContext) -> BasisMatrix {
    let index = ctx.basis();
    let k = ctx.k();
    let entries = index
        .iter()
        .map(|l| index.iter().map(|m| APoly::constant(k, BigInt::from(kostka(l, m)))).collect())
        .collect();
    BasisMatrix { ctx, index, entries }
}

/// Which triangularity theorem to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Triangularity {
    /// `h̄_λ` in terms of `s̄`, under the size-then-antidominance order.
    HToS,
    /// `s̄_λ` in terms of `m̄`, under graded dominance.
    SToM,
}

/// Whether the matrix is unitriangular for the relevant order: unit
/// diagonal, and every nonzero off-diagonal entry at `(λ, μ)` has `μ < λ`.
pub fn unitriangularity_check(ring: &QuotientRing, which: Triangularity) -> bool {
    let (matrix, cmp): (BasisMatrix, fn(&Partition, &Partition) -> PartialComparison) = match which {
        Triangularity::HToS => (change_of_basis_matrix(ring, BasisFamily::H), cmp_size_antidominance),
        Triangularity::SToM => (s_to_m_matrix(ring.context()), cmp_graded_dominance),
    };
    let idx = matrix.index();
    (0..idx.len()).all(|r| {
        (0..idx.len()).all(|c| {
            let e = matrix.entry(r, c);
            if r == c {
                e.is_one()
            } else {
                e.is_zero() || cmp(&idx[c], &idx[r]) == PartialComparison::Less
            }
        })
    })
}

/// Fraction-free Gaussian elimination. Pivots are chosen to keep entries
/// small: constants first, then fewest terms.
pub fn determinant(mut m: Vec<Vec<APoly>>, nvars: usize) -> APoly {
    let n = m.len();
    let mut sign = false;
    let mut prev = APoly::one(nvars);
    for col in 0..n {
        let cost = |p: &APoly| (p.degree().unwrap_or(0), p.num_terms());
        let pivot = (col..n)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| cost(&m[r][col]));
        let Some(p) = pivot else {
            return APoly::zero(nvars);
        };
        if p != col {
            m.swap(p, col);
            sign = !sign;
        }
        let (top, rest) = m.split_at_mut(col + 1);
        let pivot_row = &top[col];
        rest.par_iter_mut().for_each(|row| {
            let factor = row[col].clone();
            for j in col + 1..n {
                let mut v = &pivot_row[col] * &row[j];
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    v = &v - &(&factor * &pivot_row[j]);
                }
                row[j] = if prev.is_one() {
                    v
                } else {
                    v.div_exact(&prev).expect("Bareiss quotients are exact")
                };
            }
            row[col] = APoly::zero(nvars);
        });
        prev = m[col][col].clone();
    }
    if sign {
        -prev
    } else {
        prev
    }
}

/// Outcome of [`classify_family`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// The determinant is `±1`.
    Yes,
    /// The determinant is zero.
    No,
    /// The determinant is an integer `d` with `|d| > 1`: a basis exactly
    /// when the characteristic does not divide `d`.
    CharDependent(BigInt),
    /// The determinant involves the parameters.
    ADependent(APoly),
}

impl Classification {
    /// `yes`, `no`, `st(d)` or `a-dep`.
    pub fn label(&self) -> String {
        match self {
            Classification::Yes => "yes".into(),
            Classification::No => "no".into(),
            Classification::CharDependent(d) => format!("st({d})"),
            Classification::ADependent(_) => "a-dep".into(),
        }
    }

    /// The bare cell label: `yes`, `no` or `st`.
    pub fn short_label(&self) -> &'static str {
        match self {
            Classification::Yes => "yes",
            Classification::No => "no",
            Classification::CharDependent(_) => "st",
            Classification::ADependent(_) => "a-dep",
        }
    }
}

impl Serialize for Classification {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.label())
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Classifies a determinant of a change-of-basis matrix.
pub fn classify_determinant(d: &APoly) -> Classification {
    match d.constant_value() {
        Some(c) if c.is_zero() => Classification::No,
        Some(c) if c.abs().is_one() => Classification::Yes,
        Some(c) => Classification::CharDependent(c.abs()),
        None if d.is_zero() => Classification::No,
        None => Classification::ADependent(d.clone()),
    }
}

/// Whether the family is a basis of `S/I`, decided from the determinant of
/// its change-of-basis matrix.
pub fn classify_family(ring: &QuotientRing, family: BasisFamily) -> Classification {
    classify_determinant(&change_of_basis_matrix(ring, family).determinant())
}
