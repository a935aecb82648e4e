//! Partitions, integer vectors, partial orders and strip predicates.
//!
//! A [`Partition`] stores its positive parts only; comparisons pad with zeros,
//! so `[2,1]` and `[2,1,0,0]` are the same object. The crate-wide canonical
//! order on partitions is by size first, then lexicographically descending
//! within a size. [`enumerate_pkn`] lists the box `P_{k,n}` in that order and
//! every matrix and JSON listing follows it.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing finite sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from weakly decreasing parts; trailing zeros are dropped.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Builds a partition from an arbitrary multiset of parts by sorting them.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    /// The rectangle `(width^height)`.
    pub fn rectangle(height: usize, width: usize) -> Self {
        if width == 0 {
            return Self::empty();
        }
        Partition { parts: vec![width; height] }
    }

    /// The hook `(arm, 1^leg)`; `arm` must be positive.
    pub fn hook(arm: usize, leg: usize) -> Self {
        assert!(arm > 0, "hook arm must be positive");
        let mut parts = vec![arm];
        parts.extend(std::iter::repeat_n(1, leg));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`, the number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The first `len` parts, zero-padded.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        (0..len).map(|i| self.part(i)).collect()
    }

    /// Whether the Young diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Whether `self ∈ P_{k,n}`: at most `k` parts, each at most `n - k`.
    pub fn fits_box(&self, k: usize, n: usize) -> bool {
        n >= k && self.len() <= k && self.part(0) <= n - k
    }

    /// Entrywise sum `μ + ν`.
    pub fn entrywise_sum(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        Partition::from_sorted((0..len).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// `μ ⊔ ν`: the concatenation of both part lists, sorted decreasingly.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// The same partition viewed as a vector of length `k`.
    pub fn to_vector(&self, k: usize) -> Result<IntVector> {
        if self.len() > k {
            return Err(Error::Domain(format!("{self} has more than {k} parts")));
        }
        Ok(IntVector::new(self.padded(k).into_iter().map(|p| p as i64).collect()))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `[]` or `[3,1]`. Whitespace around entries is tolerated; trailing
    /// zeros are dropped.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition {s:?} must be written like [3,1]")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// An element of `Z^k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(Vec<i64>);

impl IntVector {
    pub fn new(entries: Vec<i64>) -> Self {
        IntVector(entries)
    }

    pub fn zero(k: usize) -> Self {
        IntVector(vec![0; k])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|α|`, the sum of the entries.
    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Entrywise sum; panics on a length mismatch.
    pub fn add(&self, other: &IntVector) -> IntVector {
        assert_eq!(self.len(), other.len(), "vector lengths differ");
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// The staircase `ρ = (k-1, k-2, ..., 0)`.
    pub fn staircase(k: usize) -> IntVector {
        IntVector((0..k).rev().map(|i| i as i64).collect())
    }

    /// The vector as a partition, when it is weakly decreasing and nonnegative.
    pub fn as_partition(&self) -> Option<Partition> {
        if self.0.iter().any(|&x| x < 0) || self.0.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition::from_sorted(self.0.iter().map(|&x| x as usize).collect()))
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for IntVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("vector {s:?} must be written like (-6,1,0)")))?;
        if inner.trim().is_empty() {
            return Ok(IntVector(Vec::new()));
        }
        inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad vector entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(IntVector)
    }
}

/// Result of rewriting `s_α` for an arbitrary integer vector `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignedStraightening {
    Zero,
    /// `s_α = sign · s_λ`, with `sign ∈ {+1, -1}`.
    Term { sign: i8, partition: Partition },
}

/// Outcome of comparing two elements of a partial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartialComparison {
    Greater,
    Less,
    Equal,
    Incomparable,
}

/// Number of `k`-subsets of an `n`-set.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// All partitions of `size` with at most `max_len` parts, each at most
/// `max_part`, in lexicographically descending order.
pub fn partitions_in_box(size: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
    fn rec(
        rest: usize,
        slots: usize,
        cap: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 || cap * slots < rest {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, slots - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, max_len, max_part, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `size` with at most `max_len` parts.
pub fn partitions_with_len(size: usize, max_len: usize) -> Vec<Partition> {
    partitions_in_box(size, max_len, size)
}

/// The box `P_{k,n}` in canonical order (by size, then lexicographically descending).
pub fn enumerate_pkn(k: usize, n: usize) -> Result<Vec<Partition>> {
    if k > n {
        return Err(Error::InvalidParameters(format!("k = {k} exceeds n = {n}")));
    }
    let width = n - k;
    Ok((0..=k * width)
        .flat_map(|d| partitions_in_box(d, k, width))
        .collect())
}

/// `ν^∨ = (n-k-ν_k, ..., n-k-ν_1)`.
pub fn complement(nu: &Partition, k: usize, n: usize) -> Result<Partition> {
    if !nu.fits_box(k, n) {
        return Err(Error::Domain(format!("{nu} is not in P_{{{k},{n}}}")));
    }
    let width = n - k;
    Ok(Partition::from_sorted(
        (0..k).rev().map(|i| width - nu.part(i)).collect(),
    ))
}

/// The conjugate (transpose) partition.
pub fn conjugate(lambda: &Partition) -> Partition {
    let first = lambda.part(0);
    Partition::from_sorted(
        (1..=first)
            .map(|j| lambda.parts.iter().take_while(|&&p| p >= j).count())
            .collect(),
    )
}

/// Dominance `λ ⊵ μ`. Returns `false` when the sizes differ.
pub fn dominates(lambda: &Partition, mu: &Partition) -> bool {
    if lambda.size() != mu.size() {
        return false;
    }
    let len = lambda.len().max(mu.len());
    let (mut a, mut b) = (0usize, 0usize);
    for i in 0..len {
        a += lambda.part(i);
        b += mu.part(i);
        if a < b {
            return false;
        }
    }
    true
}

fn compare_by(geq: impl Fn(&Partition, &Partition) -> bool, l: &Partition, m: &Partition) -> PartialComparison {
    match (geq(l, m), geq(m, l)) {
        (true, true) => PartialComparison::Equal,
        (true, false) => PartialComparison::Greater,
        (false, true) => PartialComparison::Less,
        (false, false) => PartialComparison::Incomparable,
    }
}

/// The size-then-antidominance order: `λ ≥* μ` iff `|λ| > |μ|`, or the sizes
/// agree and `μ ⊵ λ`.
pub fn cmp_size_antidominance(lambda: &Partition, mu: &Partition) -> PartialComparison {
    compare_by(
        |l, m| l.size() > m.size() || (l.size() == m.size() && dominates(m, l)),
        lambda,
        mu,
    )
}

/// The graded dominance order: `λ ≥_* μ` iff `|λ| = |μ|` and `λ ⊵ μ`.
pub fn cmp_graded_dominance(lambda: &Partition, mu: &Partition) -> PartialComparison {
    compare_by(dominates, lambda, mu)
}

/// Whether `λ/μ` is a horizontal `j`-strip (at most one box per column).
pub fn is_horizontal_strip(lambda: &Partition, mu: &Partition, j: usize) -> bool {
    lambda.contains(mu)
        && lambda.size() - mu.size() == j
        && (0..lambda.len()).all(|i| lambda.part(i + 1) <= mu.part(i))
}

/// Whether `λ/μ` is a vertical `i`-strip (at most one box per row).
pub fn is_vertical_strip(lambda: &Partition, mu: &Partition, i: usize) -> bool {
    lambda.contains(mu)
        && lambda.size() - mu.size() == i
        && (0..lambda.len()).all(|r| lambda.part(r) - mu.part(r) <= 1)
}

/// Rewrites the Jacobi–Trudi determinant `s_α` for `α ∈ Z^k` as zero or `±s_λ`.
///
/// With `β = α + ρ`, the result is zero if `β` has a negative or repeated
/// entry; otherwise `σ` sorts `β` strictly decreasingly and `λ = σ(β) - ρ`.
pub fn straighten_vector(alpha: &IntVector) -> SignedStraightening {
    let k = alpha.len();
    let beta: Vec<i64> = alpha
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &a)| a + (k - 1 - i) as i64)
        .collect();
    if beta.iter().any(|&b| b < 0) {
        return SignedStraightening::Zero;
    }
    let mut inversions = 0usize;
    for i in 0..k {
        for j in i + 1..k {
            match beta[i].cmp(&beta[j]) {
                Ordering::Equal => return SignedStraightening::Zero,
                Ordering::Less => inversions += 1,
                Ordering::Greater => {}
            }
        }
    }
    let mut sorted = beta;
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let parts = sorted
        .iter()
        .enumerate()
        .map(|(i, &b)| (b - (k - 1 - i) as i64) as usize)
        .collect();
    SignedStraightening::Term {
        sign: if inversions.is_multiple_of(2) { 1 } else { -1 },
        partition: Partition::from_sorted(parts),
    }
}

/// The rim-hook direction set: all `(-n, τ_2, ..., τ_k)` with `τ_i ∈ {0, 1}`.
///
/// Ordered by the binary number `τ_2 τ_3 ... τ_k`.
pub fn enumerate_v_set(k: usize, n: usize) -> Vec<IntVector> {
    if k == 0 {
        return Vec::new();
    }
    let free = k - 1;
    (0..1u64 << free)
        .map(|mask| {
            let mut v = Vec::with_capacity(k);
            v.push(-(n as i64));
            for i in 0..free {
                v.push(((mask >> (free - 1 - i)) & 1) as i64);
            }
            IntVector(v)
        })
        .collect()
}

/// All `ν ∈ N^k` with `|ν| = m`, in lexicographically descending order.
pub fn compositions(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for p in (0..=rest).rev() {
            cur.push(p);
            rec(rest - p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if m == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(m, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn pkn_small_examples() {
        let got: Vec<String> = enumerate_pkn(2, 4).unwrap().iter().map(|x| x.to_string()).collect();
        assert_eq!(got, ["[]", "[1]", "[2]", "[1,1]", "[2,1]", "[2,2]"]);
        let p25 = enumerate_pkn(2, 5).unwrap();
        assert_eq!(p25.len(), 10);
        for s in ["[]", "[1]", "[2]", "[1,1]", "[3]", "[2,1]", "[3,1]", "[2,2]", "[3,2]", "[3,3]"] {
            assert!(p25.contains(&p(s)), "{s}");
        }
        assert_eq!(enumerate_pkn(0, 3).unwrap(), vec![Partition::empty()]);
        assert!(matches!(enumerate_pkn(3, 2), Err(Error::InvalidParameters(_))));
    }

    #[test]
    fn pkn_is_sorted_by_canonical_order() {
        let v = enumerate_pkn(3, 7).unwrap();
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&p("[]"), 3, 6).unwrap(), p("[3,3,3]"));
        assert_eq!(complement(&p("[3,3,3]"), 3, 6).unwrap(), p("[]"));
        assert_eq!(complement(&p("[3,1]"), 3, 6).unwrap(), p("[3,2]"));
        assert!(complement(&p("[4]"), 3, 6).is_err());
        assert!(complement(&p("[1,1,1,1]"), 3, 6).is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&p("[]")), p("[]"));
        assert_eq!(conjugate(&p("[3,1]")), p("[2,1,1]"));
        assert_eq!(conjugate(&p("[4]")), p("[1,1,1,1]"));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&p("[2,1]"), &p("[1,1,1]")));
        assert!(dominates(&p("[3,1]"), &p("[2,2]")));
        assert!(!dominates(&p("[2,2]"), &p("[3,1]")));
        assert!(!dominates(&p("[2]"), &p("[1]")));
    }

    #[test]
    fn order_examples() {
        use PartialComparison::*;
        assert_eq!(cmp_size_antidominance(&p("[2,1]"), &p("[1]")), Greater);
        assert_eq!(cmp_size_antidominance(&p("[1,1,1]"), &p("[2,1]")), Greater);
        assert_eq!(cmp_size_antidominance(&p("[3,1]"), &p("[2,2]")), Less);
        assert_eq!(cmp_graded_dominance(&p("[2,1]"), &p("[1,1,1]")), Greater);
        assert_eq!(cmp_graded_dominance(&p("[2]"), &p("[1]")), Incomparable);
        assert_eq!(cmp_graded_dominance(&p("[2,1]"), &p("[2,1]")), Equal);
        assert_eq!(cmp_graded_dominance(&p("[3,1,1,1]"), &p("[2,2,2]")), Incomparable);
    }

    #[test]
    fn strip_examples() {
        assert!(is_horizontal_strip(&p("[3,1]"), &p("[1]"), 3));
        assert!(!is_horizontal_strip(&p("[2,2]"), &p("[1]"), 3));
        assert!(is_horizontal_strip(&p("[2,1]"), &p("[2,1]"), 0));
        assert!(is_vertical_strip(&p("[2,1]"), &p("[1]"), 2));
        assert!(!is_vertical_strip(&p("[3,1]"), &p("[1]"), 3));
        assert!(is_vertical_strip(&p("[2,1]"), &p("[2,1]"), 0));
        assert!(!is_vertical_strip(&p("[1]"), &p("[2]"), 0));
    }

    #[test]
    fn straighten_vector_examples() {
        let v = |s: &str| s.parse::<IntVector>().unwrap();
        assert_eq!(
            straighten_vector(&v("(0,2,1)")),
            SignedStraightening::Term { sign: -1, partition: p("[1,1,1]") }
        );
        assert_eq!(straighten_vector(&v("(-2,2,3)")), SignedStraightening::Zero);
        assert_eq!(
            straighten_vector(&v("(-2,4,1)")),
            SignedStraightening::Term { sign: 1, partition: p("[3]") }
        );
        assert_eq!(
            straighten_vector(&v("(-1,5,2)")),
            SignedStraightening::Term { sign: 1, partition: p("[4,1,1]") }
        );
        assert_eq!(straighten_vector(&v("(-1,5,1)")), SignedStraightening::Zero);
    }

    #[test]
    fn v_set_examples() {
        let v: Vec<String> = enumerate_v_set(3, 6).iter().map(|x| x.to_string()).collect();
        assert_eq!(v, ["(-6,0,0)", "(-6,0,1)", "(-6,1,0)", "(-6,1,1)"]);
        assert_eq!(enumerate_v_set(1, 4), vec![IntVector::new(vec![-4])]);
        for tau in enumerate_v_set(3, 6) {
            assert!((4..=6).contains(&-tau.sum()));
        }
    }

    #[test]
    fn text_forms() {
        assert_eq!(p("[ 3, 1 ]").to_string(), "[3,1]");
        assert_eq!(p("[2,0]").to_string(), "[2]");
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
        assert!("[-1]".parse::<Partition>().is_err());
        assert_eq!("(-6,1,0)".parse::<IntVector>().unwrap().to_string(), "(-6,1,0)");
        let json = serde_json::to_string(&p("[3,1]")).unwrap();
        assert_eq!(json, "[3,1]");
        assert_eq!(serde_json::from_str::<Partition>("[3,1]").unwrap(), p("[3,1]"));
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(2, 3).len(), 6);
        assert_eq!(compositions(0, 2), vec![vec![0, 0]]);
        assert_eq!(compositions(4, 1), vec![vec![4]]);
    }
}
