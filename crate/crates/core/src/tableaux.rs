//! Kostka numbers, Littlewood–Richardson coefficients and Pieri-type expansions.
//!
//! Everything here counts column-strict fillings built one letter at a time:
//! a semistandard tableau with letters `1..=r` is a chain of partitions in
//! which each step adds a horizontal strip. The Littlewood–Richardson rule
//! additionally asks the reverse reading word to be a lattice word, which is
//! checked row by row while a strip is being placed.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::combinatorics::{
    compositions, dominates, partitions_in_box, straighten_vector, IntVector, Partition,
    SignedStraightening,
};
use crate::error::{Error, Result};
use crate::memo::Memo;

/// Partition → nonnegative integer; zero values are never stored.
pub type NatCoeffMap = BTreeMap<Partition, BigUint>;

/// Partition → integer; zero values are never stored.
pub type SignedPartitionSum = BTreeMap<Partition, BigInt>;

/// Calls `visit` with every partition obtained from `shape` by adding a
/// horizontal strip of `size` boxes. `max_rows` caps the length and `bound`,
/// when present, must contain the result. The callback also receives the
/// number of boxes added to each row.
pub fn for_each_horizontal_strip(
    shape: &Partition,
    size: usize,
    max_rows: usize,
    bound: Option<&Partition>,
    mut visit: impl FnMut(&Partition, &[usize]),
) {
    let rows = (shape.len() + 1).min(max_rows);
    let cap: Vec<usize> = (0..rows)
        .map(|r| {
            let above = if r == 0 { usize::MAX } else { shape.part(r - 1) };
            let limit = bound.map_or(above, |b| above.min(b.part(r)));
            limit.saturating_sub(shape.part(r))
        })
        .collect();
    let mut added = vec![0usize; rows];
    fn rec(
        r: usize,
        rest: usize,
        cap: &[usize],
        added: &mut [usize],
        shape: &Partition,
        visit: &mut dyn FnMut(&Partition, &[usize]),
    ) {
        if r == cap.len() {
            if rest == 0 {
                let parts = (0..cap.len().max(shape.len()))
                    .map(|i| shape.part(i) + added.get(i).copied().unwrap_or(0))
                    .collect();
                visit(&Partition::from_sorted(parts), added);
            }
            return;
        }
        let tail: usize = cap[r + 1..].iter().sum();
        let lo = rest.saturating_sub(tail);
        for c in lo..=cap[r].min(rest) {
            added[r] = c;
            rec(r + 1, rest - c, cap, added, shape, visit);
        }
        added[r] = 0;
    }
    if shape.len() > max_rows || bound.is_some_and(|b| !b.contains(shape)) {
        return;
    }
    rec(0, size, &cap, &mut added, shape, &mut visit);
}

/// All partitions `ρ ⊇ λ` with at most `max_rows` parts such that `ρ/λ` is a
/// vertical strip of `size` boxes.
pub fn vertical_strip_extensions(lambda: &Partition, size: usize, max_rows: usize) -> Vec<Partition> {
    let rows = max_rows.max(lambda.len());
    row_subsets(rows, size)
        .into_iter()
        .filter_map(|chosen| {
            let parts: Vec<usize> = (0..rows).map(|r| lambda.part(r) + chosen[r]).collect();
            parts.windows(2).all(|w| w[0] >= w[1]).then(|| Partition::from_sorted(parts))
        })
        .collect()
}

/// All partitions `μ ⊆ λ` such that `λ/μ` is a vertical strip of `size` boxes.
pub fn vertical_strip_removals(lambda: &Partition, size: usize) -> Vec<Partition> {
    row_subsets(lambda.len(), size)
        .into_iter()
        .filter_map(|chosen| {
            let parts: Vec<usize> = lambda.parts().iter().zip(&chosen).map(|(p, c)| p - c).collect();
            parts.windows(2).all(|w| w[0] >= w[1]).then(|| Partition::from_sorted(parts))
        })
        .collect()
}

/// 0/1 vectors of length `rows` with `size` ones, ones-first lexicographic order.
fn row_subsets(rows: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(r: usize, rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let rows = cur.len();
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if rows - r < rest {
            return;
        }
        cur[r] = 1;
        rec(r + 1, rest - 1, cur, out);
        cur[r] = 0;
        rec(r + 1, rest, cur, out);
    }
    let mut out = Vec::new();
    rec(0, size, &mut vec![0; rows], &mut out);
    out
}

fn kostka_cache() -> &'static Memo<(Partition, Partition), BigUint> {
    static CACHE: OnceLock<Memo<(Partition, Partition), BigUint>> = OnceLock::new();
    CACHE.get_or_init(Memo::new)
}

/// `K_{λ,μ}`: the number of semistandard tableaux of shape `λ` and content `μ`.
pub fn kostka(lambda: &Partition, mu: &Partition) -> BigUint {
    if lambda.size() != mu.size() || !dominates(lambda, mu) {
        return BigUint::zero();
    }
    kostka_cache().get_or_insert_with(&(lambda.clone(), mu.clone()), || {
        kostka_content(lambda, mu.parts())
    })
}

/// Number of semistandard tableaux of shape `λ` whose letter `i+1` occurs
/// `content[i]` times. `content` need not be sorted.
pub fn kostka_content(lambda: &Partition, content: &[usize]) -> BigUint {
    if lambda.size() != content.iter().sum::<usize>() {
        return BigUint::zero();
    }
    // chains ∅ = ρ_0 ⊂ ρ_1 ⊂ ... ⊂ ρ_r = λ of horizontal strips, counted by DP over ρ_i
    let mut layer: HashMap<Partition, BigUint> = HashMap::new();
    layer.insert(Partition::empty(), BigUint::from(1u8));
    for &c in content {
        let mut next: HashMap<Partition, BigUint> = HashMap::new();
        for (shape, count) in &layer {
            for_each_horizontal_strip(shape, c, lambda.len(), Some(lambda), |rho, _| {
                *next.entry(rho.clone()).or_default() += count;
            });
        }
        layer = next;
    }
    layer.remove(lambda).unwrap_or_default()
}

/// Enumerates Littlewood–Richardson fillings of `ρ/μ` with content `ν`,
/// calling `visit(ρ)` once per filling. `max_rows` caps `ℓ(ρ)`; `bound`, when
/// present, must contain every intermediate shape.
fn for_each_lr_filling(
    mu: &Partition,
    nu: &Partition,
    max_rows: usize,
    bound: Option<&Partition>,
    visit: &mut dyn FnMut(&Partition),
) {
    fn rec(
        letter: usize,
        shape: &Partition,
        prev_rows: &[usize],
        nu: &Partition,
        max_rows: usize,
        bound: Option<&Partition>,
        visit: &mut dyn FnMut(&Partition),
    ) {
        if letter == nu.len() {
            visit(shape);
            return;
        }
        let mut children = Vec::new();
        for_each_horizontal_strip(shape, nu.part(letter), max_rows, bound, |rho, added| {
            // lattice condition: #(letter) in rows ≤ r must not exceed #(letter-1) in rows < r
            if letter > 0 {
                let (mut mine, mut theirs) = (0usize, 0usize);
                for (r, &c) in added.iter().enumerate() {
                    mine += c;
                    if mine > theirs {
                        return;
                    }
                    theirs += prev_rows.get(r).copied().unwrap_or(0);
                }
            }
            children.push((rho.clone(), added.to_vec()));
        });
        for (rho, added) in children {
            rec(letter + 1, &rho, &added, nu, max_rows, bound, visit);
        }
    }
    rec(0, mu, &[], nu, max_rows, bound, visit);
}

/// `c^λ_{μ,ν}`, the multiplicity of `s_λ` in `s_μ s_ν`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    if mu.size() + nu.size() != lambda.size()
        || !lambda.contains(mu)
        || !lambda.contains(nu)
        || !dominates(&mu.entrywise_sum(nu), lambda)
        || !dominates(lambda, &mu.union(nu))
    {
        return BigUint::zero();
    }
    static CACHE: OnceLock<Memo<(Partition, Partition, Partition), BigUint>> = OnceLock::new();
    let key = (lambda.clone(), mu.clone(), nu.clone());
    CACHE.get_or_init(Memo::new).get_or_insert_with(&key, || {
        let mut count = 0u64;
        for_each_lr_filling(mu, nu, lambda.len(), Some(lambda), &mut |rho| {
            if rho == lambda {
                count += 1;
            }
        });
        BigUint::from(count)
    })
}

fn product_cache() -> &'static Memo<(Partition, Partition, usize), Arc<NatCoeffMap>> {
    static CACHE: OnceLock<Memo<(Partition, Partition, usize), Arc<NatCoeffMap>>> = OnceLock::new();
    CACHE.get_or_init(Memo::new)
}

/// `s_μ s_ν` in `k` variables: `ρ ↦ c^ρ_{μ,ν}` for `ρ` with at most `k` parts.
pub fn schur_product_expand(mu: &Partition, nu: &Partition, k: usize) -> Arc<NatCoeffMap> {
    if mu.len() > k || nu.len() > k {
        return Arc::new(NatCoeffMap::new());
    }
    // c^ρ_{μ,ν} = c^ρ_{ν,μ}; filling the shorter partition is cheaper
    let (base, filler) = if (nu.len(), nu) <= (mu.len(), mu) { (mu, nu) } else { (nu, mu) };
    let key = (base.clone(), filler.clone(), k);
    product_cache().get_or_insert_with(&key, || {
        let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
        for_each_lr_filling(base, filler, k, None, &mut |rho| {
            *counts.entry(rho.clone()).or_default() += 1;
        });
        Arc::new(counts.into_iter().map(|(p, c)| (p, BigUint::from(c))).collect())
    })
}

/// `s_{λ/μ} = Σ_ν c^λ_{μ,ν} s_ν`.
pub fn skew_schur_expand(lambda: &Partition, mu: &Partition) -> NatCoeffMap {
    let mut out = NatCoeffMap::new();
    if !lambda.contains(mu) {
        return out;
    }
    let d = lambda.size() - mu.size();
    for nu in partitions_in_box(d, lambda.len(), lambda.part(0)) {
        let c = lr_coefficient(lambda, mu, &nu);
        if !c.is_zero() {
            out.insert(nu, c);
        }
    }
    out
}

/// `s_α h_m = Σ_{ν ∈ N^k, |ν| = m} s_{α+ν}`, each term rewritten with
/// [`straighten_vector`] and the signed multiplicities collected.
pub fn uncancelled_pieri(alpha: &IntVector, m: usize) -> Result<SignedPartitionSum> {
    let k = alpha.len();
    let shifted = alpha.add(&IntVector::staircase(k));
    if shifted.entries().iter().any(|&x| x < 0) {
        return Err(Error::Domain(format!("{alpha} + ρ has a negative entry")));
    }
    let mut out = SignedPartitionSum::new();
    for nu in compositions(m, k) {
        let nu = IntVector::new(nu.into_iter().map(|x| x as i64).collect());
        if let SignedStraightening::Term { sign, partition } = straighten_vector(&alpha.add(&nu)) {
            let e = out.entry(partition.clone()).or_default();
            *e += BigInt::from(sign);
            if e.is_zero() {
                out.remove(&partition);
            }
        }
    }
    Ok(out)
}
