//! Independent oracles shared by the integration tests.
//!
//! Nothing here goes through the quotient's straightening or the
//! Littlewood–Richardson machinery: Schur polynomials come from the
//! bialternant formula, and symmetric polynomials are decomposed into Schur
//! polynomials by peeling off leading monomials.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use symquot::grobner::{complete_homogeneous, elementary};
use symquot::{APoly, Partition, QuotContext, QuotElem, XMonomial, XPoly};

pub fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// Parses `"2*a1*s[2,1] - a2*s[1,1] + s[]"` in any term order.
pub fn elem(ctx: QuotContext, text: &str) -> QuotElem {
    let k = ctx.k();
    let mut terms = Vec::new();
    let mut rest = text.trim().to_string();
    if !rest.starts_with('-') {
        rest.insert_str(0, "+ ");
    } else {
        rest.insert(1, ' ');
    }
    let tokens: Vec<&str> = rest.split_whitespace().collect();
    for pair in tokens.chunks(2) {
        let (sign, body) = (pair[0], pair[1]);
        let at = body.find("s[").expect("term needs a Schur index");
        let lambda = p(&body[at + 1..]);
        let coeff = body[..at].trim_end_matches('*');
        let mut c = if coeff.is_empty() { APoly::one(k) } else { APoly::parse(k, coeff).unwrap() };
        if sign == "-" {
            c = -c;
        }
        terms.push((lambda, c));
    }
    QuotElem::from_terms(ctx, terms).unwrap()
}

pub fn int_poly(k: usize, terms: &[(Vec<u32>, i64)]) -> XPoly {
    let mut out = XPoly::zero(k);
    for (e, c) in terms {
        out = &out + &XPoly::term(APoly::constant(k, *c), XMonomial::new(e.clone()));
    }
    out
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, odd: bool, out: &mut Vec<(Vec<usize>, bool)>) {
        let n = used.len();
        if prefix.len() == n {
            out.push((prefix.clone(), odd));
            return;
        }
        for i in 0..n {
            if used[i] {
                continue;
            }
            // unused values smaller than i end up after it
            let inversions = used[..i].iter().filter(|u| !**u).count();
            used[i] = true;
            prefix.push(i);
            rec(prefix, used, odd ^ (inversions % 2 == 1), out);
            prefix.pop();
            used[i] = false;
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], false, &mut out);
    out
}

/// Determinant by the Leibniz formula.
pub fn det(m: &[Vec<XPoly>], k: usize) -> XPoly {
    let mut out = XPoly::zero(k);
    for (sigma, odd) in permutations(m.len()) {
        let mut term = XPoly::one(k);
        for (row, &col) in sigma.iter().enumerate() {
            term = &term * &m[row][col];
        }
        out = if odd { &out - &term } else { &out + &term };
    }
    out
}

/// `a_α = det(x_i^{α_j})`.
pub fn alternant(alpha: &[u32]) -> XPoly {
    let k = alpha.len();
    let m: Vec<Vec<XPoly>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let mut e = vec![0; k];
                    e[i] = alpha[j];
                    XPoly::monomial(XMonomial::new(e))
                })
                .collect()
        })
        .collect();
    det(&m, k)
}

pub fn rho(k: usize) -> Vec<u32> {
    (0..k as u32).rev().collect()
}

/// Exact division of integer-coefficient polynomials by repeated removal of
/// the deglex-leading term.
pub fn div_exact(num: &XPoly, den: &XPoly) -> XPoly {
    let k = num.nvars();
    let (dm, dc) = den.terms().next().map(|(m, c)| (m.clone(), c.clone())).expect("nonzero divisor");
    let dc = dc.constant_value().expect("integer divisor");
    let mut rest = num.clone();
    let mut q = XPoly::zero(k);
    loop {
        let Some((m, c)) = rest.terms().next().map(|(m, c)| (m.clone(), c.clone())) else { break };
        let c = c.constant_value().expect("integer dividend");
        assert!((&c % &dc).is_zero(), "inexact division");
        let e: Vec<u32> = m
            .exponents()
            .iter()
            .zip(dm.exponents())
            .map(|(a, b)| a.checked_sub(*b).expect("inexact division"))
            .collect();
        let t = XPoly::term(APoly::constant(k, c / &dc), XMonomial::new(e));
        rest = &rest - &(&t * den);
        q = &q + &t;
    }
    q
}

/// `s_λ(x_1..x_k) = a_{λ+ρ} / a_ρ`; zero when `λ` has more than `k` parts.
pub fn bialternant_schur(lambda: &Partition, k: usize) -> XPoly {
    if lambda.len() > k {
        return XPoly::zero(k);
    }
    let r = rho(k);
    let shifted: Vec<u32> = (0..k).map(|i| lambda.part(i) as u32 + r[i]).collect();
    div_exact(&alternant(&shifted), &alternant(&r))
}

/// `h_m` in all `k` variables, zero for negative `m`.
pub fn h(k: usize, m: i64) -> XPoly {
    if m < 0 {
        XPoly::zero(k)
    } else {
        complete_homogeneous(k, m as usize, 1..=k)
    }
}

/// `e_m` in all `k` variables, zero for negative `m`.
pub fn e(k: usize, m: i64) -> XPoly {
    if m < 0 {
        XPoly::zero(k)
    } else {
        elementary(k, m as usize, 1..=k)
    }
}

/// `det(h_{λ_u - u + v})`.
pub fn jacobi_trudi(lambda: &Partition, k: usize) -> XPoly {
    let l = lambda.len();
    let m: Vec<Vec<XPoly>> = (0..l)
        .map(|u| (0..l).map(|v| h(k, lambda.part(u) as i64 - u as i64 + v as i64)).collect())
        .collect();
    if l == 0 {
        return XPoly::one(k);
    }
    det(&m, k)
}

/// `det(e_{λ_u - u + v})`, which is `s_{λ^t}`.
pub fn dual_jacobi_trudi(lambda: &Partition, k: usize) -> XPoly {
    let l = lambda.len();
    if l == 0 {
        return XPoly::one(k);
    }
    let m: Vec<Vec<XPoly>> = (0..l)
        .map(|u| (0..l).map(|v| e(k, lambda.part(u) as i64 - u as i64 + v as i64)).collect())
        .collect();
    det(&m, k)
}

/// Writes a symmetric integer polynomial in the Schur basis: the
/// lexicographically largest monomial `x^λ` of a symmetric polynomial has
/// `λ` a partition, and `s_λ` has leading monomial `x^λ` with coefficient 1.
pub fn schur_decompose(f: &XPoly) -> BTreeMap<Partition, BigInt> {
    let k = f.nvars();
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while !rest.is_zero() {
        let (m, c) = rest
            .terms()
            .max_by(|(a, _), (b, _)| a.exponents().cmp(b.exponents()))
            .map(|(m, c)| (m.clone(), c.constant_value().expect("integer coefficients")))
            .unwrap();
        let parts: Vec<usize> = m.exponents().iter().map(|&e| e as usize).collect();
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "not symmetric");
        let lambda = Partition::from_unsorted(parts);
        let s = bialternant_schur(&lambda, k);
        rest = &rest - &s.scale(&APoly::constant(k, c.clone()));
        out.insert(lambda, c);
    }
    out
}

pub fn one_if(b: bool) -> BigInt {
    if b {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}
