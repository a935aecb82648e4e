mod common;

use std::collections::BTreeMap;

use common::{bialternant_schur, p, schur_decompose};
use num_bigint::BigInt;
use num_traits::Zero;
use symquot::bases::{
    self, change_of_basis_matrix, classify_family, determinant, power_sum_image, s_to_m_matrix, BasisFamily,
    Classification,
};
use symquot::combinatorics::{conjugate, dominates, partitions_with_len, Partition};
use symquot::grobner::{complete_homogeneous, power_sum, schur_xpoly, GroebnerBasis};
use symquot::quotient::specialize_elem;
use symquot::tableaux::{kostka, lr_coefficient, schur_product_expand, skew_schur_expand};
use symquot::{specialize, APoly, QuotContext, QuotientRing, Specialization, XMonomial, XPoly};

fn all_partitions(max_size: usize, max_len: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(|d| partitions_with_len(d, max_len)).collect()
}

// ---- quotient ----

#[test]
fn multiplication_is_commutative_and_associative() {
    for (k, n) in [(2, 4), (2, 5), (3, 6)] {
        let ring = QuotientRing::new(k, n).unwrap();
        let basis = ring.context().basis();
        let table = ring.product_table();
        for (i, a) in basis.iter().enumerate() {
            assert_eq!(ring.multiply(&ring.one(), &ring.basis_element(a).unwrap()).unwrap(), ring.basis_element(a).unwrap());
            for (j, _) in basis.iter().enumerate() {
                assert_eq!(table[i][j], table[j][i]);
                for c in &basis {
                    let gamma = ring.basis_element(c).unwrap();
                    let left = ring.multiply(&table[i][j], &gamma).unwrap();
                    let bc = ring.multiply(&ring.basis_element(&basis[j]).unwrap(), &gamma).unwrap();
                    let right = ring.multiply(&ring.basis_element(a).unwrap(), &bc).unwrap();
                    assert_eq!(left, right, "k={k} n={n}");
                }
            }
        }
    }
}

#[test]
fn omega_duality_and_coeff_omega() {
    for n in 1..=6 {
        for k in 1..=n {
            let ring = QuotientRing::new(k, n).unwrap();
            let c = ring.context();
            let omega = c.omega();
            let basis = c.basis();
            let table = ring.product_table();
            for (i, l) in basis.iter().enumerate() {
                for (j, m) in basis.iter().enumerate() {
                    let got = table[i][j].coeff(&omega).unwrap();
                    let want = APoly::constant(k, common::one_if(*l == c.complement(m).unwrap()));
                    assert_eq!(got, want, "k={k} n={n} {l} {m}");
                    // coeff_ω(s̄_ν f) = coeff_{ν∨}(f) for f = s̄_m s̄_l
                    for nu in basis.iter().take(6) {
                        let lhs = ring.multiply(&ring.basis_element(nu).unwrap(), &table[i][j]).unwrap();
                        assert_eq!(
                            lhs.coeff(&omega).unwrap(),
                            table[i][j].coeff(&c.complement(nu).unwrap()).unwrap()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn pieri_matches_multiplication() {
    for n in 1..=6 {
        for k in 1..=n {
            let ring = QuotientRing::new(k, n).unwrap();
            for lambda in ring.context().basis() {
                for j in 0..=n - k {
                    let fast = ring.pieri_h(&lambda, j).unwrap();
                    let row = if j == 0 { Partition::empty() } else { Partition::new(vec![j]).unwrap() };
                    let slow = ring.multiply_basis(&lambda, &row).unwrap();
                    assert_eq!(fast, slow, "k={k} n={n} {lambda} h{j}");
                    assert_eq!(fast, ring.multiply_h(&ring.basis_element(&lambda).unwrap(), j).unwrap());
                }
            }
        }
    }
}

#[test]
fn pieri_last_column_example() {
    let c = QuotContext::new(2, 4).unwrap();
    let ring = QuotientRing::with_context(c);
    assert_eq!(ring.pieri_h(&p("[1,1]"), 2).unwrap(), common::elem(c, "a1*s[1] - a2*s[]"));
    assert!(ring.pieri_h(&p("[1,1]"), 3).is_err());
}

#[test]
fn quantum_structure_constants_are_positive_monomials() {
    for (k, n) in [(2, 4), (2, 5), (3, 6)] {
        let ring = QuotientRing::new(k, n).unwrap();
        let quantum = Specialization::quantum(k);
        for row in ring.product_table() {
            for f in row {
                for (_, c) in specialize_elem(&f, &quantum).unwrap() {
                    let coeffs: Vec<_> = c.coefficients().collect();
                    assert_eq!(coeffs.len(), 1, "{c} is not a monomial");
                    assert!(coeffs[0].1 > &BigInt::zero(), "{c} has a negative coefficient");
                }
            }
        }
    }
}

#[test]
fn positivity_scanner_has_teeth() {
    // Without the b-rewrite some (n - k - 1 odd) coefficient must look negative.
    let ring = QuotientRing::new(2, 4).unwrap();
    let basis = ring.context().basis();
    let table = ring.product_table();
    let mut negative = false;
    for (i, l) in basis.iter().enumerate() {
        for (j, m) in basis.iter().enumerate() {
            for nu in &basis {
                let c = table[i][j].coeff(nu).unwrap();
                let signed = if (l.size() + m.size() + nu.size()) % 2 == 1 { -c } else { c };
                negative |= !signed.has_nonnegative_coefficients();
            }
        }
    }
    assert!(negative);
    let report = ring.positivity_scan();
    assert!(report.ok);
    assert_eq!(report.coefficients_checked, basis.len().pow(3));
}

#[test]
fn overflow_reduction_matches_groebner() {
    let cases = [(1, 6, 2, "a1*s[2]"), (2, 5, 1, "a2*s[1] - a1*s[1,1]"), (2, 4, 1, "a2*s[1] - a1*s[1,1]")];
    for (k, n, m, want) in cases {
        let c = QuotContext::new(k, n).unwrap();
        let ring = QuotientRing::with_context(c);
        let got = ring.reduce_h_overflow(m).unwrap();
        assert_eq!(got, common::elem(c, want));
    }
    for (k, n) in [(1, 4), (2, 4), (2, 5), (3, 5), (3, 6)] {
        let c = QuotContext::new(k, n).unwrap();
        let ring = QuotientRing::with_context(c);
        let gb = GroebnerBasis::new(c);
        for m in 1..=3 {
            let f = ring.reduce_h_overflow(m).unwrap();
            let mut lhs = XPoly::zero(k);
            for (l, coeff) in f.terms() {
                lhs = &lhs + &gb.normal_form(&schur_xpoly(l, k).unwrap()).unwrap().scale(coeff);
            }
            let rhs = gb.normal_form(&complete_homogeneous(k, n + m, 1..=k)).unwrap();
            assert_eq!(lhs, rhs, "k={k} n={n} m={m}");
        }
    }
}

#[test]
fn specialization_examples() {
    let ring = QuotientRing::new(3, 6).unwrap();
    let f = ring.straighten_schur(&p("[5,4,1]")).unwrap();
    assert!(specialize_elem(&f, &Specialization::classical(3)).unwrap().is_empty());
    let g = ring.one().scale(&APoly::var(3, 3));
    let q = specialize_elem(&g, &Specialization::quantum(3)).unwrap();
    assert_eq!(symquot::quotient::render_specialized(&q), "q*s[]");
}

// ---- grobner ----

#[test]
fn ideal_generators_reduce_to_zero() {
    for k in 1..=4 {
        for n in k..=8 {
            let c = QuotContext::new(k, n).unwrap();
            let gb = GroebnerBasis::new(c);
            let leads: Vec<XMonomial> = gb.generators().iter().map(|b| b.leading_monomial().unwrap().clone()).collect();
            for (i, a) in leads.iter().enumerate() {
                for b in &leads[i + 1..] {
                    // pairwise coprime leading terms
                    assert!(a.exponents().iter().zip(b.exponents()).all(|(x, y)| *x == 0 || *y == 0));
                }
            }
            for b in gb.generators() {
                assert!(gb.normal_form(b).unwrap().is_zero());
            }
            for i in 1..=k {
                let g = &complete_homogeneous(k, n - k + i, 1..=k) - &XPoly::a(k, i);
                assert!(gb.normal_form(&g).unwrap().is_zero(), "h_{} - a_{i}, k={k} n={n}", n - k + i);
            }
        }
    }
}

#[test]
fn normal_form_is_linear_idempotent_and_standard() {
    let c = QuotContext::new(3, 6).unwrap();
    let gb = GroebnerBasis::new(c);
    let f = XPoly::parse(3, "x1^5*x2^2 - 3*a2*x3^7 + x1*x2*x3 + a1^2").unwrap();
    let g = XPoly::parse(3, "x2^6*x3^6 + 2*a3*x1^4").unwrap();
    let nf = |p: &XPoly| gb.normal_form(p).unwrap();
    assert_eq!(nf(&nf(&f)), nf(&f));
    assert_eq!(nf(&(&f + &g)), &nf(&f) + &nf(&g));
    let s = APoly::parse(3, "a1 - 2*a3").unwrap();
    assert_eq!(nf(&f.scale(&s)), nf(&f).scale(&s));
    for (m, _) in nf(&(&f * &g)).terms() {
        assert!(gb.is_standard(m));
    }
    assert!(gb.monomial_basis().iter().all(|m| gb.is_standard(m)));
}

#[test]
fn schur_polynomials_match_bialternant() {
    for k in 1..=3 {
        for lambda in all_partitions(6, k) {
            let s = schur_xpoly(&lambda, k).unwrap();
            assert_eq!(s, bialternant_schur(&lambda, k), "{lambda} k={k}");
            // coefficients of x^μ are Kostka numbers
            for mu in partitions_with_len(lambda.size(), k) {
                let e: Vec<u32> = mu.padded(k).iter().map(|&x| x as u32).collect();
                let c = s.coefficient(&XMonomial::new(e)).constant_value().unwrap();
                assert_eq!(c, BigInt::from(kostka(&lambda, &mu)), "K({lambda},{mu})");
            }
        }
    }
}

#[test]
fn lr_products_match_polynomial_products() {
    for k in 1..=3 {
        let parts = all_partitions(8, k);
        for mu in &parts {
            for nu in &parts {
                if mu.size() + nu.size() > 8 || mu > nu {
                    continue;
                }
                let product = &schur_xpoly(mu, k).unwrap() * &schur_xpoly(nu, k).unwrap();
                let want = schur_decompose(&product);
                let got: BTreeMap<Partition, BigInt> = schur_product_expand(mu, nu, k)
                    .iter()
                    .map(|(l, c)| (l.clone(), BigInt::from(c.clone())))
                    .collect();
                assert_eq!(got, want, "{mu} * {nu}, k={k}");
            }
        }
    }
}

#[test]
fn power_sum_hook_expansion_matches_oracle() {
    for k in 1..=3 {
        let ring = QuotientRing::new(k, k + 6).unwrap();
        for r in 1..=6 {
            let want = schur_decompose(&power_sum(k, r));
            let hooks: BTreeMap<Partition, BigInt> = (0..r.min(k))
                .map(|j| (Partition::hook(r - j, j), BigInt::from(if j % 2 == 0 { 1 } else { -1 })))
                .collect();
            assert_eq!(hooks, want, "p_{r}, k={k}");
            // the box is wide enough that no straightening happens
            let img = power_sum_image(&ring, r);
            assert_eq!(img.num_terms(), hooks.len());
        }
    }
}

// ---- tableaux ----

#[test]
fn lr_coefficients_commute_and_obey_dominance() {
    for lambda in all_partitions(8, 8) {
        for mu in all_partitions(lambda.size(), lambda.len()) {
            if !lambda.contains(&mu) {
                continue;
            }
            for nu in partitions_with_len(lambda.size() - mu.size(), lambda.len()) {
                let c = lr_coefficient(&lambda, &mu, &nu);
                assert_eq!(c, lr_coefficient(&lambda, &nu, &mu), "{lambda} {mu} {nu}");
                if !c.is_zero() && lambda.size() <= 7 {
                    assert!(dominates(&mu.entrywise_sum(&nu), &lambda));
                    assert!(dominates(&lambda, &mu.union(&nu)));
                }
            }
        }
    }
}

/// Semistandard fillings of `λ/μ` with letters `1..=k`, as a polynomial.
fn skew_ssyt_poly(lambda: &Partition, mu: &Partition, k: usize) -> XPoly {
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|r| (mu.part(r)..lambda.part(r)).map(move |c| (r, c)))
        .collect();
    let mut filling: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut out = XPoly::zero(k);
    fn rec(
        i: usize,
        cells: &[(usize, usize)],
        k: usize,
        filling: &mut BTreeMap<(usize, usize), usize>,
        out: &mut XPoly,
    ) {
        if i == cells.len() {
            let mut e = vec![0u32; k];
            for v in filling.values() {
                e[v - 1] += 1;
            }
            *out = &*out + &XPoly::monomial(XMonomial::new(e));
            return;
        }
        let (r, c) = cells[i];
        let lo_row = if c > 0 { filling.get(&(r, c - 1)).copied().unwrap_or(1) } else { 1 };
        let lo_col = if r > 0 { filling.get(&(r - 1, c)).map_or(1, |v| v + 1) } else { 1 };
        for v in lo_row.max(lo_col)..=k {
            filling.insert((r, c), v);
            rec(i + 1, cells, k, filling, out);
            filling.remove(&(r, c));
        }
    }
    rec(0, &cells, k, &mut filling, &mut out);
    out
}

#[test]
fn skew_schur_matches_brute_force() {
    let k = 3;
    for lambda in all_partitions(6, 6) {
        for mu in all_partitions(lambda.size(), lambda.len()) {
            if !lambda.contains(&mu) {
                continue;
            }
            let mut want = XPoly::zero(k);
            for (nu, c) in skew_schur_expand(&lambda, &mu) {
                if nu.len() <= k {
                    want = &want + &schur_xpoly(&nu, k).unwrap().scale(&APoly::constant(k, BigInt::from(c)));
                }
            }
            assert_eq!(skew_ssyt_poly(&lambda, &mu, k), want, "{lambda}/{mu}");
        }
    }
}

// ---- bases ----

#[test]
fn h_m_e_families_are_bases() {
    for n in 2..=7 {
        for k in 1..n {
            let ring = QuotientRing::new(k, n).unwrap();
            for f in [BasisFamily::H, BasisFamily::M, BasisFamily::ETranspose] {
                assert_eq!(classify_family(&ring, f), Classification::Yes, "{f} k={k} n={n}");
            }
        }
    }
}

#[test]
fn determinants_do_not_depend_on_parameters() {
    for (k, n) in [(2, 5), (2, 6), (3, 7), (2, 7)] {
        let ring = QuotientRing::new(k, n).unwrap();
        for family in [BasisFamily::P, BasisFamily::HTranspose] {
            let m = change_of_basis_matrix(&ring, family);
            let d = m.determinant();
            assert!(d.constant_value().is_some(), "{family} k={k} n={n}: {d}");
            for values in [vec![0i64; k], (1..=k as i64).map(|i| 3 * i - 7).collect()] {
                let big: Vec<BigInt> = values.iter().map(|&v| BigInt::from(v)).collect();
                let rows: Vec<Vec<APoly>> = m
                    .rows()
                    .iter()
                    .map(|r| r.iter().map(|e| APoly::constant(k, e.evaluate(&big).unwrap())).collect())
                    .collect();
                assert_eq!(determinant(rows, k), d, "{family} k={k} n={n} at {values:?}");
            }
        }
    }
}

#[test]
fn h_expansion_at_zero_is_kostka() {
    for (k, n) in [(2, 5), (3, 5), (3, 6)] {
        let ring = QuotientRing::new(k, n).unwrap();
        let classical = Specialization::classical(k);
        for lambda in ring.context().basis() {
            let f = bases::expand_h(&ring, &lambda).unwrap();
            for mu in ring.context().basis() {
                if mu.size() != lambda.size() {
                    continue;
                }
                let v = specialize(&f.coeff(&mu).unwrap(), &classical).unwrap().constant_value().unwrap();
                assert_eq!(v, BigInt::from(kostka(&mu, &lambda)));
            }
        }
    }
}

#[test]
fn m_and_kostka_matrices_are_inverse() {
    for (k, n) in [(2, 4), (3, 5), (3, 6), (2, 6)] {
        let ring = QuotientRing::new(k, n).unwrap();
        let m = change_of_basis_matrix(&ring, BasisFamily::M);
        let s = s_to_m_matrix(ring.context());
        let dim = m.dim();
        for i in 0..dim {
            for j in 0..dim {
                let mut acc = APoly::zero(k);
                for l in 0..dim {
                    acc = &acc + &(m.entry(i, l) * s.entry(l, j));
                }
                let want = if i == j { APoly::one(k) } else { APoly::zero(k) };
                assert_eq!(acc, want);
            }
        }
    }
}

#[test]
fn transpose_families_use_conjugates() {
    let ring = QuotientRing::new(2, 4).unwrap();
    for lambda in ring.context().basis() {
        let ht = bases::expand_h_conj(&ring, &lambda).unwrap();
        assert_eq!(ht, bases::h_product(&ring, conjugate(&lambda).parts()));
    }
    assert_eq!(classify_family(&ring, BasisFamily::P), Classification::No);
}
