//! The coefficient ring `Z[a_1, ..., a_k]` and its specializations.
//!
//! [`APoly`] keeps its terms in a `BTreeMap` keyed by [`AMonomial`], whose
//! `Ord` is graded lexicographic with `a_1 > a_2 > ... > a_k`. Rendering lists
//! terms from the largest monomial down, e.g. `a1^2 - a2`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::text::{indexed_name, parse_sum, push_signed};

/// An exponent vector over `a_1, ..., a_k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AMonomial(Vec<u32>);

impl AMonomial {
    pub fn one(nvars: usize) -> Self {
        AMonomial(vec![0; nvars])
    }

    pub fn new(exponents: Vec<u32>) -> Self {
        AMonomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &AMonomial) -> AMonomial {
        AMonomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divide(&self, other: &AMonomial) -> Option<AMonomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(AMonomial)
    }

    pub(crate) fn render(&self) -> String {
        let mut factors = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(format!("a{}", i + 1)),
                _ => factors.push(format!("a{}^{}", i + 1, e)),
            }
        }
        factors.join("*")
    }
}

impl Ord for AMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for AMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate polynomial in `a_1, ..., a_k` with big-integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct APoly {
    nvars: usize,
    terms: BTreeMap<AMonomial, BigInt>,
}

fn check_nvars(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::ContextMismatch(format!(
            "coefficient rings have {a} and {b} parameters"
        )))
    }
}

impl APoly {
    pub fn zero(nvars: usize) -> Self {
        APoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::term(nvars, c, AMonomial::one(nvars))
    }

    /// `c · a^e`.
    pub fn term(nvars: usize, c: impl Into<BigInt>, mono: AMonomial) -> Self {
        assert_eq!(mono.0.len(), nvars, "monomial length must equal the number of parameters");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        APoly { nvars, terms }
    }

    /// The parameter `a_i` (1-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!((1..=nvars).contains(&i), "a{i} out of range for {nvars} parameters");
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        Self::term(nvars, 1, AMonomial(e))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    /// The value when the polynomial is constant (zero included).
    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Terms from the largest monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&AMonomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, mono: &AMonomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(AMonomial::degree)
    }

    fn leading(&self) -> Option<(&AMonomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, mono: AMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &APoly) -> Result<APoly> {
        check_nvars(self.nvars, other.nvars)?;
        let mut out = self.clone();
        out.add_assign_ref(other);
        Ok(out)
    }

    pub fn checked_sub(&self, other: &APoly) -> Result<APoly> {
        check_nvars(self.nvars, other.nvars)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &APoly) -> Result<APoly> {
        check_nvars(self.nvars, other.nvars)?;
        let mut out = APoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// In-place `self += other`. Panics on a parameter-count mismatch.
    pub fn add_assign_ref(&mut self, other: &APoly) {
        check_nvars(self.nvars, other.nvars).expect("APoly addition");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// In-place `self += scale · other`.
    pub fn add_scaled(&mut self, scale: &BigInt, other: &APoly) {
        check_nvars(self.nvars, other.nvars).expect("APoly addition");
        if scale.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * scale);
        }
    }

    pub fn scale(&self, c: &BigInt) -> APoly {
        if c.is_zero() {
            return APoly::zero(self.nvars);
        }
        APoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> APoly {
        let mut out = APoly::one(self.nvars);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &APoly) -> Option<APoly> {
        check_nvars(self.nvars, divisor.nvars).ok()?;
        let (dm, dc) = divisor.leading()?;
        let mut rest = self.clone();
        let mut quotient = APoly::zero(self.nvars);
        while let Some((rm, rc)) = rest.leading() {
            let m = rm.divide(dm)?;
            let (c, r) = rc.div_rem(dc);
            if !r.is_zero() {
                return None;
            }
            let t = APoly::term(self.nvars, c, m);
            rest = &rest - &(&t * divisor);
            quotient.add_assign_ref(&t);
        }
        Some(quotient)
    }

    /// Multiplies each term by `(-1)^{deg}` when `flip` holds; this is the
    /// substitution `a_i -> -a_i`.
    pub fn negate_parameters(&self, flip: bool) -> APoly {
        if !flip {
            return self.clone();
        }
        APoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), if m.degree() % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Whether every coefficient is nonnegative.
    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Evaluates at integer values of the parameters.
    pub fn evaluate(&self, values: &[BigInt]) -> Result<BigInt> {
        check_nvars(self.nvars, values.len())?;
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in values.iter().zip(&m.0) {
                t *= num_traits::pow(v.clone(), e as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// Parses the canonical text form, e.g. `a1^2 - a2` or `2*a1*a2`.
    pub fn parse(nvars: usize, s: &str) -> Result<APoly> {
        let mut out = APoly::zero(nvars);
        for (c, factors) in parse_sum(s)? {
            let mut e = vec![0u32; nvars];
            for (name, exp) in factors {
                match indexed_name(&name) {
                    Some(("a", i)) if (1..=nvars).contains(&i) => e[i - 1] += exp,
                    _ => {
                        return Err(Error::Parse(format!(
                            "unknown parameter {name:?} (expected a1..a{nvars})"
                        )))
                    }
                }
            }
            out.add_term(AMonomial(e), c);
        }
        Ok(out)
    }

    /// Whether the text rendering needs parentheses when used as a factor.
    pub(crate) fn is_compound(&self) -> bool {
        self.terms.len() > 1
    }

    /// Renders `self` multiplying `tail` (e.g. `s[2,1]`), returning
    /// `(negative, body)` so callers can join terms with ` + ` / ` - `.
    pub(crate) fn render_factor(&self, tail: &str) -> (bool, String) {
        if self.is_compound() {
            return (false, format!("({self})*{tail}"));
        }
        let (m, c) = self.terms.iter().next().expect("nonzero coefficient");
        let neg = c.is_negative();
        let mag = c.abs();
        let mono = m.render();
        let mut parts = Vec::new();
        if !mag.is_one() || (mono.is_empty() && tail.is_empty()) {
            parts.push(mag.to_string());
        }
        if !mono.is_empty() {
            parts.push(mono);
        }
        if !tail.is_empty() {
            parts.push(tail.to_string());
        }
        (neg, parts.join("*"))
    }
}

impl fmt::Display for APoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (m, c) in self.terms() {
            let single = APoly::term(self.nvars, c.clone(), m.clone());
            let (neg, body) = single.render_factor("");
            push_signed(&mut out, neg, &body);
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for APoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "APoly({self})")
    }
}

impl Serialize for APoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'a> Add<&'a APoly> for &'a APoly {
    type Output = APoly;
    fn add(self, rhs: &APoly) -> APoly {
        self.checked_add(rhs).expect("APoly addition")
    }
}

impl<'a> Sub<&'a APoly> for &'a APoly {
    type Output = APoly;
    fn sub(self, rhs: &APoly) -> APoly {
        self.checked_sub(rhs).expect("APoly subtraction")
    }
}

impl<'a> Mul<&'a APoly> for &'a APoly {
    type Output = APoly;
    fn mul(self, rhs: &APoly) -> APoly {
        self.checked_mul(rhs).expect("APoly multiplication")
    }
}

impl Neg for &APoly {
    type Output = APoly;
    fn neg(self) -> APoly {
        self.scale(&BigInt::from(-1))
    }
}

impl Neg for APoly {
    type Output = APoly;
    fn neg(self) -> APoly {
        -&self
    }
}

/// Univariate integer polynomial in a formal symbol `q`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: BTreeMap<u32, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · q^d`.
    pub fn monomial(c: impl Into<BigInt>, d: u32) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(d, c);
        }
        QPoly { coeffs }
    }

    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficients keyed by degree, lowest first.
    pub fn coefficients(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn coefficient(&self, d: u32) -> BigInt {
        self.coeffs.get(&d).cloned().unwrap_or_default()
    }

    /// The value when constant.
    pub fn constant_value(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, d: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(d).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&d);
        }
    }

    pub fn pow(&self, e: u32) -> QPoly {
        (0..e).fold(QPoly::constant(1), |acc, _| &acc * self)
    }

    pub fn parse(s: &str) -> Result<QPoly> {
        let mut out = QPoly::zero();
        for (c, factors) in parse_sum(s)? {
            let mut d = 0;
            for (name, exp) in factors {
                if name != "q" {
                    return Err(Error::Parse(format!("unknown symbol {name:?} (expected q)")));
                }
                d += exp;
            }
            out.add_term(d, c);
        }
        Ok(out)
    }
}

impl<'a> Add<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (d, c) in &rhs.coeffs {
            out.add_term(*d, c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (d1, c1) in &self.coeffs {
            for (d2, c2) in &rhs.coeffs {
                out.add_term(d1 + d2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().rev() {
            let mag = c.abs();
            let body = match (*d, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => "q".to_string(),
                (1, false) => format!("{mag}*q"),
                (_, true) => format!("q^{d}"),
                (_, false) => format!("{mag}*q^{d}"),
            };
            push_signed(&mut out, c.is_negative(), &body);
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A total assignment `a_i ↦ value`, each value an integer polynomial in `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specialization {
    values: Vec<QPoly>,
}

impl Specialization {
    pub fn new(values: Vec<QPoly>) -> Self {
        Specialization { values }
    }

    pub fn integers(values: &[i64]) -> Self {
        Specialization { values: values.iter().map(|&v| QPoly::constant(v)).collect() }
    }

    /// All parameters zero: the classical cohomology ring.
    pub fn classical(k: usize) -> Self {
        Specialization { values: vec![QPoly::zero(); k] }
    }

    /// `a_1 = ... = a_{k-1} = 0`, `a_k = -(-1)^k q`: quantum cohomology.
    pub fn quantum(k: usize) -> Self {
        let mut values = vec![QPoly::zero(); k];
        if k > 0 {
            let sign = if k.is_multiple_of(2) { -1 } else { 1 };
            values[k - 1] = QPoly::monomial(sign, 1);
        }
        Specialization { values }
    }

    pub fn nvars(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[QPoly] {
        &self.values
    }

    /// Parses `classical`, `quantum`, or a full list like `a1=0,a2=0,a3=q`.
    pub fn parse(k: usize, s: &str) -> Result<Self> {
        match s.trim() {
            "classical" => return Ok(Self::classical(k)),
            "quantum" => return Ok(Self::quantum(k)),
            _ => {}
        }
        let mut values: Vec<Option<QPoly>> = vec![None; k];
        for item in s.split(',') {
            let (lhs, rhs) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected ai=value, got {item:?}")))?;
            let i = match indexed_name(lhs.trim()) {
                Some(("a", i)) if (1..=k).contains(&i) => i,
                _ => return Err(Error::Parse(format!("unknown parameter {:?}", lhs.trim()))),
            };
            if values[i - 1].is_some() {
                return Err(Error::Parse(format!("a{i} assigned twice")));
            }
            values[i - 1] = Some(QPoly::parse(rhs)?);
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| Error::Parse(format!("a{} is not assigned", i + 1))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Specialization { values })
    }
}

/// Substitutes the assignment into `p`.
pub fn specialize(p: &APoly, s: &Specialization) -> Result<QPoly> {
    check_nvars(p.nvars(), s.nvars())?;
    let mut out = QPoly::zero();
    for (m, c) in &p.terms {
        let mut t = QPoly::constant(c.clone());
        for (v, &e) in s.values.iter().zip(&m.0) {
            if e > 0 {
                t = &t * &v.pow(e);
            }
        }
        out = &out + &t;
    }
    Ok(out)
}
