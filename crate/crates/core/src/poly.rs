//! Sparse multivariate polynomials over `Q` in `x_1, …, x_n` with the
//! lexicographic monomial order `x_1 > x_2 > ⋯ > x_n`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::qseries::bigint_json;

/// An exponent vector. The derived `Ord` is the lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// The variable `x_i`, `1 ≤ i ≤ n`.
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other)
            .then(|| Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, r: u32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * r).collect())
    }

    /// Parse exponents separated by spaces or commas.
    pub fn parse(s: &str) -> Result<Monomial> {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent `{t}`"))))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| if a == 1 { format!("x{}", i + 1) } else { format!("x{}^{a}", i + 1) })
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

pub fn lex_compare(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::InvalidParameters(format!(
            "monomials in {} and {} variables",
            a.nvars(),
            b.nvars()
        )));
    }
    Ok(a.cmp(b))
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A polynomial as a map from monomials to nonzero rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::term(Monomial::one(nvars), BigRational::one())
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut p = Poly::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, BigRational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(nvars, i))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in descending lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.last_key_value()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last_key_value().map(|(m, _)| m)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    /// `self · c·m`.
    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect() }
    }

    /// `self −= c·m·g`, in place.
    pub fn sub_mul_term(&mut self, g: &Poly, m: &Monomial, c: &BigRational) {
        for (t, a) in &g.terms {
            self.add_term(t.mul(m), -(a * c));
        }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// `x_i ↦ x_i^r`.
    pub fn substitute_powers(&self, r: u32) -> Poly {
        self.map_monomials(|m| m.pow(r))
    }

    /// `x_i ↦ x_{n+1−i}`.
    pub fn reverse_variables(&self) -> Poly {
        self.map_monomials(|m| {
            let mut e = m.0.clone();
            e.reverse();
            Monomial(e)
        })
    }

    /// Exchange `x_i` and `x_j` (1-based).
    pub fn swap_vars(&self, i: usize, j: usize) -> Poly {
        self.map_monomials(|m| {
            let mut e = m.0.clone();
            e.swap(i - 1, j - 1);
            Monomial(e)
        })
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &a) in point.iter().zip(&m.0) {
                t *= num_traits::pow(x.clone(), a as usize);
            }
            acc += t;
        }
        acc
    }

    /// Division by a single polynomial: `self = q·divisor + rem`, where no
    /// term of `rem` is divisible by the leading monomial of `divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let (lm, lc) = divisor.leading_term().expect("division by zero polynomial");
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut p = self.clone();
        let mut quot = Poly::zero(self.nvars);
        let mut rem = Poly::zero(self.nvars);
        while let Some((m, c)) = p.terms.pop_last() {
            match lm.quotient_of(&m) {
                Some(t) => {
                    let f = &c / &lc;
                    p.add_term(m, c);
                    p.sub_mul_term(divisor, &t, &f);
                    quot.add_term(t, f);
                }
                None => rem.add_term(m, c),
            }
        }
        (quot, rem)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(m, c)| json!({ "coeff": [bigint_json(c.numer()), bigint_json(c.denom())], "exps": m.0 }))
                .collect(),
        )
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let mag = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (mut big, small) = if self.len() >= rhs.len() { (self.clone(), rhs) } else { (rhs.clone(), self) };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &rhs.terms {
            for (t, a) in &self.terms {
                out.add_term(t.mul(m), a * c);
            }
        }
        out
    }
}

/// `e_d(x_1^r, …, x_n^r)`.
pub fn elementary_powers(n: usize, d: usize, r: u32) -> Poly {
    let mut out = Poly::zero(n);
    if d > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..d).collect();
    loop {
        let mut e = vec![0; n];
        for &i in &idx {
            e[i] = r;
        }
        out.add_term(Monomial(e), BigRational::one());
        // Next d-subset in lex order.
        let mut t = d;
        loop {
            if t == 0 {
                return out;
            }
            t -= 1;
            if idx[t] < n - d + t {
                idx[t] += 1;
                for u in t + 1..d {
                    idx[u] = idx[u - 1] + 1;
                }
                break;
            }
        }
    }
}

/// `e_d` evaluated at the given values.
pub fn elementary_value(vals: &[BigRational], d: usize) -> BigRational {
    let mut e = vec![BigRational::zero(); d + 1];
    e[0] = BigRational::one();
    for v in vals {
        for j in (1..=d).rev() {
            let add = &e[j - 1] * v;
            e[j] += add;
        }
    }
    e[d].clone()
}

/// `h_d` evaluated at the given values.
pub fn complete_value(vals: &[BigRational], d: usize) -> BigRational {
    let mut h = vec![BigRational::zero(); d + 1];
    h[0] = BigRational::one();
    for v in vals {
        for j in 1..=d {
            let add = &h[j - 1] * v;
            h[j] += add;
        }
    }
    h[d].clone()
}

/// `Σ_{j=0}^{s} (−1)^j e_{s−j}(β_1^r, …, β_n^r) h_j(α_1, …, α_k)`.
pub fn alternating_sum(betas: &[BigRational], alphas: &[BigRational], r: u32, s: usize) -> BigRational {
    let powers: Vec<BigRational> = betas.iter().map(|b| num_traits::pow(b.clone(), r as usize)).collect();
    let mut acc = BigRational::zero();
    for j in 0..=s {
        let t = elementary_value(&powers, s - j) * complete_value(alphas, j);
        if j % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    acc
}

/// Random instance of the alternating-sum identity: `β`'s with `k` distinct
/// `r`-th powers and `α` equal to those powers. Returns the sums for every
/// `n−k+1 ≤ s ≤ n`.
pub fn random_alternating_sums<R: Rng>(rng: &mut R, n: usize, k: usize, r: u32) -> Vec<(usize, BigRational)> {
    assert!(k <= n && k >= 1);
    let mut betas: Vec<BigRational> = Vec::with_capacity(n);
    let mut alphas: Vec<BigRational> = Vec::with_capacity(k);
    while alphas.len() < k {
        let b = BigRational::new(BigInt::from(rng.gen_range(1..40)), BigInt::from(rng.gen_range(1..9)));
        let a = num_traits::pow(b.clone(), r as usize);
        if !alphas.contains(&a) {
            alphas.push(a);
            // Over Q the only r-th roots of unity are ±1, and −1 only for even r.
            betas.push(if r.is_multiple_of(2) && rng.gen_bool(0.5) { -b } else { b });
        }
    }
    while betas.len() < n {
        // Remaining β's repeat one of the chosen ones or are zero.
        if rng.gen_bool(0.5) {
            betas.push(BigRational::zero());
        } else {
            let i = rng.gen_range(0..k);
            betas.push(betas[i].clone());
        }
    }
    ((n - k + 1)..=n).map(|s| (s, alternating_sum(&betas, &alphas, r, s))).collect()
}
