//! Univariate polynomials in `q` with big-integer coefficients, q-analogs, and
//! the closed-form Hilbert series of `R_{n,k}` and `S_{n,k}`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::colored::binomial;
use crate::Ring;

/// Dense polynomial in `q`; `coeffs[d]` is the coefficient of `q^d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c·q^d`.
    pub fn monomial(c: impl Into<BigInt>, d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c.into();
        QPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiply by `q^d`.
    pub fn shift(&self, d: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// Substitute `q ↦ q^r`.
    pub fn substitute_power(&self, r: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        assert!(r >= 1);
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * r + 1];
        for (d, c) in self.coeffs.iter().enumerate() {
            coeffs[d * r] = c.clone();
        }
        QPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        QPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Reverse the coefficient sequence about this polynomial's own degree.
    pub fn rev(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        QPoly::from_coeffs(coeffs)
    }

    /// `q^top · p(1/q)`; requires `top ≥ deg p`.
    pub fn rev_about(&self, top: usize) -> Self {
        match self.degree() {
            None => Self::zero(),
            Some(d) => {
                assert!(d <= top, "rev_about: degree {d} exceeds {top}");
                self.rev().shift(top - d)
            }
        }
    }

    /// Division with remainder by a polynomial with leading coefficient dividing
    /// every intermediate leading coefficient; panics otherwise.
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let qlen = rem.len().saturating_sub(dd);
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (c, rr) = top.div_rem(lead);
            assert!(rr.is_zero(), "inexact leading coefficient division");
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        (QPoly::from_coeffs(quot), QPoly::from_coeffs(rem))
    }

    /// Exact division; panics on a nonzero remainder.
    pub fn div_exact(&self, divisor: &QPoly) -> QPoly {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "nonzero remainder in exact q-polynomial division");
        q
    }

    pub fn to_json(&self) -> Value {
        json!({ "coeffs": self.coeffs.iter().map(bigint_json).collect::<Vec<_>>() })
    }

    pub fn from_json(v: &Value) -> Option<QPoly> {
        let arr = v.get("coeffs")?.as_array()?;
        let coeffs = arr
            .iter()
            .map(|x| match x {
                Value::Number(n) => n.as_i64().map(BigInt::from),
                Value::String(s) => s.parse().ok(),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(QPoly::from_coeffs(coeffs))
    }
}

/// A JSON number when it fits in `i64`, otherwise a decimal string.
pub fn bigint_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let var = match d {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{d}"),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}{var}")?;
            }
        }
        Ok(())
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &rhs.scale(&BigInt::from(-1))
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |acc, p| acc + p)
    }
}

/// `[n]_q = 1 + q + ⋯ + q^{n−1}`.
pub fn q_int(n: usize) -> QPoly {
    QPoly::from_coeffs(vec![BigInt::one(); n])
}

/// `[n]!_q = [1]_q [2]_q ⋯ [n]_q`.
pub fn q_factorial(n: usize) -> QPoly {
    (1..=n).fold(QPoly::one(), |acc, i| &acc * &q_int(i))
}

/// `[n choose k]_q`, computed as `[n]!_q / ([k]!_q [n−k]!_q)` by exact division.
pub fn q_binomial(n: usize, k: usize) -> QPoly {
    if k > n {
        return QPoly::zero();
    }
    q_factorial(n).div_exact(&(&q_factorial(k) * &q_factorial(n - k)))
}

/// `[n choose a_1, …, a_m]_q`; zero unless the parts sum to `n`.
pub fn q_multinomial(n: usize, parts: &[usize]) -> QPoly {
    if parts.iter().sum::<usize>() != n {
        return QPoly::zero();
    }
    let denom = parts.iter().fold(QPoly::one(), |acc, &a| &acc * &q_factorial(a));
    q_factorial(n).div_exact(&denom)
}

/// `Stir_q(n,k) = [k]_q Stir_q(n−1,k) + Stir_q(n−1,k−1)`, `Stir_q(0,k) = δ_{0,k}`.
pub fn q_stirling(n: usize, k: usize) -> QPoly {
    let mut row: Vec<QPoly> = vec![QPoly::zero(); k + 1];
    row[0] = QPoly::one();
    for _ in 1..=n {
        for j in (1..=k).rev() {
            row[j] = &(&q_int(j) * &row[j]) + &row[j - 1];
        }
        row[0] = QPoly::zero();
    }
    row[k].clone()
}

pub fn rev_q(p: &QPoly) -> QPoly {
    p.rev()
}

/// `[r]_q^n · [k]!_{q^r} · Stir_{q^r}(n,k)`, before reversal.
fn s_bracket(n: usize, k: usize, r: usize) -> QPoly {
    let mut p = QPoly::one();
    for _ in 0..n {
        p = &p * &q_int(r);
    }
    &(&p * &q_factorial(k).substitute_power(r)) * &q_stirling(n, k).substitute_power(r)
}

/// Closed-form Hilbert series of `R_{n,k}` or `S_{n,k}`.
pub fn hilbert_series(ring: Ring, n: usize, k: usize, r: usize) -> QPoly {
    match ring {
        Ring::S => s_bracket(n, k, r).rev(),
        Ring::R => (0..=n)
            .map(|z| {
                let c = BigInt::from(binomial(n as u64, z as u64));
                s_bracket(n - z, k, r).rev().shift(k * r * z).scale(&c)
            })
            .sum(),
    }
}

/// `Hilb(R_n; q) = Π_{i=1}^n [ri]_q`.
pub fn hilbert_coinvariant(n: usize, r: usize) -> QPoly {
    (1..=n).fold(QPoly::one(), |acc, i| &acc * &q_int(r * i))
}
