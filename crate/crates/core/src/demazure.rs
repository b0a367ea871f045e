//! Demazure characters by divided differences, and the polynomials
//! `κ̄_{γ̄(S)}(x^r)` whose leading terms are the skip monomials `x(S)^r`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::poly::{elementary_powers, Monomial, Poly};
use crate::skip::{next_subset, skip_composition};
use crate::Ring;

/// Which ascent of `γ` the recursion resolves first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Resolution {
    FirstAscent,
    LastAscent,
}

/// Memoized Demazure characters in a fixed number of variables.
#[derive(Debug, Default)]
pub struct DemazureCache {
    memo: HashMap<(Vec<u32>, Resolution), Poly>,
}

impl DemazureCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `κ_γ`: the monomial `x^γ` when `γ` is weakly decreasing, otherwise
    /// `π_i κ_{s_i γ}` at an ascent `γ_i < γ_{i+1}`.
    pub fn kappa(&mut self, gamma: &[u32], how: Resolution) -> Poly {
        let key = (gamma.to_vec(), how);
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let mut ascents = (0..gamma.len().saturating_sub(1)).filter(|&i| gamma[i] < gamma[i + 1]);
        let pick = match how {
            Resolution::FirstAscent => ascents.next(),
            Resolution::LastAscent => ascents.next_back(),
        };
        let out = match pick {
            None => Poly::monomial(Monomial(gamma.to_vec())),
            Some(i) => {
                let mut swapped = gamma.to_vec();
                swapped.swap(i, i + 1);
                let inner = self.kappa(&swapped, how);
                isobaric_divided_difference(&inner, i + 1)
            }
        };
        self.memo.insert(key, out.clone());
        out
    }
}

/// `π_i f = (x_i f − x_{i+1} s_i f) / (x_i − x_{i+1})`, by exact division.
pub fn isobaric_divided_difference(f: &Poly, i: usize) -> Poly {
    let n = f.nvars();
    let xi = Poly::var(n, i);
    let xj = Poly::var(n, i + 1);
    let num = &(&xi * f) - &(&xj * &f.swap_vars(i, i + 1));
    let (q, rem) = num.div_rem(&(&xi - &xj));
    assert!(rem.is_zero(), "divided difference left a remainder");
    q
}

pub fn demazure(gamma: &[u32]) -> Poly {
    DemazureCache::new().kappa(gamma, Resolution::FirstAscent)
}

/// `κ̄_{γ̄(S)}(x^r)`: reverse `γ(S)`, take its Demazure character, substitute
/// `x_i ↦ x_i^r`, then reverse the variables.
pub fn groebner_element(set: &[usize], n: usize, k: usize, r: u32) -> Result<Poly> {
    groebner_element_cached(&mut DemazureCache::new(), set, n, k, r)
}

pub fn groebner_element_cached(cache: &mut DemazureCache, set: &[usize], n: usize, k: usize, r: u32) -> Result<Poly> {
    if k > n || set.len() != n - k + 1 {
        return Err(Error::InvalidParameters(format!("need k ≤ n and |S| = n−k+1, got n={n} k={k} S={set:?}")));
    }
    let mut gamma = skip_composition(set, n)?;
    gamma.reverse();
    let p = cache.kappa(&gamma, Resolution::FirstAscent).substitute_powers(r).reverse_variables();
    let expected = Monomial(skip_composition(set, n)?).pow(r);
    match p.leading_term() {
        Some((m, c)) if *m == expected && c == &num_rational::BigRational::from_integer(1.into()) => Ok(p),
        _ => Err(Error::InvalidObject(format!("leading term of element for {set:?} is not x(S)^r"))),
    }
}

/// All `t`-subsets of `[n]` in lex order.
pub fn subsets(n: usize, t: usize) -> Vec<Vec<usize>> {
    if t > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut set: Vec<usize> = (1..=t).collect();
    loop {
        out.push(set.clone());
        if !next_subset(&mut set, n) {
            return out;
        }
    }
}

/// Generators of `I_{n,k}` (ring R) or `J_{n,k}` (ring S).
pub fn ideal_generators(ring: Ring, n: usize, k: usize, r: u32) -> Vec<Poly> {
    let power = k as u32 * r + if ring == Ring::R { 1 } else { 0 };
    let mut gens: Vec<Poly> = (1..=n).map(|i| Poly::monomial(Monomial::var(n, i).pow(power))).collect();
    for d in (n + 1 - k)..=n {
        gens.push(elementary_powers(n, d, r));
    }
    gens
}

/// The variable powers together with the Demazure elements: `S ⊆ [n]` for
/// ring R and `S ⊆ [n−1]` for ring S, with `|S| = n−k+1`.
pub fn claimed_groebner_basis(ring: Ring, n: usize, k: usize, r: u32) -> Result<Vec<Poly>> {
    let power = k as u32 * r + if ring == Ring::R { 1 } else { 0 };
    let mut basis: Vec<Poly> = (1..=n).map(|i| Poly::monomial(Monomial::var(n, i).pow(power))).collect();
    let ground = match ring {
        Ring::R => n,
        Ring::S => n.saturating_sub(1),
    };
    let mut cache = DemazureCache::new();
    for set in subsets(ground, n + 1 - k) {
        basis.push(groebner_element_cached(&mut cache, &set, n, k, r)?);
    }
    Ok(basis)
}
