//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use coinv::demazure::ideal_generators;
use coinv::groebner::{buchberger, normal_form, standard_monomials, Budget};
use coinv::poly::{Monomial, Poly};
use coinv::colored::Letter;
use coinv::qseries::QPoly;
use coinv::tableaux::{RPartition, SchurSeries};
use coinv::Ring;

/// Exact inverse of a square rational matrix by Gauss-Jordan elimination.
pub fn invert(mut a: Vec<Vec<BigRational>>) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for i in 0..n {
            if i != col && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in 0..n {
                    let (x, y) = (&a[col][j] * &f, &inv[col][j] * &f);
                    a[i][j] -= x;
                    inv[i][j] -= y;
                }
            }
        }
    }
    Some(inv)
}

/// Coordinates of cosets in a candidate basis, computed from normal forms
/// modulo a Buchberger-computed Gröbner basis.
pub struct CosetOracle {
    pub gb: Vec<Poly>,
    pub standard: Vec<Monomial>,
    pub basis: Vec<Monomial>,
    inverse: Vec<Vec<BigRational>>,
}

impl CosetOracle {
    /// `None` when the normal forms of `basis` do not form an invertible matrix.
    pub fn new(ring: Ring, n: usize, k: usize, r: u32, basis: Vec<Monomial>) -> Option<Self> {
        let gb = buchberger(&ideal_generators(ring, n, k, r), Budget::default()).unwrap().generators;
        let leads: Vec<Monomial> = gb.iter().map(|g| g.leading_monomial().unwrap().clone()).collect();
        let standard = standard_monomials(&leads, n, k as u32 * r);
        if standard.len() != basis.len() {
            return None;
        }
        let index: BTreeMap<&Monomial, usize> = standard.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut a = vec![vec![BigRational::zero(); basis.len()]; standard.len()];
        for (j, b) in basis.iter().enumerate() {
            for (m, c) in normal_form(&Poly::monomial(b.clone()), &gb).terms() {
                a[index[m]][j] = c.clone();
            }
        }
        let inverse = invert(a)?;
        Some(CosetOracle { gb, standard, basis, inverse })
    }

    pub fn coordinates(&self, m: &Monomial) -> BTreeMap<Monomial, BigRational> {
        let nf = normal_form(&Poly::monomial(m.clone()), &self.gb);
        let index: BTreeMap<&Monomial, usize> = self.standard.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut v = vec![BigRational::zero(); self.standard.len()];
        for (t, c) in nf.terms() {
            v[index[t]] = c.clone();
        }
        let mut out = BTreeMap::new();
        for (j, b) in self.basis.iter().enumerate() {
            let c: BigRational = (0..v.len()).map(|i| &self.inverse[j][i] * &v[i]).sum();
            if !c.is_zero() {
                out.insert(b.clone(), c);
            }
        }
        out
    }
}

/// Every monomial in `n` variables with all exponents `≤ cap`.
pub fn box_monomials(n: usize, cap: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    loop {
        out.push(Monomial(e.clone()));
        let mut p = 0;
        loop {
            if p == n {
                return out;
            }
            if e[p] < cap {
                e[p] += 1;
                break;
            }
            e[p] = 0;
            p += 1;
        }
    }
}

pub fn rp(c: &[&[u32]]) -> RPartition {
    RPartition::new(c.iter().map(|p| p.to_vec()).collect()).unwrap()
}

/// Build a series from `(degree, coefficient, shape)` triples.
pub fn series(r: usize, terms: &[(usize, i64, &[&[u32]])]) -> SchurSeries {
    let mut s = SchurSeries::zero(r);
    for &(d, c, shape) in terms {
        s.add(rp(shape), &QPoly::monomial(c, d));
    }
    s
}

pub const E: &[u32] = &[];

pub fn s32_terms() -> Vec<(usize, i64, &'static [&'static [u32]])> {
    vec![
        (0, 1, &[E, &[3]]),
        (1, 1, &[&[1], &[2]]),
        (2, 1, &[&[2], &[1]]),
        (2, 1, &[E, &[2, 1]]),
        (2, 1, &[E, &[3]]),
        (3, 1, &[&[3], E]),
        (3, 2, &[&[1], &[2]]),
        (3, 1, &[&[1], &[1, 1]]),
        (4, 2, &[&[2], &[1]]),
        (4, 1, &[&[1, 1], &[1]]),
        (4, 1, &[E, &[2, 1]]),
        (5, 1, &[&[3], E]),
        (5, 1, &[&[2, 1], E]),
        (5, 1, &[&[1], &[1, 1]]),
        (5, 1, &[&[1], &[2]]),
        (6, 1, &[&[2], &[1]]),
        (6, 1, &[&[1, 1], &[1]]),
        (7, 1, &[&[2, 1], E]),
    ]
}

pub fn r32_terms() -> Vec<(usize, i64, &'static [&'static [u32]])> {
    let mut terms = s32_terms();
    terms.extend_from_slice(&[
        (4, 1, &[E, &[3]]),
        (4, 1, &[E, &[2, 1]]),
        (5, 1, &[&[1], &[2]]),
        (5, 1, &[&[1], &[1, 1]]),
        (6, 1, &[&[2], &[1]]),
        (6, 1, &[E, &[2, 1]]),
        (6, 1, &[E, &[1, 1, 1]]),
        (7, 1, &[&[1], &[2]]),
        (7, 1, &[&[1], &[1, 1]]),
        (8, 1, &[&[1, 1], &[1]]),
    ]);
    terms
}

/// Contents on values `1..=V` with every value used, multiplicities `≤ max_mult`,
/// and total size in `1..=max_n`.
pub fn normalized_contents(max_n: usize, r: u32, max_mult: usize) -> Vec<Vec<(Letter, usize)>> {
    fn rec(
        v: u32,
        left: usize,
        r: u32,
        max_mult: usize,
        cur: &mut Vec<(Letter, usize)>,
        out: &mut Vec<Vec<(Letter, usize)>>,
    ) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        // Choose the multiplicities of v^0, …, v^{r−1}, not all zero.
        let cells = r as usize;
        let base = max_mult + 1;
        for code in 1..base.pow(cells as u32) {
            let mut c = code;
            let mut column = Vec::new();
            let mut size = 0;
            for color in 0..r {
                let m = c % base;
                c /= base;
                if m > 0 {
                    column.push((Letter::new(v, color), m));
                    size += m;
                }
            }
            if size > left {
                continue;
            }
            let len = cur.len();
            cur.extend(column);
            rec(v + 1, left - size, r, max_mult, cur, out);
            cur.truncate(len);
        }
    }
    let mut out = Vec::new();
    rec(1, max_n, r, max_mult, &mut Vec::new(), &mut out);
    out
}
