//! Buchberger's algorithm over `Q` with lex order, used as an oracle, plus
//! normal forms, reducedness checks and standard monomials.

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// S-pairs processed before giving up.
    pub max_pairs: usize,
    /// Largest number of terms allowed in any intermediate polynomial.
    pub max_terms: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_pairs: 20_000, max_terms: 200_000 }
    }
}

/// A list of polynomials claimed or proven to form a Gröbner basis under lex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub generators: Vec<Poly>,
    pub reduced: bool,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators.iter().map(|g| g.leading_monomial().expect("nonzero").clone()).collect()
    }
}

/// Fully reduce `f` modulo `basis`: no term of the result is divisible by a
/// leading monomial of `basis`.
pub fn normal_form(f: &Poly, basis: &[Poly]) -> Poly {
    normal_form_budget(f, basis, usize::MAX).expect("unbounded reduction")
}

fn normal_form_budget(f: &Poly, basis: &[Poly], max_terms: usize) -> Result<Poly> {
    let leads: Vec<(Monomial, BigRational)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g.leading_term().expect("nonzero basis element");
            (m.clone(), c.clone())
        })
        .collect();
    let mut p = f.clone();
    let mut rem = Poly::zero(f.nvars());
    while let Some((m, c)) = p.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        let hit = leads.iter().enumerate().find_map(|(i, (lm, _))| lm.quotient_of(&m).map(|t| (i, t)));
        match hit {
            Some((i, t)) => {
                let factor = &c / &leads[i].1;
                p.sub_mul_term(&basis[i], &t, &factor);
                if p.len() > max_terms {
                    return Err(Error::Budget(format!("intermediate polynomial exceeds {max_terms} terms")));
                }
            }
            None => {
                p.add_term(m.clone(), -c.clone());
                rem.add_term(m, c);
            }
        }
    }
    Ok(rem)
}

fn s_polynomial(f: &Poly, g: &Poly) -> Poly {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.quotient_of(&l).expect("lcm"), &fc.recip());
    let b = g.mul_term(&gm.quotient_of(&l).expect("lcm"), &gc.recip());
    &a - &b
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Poly], budget: Budget) -> Result<GroebnerBasis> {
    let mut basis: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    if basis.is_empty() {
        return Ok(GroebnerBasis { generators: Vec::new(), reduced: true });
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let mut processed = 0usize;
    while !pairs.is_empty() {
        // Normal strategy: smallest lcm degree first, ties by index.
        let (pos, _) = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, &(i, j))| {
                let l = basis[i].leading_monomial().unwrap().lcm(basis[j].leading_monomial().unwrap());
                (l.degree(), i, j)
            })
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(pos);
        let (li, lj) = (basis[i].leading_monomial().unwrap(), basis[j].leading_monomial().unwrap());
        if li.coprime(lj) {
            continue;
        }
        processed += 1;
        if processed > budget.max_pairs {
            return Err(Error::Budget(format!("more than {} S-pairs", budget.max_pairs)));
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let h = normal_form_budget(&s, &basis, budget.max_terms)?;
        if !h.is_zero() {
            let new = basis.len();
            basis.push(h.monic());
            for t in 0..new {
                pairs.push((t, new));
            }
        }
    }
    let reduced = reduce_basis(&basis);
    for a in 0..reduced.len() {
        for b in a + 1..reduced.len() {
            if !normal_form(&s_polynomial(&reduced[a], &reduced[b]), &reduced).is_zero() {
                return Err(Error::InvalidObject("an S-polynomial does not reduce to zero".into()));
            }
        }
    }
    Ok(GroebnerBasis { generators: reduced, reduced: true })
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis(basis: &[Poly]) -> bool {
    (0..basis.len()).all(|a| {
        (a + 1..basis.len()).all(|b| {
            let (la, lb) = (basis[a].leading_monomial().unwrap(), basis[b].leading_monomial().unwrap());
            la.coprime(lb) || normal_form(&s_polynomial(&basis[a], &basis[b]), basis).is_zero()
        })
    })
}

/// Minimize and inter-reduce a Gröbner basis, returning monic elements sorted
/// by descending leading monomial.
pub fn reduce_basis(basis: &[Poly]) -> Vec<Poly> {
    let mut monic: Vec<Poly> = basis.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    monic.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
    let mut minimal: Vec<Poly> = Vec::new();
    for (idx, g) in monic.iter().enumerate() {
        let lm = g.leading_monomial().unwrap();
        let redundant = monic.iter().enumerate().any(|(o, h)| {
            let hm = h.leading_monomial().unwrap();
            o != idx && hm.divides(lm) && (hm != lm || o < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly> = minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
        let (lm, _) = minimal[i].leading_term().unwrap();
        let mut tail = minimal[i].clone();
        tail.add_term(lm.clone(), -BigRational::one());
        let mut g = normal_form(&tail, &others);
        g.add_term(lm.clone(), BigRational::one());
        out.push(g);
    }
    out
}

/// Leading coefficients are 1 and no leading monomial divides a term of
/// another element.
pub fn is_reduced(basis: &[Poly]) -> bool {
    for (i, g) in basis.iter().enumerate() {
        let Some((lm, lc)) = g.leading_term() else {
            return false;
        };
        if !lc.is_one() {
            return false;
        }
        for (j, h) in basis.iter().enumerate() {
            if i != j && h.monomials().any(|m| lm.divides(m)) {
                return false;
            }
        }
    }
    true
}

/// Compare two reduced bases as sets.
pub fn same_basis(a: &[Poly], b: &[Poly]) -> bool {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    let key = |p: &Poly| p.leading_monomial().cloned();
    x.sort_by_key(key);
    y.sort_by_key(key);
    x == y
}

/// Monomials with all exponents `≤ cap` not divisible by any leading monomial,
/// in lex-ascending order.
pub fn standard_monomials(leads: &[Monomial], n: usize, cap: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    loop {
        let m = Monomial(e.clone());
        if !leads.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        // Odometer with the last variable fastest gives lex-ascending order.
        let mut p = n;
        loop {
            if p == 0 {
                return out;
            }
            p -= 1;
            if e[p] < cap {
                e[p] += 1;
                break;
            }
            e[p] = 0;
        }
    }
}
