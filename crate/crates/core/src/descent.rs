//! Descent monomials `b_g`, the descent bases `𝒟_{n,k}` of `S_{n,k}` and
//! `ℰ𝒟_{n,k}` of `R_{n,k}`, and straightening of monomials into them.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::colored::{self, Letter};
use crate::demazure::subsets;
use crate::error::{Error, Result};
use crate::poly::{elementary_powers, Monomial, Poly};
use crate::Ring;

/// `b_g = Π x_{π_i}^{r·d_i + c_i}` for a (partial) colored permutation with values in `[n]`.
pub fn descent_monomial(g: &[Letter], n: usize, r: u32) -> Result<Monomial> {
    let mut seen = vec![false; n + 1];
    for l in g {
        let v = l.value as usize;
        if v == 0 || v > n || seen[v] || l.color >= r {
            return Err(Error::InvalidObject(format!("{l} invalid in a colored permutation of [{n}]")));
        }
        seen[v] = true;
    }
    let d = d_sequence(g);
    let mut e = vec![0u32; n];
    for (i, l) in g.iter().enumerate() {
        e[l.value as usize - 1] = r * d[i] + l.color;
    }
    Ok(Monomial(e))
}

/// `d_i = |{j ∈ Des(g) : j ≥ i}|`.
pub fn d_sequence(g: &[Letter]) -> Vec<u32> {
    let des = colored::descents(g);
    (1..=g.len()).map(|i| des.iter().filter(|&&j| j >= i).count() as u32).collect()
}

pub fn des(g: &[Letter]) -> usize {
    colored::descents(g).len()
}

/// Everything the straightening step needs about a monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StraighteningData {
    pub g: Vec<Letter>,
    pub d: Vec<u32>,
    pub lambda: Vec<u32>,
    /// `μ(m)'`: exponents of `m / b_{g(m)}` along `g(m)`, divided by `r`.
    pub mu_conjugate: Vec<u32>,
    pub mu: Vec<u32>,
}

/// Conjugate of a weakly decreasing sequence, without trailing zeros.
pub fn conjugate(p: &[u32]) -> Vec<u32> {
    let top = p.first().copied().unwrap_or(0);
    (1..=top).map(|i| p.iter().filter(|&&x| x >= i).count() as u32).collect()
}

/// `g(m)`: letters sorted by decreasing exponent, ties by increasing index,
/// each colored by its exponent mod `r`.
pub fn group_element(m: &Monomial, r: u32) -> Vec<Letter> {
    let a = m.exps();
    let mut idx: Vec<usize> = (0..a.len()).collect();
    idx.sort_by_key(|&i| (Reverse(a[i]), i));
    idx.into_iter().map(|i| Letter::new(i as u32 + 1, a[i] % r)).collect()
}

pub fn straightening_data(m: &Monomial, r: u32) -> StraighteningData {
    let g = group_element(m, r);
    let d = d_sequence(&g);
    let a = m.exps();
    let lambda: Vec<u32> = g.iter().map(|l| a[l.value as usize - 1]).collect();
    let mu_conjugate: Vec<u32> = g
        .iter()
        .zip(&d)
        .map(|(l, &di)| {
            let rest = a[l.value as usize - 1]
                .checked_sub(r * di + l.color)
                .expect("b_{g(m)} divides m");
            assert_eq!(rest % r, 0);
            rest / r
        })
        .collect();
    assert!(mu_conjugate.windows(2).all(|w| w[0] >= w[1]), "μ(m)' is a partition");
    let mu = conjugate(&mu_conjugate);
    StraighteningData { g, d, lambda, mu_conjugate, mu }
}

fn inversions(g: &[Letter]) -> usize {
    let mut count = 0;
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            if g[i].value > g[j].value {
                count += 1;
            }
        }
    }
    count
}

fn dominated(a: &[u32], b: &[u32]) -> bool {
    let (mut sa, mut sb) = (0u64, 0u64);
    a.iter().zip(b).all(|(x, y)| {
        sa += *x as u64;
        sb += *y as u64;
        sa <= sb
    })
}

/// The partial order `m' ≺ m`: equal degree and either `λ(m') < λ(m)` in
/// dominance, or equal `λ` with more inversions in the uncolored `g(m')`.
pub fn precedes(m1: &Monomial, m2: &Monomial, r: u32) -> bool {
    if m1.degree() != m2.degree() {
        return false;
    }
    let d1 = straightening_data(m1, r);
    let d2 = straightening_data(m2, r);
    if d1.lambda == d2.lambda {
        inversions(&d1.g) > inversions(&d2.g)
    } else {
        dominated(&d1.lambda, &d2.lambda)
    }
}

/// A total order refining `≺`, used to pick the next monomial to straighten.
fn worklist_key(m: &Monomial, r: u32) -> (Vec<u32>, Reverse<usize>, Monomial) {
    let d = straightening_data(m, r);
    (d.lambda, Reverse(inversions(&d.g)), m.clone())
}

/// `e_μ(x^r) · b_{g(m)}`.
pub fn straightening_product(m: &Monomial, r: u32) -> Poly {
    let n = m.nvars();
    let data = straightening_data(m, r);
    let b = descent_monomial(&data.g, n, r).expect("g(m) is a colored permutation");
    let mut p = Poly::monomial(b);
    for &part in &data.mu {
        p = &p * &elementary_powers(n, part as usize, r);
    }
    p
}

/// `Σ = m − e_μ(x^r)·b_{g(m)}`, with every term checked to satisfy `m' ≺ m`.
pub fn straightening_remainder(m: &Monomial, r: u32) -> Result<Poly> {
    let prod = straightening_product(m, r);
    if !prod.coeff(m).is_one() {
        return Err(Error::InvalidObject(format!("{m} has coefficient {} in its straightening product", prod.coeff(m))));
    }
    let sigma = &Poly::monomial(m.clone()) - &prod;
    if let Some(bad) = sigma.monomials().find(|t| !precedes(t, m, r)) {
        return Err(Error::InvalidObject(format!("straightening of {m} produced {bad}, not below it")));
    }
    Ok(sigma)
}

/// Membership in `𝒟_{n,k}`.
pub fn in_descent_basis(m: &Monomial, k: usize, r: u32) -> bool {
    let n = m.nvars();
    if n == 0 || k > n {
        return n == 0 && k == 0;
    }
    if m.exps().iter().any(|&a| a >= k as u32 * r) {
        return false;
    }
    let data = straightening_data(m, r);
    let des_g = des(&data.g);
    des_g < k
        && data.mu_conjugate[n - k..].iter().all(|&q| q == 0)
        && data.mu_conjugate.first().is_none_or(|&q| (q as usize) < k - des_g)
}

/// Membership in `ℰ𝒟_{n,k}`, returning the stratum `z` (number of exponents equal to `kr`).
pub fn extended_stratum(m: &Monomial, k: usize, r: u32) -> Option<usize> {
    let n = m.nvars();
    if k == 0 {
        return m.is_one().then_some(0);
    }
    if k > n {
        return None;
    }
    let kr = k as u32 * r;
    let a = m.exps();
    if a.iter().any(|&x| x > kr) {
        return None;
    }
    let g = group_element(m, r);
    let z = a.iter().filter(|&&x| x == kr).count();
    if z > n - k {
        return None;
    }
    let tail = &g[z..];
    let des_t = des(tail);
    if des_t >= k {
        return None;
    }
    let b = descent_monomial(tail, n, r).ok()?;
    let mut quotients = Vec::with_capacity(tail.len());
    for l in tail {
        let v = l.value as usize - 1;
        let rest = a[v].checked_sub(b.exps()[v])?;
        if rest % r != 0 {
            return None;
        }
        quotients.push(rest / r);
    }
    let ok = quotients.windows(2).all(|w| w[0] >= w[1])
        && quotients[(n - k - z)..].iter().all(|&q| q == 0)
        && quotients.first().is_none_or(|&q| (q as usize) < k - des_t);
    ok.then_some(z)
}

fn push_descent_monomials(n: usize, k: usize, r: u32, out: &mut BTreeSet<Monomial>) {
    if k > n {
        return;
    }
    if n == 0 {
        if k == 0 {
            out.insert(Monomial(vec![]));
        }
        return;
    }
    for g in colored::colored_permutations(n, r) {
        let des_g = des(&g);
        if des_g >= k {
            continue;
        }
        let base = descent_monomial(&g, n, r).expect("colored permutation");
        let bound = (k - des_g) as u32;
        // Weakly decreasing (i_1, …, i_{n−k}) with i_1 < bound.
        let len = n - k;
        let mut seq = vec![0u32; len];
        loop {
            let mut e = base.0.clone();
            for (j, &i) in seq.iter().enumerate() {
                e[g[j].value as usize - 1] += r * i;
            }
            out.insert(Monomial(e));
            // Next weakly decreasing sequence, ordered by its last changing place.
            let mut p = len;
            let advanced = loop {
                if p == 0 {
                    break false;
                }
                p -= 1;
                let cap = if p == 0 { bound - 1 } else { seq[p - 1] };
                if seq[p] < cap {
                    seq[p] += 1;
                    for q in p + 1..len {
                        seq[q] = 0;
                    }
                    break true;
                }
            };
            if !advanced {
                break;
            }
        }
    }
}

/// `𝒟_{n,k}` in lex-ascending order.
pub fn descent_basis(n: usize, k: usize, r: u32) -> Vec<Monomial> {
    let mut set = BTreeSet::new();
    push_descent_monomials(n, k, r, &mut set);
    set.into_iter().collect()
}

/// `ℰ𝒟_{n,k}`, each monomial tagged with its stratum `z`, in lex-ascending order.
pub fn extended_descent_basis(n: usize, k: usize, r: u32) -> Vec<(Monomial, usize)> {
    if k == 0 {
        return vec![(Monomial::one(n), 0)];
    }
    if k > n {
        return Vec::new();
    }
    let kr = k as u32 * r;
    let mut out: BTreeMap<Monomial, usize> = BTreeMap::new();
    for z in 0..=n - k {
        let small = descent_basis(n - z, k, r);
        for zero in subsets(n, z) {
            let rest: Vec<usize> = (1..=n).filter(|v| !zero.contains(v)).collect();
            for m in &small {
                let mut e = vec![0u32; n];
                for &v in &zero {
                    e[v - 1] = kr;
                }
                for (t, &v) in rest.iter().enumerate() {
                    e[v - 1] = m.exps()[t];
                }
                out.insert(Monomial(e), z);
            }
        }
    }
    out.into_iter().collect()
}

/// What happened to one monomial during straightening.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub monomial: Monomial,
    pub coeff: BigRational,
    pub action: &'static str,
    /// A generator multiple that the straightening branch would also have handled.
    pub both_paths: bool,
}

impl TraceStep {
    pub fn to_json(&self) -> Value {
        json!({
            "monomial": self.monomial.0,
            "coeff": self.coeff.to_string(),
            "action": self.action,
            "both_paths": self.both_paths,
        })
    }
}

/// Coefficients of a coset in a descent basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentExpansion {
    pub ring: Ring,
    pub terms: BTreeMap<Monomial, BigRational>,
}

impl DescentExpansion {
    pub fn to_poly(&self, n: usize) -> Poly {
        let mut p = Poly::zero(n);
        for (m, c) in &self.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }
}

/// Default cap on the number of straightening steps.
pub const STEP_BUDGET: usize = 1_000_000;

pub fn expand_in_basis(m: &Monomial, k: usize, r: u32, ring: Ring) -> Result<DescentExpansion> {
    expand_traced(m, k, r, ring, STEP_BUDGET, false).map(|(e, _)| e)
}

/// Straighten `m` modulo `J_{n,k}` (ring S) or `I_{n,k}` (ring R).
pub fn expand_traced(
    m: &Monomial,
    k: usize,
    r: u32,
    ring: Ring,
    budget: usize,
    trace: bool,
) -> Result<(DescentExpansion, Vec<TraceStep>)> {
    if k > m.nvars() {
        return Err(Error::InvalidParameters(format!("k = {k} exceeds n = {}", m.nvars())));
    }
    let kr = k as u32 * r;
    let mut steps = Vec::new();
    let mut terms: BTreeMap<Monomial, BigRational> = BTreeMap::new();
    let mut work: BTreeMap<(Vec<u32>, Reverse<usize>, Monomial), BigRational> = BTreeMap::new();
    work.insert(worklist_key(m, r), BigRational::one());
    let mut count = 0usize;
    while let Some(((_, _, cur), coeff)) = work.pop_last() {
        count += 1;
        if count > budget {
            return Err(Error::Budget(format!("straightening of {m} exceeded {budget} steps")));
        }
        if coeff.is_zero() {
            continue;
        }
        let action = classify(&cur, k, r, ring)?;
        if trace {
            let both_paths = action == "zero" && straightenable(&cur, k, r, ring);
            steps.push(TraceStep { monomial: cur.clone(), coeff: coeff.clone(), action, both_paths });
        }
        match action {
            "zero" => {}
            "basis" => {
                let e = terms.entry(cur).or_insert_with(BigRational::zero);
                *e += coeff;
            }
            _ => {
                let sigma = straightening_remainder(&cur, r)?;
                for (t, c) in sigma.terms() {
                    let e = work.entry(worklist_key(t, r)).or_insert_with(BigRational::zero);
                    *e += &coeff * c;
                }
            }
        }
    }
    terms.retain(|_, c| !c.is_zero());
    if ring == Ring::R && m.exps().iter().all(|&a| a <= kr) {
        let z = m.exps().iter().filter(|&&a| a == kr).count();
        for t in terms.keys() {
            let zt = t.exps().iter().filter(|&&a| a == kr).count();
            if zt > z {
                return Err(Error::InvalidObject(format!("expansion of {m} reaches stratum {zt} > {z}")));
            }
        }
    }
    Ok((DescentExpansion { ring, terms }, steps))
}

fn straightenable(m: &Monomial, k: usize, r: u32, ring: Ring) -> bool {
    let n = m.nvars();
    let data = straightening_data(m, r);
    let des_g = des(&data.g);
    let mu1 = data.mu.first().copied().unwrap_or(0) as usize;
    mu1 + k > n
        || match ring {
            Ring::S => des_g >= k,
            Ring::R => des_g > k,
        }
}

/// `"zero"`: a generator multiple; `"basis"`: a basis element; `"straighten"`:
/// replace by its straightening remainder.
fn classify(m: &Monomial, k: usize, r: u32, ring: Ring) -> Result<&'static str> {
    let kr = k as u32 * r;
    let a = m.exps();
    match ring {
        Ring::S => {
            if a.iter().any(|&x| x >= kr) {
                return Ok("zero");
            }
            if straightenable(m, k, r, ring) {
                return Ok("straighten");
            }
            if in_descent_basis(m, k, r) {
                Ok("basis")
            } else {
                Err(Error::InvalidObject(format!("{m} escaped every case of the S straightening")))
            }
        }
        Ring::R => {
            if a.iter().any(|&x| x > kr) {
                return Ok("zero");
            }
            if k == 0 {
                return Ok(if m.is_one() { "basis" } else { "zero" });
            }
            if straightenable(m, k, r, ring) {
                return Ok("straighten");
            }
            if extended_stratum(m, k, r).is_some() {
                Ok("basis")
            } else {
                Err(Error::InvalidObject(format!("{m} escaped every case of the R straightening")))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored::parse_word;

    #[test]
    fn worked_descent_monomial() {
        let g = parse_word("3^2 7^0 1^1 6^1 8^1 2^0 4^2 5^1").unwrap();
        assert_eq!(descent_monomial(&g, 8, 3).unwrap(), Monomial(vec![4, 3, 8, 2, 1, 4, 6, 4]));
    }

    #[test]
    fn worked_mu() {
        let m = Monomial(vec![7, 3, 14, 2, 1, 7, 12, 7]);
        let d = straightening_data(&m, 3);
        assert_eq!(colored::format_word(&d.g), "3^2 7^0 1^1 6^1 8^1 2^0 4^2 5^1");
        assert_eq!(d.d, vec![2, 2, 1, 1, 1, 1, 0, 0]);
        assert_eq!(d.mu, vec![5, 2]);
    }

    #[test]
    fn conjugates() {
        assert_eq!(conjugate(&[2, 2, 1, 1, 1, 0, 0, 0]), vec![5, 2]);
        assert_eq!(conjugate(&[3]), vec![1, 1, 1]);
        assert_eq!(conjugate(&[]), Vec::<u32>::new());
    }
}
