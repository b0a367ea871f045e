//! r-partitions, standard r-tableaux, colored RSK, and graded Frobenius
//! characters as Schur expansions with polynomial coefficients in `q`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::colored::{factorial, multiset_partitions_with_content, Letter};
use crate::error::{Error, Result};
use crate::qseries::{q_binomial, QPoly};
use crate::Ring;

/// All partitions of `n`, in reverse lex order.
pub fn partitions(n: usize) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

pub fn conjugate_partition(p: &[u32]) -> Vec<u32> {
    let top = p.first().copied().unwrap_or(0);
    (1..=top).map(|i| p.iter().filter(|&&x| x >= i).count() as u32).collect()
}

/// Number of standard Young tableaux of a partition shape, by the hook length formula.
pub fn syt_count_partition(p: &[u32]) -> u128 {
    let n: u32 = p.iter().sum();
    let conj = conjugate_partition(p);
    let mut hooks = 1u128;
    for (i, &row) in p.iter().enumerate() {
        for j in 0..row as usize {
            hooks *= (row as usize - j + conj[j] as usize - i - 1) as u128;
        }
    }
    factorial(n as u64) / hooks
}

/// An r-tuple of partitions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RPartition {
    components: Vec<Vec<u32>>,
}

impl RPartition {
    pub fn new(components: Vec<Vec<u32>>) -> Result<Self> {
        for c in &components {
            if c.contains(&0) || c.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidObject(format!("{c:?} is not a partition")));
            }
        }
        if components.is_empty() {
            return Err(Error::InvalidObject("an r-partition needs r ≥ 1 components".into()));
        }
        Ok(RPartition { components })
    }

    pub fn empty(r: usize) -> Self {
        RPartition { components: vec![Vec::new(); r] }
    }

    pub fn components(&self) -> &[Vec<u32>] {
        &self.components
    }

    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().flatten().map(|&x| x as usize).sum()
    }

    pub fn conjugate(&self) -> Self {
        RPartition { components: self.components.iter().map(|c| conjugate_partition(c)).collect() }
    }

    /// `λ*`: the first `r − 1` components reversed, the last kept.
    pub fn dual(&self) -> Self {
        let r = self.r();
        let mut components: Vec<Vec<u32>> = self.components[..r - 1].iter().rev().cloned().collect();
        components.push(self.components[r - 1].clone());
        RPartition { components }
    }

    /// Number of standard r-tableaux of this shape.
    pub fn syt_count(&self) -> u128 {
        let n = self.size() as u64;
        let mut out = factorial(n);
        for c in &self.components {
            let m: u32 = c.iter().sum();
            out = out / factorial(m as u64) * syt_count_partition(c);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!(self.components)
    }
}

impl fmt::Display for RPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| {
                if c.is_empty() {
                    "∅".to_string()
                } else {
                    format!("({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                }
            })
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

/// All r-partitions of `n`.
pub fn r_partitions(n: usize, r: usize) -> Vec<RPartition> {
    let mut out = Vec::new();
    let mut cur: Vec<Vec<u32>> = Vec::new();
    fn rec(left: usize, r: usize, cur: &mut Vec<Vec<u32>>, out: &mut Vec<RPartition>) {
        if cur.len() == r - 1 {
            for p in partitions(left) {
                let mut c = cur.clone();
                c.push(p);
                out.push(RPartition { components: c });
            }
            return;
        }
        for m in 0..=left {
            for p in partitions(m) {
                cur.push(p);
                rec(left - m, r, cur, out);
                cur.pop();
            }
        }
    }
    rec(n, r, &mut cur, &mut out);
    out
}

/// A tuple of fillings of Young diagrams, one per color, each given by rows.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RTableau {
    components: Vec<Vec<Vec<u32>>>,
}

impl RTableau {
    pub fn new(components: Vec<Vec<Vec<u32>>>) -> Result<Self> {
        let t = RTableau { components };
        if t.components.is_empty() {
            return Err(Error::InvalidObject("an r-tableau needs r ≥ 1 components".into()));
        }
        for c in &t.components {
            if c.iter().any(|row| row.is_empty()) || c.windows(2).any(|w| w[0].len() < w[1].len()) {
                return Err(Error::InvalidObject(format!("{c:?} does not have partition shape")));
            }
        }
        Ok(t)
    }

    pub fn components(&self) -> &[Vec<Vec<u32>>] {
        &self.components
    }

    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn n(&self) -> usize {
        self.components.iter().flatten().map(|row| row.len()).sum()
    }

    pub fn shape(&self) -> RPartition {
        RPartition {
            components: self.components.iter().map(|c| c.iter().map(|row| row.len() as u32).collect()).collect(),
        }
    }

    pub fn is_semistandard(&self) -> bool {
        self.components.iter().all(|c| {
            c.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]))
                && c.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| below > above))
        })
    }

    pub fn is_standard(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        for &e in self.components.iter().flatten().flatten() {
            let e = e as usize;
            if e == 0 || e > n || seen[e] {
                return false;
            }
            seen[e] = true;
        }
        self.is_semistandard()
    }

    /// Component index (0-based) and row of entry `e`.
    fn locate(&self, e: u32) -> Option<(usize, usize)> {
        for (c, comp) in self.components.iter().enumerate() {
            for (i, row) in comp.iter().enumerate() {
                if row.contains(&e) {
                    return Some((c, i));
                }
            }
        }
        None
    }

    pub fn to_json(&self) -> Value {
        json!(self.components)
    }
}

impl fmt::Display for RTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| {
                let rows: Vec<String> =
                    c.iter().map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect();
                format!("[{}]", rows.join(" / "))
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableauStats {
    pub descents: Vec<usize>,
    pub des: usize,
    pub maj: u64,
}

/// `i` is a descent when `i + 1` sits in a lower row of the same component,
/// or in a component strictly to the right.
pub fn tableau_stats(t: &RTableau, r: u32) -> Result<TableauStats> {
    if !t.is_standard() {
        return Err(Error::InvalidObject(format!("{t} is not a standard r-tableau")));
    }
    if t.r() != r as usize {
        return Err(Error::InvalidParameters(format!("tableau has {} components, r = {r}", t.r())));
    }
    let n = t.n();
    let pos: Vec<(usize, usize)> = (1..=n as u32).map(|e| t.locate(e).expect("standard")).collect();
    let descents: Vec<usize> = (1..n)
        .filter(|&i| {
            let (c1, r1) = pos[i - 1];
            let (c2, r2) = pos[i];
            (c1 == c2 && r2 > r1) || c2 > c1
        })
        .collect();
    let colors: u64 = t.components.iter().enumerate().map(|(j, c)| j as u64 * c.iter().map(|row| row.len() as u64).sum::<u64>()).sum();
    let maj = r as u64 * descents.iter().map(|&i| i as u64).sum::<u64>() + colors;
    Ok(TableauStats { des: descents.len(), descents, maj })
}

/// All standard r-tableaux with `n` boxes, built by placing `1, …, n` at outer corners.
pub fn standard_tableaux(n: usize, r: usize) -> Vec<RTableau> {
    fn rec(e: u32, n: u32, cur: &mut Vec<Vec<Vec<u32>>>, out: &mut Vec<RTableau>) {
        if e > n {
            out.push(RTableau { components: cur.clone() });
            return;
        }
        for c in 0..cur.len() {
            let rows = cur[c].len();
            for i in 0..=rows {
                let len = if i < rows { cur[c][i].len() } else { 0 };
                let fits = i == 0 || cur[c][i - 1].len() > len;
                if !fits {
                    continue;
                }
                if i == rows {
                    cur[c].push(vec![e]);
                } else {
                    cur[c][i].push(e);
                }
                rec(e + 1, n, cur, out);
                if i == rows {
                    cur[c].pop();
                } else {
                    cur[c][i].pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(1, n as u32, &mut vec![Vec::new(); r], &mut out);
    out
}

pub fn standard_tableaux_of_shape(shape: &RPartition) -> Vec<RTableau> {
    let mut out = Vec::new();
    let n = shape.size() as u32;
    let mut cur = vec![Vec::new(); shape.r()];
    fn go(e: u32, n: u32, cur: &mut Vec<Vec<Vec<u32>>>, shape: &RPartition, out: &mut Vec<RTableau>) {
        if e > n {
            out.push(RTableau { components: cur.clone() });
            return;
        }
        for c in 0..cur.len() {
            let rows = cur[c].len();
            for i in 0..=rows {
                let len = if i < rows { cur[c][i].len() } else { 0 };
                let want = shape.components[c].get(i).copied().unwrap_or(0) as usize;
                if len >= want || (i > 0 && cur[c][i - 1].len() <= len) {
                    continue;
                }
                if i == rows {
                    cur[c].push(vec![e]);
                } else {
                    cur[c][i].push(e);
                }
                go(e + 1, n, cur, shape, out);
                if i == rows {
                    cur[c].pop();
                } else {
                    cur[c][i].pop();
                }
            }
        }
    }
    go(1, n, &mut cur, shape, &mut out);
    out
}

/// Row-insert `x` into a semistandard tableau, returning the row where a new box appeared.
fn row_insert(t: &mut Vec<Vec<u32>>, mut x: u32) -> usize {
    for (i, row) in t.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(p) => x = std::mem::replace(&mut row[p], x),
            None => {
                row.push(x);
                return i;
            }
        }
    }
    t.push(vec![x]);
    t.len() - 1
}

/// Colored RSK: letters of color `c` are row-inserted into component `c + 1`
/// of the insertion tableau `U`; the recording tableau `T` stores positions.
pub fn colored_rsk(w: &[Letter], r: u32) -> Result<(RTableau, RTableau)> {
    let mut u: Vec<Vec<Vec<u32>>> = vec![Vec::new(); r as usize];
    let mut t: Vec<Vec<Vec<u32>>> = vec![Vec::new(); r as usize];
    for (pos, l) in w.iter().enumerate() {
        if l.color >= r || l.value == 0 {
            return Err(Error::InvalidObject(format!("letter {l} not allowed for r = {r}")));
        }
        let c = l.color as usize;
        let row = row_insert(&mut u[c], l.value);
        if row == t[c].len() {
            t[c].push(Vec::new());
        }
        t[c][row].push(pos as u32 + 1);
    }
    Ok((RTableau { components: u }, RTableau { components: t }))
}

/// Inverse of [`colored_rsk`].
pub fn inverse_colored_rsk(u: &RTableau, t: &RTableau) -> Result<Vec<Letter>> {
    if u.shape() != t.shape() || !u.is_semistandard() || !t.is_standard() {
        return Err(Error::InvalidObject("need a semistandard and a standard tableau of equal shape".into()));
    }
    let n = t.n();
    let mut u = u.components.clone();
    let mut w = vec![Letter::new(0, 0); n];
    for e in (1..=n as u32).rev() {
        let (c, row) = t.locate(e).expect("standard");
        let comp = &mut u[c];
        let mut x = comp[row].pop().expect("corner");
        if comp[row].is_empty() {
            comp.pop();
        }
        for i in (0..row).rev() {
            let p = comp[i].iter().rposition(|&y| y < x).expect("reverse bump");
            x = std::mem::replace(&mut comp[i][p], x);
        }
        w[e as usize - 1] = Letter::new(x, c as u32);
    }
    Ok(w)
}

/// A finite sum `Σ_λ c_λ(q) s_λ` over r-partitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurSeries {
    r: usize,
    terms: BTreeMap<RPartition, QPoly>,
}

impl SchurSeries {
    pub fn zero(r: usize) -> Self {
        SchurSeries { r, terms: BTreeMap::new() }
    }

    pub fn single(lambda: RPartition, coeff: QPoly) -> Self {
        let mut s = SchurSeries::zero(lambda.r());
        s.add(lambda, &coeff);
        s
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn terms(&self) -> &BTreeMap<RPartition, QPoly> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &RPartition) -> QPoly {
        self.terms.get(lambda).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&mut self, lambda: RPartition, coeff: &QPoly) {
        let e = self.terms.entry(lambda.clone()).or_insert_with(QPoly::zero);
        *e = &*e + coeff;
        if e.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn add_series(&mut self, other: &SchurSeries) {
        for (l, c) in &other.terms {
            self.add(l.clone(), c);
        }
    }

    pub fn mul_q(&self, p: &QPoly) -> SchurSeries {
        let mut out = SchurSeries::zero(self.r);
        for (l, c) in &self.terms {
            out.add(l.clone(), &(c * p));
        }
        out
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(|c| c.degree()).max()
    }

    /// `q^top · F(q^{-1})` about the largest degree occurring anywhere in the series.
    pub fn rev_q(&self) -> SchurSeries {
        let Some(top) = self.top_degree() else {
            return self.clone();
        };
        SchurSeries { r: self.r, terms: self.terms.iter().map(|(l, c)| (l.clone(), c.rev_about(top))).collect() }
    }

    /// Componentwise `ω`: `s_λ ↦ s_{λ'}`.
    pub fn omega(&self) -> SchurSeries {
        SchurSeries { r: self.r, terms: self.terms.iter().map(|(l, c)| (l.conjugate(), c.clone())).collect() }
    }

    pub fn is_schur_positive(&self) -> bool {
        self.terms.values().all(|c| c.has_nonnegative_coeffs())
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(l, c)| json!({"lambda": l.to_json(), "coeffs": c.to_json()["coeffs"].clone()}))
                .collect(),
        )
    }

    /// One line per power of `q`, e.g. `q^2: s_{(2),∅} + s_{∅,(1,1)}`.
    pub fn pretty(&self) -> String {
        let top = self.top_degree().unwrap_or(0);
        let mut lines = Vec::new();
        for d in 0..=top {
            let parts: Vec<String> = self
                .terms
                .iter()
                .filter_map(|(l, c)| {
                    let a = c.coeff(d);
                    if a.is_zero() {
                        None
                    } else if a.is_one() {
                        Some(format!("s_{{{l}}}"))
                    } else {
                        Some(format!("{a} s_{{{l}}}"))
                    }
                })
                .collect();
            if !parts.is_empty() {
                lines.push(format!("q^{d}: {}", parts.join(" + ")));
            }
        }
        if lines.is_empty() {
            "0".to_string()
        } else {
            lines.join("\n")
        }
    }
}

/// Partitions `μ ⊆ λ` with `λ/μ` a vertical strip of size `j`.
fn remove_vertical_strips(lambda: &[u32], j: usize) -> Vec<Vec<u32>> {
    let rows = lambda.len();
    let mut out = Vec::new();
    for mask in 0u32..1 << rows {
        if mask.count_ones() as usize != j {
            continue;
        }
        let mu: Vec<u32> = lambda.iter().enumerate().map(|(i, &x)| x - (mask >> i & 1)).collect();
        if mu.windows(2).all(|w| w[0] >= w[1]) {
            out.push(mu.into_iter().filter(|&x| x > 0).collect());
        }
    }
    out
}

/// Partitions `ν ⊇ μ` with `ν/μ` a horizontal strip of size `z`.
fn add_horizontal_strips(mu: &[u32], z: u32) -> Vec<Vec<u32>> {
    fn rec(i: usize, left: u32, mu: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let m = mu.get(i).copied().unwrap_or(0);
        if i >= mu.len() {
            // At most one new row, of length ≤ the last row of μ.
            let cap = if i == 0 { u32::MAX } else { mu[i - 1] };
            if left <= cap {
                let mut nu = cur.clone();
                if left > 0 {
                    nu.push(left);
                }
                out.push(nu);
            }
            return;
        }
        let cap = if i == 0 { left } else { left.min(mu[i - 1] - m) };
        for add in 0..=cap {
            cur.push(m + add);
            rec(i + 1, left - add, mu, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, z, mu, &mut Vec::new(), &mut out);
    out
}

/// Removal of vertical `j`-strips from component `i` (1-based). Under the
/// pairing `⟨s_λ, s_{μ*}⟩ = δ_{λμ}`, multiplication by `e_j(x^{(i*)})` adds a
/// strip to component `i*` of `μ*`, which is component `i` of `μ`; so this is
/// the operator `e_j(x^{(i*)})^⊥`.
pub fn e_perp(series: &SchurSeries, j: usize, i: usize) -> Result<SchurSeries> {
    if i == 0 || i > series.r {
        return Err(Error::InvalidParameters(format!("component {i} outside 1..={}", series.r)));
    }
    let mut out = SchurSeries::zero(series.r);
    for (l, c) in &series.terms {
        for mu in remove_vertical_strips(&l.components[i - 1], j) {
            let mut comps = l.components.clone();
            comps[i - 1] = mu;
            out.add(RPartition { components: comps }, c);
        }
    }
    Ok(out)
}

/// Multiply by the one-row Schur function `s_{(z)}` in component `i` (1-based).
pub fn pieri_row(series: &SchurSeries, z: usize, i: usize) -> Result<SchurSeries> {
    if i == 0 || i > series.r {
        return Err(Error::InvalidParameters(format!("component {i} outside 1..={}", series.r)));
    }
    let mut out = SchurSeries::zero(series.r);
    for (l, c) in &series.terms {
        for nu in add_horizontal_strips(&l.components[i - 1], z as u32) {
            let mut comps = l.components.clone();
            comps[i - 1] = nu;
            out.add(RPartition { components: comps }, c);
        }
    }
    Ok(out)
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `D_{n,k}(x;q) = rev_q[Σ_T q^{maj(T) + r·C(n−k,2) − r(n−k)·des(T)} [des(T) choose n−k]_{q^r} s_{shape(T)'}]`,
/// with `D_{0,0} = 1` and `D_{n,0} = 0` for `n > 0`.
pub fn d_series(n: usize, k: usize, r: usize) -> Result<SchurSeries> {
    if k > n || r == 0 {
        return Err(Error::InvalidParameters(format!("need n ≥ k and r ≥ 1, got n={n} k={k} r={r}")));
    }
    if k == 0 {
        return Ok(if n == 0 { SchurSeries::single(RPartition::empty(r), QPoly::one()) } else { SchurSeries::zero(r) });
    }
    let mut raw = SchurSeries::zero(r);
    let m = n - k;
    for t in standard_tableaux(n, r) {
        let s = tableau_stats(&t, r as u32)?;
        if s.des < m {
            continue;
        }
        let exp = s.maj as i64 + (r * choose2(m)) as i64 - (r * m * s.des) as i64;
        assert!(exp >= 0, "negative exponent in the tableau sum");
        let coeff = q_binomial(s.des, m).substitute_power(r).shift(exp as usize);
        raw.add(t.shape().conjugate(), &coeff);
    }
    Ok(raw.rev_q())
}

/// Right-hand side of the `e⊥` recursion for `D_{n,k}`:
/// `q^{j(r−i) + r·C(j,2)} [k choose j]_{q^r} Σ_m q^{r(k−m)(n−j−m)} [j choose k−m]_{q^r} D_{n−j,m}`,
/// with `m` from `max(0, k − j)` to `min(k, n − j)`.
pub fn e_perp_recursion_rhs(n: usize, k: usize, j: usize, i: usize, r: usize) -> Result<SchurSeries> {
    let mut out = SchurSeries::zero(r);
    if j > n || j > k {
        return Ok(out);
    }
    let front = q_binomial(k, j).substitute_power(r).shift(j * (r - i) + r * choose2(j));
    for m in k.saturating_sub(j)..=k.min(n - j) {
        let inner = q_binomial(j, k - m).substitute_power(r).shift(r * (k - m) * (n - j - m));
        out.add_series(&d_series(n - j, m, r)?.mul_q(&(&front * &inner)));
    }
    Ok(out)
}

/// Graded Frobenius image of `S_{n,k}` (`D_{n,k}`) or of `R_{n,k}`
/// (`Σ_z q^{krz} s_{(∅,…,∅,(z))} · D_{n−z,k}`).
pub fn grfrob(ring: Ring, n: usize, k: usize, r: usize) -> Result<SchurSeries> {
    match ring {
        Ring::S => d_series(n, k, r),
        Ring::R => {
            if k > n || r == 0 {
                return Err(Error::InvalidParameters(format!("need n ≥ k and r ≥ 1, got n={n} k={k} r={r}")));
            }
            let mut out = SchurSeries::zero(r);
            for z in 0..=n - k {
                let d = d_series(n - z, k, r)?;
                out.add_series(&pieri_row(&d, z, r)?.mul_q(&QPoly::monomial(1, k * r * z)));
            }
            Ok(out)
        }
    }
}

/// `Σ_λ c_λ(q) · #SYT^r(λ)`.
pub fn hilb_from_frob(series: &SchurSeries) -> QPoly {
    series.terms.iter().map(|(l, c)| c.scale(&BigInt::from(l.syt_count()))).sum()
}

/// Coefficients of `x^β` in `M_{n,k}` and `I_{n,k}`: `Σ q^{maj}` and `Σ q^{coinv}`
/// over ordered multiset partitions with `k` blocks and content `β`.
pub fn maj_coinv_content_series(content: &[(Letter, usize)], k: usize, r: u32) -> (QPoly, QPoly) {
    let mut maj = QPoly::zero();
    let mut coinv = QPoly::zero();
    for mu in multiset_partitions_with_content(content, k, r) {
        maj = &maj + &QPoly::monomial(1, mu.maj() as usize);
        coinv = &coinv + &QPoly::monomial(1, mu.coinv() as usize);
    }
    (maj, coinv)
}

/// Content `β` as letters with multiplicities: entry `(i, j)` of `beta` is the
/// multiplicity of the letter `(j+1)^i`.
pub fn content_from_composition(beta: &[Vec<usize>]) -> Vec<(Letter, usize)> {
    let mut out = Vec::new();
    for (c, comp) in beta.iter().enumerate() {
        for (j, &m) in comp.iter().enumerate() {
            if m > 0 {
                out.push((Letter::new(j as u32 + 1, c as u32), m));
            }
        }
    }
    out
}
