//! Skip monomials, the nonskip families `ℳ_{n,k}`, `𝒩_{n,k}`, `𝒩_{n,k,s}`, their
//! shuffle description, and the bijection `Ψ: F_{n,k} → ℳ_{n,k}` with inverse `Φ`.

use crate::colored::{self, Face, Letter, OrderedSetPartition};
use crate::error::{Error, Result};
use crate::poly::Monomial;
use crate::Ring;

/// A skip set `S ⊆ [n]` with its composition `γ(S)` and monomial `x(S)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkipData {
    pub set: Vec<usize>,
    pub composition: Vec<u32>,
    pub monomial: Monomial,
}

impl SkipData {
    /// `γ(S)` read right to left.
    pub fn reversed_composition(&self) -> Vec<u32> {
        self.composition.iter().rev().copied().collect()
    }
}

/// `γ(S)_{s_j} = s_j − j + 1`, zero off `S`.
pub fn skip_composition(set: &[usize], n: usize) -> Result<Vec<u32>> {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != set.len() || sorted.iter().any(|&s| s == 0 || s > n) {
        return Err(Error::InvalidParameters(format!("{set:?} is not a subset of 1..={n}")));
    }
    let mut gamma = vec![0u32; n];
    for (j, &s) in sorted.iter().enumerate() {
        gamma[s - 1] = (s - j) as u32;
    }
    Ok(gamma)
}

pub fn skip_data(set: &[usize], n: usize) -> Result<SkipData> {
    let composition = skip_composition(set, n)?;
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    Ok(SkipData { set: sorted, monomial: Monomial(composition.clone()), composition })
}

/// `x(S)^r | m`.
pub fn skip_divides(set: &[usize], exps: &[u32], r: u32) -> bool {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.iter().enumerate().all(|(j, &s)| exps[s - 1] >= r * (s - j) as u32)
}

/// The largest `S` with `x(S)^r | m`, found greedily: `i` joins `S` whenever
/// `a_i ≥ r·(i − |S ∩ [i−1]|)`. The result is the unique skip set of maximum size.
pub fn max_skip_set(exps: &[u32], r: u32) -> Vec<usize> {
    let mut set = Vec::new();
    for (i0, &a) in exps.iter().enumerate() {
        let i = i0 + 1;
        if a as u64 >= r as u64 * (i - set.len()) as u64 {
            set.push(i);
        }
    }
    set
}

/// `(n,k)`-nonskip (`strong = false`) or strongly nonskip (`strong = true`).
pub fn is_nonskip(m: &Monomial, k: usize, r: u32, strong: bool) -> bool {
    let n = m.nvars();
    if k > n {
        return false;
    }
    let cap = k as u32 * r;
    let ok_powers = m.exps().iter().all(|&a| if strong { a < cap } else { a <= cap });
    ok_powers && max_skip_set(m.exps(), r).len() < n - k + 1
}

/// Monomials componentwise below some shuffle of `(r−1, 2r−1, …, kr−1)` with
/// `n−k` copies of `kr` (ring R) or `kr−1` (ring S), in lex-ascending order.
pub fn shuffle_basis(n: usize, k: usize, r: u32, ring: Ring) -> Vec<Monomial> {
    let a_seq: Vec<i64> = (1..=k as i64).map(|i| i * r as i64 - 1).collect();
    let b_val = k as i64 * r as i64 - if ring == Ring::S { 1 } else { 0 };
    let mut out = Vec::new();
    let mut exps = Vec::with_capacity(n);
    // States are the number of `A` entries consumed so far.
    shuffle_dfs(n, k, &a_seq, b_val, &[0], &mut exps, &mut out);
    out
}

fn shuffle_dfs(
    n: usize,
    k: usize,
    a_seq: &[i64],
    b_val: i64,
    states: &[usize],
    exps: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    let i = exps.len();
    if i == n {
        out.push(Monomial(exps.clone()));
        return;
    }
    let mut cap: i64 = -1;
    for &a in states {
        let b = i - a;
        if a < k {
            cap = cap.max(a_seq[a]);
        }
        if b < n - k {
            cap = cap.max(b_val);
        }
    }
    for e in 0..=cap {
        let mut next: Vec<usize> = Vec::new();
        for &a in states {
            let b = i - a;
            if a < k && e <= a_seq[a] && !next.contains(&(a + 1)) {
                next.push(a + 1);
            }
            if b < n - k && e <= b_val && !next.contains(&a) {
                next.push(a);
            }
        }
        if !next.is_empty() {
            exps.push(e as u32);
            shuffle_dfs(n, k, a_seq, b_val, &next, exps, out);
            exps.pop();
        }
    }
}

/// For `m ∈ ℳ_{n,k}`, the unique `S ⊆ [n]` with `|S| = n−k` such that
/// `x(S)^r | m(S)^r·m` and no skip set of size `n−k+1` divides `m(S)^r·m`.
/// Computed as the lexicographically final member of the candidate family.
pub fn unique_skip_set(m: &Monomial, k: usize, r: u32) -> Result<Vec<usize>> {
    let n = m.nvars();
    if !is_nonskip(m, k, r, false) {
        return Err(Error::NotInFamily(format!("{m} is not ({n},{k})-nonskip")));
    }
    let size = n - k;
    let exps = m.exps();
    let in_family = |set: &[usize]| {
        set.iter()
            .enumerate()
            .all(|(j, &s)| r as u64 * (s - j) as u64 <= exps[s - 1] as u64 + r as u64)
    };
    let mut best: Option<Vec<usize>> = None;
    let mut set: Vec<usize> = (1..=size).collect();
    loop {
        if in_family(&set) {
            best = Some(set.clone());
        }
        if !next_subset(&mut set, n) {
            break;
        }
    }
    let set = best.expect("{1, …, n−k} always qualifies");
    let lifted = multiply_squarefree(m, &set, r);
    debug_assert!(skip_divides(&set, lifted.exps(), r));
    if max_skip_set(lifted.exps(), r).len() > size {
        return Err(Error::InvalidObject(format!("skip set {set:?} for {m} fails maximality")));
    }
    Ok(set)
}

/// Advance a sorted `t`-subset of `[n]` to its lex successor.
pub fn next_subset(set: &mut [usize], n: usize) -> bool {
    let t = set.len();
    for p in (0..t).rev() {
        if set[p] < n - (t - 1 - p) {
            set[p] += 1;
            for q in p + 1..t {
                set[q] = set[q - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// `m(S)^r · m`.
pub fn multiply_squarefree(m: &Monomial, set: &[usize], r: u32) -> Monomial {
    let mut e = m.0.clone();
    for &s in set {
        e[s - 1] += r;
    }
    Monomial(e)
}

/// `Ψ(σ)`, built by inserting `1, 2, …, n` in turn.
pub fn psi(face: &Face) -> Result<Monomial> {
    let n = face.n();
    let r = face.r();
    let zero = face.zero_block();
    let blocks = face.nonzero_blocks();
    // Block index and color of each letter; `None` for zero-block letters.
    let mut place: Vec<Option<(usize, u32)>> = vec![None; n + 1];
    for (b, block) in blocks.iter().enumerate() {
        for l in block {
            place[l.value as usize] = Some((b, l.color));
        }
    }
    debug_assert!(zero.iter().all(|&z| place[z as usize].is_none()));
    let mut seen = vec![false; blocks.len()];
    let mut exps: Vec<u32> = Vec::with_capacity(n);
    for v in 1..=n {
        let k_now = seen.iter().filter(|&&x| x).count();
        match place[v] {
            None => exps.push(k_now as u32 * r),
            Some((b, c)) => {
                let idx = seen[..b].iter().filter(|&&x| x).count() as u32;
                let e = r * idx + (r - c - 1);
                if seen[b] {
                    exps.push(e);
                } else {
                    let prev = Monomial(exps.clone());
                    let set = unique_skip_set(&prev, k_now, r)?;
                    exps = multiply_squarefree(&prev, &set, r).0;
                    exps.push(e);
                    seen[b] = true;
                }
            }
        }
    }
    Ok(Monomial(exps))
}

/// One row of the table protocol computing `Φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiStep {
    pub n: usize,
    pub k: usize,
    pub kind: &'static str,
    pub skip_set: Vec<usize>,
    pub j: Option<usize>,
    pub c: Option<u32>,
}

/// `Φ(m)` for `m ∈ ℳ_{n,k}`.
pub fn phi(m: &Monomial, k: usize, r: u32) -> Result<Face> {
    phi_traced(m, k, r).map(|(f, _)| f)
}

/// `Φ(m)` together with the rows of the table protocol.
pub fn phi_traced(m: &Monomial, k: usize, r: u32) -> Result<(Face, Vec<PhiStep>)> {
    let n0 = m.nvars();
    if !is_nonskip(m, k, r, false) {
        return Err(Error::NotInFamily(format!("{m} is not ({n0},{k})-nonskip")));
    }
    let mut blocks: Vec<Vec<Letter>> = vec![Vec::new(); k];
    let mut frozen = vec![false; k];
    let mut zero: Vec<u32> = Vec::new();
    let mut exps = m.0.clone();
    let mut k = k;
    let mut steps = Vec::new();
    for n in (1..=n0).rev() {
        let a = exps.pop().expect("one exponent per letter");
        let kr = k as u32 * r;
        if a == kr {
            zero.push(n as u32);
            steps.push(PhiStep { n, k, kind: "zero", skip_set: vec![], j: None, c: None });
            continue;
        }
        let j = (a / r) as usize;
        let c = r - 1 - a % r;
        let unfrozen: Vec<usize> = (0..blocks.len()).filter(|&b| !frozen[b]).collect();
        let target = *unfrozen
            .get(j)
            .ok_or_else(|| Error::NotInFamily(format!("exponent {a} of x_{n} too large")))?;
        blocks[target].push(Letter::new(n as u32, c));
        let skip = max_skip_set(&exps, r);
        if skip.len() < n - k {
            steps.push(PhiStep { n, k, kind: "star", skip_set: vec![], j: Some(j), c: Some(c) });
        } else {
            debug_assert_eq!(skip.len(), n - k);
            for &s in &skip {
                exps[s - 1] -= r;
            }
            frozen[target] = true;
            steps.push(PhiStep { n, k, kind: "bar", skip_set: skip, j: Some(j), c: Some(c) });
            k -= 1;
        }
    }
    debug_assert!(frozen.iter().all(|&f| f));
    Ok((Face::new(zero, blocks, r)?, steps))
}

/// Exponent suffix `(rs + r−1, r(s+1) + r−1, …, r(k−1) + r−1)` carried by the
/// big letters of `OP_{n,k,s}`.
pub fn nks_suffix(k: usize, s: usize, r: u32) -> Vec<u32> {
    (s..k).map(|i| r * i as u32 + r - 1).collect()
}

/// Membership in `𝒩_{n,k,s}`: `x_i^{kr} ∤ m` and no skip set of size `n−s+1`.
pub fn is_nks(m: &Monomial, k: usize, s: usize, r: u32) -> bool {
    let n = m.nvars();
    m.exps().iter().all(|&a| a < k as u32 * r) && max_skip_set(m.exps(), r).len() < n - s + 1
}

/// Counts for the `S_{n,k,s}` family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NksCounts {
    pub monomials: u64,
    pub partitions: u64,
    pub suffix_filtered: u64,
}

/// `|𝒩_{n,k,s}|`, `|OP_{n,k,s}|` and the number of monomials of `𝒩_{n+k−s,k}`
/// ending in the big-letter suffix, each by direct enumeration.
pub fn count_nks(n: usize, k: usize, s: usize, r: u32) -> Result<NksCounts> {
    if !(n >= k && k >= s && s >= 1 && r >= 1) {
        return Err(Error::InvalidParameters(format!("need n ≥ k ≥ s ≥ 1, got ({n},{k},{s})")));
    }
    let cap = k as u32 * r;
    let suffix = nks_suffix(k, s, r);
    let mut monomials = 0u64;
    let mut suffix_filtered = 0u64;
    let mut exps = vec![0u32; n];
    loop {
        let m = Monomial(exps.clone());
        if is_nks(&m, k, s, r) {
            monomials += 1;
        }
        let mut long = exps.clone();
        long.extend_from_slice(&suffix);
        if is_nonskip(&Monomial(long), k, r, true) {
            suffix_filtered += 1;
        }
        if !odometer(&mut exps, cap) {
            break;
        }
    }
    let partitions = colored::ordered_set_partitions_nks(n, k, s, r)?.count() as u64;
    Ok(NksCounts { monomials, partitions, suffix_filtered })
}

fn odometer(d: &mut [u32], base: u32) -> bool {
    for x in d.iter_mut() {
        *x += 1;
        if *x < base {
            return true;
        }
        *x = 0;
    }
    false
}

/// `Ψ` applied to an element of `OP_{n,k,s}` viewed as a face of `[n+k−s]`.
pub fn psi_osp(sigma: &OrderedSetPartition) -> Result<Monomial> {
    psi(&sigma.clone().into_face())
}
