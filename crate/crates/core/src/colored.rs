//! Colored letters and words, ordered set and multiset partitions, faces of the
//! Coxeter complex of `Z_r ≀ S_n`, their `maj`/`coinv` statistics, and enumeration.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A letter `value^color` with `color < r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub value: u32,
    pub color: u32,
}

impl Letter {
    pub const fn new(value: u32, color: u32) -> Self {
        Letter { value, color }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.value, self.color)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LetterOrder {
    /// `<`: larger colors are smaller; ties broken by value.
    ColorMajor,
    /// `≺`: smaller values are smaller; ties broken by larger color first.
    ValueMajor,
}

pub fn cmp_color_major(a: &Letter, b: &Letter) -> Ordering {
    b.color.cmp(&a.color).then(a.value.cmp(&b.value))
}

pub fn cmp_value_major(a: &Letter, b: &Letter) -> Ordering {
    a.value.cmp(&b.value).then(b.color.cmp(&a.color))
}

pub fn compare(a: &Letter, b: &Letter, order: LetterOrder) -> Ordering {
    match order {
        LetterOrder::ColorMajor => cmp_color_major(a, b),
        LetterOrder::ValueMajor => cmp_value_major(a, b),
    }
}

/// Parse a letter written `V^C`.
pub fn parse_letter(s: &str) -> Result<Letter> {
    let (v, c) = s
        .split_once('^')
        .ok_or_else(|| Error::Parse(format!("expected V^C, got `{s}`")))?;
    let value = v.parse::<u32>().map_err(|_| Error::Parse(format!("bad value in `{s}`")))?;
    let color = c.parse::<u32>().map_err(|_| Error::Parse(format!("bad color in `{s}`")))?;
    Ok(Letter::new(value, color))
}

/// Parse a whitespace separated word such as `3^0 4^1 6^2`.
pub fn parse_word(s: &str) -> Result<Vec<Letter>> {
    s.split_whitespace().map(parse_letter).collect()
}

pub fn format_word(w: &[Letter]) -> String {
    w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn check_colors(w: &[Letter], r: u32) -> Result<()> {
    match w.iter().find(|l| l.color >= r || l.value == 0) {
        Some(l) => Err(Error::InvalidObject(format!("letter {l} invalid for r = {r}"))),
        None => Ok(()),
    }
}

/// 1-based positions `i` with `w_i > w_{i+1}` under `<`.
pub fn descents(w: &[Letter]) -> Vec<usize> {
    (1..w.len())
        .filter(|&i| cmp_color_major(&w[i - 1], &w[i]) == Ordering::Greater)
        .collect()
}

/// 1-based positions `i` with `w_i < w_{i+1}` under `<`.
pub fn ascents(w: &[Letter]) -> Vec<usize> {
    (1..w.len())
        .filter(|&i| cmp_color_major(&w[i - 1], &w[i]) == Ordering::Less)
        .collect()
}

pub fn color_sum(w: &[Letter]) -> u64 {
    w.iter().map(|l| l.color as u64).sum()
}

/// `maj(w) = c(w) + r·Σ_{i ∈ Des(w)} i`.
pub fn maj_word(w: &[Letter], r: u32) -> u64 {
    color_sum(w) + r as u64 * descents(w).iter().map(|&i| i as u64).sum::<u64>()
}

pub fn is_colored_permutation(w: &[Letter]) -> bool {
    let n = w.len();
    let mut seen = vec![false; n + 1];
    for l in w {
        let v = l.value as usize;
        if v == 0 || v > n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

fn sort_block(block: &mut [Letter]) {
    block.sort_by(cmp_value_major);
}

/// Star form of a block sequence: blocks sorted decreasingly under `<` and
/// concatenated, together with the 1-based positions that are followed by a
/// letter of the same block.
pub fn star_form_of(blocks: &[Vec<Letter>]) -> (Vec<Letter>, Vec<usize>) {
    let mut g = Vec::new();
    let mut stars = Vec::new();
    for block in blocks {
        let mut b = block.clone();
        b.sort_by(|x, y| cmp_color_major(y, x));
        for (t, l) in b.iter().enumerate() {
            g.push(*l);
            if t + 1 < b.len() {
                stars.push(g.len());
            }
        }
    }
    (g, stars)
}

/// `maj(g, S) = c + r·[Σ_{i∈Des(g)} i − Σ_{i∈S} |Des(g) ∩ {i, …, n}|]`.
pub fn maj_star(g: &[Letter], stars: &[usize], r: u32) -> Result<u64> {
    let des = descents(g);
    if let Some(s) = stars.iter().find(|s| !des.contains(s)) {
        return Err(Error::InvalidObject(format!("star at {s} is not a descent")));
    }
    let total: i64 = des.iter().map(|&i| i as i64).sum();
    let removed: i64 = stars
        .iter()
        .map(|&s| des.iter().filter(|&&d| d >= s).count() as i64)
        .sum();
    let bracket = total - removed;
    debug_assert!(bracket >= 0);
    Ok(color_sum(g) + r as u64 * bracket as u64)
}

/// Number of coinversion pairs, comparing letters under `≺`.
///
/// Two occurrences of the same letter in different blocks count once when
/// either of them is minimal in its block.
pub fn coinversion_pair_count(blocks: &[Vec<Letter>]) -> u64 {
    let mins: Vec<Letter> = blocks
        .iter()
        .map(|b| *b.iter().min_by(|x, y| cmp_value_major(x, y)).expect("nonempty block"))
        .collect();
    let mut count = 0u64;
    for p in 0..blocks.len() {
        for q in p + 1..blocks.len() {
            for x in &blocks[p] {
                let x_min = *x == mins[p];
                for y in &blocks[q] {
                    let y_min = *y == mins[q];
                    let counted = match cmp_value_major(x, y) {
                        Ordering::Less | Ordering::Equal => x_min || y_min,
                        Ordering::Greater => x_min && !y_min,
                    };
                    if counted {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

/// `coinv = [n(r−1) − c] + r·(number of coinversion pairs)`.
pub fn coinv_of_blocks(blocks: &[Vec<Letter>], r: u32) -> u64 {
    let n: u64 = blocks.iter().map(|b| b.len() as u64).sum();
    let c: u64 = blocks.iter().map(|b| color_sum(b)).sum();
    n * (r as u64 - 1) - c + r as u64 * coinversion_pair_count(blocks)
}

pub fn maj_of_blocks(blocks: &[Vec<Letter>], r: u32) -> u64 {
    let (g, stars) = star_form_of(blocks);
    maj_star(&g, &stars, r).expect("stars of a block sequence are descents")
}

fn format_blocks(zero: &[u32], blocks: &[Vec<Letter>]) -> String {
    let mut parts: Vec<String> = Vec::new();
    if !zero.is_empty() {
        parts.push(zero.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
    }
    for b in blocks {
        parts.push(format_word(b));
    }
    if parts.is_empty() {
        "( )".to_string()
    } else {
        format!("( {} )", parts.join(" | "))
    }
}

/// Parse `( b11 b12 | b21 … )`; a first block of bare values is the zero block.
fn parse_blocks(s: &str) -> Result<(Vec<u32>, Vec<Vec<Letter>>)> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected parenthesised blocks, got `{s}`")))?;
    let mut zero = Vec::new();
    let mut blocks = Vec::new();
    if inner.trim().is_empty() {
        return Ok((zero, blocks));
    }
    for (idx, raw) in inner.split('|').enumerate() {
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(Error::Parse(format!("empty block in `{s}`")));
        }
        let bare = tokens.iter().filter(|t| !t.contains('^')).count();
        if bare == tokens.len() {
            if idx != 0 {
                return Err(Error::Parse(format!("uncolored block must come first in `{s}`")));
            }
            for tok in tokens {
                zero.push(tok.parse::<u32>().map_err(|_| Error::Parse(format!("bad value `{tok}`")))?);
            }
        } else if bare == 0 {
            blocks.push(tokens.into_iter().map(parse_letter).collect::<Result<Vec<_>>>()?);
        } else {
            return Err(Error::Parse(format!("block mixes colored and bare letters in `{s}`")));
        }
    }
    Ok((zero, blocks))
}

fn check_ground_set(values: impl Iterator<Item = u32>, n: usize) -> Result<()> {
    let mut seen = vec![false; n + 1];
    for v in values {
        let vi = v as usize;
        if vi == 0 || vi > n || seen[vi] {
            return Err(Error::InvalidObject(format!("letter values must partition 1..={n}")));
        }
        seen[vi] = true;
    }
    Ok(())
}

fn check_blocks(blocks: &[Vec<Letter>], r: u32) -> Result<()> {
    for b in blocks {
        if b.is_empty() {
            return Err(Error::InvalidObject("empty block".into()));
        }
        check_colors(b, r)?;
    }
    Ok(())
}

/// An r-colored ordered set partition of `[n]`, blocks stored ascending under `≺`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedSetPartition {
    blocks: Vec<Vec<Letter>>,
    r: u32,
}

impl OrderedSetPartition {
    pub fn new(mut blocks: Vec<Vec<Letter>>, r: u32) -> Result<Self> {
        check_blocks(&blocks, r)?;
        let n = blocks.iter().map(|b| b.len()).sum();
        check_ground_set(blocks.iter().flatten().map(|l| l.value), n)?;
        blocks.iter_mut().for_each(|b| sort_block(b));
        Ok(OrderedSetPartition { blocks, r })
    }

    /// Build from a star form `(g, S)`; positions in `S` glue `g_i` to `g_{i+1}`.
    pub fn from_star_form(g: &[Letter], stars: &[usize], r: u32) -> Result<Self> {
        if !is_colored_permutation(g) {
            return Err(Error::InvalidObject("star form needs a colored permutation".into()));
        }
        let des = descents(g);
        if let Some(s) = stars.iter().find(|s| !des.contains(s)) {
            return Err(Error::InvalidObject(format!("star at {s} is not a descent of g")));
        }
        let mut blocks = Vec::new();
        let mut cur = Vec::new();
        for (i, l) in g.iter().enumerate() {
            cur.push(*l);
            if !stars.contains(&(i + 1)) {
                blocks.push(std::mem::take(&mut cur));
            }
        }
        Self::new(blocks, r)
    }

    pub fn parse(s: &str, r: u32) -> Result<Self> {
        let (zero, blocks) = parse_blocks(s)?;
        if !zero.is_empty() {
            return Err(Error::Parse("ordered set partitions have no zero block".into()));
        }
        Self::new(blocks, r)
    }

    pub fn blocks(&self) -> &[Vec<Letter>] {
        &self.blocks
    }
    pub fn r(&self) -> u32 {
        self.r
    }
    pub fn n(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }
    pub fn k(&self) -> usize {
        self.blocks.len()
    }
    pub fn star_form(&self) -> (Vec<Letter>, Vec<usize>) {
        star_form_of(&self.blocks)
    }
    pub fn maj(&self) -> u64 {
        maj_of_blocks(&self.blocks, self.r)
    }
    pub fn coinv(&self) -> u64 {
        coinv_of_blocks(&self.blocks, self.r)
    }
    pub fn coinversion_pairs(&self) -> u64 {
        coinversion_pair_count(&self.blocks)
    }
    pub fn into_face(self) -> Face {
        Face { zero: Vec::new(), blocks: self.blocks, r: self.r }
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_blocks(&[], &self.blocks))
    }
}

/// An r-colored ordered multiset partition: a sequence of nonempty sets of letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedMultisetPartition {
    blocks: Vec<Vec<Letter>>,
    r: u32,
}

impl OrderedMultisetPartition {
    pub fn new(mut blocks: Vec<Vec<Letter>>, r: u32) -> Result<Self> {
        check_blocks(&blocks, r)?;
        for b in blocks.iter_mut() {
            sort_block(b);
            if b.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidObject("repeated letter within a block".into()));
            }
        }
        Ok(OrderedMultisetPartition { blocks, r })
    }
    pub fn parse(s: &str, r: u32) -> Result<Self> {
        let (zero, blocks) = parse_blocks(s)?;
        if !zero.is_empty() {
            return Err(Error::Parse("multiset partitions have no zero block".into()));
        }
        Self::new(blocks, r)
    }
    pub fn blocks(&self) -> &[Vec<Letter>] {
        &self.blocks
    }
    pub fn n(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }
    pub fn k(&self) -> usize {
        self.blocks.len()
    }
    pub fn maj(&self) -> u64 {
        maj_of_blocks(&self.blocks, self.r)
    }
    pub fn coinv(&self) -> u64 {
        coinv_of_blocks(&self.blocks, self.r)
    }
}

impl fmt::Display for OrderedMultisetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_blocks(&[], &self.blocks))
    }
}

/// Ways to add the letter `n+1` to a face.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Insertion {
    /// Into an existing nonzero block; `j` counts nonzero blocks from the right, `1 ≤ j ≤ k`.
    Star { j: usize, c: u32 },
    /// Into the zero block.
    Zero,
    /// As a new singleton block with `j` nonzero blocks to its right, `0 ≤ j ≤ k`.
    Bar { j: usize, c: u32 },
}

impl Insertion {
    /// The change in `coinv` caused by this move on a face in `F_{n,k}`.
    pub fn coinv_increment(&self, n: usize, k: usize, r: u32) -> u64 {
        let r = r as u64;
        match *self {
            Insertion::Star { j, c } => r * (k - j) as u64 + (r - c as u64 - 1),
            Insertion::Zero => k as u64 * r,
            Insertion::Bar { j, c } => {
                r * (n - k) as u64 + r * (k - j) as u64 + (r - c as u64 - 1)
            }
        }
    }
}

/// A face of dimension `k`: an optional uncolored zero block followed by `k`
/// colored blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Face {
    zero: Vec<u32>,
    blocks: Vec<Vec<Letter>>,
    r: u32,
}

impl Face {
    pub fn new(mut zero: Vec<u32>, mut blocks: Vec<Vec<Letter>>, r: u32) -> Result<Self> {
        check_blocks(&blocks, r)?;
        let n = zero.len() + blocks.iter().map(|b| b.len()).sum::<usize>();
        check_ground_set(zero.iter().copied().chain(blocks.iter().flatten().map(|l| l.value)), n)?;
        zero.sort_unstable();
        blocks.iter_mut().for_each(|b| sort_block(b));
        Ok(Face { zero, blocks, r })
    }

    pub fn empty(r: u32) -> Self {
        Face { zero: Vec::new(), blocks: Vec::new(), r }
    }

    pub fn parse(s: &str, r: u32) -> Result<Self> {
        let (zero, blocks) = parse_blocks(s)?;
        Self::new(zero, blocks, r)
    }

    pub fn zero_block(&self) -> &[u32] {
        &self.zero
    }
    pub fn nonzero_blocks(&self) -> &[Vec<Letter>] {
        &self.blocks
    }
    pub fn r(&self) -> u32 {
        self.r
    }
    pub fn n(&self) -> usize {
        self.zero.len() + self.blocks.iter().map(|b| b.len()).sum::<usize>()
    }
    /// The dimension: number of nonzero blocks.
    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    /// The ordered set partition obtained by deleting the zero block and
    /// relabeling the remaining values order-preservingly.
    pub fn standardize(&self) -> OrderedSetPartition {
        let mut values: Vec<u32> = self.blocks.iter().flatten().map(|l| l.value).collect();
        values.sort_unstable();
        let rank = |v: u32| values.binary_search(&v).expect("value present") as u32 + 1;
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|l| Letter::new(rank(l.value), l.color)).collect())
            .collect();
        OrderedSetPartition::new(blocks, self.r).expect("relabeling preserves validity")
    }

    /// `coinv(σ) = k·r·z + coinv(π(σ))`.
    pub fn coinv(&self) -> u64 {
        (self.k() * self.zero.len()) as u64 * self.r as u64 + self.standardize().coinv()
    }

    pub fn insert(&self, mv: Insertion) -> Result<Face> {
        let n = self.n() as u32;
        let k = self.k();
        let mut out = self.clone();
        match mv {
            Insertion::Star { j, c } => {
                if j == 0 || j > k || c >= self.r {
                    return Err(Error::InvalidParameters(format!("star move {mv:?} with k = {k}")));
                }
                out.blocks[k - j].push(Letter::new(n + 1, c));
            }
            Insertion::Zero => out.zero.push(n + 1),
            Insertion::Bar { j, c } => {
                if j > k || c >= self.r {
                    return Err(Error::InvalidParameters(format!("bar move {mv:?} with k = {k}")));
                }
                out.blocks.insert(k - j, vec![Letter::new(n + 1, c)]);
            }
        }
        Ok(out)
    }

    /// Swap the values `i` and `i+1`, keeping colors.
    pub fn transpose(&self, i: u32) -> Face {
        let sw = |v: u32| if v == i { i + 1 } else if v == i + 1 { i } else { v };
        let zero = self.zero.iter().map(|&v| sw(v)).collect();
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|l| Letter::new(sw(l.value), l.color)).collect())
            .collect();
        Face::new(zero, blocks, self.r).expect("transposition preserves validity")
    }

    /// Add one to the color of letter `i` modulo `r`; zero-block letters are fixed.
    pub fn shift_color(&self, i: u32) -> Face {
        let r = self.r;
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|l| if l.value == i { Letter::new(i, (l.color + 1) % r) } else { *l })
                    .collect()
            })
            .collect();
        Face::new(self.zero.clone(), blocks, r).expect("color shift preserves validity")
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_blocks(&self.zero, &self.blocks))
    }
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

pub fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}

/// Stirling numbers of the second kind.
pub fn stirling2(n: u64, k: u64) -> u128 {
    let (n, k) = (n as usize, k as usize);
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for m in 1..=n {
        for j in (1..=k.min(m)).rev() {
            row[j] = j as u128 * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[k]
}

/// `|OP_{n,k}| = r^n · k! · Stir(n,k)`.
pub fn count_osp(n: u64, k: u64, r: u64) -> u128 {
    (r as u128).pow(n as u32) * factorial(k) * stirling2(n, k)
}

/// `|F_{n,k}| = Σ_z C(n,z) · |OP_{n−z,k}|`.
pub fn count_faces(n: u64, k: u64, r: u64) -> u128 {
    (0..=n).map(|z| binomial(n, z) * count_osp(n - z, k, r)).sum()
}

/// Odometer over `[0, base)^len`, starting at all zeros.
fn advance(digits: &mut [u32], base: u32) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn next_permutation(p: &mut [u32]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// All r-colored permutations of `[n]`.
pub struct ColoredPermutations {
    perm: Vec<u32>,
    colors: Vec<u32>,
    r: u32,
    done: bool,
}

pub fn colored_permutations(n: usize, r: u32) -> ColoredPermutations {
    ColoredPermutations { perm: (1..=n as u32).collect(), colors: vec![0; n], r, done: r == 0 }
}

impl Iterator for ColoredPermutations {
    type Item = Vec<Letter>;
    fn next(&mut self) -> Option<Vec<Letter>> {
        if self.done {
            return None;
        }
        let out = self.perm.iter().zip(&self.colors).map(|(&v, &c)| Letter::new(v, c)).collect();
        if !advance(&mut self.colors, self.r) && !next_permutation(&mut self.perm) {
            self.done = true;
        }
        Some(out)
    }
}

/// Iterator over assignments of `n` labels to `k` nonempty blocks with colors.
struct BlockAssignments {
    n: usize,
    k: usize,
    r: u32,
    assign: Vec<u32>,
    colors: Vec<u32>,
    required: usize,
    done: bool,
}

impl BlockAssignments {
    /// Blocks `0..required` must be nonempty.
    fn new(n: usize, k: usize, r: u32, required: usize) -> Self {
        let mut it = BlockAssignments {
            n,
            k,
            r,
            assign: vec![0; n],
            colors: vec![0; n],
            required,
            done: r == 0 || (k == 0 && n > 0),
        };
        if !it.done && !it.surjective() {
            it.done = !it.next_assignment();
        }
        it
    }

    fn surjective(&self) -> bool {
        let mut hit = vec![false; self.required];
        for &a in &self.assign {
            if (a as usize) < self.required {
                hit[a as usize] = true;
            }
        }
        hit.into_iter().all(|h| h)
    }

    fn next_assignment(&mut self) -> bool {
        while advance(&mut self.assign, self.k as u32) {
            if self.surjective() {
                return true;
            }
        }
        false
    }

    fn next_item(&mut self) -> Option<(Vec<u32>, Vec<u32>)> {
        if self.done {
            return None;
        }
        let out = (self.assign.clone(), self.colors.clone());
        if !advance(&mut self.colors, self.r) && (self.n == 0 || !self.next_assignment()) {
            self.done = true;
        }
        Some(out)
    }
}

fn build_blocks(labels: &[u32], assign: &[u32], colors: &[u32], k: usize) -> Vec<Vec<Letter>> {
    let mut blocks = vec![Vec::new(); k];
    for ((&v, &a), &c) in labels.iter().zip(assign).zip(colors) {
        blocks[a as usize].push(Letter::new(v, c));
    }
    blocks.iter_mut().for_each(|b| sort_block(b));
    blocks
}

/// All of `OP_{n,k}`.
pub struct OrderedSetPartitions {
    inner: BlockAssignments,
    labels: Vec<u32>,
}

pub fn ordered_set_partitions(n: usize, k: usize, r: u32) -> OrderedSetPartitions {
    let inner = BlockAssignments::new(n, k, r, k);
    OrderedSetPartitions { inner, labels: (1..=n as u32).collect() }
}

impl Iterator for OrderedSetPartitions {
    type Item = OrderedSetPartition;
    fn next(&mut self) -> Option<OrderedSetPartition> {
        let (assign, colors) = self.inner.next_item()?;
        let blocks = build_blocks(&self.labels, &assign, &colors, self.inner.k);
        Some(OrderedSetPartition { blocks, r: self.inner.r })
    }
}

/// All of `F_{n,k}`, grouped by zero block.
pub struct Faces {
    n: usize,
    k: usize,
    r: u32,
    mask: u64,
    zero: Vec<u32>,
    rest: Vec<u32>,
    inner: Option<BlockAssignments>,
}

pub fn faces(n: usize, k: usize, r: u32) -> Faces {
    assert!(n < 64, "faces: n too large");
    let mut f = Faces { n, k, r, mask: 0, zero: Vec::new(), rest: Vec::new(), inner: None };
    f.load_mask();
    f
}

impl Faces {
    fn load_mask(&mut self) {
        self.zero = (1..=self.n as u32).filter(|v| self.mask >> (v - 1) & 1 == 1).collect();
        self.rest = (1..=self.n as u32).filter(|v| self.mask >> (v - 1) & 1 == 0).collect();
        self.inner = Some(BlockAssignments::new(self.rest.len(), self.k, self.r, self.k));
    }
}

impl Iterator for Faces {
    type Item = Face;
    fn next(&mut self) -> Option<Face> {
        loop {
            if let Some((assign, colors)) = self.inner.as_mut().and_then(|it| it.next_item()) {
                let blocks = build_blocks(&self.rest, &assign, &colors, self.k);
                return Some(Face { zero: self.zero.clone(), blocks, r: self.r });
            }
            self.mask += 1;
            if self.mask >= 1u64 << self.n {
                self.inner = None;
                return None;
            }
            self.load_mask();
        }
    }
}

/// `OP_{n,k,s}`: k-block ordered set partitions of `[n + k − s]` in which the
/// big letter `n+i` has color 0 and lies in block `s+i`.
pub struct OrderedSetPartitionsNks {
    inner: BlockAssignments,
    labels: Vec<u32>,
    n: usize,
    s: usize,
}

pub fn ordered_set_partitions_nks(n: usize, k: usize, s: usize, r: u32) -> Result<OrderedSetPartitionsNks> {
    if !(k >= s && n >= k && s >= 1) {
        return Err(Error::InvalidParameters(format!("need n ≥ k ≥ s ≥ 1, got ({n},{k},{s})")));
    }
    Ok(OrderedSetPartitionsNks {
        inner: BlockAssignments::new(n, k, r, s),
        labels: (1..=n as u32).collect(),
        n,
        s,
    })
}

impl Iterator for OrderedSetPartitionsNks {
    type Item = OrderedSetPartition;
    fn next(&mut self) -> Option<OrderedSetPartition> {
        let (assign, colors) = self.inner.next_item()?;
        let mut blocks = build_blocks(&self.labels, &assign, &colors, self.inner.k);
        for i in 1..=self.inner.k - self.s {
            blocks[self.s + i - 1].push(Letter::new((self.n + i) as u32, 0));
        }
        Some(OrderedSetPartition { blocks, r: self.inner.r })
    }
}

/// All ordered multiset partitions with `k` blocks and the given content,
/// a list of distinct letters with multiplicities.
pub fn multiset_partitions_with_content(
    content: &[(Letter, usize)],
    k: usize,
    r: u32,
) -> Vec<OrderedMultisetPartition> {
    // For each letter, the k-bit masks with popcount equal to its multiplicity.
    let choices: Vec<Vec<u32>> = content
        .iter()
        .map(|&(_, m)| (0u32..1 << k).filter(|s| s.count_ones() as usize == m).collect())
        .collect();
    let mut out = Vec::new();
    if choices.iter().any(|c| c.is_empty()) {
        return out;
    }
    let mut idx = vec![0usize; content.len()];
    loop {
        let mut blocks = vec![Vec::new(); k];
        for (t, &(l, _)) in content.iter().enumerate() {
            let mask = choices[t][idx[t]];
            for (b, block) in blocks.iter_mut().enumerate() {
                if mask >> b & 1 == 1 {
                    block.push(l);
                }
            }
        }
        if blocks.iter().all(|b| !b.is_empty()) {
            blocks.iter_mut().for_each(|b| sort_block(b));
            out.push(OrderedMultisetPartition { blocks, r });
        }
        let mut t = 0;
        loop {
            if t == idx.len() {
                return out;
            }
            idx[t] += 1;
            if idx[t] < choices[t].len() {
                break;
            }
            idx[t] = 0;
            t += 1;
        }
    }
}
