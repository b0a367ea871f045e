//! The `verify` battery: cross-checks between independent computations,
//! each reported as pass, fail (with a witness) or skipped for budget.

use std::time::Instant;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::colored::{count_faces, count_osp, faces, Face, Insertion};
use crate::demazure::{claimed_groebner_basis, ideal_generators};
use crate::descent::{descent_basis, expand_in_basis, extended_descent_basis, extended_stratum, in_descent_basis};
use crate::error::Error;
use crate::groebner::{buchberger, reduce_basis, same_basis, standard_monomials, Budget};
use crate::poly::{random_alternating_sums, Monomial};
use crate::qseries::{hilbert_series, QPoly};
use crate::skip::{count_nks, phi, psi, shuffle_basis};
use crate::tableaux::{
    content_from_composition, d_series, e_perp, e_perp_recursion_rhs, grfrob, hilb_from_frob, maj_coinv_content_series,
};
use crate::Ring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    SkippedBudget,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedBudget => "skipped-budget",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub params: Value,
    pub status: Status,
    /// First counterexample, or the budget message.
    pub witness: Option<String>,
    pub wall_ms: u128,
}

#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    /// 0 pass, 1 any failure, 3 budget skips without failures.
    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            1
        } else if self.checks.iter().any(|c| c.status == Status::SkippedBudget) {
            3
        } else {
            0
        }
    }

    /// Wall times are omitted unless requested so that repeated runs print identical bytes.
    pub fn to_json(&self, timings: bool) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut v = json!({
                    "name": c.name,
                    "params": c.params,
                    "status": c.status.as_str(),
                    "witness": c.witness,
                });
                if timings {
                    v["wall_ms"] = json!(c.wall_ms as u64);
                }
                v
            })
            .collect();
        json!({"schema": 1, "passed": self.passed(), "checks": checks})
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub r: u32,
    pub seed: u64,
    pub budget: Budget,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_n: 4, r: 2, seed: 0, budget: Budget::default() }
    }
}

enum Outcome {
    Pass,
    Fail(String),
    Budget(String),
}

type Check = fn(&VerifyConfig) -> Outcome;

/// Every suite name, in report order.
pub const SUITES: [&str; 11] = [
    "alternating-sum",
    "bijection",
    "descent",
    "e-perp",
    "frobenius",
    "goldens",
    "groebner",
    "hilbert",
    "insertion",
    "maj-coinv-duality",
    "nks",
];

fn suite(name: &str) -> Option<Check> {
    Some(match name {
        "alternating-sum" => check_alternating_sum,
        "bijection" => check_bijection,
        "descent" => check_descent,
        "e-perp" => check_e_perp,
        "frobenius" => check_frobenius,
        "goldens" => check_goldens,
        "groebner" => check_groebner,
        "hilbert" => check_hilbert,
        "insertion" => check_insertion,
        "maj-coinv-duality" => check_duality,
        "nks" => check_nks,
        _ => return None,
    })
}

/// Run the named suites (`"all"` selects every suite); the report is sorted by name.
pub fn run(suites: &[String], config: &VerifyConfig) -> crate::Result<VerificationReport> {
    let mut names: Vec<&str> = if suites.iter().any(|s| s == "all") {
        SUITES.to_vec()
    } else {
        suites.iter().map(|s| s.as_str()).collect()
    };
    names.sort();
    names.dedup();
    let mut report = VerificationReport::default();
    for name in names {
        let check = suite(name).ok_or_else(|| Error::InvalidParameters(format!("unknown suite `{name}`")))?;
        let start = Instant::now();
        let outcome = check(config);
        let (status, witness) = match outcome {
            Outcome::Pass => (Status::Pass, None),
            Outcome::Fail(w) => (Status::Fail, Some(w)),
            Outcome::Budget(w) => (Status::SkippedBudget, Some(w)),
        };
        report.checks.push(CheckResult {
            name: name.to_string(),
            params: json!({"max_n": config.max_n, "r": config.r, "seed": config.seed}),
            status,
            witness,
            wall_ms: start.elapsed().as_millis(),
        });
    }
    Ok(report)
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Outcome::Fail(format!($($fmt)+));
        }
    };
}

macro_rules! attempt {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(Error::Budget(m)) => return Outcome::Budget(m),
            Err(e) => return Outcome::Fail(e.to_string()),
        }
    };
}

fn check_goldens(_: &VerifyConfig) -> Outcome {
    use crate::colored::{maj_word, parse_word, OrderedSetPartition};
    use crate::tableaux::{tableau_stats, RTableau};
    let g = attempt!(parse_word("3^0 4^1 6^2 2^0 5^2 1^2"));
    ensure!(maj_word(&g, 3) == 43, "maj(g) ≠ 43");
    let s = attempt!(OrderedSetPartition::parse("( 3^0 4^1 | 6^2 | 1^2 2^0 5^2 )", 3));
    ensure!(s.maj() == 22 && s.coinv() == 23, "maj/coinv of {s} ≠ 22/23");
    let f = attempt!(Face::parse("( 2 5 | 1^1 3^2 6^2 | 4^1 )", 3));
    ensure!(f.coinv() == 20, "coinv({f}) ≠ 20");
    let t = attempt!(RTableau::new(vec![vec![vec![3, 6, 9], vec![5, 7]], vec![], vec![vec![1, 4], vec![2, 8]]]));
    ensure!(attempt!(tableau_stats(&t, 3)).maj == 59, "tableau maj ≠ 59");
    let face = attempt!(Face::parse("( 2 5 | 1^0 7^0 8^1 | 6^1 | 3^2 4^2 )", 3));
    let m = Monomial(vec![2, 9, 6, 3, 9, 4, 2, 1]);
    ensure!(attempt!(psi(&face)) == m, "Ψ worked example");
    ensure!(attempt!(phi(&m, 3, 3)) == face, "Φ worked example");
    Outcome::Pass
}

fn check_bijection(c: &VerifyConfig) -> Outcome {
    let r = c.r;
    let kr = |k: usize| k as u32 * r;
    for n in 1..=c.max_n {
        for k in 0..=n {
            for f in faces(n, k, r) {
                let m = attempt!(psi(&f));
                ensure!(m.degree() == f.coinv(), "deg Ψ({f}) = {} ≠ coinv {}", m.degree(), f.coinv());
                let zero: Vec<u32> = (1..=n as u32).filter(|&i| m.exps()[i as usize - 1] == kr(k)).collect();
                ensure!(k == 0 || zero == f.zero_block(), "zero block of {f} vs exponents of {m}");
                let back = attempt!(phi(&m, k, r));
                ensure!(back == f, "Φ(Ψ({f})) = {back}");
            }
        }
    }
    Outcome::Pass
}

fn check_insertion(c: &VerifyConfig) -> Outcome {
    let r = c.r;
    for n in 0..c.max_n.min(5) {
        for k in 0..=n {
            for f in faces(n, k, r) {
                let mut moves = vec![Insertion::Zero];
                for col in 0..r {
                    moves.extend((1..=k).map(|j| Insertion::Star { j, c: col }));
                    moves.extend((0..=k).map(|j| Insertion::Bar { j, c: col }));
                }
                for mv in moves {
                    let g = attempt!(f.insert(mv));
                    let inc = g.coinv() as i64 - f.coinv() as i64;
                    ensure!(inc == mv.coinv_increment(n, k, r) as i64, "{mv:?} on {f}: increment {inc}");
                }
            }
        }
    }
    Outcome::Pass
}

fn coinv_series<I: Iterator<Item = u64>>(it: I) -> QPoly {
    it.map(|d| QPoly::monomial(1, d as usize)).sum()
}

fn check_hilbert(c: &VerifyConfig) -> Outcome {
    let r = c.r;
    for n in 1..=c.max_n {
        for k in 0..=n {
            for ring in [Ring::S, Ring::R] {
                let closed = hilbert_series(ring, n, k, r as usize);
                let by_coinv = match ring {
                    Ring::S => coinv_series(crate::colored::ordered_set_partitions(n, k, r).map(|s| s.coinv())),
                    Ring::R => coinv_series(faces(n, k, r).map(|f| f.coinv())),
                };
                let by_basis = coinv_series(shuffle_basis(n, k, r, ring).iter().map(|m| m.degree()));
                ensure!(closed == by_coinv, "{ring}({n},{k}): closed form {closed} vs coinv {by_coinv}");
                ensure!(closed == by_basis, "{ring}({n},{k}): closed form {closed} vs basis degrees {by_basis}");
                let dim = match ring {
                    Ring::S => count_osp(n as u64, k as u64, r as u64),
                    Ring::R => count_faces(n as u64, k as u64, r as u64),
                };
                ensure!(closed.eval_one() == dim.into(), "{ring}({n},{k}): dimension");
            }
        }
    }
    Outcome::Pass
}

fn check_groebner(c: &VerifyConfig) -> Outcome {
    let r = c.r;
    for n in 1..=c.max_n.min(4) {
        for k in 1..=n {
            for ring in [Ring::R, Ring::S] {
                let claimed = attempt!(claimed_groebner_basis(ring, n, k, r));
                let oracle = attempt!(buchberger(&ideal_generators(ring, n, k, r), c.budget));
                ensure!(
                    same_basis(&oracle.generators, &reduce_basis(&claimed)),
                    "{ring}({n},{k}): claimed basis differs from the reduced Gröbner basis"
                );
                let leads = oracle.leading_monomials();
                let std = standard_monomials(&leads, n, k as u32 * r);
                let mut basis = shuffle_basis(n, k, r, ring);
                basis.sort();
                ensure!(std == basis, "{ring}({n},{k}): standard monomials differ from the nonskip family");
            }
        }
    }
    Outcome::Pass
}

fn check_descent(c: &VerifyConfig) -> Outcome {
    let r = c.r;
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    for n in 1..=c.max_n {
        for k in 1..=n {
            let d = descent_basis(n, k, r);
            ensure!(d.len() as u128 == count_osp(n as u64, k as u64, r as u64), "|D({n},{k})| = {}", d.len());
            let ed = extended_descent_basis(n, k, r);
            ensure!(ed.len() as u128 == count_faces(n as u64, k as u64, r as u64), "|ED({n},{k})| = {}", ed.len());
            for _ in 0..8 {
                let m = Monomial((0..n).map(|_| rng.gen_range(0..=k as u32 * r + 1)).collect());
                for ring in [Ring::S, Ring::R] {
                    let e = attempt!(expand_in_basis(&m, k, r, ring));
                    for t in e.terms.keys() {
                        ensure!(t.degree() == m.degree(), "{ring}: {m} expands to {t} of another degree");
                        let ok = match ring {
                            Ring::S => in_descent_basis(t, k, r),
                            Ring::R => extended_stratum(t, k, r).is_some(),
                        };
                        ensure!(ok, "{ring}: {m} expands to non-basis {t}");
                    }
                }
            }
        }
    }
    Outcome::Pass
}

fn check_frobenius(c: &VerifyConfig) -> Outcome {
    let r = c.r as usize;
    for n in 1..=c.max_n.min(5) {
        for k in 1..=n {
            for ring in [Ring::S, Ring::R] {
                let f = attempt!(grfrob(ring, n, k, r));
                ensure!(f.is_schur_positive(), "grFrob({ring},{n},{k}) is not Schur positive");
                let h = hilb_from_frob(&f);
                ensure!(h == hilbert_series(ring, n, k, r), "grFrob({ring},{n},{k}) gives Hilbert series {h}");
            }
        }
    }
    Outcome::Pass
}

fn check_e_perp(c: &VerifyConfig) -> Outcome {
    let r = c.r as usize;
    for n in 1..=c.max_n.min(5) {
        for k in 1..=n {
            let d = attempt!(d_series(n, k, r));
            for j in 1..=n {
                for i in 1..=r {
                    let lhs = attempt!(e_perp(&d, j, i));
                    let rhs = attempt!(e_perp_recursion_rhs(n, k, j, i, r));
                    ensure!(lhs == rhs, "e_{j}(x^({i}*))^⊥ D({n},{k}) differs from the recursion");
                }
            }
        }
    }
    Outcome::Pass
}

/// r-compositions on values `1..=len` with entries `≤ 2` and total size in `1..=max`.
fn small_contents(max: usize, r: usize, len: usize) -> Vec<Vec<Vec<usize>>> {
    let cells = r * len;
    let mut out = Vec::new();
    for code in 1..3usize.pow(cells as u32) {
        let mut c = code;
        let mut beta = vec![vec![0usize; len]; r];
        let mut total = 0;
        for cell in 0..cells {
            beta[cell / len][cell % len] = c % 3;
            total += c % 3;
            c /= 3;
        }
        if total <= max {
            out.push(beta);
        }
    }
    out
}

fn check_duality(c: &VerifyConfig) -> Outcome {
    let r = c.r;
    let max = c.max_n.min(5);
    for beta in small_contents(max, r as usize, 3.min(max)) {
        let content = content_from_composition(&beta);
        let n: usize = content.iter().map(|(_, m)| m).sum();
        for k in 1..=n {
            let (maj, coinv) = maj_coinv_content_series(&content, k, r);
            let top = hilbert_series(Ring::S, n, k, r as usize).degree().unwrap_or(0);
            ensure!(maj == coinv.rev_about(top), "β = {beta:?}, k = {k}: M = {maj}, I = {coinv}");
        }
    }
    Outcome::Pass
}

fn check_nks(c: &VerifyConfig) -> Outcome {
    let r = c.r;
    for n in 1..=c.max_n.min(5) {
        for k in 1..=n {
            for s in 1..=k {
                let counts = attempt!(count_nks(n, k, s, r));
                ensure!(counts.monomials == counts.partitions, "({n},{k},{s}): {counts:?}");
                ensure!(counts.suffix_filtered == counts.partitions, "({n},{k},{s}): {counts:?}");
            }
        }
    }
    Outcome::Pass
}

fn check_alternating_sum(c: &VerifyConfig) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    for n in 1..=c.max_n {
        for k in 1..=n {
            for _ in 0..4 {
                for (s, v) in random_alternating_sums(&mut rng, n, k, c.r) {
                    ensure!(v.is_zero(), "n={n} k={k} s={s}: alternating sum {v}");
                }
            }
        }
    }
    Outcome::Pass
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_battery_passes() {
        let config = VerifyConfig { max_n: 3, r: 2, seed: 7, budget: Budget::default() };
        let report = run(&["all".to_string()], &config).unwrap();
        for c in &report.checks {
            assert_eq!(c.status, Status::Pass, "{}: {:?}", c.name, c.witness);
        }
        assert_eq!(report.checks.len(), SUITES.len());
        assert!(run(&["nope".to_string()], &config).is_err());
    }
}
