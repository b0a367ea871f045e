//! Command-line interface. Every subcommand prints JSON carrying `"schema": 1`
//! unless a pretty format is requested.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::colored::{count_faces, count_osp, faces, ordered_set_partitions, Face};
use crate::demazure::{claimed_groebner_basis, demazure, groebner_element, ideal_generators};
use crate::descent::{descent_basis, expand_traced, extended_descent_basis, STEP_BUDGET};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, is_groebner_basis, is_reduced, reduce_basis, same_basis, standard_monomials, Budget};
use crate::poly::Monomial;
use crate::qseries::hilbert_series;
use crate::skip::{phi_traced, psi, shuffle_basis};
use crate::tableaux::{grfrob, standard_tableaux, tableau_stats};
use crate::verify::{self, VerifyConfig};
use crate::{check_nkr, Ring};

#[derive(Parser, Debug)]
#[command(name = "coinv", version, about = "Generalized coinvariant algebras R_{n,k} and S_{n,k} for Z_r wr S_n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(clap::Args, Debug, Clone, Copy)]
pub struct Params {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub r: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RingArg {
    #[value(name = "R")]
    R,
    #[value(name = "S")]
    S,
}

impl From<RingArg> for Ring {
    fn from(r: RingArg) -> Ring {
        match r {
            RingArg::R => Ring::R,
            RingArg::S => Ring::S,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Object {
    /// Ordered set partitions `OP_{n,k}` with maj and coinv.
    Osp,
    /// Faces `F_{n,k}` with coinv.
    Face,
    /// The nonskip monomial basis of the chosen ring.
    Nonskip,
    /// Standard r-tableaux with `n` boxes.
    Syt,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hilbert series of R_{n,k} or S_{n,k}.
    Hilbert {
        #[arg(long, value_enum)]
        ring: RingArg,
        #[command(flatten)]
        p: Params,
    },
    /// Dimensions of R_{n,k} and S_{n,k}.
    Dims {
        #[command(flatten)]
        p: Params,
    },
    /// List combinatorial objects with their statistics.
    Enumerate {
        #[arg(long, value_enum)]
        object: Object,
        #[arg(long, value_enum, default_value = "R")]
        ring: RingArg,
        #[command(flatten)]
        p: Params,
    },
    /// Apply Ψ to a face such as "( 2 5 | 1^0 7^0 8^1 | 6^1 | 3^2 4^2 )".
    Psi {
        #[command(flatten)]
        p: Params,
        #[arg(long)]
        face: String,
    },
    /// Apply Φ to a nonskip monomial given by its exponents.
    Phi {
        #[command(flatten)]
        p: Params,
        #[arg(long)]
        monomial: String,
        #[arg(long)]
        trace: bool,
    },
    /// The descent basis of S_{n,k} or the extended descent basis of R_{n,k}.
    DescentBasis {
        #[arg(long, value_enum)]
        ring: RingArg,
        #[command(flatten)]
        p: Params,
    },
    /// Expand a monomial coset in the descent basis.
    Straighten {
        #[arg(long, value_enum)]
        ring: RingArg,
        #[command(flatten)]
        p: Params,
        #[arg(long)]
        monomial: String,
        #[arg(long)]
        trace: bool,
        #[arg(long, default_value_t = STEP_BUDGET)]
        max_steps: usize,
    },
    /// A Demazure character κ_γ, or with --set the Gröbner element for S.
    Demazure {
        #[arg(long, conflicts_with = "set")]
        gamma: Option<String>,
        #[arg(long, requires_all = ["n", "k", "r"])]
        set: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        r: Option<u32>,
    },
    /// Check the explicit Gröbner basis, optionally against Buchberger.
    GroebnerCheck {
        #[arg(long, value_enum)]
        ring: RingArg,
        #[command(flatten)]
        p: Params,
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = Budget::default().max_pairs)]
        max_pairs: usize,
        #[arg(long, default_value_t = Budget::default().max_terms)]
        max_terms: usize,
    },
    /// Graded Frobenius image as a Schur expansion.
    Frobenius {
        #[arg(long, value_enum)]
        ring: RingArg,
        #[command(flatten)]
        p: Params,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run cross-check suites.
    Verify {
        /// Suite name or `all`; repeatable.
        #[arg(long, default_value = "all")]
        suite: Vec<String>,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        r: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include wall times (makes output run-dependent).
        #[arg(long)]
        timings: bool,
        #[arg(long, default_value_t = Budget::default().max_pairs)]
        max_pairs: usize,
        #[arg(long, default_value_t = Budget::default().max_terms)]
        max_terms: usize,
    },
}

/// Exit status and text to print.
pub struct Output {
    pub code: i32,
    pub text: String,
}

/// Parse `argv` (including the program name) and run the command.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Output { code, text: e.to_string() };
        }
    };
    match execute(cli.command) {
        Ok((code, v)) => Output { code, text: v },
        Err(e) => {
            let code = match e {
                Error::InvalidParameters(_) | Error::Parse(_) | Error::NotInFamily(_) => 2,
                Error::Budget(_) => 3,
                _ => 1,
            };
            Output { code, text: json_text(&json!({"schema": 1, "error": e.to_string()})) }
        }
    }
}

fn json_text(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn with_schema(mut v: Value) -> Value {
    v["schema"] = json!(1);
    v
}

fn checked(p: Params) -> Result<Params> {
    check_nkr(p.n, p.k, p.r)?;
    Ok(p)
}

/// A malformed object on the command line is a usage error, not a failed check.
fn as_usage(e: Error) -> Error {
    match e {
        Error::InvalidObject(msg) => Error::Parse(msg),
        other => other,
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad integer `{t}`"))))
        .collect()
}

fn parse_monomial(s: &str, n: usize) -> Result<Monomial> {
    let m = Monomial::parse(s).map_err(as_usage)?;
    if m.nvars() != n {
        return Err(Error::InvalidParameters(format!("monomial has {} exponents, n = {n}", m.nvars())));
    }
    Ok(m)
}

fn execute(cmd: Command) -> Result<(i32, String)> {
    let ok = |v: Value| Ok((0, json_text(&with_schema(v))));
    match cmd {
        Command::Hilbert { ring, p } => {
            let p = checked(p)?;
            let h = hilbert_series(ring.into(), p.n, p.k, p.r as usize);
            ok(json!({"ring": Ring::from(ring).to_string(), "n": p.n, "k": p.k, "r": p.r,
                      "coeffs": h.to_json()["coeffs"], "text": h.to_string()}))
        }
        Command::Dims { p } => {
            let p = checked(p)?;
            let (n, k, r) = (p.n as u64, p.k as u64, p.r as u64);
            ok(json!({"n": p.n, "k": p.k, "r": p.r,
                      "R": count_faces(n, k, r).to_string(), "S": count_osp(n, k, r).to_string()}))
        }
        Command::Enumerate { object, ring, p } => {
            let p = checked(p)?;
            let items: Vec<Value> = match object {
                Object::Osp => ordered_set_partitions(p.n, p.k, p.r)
                    .map(|s| json!({"osp": s.to_string(), "maj": s.maj(), "coinv": s.coinv()}))
                    .collect(),
                Object::Face => faces(p.n, p.k, p.r).map(|f| json!({"face": f.to_string(), "coinv": f.coinv()})).collect(),
                Object::Nonskip => shuffle_basis(p.n, p.k, p.r, ring.into())
                    .into_iter()
                    .map(|m| json!({"exps": m.0, "degree": m.degree()}))
                    .collect(),
                Object::Syt => standard_tableaux(p.n, p.r as usize)
                    .into_iter()
                    .map(|t| {
                        let s = tableau_stats(&t, p.r).expect("standard");
                        json!({"tableau": t.to_json(), "descents": s.descents, "maj": s.maj})
                    })
                    .collect(),
            };
            ok(json!({"object": format!("{object:?}").to_lowercase(), "n": p.n, "k": p.k, "r": p.r,
                      "count": items.len(), "items": items}))
        }
        Command::Psi { p, face } => {
            let p = checked(p)?;
            let f = Face::parse(&face, p.r).map_err(as_usage)?;
            if f.n() != p.n || f.k() != p.k {
                return Err(Error::InvalidParameters(format!("face has n={} k={}", f.n(), f.k())));
            }
            let m = psi(&f)?;
            ok(json!({"face": f.to_string(), "exps": m.0, "degree": m.degree(), "coinv": f.coinv()}))
        }
        Command::Phi { p, monomial, trace } => {
            let p = checked(p)?;
            let m = parse_monomial(&monomial, p.n)?;
            let (f, steps) = phi_traced(&m, p.k, p.r)?;
            let mut v = json!({"face": f.to_string(), "exps": m.0, "degree": m.degree(), "coinv": f.coinv()});
            if trace {
                v["trace"] = steps
                    .iter()
                    .map(|s| json!({"n": s.n, "k": s.k, "kind": s.kind, "skip_set": s.skip_set, "j": s.j, "c": s.c}))
                    .collect();
            }
            ok(v)
        }
        Command::DescentBasis { ring, p } => {
            let p = checked(p)?;
            let items: Vec<Value> = match Ring::from(ring) {
                Ring::S => descent_basis(p.n, p.k, p.r).into_iter().map(|m| json!({"exps": m.0})).collect(),
                Ring::R => extended_descent_basis(p.n, p.k, p.r)
                    .into_iter()
                    .map(|(m, z)| json!({"exps": m.0, "stratum": z}))
                    .collect(),
            };
            ok(json!({"ring": Ring::from(ring).to_string(), "n": p.n, "k": p.k, "r": p.r,
                      "count": items.len(), "basis": items}))
        }
        Command::Straighten { ring, p, monomial, trace, max_steps } => {
            let p = checked(p)?;
            let m = parse_monomial(&monomial, p.n)?;
            let (e, steps) = expand_traced(&m, p.k, p.r, ring.into(), max_steps, trace)?;
            let terms: Vec<Value> =
                e.terms.iter().map(|(t, c)| json!({"exps": t.0, "coeff": c.to_string()})).collect();
            let mut v = json!({"ring": Ring::from(ring).to_string(), "n": p.n, "k": p.k, "r": p.r,
                               "monomial": m.0, "terms": terms});
            if trace {
                v["trace"] = steps.iter().map(|s| s.to_json()).collect();
            }
            ok(v)
        }
        Command::Demazure { gamma, set, n, k, r } => {
            let poly = match (gamma, set) {
                (Some(g), None) => {
                    let g: Vec<u32> = parse_list(&g)?.into_iter().map(|x| x as u32).collect();
                    demazure(&g)
                }
                (None, Some(s)) => {
                    let (n, k, r) = (n.unwrap_or(0), k.unwrap_or(0), r.unwrap_or(0));
                    check_nkr(n, k, r)?;
                    groebner_element(&parse_list(&s)?, n, k, r)?
                }
                _ => return Err(Error::InvalidParameters("give exactly one of --gamma and --set".into())),
            };
            ok(json!({"polynomial": poly.to_string(), "terms": poly.to_json()}))
        }
        Command::GroebnerCheck { ring, p, oracle, max_pairs, max_terms } => {
            let p = checked(p)?;
            let ring = Ring::from(ring);
            let claimed = claimed_groebner_basis(ring, p.n, p.k, p.r)?;
            let leads: Vec<Monomial> = claimed.iter().map(|g| g.leading_monomial().expect("nonzero").clone()).collect();
            let std = standard_monomials(&leads, p.n, p.k as u32 * p.r);
            let dim = match ring {
                Ring::S => count_osp(p.n as u64, p.k as u64, p.r as u64),
                Ring::R => count_faces(p.n as u64, p.k as u64, p.r as u64),
            };
            let claimed_ok = is_groebner_basis(&claimed) && std.len() as u128 == dim;
            let reduced_ok = is_reduced(&claimed);
            let oracle_match = if oracle {
                let gb = buchberger(&ideal_generators(ring, p.n, p.k, p.r), Budget { max_pairs, max_terms })?;
                Some(same_basis(&gb.generators, &reduce_basis(&claimed)))
            } else {
                None
            };
            // Reducedness is only claimed for 0 < k < n.
            let reduced_required = p.k > 0 && p.k < p.n;
            let pass = claimed_ok && (reduced_ok || !reduced_required) && oracle_match != Some(false);
            let v = with_schema(json!({"ring": ring.to_string(), "n": p.n, "k": p.k, "r": p.r,
                "claimed_basis_ok": claimed_ok, "reduced_ok": reduced_ok, "oracle_match": oracle_match,
                "standard_monomial_count": std.len()}));
            Ok((if pass { 0 } else { 1 }, json_text(&v)))
        }
        Command::Frobenius { ring, p, format } => {
            let p = checked(p)?;
            let f = grfrob(ring.into(), p.n, p.k, p.r as usize)?;
            match format {
                Format::Pretty => Ok((0, f.pretty())),
                Format::Json => ok(json!({"ring": Ring::from(ring).to_string(), "n": p.n, "k": p.k, "r": p.r,
                                          "terms": f.to_json()})),
            }
        }
        Command::Verify { suite, max_n, r, seed, timings, max_pairs, max_terms } => {
            if r == 0 {
                return Err(Error::InvalidParameters("r must be positive".into()));
            }
            let config = VerifyConfig { max_n, r, seed, budget: Budget { max_pairs, max_terms } };
            let report = verify::run(&suite, &config)?;
            Ok((report.exit_code(), json_text(&report.to_json(timings))))
        }
    }
}
