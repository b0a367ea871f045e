//! Exact computation with the generalized coinvariant algebras `R_{n,k}` and
//! `S_{n,k}` attached to the wreath products `Z_r ≀ S_n`.

pub mod cli;
pub mod colored;
pub mod demazure;
pub mod descent;
pub mod error;
pub mod groebner;
pub mod poly;
pub mod qseries;
pub mod skip;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};

use std::fmt;
use std::str::FromStr;

/// Which quotient ring: `R_{n,k}` (kill `x_i^{kr+1}`) or `S_{n,k}` (kill `x_i^{kr}`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    R,
    S,
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ring::R => "R",
            Ring::S => "S",
        })
    }
}

impl FromStr for Ring {
    type Err = Error;
    fn from_str(s: &str) -> Result<Ring> {
        match s {
            "R" | "r" => Ok(Ring::R),
            "S" | "s" => Ok(Ring::S),
            _ => Err(Error::Parse(format!("unknown ring `{s}`"))),
        }
    }
}

/// Reject parameters outside `n ≥ k ≥ 0`, `r ≥ 1`.
pub fn check_nkr(n: usize, k: usize, r: u32) -> Result<()> {
    if k > n || r == 0 {
        return Err(Error::InvalidParameters(format!("need n ≥ k ≥ 0 and r ≥ 1, got n={n} k={k} r={r}")));
    }
    Ok(())
}
