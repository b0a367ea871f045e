//! Acceptance suite: one line per criterion. Runs without the libtest harness
//! so the lines always show up in `cargo test` output.

mod common;

use std::time::Instant;

use common::{box_monomials, normalized_contents, r32_terms, s32_terms, series, CosetOracle, E};
use num_bigint::BigInt;

use coinv::colored::{
    binomial, count_faces, count_osp, factorial, faces, maj_word, ordered_set_partitions, parse_word, stirling2, Face,
    OrderedSetPartition,
};
use coinv::demazure::{claimed_groebner_basis, groebner_element, ideal_generators, subsets};
use coinv::descent::{descent_basis, expand_in_basis, extended_descent_basis};
use coinv::groebner::{buchberger, is_reduced, normal_form, reduce_basis, same_basis, standard_monomials, Budget};
use coinv::poly::{Monomial, Poly};
use coinv::qseries::{hilbert_series, QPoly};
use coinv::skip::{count_nks, phi, psi, shuffle_basis, skip_composition};
use coinv::tableaux::{
    d_series, e_perp, e_perp_recursion_rhs, grfrob, hilb_from_frob, maj_coinv_content_series, tableau_stats,
    RPartition, RTableau, SchurSeries,
};
use coinv::Ring;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn criterion_1() -> Outcome {
    let g = ok(parse_word("3^0 4^1 6^2 2^0 5^2 1^2"))?;
    ensure!(maj_word(&g, 3) == 43, "maj(g) = {}", maj_word(&g, 3));
    let s = ok(OrderedSetPartition::parse("( 3^0 4^1 | 6^2 | 1^2 2^0 5^2 )", 3))?;
    ensure!(s.maj() == 22, "maj(σ) = {}", s.maj());
    ensure!(s.coinv() == 23, "coinv(σ) = {}", s.coinv());
    let f = ok(Face::parse("( 2 5 | 1^1 3^2 6^2 | 4^1 )", 3))?;
    ensure!(f.coinv() == 20, "coinv(face) = {}", f.coinv());
    let t = ok(RTableau::new(vec![vec![vec![3, 6, 9], vec![5, 7]], vec![], vec![vec![1, 4], vec![2, 8]]]))?;
    let maj = ok(tableau_stats(&t, 3))?.maj;
    ensure!(maj == 59, "tableau maj = {maj}");
    Ok("43, 22, 23, 20, 59".into())
}

fn criterion_2() -> Outcome {
    let face = ok(Face::parse("( 2 5 | 1^0 7^0 8^1 | 6^1 | 3^2 4^2 )", 3))?;
    let m = Monomial(vec![2, 9, 6, 3, 9, 4, 2, 1]);
    ensure!(ok(psi(&face))? == m, "Ψ of the worked face");
    ensure!(ok(phi(&m, 3, 3))? == face, "Φ of the worked monomial");
    let mut total = 0u64;
    for r in [2u32, 3] {
        for n in 1..=6usize {
            for k in 0..=n {
                for f in faces(n, k, r) {
                    let m = ok(psi(&f))?;
                    ensure!(m.degree() == f.coinv(), "deg Ψ({f}) ≠ coinv");
                    let back = ok(phi(&m, k, r))?;
                    ensure!(back == f, "Φ(Ψ({f})) = {back}");
                    total += 1;
                }
            }
        }
    }
    Ok(format!("round trip over {total} faces"))
}

fn degree_series(degrees: impl Iterator<Item = u64>) -> QPoly {
    degrees.map(|d| QPoly::monomial(1, d as usize)).sum()
}

fn criterion_3() -> Outcome {
    for r in [2u32, 3] {
        for n in 1..=6usize {
            for k in 0..=n {
                let (nn, kk, rr) = (n as u64, k as u64, r as u64);
                let s = hilbert_series(Ring::S, n, k, r as usize);
                let s_coinv = degree_series(ordered_set_partitions(n, k, r).map(|x| x.coinv()));
                let s_basis = degree_series(shuffle_basis(n, k, r, Ring::S).iter().map(|m| m.degree()));
                ensure!(s == s_coinv && s == s_basis, "S({n},{k},{r})");
                let rser = hilbert_series(Ring::R, n, k, r as usize);
                let r_coinv = degree_series(faces(n, k, r).map(|f| f.coinv()));
                let r_basis = degree_series(shuffle_basis(n, k, r, Ring::R).iter().map(|m| m.degree()));
                ensure!(rser == r_coinv && rser == r_basis, "R({n},{k},{r})");
                let dim_s = rr.pow(n as u32) as u128 * factorial(kk) * stirling2(nn, kk);
                let dim_r: u128 = (0..=n)
                    .map(|z| {
                        binomial(nn, z as u64) * rr.pow((n - z) as u32) as u128 * factorial(kk) * stirling2(nn - z as u64, kk)
                    })
                    .sum();
                ensure!(s.eval_one() == BigInt::from(dim_s), "dim S({n},{k},{r})");
                ensure!(rser.eval_one() == BigInt::from(dim_r), "dim R({n},{k},{r})");
            }
        }
    }
    Ok("closed form = coinv = basis degrees, n ≤ 6".into())
}

fn criterion_4() -> Outcome {
    for r in [2u32, 3] {
        for n in 1..=4usize {
            for k in 1..=n {
                for ring in [Ring::R, Ring::S] {
                    let claimed = ok(claimed_groebner_basis(ring, n, k, r))?;
                    let gb = ok(buchberger(&ideal_generators(ring, n, k, r), Budget::default()))?;
                    ensure!(
                        same_basis(&gb.generators, &reduce_basis(&claimed)),
                        "{ring}({n},{k},{r}): claimed set does not generate the reduced basis"
                    );
                    if k < n {
                        ensure!(is_reduced(&claimed), "{ring}({n},{k},{r}): claimed set not reduced");
                        ensure!(same_basis(&gb.generators, &claimed), "{ring}({n},{k},{r}): differs from oracle");
                    }
                    let std = standard_monomials(&gb.leading_monomials(), n, k as u32 * r);
                    let mut nonskip = shuffle_basis(n, k, r, ring);
                    nonskip.sort();
                    ensure!(std == nonskip, "{ring}({n},{k},{r}): standard monomials");
                }
                // Membership in the ideal generated by the elementary symmetric functions alone.
                let es: Vec<Poly> = ideal_generators(Ring::S, n, k, r).split_off(n);
                let gb = ok(buchberger(&es, Budget::default()))?.generators;
                for set in subsets(n, n + 1 - k) {
                    let g = ok(groebner_element(&set, n, k, r))?;
                    ensure!(normal_form(&g, &gb).is_zero(), "element for {set:?} not in the ideal ({n},{k},{r})");
                }
            }
        }
    }
    for r in [2u32, 3] {
        for n in 1..=6usize {
            for k in 1..=n {
                let sets = subsets(n, n + 1 - k);
                let elements: Vec<Poly> = sets.iter().map(|s| ok(groebner_element(s, n, k, r))).collect::<Result<_, _>>()?;
                for (s, g) in sets.iter().zip(&elements) {
                    let cap = r * (*s.last().unwrap() as u32 + k as u32 + 1 - n as u32);
                    ensure!(
                        g.monomials().all(|m| m.exps().iter().all(|&a| a < cap)),
                        "({n},{k},{r}) S={s:?}: a term has an exponent ≥ {cap}"
                    );
                    let xs = Monomial(ok(skip_composition(s, n))?).pow(r);
                    ensure!(g.leading_monomial() == Some(&xs), "({n},{k},{r}) S={s:?}: leading term is not x(S)^r");
                    for (t, h) in sets.iter().zip(&elements) {
                        if t != s {
                            ensure!(!h.monomials().any(|m| xs.divides(m)), "x({s:?})^r divides a term of the element for {t:?}");
                        }
                    }
                }
            }
        }
    }
    Ok("oracle n ≤ 4; leading terms and non-division n ≤ 6".into())
}

fn criterion_5() -> Outcome {
    for r in 1..=3u32 {
        for n in 1..=6usize {
            for k in 1..=n {
                let (nn, kk, rr) = (n as u64, k as u64, r as u64);
                let d = descent_basis(n, k, r);
                ensure!(d.len() as u128 == count_osp(nn, kk, rr), "|D({n},{k},{r})| = {}", d.len());
                let ed = extended_descent_basis(n, k, r);
                ensure!(ed.len() as u128 == count_faces(nn, kk, rr), "|ED({n},{k},{r})| = {}", ed.len());
                let mut strata = vec![0u128; n + 1];
                for (_, z) in &ed {
                    strata[*z] += 1;
                }
                for z in 0..=n {
                    let expected = if z <= n - k { binomial(nn, z as u64) * count_osp(nn - z as u64, kk, rr) } else { 0 };
                    ensure!(strata[z] == expected, "|ED({n},{k},{r})({z})| = {}", strata[z]);
                }
            }
        }
    }
    let mut checked = 0;
    for (n, k, r) in [(3usize, 2usize, 2u32), (3, 3, 2)] {
        for ring in [Ring::S, Ring::R] {
            let basis: Vec<Monomial> = match ring {
                Ring::S => descent_basis(n, k, r),
                Ring::R => extended_descent_basis(n, k, r).into_iter().map(|(m, _)| m).collect(),
            };
            let oracle = CosetOracle::new(ring, n, k, r, basis).ok_or("descent basis normal forms are dependent")?;
            ensure!(
                CosetOracle::new(ring, n, k, r, shuffle_basis(n, k, r, ring)).is_some(),
                "nonskip normal forms are dependent"
            );
            for m in box_monomials(n, k as u32 * r) {
                let e = ok(expand_in_basis(&m, k, r, ring))?;
                ensure!(e.terms == oracle.coordinates(&m), "{ring}({n},{k},{r}): expansion of {m}");
                checked += 1;
            }
        }
    }
    Ok(format!("counts n ≤ 6; {checked} expansions match the oracle"))
}

fn criterion_6() -> Outcome {
    for r in 1..=4usize {
        let mut expected = SchurSeries::zero(r);
        for c in 1..=r {
            let mut comps = vec![Vec::new(); r];
            comps[c - 1] = vec![1];
            expected.add(RPartition::new(comps).unwrap(), &QPoly::monomial(1, r - c));
        }
        ensure!(ok(d_series(1, 1, r))? == expected, "D_(1,1) for r = {r}");
    }
    let d22 = series(
        2,
        &[(0, 1, &[E, &[2]]), (1, 1, &[&[1], &[1]]), (2, 1, &[&[2], E]), (2, 1, &[E, &[1, 1]]), (3, 1, &[&[1], &[1]]), (4, 1, &[&[1, 1], E])],
    );
    ensure!(ok(d_series(2, 2, 2))? == d22, "D_(2,2), r = 2");
    ensure!(ok(grfrob(Ring::S, 3, 2, 2))? == series(2, &s32_terms()), "grFrob(S_(3,2)), r = 2");
    ensure!(ok(grfrob(Ring::R, 3, 2, 2))? == series(2, &r32_terms()), "grFrob(R_(3,2)), r = 2");
    Ok("D_(1,1) r ≤ 4, D_(2,2), S_(3,2), R_(3,2)".into())
}

/// Which component `e_j(x^{(i*)})^⊥` removes from, under each convention.
fn removal_component(i: usize, r: usize, alternate: bool) -> usize {
    if !alternate || i == r {
        i
    } else {
        r - i
    }
}

fn e_perp_holds(alternate: bool) -> Result<(), String> {
    for r in [2usize, 3] {
        for n in 1..=5usize {
            for k in 1..=n {
                let d = ok(d_series(n, k, r))?;
                for j in 1..=n {
                    for i in 1..=r {
                        let lhs = ok(e_perp(&d, j, removal_component(i, r, alternate)))?;
                        let rhs = ok(e_perp_recursion_rhs(n, k, j, i, r))?;
                        ensure!(lhs == rhs, "n={n} k={k} j={j} i={i} r={r}");
                    }
                }
            }
        }
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    match e_perp_holds(false) {
        Ok(()) => Ok("removal in component i".into()),
        Err(first) => match e_perp_holds(true) {
            Ok(()) => Err(format!("fails with removal in component i ({first}); holds with removal in component i*")),
            Err(second) => Err(format!("fails under both conventions: {first}; {second}")),
        },
    }
}

fn criterion_8() -> Outcome {
    let mut count = 0;
    for r in 1..=3u32 {
        for beta in normalized_contents(5, r, 2) {
            let n: usize = beta.iter().map(|(_, m)| m).sum();
            for k in 1..=n {
                let top = hilbert_series(Ring::S, n, k, r as usize).degree().unwrap_or(0);
                let (maj, coinv) = maj_coinv_content_series(&beta, k, r);
                ensure!(maj == coinv.rev_about(top), "β = {beta:?}, k = {k}, r = {r}");
                count += 1;
            }
        }
    }
    Ok(format!("{count} (β, k, r) cases"))
}

fn criterion_9() -> Outcome {
    for r in 1..=3usize {
        for n in 1..=5usize {
            for k in 1..=n {
                for ring in [Ring::S, Ring::R] {
                    let f = ok(grfrob(ring, n, k, r))?;
                    ensure!(f.is_schur_positive(), "grFrob({ring},{n},{k},{r}) not Schur positive");
                    ensure!(hilb_from_frob(&f) == hilbert_series(ring, n, k, r), "Hilbert series of grFrob({ring},{n},{k},{r})");
                    let top = hilbert_series(ring, n, k, r).degree();
                    ensure!(f.top_degree() == top, "top degree of grFrob({ring},{n},{k},{r})");
                }
                let dim: BigInt = ok(grfrob(Ring::R, n, k, r))?
                    .terms()
                    .iter()
                    .map(|(l, c)| c.eval_one() * BigInt::from(l.syt_count()))
                    .sum();
                ensure!(dim == BigInt::from(count_faces(n as u64, k as u64, r as u64)), "dim R({n},{k},{r}) from grFrob");
            }
        }
    }
    Ok("n ≤ 5, r ≤ 3".into())
}

fn criterion_10() -> Outcome {
    let mut cases = 0;
    for r in 1..=3u32 {
        for n in 1..=5usize {
            for k in 1..=n {
                for s in 1..=k {
                    let c = ok(count_nks(n, k, s, r))?;
                    ensure!(c.monomials == c.partitions, "({n},{k},{s},{r}): {c:?}");
                    ensure!(c.suffix_filtered == c.partitions, "({n},{k},{s},{r}): {c:?}");
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} parameter sets"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("worked-statistic goldens", criterion_1),
        ("Ψ/Φ golden and round trip", criterion_2),
        ("Hilbert series three-way equality", criterion_3),
        ("Gröbner basis oracle", criterion_4),
        ("descent bases", criterion_5),
        ("Frobenius goldens", criterion_6),
        ("e⊥ recursion", criterion_7),
        ("M/I duality", criterion_8),
        ("consistency closure", criterion_9),
        ("S_(n,k,s) counting", criterion_10),
    ];
    let filter: Option<String> = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    let mut failures = 0;
    for (idx, (name, f)) in criteria.iter().enumerate() {
        let id = idx + 1;
        if let Some(want) = &filter {
            if want != &id.to_string() {
                continue;
            }
        }
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match &outcome {
            Ok(note) => println!("criterion {id:>2} PASS  {name} ({note}) [{secs:.2}s]"),
            Err(why) => {
                failures += 1;
                println!("criterion {id:>2} FAIL  {name}: {why} [{secs:.2}s]");
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
