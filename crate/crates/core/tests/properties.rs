use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use coinv::colored::{
    ascents, binomial, colored_permutations, count_faces, count_osp, descents, faces, ordered_set_partitions, Face,
    Insertion,
};
use coinv::demazure::{claimed_groebner_basis, DemazureCache, Resolution};
use coinv::groebner::is_reduced;
use coinv::poly::{alternating_sum, Monomial, Poly};
use coinv::qseries::{hilbert_series, q_int, QPoly};
use coinv::skip::{is_nonskip, multiply_squarefree, psi, shuffle_basis, skip_divides, unique_skip_set};
use coinv::Ring;

#[test]
fn descents_and_ascents_split_positions() {
    for r in 1..=3u32 {
        for n in 1..=4usize {
            for w in colored_permutations(n, r) {
                let des: BTreeSet<usize> = descents(&w).into_iter().collect();
                let asc: BTreeSet<usize> = ascents(&w).into_iter().collect();
                assert!(des.is_disjoint(&asc));
                assert_eq!(des.len() + asc.len(), n - 1);
            }
        }
    }
}

#[test]
fn enumeration_counts() {
    for r in 1..=3u32 {
        for n in 0..=6usize {
            for k in 0..=n {
                let (nn, kk, rr) = (n as u64, k as u64, r as u64);
                assert_eq!(ordered_set_partitions(n, k, r).count() as u128, count_osp(nn, kk, rr), "OP {n} {k} {r}");
                let mut by_zero = vec![0u128; n + 1];
                for f in faces(n, k, r) {
                    by_zero[f.zero_block().len()] += 1;
                }
                assert_eq!(by_zero.iter().sum::<u128>(), count_faces(nn, kk, rr), "F {n} {k} {r}");
                for (z, &c) in by_zero.iter().enumerate() {
                    assert_eq!(c, binomial(nn, z as u64) * count_osp(nn - z as u64, kk, rr));
                }
            }
        }
    }
}

#[test]
fn insertion_increments() {
    for r in 1..=3u32 {
        for n in 0..=5usize {
            for k in 0..=n {
                for f in faces(n, k, r) {
                    let mut moves = vec![Insertion::Zero];
                    for c in 0..r {
                        moves.extend((1..=k).map(|j| Insertion::Star { j, c }));
                        moves.extend((0..=k).map(|j| Insertion::Bar { j, c }));
                    }
                    for mv in moves {
                        let g = f.insert(mv).unwrap();
                        assert_eq!(g.coinv() - f.coinv(), mv.coinv_increment(n, k, r), "{f} {mv:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn group_generators_permute_faces() {
    for r in 1..=3u32 {
        for n in 1..=5usize {
            for k in 0..=n {
                let all: BTreeSet<String> = faces(n, k, r).map(|f| f.to_string()).collect();
                let gens: Vec<Box<dyn Fn(&Face) -> Face>> = (1..n as u32)
                    .map(|i| Box::new(move |f: &Face| f.transpose(i)) as Box<dyn Fn(&Face) -> Face>)
                    .chain((1..=n as u32).map(|i| Box::new(move |f: &Face| f.shift_color(i)) as _))
                    .collect();
                for g in &gens {
                    let mut image = BTreeSet::new();
                    for f in faces(n, k, r) {
                        let h = g(&f);
                        assert_eq!(h.zero_block().is_empty(), f.zero_block().is_empty());
                        image.insert(h.to_string());
                    }
                    assert_eq!(image, all);
                }
            }
        }
    }
}

#[test]
fn face_text_round_trips() {
    for f in faces(4, 2, 3) {
        assert_eq!(Face::parse(&f.to_string(), 3).unwrap(), f);
    }
}

#[test]
fn full_rank_hilbert_series_is_product() {
    for r in 1..=3usize {
        for n in 0..=5usize {
            let expected = (1..=n).fold(QPoly::one(), |acc, i| &acc * &q_int(r * i));
            assert_eq!(hilbert_series(Ring::S, n, n, r), expected);
            assert_eq!(hilbert_series(Ring::R, n, n, r), expected);
        }
    }
}

#[test]
fn zero_rank_rings() {
    for r in 1..=3 {
        assert_eq!(hilbert_series(Ring::S, 0, 0, r), QPoly::one());
        assert_eq!(hilbert_series(Ring::R, 3, 0, r), QPoly::one());
        assert!(hilbert_series(Ring::S, 3, 0, r).is_zero());
    }
}

fn box_iter(n: usize, cap: u32) -> impl Iterator<Item = Vec<u32>> {
    let total = (cap as usize + 1).pow(n as u32);
    (0..total).map(move |mut code| {
        (0..n)
            .map(|_| {
                let a = (code % (cap as usize + 1)) as u32;
                code /= cap as usize + 1;
                a
            })
            .collect()
    })
}

fn all_subsets(n: usize) -> Vec<Vec<usize>> {
    (0..1usize << n).map(|b| (1..=n).filter(|i| b >> (i - 1) & 1 == 1).collect()).collect()
}

#[test]
fn skip_union() {
    let (k, r) = (2usize, 2u32);
    for n in 1..=5usize {
        let sets = all_subsets(n);
        for exps in box_iter(n, k as u32 * r + 1) {
            let dividing: Vec<&Vec<usize>> = sets.iter().filter(|s| skip_divides(s, &exps, r)).collect();
            for s in &dividing {
                for t in &dividing {
                    let u: Vec<usize> = s.iter().chain(t.iter()).copied().collect::<BTreeSet<_>>().into_iter().collect();
                    assert!(skip_divides(&u, &exps, r), "{exps:?} {s:?} {t:?}");
                }
            }
        }
    }
}

#[test]
fn unique_skip_set_by_brute_force() {
    for r in [2u32, 3] {
        for n in 1..=4usize {
            for k in 1..=n {
                let sets = all_subsets(n);
                for m in shuffle_basis(n, k, r, Ring::R) {
                    let good: Vec<&Vec<usize>> = sets
                        .iter()
                        .filter(|s| s.len() == n - k)
                        .filter(|s| {
                            let lifted = multiply_squarefree(&m, s, r);
                            skip_divides(s, lifted.exps(), r)
                                && !sets.iter().any(|t| t.len() == n - k + 1 && skip_divides(t, lifted.exps(), r))
                        })
                        .collect();
                    assert_eq!(good.len(), 1, "{m} k={k} r={r}: {good:?}");
                    assert_eq!(&unique_skip_set(&m, k, r).unwrap(), good[0], "{m}");
                }
            }
        }
    }
}

#[test]
fn psi_of_ordered_set_partitions_is_strongly_nonskip() {
    for r in [2u32, 3] {
        for n in 1..=5usize {
            for k in 1..=n {
                for f in faces(n, k, r) {
                    let m = psi(&f).unwrap();
                    assert_eq!(f.zero_block().is_empty(), is_nonskip(&m, k, r, true), "{f}");
                    assert!(is_nonskip(&m, k, r, false));
                }
            }
        }
    }
}

#[test]
fn demazure_path_independence() {
    let mut cache = DemazureCache::new();
    for n in 1..=4usize {
        for gamma in box_iter(n, 3) {
            let a = cache.kappa(&gamma, Resolution::FirstAscent);
            let b = cache.kappa(&gamma, Resolution::LastAscent);
            assert_eq!(a, b, "{gamma:?}");
        }
    }
}

#[test]
fn claimed_bases_are_reduced() {
    for r in [2u32, 3] {
        for n in 2..=5usize {
            for k in 1..n {
                for ring in [Ring::R, Ring::S] {
                    assert!(is_reduced(&claimed_groebner_basis(ring, n, k, r).unwrap()), "{ring} {n} {k} {r}");
                }
            }
        }
    }
}

fn poly_strategy(n: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0u32..4, n), -5i64..6), 1..6).prop_map(move |terms| {
        let mut p = Poly::zero(n);
        for (e, c) in terms {
            p.add_term(Monomial(e), BigRational::from_integer(BigInt::from(c)));
        }
        p
    })
}

proptest! {
    #[test]
    fn leading_term_is_multiplicative(f in poly_strategy(3), g in poly_strategy(3)) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let prod = &f * &g;
        let expected = f.leading_monomial().unwrap().mul(g.leading_monomial().unwrap());
        prop_assert_eq!(prod.leading_monomial(), Some(&expected));
    }

    #[test]
    fn alternating_sum_vanishes(
        raw in prop::collection::vec((1i64..30, 1i64..7, any::<bool>()), 1..=5),
        pad in prop::collection::vec(any::<Option<usize>>(), 0..=3),
        r in 1u32..=3,
    ) {
        let mut alphas: Vec<BigRational> = Vec::new();
        let mut betas: Vec<BigRational> = Vec::new();
        for (p, q, neg) in raw {
            let b = BigRational::new(p.into(), q.into());
            let a = num_traits::pow(b.clone(), r as usize);
            if alphas.contains(&a) {
                continue;
            }
            alphas.push(a);
            betas.push(if neg && r % 2 == 0 { -b } else { b });
        }
        let k = alphas.len();
        for extra in pad {
            betas.push(match extra {
                Some(i) => betas[i % k].clone(),
                None => BigRational::from_integer(0.into()),
            });
        }
        let n = betas.len();
        for s in (n - k + 1)..=n {
            prop_assert_eq!(alternating_sum(&betas, &alphas, r, s), BigRational::from_integer(0.into()));
        }
    }
}

fn cli(args: &[&str]) -> coinv::cli::Output {
    coinv::cli::run(std::iter::once("coinv").chain(args.iter().copied()))
}

#[test]
fn cli_output_is_deterministic() {
    let commands: [&[&str]; 5] = [
        &["hilbert", "--ring", "R", "--n", "4", "--k", "2", "--r", "2"],
        &["enumerate", "--object", "face", "--n", "3", "--k", "2", "--r", "2"],
        &["frobenius", "--ring", "S", "--n", "3", "--k", "2", "--r", "2"],
        &["straighten", "--ring", "S", "--n", "3", "--k", "2", "--r", "2", "--monomial", "3 1 0", "--trace"],
        &["verify", "--max-n", "3", "--r", "2"],
    ];
    for args in commands {
        let a = cli(args);
        let b = cli(args);
        assert_eq!(a.code, 0, "{args:?}: {}", a.text);
        assert_eq!(a.text, b.text, "{args:?}");
    }
}

#[test]
fn cli_usage_errors_exit_2() {
    assert_eq!(cli(&["hilbert", "--ring", "R", "--n", "2", "--k", "3", "--r", "2"]).code, 2);
    assert_eq!(cli(&["no-such-command"]).code, 2);
    assert_eq!(cli(&["psi", "--n", "2", "--k", "1", "--r", "2", "--face", "( 1^5 | 2^0 )"]).code, 2);
}
