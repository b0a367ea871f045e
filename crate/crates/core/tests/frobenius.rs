mod common;

use common::{r32_terms, s32_terms, series, E};

use coinv::colored::{parse_word, Letter};
use coinv::qseries::{hilbert_series, QPoly};
use coinv::tableaux::{
    colored_rsk, d_series, grfrob, hilb_from_frob, inverse_colored_rsk, standard_tableaux, tableau_stats, RPartition,
    RTableau, SchurSeries,
};
use coinv::Ring;

#[test]
fn tableau_maj_59() {
    let t = RTableau::new(vec![vec![vec![3, 6, 9], vec![5, 7]], vec![], vec![vec![1, 4], vec![2, 8]]]).unwrap();
    let s = tableau_stats(&t, 3).unwrap();
    assert_eq!(s.descents, vec![1, 3, 6, 7]);
    assert_eq!(s.des, 4);
    assert_eq!(s.maj, 59);
}

#[test]
fn single_box_majors() {
    for r in 1..=4usize {
        let mut majs: Vec<u64> = standard_tableaux(1, r).iter().map(|t| tableau_stats(t, r as u32).unwrap().maj).collect();
        majs.sort();
        assert_eq!(majs, (0..r as u64).collect::<Vec<_>>());
    }
    let row = RTableau::new(vec![vec![vec![1, 2, 3]], vec![]]).unwrap();
    let s = tableau_stats(&row, 2).unwrap();
    assert!(s.descents.is_empty());
    assert_eq!(s.maj, 0);
}

#[test]
fn rsk_worked_example() {
    let w = parse_word("2^0 1^1 4^1 2^2 1^0 2^0 2^1 1^2").unwrap();
    let (u, t) = colored_rsk(&w, 3).unwrap();
    assert_eq!(u, RTableau::new(vec![vec![vec![1, 2], vec![2]], vec![vec![1, 2], vec![4]], vec![vec![1], vec![2]]]).unwrap());
    assert_eq!(t, RTableau::new(vec![vec![vec![1, 6], vec![5]], vec![vec![2, 3], vec![7]], vec![vec![4], vec![8]]]).unwrap());
    assert_eq!(inverse_colored_rsk(&u, &t).unwrap(), w);
}

#[test]
fn rsk_round_trip_and_descents() {
    let r = 2u32;
    let letters: Vec<Letter> = (1..=3).flat_map(|v| (0..r).map(move |c| Letter::new(v, c))).collect();
    let mut seen = std::collections::BTreeSet::new();
    for len in 0..=5u32 {
        let total = letters.len().pow(len);
        for mut code in 0..total {
            let w: Vec<Letter> = (0..len)
                .map(|_| {
                    let l = letters[code % letters.len()];
                    code /= letters.len();
                    l
                })
                .collect();
            let (u, t) = colored_rsk(&w, r).unwrap();
            assert!(u.is_semistandard() && t.is_standard() && u.shape() == t.shape());
            assert_eq!(inverse_colored_rsk(&u, &t).unwrap(), w);
            assert_eq!(tableau_stats(&t, r).unwrap().descents, coinv::colored::descents(&w));
            assert!(seen.insert((u, t)));
        }
    }
}

#[test]
fn d11_all_r() {
    for r in 1..=4usize {
        let d = d_series(1, 1, r).unwrap();
        let mut expected = SchurSeries::zero(r);
        for c in 1..=r {
            let mut comps = vec![Vec::new(); r];
            comps[c - 1] = vec![1];
            expected.add(RPartition::new(comps).unwrap(), &QPoly::monomial(1, r - c));
        }
        assert_eq!(d, expected, "r = {r}");
    }
}

#[test]
fn d22_r2() {
    let expected = series(
        2,
        &[
            (0, 1, &[E, &[2]]),
            (1, 1, &[&[1], &[1]]),
            (2, 1, &[&[2], E]),
            (2, 1, &[E, &[1, 1]]),
            (3, 1, &[&[1], &[1]]),
            (4, 1, &[&[1, 1], E]),
        ],
    );
    assert_eq!(d_series(2, 2, 2).unwrap(), expected);
}

#[test]
fn grfrob_s32_r2() {
    let expected = series(2, &s32_terms());
    assert_eq!(grfrob(Ring::S, 3, 2, 2).unwrap(), expected);
}

#[test]
fn grfrob_r32_r2() {
    assert_eq!(grfrob(Ring::R, 3, 2, 2).unwrap(), series(2, &r32_terms()));
}

#[test]
fn k_equals_n_rings_agree() {
    for r in 1..=3 {
        for n in 1..=4 {
            assert_eq!(grfrob(Ring::R, n, n, r).unwrap(), grfrob(Ring::S, n, n, r).unwrap());
        }
    }
}

#[test]
fn hilbert_from_frobenius() {
    assert!(hilb_from_frob(&SchurSeries::zero(2)).is_zero());
    for r in 1..=3 {
        for n in 1..=4 {
            for k in 1..=n {
                for ring in [Ring::S, Ring::R] {
                    let f = grfrob(ring, n, k, r).unwrap();
                    assert!(f.is_schur_positive());
                    assert_eq!(hilb_from_frob(&f), hilbert_series(ring, n, k, r), "{ring} {n} {k} {r}");
                }
            }
            let full = hilb_from_frob(&grfrob(Ring::R, n, n, r).unwrap());
            assert_eq!(full, coinv::qseries::hilbert_coinvariant(n, r));
        }
    }
}
