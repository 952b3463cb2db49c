//! Acceptance suite. Each test covers one numbered criterion, checks it at
//! its stated tolerance, and prints one PASS line (run with --nocapture to
//! see them). Failing asserts mark the criterion failed.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use ptfn::oracle::minimax_grid_labels;
use ptfn::{
    bench_compare, detect_period, grundy_table, labels_from_grundy, minimax_label_1d, ptfn_misere,
    ptfn_normal, ptfn_normal_counting, ptfn_two_pile, wythoff_analytic, wythoff_sieve, GridRule,
    Label, PlayConvention, SubtractionSet,
};

fn random_set(rng: &mut StdRng) -> SubtractionSet {
    let size = rng.gen_range(1..=6);
    let raw: Vec<i64> = (0..size).map(|_| rng.gen_range(1..=20)).collect();
    SubtractionSet::new(&raw).unwrap()
}

#[test]
fn criterion_01_example_equivalence() {
    let set = SubtractionSet::new(&[1, 3, 7, 8]).unwrap();
    let start = Instant::now();
    let sieve = ptfn_normal(&set, 21).unwrap();
    let grundy = labels_from_grundy(&grundy_table(&set, 21).unwrap());
    assert_eq!(sieve.labels(), grundy.labels());
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_millis(1), "took {elapsed:?}");
    println!("PASS criterion 1: S={{1,3,7,8}} n=21 PTFN == Sprague-Grundy labels ({elapsed:?})");
}

#[test]
fn criterion_02_oracle_equivalence_normal() {
    let mut rng = StdRng::seed_from_u64(0x5047_464e);
    let start = Instant::now();
    for _ in 0..500 {
        let set = random_set(&mut rng);
        let n = rng.gen_range(0..=200u64);
        let table = ptfn_normal(&set, n).unwrap();
        for i in 0..=n {
            assert_eq!(
                table.label(i),
                minimax_label_1d(&set, i, PlayConvention::Normal),
                "set {set} position {i}"
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!("PASS criterion 2: 500 random sets, normal play PTFN == minimax oracle ({elapsed:?})");
}

#[test]
fn criterion_03_oracle_equivalence_misere() {
    let mut rng = StdRng::seed_from_u64(0x4d49_5345);
    let start = Instant::now();
    for _ in 0..500 {
        let set = random_set(&mut rng);
        let n = rng.gen_range(0..=200u64);
        let table = ptfn_misere(&set, n).unwrap();
        for i in 0..=n {
            assert_eq!(
                table.label(i),
                minimax_label_1d(&set, i, PlayConvention::Misere),
                "set {set} position {i}"
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!("PASS criterion 3: 500 random sets, misere play PTFN == minimax oracle ({elapsed:?})");
}

#[test]
fn criterion_04_two_pile_xor_grid() {
    let sa = SubtractionSet::new(&[1, 3, 7, 8]).unwrap();
    let sb = SubtractionSet::new(&[1, 2, 3, 4]).unwrap();
    let start = Instant::now();
    let grid = ptfn_two_pile(&sa, 15, &sb, 15).unwrap();
    let ga = grundy_table(&sa, 15).unwrap();
    let gb = grundy_table(&sb, 15).unwrap();
    for a in 0..=15u64 {
        for b in 0..=15u64 {
            let expect = if ga.value(a) ^ gb.value(b) == 0 {
                Label::P
            } else {
                Label::N
            };
            assert_eq!(grid.label(a, b), expect, "cell ({a},{b})");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_millis(10), "took {elapsed:?}");
    println!("PASS criterion 4: 15x15 two-pile grid == XOR-of-Grundy grid ({elapsed:?})");
}

#[test]
fn criterion_05_two_pile_oracle() {
    let mut rng = StdRng::seed_from_u64(0x3250_494c);
    let start = Instant::now();
    for _ in 0..20 {
        let sa = random_set(&mut rng);
        let sb = random_set(&mut rng);
        let grid = ptfn_two_pile(&sa, 60, &sb, 60).unwrap();
        let rule = GridRule::SumOfTwo {
            set_a: sa.clone(),
            set_b: sb.clone(),
        };
        let oracle_rows = minimax_grid_labels(&rule, 60, 60).unwrap();
        for a in 0..=60u64 {
            for b in 0..=60u64 {
                assert_eq!(
                    grid.label(a, b),
                    oracle_rows[a as usize][b as usize],
                    "sets {sa} {sb} cell ({a},{b})"
                );
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    println!("PASS criterion 5: 20 random set pairs, 60x60 grid == minimax oracle ({elapsed:?})");
}

#[test]
fn criterion_06_wythoff_analytic() {
    let n = 1000u64;
    let start = Instant::now();
    let grid = wythoff_sieve(n, n).unwrap();
    let pairs = wythoff_analytic(n).unwrap();
    let mut expected = vec![vec![Label::N; n as usize + 1]; n as usize + 1];
    for p in &pairs {
        if p.a <= n && p.b <= n {
            expected[p.a as usize][p.b as usize] = Label::P;
            expected[p.b as usize][p.a as usize] = Label::P;
        }
    }
    for a in 0..=n {
        for b in 0..=n {
            assert_eq!(
                grid.label(a, b),
                expected[a as usize][b as usize],
                "cell ({a},{b})"
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("PASS criterion 6: wythoff 1000x1000 P-cells == analytic Beatty pairs ({elapsed:?})");
}

#[test]
fn criterion_07_mod5_pattern_at_scale() {
    let set = SubtractionSet::new(&[1, 2, 3, 4]).unwrap();
    // fixture confirmed against the oracle on a small prefix first
    let small = ptfn_normal(&set, 200).unwrap();
    for i in 0..=200u64 {
        assert_eq!(
            small.label(i),
            minimax_label_1d(&set, i, PlayConvention::Normal)
        );
    }
    let n = 100_000u64;
    let start = Instant::now();
    let table = ptfn_normal(&set, n).unwrap();
    for i in 0..=n {
        let expect = if i % 5 == 0 { Label::P } else { Label::N };
        assert_eq!(table.label(i), expect, "position {i}");
    }
    // full winner-definition recursion over the whole table
    for i in 0..=n {
        let has_p_follower = set
            .moves()
            .iter()
            .any(|&s| s <= i && table.label(i - s) == Label::P);
        let expect = if has_p_follower { Label::N } else { Label::P };
        assert_eq!(table.label(i), expect);
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("PASS criterion 7: S={{1,2,3,4}} n=1e5 P exactly at multiples of 5 ({elapsed:?})");
}

#[test]
fn criterion_08_work_count_identity() {
    let mut rng = StdRng::seed_from_u64(0x4245_4e43);
    for _ in 0..25 {
        let set = random_set(&mut rng);
        let n = rng.gen_range(0..=500u64);
        let report = bench_compare(&set, n, 1).unwrap();
        assert!(report.agreement);
        assert_eq!(report.sg_mex_evals, n + 1);
        let table = ptfn_normal(&set, n).unwrap();
        let expected: u64 = (0..=n)
            .filter(|&i| table.label(i) == Label::P)
            .map(|i| set.moves().iter().filter(|&&s| i + s <= n).count() as u64)
            .sum();
        assert_eq!(report.ptfn_marks, expected, "set {set} n {n}");
        let (_, marks) = ptfn_normal_counting(&set, n).unwrap();
        assert_eq!(marks, expected);
    }
    println!("PASS criterion 8: ptfn_marks and sg_mex_evals identities hold on 25 benchmarked runs");
}

#[test]
fn criterion_09_periodicity() {
    let g = grundy_table(&SubtractionSet::new(&[1, 2, 3, 4]).unwrap(), 100).unwrap();
    let r = detect_period(&g).unwrap().unwrap();
    assert_eq!((r.preperiod, r.period, r.verified), (0, 5, true));

    let g = grundy_table(&SubtractionSet::new(&[1]).unwrap(), 100).unwrap();
    let r = detect_period(&g).unwrap().unwrap();
    assert_eq!((r.preperiod, r.period, r.verified), (0, 2, true));
    println!("PASS criterion 9: verified periods (0,5) for {{1,2,3,4}} and (0,2) for {{1}}");
}

#[test]
fn criterion_10_throughput() {
    let set = SubtractionSet::new(&[1, 3, 7, 8]).unwrap();
    let n = 10_000_000u64;
    let start = Instant::now();
    let table = ptfn_normal(&set, n).unwrap();
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(2), "took {elapsed:?}");
    // recursion check on a sampled 1e5-position window
    let window_start = 4_200_000u64;
    for i in window_start..window_start + 100_000 {
        let has_p_follower = set
            .moves()
            .iter()
            .any(|&s| s <= i && table.label(i - s) == Label::P);
        let expect = if has_p_follower { Label::N } else { Label::P };
        assert_eq!(table.label(i), expect, "position {i}");
    }
    println!("PASS criterion 10: n=1e7 sieve in {elapsed:?}, recursion holds on sampled window");
}
