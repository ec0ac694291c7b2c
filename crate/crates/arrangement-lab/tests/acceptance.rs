//! Acceptance suite: one test per criterion, each printing a pass line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use arrangement_lab::arrangement::Arrangement;
use arrangement_lab::error::Error;
use arrangement_lab::local_system::LocalSystem;
use arrangement_lab::rat::Rat;
use arrangement_lab::{at_infinity, fixtures, homology, oracle, os_algebra, poset};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pass(criterion: &str) {
    println!("acceptance: {criterion}: pass");
}

fn binomial(n: usize, k: usize) -> i64 {
    let mut v: i64 = 1;
    for i in 0..k {
        v = v * (n - i) as i64 / (i + 1) as i64;
    }
    v
}

/// Fixed arrangements plus a seeded random-essential batch; the shared
/// ground for the per-arrangement identity checks below.
fn suite() -> Vec<Arrangement> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut suite = vec![
        fixtures::boolean(2),
        fixtures::boolean(3),
        fixtures::boolean(4),
        fixtures::general_position_4(),
        fixtures::parallel_plus_transversal(),
        fixtures::concurrent_triple(),
    ];
    for dim in 2..=3 {
        for n in dim..=(dim + 3) {
            suite.push(fixtures::random_essential_arrangement(&mut rng, dim, n, 3));
        }
    }
    suite
}

#[test]
fn criterion_01_boolean_char_poly_and_positivity() {
    for l in 2..=5 {
        let a = fixtures::boolean(l);
        let expected: Vec<i64> = (0..=l)
            .map(|k| if k % 2 == 0 { binomial(l, k) } else { -binomial(l, k) })
            .collect();
        assert_eq!(poset::char_poly(&a).coeffs_i64(), expected, "chi != (t-1)^{l}");
        assert_eq!(homology::euler_positivity(&a).unwrap(), (1, true));
    }
    pass("1 Boolean chi=(t-1)^l and euler positivity value 1");
}

#[test]
fn criterion_02_whitney_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 100 {
        let dim = rand::Rng::gen_range(&mut rng, 2..=4);
        let n = rand::Rng::gen_range(&mut rng, 1..=7);
        let a = fixtures::random_arrangement(&mut rng, dim, n, 3);
        let direct = poset::char_poly(&a);
        let whitney = poset::char_poly_whitney(&a, 7).unwrap();
        assert_eq!(direct.coeffs_i64(), whitney.coeffs_i64(), "arrangement {a:?}");
        checked += 1;
    }
    pass("2 char_poly == char_poly_whitney on 100 randomized arrangements");
}

#[test]
fn criterion_03_deletion_restriction() {
    for a in suite() {
        assert!(
            oracle::deletion_restriction_check(&a).unwrap(),
            "deletion-restriction failed for {a:?}"
        );
    }
    pass("3 chi(A) = chi(A') - chi(A'') for every hyperplane of the suite");
}

#[test]
fn criterion_04_nbc_matches_moebius_betti() {
    for a in suite() {
        if a.len() > 10 {
            continue;
        }
        let (betti, _) = poset::betti_and_euler(&a);
        assert_eq!(
            os_algebra::nbc_profile(&a).unwrap().counts,
            betti,
            "nbc mismatch for {a:?}"
        );
    }
    pass("4 nbc profile equals Moebius Betti vector on the suite");
}

#[test]
fn criterion_05_truncation_isomorphic_to_section() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..25 {
        let dim = rand::Rng::gen_range(&mut rng, 2..=3);
        let n = rand::Rng::gen_range(&mut rng, dim..=dim + 3);
        let a = fixtures::random_essential_arrangement(&mut rng, dim, n, 3);
        assert!(
            oracle::truncation_section_check(&a, i).unwrap(),
            "truncation/section mismatch for {a:?}"
        );
    }
    pass("5 truncate(L(A)) isomorphic to L(A cap U) on 25 random sections");
}

#[test]
fn criterion_06_matroid_component_oracle() {
    for a in suite() {
        assert!(
            oracle::matroid_check(&a).unwrap(),
            "matroid component mismatch for {a:?}"
        );
    }
    pass("6 fundamental-circuit components equal partition-oracle components");
}

#[test]
fn criterion_07_vanishing_certificate_values() {
    let a = fixtures::general_position_4();
    let l = LocalSystem::constant(Rat::new(1, 3), 4);

    let full = homology::homology_dims(&a, &l).unwrap();
    assert_eq!(full.dims, vec![0, 0, 0, 1]);
    let section = homology::section_homology_dims(&a, &l).unwrap();
    assert_eq!(section.dims, vec![0, 0, 3]);

    let c = homology::hurewicz_certificate(&a, &l).unwrap();
    assert_eq!((c.top_cells, c.generators), (4, 4));
    assert_eq!((c.kernel_dim, c.image_dim), (1, 3));
    assert_eq!(c.generators, c.kernel_dim + c.image_dim);
    assert!(c.surjective);

    let rank2 = LocalSystem::new(2, vec![vec![Rat::new(1, 3); 2]; 4]).unwrap();
    let c2 = homology::hurewicz_certificate(&a, &rank2).unwrap();
    assert_eq!((c2.generators, c2.kernel_dim, c2.image_dim), (8, 2, 6));

    pass("7 certificate dims 1 and 3 with b_3 = 4 = 1 + 3, doubled at rank 2");
}

#[test]
fn criterion_08_resonance_detected_at_infinity() {
    let a = fixtures::general_position_4();
    let coned = at_infinity::cone(&a);
    let l = LocalSystem::constant(Rat::new(1, 4), 4);

    let err = homology::homology_dims(&a, &l).unwrap_err();
    assert_eq!(err.exit_code(), 2);
    let Error::Resonant(verdict) = err else {
        panic!("expected a resonance error, got {err:?}");
    };
    assert!(!verdict.nonresonant);
    assert!(
        verdict.violations.iter().any(|v| {
            v.edge.flat_indices == vec![coned.infinity_index]
                && v.sum == Rat::from_int(-1)
        }),
        "no violation at H_inf with sum -1: {:?}",
        verdict.violations
    );
    assert!(matches!(
        homology::hurewicz_certificate(&a, &l),
        Err(Error::Resonant(_))
    ));

    pass("8 constant-1/4 weights are refused: H_inf resonates with sum -1");
}

#[test]
fn criterion_09_euler_positivity_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut checked = 0;
    while checked < 100 {
        let dim = rand::Rng::gen_range(&mut rng, 2..=4);
        let n = rand::Rng::gen_range(&mut rng, dim..=8);
        let a = fixtures::random_essential_arrangement(&mut rng, dim, n, 3);
        let (value, positive) = homology::euler_positivity(&a).unwrap();
        assert!(positive && value > 0, "nonpositive section Euler for {a:?}");
        checked += 1;
    }
    pass("9 section Euler characteristic positive on 100 random arrangements");
}

#[test]
fn criterion_10_homotopy_nonvanishing_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    let mut checked = 0;
    while checked < 40 {
        let dim = rand::Rng::gen_range(&mut rng, 3..=4);
        let n = rand::Rng::gen_range(&mut rng, dim..=7);
        let a = fixtures::random_essential_arrangement(&mut rng, dim, n, 3);
        for k in 2..=a.dim - 1 {
            let (_, nonzero) = homology::homotopy_nonvanishing(&a, k).unwrap();
            assert!(nonzero, "pi_{k} witness failed for {a:?}");
        }
        checked += 1;
    }
    pass("10 homotopy non-vanishing witness for all 2 <= k <= l-1");
}
