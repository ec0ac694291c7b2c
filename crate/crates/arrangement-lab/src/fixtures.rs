//! Named arrangements used across the test suites and the docs, plus
//! seeded random instance generators for property sweeps.

use rand::Rng;

use crate::arrangement::{Arrangement, Hyperplane};
use crate::rat::Rat;

/// Coordinate hyperplanes x_1 = 0, ..., x_l = 0.
pub fn boolean(l: usize) -> Arrangement {
    let hyperplanes = (0..l)
        .map(|i| {
            let mut normal = vec![Rat::zero(); l];
            normal[i] = Rat::one();
            Hyperplane::new(normal, Rat::zero(), format!("x{}", i + 1))
        })
        .collect();
    Arrangement::new(l, hyperplanes).expect("boolean arrangement is valid")
}

/// Four planes in general position in dimension 3:
/// x = 0, y = 0, z = 0, x + y + z = 1.
pub fn general_position_4() -> Arrangement {
    Arrangement::from_ints(
        3,
        &[
            (&[1, 0, 0], 0),
            (&[0, 1, 0], 0),
            (&[0, 0, 1], 0),
            (&[1, 1, 1], 1),
        ],
    )
    .expect("fixture is valid")
}

/// {x = 0, x = 1, y = 0}: a parallel pair plus a transversal line.
pub fn parallel_plus_transversal() -> Arrangement {
    Arrangement::from_ints(2, &[(&[1, 0], 0), (&[1, 0], 1), (&[0, 1], 0)])
        .expect("fixture is valid")
}

/// {x = 0, y = 0, x + y = 0}: three concurrent lines.
pub fn concurrent_triple() -> Arrangement {
    Arrangement::from_ints(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], 0)])
        .expect("fixture is valid")
}

/// Random arrangement with integer coefficients in `[-coeff_bound, coeff_bound]`,
/// resampling hyperplanes that would be zero or duplicates.
pub fn random_arrangement(
    rng: &mut impl Rng,
    dim: usize,
    n: usize,
    coeff_bound: i64,
) -> Arrangement {
    let mut hyperplanes: Vec<Hyperplane> = Vec::with_capacity(n);
    while hyperplanes.len() < n {
        let normal: Vec<Rat> = (0..dim)
            .map(|_| Rat::from_int(rng.gen_range(-coeff_bound..=coeff_bound)))
            .collect();
        let offset = Rat::from_int(rng.gen_range(-coeff_bound..=coeff_bound));
        if normal.iter().all(Rat::is_zero) {
            continue;
        }
        let label = format!("H{}", hyperplanes.len() + 1);
        let candidate = Hyperplane::new(normal, offset, label);
        let mut trial = hyperplanes.clone();
        trial.push(candidate);
        if let Ok(a) = Arrangement::new(dim, trial) {
            hyperplanes = a.hyperplanes;
        }
    }
    Arrangement { dim, hyperplanes }
}

/// As [`random_arrangement`], but resampled until essential. Needs `n >= dim`.
pub fn random_essential_arrangement(
    rng: &mut impl Rng,
    dim: usize,
    n: usize,
    coeff_bound: i64,
) -> Arrangement {
    assert!(n >= dim, "essential needs at least dim hyperplanes");
    loop {
        let a = random_arrangement(rng, dim, n, coeff_bound);
        if a.is_essential() {
            return a;
        }
    }
}
