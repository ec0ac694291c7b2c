//! Independent cross-checks for the production algorithms. Everything in
//! here is exponential and gated by size bounds; it exists to test, not to
//! compute.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arrangement::Arrangement;
use crate::at_infinity;
use crate::error::{Error, Result};
use crate::linalg::{self, RatMatrix};
use crate::poset::{self, CharPoly};
use crate::rat::Rat;

pub const DEFAULT_ORACLE_BOUND: usize = 20;
pub const ORACLE_BOUND_ENV: &str = "ARRANGEMENT_LAB_ORACLE_BOUND";
pub const PARTITION_ORACLE_BOUND: usize = 10;

/// Oracle size gate: explicit override, else the environment variable,
/// else the default.
pub fn effective_bound(cli_override: Option<usize>) -> usize {
    cli_override
        .or_else(|| {
            std::env::var(ORACLE_BOUND_ENV)
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(DEFAULT_ORACLE_BOUND)
}

/// chi via Möbius recursion against chi via subset sums.
pub fn whitney_check(a: &Arrangement, bound: usize) -> Result<bool> {
    Ok(poset::char_poly(a) == poset::char_poly_whitney(a, bound)?)
}

fn coeff_of_power(chi: &CharPoly, power: usize) -> BigInt {
    let deg = chi.degree();
    if power > deg {
        BigInt::zero()
    } else {
        chi.coeffs[deg - power].clone()
    }
}

/// chi(A,t) = chi(A',t) - chi(A'',t) for every hyperplane choice.
pub fn deletion_restriction_check(a: &Arrangement) -> Result<bool> {
    let chi = poset::char_poly(a);
    for h in 0..a.len() {
        let (prime, double_prime) = a.delete_restrict(h)?;
        let chi_p = poset::char_poly(&prime);
        let chi_pp = poset::char_poly(&double_prime);
        for power in 0..=a.dim {
            let lhs = coeff_of_power(&chi, power);
            let rhs = coeff_of_power(&chi_p, power) - coeff_of_power(&chi_pp, power);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The poset of an explicitly computed generic section must be rank- and
/// order-isomorphic to the truncation of the original poset. Section
/// hyperplanes inherit the parent indices, so the isomorphism is index-set
/// equality.
pub fn truncation_section_check(a: &Arrangement, seed: u64) -> Result<bool> {
    let u = a.random_generic_hyperplane(seed)?;
    let section = a.section(&u)?;
    let truncated = poset::truncate(&poset::build(a));
    let section_poset = poset::build(&section);
    Ok(truncated.signature() == section_poset.signature())
}

/// Brute-force matroid component oracle: over all partitions of the ground
/// set whose blocks' ranks add up to the total rank, the finest one is the
/// component partition. Exponential (Bell numbers); bounded at
/// [`PARTITION_ORACLE_BOUND`] elements.
pub fn matroid_partition_oracle(vectors: &[Vec<Rat>]) -> Result<Vec<Vec<usize>>> {
    let n = vectors.len();
    if n > PARTITION_ORACLE_BOUND {
        return Err(Error::TooLarge {
            n,
            bound: PARTITION_ORACLE_BOUND,
        });
    }
    for (i, v) in vectors.iter().enumerate() {
        if v.iter().all(Rat::is_zero) {
            return Err(Error::ZeroVector(i));
        }
    }

    let mut rank_cache: HashMap<u64, usize> = HashMap::new();
    let mut rank_of = |mask: u64| -> usize {
        *rank_cache.entry(mask).or_insert_with(|| {
            let rows: Vec<Vec<Rat>> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| vectors[i].clone())
                .collect();
            if rows.is_empty() {
                0
            } else {
                linalg::rank(&RatMatrix::from_rows(&rows))
            }
        })
    };
    let total = rank_of((1u64 << n) - 1);

    // Enumerate set partitions by assigning each element to an existing
    // block or a fresh one.
    let mut best: Option<Vec<u64>> = None;
    let mut stack: Vec<Vec<u64>> = vec![Vec::new()];
    while let Some(blocks) = stack.pop() {
        let placed = blocks.iter().map(|b| b.count_ones() as usize).sum::<usize>();
        if placed == n {
            let additive = blocks.iter().map(|&b| rank_of(b)).sum::<usize>() == total;
            if additive && best.as_ref().is_none_or(|b| blocks.len() > b.len()) {
                best = Some(blocks);
            }
            continue;
        }
        let elem = placed as u64;
        for i in 0..blocks.len() {
            let mut next = blocks.clone();
            next[i] |= 1 << elem;
            stack.push(next);
        }
        let mut next = blocks;
        next.push(1 << elem);
        stack.push(next);
    }

    let best = best.expect("the one-block partition is always additive");
    let mut out: Vec<Vec<usize>> = best
        .iter()
        .map(|&mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    out.sort_by_key(|b| b[0]);
    Ok(out)
}

/// Runs the fast component algorithm against the partition oracle on every
/// dense-edge subarrangement of `a`.
pub fn matroid_check(a: &Arrangement) -> Result<bool> {
    let coned = at_infinity::cone(a);
    for edge in at_infinity::dense_edges(a)? {
        let vectors: Vec<Vec<Rat>> = edge
            .flat_indices
            .iter()
            .map(|&i| coned.homogenized_normals[i].clone())
            .collect();
        if vectors.len() > PARTITION_ORACLE_BOUND {
            continue;
        }
        if at_infinity::matroid_components(&vectors)? != matroid_partition_oracle(&vectors)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Consolidated verdict of all oracles on one arrangement.
#[derive(Clone, Debug)]
pub struct OracleReport {
    pub whitney: Option<bool>,
    pub nbc: Option<bool>,
    pub deletion_restriction: bool,
    pub truncation_isomorphism: Option<bool>,
    pub matroid_partition: Option<bool>,
}

impl OracleReport {
    pub fn all_passed(&self) -> bool {
        self.whitney.unwrap_or(true)
            && self.nbc.unwrap_or(true)
            && self.deletion_restriction
            && self.truncation_isomorphism.unwrap_or(true)
            && self.matroid_partition.unwrap_or(true)
    }
}

/// Runs every applicable oracle; checks that need preconditions the input
/// does not meet (size gates, essentiality, dimension) report `None`.
pub fn run_all(a: &Arrangement, bound: usize, seed: u64) -> Result<OracleReport> {
    let whitney = match whitney_check(a, bound) {
        Ok(v) => Some(v),
        Err(Error::OracleTooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    let nbc = if a.len() <= bound.min(crate::os_algebra::DEFAULT_ENUM_BOUND) {
        let (betti, _) = poset::betti_and_euler(a);
        Some(crate::os_algebra::nbc_profile_bounded(a, a.len())?.counts == betti)
    } else {
        None
    };
    let deletion_restriction = deletion_restriction_check(a)?;
    let truncation_isomorphism = if a.dim >= 2 {
        Some(truncation_section_check(a, seed)?)
    } else {
        None
    };
    let matroid_partition = if a.is_essential() {
        Some(matroid_check(a)?)
    } else {
        None
    };
    Ok(OracleReport {
        whitney,
        nbc,
        deletion_restriction,
        truncation_isomorphism,
        matroid_partition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn partition_oracle_matches_fast_algorithm() {
        let cases: Vec<Vec<Vec<Rat>>> = vec![
            vec![
                vec![Rat::from_int(1), Rat::from_int(0)],
                vec![Rat::from_int(0), Rat::from_int(1)],
                vec![Rat::from_int(1), Rat::from_int(1)],
            ],
            vec![
                vec![Rat::from_int(1), Rat::from_int(0), Rat::from_int(0)],
                vec![Rat::from_int(0), Rat::from_int(1), Rat::from_int(0)],
                vec![Rat::from_int(0), Rat::from_int(0), Rat::from_int(1)],
            ],
        ];
        for vectors in cases {
            assert_eq!(
                at_infinity::matroid_components(&vectors).unwrap(),
                matroid_partition_oracle(&vectors).unwrap()
            );
        }
    }

    #[test]
    fn partition_oracle_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..30 {
            let dim = rng.gen_range(2..=3);
            let n = rng.gen_range(1..=5);
            let vectors: Vec<Vec<Rat>> = (0..n)
                .map(|_| loop {
                    let v: Vec<Rat> = (0..dim)
                        .map(|_| Rat::from_int(rng.gen_range(-2..=2)))
                        .collect();
                    if !v.iter().all(Rat::is_zero) {
                        break v;
                    }
                })
                .collect();
            assert_eq!(
                at_infinity::matroid_components(&vectors).unwrap(),
                matroid_partition_oracle(&vectors).unwrap(),
                "vectors {vectors:?}"
            );
        }
    }

    #[test]
    fn component_count_invariant_under_coordinate_change() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..10 {
            let vectors: Vec<Vec<Rat>> = (0..4)
                .map(|_| loop {
                    let v: Vec<Rat> =
                        (0..3).map(|_| Rat::from_int(rng.gen_range(-2..=2))).collect();
                    if !v.iter().all(Rat::is_zero) {
                        break v;
                    }
                })
                .collect();
            // Random invertible 3x3 change of coordinates.
            let m = loop {
                let rows: Vec<Vec<Rat>> = (0..3)
                    .map(|_| (0..3).map(|_| Rat::from_int(rng.gen_range(-2..=2))).collect())
                    .collect();
                let m = RatMatrix::from_rows(&rows);
                if linalg::rank(&m) == 3 {
                    break m;
                }
            };
            let transformed: Vec<Vec<Rat>> = vectors.iter().map(|v| m.apply(v)).collect();
            assert_eq!(
                at_infinity::matroid_components(&vectors).unwrap().len(),
                at_infinity::matroid_components(&transformed).unwrap().len()
            );
        }
    }

    #[test]
    fn run_all_on_fixtures() {
        for a in [
            fixtures::boolean(3),
            fixtures::general_position_4(),
            fixtures::parallel_plus_transversal(),
        ] {
            let report = run_all(&a, DEFAULT_ORACLE_BOUND, 0).unwrap();
            assert!(report.all_passed(), "oracle failure on {a:?}: {report:?}");
        }
    }

    #[test]
    fn env_and_override_bounds() {
        assert_eq!(effective_bound(Some(5)), 5);
        // No env set in tests: default applies.
        if std::env::var(ORACLE_BOUND_ENV).is_err() {
            assert_eq!(effective_bound(None), DEFAULT_ORACLE_BOUND);
        }
    }
}
