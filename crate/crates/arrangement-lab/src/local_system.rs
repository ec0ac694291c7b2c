//! Rank-r diagonalizable local systems as rational weight exponents, and
//! the nonresonance decision over the dense edges at infinity.
//!
//! Monodromy around a hyperplane acts diagonally with eigenvalues
//! `exp(2*pi*i*lambda)`; "eigenvalue 1" is then an exact integrality test
//! on sums of weights. Rank r > 1 is supported only in this channelwise
//! (simultaneously diagonalizable) model: for noncommuting monodromies the
//! total turn operator at an edge is not determined by the per-hyperplane
//! data alone.

use serde::{Deserialize, Serialize};

use crate::arrangement::Arrangement;
use crate::at_infinity::{self, DenseEdge};
use crate::error::{Error, Result};
use crate::rat::Rat;

/// Per-hyperplane weight exponents, one row per hyperplane, one column per
/// eigen-channel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalSystem {
    pub rank: usize,
    pub weights: Vec<Vec<Rat>>,
}

#[derive(Serialize, Deserialize)]
struct LocalSystemFile {
    rank: usize,
    weights: Vec<Vec<Rat>>,
}

impl LocalSystem {
    pub fn new(rank: usize, weights: Vec<Vec<Rat>>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::MalformedInput("local system rank must be >= 1".into()));
        }
        for (i, row) in weights.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::MalformedInput(format!(
                    "weight row {i} has {} entries, expected rank {rank}",
                    row.len()
                )));
            }
        }
        Ok(LocalSystem { rank, weights })
    }

    /// Rank-1 system with the given weight on every hyperplane.
    pub fn constant(weight: Rat, n: usize) -> Self {
        LocalSystem {
            rank: 1,
            weights: vec![vec![weight]; n],
        }
    }

    pub fn parse(text: &str, a: &Arrangement) -> Result<Self> {
        let file: LocalSystemFile =
            serde_json::from_str(text).map_err(|e| Error::MalformedInput(e.to_string()))?;
        if file.weights.len() != a.len() {
            return Err(Error::RowCountMismatch {
                expected: a.len(),
                got: file.weights.len(),
            });
        }
        LocalSystem::new(file.rank, file.weights)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&LocalSystemFile {
            rank: self.rank,
            weights: self.weights.clone(),
        })
        .expect("local system serializes")
    }

    /// The dual local system: all weights negated.
    pub fn dual(&self) -> LocalSystem {
        LocalSystem {
            rank: self.rank,
            weights: self
                .weights
                .iter()
                .map(|row| row.iter().map(|w| -w).collect())
                .collect(),
        }
    }

    /// Induced weight at infinity for channel `j`: minus the sum of the
    /// finite weights in that channel.
    pub fn weight_at_infinity(&self, j: usize) -> Rat {
        -self.weights.iter().map(|row| row[j].clone()).sum::<Rat>()
    }

    /// The r rank-1 channel systems of a rank-r system.
    pub fn channels(&self) -> Vec<LocalSystem> {
        (0..self.rank)
            .map(|j| LocalSystem {
                rank: 1,
                weights: self.weights.iter().map(|row| vec![row[j].clone()]).collect(),
            })
            .collect()
    }
}

/// One resonance failure: a dense edge whose channel weight sum is integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub edge: DenseEdge,
    /// 1-based eigen-channel.
    pub channel: usize,
    pub sum: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResonanceVerdict {
    pub nonresonant: bool,
    pub violations: Vec<Violation>,
}

/// Checks every dense edge in the hyperplane at infinity against every
/// channel: the edge resonates in a channel iff the sum of its weights
/// (the infinity member contributing the induced weight) is an integer,
/// i.e. the total turn monodromy has eigenvalue 1 there.
pub fn nonresonance_check(a: &Arrangement, l: &LocalSystem) -> Result<ResonanceVerdict> {
    if l.weights.len() != a.len() {
        return Err(Error::RowCountMismatch {
            expected: a.len(),
            got: l.weights.len(),
        });
    }
    let edges = at_infinity::dense_edges(a)?;
    let infinity_index = a.len();
    let mut violations = Vec::new();
    for edge in edges.into_iter().filter(|e| e.dense) {
        for j in 0..l.rank {
            let sum: Rat = edge
                .flat_indices
                .iter()
                .map(|&i| {
                    if i == infinity_index {
                        l.weight_at_infinity(j)
                    } else {
                        l.weights[i][j].clone()
                    }
                })
                .sum();
            if sum.is_integer() {
                violations.push(Violation {
                    edge: edge.clone(),
                    channel: j + 1,
                    sum,
                });
            }
        }
    }
    Ok(ResonanceVerdict {
        nonresonant: violations.is_empty(),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn parse_roundtrip_and_errors() {
        let a = fixtures::general_position_4();
        let l = LocalSystem::parse(
            r#"{"rank":1,"weights":[["1/3"],["1/3"],["1/3"],["1/3"]]}"#,
            &a,
        )
        .unwrap();
        assert_eq!(l.rank, 1);
        assert_eq!(LocalSystem::parse(&l.to_json(), &a).unwrap(), l);

        assert!(matches!(
            LocalSystem::parse(r#"{"rank":2,"weights":[["1/3","1/5"],["1/3","2/5"],["0","0"]]}"#, &a),
            Err(Error::RowCountMismatch { expected: 4, got: 3 })
        ));
        assert!(matches!(
            LocalSystem::parse(r#"{"rank":1,"weights":[["2/0"],["0"],["0"],["0"]]}"#, &a),
            Err(Error::MalformedInput(_))
        ));
    }

    #[test]
    fn dual_is_involutive_and_preserves_verdict() {
        let a = fixtures::general_position_4();
        let l = LocalSystem::constant(Rat::new(1, 3), 4);
        let d = l.dual();
        assert_eq!(d.weights[0][0], Rat::new(-1, 3));
        assert_eq!(d.dual(), l);
        assert_eq!(
            nonresonance_check(&a, &l).unwrap().nonresonant,
            nonresonance_check(&a, &d).unwrap().nonresonant
        );
    }

    #[test]
    fn general_position_thirds_nonresonant() {
        let a = fixtures::general_position_4();
        let v = nonresonance_check(&a, &LocalSystem::constant(Rat::new(1, 3), 4)).unwrap();
        assert!(v.nonresonant);
    }

    #[test]
    fn general_position_quarters_resonant_at_infinity() {
        let a = fixtures::general_position_4();
        let v = nonresonance_check(&a, &LocalSystem::constant(Rat::new(1, 4), 4)).unwrap();
        assert!(!v.nonresonant);
        assert_eq!(v.violations.len(), 1);
        assert_eq!(v.violations[0].edge.flat_indices, vec![4]);
        assert_eq!(v.violations[0].channel, 1);
        assert_eq!(v.violations[0].sum, Rat::from_int(-1));
    }

    #[test]
    fn parallel_plus_transversal_fifths_nonresonant() {
        let a = fixtures::parallel_plus_transversal();
        let v = nonresonance_check(&a, &LocalSystem::constant(Rat::new(1, 5), 3)).unwrap();
        assert!(v.nonresonant);
    }

    #[test]
    fn verdict_invariant_under_integer_shifts() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let a = fixtures::parallel_plus_transversal();
        for _ in 0..20 {
            let weights: Vec<Vec<Rat>> = (0..3)
                .map(|_| vec![Rat::new(rng.gen_range(-6..=6), rng.gen_range(1..=6))])
                .collect();
            let l = LocalSystem::new(1, weights.clone()).unwrap();
            let base = nonresonance_check(&a, &l).unwrap().nonresonant;
            let mut shifted = weights;
            let row = rng.gen_range(0..3);
            shifted[row][0] = &shifted[row][0] + &Rat::from_int(rng.gen_range(-3..=3));
            let l2 = LocalSystem::new(1, shifted).unwrap();
            assert_eq!(nonresonance_check(&a, &l2).unwrap().nonresonant, base);
        }
    }

    #[test]
    fn rank_r_splits_into_channels() {
        let a = fixtures::general_position_4();
        let l = LocalSystem::new(
            2,
            vec![
                vec![Rat::new(1, 3), Rat::new(1, 4)],
                vec![Rat::new(1, 3), Rat::new(1, 4)],
                vec![Rat::new(1, 3), Rat::new(1, 4)],
                vec![Rat::new(1, 3), Rat::new(1, 4)],
            ],
        )
        .unwrap();
        let whole = nonresonance_check(&a, &l).unwrap();
        let channels = l.channels();
        let channel_verdicts: Vec<bool> = channels
            .iter()
            .map(|c| nonresonance_check(&a, c).unwrap().nonresonant)
            .collect();
        assert_eq!(whole.nonresonant, channel_verdicts.iter().all(|&b| b));
        assert_eq!(channel_verdicts, vec![true, false]);
        // One violation per (edge, channel).
        assert_eq!(whole.violations.len(), 1);
        assert_eq!(whole.violations[0].channel, 2);
    }
}
