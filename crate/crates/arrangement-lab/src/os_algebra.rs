//! Broken-circuit (nbc) Betti counts from the Orlik-Solomon presentation,
//! an independent second route to the Betti numbers of the complement.

use std::collections::HashSet;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::linalg::AffineSolution;
use crate::poset;

pub const DEFAULT_ENUM_BOUND: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CircuitKind {
    /// Central with rank(intersection) < |S|.
    DependentCentral,
    /// Empty intersection, every proper subset central.
    EmptyIntersection,
}

/// Minimal dependent or minimally noncentral subset of hyperplane indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    pub indices: Vec<usize>,
    pub kind: CircuitKind,
}

/// Degree-by-degree count of nbc monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NbcProfile {
    pub counts: Vec<u64>,
}

/// Rank of the intersection of the indexed hyperplanes, `None` if empty.
/// For a central set this equals the rank of the normals.
fn central_rank(a: &Arrangement, set: &[usize]) -> Option<usize> {
    match poset::intersect(a, set) {
        AffineSolution::Empty => None,
        AffineSolution::Nonempty { direction_basis, .. } => Some(a.dim - direction_basis.len()),
    }
}

fn is_independent_central(a: &Arrangement, set: &[usize]) -> bool {
    central_rank(a, set) == Some(set.len())
}

/// All circuits, enumerated level by level: a size-k candidate is examined
/// only when all of its (k-1)-subsets are independent with nonempty
/// intersection, which is exactly the minimality condition.
pub fn circuits(a: &Arrangement) -> Result<Vec<Circuit>> {
    circuits_bounded(a, DEFAULT_ENUM_BOUND)
}

pub fn circuits_bounded(a: &Arrangement, bound: usize) -> Result<Vec<Circuit>> {
    let n = a.len();
    if n > bound {
        return Err(Error::TooLarge { n, bound });
    }
    let mut found = Vec::new();
    let mut surviving: HashSet<Vec<usize>> = HashSet::new();
    surviving.insert(Vec::new());
    for size in 1..=n {
        let mut next: HashSet<Vec<usize>> = HashSet::new();
        let mut candidates: HashSet<Vec<usize>> = HashSet::new();
        for s in &surviving {
            let start = s.last().map_or(0, |&m| m + 1);
            for i in start..n {
                let mut c = s.clone();
                c.push(i);
                candidates.insert(c);
            }
        }
        for c in candidates {
            let all_subsets_survive = (0..c.len()).all(|skip| {
                let sub: Vec<usize> = c
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &x)| x)
                    .collect();
                surviving.contains(&sub)
            });
            if !all_subsets_survive {
                continue;
            }
            match central_rank(a, &c) {
                None => found.push(Circuit {
                    indices: c,
                    kind: CircuitKind::EmptyIntersection,
                }),
                Some(r) if r < size => found.push(Circuit {
                    indices: c,
                    kind: CircuitKind::DependentCentral,
                }),
                Some(_) => {
                    next.insert(c);
                }
            }
        }
        surviving = next;
        if surviving.is_empty() {
            // No independent central set can grow further.
            break;
        }
    }
    found.sort_by(|x, y| (x.indices.len(), &x.indices).cmp(&(y.indices.len(), &y.indices)));
    Ok(found)
}

/// nbc monomial counts: independent central subsets containing no broken
/// circuit. Broken circuits come from the dependent central circuits
/// (circuit minus its smallest index, in the input hyperplane order);
/// noncentral sets are excluded by the centrality requirement itself.
pub fn nbc_profile(a: &Arrangement) -> Result<NbcProfile> {
    nbc_profile_bounded(a, DEFAULT_ENUM_BOUND)
}

pub fn nbc_profile_bounded(a: &Arrangement, bound: usize) -> Result<NbcProfile> {
    let n = a.len();
    if n > bound {
        return Err(Error::TooLarge { n, bound });
    }
    let broken: Vec<Vec<usize>> = circuits_bounded(a, bound)?
        .into_iter()
        .filter(|c| c.kind == CircuitKind::DependentCentral)
        .map(|c| c.indices[1..].to_vec())
        .collect();

    let mut counts = vec![0u64; a.dim + 1];
    counts[0] = 1;
    let mut stack: Vec<usize> = Vec::new();
    // Depth-first with pruning: supersets of a dependent, noncentral, or
    // broken-circuit-containing set fail the same way.
    fn dfs(
        a: &Arrangement,
        broken: &[Vec<usize>],
        stack: &mut Vec<usize>,
        counts: &mut [u64],
    ) {
        let start = stack.last().map_or(0, |&m| m + 1);
        for i in start..a.len() {
            stack.push(i);
            let ok = is_independent_central(a, stack)
                && !broken
                    .iter()
                    .any(|b| b.iter().all(|x| stack.contains(x)));
            if ok {
                counts[stack.len()] += 1;
                dfs(a, broken, stack, counts);
            }
            stack.pop();
        }
    }
    dfs(a, &broken, &mut stack, &mut counts);
    Ok(NbcProfile { counts })
}
