//! Projective closure, matroid connectivity of subarrangements, and the
//! dense edges contained in the hyperplane at infinity.

use crate::arrangement::{Arrangement, Hyperplane};
use crate::error::{Error, Result};
use crate::linalg::{self, AffineSolution, RatMatrix};
use crate::poset;
use crate::rat::Rat;

pub const INFINITY_LABEL: &str = "H_inf";

/// Central arrangement in dimension l+1 obtained by homogenizing all
/// hyperplanes and appending the hyperplane at infinity.
#[derive(Clone, Debug)]
pub struct ConedArrangement {
    pub base: Arrangement,
    /// One vector per hyperplane of the closure: `(a, -c)` for `a.x = c`,
    /// then the unit last-coordinate vector for the hyperplane at infinity.
    pub homogenized_normals: Vec<Vec<Rat>>,
    pub infinity_index: usize,
}

impl ConedArrangement {
    /// The cone as a central arrangement, for reuse of the poset machinery.
    pub fn as_central_arrangement(&self) -> Arrangement {
        let hyperplanes = self
            .homogenized_normals
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let label = if i == self.infinity_index {
                    INFINITY_LABEL.to_string()
                } else {
                    self.base.hyperplanes[i].label.clone()
                };
                Hyperplane::new(v.clone(), Rat::zero(), label)
            })
            .collect();
        Arrangement {
            dim: self.base.dim + 1,
            hyperplanes,
        }
    }

    pub fn label(&self, index: usize) -> &str {
        if index == self.infinity_index {
            INFINITY_LABEL
        } else {
            &self.base.hyperplanes[index].label
        }
    }
}

pub fn cone(a: &Arrangement) -> ConedArrangement {
    let mut homogenized_normals: Vec<Vec<Rat>> = a
        .hyperplanes
        .iter()
        .map(|h| {
            let mut v = h.normal.clone();
            v.push(-&h.offset);
            v
        })
        .collect();
    let mut inf = vec![Rat::zero(); a.dim + 1];
    inf[a.dim] = Rat::one();
    homogenized_normals.push(inf);
    ConedArrangement {
        base: a.clone(),
        homogenized_normals,
        infinity_index: a.len(),
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            self.parent[ry] = rx;
        }
    }
}

fn vector_rank(vectors: &[&Vec<Rat>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<Rat>> = vectors.iter().map(|v| (*v).clone()).collect();
    linalg::rank(&RatMatrix::from_rows(&rows))
}

/// Connected components of the linear matroid on `vectors`, as sorted index
/// blocks sorted by least element.
///
/// Picks a basis greedily, joins each non-basis element to every member of
/// its fundamental circuit, and takes graph components; for any one basis
/// the components of that graph are the matroid components.
pub fn matroid_components(vectors: &[Vec<Rat>]) -> Result<Vec<Vec<usize>>> {
    for (i, v) in vectors.iter().enumerate() {
        if v.iter().all(Rat::is_zero) {
            return Err(Error::ZeroVector(i));
        }
    }
    let n = vectors.len();
    let mut basis: Vec<usize> = Vec::new();
    for i in 0..n {
        let mut trial: Vec<&Vec<Rat>> = basis.iter().map(|&b| &vectors[b]).collect();
        let before = vector_rank(&trial);
        trial.push(&vectors[i]);
        if vector_rank(&trial) > before {
            basis.push(i);
        }
    }

    let mut uf = UnionFind::new(n);
    let ambient = vectors.first().map_or(0, |v| v.len());
    for e in 0..n {
        if basis.contains(&e) {
            continue;
        }
        // Coordinates of e in the basis; the support is the fundamental
        // circuit minus e itself.
        let rows: Vec<Vec<Rat>> = (0..ambient)
            .map(|coord| basis.iter().map(|&b| vectors[b][coord].clone()).collect())
            .collect();
        let m = RatMatrix::from_rows(&rows);
        let AffineSolution::Nonempty { point, .. } = linalg::solve_affine(&m, &vectors[e]) else {
            unreachable!("every vector lies in the span of a greedy basis");
        };
        for (k, coeff) in point.iter().enumerate() {
            if !coeff.is_zero() {
                uf.union(e, basis[k]);
            }
        }
    }

    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut root_of_block: Vec<usize> = Vec::new();
    for i in 0..n {
        let r = uf.find(i);
        match root_of_block.iter().position(|&x| x == r) {
            Some(b) => blocks[b].push(i),
            None => {
                root_of_block.push(r);
                blocks.push(vec![i]);
            }
        }
    }
    blocks.sort_by_key(|b| b[0]);
    Ok(blocks)
}

/// Flat of the projective closure lying inside the hyperplane at infinity,
/// with its density flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseEdge {
    /// Indices into the coned arrangement; always contains the infinity index.
    pub flat_indices: Vec<usize>,
    pub rank: usize,
    pub dense: bool,
}

/// Enumerates the flats of the coned arrangement contained in the hyperplane
/// at infinity (excluding the cone point) and marks each as dense iff the
/// matroid of its subarrangement's normals is connected. The edge whose
/// subarrangement is the hyperplane at infinity alone is a singleton matroid
/// and therefore dense.
pub fn dense_edges(a: &Arrangement) -> Result<Vec<DenseEdge>> {
    if !a.is_essential() {
        return Err(Error::NotEssential);
    }
    let coned = cone(a);
    let central = coned.as_central_arrangement();
    let p = poset::build(&central);
    let top = central.dim; // cone point rank; excluded
    let mut edges = Vec::new();
    for flat in &p.flats {
        if flat.rank == 0 || flat.rank >= top {
            continue;
        }
        if flat.index_set.binary_search(&coned.infinity_index).is_err() {
            continue;
        }
        let vectors: Vec<Vec<Rat>> = flat
            .index_set
            .iter()
            .map(|&i| coned.homogenized_normals[i].clone())
            .collect();
        // Essentialization of the subarrangement would quotient by the
        // common kernel; for a linear matroid that changes nothing, so it
        // reduces to the no-loops check inside matroid_components.
        let components = matroid_components(&vectors)?;
        edges.push(DenseEdge {
            flat_indices: flat.index_set.clone(),
            rank: flat.rank,
            dense: components.len() == 1,
        });
    }
    Ok(edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Arrangement;
    use crate::fixtures;

    fn rat_vecs(vs: &[&[i64]]) -> Vec<Vec<Rat>> {
        vs.iter()
            .map(|v| v.iter().map(|&x| Rat::from_int(x)).collect())
            .collect()
    }

    #[test]
    fn cone_boolean3() {
        let c = cone(&fixtures::boolean(3));
        assert_eq!(c.homogenized_normals.len(), 4);
        assert_eq!(c.infinity_index, 3);
        for (i, v) in c.homogenized_normals.iter().enumerate() {
            let expected: Vec<Rat> = (0..4)
                .map(|j| if j == i { Rat::one() } else { Rat::zero() })
                .collect();
            assert_eq!(v, &expected);
        }
    }

    #[test]
    fn cone_homogenization_rule() {
        let c = cone(&fixtures::parallel_plus_transversal());
        assert_eq!(
            c.homogenized_normals,
            rat_vecs(&[&[1, 0, 0], &[1, 0, -1], &[0, 1, 0], &[0, 0, 1]])
        );

        let a = Arrangement::from_ints(3, &[(&[1, 1, 1], 1)]).unwrap();
        assert_eq!(cone(&a).homogenized_normals[0], rat_vecs(&[&[1, 1, 1, -1]])[0]);
    }

    #[test]
    fn matroid_components_basic() {
        let singletons = matroid_components(&rat_vecs(&[
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
        ]))
        .unwrap();
        assert_eq!(singletons, vec![vec![0], vec![1], vec![2]]);

        let circuit = matroid_components(&rat_vecs(&[&[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(circuit, vec![vec![0, 1, 2]]);

        let rank2 =
            matroid_components(&rat_vecs(&[&[1, 0, 0], &[1, 0, -1], &[0, 0, 1]])).unwrap();
        assert_eq!(rank2, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn matroid_components_rejects_zero_vector() {
        assert!(matches!(
            matroid_components(&rat_vecs(&[&[1, 0], &[0, 0]])),
            Err(Error::ZeroVector(1))
        ));
    }

    #[test]
    fn dense_edges_general_position() {
        let edges = dense_edges(&fixtures::general_position_4()).unwrap();
        let dense: Vec<_> = edges.iter().filter(|e| e.dense).collect();
        assert_eq!(dense.len(), 1);
        assert_eq!(dense[0].flat_indices, vec![4]); // the hyperplane at infinity
        // Every proper edge in H_inf has an independent subarrangement.
        for e in &edges {
            if e.flat_indices.len() > 1 {
                assert!(!e.dense);
            }
        }
    }

    #[test]
    fn dense_edges_parallel_pair_direction() {
        let edges = dense_edges(&fixtures::parallel_plus_transversal()).unwrap();
        let dense: Vec<Vec<usize>> = edges
            .iter()
            .filter(|e| e.dense)
            .map(|e| e.flat_indices.clone())
            .collect();
        // H_inf itself plus the shared point at infinity of x=0 and x=1.
        assert_eq!(dense, vec![vec![3], vec![0, 1, 3]]);
    }

    #[test]
    fn dense_edges_concurrent_triple() {
        let edges = dense_edges(&fixtures::concurrent_triple()).unwrap();
        let dense: Vec<Vec<usize>> = edges
            .iter()
            .filter(|e| e.dense)
            .map(|e| e.flat_indices.clone())
            .collect();
        assert_eq!(dense, vec![vec![3]]);
    }

    #[test]
    fn boolean_has_no_proper_dense_edge() {
        for l in 2..=4 {
            let edges = dense_edges(&fixtures::boolean(l)).unwrap();
            for e in &edges {
                assert_eq!(e.dense, e.flat_indices.len() == 1);
            }
        }
    }

    #[test]
    fn dense_edges_require_essential() {
        let parallel = Arrangement::from_ints(2, &[(&[1, 0], 0), (&[1, 0], 1)]).unwrap();
        assert!(matches!(dense_edges(&parallel), Err(Error::NotEssential)));
    }
}
