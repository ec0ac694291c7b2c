//! The intersection poset L(A): flats, Möbius values, characteristic
//! polynomial, truncation, Betti numbers, and the subset-sum (Whitney)
//! oracle used to cross-check the Möbius route.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::linalg::{self, AffineSolution, RatMatrix};
use crate::rat::Rat;

/// Nonempty intersection of hyperplanes. `index_set` is closed: every
/// hyperplane containing the flat is listed, which makes it the flat's
/// identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    pub index_set: Vec<usize>,
    pub dim: usize,
    pub rank: usize,
    pub witness: AffineSolution,
}

impl Flat {
    /// Poset order: X <= Y iff every hyperplane through X also passes
    /// through Y's intersection, i.e. reverse inclusion of subspaces.
    pub fn leq(&self, other: &Flat) -> bool {
        is_subset(&self.index_set, &other.index_set)
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    // Both sorted.
    let mut it = b.iter();
    'outer: for x in a {
        for y in it.by_ref() {
            if y == x {
                continue 'outer;
            }
            if y > x {
                return false;
            }
        }
        return false;
    }
    true
}

/// L(A) in canonical order (rank, then lexicographic index set), with the
/// Möbius function evaluated on every flat.
#[derive(Clone, Debug)]
pub struct IntersectionPoset {
    pub ambient_dim: usize,
    pub flats: Vec<Flat>,
    pub moebius: Vec<BigInt>,
}

impl IntersectionPoset {
    pub fn max_rank(&self) -> usize {
        self.flats.iter().map(|f| f.rank).max().unwrap_or(0)
    }

    pub fn flats_of_rank(&self, rank: usize) -> impl Iterator<Item = &Flat> {
        self.flats.iter().filter(move |f| f.rank == rank)
    }

    /// Canonical (rank, index-set) signature, used for isomorphism checks
    /// between a truncated poset and an explicit section poset.
    pub fn signature(&self) -> Vec<(usize, Vec<usize>)> {
        self.flats
            .iter()
            .map(|f| (f.rank, f.index_set.clone()))
            .collect()
    }
}

/// Intersection of the hyperplanes indexed by `set`, as an affine system.
pub fn intersect(a: &Arrangement, set: &[usize]) -> AffineSolution {
    if set.is_empty() {
        return AffineSolution::Nonempty {
            point: vec![Rat::zero(); a.dim],
            direction_basis: (0..a.dim)
                .map(|i| {
                    let mut e = vec![Rat::zero(); a.dim];
                    e[i] = Rat::one();
                    e
                })
                .collect(),
        };
    }
    let rows: Vec<Vec<Rat>> = set.iter().map(|&i| a.hyperplanes[i].normal.clone()).collect();
    let rhs: Vec<Rat> = set.iter().map(|&i| a.hyperplanes[i].offset.clone()).collect();
    linalg::solve_affine(&RatMatrix::from_rows(&rows), &rhs)
}

/// All hyperplane indices whose hyperplane contains the witness subspace.
fn closure(a: &Arrangement, witness: &AffineSolution) -> Vec<usize> {
    let AffineSolution::Nonempty { point, direction_basis } = witness else {
        panic!("closure of an empty intersection");
    };
    (0..a.len())
        .filter(|&i| {
            let h = &a.hyperplanes[i];
            h.contains(point)
                && direction_basis
                    .iter()
                    .all(|d| linalg::dot(&h.normal, d).is_zero())
        })
        .collect()
}

/// Builds L(A) by closure-driven BFS from the whole space: each flat is
/// intersected with each hyperplane not already through it, and the result
/// is identified by its closed index set.
pub fn build(a: &Arrangement) -> IntersectionPoset {
    let bottom = Flat {
        index_set: Vec::new(),
        dim: a.dim,
        rank: 0,
        witness: intersect(a, &[]),
    };
    let mut seen: HashMap<Vec<usize>, Flat> = HashMap::new();
    seen.insert(Vec::new(), bottom.clone());
    let mut frontier = vec![bottom];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for flat in &frontier {
            for i in 0..a.len() {
                if flat.index_set.binary_search(&i).is_ok() {
                    continue;
                }
                let mut set = flat.index_set.clone();
                set.push(i);
                set.sort_unstable();
                let witness = intersect(a, &set);
                let AffineSolution::Nonempty { ref direction_basis, .. } = witness else {
                    continue;
                };
                let dim = direction_basis.len();
                let closed = closure(a, &witness);
                if seen.contains_key(&closed) {
                    continue;
                }
                let new_flat = Flat {
                    index_set: closed.clone(),
                    dim,
                    rank: a.dim - dim,
                    witness,
                };
                seen.insert(closed, new_flat.clone());
                next.push(new_flat);
            }
        }
        frontier = next;
    }

    let mut flats: Vec<Flat> = seen.into_values().collect();
    flats.sort_by(|x, y| (x.rank, &x.index_set).cmp(&(y.rank, &y.index_set)));

    // mu(V) = 1 and mu(X) = -sum over Y strictly below X; canonical order
    // lists all of X's lower interval before X.
    let mut moebius: Vec<BigInt> = Vec::with_capacity(flats.len());
    for i in 0..flats.len() {
        if flats[i].index_set.is_empty() {
            moebius.push(BigInt::one());
            continue;
        }
        let mut sum = BigInt::zero();
        for j in 0..i {
            if flats[j].index_set != flats[i].index_set && flats[j].leq(&flats[i]) {
                sum += &moebius[j];
            }
        }
        moebius.push(-sum);
    }

    IntersectionPoset {
        ambient_dim: a.dim,
        flats,
        moebius,
    }
}

/// Characteristic polynomial as exact integer coefficients: `coeffs[k]` is
/// the coefficient of `t^(l-k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    pub coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, t: i64) -> BigInt {
        let t = BigInt::from(t);
        let mut acc = BigInt::zero();
        for c in &self.coeffs {
            acc = acc * &t + c;
        }
        acc
    }

    pub fn coeffs_i64(&self) -> Vec<i64> {
        self.coeffs
            .iter()
            .map(|c| c.to_i64().expect("coefficient fits in i64"))
            .collect()
    }
}

impl std::fmt::Display for CharPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let deg = self.degree();
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = deg - k;
            let abs = c.magnitude();
            if wrote {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let show_coeff = !abs.is_one() || power == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match power {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{power}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub fn char_poly_of(p: &IntersectionPoset) -> CharPoly {
    let l = p.ambient_dim;
    let mut coeffs = vec![BigInt::zero(); l + 1];
    for (flat, mu) in p.flats.iter().zip(&p.moebius) {
        coeffs[flat.rank] += mu;
    }
    CharPoly { coeffs }
}

pub fn char_poly(a: &Arrangement) -> CharPoly {
    char_poly_of(&build(a))
}

/// Whitney-sum oracle: chi(A,t) = sum over central subsets S of
/// (-1)^|S| t^(dim of the intersection). Exponential; test use only.
pub fn char_poly_whitney(a: &Arrangement, bound: usize) -> Result<CharPoly> {
    let n = a.len();
    if n > bound {
        return Err(Error::OracleTooLarge { n, bound });
    }
    let mut coeffs = vec![BigInt::zero(); a.dim + 1];
    for mask in 0u64..(1u64 << n) {
        let set: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if let AffineSolution::Nonempty { direction_basis, .. } = intersect(a, &set) {
            let dim = direction_basis.len();
            let sign = if set.len().is_multiple_of(2) { 1 } else { -1 };
            coeffs[a.dim - dim] += sign;
        }
    }
    Ok(CharPoly { coeffs })
}

/// Removes all flats of top rank `l`; combinatorial model of the poset of a
/// generic section.
pub fn truncate(p: &IntersectionPoset) -> IntersectionPoset {
    let keep: Vec<usize> = (0..p.flats.len())
        .filter(|&i| p.flats[i].rank < p.ambient_dim)
        .collect();
    IntersectionPoset {
        ambient_dim: p.ambient_dim,
        flats: keep.iter().map(|&i| p.flats[i].clone()).collect(),
        moebius: keep.iter().map(|&i| p.moebius[i].clone()).collect(),
    }
}

/// chi(A ∩ U, t) = (chi(A,t) - chi(A,0)) / t for a generic section.
pub fn section_char_poly(a: &Arrangement) -> Result<CharPoly> {
    if a.dim < 2 {
        return Err(Error::DimensionTooSmall(a.dim));
    }
    Ok(section_of_char_poly(&char_poly(a)))
}

/// The same recurrence applied to an already computed polynomial.
pub fn section_of_char_poly(chi: &CharPoly) -> CharPoly {
    // Dropping the constant term and dividing by t = dropping the last
    // coefficient in our positional encoding.
    CharPoly {
        coeffs: chi.coeffs[..chi.coeffs.len() - 1].to_vec(),
    }
}

/// Betti numbers b_0..b_l of the complement and its Euler characteristic.
pub fn betti_and_euler(a: &Arrangement) -> (Vec<u64>, i64) {
    let chi = char_poly(a);
    betti_and_euler_of(&chi)
}

pub fn betti_and_euler_of(chi: &CharPoly) -> (Vec<u64>, i64) {
    let betti: Vec<u64> = chi
        .coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let signed = if k % 2 == 0 { c.clone() } else { -c };
            signed.to_u64().expect("Betti numbers are nonnegative")
        })
        .collect();
    let euler = chi.eval(1).to_i64().expect("Euler characteristic fits i64");
    (betti, euler)
}
