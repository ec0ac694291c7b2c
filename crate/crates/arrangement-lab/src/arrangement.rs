//! Affine hyperplane arrangements over the rationals: parsing, essentiality,
//! deletion/restriction, and construction and verification of generic
//! hyperplanes and generic sections.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, AffineSolution, RatMatrix};
use crate::poset::{self, Flat};
use crate::rat::Rat;

/// Affine hyperplane `{x : normal . x = offset}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    pub normal: Vec<Rat>,
    pub offset: Rat,
    pub label: String,
}

impl Hyperplane {
    pub fn new(normal: Vec<Rat>, offset: Rat, label: impl Into<String>) -> Self {
        Hyperplane {
            normal,
            offset,
            label: label.into(),
        }
    }

    pub fn from_ints(normal: &[i64], offset: i64, label: impl Into<String>) -> Self {
        Hyperplane::new(
            normal.iter().map(|&x| Rat::from_int(x)).collect(),
            Rat::from_int(offset),
            label,
        )
    }

    pub fn contains(&self, point: &[Rat]) -> bool {
        linalg::dot(&self.normal, point) == self.offset
    }

    /// The `(normal, offset)` vector in `Q^{l+1}`, used for proportionality
    /// tests and projective closure.
    fn extended(&self) -> Vec<Rat> {
        let mut v = self.normal.clone();
        v.push(self.offset.clone());
        v
    }
}

fn proportional(a: &[Rat], b: &[Rat]) -> bool {
    debug_assert_eq!(a.len(), b.len());
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if &a[i] * &b[j] != &a[j] * &b[i] {
                return false;
            }
        }
    }
    true
}

/// Finite set of affine hyperplanes in dimension `dim`, in a fixed order
/// that every downstream index refers to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    pub dim: usize,
    pub hyperplanes: Vec<Hyperplane>,
}

#[derive(Serialize, Deserialize)]
struct HyperplaneFile {
    normal: Vec<Rat>,
    offset: Rat,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct ArrangementFile {
    dim: usize,
    hyperplanes: Vec<HyperplaneFile>,
}

/// Verdict of the transversality check for a candidate hyperplane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenericityVerdict {
    Generic,
    /// First violating flat in canonical flat order.
    Violation(Flat),
}

impl GenericityVerdict {
    pub fn is_generic(&self) -> bool {
        matches!(self, GenericityVerdict::Generic)
    }
}

pub const GENERIC_RETRY_LIMIT: usize = 64;

impl Arrangement {
    /// Validates and builds an arrangement: nonzero normals of the right
    /// length, no two hyperplanes defining the same affine hyperplane.
    pub fn new(dim: usize, hyperplanes: Vec<Hyperplane>) -> Result<Self> {
        for (i, h) in hyperplanes.iter().enumerate() {
            if h.normal.len() != dim {
                return Err(Error::MalformedInput(format!(
                    "hyperplane {i}: normal has length {}, expected {dim}",
                    h.normal.len()
                )));
            }
            if h.normal.iter().all(Rat::is_zero) {
                return Err(Error::ZeroNormal(i));
            }
        }
        for i in 0..hyperplanes.len() {
            for j in i + 1..hyperplanes.len() {
                if proportional(&hyperplanes[i].extended(), &hyperplanes[j].extended()) {
                    return Err(Error::DuplicateHyperplane(i, j));
                }
            }
        }
        Ok(Arrangement { dim, hyperplanes })
    }

    pub fn from_ints(dim: usize, rows: &[(&[i64], i64)]) -> Result<Self> {
        let hyperplanes = rows
            .iter()
            .enumerate()
            .map(|(i, (n, c))| Hyperplane::from_ints(n, *c, format!("H{}", i + 1)))
            .collect();
        Arrangement::new(dim, hyperplanes)
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    /// Parses the JSON interchange format; labels default to "H1", "H2", ...
    pub fn parse(text: &str) -> Result<Self> {
        let file: ArrangementFile = serde_json::from_str(text)
            .map_err(|e| Error::MalformedInput(e.to_string()))?;
        if file.dim == 0 {
            return Err(Error::MalformedInput("dim must be at least 1".into()));
        }
        let hyperplanes = file
            .hyperplanes
            .into_iter()
            .enumerate()
            .map(|(i, h)| {
                Hyperplane::new(h.normal, h.offset, h.label.unwrap_or(format!("H{}", i + 1)))
            })
            .collect();
        Arrangement::new(file.dim, hyperplanes)
    }

    pub fn to_json(&self) -> String {
        let file = ArrangementFile {
            dim: self.dim,
            hyperplanes: self
                .hyperplanes
                .iter()
                .map(|h| HyperplaneFile {
                    normal: h.normal.clone(),
                    offset: h.offset.clone(),
                    label: Some(h.label.clone()),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("arrangement serializes")
    }

    /// Row matrix of all normals.
    pub fn normal_matrix(&self) -> RatMatrix {
        let rows: Vec<Vec<Rat>> = self.hyperplanes.iter().map(|h| h.normal.clone()).collect();
        if rows.is_empty() {
            RatMatrix::zero(0, self.dim)
        } else {
            RatMatrix::from_rows(&rows)
        }
    }

    /// True iff the normals span the ambient space.
    pub fn is_essential(&self) -> bool {
        linalg::rank(&self.normal_matrix()) == self.dim
    }

    /// Deletion `A' = A \ {h}` and restriction `A'' = A' ∩ H_h`, the latter in
    /// intrinsic coordinates of `H_h`. Coincident traces are merged (labels
    /// joined); hyperplanes parallel to and disjoint from `H_h` drop out.
    pub fn delete_restrict(&self, h: usize) -> Result<(Arrangement, Arrangement)> {
        if h >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: h,
                len: self.len(),
            });
        }
        let mut deleted = self.hyperplanes.clone();
        let target = deleted.remove(h);
        let prime = Arrangement {
            dim: self.dim,
            hyperplanes: deleted.clone(),
        };
        let restricted = restrict(&target, &deleted, true)?;
        Ok((prime, restricted))
    }

    /// Transversality of `u` to every flat of the arrangement: positive-
    /// dimensional flats must be cut in dimension one less, points must be
    /// missed. Returns the first violating flat in canonical order.
    pub fn is_generic(&self, u: &Hyperplane) -> Result<GenericityVerdict> {
        if u.normal.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: u.normal.len(),
            });
        }
        let poset = poset::build(self);
        for flat in &poset.flats {
            let AffineSolution::Nonempty { point, direction_basis } = &flat.witness else {
                unreachable!("flats have nonempty witnesses");
            };
            if direction_basis.is_empty() {
                // 0-dimensional flat: u must avoid the point.
                if u.contains(point) {
                    return Ok(GenericityVerdict::Violation(flat.clone()));
                }
            } else {
                // u must be transversal: its normal cannot annihilate the
                // whole direction space (that would mean containment or
                // parallel disjointness).
                if direction_basis
                    .iter()
                    .all(|d| linalg::dot(&u.normal, d).is_zero())
                {
                    return Ok(GenericityVerdict::Violation(flat.clone()));
                }
            }
        }
        Ok(GenericityVerdict::Generic)
    }

    /// Seeded search for a generic hyperplane: integer coefficients drawn
    /// from a window that doubles after each failed attempt.
    pub fn random_generic_hyperplane(&self, seed: u64) -> Result<Hyperplane> {
        if self.dim < 2 {
            return Err(Error::DimensionTooSmall(self.dim));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut window: i64 = 4;
        for _ in 0..GENERIC_RETRY_LIMIT {
            let normal: Vec<Rat> = (0..self.dim)
                .map(|_| Rat::from_int(rng.gen_range(-window..=window)))
                .collect();
            let offset = Rat::from_int(rng.gen_range(-window..=window));
            window = window.saturating_mul(2);
            if normal.iter().all(Rat::is_zero) {
                continue;
            }
            let u = Hyperplane::new(normal, offset, "U");
            if self.is_generic(&u)?.is_generic() {
                return Ok(u);
            }
        }
        Err(Error::RetryLimitExceeded(GENERIC_RETRY_LIMIT))
    }

    /// Generic section `A ∩ u` in intrinsic coordinates of `u`; exactly
    /// `|A|` hyperplanes, in the same order with the same labels.
    pub fn section(&self, u: &Hyperplane) -> Result<Arrangement> {
        match self.is_generic(u)? {
            GenericityVerdict::Generic => {}
            GenericityVerdict::Violation(flat) => {
                return Err(Error::NotGeneric(flat.index_set.clone()))
            }
        }
        let result = restrict(u, &self.hyperplanes, false)?;
        debug_assert_eq!(result.len(), self.len(), "generic section loses nothing");
        Ok(result)
    }
}

/// Expresses the traces of `hyperplanes` on `target` in the intrinsic
/// coordinates given by `target`'s canonical point and direction basis.
/// With `dedup`, coincident traces are merged and their labels joined.
fn restrict(target: &Hyperplane, hyperplanes: &[Hyperplane], dedup: bool) -> Result<Arrangement> {
    let dim = target.normal.len();
    let m = RatMatrix::from_rows(std::slice::from_ref(&target.normal));
    let AffineSolution::Nonempty { point, direction_basis } =
        linalg::solve_affine(&m, std::slice::from_ref(&target.offset))
    else {
        unreachable!("a hyperplane with nonzero normal is nonempty");
    };
    debug_assert_eq!(direction_basis.len(), dim - 1);

    let mut traces: Vec<Hyperplane> = Vec::new();
    for h in hyperplanes {
        let normal: Vec<Rat> = direction_basis
            .iter()
            .map(|d| linalg::dot(&h.normal, d))
            .collect();
        let offset = &h.offset - &linalg::dot(&h.normal, &point);
        if normal.iter().all(Rat::is_zero) {
            // Parallel to the target; disjoint ones contribute nothing, and a
            // coincident one would be a duplicate of the target itself.
            debug_assert!(!offset.is_zero(), "duplicate of the restriction target");
            continue;
        }
        let mut ext = normal.clone();
        ext.push(offset.clone());
        if dedup {
            if let Some(existing) = traces.iter_mut().find(|t| {
                let mut e = t.normal.clone();
                e.push(t.offset.clone());
                proportional(&e, &ext)
            }) {
                existing.label = format!("{},{}", existing.label, h.label);
                continue;
            }
        }
        traces.push(Hyperplane::new(normal, offset, h.label.clone()));
    }
    Ok(Arrangement {
        dim: dim - 1,
        hyperplanes: traces,
    })
}
