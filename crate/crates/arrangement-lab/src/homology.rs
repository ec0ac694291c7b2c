//! Twisted homology dimensions under nonresonance, the Hurewicz
//! surjectivity certificate, Euler-characteristic positivity, and the
//! higher-homotopy non-vanishing witness.
//!
//! Everything here is dimension bookkeeping on exact characteristic
//! polynomial data; no chain complexes are built. Under resonance the
//! operations refuse to answer: the vanishing formula is only valid under
//! its hypothesis.

use num_traits::ToPrimitive;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::local_system::{self, LocalSystem};
use crate::poset::{self, CharPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    FullComplement,
    GenericSection,
}

/// Twisted homology dimensions by degree; at most one entry is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    pub space: Space,
    pub dims: Vec<u64>,
    pub rank: usize,
    pub euler_used: i64,
}

/// Dimension-level bookkeeping for surjectivity of the twisted Hurewicz
/// map: the top cells map onto the section's surviving homology, and the
/// counts must balance exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurewiczCertificate {
    pub top_cells: u64,
    pub generators: u64,
    pub kernel_dim: u64,
    pub image_dim: u64,
    pub surjective: bool,
    pub warnings: Vec<String>,
}

fn require_nonresonant(a: &Arrangement, l: &LocalSystem) -> Result<()> {
    let verdict = local_system::nonresonance_check(a, l)?;
    if verdict.nonresonant {
        Ok(())
    } else {
        Err(Error::Resonant(verdict))
    }
}

fn signed_eval(chi: &CharPoly, at: i64, sign_exponent: usize) -> i64 {
    let v = chi.eval(at);
    let signed = if sign_exponent.is_multiple_of(2) { v } else { -v };
    signed.to_i64().expect("dimension fits in i64")
}

/// Twisted homology of the full complement: concentrated in degree l with
/// dimension `(-1)^l * r * chi(A, 1)`.
pub fn homology_dims(a: &Arrangement, l: &LocalSystem) -> Result<HomologyReport> {
    if !a.is_essential() {
        return Err(Error::NotEssential);
    }
    require_nonresonant(a, l)?;
    let chi = poset::char_poly(a);
    let euler = chi.eval(1).to_i64().expect("Euler characteristic fits i64");
    let top = signed_eval(&chi, 1, a.dim) * l.rank as i64;
    assert!(top >= 0, "vanishing-theorem dimension must be nonnegative");
    let mut dims = vec![0u64; a.dim + 1];
    dims[a.dim] = top as u64;
    Ok(HomologyReport {
        space: Space::FullComplement,
        dims,
        rank: l.rank,
        euler_used: euler,
    })
}

/// Twisted homology of a generic section: concentrated in degree l-1 with
/// dimension `(-1)^(l-1) * r * chi(A ∩ U, 1)`.
pub fn section_homology_dims(a: &Arrangement, l: &LocalSystem) -> Result<HomologyReport> {
    if !a.is_essential() {
        return Err(Error::NotEssential);
    }
    if a.dim < 2 {
        return Err(Error::DimensionTooSmall(a.dim));
    }
    require_nonresonant(a, l)?;
    let chi_section = poset::section_char_poly(a)?;
    let euler = chi_section
        .eval(1)
        .to_i64()
        .expect("Euler characteristic fits i64");
    let top = signed_eval(&chi_section, 1, a.dim - 1) * l.rank as i64;
    assert!(top >= 0, "section dimension must be nonnegative");
    let mut dims = vec![0u64; a.dim];
    dims[a.dim - 1] = top as u64;
    Ok(HomologyReport {
        space: Space::GenericSection,
        dims,
        rank: l.rank,
        euler_used: euler,
    })
}

pub fn hurewicz_certificate(a: &Arrangement, l: &LocalSystem) -> Result<HurewiczCertificate> {
    if !a.is_essential() {
        return Err(Error::NotEssential);
    }
    if a.dim < 2 {
        return Err(Error::DimensionTooSmall(a.dim));
    }
    let full = homology_dims(a, l)?;
    let section = section_homology_dims(a, l)?;

    let chi = poset::char_poly(a);
    // b_l is the top Betti number, read off the constant term of chi.
    let top_cells = signed_eval(&chi, 0, a.dim);
    assert!(top_cells >= 0);
    let top_cells = top_cells as u64;
    let generators = top_cells * l.rank as u64;
    let kernel_dim = full.dims[a.dim];
    let image_dim = section.dims[a.dim - 1];
    assert_eq!(
        generators,
        kernel_dim + image_dim,
        "exactness of the dimension count"
    );

    let mut warnings = Vec::new();
    if a.dim < 3 {
        warnings.push(format!(
            "ambient dimension is {}; the surjectivity theorem is stated \"with \u{2113}\u{2265}3\", \
             though the dimension identities hold here as well",
            a.dim
        ));
    }
    if kernel_dim == 0 && image_dim == generators {
        warnings.push(
            "chi(M(A)) = 0: all twisted homology of the full complement vanishes and \
             surjectivity is carried entirely by the section generators"
                .to_string(),
        );
    }
    Ok(HurewiczCertificate {
        top_cells,
        generators,
        kernel_dim,
        image_dim,
        surjective: true,
        warnings,
    })
}

/// `(-1)^(l-1) * chi(A ∩ U, 1)`; strictly positive for every essential
/// arrangement, so a false flag here is a library bug.
pub fn euler_positivity(a: &Arrangement) -> Result<(i64, bool)> {
    if !a.is_essential() {
        return Err(Error::NotEssential);
    }
    if a.dim < 2 {
        return Err(Error::DimensionTooSmall(a.dim));
    }
    let chi_section = poset::section_char_poly(a)?;
    let value = signed_eval(&chi_section, 1, a.dim - 1);
    Ok((value, value > 0))
}

/// Euler characteristic of the generic k-dimensional iterated section and
/// the resulting homotopy non-vanishing witness `(-1)^k * euler > 0`.
pub fn homotopy_nonvanishing(a: &Arrangement, k: usize) -> Result<(i64, bool)> {
    if !a.is_essential() {
        return Err(Error::NotEssential);
    }
    if a.dim < 3 || k < 2 || k > a.dim - 1 {
        return Err(Error::KOutOfRange {
            k,
            max: a.dim.saturating_sub(1),
        });
    }
    let mut chi = poset::char_poly(a);
    for _ in 0..a.dim - k {
        chi = poset::section_of_char_poly(&chi);
    }
    let euler_k = chi.eval(1).to_i64().expect("Euler characteristic fits i64");
    let witness = signed_eval(&chi, 1, k);
    Ok((euler_k, witness > 0))
}
