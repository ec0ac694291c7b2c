//! Structured reports for the CLI and FFI surfaces. Every report
//! serializes to JSON and renders a human-readable text block; both are
//! deterministic given the inputs.

use std::fmt::Write as _;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::arrangement::Arrangement;
use crate::at_infinity::{self, ConedArrangement};
use crate::error::Result;
use crate::homology::{self, HurewiczCertificate, Space};
use crate::local_system::{LocalSystem, ResonanceVerdict};
use crate::oracle::{self, OracleReport};
use crate::os_algebra;
use crate::poset;

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

#[derive(Serialize)]
pub struct InfoReport {
    pub dim: usize,
    pub hyperplanes: usize,
    pub labels: Vec<String>,
    pub essential: bool,
    pub char_poly: String,
    pub betti: Vec<u64>,
    pub euler: i64,
}

pub fn info(a: &Arrangement) -> InfoReport {
    let chi = poset::char_poly(a);
    let (betti, euler) = poset::betti_and_euler_of(&chi);
    InfoReport {
        dim: a.dim,
        hyperplanes: a.len(),
        labels: a.hyperplanes.iter().map(|h| h.label.clone()).collect(),
        essential: a.is_essential(),
        char_poly: chi.to_string(),
        betti,
        euler,
    }
}

impl InfoReport {
    pub fn text(&self) -> String {
        format!(
            "dim: {}\nhyperplanes: {} ({})\nessential: {}\nchar poly: {}\nbetti: ({})\neuler: {}\n",
            self.dim,
            self.hyperplanes,
            join(&self.labels, ", "),
            self.essential,
            self.char_poly,
            join(&self.betti, ","),
            self.euler
        )
    }
}

#[derive(Serialize)]
pub struct FlatRow {
    pub rank: usize,
    pub index_set: Vec<usize>,
    pub dim: usize,
    pub moebius: i64,
}

#[derive(Serialize)]
pub struct PosetReport {
    pub flats: Vec<FlatRow>,
}

pub fn poset_report(a: &Arrangement) -> PosetReport {
    let p = poset::build(a);
    PosetReport {
        flats: p
            .flats
            .iter()
            .zip(&p.moebius)
            .map(|(f, mu)| FlatRow {
                rank: f.rank,
                index_set: f.index_set.clone(),
                dim: f.dim,
                moebius: mu.to_i64().expect("Möbius value fits i64"),
            })
            .collect(),
    }
}

impl PosetReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        for f in &self.flats {
            writeln!(
                out,
                "rank={} set={{{}}} dim={} mu={}",
                f.rank,
                join(&f.index_set, ","),
                f.dim,
                f.moebius
            )
            .unwrap();
        }
        out
    }
}

#[derive(Serialize)]
pub struct CharPolyReport {
    /// Coefficients in descending powers of t, as decimal strings.
    pub coefficients: Vec<String>,
    pub pretty: String,
}

pub fn charpoly(a: &Arrangement) -> CharPolyReport {
    let chi = poset::char_poly(a);
    CharPolyReport {
        coefficients: chi.coeffs.iter().map(|c| c.to_string()).collect(),
        pretty: chi.to_string(),
    }
}

impl CharPolyReport {
    pub fn text(&self) -> String {
        format!("{}\n", self.pretty)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BettiMethod {
    Moebius,
    Nbc,
    Both,
}

#[derive(Serialize)]
pub struct BettiReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub moebius: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nbc: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
}

pub fn betti(a: &Arrangement, method: BettiMethod, bound: usize) -> Result<BettiReport> {
    let moebius = match method {
        BettiMethod::Nbc => None,
        _ => Some(poset::betti_and_euler(a).0),
    };
    let nbc = match method {
        BettiMethod::Moebius => None,
        _ => Some(os_algebra::nbc_profile_bounded(a, bound)?.counts),
    };
    let verdict = match (&moebius, &nbc) {
        (Some(m), Some(n)) => Some(if m == n { "match" } else { "mismatch" }.to_string()),
        _ => None,
    };
    Ok(BettiReport { moebius, nbc, verdict })
}

impl BettiReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        if let Some(m) = &self.moebius {
            writeln!(out, "moebius: ({})", join(m, ",")).unwrap();
        }
        if let Some(n) = &self.nbc {
            writeln!(out, "nbc:     ({})", join(n, ",")).unwrap();
        }
        if let Some(v) = &self.verdict {
            writeln!(out, "verdict: {v}").unwrap();
        }
        out
    }
}

#[derive(Serialize)]
pub struct DenseEdgeRow {
    pub members: Vec<String>,
    pub rank: usize,
    pub dense: bool,
}

#[derive(Serialize)]
pub struct DenseEdgesReport {
    pub edges: Vec<DenseEdgeRow>,
}

fn edge_members(coned: &ConedArrangement, indices: &[usize]) -> Vec<String> {
    indices.iter().map(|&i| coned.label(i).to_string()).collect()
}

pub fn dense_edges(a: &Arrangement) -> Result<DenseEdgesReport> {
    let coned = at_infinity::cone(a);
    let edges = at_infinity::dense_edges(a)?;
    Ok(DenseEdgesReport {
        edges: edges
            .iter()
            .map(|e| DenseEdgeRow {
                members: edge_members(&coned, &e.flat_indices),
                rank: e.rank,
                dense: e.dense,
            })
            .collect(),
    })
}

impl DenseEdgesReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        for e in &self.edges {
            writeln!(
                out,
                "edge={{{}}} rank={} dense={}",
                e.members.join(","),
                e.rank,
                e.dense
            )
            .unwrap();
        }
        out
    }
}

pub const DIAGONAL_MODEL_NOTE: &str = "weights model a simultaneously diagonalizable \
(channelwise) local system; noncommuting monodromy is out of scope";

#[derive(Serialize)]
pub struct ViolationRow {
    pub edge_members: Vec<String>,
    pub channel: usize,
    pub sum: String,
}

#[derive(Serialize)]
pub struct NonresonanceReport {
    pub nonresonant: bool,
    pub violations: Vec<ViolationRow>,
    pub model: String,
}

pub fn resonance_rows(a: &Arrangement, verdict: &ResonanceVerdict) -> Vec<ViolationRow> {
    let coned = at_infinity::cone(a);
    verdict
        .violations
        .iter()
        .map(|v| ViolationRow {
            edge_members: edge_members(&coned, &v.edge.flat_indices),
            channel: v.channel,
            sum: v.sum.to_string(),
        })
        .collect()
}

pub fn nonresonance(a: &Arrangement, verdict: &ResonanceVerdict) -> NonresonanceReport {
    NonresonanceReport {
        nonresonant: verdict.nonresonant,
        violations: resonance_rows(a, verdict),
        model: DIAGONAL_MODEL_NOTE.to_string(),
    }
}

impl NonresonanceReport {
    pub fn text(&self) -> String {
        let mut out = format!("nonresonant: {}\n", self.nonresonant);
        for v in &self.violations {
            writeln!(
                out,
                "violation: edge={{{}}} channel={} sum={}",
                v.edge_members.join(","),
                v.channel,
                v.sum
            )
            .unwrap();
        }
        writeln!(out, "note: {}", self.model).unwrap();
        out
    }
}

#[derive(Serialize)]
pub struct HomologyCliReport {
    pub space: String,
    pub rank: usize,
    pub dims: Vec<u64>,
    pub euler_used: i64,
}

pub fn homology(a: &Arrangement, l: &LocalSystem, space: Space) -> Result<HomologyCliReport> {
    let r = match space {
        Space::FullComplement => homology::homology_dims(a, l)?,
        Space::GenericSection => homology::section_homology_dims(a, l)?,
    };
    Ok(HomologyCliReport {
        space: match r.space {
            Space::FullComplement => "full_complement".to_string(),
            Space::GenericSection => "generic_section".to_string(),
        },
        rank: r.rank,
        dims: r.dims,
        euler_used: r.euler_used,
    })
}

impl HomologyCliReport {
    pub fn text(&self) -> String {
        let mut out = format!("space: {}\nlocal system rank: {}\n", self.space, self.rank);
        for (k, d) in self.dims.iter().enumerate() {
            writeln!(out, "dim H_{k} = {d}").unwrap();
        }
        writeln!(out, "euler characteristic used: {}", self.euler_used).unwrap();
        out
    }
}

#[derive(Serialize)]
pub struct HurewiczReport {
    pub ambient_dim: usize,
    pub top_cells: u64,
    pub generators: u64,
    pub kernel_dim: u64,
    pub image_dim: u64,
    pub identity: String,
    pub surjective: bool,
    pub warnings: Vec<String>,
}

pub fn hurewicz(a: &Arrangement, c: &HurewiczCertificate) -> HurewiczReport {
    HurewiczReport {
        ambient_dim: a.dim,
        top_cells: c.top_cells,
        generators: c.generators,
        kernel_dim: c.kernel_dim,
        image_dim: c.image_dim,
        identity: format!("{} = {} + {}", c.generators, c.kernel_dim, c.image_dim),
        surjective: c.surjective,
        warnings: c.warnings.clone(),
    }
}

impl HurewiczReport {
    pub fn text(&self) -> String {
        let mut out = format!(
            "top cells b_{}: {}\ngenerators r*b_{}: {}\nkernel dim H_{}: {}\nimage dim H_{}: {}\nexactness: {}\nsurjective: {}\n",
            self.ambient_dim,
            self.top_cells,
            self.ambient_dim,
            self.generators,
            self.ambient_dim,
            self.kernel_dim,
            self.ambient_dim - 1,
            self.image_dim,
            self.identity,
            self.surjective
        );
        for w in &self.warnings {
            writeln!(out, "warning: {w}").unwrap();
        }
        out
    }
}

#[derive(Serialize)]
pub struct EulerPositivityReport {
    pub value: i64,
    pub positive: bool,
}

impl EulerPositivityReport {
    pub fn text(&self) -> String {
        format!("value: {}\npositive: {}\n", self.value, self.positive)
    }
}

#[derive(Serialize)]
pub struct HomotopyReport {
    pub k: usize,
    pub euler: i64,
    pub nonvanishing: bool,
}

impl HomotopyReport {
    pub fn text(&self) -> String {
        format!(
            "k: {}\neuler of generic {}-section: {}\nhomotopy nonvanishing: {}\n",
            self.k, self.k, self.euler, self.nonvanishing
        )
    }
}

#[derive(Serialize)]
pub struct OracleCheckReport {
    pub whitney: String,
    pub nbc: String,
    pub deletion_restriction: String,
    pub truncation_isomorphism: String,
    pub matroid_partition: String,
    pub all_passed: bool,
}

fn verdict_str(v: Option<bool>) -> String {
    match v {
        Some(true) => "pass".to_string(),
        Some(false) => "FAIL".to_string(),
        None => "skipped".to_string(),
    }
}

pub fn oracle_check(a: &Arrangement, bound: usize, seed: u64) -> Result<OracleCheckReport> {
    let r: OracleReport = oracle::run_all(a, bound, seed)?;
    Ok(OracleCheckReport {
        whitney: verdict_str(r.whitney),
        nbc: verdict_str(r.nbc),
        deletion_restriction: verdict_str(Some(r.deletion_restriction)),
        truncation_isomorphism: verdict_str(r.truncation_isomorphism),
        matroid_partition: verdict_str(r.matroid_partition),
        all_passed: r.all_passed(),
    })
}

impl OracleCheckReport {
    pub fn text(&self) -> String {
        format!(
            "whitney: {}\nnbc: {}\ndeletion-restriction: {}\ntruncation-isomorphism: {}\nmatroid-partition: {}\nall passed: {}\n",
            self.whitney,
            self.nbc,
            self.deletion_restriction,
            self.truncation_isomorphism,
            self.matroid_partition,
            self.all_passed
        )
    }
}
