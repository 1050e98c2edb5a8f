//! JSON file formats and canonical output.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::path::Path;

use kquiver::engine::CoefficientTable;
use kquiver::gamma::key_degree;
use kquiver::partitions::Partition;
use kquiver::quiver::{OrbitSpec, Quiver, QuiverRep, Root};
use kquiver::resolution::ResolutionPair;
use kquiver::TensorElement;
use serde::{de::DeserializeOwned, Deserialize, Serialize};

use crate::CliError;

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    serde_json::from_str(&text).map_err(|e| CliError::Json(path.display().to_string(), e))
}

/// `{"vertices": n, "arrows": [[tail, head], …]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverFile {
    pub vertices: usize,
    pub arrows: Vec<[usize; 2]>,
}

impl QuiverFile {
    pub fn to_quiver(&self) -> Result<Quiver, CliError> {
        Ok(Quiver::new(self.vertices, self.arrows.iter().map(|a| (a[0], a[1])).collect())?)
    }

    pub fn from_quiver(q: &Quiver) -> Self {
        QuiverFile { vertices: q.num_vertices(), arrows: q.arrows().iter().map(|&(t, h)| [t, h]).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootMult {
    pub root: Vec<usize>,
    pub m: usize,
}

/// `{"dim": [e₁, …], "mults": [{"root": [d₁, …], "m": k}, …]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitFile {
    pub dim: Vec<usize>,
    pub mults: Vec<RootMult>,
}

impl OrbitFile {
    pub fn to_orbit(&self, q: &Quiver) -> Result<OrbitSpec, CliError> {
        let mut mults = Vec::with_capacity(self.mults.len());
        for rm in &self.mults {
            mults.push((Root::new(q, rm.root.clone())?, rm.m));
        }
        Ok(OrbitSpec::for_quiver(q, self.dim.clone(), mults)?)
    }

    pub fn from_orbit(orbit: &OrbitSpec) -> Self {
        OrbitFile {
            dim: orbit.dim().to_vec(),
            mults: orbit.mults().iter().map(|(root, &m)| RootMult { root: root.as_slice().to_vec(), m }).collect(),
        }
    }
}

/// `{"i": [...], "r": [...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairFile {
    pub i: Vec<usize>,
    pub r: Vec<usize>,
}

impl PairFile {
    pub fn to_pair(&self) -> Result<ResolutionPair, CliError> {
        Ok(ResolutionPair::new(self.i.clone(), self.r.clone())?)
    }

    pub fn from_pair(pair: &ResolutionPair) -> Self {
        PairFile { i: pair.vertices().to_vec(), r: pair.ranks().to_vec() }
    }
}

/// `{"dims": [...], "maps": [matrix per arrow]}`, each matrix given as rows
/// of shape `dims[head] × dims[tail]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepFile {
    pub dims: Vec<usize>,
    pub maps: Vec<Vec<Vec<i64>>>,
}

impl RepFile {
    pub fn to_rep(&self, q: &Quiver) -> Result<QuiverRep, CliError> {
        Ok(QuiverRep::new(q, self.dims.clone(), self.maps.clone())?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub mu: Vec<Vec<usize>>,
    pub coeff: i64,
}

/// `{"codim": d, "caveat": flag, "pair": {...}, "terms": [...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientOutput {
    pub codim: usize,
    pub caveat: Option<String>,
    pub pair: PairFile,
    pub terms: Vec<Term>,
}

/// Total degree first, then the concatenated parts, then slot by slot.
fn canonical_order(a: &[Partition], b: &[Partition]) -> Ordering {
    let flat = |k: &[Partition]| -> Vec<usize> { k.iter().flat_map(|p| p.parts().iter().copied()).collect() };
    key_degree(a).cmp(&key_degree(b)).then_with(|| flat(a).cmp(&flat(b))).then_with(|| a.cmp(b))
}

/// Terms of a tensor in canonical order.
pub fn sorted_terms(t: &TensorElement) -> Vec<Term> {
    let mut keys: Vec<(&[Partition], i64)> = t.iter().collect();
    keys.sort_by(|a, b| canonical_order(a.0, b.0));
    keys.into_iter().map(|(k, c)| Term { mu: k.iter().map(|p| p.parts().to_vec()).collect(), coeff: c }).collect()
}

impl CoefficientOutput {
    pub fn new(table: &CoefficientTable, tensor: &TensorElement) -> Self {
        CoefficientOutput {
            codim: table.codim,
            caveat: table.caveat.map(|c| c.tag().to_string()),
            pair: PairFile::from_pair(&table.pair),
            terms: sorted_terms(tensor),
        }
    }

    /// Rebuilds the tensor from the term list.
    pub fn to_tensor(&self, arity: usize) -> Result<TensorElement, CliError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let key = t.mu.iter().map(|p| Partition::new(p.clone())).collect::<kquiver::Result<Vec<_>>>()?;
            terms.push((key, t.coeff));
        }
        Ok(TensorElement::from_terms(arity, terms)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    /// Aligned plain text: coefficient column, then one column per vertex.
    pub fn to_table(&self) -> String {
        let show = |p: &[usize]| -> String {
            if p.is_empty() {
                "()".to_string()
            } else {
                format!("({})", p.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
            }
        };
        let arity = self.terms.first().map_or(0, |t| t.mu.len());
        let mut rows: Vec<Vec<String>> =
            vec![std::iter::once("coeff".to_string()).chain((1..=arity).map(|i| format!("mu{i}"))).collect()];
        for t in &self.terms {
            rows.push(std::iter::once(t.coeff.to_string()).chain(t.mu.iter().map(|p| show(p))).collect());
        }
        let widths: Vec<usize> =
            (0..=arity).map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        let _ = writeln!(
            out,
            "codim {}{}",
            self.codim,
            self.caveat.as_ref().map(|c| format!(" ({c})")).unwrap_or_default()
        );
        for row in rows {
            let cells: Vec<String> = row.iter().zip(&widths).map(|(cell, &w)| format!("{cell:>w$}")).collect();
            let _ = writeln!(out, "{}", cells.join("  ").trim_end());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use kquiver::part;

    #[test]
    fn terms_sorted_by_degree_then_flattened_key() {
        let t = TensorElement::from_terms(
            2,
            [
                (vec![part![2], part![]], 1),
                (vec![part![], part![1]], 1),
                (vec![part![1], part![1]], -1),
                (vec![part![1, 1], part![]], 1),
            ],
        )
        .unwrap();
        let mus: Vec<Vec<Vec<usize>>> = sorted_terms(&t).into_iter().map(|t| t.mu).collect();
        assert_eq!(
            mus,
            vec![vec![vec![], vec![1]], vec![vec![1], vec![1]], vec![vec![1, 1], vec![]], vec![vec![2], vec![]]]
        );
    }

    #[test]
    fn files_validate() {
        let q = QuiverFile { vertices: 2, arrows: vec![[1, 2]] }.to_quiver().unwrap();
        let bad = OrbitFile { dim: vec![1, 1], mults: vec![RootMult { root: vec![1, 0], m: 1 }] };
        assert!(bad.to_orbit(&q).is_err());
        let not_root = OrbitFile { dim: vec![2, 2], mults: vec![RootMult { root: vec![2, 2], m: 1 }] };
        assert!(not_root.to_orbit(&q).is_err());
        assert!(QuiverFile { vertices: 2, arrows: vec![[1, 3]] }.to_quiver().is_err());
        assert!(QuiverFile { vertices: 1, arrows: vec![[1, 1]] }.to_quiver().is_err());
    }
}
