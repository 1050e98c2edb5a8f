//! Directed partitions of root sets and the resolution pairs they induce.
//!
//! A partition `Φ′ = I₁ ∪ … ∪ I_s` is directed when `⟨α, β⟩ ≥ 0` inside each
//! block and `⟨α, β⟩ ≥ 0 ≥ ⟨β, α⟩` whenever `α` sits in an earlier block than
//! `β`. Summing the multiplicities of an orbit over each block and listing the
//! non-zero vertices in tail-before-head order gives a resolution pair
//! `(i, r)`, the input of the engine.

use crate::error::{Error, Result};
use crate::quiver::{OrbitSpec, Quiver, Root};

/// An ordered list of root blocks satisfying the directedness inequalities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedPartition {
    blocks: Vec<Vec<Root>>,
}

impl DirectedPartition {
    /// Checks both families of Euler form inequalities exhaustively.
    pub fn new(q: &Quiver, blocks: Vec<Vec<Root>>) -> Result<Self> {
        for (bi, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::NotDirected(format!("block {bi} is empty")));
            }
            for a in block {
                if a.0.len() != q.num_vertices() {
                    return Err(Error::LengthMismatch { expected: q.num_vertices(), found: a.0.len() });
                }
            }
        }
        for (bi, block) in blocks.iter().enumerate() {
            for a in block {
                for b in block {
                    if q.euler_unchecked(&a.0, &b.0) < 0 {
                        return Err(Error::NotDirected(format!("<{a},{b}> < 0 inside block {bi}")));
                    }
                }
                for later in &blocks[bi + 1..] {
                    for b in later {
                        if q.euler_unchecked(&a.0, &b.0) < 0 || q.euler_unchecked(&b.0, &a.0) > 0 {
                            return Err(Error::NotDirected(format!("{a} (block {bi}) and {b} break the block order")));
                        }
                    }
                }
            }
        }
        let mut all: Vec<&Root> = blocks.iter().flatten().collect();
        all.sort();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotDirected("a root appears twice".into()));
        }
        Ok(DirectedPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<Root>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn contains(&self, root: &Root) -> bool {
        self.blocks.iter().any(|b| b.contains(root))
    }
}

/// The largest `I ⊆ Φ′` with `⟨α, β⟩ ≥ 0` for `α ∈ I, β ∈ Φ′` and
/// `⟨β, α⟩ ≤ 0` for `β ∉ I`. Returned in the order of `phi`.
pub fn greedy_block(q: &Quiver, phi: &[Root]) -> Result<Vec<Root>> {
    if phi.is_empty() {
        return Err(Error::Internal("greedy block of an empty root set".into()));
    }
    let mut inside: Vec<bool> = phi.iter().map(|a| phi.iter().all(|b| q.euler_unchecked(&a.0, &b.0) >= 0)).collect();
    loop {
        let mut changed = false;
        for k in 0..phi.len() {
            if !inside[k] {
                continue;
            }
            let blocked = phi.iter().zip(&inside).any(|(b, &b_in)| !b_in && q.euler_unchecked(&b.0, &phi[k].0) > 0);
            if blocked {
                inside[k] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let block: Vec<Root> = phi.iter().zip(&inside).filter(|(_, &x)| x).map(|(a, _)| a.clone()).collect();
    if block.is_empty() {
        return Err(Error::Internal(format!("greedy block of {} roots came out empty", phi.len())));
    }
    Ok(block)
}

/// The shortest directed partition of `phi`, obtained by peeling off greedy
/// blocks.
pub fn directed_partition(q: &Quiver, phi: &[Root]) -> Result<DirectedPartition> {
    if !q.is_dynkin() {
        return Err(Error::NotDynkin);
    }
    let mut rest: Vec<Root> = phi.to_vec();
    rest.sort();
    rest.dedup();
    let mut blocks = Vec::new();
    while !rest.is_empty() {
        let block = greedy_block(q, &rest)?;
        rest.retain(|a| !block.contains(a));
        blocks.push(block);
    }
    DirectedPartition::new(q, blocks).map_err(|e| Error::Internal(format!("greedy partition is not directed: {e}")))
}

/// A sequence of vertices `i` with positive ranks `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResolutionPair {
    i: Vec<usize>,
    r: Vec<usize>,
}

impl ResolutionPair {
    pub fn new(i: Vec<usize>, r: Vec<usize>) -> Result<Self> {
        if i.len() != r.len() {
            return Err(Error::InvalidPair(format!("{} vertices but {} ranks", i.len(), r.len())));
        }
        if r.contains(&0) {
            return Err(Error::InvalidPair("ranks must be positive".into()));
        }
        Ok(ResolutionPair { i, r })
    }

    pub fn empty() -> Self {
        ResolutionPair { i: vec![], r: vec![] }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.i
    }

    pub fn ranks(&self) -> &[usize] {
        &self.r
    }

    pub fn len(&self) -> usize {
        self.i.len()
    }

    pub fn is_empty(&self) -> bool {
        self.i.is_empty()
    }

    /// Checks vertex ranges and `Σ_{i_j = v} r_j ≤ e_v`.
    pub fn validate(&self, e: &[usize]) -> Result<()> {
        let mut used = vec![0usize; e.len()];
        for (&v, &r) in self.i.iter().zip(&self.r) {
            if v == 0 || v > e.len() {
                return Err(Error::InvalidPair(format!("vertex {v} out of range 1..={}", e.len())));
            }
            used[v - 1] += r;
        }
        for (v, (&u, &d)) in used.iter().zip(e).enumerate() {
            if u > d {
                return Err(Error::InvalidPair(format!("ranks at vertex {} sum to {u} > {d}", v + 1)));
            }
        }
        Ok(())
    }

    /// The dimension vectors `e⁽¹⁾ = e, e⁽ʲ⁺¹⁾ = e⁽ʲ⁾ − r_j ε_{i_j}`, one per
    /// step (not including the final one).
    pub fn stages(&self, e: &[usize]) -> Result<Vec<Vec<usize>>> {
        self.validate(e)?;
        let mut cur = e.to_vec();
        let mut out = Vec::with_capacity(self.len());
        for (&v, &r) in self.i.iter().zip(&self.r) {
            out.push(cur.clone());
            cur[v - 1] -= r;
        }
        Ok(out)
    }
}

/// The pair induced by an orbit and a directed partition covering its
/// support. Within a block, vertices are ordered by depth in the quiver, ties
/// by index; vertices with zero total are skipped.
pub fn resolution_pair(q: &Quiver, orbit: &OrbitSpec, dp: &DirectedPartition) -> Result<ResolutionPair> {
    if !q.is_dynkin() {
        return Err(Error::NotDynkin);
    }
    if orbit.dim().len() != q.num_vertices() {
        return Err(Error::LengthMismatch { expected: q.num_vertices(), found: orbit.dim().len() });
    }
    if let Some(missing) = orbit.support().into_iter().find(|a| !dp.contains(a)) {
        return Err(Error::InvalidPair(format!("partition does not cover root {missing}")));
    }
    let depth = q.depths();
    let mut order: Vec<usize> = (0..q.num_vertices()).collect();
    order.sort_by_key(|&v| depth[v]);
    let (mut i, mut r) = (Vec::new(), Vec::new());
    for block in dp.blocks() {
        let mut p = vec![0usize; q.num_vertices()];
        for root in block {
            let m = orbit.mult(root);
            for (pv, &a) in p.iter_mut().zip(&root.0) {
                *pv += m * a;
            }
        }
        for &v in &order {
            if p[v] > 0 {
                i.push(v + 1);
                r.push(p[v]);
            }
        }
    }
    let pair = ResolutionPair { i, r };
    pair.validate(orbit.dim())?;
    Ok(pair)
}

/// Resolution pair from the shortest directed partition of the orbit's
/// support.
pub fn minimal_pair(q: &Quiver, orbit: &OrbitSpec) -> Result<ResolutionPair> {
    let dp = directed_partition(q, &orbit.support())?;
    resolution_pair(q, orbit, &dp)
}

/// Resolution pair from the shortest directed partition of all positive
/// roots.
pub fn full_pair(q: &Quiver, orbit: &OrbitSpec) -> Result<ResolutionPair> {
    let dp = directed_partition(q, &q.positive_roots()?)?;
    resolution_pair(q, orbit, &dp)
}

/// Codimension of the orbit closure resolved by `pair`, computed from the
/// dimensions of the Grassmann bundle tower.
pub fn codim(q: &Quiver, e: &[usize], pair: &ResolutionPair) -> Result<usize> {
    if e.len() != q.num_vertices() {
        return Err(Error::LengthMismatch { expected: q.num_vertices(), found: e.len() });
    }
    let mut total: i64 = 0;
    for (stage, (&v, &r)) in pair.stages(e)?.iter().zip(pair.i.iter().zip(&pair.r)) {
        let (r, ev, rank) = (r as i64, stage[v - 1] as i64, q.incoming_rank(v, stage) as i64);
        total += r * rank - r * (ev - r);
    }
    usize::try_from(total).map_err(|_| Error::Internal(format!("negative codimension {total} for pair {pair:?}")))
}
