//! The operator recursion producing quiver coefficients.
//!
//! For a resolution pair `(i, r)` of an orbit closure, the Grothendieck class
//! is `P = Φ_{i₁,r₁} Φ_{i₂,r₂} ⋯ Φ_{i_m,r_m}(1 ⊗ … ⊗ 1)`, where each `Φ`
//! appends a scratch factor, moves coproduct components onto it with the
//! operators [`psi`], and folds it back with [`a_op`]. Each `Φ` sees the
//! dimension vector left over after the steps to its left.

use std::fmt;
use std::rc::Rc;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::gamma::{coproduct, key_degree, product_basis, straighten, GammaElement, TensorElement};
use crate::partitions::Partition;
use crate::quiver::{DynkinClass, DynkinType, OrbitSpec, Quiver};
use crate::resolution::{codim, minimal_pair, ResolutionPair};

fn product(a: &Partition, b: &Partition) -> Rc<GammaElement> {
    if (a.weight(), a) <= (b.weight(), b) {
        product_basis(a, b)
    } else {
        product_basis(b, a)
    }
}

fn collect(arity: usize, acc: FxHashMap<Vec<Partition>, i64>) -> TensorElement {
    TensorElement::from_terms(arity, acc.into_iter().filter(|&(_, c)| c != 0)).expect("keys built with the right arity")
}

/// `ψ_i`: split slot `i` (1-based) by the coproduct and multiply the second
/// component into the last slot.
pub fn psi(p: &TensorElement, i: usize) -> Result<TensorElement> {
    let arity = p.arity();
    if i == 0 || i >= arity {
        return Err(Error::SlotOutOfRange { slot: i, arity });
    }
    let slot = i - 1;
    let mut acc: FxHashMap<Vec<Partition>, i64> = FxHashMap::default();
    for (key, c) in p.iter() {
        let last = &key[arity - 1];
        for (split, d) in coproduct(&key[slot]).iter() {
            let (sigma, tau) = (&split[0], &split[1]);
            for (nu, k) in product(tau, last).iter() {
                let mut out = key.to_vec();
                out[slot] = sigma.clone();
                out[arity - 1] = nu.clone();
                *acc.entry(out).or_insert(0) += c * d * k;
            }
        }
    }
    Ok(collect(arity, acc))
}

/// `A_{i, r×c}`: drop the last slot `ν`, killing terms with `ℓ(ν) > r`, and
/// replace slot `i` by the straightened sequence `(c + ν₁, …, c + ν_r, μ_i)`.
pub fn a_op(p: &TensorElement, i: usize, r: usize, c: i64) -> Result<TensorElement> {
    let arity = p.arity();
    if i == 0 || i >= arity {
        return Err(Error::SlotOutOfRange { slot: i, arity });
    }
    let slot = i - 1;
    let mut acc: FxHashMap<Vec<Partition>, i64> = FxHashMap::default();
    let mut seen: FxHashMap<Vec<i64>, GammaElement> = FxHashMap::default();
    for (key, coeff) in p.iter() {
        let nu = &key[arity - 1];
        if nu.length() > r {
            continue;
        }
        let seq: Vec<i64> =
            (0..r).map(|j| c + nu.part(j) as i64).chain(key[slot].parts().iter().map(|&x| x as i64)).collect();
        if !seen.contains_key(&seq) {
            let g = straighten(&seq)?;
            seen.insert(seq.clone(), g);
        }
        for (kappa, g) in seen[&seq].iter() {
            let mut out = key[..arity - 1].to_vec();
            out[slot] = kappa.clone();
            *acc.entry(out).or_insert(0) += coeff * g;
        }
    }
    Ok(collect(arity - 1, acc))
}

/// A quiver together with the dimension vector of the current recursion
/// stage.
#[derive(Clone, Debug)]
pub struct EngineState<'q> {
    quiver: &'q Quiver,
    e: Vec<usize>,
}

impl<'q> EngineState<'q> {
    pub fn new(quiver: &'q Quiver, e: Vec<usize>) -> Result<Self> {
        if e.len() != quiver.num_vertices() {
            return Err(Error::LengthMismatch { expected: quiver.num_vertices(), found: e.len() });
        }
        Ok(EngineState { quiver, e })
    }

    pub fn quiver(&self) -> &Quiver {
        self.quiver
    }

    pub fn dim(&self) -> &[usize] {
        &self.e
    }

    /// `rank(M_i) = Σ_{a : h(a) = i} e_{t(a)}` at this stage.
    pub fn rank_m(&self, i: usize) -> usize {
        self.quiver.incoming_rank(i, &self.e)
    }

    /// The state after removing `r` dimensions at vertex `i`.
    pub fn advance(&self, i: usize, r: usize) -> Result<Self> {
        let mut e = self.e.clone();
        match e.get_mut(i.wrapping_sub(1)) {
            Some(x) if *x >= r => *x -= r,
            _ => {
                return Err(Error::InvalidPair(format!("cannot remove {r} dimensions at vertex {i} from {:?}", self.e)))
            }
        }
        Ok(EngineState { quiver: self.quiver, e })
    }
}

/// `Φ_{i,r}(P) = A_{i,r×c} ψ_{h(a₁)} ⋯ ψ_{h(a_l)}(P ⊗ 1)` over the arrows
/// `a_k` leaving `i`, with `c = rank(M_i) − e_i + r`.
pub fn phi(p: &TensorElement, state: &EngineState<'_>, i: usize, r: usize) -> Result<TensorElement> {
    let n = state.quiver.num_vertices();
    if p.arity() != n {
        return Err(Error::ArityMismatch { expected: n, found: p.arity() });
    }
    if i == 0 || i > n {
        return Err(Error::SlotOutOfRange { slot: i, arity: n });
    }
    let ei = state.e[i - 1];
    if r > ei {
        return Err(Error::InvalidPair(format!("rank {r} exceeds e_{i} = {ei}")));
    }
    let c = state.rank_m(i) as i64 - ei as i64 + r as i64;
    let mut t = p.append_unit();
    for h in state.quiver.out_heads(i) {
        t = psi(&t, h)?;
    }
    a_op(&t, i, r, c)
}

/// `P^{Q,e}_{i,r}`: the innermost operator is applied first, each with the
/// dimension vector of its own stage.
pub fn coefficients(q: &Quiver, e: &[usize], pair: &ResolutionPair) -> Result<TensorElement> {
    let stages = pair.stages(e)?;
    let mut p = TensorElement::unit(q.num_vertices());
    for (j, stage) in stages.into_iter().enumerate().rev() {
        let state = EngineState::new(q, stage)?;
        p = phi(&p, &state, pair.vertices()[j], pair.ranks()[j])?;
    }
    Ok(p)
}

/// Why a table might differ from the true quiver coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Caveat {
    /// Exact only if the orbit closure has rational singularities, which is
    /// not known for types D and E. The degree-codim slice is exact anyway.
    ConjecturalUnderRationalSingularities,
}

impl Caveat {
    pub fn tag(self) -> &'static str {
        match self {
            Caveat::ConjecturalUnderRationalSingularities => "conjectural-under-rational-singularities",
        }
    }
}

impl fmt::Display for Caveat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Engine output for one orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTable {
    pub tensor: TensorElement,
    pub codim: usize,
    pub pair: ResolutionPair,
    pub caveat: Option<Caveat>,
}

fn check_orbit(q: &Quiver, e: &[usize], orbit: &OrbitSpec) -> Result<DynkinClass> {
    if e.len() != q.num_vertices() {
        return Err(Error::LengthMismatch { expected: q.num_vertices(), found: e.len() });
    }
    let class = q.dynkin_type();
    if class == DynkinClass::NotDynkin {
        return Err(Error::NotDynkin);
    }
    if orbit.dim() != e {
        return Err(Error::InconsistentOrbit(format!("orbit has dimension {:?}, expected {e:?}", orbit.dim())));
    }
    OrbitSpec::for_quiver(q, e.to_vec(), orbit.mults().iter().map(|(a, &m)| (a.clone(), m)))?;
    Ok(class)
}

/// Runs the engine on an explicit resolution pair of `orbit`.
pub fn table_for_pair(q: &Quiver, e: &[usize], orbit: &OrbitSpec, pair: ResolutionPair) -> Result<CoefficientTable> {
    let class = check_orbit(q, e, orbit)?;
    let tensor = coefficients(q, e, &pair)?;
    let codim = codim(q, e, &pair)?;
    let caveat = match class {
        DynkinClass::Dynkin(types) if types.iter().any(|t| !matches!(t, DynkinType::A(_))) => {
            Some(Caveat::ConjecturalUnderRationalSingularities)
        }
        _ => None,
    };
    Ok(CoefficientTable { tensor, codim, pair, caveat })
}

/// Quiver coefficients of `orbit`, resolved through the shortest directed
/// partition of its support.
pub fn quiver_coefficients(q: &Quiver, e: &[usize], orbit: &OrbitSpec) -> Result<CoefficientTable> {
    check_orbit(q, e, orbit)?;
    let pair = minimal_pair(q, orbit)?;
    table_for_pair(q, e, orbit, pair)
}

/// Terms of degree `codim`: the expansion of the cohomology class in
/// products of Schur polynomials.
pub fn cohomological_part(table: &CoefficientTable) -> TensorElement {
    table.tensor.project_degree(table.codim)
}

/// A coefficient whose sign is not `(−1)^{deg − codim}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignViolation {
    pub key: Vec<Partition>,
    pub coeff: i64,
    pub degree: usize,
}

/// Every term violating the expected alternating sign pattern.
pub fn check_alternating(table: &CoefficientTable) -> Vec<SignViolation> {
    table
        .tensor
        .iter()
        .filter_map(|(key, c)| {
            let degree = key_degree(key);
            let expected_positive = degree >= table.codim && (degree - table.codim).is_multiple_of(2);
            let expected_negative = degree > table.codim && (degree - table.codim) % 2 == 1;
            let ok = (c > 0 && expected_positive) || (c < 0 && expected_negative);
            (!ok).then(|| SignViolation { key: key.to_vec(), coeff: c, degree })
        })
        .collect()
}

/// Coefficients for the same orbit on the quiver with every arrow reversed.
pub fn dual_coefficients(q: &Quiver, e: &[usize], orbit: &OrbitSpec) -> Result<CoefficientTable> {
    quiver_coefficients(&q.reversed(), e, orbit)
}
