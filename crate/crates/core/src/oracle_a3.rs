//! Closed formulas for type A₂ and the two non-equioriented A₃ quivers.
//!
//! These are computed without the operator recursion and serve as ground
//! truth for it. The A₃ coefficients come in two flavours each: one built
//! from coproduct and product coefficients in `Γ`, and one that counts the
//! underlying tableaux directly.
//!
//! Vertex numbering is fixed: the inbound quiver is `1 → 2 ← 3` and the
//! outbound quiver is `1 ← 2 → 3`. Roots are the intervals `α_{ij}`.

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::gamma::{coproduct, coproduct2, lr_coeff, product_basis, TensorElement};
use crate::partitions::{for_each_svt, is_rook_strip, rook_strip_complement, Partition, SkewShape, Word};
use crate::quiver::{OrbitSpec, Root};

/// Root multiplicities of an A₃ orbit.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct A3OrbitMults {
    pub m11: usize,
    pub m12: usize,
    pub m13: usize,
    pub m22: usize,
    pub m23: usize,
    pub m33: usize,
}

impl A3OrbitMults {
    /// The induced dimension vector.
    pub fn dim(&self) -> [usize; 3] {
        [self.m11 + self.m12 + self.m13, self.m12 + self.m13 + self.m22 + self.m23, self.m13 + self.m23 + self.m33]
    }

    fn entries(&self) -> [((usize, usize), usize); 6] {
        [
            ((1, 1), self.m11),
            ((1, 2), self.m12),
            ((1, 3), self.m13),
            ((2, 2), self.m22),
            ((2, 3), self.m23),
            ((3, 3), self.m33),
        ]
    }

    pub fn to_orbit(&self) -> OrbitSpec {
        OrbitSpec::new(self.dim().to_vec(), self.entries().into_iter().map(|((i, j), m)| (Root::interval(3, i, j), m)))
            .expect("multiplicities induce their own dimension vector")
    }

    /// Reads the multiplicities off a three-vertex orbit.
    pub fn from_orbit(orbit: &OrbitSpec) -> Result<Self> {
        if orbit.dim().len() != 3 {
            return Err(Error::LengthMismatch { expected: 3, found: orbit.dim().len() });
        }
        let mut m = A3OrbitMults::default();
        for (root, &k) in orbit.mults() {
            let slot = match root.as_slice() {
                [1, 0, 0] => &mut m.m11,
                [1, 1, 0] => &mut m.m12,
                [1, 1, 1] => &mut m.m13,
                [0, 1, 0] => &mut m.m22,
                [0, 1, 1] => &mut m.m23,
                [0, 0, 1] => &mut m.m33,
                other => return Err(Error::NotARoot(other.to_vec())),
            };
            *slot = k;
        }
        Ok(m)
    }

    /// Checks the induced dimension vector against `e`.
    pub fn check(&self, e: &[usize]) -> Result<()> {
        if e != self.dim() {
            return Err(Error::InconsistentOrbit(format!("multiplicities give {:?}, expected {e:?}", self.dim())));
        }
        Ok(())
    }
}

fn sign(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Thom–Porteous: the rank-`r` locus in `Hom(E₁, E₂)` has the single
/// coefficient 1 on `(∅, (e₁ − r)^{e₂ − r})`.
pub fn porteous(e1: usize, e2: usize, r: usize) -> Result<TensorElement> {
    if r > e1.min(e2) {
        return Err(Error::InconsistentOrbit(format!("rank {r} exceeds min({e1}, {e2})")));
    }
    TensorElement::from_terms(2, [(vec![Partition::empty(), Partition::rectangle(e2 - r, e1 - r)], 1)])
}

fn inbound_rects(m: &A3OrbitMults) -> (Partition, Partition) {
    (Partition::rectangle(m.m12, m.m33), Partition::rectangle(m.m23, m.m11))
}

/// `c_{λμν} = Σ_{σ,τ} d^{(m₃₃)^{m₁₂}}_{λσ} d^{(m₁₁)^{m₂₃}}_{τν} c^μ_{στ}`
/// from the coproducts and products in `Γ`.
pub fn inbound_c(lambda: &Partition, mu: &Partition, nu: &Partition, m: &A3OrbitMults) -> i64 {
    let (r1, r2) = inbound_rects(m);
    let left = coproduct(&r1);
    let right = coproduct(&r2);
    let mut total = 0;
    for (k1, d1) in left.iter().filter(|(k, _)| &k[0] == lambda) {
        for (k2, d2) in right.iter().filter(|(k, _)| &k[1] == nu) {
            total += d1 * d2 * lr_coeff(&k1[1], &k2[0], mu);
        }
    }
    total
}

/// Counts the set-valued tableaux `T` of shape `shape` whose word followed by
/// `tail` is a reverse lattice word with content `mu`.
fn count_lattice_tableaux(shape: &SkewShape, tail: &Word, mu: &Partition) -> i64 {
    let boxes = shape.size();
    let needed = mu.weight() as i64 - tail.entries().len() as i64;
    if needed < boxes as i64 {
        return 0;
    }
    let mut count = 0;
    for_each_svt(shape, mu.length(), needed as usize - boxes, |t| {
        let w = t.word().concat(tail);
        if w.entries().len() as i64 == mu.weight() as i64 && w.is_reverse_lattice() && w.content() == mu.parts() {
            count += 1;
        }
    });
    count
}

/// [`inbound_c`] by counting pairs `(σ, T)`: `σ` fills the first rectangle
/// together with the rotated `λ` up to a rook-strip overlap, the shape of `T`
/// does the same with `ν` in the second rectangle, and `w(T) u(σ)` is a
/// reverse lattice word of content `μ`.
pub fn inbound_c_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition, m: &A3OrbitMults) -> i64 {
    let (r1, r2) = inbound_rects(m);
    let mut count = 0;
    for sigma in Partition::all_in_rectangle(m.m12, m.m33) {
        if !rook_strip_complement(&r1, &sigma, lambda) {
            continue;
        }
        let tail = Word::u_word(&sigma);
        for kappa in Partition::all_in_rectangle(m.m23, m.m11) {
            if rook_strip_complement(&r2, &kappa, nu) {
                count += count_lattice_tableaux(&SkewShape::straight(kappa), &tail, mu);
            }
        }
    }
    let exponent = (lambda.weight() + mu.weight() + nu.weight()) as i64 - (m.m33 * m.m12 + m.m11 * m.m23) as i64;
    sign(exponent) * count
}

/// Every nonzero `c_{λμν}` of an inbound orbit, as a 3-tensor keyed by
/// `(λ, μ, ν)`.
pub fn inbound_c_table(m: &A3OrbitMults) -> TensorElement {
    let (r1, r2) = inbound_rects(m);
    let mut acc: FxHashMap<Vec<Partition>, i64> = FxHashMap::default();
    for (k1, d1) in coproduct(&r1).iter() {
        for (k2, d2) in coproduct(&r2).iter() {
            let (sigma, tau) = (&k1[1], &k2[0]);
            let prod = if (sigma.weight(), sigma) <= (tau.weight(), tau) {
                product_basis(sigma, tau)
            } else {
                product_basis(tau, sigma)
            };
            for (mu, c) in prod.iter() {
                *acc.entry(vec![k1[0].clone(), mu.clone(), k2[1].clone()]).or_insert(0) += d1 * d2 * c;
            }
        }
    }
    TensorElement::from_terms(3, acc.into_iter().filter(|&(_, c)| c != 0)).expect("keys of length 3")
}

/// Quiver coefficients of an inbound orbit:
/// `Σ c_{λμν} G_λ ⊗ G_{(m₁₁+m₁₃+m₃₃)^{m₂₂}, μ} ⊗ G_ν`.
pub fn inbound_table(m: &A3OrbitMults) -> Result<TensorElement> {
    let head = Partition::rectangle(m.m22, m.m11 + m.m13 + m.m33);
    let mut out = TensorElement::zero(3);
    for (key, c) in inbound_c_table(m).iter() {
        let middle = head
            .concat(&key[1])
            .ok_or_else(|| Error::Internal(format!("{head} followed by {} is not a partition", key[1])))?;
        out.add_term(vec![key[0].clone(), middle, key[2].clone()], c);
    }
    Ok(out)
}

/// `d^R_{λμν}`, the coefficient of `G_λ ⊗ G_μ ⊗ G_ν` in `Δ²(G_R)`.
pub fn outbound_d(rect: &Partition, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<i64> {
    if rect.rectangle_dims().is_none() {
        return Err(Error::NotRectangular(rect.to_string()));
    }
    Ok(coproduct2(rect).coeff(&[lambda.clone(), mu.clone(), nu.clone()]))
}

/// [`outbound_d`] by counting triples `(σ, τ, T)` with `σ ⊆ τ ⊆ R`,
/// `σ ⊆ λ ⊆ τ` where `λ/σ` is a rook-strip, `τ` and the rotated `ν` filling
/// `R` up to a rook-strip overlap, and `T` of shape `τ/σ` with reverse
/// lattice word of content `μ`.
pub fn outbound_d_tableaux(rect: &Partition, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<i64> {
    let Some((rows, cols)) = rect.rectangle_dims() else {
        return Err(Error::NotRectangular(rect.to_string()));
    };
    if !rect.contains(lambda) || !rect.contains(mu) || !rect.contains(nu) {
        return Ok(0);
    }
    let empty = Word::new(vec![]).expect("empty word");
    let mut count = 0;
    for tau in Partition::all_in_rectangle(rows, cols) {
        if !rook_strip_complement(rect, &tau, nu) {
            continue;
        }
        for sigma in Partition::all_in_rectangle(rows, cols) {
            if !tau.contains(&sigma) || !tau.contains(lambda) || !is_rook_strip(lambda, &sigma) {
                continue;
            }
            let shape = SkewShape::new(tau.clone(), sigma).expect("σ ⊆ τ");
            count += count_lattice_tableaux(&shape, &empty, mu);
        }
    }
    let exponent = (lambda.weight() + mu.weight() + nu.weight()) as i64 - rect.weight() as i64;
    Ok(sign(exponent) * count)
}

/// Quiver coefficients of an outbound orbit:
/// `Σ d^R_{λμν} G_{(m₂₂+m₂₃)^{m₁₁}, λ} ⊗ G_μ ⊗ G_{(m₂₂+m₁₂)^{m₃₃}, ν}` with
/// `R = (m₂₂)^{m₁₃}`.
pub fn outbound_table(m: &A3OrbitMults) -> Result<TensorElement> {
    let rect = Partition::rectangle(m.m13, m.m22);
    let head1 = Partition::rectangle(m.m11, m.m22 + m.m23);
    let head3 = Partition::rectangle(m.m33, m.m22 + m.m12);
    let mut out = TensorElement::zero(3);
    for (key, d) in coproduct2(&rect).iter() {
        let first = head1
            .concat(&key[0])
            .ok_or_else(|| Error::Internal(format!("{head1} followed by {} is not a partition", key[0])))?;
        let third = head3
            .concat(&key[2])
            .ok_or_else(|| Error::Internal(format!("{head3} followed by {} is not a partition", key[2])))?;
        out.add_term(vec![first, key[1].clone(), third], d);
    }
    Ok(out)
}
