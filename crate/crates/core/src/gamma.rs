//! The bialgebra `Γ = ⊕ ℤ G_λ` of stable Grothendieck polynomials.
//!
//! Products follow the set-valued Littlewood–Richardson rule: the
//! coefficient of `G_ν` in `G_λ · G_μ` is `(-1)^{|ν|-|λ|-|μ|}` times the
//! number of set-valued tableaux `T` of shape `λ` such that `w(T) u(μ)` is a
//! reverse lattice word with content `ν`. Coproduct coefficients are read off
//! a product with a rectangle, and integer-sequence indices are straightened
//! back into the partition basis.
//!
//! All structure constants are memoized in per-thread caches, so the
//! functions here are pure from the caller's point of view.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;
use std::sync::atomic::{AtomicUsize, Ordering};

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::partitions::{Partition, SkewShape};

fn sign(exp: i64) -> i64 {
    if exp.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// A finite integer combination of basis elements `G_λ`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct GammaElement {
    terms: BTreeMap<Partition, i64>,
}

impl GammaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `G_∅ = 1`
    pub fn one() -> Self {
        Self::basis(Partition::empty())
    }

    /// The basis element `G_λ`.
    pub fn basis(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, 1);
        GammaElement { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, i64)>>(terms: I) -> Self {
        let mut g = Self::zero();
        for (p, c) in terms {
            g.add_term(p, c);
        }
        g
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    /// `self += k · other`
    pub fn add_scaled(&mut self, other: &GammaElement, k: i64) {
        for (p, &c) in &other.terms {
            self.add_term(p.clone(), c * k);
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// The terms of total degree `d`.
    pub fn homogeneous_part(&self, d: usize) -> GammaElement {
        GammaElement {
            terms: self.terms.iter().filter(|(p, _)| p.weight() == d).map(|(p, &c)| (p.clone(), c)).collect(),
        }
    }
}

impl fmt::Debug for GammaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GammaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, &c)) in self.terms.iter().enumerate() {
            let (s, a) = if c < 0 { ("-", -c) } else { ("+", c) };
            if i > 0 {
                write!(f, " {s} ")?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            if a != 1 {
                write!(f, "{a}*")?;
            }
            write!(f, "G{p}")?;
        }
        Ok(())
    }
}

impl Add for &GammaElement {
    type Output = GammaElement;

    fn add(self, rhs: &GammaElement) -> GammaElement {
        let mut out = self.clone();
        out.add_scaled(rhs, 1);
        out
    }
}

impl Sub for &GammaElement {
    type Output = GammaElement;

    fn sub(self, rhs: &GammaElement) -> GammaElement {
        let mut out = self.clone();
        out.add_scaled(rhs, -1);
        out
    }
}

impl Neg for &GammaElement {
    type Output = GammaElement;

    fn neg(self) -> GammaElement {
        GammaElement { terms: self.terms.iter().map(|(p, &c)| (p.clone(), -c)).collect() }
    }
}

impl Mul for &GammaElement {
    type Output = GammaElement;

    fn mul(self, rhs: &GammaElement) -> GammaElement {
        mul(self, rhs)
    }
}

/// A finite integer combination of `G_{μ_1} ⊗ … ⊗ G_{μ_n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorElement {
    arity: usize,
    terms: BTreeMap<Vec<Partition>, i64>,
}

impl TensorElement {
    pub fn zero(arity: usize) -> Self {
        TensorElement { arity, terms: BTreeMap::new() }
    }

    /// `1 ⊗ … ⊗ 1`
    pub fn unit(arity: usize) -> Self {
        let mut t = Self::zero(arity);
        t.terms.insert(vec![Partition::empty(); arity], 1);
        t
    }

    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<Partition>, i64)>,
    {
        let mut t = Self::zero(arity);
        for (key, c) in terms {
            if key.len() != arity {
                return Err(Error::ArityMismatch { expected: arity, found: key.len() });
            }
            t.add_term(key, c);
        }
        Ok(t)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Adds `coeff · G_{key}`. The key must have the tensor's arity.
    pub fn add_term(&mut self, key: Vec<Partition>, coeff: i64) {
        debug_assert_eq!(key.len(), self.arity);
        if coeff == 0 {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElement, k: i64) {
        debug_assert_eq!(self.arity, other.arity);
        for (key, &c) in &other.terms {
            self.add_term(key.clone(), c * k);
        }
    }

    pub fn coeff(&self, key: &[Partition]) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[Partition], i64)> {
        self.terms.iter().map(|(k, &c)| (k.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Terms whose total degree `Σ|μ_i|` equals `d`.
    pub fn project_degree(&self, d: usize) -> TensorElement {
        TensorElement {
            arity: self.arity,
            terms: self.terms.iter().filter(|(k, _)| key_degree(k) == d).map(|(k, &c)| (k.clone(), c)).collect(),
        }
    }

    /// Smallest total degree of a term, `None` for the zero tensor.
    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(|k| key_degree(k)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|k| key_degree(k)).max()
    }

    /// `P ⊗ 1`
    pub fn append_unit(&self) -> TensorElement {
        TensorElement {
            arity: self.arity + 1,
            terms: self
                .terms
                .iter()
                .map(|(k, &c)| {
                    let mut k = k.clone();
                    k.push(Partition::empty());
                    (k, c)
                })
                .collect(),
        }
    }

    /// Multiplies slot `slot` (0-based) of every term by `g`.
    pub fn mul_at(&self, slot: usize, g: &GammaElement) -> Result<TensorElement> {
        if slot >= self.arity {
            return Err(Error::SlotOutOfRange { slot, arity: self.arity });
        }
        let mut out = TensorElement::zero(self.arity);
        for (key, &c) in &self.terms {
            for (p, gc) in g.iter() {
                let prod = product_basis(&key[slot], p);
                for (nu, pc) in prod.iter() {
                    let mut k = key.clone();
                    k[slot] = nu.clone();
                    out.add_term(k, c * gc * pc);
                }
            }
        }
        Ok(out)
    }

    /// Componentwise product in `Γ^{⊗n}`.
    pub fn mul(&self, other: &TensorElement) -> Result<TensorElement> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: other.arity });
        }
        let mut out = TensorElement::zero(self.arity);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let mut acc: Vec<(Vec<Partition>, i64)> = vec![(Vec::new(), ca * cb)];
                for slot in 0..self.arity {
                    let prod = product_basis(&a[slot], &b[slot]);
                    let mut next = Vec::with_capacity(acc.len() * prod.len());
                    for (k, c) in &acc {
                        for (nu, pc) in prod.iter() {
                            let mut k = k.clone();
                            k.push(nu.clone());
                            next.push((k, c * pc));
                        }
                    }
                    acc = next;
                }
                for (k, c) in acc {
                    out.add_term(k, c);
                }
            }
        }
        Ok(out)
    }

    /// Applies `f` to every partition of every key, e.g. conjugation.
    pub fn map_keys<F: Fn(usize, &Partition) -> Partition>(&self, f: F) -> TensorElement {
        let mut out = TensorElement::zero(self.arity);
        for (k, &c) in &self.terms {
            out.add_term(k.iter().enumerate().map(|(i, p)| f(i, p)).collect(), c);
        }
        out
    }
}

/// `Σ |μ_i|` of a tensor key.
pub fn key_degree(key: &[Partition]) -> usize {
    key.iter().map(Partition::weight).sum()
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (key, &c)) in self.terms.iter().enumerate() {
            let (s, a) = if c < 0 { ("-", -c) } else { ("+", c) };
            if i > 0 {
                write!(f, " {s} ")?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            if a != 1 {
                write!(f, "{a}*")?;
            }
            let parts: Vec<String> = key.iter().map(|p| format!("G{p}")).collect();
            write!(f, "{}", parts.join("⊗"))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Lattice fillings

/// Counts set-valued tableaux `T` of `shape` such that `w(T) u(start)` is a
/// reverse lattice word, grouped by the content of that word. With `bound`,
/// only contents contained in `bound` are explored.
///
/// The word is scanned from its end: `u(start)` contributes the initial
/// content, then the boxes of `T` are visited top row first, right to left,
/// each box's entries in decreasing order. The lattice condition says every
/// scanned `i >= 2` keeps the running content a partition.
fn lattice_fillings(shape: &SkewShape, start: &Partition, bound: Option<&Partition>) -> FxHashMap<Partition, u64> {
    // boxes in scan order
    let mut boxes = Vec::with_capacity(shape.size());
    for r in 0..shape.outer().length() {
        for c in (shape.inner().part(r)..shape.outer().part(r)).rev() {
            boxes.push((r, c));
        }
    }
    let pos = |r: usize, c: usize| boxes.iter().position(|&b| b == (r, c));
    let right: Vec<Option<usize>> = boxes.iter().map(|&(r, c)| pos(r, c + 1)).collect();
    let above: Vec<Option<usize>> = boxes.iter().map(|&(r, c)| if r == 0 { None } else { pos(r - 1, c) }).collect();

    struct Scan<'a> {
        right: Vec<Option<usize>>,
        above: Vec<Option<usize>>,
        bound: Option<&'a Partition>,
        counts: Vec<usize>,
        mins: Vec<usize>,
        maxs: Vec<usize>,
        out: FxHashMap<Partition, u64>,
    }

    impl Scan<'_> {
        fn allowed(&self, x: usize) -> bool {
            let cur = self.counts.get(x - 1).copied().unwrap_or(0);
            if x >= 2 && self.counts.get(x - 2).copied().unwrap_or(0) <= cur {
                return false;
            }
            match self.bound {
                Some(b) => cur < b.part(x - 1),
                None => true,
            }
        }

        fn push(&mut self, x: usize) {
            if self.counts.len() < x {
                self.counts.resize(x, 0);
            }
            self.counts[x - 1] += 1;
        }

        fn pop(&mut self, x: usize) {
            self.counts[x - 1] -= 1;
            while self.counts.last() == Some(&0) {
                self.counts.pop();
            }
        }

        fn fill(&mut self, k: usize) {
            if k == self.right.len() {
                let content = Partition::from_sorted(self.counts.clone());
                *self.out.entry(content).or_insert(0) += 1;
                return;
            }
            let lo = self.above[k].map_or(1, |a| self.maxs[a] + 1);
            // an entry x needs x - 1 already present, so x <= len + 1
            let mut hi = self.counts.len() + 1;
            if let Some(r) = self.right[k] {
                hi = hi.min(self.mins[r]);
            }
            for m in lo..=hi {
                if self.allowed(m) {
                    self.push(m);
                    self.maxs[k] = m;
                    self.extend(k, m, lo);
                    self.pop(m);
                }
            }
        }

        // the box currently has smallest entry `last`; either close it or
        // add a smaller entry
        fn extend(&mut self, k: usize, last: usize, lo: usize) {
            self.mins[k] = last;
            self.fill(k + 1);
            for x in (lo..last).rev() {
                if self.allowed(x) {
                    self.push(x);
                    self.extend(k, x, lo);
                    self.pop(x);
                }
            }
        }
    }

    let n = boxes.len();
    let mut scan = Scan {
        right,
        above,
        bound,
        counts: start.parts().to_vec(),
        mins: vec![0; n],
        maxs: vec![0; n],
        out: FxHashMap::default(),
    };
    if let Some(b) = bound {
        if !b.contains(start) {
            return scan.out;
        }
    }
    scan.fill(0);
    scan.out
}

thread_local! {
    static PRODUCTS: RefCell<FxHashMap<(Partition, Partition), Rc<GammaElement>>> =
        RefCell::new(FxHashMap::default());
    static LR: RefCell<FxHashMap<(Partition, Partition, Partition), i64>> =
        RefCell::new(FxHashMap::default());
    static COPRODUCTS: RefCell<FxHashMap<Partition, Rc<TensorElement>>> =
        RefCell::new(FxHashMap::default());
    static STRAIGHTEN: RefCell<FxHashMap<Vec<i64>, Rc<GammaElement>>> =
        RefCell::new(FxHashMap::default());
}

/// `G_λ · G_μ`, enumerating set-valued tableaux of shape `λ` against `u(μ)`.
pub fn product_basis(lambda: &Partition, mu: &Partition) -> Rc<GammaElement> {
    let key = (lambda.clone(), mu.clone());
    if let Some(hit) = PRODUCTS.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let base = (lambda.weight() + mu.weight()) as i64;
    let counts = lattice_fillings(&SkewShape::straight(lambda.clone()), mu, None);
    let g = Rc::new(GammaElement::from_terms(counts.into_iter().map(|(nu, n)| {
        let s = sign(nu.weight() as i64 - base);
        (nu, s * n as i64)
    })));
    PRODUCTS.with(|c| c.borrow_mut().insert(key, g.clone()));
    g
}

/// The coefficient `c^ν_{λμ}` of `G_ν` in `G_λ · G_μ`.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    if !nu.contains(lambda) || !nu.contains(mu) || nu.weight() < lambda.weight() + mu.weight() {
        return 0;
    }
    if let Some(g) = PRODUCTS.with(|c| c.borrow().get(&(lambda.clone(), mu.clone())).cloned()) {
        return g.coeff(nu);
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(&hit) = LR.with(|c| c.borrow().get(&key).copied()).as_ref() {
        return hit;
    }
    let counts = lattice_fillings(&SkewShape::straight(lambda.clone()), mu, Some(nu));
    let n = counts.get(nu).copied().unwrap_or(0) as i64;
    let v = sign(nu.weight() as i64 - (lambda.weight() + mu.weight()) as i64) * n;
    LR.with(|c| c.borrow_mut().insert(key, v));
    v
}

/// Product in `Γ`. Each basis product enumerates tableaux on the smaller
/// factor.
pub fn mul(a: &GammaElement, b: &GammaElement) -> GammaElement {
    let mut out = GammaElement::zero();
    for (la, ca) in a.iter() {
        for (mb, cb) in b.iter() {
            let prod =
                if (la.weight(), la) <= (mb.weight(), mb) { product_basis(la, mb) } else { product_basis(mb, la) };
            out.add_scaled(&prod, ca * cb);
        }
    }
    out
}

/// `ρ = (R + μ, λ)`: `λ` attached below and `μ` to the right of the
/// rectangle with `rows` rows and `cols` columns.
fn attach(rows: usize, cols: usize, lambda: &Partition, mu: &Partition) -> Partition {
    let mut parts: Vec<usize> = (0..rows).map(|i| cols + mu.part(i)).collect();
    parts.extend_from_slice(lambda.parts());
    Partition::from_sorted(parts)
}

/// `d^ν_{λμ}` computed with an explicit enclosing rectangle `(cols)^rows`.
pub fn coproduct_coeff_in(rows: usize, cols: usize, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<i64> {
    let rect = Partition::rectangle(rows, cols);
    if !rect.contains(lambda) || !rect.contains(mu) {
        return Err(Error::NotContained { outer: rect.to_string(), inner: format!("{lambda} or {mu}") });
    }
    let rho = attach(rows, cols, lambda, mu);
    Ok(lr_coeff(&rect, nu, &rho))
}

/// The coproduct coefficient `d^ν_{λμ}`, the coefficient of `G_λ ⊗ G_μ` in
/// `Δ(G_ν)`. Uses the smallest rectangle containing `λ` and `μ`.
pub fn coproduct_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    if !nu.contains(lambda) || !nu.contains(mu) || nu.weight() > lambda.weight() + mu.weight() {
        return 0;
    }
    let rows = lambda.length().max(mu.length());
    let cols = lambda.part(0).max(mu.part(0));
    coproduct_coeff_in(rows, cols, lambda, mu, nu).expect("rectangle encloses both")
}

/// `Δ(G_ν)` as a 2-tensor.
pub fn coproduct(nu: &Partition) -> Rc<TensorElement> {
    if let Some(hit) = COPRODUCTS.with(|c| c.borrow().get(nu).cloned()) {
        return hit;
    }
    // read every d^ν_{λμ} off a single product G_R · G_ν with R ⊇ ν
    let (rows, cols) = (nu.length(), nu.part(0));
    let rect = Partition::rectangle(rows, cols);
    let prod = product_basis(&rect, nu);
    let mut out = TensorElement::zero(2);
    for (rho, c) in prod.iter() {
        if rho.part(rows) > cols || (rows > 0 && rho.part(rows - 1) < cols) {
            continue;
        }
        let mu = Partition::from_sorted((0..rows).map(|i| rho.part(i) - cols).collect());
        let lambda = Partition::from_sorted(rho.parts().iter().skip(rows).copied().collect());
        out.add_term(vec![lambda, mu], c);
    }
    let out = Rc::new(out);
    COPRODUCTS.with(|c| c.borrow_mut().insert(nu.clone(), out.clone()));
    out
}

/// `Δ²(G_ν) = (Δ ⊗ id) Δ(G_ν)` as a 3-tensor.
pub fn coproduct2(nu: &Partition) -> TensorElement {
    let mut out = TensorElement::zero(3);
    for (key, c) in coproduct(nu).iter() {
        for (inner, d) in coproduct(&key[0]).iter() {
            out.add_term(vec![inner[0].clone(), inner[1].clone(), key[1].clone()], c * d);
        }
    }
    out
}

/// `Δ` applied to an arbitrary element.
pub fn coproduct_of(g: &GammaElement) -> TensorElement {
    let mut out = TensorElement::zero(2);
    for (nu, c) in g.iter() {
        out.add_scaled(&coproduct(nu), c);
    }
    out
}

/// Expansion of the skew polynomial `G_{τ/σ}` in the basis:
/// `Σ_μ (-1)^{|μ|-|τ/σ|} #{T of shape τ/σ : w(T) reverse lattice with content μ} G_μ`.
pub fn skew_expand(shape: &SkewShape) -> GammaElement {
    let base = shape.size() as i64;
    GammaElement::from_terms(lattice_fillings(shape, &Partition::empty(), None).into_iter().map(|(mu, n)| {
        let s = sign(mu.weight() as i64 - base);
        (mu, s * n as i64)
    }))
}

// ---------------------------------------------------------------------------
// Straightening

/// Which adjacent ascent `p < q` the straightening recursion rewrites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AscentStrategy {
    Leftmost,
    Rightmost,
}

static MAX_DEPTH_OVERRIDE: AtomicUsize = AtomicUsize::new(0);

/// Overrides the straightening recursion guard for every thread; `None`
/// restores the default `10 · len · (max - min + 2)`.
pub fn set_max_depth(limit: Option<usize>) {
    MAX_DEPTH_OVERRIDE.store(limit.unwrap_or(0), Ordering::Relaxed);
}

/// The recursion guard that applies to `seq`.
pub fn depth_limit(seq: &[i64]) -> usize {
    match MAX_DEPTH_OVERRIDE.load(Ordering::Relaxed) {
        0 => {
            let max = seq.iter().copied().max().unwrap_or(0);
            let min = seq.iter().copied().min().unwrap_or(0);
            10 * seq.len().max(1) * (max - min + 2) as usize
        }
        n => n,
    }
}

/// Expands `G_I` for an arbitrary integer sequence `I` in the partition
/// basis, rewriting the leftmost ascent first.
pub fn straighten(seq: &[i64]) -> Result<GammaElement> {
    let limit = depth_limit(seq);
    STRAIGHTEN.with(|c| {
        let mut memo = c.borrow_mut();
        straighten_local(seq.to_vec(), AscentStrategy::Leftmost, 0, limit, &mut memo).map(|g| (*g).clone())
    })
}

/// [`straighten`] with an explicit ascent strategy and no shared cache.
pub fn straighten_with(seq: &[i64], strategy: AscentStrategy) -> Result<GammaElement> {
    straighten_limited(seq, strategy, depth_limit(seq))
}

/// [`straighten_with`] under an explicit recursion limit.
pub fn straighten_limited(seq: &[i64], strategy: AscentStrategy, limit: usize) -> Result<GammaElement> {
    let mut memo = FxHashMap::default();
    straighten_local(seq.to_vec(), strategy, 0, limit, &mut memo).map(|g| (*g).clone())
}

/// Sequences to add and to subtract after one rewriting step.
type Rewrite = (Vec<Vec<i64>>, Vec<Vec<i64>>);

fn straighten_step(mut seq: Vec<i64>, strategy: AscentStrategy) -> std::result::Result<Partition, Rewrite> {
    // G_{I,p} = G_I for p < 0
    while seq.last().is_some_and(|&x| x < 0) {
        seq.pop();
    }
    if let Some(p) = Partition::from_ints(&seq) {
        return Ok(p);
    }
    let ascents = (0..seq.len() - 1).filter(|&j| seq[j] < seq[j + 1]);
    let j = match strategy {
        AscentStrategy::Leftmost => ascents.min(),
        AscentStrategy::Rightmost => ascents.max(),
    }
    .expect("a non-partition without a negative tail has an ascent");
    let (p, q) = (seq[j], seq[j + 1]);
    let with = |a: i64, b: i64| {
        let mut s = seq.clone();
        s[j] = a;
        s[j + 1] = b;
        s
    };
    let plus = (p + 1..=q).map(|k| with(q, k)).collect();
    let minus = (p + 1..q).map(|k| with(q - 1, k)).collect();
    Err((plus, minus))
}

fn straighten_local(
    seq: Vec<i64>,
    strategy: AscentStrategy,
    depth: usize,
    limit: usize,
    memo: &mut FxHashMap<Vec<i64>, Rc<GammaElement>>,
) -> Result<Rc<GammaElement>> {
    if let Some(hit) = memo.get(&seq) {
        return Ok(hit.clone());
    }
    if depth > limit {
        return Err(Error::DepthExceeded { seq, limit });
    }
    let g = match straighten_step(seq.clone(), strategy) {
        Ok(p) => GammaElement::basis(p),
        Err((plus, minus)) => {
            let mut g = GammaElement::zero();
            for s in plus {
                let h = straighten_local(s, strategy, depth + 1, limit, memo)?;
                g.add_scaled(&h, 1);
            }
            for s in minus {
                let h = straighten_local(s, strategy, depth + 1, limit, memo)?;
                g.add_scaled(&h, -1);
            }
            g
        }
    };
    let g = Rc::new(g);
    memo.insert(seq, g.clone());
    Ok(g)
}
