//! Quivers, dimension vectors, the Euler form and Dynkin root systems.
//!
//! Vertices are numbered `1..=n` in the public interface; internally every
//! vector is indexed from zero. For a Dynkin quiver, orbits in the space of
//! representations are indexed by root multiplicities (Gabriel), and orbit
//! closure membership for type A is decided by comparing hom dimensions
//! against the indecomposables (Bongartz).

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::integer_rank;

/// A finite quiver without oriented cycles. Parallel arrows are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    n: usize,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    /// Builds a quiver on vertices `1..=n` from `(tail, head)` pairs.
    pub fn new(n: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        for &(t, h) in &arrows {
            if t == 0 || h == 0 || t > n || h > n {
                return Err(Error::InvalidQuiver(format!("arrow {t}->{h} out of range 1..={n}")));
            }
            if t == h {
                return Err(Error::InvalidQuiver(format!("loop at vertex {t}")));
            }
        }
        let q = Quiver { n, arrows };
        if q.topological_order().is_none() {
            return Err(Error::InvalidQuiver("quiver has an oriented cycle".into()));
        }
        Ok(q)
    }

    /// The equioriented or mixed type-A quiver on `1..=n` given the direction
    /// of each edge `i - i+1`: `true` means `i → i+1`.
    pub fn type_a(directions: &[bool]) -> Self {
        let arrows =
            directions.iter().enumerate().map(|(i, &fwd)| if fwd { (i + 1, i + 2) } else { (i + 2, i + 1) }).collect();
        Quiver::new(directions.len() + 1, arrows).expect("paths are acyclic")
    }

    /// `1 → 2 ← 3`
    pub fn inbound_a3() -> Self {
        Quiver::type_a(&[true, false])
    }

    /// `1 ← 2 → 3`
    pub fn outbound_a3() -> Self {
        Quiver::type_a(&[false, true])
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    /// Arrows as `(tail, head)`, 1-based.
    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// The quiver with every arrow reversed.
    pub fn reversed(&self) -> Quiver {
        Quiver { n: self.n, arrows: self.arrows.iter().map(|&(t, h)| (h, t)).collect() }
    }

    /// Heads of the arrows leaving `v`, in ascending order, with multiplicity.
    pub fn out_heads(&self, v: usize) -> Vec<usize> {
        let mut heads: Vec<usize> = self.arrows.iter().filter(|a| a.0 == v).map(|a| a.1).collect();
        heads.sort_unstable();
        heads
    }

    /// `rank(M_v) = Σ_{a : h(a) = v} e_{t(a)}`.
    pub fn incoming_rank(&self, v: usize, e: &[usize]) -> usize {
        self.arrows.iter().filter(|a| a.1 == v).map(|a| e[a.0 - 1]).sum()
    }

    /// Vertices so that every arrow's tail precedes its head, or `None` if
    /// there is an oriented cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.n + 1];
        for &(_, h) in &self.arrows {
            indeg[h] += 1;
        }
        let mut queue: VecDeque<usize> = (1..=self.n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &(t, h) in &self.arrows {
                if t == v {
                    indeg[h] -= 1;
                    if indeg[h] == 0 {
                        queue.push_back(h);
                    }
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }

    /// Length of the longest directed path ending at each vertex (index 0 is
    /// vertex 1).
    pub fn depths(&self) -> Vec<usize> {
        let order = self.topological_order().expect("validated acyclic");
        let mut depth = vec![0usize; self.n];
        for v in order {
            for &(t, h) in &self.arrows {
                if t == v {
                    depth[h - 1] = depth[h - 1].max(depth[v - 1] + 1);
                }
            }
        }
        depth
    }

    /// Connected components of the underlying graph, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n + 1];
        let mut out = Vec::new();
        for start in 1..=self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp[start] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for &(t, h) in &self.arrows {
                    let w = if t == v {
                        h
                    } else if h == v {
                        t
                    } else {
                        continue;
                    };
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    fn check_len(&self, v: &[usize]) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, found: v.len() });
        }
        Ok(())
    }

    /// `⟨α, β⟩ = Σ α_i β_i − Σ_a α_{t(a)} β_{h(a)}`.
    pub fn euler_form(&self, alpha: &[usize], beta: &[usize]) -> Result<i64> {
        self.check_len(alpha)?;
        self.check_len(beta)?;
        Ok(self.euler_unchecked(alpha, beta))
    }

    pub(crate) fn euler_unchecked(&self, alpha: &[usize], beta: &[usize]) -> i64 {
        let diag: i64 = alpha.iter().zip(beta).map(|(&a, &b)| (a * b) as i64).sum();
        let off: i64 = self.arrows.iter().map(|&(t, h)| (alpha[t - 1] * beta[h - 1]) as i64).sum();
        diag - off
    }

    /// The Tits form `q(d) = ⟨d, d⟩`.
    pub fn tits_form(&self, d: &[usize]) -> i64 {
        self.euler_unchecked(d, d)
    }

    /// `dim V = Σ_a e_{t(a)} e_{h(a)}`.
    pub fn rep_space_dim(&self, e: &[usize]) -> usize {
        self.arrows.iter().map(|&(t, h)| e[t - 1] * e[h - 1]).sum()
    }

    /// Classification of the underlying graph.
    pub fn dynkin_type(&self) -> DynkinClass {
        let mut types = Vec::new();
        for comp in self.components() {
            match classify_component(self, &comp) {
                Some(t) => types.push(t),
                None => return DynkinClass::NotDynkin,
            }
        }
        DynkinClass::Dynkin(types)
    }

    pub fn is_dynkin(&self) -> bool {
        matches!(self.dynkin_type(), DynkinClass::Dynkin(_))
    }

    /// True iff every component is of type A.
    pub fn is_type_a(&self) -> bool {
        match self.dynkin_type() {
            DynkinClass::Dynkin(ts) => ts.iter().all(|t| matches!(t, DynkinType::A(_))),
            DynkinClass::NotDynkin => false,
        }
    }

    /// All positive roots, ordered by height and then lexicographically.
    pub fn positive_roots(&self) -> Result<Vec<Root>> {
        let DynkinClass::Dynkin(types) = self.dynkin_type() else {
            return Err(Error::NotDynkin);
        };
        let mut roots = Vec::new();
        for (comp, ty) in self.components().into_iter().zip(types) {
            let bound = ty.max_root_coefficient();
            let mut d = vec![0usize; self.n];
            enumerate_box(self, &comp, 0, bound, &mut d, &mut roots);
        }
        roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.0.cmp(&b.0)));
        Ok(roots)
    }

    /// Every orbit for the dimension vector `e`: all multiplicity vectors
    /// `(m_α)` with `Σ m_α α = e`.
    pub fn orbits(&self, e: &[usize]) -> Result<Vec<OrbitSpec>> {
        self.check_len(e)?;
        let roots = self.positive_roots()?;
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        knapsack(&roots, 0, e.to_vec(), &mut chosen, &mut out);
        Ok(out.into_iter().map(|mults| OrbitSpec { dim: e.to_vec(), mults }).collect())
    }
}

fn enumerate_box(q: &Quiver, comp: &[usize], k: usize, bound: usize, d: &mut Vec<usize>, out: &mut Vec<Root>) {
    if k == comp.len() {
        if d.iter().any(|&x| x > 0) && q.tits_form(d) == 1 && support_connected(q, d) {
            out.push(Root(d.clone()));
        }
        return;
    }
    for x in 0..=bound {
        d[comp[k] - 1] = x;
        enumerate_box(q, comp, k + 1, bound, d, out);
    }
    d[comp[k] - 1] = 0;
}

fn support_connected(q: &Quiver, d: &[usize]) -> bool {
    let support: Vec<usize> = (1..=q.n).filter(|&v| d[v - 1] > 0).collect();
    let Some(&first) = support.first() else {
        return false;
    };
    let mut seen = vec![false; q.n + 1];
    seen[first] = true;
    let mut stack = vec![first];
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &(t, h) in &q.arrows {
            let w = if t == v {
                h
            } else if h == v {
                t
            } else {
                continue;
            };
            if d[w - 1] > 0 && !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == support.len()
}

fn knapsack(
    roots: &[Root],
    from: usize,
    rest: Vec<usize>,
    chosen: &mut Vec<(Root, usize)>,
    out: &mut Vec<BTreeMap<Root, usize>>,
) {
    if rest.iter().all(|&x| x == 0) {
        out.push(chosen.iter().cloned().collect());
        return;
    }
    if from == roots.len() {
        return;
    }
    let root = &roots[from];
    let max_m = root.0.iter().zip(&rest).filter(|(&a, _)| a > 0).map(|(&a, &r)| r / a).min().unwrap_or(0);
    for m in (0..=max_m).rev() {
        let next: Vec<usize> = rest.iter().zip(&root.0).map(|(&r, &a)| r - m * a).collect();
        if m > 0 {
            chosen.push((root.clone(), m));
        }
        knapsack(roots, from + 1, next, chosen, out);
        if m > 0 {
            chosen.pop();
        }
    }
}

/// The simply-laced Dynkin type of a connected component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl DynkinType {
    /// Largest coefficient of the highest root; bounds every root entry.
    pub fn max_root_coefficient(self) -> usize {
        match self {
            DynkinType::A(_) => 1,
            DynkinType::D(_) => 2,
            DynkinType::E6 => 3,
            DynkinType::E7 => 4,
            DynkinType::E8 => 6,
        }
    }

    pub fn rank(self) -> usize {
        match self {
            DynkinType::A(n) | DynkinType::D(n) => n,
            DynkinType::E6 => 6,
            DynkinType::E7 => 7,
            DynkinType::E8 => 8,
        }
    }

    /// Number of positive roots.
    pub fn num_positive_roots(self) -> usize {
        match self {
            DynkinType::A(n) => n * (n + 1) / 2,
            DynkinType::D(n) => n * (n - 1),
            DynkinType::E6 => 36,
            DynkinType::E7 => 63,
            DynkinType::E8 => 120,
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E6 => write!(f, "E6"),
            DynkinType::E7 => write!(f, "E7"),
            DynkinType::E8 => write!(f, "E8"),
        }
    }
}

/// Result of [`Quiver::dynkin_type`]: one type per connected component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DynkinClass {
    Dynkin(Vec<DynkinType>),
    NotDynkin,
}

fn classify_component(q: &Quiver, comp: &[usize]) -> Option<DynkinType> {
    let edges: Vec<(usize, usize)> =
        q.arrows.iter().filter(|a| comp.contains(&a.0)).map(|&(t, h)| (t.min(h), t.max(h))).collect();
    let n = comp.len();
    if edges.len() + 1 != n {
        return None;
    }
    let mut dedup = edges.clone();
    dedup.sort_unstable();
    dedup.dedup();
    if dedup.len() != edges.len() {
        return None;
    }
    let neighbours = |v: usize| -> Vec<usize> {
        edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    };
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| neighbours(v).len() >= 3).collect();
    match branch.as_slice() {
        [] => Some(DynkinType::A(n)),
        [center] => {
            let nb = neighbours(*center);
            if nb.len() != 3 {
                return None;
            }
            let mut arms: Vec<usize> = nb
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (*center, start, 1);
                    loop {
                        let next: Vec<usize> = neighbours(cur).into_iter().filter(|&w| w != prev).collect();
                        match next.as_slice() {
                            [w] => {
                                prev = cur;
                                cur = *w;
                                len += 1;
                            }
                            _ => break len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, c] => Some(DynkinType::D(c + 3)),
                [1, 2, 2] => Some(DynkinType::E6),
                [1, 2, 3] => Some(DynkinType::E7),
                [1, 2, 4] => Some(DynkinType::E8),
                _ => None,
            }
        }
        _ => None,
    }
}

/// A positive root, as a dimension vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<usize>);

impl Root {
    pub fn height(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Validates `d` as a positive root of `q`.
    pub fn new(q: &Quiver, d: Vec<usize>) -> Result<Self> {
        q.check_len(&d)?;
        if !q.is_dynkin() {
            return Err(Error::NotDynkin);
        }
        if d.iter().all(|&x| x == 0) || q.tits_form(&d) != 1 || !support_connected(q, &d) {
            return Err(Error::NotARoot(d));
        }
        Ok(Root(d))
    }

    /// For a type-A quiver laid out as `1 - 2 - … - n`, the interval root
    /// `α_{ij} = ε_i + … + ε_j`.
    pub fn interval(n: usize, i: usize, j: usize) -> Self {
        Root((1..=n).map(|v| usize::from(i <= v && v <= j)).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// An orbit, given by positive root multiplicities with `Σ m_α α = dim`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrbitSpec {
    dim: Vec<usize>,
    mults: BTreeMap<Root, usize>,
}

impl OrbitSpec {
    /// Validates `Σ m_α α = dim`; zero multiplicities are dropped.
    pub fn new(dim: Vec<usize>, mults: impl IntoIterator<Item = (Root, usize)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (root, m) in mults {
            if root.0.len() != dim.len() {
                return Err(Error::LengthMismatch { expected: dim.len(), found: root.0.len() });
            }
            if m > 0 {
                *map.entry(root).or_insert(0) += m;
            }
        }
        let o = OrbitSpec { dim, mults: map };
        let sum = o.induced_dim();
        if sum != o.dim {
            return Err(Error::InconsistentOrbit(format!("Σ m·α = {sum:?} but dim = {:?}", o.dim)));
        }
        Ok(o)
    }

    /// Like [`OrbitSpec::new`] but also checks every root against `q`.
    pub fn for_quiver(q: &Quiver, dim: Vec<usize>, mults: impl IntoIterator<Item = (Root, usize)>) -> Result<Self> {
        q.check_len(&dim)?;
        let o = Self::new(dim, mults)?;
        for root in o.mults.keys() {
            Root::new(q, root.0.clone())?;
        }
        Ok(o)
    }

    fn induced_dim(&self) -> Vec<usize> {
        let mut sum = vec![0; self.dim.len()];
        for (root, &m) in &self.mults {
            for (s, &a) in sum.iter_mut().zip(&root.0) {
                *s += m * a;
            }
        }
        sum
    }

    pub fn dim(&self) -> &[usize] {
        &self.dim
    }

    pub fn mults(&self) -> &BTreeMap<Root, usize> {
        &self.mults
    }

    pub fn mult(&self, root: &Root) -> usize {
        self.mults.get(root).copied().unwrap_or(0)
    }

    /// `{α : m_α ≠ 0}`
    pub fn support(&self) -> Vec<Root> {
        self.mults.keys().cloned().collect()
    }
}

/// An integer matrix stored as rows.
pub type Matrix = Vec<Vec<i64>>;

/// A representation: a vector space dimension per vertex and one
/// `dims[h] × dims[t]` matrix per arrow, in the quiver's arrow order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverRep {
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl QuiverRep {
    pub fn new(q: &Quiver, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        q.check_len(&dims)?;
        if maps.len() != q.arrows.len() {
            return Err(Error::InvalidRepresentation(format!("{} maps for {} arrows", maps.len(), q.arrows.len())));
        }
        for (k, (&(t, h), m)) in q.arrows.iter().zip(&maps).enumerate() {
            let (rows, cols) = (dims[h - 1], dims[t - 1]);
            if m.len() != rows || m.iter().any(|r| r.len() != cols) {
                return Err(Error::InvalidRepresentation(format!("map {k} for arrow {t}->{h} must be {rows}x{cols}")));
            }
        }
        Ok(QuiverRep { dims, maps })
    }

    /// The zero representation with the given dimensions.
    pub fn zero(q: &Quiver, dims: Vec<usize>) -> Self {
        let maps = q.arrows.iter().map(|&(t, h)| vec![vec![0; dims[t - 1]]; dims[h - 1]]).collect();
        QuiverRep { dims, maps }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(q: &Quiver, parts: &[QuiverRep]) -> QuiverRep {
        let dims: Vec<usize> = (0..q.n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let mut out = QuiverRep::zero(q, dims);
        let mut offset = vec![0usize; q.n];
        for p in parts {
            for (k, &(t, h)) in q.arrows.iter().enumerate() {
                for (r, row) in p.maps[k].iter().enumerate() {
                    for (c, &x) in row.iter().enumerate() {
                        out.maps[k][offset[h - 1] + r][offset[t - 1] + c] = x;
                    }
                }
            }
            for (o, &d) in offset.iter_mut().zip(&p.dims) {
                *o += d;
            }
        }
        out
    }
}

/// The indecomposable representation of a type-A quiver with dimension
/// vector `root`: one-dimensional spaces on the support, identity maps on
/// arrows inside the support, zero elsewhere.
pub fn indecomposable_rep(q: &Quiver, root: &Root) -> Result<QuiverRep> {
    if !q.is_type_a() {
        return Err(Error::NotTypeA);
    }
    let root = Root::new(q, root.0.clone())?;
    let dims = root.0.clone();
    let maps = q
        .arrows
        .iter()
        .map(|&(t, h)| {
            let (rows, cols) = (dims[h - 1], dims[t - 1]);
            if rows == 1 && cols == 1 {
                vec![vec![1]]
            } else {
                vec![vec![0; cols]; rows]
            }
        })
        .collect();
    Ok(QuiverRep { dims, maps })
}

/// The canonical point of an orbit: direct sum of indecomposables in root
/// order. Type A only.
pub fn orbit_representative(q: &Quiver, orbit: &OrbitSpec) -> Result<QuiverRep> {
    let mut parts = Vec::new();
    for (root, &m) in orbit.mults() {
        let ind = indecomposable_rep(q, root)?;
        parts.extend(std::iter::repeat_n(ind, m));
    }
    if parts.is_empty() {
        if !q.is_type_a() {
            return Err(Error::NotTypeA);
        }
        return Ok(QuiverRep::zero(q, orbit.dim().to_vec()));
    }
    Ok(QuiverRep::direct_sum(q, &parts))
}

/// `rank γ_{ψ,φ}` where `γ(β) = (β_{h(a)} ψ_a − φ_a β_{t(a)})_a`.
pub fn gamma_rank(q: &Quiver, psi: &QuiverRep, phi: &QuiverRep) -> usize {
    let (f, e) = (&psi.dims, &phi.dims);
    // column index of β_v[p][s]
    let mut col_offset = vec![0usize; q.n];
    let mut ncols = 0;
    for v in 0..q.n {
        col_offset[v] = ncols;
        ncols += e[v] * f[v];
    }
    let col = |v: usize, p: usize, s: usize| col_offset[v] + p * f[v] + s;
    let mut rows = Vec::new();
    for (k, &(t, h)) in q.arrows.iter().enumerate() {
        let (t, h) = (t - 1, h - 1);
        // entry (p, c) of an e_h × f_t matrix
        for p in 0..e[h] {
            for c in 0..f[t] {
                let mut row = vec![0i64; ncols];
                for s in 0..f[h] {
                    row[col(h, p, s)] += psi.maps[k][s][c];
                }
                for s in 0..e[t] {
                    row[col(t, s, c)] -= phi.maps[k][p][s];
                }
                rows.push(row);
            }
        }
    }
    integer_rank(&rows)
}

/// `dim Hom(ψ, φ) = dim A − rank γ_{ψ,φ}` with `A = ⊕_v Hom(F_v, E_v)`.
pub fn hom_dim(q: &Quiver, psi: &QuiverRep, phi: &QuiverRep) -> usize {
    let dim_a: usize = psi.dims.iter().zip(&phi.dims).map(|(f, e)| f * e).sum();
    dim_a - gamma_rank(q, psi, phi)
}

/// One row of a membership report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomComparison {
    pub root: Root,
    /// `dim Hom(ψ_α, φ')` for the tested point
    pub candidate: usize,
    /// `dim Hom(ψ_α, φ)` for the orbit representative
    pub orbit: usize,
}

impl HomComparison {
    pub fn holds(&self) -> bool {
        self.candidate >= self.orbit
    }
}

/// Hom dimensions of every indecomposable into `candidate` and into the
/// orbit representative.
pub fn membership_table(q: &Quiver, candidate: &QuiverRep, orbit: &OrbitSpec) -> Result<Vec<HomComparison>> {
    if !q.is_type_a() {
        return Err(Error::NotTypeA);
    }
    if candidate.dims() != orbit.dim() {
        return Err(Error::InconsistentOrbit(format!(
            "representation has dimensions {:?}, orbit has {:?}",
            candidate.dims(),
            orbit.dim()
        )));
    }
    let rep = orbit_representative(q, orbit)?;
    q.positive_roots()?
        .into_iter()
        .map(|root| {
            let psi = indecomposable_rep(q, &root)?;
            Ok(HomComparison { candidate: hom_dim(q, &psi, candidate), orbit: hom_dim(q, &psi, &rep), root })
        })
        .collect()
}

/// Bongartz's criterion: `candidate` lies in the orbit closure iff
/// `dim Hom(ψ, candidate) ≥ dim Hom(ψ, φ)` for every indecomposable `ψ`.
pub fn in_orbit_closure(q: &Quiver, candidate: &QuiverRep, orbit: &OrbitSpec) -> Result<bool> {
    Ok(membership_table(q, candidate, orbit)?.iter().all(HomComparison::holds))
}
