//! Partitions, skew shapes, set-valued tableaux and their words.
//!
//! A [`Partition`] is always stored in canonical form: weakly decreasing with
//! trailing zeros removed, so `(2,1)` and `(2,1,0)` compare and hash equal.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of non-negative integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting sequences that are not weakly decreasing.
    /// Trailing zeros are dropped.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts.iter().map(|&p| p as i64).collect()));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Builds a partition from a sequence the caller knows is weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// Interprets an integer sequence as a partition if it is one.
    pub fn from_ints(seq: &[i64]) -> Option<Self> {
        if seq.iter().any(|&x| x < 0) || seq.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Self::from_sorted(seq.iter().map(|&x| x as usize).collect()))
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle with `rows` rows and `cols` columns, `(cols)^rows`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition { parts: vec![cols; rows] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// `|λ|`
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`, the number of non-zero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate partition, obtained by transposing the Young diagram.
    pub fn conjugate(&self) -> Self {
        let cols = self.part(0);
        let parts = (0..cols).map(|c| self.parts.iter().take_while(|&&p| p > c).count()).collect();
        Partition { parts }
    }

    /// Young diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// If this is a rectangle `(c)^r`, returns `(r, c)`. The empty partition
    /// counts as the rectangle `(0, 0)`.
    pub fn rectangle_dims(&self) -> Option<(usize, usize)> {
        match self.parts.first() {
            None => Some((0, 0)),
            Some(&c) if self.parts.iter().all(|&p| p == c) => Some((self.length(), c)),
            _ => None,
        }
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_weight(n: usize) -> Vec<Partition> {
        fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                go(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with weight at most `n`, by increasing weight.
    pub fn all_up_to_weight(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Self::all_of_weight).collect()
    }

    /// All partitions contained in the rectangle with `rows` rows and `cols`
    /// columns.
    pub fn all_in_rectangle(rows: usize, cols: usize) -> Vec<Partition> {
        fn go(row: usize, rows: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition::from_sorted(prefix.clone()));
            if row == rows {
                return;
            }
            for p in 1..=max {
                prefix.push(p);
                go(row + 1, rows, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(0, rows, cols, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| a.cmp(b)));
        out
    }

    /// Concatenation of `self` followed by `tail`, if the result is a partition.
    pub fn concat(&self, tail: &Partition) -> Option<Partition> {
        if !tail.is_empty() && self.length() > 0 && self.parts[self.length() - 1] < tail.parts[0] {
            return None;
        }
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&tail.parts);
        Some(Partition { parts })
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Shorthand used throughout the tests and the guide: `part![3, 2]`.
#[macro_export]
macro_rules! part {
    () => { $crate::partitions::Partition::empty() };
    ($($x:expr),+ $(,)?) => {
        $crate::partitions::Partition::new(vec![$($x),+]).expect("not a partition")
    };
}

/// A skew shape `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer: outer.to_string(), inner: inner.to_string() });
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `λ / ∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    pub fn contains_box(&self, row: usize, col: usize) -> bool {
        col < self.outer.part(row) && col >= self.inner.part(row)
    }

    /// Boxes `(row, col)` in row-major order, top row first.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        (0..self.outer.length()).flat_map(|r| (self.inner.part(r)..self.outer.part(r)).map(move |c| (r, c))).collect()
    }
}

/// A finite sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::InvalidTableau("words have positive entries".into()));
        }
        Ok(Word(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// True iff every occurrence of `i ≥ 2` is followed by strictly more
    /// occurrences of `i - 1` than of `i`.
    pub fn is_reverse_lattice(&self) -> bool {
        // counts[k] = occurrences of k+1 strictly after the current position
        let mut counts: Vec<usize> = Vec::new();
        for &x in self.0.iter().rev() {
            if x > counts.len() {
                counts.resize(x, 0);
            }
            if x >= 2 && counts[x - 2] <= counts[x - 1] {
                return false;
            }
            counts[x - 1] += 1;
        }
        true
    }

    /// Number of occurrences of each integer `1, 2, …` up to the largest entry.
    pub fn content(&self) -> Vec<usize> {
        let max = self.0.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0; max];
        for &x in &self.0 {
            counts[x - 1] += 1;
        }
        counts
    }

    /// `u(μ) = (l^{μ_l}, …, 2^{μ_2}, 1^{μ_1})`, the word of the tableau of
    /// shape `μ` whose row `i` is filled with `i`.
    pub fn u_word(mu: &Partition) -> Word {
        let mut v = Vec::with_capacity(mu.weight());
        for (i, &p) in mu.parts().iter().enumerate().rev() {
            v.extend(std::iter::repeat_n(i + 1, p));
        }
        Word(v)
    }
}

/// A filling of a skew shape by finite non-empty sets of positive integers,
/// weakly increasing along rows and strictly increasing down columns.
///
/// Cells are stored in the row-major order of [`SkewShape::boxes`], each as a
/// sorted set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetValuedTableau {
    shape: SkewShape,
    cells: Vec<Vec<usize>>,
}

impl SetValuedTableau {
    /// Validates the filling. Each cell is sorted and deduplicated first.
    pub fn new(shape: SkewShape, cells: Vec<Vec<usize>>) -> Result<Self> {
        let boxes = shape.boxes();
        if boxes.len() != cells.len() {
            return Err(Error::InvalidTableau(format!("{} cells for a shape with {} boxes", cells.len(), boxes.len())));
        }
        let cells: Vec<Vec<usize>> = cells
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c.dedup();
                c
            })
            .collect();
        let t = SetValuedTableau { shape, cells };
        t.check()?;
        Ok(t)
    }

    fn check(&self) -> Result<()> {
        let boxes = self.shape.boxes();
        let index = |r: usize, c: usize| boxes.iter().position(|&b| b == (r, c));
        for (k, &(r, c)) in boxes.iter().enumerate() {
            let cell = &self.cells[k];
            if cell.is_empty() || cell[0] == 0 {
                return Err(Error::InvalidTableau(format!(
                    "box ({r},{c}) must hold a non-empty set of positive integers"
                )));
            }
            if let Some(right) = index(r, c + 1) {
                if cell[cell.len() - 1] > self.cells[right][0] {
                    return Err(Error::InvalidTableau(format!("row condition fails at ({r},{c})")));
                }
            }
            if let Some(below) = index(r + 1, c) {
                if cell[cell.len() - 1] >= self.cells[below][0] {
                    return Err(Error::InvalidTableau(format!("column condition fails at ({r},{c})")));
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    /// `|T|`, the total number of entries.
    pub fn degree(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    /// Rows read left to right, bottom row first, each box in increasing order.
    pub fn word(&self) -> Word {
        let boxes = self.shape.boxes();
        let rows = self.shape.outer().length();
        let mut w = Vec::with_capacity(self.degree());
        for r in (0..rows).rev() {
            for (k, _) in boxes.iter().enumerate().filter(|(_, b)| b.0 == r) {
                w.extend_from_slice(&self.cells[k]);
            }
        }
        Word(w)
    }

    /// Exponent vector of `x^T` in `num_vars` variables.
    pub fn monomial(&self, num_vars: usize) -> Vec<usize> {
        let mut exps = vec![0; num_vars];
        for &x in self.cells.iter().flatten() {
            exps[x - 1] += 1;
        }
        exps
    }
}

/// Calls `visit` on every set-valued tableau of `shape` with entries at most
/// `max_entry` and `|T| - |shape| <= max_excess`. Tableaux are produced box by
/// box in row-major order, so the sequence is deterministic.
pub fn for_each_svt<F>(shape: &SkewShape, max_entry: usize, max_excess: usize, mut visit: F)
where
    F: FnMut(&SetValuedTableau),
{
    let boxes = shape.boxes();
    // for each box, the index of its left and upper neighbours inside the shape
    let left: Vec<Option<usize>> = boxes
        .iter()
        .map(|&(r, c)| {
            (c > 0 && shape.contains_box(r, c - 1)).then(|| boxes.iter().position(|&b| b == (r, c - 1)).unwrap())
        })
        .collect();
    let above: Vec<Option<usize>> = boxes
        .iter()
        .map(|&(r, c)| {
            (r > 0 && shape.contains_box(r - 1, c)).then(|| boxes.iter().position(|&b| b == (r - 1, c)).unwrap())
        })
        .collect();

    struct Ctx<'a, F> {
        shape: &'a SkewShape,
        left: Vec<Option<usize>>,
        above: Vec<Option<usize>>,
        max_entry: usize,
        visit: F,
    }

    fn fill_box<F: FnMut(&SetValuedTableau)>(ctx: &mut Ctx<'_, F>, cells: &mut Vec<Vec<usize>>, excess: usize) {
        let k = cells.len();
        if k == ctx.left.len() {
            let t = SetValuedTableau { shape: ctx.shape.clone(), cells: cells.clone() };
            (ctx.visit)(&t);
            return;
        }
        let mut lo = 1;
        if let Some(l) = ctx.left[k] {
            lo = lo.max(*cells[l].last().unwrap());
        }
        if let Some(a) = ctx.above[k] {
            lo = lo.max(cells[a].last().unwrap() + 1);
        }
        let mut set = Vec::new();
        choose_set(ctx, cells, &mut set, lo, excess);
    }

    // Grows the set of the current box in increasing order; every non-empty
    // prefix is a candidate cell.
    fn choose_set<F: FnMut(&SetValuedTableau)>(
        ctx: &mut Ctx<'_, F>,
        cells: &mut Vec<Vec<usize>>,
        set: &mut Vec<usize>,
        from: usize,
        excess: usize,
    ) {
        for x in from..=ctx.max_entry {
            set.push(x);
            cells.push(set.clone());
            fill_box(ctx, cells, excess);
            cells.pop();
            if excess > 0 {
                choose_set(ctx, cells, set, x + 1, excess - 1);
            }
            set.pop();
        }
    }

    let mut ctx = Ctx { shape, left, above, max_entry, visit: &mut visit };
    fill_box(&mut ctx, &mut Vec::with_capacity(boxes.len()), max_excess);
}

/// Collects [`for_each_svt`] into a vector.
pub fn enumerate_svt(shape: &SkewShape, max_entry: usize, max_excess: usize) -> Vec<SetValuedTableau> {
    let mut out = Vec::new();
    for_each_svt(shape, max_entry, max_excess, |t| out.push(t.clone()));
    out
}

/// All terms of `G_λ(x_1, …, x_p)` of total degree at most `max_deg`, keyed
/// by exponent vector.
pub fn expand_single(lambda: &Partition, num_vars: usize, max_deg: usize) -> BTreeMap<Vec<usize>, i64> {
    let mut poly = BTreeMap::new();
    if max_deg < lambda.weight() {
        return poly;
    }
    let shape = SkewShape::straight(lambda.clone());
    for_each_svt(&shape, num_vars, max_deg - lambda.weight(), |t| {
        let sign = if (t.degree() - lambda.weight()).is_multiple_of(2) { 1 } else { -1 };
        *poly.entry(t.monomial(num_vars)).or_insert(0) += sign;
    });
    poly.retain(|_, c| *c != 0);
    poly
}

/// Places `placed` in the upper-left corner of the rectangle `rect` and the
/// 180° rotation of `rotated` in the lower-right corner; true iff the two
/// cover the rectangle and overlap in a rook-strip (at most one box in each
/// row and each column).
pub fn rook_strip_complement(rect: &Partition, placed: &Partition, rotated: &Partition) -> bool {
    let Some((rows, cols)) = rect.rectangle_dims() else {
        return false;
    };
    if !rect.contains(placed) || !rect.contains(rotated) {
        return false;
    }
    let mut col_overlap = vec![0usize; cols];
    for r in 0..rows {
        // upper-left piece covers columns [0, a); rotated piece covers [cols - b, cols)
        let a = placed.part(r);
        let b = rotated.part(rows - 1 - r);
        if a + b < cols {
            return false;
        }
        let overlap = a + b - cols;
        if overlap > 1 {
            return false;
        }
        if overlap == 1 {
            let c = cols - b;
            col_overlap[c] += 1;
            if col_overlap[c] > 1 {
                return false;
            }
        }
    }
    true
}

/// True iff `inner ⊆ outer` and `outer / inner` has at most one box in every
/// row and every column.
pub fn is_rook_strip(outer: &Partition, inner: &Partition) -> bool {
    if !outer.contains(inner) {
        return false;
    }
    let rows_ok = (0..outer.length()).all(|r| outer.part(r) - inner.part(r) <= 1);
    let (oc, ic) = (outer.conjugate(), inner.conjugate());
    rows_ok && (0..oc.length()).all(|c| oc.part(c) - ic.part(c) <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn svt(outer: Partition, cells: Vec<Vec<usize>>) -> SetValuedTableau {
        SetValuedTableau::new(SkewShape::straight(outer), cells).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(part![3, 2].conjugate(), part![2, 2, 1]);
        assert_eq!(part![].conjugate(), part![]);
        assert_eq!(part![1, 1, 1].conjugate(), part![3]);
    }

    #[test]
    fn canonical_form_strips_zeros() {
        assert_eq!(part![2, 1, 0], part![2, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::from_ints(&[2, 1, 0, 0]), Some(part![2, 1]));
        assert_eq!(Partition::from_ints(&[2, -1]), None);
    }

    #[test]
    fn word_of_the_running_example() {
        let t = svt(part![3, 2], vec![vec![1, 2], vec![2], vec![2, 5, 8], vec![4], vec![7, 8]]);
        assert_eq!(t.word().entries(), &[4, 7, 8, 1, 2, 2, 2, 5, 8]);
        assert_eq!(t.degree(), 9);
        assert_eq!(t.word().content(), vec![1, 3, 0, 1, 1, 0, 1, 2]);
        assert_eq!(svt(part![1], vec![vec![1]]).word().entries(), &[1]);
        assert_eq!(svt(part![2], vec![vec![1], vec![1, 3]]).word().entries(), &[1, 1, 3]);
    }

    #[test]
    fn invalid_tableaux_rejected() {
        let sh = SkewShape::straight(part![2, 1]);
        assert!(SetValuedTableau::new(sh.clone(), vec![vec![2], vec![1], vec![3]]).is_err());
        assert!(SetValuedTableau::new(sh.clone(), vec![vec![1], vec![1], vec![1]]).is_err());
        assert!(SetValuedTableau::new(sh.clone(), vec![vec![1], vec![]]).is_err());
        assert!(SetValuedTableau::new(sh, vec![vec![1], vec![1, 2], vec![2]]).is_ok());
    }

    #[test]
    fn reverse_lattice_examples() {
        assert!(Word::new(vec![2, 1, 1]).unwrap().is_reverse_lattice());
        assert!(!Word::new(vec![1, 2]).unwrap().is_reverse_lattice());
        assert!(Word::default().is_reverse_lattice());
        assert!(Word::new(vec![0]).is_err());
    }

    #[test]
    fn u_word_examples() {
        assert_eq!(Word::u_word(&part![3, 2]).entries(), &[2, 2, 1, 1, 1]);
        assert!(Word::u_word(&part![]).entries().is_empty());
        assert!(Word::u_word(&part![4, 2, 2, 1]).is_reverse_lattice());
    }

    #[test]
    fn enumerate_small_shapes() {
        let one = SkewShape::straight(part![1]);
        let cells: Vec<_> = enumerate_svt(&one, 2, 1).into_iter().map(|t| t.cells()[0].clone()).collect();
        assert_eq!(cells, vec![vec![1], vec![1, 2], vec![2]]);
        assert_eq!(enumerate_svt(&one, 1, 0).len(), 1);
        assert_eq!(enumerate_svt(&SkewShape::straight(part![2, 1]), 2, 0).len(), 2);
    }

    #[test]
    fn skew_enumeration_respects_shape() {
        let sh = SkewShape::new(part![2, 1], part![1]).unwrap();
        // two disconnected boxes, entries in {1,2}, no excess: 2 * 2 fillings
        assert_eq!(enumerate_svt(&sh, 2, 0).len(), 4);
        assert!(SkewShape::new(part![1], part![2]).is_err());
    }

    #[test]
    fn expand_single_examples() {
        let g = expand_single(&part![1], 1, 5);
        assert_eq!(g, BTreeMap::from([(vec![1], 1)]));
        let g = expand_single(&part![1], 2, 2);
        assert_eq!(g, BTreeMap::from([(vec![1, 0], 1), (vec![0, 1], 1), (vec![1, 1], -1)]));
        assert_eq!(expand_single(&part![], 3, 4), BTreeMap::from([(vec![0, 0, 0], 1)]));
    }

    #[test]
    fn rook_strip_complement_examples() {
        assert!(rook_strip_complement(&part![1], &part![1], &part![1]));
        assert!(rook_strip_complement(&part![2, 2], &part![2, 2], &part![]));
        assert!(!rook_strip_complement(&part![2, 2], &part![1], &part![1]));
        assert!(rook_strip_complement(&part![], &part![], &part![]));
        assert!(!rook_strip_complement(&part![2, 1], &part![], &part![]));
        // overlap of two boxes in the same column
        assert!(!rook_strip_complement(&part![1, 1], &part![1, 1], &part![1, 1]));
        assert!(rook_strip_complement(&part![2, 2], &part![2, 1], &part![2, 1]));
    }

    #[test]
    fn rook_strips() {
        assert!(is_rook_strip(&part![2, 1], &part![1]));
        assert!(!is_rook_strip(&part![2], &part![]));
        assert!(!is_rook_strip(&part![1, 1], &part![]));
        assert!(is_rook_strip(&part![3, 1], &part![2]));
    }
}
