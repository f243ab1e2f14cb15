//! The algebra A(1), finite truncated A(1)-modules, Bruner's modules `P_n`,
//! module-level `U(1)` and Margolis homology.
//!
//! A(1) is generated by `s1 = Sq^1` and `s2 = Sq^2` subject to
//! `s1 s1 = 0`, `s2 s2 = s1 s2 s1` and `s2 s1 s2 s1 = s1 s2 s1 s2`. Words act
//! on modules from the right end first, so `s1 s2` is "Sq^2, then Sq^1".

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{GF2Matrix, Subspace};
use crate::poly::PolyModule;

/// A word in the generators `s1`, `s2`, stored as the list of square indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct A1Word(Vec<u8>);

impl A1Word {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if letters.iter().any(|&l| l != 1 && l != 2) {
            return Err(Error::Invalid(format!("A(1) words use letters 1 and 2, got {letters:?}")));
        }
        Ok(A1Word(letters))
    }

    pub fn one() -> Self {
        A1Word(Vec::new())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> i32 {
        self.0.iter().map(|&l| i32::from(l)).sum()
    }

    /// Rewrites to normal form; `None` means the word is zero in A(1).
    pub fn normalize(&self) -> Option<A1Word> {
        let mut w = self.0.clone();
        loop {
            if w.iter().map(|&l| u32::from(l)).sum::<u32>() > 6 {
                return None;
            }
            if w.windows(2).any(|p| p == [1, 1]) {
                return None;
            }
            if let Some(i) = w.windows(2).position(|p| p == [2, 2]) {
                w.splice(i..i + 2, [1, 2, 1]);
                continue;
            }
            if let Some(i) = w.windows(4).position(|p| p == [2, 1, 2, 1]) {
                w.splice(i..i + 4, [1, 2, 1, 2]);
                continue;
            }
            return Some(A1Word(w));
        }
    }
}

impl fmt::Display for A1Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            write!(f, "s{l}")?;
        }
        Ok(())
    }
}

/// The eight normal-form words, in degrees 0, 1, 2, 3, 3, 4, 5, 6.
pub fn a1_basis() -> Vec<A1Word> {
    [&[][..], &[1], &[2], &[1, 2], &[2, 1], &[1, 2, 1], &[2, 1, 2], &[1, 2, 1, 2]]
        .iter()
        .map(|l| A1Word(l.to_vec()))
        .collect()
}

/// Product in A(1) as a GF(2) sum of basis words (empty means zero).
pub fn a1_multiply(a: &A1Word, b: &A1Word) -> Vec<A1Word> {
    let cat = A1Word(a.0.iter().chain(&b.0).copied().collect());
    cat.normalize().into_iter().collect()
}

/// Graded dimensions over a contiguous range of degrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedDims {
    pub start: i32,
    pub dims: Vec<usize>,
}

impl GradedDims {
    pub fn get(&self, d: i32) -> usize {
        if d < self.start {
            return 0;
        }
        self.dims.get((d - self.start) as usize).copied().unwrap_or(0)
    }

    pub fn end(&self) -> i32 {
        self.start + self.dims.len() as i32 - 1
    }

    pub fn degrees(&self) -> impl Iterator<Item = i32> {
        self.start..self.start + self.dims.len() as i32
    }

    pub fn nonzero(&self) -> Vec<(i32, usize)> {
        self.degrees().map(|d| (d, self.get(d))).filter(|&(_, v)| v > 0).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&v| v == 0)
    }
}

/// Anything carrying an action of `Sq^1` and `Sq^2` degree by degree.
pub trait A1Action {
    fn dim(&self, d: i32) -> usize;
    /// `Sq^1` from degree `d` to `d + 1`.
    fn sq1(&self, d: i32) -> Result<GF2Matrix>;
    /// `Sq^2` from degree `d` to `d + 2`.
    fn sq2(&self, d: i32) -> Result<GF2Matrix>;

    /// Matrix of the word `w` from degree `d`.
    fn word_matrix(&self, w: &A1Word, d: i32) -> Result<GF2Matrix> {
        let mut m = GF2Matrix::identity(self.dim(d));
        let mut deg = d;
        for &l in w.letters().iter().rev() {
            let step = if l == 1 { self.sq1(deg)? } else { self.sq2(deg)? };
            m = m.compose(&step)?;
            deg += i32::from(l);
        }
        Ok(m)
    }

    /// `Sq^3 = Sq^1 Sq^2` from degree `d`.
    fn sq3(&self, d: i32) -> Result<GF2Matrix> {
        self.sq2(d)?.compose(&self.sq1(d + 2)?)
    }

    /// Margolis operator `Q_0 = Sq^1` or `Q_1 = Sq^1 Sq^2 + Sq^2 Sq^1`.
    fn margolis_q(&self, i: u8, d: i32) -> Result<GF2Matrix> {
        match i {
            0 => self.sq1(d),
            1 => self.sq3(d)?.add(&self.sq1(d)?.compose(&self.sq2(d + 1)?)?),
            _ => Err(Error::Invalid(format!("Margolis index must be 0 or 1, got {i}"))),
        }
    }
}

impl A1Action for PolyModule {
    fn dim(&self, d: i32) -> usize {
        if d < 0 {
            0
        } else {
            PolyModule::dim(self, d as usize)
        }
    }

    fn sq1(&self, d: i32) -> Result<GF2Matrix> {
        self.sq_checked(1, d)
    }

    fn sq2(&self, d: i32) -> Result<GF2Matrix> {
        self.sq_checked(2, d)
    }
}

impl PolyModule {
    fn sq_checked(&self, k: usize, d: i32) -> Result<GF2Matrix> {
        if d < 0 {
            return Ok(GF2Matrix::zeros(0, A1Action::dim(self, d + k as i32)));
        }
        self.sq_matrix(k, d as usize)
    }
}

/// Degree by degree `dim (ker Sq^1 + ker Sq^3) - dim (im Sq^1 + im Sq^2)`.
pub fn u1_dims<M: A1Action + ?Sized>(m: &M, lo: i32, hi: i32) -> Result<GradedDims> {
    let mut dims = Vec::new();
    for d in lo..=hi {
        let dim = m.dim(d);
        let kernel = m.sq1(d)?.kernel_basis().sum(&m.sq3(d)?.kernel_basis())?;
        let mut hit = Subspace::zero(dim);
        if m.dim(d - 1) > 0 {
            hit = hit.sum(&m.sq1(d - 1)?.image_basis())?;
        }
        if m.dim(d - 2) > 0 {
            hit = hit.sum(&m.sq2(d - 2)?.image_basis())?;
        }
        kernel.check_contains(&hit)?;
        dims.push(kernel.dim() - hit.dim());
    }
    Ok(GradedDims { start: lo, dims })
}

/// Homology of `Q_i` degree by degree, after checking `Q_i Q_i = 0` on the range.
pub fn margolis_dims<M: A1Action + ?Sized>(m: &M, i: u8, lo: i32, hi: i32) -> Result<GradedDims> {
    let step = if i == 0 { 1 } else { 3 };
    let mut dims = Vec::new();
    for d in lo..=hi {
        let q = m.margolis_q(i, d)?;
        let qq = q.compose(&m.margolis_q(i, d + step)?)?;
        if !qq.is_zero() {
            return Err(Error::RelationViolated(format!("Q{i} Q{i} != 0 from degree {d}")));
        }
        let incoming = if m.dim(d - step) > 0 { m.margolis_q(i, d - step)?.rank() } else { 0 };
        dims.push(m.dim(d) - q.rank() - incoming);
    }
    Ok(GradedDims { start: lo, dims })
}

/// One labeled basis element of a module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisElement {
    pub label: String,
    pub degree: i32,
}

/// A graded A(1)-module given by a basis and the actions of `Sq^1`, `Sq^2`.
///
/// `top` is the truncation degree: the module agrees with the infinite one
/// it presents in degrees `<= top`. Kernel-based quantities need three degrees
/// of headroom, so they are only reported on `valid_window()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A1Module {
    basis: Vec<BasisElement>,
    sq1: Vec<Vec<usize>>,
    sq2: Vec<Vec<usize>>,
    top: Option<i32>,
    by_degree: BTreeMap<i32, Vec<usize>>,
    position: Vec<usize>,
}

impl A1Module {
    /// Builds a module from its basis and arrows. Each arrow `(from, to)`
    /// adds `to` to the image of `from`; repeated arrows cancel mod 2.
    pub fn new(
        basis: Vec<BasisElement>,
        sq1_arrows: &[(usize, usize)],
        sq2_arrows: &[(usize, usize)],
        top: Option<i32>,
    ) -> Result<Self> {
        let len = basis.len();
        let mut sq1 = vec![Vec::new(); len];
        let mut sq2 = vec![Vec::new(); len];
        for (arrows, table, shift) in [(sq1_arrows, &mut sq1, 1), (sq2_arrows, &mut sq2, 2)] {
            for &(from, to) in arrows {
                if from >= len || to >= len {
                    return Err(Error::Invalid(format!("arrow ({from},{to}) out of range")));
                }
                if basis[to].degree != basis[from].degree + shift {
                    return Err(Error::Invalid(format!(
                        "Sq{shift} arrow {} -> {} does not raise degree by {shift}",
                        basis[from].label, basis[to].label
                    )));
                }
                toggle(&mut table[from], to);
            }
        }
        let mut by_degree: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
        let mut position = vec![0; len];
        for (i, b) in basis.iter().enumerate() {
            let slot = by_degree.entry(b.degree).or_default();
            position[i] = slot.len();
            slot.push(i);
        }
        Ok(A1Module { basis, sq1, sq2, top, by_degree, position })
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn top(&self) -> Option<i32> {
        self.top
    }

    pub fn sq1_arrows(&self) -> Vec<(usize, usize)> {
        arrows(&self.sq1)
    }

    pub fn sq2_arrows(&self) -> Vec<(usize, usize)> {
        arrows(&self.sq2)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.label == label)
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.by_degree.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.by_degree.keys().next_back().copied()
    }

    /// Degrees on which kernel-based invariants are exact.
    pub fn valid_window(&self) -> (i32, i32) {
        let lo = self.min_degree().unwrap_or(0);
        let hi = match self.top {
            Some(t) => t - 3,
            None => self.max_degree().unwrap_or(0),
        };
        (lo, hi)
    }

    fn in_degree(&self, d: i32) -> &[usize] {
        self.by_degree.get(&d).map_or(&[], Vec::as_slice)
    }

    fn action_matrix(&self, table: &[Vec<usize>], d: i32, shift: i32) -> GF2Matrix {
        let src = self.in_degree(d);
        let tgt_dim = self.in_degree(d + shift).len();
        let mut m = GF2Matrix::zeros(src.len(), tgt_dim);
        for (r, &i) in src.iter().enumerate() {
            for &j in &table[i] {
                m.flip(r, self.position[j]);
            }
        }
        m
    }

    /// Degree-shifted copy; the action is unchanged.
    pub fn suspend(&self, s: i32) -> A1Module {
        let basis = self
            .basis
            .iter()
            .map(|b| BasisElement { label: b.label.clone(), degree: b.degree + s })
            .collect();
        A1Module::new(basis, &self.sq1_arrows(), &self.sq2_arrows(), self.top.map(|t| t + s))
            .expect("suspension preserves arrow degrees")
    }

    fn relabel(mut self, f: impl Fn(&str) -> String) -> A1Module {
        for b in &mut self.basis {
            b.label = f(&b.label);
        }
        self
    }

    /// Basis counts per degree, over every represented degree.
    pub fn hilbert(&self) -> GradedDims {
        let lo = self.min_degree().unwrap_or(0);
        let hi = self.top.or(self.max_degree()).unwrap_or(lo - 1);
        GradedDims { start: lo, dims: (lo..=hi).map(|d| self.in_degree(d).len()).collect() }
    }

    /// Checks the defining relations of A(1) wherever both sides are inside
    /// the truncation.
    pub fn validate(&self) -> ValidationReport {
        let relations: [(&str, &[u8], &[u8]); 3] = [
            ("Sq1 Sq1 = 0", &[1, 1], &[]),
            ("Sq2 Sq2 = Sq1 Sq2 Sq1", &[2, 2], &[1, 2, 1]),
            ("Sq1 Sq2 Sq1 Sq2 = Sq2 Sq1 Sq2 Sq1", &[1, 2, 1, 2], &[2, 1, 2, 1]),
        ];
        let mut violations = Vec::new();
        let (lo, hi) = match (self.min_degree(), self.top.or(self.max_degree())) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return ValidationReport { violations },
        };
        for (name, lhs, rhs) in relations {
            let lhs = A1Word(lhs.to_vec());
            let rhs = A1Word(rhs.to_vec());
            let shift = lhs.degree();
            for d in lo..=hi - shift {
                let a = self.word_matrix(&lhs, d).expect("module matrices compose");
                let b = if rhs.0.is_empty() {
                    GF2Matrix::zeros(a.n_rows(), a.n_cols())
                } else {
                    self.word_matrix(&rhs, d).expect("module matrices compose")
                };
                if a != b {
                    violations.push(Violation { relation: name.to_string(), degree: d });
                }
            }
        }
        ValidationReport { violations }
    }

    /// `U(1)` of the module on its valid window.
    pub fn u1(&self) -> Result<GradedDims> {
        self.require_valid()?;
        let (lo, hi) = self.valid_window();
        u1_dims(self, lo, hi)
    }

    /// Margolis homology `H(M; Q_i)` on the valid window.
    pub fn margolis(&self, i: u8) -> Result<GradedDims> {
        self.require_valid()?;
        let (lo, hi) = self.valid_window();
        margolis_dims(self, i, lo, hi)
    }

    fn require_valid(&self) -> Result<()> {
        let report = self.validate();
        match report.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::RelationViolated(format!("{} at degree {}", v.relation, v.degree))),
        }
    }
}

fn toggle(list: &mut Vec<usize>, x: usize) {
    match list.iter().position(|&y| y == x) {
        Some(i) => {
            list.remove(i);
        }
        None => list.push(x),
    }
}

fn arrows(table: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> =
        table.iter().enumerate().flat_map(|(i, ts)| ts.iter().map(move |&t| (i, t))).collect();
    out.sort_unstable();
    out
}

impl A1Action for A1Module {
    fn dim(&self, d: i32) -> usize {
        self.in_degree(d).len()
    }

    fn sq1(&self, d: i32) -> Result<GF2Matrix> {
        Ok(self.action_matrix(&self.sq1, d, 1))
    }

    fn sq2(&self, d: i32) -> Result<GF2Matrix> {
        Ok(self.action_matrix(&self.sq2, d, 2))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub relation: String,
    pub degree: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A(1) acting on itself by left multiplication.
pub fn regular_module() -> A1Module {
    let words = a1_basis();
    let basis = words
        .iter()
        .map(|w| BasisElement { label: w.to_string(), degree: w.degree() })
        .collect();
    let mut sq1 = Vec::new();
    let mut sq2 = Vec::new();
    for (i, w) in words.iter().enumerate() {
        for (gen, out) in [(1u8, &mut sq1), (2u8, &mut sq2)] {
            for p in a1_multiply(&A1Word(vec![gen]), w) {
                let j = words.iter().position(|b| *b == p).expect("normal forms are basis words");
                out.push((i, j));
            }
        }
    }
    A1Module::new(basis, &sq1, &sq2, None).expect("regular module arrows are well graded")
}

/// Accumulates labeled elements and arrows, then sorts the basis by degree.
struct Builder {
    elems: Vec<BasisElement>,
    sq1: Vec<(usize, usize)>,
    sq2: Vec<(usize, usize)>,
    top: i32,
}

impl Builder {
    fn new(top: i32) -> Self {
        Builder { elems: Vec::new(), sq1: Vec::new(), sq2: Vec::new(), top }
    }

    fn elem(&mut self, label: &str, degree: i32) {
        if degree <= self.top {
            self.elems.push(BasisElement { label: label.to_string(), degree });
        }
    }

    fn find(&self, label: &str) -> Option<usize> {
        self.elems.iter().position(|b| b.label == label)
    }

    fn arrow(&mut self, sq: u8, from: &str, to: &str) {
        if let (Some(a), Some(b)) = (self.find(from), self.find(to)) {
            if sq == 1 {
                self.sq1.push((a, b));
            } else {
                self.sq2.push((a, b));
            }
        }
    }

    /// One generator `{prefix}_d` per degree from `start` to the top; Sq^1 from
    /// odd degrees and Sq^2 from degrees 2, 3 mod 4, as in F2[t].
    fn tail(&mut self, prefix: &str, start: i32) {
        let name = |d: i32| format!("{prefix}_{d}");
        for d in start..=self.top {
            self.elem(&name(d), d);
        }
        for d in start..=self.top {
            if d % 2 == 1 {
                self.arrow(1, &name(d), &name(d + 1));
            }
            if d % 4 == 2 || d % 4 == 3 {
                self.arrow(2, &name(d), &name(d + 2));
            }
        }
    }

    fn finish(self) -> A1Module {
        let mut order: Vec<usize> = (0..self.elems.len()).collect();
        order.sort_by_key(|&i| (self.elems[i].degree, i));
        let mut new_index = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let basis = order.iter().map(|&i| self.elems[i].clone()).collect();
        let remap = |v: &[(usize, usize)]| -> Vec<(usize, usize)> {
            v.iter().map(|&(a, b)| (new_index[a], new_index[b])).collect()
        };
        A1Module::new(basis, &remap(&self.sq1), &remap(&self.sq2), Some(self.top))
            .expect("diagram arrows are well graded")
    }
}

/// Bruner's indecomposable module `P_n`, truncated above degree `top`.
///
/// `P_1` is the reduced F2[t]; `P_2`, `P_3`, `P_4` have an explicit head
/// followed by an F2[t]-like tail; `P_{n+4}` is `P_n` suspended by 8.
pub fn build_pn(n: usize, top: i32) -> Result<A1Module> {
    if n == 0 {
        return Err(Error::Invalid("P_n is indexed from n = 1".into()));
    }
    let need = 2 * n as i32 + 4;
    if top < need {
        return Err(Error::TruncationTooSmall { got: top, need });
    }
    if n > 4 {
        let shift = 8 * ((n - 1) / 4) as i32;
        let base = build_pn((n - 1) % 4 + 1, top - shift)?;
        return Ok(base.suspend(shift).relabel(|l| format!("S^{shift} {l}")));
    }
    let mut b = Builder::new(top);
    match n {
        1 => b.tail("t", 1),
        2 => {
            for (l, d) in [("u'_2", 2), ("u'_3", 3), ("u_3", 3), ("u_4", 4), ("u'_5", 5), ("u'_6", 6)] {
                b.elem(l, d);
            }
            b.tail("u", 5);
            b.arrow(1, "u'_2", "u'_3");
            b.arrow(1, "u'_5", "u'_6");
            b.arrow(1, "u_3", "u_4");
            b.arrow(2, "u'_2", "u_4");
            b.arrow(2, "u'_3", "u'_5");
            b.arrow(2, "u_3", "u_5");
            b.arrow(2, "u_4", "u'_6");
        }
        3 => {
            for d in 3..=7 {
                b.elem(&format!("v'_{d}"), d);
            }
            b.tail("v", 6);
            b.arrow(1, "v'_3", "v'_4");
            b.arrow(1, "v'_5", "v_6");
            b.arrow(1, "v'_6", "v'_7");
            b.arrow(2, "v'_3", "v'_5");
            b.arrow(2, "v'_4", "v'_6");
            b.arrow(2, "v'_5", "v'_7");
        }
        _ => b.tail("w", 7),
    }
    Ok(b.finish())
}

/// Serialized form of a `P_n` presentation.
#[derive(Clone, Debug, Serialize)]
pub struct PnDump {
    pub n: usize,
    #[serde(rename = "D")]
    pub top: i32,
    pub basis: Vec<BasisElement>,
    pub sq1: Vec<[usize; 2]>,
    pub sq2: Vec<[usize; 2]>,
}

pub fn pn_dump(n: usize, top: i32) -> Result<PnDump> {
    let m = build_pn(n, top)?;
    let pairs = |v: Vec<(usize, usize)>| v.into_iter().map(|(a, b)| [a, b]).collect();
    Ok(PnDump {
        n,
        top,
        basis: m.basis.clone(),
        sq1: pairs(m.sq1_arrows()),
        sq2: pairs(m.sq2_arrows()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(l: &[u8]) -> A1Word {
        A1Word::new(l.to_vec()).unwrap()
    }

    #[test]
    fn multiplication_examples() {
        assert!(a1_multiply(&word(&[1]), &word(&[1])).is_empty());
        assert_eq!(a1_multiply(&word(&[2]), &word(&[2])), vec![word(&[1, 2, 1])]);
        assert!(a1_multiply(&word(&[1, 2]), &word(&[2])).is_empty());
        assert_eq!(a1_multiply(&word(&[2, 1]), &word(&[2, 1])), vec![word(&[1, 2, 1, 2])]);
        assert!(a1_multiply(&word(&[1, 2, 1, 2]), &word(&[1])).is_empty());
        assert!(A1Word::new(vec![3]).is_err());
    }

    #[test]
    fn regular_module_shape() {
        let m = regular_module();
        assert_eq!(m.hilbert(), GradedDims { start: 0, dims: vec![1, 1, 1, 2, 1, 1, 1] });
        assert!(m.validate().passed());
        assert!(m.u1().unwrap().is_zero());
        assert!(m.margolis(0).unwrap().is_zero());
        assert!(m.margolis(1).unwrap().is_zero());
    }

    #[test]
    fn pn_dimensions() {
        let p2 = build_pn(2, 20).unwrap();
        assert_eq!(&p2.hilbert().dims[..8], &[1, 2, 1, 2, 2, 1, 1, 1]);
        assert_eq!(p2.hilbert().start, 2);
        let p3 = build_pn(3, 20).unwrap();
        assert_eq!((p3.dim(6), p3.dim(7)), (2, 2));
        let p4 = build_pn(4, 20).unwrap();
        assert_eq!(p4.hilbert(), GradedDims { start: 7, dims: vec![1; 14] });
        assert_eq!(build_pn(2, 10).unwrap().dim(3), 2);
        assert!(matches!(build_pn(3, 9), Err(Error::TruncationTooSmall { need: 10, .. })));
    }

    #[test]
    fn p2_head_relation() {
        let p2 = build_pn(2, 20).unwrap();
        assert!(p2.validate().passed());
        let u = p2.index_of("u'_2").unwrap();
        let target = p2.index_of("u'_6").unwrap();
        // Sq2 Sq2 and Sq1 Sq2 Sq1 both send u'_2 to u'_6
        for w in [word(&[2, 2]), word(&[1, 2, 1])] {
            let m = p2.word_matrix(&w, 2).unwrap();
            assert_eq!(m.row(0).ones().collect::<Vec<_>>(), vec![p2.position[target]]);
        }
        assert_eq!(p2.position[u], 0);
    }

    #[test]
    fn fabricated_arrow_is_caught() {
        let p1 = build_pn(1, 12).unwrap();
        let mut sq1 = p1.sq1_arrows();
        sq1.push((p1.index_of("t_2").unwrap(), p1.index_of("t_3").unwrap()));
        let bad = A1Module::new(p1.basis().to_vec(), &sq1, &p1.sq2_arrows(), p1.top()).unwrap();
        let report = bad.validate();
        assert!(!report.passed());
        assert_eq!(report.violations[0], Violation { relation: "Sq1 Sq1 = 0".into(), degree: 1 });
        assert!(matches!(bad.u1(), Err(Error::RelationViolated(_))));
    }

    #[test]
    fn suspension() {
        let p1 = build_pn(1, 12).unwrap();
        assert_eq!(p1.suspend(0), p1);
        let s = p1.suspend(8);
        assert_eq!(s.hilbert().start, p1.hilbert().start + 8);
        assert_eq!(s.hilbert().dims, p1.hilbert().dims);
        let p5 = build_pn(5, 20).unwrap();
        assert_eq!(p5.hilbert(), s.hilbert());
        assert_eq!(p5.sq1_arrows(), s.sq1_arrows());
        assert_eq!(p5.sq2_arrows(), s.sq2_arrows());
        for (a, b) in p5.basis().iter().zip(s.basis()) {
            assert_eq!(a.label, format!("S^8 {}", b.label));
        }
    }

    #[test]
    fn u1_of_pn() {
        assert_eq!(build_pn(1, 20).unwrap().u1().unwrap().nonzero(), vec![(1, 1)]);
        assert_eq!(build_pn(2, 20).unwrap().u1().unwrap().nonzero(), vec![(2, 1)]);
        assert!(build_pn(3, 20).unwrap().u1().unwrap().is_zero());
        assert!(build_pn(4, 20).unwrap().u1().unwrap().is_zero());
        assert_eq!(build_pn(6, 28).unwrap().u1().unwrap().nonzero(), vec![(10, 1)]);
    }

    #[test]
    fn margolis_of_p1() {
        let p1 = build_pn(1, 24).unwrap();
        assert_eq!(p1.margolis(1).unwrap().nonzero(), vec![(2, 1)]);
        assert!(p1.margolis(0).unwrap().is_zero());
        let q1 = p1.margolis_q(1, 1).unwrap();
        assert_eq!(q1.n_cols(), 1);
        assert!(q1.get(0, 0));
    }

    #[test]
    fn dump_lists_head_arrows() {
        let dump = pn_dump(2, 12).unwrap();
        let label = |i: usize| dump.basis[i].label.as_str();
        let sq1: Vec<(&str, &str)> = dump.sq1.iter().map(|[a, b]| (label(*a), label(*b))).collect();
        let sq2: Vec<(&str, &str)> = dump.sq2.iter().map(|[a, b]| (label(*a), label(*b))).collect();
        assert!(sq1.contains(&("u'_2", "u'_3")));
        assert!(sq2.contains(&("u'_2", "u_4")));
        assert!(sq2.contains(&("u_4", "u'_6")));
        let json = serde_json::to_value(&dump).unwrap();
        assert_eq!(json["D"], 12);
        assert_eq!(json["basis"][0]["label"], "u'_2");
    }
}
