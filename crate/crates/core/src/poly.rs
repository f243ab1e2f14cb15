//! Monomial bases of F2[x1, ..., xn] and the action of Sq^k on them.
//!
//! Sq^k acts on a single power by `Sq^k x^e = C(e, k) x^(e+k)` and on products
//! by the Cartan formula. In the reduced setting every exponent is at least 1,
//! which realizes the smash product of n copies of RP^infinity.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{BitRow, GF2Matrix};

/// `C(a, b) mod 2` by Lucas' theorem: odd iff `b & (a - b) == 0`.
pub fn binom_mod2(a: u64, b: u64) -> bool {
    b <= a && (b & (a - b)) == 0
}

/// Exact binomial coefficient; `None` on overflow.
fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// Number of compositions of `total` into `parts` positive parts.
fn compositions(total: u64, parts: u64) -> u64 {
    match (total, parts) {
        (0, 0) => 1,
        (_, 0) => 0,
        (t, p) if t < p => 0,
        (t, p) => binomial(t - 1, p - 1).expect("composition count fits in u64"),
    }
}

/// A monomial `x1^a1 ... xn^an`, stored by its exponent vector.
///
/// The derived ordering is lexicographic on exponents, which is the basis
/// order used for every matrix.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn n_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_reduced(&self) -> bool {
        self.0.iter().all(|&e| e >= 1)
    }

    /// Variable-disjoint product: `x1..xn` of `self` followed by the variables of `other`.
    pub fn concat(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn square(&self) -> Monomial {
        Monomial(self.0.iter().map(|e| 2 * e).collect())
    }

    /// Compact form `(a1,...,an)`.
    pub fn tuple_string(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        format!("({})", parts.join(","))
    }

    /// Terms of `Sq^k` applied to this monomial (each with coefficient 1).
    pub fn sq_terms(&self, k: u64) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut shift = vec![0u32; self.0.len()];
        sq_terms_rec(&self.0, k, 0, &mut shift, &mut out);
        out
    }
}

// Enumerates k = k_1 + ... + k_n with C(e_i, k_i) odd, i.e. k_i a bit-submask of e_i.
fn sq_terms_rec(exps: &[u32], remaining: u64, i: usize, shift: &mut [u32], out: &mut Vec<Monomial>) {
    if i == exps.len() {
        if remaining == 0 {
            out.push(Monomial(exps.iter().zip(shift.iter()).map(|(e, s)| e + s).collect()));
        }
        return;
    }
    let e = exps[i];
    let rest: u64 = exps[i + 1..].iter().map(|&x| u64::from(x)).sum();
    // walk submasks of e that are <= remaining
    let mut sub = e;
    loop {
        let ki = u64::from(sub);
        if ki <= remaining && remaining - ki <= rest {
            shift[i] = sub;
            sq_terms_rec(exps, remaining - ki, i + 1, shift, out);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & e;
    }
    shift[i] = 0;
}

impl fmt::Display for Monomial {
    /// `x1^a1 x2^a2 ...`, with `^1` elided and zero exponents omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Bounds on the number of variables and the degree, to keep bases tractable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_n: usize,
    pub max_d: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_n: 12, max_d: 64 }
    }
}

impl Limits {
    pub fn check(&self, n: usize, d: usize) -> Result<()> {
        if n > self.max_n || d > self.max_d {
            return Err(Error::GuardLimit { n, d, max_n: self.max_n, max_d: self.max_d });
        }
        Ok(())
    }
}

/// The polynomial algebra in `n` variables (reduced or not) as a graded module
/// over the Steenrod squares.
#[derive(Clone, Copy, Debug)]
pub struct PolyModule {
    n: usize,
    reduced: bool,
    limits: Limits,
}

impl PolyModule {
    /// The reduced module in `n >= 1` variables with default limits.
    pub fn new(n: usize) -> Result<Self> {
        Self::with_limits(n, true, Limits::default())
    }

    pub fn with_limits(n: usize, reduced: bool, limits: Limits) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("number of variables must be at least 1".into()));
        }
        limits.check(n, 0)?;
        Ok(PolyModule { n, reduced, limits })
    }

    pub fn n_vars(&self) -> usize {
        self.n
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    // Reduced problems in (n, d) are the unreduced ones shifted by one per variable.
    fn positive_total(&self, d: usize) -> u64 {
        if self.reduced {
            d as u64
        } else {
            (d + self.n) as u64
        }
    }

    pub fn dim(&self, d: usize) -> usize {
        compositions(self.positive_total(d), self.n as u64) as usize
    }

    /// Monomials of degree `d` in ascending lexicographic order.
    pub fn basis(&self, d: usize) -> Result<Vec<Monomial>> {
        self.limits.check(self.n, d)?;
        let lo = u32::from(self.reduced);
        let mut out = Vec::with_capacity(self.dim(d));
        let mut cur = vec![0u32; self.n];
        enumerate_rec(self.n, d as u32, lo, 0, &mut cur, &mut out);
        Ok(out)
    }

    /// Position of `m` in `basis(m.degree())`.
    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        if m.n_vars() != self.n || (self.reduced && !m.is_reduced()) {
            return None;
        }
        let off = u64::from(!self.reduced);
        let mut remaining = m.degree() + off * self.n as u64;
        let mut rank = 0u64;
        for (i, &e) in m.exponents().iter().enumerate() {
            let e = u64::from(e) + off;
            let parts_after = (self.n - i - 1) as u64;
            if parts_after == 0 {
                break;
            }
            for v in 1..e {
                rank += compositions(remaining - v, parts_after);
            }
            remaining -= e;
        }
        Some(rank as usize)
    }

    /// Matrix of `Sq^k` from degree `d` to degree `d + k`.
    pub fn sq_matrix(&self, k: usize, d: usize) -> Result<GF2Matrix> {
        self.limits.check(self.n, d + k)?;
        let source = self.basis(d)?;
        let target_dim = self.dim(d + k);
        let rows = source
            .iter()
            .map(|m| {
                let mut row = BitRow::zeros(target_dim);
                for t in m.sq_terms(k as u64) {
                    row.flip(self.index_of(&t).expect("Sq preserves the basis shape"));
                }
                row
            })
            .collect();
        GF2Matrix::from_rows(target_dim, rows)
    }

    pub fn element_to_row(&self, p: &PolyElement) -> Result<BitRow> {
        if p.n != self.n {
            return Err(Error::DimensionMismatch { left: p.n, right: self.n });
        }
        let mut row = BitRow::zeros(self.dim(p.degree));
        for m in &p.support {
            let i = self
                .index_of(m)
                .ok_or_else(|| Error::Invalid(format!("monomial {m} is not a basis element")))?;
            row.flip(i);
        }
        Ok(row)
    }

    pub fn row_to_element(&self, d: usize, row: &BitRow) -> Result<PolyElement> {
        let basis = self.basis(d)?;
        if row.len() != basis.len() {
            return Err(Error::DimensionMismatch { left: row.len(), right: basis.len() });
        }
        Ok(PolyElement {
            n: self.n,
            degree: d,
            support: row.ones().map(|i| basis[i].clone()).collect(),
        })
    }
}

fn enumerate_rec(n: usize, remaining: u32, lo: u32, i: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if i + 1 == n {
        if remaining >= lo {
            cur[i] = remaining;
            out.push(Monomial(cur.clone()));
        }
        return;
    }
    let reserve = lo * (n - i - 1) as u32;
    if remaining < lo + reserve {
        return;
    }
    for e in lo..=remaining - reserve {
        cur[i] = e;
        enumerate_rec(n, remaining - e, lo, i + 1, cur, out);
    }
}

/// All monomials of degree `d` in `n` variables, lexicographically ordered.
pub fn enumerate_basis(n: usize, d: usize, reduced: bool) -> Result<Vec<Monomial>> {
    PolyModule::with_limits(n, reduced, Limits::default())?.basis(d)
}

/// Matrix of `Sq^k` from bidegree `(n, d)` to `(n, d + k)`.
pub fn sq_matrix(k: usize, n: usize, d: usize, reduced: bool) -> Result<GF2Matrix> {
    PolyModule::with_limits(n, reduced, Limits::default())?.sq_matrix(k, d)
}

/// A homogeneous GF(2) polynomial: a formal sum of monomials of one bidegree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyElement {
    n: usize,
    degree: usize,
    support: BTreeSet<Monomial>,
}

impl PolyElement {
    pub fn zero(n: usize, degree: usize) -> Self {
        PolyElement { n, degree, support: BTreeSet::new() }
    }

    /// Sums the given monomials mod 2. All must have `n` variables and degree `degree`.
    pub fn from_monomials<I>(n: usize, degree: usize, monomials: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut p = PolyElement::zero(n, degree);
        for m in monomials {
            if m.n_vars() != n || m.degree() != degree as u64 {
                return Err(Error::Invalid(format!("monomial {m} is not in bidegree ({n},{degree})")));
            }
            p.toggle(m);
        }
        Ok(p)
    }

    pub fn monomial(m: Monomial) -> Self {
        let (n, degree) = (m.n_vars(), m.degree() as usize);
        PolyElement { n, degree, support: BTreeSet::from([m]) }
    }

    fn toggle(&mut self, m: Monomial) {
        if !self.support.remove(&m) {
            self.support.insert(m);
        }
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.n, self.degree)
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.support.iter()
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn add(&self, other: &PolyElement) -> Result<PolyElement> {
        if self.bidegree() != other.bidegree() {
            return Err(Error::Invalid("adding elements of different bidegrees".into()));
        }
        let mut out = self.clone();
        for m in &other.support {
            out.toggle(m.clone());
        }
        Ok(out)
    }

    /// Variable-disjoint product, landing in `n1 + n2` variables.
    pub fn concat(&self, other: &PolyElement) -> PolyElement {
        let mut out = PolyElement::zero(self.n + other.n, self.degree + other.degree);
        for a in &self.support {
            for b in &other.support {
                out.toggle(a.concat(b));
            }
        }
        out
    }
}

/// `Sq^k p`, extended linearly from monomials.
pub fn apply_sq(k: usize, p: &PolyElement) -> PolyElement {
    let mut out = PolyElement::zero(p.n, p.degree + k);
    for m in &p.support {
        for t in m.sq_terms(k as u64) {
            out.toggle(t);
        }
    }
    out
}

impl fmt::Display for PolyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return write!(f, "0");
        }
        for (i, m) in self.support.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}
