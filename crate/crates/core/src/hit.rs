//! Hit subspaces `I(k)`, spike-kernel subspaces `D(k)` and the quotient
//! `U(k) = D(k) / I(k)` in each bidegree of the reduced polynomial algebra.
//!
//! `I(k)^{n,d}` is the sum of the images of `Sq^(2^i)` landing in degree `d`
//! for `i <= k`; `D(k)^{n,d}` is the sum of the kernels of the spike squares
//! `Sq^(2^(i+1) - 1)` leaving degree `d`. The relation `Sq^(2m-1) Sq^m = 0`
//! forces `I(k) <= D(k)`, which every cell asserts before taking the quotient.

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::Subspace;
use crate::poly::{Limits, PolyElement, PolyModule};

/// Default window guard for sweeps.
pub const SWEEP_LIMITS: Limits = Limits { max_n: 8, max_d: 32 };

fn spike(i: u32) -> usize {
    (1usize << (i + 1)) - 1
}

/// Poly module for `n` variables, with room for the spike squares leaving degree `max_d`.
fn module_for(k: u32, n: usize, limits: Limits) -> Result<PolyModule> {
    let room = Limits { max_n: limits.max_n, max_d: limits.max_d + spike(k) };
    PolyModule::with_limits(n, true, room)
}

fn hit_space_in(k: u32, module: &PolyModule, d: usize) -> Result<Subspace> {
    let mut space = Subspace::zero(module.dim(d));
    for i in 0..=k {
        let step = 1usize << i;
        let Some(src) = d.checked_sub(step) else { continue };
        if module.dim(src) == 0 {
            continue;
        }
        space = space.sum(&module.sq_matrix(step, src)?.image_basis())?;
    }
    Ok(space)
}

fn spike_kernel_space_in(k: u32, module: &PolyModule, d: usize) -> Result<Subspace> {
    let mut space = Subspace::zero(module.dim(d));
    for i in 0..=k {
        if space.dim() == space.ambient_dim() {
            break;
        }
        space = space.sum(&module.sq_matrix(spike(i), d)?.kernel_basis())?;
    }
    Ok(space)
}

/// `I(k)^{n,d}`.
pub fn hit_space(k: u32, n: usize, d: usize) -> Result<Subspace> {
    hit_space_in(k, &module_for(k, n, Limits::default())?, d)
}

/// `D(k)^{n,d}`.
pub fn spike_kernel_space(k: u32, n: usize, d: usize) -> Result<Subspace> {
    spike_kernel_space_in(k, &module_for(k, n, Limits::default())?, d)
}

/// Dimension of the indecomposable quotient `P^{n,d} / I(k)^{n,d}`.
pub fn unhit_dim(k: u32, n: usize, d: usize) -> Result<usize> {
    let module = module_for(k, n, Limits::default())?;
    Ok(module.dim(d) - hit_space_in(k, &module, d)?.dim())
}

/// One bidegree of a sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BidegreeCell {
    pub n: usize,
    pub d: usize,
    pub k: u32,
    pub dim_p: usize,
    pub dim_i: usize,
    pub dim_d: usize,
    pub dim_u: usize,
    /// `d < 2^(k+1)`: the class can survive for degree reasons alone.
    pub degenerate: bool,
    pub representatives: Option<Vec<PolyElement>>,
}

impl Serialize for BidegreeCell {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let reps: Vec<String> = self
            .representatives
            .iter()
            .flatten()
            .map(ToString::to_string)
            .collect();
        let mut s = serializer.serialize_struct("BidegreeCell", 8)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("d", &self.d)?;
        s.serialize_field("dimP", &self.dim_p)?;
        s.serialize_field("dimI", &self.dim_i)?;
        s.serialize_field("dimD", &self.dim_d)?;
        s.serialize_field("dimU", &self.dim_u)?;
        s.serialize_field("degenerate", &self.degenerate)?;
        s.serialize_field("reps", &reps)?;
        s.end()
    }
}

/// Spaces computed for one cell, kept for callers that need membership tests.
pub struct CellSpaces {
    pub module: PolyModule,
    pub hit: Subspace,
    pub kernel: Subspace,
}

pub fn cell_spaces(k: u32, n: usize, d: usize, limits: Limits) -> Result<CellSpaces> {
    limits.check(n, d)?;
    let module = module_for(k, n, limits)?;
    let hit = hit_space_in(k, &module, d)?;
    let kernel = spike_kernel_space_in(k, &module, d)?;
    Ok(CellSpaces { module, hit, kernel })
}

fn cell_with_limits(k: u32, n: usize, d: usize, want_reps: bool, limits: Limits) -> Result<BidegreeCell> {
    let CellSpaces { module, hit, kernel } = cell_spaces(k, n, d, limits)?;
    kernel.check_contains(&hit)?;
    let representatives = if want_reps {
        let reps = kernel.coset_reps(&hit)?;
        Some(reps.iter().map(|r| module.row_to_element(d, r)).collect::<Result<Vec<_>>>()?)
    } else {
        None
    };
    Ok(BidegreeCell {
        n,
        d,
        k,
        dim_p: module.dim(d),
        dim_i: hit.dim(),
        dim_d: kernel.dim(),
        dim_u: kernel.dim() - hit.dim(),
        degenerate: d < (1usize << (k + 1)),
        representatives,
    })
}

/// `U(k)^{n,d}` with dimensions and, optionally, canonical coset representatives.
pub fn u_cell(k: u32, n: usize, d: usize, want_reps: bool) -> Result<BidegreeCell> {
    cell_with_limits(k, n, d, want_reps, Limits::default())
}

/// Results of a sweep over a rectangular window, ordered by `(n, d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BidegreeTable {
    pub k: u32,
    pub cells: Vec<BidegreeCell>,
}

impl BidegreeTable {
    pub fn cell(&self, n: usize, d: usize) -> Option<&BidegreeCell> {
        self.cells.iter().find(|c| c.n == n && c.d == d)
    }

    pub fn nonzero_u(&self) -> Vec<(usize, usize, usize)> {
        self.cells.iter().filter(|c| c.dim_u > 0).map(|c| (c.n, c.d, c.dim_u)).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,d,dimP,dimI,dimD,dimU,degenerate\n");
        for c in &self.cells {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                c.n, c.d, c.dim_p, c.dim_i, c.dim_d, c.dim_u, c.degenerate
            ));
        }
        out
    }
}

/// Evaluates every cell of the window. Cells are independent and computed in
/// parallel; the table is assembled in `(n, d)` order.
pub fn sweep(
    k: u32,
    n_range: RangeInclusive<usize>,
    d_range: RangeInclusive<usize>,
    want_reps: bool,
    limits: Limits,
) -> Result<BidegreeTable> {
    if *n_range.start() == 0 {
        return Err(Error::Invalid("n must start at 1".into()));
    }
    if !n_range.is_empty() && !d_range.is_empty() {
        limits.check(*n_range.end(), *d_range.end())?;
    }
    let coords: Vec<(usize, usize)> =
        n_range.flat_map(|n| d_range.clone().map(move |d| (n, d))).collect();
    let cells = coords
        .into_par_iter()
        .map(|(n, d)| cell_with_limits(k, n, d, want_reps, limits))
        .collect::<Result<Vec<_>>>()?;
    Ok(BidegreeTable { k, cells })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;

    #[test]
    fn hit_examples() {
        assert_eq!(hit_space(0, 1, 2).unwrap().dim(), 1);
        assert_eq!(hit_space(1, 1, 3).unwrap().dim(), 0);
        for n in 1..=4 {
            for d in 0..=n {
                assert_eq!(hit_space(1, n, d).unwrap().dim(), 0, "({n},{d})");
            }
        }
        // Sq1(x1 x2) spans I(0)^{2,3}
        assert_eq!(hit_space(0, 2, 3).unwrap().dim(), 1);
    }

    #[test]
    fn kernel_examples() {
        let k = spike_kernel_space(0, 1, 2).unwrap();
        assert_eq!((k.dim(), k.ambient_dim()), (1, 1));
        let k = spike_kernel_space(1, 2, 2).unwrap();
        assert_eq!(k.dim(), 1);
        assert_eq!(spike_kernel_space(1, 1, 3).unwrap().dim(), 0);
    }

    #[test]
    fn cell_examples() {
        let c = u_cell(1, 1, 1, true).unwrap();
        assert_eq!((c.dim_u, c.degenerate), (1, true));
        assert_eq!(c.representatives.unwrap()[0].to_string(), "x1");

        let c = u_cell(1, 2, 2, true).unwrap();
        assert_eq!(c.dim_u, 1);
        let rep = &c.representatives.unwrap()[0];
        assert_eq!(rep.support().collect::<Vec<_>>(), vec![&Monomial::new(vec![1, 1])]);

        for d in 1..=16 {
            assert_eq!(u_cell(1, 3, d, false).unwrap().dim_u, 0, "d = {d}");
        }
        let c = u_cell(1, 5, 9, false).unwrap();
        assert_eq!((c.dim_u, c.degenerate), (1, false));
    }

    #[test]
    fn unhit_examples() {
        assert_eq!(unhit_dim(1, 1, 3).unwrap(), 1);
        assert_eq!(unhit_dim(1, 1, 5).unwrap(), 0);
        for d in 1..=12 {
            let expected = usize::from([1, 3, 7, 11].contains(&d));
            assert_eq!(unhit_dim(1, 1, d).unwrap(), expected, "d = {d}");
        }
    }

    #[test]
    fn sweep_small_and_guarded() {
        let t = sweep(1, 1..=2, 1..=18, false, SWEEP_LIMITS).unwrap();
        assert_eq!(t.nonzero_u(), vec![(1, 1, 1), (2, 2, 1)]);
        assert!(matches!(sweep(1, 1..=9, 1..=4, false, SWEEP_LIMITS), Err(Error::GuardLimit { .. })));
        let csv = t.to_csv();
        assert!(csv.starts_with("n,d,dimP,dimI,dimD,dimU,degenerate\n1,1,1,0,1,1,true\n"));
    }

    #[test]
    fn json_schema() {
        let t = sweep(1, 1..=1, 1..=1, true, SWEEP_LIMITS).unwrap();
        let v: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(v["k"], 1);
        let cell = &v["cells"][0];
        for key in ["n", "d", "dimP", "dimI", "dimD", "dimU", "degenerate", "reps"] {
            assert!(cell.get(key).is_some(), "missing {key}");
        }
        assert_eq!(cell["reps"][0], "x1");
    }
}
