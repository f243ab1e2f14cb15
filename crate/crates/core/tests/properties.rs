use a1hit_core::a1::build_pn;
use a1hit_core::hit::{cell_spaces, SWEEP_LIMITS};
use a1hit_core::poly::{Limits, PolyModule};
use a1hit_core::series::{named_series, CATALOG};
use a1hit_core::verify::a1_table_against_action;
use a1hit_core::{BitRow, GF2Matrix, Subspace};
use proptest::prelude::*;

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = GF2Matrix> {
    (0..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(0u8..2, c), r)
            .prop_map(move |rows| if rows.is_empty() { GF2Matrix::zeros(0, c) } else { GF2Matrix::from_dense(&rows) })
    })
}

fn subspace(ambient: usize, max_gens: usize) -> impl Strategy<Value = Subspace> {
    prop::collection::vec(prop::collection::vec(0u8..2, ambient), 0..=max_gens).prop_map(move |vs| {
        Subspace::from_vectors(ambient, vs.iter().map(|v| BitRow::from_bits(v))).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rref_is_idempotent(m in matrix(12, 80)) {
        let once = m.rref();
        let twice = once.echelon.rref();
        prop_assert_eq!(&once.echelon, &twice.echelon);
        prop_assert_eq!(once.rank, twice.rank);
    }

    #[test]
    fn rank_nullity(m in matrix(12, 80)) {
        prop_assert_eq!(m.rank() + m.kernel_basis().dim(), m.n_rows());
        prop_assert_eq!(m.image_basis().dim(), m.rank());
    }

    #[test]
    fn kernel_is_killed(m in matrix(10, 70)) {
        for v in m.kernel_basis().basis() {
            let image = GF2Matrix::from_rows(m.n_rows(), vec![v.clone()]).unwrap().compose(&m).unwrap();
            prop_assert!(image.is_zero());
        }
    }

    #[test]
    fn sum_laws(a in subspace(70, 6), b in subspace(70, 6), c in subspace(70, 6)) {
        let ab = a.sum(&b).unwrap();
        prop_assert_eq!(&ab, &b.sum(&a).unwrap());
        prop_assert_eq!(&ab.sum(&c).unwrap(), &a.sum(&b.sum(&c).unwrap()).unwrap());
        prop_assert_eq!(&a.sum(&a).unwrap(), &a);
        prop_assert!(ab.contains(&a) && ab.contains(&b));
        prop_assert!(ab.dim() <= a.dim() + b.dim());
    }

    #[test]
    fn containment_both_ways_is_equality(a in subspace(20, 5), b in subspace(20, 5)) {
        prop_assert_eq!(a.contains(&b) && b.contains(&a), a == b);
    }

    #[test]
    fn coset_count(a in subspace(66, 5), b in subspace(66, 5)) {
        let big = a.sum(&b).unwrap();
        let reps = big.coset_reps(&a).unwrap();
        prop_assert_eq!(reps.len(), big.dim() - a.dim());
        let all = Subspace::from_vectors(66, a.basis().iter().cloned().chain(reps)).unwrap();
        prop_assert_eq!(all, big);
    }

    #[test]
    fn filtrations_grow(n in 1usize..=4, d in 1usize..=14, k in 0u32..2) {
        let lo = cell_spaces(k, n, d, SWEEP_LIMITS).unwrap();
        let hi = cell_spaces(k + 1, n, d, SWEEP_LIMITS).unwrap();
        prop_assert!(hi.hit.contains(&lo.hit));
        prop_assert!(hi.kernel.contains(&lo.kernel));
    }

    #[test]
    fn hit_inside_spike_kernel(n in 1usize..=4, d in 1usize..=14, k in 0u32..=2) {
        let s = cell_spaces(k, n, d, SWEEP_LIMITS).unwrap();
        prop_assert!(s.kernel.check_contains(&s.hit).is_ok());
    }
}

#[test]
fn a1_table_acts_on_two_variables() {
    let module = PolyModule::with_limits(2, true, Limits { max_n: 8, max_d: 24 }).unwrap();
    assert_eq!(a1_table_against_action(&module, 12).unwrap(), Vec::<(String, String, i32)>::new());
}

#[test]
fn catalog_series_have_nonnegative_coefficients() {
    for &name in CATALOG {
        // signed by construction
        if matches!(name, "Qn" | "R1" | "R2") {
            continue;
        }
        for n in [None, Some(1), Some(2), Some(3), Some(4), Some(5)] {
            let Ok(series) = named_series(name, n) else { continue };
            let table = series.expand(6, 30).unwrap();
            for (s, t, c) in table.entries(6) {
                assert!(c >= 0, "{name} {n:?}: coefficient {c} at s^{s} t^{t}");
            }
        }
    }
}

#[test]
fn pn_hilbert_matches_catalog() {
    for n in 1..=12 {
        let m = build_pn(n, 40).unwrap();
        let (_, hi) = m.valid_window();
        let series = named_series("HPn", Some(n)).unwrap().expand(0, hi).unwrap();
        let h = m.hilbert();
        for d in 0..=hi {
            assert_eq!(h.get(d) as i64, series.get(0, d), "P_{n} degree {d}");
        }
    }
}
