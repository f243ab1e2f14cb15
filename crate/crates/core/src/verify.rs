//! Named verification suites binding brute-force dimension counts to the
//! closed-form generating functions.

use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::a1::{a1_basis, a1_multiply, build_pn, margolis_dims, regular_module, A1Action, A1Word};
use crate::error::{Error, Result};
use crate::gf2::GF2Matrix;
use crate::hit::{self, sweep};
use crate::poly::{apply_sq, Limits, Monomial, PolyElement, PolyModule};
use crate::series::{a1_hilbert, named_series, p_slice, series_equal, IntPoly2, RationalSeries};

pub const SUITES: &[&str] = &[
    "u0-vanishing",
    "u1-theorem",
    "d0-series",
    "dn1-series",
    "unhit-fg",
    "pn-structure",
    "pn-lemma",
    "free-lemma",
    "margolis-decomp",
    "adem-cartan",
    "series-identities",
];

/// Optional overrides of a suite's default window.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct Window {
    pub n_max: Option<usize>,
    pub d_max: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub description: String,
    /// The statement being verified.
    pub claim: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub n_max: usize,
    pub d_max: usize,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl VerifyReport {
    fn new(suite: &str, n_max: usize, d_max: usize) -> Self {
        VerifyReport { suite: suite.to_string(), n_max, d_max, checks: Vec::new(), passed: true }
    }

    fn check(&mut self, description: impl Into<String>, claim: &str, expected: String, actual: String) {
        let passed = expected == actual;
        self.passed &= passed;
        self.checks.push(Check {
            description: description.into(),
            claim: claim.to_string(),
            expected,
            actual,
            passed,
        });
    }

    fn check_bool(&mut self, description: impl Into<String>, claim: &str, ok: bool, detail: String) {
        let actual = if ok { "true".to_string() } else { format!("false: {detail}") };
        self.check(description, claim, "true".to_string(), actual);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (n <= {}, d <= {})", self.suite, self.n_max, self.d_max)?;
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "[{tag}] {}", c.description)?;
            writeln!(f, "       claim:    {}", c.claim)?;
            if !c.passed {
                writeln!(f, "       expected: {}", c.expected)?;
                writeln!(f, "       actual:   {}", c.actual)?;
            }
        }
        write!(f, "{}: {}", self.suite, if self.passed { "PASS" } else { "FAIL" })
    }
}

fn list<T: fmt::Debug>(items: &[T]) -> String {
    if items.is_empty() {
        "none".to_string()
    } else {
        format!("{items:?}")
    }
}

/// Runs one suite. `limits` guards the polynomial windows.
pub fn run_suite(name: &str, window: Window, limits: Limits) -> Result<VerifyReport> {
    let w = |n: usize, d: usize| (window.n_max.unwrap_or(n), window.d_max.unwrap_or(d));
    match name {
        "u0-vanishing" => {
            let (n, d) = w(5, 20);
            u0_vanishing(n, d, limits)
        }
        "u1-theorem" => {
            let (n, d) = w(6, 18);
            u1_theorem(n, d, limits)
        }
        "d0-series" => {
            let (n, d) = w(5, 20);
            d0_series(n, d, limits)
        }
        "dn1-series" => {
            let (n, d) = w(4, 16);
            dn1_series(n, d, limits)
        }
        "unhit-fg" => {
            let (n, d) = w(4, 16);
            unhit_fg(n, d, limits)
        }
        "pn-structure" => {
            let (n, d) = w(12, 40);
            pn_structure(n, d as i32)
        }
        "pn-lemma" => {
            let (n, d) = w(12, 40);
            pn_lemma(n, d as i32)
        }
        "free-lemma" => free_lemma(),
        "margolis-decomp" => {
            let (n, d) = w(4, 14);
            margolis_decomp(n, d, limits)
        }
        "adem-cartan" => {
            let (n, d) = w(4, 12);
            adem_cartan(n, d, limits)
        }
        "series-identities" => {
            let (n, _) = w(4, 0);
            series_identities(n)
        }
        _ => Err(Error::Invalid(format!("unknown suite '{name}'; known suites: {}", SUITES.join(", ")))),
    }
}

fn u0_vanishing(n_max: usize, d_max: usize, limits: Limits) -> Result<VerifyReport> {
    let mut r = VerifyReport::new("u0-vanishing", n_max, d_max);
    let table = sweep(0, 1..=n_max, 1..=d_max, false, limits)?;
    r.check(
        "dim U(0)^{n,d} on the window",
        "U_P(0) = 0",
        list::<(usize, usize, usize)>(&[]),
        list(&table.nonzero_u()),
    );
    Ok(r)
}

fn u1_theorem(n_max: usize, d_max: usize, limits: Limits) -> Result<VerifyReport> {
    let mut r = VerifyReport::new("u1-theorem", n_max, d_max);
    let table = sweep(1, 1..=n_max, 1..=d_max, false, limits)?;
    let coeffs = named_series("u1", None)?.expand(n_max as u32, d_max as i32)?;
    let mut expected = Vec::new();
    for n in 1..=n_max {
        for d in 1..=d_max {
            let c = coeffs.get(n as u32, d as i32);
            if c != 0 {
                expected.push((n, d, c as usize));
            }
        }
    }
    r.check(
        "nonzero cells of dim U(1)^{n,d} against st(1+st)/(1-s^4t^8)",
        "U_P(1) is F2 exactly in bidegrees (4m+r, 8m+r), r in {1,2}",
        list(&expected),
        list(&table.nonzero_u()),
    );
    Ok(r)
}

fn d0_series(n_max: usize, d_max: usize, limits: Limits) -> Result<VerifyReport> {
    let mut r = VerifyReport::new("d0-series", n_max, d_max);
    let table = sweep(0, 1..=n_max, 1..=d_max, false, limits)?;
    let d0 = named_series("d0", None)?.expand(n_max as u32, d_max as i32)?;
    let delta0 = named_series("delta0", None)?.expand(n_max as u32, d_max as i32)?;
    let mut bad_hit = Vec::new();
    let mut bad_unhit = Vec::new();
    for c in &table.cells {
        let (n, d) = (c.n as u32, c.d as i32);
        if c.dim_i as i64 != d0.get(n, d) {
            bad_hit.push((c.n, c.d, c.dim_i, d0.get(n, d)));
        }
        if (c.dim_p - c.dim_i) as i64 != delta0.get(n, d) {
            bad_unhit.push((c.n, c.d, c.dim_p - c.dim_i, delta0.get(n, d)));
        }
    }
    r.check(
        "dim I(0)^{n,d} against coefficients of d0",
        "d_0(s,t) = st^2 / ((1+t)(1-t-st))",
        "none".into(),
        list(&bad_hit),
    );
    r.check(
        "dim P/I(0) against coefficients of delta0",
        "H(P / I_P(0)) = st / ((1+t)(1-t-st))",
        "none".into(),
        list(&bad_unhit),
    );
    Ok(r)
}

fn hit_dims(k: u32, n_max: usize, d_max: usize, limits: Limits) -> Result<hit::BidegreeTable> {
    sweep(k, 1..=n_max, 1..=d_max, false, limits)
}

fn dn1_series(n_max: usize, d_max: usize, limits: Limits) -> Result<VerifyReport> {
    let mut r = VerifyReport::new("dn1-series", n_max, d_max);
    let table = hit_dims(1, n_max, d_max, limits)?;
    let d1 = named_series("d1", None)?.expand(n_max as u32, d_max as i32)?;
    let mut bad_single = Vec::new();
    let mut bad_bi = Vec::new();
    for n in 1..=n_max {
        let dn1 = named_series("dn1", Some(n))?.expand(0, d_max as i32)?;
        for d in 1..=d_max {
            let dim = table.cell(n, d).expect("cell in window").dim_i as i64;
            if dim != dn1.get(0, d as i32) {
                bad_single.push((n, d, dim, dn1.get(0, d as i32)));
            }
            if dim != d1.get(n as u32, d as i32) {
                bad_bi.push((n, d, dim, d1.get(n as u32, d as i32)));
            }
        }
    }
    r.check(
        "dim I(1)^{n,d} against t^d coefficient of d_{n,1}(t)",
        "d_{n,1}(t) = (t^{n+1}(1+t^2-t^3-t^6) - t^{2n+3}(1-t)^n Q_{n+1}(t)) / ((1-t)^n (1-t^4)(1+t^3))",
        "none".into(),
        list(&bad_single),
    );
    r.check(
        "dim I(1)^{n,d} against s^n t^d coefficient of d_1(s,t)",
        "d_1(s,t) = st^2 (R_1 - R_2) / ((1-t^4)(1+t^3))",
        "none".into(),
        list(&bad_bi),
    );
    Ok(r)
}

fn unhit_fg(n_max: usize, d_max: usize, limits: Limits) -> Result<VerifyReport> {
    let mut r = VerifyReport::new("unhit-fg", n_max, d_max);
    let table = hit_dims(1, n_max, d_max, limits)?;
    let mut bad = Vec::new();
    let mut bad_delta = Vec::new();
    for n in 1..=n_max {
        let fg = named_series("fn", Some(n))?.add(&named_series("gn", Some(n))?)?.expand(0, d_max as i32)?;
        let delta = named_series("HDelta1n", Some(n))?.expand(0, d_max as i32)?;
        for d in 1..=d_max {
            let c = table.cell(n, d).expect("cell in window");
            let unhit = (c.dim_p - c.dim_i) as i64;
            if unhit != fg.get(0, d as i32) {
                bad.push((n, d, unhit, fg.get(0, d as i32)));
            }
            if unhit != delta.get(0, d as i32) {
                bad_delta.push((n, d, unhit, delta.get(0, d as i32)));
            }
        }
    }
    r.check(
        "dim P^{n,d}/I(1)^{n,d} against f_n(t) + g_n(t)",
        "H(P^{n,*} / I_P(1)^{n,*}) = f_n(t) + g_n(t)",
        "none".into(),
        list(&bad),
    );
    r.check(
        "dim P^{n,d}/I(1)^{n,d} against the closed form of H(Delta(1)_{n,*})",
        "H(Delta(1)_{n,*}) = (t^n + t^{2n+3}(1-t)^{n-1}Q_{n+1}) / ((1-t)^{n-1}(1-t^4)(1+t^3))",
        "none".into(),
        list(&bad_delta),
    );
    Ok(r)
}

fn pn_structure(n_max: usize, top: i32) -> Result<VerifyReport> {
    let mut r = VerifyReport::new("pn-structure", n_max, top as usize);
    for n in 1..=n_max {
        let m = build_pn(n, top)?;
        let report = m.validate();
        r.check_bool(
            format!("P_{n} satisfies the A(1) relations"),
            "the P_n diagrams define A(1)-modules",
            report.passed(),
            list(&report.violations),
        );
        let (_, hi) = m.valid_window();
        let h = m.hilbert();
        let series = named_series("HPn", Some(n))?.expand(0, hi)?;
        let bad: Vec<(i32, usize, i64)> = (0..=hi)
            .filter(|&d| h.get(d) as i64 != series.get(0, d))
            .map(|d| (d, h.get(d), series.get(0, d)))
            .collect();
        r.check(
            format!("H(P_{n}) against t^{{2n}} Q_n(t) / (1-t)"),
            "Q_n(t) = (1-t) H(P_n) / t^{2n}",
            "none".into(),
            list(&bad),
        );
    }
    Ok(r)
}

/// Degree of the unique `U(1)` class of `P_n`, if any.
pub fn lemma_u1_degree(n: usize) -> Option<i32> {
    let shift = 8 * ((n - 1) / 4) as i32;
    match (n - 1) % 4 {
        0 => Some(shift + 1),
        1 => Some(shift + 2),
        _ => None,
    }
}

fn pn_lemma(n_max: usize, top: i32) -> Result<VerifyReport> {
    let mut r = VerifyReport::new("pn-lemma", n_max, top as usize);
    for n in 1..=n_max {
        let u = build_pn(n, top)?.u1()?;
        let expected: Vec<(i32, usize)> = lemma_u1_degree(n).map(|d| (d, 1)).into_iter().collect();
        r.check(
            format!("U(1) of P_{n}"),
            "U_{P_1}(1) = S^1 F2, U_{P_2}(1) = S^2 F2, U_{P_3}(1) = U_{P_4}(1) = 0, U_{P_{n+4}}(1) = S^8 U_{P_n}(1)",
            list(&expected),
            list(&u.nonzero()),
        );
    }
    Ok(r)
}

fn free_lemma() -> Result<VerifyReport> {
    let mut r = VerifyReport::new("free-lemma", 1, 6);
    let m = regular_module();
    r.check(
        "graded dimensions of A(1)",
        "H(A(1)) = (1+t)(1+t^2)(1+t^3)",
        format!("{:?}", [1, 1, 1, 2, 1, 1, 1]),
        format!("{:?}", m.hilbert().dims),
    );
    r.check_bool("A(1) presentation satisfies its relations", "A(1) is an algebra", m.validate().passed(), String::new());
    r.check("U(1) of the free module A(1)", "U_F(k) = 0 for F free", "none".into(), list(&m.u1()?.nonzero()));
    for i in 0..2 {
        r.check(
            format!("Margolis Q{i} homology of A(1)"),
            "free modules have vanishing Margolis homology",
            "none".into(),
            list(&m.margolis(i)?.nonzero()),
        );
    }
    Ok(r)
}

fn margolis_decomp(n_max: usize, d_max: usize, limits: Limits) -> Result<VerifyReport> {
    let mut r = VerifyReport::new("margolis-decomp", n_max, d_max);
    limits.check(n_max, d_max)?;
    for n in 1..=n_max {
        let poly = PolyModule::with_limits(n, true, Limits { max_n: limits.max_n, max_d: d_max + 8 })?;
        let top = (d_max as i32 + 3).max(2 * n as i32 + 4);
        let pn = build_pn(n, top)?;
        for i in 0..2u8 {
            let a = margolis_dims(&poly, i, 0, d_max as i32)?;
            let b = pn.margolis(i)?;
            let b: Vec<(i32, usize)> = b.nonzero().into_iter().filter(|&(d, _)| d <= d_max as i32).collect();
            r.check(
                format!("H(Q{i}) of P~^(x{n}) against H(Q{i}) of P_{n}"),
                "P~^(x n) = P_n + F_n with F_n free",
                list(&b),
                list(&a.nonzero()),
            );
        }
    }
    Ok(r)
}

fn adem_cartan(n_max: usize, d_max: usize, limits: Limits) -> Result<VerifyReport> {
    let mut r = VerifyReport::new("adem-cartan", n_max, d_max);
    limits.check(n_max, d_max)?;
    let room = Limits { max_n: limits.max_n.max(2 * n_max), max_d: limits.max_d.max(3 * d_max) };

    let mut adem_bad = Vec::new();
    let mut sq3_bad = Vec::new();
    for n in 1..=n_max {
        let module = PolyModule::with_limits(n, true, room)?;
        for d in 0..=d_max {
            for m in [1usize, 2, 4] {
                let comp = module.sq_matrix(m, d)?.compose(&module.sq_matrix(2 * m - 1, d + m)?)?;
                if !comp.is_zero() {
                    adem_bad.push((m, n, d));
                }
            }
            let sq3 = module.sq_matrix(3, d)?;
            let sq1sq2 = module.sq_matrix(2, d)?.compose(&module.sq_matrix(1, d + 2)?)?;
            if sq3 != sq1sq2 {
                sq3_bad.push((n, d));
            }
        }
    }
    r.check(
        "Sq^{2m-1} Sq^m = 0 as matrices, m in {1,2,4}",
        "Sq^{2m-1} Sq^m = 0, hence I(k) <= D(k)",
        "none".into(),
        list(&adem_bad),
    );
    r.check("Sq^3 = Sq^1 Sq^2 as matrices", "Sq^1 Sq^2 = Sq^3", "none".into(), list(&sq3_bad));

    let cartan_bad = cartan_random(200, n_max, d_max, 0x5eed)?;
    r.check(
        "200 random Cartan product checks",
        "Sq^k(fg) = sum_{i+j=k} Sq^i f Sq^j g",
        "none".into(),
        list(&cartan_bad),
    );

    let mut unstable_bad = Vec::new();
    for n in 1..=n_max {
        let module = PolyModule::with_limits(n, true, room)?;
        for d in n..=d_max {
            for m in module.basis(d)? {
                let p = PolyElement::monomial(m.clone());
                if !apply_sq(d + 1, &p).is_zero() || !apply_sq(d + 2, &p).is_zero() {
                    unstable_bad.push(m.tuple_string());
                }
                if apply_sq(d, &p) != PolyElement::monomial(m.square()) {
                    unstable_bad.push(m.tuple_string());
                }
            }
        }
    }
    r.check(
        "instability: Sq^k m = 0 for k > deg m, Sq^{deg m} m = m^2",
        "unstable action on cohomology",
        "none".into(),
        list(&unstable_bad),
    );

    let faithful_bad = a1_table_against_action(&PolyModule::with_limits(2, true, room)?, 12)?;
    r.check(
        "A(1) multiplication table against the action on P~^(x2), d <= 12",
        "A(1) = <Sq^1, Sq^2>, with Sq^1 Sq^1 = 0 and Sq^3 Sq^2 = 0",
        "none".into(),
        list(&faithful_bad),
    );
    Ok(r)
}

/// Pairs `(a, b)` of basis words, with a source degree, where the product `a b`
/// computed in A(1) acts differently from "b, then a" on `module`.
pub fn a1_table_against_action<M: A1Action>(module: &M, d_max: i32) -> Result<Vec<(String, String, i32)>> {
    let mut bad = Vec::new();
    let basis = a1_basis();
    for a in &basis {
        for b in &basis {
            let cat = A1Word::new(a.letters().iter().chain(b.letters()).copied().collect())?;
            for d in 0..=d_max {
                let direct = module.word_matrix(&cat, d)?;
                let mut via_table = GF2Matrix::zeros(direct.n_rows(), direct.n_cols());
                for p in a1_multiply(a, b) {
                    via_table = via_table.add(&module.word_matrix(&p, d)?)?;
                }
                if direct != via_table {
                    bad.push((a.to_string(), b.to_string(), d));
                }
            }
        }
    }
    Ok(bad)
}

fn random_monomial(rng: &mut StdRng, n_max: usize, d_max: usize) -> Monomial {
    let n = rng.gen_range(1..=n_max);
    let d = rng.gen_range(n..=d_max.max(n));
    // random composition of d into n positive parts
    let mut cuts: Vec<u32> = rand::seq::index::sample(rng, d - 1, n - 1).into_iter().map(|c| c as u32 + 1).collect();
    cuts.sort_unstable();
    let mut prev = 0;
    let mut exps = Vec::with_capacity(n);
    for c in cuts {
        exps.push(c - prev);
        prev = c;
    }
    exps.push(d as u32 - prev);
    Monomial::new(exps)
}

/// Compares `Sq^k(f g)` with the Cartan sum on `trials` random pairs.
/// Returns the failing `(f, g, k)` triples.
pub fn cartan_random(trials: usize, n_max: usize, d_max: usize, seed: u64) -> Result<Vec<(String, String, usize)>> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for _ in 0..trials {
        let f = PolyElement::monomial(random_monomial(&mut rng, n_max, d_max));
        let g = PolyElement::monomial(random_monomial(&mut rng, n_max, d_max));
        let k = rng.gen_range(0..=f.bidegree().1 + g.bidegree().1);
        let lhs = apply_sq(k, &f.concat(&g));
        let mut rhs = PolyElement::zero(lhs.bidegree().0, lhs.bidegree().1);
        for i in 0..=k {
            rhs = rhs.add(&apply_sq(i, &f).concat(&apply_sq(k - i, &g)))?;
        }
        if lhs != rhs {
            bad.push((f.to_string(), g.to_string(), k));
        }
    }
    Ok(bad)
}

fn series_identities(n_max: usize) -> Result<VerifyReport> {
    let mut r = VerifyReport::new("series-identities", n_max, 0);
    let hp = named_series("HP", None)?;
    let d0 = named_series("d0", None)?;
    let lhs = d0.mul(&RationalSeries::laurent_t(&[(0, 1), (-1, 1)])?)?;
    r.check("d0 (1 + t^-1) = HP, exact", "d_0 + t^{-1} d_0 = st/(1-t-st)", "true".into(), series_equal(&lhs, &hp)?.to_string());

    let delta0 = named_series("delta0", None)?;
    r.check(
        "HP - d0 = delta0, exact",
        "H(P / I_P(0)) = H(P) - d_0",
        "true".into(),
        series_equal(&hp.sub(&d0)?, &delta0)?.to_string(),
    );

    for n in 0..=3 {
        let lhs = named_series("HFn'", Some(n))?;
        let rhs = named_series("HPn", Some(n))?.add(&RationalSeries::monomial(0, 1).mul(&named_series("HPn", Some(n + 1))?)?)?;
        r.check(
            format!("H(F'_{n}) = H(P_{n}) + t H(P_{})", n + 1),
            "0 -> S P_{n+1} -> F'_n -> P_n -> 0",
            "true".into(),
            series_equal(&lhs, &rhs)?.to_string(),
        );
    }
    for n in 1..=n_max {
        let sum = named_series("HDelta1n", Some(n))?.add(&named_series("dn1", Some(n))?)?;
        r.check(
            format!("H(Delta(1)_{n}) + d_{{{n},1}} = (t/(1-t))^{n}"),
            "H(I_P(1)^{n,*}) = H(P^{n,*}) - H(P^{n,*} / I_P(1)^{n,*})",
            "true".into(),
            series_equal(&sum, &p_slice(n)?)?.to_string(),
        );
        let fg = named_series("fn", Some(n))?.add(&named_series("gn", Some(n))?)?;
        r.check(
            format!("f_{n} + g_{n} = H(Delta(1)_{n})"),
            "H(P^{n,*} / I_P(1)^{n,*}) = f_n(t) + g_n(t)",
            "true".into(),
            series_equal(&fg, &named_series("HDelta1n", Some(n))?)?.to_string(),
        );
    }

    let reg = regular_module().hilbert();
    let mut from_module = IntPoly2::zero();
    for d in reg.degrees() {
        from_module = from_module.add(&IntPoly2::monomial(reg.get(d) as i64, 0, d as u32))?;
    }
    r.check(
        "Hilbert series of the A(1) presentation",
        "H(A(1)) = (1+t)(1+t^2)(1+t^3)",
        "true".into(),
        series_equal(&RationalSeries::poly(from_module), &a1_hilbert())?.to_string(),
    );

    // d1 against the slices dn1, on a box (the sum over n is infinite)
    let (s_box, t_box) = (6u32, 24i32);
    let d1 = named_series("d1", None)?.expand(s_box, t_box)?;
    let mut bad = Vec::new();
    for n in 1..=s_box {
        let slice = named_series("dn1", Some(n as usize))?.expand(0, t_box)?;
        for d in 0..=t_box {
            if d1.get(n, d) != slice.get(0, d) {
                bad.push((n, d));
            }
        }
    }
    r.check(
        format!("sum_n s^n d_{{n,1}}(t) = d_1(s,t) on the box n <= {s_box}, d <= {t_box} (box-verified)"),
        "d_1(s,t) assembled from d_{n,1}(t)",
        "none".into(),
        list(&bad),
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma_degrees() {
        let got: Vec<Option<i32>> = (1..=9).map(lemma_u1_degree).collect();
        assert_eq!(got, vec![Some(1), Some(2), None, None, Some(9), Some(10), None, None, Some(17)]);
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", Window::default(), Limits::default()).is_err());
    }

    #[test]
    fn failing_check_marks_report() {
        let mut r = VerifyReport::new("x", 1, 1);
        r.check("a", "c", "1".into(), "1".into());
        assert!(r.passed);
        r.check("b", "c", "1".into(), "2".into());
        assert!(!r.passed);
        assert!(r.to_string().contains("[FAIL] b"));
    }

    #[test]
    fn cartan_small() {
        assert!(cartan_random(50, 3, 8, 7).unwrap().is_empty());
    }
}
