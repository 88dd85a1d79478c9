//! The fourteen acceptance criteria. Each returns a [`CriterionReport`] with
//! the compared numbers; none of them panics on a mismatch.

use std::collections::HashMap;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;
use qcox_core::arith::{multinomial, pow};
use qcox_core::factor::{
    count_reduced, dps_cacti_count, dps_relation_sides, enumerate_reduced, fred_formula_pqc, fred_formula_qc,
    hurwitz_number, regular_fred_check_dn,
};
use qcox_core::hurwitz::hurwitz_orbit;
use qcox_core::lengths::{full_refl_length, refl_length};
use qcox_core::pqc::{characterization_in, count_rgs_formula, enumerate_rgs, enumerate_rgs_in, is_parabolic_qc, weighted_cayley, Route};
use qcox_core::table::GroupTable;
use qcox_core::weyl::{abc_degree, pairing_det, pdet_abs, reflection_subgroup_index, WeylType};
use qcox_core::{Element, GroupParams, Reflection, Result};
use rayon::prelude::*;

use crate::counting::{cacti, partitions, standard_permutation, transitive_factorizations, weak_compositions, weighted_tree_sum};
use crate::oracle::{MonoMat, OracleGroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    /// Compared numbers and the first few mismatches.
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2} [{}] {}: {} ({:.1}s)",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

/// Settings shared by the group sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Suite {
    /// Largest group order in the characterization sweep.
    pub max_order: u64,
}

impl Default for Suite {
    fn default() -> Self {
        Suite { max_order: 2000 }
    }
}

/// Collects mismatches, keeping the first few for the report.
#[derive(Default)]
struct Tally {
    checked: usize,
    failures: usize,
    examples: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < 3 {
                self.examples.push(what());
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failures += other.failures;
        for e in other.examples {
            if self.examples.len() < 3 {
                self.examples.push(e);
            }
        }
        self
    }

    fn error(&mut self, e: qcox_core::Error, context: impl fmt::Display) {
        self.check(false, || format!("{context}: error {e}"));
    }

    fn finish(self, id: u8, title: &'static str, summary: String, start: Instant) -> CriterionReport {
        let mut detail = format!("{summary}; {} checks, {} mismatches", self.checked, self.failures);
        if !self.examples.is_empty() {
            detail.push_str(&format!(" [{}]", self.examples.join("; ")));
        }
        CriterionReport { id, title, passed: self.failures == 0 && self.checked > 0, detail, elapsed: start.elapsed() }
    }
}

fn n_cycle(n: usize) -> Element {
    let params = GroupParams::symmetric(n).expect("n ≥ 1");
    Element::new(params, (0..n).map(|k| (k + 1) % n).collect(), vec![0; n]).expect("cycle")
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

/// Well-generated groups G(m,1,n) and G(m,m,n) with `m ≤ 4` and order at
/// most `max_order`, smallest first.
pub fn sweep_groups(max_order: u64) -> Vec<GroupParams> {
    let mut out = Vec::new();
    for m in 1..=4u32 {
        for p in [1, m] {
            if m == 1 && p == 1 && out.iter().any(|g: &GroupParams| g.m() == 1) {
                continue;
            }
            for n in 1.. {
                let params = GroupParams::new(m, p, n).expect("valid parameters");
                match params.order_u64() {
                    Some(order) if order <= max_order => out.push(params),
                    _ => break,
                }
            }
        }
    }
    out.sort_by_key(|g| (g.order_u64(), g.m(), g.p(), g.n()));
    out
}

fn sweep_label(groups: &[GroupParams]) -> String {
    let total: u64 = groups.iter().filter_map(GroupParams::order_u64).sum();
    format!("{} groups, {} elements", groups.len(), total)
}

/// Runs `check` on every element of every sweep group in parallel.
fn sweep(groups: &[GroupParams], check: impl Fn(&GroupTable, &Element, &mut Tally) + Sync) -> Tally {
    groups
        .iter()
        .map(|&params| {
            let table = GroupTable::new(params, usize::MAX).expect("sweep groups are small");
            table
                .elements()
                .par_iter()
                .map(|g| {
                    let mut t = Tally::default();
                    check(&table, g, &mut t);
                    t
                })
                .reduce(Tally::default, Tally::merge)
        })
        .fold(Tally::default(), Tally::merge)
}

pub fn criterion_1() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::default();
    let expected = [1u64, 3, 16, 125, 1296];
    let mut got = Vec::new();
    for (n, &want) in (2..=6).zip(&expected) {
        match count_reduced(&n_cycle(n)) {
            Ok(c) => {
                t.check(c == big(want), || format!("n={n}: {c} ≠ {want}"));
                got.push(c.to_string());
            }
            Err(e) => t.error(e, format!("n={n}")),
        }
    }
    t.finish(1, "n-cycle factorizations", format!("counts {} vs 1, 3, 16, 125, 1296", got.join(", ")), start)
}

pub fn criterion_2() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::default();
    for (m, n) in [(2, 2), (3, 2), (2, 3), (3, 3), (4, 2)] {
        let params = GroupParams::new(m, 1, n).expect("valid");
        let want = pow(n as u64, n as u64);
        for g in params.elements(usize::MAX).expect("small group") {
            if !is_parabolic_qc(&g).is_ok_and(|v| v.is_qc) {
                continue;
            }
            match count_reduced(&g) {
                Ok(c) => t.check(c == want, || format!("{g}: {c} ≠ {want}")),
                Err(e) => t.error(e, &g),
            }
        }
    }
    t.finish(2, "G(m,1,n) quasi-Coxeter counts = n^n", "every quasi-Coxeter element of five groups".into(), start)
}

/// `m(n−1)·binom(n−2; a−1, b−1)·a^a·b^b`.
fn mmn_formula(m: u64, a: u64, b: u64) -> BigUint {
    let n = a + b;
    big(m * (n - 1)) * multinomial(&[a - 1, b - 1]) * pow(a, a) * pow(b, b)
}

pub fn criterion_3() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut classes: HashMap<(u32, usize, usize, usize), (BigUint, BigUint)> = HashMap::new();
    for (m, n) in [(2, 3), (2, 4), (3, 3), (5, 2)] {
        let params = GroupParams::new(m, m, n).expect("valid");
        for g in params.elements(usize::MAX).expect("small group") {
            if !is_parabolic_qc(&g).is_ok_and(|v| v.is_qc) {
                continue;
            }
            let mut lens: Vec<usize> = g.colored_cycles().cycles.iter().map(|c| c.len()).collect();
            lens.sort_unstable();
            if lens.len() != 2 {
                t.check(false, || format!("{g}: quasi-Coxeter with {} cycles", lens.len()));
                continue;
            }
            let want = mmn_formula(m as u64, lens[0] as u64, lens[1] as u64);
            match (enumerate_reduced(&g), fred_formula_qc(&g)) {
                (Ok(red), Ok(formula)) => {
                    let got = big(red.len() as u64);
                    t.check(got == want && formula == want, || format!("{g}: enumerated {got}, formula {want}"));
                    classes.insert((m, n, lens[0], lens[1]), (got, want));
                }
                (Err(e), _) | (_, Err(e)) => t.error(e, &g),
            }
        }
    }
    let i2_5 = classes.get(&(5, 2, 1, 1)).map(|x| x.0.to_string()).unwrap_or_default();
    let d4 = classes.get(&(2, 4, 2, 2)).map(|x| x.0.to_string()).unwrap_or_default();
    t.check(i2_5 == "5", || format!("I2(5) gave {i2_5}"));
    t.check(d4 == "192", || format!("D4(2,2) gave {d4}"));
    t.finish(3, "G(m,m,n) quasi-Coxeter counts", format!("{} classes; I2(5) → {i2_5}, D4(2,2) → {d4}", classes.len()), start)
}

pub fn criterion_4() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut shown = Vec::new();
    for n in 1..=5 {
        for lambda in partitions(n) {
            let brute = transitive_factorizations(&lambda);
            match hurwitz_number(&lambda) {
                Ok(h) => {
                    t.check(h == brute, || format!("{lambda:?}: formula {h}, brute force {brute}"));
                    if n == 5 {
                        shown.push(format!("{lambda:?}→{h}"));
                    }
                }
                Err(e) => t.error(e, format!("{lambda:?}")),
            }
        }
    }
    t.finish(4, "Hurwitz numbers", format!("all λ ⊢ n ≤ 5; n = 5: {}", shown.join(" ")), start)
}

pub fn criterion_5(suite: Suite) -> CriterionReport {
    let start = Instant::now();
    let groups = sweep_groups(suite.max_order);
    let t = sweep(&groups, |table, g, t| match characterization_in(table, g) {
        Ok(v) => t.check(v.all_agree(), || format!("{g}: {:?} vs is_pqc={}", v.witnesses, v.is_pqc)),
        Err(e) => t.error(e, g),
    });
    t.finish(5, "four pqc characterizations agree", sweep_label(&groups), start)
}

pub fn criterion_6(suite: Suite) -> CriterionReport {
    let start = Instant::now();
    let groups = sweep_groups(suite.max_order);
    let t = sweep(&groups, |table, g, t| {
        if !is_parabolic_qc(g).is_ok_and(|v| v.is_pqc) {
            return;
        }
        let counts = (|| -> Result<(usize, usize, BigUint)> {
            Ok((
                enumerate_rgs_in(table, g, Route::Brute)?.len(),
                enumerate_rgs_in(table, g, Route::Graph)?.len(),
                count_rgs_formula(g)?,
            ))
        })();
        match counts {
            Ok((brute, graph, formula)) => t.check(brute == graph && big(brute as u64) == formula, || {
                format!("{g}: brute {brute}, graph {graph}, formula {formula}")
            }),
            Err(e) => t.error(e, g),
        }
    });
    t.finish(6, "relative generating set counts", format!("pqc elements of {}", sweep_label(&groups)), start)
}

pub fn criterion_7(suite: Suite) -> CriterionReport {
    let start = Instant::now();
    let groups = sweep_groups(suite.max_order);
    let t = groups
        .par_iter()
        .map(|&params| {
            let mut t = Tally::default();
            let oracle = OracleGroup::new(params);
            let dist = oracle.reflection_distances();
            for (k, x) in oracle.elements.iter().enumerate() {
                let g = x.to_element(params);
                match refl_length(&g) {
                    Ok(len) => t.check(len == dist[k], || format!("{g}: formula {len}, search {}", dist[k])),
                    Err(e) => t.error(e, &g),
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);
    t.finish(7, "reflection length = Cayley-graph distance", sweep_label(&groups), start)
}

pub fn criterion_8() -> CriterionReport {
    let start = Instant::now();
    let groups = [(1, 1, 3), (1, 1, 4), (2, 1, 2), (2, 2, 2), (2, 2, 3), (3, 1, 2), (4, 2, 2)];
    let t = groups
        .par_iter()
        .map(|&(m, p, n)| {
            let mut t = Tally::default();
            let params = GroupParams::new(m, p, n).expect("valid");
            let oracle = OracleGroup::new(params);
            let best = oracle.full_lengths(4 * n + 2);
            for (k, x) in oracle.elements.iter().enumerate() {
                let g = x.to_element(params);
                let formula = full_refl_length(&g);
                t.check(best[k] == Some(formula), || format!("{g}: formula {formula}, search {:?}", best[k]));
            }
            t
        })
        .reduce(Tally::default, Tally::merge);
    t.finish(8, "full reflection length", "S3, S4, G(2,1,2), G(2,2,2), G(2,2,3), G(3,1,2), G(4,2,2)".into(), start)
}

pub fn criterion_9(suite: Suite) -> CriterionReport {
    let start = Instant::now();
    let groups = sweep_groups(suite.max_order);
    let t = sweep(&groups, |table, g, t| {
        if !is_parabolic_qc(g).is_ok_and(|v| v.is_pqc) {
            return;
        }
        let red = match enumerate_reduced(g) {
            Ok(red) => red,
            Err(e) => return t.error(e, g),
        };
        match hurwitz_orbit(&red[0], usize::MAX) {
            Ok(orbit) => t.check(orbit == red, || format!("{g}: orbit {} of {} factorizations", orbit.len(), red.len())),
            Err(e) => return t.error(e, g),
        }
        let mut masks: HashMap<Vec<Reflection>, Vec<bool>> = HashMap::new();
        let mut first: Option<Vec<bool>> = None;
        let mut constant = true;
        for tuple in &red {
            let key = tuple.factor_set();
            let mask = masks
                .entry(key)
                .or_insert_with_key(|k| table.closure(&table.reflection_indices(k).expect("group reflections")));
            match &first {
                None => first = Some(mask.clone()),
                Some(f) => constant &= f == mask,
            }
        }
        t.check(constant, || format!("{g}: factor closures differ across reduced factorizations"));
    });
    t.finish(9, "Hurwitz transitivity and constant closures", format!("pqc elements of {}", sweep_label(&groups)), start)
}

pub fn criterion_10() -> CriterionReport {
    let start = Instant::now();
    let t = (1..=6usize)
        .into_par_iter()
        .map(|len| {
            let mut t = Tally::default();
            let vectors = itertools::Itertools::multi_cartesian_product((0..len).map(|_| 1..=4u64));
            for xs in vectors {
                let brute = BigRational::from_integer(weighted_tree_sum(&xs).into());
                let xs: Vec<BigRational> = xs.into_iter().map(|x| BigRational::from_integer(x.into())).collect();
                let closed = weighted_cayley(&xs);
                t.check(closed == brute, || format!("{xs:?}: {closed} vs {brute}"));
            }
            t
        })
        .reduce(Tally::default, Tally::merge);
    t.finish(10, "weighted Cayley formula", "weights in 1..4 on up to 6 vertices, Prüfer enumeration".into(), start)
}

/// Reflections generated inside the oracle, as oracle reflection indices.
fn oracle_refl(oracle: &OracleGroup, r: &Reflection) -> usize {
    let e = oracle.index[&MonoMat::from_element(&r.to_element(oracle.params))];
    oracle.reflections.iter().position(|&x| x == e).expect("reflections agree")
}

pub fn criterion_11() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut notes = Vec::new();
    // (a) determinant criterion for generation.
    for name in ["A2", "A3", "B2", "B3", "D4"] {
        let ty: WeylType = name.parse().expect("type");
        let params = ty.params();
        let oracle = OracleGroup::new(params);
        let refl = params.reflections();
        let index = ty.connection_index() as i64;
        let mut generating = 0;
        let mut subsets = 0;
        for s in itertools::Itertools::combinations(refl.iter().copied(), ty.rank) {
            subsets += 1;
            let gens: Vec<usize> = s.iter().map(|r| oracle_refl(&oracle, r)).collect();
            let whole = oracle.closure(&gens).iter().all(|&b| b);
            generating += usize::from(whole);
            match pairing_det(&s, ty) {
                Ok(det) => t.check((det.abs() == index) == whole, || format!("{name} {s:?}: det {det}, generates {whole}")),
                Err(e) => t.error(e, name),
            }
        }
        notes.push(format!("{name}: {generating}/{subsets} generating"));
    }
    // (b) pdet against the closure of one reduced factorization.
    for name in ["B2", "B3", "A3"] {
        let ty: WeylType = name.parse().expect("type");
        for g in ty.params().elements(usize::MAX).expect("small") {
            let closure = qcox_core::pqc::first_reduced(&g).and_then(|f| reflection_subgroup_index(&f, ty, usize::MAX));
            match (pdet_abs(&g, ty), closure) {
                (Ok(p), Ok(i)) => t.check(p == i, || format!("{g}: pdet {p}, index {i}")),
                (Err(e), _) | (_, Err(e)) => t.error(e, &g),
            }
        }
    }
    // (c) Coxeter-element counts.
    for name in ["A2", "A3", "A4", "B2", "B3", "D4"] {
        let ty: WeylType = name.parse().expect("type");
        let degree = abc_degree(ty);
        match count_reduced(&ty.coxeter_element()) {
            Ok(c) => {
                t.check(c == degree, || format!("{name}: count {c}, degree {degree}"));
                notes.push(format!("{name} → {c}"));
            }
            Err(e) => t.error(e, name),
        }
    }
    t.finish(11, "Weyl lattice checks", notes.join(", "), start)
}

pub fn criterion_12() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut notes = Vec::new();
    for (rank, enumerate) in [(4, true), (8, false)] {
        match regular_fred_check_dn(rank, enumerate) {
            Ok(r) => {
                let want = BigRational::from_integer((rank as i64 / 2).into());
                t.check(r.delta == want, || format!("D{rank}: δ = {}", r.delta));
                if let Some(e) = &r.fred_enumerated {
                    t.check(*e == r.fred_formula, || format!("D{rank}: enumerated {e}, formula {}", r.fred_formula));
                }
                notes.push(format!("D{rank}: Fred {} δ {}", r.fred_formula, r.delta));
            }
            Err(e) => t.error(e, rank),
        }
    }
    t.finish(12, "regular quasi-Coxeter δ", notes.join(", "), start)
}

pub fn criterion_13() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut fractional = 0;
    for n in 1..=8 {
        for mvec in weak_compositions(n) {
            let lambda: Vec<usize> = mvec
                .iter()
                .enumerate()
                .rev()
                .flat_map(|(i, &x)| std::iter::repeat_n(i + 1, x))
                .collect();
            let params = GroupParams::symmetric(n).expect("n ≥ 1");
            let g = Element::new(params, standard_permutation(&lambda), vec![0; n]).expect("permutation");
            let rt = match count_rgs_formula(&g) {
                Ok(rt) => rt,
                Err(e) => {
                    t.error(e, &g);
                    continue;
                }
            };
            if n <= 6 {
                match enumerate_rgs(&g, Route::Graph, usize::MAX) {
                    Ok(sets) => t.check(big(sets.len() as u64) == rt, || format!("{g}: {} sets, formula {rt}", sets.len())),
                    Err(e) => t.error(e, &g),
                }
            }
            match dps_relation_sides(&mvec, &rt) {
                Ok((lhs, rhs)) => t.check(lhs == rhs, || format!("{mvec:?}: {lhs} vs {rhs}")),
                Err(e) => t.error(e, format!("{mvec:?}")),
            }
            if n <= 5 {
                let brute = cacti(&mvec);
                match dps_cacti_count(&mvec) {
                    Ok(formula) => {
                        let integral = formula.is_integer();
                        fractional += usize::from(!integral);
                        let orbits_match = formula == BigRational::from_integer(brute.orbits.into());
                        t.check(formula == brute.weighted && integral == orbits_match, || {
                            format!("{mvec:?}: formula {formula}, weighted {}, orbits {}", brute.weighted, brute.orbits)
                        });
                    }
                    Err(e) => t.error(e, format!("{mvec:?}")),
                }
            }
        }
    }
    t.finish(13, "DPS identity and cactus counts", format!("n ≤ 8; {fractional} non-integral cactus counts for n ≤ 5"), start)
}

pub fn criterion_14(suite: Suite) -> CriterionReport {
    let start = Instant::now();
    let groups = sweep_groups(suite.max_order);
    let t = sweep(&groups, |_, g, t| {
        if !is_parabolic_qc(g).is_ok_and(|v| v.is_pqc) {
            return;
        }
        match (fred_formula_pqc(g), count_reduced(g)) {
            (Ok(f), Ok(c)) => t.check(f == c, || format!("{g}: formula {f}, count {c}")),
            (Err(e), _) | (_, Err(e)) => t.error(e, g),
        }
    });
    t.finish(14, "multinomial Fred formula for pqc elements", format!("pqc elements of {}", sweep_label(&groups)), start)
}

pub fn run(id: u8, suite: Suite) -> Option<CriterionReport> {
    Some(match id {
        1 => criterion_1(),
        2 => criterion_2(),
        3 => criterion_3(),
        4 => criterion_4(),
        5 => criterion_5(suite),
        6 => criterion_6(suite),
        7 => criterion_7(suite),
        8 => criterion_8(),
        9 => criterion_9(suite),
        10 => criterion_10(),
        11 => criterion_11(),
        12 => criterion_12(),
        13 => criterion_13(),
        14 => criterion_14(suite),
        _ => return None,
    })
}

pub fn run_all(suite: Suite) -> Vec<CriterionReport> {
    (1..=14).filter_map(|id| run(id, suite)).collect()
}
