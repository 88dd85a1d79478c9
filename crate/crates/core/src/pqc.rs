//! Parabolic quasi-Coxeter elements and relative generating sets.
//!
//! `g` is parabolic quasi-Coxeter (pqc) when some reduced factorization of `g`
//! generates the parabolic subgroup `W_g` fixing `V^g`, and quasi-Coxeter when
//! that subgroup is the whole group. A relative generating set for `g` is a set
//! of `rank − ℓ_R(g)` reflections that, together with the factors of a reduced
//! factorization of `g`, generates the whole group.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{elementary_symmetric, factorial, gcd, next_combination, pow, pow_rational, ratio, to_natural, totient};
use crate::error::{Error, Result};
use crate::graphset::{classify_relative, graph_of, GraphTag, SetPartition};
use crate::lengths::{absolute_leq, codim_fixed, full_refl_length, refl_length};
use crate::table::GroupTable;
use crate::wreath::{Element, GroupParams, Reflection};

pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

/// Breadth-first closure of a set of elements under multiplication.
pub struct Closure {
    elements: HashSet<Element>,
}

impl Closure {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
    pub fn contains(&self, x: &Element) -> bool {
        self.elements.contains(x)
    }
    pub fn elements(&self) -> impl Iterator<Item = &Element> {
        self.elements.iter()
    }
}

/// The subgroup generated by `gens` (all with parameters `params`).
pub fn subgroup_closure(params: GroupParams, gens: &[Element], cap: usize) -> Result<Closure> {
    let mut all: Vec<Element> = Vec::with_capacity(gens.len() * 2);
    for g in gens {
        if g.params() != params {
            return Err(Error::ParamMismatch(params, g.params()));
        }
        all.push(g.clone());
        all.push(g.inverse());
    }
    let id = params.identity();
    let mut elements = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in &all {
            let y = s.compose(&x);
            if !elements.contains(&y) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded { what: "subgroup closure", cap });
                }
                elements.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(Closure { elements })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    /// G(m,1,λ₀)
    Full,
    /// G(m,m,λ₀)
    Balanced,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonrealPart {
    pub lambda0: usize,
    pub family: Family,
}

/// `W_g ≅ G(m,p,λ₀) × S_{λ₁} × ⋯ × S_{λ_k}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParabolicType {
    pub nonreal_part: Option<NonrealPart>,
    /// Lengths of the zero-color cycles (fixed points included), decreasing.
    pub symmetric_parts: Vec<usize>,
    /// Zero-color cycle supports, plus one block holding every nonzero-color cycle.
    pub induced_partition: SetPartition,
    pub rank: usize,
}

fn require_well_generated(params: GroupParams) -> Result<()> {
    if params.is_well_generated() {
        Ok(())
    } else {
        Err(Error::UnsupportedP(params))
    }
}

pub fn parabolic_closure_type(g: &Element) -> Result<ParabolicType> {
    let params = g.params();
    require_well_generated(params)?;
    let cycles = g.colored_cycles();
    let mut blocks: Vec<Vec<usize>> = cycles.zero_color().map(|c| c.support.clone()).collect();
    let merged: Vec<usize> = cycles.nonzero_color().flat_map(|c| c.support.iter().copied()).collect();
    let nonreal_part = (!merged.is_empty()).then(|| NonrealPart {
        lambda0: merged.len(),
        family: if params.p() == 1 { Family::Full } else { Family::Balanced },
    });
    if !merged.is_empty() {
        blocks.push(merged);
    }
    let mut symmetric_parts: Vec<usize> = cycles.zero_color().map(|c| c.len()).collect();
    symmetric_parts.sort_unstable_by(|a, b| b.cmp(a));
    Ok(ParabolicType {
        nonreal_part,
        symmetric_parts,
        induced_partition: SetPartition::new(params.n(), blocks)?,
        rank: codim_fixed(g),
    })
}

/// The reflections whose hyperplanes contain `V^g`; they generate `W_g`.
///
/// On a zero-color cycle the fixed vectors satisfy `x_y = ζ^{s(y)} x_start`,
/// where `s` accumulates colors along the cycle; on a nonzero-color cycle
/// they vanish.
pub fn parabolic_reflections(g: &Element) -> Vec<Reflection> {
    let params = g.params();
    let m = params.m();
    let n = params.n();
    let mut cycle_of = vec![0usize; n];
    let mut potential = vec![0u32; n];
    let mut zero = Vec::new();
    for (idx, c) in g.colored_cycles().cycles.iter().enumerate() {
        zero.push(c.color == 0);
        let mut s = 0u32;
        for &x in &c.support {
            cycle_of[x] = idx;
            potential[x] = s;
            s = (s + g.colors()[x]) % m;
        }
    }
    params
        .reflections()
        .into_iter()
        .filter(|r| match *r {
            Reflection::Transposition { i, j, color } => {
                let (ci, cj) = (cycle_of[i], cycle_of[j]);
                (!zero[ci] && !zero[cj]) || (ci == cj && zero[ci] && (potential[j] + m - potential[i]) % m == color)
            }
            Reflection::Diagonal { i, .. } => !zero[cycle_of[i]],
        })
        .collect()
}

/// Flags for the four equivalent characterizations of pqc elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    /// (i) one reduced factorization generates `W_g` and `ℓ_R = codim V^g`.
    pub definitional: Option<bool>,
    /// (ii) there is a relative generating set.
    pub rgs_nonempty: Option<bool>,
    /// (iii) `g` lies below a quasi-Coxeter element in the absolute order.
    pub below_qc: Option<bool>,
    /// (iv) `ℓ_full(g) = 2·rank − ℓ_R(g)`.
    pub full_length: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PqcVerdict {
    pub is_pqc: bool,
    pub is_qc: bool,
    pub witnesses: Witnesses,
}

impl PqcVerdict {
    /// Whether every characterization that ran agrees with `is_pqc`.
    pub fn all_agree(&self) -> bool {
        let w = &self.witnesses;
        [w.definitional, w.rgs_nonempty, w.below_qc, w.full_length]
            .iter()
            .flatten()
            .all(|&b| b == self.is_pqc)
    }
}

/// Classification by cycle colors. In G(m,1,n): at most one cycle of nonzero
/// color, and that color generates `Z/m`. In G(m,m,n): either no nonzero
/// colors, or exactly two cycles with colors `c`, `−c` and `gcd(c, m) = 1`.
/// Quasi-Coxeter additionally means the fixed space is trivial.
pub fn is_parabolic_qc(g: &Element) -> Result<PqcVerdict> {
    let params = g.params();
    require_well_generated(params)?;
    let m = params.m() as u64;
    let cycles = g.colored_cycles();
    let nonzero: Vec<u64> = cycles.nonzero_color().map(|c| c.color as u64).collect();
    let is_pqc = match (m, params.p() as u64) {
        (1, _) => true,
        (_, 1) => nonzero.is_empty() || (nonzero.len() == 1 && gcd(nonzero[0], m) == 1),
        _ => {
            nonzero.is_empty()
                || (nonzero.len() == 2 && (nonzero[0] + nonzero[1]).is_multiple_of(m) && gcd(nonzero[0], m) == 1)
        }
    };
    let is_qc = is_pqc && codim_fixed(g) == params.rank();
    Ok(PqcVerdict { is_pqc, is_qc, witnesses: Witnesses::default() })
}

/// One reduced factorization of `g`, found greedily.
pub fn first_reduced(g: &Element) -> Result<Vec<Reflection>> {
    let params = g.params();
    let mut len = refl_length(g)?;
    let mut r = g.clone();
    let refl = params.reflections();
    let mut out = Vec::with_capacity(len);
    while len > 0 {
        let (t, next) = refl
            .iter()
            .find_map(|t| {
                let next = t.to_element(params).inverse().compose(&r);
                (refl_length(&next).ok()? + 1 == len).then_some((*t, next))
            })
            .expect("every nontrivial element has a descent");
        out.push(t);
        r = next;
        len -= 1;
    }
    Ok(out)
}

/// Definitional test: `ℓ_R(g) = codim V^g` and the factors of one reduced
/// factorization generate exactly `W_g`.
pub fn is_parabolic_qc_definitional(g: &Element, closure_cap: usize) -> Result<bool> {
    let table = GroupTable::new(g.params(), closure_cap)?;
    is_parabolic_qc_definitional_in(&table, g)
}

pub fn is_parabolic_qc_definitional_in(table: &GroupTable, g: &Element) -> Result<bool> {
    if refl_length(g)? != codim_fixed(g) {
        return Ok(false);
    }
    let factors = table.reflection_indices(&first_reduced(g)?)?;
    let parabolic = table.reflection_indices(&parabolic_reflections(g))?;
    Ok(table.closure(&factors) == table.closure(&parabolic))
}

/// A relative generating set, sorted in canonical reflection order.
pub type RGSet = Vec<Reflection>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Route {
    /// Subsets tested with the closure oracle.
    Brute,
    /// Subsets tested with the relative graph criterion.
    Graph,
    /// Both, required to agree.
    Both,
}

impl std::str::FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Route::Brute),
            "graph" => Ok(Route::Graph),
            "both" => Ok(Route::Both),
            _ => Err(Error::Parse(format!("unknown route {s:?} (expected graph, brute or both)"))),
        }
    }
}

/// Relative generating sets of `g`.
pub fn enumerate_rgs(g: &Element, route: Route, closure_cap: usize) -> Result<Vec<RGSet>> {
    let table = GroupTable::new(g.params(), closure_cap)?;
    enumerate_rgs_in(&table, g, route)
}

pub fn enumerate_rgs_in(table: &GroupTable, g: &Element, route: Route) -> Result<Vec<RGSet>> {
    require_well_generated(g.params())?;
    match route {
        Route::Brute => rgs_brute(table, g),
        Route::Graph => rgs_graph(g),
        Route::Both => {
            let brute = rgs_brute(table, g)?;
            let graph = rgs_graph(g)?;
            if brute != graph {
                return Err(Error::Unrecognized(format!(
                    "relative generating sets of {g} disagree: {} by closure, {} by graph",
                    brute.len(),
                    graph.len()
                )));
            }
            Ok(brute)
        }
    }
}

fn subsets_of_reflections(params: GroupParams, size: usize, mut keep: impl FnMut(&[usize]) -> bool) -> Vec<RGSet> {
    let refl = params.reflections();
    let mut out = Vec::new();
    if size > refl.len() {
        return out;
    }
    let mut combo: Vec<usize> = (0..size).collect();
    loop {
        if keep(&combo) {
            out.push(combo.iter().map(|&k| refl[k]).collect());
        }
        if !next_combination(&mut combo, refl.len()) {
            break;
        }
    }
    out
}

fn rgs_brute(table: &GroupTable, g: &Element) -> Result<Vec<RGSet>> {
    let params = g.params();
    let len = refl_length(g)?;
    if len > params.rank() {
        return Ok(Vec::new());
    }
    let factors = table.reflection_indices(&first_reduced(g)?)?;
    let mut gens = Vec::with_capacity(params.rank());
    Ok(subsets_of_reflections(params, params.rank() - len, |s| {
        gens.clear();
        gens.extend_from_slice(s);
        gens.extend_from_slice(&factors);
        table.generates(&gens)
    }))
}

/// A diagonal `d ∈ G(m,1,n)` with `d⁻¹·g·d` a permutation matrix; `g` must
/// have only zero-color cycles.
pub fn standardizing_conjugator(g: &Element) -> Element {
    let m = g.params().m();
    let n = g.params().n();
    let mut delta = vec![0u32; n];
    for c in g.colored_cycles().cycles {
        debug_assert_eq!(c.color, 0);
        let mut s = 0u32;
        for &x in &c.support {
            delta[x] = s;
            s = (s + g.colors()[x]) % m;
        }
    }
    let full = GroupParams::new(m, 1, n).expect("G(m,1,n) exists");
    Element::new(full, (0..n).collect(), delta).expect("diagonal element")
}

fn rgs_graph(g: &Element) -> Result<Vec<RGSet>> {
    let params = g.params();
    let verdict = is_parabolic_qc(g)?;
    if !verdict.is_pqc {
        return Ok(Vec::new());
    }
    let len = refl_length(g)?;
    let size = params.rank() - len;
    if params.rank() == 0 {
        return Ok(vec![Vec::new()]);
    }
    let ty = parabolic_closure_type(g)?;
    let pi = ty.induced_partition;
    let m = params.m();
    let refl = params.reflections();
    let primitive = |c: Option<u32>| c.is_some_and(|c| gcd(c as u64, m as u64) == 1);
    if m == 1 || ty.nonreal_part.is_some() {
        return Ok(subsets_of_reflections(params, size, |s| {
            let set: Vec<Reflection> = s.iter().map(|&k| refl[k]).collect();
            classify_relative(&graph_of(&set, params), &pi).tag == GraphTag::Tree
        }));
    }
    if params.p() == 1 {
        return Ok(subsets_of_reflections(params, size, |s| {
            let set: Vec<Reflection> = s.iter().map(|&k| refl[k]).collect();
            let class = classify_relative(&graph_of(&set, params), &pi);
            class.tag == GraphTag::RootedTree && primitive(class.loop_color)
        }));
    }
    // G(m,m,n) with every cycle of color 0: read each candidate in the
    // coordinates where g is a plain permutation.
    let d = standardizing_conjugator(g);
    let full = d.params();
    let moved: Vec<Reflection> = refl
        .iter()
        .map(|r| {
            let conj = r.to_element(params);
            let lifted = Element::new(full, conj.perm().to_vec(), conj.colors().to_vec()).expect("lift");
            lifted.conjugate_by(&d).as_reflection().expect("conjugate of a reflection")
        })
        .collect();
    Ok(subsets_of_reflections(params, size, |s| {
        let set: Vec<Reflection> = s.iter().map(|&k| moved[k]).collect();
        let class = classify_relative(&graph_of(&set, params), &pi);
        class.tag == GraphTag::Unicycle && primitive(class.delta)
    }))
}

/// Closed-form `|RGS(W, g)|`.
///
/// With `λ₁, …, λ_k` the symmetric parts and `λ₀` the nonreal part:
/// * `S_n`: `n^{k−2}·∏λ_i`;
/// * a nonreal part present: `m^k·n^{k−1}·∏_{i≥0}λ_i`;
/// * G(m,1,n), none: `φ(m)·m^{k−1}·n^{k−1}·∏λ_i`;
/// * G(m,m,n), none: `φ(m)·m^{k−1}/2·(n^k − n^{k−1} − Σ_{j≥2}(j−2)!·n^{k−j}·e_j(λ))·∏λ_i`.
pub fn count_rgs_formula(g: &Element) -> Result<BigUint> {
    let params = g.params();
    if !is_parabolic_qc(g)?.is_pqc {
        return Err(Error::NotParabolicQuasiCoxeter);
    }
    if params.rank() == 0 {
        return Ok(BigUint::one());
    }
    let ty = parabolic_closure_type(g)?;
    let n = params.n() as u64;
    let m = params.m() as u64;
    let parts: Vec<u64> = ty.symmetric_parts.iter().map(|&x| x as u64).collect();
    let k = parts.len() as i64;
    let prod = ratio(parts.iter().map(|&x| BigUint::from(x)).product());
    let value: BigRational = if m == 1 {
        pow_rational(n, k - 2) * prod
    } else if let Some(nr) = &ty.nonreal_part {
        ratio(pow(m, k as u64)) * pow_rational(n, k - 1) * prod * ratio(BigUint::from(nr.lambda0))
    } else if params.p() == 1 {
        ratio(BigUint::from(totient(m)) * pow(m, k as u64 - 1)) * pow_rational(n, k - 1) * prod
    } else {
        let mut bracket = pow_rational(n, k) - pow_rational(n, k - 1);
        for j in 2..=k {
            bracket -= ratio(factorial(j as u64 - 2) * elementary_symmetric(&parts, j as usize)) * pow_rational(n, k - j);
        }
        ratio(BigUint::from(totient(m)) * pow(m, k as u64 - 1)) / ratio(BigUint::from(2u32)) * bracket * prod
    };
    to_natural(&value)
        .ok_or_else(|| Error::Unrecognized(format!("relative generating set count for {g} is not a natural number")))
}

/// Runs all four characterizations of parabolic quasi-Coxeter elements.
pub fn characterization_check(g: &Element, closure_cap: usize) -> Result<PqcVerdict> {
    let table = GroupTable::new(g.params(), closure_cap)?;
    characterization_in(&table, g)
}

pub fn characterization_in(table: &GroupTable, g: &Element) -> Result<PqcVerdict> {
    let mut verdict = is_parabolic_qc(g)?;
    let params = g.params();
    let len = refl_length(g)?;
    let rgs = rgs_brute(table, g)?;
    verdict.witnesses.definitional = Some(is_parabolic_qc_definitional_in(table, g)?);
    verdict.witnesses.rgs_nonempty = Some(!rgs.is_empty());
    verdict.witnesses.below_qc = Some(below_quasi_coxeter(table, g, rgs.first())?);
    verdict.witnesses.full_length = Some(full_refl_length(g) + len == 2 * params.rank());
    Ok(verdict)
}

/// Whether some quasi-Coxeter `w` has `g ≤_R w`: first the product of a
/// reduced factorization with a relative generating set, then a full scan.
fn below_quasi_coxeter(table: &GroupTable, g: &Element, rgs: Option<&RGSet>) -> Result<bool> {
    let params = g.params();
    if let Some(set) = rgs {
        let w = set.iter().fold(g.clone(), |acc, r| acc.compose(&r.to_element(params)));
        if is_parabolic_qc(&w)?.is_qc && absolute_leq(g, &w)? {
            return Ok(true);
        }
    }
    for w in table.elements() {
        if is_parabolic_qc(w)?.is_qc && absolute_leq(g, w)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `x₀⋯x_k·(x₀ + ⋯ + x_k)^{k−1}`: the sum over trees on `{0..k}` of `∏ x_i^{deg i}`.
pub fn weighted_cayley(xs: &[BigRational]) -> BigRational {
    match xs.len() {
        0 => BigRational::zero(),
        1 => BigRational::one(),
        len => {
            let prod = xs.iter().fold(BigRational::one(), |acc, x| acc * x);
            let sum = xs.iter().fold(BigRational::zero(), |acc, x| acc + x);
            prod * num_traits::pow(sum, len - 2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> Element {
        s.parse().unwrap()
    }

    #[test]
    fn closures() {
        let p = GroupParams::new(2, 1, 2).unwrap();
        assert_eq!(subgroup_closure(p, &[], 10).unwrap().order(), 1);
        let all: Vec<Element> = p.reflections().iter().map(|r| r.to_element(p)).collect();
        assert_eq!(subgroup_closure(p, &all, 10).unwrap().order(), 8);
        let s3 = GroupParams::symmetric(3).unwrap();
        let t = el("G(1,1,3):[2 1 3;0,0,0]");
        let c = subgroup_closure(s3, std::slice::from_ref(&t), 10).unwrap();
        assert_eq!(c.order(), 2);
        assert!(c.contains(&t));
        assert!(matches!(subgroup_closure(p, &all, 5), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn classification_examples() {
        assert!(is_parabolic_qc(&el("G(1,1,4):[2 1 4 3;0,0,0,0]")).unwrap().is_pqc);
        assert!(!is_parabolic_qc(&el("G(2,1,2):[1 2;1,1]")).unwrap().is_pqc);
        let v = is_parabolic_qc(&el("G(4,4,4):[2 1 4 3;1,0,3,0]")).unwrap();
        assert!(v.is_pqc && v.is_qc);
        assert!(matches!(is_parabolic_qc(&el("G(4,2,2):[1 2;0,0]")), Err(Error::UnsupportedP(_))));
    }

    #[test]
    fn definitional_examples() {
        let id = GroupParams::new(2, 1, 2).unwrap().identity();
        assert!(is_parabolic_qc_definitional(&id, 1000).unwrap());
        assert!(is_parabolic_qc_definitional(&el("G(3,1,3):[2 3 1;1,0,0]"), 1000).unwrap());
        assert!(!is_parabolic_qc_definitional(&el("G(2,1,2):[1 2;1,1]"), 1000).unwrap());
    }

    #[test]
    fn parabolic_types() {
        let t = parabolic_closure_type(&GroupParams::symmetric(3).unwrap().identity()).unwrap();
        assert_eq!(t.induced_partition, SetPartition::singletons(3));
        assert_eq!(t.rank, 0);
        let t = parabolic_closure_type(&el("G(1,1,5):[2 3 1 5 4;0,0,0,0,0]")).unwrap();
        assert_eq!(t.induced_partition.blocks(), &[vec![0, 1, 2], vec![3, 4]]);
        assert_eq!(t.symmetric_parts, vec![3, 2]);
        let t = parabolic_closure_type(&el("G(2,2,4):[2 1 4 3;1,0,1,0]")).unwrap();
        assert_eq!(t.nonreal_part, Some(NonrealPart { lambda0: 4, family: Family::Balanced }));
        assert_eq!(t.induced_partition.blocks().len(), 1);
    }

    #[test]
    fn rgs_examples() {
        let c = el("G(1,1,3):[2 3 1;0,0,0]");
        assert_eq!(enumerate_rgs(&c, Route::Both, 1000).unwrap(), vec![Vec::<Reflection>::new()]);
        let t = el("G(1,1,3):[2 1 3;0,0,0]");
        let sets = enumerate_rgs(&t, Route::Both, 1000).unwrap();
        assert_eq!(
            sets,
            vec![
                vec![Reflection::Transposition { i: 0, j: 2, color: 0 }],
                vec![Reflection::Transposition { i: 1, j: 2, color: 0 }],
            ]
        );
        assert_eq!(count_rgs_formula(&t).unwrap(), BigUint::from(2u32));
        let id = GroupParams::new(2, 1, 2).unwrap().identity();
        let sets = enumerate_rgs(&id, Route::Both, 1000).unwrap();
        assert_eq!(BigUint::from(sets.len()), count_rgs_formula(&id).unwrap());
        let g = el("G(2,1,3):[1 3 2;1,0,0]");
        assert_eq!(count_rgs_formula(&g).unwrap(), BigUint::from(4u32));
        assert_eq!(enumerate_rgs(&g, Route::Both, 1000).unwrap().len(), 4);
        let g = el("G(2,2,3):[2 1 3;0,0,0]");
        assert_eq!(count_rgs_formula(&g).unwrap(), BigUint::from(8u32));
        assert_eq!(enumerate_rgs(&g, Route::Both, 1000).unwrap().len(), 8);
    }

    #[test]
    fn characterization_examples() {
        let id = GroupParams::new(2, 2, 2).unwrap().identity();
        let v = characterization_check(&id, 1000).unwrap();
        assert!(v.is_pqc && v.all_agree());
        let v = characterization_check(&el("G(2,1,2):[1 2;1,1]"), 1000).unwrap();
        assert!(!v.is_pqc && v.all_agree());
        assert_eq!(v.witnesses.full_length, Some(false));
        let s4 = GroupParams::symmetric(4).unwrap();
        for g in s4.elements(100).unwrap() {
            let v = characterization_check(&g, 100).unwrap();
            assert!(v.is_pqc && v.all_agree(), "{g}");
        }
    }

    #[test]
    fn weighted_cayley_examples() {
        let q = |v: &[i64]| v.iter().map(|&x| BigRational::from_integer(x.into())).collect::<Vec<_>>();
        assert_eq!(weighted_cayley(&q(&[2, 5])), BigRational::from_integer(10.into()));
        assert_eq!(weighted_cayley(&q(&[1, 1, 1])), BigRational::from_integer(3.into()));
        assert_eq!(weighted_cayley(&q(&[1, 2, 3])), BigRational::from_integer(36.into()));
    }
}
