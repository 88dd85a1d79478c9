//! Enumeration and counting of reduced and minimum-length full reflection
//! factorizations, together with the closed formulas they are checked against.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{factorial, multinomial, pow, pow_rational, ratio, to_natural};
use crate::error::{Error, Result};
use crate::hurwitz::FactorTuple;
use crate::lengths::{full_refl_length, refl_length};
use crate::pqc::is_parabolic_qc;
use crate::table::GroupTable;
use crate::wreath::{Element, GroupParams, Reflection};

/// Limits that keep enumeration at desk scale.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumCaps {
    /// Longest factorization explored.
    pub depth: usize,
    /// Most tuples materialized.
    pub tuples: usize,
    /// Largest group indexed for closure checks.
    pub closure: usize,
}

impl Default for EnumCaps {
    fn default() -> Self {
        EnumCaps { depth: 16, tuples: 10_000_000, closure: 1_000_000 }
    }
}

fn check_depth(len: usize, caps: &EnumCaps) -> Result<()> {
    if len > caps.depth {
        Err(Error::CapExceeded { what: "factorization depth", cap: caps.depth })
    } else {
        Ok(())
    }
}

struct Descent {
    params: GroupParams,
    reflections: Vec<Reflection>,
    inverses: Vec<Element>,
}

impl Descent {
    fn new(params: GroupParams) -> Self {
        let reflections = params.reflections();
        let inverses = reflections.iter().map(|r| r.to_element(params).inverse()).collect();
        Descent { params, reflections, inverses }
    }

    /// Reflections `t` with `ℓ_R(t⁻¹·r) = ℓ_R(r) − 1`, paired with that quotient.
    fn steps<'a>(&'a self, r: &'a Element, len: usize) -> impl Iterator<Item = (Reflection, Element)> + 'a {
        self.reflections.iter().zip(&self.inverses).filter_map(move |(t, inv)| {
            let next = inv.compose(r);
            (refl_length(&next).ok()? + 1 == len).then_some((*t, next))
        })
    }
}

/// All reduced reflection factorizations of `g`, lexicographically ordered.
pub fn enumerate_reduced(g: &Element) -> Result<Vec<FactorTuple>> {
    enumerate_reduced_with(g, EnumCaps::default())
}

pub fn enumerate_reduced_with(g: &Element, caps: EnumCaps) -> Result<Vec<FactorTuple>> {
    let len = refl_length(g)?;
    check_depth(len, &caps)?;
    let descent = Descent::new(g.params());
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(len);
    fn go(
        d: &Descent,
        r: &Element,
        len: usize,
        prefix: &mut Vec<Reflection>,
        out: &mut Vec<FactorTuple>,
        cap: usize,
    ) -> Result<()> {
        if len == 0 {
            if out.len() >= cap {
                return Err(Error::CapExceeded { what: "reduced factorizations", cap });
            }
            out.push(FactorTuple { params: d.params, factors: prefix.clone() });
            return Ok(());
        }
        for (t, next) in d.steps(r, len) {
            prefix.push(t);
            go(d, &next, len - 1, prefix, out, cap)?;
            prefix.pop();
        }
        Ok(())
    }
    go(&descent, g, len, &mut prefix, &mut out, caps.tuples)?;
    Ok(out)
}

/// Number of reduced reflection factorizations, by memoized descent.
pub fn count_reduced(g: &Element) -> Result<BigUint> {
    count_reduced_with(g, EnumCaps::default())
}

pub fn count_reduced_with(g: &Element, caps: EnumCaps) -> Result<BigUint> {
    let len = refl_length(g)?;
    check_depth(len, &caps)?;
    let descent = Descent::new(g.params());
    let mut memo: HashMap<Element, BigUint> = HashMap::new();
    fn go(d: &Descent, r: &Element, len: usize, memo: &mut HashMap<Element, BigUint>) -> BigUint {
        if len == 0 {
            return BigUint::one();
        }
        if let Some(v) = memo.get(r) {
            return v.clone();
        }
        let steps: Vec<Element> = d.steps(r, len).map(|(_, next)| next).collect();
        let total = steps.iter().map(|next| go(d, next, len - 1, memo)).sum::<BigUint>();
        memo.insert(r.clone(), total.clone());
        total
    }
    Ok(go(&descent, g, len, &mut memo))
}

/// All factorizations of `g` of length `ℓ_full(g)` whose factors generate the group.
pub fn enumerate_full_min(g: &Element) -> Result<Vec<FactorTuple>> {
    enumerate_full_min_with(g, EnumCaps::default())
}

pub fn enumerate_full_min_with(g: &Element, caps: EnumCaps) -> Result<Vec<FactorTuple>> {
    let table = GroupTable::new(g.params(), caps.closure)?;
    let len = full_refl_length(g);
    check_depth(len, &caps)?;
    enumerate_generating(&table, g, len, caps.tuples)
}

/// Length-`len` reflection factorizations of `g` whose factors generate the
/// whole group, found by descent through the table with a length-bound prune.
pub fn enumerate_generating(table: &GroupTable, g: &Element, len: usize, cap: usize) -> Result<Vec<FactorTuple>> {
    let start = table.index_of(g).ok_or_else(|| Error::ParamMismatch(g.params(), table.params()))?;
    let mut generated: HashMap<Vec<usize>, bool> = HashMap::new();
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(len);
    #[allow(clippy::too_many_arguments)]
    fn go(
        table: &GroupTable,
        r: u32,
        remaining: usize,
        prefix: &mut Vec<usize>,
        generated: &mut HashMap<Vec<usize>, bool>,
        out: &mut Vec<FactorTuple>,
        cap: usize,
    ) -> Result<()> {
        if remaining == 0 {
            if r != table.identity() {
                return Ok(());
            }
            let mut key = prefix.clone();
            key.sort_unstable();
            key.dedup();
            let ok = *generated.entry(key).or_insert_with_key(|k| table.generates(k));
            if ok {
                if out.len() >= cap {
                    return Err(Error::CapExceeded { what: "full factorizations", cap });
                }
                let factors = prefix.iter().map(|&k| table.reflections()[k]).collect();
                out.push(FactorTuple { params: table.params(), factors });
            }
            return Ok(());
        }
        for t in 0..table.reflections().len() {
            let next = table.mul_left(table.reflection_inverse(t), r);
            if (table.length(next) as usize) < remaining {
                prefix.push(t);
                go(table, next, remaining - 1, prefix, generated, out, cap)?;
                prefix.pop();
            }
        }
        Ok(())
    }
    go(table, start, len, &mut prefix, &mut generated, &mut out, cap)?;
    Ok(out)
}

/// `Fred(g)` for a quasi-Coxeter `g`: `n^{n−2}` in `S_n`, `n^n` in G(m,1,n),
/// and `m(n−1)·binom(n−2; a−1, b−1)·a^a·b^b` in G(m,m,n) when the two cycles
/// of `g` have lengths `a` and `b`.
pub fn fred_formula_qc(g: &Element) -> Result<BigUint> {
    let verdict = is_parabolic_qc(g)?;
    if !verdict.is_qc {
        return Err(Error::NotQuasiCoxeter);
    }
    let params = g.params();
    let n = params.n() as u64;
    Ok(if params.rank() == 0 {
        BigUint::one()
    } else if params.m() == 1 {
        pow(n, n - 2)
    } else if params.p() == 1 {
        pow(n, n)
    } else {
        let lens: Vec<u64> = g.colored_cycles().cycles.iter().map(|c| c.len() as u64).collect();
        colored_pair_fred(params.m() as u64, lens[0], lens[1])
    })
}

fn colored_pair_fred(m: u64, a: u64, b: u64) -> BigUint {
    let n = a + b;
    BigUint::from(m * (n - 1)) * multinomial(&[a - 1, b - 1]) * pow(a, a) * pow(b, b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ComponentKind {
    /// A cycle of color 0 (a permutation up to diagonal conjugation).
    SymmetricCycle,
    /// In G(m,1,n): the cycle of nonzero color.
    SingleColoredCycle,
    /// In G(m,m,n): the two cycles of nonzero color, lengths `a` and `b`.
    ColoredPair { a: usize, b: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub support: Vec<usize>,
    pub element: Element,
    pub kind: ComponentKind,
    pub refl_length: usize,
}

impl Component {
    /// `Fred` of this component inside its own parabolic subgroup.
    pub fn fred(&self) -> BigUint {
        let m = self.element.params().m() as u64;
        let size = self.support.len() as u64;
        match self.kind {
            ComponentKind::SymmetricCycle => pow(size, size.saturating_sub(2)),
            ComponentKind::SingleColoredCycle => pow(size, size),
            ComponentKind::ColoredPair { a, b } => colored_pair_fred(m, a as u64, b as u64),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneralizedCycleDecomposition {
    pub components: Vec<Component>,
}

/// Splits a parabolic quasi-Coxeter element into commuting pieces whose
/// reflection lengths add up. Fixed points of color 0 are dropped.
pub fn generalized_cycles(g: &Element) -> Result<GeneralizedCycleDecomposition> {
    if !is_parabolic_qc(g)?.is_pqc {
        return Err(Error::NotParabolicQuasiCoxeter);
    }
    let params = g.params();
    let restrict = |support: &[usize]| -> Element {
        let mut perm: Vec<usize> = (0..params.n()).collect();
        let mut colors = vec![0; params.n()];
        for &x in support {
            perm[x] = g.perm()[x];
            colors[x] = g.colors()[x];
        }
        Element::new(params, perm, colors).expect("restriction of a pqc element stays in the group")
    };
    let cycles = g.colored_cycles();
    let mut components = Vec::new();
    let nonzero: Vec<_> = cycles.nonzero_color().collect();
    if params.p() == params.m() && nonzero.len() == 2 {
        let mut support: Vec<usize> = nonzero.iter().flat_map(|c| c.support.iter().copied()).collect();
        support.sort_unstable();
        let element = restrict(&support);
        components.push(Component {
            refl_length: refl_length(&element)?,
            kind: ComponentKind::ColoredPair { a: nonzero[0].len(), b: nonzero[1].len() },
            support,
            element,
        });
    } else if let Some(c) = nonzero.first() {
        let mut support = c.support.clone();
        support.sort_unstable();
        let element = restrict(&support);
        components.push(Component {
            refl_length: refl_length(&element)?,
            kind: ComponentKind::SingleColoredCycle,
            support,
            element,
        });
    }
    for c in cycles.zero_color().filter(|c| c.len() > 1) {
        let mut support = c.support.clone();
        support.sort_unstable();
        let element = restrict(&support);
        components.push(Component {
            refl_length: refl_length(&element)?,
            kind: ComponentKind::SymmetricCycle,
            support,
            element,
        });
    }
    components.sort_by(|x, y| x.support[0].cmp(&y.support[0]));
    Ok(GeneralizedCycleDecomposition { components })
}

/// `Fred(g) = binom(ℓ_R(g); ℓ_R(g_1), …) · ∏ Fred(g_i)` over the generalized cycles.
pub fn fred_formula_pqc(g: &Element) -> Result<BigUint> {
    let dec = generalized_cycles(g)?;
    let lens: Vec<u64> = dec.components.iter().map(|c| c.refl_length as u64).collect();
    Ok(dec.components.iter().fold(multinomial(&lens), |acc, c| acc * c.fred()))
}

/// Genus-0 Hurwitz number
/// `H_0(λ) = n^{k−3} (n+k−2)! ∏ λ_i^{λ_i} / (λ_i − 1)!`.
pub fn hurwitz_number(lambda: &[usize]) -> Result<BigUint> {
    if lambda.is_empty() || lambda.contains(&0) {
        return Err(Error::MalformedComposition(format!("{lambda:?} is not a partition")));
    }
    let n: u64 = lambda.iter().map(|&x| x as u64).sum();
    let k = lambda.len() as i64;
    let mut value = pow_rational(n, k - 3) * ratio(factorial(n + k as u64 - 2));
    for &part in lambda {
        let part = part as u64;
        value *= ratio(pow(part, part)) / ratio(factorial(part - 1));
    }
    Ok(to_natural(&value).expect("genus-0 Hurwitz numbers are integers"))
}

fn composition_shape(mvec: &[usize]) -> Result<(u64, u64, Vec<u64>)> {
    let k: u64 = mvec.iter().map(|&x| x as u64).sum();
    if k == 0 {
        return Err(Error::MalformedComposition("at least one polygon is needed".into()));
    }
    let n: u64 = mvec.iter().enumerate().map(|(i, &x)| (i as u64 + 1) * x as u64).sum();
    let lambda = mvec
        .iter()
        .enumerate()
        .rev()
        .flat_map(|(i, &x)| std::iter::repeat_n(i as u64 + 1, x))
        .collect();
    Ok((n, k, lambda))
}

/// Number of Cayley cacti with `mvec[i]` oriented `(i+1)`-gons:
/// `(1/k)·binom(k; m_1, …, m_n)·n^{k−2}`.
///
/// The value is a weighted count (each cactus weighted by the inverse of its
/// number of symmetries), so it is a proper fraction for a lone polygon and
/// for two equal polygons.
pub fn dps_cacti_count(mvec: &[usize]) -> Result<BigRational> {
    let (n, k, _) = composition_shape(mvec)?;
    let counts: Vec<u64> = mvec.iter().map(|&x| x as u64).collect();
    Ok(ratio(multinomial(&counts)) * pow_rational(n, k as i64 - 2) / BigRational::from_integer(BigInt::from(k)))
}

/// Both sides of `binom(k; m)·RT(λ) = k·∏λ_i·DPS(m)`, with `RT(λ)` the
/// number of relative generating sets of a permutation of cycle type `λ`.
pub fn dps_relation_sides(mvec: &[usize], rt: &BigUint) -> Result<(BigRational, BigRational)> {
    let (_, k, lambda) = composition_shape(mvec)?;
    let counts: Vec<u64> = mvec.iter().map(|&x| x as u64).collect();
    let lhs = ratio(multinomial(&counts) * rt);
    let prod: u64 = lambda.iter().product();
    let rhs = BigRational::from_integer(BigInt::from(k * prod)) * dps_cacti_count(mvec)?;
    Ok((lhs, rhs))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentVector {
    pub order: u64,
    pub exponents: Vec<u64>,
}

/// Eigenvalues of `g` as `e^{2πi e/|g|}`: a cycle of length `ℓ` and color
/// `c` contributes the rotation numbers `(c + t·m)/(ℓ·m)`, `t = 0..ℓ−1`.
///
/// When the group has rank `n − 1` (the symmetric groups), the eigenvalue 1
/// on the invariant line is dropped, so the vector has `rank` entries.
pub fn exponents(g: &Element) -> ExponentVector {
    let m = g.params().m() as u64;
    let order = g.order();
    let mut exponents: Vec<u64> = g
        .colored_cycles()
        .cycles
        .iter()
        .flat_map(|cyc| {
            let l = cyc.len() as u64;
            let c = cyc.color as u64;
            (0..l).map(move |t| (c + t * m) * order / (l * m))
        })
        .collect();
    exponents.sort_unstable();
    if g.params().rank() < g.params().n() {
        exponents.remove(0);
    }
    ExponentVector { order, exponents }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularFredReport {
    pub rank: usize,
    pub element: Element,
    pub exponents: ExponentVector,
    /// Closed-form `Fred(g)`.
    pub fred_formula: BigUint,
    /// `|g|^N · N! / ∏(e_j + 1)`.
    pub base: BigRational,
    /// `Fred(g) / base`.
    pub delta: BigRational,
    /// `Fred(g)` by descent, when requested.
    pub fred_enumerated: Option<BigUint>,
}

/// The regular class `D_{2k}(k,k)` of G(2,2,2k) (rank `2k`): two `k`-cycles
/// of color 1. Reports `δ_g = Fred(g)·∏(e_j+1) / (|g|^N·N!)`.
pub fn regular_fred_check_dn(rank: usize, enumerate: bool) -> Result<RegularFredReport> {
    if rank < 2 || !rank.is_multiple_of(2) {
        return Err(Error::InvalidParams(format!("D_{rank}(k,k) needs an even rank ≥ 2")));
    }
    let half = rank / 2;
    let params = GroupParams::new(2, 2, rank)?;
    let perm: Vec<usize> = (0..rank).map(|x| if (x + 1) % half == 0 { x + 1 - half } else { x + 1 }).collect();
    let mut colors = vec![0; rank];
    colors[0] = 1;
    colors[half] = 1;
    let element = Element::new(params, perm, colors)?;
    let fred_formula = fred_formula_qc(&element)?;
    let ev = exponents(&element);
    let denom: BigUint = ev.exponents.iter().map(|&e| BigUint::from(e + 1)).product();
    let base = ratio(pow(ev.order, rank as u64) * factorial(rank as u64)) / ratio(denom);
    let delta = ratio(fred_formula.clone()) / &base;
    let fred_enumerated = if enumerate { Some(count_reduced(&element)?) } else { None };
    Ok(RegularFredReport { rank, element, exponents: ev, fred_formula, base, delta, fred_enumerated })
}

/// Lossy convenience for display.
pub fn rational_to_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else if q.is_zero() {
        "0".into()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// `q` as an `f64`, for diagnostics only.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> Element {
        s.parse().unwrap()
    }

    fn n_cycle(n: usize) -> Element {
        let p = GroupParams::symmetric(n).unwrap();
        Element::new(p, (0..n).map(|k| (k + 1) % n).collect(), vec![0; n]).unwrap()
    }

    #[test]
    fn reduced_examples() {
        let id = GroupParams::symmetric(3).unwrap().identity();
        assert_eq!(enumerate_reduced(&id).unwrap().len(), 1);
        assert_eq!(enumerate_reduced(&n_cycle(3)).unwrap().len(), 3);
        assert_eq!(enumerate_reduced(&el("G(2,1,2):[2 1;1,0]")).unwrap().len(), 4);
        assert_eq!(count_reduced(&el("G(5,5,2):[1 2;1,4]")).unwrap(), BigUint::from(5u32));
        for n in 2..=6 {
            let c = n_cycle(n);
            let all = enumerate_reduced(&c).unwrap();
            assert_eq!(BigUint::from(all.len()), count_reduced(&c).unwrap());
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            assert!(all.iter().all(|t| t.product() == c));
        }
    }

    #[test]
    fn d4_22() {
        let g = el("G(2,2,4):[2 1 4 3;1,0,1,0]");
        assert_eq!(count_reduced(&g).unwrap(), BigUint::from(192u32));
        assert_eq!(fred_formula_qc(&g).unwrap(), BigUint::from(192u32));
    }

    #[test]
    fn qc_formulas() {
        assert_eq!(fred_formula_qc(&n_cycle(4)).unwrap(), BigUint::from(16u32));
        assert_eq!(fred_formula_qc(&el("G(3,1,3):[2 3 1;1,0,0]")).unwrap(), BigUint::from(27u32));
        assert_eq!(fred_formula_qc(&el("G(2,2,3):[2 1 3;1,0,1]")).unwrap(), BigUint::from(16u32));
        assert!(matches!(fred_formula_qc(&el("G(1,1,3):[2 1 3;0,0,0]")), Err(Error::NotQuasiCoxeter)));
    }

    #[test]
    fn pqc_formulas() {
        let two = el("G(1,1,4):[2 1 4 3;0,0,0,0]");
        assert_eq!(fred_formula_pqc(&two).unwrap(), BigUint::from(2u32));
        assert_eq!(count_reduced(&two).unwrap(), BigUint::from(2u32));
        let g = el("G(1,1,5):[2 3 1 5 4;0,0,0,0,0]");
        assert_eq!(fred_formula_pqc(&g).unwrap(), BigUint::from(9u32));
        assert_eq!(count_reduced(&g).unwrap(), BigUint::from(9u32));
        assert!(matches!(fred_formula_pqc(&el("G(2,1,2):[1 2;1,1]")), Err(Error::NotParabolicQuasiCoxeter)));
    }

    #[test]
    fn generalized_cycle_examples() {
        let d = generalized_cycles(&el("G(2,2,4):[2 1 4 3;1,0,1,0]")).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0].kind, ComponentKind::ColoredPair { a: 2, b: 2 });
        assert_eq!(d.components[0].support, vec![0, 1, 2, 3]);
        let d = generalized_cycles(&el("G(3,1,3):[2 3 1;1,0,0]")).unwrap();
        assert_eq!(d.components[0].kind, ComponentKind::SingleColoredCycle);
        let d = generalized_cycles(&el("G(1,1,5):[2 3 1 5 4;0,0,0,0,0]")).unwrap();
        assert_eq!(d.components.len(), 2);
        let g = el("G(3,1,4):[2 1 3 4;1,2,0,2]");
        let d = generalized_cycles(&g).unwrap();
        let total: usize = d.components.iter().map(|c| c.refl_length).sum();
        assert_eq!(total, refl_length(&g).unwrap());
        let product = d.components.iter().fold(g.params().identity(), |acc, c| acc.compose(&c.element));
        assert_eq!(product, g);
    }

    #[test]
    fn full_min_examples() {
        let t = el("G(1,1,3):[2 1 3;0,0,0]");
        assert_eq!(enumerate_full_min(&t).unwrap().len(), 8);
        let s2 = GroupParams::symmetric(2).unwrap();
        let full = enumerate_full_min(&s2.identity()).unwrap();
        assert_eq!(full.len(), 1);
        assert_eq!(full[0].len(), 2);
        let c = n_cycle(3);
        assert_eq!(enumerate_full_min(&c).unwrap(), enumerate_reduced(&c).unwrap());
    }

    #[test]
    fn hurwitz_numbers() {
        assert_eq!(hurwitz_number(&[1]).unwrap(), BigUint::one());
        assert_eq!(hurwitz_number(&[2, 1]).unwrap(), BigUint::from(8u32));
        for n in 1..=7 {
            assert_eq!(hurwitz_number(&[n]).unwrap(), pow(n as u64, (n as u64).saturating_sub(2)));
        }
        assert!(hurwitz_number(&[]).is_err());
    }

    #[test]
    fn cacti() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(dps_cacti_count(&[0, 1]).unwrap(), half);
        // three 1-gons: (1/3)·1·3
        assert_eq!(dps_cacti_count(&[3]).unwrap(), BigRational::one());
        assert!(dps_cacti_count(&[0, 0]).is_err());
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(exponents(&n_cycle(3)), ExponentVector { order: 3, exponents: vec![1, 2] });
        assert_eq!(exponents(&el("G(2,1,2):[2 1;1,0]")), ExponentVector { order: 4, exponents: vec![1, 3] });
        let id = GroupParams::new(3, 1, 2).unwrap().identity();
        assert_eq!(exponents(&id), ExponentVector { order: 1, exponents: vec![0, 0] });
    }

    #[test]
    fn regular_fred() {
        let r = regular_fred_check_dn(4, true).unwrap();
        assert_eq!(r.element, el("G(2,2,4):[2 1 4 3;1,0,1,0]"));
        assert_eq!(r.exponents.exponents, vec![1, 1, 3, 3]);
        assert_eq!(r.delta, BigRational::from_integer(2.into()));
        assert_eq!(r.fred_enumerated, Some(BigUint::from(192u32)));
        let r = regular_fred_check_dn(8, false).unwrap();
        assert_eq!(r.delta, BigRational::from_integer(4.into()));
        assert_eq!(regular_fred_check_dn(2, true).unwrap().delta, BigRational::one());
    }
}
