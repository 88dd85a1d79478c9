//! The Hurwitz action of the braid group on tuples of reflections.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::wreath::{Element, GroupParams, Reflection};

pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

/// An ordered tuple of reflections, multiplied left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FactorTuple {
    #[serde(skip)]
    pub params: GroupParams,
    pub factors: Vec<Reflection>,
}

impl FactorTuple {
    pub fn new(params: GroupParams, factors: Vec<Reflection>) -> Result<Self> {
        for r in &factors {
            r.validate(params)?;
        }
        Ok(FactorTuple { params, factors })
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn product(&self) -> Element {
        self.factors
            .iter()
            .fold(self.params.identity(), |acc, r| acc.compose(&r.to_element(self.params)))
    }

    /// The distinct factors, sorted.
    pub fn factor_set(&self) -> Vec<Reflection> {
        let mut s = self.factors.clone();
        s.sort_unstable();
        s.dedup();
        s
    }
}

impl fmt::Display for FactorTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, r) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(")")
    }
}

fn conjugate(r: &Reflection, by: &Reflection, params: GroupParams) -> Reflection {
    r.to_element(params)
        .conjugate_by(&by.to_element(params))
        .as_reflection()
        .expect("conjugates of reflections are reflections")
}

/// `σ_i` (1-based `i`) sends `(…, a, b, …)` to `(…, b, b⁻¹ab, …)`;
/// its inverse sends `(…, a, b, …)` to `(…, aba⁻¹, a, …)`.
pub fn braid_act(i: usize, t: &FactorTuple, inverse: bool) -> Result<FactorTuple> {
    if i == 0 || i >= t.len() {
        return Err(Error::IndexOutOfRange { index: i, len: t.len() });
    }
    let mut out = t.clone();
    let (a, b) = (t.factors[i - 1], t.factors[i]);
    if inverse {
        let a_inv = a.to_element(t.params).inverse().as_reflection().expect("reflection");
        out.factors[i - 1] = conjugate(&b, &a_inv, t.params);
        out.factors[i] = a;
    } else {
        out.factors[i - 1] = b;
        out.factors[i] = conjugate(&a, &b, t.params);
    }
    Ok(out)
}

/// Breadth-first orbit under all `σ_i^{±1}`, returned sorted.
pub fn hurwitz_orbit(t: &FactorTuple, cap: usize) -> Result<Vec<FactorTuple>> {
    let product = t.product();
    let mut seen: HashSet<FactorTuple> = HashSet::from([t.clone()]);
    let mut queue = VecDeque::from([t.clone()]);
    while let Some(cur) = queue.pop_front() {
        for i in 1..cur.len() {
            for inverse in [false, true] {
                let next = braid_act(i, &cur, inverse)?;
                debug_assert_eq!(next.product(), product);
                if !seen.contains(&next) {
                    if seen.len() >= cap {
                        return Err(Error::CapExceeded { what: "Hurwitz orbit", cap });
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    let mut orbit: Vec<FactorTuple> = seen.into_iter().collect();
    orbit.sort_unstable();
    Ok(orbit)
}

/// Whether one Hurwitz orbit exhausts the reduced factorizations of `g`.
pub fn is_hurwitz_transitive_on_reduced(g: &Element, cap: usize) -> Result<bool> {
    let caps = crate::factor::EnumCaps { tuples: cap, ..Default::default() };
    let red = crate::factor::enumerate_reduced_with(g, caps)?;
    let orbit = hurwitz_orbit(&red[0], cap)?;
    Ok(orbit == red)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(i: usize, j: usize, color: u32) -> Reflection {
        Reflection::Transposition { i, j, color }
    }

    #[test]
    fn sigma_on_s3() {
        let s3 = GroupParams::symmetric(3).unwrap();
        let tup = FactorTuple::new(s3, vec![t(0, 1, 0), t(1, 2, 0)]).unwrap();
        let out = braid_act(1, &tup, false).unwrap();
        assert_eq!(out.factors, vec![t(1, 2, 0), t(0, 2, 0)]);
        assert_eq!(braid_act(1, &out, true).unwrap(), tup);
        assert_eq!(out.product(), tup.product());
        let same = FactorTuple::new(s3, vec![t(0, 1, 0), t(0, 1, 0)]).unwrap();
        assert_eq!(braid_act(1, &same, false).unwrap(), same);
        assert!(matches!(braid_act(2, &tup, false), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(braid_act(0, &tup, false), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn trivial_orbits() {
        let s3 = GroupParams::symmetric(3).unwrap();
        let empty = FactorTuple::new(s3, vec![]).unwrap();
        assert_eq!(hurwitz_orbit(&empty, 10).unwrap(), vec![empty]);
        let one = FactorTuple::new(s3, vec![t(0, 2, 0)]).unwrap();
        assert_eq!(hurwitz_orbit(&one, 10).unwrap(), vec![one]);
    }

    #[test]
    fn orbit_of_three_cycle() {
        let s3 = GroupParams::symmetric(3).unwrap();
        let tup = FactorTuple::new(s3, vec![t(0, 1, 0), t(1, 2, 0)]).unwrap();
        assert_eq!(hurwitz_orbit(&tup, 100).unwrap().len(), 3);
        assert!(matches!(hurwitz_orbit(&tup, 2), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn transitivity_examples() {
        let diag: Element = "G(3,1,3):[1 2 3;1,1,1]".parse().unwrap();
        assert!(is_hurwitz_transitive_on_reduced(&diag, 1000).unwrap());
        let red = crate::factor::enumerate_reduced(&diag).unwrap();
        assert_eq!(red.len(), 6);
        for n in 2..=5 {
            let p = GroupParams::symmetric(n).unwrap();
            let perm: Vec<usize> = (0..n).map(|k| (k + 1) % n).collect();
            let c = Element::new(p, perm, vec![0; n]).unwrap();
            assert!(is_hurwitz_transitive_on_reduced(&c, 10_000).unwrap());
        }
        let qc: Element = "G(3,1,2):[2 1;1,0]".parse().unwrap();
        assert!(is_hurwitz_transitive_on_reduced(&qc, 1000).unwrap());
    }
}
