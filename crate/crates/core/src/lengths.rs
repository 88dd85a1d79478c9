//! Reflection length, full reflection length, fixed-space codimension and the
//! absolute order.

use std::collections::HashMap;

use serde::Serialize;

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::wreath::{Element, GroupParams};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LengthReport {
    pub refl_length: usize,
    pub full_length: usize,
    pub codim_fixed: usize,
    /// Only reported when `p = m`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v_m: Option<usize>,
}

/// Shortest factorization of `g` into reflections.
///
/// In G(m,1,n) this is `n − c₀` where `c₀` counts the cycles of color 0; in
/// G(m,m,n) it is `n + c − 2·v_m` with `c` the number of cycles.
pub fn refl_length(g: &Element) -> Result<usize> {
    let params = g.params();
    let n = params.n();
    let cycles = g.colored_cycles();
    if params.p() == 1 {
        Ok(n - cycles.zero_color().count())
    } else if params.p() == params.m() {
        Ok(n + cycles.cycles.len() - 2 * v_m(g)?)
    } else {
        Err(Error::UnsupportedP(params))
    }
}

/// The largest number of blocks in a partition of the cycles of `g` such that
/// every block has total color 0 mod `m`.
pub fn v_m(g: &Element) -> Result<usize> {
    let m = g.params().m();
    let cycles = g.colored_cycles();
    // A zero-color cycle is always best left on its own.
    let zero = cycles.zero_color().count();
    let rest: Vec<u32> = cycles.nonzero_color().map(|c| c.color).collect();
    if rest.len() > 16 {
        return Err(Error::TooManyCycles(rest.len()));
    }
    let k = rest.len();
    let full = (1usize << k) - 1;
    let sum_mod = |mask: usize| -> u32 {
        (0..k).filter(|b| mask >> b & 1 == 1).map(|b| rest[b] as u64).sum::<u64>() as u32 % m
    };
    // best[mask] = max blocks partitioning `mask` into zero-sum blocks, or None if impossible.
    let mut memo: HashMap<usize, Option<usize>> = HashMap::new();
    fn go(
        mask: usize,
        sum_mod: &dyn Fn(usize) -> u32,
        memo: &mut HashMap<usize, Option<usize>>,
    ) -> Option<usize> {
        if mask == 0 {
            return Some(0);
        }
        if let Some(&v) = memo.get(&mask) {
            return v;
        }
        let low = mask & mask.wrapping_neg();
        let others = mask ^ low;
        let mut best = None;
        // Every block containing the lowest cycle: low ∪ (subset of the others).
        let mut sub = others;
        loop {
            let block = low | sub;
            if sum_mod(block) == 0 {
                if let Some(r) = go(mask ^ block, sum_mod, memo) {
                    best = best.max(Some(r + 1));
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & others;
        }
        memo.insert(mask, best);
        best
    }
    // The total color is 0 mod p; when p < m the nonzero cycles may not
    // partition at all, in which case v_m counts only the zero-color cycles.
    Ok(zero + go(full, &sum_mod, &mut memo).unwrap_or(0))
}

/// Shortest length of a reflection factorization of `g` whose factors
/// generate the whole group.
pub fn full_refl_length(g: &Element) -> usize {
    let params = g.params();
    let (m, p, n) = (params.m() as u64, params.p() as u64, params.n());
    if n == 1 {
        // G(m,p,1) is the cyclic group G(m/p,1,1); read the color in that group.
        let order = m / p;
        if order == 1 {
            return 0;
        }
        let c = g.colors()[0] as u64 / p;
        return if gcd(c, order) == 1 { 1 } else { 2 };
    }
    let cycles = g.colored_cycles();
    let k = cycles.cycles.len();
    let d = cycles.cycles.iter().fold(p, |acc, c| gcd(acc, c.color as u64));
    if m == p {
        if d == 1 {
            n + k - 2
        } else {
            n + k
        }
    } else {
        let wt_generates = gcd(g.weight() as u64, m) == p;
        match (wt_generates, d == 1) {
            (true, true) => n + k - 1,
            (false, true) => n + k,
            (true, false) => n + k + 1,
            (false, false) => n + k + 2,
        }
    }
}

/// Codimension of the fixed space: `n` minus the number of zero-color cycles.
pub fn codim_fixed(g: &Element) -> usize {
    g.params().n() - g.colored_cycles().zero_color().count()
}

/// `u ≤_R v` in the absolute order: `ℓ_R(u) + ℓ_R(u⁻¹v) = ℓ_R(v)`.
pub fn absolute_leq(u: &Element, v: &Element) -> Result<bool> {
    let quotient = u.inverse().multiply(v)?;
    Ok(refl_length(u)? + refl_length(&quotient)? == refl_length(v)?)
}

pub fn length_report(g: &Element) -> Result<LengthReport> {
    let params: GroupParams = g.params();
    Ok(LengthReport {
        refl_length: refl_length(g)?,
        full_length: full_refl_length(g),
        codim_fixed: codim_fixed(g),
        v_m: if params.p() == params.m() { Some(v_m(g)?) } else { None },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::GroupTable;

    fn el(s: &str) -> Element {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(refl_length(&el("G(3,1,3):[1 2 3;1,1,1]")).unwrap(), 3);
        assert_eq!(refl_length(&el("G(2,2,2):[1 2;1,1]")).unwrap(), 2);
        assert_eq!(v_m(&el("G(2,2,2):[1 2;1,1]")).unwrap(), 1);
        assert_eq!(v_m(&el("G(3,3,3):[1 2 3;1,1,1]")).unwrap(), 1);
        assert_eq!(v_m(&el("G(3,3,3):[1 2 3;0,0,0]")).unwrap(), 3);
        assert_eq!(full_refl_length(&el("G(1,1,3):[2 1 3;0,0,0]")), 3);
        assert_eq!(full_refl_length(&el("G(4,2,2):[1 2;0,0]")), 6);
        assert_eq!(full_refl_length(&el("G(3,3,4):[1 2 3 4;0,0,0,0]")), 8);
        assert_eq!(codim_fixed(&el("G(3,1,3):[1 2 3;1,1,1]")), 3);
        assert_eq!(codim_fixed(&el("G(2,1,3):[2 3 1;0,0,0]")), 2);
        assert!(matches!(refl_length(&el("G(4,2,2):[1 2;0,0]")), Err(Error::UnsupportedP(_))));
    }

    #[test]
    fn absolute_order_examples() {
        let s3 = GroupParams::symmetric(3).unwrap();
        let t = el("G(1,1,3):[2 1 3;0,0,0]");
        let c = el("G(1,1,3):[2 3 1;0,0,0]");
        assert!(absolute_leq(&t, &c).unwrap());
        assert!(absolute_leq(&s3.identity(), &c).unwrap());
        assert!(absolute_leq(&c, &c).unwrap());
        assert!(!absolute_leq(&c, &t).unwrap());
    }

    #[test]
    fn shi_formula_matches_cayley_distance() {
        for (m, p, n) in [(1, 1, 4), (2, 1, 3), (3, 1, 2), (2, 2, 3), (3, 3, 3), (4, 4, 2), (2, 2, 4)] {
            let t = GroupTable::new(GroupParams::new(m, p, n).unwrap(), 5000).unwrap();
            for (k, g) in t.elements().iter().enumerate() {
                assert_eq!(refl_length(g).unwrap() as u32, t.length(k as u32), "{g}");
                assert!(refl_length(g).unwrap() >= codim_fixed(g));
                if p == 1 {
                    assert_eq!(refl_length(g).unwrap(), codim_fixed(g));
                }
            }
        }
    }
}
