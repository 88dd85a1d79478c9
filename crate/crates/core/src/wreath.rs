//! The groups G(m,p,n) as monomial matrices.
//!
//! An element is stored as a pair `[u; a]`: a permutation `u` of `{0..n}` in
//! one-line form and a vector `a` of colors mod `m`. As a matrix, column `k`
//! has its only nonzero entry in row `u(k)`, equal to `ζ^{a_k}` with `ζ` a
//! primitive `m`-th root of unity. Multiplication follows
//! `[u;a]·[v;b] = [uv; v(a)+b]` where `uv` applies `v` first and
//! `v(a) = (a_{v(0)}, …, a_{v(n-1)})`.
//!
//! Indices are 0-based in memory and 1-based in every textual form.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::arith::{factorial, gcd, pow};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ParamsRepr", into = "ParamsRepr")]
pub struct GroupParams {
    m: u32,
    p: u32,
    n: usize,
}

#[derive(Serialize, Deserialize)]
struct ParamsRepr {
    m: u32,
    p: u32,
    n: usize,
}

impl TryFrom<ParamsRepr> for GroupParams {
    type Error = Error;
    fn try_from(r: ParamsRepr) -> Result<Self> {
        GroupParams::new(r.m, r.p, r.n)
    }
}

impl From<GroupParams> for ParamsRepr {
    fn from(g: GroupParams) -> Self {
        ParamsRepr { m: g.m, p: g.p, n: g.n }
    }
}

impl GroupParams {
    pub fn new(m: u32, p: u32, n: usize) -> Result<Self> {
        if m == 0 || p == 0 || n == 0 {
            return Err(Error::InvalidParams(format!("G({m},{p},{n}): m, p, n must be positive")));
        }
        if !m.is_multiple_of(p) {
            return Err(Error::InvalidParams(format!("G({m},{p},{n}): p must divide m")));
        }
        if n > u16::MAX as usize {
            return Err(Error::InvalidParams(format!("G({m},{p},{n}): degree too large")));
        }
        Ok(GroupParams { m, p, n })
    }

    /// The symmetric group `S_n = G(1,1,n)`.
    pub fn symmetric(n: usize) -> Result<Self> {
        Self::new(1, 1, n)
    }

    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn n(&self) -> usize {
        self.n
    }

    /// `p ∈ {1, m}`: the cases generated by `rank` reflections.
    pub fn is_well_generated(&self) -> bool {
        self.p == 1 || self.p == self.m
    }

    /// Size of a minimal reflection generating set; the dimension of the
    /// essential part of the reflection representation.
    pub fn rank(&self) -> usize {
        if self.p == self.m && (self.m == 1 || self.n == 1) {
            self.n - 1
        } else {
            self.n
        }
    }

    /// `m^n · n! / p`.
    pub fn order(&self) -> BigUint {
        pow(self.m as u64, self.n as u64) * factorial(self.n as u64) / self.p
    }

    /// The order if it fits in a `u64`.
    pub fn order_u64(&self) -> Option<u64> {
        u64::try_from(self.order()).ok()
    }

    pub fn identity(&self) -> Element {
        Element {
            params: *self,
            perm: (0..self.n).collect(),
            colors: vec![0; self.n],
        }
    }

    pub fn reflection_count(&self) -> usize {
        let (m, p, n) = (self.m as usize, self.p as usize, self.n);
        m * n * (n - 1) / 2 + n * (m / p - 1)
    }

    /// All reflections in canonical order: transposition-like ones by `(i, j, k)`,
    /// then diagonal ones by `(i, k)`.
    pub fn reflections(&self) -> Vec<Reflection> {
        let mut out = Vec::with_capacity(self.reflection_count());
        for i in 0..self.n {
            for j in i + 1..self.n {
                for k in 0..self.m {
                    out.push(Reflection::Transposition { i, j, color: k });
                }
            }
        }
        for i in 0..self.n {
            for c in (self.p..self.m).step_by(self.p as usize) {
                out.push(Reflection::Diagonal { i, color: c });
            }
        }
        out
    }

    /// Every element of the group, sorted, provided there are at most `cap`.
    pub fn elements(&self, cap: usize) -> Result<Vec<Element>> {
        match self.order_u64() {
            Some(o) if o <= cap as u64 => {}
            _ => return Err(Error::CapExceeded { what: "group enumeration", cap }),
        }
        let n = self.n;
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..n).collect();
        let m = self.m as u64;
        let codes = m.pow(n as u32);
        loop {
            // colors read as base-m digits, most significant first, keep the output sorted
            for code in 0..codes {
                let mut colors = vec![0u32; n];
                let mut rest = code;
                for slot in colors.iter_mut().rev() {
                    *slot = (rest % m) as u32;
                    rest /= m;
                }
                if colors.iter().map(|&c| c as u64).sum::<u64>() % self.p as u64 == 0 {
                    out.push(Element { params: *self, perm: perm.clone(), colors });
                }
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{},{})", self.m, self.p, self.n)
    }
}

impl FromStr for GroupParams {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix("G(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected G(m,p,n), got {s:?}")))?;
        let nums: Vec<&str> = inner.split(',').map(str::trim).collect();
        if nums.len() != 3 {
            return Err(Error::Parse(format!("expected three parameters in {s:?}")));
        }
        let bad = |t: &str| Error::Parse(format!("not a positive integer: {t:?}"));
        let m = nums[0].parse().map_err(|_| bad(nums[0]))?;
        let p = nums[1].parse().map_err(|_| bad(nums[1]))?;
        let n = nums[2].parse().map_err(|_| bad(nums[2]))?;
        GroupParams::new(m, p, n)
    }
}

/// Lexicographic successor; returns false (leaving the slice untouched) at the last permutation.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// An element `[u; a]` of G(m,p,n).
///
/// The derived order compares the permutation in one-line form first, then the colors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ElementRepr", into = "ElementRepr")]
pub struct Element {
    params: GroupParams,
    perm: Vec<usize>,
    colors: Vec<u32>,
}

/// JSON form: `{"m":2,"p":1,"n":2,"perm":[2,1],"colors":[0,1]}` with a 1-based permutation.
#[derive(Serialize, Deserialize)]
struct ElementRepr {
    m: u32,
    p: u32,
    n: usize,
    perm: Vec<usize>,
    colors: Vec<u32>,
}

impl TryFrom<ElementRepr> for Element {
    type Error = Error;
    fn try_from(r: ElementRepr) -> Result<Self> {
        let params = GroupParams::new(r.m, r.p, r.n)?;
        Element::from_one_line(params, &r.perm, r.colors)
    }
}

impl From<Element> for ElementRepr {
    fn from(e: Element) -> Self {
        ElementRepr {
            m: e.params.m,
            p: e.params.p,
            n: e.params.n,
            perm: e.perm.iter().map(|&x| x + 1).collect(),
            colors: e.colors,
        }
    }
}

impl Element {
    /// Builds `[u; a]` from a 0-based one-line permutation and colors in `0..m`.
    pub fn new(params: GroupParams, perm: Vec<usize>, colors: Vec<u32>) -> Result<Self> {
        let n = params.n;
        let not_member = |reason: String| Error::NotMember { params, reason };
        if perm.len() != n || colors.len() != n {
            return Err(not_member(format!(
                "expected {n} permutation entries and {n} colors, got {} and {}",
                perm.len(),
                colors.len()
            )));
        }
        let mut seen = vec![false; n];
        for &x in &perm {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(not_member("permutation is not a bijection".into()));
            }
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= params.m) {
            return Err(not_member(format!("color {c} is not in 0..{}", params.m)));
        }
        let wt: u64 = colors.iter().map(|&c| c as u64).sum::<u64>() % params.m as u64;
        if !wt.is_multiple_of(params.p as u64) {
            return Err(not_member(format!("color sum {wt} is not a multiple of p = {}", params.p)));
        }
        Ok(Element { params, perm, colors })
    }

    /// Builds an element from a 1-based one-line permutation.
    pub fn from_one_line(params: GroupParams, one_line: &[usize], colors: Vec<u32>) -> Result<Self> {
        let perm = one_line
            .iter()
            .map(|&x| {
                x.checked_sub(1).ok_or_else(|| Error::NotMember {
                    params,
                    reason: "permutation entries are 1-based".into(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Element::new(params, perm, colors)
    }

    /// Builds a permutation matrix (all colors zero) from 0-based disjoint cycles.
    pub fn from_cycles(params: GroupParams, cycles: &[&[usize]], colors: Vec<u32>) -> Result<Self> {
        let mut perm: Vec<usize> = (0..params.n).collect();
        for cyc in cycles {
            for (idx, &x) in cyc.iter().enumerate() {
                let y = cyc[(idx + 1) % cyc.len()];
                if x >= params.n || y >= params.n {
                    return Err(Error::NotMember { params, reason: "cycle entry out of range".into() });
                }
                perm[x] = y;
            }
        }
        Element::new(params, perm, colors)
    }

    pub fn params(&self) -> GroupParams {
        self.params
    }
    /// 0-based one-line permutation: `perm()[k] = u(k)`.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(k, &x)| k == x) && self.colors.iter().all(|&c| c == 0)
    }

    pub fn multiply(&self, other: &Element) -> Result<Element> {
        if self.params != other.params {
            return Err(Error::ParamMismatch(self.params, other.params));
        }
        Ok(self.compose(other))
    }

    /// `self · other`, assuming equal parameters.
    pub(crate) fn compose(&self, other: &Element) -> Element {
        debug_assert_eq!(self.params, other.params);
        let m = self.params.m;
        let perm = other.perm.iter().map(|&v| self.perm[v]).collect();
        let colors = other
            .perm
            .iter()
            .zip(&other.colors)
            .map(|(&v, &b)| (self.colors[v] + b) % m)
            .collect();
        Element { params: self.params, perm, colors }
    }

    pub fn inverse(&self) -> Element {
        let m = self.params.m;
        let n = self.params.n;
        let mut perm = vec![0; n];
        for (k, &x) in self.perm.iter().enumerate() {
            perm[x] = k;
        }
        let colors = perm.iter().map(|&x| (m - self.colors[x]) % m).collect();
        Element { params: self.params, perm, colors }
    }

    /// `y⁻¹ · self · y`.
    pub fn conjugate_by(&self, y: &Element) -> Element {
        y.inverse().compose(self).compose(y)
    }

    /// `wt = Σ a_k mod m`.
    pub fn weight(&self) -> u32 {
        (self.colors.iter().map(|&c| c as u64).sum::<u64>() % self.params.m as u64) as u32
    }

    pub fn colored_cycles(&self) -> ColoredCycles {
        let n = self.params.n;
        let m = self.params.m as u64;
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut support = Vec::new();
            let mut color = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                support.push(x);
                color += self.colors[x] as u64;
                x = self.perm[x];
            }
            cycles.push(Cycle { support, color: (color % m) as u32 });
        }
        ColoredCycles { m: self.params.m, cycles }
    }

    /// Multiplicative order of the element.
    pub fn order(&self) -> u64 {
        let m = self.params.m as u64;
        self.colored_cycles()
            .cycles
            .iter()
            .map(|c| c.len() as u64 * (m / gcd(c.color as u64, m)))
            .fold(1, crate::arith::lcm)
    }

    /// The element as a reflection, if it is one.
    pub fn as_reflection(&self) -> Option<Reflection> {
        let moved: Vec<usize> = (0..self.params.n).filter(|&k| self.perm[k] != k).collect();
        match moved.as_slice() {
            [] => {
                let nz: Vec<usize> = (0..self.params.n).filter(|&k| self.colors[k] != 0).collect();
                match nz.as_slice() {
                    [i] => Some(Reflection::Diagonal { i: *i, color: self.colors[*i] }),
                    _ => None,
                }
            }
            [i, j] => {
                let (i, j) = (*i, *j);
                let m = self.params.m;
                let others_zero = (0..self.params.n).all(|k| k == i || k == j || self.colors[k] == 0);
                let k = self.colors[i];
                (others_zero && (k + self.colors[j]).is_multiple_of(m))
                    .then_some(Reflection::Transposition { i, j, color: k })
            }
            _ => None,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:[", self.params)?;
        for (k, x) in self.perm.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        f.write_str(";")?;
        for (k, c) in self.colors.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Element {
    type Err = Error;

    /// Parses `G(m,p,n):[u1 u2 ... un;a1,a2,...,an]`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, body) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("missing ':' in {s:?}")))?;
        let params: GroupParams = head.parse()?;
        let body = body
            .trim()
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [perm;colors] in {s:?}")))?;
        let (perm_text, color_text) = body
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("missing ';' in {s:?}")))?;
        let perm = perm_text
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad permutation entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        let colors = color_text
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| Error::Parse(format!("bad color {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Element::from_one_line(params, &perm, colors)
    }
}

pub fn parse_element(text: &str) -> Result<Element> {
    text.parse()
}

pub fn format_element(x: &Element) -> String {
    x.to_string()
}

/// A reflection of G(m,p,n). Indices are 0-based.
///
/// `Transposition { i, j, color: k }` (with `i < j`) is `[(i j); k]`: it swaps
/// coordinates `i` and `j` with colors `k` at `i` and `-k` at `j`, and fixes the
/// hyperplane `x_j = ζ^k x_i`. `Diagonal { i, color }` scales coordinate `i` by
/// `ζ^color`; it only exists when `p < m`, with `color` a nonzero multiple of `p`.
///
/// The derived order is the canonical reflection order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Reflection {
    Transposition { i: usize, j: usize, color: u32 },
    Diagonal { i: usize, color: u32 },
}

impl Reflection {
    /// `[(i j); k]` for any `i ≠ j`, normalized through `[(i j); k] = [(j i); -k]`.
    pub fn transposition(i: usize, j: usize, color: u32, m: u32) -> Reflection {
        assert_ne!(i, j, "a transposition needs two distinct indices");
        let color = color % m;
        if i < j {
            Reflection::Transposition { i, j, color }
        } else {
            Reflection::Transposition { i: j, j: i, color: (m - color) % m }
        }
    }

    /// Checks that this reflection lives in G(m,p,n).
    pub fn validate(&self, params: GroupParams) -> Result<()> {
        let ok = match *self {
            Reflection::Transposition { i, j, color } => i < j && j < params.n && color < params.m,
            Reflection::Diagonal { i, color } => {
                i < params.n && color != 0 && color < params.m && color % params.p == 0
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::NotMember { params, reason: format!("{self} is not a reflection of this group") })
        }
    }

    pub fn to_element(&self, params: GroupParams) -> Element {
        let mut e = params.identity();
        match *self {
            Reflection::Transposition { i, j, color } => {
                e.perm.swap(i, j);
                e.colors[i] = color % params.m;
                e.colors[j] = (params.m - color % params.m) % params.m;
            }
            Reflection::Diagonal { i, color } => e.colors[i] = color % params.m,
        }
        e
    }

    /// The coordinates this reflection touches.
    pub fn support(&self) -> Vec<usize> {
        match *self {
            Reflection::Transposition { i, j, .. } => vec![i, j],
            Reflection::Diagonal { i, .. } => vec![i],
        }
    }
}

impl fmt::Display for Reflection {
    /// `[(1 2);0]` for transposition-like reflections, `[(1);2]` for diagonal ones.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Reflection::Transposition { i, j, color } => write!(f, "[({} {});{}]", i + 1, j + 1, color),
            Reflection::Diagonal { i, color } => write!(f, "[({});{}]", i + 1, color),
        }
    }
}

impl FromStr for Reflection {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected [(i j);k] or [(i);c], got {s:?}"));
        let inner = s.trim().strip_prefix("[(").and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
        let (idx, color) = inner.split_once(");").ok_or_else(bad)?;
        let color: u32 = color.trim().parse().map_err(|_| bad())?;
        let idx: Vec<usize> = idx
            .split_whitespace()
            .map(|t| t.parse::<usize>().ok().filter(|&x| x >= 1).map(|x| x - 1).ok_or_else(bad))
            .collect::<Result<_>>()?;
        match idx.as_slice() {
            [i] => Ok(Reflection::Diagonal { i: *i, color }),
            [i, j] if i < j => Ok(Reflection::Transposition { i: *i, j: *j, color }),
            _ => Err(bad()),
        }
    }
}

impl TryFrom<String> for Reflection {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Reflection> for String {
    fn from(r: Reflection) -> String {
        r.to_string()
    }
}

/// One cycle of the underlying permutation together with its color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    /// Indices in cycle order `i, u(i), u²(i), …`, starting at the smallest.
    pub support: Vec<usize>,
    /// Sum of the colors over the support, mod `m`.
    pub color: u32,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.support.len()
    }
    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }
}

/// Cycle decomposition of an element, ordered by smallest support entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredCycles {
    pub m: u32,
    pub cycles: Vec<Cycle>,
}

impl ColoredCycles {
    pub fn zero_color(&self) -> impl Iterator<Item = &Cycle> {
        self.cycles.iter().filter(|c| c.color == 0)
    }
    pub fn nonzero_color(&self) -> impl Iterator<Item = &Cycle> {
        self.cycles.iter().filter(|c| c.color != 0)
    }
    /// `(length, color)` pairs, sorted.
    pub fn multiset(&self) -> Vec<(usize, u32)> {
        let mut v: Vec<_> = self.cycles.iter().map(|c| (c.len(), c.color)).collect();
        v.sort_unstable();
        v
    }
}
