//! Root and coroot lattices for the Weyl groups of types A, B and D, realized
//! as G(1,1,n+1), G(2,1,n) and G(2,2,n) acting on `Z^N`.
//!
//! `[(i j); 0]` has root `e_i − e_j`, `[(i j); 1]` has root `e_i + e_j` (it
//! fixes `x_j = −x_i`); both are their own coroots. In type B the diagonal
//! reflection at `i` has the short root `e_i` and coroot `2e_i`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;

use crate::arith::{factorial, pow};
use crate::error::{Error, Result};
use crate::pqc::{first_reduced, is_parabolic_qc, parabolic_closure_type, parabolic_reflections, subgroup_closure};
use crate::wreath::{Element, GroupParams, Reflection};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum WeylFamily {
    A,
    B,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WeylType {
    pub family: WeylFamily,
    pub rank: usize,
}

impl WeylType {
    pub fn new(family: WeylFamily, rank: usize) -> Result<Self> {
        let min = if family == WeylFamily::D { 2 } else { 1 };
        if rank < min {
            return Err(Error::InvalidParams(format!("{family:?}{rank} needs rank ≥ {min}")));
        }
        Ok(WeylType { family, rank })
    }

    /// The realizing group.
    pub fn params(&self) -> GroupParams {
        let r = self.rank;
        match self.family {
            WeylFamily::A => GroupParams::new(1, 1, r + 1),
            WeylFamily::B => GroupParams::new(2, 1, r),
            WeylFamily::D => GroupParams::new(2, 2, r),
        }
        .expect("valid realization")
    }

    /// Ambient dimension `N`.
    pub fn ambient(&self) -> usize {
        self.params().n()
    }

    /// `I(W) = [P : Q]`.
    pub fn connection_index(&self) -> u64 {
        match self.family {
            WeylFamily::A => self.rank as u64 + 1,
            WeylFamily::B => 2,
            WeylFamily::D => 4,
        }
    }

    pub fn coxeter_number(&self) -> u64 {
        let n = self.rank as u64;
        match self.family {
            WeylFamily::A => n + 1,
            WeylFamily::B => 2 * n,
            WeylFamily::D => 2 * n - 2,
        }
    }

    pub fn order(&self) -> BigUint {
        self.params().order()
    }

    /// A Coxeter element: the product of the simple reflections.
    pub fn coxeter_element(&self) -> Element {
        let params = self.params();
        self.simple_reflections()
            .iter()
            .fold(params.identity(), |acc, r| acc.compose(&r.to_element(params)))
    }

    pub fn simple_reflections(&self) -> Vec<Reflection> {
        let n = self.rank;
        let chain = |len: usize| (0..len).map(|i| Reflection::Transposition { i, j: i + 1, color: 0 });
        match self.family {
            WeylFamily::A => chain(n).collect(),
            WeylFamily::B => chain(n - 1).chain([Reflection::Diagonal { i: n - 1, color: 1 }]).collect(),
            WeylFamily::D => chain(n - 1).chain([Reflection::Transposition { i: n - 2, j: n - 1, color: 1 }]).collect(),
        }
    }
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for WeylType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("expected a type like A3, B2 or D4, got {s:?}"));
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => WeylFamily::A,
            Some('B') => WeylFamily::B,
            Some('D') => WeylFamily::D,
            _ => return Err(bad()),
        };
        let rank = chars.as_str().parse().map_err(|_| bad())?;
        WeylType::new(family, rank)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootPair {
    pub root: Vec<i64>,
    pub coroot: Vec<i64>,
}

pub fn pairing(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn root_of(t: &Reflection, ty: WeylType) -> Result<RootPair> {
    let params = ty.params();
    let mismatch = || Error::TypeMismatch { reflection: t.to_string(), ty: ty.to_string() };
    t.validate(params).map_err(|_| mismatch())?;
    let mut root = vec![0i64; params.n()];
    let mut coroot = vec![0i64; params.n()];
    match *t {
        Reflection::Transposition { i, j, color } => {
            root[i] = 1;
            root[j] = if color == 0 { -1 } else { 1 };
            coroot.clone_from(&root);
        }
        Reflection::Diagonal { i, .. } => {
            root[i] = 1;
            coroot[i] = 2;
        }
    }
    Ok(RootPair { root, coroot })
}

/// Signed permutation matrix of `g` (`ζ = −1` in types B and D).
pub fn element_matrix(g: &Element) -> Vec<Vec<i64>> {
    let n = g.params().n();
    let mut a = vec![vec![0i64; n]; n];
    for k in 0..n {
        a[g.perm()[k]][k] = if g.colors()[k] == 0 { 1 } else { -1 };
    }
    a
}

/// Matrix of `v ↦ v − ⟨v, ρ̌⟩ρ`.
pub fn reflection_matrix(pair: &RootPair) -> Vec<Vec<i64>> {
    let n = pair.root.len();
    (0..n)
        .map(|r| (0..n).map(|c| i64::from(r == c) - pair.root[r] * pair.coroot[c]).collect())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanReport {
    pub pairing_matrix: Vec<Vec<i64>>,
    pub determinant: i64,
}

/// `(⟨ρ_{t_i}, ρ̌_{t_j}⟩)` for `rank` reflections and its determinant.
pub fn pairing_matrix(ts: &[Reflection], ty: WeylType) -> Result<CartanReport> {
    if ts.len() != ty.rank {
        return Err(Error::Cardinality { expected: ty.rank, got: ts.len() });
    }
    let pairs = ts.iter().map(|t| root_of(t, ty)).collect::<Result<Vec<_>>>()?;
    let pairing_matrix: Vec<Vec<i64>> =
        pairs.iter().map(|a| pairs.iter().map(|b| pairing(&a.root, &b.coroot)).collect()).collect();
    let determinant = determinant(&pairing_matrix);
    Ok(CartanReport { pairing_matrix, determinant })
}

pub fn pairing_det(ts: &[Reflection], ty: WeylType) -> Result<i64> {
    Ok(pairing_matrix(ts, ty)?.determinant)
}

/// Fraction-free (Bareiss) determinant.
pub fn determinant(a: &[Vec<i64>]) -> i64 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    (sign * m[n - 1][n - 1]) as i64
}

/// Coefficients of `det(xI − A)`, highest degree first, by Berkowitz's
/// division-free recurrence.
pub fn charpoly(a: &[Vec<i64>]) -> Vec<i128> {
    let n = a.len();
    let a: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut poly = vec![1i128];
    for r in 0..n {
        // Leading (r+1)×(r+1) block = [[A_r, S], [R, a_rr]].
        let s: Vec<i128> = (0..r).map(|i| a[i][r]).collect();
        let row: Vec<i128> = (0..r).map(|j| a[r][j]).collect();
        let mut column = vec![1i128, -a[r][r]];
        let mut v = s;
        for _ in 0..r {
            column.push(-row.iter().zip(&v).map(|(x, y)| x * y).sum::<i128>());
            v = (0..r).map(|i| (0..r).map(|j| a[i][j] * v[j]).sum()).collect();
        }
        // Toeplitz (r+2)×(r+1) matrix with first column `column`, times `poly`.
        poly = (0..r + 2)
            .map(|i| (0..=r.min(i)).map(|j| column[i - j] * poly[j]).sum())
            .collect();
    }
    poly
}

/// `|product of the nonzero eigenvalues of g − I|`.
pub fn pdet_abs(g: &Element, ty: WeylType) -> Result<u64> {
    if g.params() != ty.params() {
        return Err(Error::ParamMismatch(g.params(), ty.params()));
    }
    let mut a = element_matrix(g);
    for (k, row) in a.iter_mut().enumerate() {
        row[k] -= 1;
    }
    let poly = charpoly(&a);
    let low = poly.iter().rev().find(|&&c| c != 0).copied().unwrap_or(1);
    Ok(low.unsigned_abs() as u64)
}

/// `h^n·n!/|W|`, the number of reduced factorizations of a Coxeter element.
pub fn abc_degree(ty: WeylType) -> BigUint {
    let n = ty.rank as u64;
    pow(ty.coxeter_number(), n) * factorial(n) / ty.order()
}

/// Row-echelon basis of the integer span of `rows` (Euclid on each column).
pub fn lattice_basis(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut rows: Vec<Vec<i64>> = rows.iter().filter(|r| r.iter().any(|&x| x != 0)).cloned().collect();
    let width = rows.first().map_or(0, Vec::len);
    let mut basis = Vec::new();
    for col in 0..width {
        loop {
            let mut live: Vec<usize> = (0..rows.len()).filter(|&r| rows[r][col] != 0).collect();
            if live.len() <= 1 {
                break;
            }
            live.sort_by_key(|&r| rows[r][col].abs());
            let pivot = rows[live[0]].clone();
            for &r in &live[1..] {
                let q = rows[r][col] / pivot[col];
                for (x, y) in rows[r].iter_mut().zip(&pivot) {
                    *x -= q * y;
                }
            }
        }
        if let Some(r) = (0..rows.len()).find(|&r| rows[r][col] != 0) {
            let mut pivot = rows.swap_remove(r);
            if pivot[col] < 0 {
                pivot.iter_mut().for_each(|x| *x = -*x);
            }
            basis.push(pivot);
        }
        rows.retain(|r| r.iter().any(|&x| x != 0));
    }
    basis
}

/// Coordinates of `v` in an echelon `basis`, if `v` lies in its integer span.
fn coordinates(v: &[i64], basis: &[Vec<i64>]) -> Option<Vec<i64>> {
    let mut rest = v.to_vec();
    let mut out = Vec::with_capacity(basis.len());
    for b in basis {
        let col = b.iter().position(|&x| x != 0)?;
        if rest[col] % b[col] != 0 {
            return None;
        }
        let q = rest[col] / b[col];
        for (x, y) in rest.iter_mut().zip(b) {
            *x -= q * y;
        }
        out.push(q);
    }
    rest.iter().all(|&x| x == 0).then_some(out)
}

/// Whether `vectors` form a Z-basis of the lattice spanned by `lattice`.
pub fn is_lattice_basis(vectors: &[Vec<i64>], lattice: &[Vec<i64>]) -> bool {
    let basis = lattice_basis(lattice);
    if vectors.len() != basis.len() {
        return false;
    }
    let Some(u) = vectors.iter().map(|v| coordinates(v, &basis)).collect::<Option<Vec<_>>>() else {
        return false;
    };
    determinant(&u).abs() == 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeylCrosscheck {
    pub is_pqc: bool,
    pub pdet: u64,
    /// Connection index of the parabolic closure `W_g`.
    pub closure_index: u64,
    /// The roots of one reduced factorization form a Z-basis of the root lattice of `W_g`.
    pub roots_basis: bool,
    pub coroots_basis: bool,
    /// `|pdet(g − I)| = I(W_g)`.
    pub pdet_matches: bool,
}

impl WeylCrosscheck {
    pub fn consistent(&self) -> bool {
        let lattice = self.roots_basis && self.coroots_basis;
        lattice == self.is_pqc && self.pdet_matches == self.is_pqc
    }
}

/// Connection index of the parabolic closure of `g`, from its type.
pub fn parabolic_index(g: &Element) -> Result<u64> {
    let ty = parabolic_closure_type(g)?;
    let nonreal = match &ty.nonreal_part {
        None => 1,
        Some(part) => match part.family {
            crate::pqc::Family::Full => 2,
            crate::pqc::Family::Balanced => 4,
        },
    };
    Ok(ty.symmetric_parts.iter().map(|&l| l as u64).product::<u64>() * nonreal)
}

pub fn weyl_pqc_crosscheck(g: &Element, ty: WeylType) -> Result<WeylCrosscheck> {
    if g.params() != ty.params() {
        return Err(Error::ParamMismatch(g.params(), ty.params()));
    }
    let factors = first_reduced(g)?
        .iter()
        .map(|t| root_of(t, ty))
        .collect::<Result<Vec<_>>>()?;
    let lattice = parabolic_reflections(g)
        .iter()
        .map(|t| root_of(t, ty))
        .collect::<Result<Vec<_>>>()?;
    let roots = |ps: &[RootPair]| ps.iter().map(|p| p.root.clone()).collect::<Vec<_>>();
    let coroots = |ps: &[RootPair]| ps.iter().map(|p| p.coroot.clone()).collect::<Vec<_>>();
    let pdet = pdet_abs(g, ty)?;
    let closure_index = parabolic_index(g)?;
    Ok(WeylCrosscheck {
        is_pqc: is_parabolic_qc(g)?.is_pqc,
        pdet,
        closure_index,
        roots_basis: is_lattice_basis(&roots(&factors), &roots(&lattice)),
        coroots_basis: is_lattice_basis(&coroots(&factors), &coroots(&lattice)),
        pdet_matches: pdet == closure_index,
    })
}

/// Irreducible components of the reflection subgroup generated by `ts`,
/// recognized by rank and number of reflections.
pub fn reflection_subgroup_types(ts: &[Reflection], ty: WeylType, cap: usize) -> Result<Vec<WeylType>> {
    let params = ty.params();
    let gens: Vec<Element> = ts.iter().map(|t| t.to_element(params)).collect();
    let closure = subgroup_closure(params, &gens, cap)?;
    let inside: Vec<RootPair> = params
        .reflections()
        .iter()
        .filter(|r| closure.contains(&r.to_element(params)))
        .map(|r| root_of(r, ty))
        .collect::<Result<_>>()?;
    // Components of the non-orthogonality graph.
    let k = inside.len();
    let mut comp = vec![usize::MAX; k];
    let mut types = Vec::new();
    for start in 0..k {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = types.len();
        comp[start] = id;
        let mut stack = vec![start];
        let mut members = vec![start];
        while let Some(a) = stack.pop() {
            for b in 0..k {
                if comp[b] == usize::MAX && pairing(&inside[a].root, &inside[b].coroot) != 0 {
                    comp[b] = id;
                    stack.push(b);
                    members.push(b);
                }
            }
        }
        let roots: Vec<Vec<i64>> = members.iter().map(|&x| inside[x].root.clone()).collect();
        let r = lattice_basis(&roots).len();
        let c = members.len();
        let family = if c == r * (r + 1) / 2 {
            WeylFamily::A
        } else if c == r * r {
            WeylFamily::B
        } else if c == r * (r - 1) {
            WeylFamily::D
        } else {
            return Err(Error::Unrecognized(format!("{c} reflections of rank {r}")));
        };
        types.push(WeylType { family, rank: r });
    }
    Ok(types)
}

/// `I(⟨ts⟩)`, multiplicative over irreducible components.
pub fn reflection_subgroup_index(ts: &[Reflection], ty: WeylType, cap: usize) -> Result<u64> {
    Ok(reflection_subgroup_types(ts, ty, cap)?.iter().map(WeylType::connection_index).product())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> WeylType {
        s.parse().unwrap()
    }

    #[test]
    fn roots() {
        let a = ty("A2");
        let t = Reflection::Transposition { i: 0, j: 1, color: 0 };
        assert_eq!(root_of(&t, a).unwrap(), RootPair { root: vec![1, -1, 0], coroot: vec![1, -1, 0] });
        let b = ty("B3");
        let d = Reflection::Diagonal { i: 0, color: 1 };
        let pair = root_of(&d, b).unwrap();
        assert_eq!(pair, RootPair { root: vec![1, 0, 0], coroot: vec![2, 0, 0] });
        assert_eq!(pairing(&pair.root, &pair.coroot), 2);
        let plus = Reflection::Transposition { i: 0, j: 1, color: 1 };
        assert_eq!(root_of(&plus, ty("D4")).unwrap().root, vec![1, 1, 0, 0]);
        assert!(root_of(&d, ty("D4")).is_err());
    }

    #[test]
    fn reflection_formula_reproduces_matrices() {
        for name in ["A3", "B3", "D4"] {
            let t = ty(name);
            for r in t.params().reflections() {
                let pair = root_of(&r, t).unwrap();
                assert_eq!(pairing(&pair.root, &pair.coroot), 2);
                assert_eq!(reflection_matrix(&pair), element_matrix(&r.to_element(t.params())), "{r}");
            }
        }
    }

    #[test]
    fn cartan_determinants() {
        for (name, index) in [("A2", 3), ("A3", 4), ("B2", 2), ("B5", 2), ("D4", 4), ("D2", 4), ("D3", 4)] {
            let t = ty(name);
            assert_eq!(t.connection_index(), index);
            assert_eq!(pairing_det(&t.simple_reflections(), t).unwrap().unsigned_abs(), index, "{name}");
        }
        let t = ty("A2");
        let r = Reflection::Transposition { i: 0, j: 1, color: 0 };
        assert_eq!(pairing_det(&[r, r], t).unwrap(), 0);
        assert!(matches!(pairing_det(&[r], t), Err(Error::Cardinality { .. })));
    }

    #[test]
    fn charpoly_matches_hand_values() {
        assert_eq!(charpoly(&[vec![1, 2], vec![3, 4]]), vec![1, -5, -2]);
        assert_eq!(charpoly(&[]), vec![1]);
        let a = vec![vec![2, 0, 1], vec![1, 3, 0], vec![0, 1, 4]];
        // det(xI − A) = x³ − 9x² + 26x − 25
        assert_eq!(charpoly(&a), vec![1, -9, 26, -25]);
    }

    #[test]
    fn pdet_examples() {
        let a2 = ty("A2");
        assert_eq!(pdet_abs(&a2.params().identity(), a2).unwrap(), 1);
        let c: Element = "G(1,1,3):[2 3 1;0,0,0]".parse().unwrap();
        assert_eq!(pdet_abs(&c, a2).unwrap(), 3);
        let b2 = ty("B2");
        assert_eq!(pdet_abs(&b2.coxeter_element(), b2).unwrap(), 2);
        let g: Element = "G(2,1,2):[1 2;1,1]".parse().unwrap();
        assert_eq!(pdet_abs(&g, b2).unwrap(), 4);
    }

    #[test]
    fn abc_degrees() {
        assert_eq!(abc_degree(ty("A2")), BigUint::from(3u32));
        assert_eq!(abc_degree(ty("B2")), BigUint::from(4u32));
        assert_eq!(abc_degree(ty("D4")), BigUint::from(162u32));
    }

    #[test]
    fn crosscheck_examples() {
        let b2 = ty("B2");
        let bad: Element = "G(2,1,2):[1 2;1,1]".parse().unwrap();
        let r = weyl_pqc_crosscheck(&bad, b2).unwrap();
        assert!(!r.is_pqc && !r.pdet_matches && r.consistent());
        let a3 = ty("A3");
        for g in a3.params().elements(100).unwrap() {
            let r = weyl_pqc_crosscheck(&g, a3).unwrap();
            let prod: u64 = g.colored_cycles().cycles.iter().map(|c| c.len() as u64).product();
            assert_eq!(r.pdet, prod);
            assert!(r.is_pqc && r.consistent());
        }
        let b3 = ty("B3");
        let r = weyl_pqc_crosscheck(&b3.coxeter_element(), b3).unwrap();
        assert_eq!((r.pdet, r.closure_index), (2, 2));
    }

    #[test]
    fn lattice_helpers() {
        let basis = lattice_basis(&[vec![2, 0], vec![0, 2], vec![1, 1]]);
        assert_eq!(basis.len(), 2);
        assert!(is_lattice_basis(&[vec![1, 1], vec![2, 0]], &[vec![2, 0], vec![0, 2], vec![1, 1]]));
        assert!(!is_lattice_basis(&[vec![2, 0], vec![0, 2]], &[vec![2, 0], vec![0, 2], vec![1, 1]]));
    }

    #[test]
    fn subgroup_recognition() {
        let b3 = ty("B3");
        assert_eq!(reflection_subgroup_index(&b3.simple_reflections(), b3, 1000).unwrap(), 2);
        let d4 = ty("D4");
        assert_eq!(reflection_subgroup_index(&d4.simple_reflections(), d4, 1000).unwrap(), 4);
        let diag = [Reflection::Diagonal { i: 0, color: 1 }, Reflection::Diagonal { i: 1, color: 1 }];
        let b2 = ty("B2");
        assert_eq!(reflection_subgroup_types(&diag, b2, 100).unwrap().len(), 2);
        assert_eq!(reflection_subgroup_index(&diag, b2, 100).unwrap(), 4);
    }
}
