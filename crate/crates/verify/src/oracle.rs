//! A second model of G(m,p,n) that shares nothing with the core encoding:
//! elements are explicit monomial matrices multiplied entry by entry, and a
//! reflection is any element whose `M − I` has complex rank one.

use std::collections::{HashMap, VecDeque};

use itertools::Itertools;
use num_complex::Complex64;
use qcox_core::{Element, GroupParams};

/// An `n×n` monomial matrix over `μ_m`; `entries[i*n + j]` is the exponent of
/// `ζ_m` at `(i, j)`, or `None` for a zero entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoMat {
    pub n: usize,
    pub m: u32,
    pub entries: Vec<Option<u32>>,
}

impl MonoMat {
    pub fn identity(m: u32, n: usize) -> Self {
        let mut entries = vec![None; n * n];
        for i in 0..n {
            entries[i * n + i] = Some(0);
        }
        MonoMat { n, m, entries }
    }

    pub fn at(&self, i: usize, j: usize) -> Option<u32> {
        self.entries[i * self.n + j]
    }

    pub fn mul(&self, other: &MonoMat) -> MonoMat {
        let n = self.n;
        let mut entries = vec![None; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc: Option<u32> = None;
                for k in 0..n {
                    if let (Some(a), Some(b)) = (self.at(i, k), other.at(k, j)) {
                        assert!(acc.is_none(), "product of monomial matrices is monomial");
                        acc = Some((a + b) % self.m);
                    }
                }
                entries[i * n + j] = acc;
            }
        }
        MonoMat { n, m: self.m, entries }
    }

    pub fn from_element(g: &Element) -> Self {
        let n = g.params().n();
        let mut entries = vec![None; n * n];
        for k in 0..n {
            entries[g.perm()[k] * n + k] = Some(g.colors()[k]);
        }
        MonoMat { n, m: g.params().m(), entries }
    }

    pub fn to_element(&self, params: GroupParams) -> Element {
        let n = self.n;
        let mut perm = vec![0; n];
        let mut colors = vec![0; n];
        for j in 0..n {
            for i in 0..n {
                if let Some(a) = self.at(i, j) {
                    perm[j] = i;
                    colors[j] = a;
                }
            }
        }
        Element::new(params, perm, colors).expect("oracle elements lie in the group")
    }

    fn complex(&self) -> Vec<Vec<Complex64>> {
        let zeta = |a: u32| Complex64::from_polar(1.0, std::f64::consts::TAU * a as f64 / self.m as f64);
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.at(i, j).map_or(Complex64::new(0.0, 0.0), zeta)).collect())
            .collect()
    }

    /// `rank_C(M − I)`, the codimension of the fixed space.
    pub fn codim_fixed(&self) -> usize {
        let mut a = self.complex();
        for (i, row) in a.iter_mut().enumerate() {
            row[i] -= 1.0;
        }
        complex_rank(a)
    }
}

/// Rank by Gaussian elimination with partial pivoting.
pub fn complex_rank(mut a: Vec<Vec<Complex64>>) -> usize {
    const EPS: f64 = 1e-9;
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).max_by(|&x, &y| a[x][c].norm().total_cmp(&a[y][c].norm())) else {
            break;
        };
        if a[p][c].norm() < EPS {
            continue;
        }
        a.swap(rank, p);
        for r in rank + 1..rows {
            let f = a[r][c] / a[rank][c];
            let pivot = a[rank].clone();
            for (x, v) in a[r].iter_mut().zip(&pivot).skip(c) {
                *x -= f * v;
            }
        }
        rank += 1;
    }
    rank
}

/// The whole group with its reflections and a right-multiplication table.
pub struct OracleGroup {
    pub params: GroupParams,
    pub elements: Vec<MonoMat>,
    pub index: HashMap<MonoMat, usize>,
    /// Indices of the reflections.
    pub reflections: Vec<usize>,
    /// `right[e][r] = index(elements[e] · elements[reflections[r]])`.
    pub right: Vec<Vec<usize>>,
    pub identity: usize,
}

impl OracleGroup {
    pub fn new(params: GroupParams) -> Self {
        let (m, p, n) = (params.m(), params.p(), params.n());
        let mut elements = Vec::new();
        for perm in (0..n).permutations(n) {
            for colors in (0..n).map(|_| 0..m).multi_cartesian_product() {
                if colors.iter().sum::<u32>() % p != 0 {
                    continue;
                }
                let mut entries = vec![None; n * n];
                for k in 0..n {
                    entries[perm[k] * n + k] = Some(colors[k]);
                }
                elements.push(MonoMat { n, m, entries });
            }
        }
        if n == 0 {
            elements.push(MonoMat::identity(m, 0));
        }
        let index: HashMap<MonoMat, usize> = elements.iter().cloned().enumerate().map(|(k, x)| (x, k)).collect();
        let identity = index[&MonoMat::identity(m, n)];
        let reflections: Vec<usize> = (0..elements.len()).filter(|&k| elements[k].codim_fixed() == 1).collect();
        let right = elements
            .iter()
            .map(|x| reflections.iter().map(|&r| index[&x.mul(&elements[r])]).collect())
            .collect();
        OracleGroup { params, elements, index, reflections, right, identity }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, g: &Element) -> usize {
        self.index[&MonoMat::from_element(g)]
    }

    /// Word length in the reflections, by breadth-first search.
    pub fn reflection_distances(&self) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.len()];
        dist[self.identity] = 0;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(e) = queue.pop_front() {
            for &f in &self.right[e] {
                if dist[f] == usize::MAX {
                    dist[f] = dist[e] + 1;
                    queue.push_back(f);
                }
            }
        }
        dist
    }

    /// Membership mask of the subgroup generated by the given reflections
    /// (indices into `self.reflections`).
    pub fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        seen[self.identity] = true;
        let mut stack = vec![self.identity];
        while let Some(e) = stack.pop() {
            for &g in gens {
                let f = self.right[e][g];
                if !seen[f] {
                    seen[f] = true;
                    stack.push(f);
                }
            }
        }
        seen
    }

    /// Shortest length of a reflection factorization of each element whose
    /// factors generate the whole group, by a layered search over pairs
    /// (partial product, generated subgroup).
    pub fn full_lengths(&self, max_len: usize) -> Vec<Option<usize>> {
        let whole = vec![true; self.len()];
        let mut best = vec![None; self.len()];
        let mut closures: HashMap<(Vec<bool>, usize), Vec<bool>> = HashMap::new();
        let mut trivial = vec![false; self.len()];
        trivial[self.identity] = true;
        let mut layer: Vec<(usize, Vec<bool>)> = vec![(self.identity, trivial)];
        for len in 0..=max_len {
            for (e, sub) in &layer {
                if *sub == whole && best[*e].is_none() {
                    best[*e] = Some(len);
                }
            }
            if best.iter().all(Option::is_some) || len == max_len {
                break;
            }
            let mut next: Vec<(usize, Vec<bool>)> = Vec::new();
            let mut seen = std::collections::HashSet::new();
            for (e, sub) in &layer {
                for r in 0..self.reflections.len() {
                    let grown = if sub[self.reflections[r]] {
                        sub.clone()
                    } else {
                        closures
                            .entry((sub.clone(), r))
                            .or_insert_with(|| {
                                let mut gens: Vec<usize> =
                                    (0..self.reflections.len()).filter(|&s| sub[self.reflections[s]]).collect();
                                gens.push(r);
                                self.closure(&gens)
                            })
                            .clone()
                    };
                    let state = (self.right[*e][r], grown);
                    if seen.insert(state.clone()) {
                        next.push(state);
                    }
                }
            }
            layer = next;
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_reflection_counts() {
        for (m, p, n) in [(1, 1, 3), (2, 1, 2), (2, 2, 3), (3, 1, 2), (4, 2, 2), (3, 3, 3)] {
            let params = GroupParams::new(m, p, n).unwrap();
            let group = OracleGroup::new(params);
            assert_eq!(group.len() as u64, params.order_u64().unwrap(), "{params}");
            assert_eq!(group.reflections.len(), params.reflections().len(), "{params}");
        }
    }

    #[test]
    fn complex_rank_basics() {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        assert_eq!(complex_rank(vec![vec![one, one], vec![one, one]]), 1);
        assert_eq!(complex_rank(vec![vec![one, zero], vec![zero, one]]), 2);
        assert_eq!(complex_rank(vec![vec![zero, zero]]), 0);
    }
}
