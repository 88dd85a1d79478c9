//! Brute-force counts for the closed formulas: transitive transposition
//! factorizations, Prüfer-decoded trees and labelled cacti.

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Partitions of `n`, parts in weakly decreasing order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `m_i` = multiplicity of `i + 1` in `lambda`.
pub fn multiplicities(lambda: &[usize]) -> Vec<usize> {
    let n: usize = lambda.iter().sum();
    let mut m = vec![0; n];
    for &part in lambda {
        m[part - 1] += 1;
    }
    m
}

/// The permutation of `{0..n}` with consecutive cycles of the given lengths.
pub fn standard_permutation(lambda: &[usize]) -> Vec<usize> {
    let mut perm = Vec::new();
    let mut start = 0;
    for &part in lambda {
        perm.extend((0..part).map(|k| start + (k + 1) % part));
        start += part;
    }
    perm
}

/// Factorizations of a fixed permutation of cycle type `lambda` into
/// `n + k − 2` transpositions generating a transitive subgroup, counted by a
/// dynamic programme over (partial product, orbit partition).
pub fn transitive_factorizations(lambda: &[usize]) -> BigUint {
    let n: usize = lambda.iter().sum();
    let steps = n + lambda.len() - 2;
    let target = standard_permutation(lambda);
    let transpositions: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let mut states: HashMap<(Vec<usize>, Vec<usize>), BigUint> = HashMap::new();
    states.insert(((0..n).collect(), (0..n).collect()), BigUint::one());
    for _ in 0..steps {
        let mut next: HashMap<(Vec<usize>, Vec<usize>), BigUint> = HashMap::new();
        for ((perm, blocks), count) in &states {
            for &(a, b) in &transpositions {
                let mut p = perm.clone();
                p.swap(a, b);
                let (keep, drop) = (blocks[a].min(blocks[b]), blocks[a].max(blocks[b]));
                let merged = blocks.iter().map(|&x| if x == drop { keep } else { x }).collect();
                *next.entry((p, merged)).or_insert_with(BigUint::zero) += count;
            }
        }
        states = next;
    }
    states.remove(&(target, vec![0; n])).unwrap_or_default()
}

/// Edges of the labelled tree with the given Prüfer sequence on `0..len`.
pub fn prufer_decode(seq: &[usize], len: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; len];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(len.saturating_sub(1));
    for &x in seq {
        let leaf = (0..len).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..len).filter(|&v| degree[v] == 1).collect();
    if rest.len() == 2 {
        edges.push((rest[0], rest[1]));
    }
    edges
}

/// `Σ_T ∏ x_v^{deg_T v}` over labelled trees on `0..xs.len()`.
pub fn weighted_tree_sum(xs: &[u64]) -> BigUint {
    let len = xs.len();
    if len <= 1 {
        return BigUint::from(len as u32);
    }
    let mut total = BigUint::zero();
    for seq in (0..len - 2).map(|_| 0..len).multi_cartesian_product() {
        let mut degree = vec![0u32; len];
        for (a, b) in prufer_decode(&seq, len) {
            degree[a] += 1;
            degree[b] += 1;
        }
        total += xs.iter().zip(&degree).map(|(&x, &d)| BigUint::from(x).pow(d)).product::<BigUint>();
    }
    total
}

/// Weak compositions `m` with `Σ (i+1)·m_i = n` and at least one part.
pub fn weak_compositions(n: usize) -> Vec<Vec<usize>> {
    partitions(n).into_iter().map(|lambda| multiplicities(&lambda)).collect()
}

/// Labelled cacti with `mvec[i]` polygons of size `i + 1`: a permutation of
/// that cycle type on `0..n` together with `k − 1` numbered edges, each
/// joining two points of different cycles, such that the cycles form a tree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CactusCount {
    /// Number of labelled structures.
    pub labelled: BigUint,
    /// Number of structures up to relabelling the points.
    pub orbits: usize,
    /// `labelled / n!`: orbits weighted by inverse automorphism counts.
    pub weighted: BigRational,
}

/// A permutation together with its numbered edges.
type Cactus = (Vec<usize>, Vec<(usize, usize)>);

pub fn cacti(mvec: &[usize]) -> CactusCount {
    let lambda: Vec<usize> = mvec
        .iter()
        .enumerate()
        .rev()
        .flat_map(|(i, &x)| std::iter::repeat_n(i + 1, x))
        .collect();
    let n: usize = lambda.iter().sum();
    let k = lambda.len();
    let mut structures: Vec<Cactus> = Vec::new();
    for perm in (0..n).permutations(n) {
        if cycle_type(&perm) != lambda {
            continue;
        }
        let cycle = cycle_ids(&perm);
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().filter(|&(a, b)| cycle[a] != cycle[b]).collect();
        for edges in (0..k.saturating_sub(1)).map(|_| pairs.iter().copied()).multi_cartesian_product() {
            if forms_tree(&edges, &cycle, k) {
                structures.push((perm.clone(), edges));
            }
        }
    }
    let labelled = BigUint::from(structures.len());
    let relabellings: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let canonical: BTreeSet<Cactus> = structures
        .iter()
        .map(|(perm, edges)| {
            relabellings
                .iter()
                .map(|pi| {
                    let mut q = vec![0; n];
                    for x in 0..n {
                        q[pi[x]] = pi[perm[x]];
                    }
                    let e = edges.iter().map(|&(a, b)| (pi[a].min(pi[b]), pi[a].max(pi[b]))).collect();
                    (q, e)
                })
                .min()
                .expect("at least one relabelling")
        })
        .collect();
    let factorial: BigUint = (1..=n as u64).map(BigUint::from).product();
    CactusCount {
        weighted: BigRational::new(labelled.clone().into(), factorial.into()),
        labelled,
        orbits: canonical.len(),
    }
}

fn cycle_ids(perm: &[usize]) -> Vec<usize> {
    let mut id = vec![usize::MAX; perm.len()];
    let mut next = 0;
    for s in 0..perm.len() {
        let mut x = s;
        while id[x] == usize::MAX {
            id[x] = next;
            x = perm[x];
        }
        if id[s] == next {
            next += 1;
        }
    }
    id
}

fn cycle_type(perm: &[usize]) -> Vec<usize> {
    let ids = cycle_ids(perm);
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for id in ids {
        *counts.entry(id).or_default() += 1;
    }
    let mut t: Vec<usize> = counts.into_values().collect();
    t.sort_unstable_by(|a, b| b.cmp(a));
    t
}

fn forms_tree(edges: &[(usize, usize)], cycle: &[usize], k: usize) -> bool {
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for &(a, b) in edges {
        let (x, y) = (find(&mut parent, cycle[a]), find(&mut parent, cycle[b]));
        if x == y {
            return false;
        }
        parent[x] = y;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn small_factorization_counts() {
        assert_eq!(transitive_factorizations(&[3]), BigUint::from(3u32));
        assert_eq!(transitive_factorizations(&[1, 1]), BigUint::from(1u32));
        assert_eq!(transitive_factorizations(&[2, 1]), BigUint::from(8u32));
    }

    #[test]
    fn prufer_round_trip_shape() {
        assert_eq!(prufer_decode(&[3, 3], 4), vec![(0, 3), (1, 3), (2, 3)]);
        assert_eq!(weighted_tree_sum(&[1; 5]), BigUint::from(125u32));
        assert_eq!(weighted_tree_sum(&[2, 3]), BigUint::from(6u32));
    }

    #[test]
    fn cactus_examples() {
        let lone = cacti(&[0, 1]);
        assert_eq!(lone.orbits, 1);
        assert_eq!(lone.weighted, BigRational::new(1.into(), 2.into()));
        let three = cacti(&[3]);
        assert_eq!(three.orbits, 1);
        assert_eq!(three.labelled, BigUint::from(6u32));
    }
}
