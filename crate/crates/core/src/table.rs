//! Fully indexed small groups: multiplication by reflections, reflection
//! distances from the identity, and fast subgroup closures of reflection sets.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::wreath::{Element, GroupParams, Reflection};

pub struct GroupTable {
    params: GroupParams,
    elements: Vec<Element>,
    index: HashMap<Element, u32>,
    reflections: Vec<Reflection>,
    refl_index: HashMap<Reflection, usize>,
    refl_inverse: Vec<usize>,
    /// `right[e * R + r]` is the index of `e · t_r`.
    right: Vec<u32>,
    /// `left[e * R + r]` is the index of `t_r · e`.
    left: Vec<u32>,
    dist: Vec<u32>,
    identity: u32,
}

impl GroupTable {
    /// Indexes every element; fails if the group has more than `cap` elements.
    pub fn new(params: GroupParams, cap: usize) -> Result<Self> {
        let elements = params.elements(cap)?;
        let index: HashMap<Element, u32> =
            elements.iter().enumerate().map(|(k, e)| (e.clone(), k as u32)).collect();
        let reflections = params.reflections();
        let refl_index: HashMap<Reflection, usize> =
            reflections.iter().enumerate().map(|(k, r)| (*r, k)).collect();
        let refl_elems: Vec<Element> = reflections.iter().map(|r| r.to_element(params)).collect();
        let refl_inverse = refl_elems
            .iter()
            .map(|t| refl_index[&t.inverse().as_reflection().expect("inverse of a reflection")])
            .collect();
        let r = reflections.len();
        let mut right = vec![0u32; elements.len() * r];
        let mut left = vec![0u32; elements.len() * r];
        for (e, x) in elements.iter().enumerate() {
            for (k, t) in refl_elems.iter().enumerate() {
                right[e * r + k] = index[&x.compose(t)];
                left[e * r + k] = index[&t.compose(x)];
            }
        }
        let identity = index[&params.identity()];
        let mut table = GroupTable {
            params,
            elements,
            index,
            reflections,
            refl_index,
            refl_inverse,
            right,
            left,
            dist: Vec::new(),
            identity,
        };
        table.dist = table.bfs_distances();
        Ok(table)
    }

    fn bfs_distances(&self) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.elements.len()];
        dist[self.identity as usize] = 0;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(e) = queue.pop_front() {
            for k in 0..self.reflections.len() {
                let f = self.mul_right(e, k);
                if dist[f as usize] == u32::MAX {
                    dist[f as usize] = dist[e as usize] + 1;
                    queue.push_back(f);
                }
            }
        }
        dist
    }

    pub fn params(&self) -> GroupParams {
        self.params
    }
    pub fn len(&self) -> usize {
        self.elements.len()
    }
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }
    pub fn element(&self, e: u32) -> &Element {
        &self.elements[e as usize]
    }
    pub fn index_of(&self, x: &Element) -> Option<u32> {
        self.index.get(x).copied()
    }
    pub fn identity(&self) -> u32 {
        self.identity
    }
    pub fn reflections(&self) -> &[Reflection] {
        &self.reflections
    }
    pub fn reflection_index(&self, r: &Reflection) -> Option<usize> {
        self.refl_index.get(r).copied()
    }
    /// Index of the reflection `t_r⁻¹`.
    pub fn reflection_inverse(&self, r: usize) -> usize {
        self.refl_inverse[r]
    }
    pub fn mul_right(&self, e: u32, r: usize) -> u32 {
        self.right[e as usize * self.reflections.len() + r]
    }
    pub fn mul_left(&self, r: usize, e: u32) -> u32 {
        self.left[e as usize * self.reflections.len() + r]
    }
    /// Distance from the identity in the reflection Cayley graph.
    pub fn length(&self, e: u32) -> u32 {
        self.dist[e as usize]
    }

    /// Membership mask of the subgroup generated by the given reflections.
    pub fn closure(&self, gens: &[usize]) -> Vec<bool> {
        self.closure_bounded(gens, usize::MAX).0
    }

    /// Order of the subgroup generated by the given reflections.
    pub fn closure_order(&self, gens: &[usize]) -> usize {
        self.closure_bounded(gens, usize::MAX).1
    }

    /// Whether the given reflections generate the whole group.
    pub fn generates(&self, gens: &[usize]) -> bool {
        self.closure_bounded(gens, self.len()).1 == self.len()
    }

    fn closure_bounded(&self, gens: &[usize], stop_at: usize) -> (Vec<bool>, usize) {
        let mut seen = vec![false; self.len()];
        seen[self.identity as usize] = true;
        let mut count = 1;
        let mut stack = vec![self.identity];
        while let Some(e) = stack.pop() {
            if count >= stop_at {
                break;
            }
            for &g in gens {
                let f = self.mul_right(e, g);
                if !seen[f as usize] {
                    seen[f as usize] = true;
                    count += 1;
                    stack.push(f);
                }
            }
        }
        (seen, count)
    }

    /// Indices of the given reflections, failing if one is not in the group.
    pub fn reflection_indices(&self, rs: &[Reflection]) -> Result<Vec<usize>> {
        rs.iter()
            .map(|r| {
                self.reflection_index(r).ok_or_else(|| Error::NotMember {
                    params: self.params,
                    reason: format!("{r} is not a reflection of this group"),
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_all_reflections_is_the_group() {
        for (m, p, n) in [(1, 1, 4), (2, 1, 2), (3, 3, 3), (4, 2, 2), (2, 2, 1)] {
            let t = GroupTable::new(GroupParams::new(m, p, n).unwrap(), 10_000).unwrap();
            let all: Vec<usize> = (0..t.reflections().len()).collect();
            assert_eq!(t.closure_order(&all), t.len());
            assert!(t.generates(&all));
        }
    }

    #[test]
    fn small_closures() {
        let t = GroupTable::new(GroupParams::symmetric(3).unwrap(), 100).unwrap();
        assert_eq!(t.closure_order(&[]), 1);
        assert_eq!(t.closure_order(&[0]), 2);
        assert!(!t.generates(&[0]));
        assert!(t.generates(&[0, 1]));
    }

    #[test]
    fn cap_is_enforced() {
        let params = GroupParams::new(3, 1, 4).unwrap();
        assert!(matches!(GroupTable::new(params, 100), Err(Error::CapExceeded { .. })));
    }
}
