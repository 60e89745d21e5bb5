//! Necessary conditions used to cut the subset search.
//!
//! Twins `u, v` (equal open or equal closed neighborhoods) agree on every
//! coordinate except their own, so any resolving, doubly resolving, strong
//! resolving or adjacency resolving set contains all but at most one
//! vertex of each twin class.
//!
//! For doubly resolving sets a second rule applies: if `d(u,.) - d(v,.)` is
//! constant on `V \ {t}` then no pair avoiding `t` separates `u, v`, so `t`
//! is mandatory. A pendant vertex and its support are the typical case.

use std::collections::BTreeMap;

use crate::graph::{DistanceMatrix, Graph};
use crate::kernel::Invariant;

/// Constraints every feasible set satisfies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConstraints {
    /// Twin class of each vertex, for classes of size at least 2.
    pub class_of: Vec<Option<usize>>,
    pub classes: Vec<Vec<usize>>,
    /// Vertices every feasible set must contain.
    pub forced: Vec<bool>,
}

impl SearchConstraints {
    pub fn none(n: usize) -> Self {
        SearchConstraints { class_of: vec![None; n], classes: Vec::new(), forced: vec![false; n] }
    }

    pub fn for_invariant(g: &Graph, dm: Option<&DistanceMatrix>, invariant: Invariant) -> Self {
        let classes = twin_classes(g);
        let mut class_of = vec![None; g.vertex_count()];
        for (idx, class) in classes.iter().enumerate() {
            for &v in class {
                class_of[v] = Some(idx);
            }
        }
        let forced = match (invariant, dm) {
            (Invariant::DoublyDim, Some(dm)) => difference_forced(dm),
            _ => vec![false; g.vertex_count()],
        };
        SearchConstraints { class_of, classes, forced }
    }

    /// Cardinality lower bound implied by the constraints.
    pub fn lower_bound(&self) -> usize {
        let mut bound = 0;
        for class in &self.classes {
            let forced = class.iter().filter(|&&v| self.forced[v]).count();
            bound += forced.max(class.len() - 1);
        }
        bound
            + self
                .forced
                .iter()
                .enumerate()
                .filter(|&(v, &f)| f && self.class_of[v].is_none())
                .count()
    }
}

/// Nontrivial twin classes, each sorted, ordered by smallest member.
pub fn twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], v: usize) -> usize {
        let mut root = v;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = v;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }

    let mut open: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut closed: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for v in 0..n {
        let nbhd = g.neighbors(v).to_vec();
        let mut closed_nbhd = nbhd.clone();
        let pos = closed_nbhd.binary_search(&v).unwrap_err();
        closed_nbhd.insert(pos, v);
        for (map, key) in [(&mut open, nbhd), (&mut closed, closed_nbhd)] {
            match map.get(&key) {
                Some(&rep) => {
                    let (a, b) = (find(&mut parent, rep), find(&mut parent, v));
                    parent[a.max(b)] = a.min(b);
                }
                None => {
                    map.insert(key, v);
                }
            }
        }
    }

    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        let root = find(&mut parent, v);
        groups.entry(root).or_default().push(v);
    }
    groups.into_values().filter(|c| c.len() >= 2).collect()
}

fn difference_forced(dm: &DistanceMatrix) -> Vec<bool> {
    let n = dm.vertex_count();
    let mut forced = vec![false; n];
    if n < 3 {
        return forced;
    }
    let mut diff = vec![0i64; n];
    for u in 0..n {
        for v in u + 1..n {
            for (x, slot) in diff.iter_mut().enumerate() {
                *slot = dm.get(u, x) as i64 - dm.get(v, x) as i64;
            }
            // With n >= 3 the majority value is the value at any two
            // agreeing positions among the first three.
            let majority = if diff[0] == diff[1] || diff[0] == diff[2] { diff[0] } else { diff[1] };
            let mut odd = diff.iter().enumerate().filter(|&(_, &d)| d != majority);
            if let (Some((t, _)), None) = (odd.next(), odd.next()) {
                forced[t] = true;
            }
        }
    }
    forced
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::graph::all_pairs_distances;

    #[test]
    fn jellyfish_twins_are_leaf_groups() {
        let g = gen_jellyfish(3, 2).unwrap();
        assert_eq!(twin_classes(&g), vec![vec![3, 4], vec![5, 6], vec![7, 8]]);
    }

    #[test]
    fn cocktail_party_twins_are_partners() {
        let g = gen_cocktail_party(3).unwrap();
        assert_eq!(twin_classes(&g), vec![vec![0, 1], vec![2, 3], vec![4, 5]]);
    }

    #[test]
    fn complete_graph_is_one_class() {
        let g = gen_complete(5).unwrap();
        assert_eq!(twin_classes(&g), vec![vec![0, 1, 2, 3, 4]]);
        let c = SearchConstraints::for_invariant(&g, None, Invariant::MetricDim);
        assert_eq!(c.lower_bound(), 4);
    }

    #[test]
    fn cycles_have_no_twins() {
        assert!(twin_classes(&gen_cycle(6).unwrap()).is_empty());
    }

    #[test]
    fn pendant_vertices_forced_for_doubly() {
        let g = gen_jellyfish(4, 2).unwrap();
        let dm = all_pairs_distances(&g).unwrap();
        let c = SearchConstraints::for_invariant(&g, Some(&dm), Invariant::DoublyDim);
        let forced: Vec<usize> = (0..12).filter(|&v| c.forced[v]).collect();
        assert_eq!(forced, (4..12).collect::<Vec<_>>());
        assert_eq!(c.lower_bound(), 8);
    }
}
