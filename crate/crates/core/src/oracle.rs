//! Brute-force reference computations for testing.
//!
//! The semigroup is listed element by element, together with its left and
//! right Cayley graphs. `R`-classes are the strongly connected components of
//! the right Cayley graph (`x S¹ = y S¹` exactly when each reaches the other
//! by right multiplication), `L`-classes those of the left graph, `D`-classes
//! those of their union (in a finite semigroup `D = J`), and `H`-classes are
//! the non-empty intersections of an `R`- and an `L`-class.

use std::collections::HashMap;

use crate::element::Element;
pub use crate::engine::Green;
use crate::engine::Semigroup;
use crate::error::{Error, Result};
use crate::orbit::tarjan;

/// Default cap on the number of elements.
pub const DEFAULT_CAP: usize = 200_000;

/// A semigroup listed exhaustively.
#[derive(Debug, Clone)]
pub struct ExhaustiveSemigroup {
    generators: Vec<Element>,
    elements: Vec<Element>,
    index: HashMap<Element, usize>,
    /// `right[i][g]` = index of `elements[i] * generators[g]`.
    right: Vec<Vec<usize>>,
    /// `left[i][g]` = index of `generators[g] * elements[i]`.
    left: Vec<Vec<usize>>,
}

/// A partition of element indices into classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    /// The class of each element.
    pub class_of: Vec<usize>,
    /// The classes, each sorted, ordered by least element.
    pub classes: Vec<Vec<usize>>,
}

impl Partition {
    fn from_components(n: usize, comps: Vec<Vec<usize>>) -> Partition {
        let mut classes: Vec<Vec<usize>> = comps
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        classes.sort_unstable_by_key(|c| c[0]);
        let mut class_of = vec![0; n];
        for (k, c) in classes.iter().enumerate() {
            for &i in c {
                class_of[i] = k;
            }
        }
        Partition { class_of, classes }
    }

    /// Number of classes.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    /// Whether there are no classes.
    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

impl ExhaustiveSemigroup {
    /// Lists every element of the semigroup generated by `generators`, refusing beyond `cap` elements.
    pub fn new(generators: &[Element], cap: usize) -> Result<ExhaustiveSemigroup> {
        let mut elements: Vec<Element> = Vec::new();
        let mut index: HashMap<Element, usize> = HashMap::new();
        let mut right: Vec<Vec<usize>> = Vec::new();
        for x in generators {
            if !index.contains_key(x) {
                index.insert(x.clone(), elements.len());
                elements.push(x.clone());
            }
        }
        let mut i = 0;
        while i < elements.len() {
            let mut row = Vec::with_capacity(generators.len());
            for x in generators {
                let y = elements[i].multiply(x)?;
                let k = match index.get(&y) {
                    Some(&k) => k,
                    None => {
                        if elements.len() >= cap {
                            return Err(Error::TooLarge(format!("more than {cap} elements")));
                        }
                        index.insert(y.clone(), elements.len());
                        elements.push(y);
                        elements.len() - 1
                    }
                };
                row.push(k);
            }
            right.push(row);
            i += 1;
        }
        let left = elements
            .iter()
            .map(|e| generators.iter().map(|x| index[&x.mul(e)]).collect())
            .collect();
        Ok(ExhaustiveSemigroup { generators: generators.to_vec(), elements, index, right, left })
    }

    /// The generators.
    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    /// All elements.
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    /// Number of elements.
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    /// The index of `y`, if it is an element.
    pub fn position(&self, y: &Element) -> Option<usize> {
        self.index.get(y).copied()
    }

    /// Whether `y` is an element.
    pub fn contains(&self, y: &Element) -> bool {
        self.index.contains_key(y)
    }

    fn union_graph(&self) -> Vec<Vec<usize>> {
        self.right.iter().zip(&self.left).map(|(r, l)| r.iter().chain(l).copied().collect()).collect()
    }

    /// The classes of one of Green's relations.
    pub fn green(&self, which: Green) -> Partition {
        let n = self.elements.len();
        match which {
            Green::R => Partition::from_components(n, tarjan(&self.right)),
            Green::L => Partition::from_components(n, tarjan(&self.left)),
            Green::D => Partition::from_components(n, tarjan(&self.union_graph())),
            Green::H => {
                let r = self.green(Green::R);
                let l = self.green(Green::L);
                let mut map: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
                for i in 0..n {
                    map.entry((r.class_of[i], l.class_of[i])).or_default().push(i);
                }
                Partition::from_components(n, map.into_values().collect())
            }
        }
    }

    /// Indices of the idempotents.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.elements.len()).filter(|&i| self.elements[i].mul(&self.elements[i]) == self.elements[i]).collect()
    }

    /// Whether every `R`-class contains an idempotent.
    pub fn is_regular(&self) -> bool {
        let r = self.green(Green::R);
        let mut has = vec![false; r.len()];
        for i in self.idempotents() {
            has[r.class_of[i]] = true;
        }
        has.into_iter().all(|h| h)
    }

    /// The `D`-class order as reachability: `result[i][j]` iff `D_j ≤ D_i`
    /// (`D`-classes as in [`green`](Self::green)).
    pub fn dorder(&self) -> Vec<Vec<bool>> {
        let d = self.green(Green::D);
        let k = d.len();
        let mut edges = vec![Vec::new(); k];
        for (i, row) in self.union_graph().iter().enumerate() {
            for &j in row {
                edges[d.class_of[i]].push(d.class_of[j]);
            }
        }
        for e in &mut edges {
            e.sort_unstable();
            e.dedup();
        }
        let mut reach = vec![vec![false; k]; k];
        for (a, row) in reach.iter_mut().enumerate() {
            row[a] = true;
            let mut stack = vec![a];
            while let Some(u) = stack.pop() {
                for &v in &edges[u] {
                    if !row[v] {
                        row[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        reach
    }
}

/// Compares the engine's answers with the exhaustive listing of the same semigroup.
///
/// Checked: size, numbers of `R`-, `L`-, `H`- and `D`-classes, number of
/// idempotents, regularity, and the `D`-class order as a reachability relation.
/// Returns one message per disagreement (empty when everything agrees).
pub fn discrepancies(sg: &Semigroup, ex: &ExhaustiveSemigroup) -> Result<Vec<String>> {
    let mut out = Vec::new();
    if sg.size() != ex.size() as u64 {
        out.push(format!("size: engine {} vs oracle {}", sg.size(), ex.size()));
    }
    for which in [Green::R, Green::L, Green::H, Green::D] {
        let (a, b) = (sg.nr_classes(which)?, ex.green(which).len() as u64);
        if a != b {
            out.push(format!("{which:?}-classes: engine {a} vs oracle {b}"));
        }
    }
    let (a, b) = (sg.nr_idempotents()?, ex.idempotents().len());
    if a != b {
        out.push(format!("idempotents: engine {a} vs oracle {b}"));
    }
    let (a, b) = (sg.is_regular()?, ex.is_regular());
    if a != b {
        out.push(format!("regular: engine {a} vs oracle {b}"));
    }
    let d = ex.green(Green::D);
    let to_oracle: Vec<Option<usize>> = sg
        .dclass_reps()
        .iter()
        .map(|reps| ex.position(&sg.rreps()[reps[0]].element).map(|i| d.class_of[i]))
        .collect();
    if to_oracle.iter().any(Option::is_none) {
        out.push("a D-class representative is not an element".into());
        return Ok(out);
    }
    if to_oracle.len() == d.len() {
        let engine = sg.dorder()?.reachable;
        let oracle = ex.dorder();
        for (i, row) in engine.iter().enumerate() {
            for (j, &reach) in row.iter().enumerate() {
                let (oi, oj) = (to_oracle[i].unwrap(), to_oracle[j].unwrap());
                if reach != oracle[oi][oj] {
                    out.push(format!("D-order: D{} >= D{}: engine {reach} vs oracle {}", i + 1, j + 1, oracle[oi][oj]));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::Transformation;

    fn t(v: &[usize]) -> Element {
        Element::Transformation(Transformation::from_one_based(v).unwrap())
    }

    #[test]
    fn single_idempotent_and_cap() {
        let e = t(&[1, 1, 3]);
        let s = ExhaustiveSemigroup::new(&[e], 10).unwrap();
        assert_eq!(s.size(), 1);
        assert_eq!(s.green(Green::D).len(), 1);
        let full = [t(&[2, 3, 4, 1]), t(&[2, 1, 3, 4]), t(&[1, 1, 3, 4])];
        assert!(matches!(ExhaustiveSemigroup::new(&full, 100), Err(Error::TooLarge(_))));
        assert_eq!(ExhaustiveSemigroup::new(&full, 1000).unwrap().size(), 256);
    }

    #[test]
    fn group_has_one_class_of_each_kind() {
        let s = ExhaustiveSemigroup::new(&[t(&[2, 3, 1]), t(&[2, 1, 3])], 100).unwrap();
        assert_eq!(s.size(), 6);
        for which in [Green::R, Green::L, Green::H, Green::D] {
            assert_eq!(s.green(which).len(), 1);
        }
        assert!(s.is_regular());
        assert_eq!(s.idempotents().len(), 1);
    }
}
