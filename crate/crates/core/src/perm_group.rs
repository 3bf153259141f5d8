//! Permutation groups with a stabiliser chain.
//!
//! The chain is built by the deterministic Schreier–Sims algorithm. Every
//! transversal representative and strong generator carries a word in the
//! group's labelled generators, so any member can be factorised.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest group order for which [`PermGroup::intersection`] enumerates elements.
pub const INTERSECTION_LIMIT: u64 = 1_000_000;

/// One letter of a group word: a generator label, possibly inverted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    /// Index into the group's generator list.
    pub generator: usize,
    /// Whether the letter stands for the inverse of the generator.
    pub inverse: bool,
}

/// A word in the labelled generators of a group, read left to right.
pub type GroupWord = Vec<Letter>;

fn invert_word(word: &[Letter]) -> GroupWord {
    word.iter().rev().map(|l| Letter { generator: l.generator, inverse: !l.inverse }).collect()
}

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    strong: Vec<(Permutation, GroupWord)>,
    /// `transversal[p]` maps the base point to `p`.
    transversal: Vec<Option<(Permutation, GroupWord)>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(base: usize, degree: usize, strong: Vec<(Permutation, GroupWord)>) -> Level {
        let mut level = Level { base, strong, transversal: vec![None; degree], orbit: Vec::new() };
        level.rebuild();
        level
    }

    /// Recomputes the basic orbit and transversal by breadth-first search.
    fn rebuild(&mut self) {
        let degree = self.transversal.len();
        self.transversal = vec![None; degree];
        self.transversal[self.base] = Some((Permutation::identity(degree), Vec::new()));
        self.orbit = vec![self.base];
        let mut k = 0;
        while k < self.orbit.len() {
            let p = self.orbit[k];
            for (s, sw) in &self.strong {
                let q = s.apply(p);
                if self.transversal[q].is_none() {
                    let (u, uw) = self.transversal[p].as_ref().expect("orbit point has a representative");
                    let mut w = uw.clone();
                    w.extend_from_slice(sw);
                    self.transversal[q] = Some((u.mul(s), w));
                    self.orbit.push(q);
                }
            }
            k += 1;
        }
    }
}

/// A permutation group given by labelled generators, with a stabiliser chain.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
}

impl PermGroup {
    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup { degree, generators: Vec::new(), levels: Vec::new() }
    }

    /// Builds the stabiliser chain of the group generated by `generators`.
    ///
    /// Generator `i` carries the label `i`; words returned by
    /// [`factorize`](Self::factorize) refer to these labels.
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<PermGroup> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::IncompatibleElements(format!(
                "permutation of degree {} in a group of degree {degree}",
                g.degree()
            )));
        }
        let strong: Vec<(Permutation, GroupWord)> = generators
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_identity())
            .map(|(i, g)| (g.clone(), vec![Letter { generator: i, inverse: false }]))
            .collect();
        let mut group = PermGroup { degree, generators, levels: Vec::new() };
        let Some(base) = strong.iter().filter_map(|(g, _)| first_moved_point(g)).min() else {
            return Ok(group);
        };
        group.levels.push(Level::new(base, degree, strong));
        group.schreier_sims();
        Ok(group)
    }

    fn schreier_sims(&mut self) {
        let mut i = self.levels.len() - 1;
        loop {
            match self.failing_schreier_generator(i) {
                Some((h, hw, j)) => {
                    if j == self.levels.len() {
                        let base = first_moved_point(&h).expect("residue is not the identity");
                        self.levels.push(Level::new(base, self.degree, Vec::new()));
                    }
                    for l in i + 1..=j {
                        self.levels[l].strong.push((h.clone(), hw.clone()));
                        self.levels[l].rebuild();
                    }
                    i = j;
                }
                None => {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                }
            }
        }
    }

    /// Finds a Schreier generator of level `i` that does not sift through the deeper levels.
    fn failing_schreier_generator(&self, i: usize) -> Option<(Permutation, GroupWord, usize)> {
        let level = &self.levels[i];
        for &p in &level.orbit {
            let (up, upw) = level.transversal[p].as_ref().expect("orbit point");
            for (s, sw) in &level.strong {
                let q = s.apply(p);
                let (uq, uqw) = level.transversal[q].as_ref().expect("orbit is closed");
                let h = up.mul(s).mul(&uq.inverse());
                if h.is_identity() {
                    continue;
                }
                let mut w = upw.clone();
                w.extend_from_slice(sw);
                w.extend(invert_word(uqw));
                let (r, rw, j) = self.sift(h, w, i + 1);
                if !r.is_identity() {
                    return Some((r, rw, j));
                }
            }
        }
        None
    }

    /// Sifts `h` through the levels from `from` on; returns the residue, its word,
    /// and the level at which sifting stopped.
    fn sift(&self, mut h: Permutation, mut w: GroupWord, from: usize) -> (Permutation, GroupWord, usize) {
        for m in from..self.levels.len() {
            let level = &self.levels[m];
            let beta = h.apply(level.base);
            match &level.transversal[beta] {
                None => return (h, w, m),
                Some((u, uw)) => {
                    h = h.mul(&u.inverse());
                    w.extend(invert_word(uw));
                }
            }
        }
        (h, w, self.levels.len())
    }

    /// Number of points acted on.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The labelled generators.
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// The base points of the stabiliser chain.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// The group order: the product of the basic orbit lengths.
    pub fn order(&self) -> u64 {
        self.levels.iter().map(|l| l.orbit.len() as u64).product()
    }

    /// Membership test by sifting.
    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g.clone(), Vec::new(), 0).0.is_identity()
    }

    /// A word in the labelled generators evaluating to `g`.
    pub fn factorize(&self, g: &Permutation) -> Result<GroupWord> {
        if g.degree() != self.degree {
            return Err(Error::NotMember(format!("{g} has the wrong degree")));
        }
        let (r, w, _) = self.sift(g.clone(), Vec::new(), 0);
        if !r.is_identity() {
            return Err(Error::NotMember(format!("{g}")));
        }
        // g * u_0^-1 * u_1^-1 * ... = 1, so g = ... u_1 u_0: the inverse of the sift word.
        Ok(invert_word(&w))
    }

    /// Evaluates a word in the labelled generators.
    pub fn evaluate(&self, word: &[Letter]) -> Permutation {
        word.iter().fold(Permutation::identity(self.degree), |acc, l| {
            let g = &self.generators[l.generator];
            if l.inverse {
                acc.mul(&g.inverse())
            } else {
                acc.mul(g)
            }
        })
    }

    /// All elements of the group, identity first.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut elements = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elements.len() * level.orbit.len());
            for &p in &level.orbit {
                let (u, _) = level.transversal[p].as_ref().expect("orbit point");
                next.extend(elements.iter().map(|e| e.mul(u)));
            }
            elements = next;
        }
        elements
    }

    /// A breadth-first spanning tree of the right Cayley graph.
    ///
    /// Entry `k` is `(element, parent)` where `parent = Some((j, g))` means
    /// `element = elements[j] * generator g`; the identity comes first with no parent.
    pub fn cayley_tree(&self) -> Vec<(Permutation, Option<(usize, usize)>)> {
        let mut out = vec![(Permutation::identity(self.degree), None)];
        let mut seen: HashSet<Permutation> = out.iter().map(|(p, _)| p.clone()).collect();
        let mut k = 0;
        while k < out.len() {
            for (g, s) in self.generators.iter().enumerate() {
                let q = out[k].0.mul(s);
                if seen.insert(q.clone()) {
                    out.push((q, Some((k, g))));
                }
            }
            k += 1;
        }
        out
    }

    /// Whether every generator of `h` lies in `self`.
    pub fn is_subgroup_of(h: &PermGroup, g: &PermGroup) -> bool {
        h.degree == g.degree && h.generators.iter().all(|x| g.contains(x))
    }

    /// One representative per left coset `gH` of `h` in `self`; the identity comes first.
    pub fn left_transversal(&self, h: &PermGroup) -> Result<Vec<Permutation>> {
        self.transversal(h, true)
    }

    /// One representative per right coset `Hg` of `h` in `self`; the identity comes first.
    pub fn right_transversal(&self, h: &PermGroup) -> Result<Vec<Permutation>> {
        self.transversal(h, false)
    }

    fn transversal(&self, h: &PermGroup, left: bool) -> Result<Vec<Permutation>> {
        if !PermGroup::is_subgroup_of(h, self) {
            return Err(Error::NotSubgroup);
        }
        let index = (self.order() / h.order()) as usize;
        let same_coset = |a: &Permutation, b: &Permutation| {
            if left {
                h.contains(&b.inverse().mul(a))
            } else {
                h.contains(&a.mul(&b.inverse()))
            }
        };
        let mut reps = vec![Permutation::identity(self.degree)];
        let mut queue: VecDeque<usize> = VecDeque::from([0]);
        while let Some(k) = queue.pop_front() {
            if reps.len() == index {
                break;
            }
            for s in &self.generators {
                let c = if left { s.mul(&reps[k]) } else { reps[k].mul(s) };
                if !reps.iter().any(|r| same_coset(&c, r)) {
                    reps.push(c);
                    queue.push_back(reps.len() - 1);
                }
            }
        }
        debug_assert_eq!(reps.len(), index);
        Ok(reps)
    }

    /// The intersection of two groups on the same points.
    ///
    /// The smaller group is enumerated and filtered by membership in the other;
    /// groups larger than [`INTERSECTION_LIMIT`] are refused.
    pub fn intersection(&self, other: &PermGroup) -> Result<PermGroup> {
        if self.degree != other.degree {
            return Err(Error::IncompatibleElements("groups on different point sets".into()));
        }
        let (small, large) = if self.order() <= other.order() { (self, other) } else { (other, self) };
        if small.order() > INTERSECTION_LIMIT {
            return Err(Error::TooLarge(format!("intersection of groups of order {}", small.order())));
        }
        if PermGroup::is_subgroup_of(small, large) {
            return Ok(small.clone());
        }
        let mut result = PermGroup::trivial(self.degree);
        let mut gens = Vec::new();
        for e in small.elements() {
            if large.contains(&e) && !result.contains(&e) {
                gens.push(e);
                result = PermGroup::from_generators(self.degree, gens.clone())?;
            }
        }
        Ok(result)
    }
}

fn first_moved_point(g: &Permutation) -> Option<usize> {
    (0..g.degree()).find(|&i| g.apply(i) != i)
}
