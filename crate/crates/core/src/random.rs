//! Random instances for self-tests and property tests.
//!
//! All functions take an explicit RNG so runs are reproducible from a seed.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::element::{Bipartition, Element, PartialPerm, RzmsContext, RzmsElement, Transformation};
use crate::error::Result;
use crate::perm::Permutation;
use crate::perm_group::PermGroup;

/// The four element kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Transformation,
    PartialPerm,
    Bipartition,
    Rzms,
}

impl Kind {
    /// All kinds, in a fixed order.
    pub const ALL: [Kind; 4] = [Kind::Transformation, Kind::PartialPerm, Kind::Bipartition, Kind::Rzms];
}

/// A uniformly random permutation of `n` points.
pub fn permutation<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<u32> = (0..n as u32).collect();
    images.shuffle(rng);
    Permutation::from_images(images).expect("shuffled identity is a permutation")
}

/// A uniformly random transformation of degree `n`.
pub fn transformation<R: Rng>(rng: &mut R, n: usize) -> Transformation {
    Transformation::new((0..n).map(|_| rng.gen_range(0..n as u32)).collect()).expect("images in range")
}

/// A random partial permutation of degree `n`; each point is in the domain with probability `density`.
pub fn partial_perm<R: Rng>(rng: &mut R, n: usize, density: f64) -> PartialPerm {
    let mut targets: Vec<u32> = (0..n as u32).collect();
    targets.shuffle(rng);
    let images = targets.into_iter().map(|t| if rng.gen_bool(density) { t } else { u32::MAX }).collect();
    PartialPerm::new(images).expect("injective by construction")
}

/// A random bipartition of degree `n`.
///
/// Half of the time the labels are uniform over a random number of blocks (usually low rank);
/// otherwise a permutation diagram has one or two points moved to random blocks (high rank).
pub fn bipartition<R: Rng>(rng: &mut R, n: usize) -> Bipartition {
    let labels: Vec<u32> = if rng.gen_bool(0.5) {
        let bound = rng.gen_range(1..=n as u32 + 1);
        (0..2 * n).map(|_| rng.gen_range(0..bound)).collect()
    } else {
        let pi = permutation(rng, n);
        let mut labels: Vec<u32> = (0..n as u32).chain((0..n).map(|i| pi.images()[i])).collect();
        for _ in 0..rng.gen_range(1..=2) {
            let k = rng.gen_range(0..2 * n);
            labels[k] = rng.gen_range(0..=n as u32);
        }
        labels
    };
    Bipartition::from_labels(&labels).expect("even length")
}

/// A random regular Rees 0-matrix context: `rows × cols` indices over a random subgroup of
/// `Sym(degree)`, with a sandwich matrix having no zero row or column.
pub fn rzms_context<R: Rng>(rng: &mut R, degree: usize, rows: usize, cols: usize) -> Result<Arc<RzmsContext>> {
    let nr_gens = rng.gen_range(1..=2);
    let gens: Vec<Permutation> = (0..nr_gens).map(|_| permutation(rng, degree)).collect();
    let elements = PermGroup::from_generators(degree, gens.clone())?.elements();
    let mut matrix: Vec<Vec<Option<Permutation>>> = (0..cols)
        .map(|_| (0..rows).map(|_| rng.gen_bool(0.6).then(|| elements.choose(rng).unwrap().clone())).collect())
        .collect();
    for j in 0..cols {
        if matrix[j].iter().all(Option::is_none) {
            let i = rng.gen_range(0..rows);
            matrix[j][i] = Some(elements.choose(rng).unwrap().clone());
        }
    }
    for i in 0..rows {
        if matrix.iter().all(|row| row[i].is_none()) {
            let j = rng.gen_range(0..cols);
            matrix[j][i] = Some(elements.choose(rng).unwrap().clone());
        }
    }
    RzmsContext::new(degree, gens, rows, cols, matrix)
}

/// A random element of a Rees 0-matrix semigroup (zero with small probability).
pub fn rzms_element<R: Rng>(rng: &mut R, context: &Arc<RzmsContext>) -> RzmsElement {
    if rng.gen_bool(0.05) {
        return RzmsElement::zero(context);
    }
    let g = context.group().elements().choose(rng).unwrap().clone();
    let i = rng.gen_range(0..context.nr_rows());
    let j = rng.gen_range(0..context.nr_cols());
    RzmsElement::new(context, i, g, j).expect("indices in range")
}

/// A random generating set of `count` elements of the given kind.
///
/// Degrees: transformations and partial permutations up to 6, bipartitions up to 4;
/// Rees 0-matrix semigroups have at most 3 rows and columns over a subgroup of `Sym(4)`.
pub fn generators<R: Rng>(rng: &mut R, kind: Kind, count: usize) -> Vec<Element> {
    match kind {
        Kind::Transformation => {
            let n = rng.gen_range(2..=6);
            (0..count).map(|_| Element::Transformation(transformation(rng, n))).collect()
        }
        Kind::PartialPerm => {
            let n = rng.gen_range(2..=6);
            let density = rng.gen_range(0.6..1.0);
            (0..count).map(|_| Element::PartialPerm(partial_perm(rng, n, density))).collect()
        }
        Kind::Bipartition => {
            let n = rng.gen_range(2..=4);
            (0..count).map(|_| Element::Bipartition(bipartition(rng, n))).collect()
        }
        Kind::Rzms => {
            let degree = rng.gen_range(1..=4);
            let rows = rng.gen_range(1..=3);
            let cols = rng.gen_range(1..=3);
            let context = rzms_context(rng, degree, rows, cols).expect("valid random context");
            (0..count).map(|_| Element::Rzms(rzms_element(rng, &context))).collect()
        }
    }
}

/// A random word of length `1..=max_len` over `nr_generators` generators.
pub fn word<R: Rng>(rng: &mut R, nr_generators: usize, max_len: usize) -> Vec<usize> {
    let len = rng.gen_range(1..=max_len);
    (0..len).map(|_| rng.gen_range(0..nr_generators)).collect()
}

/// A random permutation group: up to three random generators on `degree` points.
pub fn perm_group<R: Rng>(rng: &mut R, degree: usize) -> PermGroup {
    let count = rng.gen_range(0..=3);
    let gens = (0..count).map(|_| permutation(rng, degree)).collect();
    PermGroup::from_generators(degree, gens).expect("same degree")
}

/// A random subgroup of `g`, generated by up to two random elements of `g`.
pub fn subgroup<R: Rng>(rng: &mut R, g: &PermGroup) -> PermGroup {
    let elements = g.elements();
    let count = rng.gen_range(0..=2);
    let gens = (0..count).map(|_| elements.choose(rng).unwrap().clone()).collect();
    PermGroup::from_generators(g.degree(), gens).expect("same degree")
}
