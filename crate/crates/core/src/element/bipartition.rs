//! Bipartitions: set partitions of `{1..n} ∪ {-1..-n}` under the diagram product.
//!
//! A bipartition is stored as a block-label list of length `2n`: positions
//! `0..n` are the points `1..n`, positions `n..2n` the points `-1..-n`. Labels
//! are canonical (first-occurrence order), so equality is structural.
//! The λ-value is the projection `x* x`, the ρ-value `x x*`.

use std::fmt;

use crate::element::transformation::canonical_labels;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A bipartition in canonical block-label form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    blocks: Vec<u32>,
}

/// Disjoint sets with path halving and union by size.
struct DisjointSets {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n as u32).collect(), size: vec![1; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let grand = self.parent[self.parent[x] as usize];
            self.parent[x] = grand;
            x = grand as usize;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a as u32;
        self.size[a] += self.size[b];
    }
}

impl Bipartition {
    /// Builds a bipartition from an arbitrary block-label list of length `2n`.
    pub fn from_labels(labels: &[u32]) -> Result<Self> {
        if labels.len() % 2 != 0 {
            return Err(Error::Invalid("bipartition label list has odd length".into()));
        }
        let bound = labels.iter().max().map_or(0, |&m| m as usize + 1);
        Ok(Bipartition { blocks: canonical_labels(labels.iter().copied(), bound) })
    }

    /// Builds a bipartition of degree `n` from one-based signed blocks such as `[[1,-1],[2],[-2]]`.
    pub fn from_blocks(n: usize, blocks: &[Vec<i64>]) -> Result<Self> {
        let mut labels = vec![u32::MAX; 2 * n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Invalid("empty block in bipartition".into()));
            }
            for &p in block {
                let pos = match p {
                    p if p > 0 && p as usize <= n => p as usize - 1,
                    p if p < 0 && (-p) as usize <= n => n + (-p) as usize - 1,
                    _ => return Err(Error::Invalid(format!("bipartition point {p} out of range for degree {n}"))),
                };
                if labels[pos] != u32::MAX {
                    return Err(Error::Invalid(format!("bipartition point {p} appears twice")));
                }
                labels[pos] = b as u32;
            }
        }
        if labels.contains(&u32::MAX) {
            return Err(Error::Invalid("bipartition blocks do not cover every point".into()));
        }
        Bipartition::from_labels(&labels)
    }

    /// The identity bipartition `{{i, -i}}` of degree `n`.
    pub fn identity(n: usize) -> Self {
        let labels: Vec<u32> = (0..n as u32).chain(0..n as u32).collect();
        Bipartition { blocks: labels }
    }

    /// Number of positive points.
    pub fn degree(&self) -> usize {
        self.blocks.len() / 2
    }

    /// The canonical block-label list.
    pub fn labels(&self) -> &[u32] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn nr_blocks(&self) -> usize {
        self.blocks.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// For each block, whether it meets both `{1..n}` and `{-1..-n}`.
    pub fn transverse(&self) -> Vec<bool> {
        let n = self.degree();
        let mut top = vec![false; self.nr_blocks()];
        let mut bottom = vec![false; self.nr_blocks()];
        for (p, &b) in self.blocks.iter().enumerate() {
            if p < n {
                top[b as usize] = true;
            } else {
                bottom[b as usize] = true;
            }
        }
        top.iter().zip(&bottom).map(|(&a, &b)| a && b).collect()
    }

    /// Number of transverse blocks.
    pub fn rank(&self) -> usize {
        self.transverse().into_iter().filter(|&t| t).count()
    }

    /// The blocks as one-based signed point lists, in canonical order.
    pub fn blocks(&self) -> Vec<Vec<i64>> {
        let n = self.degree();
        let mut out = vec![Vec::new(); self.nr_blocks()];
        for (p, &b) in self.blocks.iter().enumerate() {
            let point = if p < n { p as i64 + 1 } else { -((p - n) as i64 + 1) };
            out[b as usize].push(point);
        }
        out
    }

    /// The diagram product `self * other`.
    ///
    /// The bottom row of `self` is glued to the top row of `other`; blocks
    /// connected through the middle row merge, and the middle row is discarded.
    pub fn mul(&self, other: &Bipartition) -> Bipartition {
        let n = self.degree();
        // Nodes 0..n: top of self; n..2n: the shared middle row; 2n..3n: bottom of other.
        let mut sets = DisjointSets::new(3 * n);
        let mut first = vec![usize::MAX; 2 * n + 1];
        for (offset, labels) in [(0usize, &self.blocks), (n, &other.blocks)] {
            first.iter_mut().for_each(|f| *f = usize::MAX);
            for (p, &b) in labels.iter().enumerate() {
                let node = offset + p;
                let f = &mut first[b as usize];
                if *f == usize::MAX {
                    *f = node;
                } else {
                    sets.union(*f, node);
                }
            }
        }
        let roots: Vec<u32> = (0..n).chain(2 * n..3 * n).map(|v| sets.find(v) as u32).collect();
        Bipartition { blocks: canonical_labels(roots, 3 * n) }
    }

    /// The involution `x*` exchanging `i` and `-i`.
    pub fn star(&self) -> Bipartition {
        let n = self.degree();
        let swapped: Vec<u32> = self.blocks[n..].iter().chain(&self.blocks[..n]).copied().collect();
        Bipartition { blocks: canonical_labels(swapped, 2 * n) }
    }
}

/// The permutation `t` induces on the transverse blocks of the projection `e = x* x`.
///
/// Block `B_i` goes to `B_j` when some `k ∈ B_i` and `-l` with `l ∈ B_j` lie in one block of `e t`.
pub(crate) fn mu(x: &Bipartition, t: &Bipartition) -> Result<Permutation> {
    let e = x.star().mul(x);
    if t.star().mul(&e).mul(t) != e {
        return Err(Error::NotInStabiliser("projection is not preserved".into()));
    }
    let n = e.degree();
    let transverse = e.transverse();
    let mut index = vec![u32::MAX; transverse.len()];
    let mut next = 0;
    for (b, &tr) in transverse.iter().enumerate() {
        if tr {
            index[b] = next;
            next += 1;
        }
    }
    let f = e.mul(t);
    let mut bottom_of = vec![usize::MAX; f.nr_blocks()];
    for q in (n..2 * n).rev() {
        bottom_of[f.blocks[q] as usize] = q - n;
    }
    let mut perm = vec![u32::MAX; next as usize];
    for k in 0..n {
        let b = e.blocks[k] as usize;
        if !transverse[b] || perm[index[b] as usize] != u32::MAX {
            continue;
        }
        let l = bottom_of[f.blocks[k] as usize];
        let target = if l == usize::MAX { u32::MAX } else { index[e.blocks[l] as usize] };
        if target == u32::MAX {
            return Err(Error::NotInStabiliser("transverse block lost".into()));
        }
        perm[index[b] as usize] = target;
    }
    Permutation::from_images(perm).map_err(|_| Error::NotInStabiliser("transverse blocks not permuted".into()))
}

/// The forward permutation `t` induces (on the left) on the transverse blocks of `x x*`.
pub(crate) fn nu(x: &Bipartition, t: &Bipartition) -> Result<Permutation> {
    Ok(mu(&x.star(), &t.star())?.inverse())
}

/// `ū = (x s)* x`, which satisfies `x s ū = x` whenever `x s` and `x` have equal rank.
pub(crate) fn ubar(x: &Bipartition, s: &Bipartition) -> Result<Bipartition> {
    let xs = x.mul(s);
    if xs.rank() != x.rank() {
        return Err(Error::InvalidUbar("multiplier lowers the rank".into()));
    }
    Ok(xs.star().mul(x))
}

/// `ū = x (s x)*`, which satisfies `ū s x = x` whenever `s x` and `x` have equal rank.
pub(crate) fn ubar_left(x: &Bipartition, s: &Bipartition) -> Result<Bipartition> {
    let sx = s.mul(x);
    if sx.rank() != x.rank() {
        return Err(Error::InvalidUbar("multiplier lowers the rank".into()));
    }
    Ok(x.mul(&sx.star()))
}

/// Whether the H-class with λ-value `l = x* x` and ρ-value `r = y y*` is a group.
///
/// The values must have equal rank (otherwise no such H-class exists), and no
/// transverse block may be lost in the product `r l`.
pub(crate) fn is_group(l: &Bipartition, r: &Bipartition) -> bool {
    l.rank() == r.rank() && r.mul(l).rank() == l.rank()
}

/// The idempotent `y y* x* x` of a group H-class.
pub(crate) fn idempotent(l: &Bipartition, r: &Bipartition) -> Result<Bipartition> {
    if !is_group(l, r) {
        return Err(Error::NoIdempotent);
    }
    Ok(r.mul(l))
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| format!("[{}]", b.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "b [{}]", blocks.join(","))
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
