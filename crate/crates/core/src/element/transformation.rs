//! Full transformations of `{0, .., n-1}`.
//!
//! The λ-value of a transformation is its image set, the ρ-value its kernel
//! (as a canonical block-label list). Stabiliser elements are represented by
//! their restriction to the image (right) or their induced map on kernel
//! classes (left).

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A transformation stored as its zero-based image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    images: Vec<u32>,
}

/// Relabels `labels` so that labels appear in first-occurrence order `0, 1, 2, ..`.
pub(crate) fn canonical_labels(labels: impl IntoIterator<Item = u32>, bound: usize) -> Vec<u32> {
    let mut map = vec![u32::MAX; bound];
    let mut next = 0;
    labels
        .into_iter()
        .map(|l| {
            let slot = &mut map[l as usize];
            if *slot == u32::MAX {
                *slot = next;
                next += 1;
            }
            *slot
        })
        .collect()
}

fn position_map(points: &[u32], degree: usize) -> Vec<u32> {
    let mut pos = vec![u32::MAX; degree];
    for (k, &a) in points.iter().enumerate() {
        pos[a as usize] = k as u32;
    }
    pos
}

impl Transformation {
    /// Builds a transformation from a zero-based image list.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        if let Some(&bad) = images.iter().find(|&&i| i as usize >= n) {
            return Err(Error::Invalid(format!("transformation image {} out of range 1..{n}", bad + 1)));
        }
        Ok(Transformation { images })
    }

    /// Builds a transformation from a one-based image list such as `[1, 3, 2, 4, 5]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if let Some(&bad) = images.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::Invalid(format!("transformation image {bad} out of range 1..{n}")));
        }
        Ok(Transformation { images: images.iter().map(|&i| (i - 1) as u32).collect() })
    }

    /// The identity transformation of degree `n`.
    pub fn identity(n: usize) -> Self {
        Transformation { images: (0..n as u32).collect() }
    }

    /// Number of points.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Zero-based image list.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// The product `self * other` (apply `self` first).
    pub fn mul(&self, other: &Transformation) -> Transformation {
        Transformation { images: self.images.iter().map(|&i| other.images[i as usize]).collect() }
    }

    /// The image set, sorted ascending.
    pub fn image_set(&self) -> Vec<u32> {
        let mut seen = vec![false; self.degree()];
        for &i in &self.images {
            seen[i as usize] = true;
        }
        (0..self.degree() as u32).filter(|&i| seen[i as usize]).collect()
    }

    /// The kernel as a canonical block-label list.
    pub fn kernel(&self) -> Vec<u32> {
        canonical_labels(self.images.iter().copied(), self.degree())
    }

    /// Size of the image.
    pub fn rank(&self) -> usize {
        self.image_set().len()
    }
}

/// The right action on image sets: `A · s = (A)s`.
pub(crate) fn act_image(set: &[u32], s: &Transformation) -> Vec<u32> {
    let mut out: Vec<u32> = set.iter().map(|&a| s.images[a as usize]).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// The left action on kernels: `s · ker(y) = ker(s y)`.
pub(crate) fn act_kernel(s: &Transformation, kernel: &[u32]) -> Vec<u32> {
    canonical_labels(s.images.iter().map(|&i| kernel[i as usize]), s.degree())
}

/// Maps each image point to its least preimage and every other point to the least image point.
pub(crate) fn weak_inverse(x: &Transformation) -> Transformation {
    let n = x.degree();
    let mut inv = vec![u32::MAX; n];
    for (i, &v) in x.images.iter().enumerate().rev() {
        inv[v as usize] = i as u32;
    }
    let fallback = *x.image_set().first().unwrap_or(&0);
    Transformation { images: inv.into_iter().map(|p| if p == u32::MAX { fallback } else { p }).collect() }
}

/// `ū` with `x s ū = x`: sends `(a)s` back to `a` for `a` in the image of `x`.
pub(crate) fn ubar(x: &Transformation, s: &Transformation) -> Result<Transformation> {
    let mut images: Vec<u32> = (0..x.degree() as u32).collect();
    let mut hit = vec![false; x.degree()];
    for a in x.image_set() {
        let b = s.images[a as usize];
        if hit[b as usize] {
            return Err(Error::InvalidUbar("multiplier is not injective on the image".into()));
        }
        hit[b as usize] = true;
        images[b as usize] = a;
    }
    Ok(Transformation { images })
}

/// `ū` with `ū s x = x`: sends `i` to a point `p` with `(p) s x = (i) x`.
pub(crate) fn ubar_left(x: &Transformation, s: &Transformation) -> Result<Transformation> {
    let n = x.degree();
    let sx = s.mul(x);
    let mut pre = vec![u32::MAX; n];
    for (p, &v) in sx.images.iter().enumerate().rev() {
        pre[v as usize] = p as u32;
    }
    let mut images = Vec::with_capacity(n);
    for &v in &x.images {
        let p = pre[v as usize];
        if p == u32::MAX {
            return Err(Error::InvalidUbar("multiplier merges kernel classes".into()));
        }
        images.push(p);
    }
    Ok(Transformation { images })
}

/// The permutation `t` induces on the sorted image of `x`.
pub(crate) fn mu(x: &Transformation, t: &Transformation) -> Result<Permutation> {
    let image = x.image_set();
    let pos = position_map(&image, x.degree());
    let mut perm = Vec::with_capacity(image.len());
    for &a in &image {
        let k = pos[t.images[a as usize] as usize];
        if k == u32::MAX {
            return Err(Error::NotInStabiliser("image is not mapped into itself".into()));
        }
        perm.push(k);
    }
    Permutation::from_images(perm).map_err(|_| Error::NotInStabiliser("image is not permuted".into()))
}

/// The permutation `t` induces (acting on the left) on the kernel classes of `x`.
pub(crate) fn nu(x: &Transformation, t: &Transformation) -> Result<Permutation> {
    let kernel = x.kernel();
    if t.mul(x).kernel() != kernel {
        return Err(Error::NotInStabiliser("kernel is not preserved".into()));
    }
    let classes = kernel.iter().max().map_or(0, |&m| m as usize + 1);
    let mut least = vec![u32::MAX; classes];
    for (i, &c) in kernel.iter().enumerate().rev() {
        least[c as usize] = i as u32;
    }
    let perm = least.iter().map(|&m| kernel[t.images[m as usize] as usize]).collect();
    Permutation::from_images(perm).map_err(|_| Error::NotInStabiliser("kernel classes are not permuted".into()))
}

/// Whether the image set meets every kernel class exactly once.
pub(crate) fn is_group(image: &[u32], kernel: &[u32]) -> bool {
    let classes = kernel.iter().max().map_or(0, |&m| m as usize + 1);
    if image.len() != classes {
        return false;
    }
    let mut hit = vec![false; classes];
    image.iter().all(|&a| !std::mem::replace(&mut hit[kernel[a as usize] as usize], true))
}

/// The idempotent mapping each kernel class onto its unique image point.
pub(crate) fn idempotent(image: &[u32], kernel: &[u32]) -> Result<Transformation> {
    if !is_group(image, kernel) {
        return Err(Error::NoIdempotent);
    }
    let mut rep = vec![0u32; image.len()];
    for &a in image {
        rep[kernel[a as usize] as usize] = a;
    }
    Ok(Transformation { images: kernel.iter().map(|&c| rep[c as usize]).collect() })
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.images.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "t [{}]", body.join(","))
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[usize]) -> Transformation {
        Transformation::from_one_based(v).unwrap()
    }

    #[test]
    fn kernel_and_image_of_a_rep() {
        // x3 x2 x3 from the degree-5 example has kernel {1,4,5|2,3}.
        let x = t(&[3, 1, 1, 3, 3]);
        assert_eq!(x.kernel(), vec![0, 1, 1, 0, 0]);
        assert_eq!(x.image_set(), vec![0, 2]);
        let xp = weak_inverse(&x);
        assert_eq!(x.mul(&xp).mul(&x), x);
    }

    #[test]
    fn group_h_class_and_idempotent() {
        let image = vec![0, 1, 2];
        let kernel = t(&[3, 1, 1, 3, 3]).kernel();
        assert!(!is_group(&image, &kernel));
        let kernel = t(&[1, 2, 3, 1, 2]).kernel();
        let e = idempotent(&image, &kernel).unwrap();
        assert_eq!(e.mul(&e), e);
        assert_eq!(e.image_set(), image);
        assert_eq!(e.kernel(), kernel);
    }

    #[test]
    fn ubar_both_sides() {
        let x = t(&[3, 1, 1, 3, 3]);
        let s = t(&[2, 3, 1, 5, 4]);
        assert_eq!(x.mul(&s).mul(&ubar(&x, &s).unwrap()), x);
        assert_eq!(ubar_left(&x, &s).unwrap().mul(&s).mul(&x), x);
        assert!(ubar(&x, &t(&[1, 1, 1, 1, 1])).is_err());
    }
}
