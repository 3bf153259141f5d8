//! Partial permutations of `{0, .., n-1}`.
//!
//! The λ-value is the image set and the ρ-value the domain; the symmetric
//! inverse monoid is inverse, so `x⁻¹` serves as weak inverse and as ū.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Marker for "undefined" in an image list.
pub const UNDEFINED: u32 = u32::MAX;

/// A partial permutation stored as its zero-based image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialPerm {
    images: Vec<u32>,
}

impl PartialPerm {
    /// Builds a partial permutation from a zero-based image list with [`UNDEFINED`] holes.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in images.iter().filter(|&&i| i != UNDEFINED) {
            if i as usize >= n || std::mem::replace(&mut seen[i as usize], true) {
                return Err(Error::Invalid(format!("{images:?} is not a partial permutation")));
            }
        }
        Ok(PartialPerm { images })
    }

    /// Builds a partial permutation from a one-based image list, `0` meaning undefined.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        PartialPerm::new(images.iter().map(|&i| if i == 0 { UNDEFINED } else { (i - 1) as u32 }).collect())
    }

    /// The partial identity on the zero-based points `set`.
    pub fn identity_on(degree: usize, set: &[u32]) -> Self {
        let mut images = vec![UNDEFINED; degree];
        for &a in set {
            images[a as usize] = a;
        }
        PartialPerm { images }
    }

    /// Number of points.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Zero-based image list with [`UNDEFINED`] holes.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// The product `self * other` (apply `self` first).
    pub fn mul(&self, other: &PartialPerm) -> PartialPerm {
        PartialPerm {
            images: self
                .images
                .iter()
                .map(|&i| if i == UNDEFINED { UNDEFINED } else { other.images[i as usize] })
                .collect(),
        }
    }

    /// The inverse partial permutation.
    pub fn inverse(&self) -> PartialPerm {
        let mut images = vec![UNDEFINED; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            if j != UNDEFINED {
                images[j as usize] = i as u32;
            }
        }
        PartialPerm { images }
    }

    /// The image set, sorted ascending.
    pub fn image_set(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.images.iter().copied().filter(|&i| i != UNDEFINED).collect();
        out.sort_unstable();
        out
    }

    /// The domain, sorted ascending.
    pub fn domain_set(&self) -> Vec<u32> {
        (0..self.degree() as u32).filter(|&i| self.images[i as usize] != UNDEFINED).collect()
    }

    /// Size of the domain.
    pub fn rank(&self) -> usize {
        self.images.iter().filter(|&&i| i != UNDEFINED).count()
    }
}

/// The right action on image sets: `A · s = {(a)s : a ∈ A ∩ dom s}`.
pub(crate) fn act_image(set: &[u32], s: &PartialPerm) -> Vec<u32> {
    let mut out: Vec<u32> = set.iter().map(|&a| s.images[a as usize]).filter(|&b| b != UNDEFINED).collect();
    out.sort_unstable();
    out
}

/// The left action on domains: `s · A = {a : (a)s ∈ A}`.
pub(crate) fn act_domain(s: &PartialPerm, set: &[u32]) -> Vec<u32> {
    let mut member = vec![false; s.degree()];
    for &a in set {
        member[a as usize] = true;
    }
    (0..s.degree() as u32)
        .filter(|&i| {
            let j = s.images[i as usize];
            j != UNDEFINED && member[j as usize]
        })
        .collect()
}

/// `s⁻¹`, valid as ū (`x s ū = x`) when the image of `x` lies in the domain of `s`.
pub(crate) fn ubar(x: &PartialPerm, s: &PartialPerm) -> Result<PartialPerm> {
    if x.image_set().iter().any(|&a| s.images[a as usize] == UNDEFINED) {
        return Err(Error::InvalidUbar("multiplier is undefined on part of the image".into()));
    }
    Ok(s.inverse())
}

/// `s⁻¹`, valid as left ū (`ū s x = x`) when the domain of `x` lies in the image of `s`.
pub(crate) fn ubar_left(x: &PartialPerm, s: &PartialPerm) -> Result<PartialPerm> {
    let inv = s.inverse();
    if x.domain_set().iter().any(|&a| inv.images[a as usize] == UNDEFINED) {
        return Err(Error::InvalidUbar("domain is not contained in the multiplier's image".into()));
    }
    Ok(inv)
}

fn permutation_of(points: &[u32], degree: usize, t: &PartialPerm) -> Result<Permutation> {
    let mut pos = vec![u32::MAX; degree];
    for (k, &a) in points.iter().enumerate() {
        pos[a as usize] = k as u32;
    }
    let mut perm = Vec::with_capacity(points.len());
    for &a in points {
        let b = t.images[a as usize];
        if b == UNDEFINED || pos[b as usize] == u32::MAX {
            return Err(Error::NotInStabiliser("point set is not mapped into itself".into()));
        }
        perm.push(pos[b as usize]);
    }
    Permutation::from_images(perm).map_err(|_| Error::NotInStabiliser("point set is not permuted".into()))
}

/// The permutation `t` induces on the sorted image of `x`.
pub(crate) fn mu(x: &PartialPerm, t: &PartialPerm) -> Result<Permutation> {
    permutation_of(&x.image_set(), x.degree(), t)
}

/// The permutation `t` induces on the sorted domain of `x`.
pub(crate) fn nu(x: &PartialPerm, t: &PartialPerm) -> Result<Permutation> {
    permutation_of(&x.domain_set(), x.degree(), t)
}

impl fmt::Display for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .images
            .iter()
            .map(|&i| if i == UNDEFINED { "0".to_string() } else { (i + 1).to_string() })
            .collect();
        write!(f, "p [{}]", body.join(","))
    }
}

impl fmt::Debug for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_is_a_weak_inverse() {
        let f = PartialPerm::from_one_based(&[5, 4, 0, 2, 6, 0]).unwrap();
        assert_eq!(f.mul(&f.inverse()).mul(&f), f);
        assert_eq!(f.image_set(), vec![1, 3, 4, 5]);
        assert_eq!(f.domain_set(), vec![0, 1, 3, 4]);
        assert!(PartialPerm::from_one_based(&[1, 1]).is_err());
    }

    #[test]
    fn actions_agree_with_products() {
        let x = PartialPerm::from_one_based(&[2, 0, 1, 3]).unwrap();
        let s = PartialPerm::from_one_based(&[0, 4, 1, 0]).unwrap();
        assert_eq!(act_image(&x.image_set(), &s), x.mul(&s).image_set());
        assert_eq!(act_domain(&s, &x.domain_set()), s.mul(&x).domain_set());
    }
}
