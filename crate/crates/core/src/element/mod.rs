//! Semigroup elements of the four supported kinds and their λ/ρ machinery.
//!
//! Every kind lives in a regular ambient semigroup `U` in which Green's
//! `L`- and `R`-classes are classified by a λ-value and a ρ-value. Right
//! multiplication acts on λ-values, left multiplication on ρ-values, and the
//! stabiliser of an `L`-class (`R`-class) of `U` acts faithfully on a small
//! point set, which is how stabiliser groups are represented as permutation
//! groups.

pub mod bipartition;
pub mod pperm;
pub mod rzms;
pub mod transformation;

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub use bipartition::Bipartition;
pub use pperm::PartialPerm;
pub use rzms::{RzmsContext, RzmsElement, Triple};
pub use transformation::Transformation;

/// An element of one of the supported ambient semigroups, or a formal identity.
///
/// The formal identity multiplies as a two-sided identity with every kind; it
/// stands for the empty word and never appears inside orbits or class data.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Transformation(Transformation),
    PartialPerm(PartialPerm),
    Bipartition(Bipartition),
    Rzms(RzmsElement),
    Identity,
}

/// Canonical invariant of the `L`-class in the ambient semigroup.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum LambdaValue {
    /// Sorted image set (transformations and partial permutations), zero-based.
    Image(Vec<u32>),
    /// The projection `x* x` of a bipartition.
    Projection(Bipartition),
    /// Column index in `J` of a Rees 0-matrix element, `None` for zero.
    Column(Option<u32>),
}

/// Canonical invariant of the `R`-class in the ambient semigroup.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum RhoValue {
    /// Kernel of a transformation as a canonical block-label list.
    Kernel(Vec<u32>),
    /// Sorted domain of a partial permutation, zero-based.
    Domain(Vec<u32>),
    /// The projection `x x*` of a bipartition.
    Projection(Bipartition),
    /// Row index in `I` of a Rees 0-matrix element, `None` for zero.
    Row(Option<u32>),
}

fn mismatch(a: &Element, b: &Element) -> Error {
    Error::IncompatibleElements(format!("{} and {}", a.describe(), b.describe()))
}

impl Element {
    /// A short description of the kind and degree, for error messages.
    pub fn describe(&self) -> String {
        match self {
            Element::Transformation(x) => format!("transformation of degree {}", x.degree()),
            Element::PartialPerm(x) => format!("partial permutation of degree {}", x.degree()),
            Element::Bipartition(x) => format!("bipartition of degree {}", x.degree()),
            Element::Rzms(x) => format!(
                "Rees 0-matrix element over {} x {} indices",
                x.context().nr_rows(),
                x.context().nr_cols()
            ),
            Element::Identity => "formal identity".into(),
        }
    }

    /// Whether the two elements can be multiplied.
    pub fn is_compatible(&self, other: &Element) -> bool {
        match (self, other) {
            (Element::Identity, _) | (_, Element::Identity) => true,
            (Element::Transformation(a), Element::Transformation(b)) => a.degree() == b.degree(),
            (Element::PartialPerm(a), Element::PartialPerm(b)) => a.degree() == b.degree(),
            (Element::Bipartition(a), Element::Bipartition(b)) => a.degree() == b.degree(),
            (Element::Rzms(a), Element::Rzms(b)) => a.same_context(b),
            _ => false,
        }
    }

    /// The product `self * other`, checking compatibility.
    pub fn multiply(&self, other: &Element) -> Result<Element> {
        if !self.is_compatible(other) {
            return Err(mismatch(self, other));
        }
        Ok(self.mul(other))
    }

    /// The product `self * other`.
    ///
    /// # Panics
    /// If the elements are incompatible; use [`multiply`](Self::multiply) for checked input.
    pub fn mul(&self, other: &Element) -> Element {
        match (self, other) {
            (Element::Identity, x) | (x, Element::Identity) => x.clone(),
            (Element::Transformation(a), Element::Transformation(b)) => Element::Transformation(a.mul(b)),
            (Element::PartialPerm(a), Element::PartialPerm(b)) => Element::PartialPerm(a.mul(b)),
            (Element::Bipartition(a), Element::Bipartition(b)) => Element::Bipartition(a.mul(b)),
            (Element::Rzms(a), Element::Rzms(b)) => Element::Rzms(a.mul(b)),
            _ => panic!("{}", mismatch(self, other)),
        }
    }

    /// `self` raised to the power `k ≥ 1` (the identity for `k = 0`).
    pub fn pow(&self, k: u64) -> Element {
        let mut result = Element::Identity;
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        result
    }

    /// Whether this is the formal identity.
    pub fn is_identity(&self) -> bool {
        matches!(self, Element::Identity)
    }

    /// The λ-value; equal λ-values characterise `L`-classes of the ambient semigroup.
    ///
    /// # Panics
    /// For the formal identity, which has no λ-value.
    pub fn lambda_value(&self) -> LambdaValue {
        match self {
            Element::Transformation(x) => LambdaValue::Image(x.image_set()),
            Element::PartialPerm(x) => LambdaValue::Image(x.image_set()),
            Element::Bipartition(x) => LambdaValue::Projection(x.star().mul(x)),
            Element::Rzms(x) => LambdaValue::Column(x.lambda()),
            Element::Identity => panic!("the formal identity has no lambda value"),
        }
    }

    /// The ρ-value; equal ρ-values characterise `R`-classes of the ambient semigroup.
    ///
    /// # Panics
    /// For the formal identity, which has no ρ-value.
    pub fn rho_value(&self) -> RhoValue {
        match self {
            Element::Transformation(x) => RhoValue::Kernel(x.kernel()),
            Element::PartialPerm(x) => RhoValue::Domain(x.domain_set()),
            Element::Bipartition(x) => RhoValue::Projection(x.mul(&x.star())),
            Element::Rzms(x) => RhoValue::Row(x.rho()),
            Element::Identity => panic!("the formal identity has no rho value"),
        }
    }

    /// An element `x'` with `x x' x = x`.
    ///
    /// Transformations map image points to their least preimage and other
    /// points to the least image point; partial permutations invert;
    /// bipartitions take `x*`; Rees 0-matrix triples use the least admissible
    /// indices. Zero and the formal identity are their own weak inverses.
    pub fn weak_inverse(&self) -> Element {
        match self {
            Element::Transformation(x) => Element::Transformation(transformation::weak_inverse(x)),
            Element::PartialPerm(x) => Element::PartialPerm(x.inverse()),
            Element::Bipartition(x) => Element::Bipartition(x.star()),
            Element::Rzms(x) => Element::Rzms(rzms::weak_inverse(x)),
            Element::Identity => Element::Identity,
        }
    }

    /// The inverse in the sense of the kind's involution (`x⁻¹` or `x*`), if it has one.
    pub fn involution(&self) -> Option<Element> {
        match self {
            Element::PartialPerm(x) => Some(Element::PartialPerm(x.inverse())),
            Element::Bipartition(x) => Some(Element::Bipartition(x.star())),
            Element::Identity => Some(Element::Identity),
            _ => None,
        }
    }

    /// An element `ū` with `x s ū = x`, where `x = self`.
    ///
    /// Requires `x s` to be `L`-reachable back to `x`, i.e. `λ(x s)` lies in the
    /// strongly connected component of `λ(x)`; a rank drop is reported as an error.
    pub fn ubar(&self, s: &Element) -> Result<Element> {
        match (self, s) {
            (_, Element::Identity) | (Element::Identity, _) => Ok(Element::Identity),
            (Element::Transformation(x), Element::Transformation(s)) => {
                transformation::ubar(x, s).map(Element::Transformation)
            }
            (Element::PartialPerm(x), Element::PartialPerm(s)) => pperm::ubar(x, s).map(Element::PartialPerm),
            (Element::Bipartition(x), Element::Bipartition(s)) => bipartition::ubar(x, s).map(Element::Bipartition),
            (Element::Rzms(x), Element::Rzms(s)) => rzms::ubar(x, s).map(Element::Rzms),
            _ => Err(mismatch(self, s)),
        }
    }

    /// An element `ū` with `ū s x = x`, where `x = self` (the left-handed dual of [`ubar`](Self::ubar)).
    pub fn ubar_left(&self, s: &Element) -> Result<Element> {
        match (self, s) {
            (_, Element::Identity) | (Element::Identity, _) => Ok(Element::Identity),
            (Element::Transformation(x), Element::Transformation(s)) => {
                transformation::ubar_left(x, s).map(Element::Transformation)
            }
            (Element::PartialPerm(x), Element::PartialPerm(s)) => pperm::ubar_left(x, s).map(Element::PartialPerm),
            (Element::Bipartition(x), Element::Bipartition(s)) => {
                bipartition::ubar_left(x, s).map(Element::Bipartition)
            }
            (Element::Rzms(x), Element::Rzms(s)) => rzms::ubar_left(x, s).map(Element::Rzms),
            _ => Err(mismatch(self, s)),
        }
    }

    /// Number of points of the faithful representation of the `L`-class stabiliser.
    pub fn lambda_rank(&self) -> usize {
        match self {
            Element::Transformation(x) => x.rank(),
            Element::PartialPerm(x) => x.rank(),
            Element::Bipartition(x) => x.rank(),
            Element::Rzms(x) => x.value().map_or(0, |_| x.context().degree()),
            Element::Identity => 0,
        }
    }

    /// The permutation induced by `t ∈ Stab(L_x)` on the faithful points of `L_x`.
    ///
    /// Points are the sorted image (transformations, partial permutations), the
    /// transverse blocks of `x* x` in canonical order (bipartitions), or the
    /// group points (Rees 0-matrix, where `t = (k, h, j)` gives `p_{j,k} h`).
    pub fn mu(&self, t: &Element) -> Result<Permutation> {
        match (self, t) {
            (x, Element::Identity) => Ok(Permutation::identity(x.lambda_rank())),
            (Element::Transformation(x), Element::Transformation(t)) => transformation::mu(x, t),
            (Element::PartialPerm(x), Element::PartialPerm(t)) => pperm::mu(x, t),
            (Element::Bipartition(x), Element::Bipartition(t)) => bipartition::mu(x, t),
            (Element::Rzms(x), Element::Rzms(t)) => rzms::mu(x, t),
            _ => Err(mismatch(self, t)),
        }
    }

    /// The permutation induced by `t ∈ Stab(R_x)` (acting on the left) on the faithful
    /// points of `R_x`: kernel classes, domain points, transverse blocks of `x x*`, or
    /// group points (`t = (i, h, l)` gives `h p_{l,i}`). A homomorphism: `ν(st) = ν(s) ν(t)`.
    pub fn nu(&self, t: &Element) -> Result<Permutation> {
        match (self, t) {
            (x, Element::Identity) => Ok(Permutation::identity(x.lambda_rank())),
            (Element::Transformation(x), Element::Transformation(t)) => transformation::nu(x, t),
            (Element::PartialPerm(x), Element::PartialPerm(t)) => pperm::nu(x, t),
            (Element::Bipartition(x), Element::Bipartition(t)) => bipartition::nu(x, t),
            (Element::Rzms(x), Element::Rzms(t)) => rzms::nu(x, t),
            _ => Err(mismatch(self, t)),
        }
    }

    /// The embedding of the left stabiliser into the right one: `μ_x(x' s x)`.
    pub fn psi_embed(&self, xp: &Element, s: &Element) -> Result<Permutation> {
        self.mu(&xp.mul(s).mul(self))
    }
}

/// `v · s`: the λ-value of `y s` for any `y` with λ-value `v`.
pub fn act_lambda(v: &LambdaValue, s: &Element) -> LambdaValue {
    match (v, s) {
        (v, Element::Identity) => v.clone(),
        (LambdaValue::Image(a), Element::Transformation(s)) => LambdaValue::Image(transformation::act_image(a, s)),
        (LambdaValue::Image(a), Element::PartialPerm(s)) => LambdaValue::Image(pperm::act_image(a, s)),
        (LambdaValue::Projection(e), Element::Bipartition(s)) => {
            LambdaValue::Projection(s.star().mul(e).mul(s))
        }
        (LambdaValue::Column(k), Element::Rzms(s)) => LambdaValue::Column(rzms::act_lambda(*k, s)),
        _ => panic!("lambda value {v:?} cannot be acted on by {}", s.describe()),
    }
}

/// `s · v`: the ρ-value of `s y` for any `y` with ρ-value `v`.
pub fn act_rho(s: &Element, v: &RhoValue) -> RhoValue {
    match (s, v) {
        (Element::Identity, v) => v.clone(),
        (Element::Transformation(s), RhoValue::Kernel(k)) => RhoValue::Kernel(transformation::act_kernel(s, k)),
        (Element::PartialPerm(s), RhoValue::Domain(a)) => RhoValue::Domain(pperm::act_domain(s, a)),
        (Element::Bipartition(s), RhoValue::Projection(e)) => RhoValue::Projection(s.mul(e).mul(&s.star())),
        (Element::Rzms(s), RhoValue::Row(k)) => RhoValue::Row(rzms::act_rho(s, *k)),
        _ => panic!("rho value {v:?} cannot be acted on by {}", s.describe()),
    }
}

/// Whether the `H`-class of the ambient semigroup with λ-value `l` and ρ-value `r`
/// contains an idempotent. `like` is any element of the same kind, degree and context.
pub fn h_class_is_group(like: &Element, l: &LambdaValue, r: &RhoValue) -> bool {
    match (like, l, r) {
        (Element::Transformation(_), LambdaValue::Image(a), RhoValue::Kernel(k)) => transformation::is_group(a, k),
        (Element::PartialPerm(_), LambdaValue::Image(a), RhoValue::Domain(d)) => a == d,
        (Element::Bipartition(_), LambdaValue::Projection(a), RhoValue::Projection(b)) => bipartition::is_group(a, b),
        (Element::Rzms(x), LambdaValue::Column(j), RhoValue::Row(i)) => rzms::is_group(x.context(), *j, *i),
        _ => false,
    }
}

/// The idempotent of the group `H`-class with λ-value `l` and ρ-value `r`.
pub fn h_class_idempotent(like: &Element, l: &LambdaValue, r: &RhoValue) -> Result<Element> {
    match (like, l, r) {
        (Element::Transformation(_), LambdaValue::Image(a), RhoValue::Kernel(k)) => {
            transformation::idempotent(a, k).map(Element::Transformation)
        }
        (Element::PartialPerm(x), LambdaValue::Image(a), RhoValue::Domain(d)) => {
            if a != d {
                return Err(Error::NoIdempotent);
            }
            Ok(Element::PartialPerm(PartialPerm::identity_on(x.degree(), a)))
        }
        (Element::Bipartition(_), LambdaValue::Projection(a), RhoValue::Projection(b)) => {
            bipartition::idempotent(a, b).map(Element::Bipartition)
        }
        (Element::Rzms(x), LambdaValue::Column(j), RhoValue::Row(i)) => rzms::idempotent(x, *j, *i).map(Element::Rzms),
        _ => Err(Error::NoIdempotent),
    }
}

/// The ρ-value of `x⁻¹` (or `x*`) computed from the λ-value of `x`, for kinds with an involution.
pub fn rho_of_involution(l: &LambdaValue) -> Option<RhoValue> {
    match l {
        LambdaValue::Image(a) => Some(RhoValue::Domain(a.clone())),
        LambdaValue::Projection(e) => Some(RhoValue::Projection(e.clone())),
        LambdaValue::Column(_) => None,
    }
}

fn fmt_set(f: &mut fmt::Formatter<'_>, set: &[u32]) -> fmt::Result {
    let body: Vec<String> = set.iter().map(|a| (a + 1).to_string()).collect();
    write!(f, "{{{}}}", body.join(","))
}

impl fmt::Display for LambdaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaValue::Image(a) => fmt_set(f, a),
            LambdaValue::Projection(e) => write!(f, "{e}"),
            LambdaValue::Column(Some(j)) => write!(f, "{}", j + 1),
            LambdaValue::Column(None) => write!(f, "0"),
        }
    }
}

impl fmt::Display for RhoValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RhoValue::Kernel(k) => {
                let classes = k.iter().max().map_or(0, |&m| m as usize + 1);
                let parts: Vec<String> = (0..classes as u32)
                    .map(|c| {
                        let pts: Vec<String> =
                            (0..k.len()).filter(|&i| k[i] == c).map(|i| (i + 1).to_string()).collect();
                        pts.join(",")
                    })
                    .collect();
                write!(f, "{{{}}}", parts.join("|"))
            }
            RhoValue::Domain(a) => fmt_set(f, a),
            RhoValue::Projection(e) => write!(f, "{e}"),
            RhoValue::Row(Some(i)) => write!(f, "{}", i + 1),
            RhoValue::Row(None) => write!(f, "0"),
        }
    }
}

impl fmt::Display for Element {
    /// The text syntax accepted by the parser, e.g. `t [1,3,2]` or `r (1, (1 2), 2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Transformation(x) => write!(f, "{x}"),
            Element::PartialPerm(x) => write!(f, "{x}"),
            Element::Bipartition(x) => write!(f, "{x}"),
            Element::Rzms(x) => write!(f, "{x}"),
            Element::Identity => write!(f, "1"),
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[usize]) -> Element {
        Element::Transformation(Transformation::from_one_based(v).unwrap())
    }

    #[test]
    fn identity_is_two_sided_and_inert() {
        let x = t(&[1, 3, 3, 2, 2]);
        assert_eq!(Element::Identity.mul(&x), x);
        assert_eq!(x.mul(&Element::Identity), x);
        assert_eq!(act_lambda(&x.lambda_value(), &Element::Identity), x.lambda_value());
        assert!(x.mu(&Element::Identity).unwrap().is_identity());
        assert!(Element::Identity.weak_inverse().is_identity());
    }

    #[test]
    fn kind_mismatch_is_an_error() {
        let x = t(&[1, 2]);
        let y = Element::PartialPerm(PartialPerm::from_one_based(&[1, 2]).unwrap());
        assert!(matches!(x.multiply(&y), Err(Error::IncompatibleElements(_))));
        assert!(x.multiply(&t(&[1, 2, 3])).is_err());
    }

    #[test]
    fn lambda_and_rho_values_of_example_elements() {
        assert_eq!(t(&[1, 3, 3, 2, 2]).lambda_value(), LambdaValue::Image(vec![0, 1, 2]));
        assert_eq!(t(&[3, 1, 1, 3, 3]).rho_value().to_string(), "{1,4,5|2,3}");
        let pp = Element::PartialPerm(PartialPerm::from_one_based(&[0, 1, 0, 0, 0, 0, 0, 0, 0]).unwrap());
        assert_eq!(pp.lambda_value().to_string(), "{1}");
        assert_eq!(pp.rho_value().to_string(), "{2}");
    }
}
