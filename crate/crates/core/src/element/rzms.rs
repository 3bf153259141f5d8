//! Rees 0-matrix semigroups `M⁰[G; I, J; P]` over a permutation group.
//!
//! Elements are `0` or triples `(i, g, j)`; the product of `(i, g, j)` and
//! `(k, h, l)` is `(i, g p_{j,k} h, l)` when the sandwich entry `p_{j,k}` is
//! non-zero and `0` otherwise. The λ-value of `(i, g, j)` is `j`, its ρ-value
//! `i`; both are `None` for zero.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::perm_group::PermGroup;

/// The group, index sets and sandwich matrix shared by all elements of one semigroup.
#[derive(Debug)]
pub struct RzmsContext {
    degree: usize,
    group_generators: Vec<Permutation>,
    group: PermGroup,
    nr_rows: usize,
    nr_cols: usize,
    /// `matrix[j][i]` is `p_{j,i}` for `j ∈ J`, `i ∈ I`.
    matrix: Vec<Vec<Option<Permutation>>>,
}

impl PartialEq for RzmsContext {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.group_generators == other.group_generators
            && self.nr_rows == other.nr_rows
            && self.nr_cols == other.nr_cols
            && self.matrix == other.matrix
    }
}

impl Eq for RzmsContext {}

impl RzmsContext {
    /// Builds a context over the group generated by `group_generators` (on `degree` points),
    /// with `|I| = nr_rows`, `|J| = nr_cols` and the `|J| × |I|` matrix `matrix`.
    ///
    /// Every row and column of the matrix must contain a non-zero entry, and
    /// every entry must lie in the group.
    pub fn new(
        degree: usize,
        group_generators: Vec<Permutation>,
        nr_rows: usize,
        nr_cols: usize,
        matrix: Vec<Vec<Option<Permutation>>>,
    ) -> Result<Arc<RzmsContext>> {
        let group = PermGroup::from_generators(degree, group_generators.clone())?;
        if nr_rows == 0 || nr_cols == 0 {
            return Err(Error::Invalid("index sets must be non-empty".into()));
        }
        if matrix.len() != nr_cols || matrix.iter().any(|row| row.len() != nr_rows) {
            return Err(Error::Invalid(format!("sandwich matrix must be {nr_cols} x {nr_rows}")));
        }
        for entry in matrix.iter().flatten().flatten() {
            if !group.contains(entry) {
                return Err(Error::Invalid(format!("matrix entry {entry} is not in the group")));
            }
        }
        if let Some(j) = (0..nr_cols).find(|&j| matrix[j].iter().all(Option::is_none)) {
            return Err(Error::Invalid(format!("matrix row {} is zero", j + 1)));
        }
        if let Some(i) = (0..nr_rows).find(|&i| matrix.iter().all(|row| row[i].is_none())) {
            return Err(Error::Invalid(format!("matrix column {} is zero", i + 1)));
        }
        Ok(Arc::new(RzmsContext { degree, group_generators, group, nr_rows, nr_cols, matrix }))
    }

    /// Number of group points.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `|I|`.
    pub fn nr_rows(&self) -> usize {
        self.nr_rows
    }

    /// `|J|`.
    pub fn nr_cols(&self) -> usize {
        self.nr_cols
    }

    /// The group `G`.
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    /// The generators the group was declared with.
    pub fn group_generators(&self) -> &[Permutation] {
        &self.group_generators
    }

    /// The sandwich entry `p_{j,i}`.
    pub fn entry(&self, j: usize, i: usize) -> Option<&Permutation> {
        self.matrix[j][i].as_ref()
    }

    /// Least `i` with `p_{j,i} ≠ 0`.
    fn first_in_row(&self, j: usize) -> usize {
        (0..self.nr_rows).find(|&i| self.matrix[j][i].is_some()).expect("regular matrix")
    }

    /// Least `j` with `p_{j,i} ≠ 0`.
    fn first_in_col(&self, i: usize) -> usize {
        (0..self.nr_cols).find(|&j| self.matrix[j][i].is_some()).expect("regular matrix")
    }
}

/// A non-zero element `(i, g, j)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Triple {
    /// Row index in `I`, zero-based.
    pub i: usize,
    /// Group element.
    pub g: Permutation,
    /// Column index in `J`, zero-based.
    pub j: usize,
}

/// An element of a Rees 0-matrix semigroup.
#[derive(Clone)]
pub struct RzmsElement {
    context: Arc<RzmsContext>,
    value: Option<Triple>,
}

impl PartialEq for RzmsElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.same_context(other)
    }
}

impl Eq for RzmsElement {}

impl Hash for RzmsElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.value.hash(state);
    }
}

impl RzmsElement {
    /// The element `(i, g, j)` with zero-based indices.
    pub fn new(context: &Arc<RzmsContext>, i: usize, g: Permutation, j: usize) -> Result<Self> {
        if i >= context.nr_rows || j >= context.nr_cols {
            return Err(Error::Invalid(format!("index ({}, {}) out of range", i + 1, j + 1)));
        }
        if !context.group.contains(&g) {
            return Err(Error::Invalid(format!("{g} is not in the group")));
        }
        Ok(RzmsElement { context: context.clone(), value: Some(Triple { i, g, j }) })
    }

    /// The zero element.
    pub fn zero(context: &Arc<RzmsContext>) -> Self {
        RzmsElement { context: context.clone(), value: None }
    }

    /// The shared context.
    pub fn context(&self) -> &Arc<RzmsContext> {
        &self.context
    }

    /// `None` for zero, otherwise the triple.
    pub fn value(&self) -> Option<&Triple> {
        self.value.as_ref()
    }

    /// Whether both elements live in the same semigroup.
    pub fn same_context(&self, other: &RzmsElement) -> bool {
        Arc::ptr_eq(&self.context, &other.context) || *self.context == *other.context
    }

    fn with(&self, value: Option<Triple>) -> RzmsElement {
        RzmsElement { context: self.context.clone(), value }
    }

    /// The sandwich product.
    pub fn mul(&self, other: &RzmsElement) -> RzmsElement {
        let (Some(a), Some(b)) = (&self.value, &other.value) else {
            return self.with(None);
        };
        match self.context.entry(a.j, b.i) {
            None => self.with(None),
            Some(p) => self.with(Some(Triple { i: a.i, g: a.g.mul(p).mul(&b.g), j: b.j })),
        }
    }

    /// λ-value: the column index, `None` for zero.
    pub fn lambda(&self) -> Option<u32> {
        self.value.as_ref().map(|t| t.j as u32)
    }

    /// ρ-value: the row index, `None` for zero.
    pub fn rho(&self) -> Option<u32> {
        self.value.as_ref().map(|t| t.i as u32)
    }
}

/// `k · s`: the column of `y s` for any `y` with column `k`.
pub(crate) fn act_lambda(k: Option<u32>, s: &RzmsElement) -> Option<u32> {
    let (k, t) = (k?, s.value.as_ref()?);
    s.context.entry(k as usize, t.i).map(|_| t.j as u32)
}

/// `s · k`: the row of `s y` for any `y` with row `k`.
pub(crate) fn act_rho(s: &RzmsElement, k: Option<u32>) -> Option<u32> {
    let (k, t) = (k?, s.value.as_ref()?);
    s.context.entry(t.j, k as usize).map(|_| t.i as u32)
}

/// `x' = (k, p_{j,k}⁻¹ g⁻¹ p_{l,i}⁻¹, l)` for `x = (i, g, j)` with `k`, `l` least; zero for zero.
pub(crate) fn weak_inverse(x: &RzmsElement) -> RzmsElement {
    let Some(t) = &x.value else { return x.clone() };
    let ctx = &x.context;
    let k = ctx.first_in_row(t.j);
    let l = ctx.first_in_col(t.i);
    let g = ctx.entry(t.j, k).unwrap().inverse().mul(&t.g.inverse()).mul(&ctx.entry(l, t.i).unwrap().inverse());
    x.with(Some(Triple { i: k, g, j: l }))
}

/// `ū` with `x s ū = x`: for `x = (a, b, i)`, `s = (j, g, k)` it is
/// `(l, p_{k,l}⁻¹ g⁻¹ p_{i,j}⁻¹, i)` with `l` least such that `p_{k,l} ≠ 0`.
pub(crate) fn ubar(x: &RzmsElement, s: &RzmsElement) -> Result<RzmsElement> {
    let Some(xt) = &x.value else { return Ok(x.clone()) };
    let ctx = &x.context;
    let p_ij = s.value.as_ref().and_then(|st| ctx.entry(xt.j, st.i).map(|p| (st, p)));
    let Some((st, p_ij)) = p_ij else {
        return Err(Error::InvalidUbar("product with the multiplier is zero".into()));
    };
    let l = ctx.first_in_row(st.j);
    let g = ctx.entry(st.j, l).unwrap().inverse().mul(&st.g.inverse()).mul(&p_ij.inverse());
    Ok(x.with(Some(Triple { i: l, g, j: xt.j })))
}

/// `ū` with `ū s x = x`: for `x = (i, g, j)`, `s = (k, h, l)` it is
/// `(i, p_{l,i}⁻¹ h⁻¹ p_{n,k}⁻¹, n)` with `n` least such that `p_{n,k} ≠ 0`.
pub(crate) fn ubar_left(x: &RzmsElement, s: &RzmsElement) -> Result<RzmsElement> {
    let Some(xt) = &x.value else { return Ok(x.clone()) };
    let ctx = &x.context;
    let p_li = s.value.as_ref().and_then(|st| ctx.entry(st.j, xt.i).map(|p| (st, p)));
    let Some((st, p_li)) = p_li else {
        return Err(Error::InvalidUbar("product with the multiplier is zero".into()));
    };
    let n = ctx.first_in_col(st.i);
    let g = p_li.inverse().mul(&st.g.inverse()).mul(&ctx.entry(n, st.i).unwrap().inverse());
    Ok(x.with(Some(Triple { i: xt.i, g, j: n })))
}

/// For `x = (i, g, j)` and `t = (k, h, j)` with `p_{j,k} ≠ 0`: the group element `p_{j,k} h`.
pub(crate) fn mu(x: &RzmsElement, t: &RzmsElement) -> Result<Permutation> {
    let Some(xt) = &x.value else { return Ok(Permutation::identity(0)) };
    let tt = t.value.as_ref().filter(|tt| tt.j == xt.j);
    match tt.and_then(|tt| x.context.entry(xt.j, tt.i).map(|p| p.mul(&tt.g))) {
        Some(perm) => Ok(perm),
        None => Err(Error::NotInStabiliser("column is not preserved".into())),
    }
}

/// For `x = (i, g, j)` and `t = (i, h, l)` with `p_{l,i} ≠ 0`: the group element `h p_{l,i}`.
pub(crate) fn nu(x: &RzmsElement, t: &RzmsElement) -> Result<Permutation> {
    let Some(xt) = &x.value else { return Ok(Permutation::identity(0)) };
    let tt = t.value.as_ref().filter(|tt| tt.i == xt.i);
    match tt.and_then(|tt| x.context.entry(tt.j, xt.i).map(|p| tt.g.mul(p))) {
        Some(perm) => Ok(perm),
        None => Err(Error::NotInStabiliser("row is not preserved".into())),
    }
}

/// Whether the H-class with column `l` and row `r` is a group.
pub(crate) fn is_group(ctx: &RzmsContext, l: Option<u32>, r: Option<u32>) -> bool {
    match (l, r) {
        (None, None) => true,
        (Some(j), Some(k)) => ctx.entry(j as usize, k as usize).is_some(),
        _ => false,
    }
}

/// The idempotent `(k, p_{j,k}⁻¹, j)` of a group H-class (zero for the zero class).
pub(crate) fn idempotent(like: &RzmsElement, l: Option<u32>, r: Option<u32>) -> Result<RzmsElement> {
    if !is_group(&like.context, l, r) {
        return Err(Error::NoIdempotent);
    }
    Ok(match (l, r) {
        (Some(j), Some(k)) => {
            let (j, k) = (j as usize, k as usize);
            let g = like.context.entry(j, k).unwrap().inverse();
            like.with(Some(Triple { i: k, g, j }))
        }
        _ => like.with(None),
    })
}

impl fmt::Display for RzmsElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            None => write!(f, "r 0"),
            Some(t) => write!(f, "r ({}, {}, {})", t.i + 1, t.g, t.j + 1),
        }
    }
}

impl fmt::Debug for RzmsElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn context() -> Arc<RzmsContext> {
        let s = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        let c = Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        let id = Permutation::identity(3);
        RzmsContext::new(3, vec![s.clone(), c.clone()], 2, 2, vec![vec![Some(id), None], vec![Some(c), Some(s)]])
            .unwrap()
    }

    #[test]
    fn zero_sandwich_entry_gives_zero() {
        let ctx = context();
        let id = Permutation::identity(3);
        let a = RzmsElement::new(&ctx, 0, id.clone(), 0).unwrap();
        let b = RzmsElement::new(&ctx, 1, id, 1).unwrap();
        assert_eq!(a.mul(&b), RzmsElement::zero(&ctx));
        assert_eq!(b.mul(&a).value().map(|t| (t.i, t.j)), Some((1, 0)));
    }

    #[test]
    fn weak_inverse_and_ubar() {
        let ctx = context();
        let g = Permutation::from_cycles(3, &[vec![1, 3]]).unwrap();
        let x = RzmsElement::new(&ctx, 1, g.clone(), 0).unwrap();
        let xp = weak_inverse(&x);
        assert_eq!(x.mul(&xp).mul(&x), x);
        let s = RzmsElement::new(&ctx, 0, g, 1).unwrap();
        assert_eq!(x.mul(&s).mul(&ubar(&x, &s).unwrap()), x);
        let s2 = RzmsElement::new(&ctx, 1, Permutation::identity(3), 1).unwrap();
        assert_eq!(ubar_left(&x, &s2).unwrap().mul(&s2).mul(&x), x);
    }

    #[test]
    fn rejects_a_zero_row() {
        let id = Permutation::identity(1);
        assert!(RzmsContext::new(1, vec![], 2, 1, vec![vec![Some(id.clone()), Some(id.clone())]]).is_ok());
        assert!(RzmsContext::new(1, vec![], 2, 1, vec![vec![Some(id), None]]).is_err());
        assert!(RzmsContext::new(1, vec![], 1, 2, vec![vec![None], vec![Some(Permutation::identity(1))]]).is_err());
    }
}
