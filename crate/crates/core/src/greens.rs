//! Individual Green's classes, described without listing their elements.
//!
//! An `R`-class is its representative `x` together with the λ-component of
//! λ(x) and the stabiliser group `S_x`; it has `|S_x| · |component|`
//! elements. `L`-classes are the mirror image over ρ-values with the left
//! stabiliser. A `D`-class additionally embeds the left stabiliser into the
//! right one (the group `Ψ`); the `H`-class group is `S_x ∩ Ψ`, and indices
//! of that intersection count the `R`- and `L`-classes of the `D`-class.

use crate::element::{h_class_idempotent, h_class_is_group, Element};
use crate::engine::Semigroup;
use crate::error::Result;
use crate::orbit::{realise_in, SccData, Word};
use crate::perm::Permutation;
use crate::perm_group::PermGroup;

/// Elements `base · t` (or `t · base` on the left) for `t` running over one element per
/// permutation of `group`, built along a Cayley tree.
fn stabiliser_orbit(base: &Element, data: &SccData, left: bool) -> Vec<Element> {
    let tree = data.group.cayley_tree();
    let mut ts: Vec<Element> = Vec::with_capacity(tree.len());
    for (_, parent) in &tree {
        let t = match parent {
            None => Element::Identity,
            Some((p, g)) => ts[*p].mul(&data.group_elements[*g]),
        };
        ts.push(t);
    }
    ts.iter().map(|t| if left { t.mul(base) } else { base.mul(t) }).collect()
}

/// An `R`-class of the semigroup, given by one of the engine's representatives.
#[derive(Clone, Copy)]
pub struct RClass<'a> {
    sg: &'a Semigroup,
    index: usize,
}

impl<'a> RClass<'a> {
    pub(crate) fn new(sg: &'a Semigroup, index: usize) -> RClass<'a> {
        RClass { sg, index }
    }

    /// The index of the representative among the engine's representatives.
    pub fn index(&self) -> usize {
        self.index
    }

    /// The representative.
    pub fn rep(&self) -> &'a Element {
        &self.sg.rreps()[self.index].element
    }

    /// A word evaluating to the representative.
    pub fn rep_word(&self) -> &'a Word {
        &self.sg.rreps()[self.index].word
    }

    fn data(&self) -> Result<&'a SccData> {
        self.sg.lambda_orbit().scc_data(self.sg.rreps()[self.index].lambda_scc)
    }

    /// The λ-orbit indices of the component of λ(rep).
    pub fn lambda_scc(&self) -> &'a [usize] {
        &self.sg.lambda_orbit().sccs()[self.sg.rreps()[self.index].lambda_scc]
    }

    /// The stabiliser group `S_x` on the faithful points of λ(rep).
    pub fn group(&self) -> Result<&'a PermGroup> {
        Ok(&self.data()?.group)
    }

    /// Number of elements: `|S_x| · |component|`.
    pub fn size(&self) -> u64 {
        self.sg.rclass_size(self.sg.rreps()[self.index].lambda_scc)
    }

    /// The elements `x s u_i`, with `s` realising each element of `S_x` once and `u_i`
    /// moving λ(x) to each point of its component.
    pub fn elements(&self) -> Result<Vec<Element>> {
        let data = self.data()?;
        let base = stabiliser_orbit(self.rep(), data, false);
        let mut out = Vec::with_capacity(base.len() * data.u.len());
        for u in &data.u {
            out.extend(base.iter().map(|y| y.mul(u)));
        }
        Ok(out)
    }

    /// Whether `y` lies in this `R`-class.
    pub fn contains(&self, y: &Element) -> Result<bool> {
        let rep = &self.sg.rreps()[self.index];
        if y.is_identity() || !rep.element.is_compatible(y) || y.rho_value() != rep.element.rho_value() {
            return Ok(false);
        }
        let orbit = self.sg.lambda_orbit();
        let Some(li) = orbit.position(&y.lambda_value()) else { return Ok(false) };
        if orbit.scc_of(li) != rep.lambda_scc {
            return Ok(false);
        }
        let data = self.data()?;
        let rectified = y.mul(&data.ubar[orbit.scc_position(li)]);
        let p = rep.element.mu(&rep.weak_inverse.mul(&rectified))?;
        Ok(data.group.contains(&p))
    }

    /// The idempotents: one for every λ-value of the component forming a group `H`-class with ρ(rep).
    pub fn idempotents(&self) -> Result<Vec<Element>> {
        let rep = self.rep();
        let rho = rep.rho_value();
        let orbit = self.sg.lambda_orbit();
        self.lambda_scc()
            .iter()
            .map(|&i| &orbit.points()[i])
            .filter(|l| h_class_is_group(rep, l, &rho))
            .map(|l| h_class_idempotent(rep, l, &rho))
            .collect()
    }

    /// Number of idempotents.
    pub fn nr_idempotents(&self) -> Result<usize> {
        let rep = self.rep();
        let rho = rep.rho_value();
        let orbit = self.sg.lambda_orbit();
        Ok(self.lambda_scc().iter().filter(|&&i| h_class_is_group(rep, &orbit.points()[i], &rho)).count())
    }

    /// Whether the class contains an idempotent.
    pub fn is_regular(&self) -> Result<bool> {
        let rep = self.rep();
        let rho = rep.rho_value();
        let orbit = self.sg.lambda_orbit();
        Ok(self.lambda_scc().iter().any(|&i| h_class_is_group(rep, &orbit.points()[i], &rho)))
    }

    /// The `D`-class containing this `R`-class.
    pub fn dclass(&self) -> DClass<'a> {
        DClass::new(self.sg, self.sg.dclass_index_of_rep(self.index))
    }
}

/// Cached data of a `D`-class.
#[derive(Debug, Clone)]
pub struct DClassData {
    /// An element of the class whose λ- and ρ-values are both component representatives.
    pub rep: Element,
    /// A word evaluating to `rep`.
    pub rep_word: Word,
    /// A weak inverse of `rep`.
    pub weak_inverse: Element,
    /// λ-component of the class.
    pub lambda_scc: usize,
    /// ρ-component of the class.
    pub rho_scc: usize,
    /// The left stabiliser embedded into the right one: `μ(x' t x)` over left Schreier generators `t`.
    pub psi: PermGroup,
    /// Elements inducing the generators of `psi`.
    pub psi_elements: Vec<Element>,
    /// Words of `psi_elements`.
    pub psi_words: Vec<Word>,
    /// The `H`-class group `S_x ∩ Ψ`.
    pub h: PermGroup,
}

impl DClassData {
    pub(crate) fn compute(sg: &Semigroup, r: usize) -> Result<DClassData> {
        let rrep = &sg.rreps()[r];
        let rho = sg.rho_orbit();
        let rho_scc = rho.scc_of(rrep.rho_index);
        let left = rho.scc_data(rho_scc)?;
        let pos = rho.scc_position(rrep.rho_index);
        let x = left.ubar[pos].mul(&rrep.element);
        let mut rep_word = left.ubar_words[pos].clone();
        rep_word.extend_from_slice(&rrep.word);
        let xp = x.weak_inverse();
        let degree = x.lambda_rank();
        let mut perms = Vec::new();
        let mut psi_elements = Vec::new();
        let mut psi_words = Vec::new();
        for (t, w) in left.group_elements.iter().zip(&left.group_words) {
            let p = x.psi_embed(&xp, t)?;
            if p.is_identity() || perms.contains(&p) {
                continue;
            }
            perms.push(p);
            psi_elements.push(t.clone());
            psi_words.push(w.clone());
        }
        let psi = PermGroup::from_generators(degree, perms)?;
        let right = sg.lambda_orbit().scc_data(rrep.lambda_scc)?;
        let h = right.group.intersection(&psi)?;
        Ok(DClassData {
            rep: x,
            rep_word,
            weak_inverse: xp,
            lambda_scc: rrep.lambda_scc,
            rho_scc,
            psi,
            psi_elements,
            psi_words,
            h,
        })
    }
}

/// A `D`-class of the semigroup.
#[derive(Clone, Copy)]
pub struct DClass<'a> {
    sg: &'a Semigroup,
    index: usize,
}

impl<'a> DClass<'a> {
    pub(crate) fn new(sg: &'a Semigroup, index: usize) -> DClass<'a> {
        DClass { sg, index }
    }

    /// The index of the class among the engine's `D`-classes.
    pub fn index(&self) -> usize {
        self.index
    }

    /// The class's data (computed on first use).
    pub fn data(&self) -> Result<&'a DClassData> {
        self.sg.dclass_data(self.index)
    }

    fn right(&self) -> Result<&'a SccData> {
        self.sg.lambda_orbit().scc_data(self.data()?.lambda_scc)
    }

    fn left(&self) -> Result<&'a SccData> {
        self.sg.rho_orbit().scc_data(self.data()?.rho_scc)
    }

    /// A representative with both values rectified.
    pub fn rep(&self) -> Result<&'a Element> {
        Ok(&self.data()?.rep)
    }

    /// The engine's `R`-class representatives inside this class.
    pub fn rrep_indices(&self) -> &'a [usize] {
        &self.sg.dclass_reps()[self.index]
    }

    /// Order of the `H`-class group `S_x ∩ Ψ`, which is the size of every `H`-class here.
    pub fn hclass_size(&self) -> Result<u64> {
        Ok(self.data()?.h.order())
    }

    /// Number of `R`-classes: `|ρ-component| · [Ψ : H]`.
    pub fn nr_rclasses(&self) -> Result<u64> {
        let d = self.data()?;
        Ok(self.sg.rho_orbit().sccs()[d.rho_scc].len() as u64 * (d.psi.order() / d.h.order()))
    }

    /// Number of `L`-classes: `|λ-component| · [S_x : H]`.
    pub fn nr_lclasses(&self) -> Result<u64> {
        let d = self.data()?;
        let order = self.right()?.group.order();
        Ok(self.sg.lambda_orbit().sccs()[d.lambda_scc].len() as u64 * (order / d.h.order()))
    }

    /// Number of `H`-classes.
    pub fn nr_hclasses(&self) -> Result<u64> {
        Ok(self.nr_rclasses()? * self.nr_lclasses()?)
    }

    /// Number of elements: `|L| · |R| / |H|`.
    pub fn size(&self) -> Result<u64> {
        let d = self.data()?;
        let r_size = self.right()?.group.order() * self.sg.lambda_orbit().sccs()[d.lambda_scc].len() as u64;
        Ok(self.nr_rclasses()? * r_size)
    }

    /// One representative per `R`-class: `u_i a x` for `u_i` over the ρ-component and `a`
    /// over a left transversal of `H` in `Ψ`.
    pub fn rclass_reps(&self) -> Result<Vec<Element>> {
        Ok(self.rclass_reps_with_words()?.into_iter().map(|(e, _)| e).collect())
    }

    /// [`rclass_reps`](Self::rclass_reps) together with words over the generators.
    pub fn rclass_reps_with_words(&self) -> Result<Vec<(Element, Word)>> {
        let d = self.data()?;
        let left = self.left()?;
        let mut out = Vec::new();
        for (u, uw) in left.u.iter().zip(&left.u_words) {
            for a in d.psi.left_transversal(&d.h)? {
                let (ae, aw) = realise_in(&d.psi, &d.psi_elements, &d.psi_words, &a)?;
                let mut word = uw.clone();
                word.extend(aw);
                word.extend_from_slice(&d.rep_word);
                out.push((u.mul(&ae).mul(&d.rep), word));
            }
        }
        Ok(out)
    }

    /// One representative per `L`-class: `x c u_i` for `c` over a right transversal of `H`
    /// in `S_x` and `u_i` over the λ-component.
    pub fn lclass_reps(&self) -> Result<Vec<Element>> {
        let d = self.data()?;
        let right = self.right()?;
        let mut out = Vec::new();
        for c in right.group.right_transversal(&d.h)? {
            let (ce, _) = right.realise(&c)?;
            let xc = d.rep.mul(&ce);
            out.extend(right.u.iter().map(|u| xc.mul(u)));
        }
        Ok(out)
    }

    /// Whether `y` lies in this `D`-class.
    ///
    /// After moving both values of `y` to the component representatives, `y = x s` for
    /// some `s`, and `y` is in the class exactly when `μ(s) ∈ Ψ S_x`; this is tested
    /// coset by coset over a left transversal of `H` in `S_x`.
    pub fn contains(&self, y: &Element) -> Result<bool> {
        let d = self.data()?;
        if y.is_identity() || !d.rep.is_compatible(y) {
            return Ok(false);
        }
        let (lo, ro) = (self.sg.lambda_orbit(), self.sg.rho_orbit());
        let (Some(li), Some(ri)) = (lo.position(&y.lambda_value()), ro.position(&y.rho_value())) else {
            return Ok(false);
        };
        if lo.scc_of(li) != d.lambda_scc || ro.scc_of(ri) != d.rho_scc {
            return Ok(false);
        }
        let (right, left) = (self.right()?, self.left()?);
        let moved = left.ubar[ro.scc_position(ri)].mul(y).mul(&right.ubar[lo.scc_position(li)]);
        let p = d.rep.mu(&d.weak_inverse.mul(&moved))?;
        for c in right.group.left_transversal(&d.h)? {
            if d.psi.contains(&p.mul(&c)) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Whether the class contains an idempotent.
    pub fn is_regular(&self) -> Result<bool> {
        RClass::new(self.sg, self.rrep_indices()[0]).is_regular()
    }

    /// The `L`-class of the rectified representative.
    pub fn lclass(&self) -> Result<LClass<'a>> {
        let d = self.data()?;
        Ok(LClass { sg: self.sg, rep: d.rep.clone(), rho_scc: d.rho_scc })
    }

    /// The `H`-class of the rectified representative.
    pub fn hclass(&self) -> Result<HClass<'a>> {
        Ok(HClass { sg: self.sg, dclass: *self })
    }
}

/// An `L`-class, given by a representative whose ρ-value is its component's representative point.
#[derive(Clone)]
pub struct LClass<'a> {
    sg: &'a Semigroup,
    rep: Element,
    rho_scc: usize,
}

impl<'a> LClass<'a> {
    fn data(&self) -> Result<&'a SccData> {
        self.sg.rho_orbit().scc_data(self.rho_scc)
    }

    /// The representative.
    pub fn rep(&self) -> &Element {
        &self.rep
    }

    /// The left stabiliser group on the faithful points of ρ(rep).
    pub fn group(&self) -> Result<&'a PermGroup> {
        Ok(&self.data()?.group)
    }

    /// Number of elements: `|left stabiliser| · |ρ-component|`.
    pub fn size(&self) -> Result<u64> {
        Ok(self.data()?.group.order() * self.sg.rho_orbit().sccs()[self.rho_scc].len() as u64)
    }

    /// The elements `u_i t x`, with `t` realising each element of the left stabiliser once.
    pub fn elements(&self) -> Result<Vec<Element>> {
        let data = self.data()?;
        let base = stabiliser_orbit(&self.rep, data, true);
        let mut out = Vec::with_capacity(base.len() * data.u.len());
        for u in &data.u {
            out.extend(base.iter().map(|y| u.mul(y)));
        }
        Ok(out)
    }

    /// Whether `y` lies in this `L`-class.
    pub fn contains(&self, y: &Element) -> Result<bool> {
        if y.is_identity() || !self.rep.is_compatible(y) || y.lambda_value() != self.rep.lambda_value() {
            return Ok(false);
        }
        let orbit = self.sg.rho_orbit();
        let Some(ri) = orbit.position(&y.rho_value()) else { return Ok(false) };
        if orbit.scc_of(ri) != self.rho_scc {
            return Ok(false);
        }
        let data = self.data()?;
        let moved = data.ubar[orbit.scc_position(ri)].mul(y);
        let p = self.rep.nu(&moved.mul(&self.rep.weak_inverse()))?;
        Ok(data.group.contains(&p))
    }

    /// The idempotents: one per ρ-value of the component forming a group `H`-class with λ(rep).
    pub fn idempotents(&self) -> Result<Vec<Element>> {
        let lambda = self.rep.lambda_value();
        let orbit = self.sg.rho_orbit();
        orbit.sccs()[self.rho_scc]
            .iter()
            .map(|&i| &orbit.points()[i])
            .filter(|r| h_class_is_group(&self.rep, &lambda, r))
            .map(|r| h_class_idempotent(&self.rep, &lambda, r))
            .collect()
    }

    /// Whether the class contains an idempotent.
    pub fn is_regular(&self) -> Result<bool> {
        Ok(!self.idempotents()?.is_empty())
    }
}

/// The `H`-class of a `D`-class's rectified representative.
#[derive(Clone, Copy)]
pub struct HClass<'a> {
    sg: &'a Semigroup,
    dclass: DClass<'a>,
}

impl<'a> HClass<'a> {
    /// The representative.
    pub fn rep(&self) -> Result<&'a Element> {
        self.dclass.rep()
    }

    /// Number of elements: the order of `S_x ∩ Ψ`.
    pub fn size(&self) -> Result<u64> {
        self.dclass.hclass_size()
    }

    /// The elements `x s` for `μ(s)` running over `S_x ∩ Ψ`.
    pub fn elements(&self) -> Result<Vec<Element>> {
        let d = self.dclass.data()?;
        let right = self.sg.lambda_orbit().scc_data(d.lambda_scc)?;
        d.h.elements()
            .iter()
            .map(|p: &Permutation| Ok(d.rep.mul(&right.realise(p)?.0)))
            .collect()
    }

    /// Whether `y` lies in this `H`-class.
    pub fn contains(&self, y: &Element) -> Result<bool> {
        let d = self.dclass.data()?;
        if y.is_identity()
            || !d.rep.is_compatible(y)
            || y.lambda_value() != d.rep.lambda_value()
            || y.rho_value() != d.rep.rho_value()
        {
            return Ok(false);
        }
        let p = d.rep.mu(&d.weak_inverse.mul(y))?;
        Ok(d.h.contains(&p))
    }

    /// Whether the class is a group.
    pub fn is_group(&self) -> Result<bool> {
        let rep = self.rep()?;
        Ok(h_class_is_group(rep, &rep.lambda_value(), &rep.rho_value()))
    }
}
