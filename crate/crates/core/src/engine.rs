//! Whole-semigroup computations: `R`-class enumeration, size, membership,
//! factorisation, `D`-classes and their order, and closure under new generators.
//!
//! The enumeration keeps one representative per `R`-class. Every
//! representative `x` is rectified so that λ(x) is the representative point
//! of its λ-component; two such elements with equal ρ-values are `R`-related
//! in `S` exactly when `μ_x(x' y)` lies in the component's stabiliser group.
//! Because `R` is a left congruence, left-multiplying the generators' classes
//! by generators reaches every `R`-class; the resulting graph on
//! representatives has the `D`-classes as its strongly connected components.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::element::{rho_of_involution, Element};
use crate::error::{Error, Result};
use crate::greens::{DClass, DClassData, RClass};
use crate::orbit::{evaluate, tarjan, Left, Orbit, Right, Word};

/// How much structure the caller asserts about the semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// No assumption.
    #[default]
    Generic,
    /// The semigroup is regular: elements with equal ρ-values are `R`-related.
    Regular,
    /// The semigroup is inverse (partial permutations or bipartitions closed under the involution).
    Inverse,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "generic" => Ok(Mode::Generic),
            "regular" => Ok(Mode::Regular),
            "inverse" => Ok(Mode::Inverse),
            _ => Err(Error::Invalid(format!("unknown mode {s:?}; expected generic, regular or inverse"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Generic => "generic",
            Mode::Regular => "regular",
            Mode::Inverse => "inverse",
        })
    }
}

/// Which of Green's relations to count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Green {
    R,
    L,
    H,
    D,
}

/// An `R`-class representative.
#[derive(Debug, Clone)]
pub struct RRep {
    /// The representative; its λ-value is the representative point of its λ-component.
    pub element: Element,
    /// A word over the generators evaluating to `element`.
    pub word: Word,
    /// A weak inverse of `element`.
    pub weak_inverse: Element,
    /// The λ-component of `element`.
    pub lambda_scc: usize,
    /// The index of ρ(`element`) in the ρ-orbit.
    pub rho_index: usize,
    /// The λ-orbit index of the element before rectification.
    pub k: usize,
    /// `(i, g)`: the class was discovered as generator `g` times representative `i`.
    pub parent: Option<(usize, usize)>,
}

/// Where a membership test stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    /// The element has the wrong kind, degree or context.
    Incompatible,
    /// λ(y) is not in the λ-orbit.
    LambdaScreen,
    /// ρ(y) is not in the ρ-orbit.
    RhoScreen,
    /// No representative with matching values has `y` in its class.
    Stabiliser,
    /// `y` lies in the `R`-class of this representative.
    Member(usize),
}

/// The `D`-class order: `reachable[i][j]` means `D_j ≤ D_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DOrder {
    /// Reflexive-transitive relation: `reachable[i][j]` iff `D_j ≤ D_i`.
    pub reachable: Vec<Vec<bool>>,
    /// Covering pairs `(i, j)`: `D_j < D_i` with nothing strictly between.
    pub hasse: Vec<(usize, usize)>,
}

/// A finite semigroup given by generators, with its `R`-class decomposition.
#[derive(Debug, Clone)]
pub struct Semigroup {
    generators: Vec<Element>,
    mode: Mode,
    lambda: Orbit<Right>,
    rho: Orbit<Left>,
    reps: Vec<RRep>,
    buckets: HashMap<(usize, usize), Vec<usize>>,
    rho_owner: HashMap<usize, usize>,
    graph: Vec<Vec<usize>>,
    dclasses: Vec<Vec<usize>>,
    dclass_of: Vec<usize>,
    ddata: Vec<OnceLock<DClassData>>,
}

const UNSET: usize = usize::MAX;

fn check_generators(like: &Element, generators: &[Element]) -> Result<()> {
    for x in generators {
        if x.is_identity() {
            return Err(Error::Invalid("the formal identity cannot be a generator".into()));
        }
        if !like.is_compatible(x) {
            return Err(Error::IncompatibleElements(format!("{} and {}", like.describe(), x.describe())));
        }
    }
    Ok(())
}

impl Semigroup {
    /// Enumerates the semigroup generated by `generators` with no structural assumptions.
    pub fn new(generators: Vec<Element>) -> Result<Semigroup> {
        Semigroup::with_mode(generators, Mode::Generic)
    }

    /// Enumerates the semigroup generated by `generators` under the asserted `mode`.
    ///
    /// Regular and inverse modes keep one representative per ρ-value; every
    /// discovered element is still checked against that representative, and a
    /// failed check is reported as [`Error::ModeViolation`].
    pub fn with_mode(generators: Vec<Element>, mode: Mode) -> Result<Semigroup> {
        let Some(first) = generators.first() else {
            return Err(Error::Invalid("at least one generator is required".into()));
        };
        check_generators(first, &generators)?;
        if mode == Mode::Inverse && first.involution().is_none() {
            return Err(Error::ModeViolation(format!("inverse mode needs elements with an involution, not {}", first.describe())));
        }
        let lambda = Orbit::new(&generators);
        let rho = Orbit::new(&generators);
        let mut sg = Semigroup::empty(generators, mode, lambda, rho);
        sg.seed(0)?;
        sg.close()?;
        sg.finish()?;
        Ok(sg)
    }

    fn empty(generators: Vec<Element>, mode: Mode, lambda: Orbit<Right>, rho: Orbit<Left>) -> Semigroup {
        Semigroup {
            generators,
            mode,
            lambda,
            rho,
            reps: Vec::new(),
            buckets: HashMap::new(),
            rho_owner: HashMap::new(),
            graph: Vec::new(),
            dclasses: Vec::new(),
            dclass_of: Vec::new(),
            ddata: Vec::new(),
        }
    }

    fn seed(&mut self, from: usize) -> Result<()> {
        for j in from..self.generators.len() {
            let x = self.generators[j].clone();
            let ri = self.rho.position(&x.rho_value()).expect("generator values seed the orbit");
            self.candidate(x, vec![j], ri, None)?;
        }
        Ok(())
    }

    /// Whether rectified `y` is `R`-related to representative `l` (both share λ and ρ).
    fn same_rclass(&self, l: usize, y: &Element) -> Result<bool> {
        let rep = &self.reps[l];
        let p = rep.element.mu(&rep.weak_inverse.mul(y))?;
        Ok(self.lambda.scc_data(rep.lambda_scc)?.group.contains(&p))
    }

    /// Files `y` (with word `word` and ρ-index `ri`) under an existing or a new representative.
    fn candidate(&mut self, y: Element, word: Word, ri: usize, parent: Option<(usize, usize)>) -> Result<usize> {
        let li = self
            .lambda
            .position(&y.lambda_value())
            .ok_or_else(|| Error::RepresentativeMismatch(format!("{y} has a λ-value outside the orbit")))?;
        let c = self.lambda.scc_of(li);
        let data = self.lambda.scc_data(c)?;
        let pos = self.lambda.scc_position(li);
        let y = y.mul(&data.ubar[pos]);
        let mut word = word;
        word.extend_from_slice(&data.ubar_words[pos]);
        match self.mode {
            Mode::Generic => {
                if let Some(bucket) = self.buckets.get(&(c, ri)) {
                    for &l in bucket {
                        if self.same_rclass(l, &y)? {
                            return Ok(l);
                        }
                    }
                }
            }
            Mode::Regular | Mode::Inverse => {
                if let Some(&l) = self.rho_owner.get(&ri) {
                    if self.reps[l].lambda_scc != c || !self.same_rclass(l, &y)? {
                        return Err(Error::ModeViolation(format!(
                            "{} and {y} have equal ρ-values but are not R-related, so the semigroup is not regular",
                            self.reps[l].element
                        )));
                    }
                    return Ok(l);
                }
            }
        }
        let index = self.reps.len();
        let weak_inverse = y.weak_inverse();
        self.reps.push(RRep { element: y, word, weak_inverse, lambda_scc: c, rho_index: ri, k: li, parent });
        self.buckets.entry((c, ri)).or_default().push(index);
        self.rho_owner.entry(ri).or_insert(index);
        self.graph.push(vec![UNSET; self.generators.len()]);
        Ok(index)
    }

    /// Left-multiplies representatives by generators until every edge of the graph is known.
    fn close(&mut self) -> Result<()> {
        let mut i = 0;
        while i < self.reps.len() {
            for j in 0..self.generators.len() {
                if self.graph[i][j] != UNSET {
                    continue;
                }
                let y = self.generators[j].mul(&self.reps[i].element);
                let mut word = vec![j];
                word.extend_from_slice(&self.reps[i].word);
                let ri = self.rho.graph()[self.reps[i].rho_index][j];
                let k = self.candidate(y, word, ri, Some((i, j)))?;
                self.graph[i][j] = k;
            }
            i += 1;
        }
        Ok(())
    }

    fn finish(&mut self) -> Result<()> {
        let mut comps: Vec<Vec<usize>> = tarjan(&self.graph)
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        comps.sort_unstable_by_key(|c| c[0]);
        self.dclass_of = vec![0; self.reps.len()];
        for (d, comp) in comps.iter().enumerate() {
            for &i in comp {
                self.dclass_of[i] = d;
            }
        }
        self.ddata = (0..comps.len()).map(|_| OnceLock::new()).collect();
        self.dclasses = comps;
        if self.mode == Mode::Inverse {
            self.check_inverse()?;
        }
        Ok(())
    }

    /// Verifies the inverse-mode assumption after the fact.
    fn check_inverse(&self) -> Result<()> {
        if self.lambda.len() != self.rho.len() {
            return Err(Error::ModeViolation(format!(
                "{} λ-values but {} ρ-values, so the semigroup is not inverse",
                self.lambda.len(),
                self.rho.len()
            )));
        }
        for l in self.lambda.points() {
            let r = rho_of_involution(l).expect("inverse mode only admits kinds with an involution");
            if self.rho.position(&r).is_none() {
                return Err(Error::ModeViolation(format!("{l} is a λ-value but not a ρ-value")));
            }
        }
        for x in &self.generators {
            let inv = x.involution().expect("inverse mode only admits kinds with an involution");
            if !self.contains(&inv) {
                return Err(Error::ModeViolation(format!("the inverse of generator {x} is not in the semigroup")));
            }
        }
        Ok(())
    }

    /// The semigroup generated by the current generators together with `extra`.
    ///
    /// Both orbits are extended first (old points only meet the new generators),
    /// then the old representatives are refiled in order, the new generators
    /// are seeded, known edges are carried over, and only the missing edges are
    /// computed.
    pub fn closure(&self, extra: &[Element]) -> Result<Semigroup> {
        if extra.is_empty() {
            return Ok(self.clone());
        }
        check_generators(&self.generators[0], extra)?;
        let old = self.generators.len();
        let mut generators = self.generators.clone();
        generators.extend_from_slice(extra);
        let mut lambda = self.lambda.clone();
        lambda.extend(extra);
        let mut rho = self.rho.clone();
        rho.extend(extra);
        let mut sg = Semigroup::empty(generators, self.mode, lambda, rho);
        let mut iota = Vec::with_capacity(self.reps.len());
        for rep in &self.reps {
            let parent = rep.parent.map(|(i, g)| (iota[i], g));
            let k = sg.candidate(rep.element.clone(), rep.word.clone(), rep.rho_index, parent)?;
            iota.push(k);
        }
        sg.seed(old)?;
        for (i, row) in self.graph.iter().enumerate() {
            for (g, &k) in row.iter().enumerate() {
                let slot = &mut sg.graph[iota[i]][g];
                if *slot == UNSET {
                    *slot = iota[k];
                }
            }
        }
        sg.close()?;
        sg.finish()?;
        Ok(sg)
    }

    /// The generators, labelled `x1, x2, ..` in this order.
    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    /// The asserted mode.
    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// The orbit of λ-values under right multiplication.
    pub fn lambda_orbit(&self) -> &Orbit<Right> {
        &self.lambda
    }

    /// The orbit of ρ-values under left multiplication.
    pub fn rho_orbit(&self) -> &Orbit<Left> {
        &self.rho
    }

    /// The `R`-class representatives in discovery order.
    pub fn rreps(&self) -> &[RRep] {
        &self.reps
    }

    /// The representative graph: `rrep_graph()[i][g]` is the representative of the
    /// `R`-class of generator `g` times representative `i`.
    pub fn rrep_graph(&self) -> &[Vec<usize>] {
        &self.graph
    }

    /// The product of the generators named by `word` (the formal identity for the empty word).
    pub fn evaluate(&self, word: &[usize]) -> Element {
        evaluate(&self.generators, word)
    }

    /// Number of elements: the sum over representatives of stabiliser order times component size.
    pub fn size(&self) -> u64 {
        self.reps.iter().map(|r| self.rclass_size(r.lambda_scc)).sum()
    }

    pub(crate) fn rclass_size(&self, c: usize) -> u64 {
        let data = self.lambda.scc_data(c).expect("component data of a representative");
        data.group.order() * self.lambda.sccs()[c].len() as u64
    }

    /// The size as a sum over λ-components: `(component size, stabiliser order, representatives)`.
    pub fn size_breakdown(&self) -> Vec<(usize, u64, usize)> {
        let mut count = vec![0usize; self.lambda.sccs().len()];
        for r in &self.reps {
            count[r.lambda_scc] += 1;
        }
        (0..count.len())
            .filter(|&c| count[c] > 0)
            .map(|c| {
                let order = self.lambda.scc_data(c).expect("component data").group.order();
                (self.lambda.sccs()[c].len(), order, count[c])
            })
            .collect()
    }

    /// Locates `y`: which screen rejected it, or the representative of its `R`-class.
    pub fn locate(&self, y: &Element) -> Result<Location> {
        if y.is_identity() || !self.generators[0].is_compatible(y) {
            return Ok(Location::Incompatible);
        }
        let Some(li) = self.lambda.position(&y.lambda_value()) else {
            return Ok(Location::LambdaScreen);
        };
        let Some(ri) = self.rho.position(&y.rho_value()) else {
            return Ok(Location::RhoScreen);
        };
        let c = self.lambda.scc_of(li);
        let data = self.lambda.scc_data(c)?;
        let y = y.mul(&data.ubar[self.lambda.scc_position(li)]);
        if let Some(bucket) = self.buckets.get(&(c, ri)) {
            for &l in bucket {
                if self.same_rclass(l, &y)? {
                    return Ok(Location::Member(l));
                }
            }
        }
        Ok(Location::Stabiliser)
    }

    /// Whether `y` is an element of the semigroup.
    pub fn contains(&self, y: &Element) -> bool {
        matches!(self.locate(y), Ok(Location::Member(_)))
    }

    /// The index of the representative of `y`'s `R`-class, if `y` is in the semigroup.
    pub fn rclass_index(&self, y: &Element) -> Option<usize> {
        match self.locate(y) {
            Ok(Location::Member(l)) => Some(l),
            _ => None,
        }
    }

    /// A word over the generators evaluating to `y`.
    ///
    /// The word is the representative's word, then a word for the stabiliser
    /// element carrying the representative to `y` rectified, then the component
    /// word moving λ back to λ(y). It is not minimal.
    pub fn factorize(&self, y: &Element) -> Result<Word> {
        let Location::Member(l) = self.locate(y)? else {
            return Err(Error::NotMember(y.to_string()));
        };
        let li = self.lambda.position(&y.lambda_value()).expect("member λ-value");
        let pos = self.lambda.scc_position(li);
        let rep = &self.reps[l];
        let data = self.lambda.scc_data(rep.lambda_scc)?;
        let rectified = y.mul(&data.ubar[pos]);
        let p = rep.element.mu(&rep.weak_inverse.mul(&rectified))?;
        let (_, stab_word) = data.realise(&p)?;
        let mut word = rep.word.clone();
        word.extend(stab_word);
        word.extend_from_slice(&data.u_words[pos]);
        Ok(word)
    }

    /// The `R`-class with representative index `i`.
    pub fn rclass(&self, i: usize) -> RClass<'_> {
        RClass::new(self, i)
    }

    /// The `R`-class of `y`, if `y` is in the semigroup.
    pub fn rclass_of(&self, y: &Element) -> Option<RClass<'_>> {
        self.rclass_index(y).map(|i| self.rclass(i))
    }

    /// The `D`-classes as lists of representative indices (ordered by least index).
    pub fn dclass_reps(&self) -> &[Vec<usize>] {
        &self.dclasses
    }

    /// The `D`-class containing representative `i`.
    pub fn dclass_index_of_rep(&self, i: usize) -> usize {
        self.dclass_of[i]
    }

    /// The `D`-class with index `d`.
    pub fn dclass(&self, d: usize) -> DClass<'_> {
        DClass::new(self, d)
    }

    /// The `D`-class of `y`, if `y` is in the semigroup.
    pub fn dclass_of(&self, y: &Element) -> Option<DClass<'_>> {
        self.rclass_index(y).map(|i| self.dclass(self.dclass_of[i]))
    }

    pub(crate) fn dclass_data(&self, d: usize) -> Result<&DClassData> {
        if let Some(data) = self.ddata[d].get() {
            return Ok(data);
        }
        let data = DClassData::compute(self, self.dclasses[d][0])?;
        Ok(self.ddata[d].get_or_init(|| data))
    }

    /// Number of classes of the given relation.
    pub fn nr_classes(&self, which: Green) -> Result<u64> {
        Ok(match which {
            Green::R => self.reps.len() as u64,
            Green::D => self.dclasses.len() as u64,
            Green::L => {
                let mut total = 0;
                for d in 0..self.dclasses.len() {
                    total += self.dclass(d).nr_lclasses()?;
                }
                total
            }
            Green::H => {
                let mut total = 0;
                for d in 0..self.dclasses.len() {
                    let dc = self.dclass(d);
                    total += dc.nr_lclasses()? * dc.nr_rclasses()?;
                }
                total
            }
        })
    }

    /// All idempotents, class by class.
    pub fn idempotents(&self) -> Result<Vec<Element>> {
        let mut out = Vec::new();
        for i in 0..self.reps.len() {
            out.extend(self.rclass(i).idempotents()?);
        }
        Ok(out)
    }

    /// Number of idempotents.
    pub fn nr_idempotents(&self) -> Result<usize> {
        let mut total = 0;
        for i in 0..self.reps.len() {
            total += self.rclass(i).nr_idempotents()?;
        }
        Ok(total)
    }

    /// Whether every element is regular.
    ///
    /// Two `R`-classes sharing a ρ-value settle the question at once: in a
    /// regular subsemigroup they would coincide.
    pub fn is_regular(&self) -> Result<bool> {
        if self.rho_owner.len() < self.reps.len() {
            return Ok(false);
        }
        for i in 0..self.reps.len() {
            if !self.rclass(i).is_regular()? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The partial order of `D`-classes.
    ///
    /// Left multiplication is read off the representative graph. Right
    /// multiplication by a generator maps an `L`-class into a single `L`-class,
    /// so it suffices to multiply one representative per `L`-class. The
    /// reflexive-transitive closure of these edges is the order.
    pub fn dorder(&self) -> Result<DOrder> {
        let n = self.dclasses.len();
        let mut edges: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, row) in self.graph.iter().enumerate() {
            for &k in row {
                edges[self.dclass_of[i]].push(self.dclass_of[k]);
            }
        }
        for (d, out) in edges.iter_mut().enumerate() {
            for l in self.dclass(d).lclass_reps()? {
                for x in &self.generators {
                    let y = l.mul(x);
                    let k = self
                        .rclass_index(&y)
                        .ok_or_else(|| Error::RepresentativeMismatch(format!("{y} was not found")))?;
                    out.push(self.dclass_of[k]);
                }
            }
            out.sort_unstable();
            out.dedup();
        }
        let mut reachable = vec![vec![false; n]; n];
        for (d, row) in reachable.iter_mut().enumerate() {
            let mut stack = vec![d];
            row[d] = true;
            while let Some(a) = stack.pop() {
                for &b in &edges[a] {
                    if !row[b] {
                        row[b] = true;
                        stack.push(b);
                    }
                }
            }
        }
        let mut hasse = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !reachable[i][j] {
                    continue;
                }
                let covered = (0..n).any(|k| k != i && k != j && reachable[i][k] && reachable[k][j]);
                if !covered {
                    hasse.push((i, j));
                }
            }
        }
        Ok(DOrder { reachable, hasse })
    }
}

impl DOrder {
    /// The Hasse diagram in DOT syntax, with the given node labels; edges point downwards.
    pub fn to_dot(&self, labels: &[String]) -> String {
        let mut out = String::from("digraph dorder {\n  rankdir=TB;\n");
        for (i, label) in labels.iter().enumerate() {
            let label = label.replace('\\', "\\\\").replace('"', "\\\"");
            out.push_str(&format!("  D{} [label=\"{}\"];\n", i + 1, label));
        }
        for &(i, j) in &self.hasse {
            out.push_str(&format!("  D{} -> D{};\n", i + 1, j + 1));
        }
        out.push_str("}\n");
        out
    }
}
