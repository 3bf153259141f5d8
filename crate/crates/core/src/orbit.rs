//! Orbits of a semigroup acting on λ-values (on the right) or ρ-values (on the left).
//!
//! An [`Orbit`] is the breadth-first closure of the generators' own values
//! under the generators' action. It records a Schreier forest (every point
//! knows its parent and the generator that reached it), the full orbit graph,
//! and the strongly connected components of that graph. For every component
//! it lazily computes [`SccData`]: a representative element of the semigroup,
//! words moving the representative's value around the component and back, and
//! the stabiliser permutation group acting on the representative's class.
//!
//! Both sides share one implementation through the [`Side`] trait. Words are
//! always stored in semigroup product order, so evaluating a word is a plain
//! left-to-right product on either side.

use std::collections::{HashMap, VecDeque};
use std::fmt::{self, Debug, Display, Write as _};
use std::hash::Hash;
use std::marker::PhantomData;
use std::sync::OnceLock;

use crate::element::{act_lambda, act_rho, Element, LambdaValue, RhoValue};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::perm_group::{GroupWord, PermGroup};

/// A word over the semigroup generators (zero-based labels), in product order.
pub type Word = Vec<usize>;

/// The two actions: right multiplication on λ-values, left multiplication on ρ-values.
pub trait Side: Send + Sync + 'static {
    /// The values the semigroup acts on.
    type Point: Clone + Eq + Hash + Debug + Display + Send + Sync;
    /// Short name used in diagnostics and DOT output.
    const NAME: &'static str;
    /// The value of an element.
    fn point(x: &Element) -> Self::Point;
    /// The action of `s` on `p`.
    fn act(p: &Self::Point, s: &Element) -> Self::Point;
    /// The element acting as "first `a`, then `b`".
    fn then(a: &Element, b: &Element) -> Element;
    /// The word of [`then`](Self::then) applied to words.
    fn then_word(a: &[usize], b: &[usize]) -> Word;
    /// An element undoing `s` on the class of `x`.
    fn ubar(x: &Element, s: &Element) -> Result<Element>;
    /// The permutation a stabilising element induces on the class of `x`.
    fn stab_perm(x: &Element, t: &Element) -> Result<Permutation>;
}

/// Right multiplication acting on λ-values: `λ(y) · s = λ(y s)`.
#[derive(Debug, Clone, Copy)]
pub struct Right;

/// Left multiplication acting on ρ-values: `s · ρ(y) = ρ(s y)`.
#[derive(Debug, Clone, Copy)]
pub struct Left;

impl Side for Right {
    type Point = LambdaValue;
    const NAME: &'static str = "lambda";

    fn point(x: &Element) -> LambdaValue {
        x.lambda_value()
    }
    fn act(p: &LambdaValue, s: &Element) -> LambdaValue {
        act_lambda(p, s)
    }
    fn then(a: &Element, b: &Element) -> Element {
        a.mul(b)
    }
    fn then_word(a: &[usize], b: &[usize]) -> Word {
        a.iter().chain(b).copied().collect()
    }
    fn ubar(x: &Element, s: &Element) -> Result<Element> {
        x.ubar(s)
    }
    fn stab_perm(x: &Element, t: &Element) -> Result<Permutation> {
        x.mu(t)
    }
}

impl Side for Left {
    type Point = RhoValue;
    const NAME: &'static str = "rho";

    fn point(x: &Element) -> RhoValue {
        x.rho_value()
    }
    fn act(p: &RhoValue, s: &Element) -> RhoValue {
        act_rho(s, p)
    }
    fn then(a: &Element, b: &Element) -> Element {
        b.mul(a)
    }
    fn then_word(a: &[usize], b: &[usize]) -> Word {
        b.iter().chain(a).copied().collect()
    }
    fn ubar(x: &Element, s: &Element) -> Result<Element> {
        x.ubar_left(s)
    }
    fn stab_perm(x: &Element, t: &Element) -> Result<Permutation> {
        x.nu(t)
    }
}

/// Evaluates a word over `generators` as a product (the formal identity for the empty word).
pub fn evaluate(generators: &[Element], word: &[usize]) -> Element {
    word.iter().fold(Element::Identity, |acc, &g| acc.mul(&generators[g]))
}

/// Stabiliser and transport data of one strongly connected component.
#[derive(Debug, Clone)]
pub struct SccData {
    /// An element of the semigroup whose value is the component's representative point.
    pub rep: Element,
    /// A word evaluating to `rep`.
    pub rep_word: Word,
    /// Per member (in component order): an element of `S¹` moving the representative point to it.
    pub u: Vec<Element>,
    /// Words of `u`.
    pub u_words: Vec<Word>,
    /// Per member: an element of the ambient semigroup moving the member back to the representative
    /// point and inverting `u` on the representative's class.
    pub ubar: Vec<Element>,
    /// Per member: a word over the generators acting like `ubar` on the member's class.
    pub ubar_words: Vec<Word>,
    /// The stabiliser group on the faithful points of the representative's class.
    pub group: PermGroup,
    /// Elements of the semigroup inducing the group's generators.
    pub group_elements: Vec<Element>,
    /// Words of `group_elements`.
    pub group_words: Vec<Word>,
}

impl SccData {
    /// Expands a group word into a word over the semigroup generators.
    pub fn expand(&self, word: &GroupWord) -> Word {
        expand_in(&self.group, &self.group_words, word)
    }

    /// An element of `S¹` inducing `p` on the representative's class, with its word.
    pub fn realise(&self, p: &Permutation) -> Result<(Element, Word)> {
        realise_in(&self.group, &self.group_elements, &self.group_words, p)
    }
}

/// Expands a word in the generators of `group` into a word over the semigroup generators,
/// given the semigroup word of each group generator.
///
/// An inverted letter becomes the generator's word repeated `order - 1` times,
/// which acts as the inverse on the class the group permutes.
pub fn expand_in(group: &PermGroup, words: &[Word], word: &GroupWord) -> Word {
    let mut out = Vec::new();
    for letter in word {
        let times = if letter.inverse { group.generators()[letter.generator].order() - 1 } else { 1 };
        for _ in 0..times {
            out.extend_from_slice(&words[letter.generator]);
        }
    }
    out
}

/// An element of `S¹` inducing `p`, where group generator `i` is induced by `elements[i]`
/// (with word `words[i]`).
///
/// Both μ and ν are homomorphisms for the semigroup product, so a group word is
/// realised by the plain product of its letters' elements on either side.
pub fn realise_in(group: &PermGroup, elements: &[Element], words: &[Word], p: &Permutation) -> Result<(Element, Word)> {
    let word = group.factorize(p)?;
    let mut element = Element::Identity;
    for letter in &word {
        let times = if letter.inverse { group.generators()[letter.generator].order() - 1 } else { 1 };
        for _ in 0..times {
            element = element.mul(&elements[letter.generator]);
        }
    }
    Ok((element, expand_in(group, words, &word)))
}

/// An orbit of the semigroup generated by `generators` on one side.
pub struct Orbit<S: Side> {
    generators: Vec<Element>,
    points: Vec<S::Point>,
    index: HashMap<S::Point, usize>,
    /// `parent[i] = Some((p, g))`: point `i` was first reached as `points[p]` acted on by generator `g`.
    parent: Vec<Option<(usize, usize)>>,
    /// The generator whose own value is the root of the tree containing each point.
    root: Vec<usize>,
    /// `graph[i][g]` = index of `points[i]` acted on by generator `g`.
    graph: Vec<Vec<usize>>,
    scc_of: Vec<usize>,
    sccs: Vec<Vec<usize>>,
    position: Vec<usize>,
    data: Vec<OnceLock<SccData>>,
    _side: PhantomData<S>,
}

impl<S: Side> Clone for Orbit<S> {
    fn clone(&self) -> Self {
        Orbit {
            generators: self.generators.clone(),
            points: self.points.clone(),
            index: self.index.clone(),
            parent: self.parent.clone(),
            root: self.root.clone(),
            graph: self.graph.clone(),
            scc_of: self.scc_of.clone(),
            sccs: self.sccs.clone(),
            position: self.position.clone(),
            data: self.data.clone(),
            _side: PhantomData,
        }
    }
}

impl<S: Side> Debug for Orbit<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Orbit")
            .field("side", &S::NAME)
            .field("points", &self.points.len())
            .field("sccs", &self.sccs.len())
            .finish()
    }
}

impl<S: Side> Orbit<S> {
    /// Enumerates the orbit of the generators' values under the generators.
    ///
    /// All seeds are enqueued before any point is acted on, so the first points
    /// are the distinct generator values in generator order.
    pub fn new(generators: &[Element]) -> Orbit<S> {
        let mut orbit = Orbit {
            generators: Vec::new(),
            points: Vec::new(),
            index: HashMap::new(),
            parent: Vec::new(),
            root: Vec::new(),
            graph: Vec::new(),
            scc_of: Vec::new(),
            sccs: Vec::new(),
            position: Vec::new(),
            data: Vec::new(),
            _side: PhantomData,
        };
        orbit.extend(generators);
        orbit
    }

    /// Extends the orbit to the semigroup generated by the old and the new generators.
    ///
    /// Old points are acted on by the new generators only; points discovered
    /// here are acted on by every generator. Component data is recomputed.
    pub fn extend(&mut self, new_generators: &[Element]) {
        let first_new = self.generators.len();
        let old_points = self.points.len();
        self.generators.extend_from_slice(new_generators);
        let nr_gens = self.generators.len();
        for row in &mut self.graph {
            row.resize(nr_gens, usize::MAX);
        }
        for g in first_new..nr_gens {
            let p = S::point(&self.generators[g]);
            if !self.index.contains_key(&p) {
                self.push(p, None, g);
            }
        }
        for i in 0..old_points {
            for g in first_new..nr_gens {
                self.visit(i, g);
            }
        }
        let mut i = old_points;
        while i < self.points.len() {
            for g in 0..nr_gens {
                self.visit(i, g);
            }
            i += 1;
        }
        self.decompose();
    }

    fn push(&mut self, p: S::Point, parent: Option<(usize, usize)>, root: usize) -> usize {
        let k = self.points.len();
        self.index.insert(p.clone(), k);
        self.points.push(p);
        self.parent.push(parent);
        self.root.push(root);
        self.graph.push(vec![usize::MAX; self.generators.len()]);
        k
    }

    fn visit(&mut self, i: usize, g: usize) {
        let q = S::act(&self.points[i], &self.generators[g]);
        let k = match self.index.get(&q) {
            Some(&k) => k,
            None => {
                let root = self.root[i];
                self.push(q, Some((i, g)), root)
            }
        };
        self.graph[i][g] = k;
    }

    /// The generators, in label order.
    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    /// Number of points.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Whether the orbit is empty (only for an empty generating set).
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The points in discovery order.
    pub fn points(&self) -> &[S::Point] {
        &self.points
    }

    /// The index of a point, if it lies in the orbit.
    pub fn position(&self, p: &S::Point) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// The orbit graph: `graph()[i][g]` is the index of point `i` acted on by generator `g`.
    pub fn graph(&self) -> &[Vec<usize>] {
        &self.graph
    }

    /// The Schreier forest: parent point and generator of each point (`None` at roots).
    pub fn parent(&self, i: usize) -> Option<(usize, usize)> {
        self.parent[i]
    }

    /// The generator whose value roots the Schreier tree containing point `i`.
    pub fn root_generator(&self, i: usize) -> usize {
        self.root[i]
    }

    /// The generators along the Schreier tree from the root to point `i`, in the order they act.
    pub fn trace(&self, i: usize) -> Result<Vec<usize>> {
        if i >= self.points.len() {
            return Err(Error::InvalidIndex(i));
        }
        let mut out = Vec::new();
        let mut k = i;
        while let Some((p, g)) = self.parent[k] {
            out.push(g);
            k = p;
        }
        out.reverse();
        Ok(out)
    }

    /// An element of the semigroup with value `points[i]`, and its word.
    pub fn element_of(&self, i: usize) -> Result<(Element, Word)> {
        let trace = self.trace(i)?;
        let r = self.root[i];
        let mut element = self.generators[r].clone();
        let mut word = vec![r];
        for g in trace {
            element = S::then(&element, &self.generators[g]);
            word = S::then_word(&word, &[g]);
        }
        Ok((element, word))
    }

    /// The strongly connected components, each listed in increasing index order and ordered by
    /// their least index (the representative).
    pub fn sccs(&self) -> &[Vec<usize>] {
        &self.sccs
    }

    /// The component containing point `i`.
    pub fn scc_of(&self, i: usize) -> usize {
        self.scc_of[i]
    }

    /// Position of point `i` within its component's member list.
    pub fn scc_position(&self, i: usize) -> usize {
        self.position[i]
    }

    /// The representative (least index) of component `c`.
    pub fn scc_rep(&self, c: usize) -> usize {
        self.sccs[c][0]
    }

    fn decompose(&mut self) {
        let comps = tarjan(&self.graph);
        let n = self.points.len();
        let mut ordered: Vec<Vec<usize>> = comps
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        ordered.sort_unstable_by_key(|c| c[0]);
        self.scc_of = vec![0; n];
        self.position = vec![0; n];
        for (c, comp) in ordered.iter().enumerate() {
            for (k, &i) in comp.iter().enumerate() {
                self.scc_of[i] = c;
                self.position[i] = k;
            }
        }
        self.data = (0..ordered.len()).map(|_| OnceLock::new()).collect();
        self.sccs = ordered;
    }

    /// Breadth-first spanning tree of component `c` rooted at its representative, following
    /// edges forwards (`forward = true`) or backwards. Entry `k` (component order) is the
    /// `(neighbour, generator)` step: forwards, the parent that reaches member `k`; backwards,
    /// the next member on the way to the representative.
    fn spanning_tree(&self, c: usize, forward: bool) -> Vec<Option<(usize, usize)>> {
        let members = &self.sccs[c];
        let mut tree = vec![None; members.len()];
        let mut seen = vec![false; members.len()];
        seen[0] = true;
        let mut reverse: Vec<Vec<(usize, usize)>> = Vec::new();
        if !forward {
            reverse = vec![Vec::new(); members.len()];
            for &i in members {
                for (g, &k) in self.graph[i].iter().enumerate() {
                    if self.scc_of[k] == c {
                        reverse[self.position[k]].push((i, g));
                    }
                }
            }
        }
        let mut queue = VecDeque::from([members[0]]);
        while let Some(i) = queue.pop_front() {
            let steps: Vec<(usize, usize)> = if forward {
                self.graph[i].iter().enumerate().map(|(g, &k)| (k, g)).collect()
            } else {
                reverse[self.position[i]].clone()
            };
            for (k, g) in steps {
                if self.scc_of[k] != c || seen[self.position[k]] {
                    continue;
                }
                seen[self.position[k]] = true;
                tree[self.position[k]] = Some((i, g));
                queue.push_back(k);
            }
        }
        tree
    }

    /// Per member of component `c`: generators (in acting order) moving the representative to it.
    fn forward_words(&self, c: usize) -> Vec<Vec<usize>> {
        let tree = self.spanning_tree(c, true);
        let mut out: Vec<Option<Vec<usize>>> = vec![None; tree.len()];
        out[0] = Some(Vec::new());
        for k in 0..tree.len() {
            self.resolve_forward(&tree, &mut out, k);
        }
        out.into_iter().map(|w| w.expect("component is strongly connected")).collect()
    }

    fn resolve_forward(&self, tree: &[Option<(usize, usize)>], out: &mut [Option<Vec<usize>>], k: usize) {
        let mut chain = Vec::new();
        let mut j = k;
        while out[j].is_none() {
            let (p, g) = tree[j].expect("component is strongly connected");
            chain.push((j, g));
            j = self.position[p];
        }
        while let Some((m, g)) = chain.pop() {
            let mut w = out[j].clone().unwrap();
            w.push(g);
            out[m] = Some(w);
            j = m;
        }
    }

    /// Per member of component `c`: generators (in acting order) moving it back to the representative.
    fn reverse_words(&self, c: usize) -> Vec<Vec<usize>> {
        let tree = self.spanning_tree(c, false);
        (0..tree.len())
            .map(|k| {
                let mut w = Vec::new();
                let mut j = k;
                while let Some((next, g)) = tree[j] {
                    w.push(g);
                    j = self.position[next];
                }
                w
            })
            .collect()
    }

    /// Generators (in acting order) moving `points[from]` to `points[to]` without leaving their
    /// common component.
    pub fn trace_within_scc(&self, from: usize, to: usize) -> Result<Vec<usize>> {
        for &i in &[from, to] {
            if i >= self.points.len() {
                return Err(Error::InvalidIndex(i));
            }
        }
        let c = self.scc_of[from];
        if self.scc_of[to] != c {
            return Err(Error::NotConnected(from, to));
        }
        if from == to {
            return Ok(Vec::new());
        }
        let mut w = self.reverse_words(c).swap_remove(self.position[from]);
        w.extend(self.forward_words(c).swap_remove(self.position[to]));
        Ok(w)
    }

    /// Stabiliser and transport data for component `c`, computed on first use.
    pub fn scc_data(&self, c: usize) -> Result<&SccData> {
        if let Some(d) = self.data[c].get() {
            return Ok(d);
        }
        let d = self.compute_scc_data(c)?;
        Ok(self.data[c].get_or_init(|| d))
    }

    fn word_element(&self, acting: &[usize]) -> (Element, Word) {
        let mut element = Element::Identity;
        let mut word = Vec::new();
        for &g in acting {
            element = S::then(&element, &self.generators[g]);
            word = S::then_word(&word, &[g]);
        }
        (element, word)
    }

    fn compute_scc_data(&self, c: usize) -> Result<SccData> {
        let members = &self.sccs[c];
        let (rep, rep_word) = self.element_of(members[0])?;
        let forward = self.forward_words(c);
        let reverse = self.reverse_words(c);
        let mut u = Vec::with_capacity(members.len());
        let mut u_words = Vec::with_capacity(members.len());
        let mut ubar = Vec::with_capacity(members.len());
        let mut ubar_words = Vec::with_capacity(members.len());
        for k in 0..members.len() {
            let (uk, uw) = self.word_element(&forward[k]);
            let (vk, vw) = self.word_element(&reverse[k]);
            ubar.push(S::ubar(&rep, &uk)?);
            // u v fixes the representative point; its power u v (u v)^(o-1) acts trivially on the
            // representative's class, so v (u v)^(o-1) inverts u there and is a word over S.
            let loop_element = S::then(&uk, &vk);
            let loop_word = S::then_word(&uw, &vw);
            let order = S::stab_perm(&rep, &loop_element)?.order();
            let mut w = vw;
            for _ in 1..order {
                w = S::then_word(&w, &loop_word);
            }
            ubar_words.push(w);
            u.push(uk);
            u_words.push(uw);
        }
        let degree = S::stab_perm(&rep, &Element::Identity)?.degree();
        let mut perms: Vec<Permutation> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        let mut group_elements = Vec::new();
        let mut group_words = Vec::new();
        for (i, &p) in members.iter().enumerate() {
            for (g, &q) in self.graph[p].iter().enumerate() {
                if self.scc_of[q] != c {
                    continue;
                }
                let k = self.position[q];
                let element = S::then(&S::then(&u[i], &self.generators[g]), &ubar[k]);
                let perm = S::stab_perm(&rep, &element)?;
                if perm.is_identity() || !seen.insert(perm.clone()) {
                    continue;
                }
                let word = S::then_word(&S::then_word(&u_words[i], &[g]), &ubar_words[k]);
                // The word's value agrees with `element` on the representative's class, which is all
                // that the permutation sees; keep the word's value so the element lies in S.
                let actual = evaluate(&self.generators, &word);
                debug_assert_eq!(S::stab_perm(&rep, &actual)?, perm);
                perms.push(perm);
                group_elements.push(actual);
                group_words.push(word);
            }
        }
        let group = PermGroup::from_generators(degree, perms)?;
        Ok(SccData { rep, rep_word, u, u_words, ubar, ubar_words, group, group_elements, group_words })
    }

    /// The orbit graph in DOT syntax; nodes are labelled with their values.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph {} {{", S::NAME);
        for (i, p) in self.points.iter().enumerate() {
            let label = p.to_string().replace('\\', "\\\\").replace('"', "\\\"");
            let _ = writeln!(out, "  n{} [label=\"{}: {}\"];", i + 1, i + 1, label);
        }
        for (i, row) in self.graph.iter().enumerate() {
            for (g, &k) in row.iter().enumerate() {
                let _ = writeln!(out, "  n{} -> n{} [label=\"x{}\"];", i + 1, k + 1, g + 1);
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Strongly connected components of a graph given by adjacency rows (iterative Tarjan).
///
/// Entries equal to `usize::MAX` are ignored. Components come out in reverse topological order.
pub fn tarjan(graph: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = graph.len();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut next = 0;
    let mut call: Vec<(usize, usize)> = Vec::new();
    for start in 0..n {
        if index[start] != UNSEEN {
            continue;
        }
        call.push((start, 0));
        index[start] = next;
        low[start] = next;
        next += 1;
        stack.push(start);
        on_stack[start] = true;
        while let Some(&mut (v, ref mut e)) = call.last_mut() {
            if *e < graph[v].len() {
                let w = graph[v][*e];
                *e += 1;
                if w == usize::MAX {
                    continue;
                }
                if index[w] == UNSEEN {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comps.push(comp);
                }
            }
        }
    }
    comps
}
