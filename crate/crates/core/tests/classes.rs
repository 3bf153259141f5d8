//! Individual Green's classes against the exhaustive listing, on random semigroups of every kind.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semigroups::oracle::{ExhaustiveSemigroup, Partition};
use semigroups::random::{self, Kind};
use semigroups::{Element, Green, Semigroup};

/// Random instances small enough to check element by element.
fn instances(seed: u64, rounds: usize) -> Vec<(Semigroup, ExhaustiveSemigroup)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut round = 0;
    while out.len() < rounds {
        let kind = Kind::ALL[round % 4];
        round += 1;
        let count = rng.gen_range(2..=3);
        let gens = random::generators(&mut rng, kind, count);
        let Ok(ex) = ExhaustiveSemigroup::new(&gens, 2000) else { continue };
        out.push((Semigroup::new(gens).unwrap(), ex));
    }
    out
}

fn class_set(ex: &ExhaustiveSemigroup, p: &Partition, x: &Element) -> HashSet<Element> {
    let k = p.class_of[ex.position(x).expect("element of the semigroup")];
    p.classes[k].iter().map(|&i| ex.elements()[i].clone()).collect()
}

#[test]
fn r_classes_match_element_by_element() {
    for (sg, ex) in instances(11, 120) {
        let r = ex.green(Green::R);
        let idempotents: HashSet<Element> = ex.idempotents().into_iter().map(|i| ex.elements()[i].clone()).collect();
        for i in 0..sg.rreps().len() {
            let class = sg.rclass(i);
            let want = class_set(&ex, &r, class.rep());
            let got: Vec<Element> = class.elements().unwrap();
            assert_eq!(got.len() as u64, class.size());
            assert_eq!(got.iter().cloned().collect::<HashSet<_>>(), want, "R-class of {}", class.rep());
            assert_eq!(sg.evaluate(class.rep_word()), *class.rep());
            let e: HashSet<Element> = class.idempotents().unwrap().into_iter().collect();
            let want_e: HashSet<Element> = want.intersection(&idempotents).cloned().collect();
            assert_eq!(e, want_e, "idempotents of the R-class of {}", class.rep());
            assert_eq!(class.is_regular().unwrap(), !want_e.is_empty());
            for y in ex.elements() {
                assert_eq!(class.contains(y).unwrap(), want.contains(y), "{y} in R({})", class.rep());
            }
        }
    }
}

#[test]
fn d_classes_match_element_by_element() {
    for (sg, ex) in instances(12, 120) {
        let (r, l, h, d) = (ex.green(Green::R), ex.green(Green::L), ex.green(Green::H), ex.green(Green::D));
        for k in 0..sg.dclass_reps().len() {
            let class = sg.dclass(k);
            let rep = class.rep().unwrap().clone();
            let want = class_set(&ex, &d, &rep);
            assert_eq!(class.size().unwrap(), want.len() as u64, "size of D({rep})");
            for y in ex.elements() {
                assert_eq!(class.contains(y).unwrap(), want.contains(y), "{y} in D({rep})");
            }

            let with_words = class.rclass_reps_with_words().unwrap();
            let rclasses: HashSet<usize> =
                with_words.iter().map(|(e, _)| r.class_of[ex.position(e).unwrap()]).collect();
            assert_eq!(rclasses.len(), with_words.len(), "R-representatives of D({rep}) repeat a class");
            assert_eq!(rclasses.len() as u64, class.nr_rclasses().unwrap());
            for (e, w) in &with_words {
                assert!(want.contains(e));
                assert_eq!(sg.evaluate(w), *e);
            }

            let lreps = class.lclass_reps().unwrap();
            let lclasses: HashSet<usize> = lreps.iter().map(|e| l.class_of[ex.position(e).unwrap()]).collect();
            assert_eq!(lclasses.len(), lreps.len(), "L-representatives of D({rep}) repeat a class");
            assert_eq!(lclasses.len() as u64, class.nr_lclasses().unwrap());
            assert!(lreps.iter().all(|e| want.contains(e)));

            let lclass = class.lclass().unwrap();
            let want_l = class_set(&ex, &l, &rep);
            let got_l: HashSet<Element> = lclass.elements().unwrap().into_iter().collect();
            assert_eq!(got_l, want_l, "L-class of {rep}");
            assert_eq!(lclass.size().unwrap(), want_l.len() as u64);
            for y in ex.elements() {
                assert_eq!(lclass.contains(y).unwrap(), want_l.contains(y), "{y} in L({rep})");
            }
            assert_eq!(lclass.is_regular().unwrap(), class.is_regular().unwrap());

            let hclass = class.hclass().unwrap();
            let want_h = class_set(&ex, &h, &rep);
            let got_h: HashSet<Element> = hclass.elements().unwrap().into_iter().collect();
            assert_eq!(got_h, want_h, "H-class of {rep}");
            assert_eq!(class.hclass_size().unwrap(), want_h.len() as u64);
            for y in ex.elements() {
                assert_eq!(hclass.contains(y).unwrap(), want_h.contains(y), "{y} in H({rep})");
            }
            let has_idempotent = want_h.iter().any(|e| e.mul(e) == *e);
            assert_eq!(hclass.is_group().unwrap(), has_idempotent, "H({rep}) is a group");
        }
    }
}

#[test]
fn membership_and_factorization_of_every_element() {
    for (sg, ex) in instances(13, 200) {
        for y in ex.elements() {
            assert!(sg.contains(y), "{y}");
            let w = sg.factorize(y).unwrap();
            assert_eq!(sg.evaluate(&w), *y);
            let rc = sg.rclass_of(y).unwrap();
            assert!(rc.contains(y).unwrap());
            assert!(sg.dclass_of(y).unwrap().contains(y).unwrap());
        }
    }
}

/// A random element of the same kind and degree (or Rees matrix context) as `like`.
fn random_like(rng: &mut ChaCha8Rng, like: &Element) -> Element {
    match like {
        Element::Transformation(x) => Element::Transformation(random::transformation(rng, x.degree())),
        Element::PartialPerm(x) => Element::PartialPerm(random::partial_perm(rng, x.degree(), 0.7)),
        Element::Bipartition(x) => Element::Bipartition(random::bipartition(rng, x.degree())),
        Element::Rzms(x) => Element::Rzms(random::rzms_element(rng, x.context())),
        Element::Identity => Element::Identity,
    }
}

#[test]
fn membership_of_random_ambient_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let mut rejected = 0;
    for (sg, ex) in instances(15, 200) {
        for _ in 0..20 {
            let y = random_like(&mut rng, &sg.generators()[0]);
            assert_eq!(sg.contains(&y), ex.contains(&y), "{y}");
            if !ex.contains(&y) {
                rejected += 1;
                assert!(sg.factorize(&y).is_err());
                assert!(sg.rclass_of(&y).is_none());
                assert!(sg.dclass_of(&y).is_none());
            }
        }
    }
    assert!(rejected > 100, "too few non-members exercised: {rejected}");
}
