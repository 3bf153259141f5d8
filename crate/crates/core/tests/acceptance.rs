//! Acceptance checks: one line per criterion, non-zero exit status if any fails.
//!
//! Values marked "worked example" are transcribed from the published worked
//! examples for the semigroups `T` (transformations of degree 5) and `S`
//! (partial permutations of degree 9); everything else is compared with the
//! brute-force oracle or with naive enumeration.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use semigroups::element::{LambdaValue, PartialPerm, Transformation};
use semigroups::oracle::{discrepancies, ExhaustiveSemigroup, DEFAULT_CAP};
use semigroups::orbit::tarjan;
use semigroups::perm::Permutation;
use semigroups::perm_group::PermGroup;
use semigroups::random::{self, Kind};
use semigroups::{Element, Green, Location, Mode, Semigroup};

type Outcome = Result<String, String>;

fn t(v: &[usize]) -> Element {
    Element::Transformation(Transformation::from_one_based(v).unwrap())
}

fn p(v: &[usize]) -> Element {
    Element::PartialPerm(PartialPerm::from_one_based(v).unwrap())
}

/// A partial permutation of degree 9 from `(source, target)` pairs.
fn pp(pairs: &[(usize, usize)]) -> Element {
    let mut images = [0; 9];
    for &(a, b) in pairs {
        images[a - 1] = b;
    }
    p(&images)
}

fn gens_t() -> Vec<Element> {
    vec![t(&[1, 3, 2, 4, 5]), t(&[2, 3, 1, 5, 4]), t(&[1, 3, 3, 2, 2])]
}

fn gens_s() -> Vec<Element> {
    vec![
        p(&[4, 6, 8, 1, 5, 2, 7, 3, 9]),
        p(&[5, 7, 9, 2, 4, 1, 6, 3, 8]),
        p(&[0, 5, 0, 0, 6, 2, 0, 0, 0]),
        p(&[3, 1, 2, 0, 0, 0, 0, 0, 0]),
    ]
}

/// Evaluates a one-based word such as `[1, 3, 4]` for `x1 x3 x4`.
fn word(gens: &[Element], w: &[usize]) -> Element {
    w[1..].iter().fold(gens[w[0] - 1].clone(), |acc, &g| acc.mul(&gens[g - 1]))
}

fn check(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn err(e: semigroups::Error) -> String {
    e.to_string()
}

fn criterion_1() -> Outcome {
    let sg = Semigroup::new(gens_t()).map_err(err)?;
    let parts: Vec<u64> = sg.size_breakdown().iter().map(|&(scc, g, reps)| reps as u64 * scc as u64 * g).collect();
    check(sg.size() == 75, format!("size {}", sg.size()))?;
    let mut sorted = parts.clone();
    sorted.sort_unstable();
    check(sorted == [3, 12, 18, 42], format!("breakdown {parts:?}"))?;
    Ok(format!("|T| = {} = {}", sg.size(), parts.iter().map(u64::to_string).collect::<Vec<_>>().join(" + ")))
}

/// The representatives of the worked example as words, with their kernels.
const T_REPS: [(&[usize], &str); 12] = [
    (&[1], "{1|2|3|4|5}"),
    (&[3], "{1|2,3|4,5}"),
    (&[2, 3], "{1,2|3|4,5}"),
    (&[3, 3], "{1|2,3,4,5}"),
    (&[1, 2, 3], "{1,3|2|4,5}"),
    (&[3, 2, 3], "{1,4,5|2,3}"),
    (&[2, 3, 3], "{1,2,4,5|3}"),
    (&[3, 1, 2, 3], "{1,2,3|4,5}"),
    (&[2, 3, 2, 3], "{1,2|3,4,5}"),
    (&[1, 2, 3, 3], "{1,3,4,5|2}"),
    (&[3, 3, 1, 2, 3], "{1,2,3,4,5}"),
    (&[1, 2, 3, 2, 3], "{1,3|2,4,5}"),
];

fn criterion_2() -> Outcome {
    let gens = gens_t();
    let sg = Semigroup::new(gens.clone()).map_err(err)?;
    let oracle = ExhaustiveSemigroup::new(&gens, DEFAULT_CAP).map_err(err)?;
    let r = oracle.green(Green::R);
    check(sg.rreps().len() == 12, format!("{} representatives", sg.rreps().len()))?;
    // The worked example's words really have the stated kernels.
    for (w, kernel) in T_REPS {
        let y = word(&gens, w);
        check(y.rho_value().to_string() == kernel, format!("{w:?} has kernel {}", y.rho_value()))?;
    }
    // Each engine representative has one of the kernels, and is R-related to the matching example word.
    let mut which = Vec::new();
    for rep in sg.rreps() {
        let kernel = rep.element.rho_value().to_string();
        let k = T_REPS.iter().position(|(_, kr)| *kr == kernel).ok_or(format!("unexpected kernel {kernel}"))?;
        let (a, b) = (oracle.position(&rep.element).unwrap(), oracle.position(&word(&gens, T_REPS[k].0)).unwrap());
        check(r.class_of[a] == r.class_of[b], format!("{} not R-related to y{}", rep.element, k + 1))?;
        which.push(k + 1);
    }
    let distinct: BTreeSet<usize> = which.iter().copied().collect();
    check(distinct.len() == 12, "kernels repeat")?;
    let sccs = tarjan(sg.rrep_graph());
    let got: BTreeSet<BTreeSet<usize>> = sccs.iter().map(|c| c.iter().map(|&i| which[i]).collect()).collect();
    let want: BTreeSet<BTreeSet<usize>> =
        [vec![1], vec![2, 3, 5], vec![4, 6, 7, 9, 10, 12], vec![8], vec![11]].into_iter().map(|c| c.into_iter().collect()).collect();
    check(got == want, format!("representative graph components {got:?}"))?;
    Ok(format!("12 representatives with the 12 listed kernels; {} components in the representative graph", sccs.len()))
}

fn image(set: &[u32]) -> LambdaValue {
    LambdaValue::Image(set.iter().map(|&k| k - 1).collect())
}

/// (component size, stabiliser order) for the component containing each listed λ-value.
fn components(sg: &Semigroup, values: &[LambdaValue]) -> Result<Vec<(BTreeSet<usize>, u64)>, String> {
    let orbit = sg.lambda_orbit();
    let mut out = Vec::new();
    for c in 0..orbit.sccs().len() {
        let members: BTreeSet<usize> = orbit.sccs()[c]
            .iter()
            .map(|&i| values.iter().position(|v| *v == orbit.points()[i]).map(|k| k + 1))
            .collect::<Option<_>>()
            .ok_or("orbit point outside the listed values")?;
        out.push((members, orbit.scc_data(c).map_err(err)?.group.order()));
    }
    out.sort();
    Ok(out)
}

fn criterion_3() -> Outcome {
    let sg = Semigroup::new(gens_t()).map_err(err)?;
    let values: Vec<LambdaValue> =
        [&[1, 2, 3, 4, 5][..], &[1, 2, 3], &[1, 3], &[2, 3], &[1, 2], &[3], &[1], &[2]].iter().map(|s| image(s)).collect();
    check(sg.lambda_orbit().len() == 8, format!("{} points", sg.lambda_orbit().len()))?;
    let got = components(&sg, &values)?;
    let by_rep: HashMap<usize, (usize, u64)> =
        got.iter().map(|(m, o)| (*m.iter().next().unwrap(), (m.len(), *o))).collect();
    // Components represented by {1..5}, {1,2,3}, {1,3} and {3} (listed values 1, 2, 3 and 6).
    let want = [(1, (1, 12)), (2, (1, 6)), (3, (3, 2)), (6, (3, 1))];
    for (rep, expected) in want {
        let found = got.iter().find(|(m, _)| m.contains(&rep)).map(|(m, o)| (m.len(), *o));
        check(found == Some(expected), format!("component of value {rep}: {found:?}"))?;
    }
    check(by_rep.len() == 4, format!("{} components", by_rep.len()))?;
    Ok("8 points; components of sizes 1, 1, 3, 3 with stabilisers of orders 12, 6, 2, 1".into())
}

fn criterion_4() -> Outcome {
    let values: Vec<LambdaValue> = [
        &[1, 2, 3, 4, 5, 6, 7, 8, 9][..],
        &[2, 5, 6],
        &[1, 2, 3],
        &[1, 4, 7],
        &[1],
        &[4, 6, 8],
        &[5, 7, 9],
        &[5],
        &[],
        &[3],
        &[4],
        &[2],
        &[6],
        &[8],
        &[9],
        &[7],
    ]
    .iter()
    .map(|s| image(s))
    .collect();
    let set = |v: &[usize]| v.iter().copied().collect::<BTreeSet<usize>>();
    let mut want = vec![
        (set(&[1]), 12),
        (set(&[2, 4]), 6),
        (set(&[3, 6, 7]), 6),
        (set(&[5, 8, 10, 11, 12, 13, 14, 15, 16]), 1),
        (set(&[9]), 1),
    ];
    want.sort();
    for mode in [Mode::Generic, Mode::Inverse] {
        let sg = Semigroup::with_mode(gens_s(), mode).map_err(err)?;
        check(sg.size() == 172, format!("{mode}: size {}", sg.size()))?;
        check(sg.rreps().len() == 16, format!("{mode}: {} R-classes", sg.rreps().len()))?;
        check(sg.lambda_orbit().len() == 16, format!("{mode}: {} λ-values", sg.lambda_orbit().len()))?;
        let got = components(&sg, &values)?;
        check(got == want, format!("{mode}: components {got:?}"))?;
    }
    Ok("|S| = 172 in generic and inverse mode; 16 R-classes; 16 λ-values in the 5 listed components with stabilisers 12, 6, 6, 1, 1".into())
}

fn criterion_5() -> Outcome {
    let gens = gens_s();
    let sg = Semigroup::with_mode(gens.clone(), Mode::Inverse).map_err(err)?;
    let oracle = ExhaustiveSemigroup::new(&gens, DEFAULT_CAP).map_err(err)?;
    let x = word(&gens, &[1, 3, 4]);
    check(x == pp(&[(2, 1)]), format!("x1x3x4 = {x}"))?;
    // The listed elements of the R-class, with the words they are given by.
    let listed: [(&[usize], Element); 9] = [
        (&[1, 3, 4], pp(&[(2, 1)])),
        (&[1, 3, 4, 4, 4], pp(&[(2, 2)])),
        (&[1, 3, 4, 4], pp(&[(2, 3)])),
        (&[1, 3, 4, 1], pp(&[(2, 4)])),
        (&[1, 3, 4, 2], pp(&[(2, 5)])),
        (&[1, 3, 4, 4, 4, 1], pp(&[(2, 6)])),
        (&[1, 3, 4, 4, 4, 2], pp(&[(2, 7)])),
        (&[1, 3, 4, 4, 1], pp(&[(2, 8)])),
        (&[1, 3, 4, 4, 2], pp(&[(2, 9)])),
    ];
    for (w, e) in &listed {
        check(word(&gens, w) == *e, format!("word {w:?} is not {e}"))?;
    }
    let rclass = sg.rclass_of(&x).ok_or("x1x3x4 has no R-class")?;
    let elements: HashSet<Element> = rclass.elements().map_err(err)?.into_iter().collect();
    let want: HashSet<Element> = listed.iter().map(|(_, e)| e.clone()).collect();
    check(rclass.size() == 9 && elements == want, format!("R-class {elements:?}"))?;

    let dclass = rclass.dclass();
    check(dclass.size().map_err(err)? == 81, "D-class size")?;
    let reps_listed: [(&[usize], Element); 9] = [
        (&[1, 3, 4], pp(&[(2, 1)])),
        (&[1, 1, 3, 4], pp(&[(6, 1)])),
        (&[2, 1, 3, 4], pp(&[(4, 1)])),
        (&[4, 1, 3, 4], pp(&[(3, 1)])),
        (&[2, 1, 1, 3, 4], pp(&[(7, 1)])),
        (&[3, 1, 1, 3, 4], pp(&[(5, 1)])),
        (&[1, 2, 1, 3, 4], pp(&[(1, 1)])),
        (&[1, 4, 1, 3, 4], pp(&[(8, 1)])),
        (&[2, 1, 4, 1, 3, 4], pp(&[(9, 1)])),
    ];
    for (w, e) in &reps_listed {
        check(word(&gens, w) == *e, format!("word {w:?} is not {e}"))?;
    }
    let r = oracle.green(Green::R);
    let class_of = |e: &Element| r.class_of[oracle.position(e).expect("element of S")];
    let got: BTreeSet<usize> = dclass.rclass_reps().map_err(err)?.iter().map(class_of).collect();
    let want: BTreeSet<usize> = reps_listed.iter().map(|(_, e)| class_of(e)).collect();
    check(dclass.nr_rclasses().map_err(err)? == 9 && got == want, format!("R-classes of the D-class {got:?}"))?;
    Ok("R-class of x1x3x4 is the 9 listed elements; its D-class has 81 elements in the 9 listed R-classes".into())
}

fn criterion_6() -> Outcome {
    let t_sg = Semigroup::new(gens_t()).map_err(err)?;
    let x = t(&[1, 2, 3, 3, 1]);
    check(x.rho_value().to_string() == "{1,5|2|3,4}", format!("kernel of x is {}", x.rho_value()))?;
    let located = t_sg.locate(&x).map_err(err)?;
    check(located == Location::RhoScreen, format!("x stopped at {located:?}"))?;
    let y = t(&[2, 3, 3, 2, 2]);
    check(t_sg.contains(&y), "y rejected")?;

    let gens = gens_s();
    let s_sg = Semigroup::new(gens.clone()).map_err(err)?;
    let z = pp(&[(1, 5), (2, 7), (3, 9)]);
    let in_x3 = s_sg.rclass_of(&gens[2]).ok_or("no R-class for x3")?.contains(&z).map_err(err)?;
    let in_x4 = s_sg.rclass_of(&gens[3]).ok_or("no R-class for x4")?.contains(&z).map_err(err)?;
    check(!in_x3 && in_x4, format!("in R(x3): {in_x3}, in R(x4): {in_x4}"))?;
    Ok("x rejected at the kernel screen; y accepted; [1 5][2 7][3 9] outside R(x3) and inside R(x4)".into())
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (name, gens) in [("T", gens_t()), ("S", gens_s())] {
        let sg = Semigroup::new(gens.clone()).map_err(err)?;
        for _ in 0..100 {
            let w = random::word(&mut rng, gens.len(), 25);
            let y = sg.evaluate(&w);
            let f = sg.factorize(&y).map_err(err)?;
            check(sg.evaluate(&f) == y, format!("{name}: factorization of {y} evaluates wrongly"))?;
        }
    }
    let sg = Semigroup::new(gens_t()).map_err(err)?;
    let y = t(&[2, 3, 3, 2, 2]);
    let f = sg.factorize(&y).map_err(err)?;
    check(sg.evaluate(&f) == y, "y")?;
    Ok(format!("200 random elements round-trip; y = {}", semigroups::text::format_word(&f)))
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let rounds = 240;
    let mut sizes = Vec::new();
    for round in 0..rounds {
        let kind = Kind::ALL[round % 4];
        let count = rng.gen_range(2..=3);
        let gens = random::generators(&mut rng, kind, count);
        let ex = ExhaustiveSemigroup::new(&gens, DEFAULT_CAP).map_err(err)?;
        let sg = Semigroup::new(gens.clone()).map_err(err)?;
        let found = discrepancies(&sg, &ex).map_err(err)?;
        check(found.is_empty(), format!("{gens:?}: {}", found.join("; ")))?;
        sizes.push(ex.size());
    }
    sizes.sort_unstable();
    Ok(format!("{rounds} random generating sets over all four kinds agree (median size {}, largest {})", sizes[rounds / 2], sizes[rounds - 1]))
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for round in 0..50 {
        let kind = Kind::ALL[round % 4];
        let count = rng.gen_range(2..=4);
        let gens = random::generators(&mut rng, kind, count);
        let split = rng.gen_range(1..gens.len());
        let (a, b) = gens.split_at(split);
        let grown = Semigroup::new(a.to_vec()).map_err(err)?.closure(b).map_err(err)?;
        let direct = Semigroup::new(gens.clone()).map_err(err)?;
        let ex = ExhaustiveSemigroup::new(&gens, DEFAULT_CAP).map_err(err)?;
        for (name, sg) in [("closure", &grown), ("direct", &direct)] {
            let found = discrepancies(sg, &ex).map_err(err)?;
            check(found.is_empty(), format!("{name} {gens:?}: {}", found.join("; ")))?;
        }
        check(grown.size() == direct.size(), "sizes differ")?;
        for which in [Green::R, Green::L, Green::H, Green::D] {
            check(grown.nr_classes(which).map_err(err)? == direct.nr_classes(which).map_err(err)?, format!("{which:?}"))?;
        }
        check(grown.nr_idempotents().map_err(err)? == direct.nr_idempotents().map_err(err)?, "idempotents")?;
        check(grown.is_regular().map_err(err)? == direct.is_regular().map_err(err)?, "regularity")?;
    }
    Ok("50 random splits: closure agrees with direct enumeration and with brute force".into())
}

/// All elements of the group generated by `gens`, by closing under multiplication.
fn naive_group(degree: usize, gens: &[Permutation]) -> HashSet<Permutation> {
    let mut seen: HashSet<Permutation> = HashSet::from([Permutation::identity(degree)]);
    let mut stack = vec![Permutation::identity(degree)];
    while let Some(g) = stack.pop() {
        for s in gens {
            let h = g.mul(s);
            if seen.insert(h.clone()) {
                stack.push(h);
            }
        }
    }
    seen
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..50 {
        let degree = rng.gen_range(1..=6);
        let g = random::perm_group(&mut rng, degree);
        let naive = naive_group(degree, g.generators());
        check(g.order() == naive.len() as u64, format!("order of {:?}", g.generators()))?;
        for _ in 0..50 {
            let x = random::permutation(&mut rng, degree);
            check(g.contains(&x) == naive.contains(&x), format!("membership of {x}"))?;
        }
        for x in &naive {
            let w = g.factorize(x).map_err(err)?;
            check(g.evaluate(&w) == *x, format!("factorization of {x}"))?;
        }
        let h = random::subgroup(&mut rng, &g);
        let hn = naive_group(degree, h.generators());
        for (left, reps) in [(true, g.left_transversal(&h)), (false, g.right_transversal(&h))] {
            let reps = reps.map_err(err)?;
            let mut covered = HashSet::new();
            for r in &reps {
                for y in &hn {
                    let c = if left { r.mul(y) } else { y.mul(r) };
                    check(covered.insert(c), "cosets overlap")?;
                }
            }
            check(covered == naive, "cosets do not cover the group")?;
        }
        let k = random::perm_group(&mut rng, degree);
        let kn = naive_group(degree, k.generators());
        let meet = g.intersection(&k).map_err(err)?;
        let want: HashSet<Permutation> = naive.intersection(&kn).cloned().collect();
        check(naive_group(degree, meet.generators()) == want, "intersection")?;
        check(PermGroup::is_subgroup_of(&meet, &g) && PermGroup::is_subgroup_of(&meet, &k), "intersection not a subgroup")?;
    }
    Ok("50 random groups: order, membership, factorization, transversals and intersections agree with enumeration".into())
}

fn main() -> ExitCode {
    let criteria: [fn() -> Outcome; 10] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
    ];
    let mut failed = 0;
    for (k, f) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {}: PASS - {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL - {detail}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
