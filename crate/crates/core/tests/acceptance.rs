//! End-to-end acceptance checks, run in order with one pass/fail line each.
//! Runs without the test harness so the lines always reach stdout.

mod common;

use std::cell::RefCell;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{c, cofactor_oracle, in_span, pair_vec, random_points, random_principal, v};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sepvar::enumerate::{
    bivar_ideal_dispatch, enumerate_generators, merged_ideal, naive_degree_search,
    solve_problem18, Budget, MergedRoute, Strategy,
};
use sepvar::field::{rat, RatFun, Rational};
use sepvar::groebner::{audit, GroebnerBasis};
use sepvar::intersect::intersect_algebra;
use sepvar::io::{parse_problem, parse_poly, route_and_solve, ResultDocument, Status};
use sepvar::poly::merge::{SeparatedPair, VariablePartition};
use sepvar::poly::{MonomialOrder, Poly};
use sepvar::principal::from_bivariate;
use sepvar::zerodim::AlgebraPresentation;

/// Pairs emitted by some run, with the ideal they should belong to.
struct Emitted {
    ideal: Vec<Poly<Rational>>,
    pairs: Vec<SeparatedPair<Rational>>,
}

thread_local! {
    static EMITTED: RefCell<Vec<Emitted>> = const { RefCell::new(Vec::new()) };
}

fn record(ideal: &[Poly<Rational>], pairs: &[SeparatedPair<Rational>]) {
    EMITTED.with(|e| {
        e.borrow_mut().push(Emitted {
            ideal: ideal.to_vec(),
            pairs: pairs.to_vec(),
        })
    });
}

fn solve_text(text: &str) -> (ResultDocument, Vec<Poly<Rational>>, Vec<SeparatedPair<Rational>>) {
    let spec = parse_problem(text).expect("problem parses");
    let doc = route_and_solve(&spec).expect("solvable");
    let names: Vec<String> = doc.xvars.iter().chain(&doc.yvars).cloned().collect();
    let parse = |s: &str| parse_poly::<Rational>(s, &names).expect("output parses");
    let mut ideal: Vec<Poly<Rational>> = spec.generators.iter().map(|g| parse(g)).collect();
    if let Some(p1) = &spec.intersect_with {
        ideal = sepvar::groebner::ideal_intersect(&ideal, &[parse(p1)]);
    }
    let pairs: Vec<SeparatedPair<Rational>> = doc
        .generators
        .iter()
        .map(|p| SeparatedPair::new(parse(&p.f), parse(&p.g)))
        .collect();
    record(&ideal, &pairs);
    (doc, ideal, pairs)
}

fn criterion(n: usize, limit: Duration, body: impl FnOnce()) -> bool {
    let start = Instant::now();
    let ok = catch_unwind(AssertUnwindSafe(body)).is_ok();
    let elapsed = start.elapsed();
    let ok = ok && elapsed < limit;
    println!(
        "criterion {n}: {} ({:.2} s, limit {} s)",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    ok
}

fn monomial_curve_ideal() -> Vec<Poly<Rational>> {
    let (x1, x2, y1, y2) = (v(0), v(1), v(2), v(3));
    vec![
        y1.pow(2).sub(&x2.mul(&y2)),
        x2.pow(2).sub(&x1.mul(&y1)),
        x1.pow(4).mul(&x2).mul(&y1).sub(&x2.mul(&y1).mul(&y2.pow(4))),
    ]
}

fn example_1_1() {
    let (doc, _, pairs) = solve_text(
        "xvars: x1, x2\nyvars: y\nx1^2 + 2*x1*x2 + x2^2 + x1*y + x2*y + y^2\n",
    );
    assert_eq!(doc.status, Status::Simple);
    assert_eq!(pairs.len(), 1);
    let want = SeparatedPair::new(v(0).add(&v(1)).pow(3), v(2).pow(3));
    assert!(common::affinely_equal(&pairs[0], &want));
}

fn example_1_2() {
    let (doc, _, pairs) =
        solve_text("xvars: x1, x2\nyvars: y\nx1^2 + x1*x2 + x2^2 + x1*y + x2 + y^2\n");
    assert_eq!(doc.status, Status::Trivial);
    assert!(pairs.is_empty());
}

fn symmetric_example() {
    let (x1, x2, y1, y2) = (v(0), v(1), v(2), v(3));
    let gens = vec![
        x1.add(&x2).add(&y1).add(&y2),
        x1.mul(&x2)
            .add(&x1.mul(&y1))
            .add(&x1.mul(&y2))
            .add(&x2.mul(&y1))
            .add(&x2.mul(&y2))
            .add(&y1.mul(&y2)),
        x1.mul(&x2)
            .mul(&y1)
            .add(&x1.mul(&x2).mul(&y2))
            .add(&x1.mul(&y1).mul(&y2))
            .add(&x2.mul(&y1).mul(&y2)),
        x1.mul(&x2).mul(&y1).mul(&y2).sub(&c(1)),
    ];
    let pres = AlgebraPresentation::new(&gens, &[0, 1], &[2, 3]).expect("zero-dimensional");
    assert!(pres.eliminants_x().contains(&x2.pow(4).add(&c(1))));
    assert!(pres.eliminants_y().contains(&y2.pow(4).add(&c(1))));
    let sols = pres.ansatz_solutions();
    assert_eq!(sols.len(), 5);
    let pair = SeparatedPair::new;
    let listed = [
        pair(x1.pow(2).add(&x2.pow(2)), y1.pow(2).add(&y2.pow(2)).neg()),
        pair(x1.add(&x2), y1.add(&y2).neg()),
        pair(x1.mul(&x2), y1.pow(2).add(&y1.mul(&y2)).add(&y2.pow(2))),
        pair(
            x1.pow(2).mul(&x2).add(&x1.mul(&x2.pow(2))),
            y1.pow(2).mul(&y2).add(&y1.mul(&y2.pow(2))).neg(),
        ),
        pair(x1.pow(2).mul(&x2.pow(2)), y1.pow(2).mul(&y2.pow(2))),
    ];
    assert!(common::same_span_with_unit(sols, &listed));
    record(&gens, sols);
    record(&gens, pres.generators());
}

fn intersection_example() {
    let (doc, ideal, pairs) = solve_text(
        "xvars: x1, x2\nyvars: y1, y2\nintersect-with: x1^2 + x1*y2 + y2^2\n\
         x1 - 1\nx2 - 1\ny1 - 2\ny2 - 2\n",
    );
    assert_eq!(doc.status, Status::Finite);
    let part = VariablePartition::standard(2, 2);
    let i0 = [v(0).sub(&c(1)), v(1).sub(&c(1)), v(2).sub(&c(2)), v(3).sub(&c(2))];
    let p1 = v(0).pow(2).add(&v(0).mul(&v(3))).add(&v(3).pow(2));
    let out = intersect_algebra(&i0, &p1, &part, 64).expect("supported");
    let zero = Poly::zero();
    let red: Vec<SeparatedPair<Rational>> = [7, 63, 511]
        .iter()
        .map(|&k| SeparatedPair::new(zero.clone(), c(k)))
        .collect();
    assert_eq!(&out.reductions[..3], &red[..]);
    let g = SeparatedPair::new(v(0).pow(3), v(3).pow(3));
    let want = [
        g.pow(2).sub(&g.scale(&rat(9))).canonical(),
        g.pow(3).sub(&g.scale(&rat(73))).canonical(),
    ];
    let got: Vec<_> = out.generators.iter().map(|p| p.pair.canonical()).collect();
    assert_eq!(got, want);
    let emitted: Vec<_> = pairs.iter().map(SeparatedPair::canonical).collect();
    assert_eq!(emitted, want);
    record(&ideal, &got);
}

fn pair_search_example() {
    let part = VariablePartition::standard(2, 2);
    let gens = monomial_curve_ideal();
    let s6 = SeparatedPair::new(Poly::<RatFun<Rational>>::var(0).pow(6), Poly::zero());
    let t6 = SeparatedPair::new(Poly::zero(), Poly::<RatFun<Rational>>::var(1).pow(6));
    let tr = solve_problem18(&gens, &part, &[s6, t6]);
    let (s, t) = (v(part.s()), v(part.t()));
    let big = SeparatedPair::new(
        v(0).pow(3).mul(&v(1).pow(3)).mul(&s.pow(6)),
        v(2).pow(3).mul(&v(3).pow(3)).mul(&t.pow(6)),
    );
    assert!(common::same_span_with_unit(&tr.intersection, &[big]));
    assert_eq!(tr.intersection.len(), 2);
    let want = SeparatedPair::new(v(0).pow(3).mul(&v(1).pow(3)), v(2).pow(3).mul(&v(3).pow(3)));
    let found: Vec<_> = tr.pairs.iter().filter(|p| !p.is_trivial()).cloned().collect();
    assert_eq!(found, vec![want.clone()]);
    record(&gens, &found);
    let never = || false;
    let budget = Budget {
        max_degree: 2,
        exponent_cap: 32,
        stop: &never,
    };
    let run = enumerate_generators(&gens, &part, Strategy::Merged, &budget);
    assert_eq!(run.generators.first().map(SeparatedPair::canonical), Some(want));
    record(&gens, &run.generators);
}

fn final_example() {
    let (x1, x2, y1, y2) = (v(0), v(1), v(2), v(3));
    let base = y1.sub(&x1);
    let gens = vec![
        base.add(&x1.mul(&x2).mul(&y2)).sub(&x2.mul(&y1).mul(&y2)),
        base.add(&x1.pow(2).mul(&y1)).sub(&x1.mul(&y1.pow(2))),
    ];
    let part = VariablePartition::standard(2, 2);
    let a = bivar_ideal_dispatch(&merged_ideal(&gens, &part), &part, 16);
    assert_eq!(a.route, MergedRoute::Principal);
    let (s, t) = (v(part.s()), v(part.t()));
    let want = s.mul(&x1).sub(&t.mul(&y1));
    let gcd = a.gcd.expect("nonconstant gcd");
    assert!(gcd == want || gcd == want.neg());
    assert_eq!(a.generators.len(), 1);
    let g = &a.generators[0];
    assert!(g.f.free_of(&[1]) && g.g.free_of(&[0]));
    assert_eq!(g.f.total_degree(), 1);
    assert_eq!(g.g.total_degree(), 1);
    let d = from_bivariate(&g.difference(), &part);
    assert!(d == want || d == want.neg());
    let gb = GroebnerBasis::ideal(&gens, MonomialOrder::Grevlex);
    assert_eq!(naive_degree_search(&gb, &part, 6), vec![SeparatedPair::one()]);
}

fn random_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e9a);
    let (mut simple, mut trivial) = (0, 0);
    for k in 0..120 {
        let (p, part) = random_principal(&mut rng);
        let names = part.names();
        let text = format!(
            "xvars: {}\nyvars: {}\n{}\n",
            part.x_names().join(", "),
            part.y_names().join(", "),
            p.render(&names)
        );
        let (doc, _, pairs) = solve_text(&text);
        let bound = p.total_degree().max(pairs.first().map_or(0, |g| g.total_degree()));
        let oracle = cofactor_oracle(&p, &part, bound + 2);
        match doc.status {
            Status::Simple => {
                simple += 1;
                let d = pairs[0].difference();
                let own = cofactor_oracle(&p, &part, d.total_degree());
                let basis: Vec<Vec<Poly<Rational>>> = own.iter().map(|q| vec![q.clone()]).collect();
                assert!(in_span(&basis, std::slice::from_ref(&d)), "instance {k}: output outside oracle span");
                for q in &oracle {
                    assert!(q.div_exact(&d).is_some(), "instance {k}: {q:?} not a multiple");
                }
            }
            Status::Trivial => {
                trivial += 1;
                assert!(oracle.is_empty(), "instance {k}: oracle found a multiple");
            }
            s => panic!("instance {k}: unexpected status {s:?}"),
        }
    }
    println!("  principal instances: {simple} simple, {trivial} trivial");
    assert!(simple >= 20 && trivial >= 20);
    for k in 0..8 {
        let (gens, part) = random_points(&mut rng);
        let pres = AlgebraPresentation::new(&gens, &part.x_vars(), &part.y_vars())
            .expect("zero-dimensional");
        let gb = GroebnerBasis::ideal(&gens, MonomialOrder::Grevlex);
        for g in pres.generators() {
            let naive = naive_degree_search(&gb, &part, g.total_degree());
            let basis: Vec<_> = naive.iter().map(pair_vec).collect();
            assert!(in_span(&basis, &pair_vec(g)), "points {k}: {g:?} outside naive span");
        }
        record(&gens, pres.generators());
    }
}

fn invariants() {
    let emitted = EMITTED.with(|e| e.take());
    let mut members = 0;
    for e in &emitted {
        let gb = GroebnerBasis::ideal(&e.ideal, MonomialOrder::Grevlex);
        for p in &e.pairs {
            assert!(gb.contains_poly(&p.difference()), "emitted pair not in the ideal");
            members += 1;
        }
        for (a, b) in e.pairs.iter().zip(e.pairs.iter().skip(1)).take(3) {
            assert!(gb.contains_poly(&a.mul(b).difference()), "product not in the ideal");
        }
        if let Some(a) = e.pairs.first() {
            assert!(gb.contains_poly(&a.pow(2).difference()), "square not in the ideal");
        }
    }
    let (checked, failed) = audit::counts();
    println!("  {members} emitted pairs checked; {checked} bases audited, {failed} failed");
    assert!(members > 100);
    assert!(checked > 0 && failed == 0);
}

fn main() -> std::process::ExitCode {
    audit::enable(true);
    let secs = Duration::from_secs;
    let results = [
        criterion(1, secs(10), example_1_1),
        criterion(2, secs(10), example_1_2),
        criterion(3, secs(30), symmetric_example),
        criterion(4, secs(30), intersection_example),
        criterion(5, secs(60), pair_search_example),
        criterion(6, secs(60), final_example),
        criterion(7, secs(600), random_suite),
        criterion(8, secs(600), invariants),
    ];
    audit::enable(false);
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        std::process::ExitCode::SUCCESS
    } else {
        std::process::ExitCode::FAILURE
    }
}
