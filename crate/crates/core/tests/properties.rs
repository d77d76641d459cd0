//! Invariants over seeded random instances.

mod common;

use common::{in_span, pair_vec, random_principal};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sepvar::enumerate::{
    enumerate_generators, naive_degree_search, Budget, EnumerationStatus, Strategy,
};
use sepvar::field::{rat, Rational};
use sepvar::groebner::GroebnerBasis;
use sepvar::poly::merge::{eval_st, phi_merge, SeparatedPair, VariablePartition};
use sepvar::poly::{MonomialOrder, Poly};
use sepvar::principal::{thm5_generator, PrincipalOutcome, PrincipalProblem};

fn never() -> bool {
    false
}

fn instance(seed: u64) -> (Poly<Rational>, VariablePartition) {
    random_principal(&mut ChaCha8Rng::seed_from_u64(seed))
}

fn spans(pairs: &[SeparatedPair<Rational>]) -> Vec<Vec<Poly<Rational>>> {
    pairs.iter().map(pair_vec).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn naive_search_is_monotone(seed in any::<u64>()) {
        let (p, part) = instance(seed);
        let gb = GroebnerBasis::ideal(&[p], MonomialOrder::Grevlex);
        let lo = spans(&naive_degree_search(&gb, &part, 2));
        let hi = spans(&naive_degree_search(&gb, &part, 3));
        prop_assert!(lo.len() <= hi.len());
        for v in &lo {
            prop_assert!(in_span(&hi, v));
        }
    }

    #[test]
    fn merged_and_naive_agree(seed in any::<u64>()) {
        let (p, part) = instance(seed);
        let gens = [p];
        let budget = Budget { max_degree: 3, exponent_cap: 16, stop: &never };
        let merged = enumerate_generators(&gens, &part, Strategy::Merged, &budget);
        let gb = GroebnerBasis::ideal(&gens, MonomialOrder::Grevlex);
        for g in &merged.generators {
            prop_assert!(gb.contains_poly(&g.difference()));
            let naive = spans(&naive_degree_search(&gb, &part, g.total_degree()));
            prop_assert!(in_span(&naive, &pair_vec(g)));
        }
        if merged.status == EnumerationStatus::Trivial {
            prop_assert_eq!(naive_degree_search(&gb, &part, 3), vec![SeparatedPair::one()]);
        }
    }

    #[test]
    fn trivial_algebras_short_circuit(seed in any::<u64>()) {
        let (p, part) = instance(seed);
        let prob = PrincipalProblem::new(p.clone(), part.clone()).unwrap();
        if thm5_generator(&prob).unwrap() == PrincipalOutcome::Trivial {
            let budget = Budget { max_degree: 3, exponent_cap: 16, stop: &never };
            let e = enumerate_generators(&[p], &part, Strategy::Merged, &budget);
            prop_assert_eq!(e.status, EnumerationStatus::Trivial);
            prop_assert!(e.generators.is_empty());
            prop_assert_eq!(e.degree_reached, 0);
        }
    }

    #[test]
    fn merge_map_is_compatible(seed in any::<u64>(), seed2 in any::<u64>()) {
        let (p, part) = instance(seed);
        let (q, _) = instance(seed2);
        let q = if q.nvars() <= part.n() + part.m() { q } else { Poly::one() };
        prop_assert_eq!(eval_st(&phi_merge(&p, &part), &part), p.clone());
        prop_assert_eq!(
            phi_merge(&p.mul(&q), &part),
            phi_merge(&p, &part).mul(&phi_merge(&q, &part))
        );
        prop_assert_eq!(
            phi_merge(&p.add(&q), &part),
            phi_merge(&p, &part).add(&phi_merge(&q, &part))
        );
    }

    #[test]
    fn canonical_form_is_idempotent(seed in any::<u64>(), a in 1i64..9, b in -9i64..9) {
        let (p, part) = instance(seed);
        let prob = PrincipalProblem::new(p, part).unwrap();
        if let PrincipalOutcome::Simple(g) = thm5_generator(&prob).unwrap() {
            let c = g.canonical();
            prop_assert_eq!(c.canonical(), c.clone());
            let moved = g.scale(&rat(a)).add(&SeparatedPair::one().scale(&rat(b)));
            prop_assert_eq!(moved.canonical(), c);
        }
    }
}
