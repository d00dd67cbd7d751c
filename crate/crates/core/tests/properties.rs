use absolute_core::absolute::{centrality_equations, is_precentral, strata};
use absolute_core::latgeo::{
    chart, exp_map, hermite_basis, integer_kernel, lambda_membership, log_map, rational_point_on_lambda,
    DistributionPoint, IntegerLattice,
};
use absolute_core::presentation::{ExponentVector, Presentation};
use absolute_core::rational::{rat, Rational};
use absolute_core::wordcalc::{central_pairs_exact, complete, MonomialOrder};
use proptest::prelude::*;

fn presentation(n: usize, rels: &[(Vec<u32>, Vec<u32>)]) -> Presentation {
    let names: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
    let text = {
        let side = |v: &Vec<u32>| {
            let terms: Vec<String> =
                v.iter().enumerate().filter(|(_, &c)| c > 0).map(|(i, &c)| format!("{c}{}", names[i])).collect();
            if terms.is_empty() { "0".to_string() } else { terms.join(" + ") }
        };
        let rel: Vec<String> = rels.iter().map(|(l, r)| format!("{} = {}", side(l), side(r))).collect();
        format!("generators: {}\nrelations: {}", names.join(" "), rel.join("; "))
    };
    absolute_core::parse_presentation(&text).unwrap()
}

fn relations(n: usize) -> impl Strategy<Value = Vec<(Vec<u32>, Vec<u32>)>> {
    let side = proptest::collection::vec(0u32..3, n);
    proptest::collection::vec((side.clone(), side), 0..3)
}

fn small_presentation() -> impl Strategy<Value = Presentation> {
    (2usize..=4).prop_flat_map(|n| relations(n).prop_map(move |r| presentation(n, &r)))
}

fn word(n: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(0..n, 0..8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_forms_are_idempotent_and_commute(p in small_presentation(), w1 in word(4), w2 in word(4)) {
        let n = p.rank();
        let rs = complete(&p, MonomialOrder::DegRevLex);
        let w1: Vec<usize> = w1.into_iter().map(|g| g % n).collect();
        let w2: Vec<usize> = w2.into_iter().map(|g| g % n).collect();
        let a = ExponentVector::from_word(n, &w1);
        let b = ExponentVector::from_word(n, &w2);
        let na = rs.normal_form(&a);
        prop_assert_eq!(rs.normal_form(&na), na.clone());
        let ab = rs.normal_form(&a.plus(&b));
        prop_assert_eq!(rs.normal_form(&na.plus(&rs.normal_form(&b))), ab.clone());
        prop_assert_eq!(rs.normal_form(&b.plus(&a)), ab);
    }

    #[test]
    fn relations_hold_in_normal_form(p in small_presentation(), order in prop_oneof![
        Just(MonomialOrder::DegRevLex), Just(MonomialOrder::DegLex)
    ]) {
        let rs = complete(&p, order);
        for r in &p.relations {
            prop_assert!(rs.equivalent(&r.lhs, &r.rhs));
        }
    }

    #[test]
    fn central_pairs_are_homogeneous_and_equivalent(p in small_presentation()) {
        let rs = complete(&p, MonomialOrder::DegRevLex);
        if let Ok(cp) = central_pairs_exact(&p) {
            for pair in &cp.pairs {
                prop_assert!(pair.is_homogeneous());
                prop_assert!(rs.equivalent(&pair.lhs, &pair.rhs));
            }
        }
    }

    #[test]
    fn strata_samples_are_precentral(p in small_presentation()) {
        if let Ok(cp) = central_pairs_exact(&p) {
            let eqs = centrality_equations(&cp);
            let s = strata(&eqs, p.rank(), true).unwrap();
            prop_assert!(s.last().is_some_and(|x| x.is_main));
            for x in &s {
                prop_assert!(is_precentral(&eqs, &x.sample));
                prop_assert_eq!(x.dimension + 1 + x.lattice.rank(), x.support.len());
            }
        }
    }

    #[test]
    fn hermite_basis_spans_the_same_lattice(rows in proptest::collection::vec(proptest::collection::vec(-6i64..6, 4), 0..4)) {
        let h = hermite_basis(&rows, 4);
        let l = IntegerLattice::from_generators(4, &h);
        for r in &rows {
            prop_assert!(l.contains(r));
        }
        let back = IntegerLattice::from_generators(4, &rows);
        for r in &h {
            prop_assert!(back.contains(r));
        }
    }

    #[test]
    fn kernel_vectors_are_annihilated(rows in proptest::collection::vec(proptest::collection::vec(-5i64..5, 4), 1..3)) {
        let k = integer_kernel(&rows, 4);
        let rank = IntegerLattice::from_generators(4, &rows).rank();
        prop_assert_eq!(k.len() + rank, 4);
        for v in &k {
            for r in &rows {
                prop_assert_eq!(r.iter().zip(v).map(|(a, b)| a * b).sum::<i64>(), 0);
            }
        }
    }

    #[test]
    fn chart_round_trip(w in proptest::collection::vec(-3.0f64..3.0, 2)) {
        let l = IntegerLattice::from_generators(4, &[vec![1, 1, -1, -1]]);
        let c = chart(&l);
        let mu = exp_map(&c, 4, &w).unwrap();
        prop_assert!(absolute_core::latgeo::equation_residual(&l.basis, &mu) < 1e-12);
        let back = log_map(&c, &mu).unwrap();
        for (a, b) in back.iter().zip(&w) {
            prop_assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn toric_points_lie_on_lambda(t in proptest::collection::vec((1i64..6, 1i64..6), 2)) {
        let l = IntegerLattice::from_generators(4, &[vec![1, 1, -1, -1]]);
        let t: Vec<Rational> = t.into_iter().map(|(a, b)| rat(a, b)).collect();
        let mu = rational_point_on_lambda(&l, &t).unwrap();
        prop_assert!(mu.is_strictly_positive());
        prop_assert!(lambda_membership(&l.basis, &mu));
        let json = serde_json::to_string(&mu).unwrap();
        let back: DistributionPoint = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, mu);
    }
}
