//! Randomized cross-checks between the two constructions and the
//! verification suite itself.

use pointgb::bma::{buchberger_moller, PointSet};
use pointgb::essbm::{essbm, Variety};
use pointgb::field::PrimeField;
use pointgb::order::{OrderKind, TermOrder};
use pointgb::random::{random_variety, SplitMix64};
use pointgb::verify::{
    check_reduced, check_result_equivalence, check_rel_shape, check_sm, check_vanishing,
};

struct Instance {
    variety: Variety,
    order: TermOrder,
}

fn instance(i: u64) -> Instance {
    let mut rng = SplitMix64::new(0xBEEF ^ i);
    let p = [2u64, 3, 5, 7][(rng.next_u64() % 4) as usize];
    let field = PrimeField::new(p).unwrap();
    let n = 1 + (rng.next_u64() % 7) as usize;
    let capacity = (p as u128).pow(n as u32).min(10) as u64;
    let m = 1 + (rng.next_u64() % capacity) as usize;
    let variety = random_variety(field, n, m, i).unwrap();
    let kind = if i % 2 == 0 { OrderKind::Lex } else { OrderKind::Grevlex };
    let mut priority: Vec<usize> = (0..n).collect();
    // Fisher-Yates with the same deterministic stream.
    for k in (1..n).rev() {
        priority.swap(k, (rng.next_u64() % (k as u64 + 1)) as usize);
    }
    let order = TermOrder::new(kind, n, priority).unwrap();
    Instance { variety, order }
}

#[test]
fn essbm_matches_full_ring_on_random_instances() {
    for i in 0..60 {
        let Instance { variety, order } = instance(i);
        let res = essbm(&variety, &order).unwrap();
        let status = check_result_equivalence(&res, &variety, &order).unwrap();
        assert!(status.passed(), "instance {i}: {status:?}");
    }
}

#[test]
fn equivalence_implies_the_other_checks() {
    for i in 0..40 {
        let Instance { variety, order } = instance(i);
        let res = essbm(&variety, &order).unwrap();
        assert!(check_result_equivalence(&res, &variety, &order).unwrap().passed());
        let full = res.full_basis();
        assert!(check_vanishing(&full, &variety).passed(), "instance {i}");
        assert!(check_reduced(&full, &order).unwrap().passed(), "instance {i}");
        assert!(
            check_sm(&res.standard_monomials, &variety, &res.essential_vars).passed(),
            "instance {i}"
        );
        assert!(check_rel_shape(&res, &order).passed(), "instance {i}");
        assert!(res.essential_vars.len() <= variety.len(), "instance {i}");
    }
}

#[test]
fn point_relabeling_does_not_change_the_result() {
    for i in 0..30 {
        let Instance { variety, order } = instance(i);
        let baseline = essbm(&variety, &order).unwrap();
        let mut rng = SplitMix64::new(i);
        let mut shuffled = variety.points().to_vec();
        for k in (1..shuffled.len()).rev() {
            shuffled.swap(k, (rng.next_u64() % (k as u64 + 1)) as usize);
        }
        let relabeled = Variety::new(variety.field(), variety.n_vars(), shuffled).unwrap();
        let res = essbm(&relabeled, &order).unwrap();
        assert_eq!(res, baseline, "instance {i}");
    }
}

#[test]
fn bma_standard_monomial_count_equals_points() {
    for i in 0..30 {
        let Instance { variety, order } = instance(i);
        let full = PointSet::new(
            variety.field(),
            variety.n_vars(),
            (0..variety.n_vars()).collect(),
            variety.points().to_vec(),
            order,
        )
        .unwrap();
        let (basis, standard) = buchberger_moller(&full).unwrap();
        assert_eq!(standard.len(), variety.len());
        for g in &basis {
            for pt in variety.points() {
                assert!(g.evaluate(variety.field(), pt).is_zero());
            }
        }
    }
}
