use std::collections::BTreeMap;

use gammahom::chains::lp::Bound;
use gammahom::chains::{boundary, homology_q, is_normalized, l1_seminorm, normalize, solve_lp, LinearProgram, QChain};
use gammahom::rational::{format_q, frac, parse_q, q};
use gammahom::simplicial::{minimal_torus, LevelwiseSimplicialSet};
use gammahom::surfaces::build_block;
use gammahom::two_sets::{classify, enumerate_subobjects, preimage_of_true, subobject_classifier, TwoSet};
use gammahom::Q;
use num_traits::Signed;
use proptest::prelude::*;

fn torus() -> LevelwiseSimplicialSet { minimal_torus(3).unwrap().to_levelwise() }

fn chain_terms() -> impl Strategy<Value = Vec<(usize, i64, i64)>> { prop::collection::vec((1usize..10_000, -9i64..=9, 1i64..=5), 1..8) }

fn chain_on(x: &LevelwiseSimplicialSet, degree: usize, terms: &[(usize, i64, i64)]) -> QChain {
  QChain::new(degree, terms.iter().map(|&(s, n, d)| (1 + s % (x.size(degree) - 1), frac(n, d))))
}

proptest! {
  #![proptest_config(ProptestConfig::with_cases(64))]

  #[test]
  fn boundary_squares_to_zero(degree in 2usize..=3, terms in chain_terms()) {
    let x = torus();
    let c = chain_on(&x, degree, &terms);
    prop_assert!(boundary(&boundary(&c, &x).unwrap(), &x).unwrap().is_zero());
  }

  #[test]
  fn normalize_is_a_bounded_projection(degree in 1usize..=3, terms in chain_terms()) {
    let x = build_block().unwrap();
    let x = x.space();
    let c = chain_on(x, degree, &terms);
    let p = normalize(&c, x).unwrap();
    prop_assert!(is_normalized(&p, x).unwrap());
    prop_assert_eq!(normalize(&p, x).unwrap(), p.clone());
    prop_assert!(p.l1_norm() <= q(1 << degree) * c.l1_norm());
    prop_assert_eq!(boundary(&p, x).unwrap(), normalize(&boundary(&c, x).unwrap(), x).unwrap());
  }

  #[test]
  fn l1_seminorm_is_absolutely_homogeneous(a in -4i64..=4, b in -4i64..=4, n in -6i64..=6, d in 1i64..=4) {
    prop_assume!(a != 0 || b != 0);
    let x = torus();
    let basis = homology_q(&x, 1).unwrap().cycle_basis;
    let z = basis[0].scaled(&q(a)).plus(&basis[1].scaled(&q(b)));
    let r = frac(n, d);
    prop_assert_eq!(l1_seminorm(&z.scaled(&r), &x).unwrap(), r.abs() * l1_seminorm(&z, &x).unwrap());
  }

  #[test]
  fn rationals_roundtrip(n in any::<i64>(), d in 1i64..=i64::MAX) {
    let v = frac(n, d);
    prop_assert_eq!(parse_q(&format_q(&v)).unwrap(), v);
  }
}

fn lp_strategy() -> impl Strategy<Value = LinearProgram> {
  (1usize..=5).prop_flat_map(|n| {
    (
      prop::collection::vec(-5i64..=5, n),
      prop::collection::vec((-3i64..=2, 0i64..=4), n),
      prop::collection::vec((prop::collection::vec(-3i64..=3, n), -4i64..=4), 0..=n.min(3)),
    )
      .prop_map(move |(cost, boxes, rows)| {
        let mut p = LinearProgram::new(n);
        p.objective = cost.into_iter().map(q).collect();
        p.bounds = boxes.into_iter().map(|(lo, w)| Bound::boxed(q(lo), q(lo + w))).collect();
        for (row, rhs) in rows {
          let sparse: BTreeMap<usize, Q> = row.into_iter().enumerate().filter(|(_, v)| *v != 0).map(|(i, v)| (i, q(v))).collect();
          p.add_row(sparse, q(rhs));
        }
        p
      })
  })
}

fn permuted(p: &LinearProgram, perm: &[usize]) -> LinearProgram {
  let mut out = LinearProgram::new(perm.len());
  for (i, &j) in perm.iter().enumerate() {
    out.objective[j] = p.objective[i].clone();
    out.bounds[j] = p.bounds[i].clone();
  }
  for (row, rhs) in p.rows.iter().zip(&p.rhs) {
    out.add_row(row.iter().map(|(&i, v)| (perm[i], v.clone())).collect(), rhs.clone());
  }
  out
}

proptest! {
  #![proptest_config(ProptestConfig::with_cases(128))]

  #[test]
  fn lp_optimum_ignores_variable_order(p in lp_strategy(), seed in any::<u64>()) {
    let n = p.objective.len();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_by_key(|&i| (seed.rotate_left(i as u32 * 7) ^ i as u64, i));
    let a = solve_lp(&p).map(|s| s.value).ok();
    let b = solve_lp(&permuted(&p, &perm)).map(|s| s.value).ok();
    prop_assert_eq!(a, b);
  }

  #[test]
  fn lp_optimum_scales_with_objective(p in lp_strategy(), k in 1i64..=7) {
    let mut scaled = p.clone();
    scaled.objective = p.objective.iter().map(|c| c * q(k)).collect();
    let a = solve_lp(&p).map(|s| s.value * q(k)).ok();
    let b = solve_lp(&scaled).map(|s| s.value).ok();
    prop_assert_eq!(a, b);
  }
}

fn two_set_strategy() -> impl Strategy<Value = TwoSet> {
  (1usize..=3).prop_flat_map(|v| {
    prop::collection::vec((0..v, 0..v), 0..=3).prop_map(move |extra| {
      let f0: Vec<String> = (0..v).map(|i| format!("v{i}")).collect();
      let mut f1: Vec<String> = (0..v).map(|i| format!("s{i}")).collect();
      f1.extend((0..extra.len()).map(|i| format!("e{i}")));
      let mut b0: Vec<usize> = (0..v).collect();
      let mut b1 = b0.clone();
      for (a, b) in extra {
        b0.push(a);
        b1.push(b);
      }
      TwoSet::new(f0, f1, b0, b1, (0..v).collect(), None).unwrap()
    })
  })
}

proptest! {
  #[test]
  fn classifying_map_pulls_back_to_the_subobject(g in two_set_strategy(), pick in any::<prop::sample::Index>()) {
    let subs = enumerate_subobjects(&g);
    let s = &subs[pick.index(subs.len())];
    let f = classify(&g, s).unwrap();
    prop_assert!(f.is_morphism(&g, &subobject_classifier()));
    prop_assert_eq!(&preimage_of_true(&f), s);
  }
}
