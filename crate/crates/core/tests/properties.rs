mod common;

use common::{det_oracle, leading_minors, positive_definite_oracle};
use conelab::rank3::{build_rank3_cone, build_rank3_dual, composition_family, family_3_5_7, CompositionFamily};
use conelab::{iterate_construction, ConeElement, QRealization, Rational, RationalSampler};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use std::sync::OnceLock;

fn pool() -> &'static [QRealization] {
    static POOL: OnceLock<Vec<QRealization>> = OnceLock::new();
    POOL.get_or_init(|| {
        let f357 = family_3_5_7::<Rational>();
        let f122 = composition_family::<Rational>(1, 2).unwrap();
        let f023 = CompositionFamily::<Rational>::new(2, 3, vec![]).unwrap();
        vec![
            iterate_construction(2),
            iterate_construction(3),
            iterate_construction(4),
            build_rank3_cone(&f357).unwrap(),
            build_rank3_dual(&f357).unwrap(),
            build_rank3_cone(&f122).unwrap(),
            build_rank3_cone(&f023).unwrap(),
            build_rank3_dual(&f023).unwrap(),
        ]
    })
}

fn realization() -> impl Strategy<Value = usize> {
    0..pool().len()
}

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(48)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn embed_project_round_trip(idx in realization(), seed in any::<u64>()) {
        let v = &pool()[idx];
        let mut s = RationalSampler::new(seed);
        let x = s.cone_element(v);
        let m = v.embed(&x).unwrap();
        prop_assert!(m.is_symmetric());
        prop_assert_eq!(v.project(&m).unwrap(), x.clone());
        prop_assert_eq!(ConeElement::from_flat(v, &x.to_flat()).unwrap(), x);
        let h = s.group_element(v);
        prop_assert_eq!(v.project_group(&v.embed_group(&h).unwrap()).unwrap(), h);
    }

    #[test]
    fn action_is_closed_and_matches_matrices(idx in realization(), seed in any::<u64>()) {
        let v = &pool()[idx];
        let mut s = RationalSampler::new(seed);
        let (h, x) = (s.group_element(v), s.cone_element(v));
        let hm = v.embed_group(&h).unwrap();
        let direct = hm.matmul(&v.embed(&x).unwrap()).mul_transpose(&hm);
        prop_assert_eq!(v.embed(&v.rho_act(&h, &x).unwrap()).unwrap(), direct);
    }

    #[test]
    fn action_law(idx in realization(), seed in any::<u64>()) {
        let v = &pool()[idx];
        let mut s = RationalSampler::new(seed);
        let (h1, h2, x) = (s.group_element(v), s.group_element(v), s.cone_element(v));
        let left = v.rho_act(&v.group_mul(&h1, &h2).unwrap(), &x).unwrap();
        let right = v.rho_act(&h1, &v.rho_act(&h2, &x).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn determinant_matches_bareiss(idx in realization(), seed in any::<u64>()) {
        let v = &pool()[idx];
        let mut s = RationalSampler::new(seed);
        let x = if seed % 2 == 0 { s.cone_element(v) } else { s.interior_point(v) };
        let res = v.ldl_decompose(&x).unwrap();
        if let Some(det) = res.determinant(v) {
            prop_assert_eq!(det, det_oracle(&v.embed(&x).unwrap()));
            prop_assert_eq!(res.reconstruct(v).unwrap(), x);
        }
    }

    #[test]
    fn membership_matches_sylvester(idx in realization(), seed in any::<u64>()) {
        let v = &pool()[idx];
        let mut s = RationalSampler::new(seed);
        let mut x = s.interior_point(v);
        // push some samples across the boundary
        let shift: Rational = s.scalar();
        for d in &mut x.diag {
            *d -= shift.clone();
        }
        let member = v.ldl_decompose(&x).unwrap().is_member;
        prop_assert_eq!(member, positive_definite_oracle(&v.embed(&x).unwrap()));
    }

    #[test]
    fn pivots_equal_block_minor_ratios(idx in realization(), seed in any::<u64>()) {
        let v = &pool()[idx];
        let x = RationalSampler::new(seed).interior_point(v);
        let res = v.ldl_decompose(&x).unwrap();
        let m = v.embed(&x).unwrap();
        // leading block minor through block k equals Π_{i<=k} d_i^{n_i}
        let mut acc = Rational::from_integer(BigInt::from(1));
        for k in 0..v.rank() {
            let end = v.partition().offset(k) + v.partition().size(k);
            acc *= num_traits::pow(res.pivots[k].clone(), v.partition().size(k));
            prop_assert_eq!(det_oracle(&m.block(0, 0, end, end)), acc.clone());
        }
        prop_assert!(leading_minors(&m).iter().all(Signed::is_positive));
    }

    #[test]
    fn inner_product_is_positive_and_symmetric(idx in realization(), seed in any::<u64>()) {
        let v = &pool()[idx];
        let mut s = RationalSampler::new(seed);
        let (x, y) = (s.cone_element(v), s.cone_element(v));
        prop_assert_eq!(v.inner_product(&x, &y).unwrap(), v.inner_product(&y, &x).unwrap());
        let xx = v.inner_product(&x, &x).unwrap();
        prop_assert_eq!(x.is_zero(), xx.is_zero());
        prop_assert!(!xx.is_negative());
    }

    #[test]
    fn identity_pairs_positively_with_closure(idx in realization(), seed in any::<u64>()) {
        let v = &pool()[idx];
        let mut s = RationalSampler::new(seed);
        let y = ConeElement::identity(v);
        let block = s.index(v.rank());
        let samples = vec![s.interior_point(v), s.boundary_point(v, block)];
        let report = v.dual_pairing_positive(&y, &samples).unwrap();
        prop_assert!(report.all_positive());
        prop_assert_eq!(report.checked, 2);
    }
}
