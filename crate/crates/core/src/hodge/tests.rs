use super::*;
use crate::hodge::gamma::{arch_factor, gamma_leading, GammaKind};

/// The dimensions of Hw^0 and Hw^1 of 1(n) forced by the cone of the
/// period map: Hw^0 = 1 iff n <= 0 and n is even, Hw^1 = 1 iff n >= 1 and
/// n is odd. (For n = -1 the map alpha is an isomorphism, so both vanish.)
fn expected_tate_dims(n: i64) -> (usize, usize) {
    let hw0 = usize::from(n <= 0 && n.rem_euclid(2) == 0);
    let hw1 = usize::from(n >= 1 && n.rem_euclid(2) == 1);
    (hw0, hw1)
}

#[test]
fn tate_weak_cohomology_table() {
    for n in -3..=3 {
        let wc = weak_cohomology(&HodgeDatum::tate(n)).unwrap();
        let (hw0, hw1) = expected_tate_dims(n);
        assert_eq!(wc.hw0.dim(), hw0, "Hw0 of 1({n})");
        assert_eq!(wc.hw1.dim(), hw1, "Hw1 of 1({n})");
    }
    // the anchor values: 1(0) has invariants, 1(1) has Hw^1 = R
    let wc = weak_cohomology(&HodgeDatum::tate(0)).unwrap();
    assert_eq!((wc.hw0.dim(), wc.hw1.dim()), (1, 0));
    let wc = weak_cohomology(&HodgeDatum::tate(1)).unwrap();
    assert_eq!((wc.hw0.dim(), wc.hw1.dim()), (0, 1));
}

#[test]
fn tate_dual_twist_is_tate() {
    for n in -3..=3 {
        let hd = HodgeDatum::tate(n).dual_twist();
        let expected = HodgeDatum::tate(1 - n);
        assert_eq!(hd.finf, expected.finf, "Finf of 1({n})^dual(1)");
        assert_eq!(hd.comparison, expected.comparison);
        assert_eq!(hd.filtration.dim_at(-5), expected.filtration.dim_at(-5));
        for p in -5..=5 {
            assert_eq!(hd.filtration.dim_at(p), expected.filtration.dim_at(p));
        }
    }
}

#[test]
fn duality_on_tate_objects() {
    // 1(0) against 1(1): both sides one-dimensional, pairing value 1
    let wd = weak_duality(&HodgeDatum::tate(0)).unwrap();
    assert_eq!(wd.pairing_hw0.rows(), 1);
    assert!(wd.pairing_hw0[(0, 0)].is_one());
    // perfect for all small twists
    for n in -2..=2 {
        let wd = weak_duality(&HodgeDatum::tate(n)).unwrap();
        assert_eq!(wd.wc.hw0.dim(), wd.wc_dual.hw1.dim());
        assert_eq!(wd.wc.hw1.dim(), wd.wc_dual.hw0.dim());
    }
    // 1(1) paired with 1(0): the Hw1 side carries value 1 as well
    let wd = weak_duality(&HodgeDatum::tate(1)).unwrap();
    assert_eq!(wd.pairing_hw1.rows(), 1);
    assert!(wd.pairing_hw1[(0, 0)].is_one());
}

#[test]
fn duality_on_split_rank_two() {
    let h = HodgeDatum::tate(0).direct_sum(&HodgeDatum::tate(1)).unwrap();
    let wd = weak_duality(&h).unwrap();
    assert_eq!(wd.wc.hw0.dim(), 1);
    assert_eq!(wd.wc.hw1.dim(), 1);
    assert_eq!(wd.pairing_hw0.rows(), 1);
    assert_eq!(wd.pairing_hw1.rows(), 1);
    assert!(!wd.pairing_hw0[(0, 0)].is_zero());
    assert!(!wd.pairing_hw1[(0, 0)].is_zero());
}

#[test]
fn elliptic_h1_weak_data() {
    let e = HodgeDatum::elliptic_h1();
    let wc = weak_cohomology(&e).unwrap();
    assert_eq!(wc.hw0.dim(), 1);
    assert_eq!(wc.hw1.dim(), 0);
    let wd = weak_duality(&e).unwrap();
    assert_eq!(wd.wc_dual.hw1.dim(), 1);
    assert_eq!(wd.wc_dual.hw0.dim(), 0);
    assert!(!wd.pairing_hw0[(0, 0)].is_zero());
}

#[test]
fn dichotomy_for_pure_weights() {
    // pure weight w < 0 has Hw0 = 0; pure weight w > -2 has Hw1 = 0
    for n in -3..=3i64 {
        let h = HodgeDatum::tate(n);
        let w = -2 * n;
        let wc = weak_cohomology(&h).unwrap();
        if w < 0 {
            assert_eq!(wc.hw0.dim(), 0, "weight {w}");
        }
        if w > -2 {
            assert_eq!(wc.hw1.dim(), 0, "weight {w}");
        }
    }
    let e = HodgeDatum::elliptic_h1();
    let wc = weak_cohomology(&e).unwrap();
    assert_eq!(wc.hw1.dim(), 0); // weight 1 > -2
}

#[test]
fn double_dual_dimensions() {
    for n in -2..=2 {
        let h = HodgeDatum::tate(n);
        let dd = h.dual_twist().dual_twist();
        let a = weak_cohomology(&h).unwrap();
        let b = weak_cohomology(&dd).unwrap();
        assert_eq!(a.hw0.dim(), b.hw0.dim());
        assert_eq!(a.hw1.dim(), b.hw1.dim());
    }
    let e = HodgeDatum::elliptic_h1();
    let a = weak_cohomology(&e).unwrap();
    let b = weak_cohomology(&e.dual_twist().dual_twist()).unwrap();
    assert_eq!(a.hw0.dim(), b.hw0.dim());
    assert_eq!(a.hw1.dim(), b.hw1.dim());
}

#[test]
fn weak_complex_assembles_degreewise() {
    // two-term complex: 1(1) in degree 0, 1(0) in degree 1
    let hodge = vec![(0, HodgeDatum::tate(1)), (1, HodgeDatum::tate(0))];
    let wx = weak_complex(&hodge).unwrap();
    // Hw^1 = Hw^1(H^0) + Hw^0(H^1) = 1 + 1
    assert_eq!(wx.complex.dim(1), 2);
    assert_eq!(wx.parts.get(&1), Some(&(1, 1)));
    assert_eq!(wx.complex.dim(0), 0);
    assert_eq!(wx.complex.dim(2), 0);
    // the dimensional exact sequence 0 -> Hw1(H^{i-1}) -> Hw^i -> Hw0(H^i) -> 0
    for (&i, &(a, b)) in &wx.parts {
        assert_eq!(wx.complex.dim(i), a + b);
    }
}

#[test]
fn arch_factor_examples() {
    // 1(0): Gamma_R(s)
    let l = derive_layer(&HodgeDatum::tate(0)).unwrap();
    let g = arch_factor(&[l]).unwrap();
    assert_eq!(g.entries, vec![(GammaKind::GammaR, 0, 1)]);
    // 1(1): Gamma_R(s + 1)
    let l = derive_layer(&HodgeDatum::tate(1)).unwrap();
    let g = arch_factor(&[l]).unwrap();
    assert_eq!(g.entries, vec![(GammaKind::GammaR, 1, 1)]);
    // elliptic H^1 type: Gamma_C(s)
    let l = derive_layer(&HodgeDatum::elliptic_h1()).unwrap();
    let g = arch_factor(&[l]).unwrap();
    assert_eq!(g.entries, vec![(GammaKind::GammaC, 0, 1)]);
}

#[test]
fn archimedean_pole_order_cross_check() {
    // ord_{s=0} L_inf(V, s) = -dim Hw^1(V^dual(1)) for pure V
    let mut data: Vec<HodgeDatum> = (-3..=3).map(HodgeDatum::tate).collect();
    data.push(HodgeDatum::elliptic_h1());
    for h in &data {
        let layer = derive_layer(h).unwrap();
        let g = arch_factor(&[layer]).unwrap();
        let ord = gamma_leading(&g, 0).order;
        let dual = h.dual_twist();
        let hw1 = weak_cohomology(&dual).unwrap().hw1.dim() as i64;
        assert_eq!(ord, -hw1, "cross-check for weight {:?}", h.weight);
    }
}

#[test]
fn malformed_layers_are_rejected() {
    // asymmetric Hodge numbers
    let layer = HodgeLayer {
        weight: 1,
        hodge_numbers: vec![(1, 0, 1)],
        finf_pp: None,
    };
    assert!(matches!(
        arch_factor(&[layer]),
        Err(HodgeError::MalformedHodgeNumbers(_))
    ));
    // eigenvalue dims not summing to h^{pp}
    let layer = HodgeLayer {
        weight: 0,
        hodge_numbers: vec![(0, 0, 2)],
        finf_pp: Some((3, 1)),
    };
    assert!(matches!(
        arch_factor(&[layer]),
        Err(HodgeError::MalformedHodgeNumbers(_))
    ));
}

#[test]
fn invalid_data_is_rejected() {
    // Finf not an involution
    let r = HodgeDatum::new(
        1,
        Weight::Pure(0),
        rational_matrix(&[&[2]]),
        Filtration::new(vec![(0, 1)]).unwrap(),
        PMatrix::identity(1),
    );
    assert!(matches!(r, Err(HodgeError::InvalidDatum(_))));
    // comparison violating conj(P) = Finf P: 1(1) data with comparison 1
    let r = HodgeDatum::new(
        1,
        Weight::Pure(-2),
        rational_matrix(&[&[-1]]),
        Filtration::new(vec![(-1, 1)]).unwrap(),
        PMatrix::identity(1),
    );
    assert!(matches!(r, Err(HodgeError::InvalidDatum(_))));
}

#[test]
fn base_change_preserves_weak_dims() {
    let h = HodgeDatum::tate(0).direct_sum(&HodgeDatum::tate(1)).unwrap();
    let b = rational_matrix(&[&[1, 2], &[0, 1]]);
    let d = rational_matrix(&[&[1, 3], &[0, 2]]);
    let h2 = h.base_change(&b, &d).unwrap();
    let a = weak_cohomology(&h).unwrap();
    let c = weak_cohomology(&h2).unwrap();
    assert_eq!(a.hw0.dim(), c.hw0.dim());
    assert_eq!(a.hw1.dim(), c.hw1.dim());
    // flag-violating de Rham change is rejected
    let bad = rational_matrix(&[&[1, 0], &[1, 1]]);
    assert!(h.base_change(&b, &bad).is_err());
}
