//! Worked examples through the public API.

use endochain::chain::{format_endo, parse_endo, EndoError};
use endochain::combinatorics::{above_diagonal_tuples, below_diagonal_tuples, catalan};
use endochain::enumeration::{
    all_endos, count_endos, filter_endos, partition_by_omega, EndoFilter,
};
use endochain::idempotent::{
    enumerate_id_family, gap_jump_point, id_family_order, ideal_check, idempotent_witness,
    idempotents_with_jumps, image_equals_fixed, no_jump_idempotent_count,
    sparse_nonfixed_predicate, stabilization_index,
};
use endochain::roots::{
    class_members_constructive, class_of, class_order, class_order_ct_variant,
    class_semiring_check, congruence_counterexample, equivalent, idempotent_of_type, type_of,
    TypeDescriptor,
};
use endochain::segment::{segment_classify, SegmentClass};
use endochain::tables::cayley_tables;
use endochain::{Endo, PointSet};

fn e(s: &str) -> Endo {
    parse_endo(s).unwrap()
}

fn set(points: &[usize]) -> PointSet {
    points.iter().copied().collect()
}

#[test]
fn construction_and_parsing() {
    assert_eq!(
        Endo::new(7, &[1, 1, 1, 1, 5, 5, 5]).unwrap(),
        e("1,1,1,1,5,5,5")
    );
    assert_eq!(
        Endo::new(3, &[0, 1, 2]).unwrap(),
        Endo::identity(3).unwrap()
    );
    assert_eq!(
        Endo::new(3, &[2, 0, 1]),
        Err(EndoError::NotMonotone { index: 1 })
    );
    assert_eq!(e("2,2,2,5,5,5,5").n(), 7);
    assert_eq!(format_endo(&Endo::identity(3).unwrap()), "0,1,2");
    assert!(parse_endo("2,1").is_err());
    assert_eq!(Endo::k_plus(4, 1).unwrap(), e("0,2,2,3"));
    assert_eq!(Endo::k_minus(4, 2).unwrap(), e("0,1,1,3"));
    assert_eq!(Endo::constant(3, 1).unwrap(), e("1,1,1"));
}

#[test]
fn operations() {
    assert_eq!(e("0,0,3,3").join(&e("0,2,2,3")).unwrap(), e("0,2,3,3"));
    let a = e("0,1,1");
    assert_eq!(a.join(&a).unwrap(), a);
    assert_eq!(Endo::constant(3, 0).unwrap().join(&a).unwrap(), a);
    assert_eq!(e("0,0,2").compose(&a).unwrap(), e("0,0,1"));
    assert_eq!(a.compose(&Endo::identity(3).unwrap()).unwrap(), a);
    let k2 = Endo::constant(3, 2).unwrap();
    assert_eq!(a.compose(&k2).unwrap(), k2);
    assert_eq!(e("2,2,2,4,5,5,5").power(2).unwrap(), e("2,2,2,5,5,5,5"));
    assert_eq!(e("1,2,2").power(2).unwrap(), e("2,2,2"));
    assert_eq!(a.power(1).unwrap(), a);
}

#[test]
fn omega_and_points() {
    let om = e("2,2,2,4,5,5,5").omega();
    assert_eq!((om.idempotent, om.index), (e("2,2,2,5,5,5,5"), 2));
    let om = Endo::identity(4).unwrap().omega();
    assert_eq!(om.index, 1);
    let om = e("1,2,2").omega();
    assert_eq!((om.idempotent, om.index), (e("2,2,2"), 2));
    assert_eq!(e("2,2,2,4,5,5,5").fixed_points(), set(&[2, 5]));
    assert_eq!(e("1,1,1,1,5,5,5").fixed_points(), set(&[1, 5]));
    assert_eq!(Endo::identity(5).unwrap().fixed_points(), PointSet::full(5));
    assert_eq!(e("0,2,2,3").jump_points(), set(&[1]));
    assert_eq!(e("0,0,3,3,4,4,7,7").jump_points(), set(&[2, 6]));
    for k in 0..5 {
        assert!(Endo::constant(5, k).unwrap().jump_points().is_empty());
    }
    assert!(Endo::identity(5).unwrap().jump_points().is_empty());
    assert!(e("1,1,1,1,5,5,5").is_idempotent());
    assert!(!e("0,0,1").is_idempotent());
}

#[test]
fn idempotent_criteria() {
    assert_eq!(idempotent_witness(&e("0,0,1")), Err(2));
    assert_eq!(idempotent_witness(&Endo::identity(4).unwrap()), Ok(()));
    assert_eq!(idempotent_witness(&e("1,1,1,3,5,5")), Ok(()));
    assert!(image_equals_fixed(&e("1,1,1,1,5,5,5")));
    assert!(!image_equals_fixed(&e("0,0,1")));
    assert!(image_equals_fixed(&Endo::constant(4, 3).unwrap()));
    // a(k) = k+1, a(k+1) = k+2, all else fixed
    assert_eq!(stabilization_index(&e("0,2,3,3,4")), 2);
    assert_eq!(stabilization_index(&e("1,1,1,5,5,5,5")), 1);
    assert_eq!(stabilization_index(&e("1,2,3,3")), 3);
    let a = e("0,0,2,2,4,4,6");
    assert!(sparse_nonfixed_predicate(&a) && a.is_idempotent());
    assert!(!sparse_nonfixed_predicate(&Endo::identity(5).unwrap()));
    let b = e("0,2,3,3,4");
    assert!(!sparse_nonfixed_predicate(&b) && !b.is_idempotent());
}

#[test]
fn id_families() {
    let fam = enumerate_id_family(7, set(&[1, 5])).unwrap();
    assert_eq!(
        fam.members,
        [
            "1,1,1,1,1,5,5",
            "1,1,1,1,5,5,5",
            "1,1,1,5,5,5,5",
            "1,1,5,5,5,5,5"
        ]
        .map(e)
    );
    assert_eq!(
        enumerate_id_family(5, set(&[3])).unwrap().members,
        vec![Endo::constant(5, 3).unwrap()]
    );
    assert_eq!(
        enumerate_id_family(4, set(&[0, 2, 3])).unwrap().members,
        vec![e("0,0,2,3"), e("0,2,2,3")]
    );
    assert_eq!(id_family_order(7, set(&[1, 5])).unwrap(), 4);
    assert_eq!(id_family_order(6, set(&[4])).unwrap(), 1);
    for n in 3..8 {
        for k in 1..n - 1 {
            let f: PointSet = (0..n).filter(|&x| x != k).collect();
            assert_eq!(id_family_order(n, f).unwrap(), 2);
        }
    }
    assert!(enumerate_id_family(4, PointSet::empty()).is_err());
    assert!(enumerate_id_family(4, set(&[4])).is_err());
}

#[test]
fn tables_and_ideal() {
    let t = cayley_tables(&[e("0,0,2"), e("0,1,1")]).unwrap();
    assert!(t.product.iter().flatten().any(|p| *p == e("0,0,1")));
    assert!(!t.product_closed());
    assert!(ideal_check(8, set(&[1, 5])).unwrap().passed());
    assert!(ideal_check(3, set(&[1])).unwrap().passed());
    assert!(ideal_check(3, set(&[0, 1])).is_err());
    let p = e("1,1,5,5,5,5,5,5").compose(&e("2,2,2,5,5,5,5,5")).unwrap();
    assert_eq!(p, e("2,2,5,5,5,5,5,5"));
    assert!(!p.is_idempotent());
}

#[test]
fn jumps_and_segments() {
    assert_eq!(gap_jump_point(&e("2,2,2,5,5,5,5"), 0).unwrap(), 3);
    assert_eq!(gap_jump_point(&e("1,1,1,3,5,5"), 0).unwrap(), 3);
    assert_eq!(gap_jump_point(&e("1,1,1,3,5,5"), 1).unwrap(), 4);
    assert!(gap_jump_point(&e("1,1,1,3,5,5"), 2).is_err());
    assert!(gap_jump_point(&e("0,1,1"), 0).is_err());
    assert_eq!(
        segment_classify(&e("0,0,3,3,4,4,7,7"), 2, 6).unwrap(),
        SegmentClass::ConstantIdentityConstant { k: 3, l: 4 }
    );
    assert_eq!(
        segment_classify(&e("0,0,2,2,2,5,5"), 2, 5).unwrap(),
        SegmentClass::Constant { value: 2 }
    );
    let none = idempotents_with_jumps(3, PointSet::empty()).unwrap();
    let mut expected = ["0,0,0", "1,1,1", "2,2,2", "0,1,2", "0,1,1", "1,1,2"]
        .map(e)
        .to_vec();
    expected.sort();
    assert_eq!(none, expected);
    assert!(idempotents_with_jumps(4, set(&[1]))
        .unwrap()
        .contains(&e("0,2,2,3")));
    assert!(idempotents_with_jumps(6, set(&[3, 4]))
        .unwrap()
        .contains(&e("1,1,1,3,5,5")));
    assert_eq!(no_jump_idempotent_count(2), 3);
    assert_eq!(no_jump_idempotent_count(3), 6);
    assert_eq!(no_jump_idempotent_count(7), 28);
}

#[test]
fn root_classes() {
    assert!(equivalent(&e("2,2,2,4,5,5,5"), &e("2,2,2,5,5,5,5")).unwrap());
    assert!(!equivalent(&e("1,1,1,5,5,5,5"), &e("2,2,2,5,5,5,5")).unwrap());
    let td = type_of(&e("1,1,1,3,5,5"));
    assert_eq!(
        (td.blocks.clone(), td.jumps.clone()),
        (vec![(1, 1), (3, 3), (5, 5)], vec![3, 4])
    );
    let id7 = TypeDescriptor {
        n: 7,
        blocks: vec![(0, 6)],
        jumps: vec![],
    };
    assert_eq!(
        idempotent_of_type(&id7).unwrap(),
        Endo::identity(7).unwrap()
    );
    let eps1 = e("2,2,2,5,5,5,5");
    assert_eq!(class_of(&eps1).unwrap().len(), 4);
    assert_eq!(
        class_members_constructive(&type_of(&eps1)).unwrap(),
        class_of(&eps1).unwrap()
    );
    assert_eq!(class_of(&Endo::identity(4).unwrap()).unwrap().len(), 1);
    assert_eq!(class_order(&type_of(&eps1)).unwrap(), 4);
    let odd = type_of(&e("1,1,1,5,5,5,5"));
    assert_eq!(
        (
            class_order(&odd).unwrap(),
            class_order_ct_variant(&odd).unwrap()
        ),
        (2, 4)
    );
    assert_eq!(class_order(&id7).unwrap(), 1);
    let r = class_semiring_check(&type_of(&eps1)).unwrap();
    assert!(r.passed());
    assert_eq!(r.instances, 32);
    assert!(congruence_counterexample(2).unwrap().is_none());
}

#[test]
fn counting() {
    assert_eq!([0, 2, 3, 5].map(catalan), [1, 2, 5, 42]);
    assert_eq!(above_diagonal_tuples(2), vec![vec![1, 2], vec![2, 2]]);
    assert_eq!(above_diagonal_tuples(3).len(), 5);
    assert_eq!(below_diagonal_tuples(3), vec![vec![0, 0, 0], vec![0, 0, 1]]);
}

#[test]
fn enumeration() {
    let c3: Vec<Endo> = all_endos(3).unwrap().collect();
    assert_eq!(c3.len(), 10);
    assert!(c3.contains(&e("0,0,2")) && c3.contains(&e("0,1,1")));
    assert_eq!(all_endos(1).unwrap().collect::<Vec<_>>(), vec![e("0")]);
    assert_eq!(all_endos(7).unwrap().count(), 1716);
    assert_eq!([1, 3, 8].map(count_endos), [1, 10, 6435]);
    // three constants, the identity, and 0,0,2  0,1,1  0,2,2  1,1,2
    assert_eq!(filter_endos(3, EndoFilter::Idempotent).unwrap().count(), 8);
    let ex: Vec<Endo> = filter_endos(7, EndoFilter::Idempotent)
        .unwrap()
        .with_filter(EndoFilter::FixedSet(set(&[1, 5])))
        .collect();
    assert_eq!(ex, enumerate_id_family(7, set(&[1, 5])).unwrap().members);
    assert_eq!(
        filter_endos(4, EndoFilter::FixesAll(PointSet::empty()))
            .unwrap()
            .count(),
        35
    );
    assert_eq!(partition_by_omega(3).unwrap().len(), 8);
    let p2 = partition_by_omega(2).unwrap();
    assert_eq!(p2.len(), 3);
    assert!(p2.values().all(|b| b.len() == 1));
}
