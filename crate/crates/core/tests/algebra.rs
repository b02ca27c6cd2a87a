use std::collections::{HashSet, VecDeque};

use num_bigint::BigUint;
use proptest::prelude::*;

use rta_core::group::{in_alternating, is_primitive, is_transitive, minimal_block_system, Bsgs};
use rta_core::{decode, encode, Gate, Parity, Perm};

fn perm_strategy(degree: usize) -> impl Strategy<Value = Perm> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn gate_strategy(k: usize, n: usize) -> impl Strategy<Value = Gate> {
    perm_strategy(k.pow(n as u32)).prop_map(move |p| Gate::from_perm(k, n, p).unwrap())
}

/// Parity by counting inversions.
fn inversion_parity(p: &Perm) -> Parity {
    let v = p.images();
    let mut inv = 0usize;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        Parity::Even
    } else {
        Parity::Odd
    }
}

fn enumerate(degree: usize, gens: &[Perm]) -> HashSet<Vec<u32>> {
    let id: Vec<u32> = (0..degree as u32).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y: Vec<u32> = x.iter().map(|&i| g.images()[i as usize]).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

proptest! {
    #[test]
    fn encode_decode_round_trip(k in 2usize..6, n in 1usize..5, seed in any::<u64>()) {
        let points = k.pow(n as u32);
        let p = (seed % points as u64) as usize;
        let t = decode(p, k, n).unwrap();
        prop_assert_eq!(encode(k, &t).unwrap(), p);
    }

    #[test]
    fn parallel_is_associative(f in gate_strategy(2, 1), g in gate_strategy(2, 2), h in gate_strategy(2, 1)) {
        let left = f.parallel(&g).unwrap().parallel(&h).unwrap();
        let right = f.parallel(&g.parallel(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn serial_is_associative(f in gate_strategy(3, 2), g in gate_strategy(3, 1), h in gate_strategy(3, 2)) {
        let left = f.serial(&g).unwrap().serial(&h).unwrap();
        let right = f.serial(&g.serial(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn serial_applies_left_operand_first(f in gate_strategy(3, 2), g in gate_strategy(3, 2), p in 0usize..9) {
        let x = decode(p, 3, 2).unwrap();
        let composed = f.serial(&g).unwrap().apply(&x).unwrap();
        prop_assert_eq!(composed, g.apply(&f.apply(&x).unwrap()).unwrap());
    }

    #[test]
    fn interchange_law(a in gate_strategy(2, 1), b in gate_strategy(2, 2), c in gate_strategy(2, 1), d in gate_strategy(2, 2)) {
        let left = a.parallel(&b).unwrap().serial(&c.parallel(&d).unwrap()).unwrap();
        let right = a.serial(&c).unwrap().parallel(&b.serial(&d).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn parity_matches_inversion_count(p in perm_strategy(9)) {
        prop_assert_eq!(p.parity(), inversion_parity(&p));
    }

    #[test]
    fn sign_is_multiplicative(f in gate_strategy(2, 3), g in gate_strategy(2, 3)) {
        let product = f.serial(&g).unwrap().sign();
        let expected = if f.sign() == g.sign() { Parity::Even } else { Parity::Odd };
        prop_assert_eq!(product, expected);
    }

    #[test]
    fn padding_multiplies_cycles(f in gate_strategy(3, 1)) {
        // f ⊕ i_1 repeats each cycle three times
        let padded = f.pad_to(2).unwrap();
        prop_assert_eq!(padded.perm().cycles().len(), 3 * f.perm().cycles().len());
    }

    #[test]
    fn inverse_undoes_gate(f in gate_strategy(2, 3)) {
        prop_assert!(f.serial(&f.inverse()).unwrap().is_identity());
    }

    #[test]
    fn json_round_trip(f in gate_strategy(3, 2)) {
        prop_assert_eq!(Gate::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn alternating_test_agrees_with_group(a in perm_strategy(6), b in perm_strategy(6)) {
        let gens = [a, b];
        let elements = enumerate(6, &gens);
        let all_even = elements.iter().all(|e| inversion_parity(&Perm::from_images(e.clone()).unwrap()) == Parity::Even);
        prop_assert_eq!(in_alternating(&gens), all_even);
    }

    #[test]
    fn bsgs_order_matches_enumeration(a in perm_strategy(7), b in perm_strategy(7)) {
        let gens = [a, b];
        let bsgs = Bsgs::build(7, &gens).unwrap();
        prop_assert_eq!(bsgs.order(), BigUint::from(enumerate(7, &gens).len()));
    }

    #[test]
    fn block_systems_are_invariant(a in perm_strategy(12), b in perm_strategy(12), p in 1usize..12) {
        let gens = [a, b];
        if is_transitive(12, &gens) {
            if let Some(blocks) = minimal_block_system(12, &gens, 0, p).unwrap() {
                prop_assert!(blocks.is_invariant(&gens));
                prop_assert_eq!(blocks.block_of(0), blocks.block_of(p));
                prop_assert!(!is_primitive(12, &gens));
            }
        }
    }
}

#[test]
fn imprimitive_wreath_has_blocks() {
    // S_3 wr S_2 in imprimitive action on 6 points: blocks {0,1,2}, {3,4,5}
    let gens = [
        Perm::from_cycles(6, &[&[0, 1]]).unwrap(),
        Perm::from_cycles(6, &[&[0, 1, 2]]).unwrap(),
        Perm::from_cycles(6, &[&[0, 3], &[1, 4], &[2, 5]]).unwrap(),
    ];
    let blocks = minimal_block_system(6, &gens, 0, 1).unwrap().unwrap();
    assert_eq!(blocks.blocks(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
    assert!(!is_primitive(6, &gens));
    assert_eq!(Bsgs::build(6, &gens).unwrap().order(), BigUint::from(72u32));
}

#[test]
fn membership_matches_enumeration_for_small_groups() {
    let gens = [
        Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap(),
        Perm::from_cycles(5, &[&[1, 4], &[2, 3]]).unwrap(),
    ];
    let elements = enumerate(5, &gens);
    assert_eq!(elements.len(), 10);
    let bsgs = Bsgs::build(5, &gens).unwrap();
    let mut all = vec![Vec::new()];
    for _ in 0..5 {
        all = all
            .into_iter()
            .flat_map(|p: Vec<u32>| (0..5u32).filter(|i| !p.contains(i)).map(|i| [p.clone(), vec![i]].concat()).collect::<Vec<_>>())
            .collect();
    }
    for images in all {
        let inside = elements.contains(&images);
        assert_eq!(bsgs.contains(&Perm::from_images(images).unwrap()).unwrap(), inside);
    }
}
