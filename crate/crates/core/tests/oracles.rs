//! Cross-checks against independent brute-force computations.

mod common;

use std::collections::BTreeSet;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vlink_core::surface::Letter;
use vlink_core::*;

// bilinear expansion over the basis, using only the values on basis pairs
fn intersection_oracle(x: &H1Class, y: &H1Class) -> i64 {
    let basis = |i: usize, j: usize| -> i64 {
        match (i / 2 == j / 2, i % 2, j % 2) {
            (true, 0, 1) => 1,
            (true, 1, 0) => -1,
            _ => 0,
        }
    };
    let (a, b) = (x.coords(), y.coords());
    let mut total = 0;
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            total += x * y * basis(i, j);
        }
    }
    total
}

#[test]
fn intersection_matches_expansion() {
    let x = h("2*A1 + B2", 2);
    let y = h("A1 - B1", 2);
    assert_eq!(intersection_oracle(&x, &y), -2);
    assert_eq!(x.intersection_number(&y).unwrap(), -2);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..2000 {
        let g = rng.gen_range(1..=4);
        let (x, y) = (random_class(&mut rng, g, 9), random_class(&mut rng, g, 9));
        assert_eq!(x.intersection_number(&y).unwrap(), intersection_oracle(&x, &y));
    }
}

#[test]
fn word_problem_matches_relator_insertion() {
    let trivial = trivial_words(2, 8, 8);
    // the relator insertion search must also be stable when allowed longer detours
    assert_eq!(trivial, trivial_words(2, 8, 12));
    let group = SurfaceGroup::with_genus(2).unwrap();
    let mut checked = 0usize;
    let mut hits = 0usize;
    each_reduced_word(4, 8, &mut |w: &[Letter]| {
        let word = SurfaceWord::new(w.iter().copied());
        let expected = trivial.contains(w);
        assert_eq!(group.is_trivial(&word), expected, "word {word}");
        checked += 1;
        hits += expected as usize;
    });
    assert_eq!(checked, 1 + 8 * (7usize.pow(8) - 1) / 6);
    assert_eq!(hits, trivial.len());
}

#[test]
fn genus_three_words_match_relator_insertion() {
    let trivial = trivial_words(3, 6, 10);
    let group = SurfaceGroup::with_genus(3).unwrap();
    each_reduced_word(6, 6, &mut |w: &[Letter]| {
        let word = SurfaceWord::new(w.iter().copied());
        assert_eq!(group.is_trivial(&word), trivial.contains(w), "word {word}");
    });
}

#[test]
fn conjugate_words_are_never_rejected() {
    let group = SurfaceGroup::with_genus(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..3000 {
        let u = random_word(&mut rng, 2, 10);
        let z = random_word(&mut rng, 2, 6);
        // insert a relator conjugate too, so the pair differs by more than free reduction
        let r = SurfaceWord::new(relator(2)).conjugate_by(&random_word(&mut rng, 2, 3));
        let v = u.conjugate_by(&z).multiply(&r);
        assert_ne!(group.conjugate(&u, &v), Conjugacy::No, "{u} ~ {v}");
    }
}

#[test]
fn fig8_equal_matches_conjugator_enumeration() {
    // coefficients chosen so words of length 6 reach every shift the central range needs
    for dual in ["3*A1 + 2*A2", "2*A2"] {
        for k in [1, 2] {
            let amb = ambient(2, k, &h(dual, 2));
            let shifts = shift_oracle(&amb.field);
            let reach = *shifts.iter().max().unwrap();
            assert!(reach >= 20, "enumeration too short for dual {dual}");
            let term = |l: (i64, i64), r: (i64, i64)| Fig8Term {
                sign: Sign::Pos,
                pair: (0, 1),
                left: LiftClass::FiberPower(EVFiberElement::new(l.0, l.1)),
                right: LiftClass::FiberPower(EVFiberElement::new(r.0, r.1)),
            };
            for p in -3..=3 {
                for q in -3..=3 {
                    for r1 in -10..=10 {
                        for s1 in -10..=10 {
                            let t1 = term((p, r1), (q, s1));
                            for r2 in -10..=10 {
                                for s2 in -10..=10 {
                                    let t2 = term((p, r2), (q, s2));
                                    let oracle = shifts.iter().any(|m| p * m == r2 - r1 && q * m == s2 - s1);
                                    let got = fig8_equal(&t1, &t2, &amb);
                                    let want = if oracle { Fig8Eq::Equal } else { Fig8Eq::Distinct };
                                    assert_eq!(got, want, "dual {dual} k {k} {t1} vs {t2}");
                                }
                            }
                        }
                    }
                }
            }
            // mismatched powers are never conjugate
            assert_eq!(fig8_equal(&term((1, 0), (1, 0)), &term((2, 0), (1, 0)), &amb), Fig8Eq::Distinct);
        }
    }
}

#[test]
fn central_shift_group() {
    for (dual, k) in [("A2", 1), ("A2", 3), ("2*A1 + 4*B2", 1), ("0", 2), ("A2", 0), ("B1 - 3*A2", -2)] {
        let field = FieldData::new(k, h(dual, 2));
        let shifts = shift_oracle(&field);
        let m = field.shift_modulus();
        if m == 0 {
            assert_eq!(shifts, BTreeSet::from([0]));
            continue;
        }
        assert!(shifts.iter().all(|s| s % m == 0));
        for n in -3..=3 {
            assert!(shifts.contains(&(n * m)), "dual {dual} k {k} misses {}", n * m);
        }
    }
}

// exhaustive search for a perfect matching of opposite-sign Equal terms
fn pairing_exists(terms: &[Fig8Term], amb: &Ambient) -> bool {
    if terms.is_empty() {
        return true;
    }
    let first = &terms[0];
    (1..terms.len()).any(|j| {
        first.sign != terms[j].sign && fig8_equal(first, &terms[j], amb) == Fig8Eq::Equal && {
            let rest: Vec<Fig8Term> =
                terms.iter().enumerate().filter(|(i, _)| *i != 0 && *i != j).map(|(_, t)| t.clone()).collect();
            pairing_exists(&rest, amb)
        }
    })
}

#[test]
fn is_zero_against_exhaustive_pairing() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for k in [1, 2] {
        let amb = ambient(2, k, &h("A2", 2));
        for _ in 0..4000 {
            let n = rng.gen_range(0..=6);
            let terms: Vec<Fig8Term> = (0..n)
                .map(|_| Fig8Term {
                    sign: if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg },
                    pair: (0, 1),
                    left: LiftClass::FiberPower(EVFiberElement::new(1, 2 * rng.gen_range(-1..=1))),
                    right: LiftClass::FiberPower(EVFiberElement::new(rng.gen_range(1..=2), 2 * rng.gen_range(-1..=1))),
                })
                .collect();
            let v = NuValue::new(amb.field.clone(), terms.clone());
            let expect = if pairing_exists(&terms, &amb) { NuVerdict::Zero } else { NuVerdict::Nonzero };
            assert_eq!(is_zero(&v, &amb), expect, "{terms:?}");
        }
    }
}

#[test]
fn h_v_against_euler_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..500 {
        let g = rng.gen_range(2..=3);
        let field = FieldData::new(rng.gen_range(-4..=4), random_class(&mut rng, g, 4));
        let rho = random_class(&mut rng, g, 4);
        let expect = field.k * intersection_oracle(&field.dual, &rho);
        let e = euler_eval_torus(&field, &TorusKind::Drag(rho.clone())).unwrap();
        assert_eq!(e % 2, 0);
        assert_eq!(e / 2, expect);
        assert_eq!(h_v(&field, &LoopDescriptor(vec![LoopGen::Drag(rho)])).unwrap(), expect);
    }
}
