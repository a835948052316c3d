#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use vlink_core::moves::{apply_event, PairOp};
use vlink_core::surface::{reduced_words, Letter};
use vlink_core::*;

pub fn h(s: &str, g: u32) -> H1Class {
    H1Class::parse(s, g).unwrap()
}

pub fn ambient(g: u32, k: i64, dual: &H1Class) -> Ambient {
    Ambient::new(BundleData::product(g).unwrap(), FieldData::new(k, dual.clone())).unwrap()
}

/// Relator of the genus-`g` surface written out by hand.
pub fn relator(g: u32) -> Vec<Letter> {
    let mut r = Vec::new();
    for i in 0..g {
        let (a, b) = (2 * i, 2 * i + 1);
        r.extend([Letter::new(a, false), Letter::new(b, false), Letter::new(a, true), Letter::new(b, true)]);
    }
    r
}

fn reduce(w: Vec<Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for l in w {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// All trivial freely reduced words of length at most `max_len`, generated from the
/// empty word by inserting cyclic rotations of the relator or its inverse at every
/// position and freely reducing, keeping intermediate words within `bound`.
pub fn trivial_words(g: u32, max_len: usize, bound: usize) -> HashSet<Vec<Letter>> {
    let r = relator(g);
    let rinv: Vec<Letter> = r.iter().rev().map(|l| l.inv()).collect();
    let n = r.len();
    let mut pieces = Vec::new();
    for rel in [&r, &rinv] {
        for s in 0..n {
            pieces.push((0..n).map(|j| rel[(s + j) % n]).collect::<Vec<_>>());
        }
    }
    let mut seen: HashSet<Vec<Letter>> = HashSet::new();
    seen.insert(Vec::new());
    let mut queue = VecDeque::from([Vec::new()]);
    while let Some(w) = queue.pop_front() {
        for pos in 0..=w.len() {
            for p in &pieces {
                let mut c = w[..pos].to_vec();
                c.extend_from_slice(p);
                c.extend_from_slice(&w[pos..]);
                let c = reduce(c);
                if c.len() <= bound && seen.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
    }
    seen.retain(|w| w.len() <= max_len);
    seen
}

/// Depth-first enumeration of freely reduced words up to `max_len`.
pub fn each_reduced_word(rank: u32, max_len: usize, f: &mut dyn FnMut(&[Letter])) {
    fn go(rank: u32, max_len: usize, w: &mut Vec<Letter>, f: &mut dyn FnMut(&[Letter])) {
        f(w);
        if w.len() == max_len {
            return;
        }
        for gen in 0..rank {
            for inverse in [false, true] {
                let l = Letter::new(gen, inverse);
                if w.last() == Some(&l.inv()) {
                    continue;
                }
                w.push(l);
                go(rank, max_len, w, f);
                w.pop();
            }
        }
    }
    go(rank, max_len, &mut Vec::new(), f);
}

pub fn random_word(rng: &mut ChaCha8Rng, g: u32, max_len: usize) -> SurfaceWord {
    let len = rng.gen_range(0..=max_len);
    SurfaceWord::new((0..len).map(|_| Letter::new(rng.gen_range(0..2 * g), rng.gen_bool(0.5))))
}

pub fn random_class(rng: &mut ChaCha8Rng, g: u32, bound: i64) -> H1Class {
    H1Class::from_coords((0..2 * g).map(|_| rng.gen_range(-bound..=bound)).collect()).unwrap()
}

pub struct GenOptions {
    pub components: usize,
    pub events: usize,
    /// include stabilizations (not homotopy moves)
    pub stabilizations: bool,
    /// allow a component that is not a fiber power
    pub opaque: bool,
}

/// A random script that runs; events that would fail are skipped during generation.
pub fn random_script(rng: &mut ChaCha8Rng, amb: &Ambient, opts: &GenOptions) -> HomotopyScript {
    let g = amb.genus();
    let mut decls: Vec<ComponentDecl> = (0..opts.components)
        .map(|i| {
            let mut d = ComponentDecl::fiber(&format!("K{}", i + 1), rng.gen_range(1..=2));
            d.kinks = rng.gen_range(-1..=1);
            d.clasped = rng.gen_bool(0.3);
            d
        })
        .collect();
    if opts.opaque {
        decls[0].base = Pi1MElement::horizontal(SurfaceWord::generator(rng.gen_range(0..2 * g)));
    }
    let mut script = HomotopyScript::new("random", amb.clone(), decls);
    let mut state = script.initial_states();
    let names: Vec<String> = script.components.iter().map(|c| c.name.clone()).collect();
    while script.events.len() < opts.events {
        let c = names[rng.gen_range(0..names.len())].clone();
        let ev = match rng.gen_range(0..11) {
            0 | 1 => {
                let mut d = names[rng.gen_range(0..names.len())].clone();
                if d == c {
                    d = names.iter().find(|n| **n != c).cloned().unwrap_or(d);
                }
                let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
                MoveEvent::Cross { a: c, b: d, sign }
            }
            2 => MoveEvent::Drag { comp: c, path: random_class(rng, g, 2) },
            3 => MoveEvent::Rot { comp: c, n: rng.gen_range(-3..=3) },
            4 => MoveEvent::Fib { comp: c, n: rng.gen_range(-3..=3) },
            5 => MoveEvent::KinkSlide { comp: c, n: rng.gen_range(-3..=3) },
            6 => {
                let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
                MoveEvent::SelfCross { comp: c, sign }
            }
            7 => {
                let writhe = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
                let op = if rng.gen_bool(0.5) { PairOp::Create } else { PairOp::Cancel };
                MoveEvent::KinkPair { comp: c, writhe, op }
            }
            8 => {
                if rng.gen_bool(0.5) {
                    MoveEvent::Clasp { comp: c }
                } else {
                    MoveEvent::Unclasp { comp: c }
                }
            }
            9 if opts.stabilizations => MoveEvent::VStab { comp: c, i: rng.gen_range(-2..=2) },
            10 if opts.stabilizations => {
                MoveEvent::LegStab { comp: c, pos: rng.gen_range(-1..=2), neg: rng.gen_range(-1..=2) }
            }
            _ => continue,
        };
        let mut trial = state.clone();
        if apply_event(amb, &mut trial, &ev).is_ok() {
            state = trial;
            script.push(ev);
        }
    }
    script
}

/// Drop every event that fails when replayed from `start`.
pub fn keep_valid(amb: &Ambient, start: &[ComponentState], events: &mut Vec<MoveEvent>) {
    let mut state = start.to_vec();
    events.retain(|e| {
        let mut trial = state.clone();
        let ok = apply_event(amb, &mut trial, e).is_ok();
        if ok {
            state = trial;
        }
        ok
    });
}

/// Append crossings so that every pair of components has signed crossing count zero.
pub fn balance_crossings(script: &mut HomotopyScript) {
    let mut totals: Vec<((String, String), i64)> = Vec::new();
    for e in &script.events {
        if let MoveEvent::Cross { a, b, sign } = e {
            let key = if a < b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
            match totals.iter_mut().find(|(k, _)| *k == key) {
                Some((_, t)) => *t += sign.value(),
                None => totals.push((key, sign.value())),
            }
        }
    }
    for ((a, b), t) in totals {
        let sign = if t > 0 { Sign::Neg } else { Sign::Pos };
        for _ in 0..t.abs() {
            script.push(MoveEvent::Cross { a: a.clone(), b: b.clone(), sign });
        }
    }
}

/// Every central shift realized by conjugating by a horizontal word of length at most 6.
pub fn shift_oracle(field: &FieldData) -> BTreeSet<i64> {
    let mut out = BTreeSet::new();
    for w in reduced_words(2 * field.genus(), 6) {
        let gamma = Pi1MElement::horizontal(w);
        out.insert(conj_act(field, &gamma, EVFiberElement::new(1, 0)).unwrap().central);
    }
    out
}

pub fn fiber_term(sign: Sign, l: (i64, i64), r: (i64, i64)) -> Fig8Term {
    Fig8Term {
        sign,
        pair: (0, 1),
        left: LiftClass::FiberPower(EVFiberElement::new(l.0, l.1)),
        right: LiftClass::FiberPower(EVFiberElement::new(r.0, r.1)),
    }
}
