//! State machine for multi-component V-transverse curves under generic homotopies.
//!
//! Each component carries its homotopy class in `pi_1(M)`, the `F`-exponent of its
//! lift to `E_V`, a ledger of kinks, and the Legendrian stabilization counters. Events
//! are applied in order; inter-component crossings emit figure-8 terms.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, EventError, ScriptError};
use crate::extension::{h_v, Ambient, EVFiberElement, LoopDescriptor, LoopGen, Pi1MElement};
use crate::nu::{Fig8Term, LiftClass};
use crate::surface::H1Class;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

/// A local kink, typed by its (rotation, writhe) contribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KinkType {
    /// (+1, -1)
    PosNeg,
    /// (-1, +1)
    NegPos,
    /// (+1, +1)
    PosPos,
    /// (-1, -1)
    NegNeg,
}

impl KinkType {
    pub const ALL: [KinkType; 4] = [KinkType::PosNeg, KinkType::NegPos, KinkType::PosPos, KinkType::NegNeg];

    pub fn rotation(self) -> i64 {
        match self {
            KinkType::PosNeg | KinkType::PosPos => 1,
            KinkType::NegPos | KinkType::NegNeg => -1,
        }
    }

    pub fn writhe(self) -> i64 {
        match self {
            KinkType::NegPos | KinkType::PosPos => 1,
            KinkType::PosNeg | KinkType::NegNeg => -1,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Multiset of kinks on one component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct KinkLedger([u64; 4]);

impl KinkLedger {
    pub fn count(&self, t: KinkType) -> u64 {
        self.0[t.index()]
    }

    pub fn add(&mut self, t: KinkType, n: u64) {
        self.0[t.index()] += n;
    }

    fn remove(&mut self, t: KinkType, n: u64) -> bool {
        let slot = &mut self.0[t.index()];
        if *slot < n {
            return false;
        }
        *slot -= n;
        true
    }

    pub fn rotation(&self) -> i64 {
        KinkType::ALL.iter().map(|&t| t.rotation() * self.count(t) as i64).sum()
    }

    pub fn writhe(&self) -> i64 {
        KinkType::ALL.iter().map(|&t| t.writhe() * self.count(t) as i64).sum()
    }
}

/// The two ways to create a cancelling pair of kinks, named by the writhe of the
/// kink with positive rotation: `Neg` is (1,-1)+(-1,1), `Pos` is (1,1)+(-1,-1).
pub fn kink_pair(writhe: Sign) -> [KinkType; 2] {
    match writhe {
        Sign::Neg => [KinkType::PosNeg, KinkType::NegPos],
        Sign::Pos => [KinkType::PosPos, KinkType::NegNeg],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairOp {
    Create,
    Cancel,
}

/// One elementary event of a generic homotopy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MoveEvent {
    /// double point between two distinct components
    Cross {
        a: String,
        b: String,
        sign: Sign,
    },
    SelfCross {
        comp: String,
        sign: Sign,
    },
    /// drag a fiber-power component around a loop in the base
    Drag {
        comp: String,
        path: H1Class,
    },
    Rot {
        comp: String,
        n: i64,
    },
    Fib {
        comp: String,
        n: i64,
    },
    KinkSlide {
        comp: String,
        n: i64,
    },
    /// pass to the `i`-th V-transverse stabilization
    VStab {
        comp: String,
        i: i64,
    },
    KinkPair {
        comp: String,
        writhe: Sign,
        op: PairOp,
    },
    Clasp {
        comp: String,
    },
    Unclasp {
        comp: String,
    },
    LegStab {
        comp: String,
        pos: i64,
        neg: i64,
    },
}

impl MoveEvent {
    pub fn components(&self) -> Vec<&str> {
        match self {
            MoveEvent::Cross { a, b, .. } => vec![a, b],
            MoveEvent::SelfCross { comp, .. }
            | MoveEvent::Drag { comp, .. }
            | MoveEvent::Rot { comp, .. }
            | MoveEvent::Fib { comp, .. }
            | MoveEvent::KinkSlide { comp, .. }
            | MoveEvent::VStab { comp, .. }
            | MoveEvent::KinkPair { comp, .. }
            | MoveEvent::Clasp { comp }
            | MoveEvent::Unclasp { comp }
            | MoveEvent::LegStab { comp, .. } => vec![comp],
        }
    }

    /// The event that undoes this one when run backwards in time.
    pub fn inverse(&self) -> Self {
        use MoveEvent::*;
        match self.clone() {
            Cross { a, b, sign } => Cross { a, b, sign: sign.flip() },
            SelfCross { comp, sign } => SelfCross { comp, sign: sign.flip() },
            Drag { comp, path } => Drag { comp, path: -&path },
            Rot { comp, n } => Rot { comp, n: -n },
            Fib { comp, n } => Fib { comp, n: -n },
            KinkSlide { comp, n } => KinkSlide { comp, n: -n },
            VStab { comp, i } => VStab { comp, i: -i },
            KinkPair { comp, writhe, op } => KinkPair {
                comp,
                writhe,
                op: match op {
                    PairOp::Create => PairOp::Cancel,
                    PairOp::Cancel => PairOp::Create,
                },
            },
            Clasp { comp } => Unclasp { comp },
            Unclasp { comp } => Clasp { comp },
            LegStab { comp, pos, neg } => LegStab { comp, pos: -pos, neg: -neg },
        }
    }

    /// Whether the event is part of a homotopy (stabilization events are not).
    pub fn is_homotopy_move(&self) -> bool {
        !matches!(self, MoveEvent::VStab { .. } | MoveEvent::LegStab { .. })
    }
}

/// Declared initial data of a component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecl {
    pub name: String,
    pub base: Pi1MElement,
    /// initial V-transverse stabilization level
    pub kinks: i64,
    pub clasped: bool,
}

impl ComponentDecl {
    pub fn fiber(name: &str, power: i64) -> Self {
        Self { name: name.to_string(), base: Pi1MElement::fiber(power), kinks: 0, clasped: false }
    }

    pub fn clasped(mut self) -> Self {
        self.clasped = true;
        self
    }
}

/// Current state of one component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentState {
    pub name: String,
    pub base: Pi1MElement,
    /// `Some(p)` when the component is homotopic to `f^p`
    pub fiber_power: Option<i64>,
    /// exponent `r` of the lift `F^r f~^p`
    pub ev_central: i64,
    pub kink_ledger: KinkLedger,
    pub rot_offset: i64,
    pub writhe_offset: i64,
    pub leg_stabs: (i64, i64),
    pub clasped: bool,
    pub self_parity: bool,
    pub rot_loops: i64,
    pub fib_loops: i64,
    pub kink_slides: i64,
    pub dragged: H1Class,
}

impl ComponentState {
    pub fn new(decl: &ComponentDecl, amb: &Ambient) -> Self {
        let mut s = Self {
            name: decl.name.clone(),
            base: decl.base.clone(),
            fiber_power: decl.base.fiber_power(&amb.group),
            ev_central: 0,
            kink_ledger: KinkLedger::default(),
            rot_offset: 0,
            writhe_offset: 0,
            leg_stabs: (0, 0),
            clasped: decl.clasped,
            self_parity: false,
            rot_loops: 0,
            fib_loops: 0,
            kink_slides: 0,
            dragged: H1Class::zero(amb.genus()),
        };
        s.stabilize(decl.kinks);
        s
    }

    /// Add `i` framed-neutral kink pairs: net rotation `2i`, net writhe 0, lift shifted by `F^{2i}`.
    fn stabilize(&mut self, i: i64) {
        let pair = if i >= 0 { [KinkType::PosNeg, KinkType::PosPos] } else { [KinkType::NegPos, KinkType::NegNeg] };
        for t in pair {
            self.kink_ledger.add(t, i.unsigned_abs());
            self.rot_offset += t.rotation() * i.abs();
            self.writhe_offset += t.writhe() * i.abs();
        }
        self.ev_central += 2 * i;
    }

    pub fn lift(&self) -> LiftClass {
        match self.fiber_power {
            Some(p) => LiftClass::FiberPower(EVFiberElement::new(p, self.ev_central)),
            None => LiftClass::Opaque { base: self.base.clone(), central: self.ev_central },
        }
    }

    /// V-transverse stabilization level read off from the lift.
    pub fn level(&self) -> i64 {
        self.ev_central.div_euclid(2)
    }
}

/// Result of applying a single event.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Applied {
    pub term: Option<Fig8Term>,
    pub self_crossings: Vec<Sign>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub index: usize,
    pub event: MoveEvent,
    pub applied: Applied,
}

fn find(comps: &[ComponentState], name: &str) -> Result<usize, EventError> {
    comps.iter().position(|c| c.name == name).ok_or_else(|| EventError::UnknownComponent(name.to_string()))
}

/// Apply one event to the component states.
pub fn apply_event(amb: &Ambient, comps: &mut [ComponentState], event: &MoveEvent) -> Result<Applied, EventError> {
    let mut out = Applied::default();
    match event {
        MoveEvent::Cross { a, b, sign } => {
            let ia = find(comps, a)?;
            let ib = find(comps, b)?;
            if ia == ib {
                return Err(EventError::SameComponent(a.clone()));
            }
            let (lo, hi) = (ia.min(ib), ia.max(ib));
            out.term = Some(Fig8Term { sign: *sign, pair: (lo, hi), left: comps[lo].lift(), right: comps[hi].lift() });
        }
        MoveEvent::SelfCross { comp, sign } => {
            let c = &mut comps[find(comps, comp)?];
            c.self_parity = !c.self_parity;
            out.self_crossings.push(*sign);
        }
        MoveEvent::Drag { comp, path } => {
            let idx = find(comps, comp)?;
            if comps[idx].fiber_power.is_none() {
                return Err(EventError::DragOnNonFiber(comp.clone()));
            }
            let h = h_v(&amb.field, &LoopDescriptor(vec![LoopGen::Drag(path.clone())]))?;
            let c = &mut comps[idx];
            c.dragged = c.dragged.checked_add(path)?;
            c.stabilize(h);
        }
        MoveEvent::Rot { comp, n } => {
            comps[find(comps, comp)?].rot_loops += n;
        }
        MoveEvent::Fib { comp, n } => {
            let c = &mut comps[find(comps, comp)?];
            if c.fiber_power.is_some() {
                return Err(EventError::FibOnFiberPower(comp.clone()));
            }
            c.fib_loops += n;
        }
        MoveEvent::KinkSlide { comp, n } => {
            comps[find(comps, comp)?].kink_slides += n;
        }
        MoveEvent::VStab { comp, i } => {
            comps[find(comps, comp)?].stabilize(*i);
        }
        MoveEvent::KinkPair { comp, writhe, op } => {
            let c = &mut comps[find(comps, comp)?];
            let pair = kink_pair(*writhe);
            match op {
                PairOp::Create => pair.iter().for_each(|&t| c.kink_ledger.add(t, 1)),
                PairOp::Cancel => {
                    if pair.iter().any(|&t| c.kink_ledger.count(t) == 0) {
                        return Err(EventError::NoKinkPair(comp.clone()));
                    }
                    pair.iter().for_each(|&t| {
                        c.kink_ledger.remove(t, 1);
                    });
                }
            }
        }
        MoveEvent::Clasp { comp } | MoveEvent::Unclasp { comp } => {
            let c = &mut comps[find(comps, comp)?];
            let clasping = matches!(event, MoveEvent::Clasp { .. });
            if clasping && c.clasped {
                return Err(EventError::AlreadyClasped(comp.clone()));
            }
            if !clasping && !c.clasped {
                return Err(EventError::NotClasped(comp.clone()));
            }
            c.clasped = clasping;
            // a clasp change is two self-crossings of opposite sign
            out.self_crossings = if clasping { vec![Sign::Pos, Sign::Neg] } else { vec![Sign::Neg, Sign::Pos] };
        }
        MoveEvent::LegStab { comp, pos, neg } => {
            let c = &mut comps[find(comps, comp)?];
            let (p, n) = (c.leg_stabs.0 + pos, c.leg_stabs.1 + neg);
            if p < 0 || n < 0 {
                return Err(EventError::NegativeStabilization(comp.clone()));
            }
            // each Legendrian stabilization is one kink of writhe -1, rotation +-1
            for (t, d) in [(KinkType::PosNeg, *pos), (KinkType::NegNeg, *neg)] {
                if d >= 0 {
                    c.kink_ledger.add(t, d as u64);
                } else if !c.kink_ledger.remove(t, d.unsigned_abs()) {
                    return Err(EventError::NegativeStabilization(comp.clone()));
                }
                c.rot_offset += t.rotation() * d;
                c.writhe_offset += t.writhe() * d;
                c.ev_central += t.rotation() * d;
            }
            c.leg_stabs = (p, n);
        }
    }
    Ok(out)
}

/// A named homotopy on a declared multi-component curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomotopyScript {
    pub name: String,
    pub ambient: Ambient,
    pub components: Vec<ComponentDecl>,
    pub events: Vec<MoveEvent>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutcome {
    pub components: Vec<ComponentState>,
    pub terms: Vec<Fig8Term>,
    pub trace: Vec<TraceEntry>,
}

impl HomotopyScript {
    pub fn new(name: &str, ambient: Ambient, components: Vec<ComponentDecl>) -> Self {
        Self { name: name.to_string(), ambient, components, events: Vec::new() }
    }

    pub fn with_events(mut self, events: Vec<MoveEvent>) -> Self {
        self.events = events;
        self
    }

    pub fn push(&mut self, event: MoveEvent) {
        self.events.push(event);
    }

    /// Static checks that do not depend on the event order.
    pub fn check_static(&self) -> Result<(), ScriptError> {
        let mut seen = HashSet::new();
        for c in &self.components {
            if !seen.insert(c.name.as_str()) {
                return Err(ScriptError::Invalid(format!("duplicate component `{}`", c.name)));
            }
            self.ambient.group.check(&c.base.base_word)?;
        }
        for (index, ev) in self.events.iter().enumerate() {
            if let MoveEvent::Drag { path, .. } = ev {
                if path.genus() != self.ambient.genus() {
                    let kind =
                        EventError::Algebra(Error::GenusMismatch { expected: self.ambient.genus(), got: path.genus() });
                    return Err(ScriptError::Event { index, kind });
                }
            }
        }
        Ok(())
    }

    pub fn initial_states(&self) -> Vec<ComponentState> {
        self.components.iter().map(|d| ComponentState::new(d, &self.ambient)).collect()
    }

    /// Left fold of [`apply_event`] over the events.
    pub fn run(&self) -> Result<RunOutcome, ScriptError> {
        self.check_static()?;
        self.run_from(self.initial_states())
    }

    /// Run the events starting from given component states.
    pub fn run_from(&self, mut comps: Vec<ComponentState>) -> Result<RunOutcome, ScriptError> {
        let mut terms = Vec::new();
        let mut trace = Vec::with_capacity(self.events.len());
        for (index, event) in self.events.iter().enumerate() {
            let applied =
                apply_event(&self.ambient, &mut comps, event).map_err(|kind| ScriptError::Event { index, kind })?;
            if let Some(t) = &applied.term {
                terms.push(t.clone());
            }
            trace.push(TraceEntry { index, event: event.clone(), applied });
        }
        Ok(RunOutcome { components: comps, terms, trace })
    }

    pub fn validate(&self) -> Result<(), ScriptError> {
        self.run().map(|_| ())
    }

    /// This script followed by the events of `other`.
    pub fn then(&self, other: &HomotopyScript) -> Self {
        let mut out = self.clone();
        out.events.extend(other.events.iter().cloned());
        out
    }

    /// The events in reverse order, each replaced by its inverse.
    pub fn reversed(&self) -> Self {
        let mut out = self.clone();
        out.events = self.events.iter().rev().map(MoveEvent::inverse).collect();
        out
    }

    pub fn cross_count(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, MoveEvent::Cross { .. })).count()
    }
}

/// `(a, b, c)` for `rot^a fib^b kink^c`, or `(a, rho, c)` for `rot^a drag(rho) kink^c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalForm {
    NonFiber { rot: i64, fib: i64, kink: i64 },
    Fiber { rot: i64, drag: H1Class, kink: i64 },
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalForm::NonFiber { rot, fib, kink } => write!(f, "({rot},{fib},{kink})"),
            NormalForm::Fiber { rot, drag, kink } => write!(f, "({rot},{drag},{kink})"),
        }
    }
}

/// Translate loop events on declared components into a loop word, enforcing the
/// fiber / non-fiber case split.
pub fn loop_descriptor(
    amb: &Ambient,
    components: &[ComponentDecl],
    events: &[MoveEvent],
) -> Result<LoopDescriptor, ScriptError> {
    let states: Vec<ComponentState> = components.iter().map(|d| ComponentState::new(d, amb)).collect();
    let mut word = Vec::with_capacity(events.len());
    for (index, ev) in events.iter().enumerate() {
        let err = |kind| ScriptError::Event { index, kind };
        let state = |name: &str| find(&states, name).map(|i| &states[i]).map_err(err);
        let g = match ev {
            MoveEvent::Rot { comp, n } => {
                state(comp)?;
                LoopGen::Rot(*n)
            }
            MoveEvent::KinkSlide { comp, n } => {
                state(comp)?;
                LoopGen::Kink(*n)
            }
            MoveEvent::Fib { comp, n } => {
                let s = state(comp)?;
                if s.fiber_power.is_some() {
                    return Err(err(EventError::FibOnFiberPower(comp.clone())));
                }
                let class = amb.group.abelianize(&s.base.base_word)?;
                LoopGen::Fib { class, n: *n }
            }
            MoveEvent::Drag { comp, path } => {
                let s = state(comp)?;
                if s.fiber_power.is_none() {
                    return Err(err(EventError::DragOnNonFiber(comp.clone())));
                }
                LoopGen::Drag(path.clone())
            }
            other => {
                return Err(ScriptError::Algebra(Error::MalformedLoop(format!(
                    "event {index} ({other:?}) is not a loop generator"
                ))))
            }
        };
        word.push(g);
    }
    Ok(LoopDescriptor(word))
}

/// Normal form of a closed loop of one component. Fails with the `h_V` obstruction
/// when the loop does not close up V-transversely.
pub fn normal_form_loop(
    amb: &Ambient,
    component: &ComponentDecl,
    events: &[MoveEvent],
) -> Result<NormalForm, ScriptError> {
    amb.bundle.base.require_hyperbolic()?;
    if let Some((index, _)) =
        events.iter().enumerate().find(|(_, e)| e.components().iter().any(|c| *c != component.name))
    {
        return Err(ScriptError::Event {
            index,
            kind: EventError::UnknownComponent(format!("loop must only move `{}`", component.name)),
        });
    }
    let word = loop_descriptor(amb, std::slice::from_ref(component), events)?;
    let h = h_v(&amb.field, &word)?;
    if h != 0 {
        return Err(Error::Obstruction { obstruction: h }.into());
    }
    let (mut rot, mut fib, mut kink) = (0, 0, 0);
    let mut drag = H1Class::zero(amb.genus());
    for g in &word.0 {
        match g {
            LoopGen::Rot(n) => rot += n,
            LoopGen::Fib { n, .. } => fib += n,
            LoopGen::Kink(n) => kink += n,
            LoopGen::Drag(rho) => drag = drag.checked_add(rho)?,
        }
    }
    if component.base.fiber_power(&amb.group).is_some() {
        Ok(NormalForm::Fiber { rot, drag, kink })
    } else {
        Ok(NormalForm::NonFiber { rot, fib, kink })
    }
}
