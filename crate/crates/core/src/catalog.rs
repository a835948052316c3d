//! The three example families of two-component links made of fiber curves, the verdict
//! engine over them, the simplicity predicate, and promotion to the Legendrian category.

use std::fmt;

use crate::error::{Error, Result, ScriptError};
use crate::extension::{drag_path_for_level, Ambient, BundleData, FieldData};
use crate::moves::{ComponentDecl, ComponentState, HomotopyScript, MoveEvent, Sign};
use crate::nu::{is_zero, nu, obstruction_valid, NuValue, NuVerdict};
use crate::surface::H1Class;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExampleFamily {
    /// two once-linked parallel fibers
    ParallelFibers,
    /// a self-clasped fiber next to a plain fiber
    ClaspedParallel,
    /// a self-clasped fiber linked once with a plain fiber
    ClaspedBraided,
}

impl ExampleFamily {
    pub const ALL: [ExampleFamily; 3] =
        [ExampleFamily::ParallelFibers, ExampleFamily::ClaspedParallel, ExampleFamily::ClaspedBraided];

    pub fn keyword(self) -> &'static str {
        match self {
            ExampleFamily::ParallelFibers => "parallel",
            ExampleFamily::ClaspedParallel => "clasped",
            ExampleFamily::ClaspedBraided => "braided",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.keyword() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family `{s}` (expected parallel, clasped or braided)")))
    }

    fn clasped(self) -> bool {
        self != ExampleFamily::ParallelFibers
    }

    fn linked(self) -> bool {
        self != ExampleFamily::ClaspedParallel
    }
}

impl fmt::Display for ExampleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// Parameters of a family member: the pair `K1 u K2` versus `K1^{i1} u K2^{i2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params {
    pub family: ExampleFamily,
    pub g: u32,
    pub k: i64,
    pub i1: i64,
    pub i2: i64,
}

impl Params {
    pub fn new(family: ExampleFamily, g: u32, k: i64, i1: i64, i2: i64) -> Result<Self> {
        let p = Self { family, g, k, i1, i2 };
        p.check()?;
        Ok(p)
    }

    pub fn check(&self) -> Result<()> {
        if self.g < 2 {
            return Err(Error::Genus { min: 2, got: self.g });
        }
        if self.k == 0 {
            return Err(Error::Parameter("k must be nonzero for the example families".into()));
        }
        for (name, i) in [("i1", self.i1), ("i2", self.i2)] {
            if i % self.k != 0 {
                return Err(Error::Parameter(format!(
                    "{name} = {i} is not a multiple of k = {}: the two links are not homotopic as \
                     V_k-transverse multi-curves",
                    self.k
                )));
            }
        }
        Ok(())
    }

    /// Product bundle of genus `g`, field with the given `k` and dual `A_g`.
    pub fn ambient(&self) -> Result<Ambient> {
        Ambient::new(BundleData::product(self.g)?, FieldData::new(self.k, H1Class::a(self.g, self.g)?))
    }
}

fn components(family: ExampleFamily) -> Vec<ComponentDecl> {
    let k1 = ComponentDecl::fiber("K1", 1);
    let k1 = if family.clasped() { k1.clasped() } else { k1 };
    vec![k1, ComponentDecl::fiber("K2", 1)]
}

fn drag(amb: &Ambient, comp: &str, level: i64) -> Result<Option<MoveEvent>> {
    if level == 0 {
        return Ok(None);
    }
    let path = drag_path_for_level(&amb.field, level)?;
    Ok(Some(MoveEvent::Drag { comp: comp.to_string(), path }))
}

fn cross(sign: Sign) -> MoveEvent {
    MoveEvent::Cross { a: "K1".into(), b: "K2".into(), sign }
}

fn clasp_cycle(amb: &Ambient, level: i64) -> Result<Vec<MoveEvent>> {
    Ok(match drag(amb, "K1", level)? {
        Some(d) => vec![MoveEvent::Unclasp { comp: "K1".into() }, d, MoveEvent::Clasp { comp: "K1".into() }],
        None => vec![],
    })
}

fn script(name: &str, amb: &Ambient, family: ExampleFamily, events: Vec<MoveEvent>) -> HomotopyScript {
    HomotopyScript::new(name, amb.clone(), components(family)).with_events(events)
}

/// The homotopy from `K1 u K2` to `K1^{i1} u K2^{i2}` used to compute `nu`.
pub fn build_example(p: &Params) -> Result<HomotopyScript> {
    p.check()?;
    let amb = p.ambient()?;
    build_pattern(p.family, &amb, p.i1, p.i2)
}

/// [`build_example`] without the parameter-domain check, for any field in which the
/// levels are reachable by dragging.
pub fn build_pattern(family: ExampleFamily, amb: &Ambient, i1: i64, i2: i64) -> Result<HomotopyScript> {
    let mut events = Vec::new();
    if family.linked() {
        events.push(cross(Sign::Pos));
    }
    if family.clasped() {
        events.extend(clasp_cycle(amb, i1)?);
    } else {
        events.extend(drag(amb, "K1", i1)?);
    }
    events.extend(drag(amb, "K2", i2)?);
    if family.linked() {
        events.push(cross(Sign::Neg));
    }
    Ok(script(family.keyword(), amb, family, events))
}

/// Slots of a verdict, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    FramedIsotopic,
    Homotopic,
    LinkHomotopic,
    Componentwise,
    Isotopic,
}

impl Slot {
    pub const ALL: [Slot; 5] =
        [Slot::FramedIsotopic, Slot::Homotopic, Slot::LinkHomotopic, Slot::Componentwise, Slot::Isotopic];

    pub fn key(self) -> &'static str {
        match self {
            Slot::FramedIsotopic => "framed_isotopic",
            Slot::Homotopic => "homotopic",
            Slot::LinkHomotopic => "link_homotopic",
            Slot::Componentwise => "componentwise_isotopic",
            Slot::Isotopic => "isotopic",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tri {
    Yes,
    No,
    Unknown,
}

impl Tri {
    pub fn word(self) -> &'static str {
        match self {
            Tri::Yes => "yes",
            Tri::No => "no",
            Tri::Unknown => "?",
        }
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.word())
    }
}

/// Justifications attached to verdict slots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    /// framed isotopies are approximated by V-transverse ones
    FramedApproximation,
    /// the family homotopy runs and reaches the target stabilization levels
    DragLevels,
    /// `nu` is nonzero on a homotopy between fiber-power components
    NuObstruction,
    /// the same drag applied to both components without unlinking
    SimultaneousDrag,
    /// unclasp, drag, reclasp, with no inter-component double points
    UnclaspDragReclasp,
    /// unclasp, drag both components together, reclasp
    BraidedSimultaneousDrag,
    /// each unclasped component is dragged on its own
    SeparateDrags,
    /// imported: a self-clasped fiber is not V_k-transversely isotopic to a nonzero stabilization of itself
    ClaspAxiom,
    /// isotopy implies the weaker relations, and failure of a weaker one rules out isotopy
    Closure,
    LegendrianHomotopy,
    LegendrianLinkHomotopy,
    LooseComponentwise,
    LooseIsotopy,
    /// every Legendrian witness is a V-transverse witness
    NegativeTransfer,
    /// precondition of a promotion rule not met
    PromotionUnavailable,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::FramedApproximation => "framed-approximation",
            Rule::DragLevels => "drag-levels",
            Rule::NuObstruction => "nu-obstruction",
            Rule::SimultaneousDrag => "simultaneous-drag",
            Rule::UnclaspDragReclasp => "unclasp-drag-reclasp",
            Rule::BraidedSimultaneousDrag => "braided-simultaneous-drag",
            Rule::SeparateDrags => "separate-drags",
            Rule::ClaspAxiom => "clasp-axiom (imported)",
            Rule::Closure => "closure",
            Rule::LegendrianHomotopy => "legendrian-homotopy",
            Rule::LegendrianLinkHomotopy => "legendrian-link-homotopy",
            Rule::LooseComponentwise => "loose-componentwise",
            Rule::LooseIsotopy => "loose-isotopy",
            Rule::NegativeTransfer => "negative-transfer",
            Rule::PromotionUnavailable => "promotion-unavailable",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

pub const FLAG_INVARIANCE_UNVERIFIED: &str = "invariance unverified";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub framed_isotopic: Tri,
    pub homotopic: Tri,
    pub link_homotopic: Tri,
    pub componentwise: Tri,
    pub isotopic: Tri,
    pub provenance: Vec<(Slot, Rule)>,
    pub flags: Vec<String>,
}

impl Default for Verdict {
    fn default() -> Self {
        Self {
            framed_isotopic: Tri::Unknown,
            homotopic: Tri::Unknown,
            link_homotopic: Tri::Unknown,
            componentwise: Tri::Unknown,
            isotopic: Tri::Unknown,
            provenance: Vec::new(),
            flags: Vec::new(),
        }
    }
}

impl Verdict {
    pub fn get(&self, slot: Slot) -> Tri {
        match slot {
            Slot::FramedIsotopic => self.framed_isotopic,
            Slot::Homotopic => self.homotopic,
            Slot::LinkHomotopic => self.link_homotopic,
            Slot::Componentwise => self.componentwise,
            Slot::Isotopic => self.isotopic,
        }
    }

    fn slot_mut(&mut self, slot: Slot) -> &mut Tri {
        match slot {
            Slot::FramedIsotopic => &mut self.framed_isotopic,
            Slot::Homotopic => &mut self.homotopic,
            Slot::LinkHomotopic => &mut self.link_homotopic,
            Slot::Componentwise => &mut self.componentwise,
            Slot::Isotopic => &mut self.isotopic,
        }
    }

    /// Set a slot if it is still undecided.
    pub fn decide(&mut self, slot: Slot, value: Tri, rule: Rule) {
        let s = self.slot_mut(slot);
        if *s == Tri::Unknown && value != Tri::Unknown {
            *s = value;
            self.provenance.push((slot, rule));
        }
    }

    pub fn tuple(&self) -> [Tri; 5] {
        Slot::ALL.map(|s| self.get(s))
    }

    pub fn rules_for(&self, slot: Slot) -> Vec<Rule> {
        self.provenance.iter().filter(|(s, _)| *s == slot).map(|(_, r)| *r).collect()
    }

    /// Apply the logical closure between slots until nothing changes.
    pub fn close(&mut self) {
        loop {
            let before = self.tuple();
            if self.isotopic == Tri::Yes {
                for s in [Slot::FramedIsotopic, Slot::Homotopic, Slot::LinkHomotopic, Slot::Componentwise] {
                    self.decide(s, Tri::Yes, Rule::Closure);
                }
            }
            if self.link_homotopic == Tri::Yes || self.componentwise == Tri::Yes {
                self.decide(Slot::Homotopic, Tri::Yes, Rule::Closure);
            }
            if self.link_homotopic == Tri::No || self.componentwise == Tri::No || self.homotopic == Tri::No {
                self.decide(Slot::Isotopic, Tri::No, Rule::Closure);
            }
            if self.homotopic == Tri::No {
                self.decide(Slot::LinkHomotopic, Tri::No, Rule::Closure);
                self.decide(Slot::Componentwise, Tri::No, Rule::Closure);
            }
            if self.tuple() == before {
                break;
            }
        }
    }

    /// Whether every implication between slots holds.
    pub fn is_closed(&self) -> bool {
        use Tri::*;
        let implies = |a: bool, b: bool| !a || b;
        let (h, lh, cw, iso) = (self.homotopic, self.link_homotopic, self.componentwise, self.isotopic);
        implies(iso == Yes, self.tuple().iter().all(|t| *t == Yes))
            && implies(lh == Yes || cw == Yes, h == Yes)
            && implies(lh == No || cw == No || h == No, iso == No)
            && implies(h == No, lh == No && cw == No)
    }

    pub fn flag(&mut self, f: &str) {
        if !self.flags.iter().any(|x| x == f) {
            self.flags.push(f.to_string());
        }
    }
}

/// What a witness homotopy certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    /// no double points at all
    Isotopy,
    /// no inter-component double points
    LinkHomotopy,
    /// no self double points
    Componentwise,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub rule: Rule,
    pub script: HomotopyScript,
}

impl Witness {
    /// Run the witness and check that it reaches the target levels with the claimed
    /// absence of double points.
    pub fn verify(&self, i1: i64, i2: i64) -> bool {
        let Ok(out) = self.script.run() else {
            return false;
        };
        let start = self.script.initial_states();
        let reached = levels(&start, &out.components) == vec![i1, i2];
        let crosses = self.script.events.iter().any(|e| matches!(e, MoveEvent::Cross { .. }));
        let selfs = out.trace.iter().any(|t| !t.applied.self_crossings.is_empty());
        let ok = match self.kind {
            WitnessKind::Isotopy => !crosses && !selfs,
            WitnessKind::LinkHomotopy => !crosses,
            WitnessKind::Componentwise => !selfs,
        };
        reached && ok
    }
}

fn levels(start: &[ComponentState], end: &[ComponentState]) -> Vec<i64> {
    start.iter().zip(end).map(|(a, b)| (b.ev_central - a.ev_central).div_euclid(2)).collect()
}

/// The constructive homotopies the catalog knows for a family member.
pub fn witnesses(p: &Params) -> Result<Vec<Witness>> {
    p.check()?;
    let amb = p.ambient()?;
    let (i1, i2) = (p.i1, p.i2);
    let mut out = Vec::new();
    let mut push = |kind, rule, events: Vec<MoveEvent>| {
        out.push(Witness { kind, rule, script: script(rule.id(), &amb, p.family, events) });
    };
    match p.family {
        ExampleFamily::ParallelFibers if i1 == i2 => {
            let events = drag(&amb, "K1", i1)?.into_iter().chain(drag(&amb, "K2", i2)?).collect();
            push(WitnessKind::Isotopy, Rule::SimultaneousDrag, events);
        }
        ExampleFamily::ClaspedParallel if i1 != 0 => {
            let mut events = clasp_cycle(&amb, i1)?;
            events.extend(drag(&amb, "K2", i2)?);
            push(WitnessKind::LinkHomotopy, Rule::UnclaspDragReclasp, events);
        }
        ExampleFamily::ClaspedBraided if i1 == i2 && i1 != 0 => {
            let mut events = vec![MoveEvent::Unclasp { comp: "K1".into() }];
            events.extend(drag(&amb, "K1", i1)?);
            events.extend(drag(&amb, "K2", i2)?);
            events.push(MoveEvent::Clasp { comp: "K1".into() });
            push(WitnessKind::LinkHomotopy, Rule::BraidedSimultaneousDrag, events);
        }
        _ => {}
    }
    // a clasped K1 can only stay where it is
    if !p.family.clasped() || i1 == 0 {
        let mut events = Vec::new();
        if p.family.linked() {
            events.push(cross(Sign::Pos));
        }
        events.extend(drag(&amb, "K1", i1)?);
        events.extend(drag(&amb, "K2", i2)?);
        if p.family.linked() {
            events.push(cross(Sign::Neg));
        }
        push(WitnessKind::Componentwise, Rule::SeparateDrags, events);
    }
    Ok(out)
}

/// Verdict for a family member, computed from `nu` of the family homotopy, the verified
/// witnesses, and the imported clasp axiom.
pub fn table_verdict(p: &Params) -> Result<Verdict> {
    let main = build_example(p)?;
    let nu_value = nu(&main).map_err(script_err)?;
    let mut v = verdict_from_nu(&main, &nu_value);
    for w in witnesses(p)? {
        if !w.verify(p.i1, p.i2) {
            continue;
        }
        let slot = match w.kind {
            WitnessKind::Isotopy => Slot::Isotopic,
            WitnessKind::LinkHomotopy => Slot::LinkHomotopic,
            WitnessKind::Componentwise => Slot::Componentwise,
        };
        v.decide(slot, Tri::Yes, w.rule);
    }
    if p.family.clasped() && p.i1 != 0 {
        v.decide(Slot::Componentwise, Tri::No, Rule::ClaspAxiom);
    }
    v.close();
    Ok(v)
}

fn script_err(e: ScriptError) -> Error {
    match e {
        ScriptError::Algebra(e) => e,
        other => Error::Parameter(other.to_string()),
    }
}

// Slots that follow from the homotopy itself: framed isotopy, homotopy, and the nu obstruction.
fn verdict_from_nu(script: &HomotopyScript, value: &NuValue) -> Verdict {
    let mut v = Verdict::default();
    v.decide(Slot::FramedIsotopic, Tri::Yes, Rule::FramedApproximation);
    v.decide(Slot::Homotopic, Tri::Yes, Rule::DragLevels);
    let valid = obstruction_valid(script);
    if !valid {
        v.flag(FLAG_INVARIANCE_UNVERIFIED);
    }
    if valid && is_zero(value, &script.ambient) == NuVerdict::Nonzero {
        v.decide(Slot::LinkHomotopic, Tri::No, Rule::NuObstruction);
    }
    v
}

/// Recognize a two-component script as a family member and return its parameters.
pub fn classify(script: &HomotopyScript) -> Option<Params> {
    let [c1, c2] = script.components.as_slice() else {
        return None;
    };
    let group = &script.ambient.group;
    if c1.base.fiber_power(group) != Some(1) || c2.base.fiber_power(group) != Some(1) || c2.clasped {
        return None;
    }
    if c1.kinks != 0 || c2.kinks != 0 {
        return None;
    }
    let linked = script.cross_count() > 0;
    let family = match (c1.clasped, linked) {
        (false, true) => ExampleFamily::ParallelFibers,
        (true, false) => ExampleFamily::ClaspedParallel,
        (true, true) => ExampleFamily::ClaspedBraided,
        (false, false) => return None,
    };
    let out = script.run().ok()?;
    let lv = levels(&script.initial_states(), &out.components);
    if out.components[0].clasped != c1.clasped {
        return None;
    }
    let p = Params { family, g: script.ambient.genus(), k: script.ambient.field.k, i1: lv[0], i2: lv[1] };
    p.check().ok()?;
    Some(p)
}

/// Verdict for an arbitrary script: `nu` of the script itself, plus the catalog rules
/// when the script is recognized as a family member.
pub fn verdict_for_script(script: &HomotopyScript) -> Result<Verdict, ScriptError> {
    let value = nu(script)?;
    let mut v = verdict_from_nu(script, &value);
    if let Some(p) = classify(script) {
        let cat = table_verdict(&p)?;
        for (slot, rule) in &cat.provenance {
            v.decide(*slot, cat.get(*slot), *rule);
        }
    } else {
        v.flag("no catalog family");
    }
    v.close();
    Ok(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Simplicity {
    Simple,
    NotGuaranteed,
}

/// Torsion test for the Euler class `2k * dual`: with a horizontal dual it is torsion
/// exactly when it vanishes.
pub fn simplicity_check(_bundle: &BundleData, field: &FieldData) -> Simplicity {
    if field.k == 0 || field.dual.is_zero() {
        Simplicity::Simple
    } else {
        Simplicity::NotGuaranteed
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LegendrianVerdict {
    pub verdict: Verdict,
    pub loose_components: bool,
    pub loose_link: bool,
}

/// Transfer a V-transverse verdict to Legendrian links co-oriented by `V`.
pub fn promote_to_legendrian(v: &Verdict, loose_components: bool, loose_link: bool) -> LegendrianVerdict {
    let mut out = Verdict { flags: v.flags.clone(), ..Verdict::default() };
    out.decide(Slot::FramedIsotopic, v.framed_isotopic, Rule::FramedApproximation);
    out.decide(Slot::Homotopic, v.homotopic, Rule::LegendrianHomotopy);
    out.decide(Slot::LinkHomotopic, v.link_homotopic, Rule::LegendrianLinkHomotopy);
    for (slot, loose, rule) in [
        (Slot::Componentwise, loose_components || loose_link, Rule::LooseComponentwise),
        (Slot::Isotopic, loose_link, Rule::LooseIsotopy),
    ] {
        match v.get(slot) {
            Tri::No => out.decide(slot, Tri::No, Rule::NegativeTransfer),
            Tri::Yes if loose => out.decide(slot, Tri::Yes, rule),
            Tri::Yes => out.provenance.push((slot, Rule::PromotionUnavailable)),
            Tri::Unknown => {}
        }
    }
    out.close();
    LegendrianVerdict { verdict: out, loose_components, loose_link }
}

/// Legendrian stabilization bookkeeping: `L_{i,0}` against `(L_{0,i})^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabCorrespondence {
    pub i: i64,
    pub legendrian: ComponentState,
    pub stabilized: ComponentState,
}

impl StabCorrespondence {
    pub fn holds(&self) -> bool {
        self.legendrian.writhe_offset == self.stabilized.writhe_offset
            && self.legendrian.ev_central == self.stabilized.ev_central
            && self.legendrian.rot_offset == self.stabilized.rot_offset
    }
}

pub fn stab_correspondence(i: i64) -> StabCorrespondence {
    let amb = Ambient::new(BundleData::product(2).expect("genus 2"), FieldData::new(1, H1Class::a(2, 2).expect("A2")))
        .expect("consistent genus");
    let decl = ComponentDecl::fiber("L", 1);
    let n = i.abs();
    let (first, second) = if i >= 0 { ((n, 0), (0, n)) } else { ((0, n), (n, 0)) };
    let run = |events: Vec<MoveEvent>| {
        let s = HomotopyScript::new("stab", amb.clone(), vec![decl.clone()]).with_events(events);
        s.run().expect("stabilizations are always valid").components.remove(0)
    };
    let leg = |(pos, neg): (i64, i64)| MoveEvent::LegStab { comp: "L".into(), pos, neg };
    StabCorrespondence {
        i,
        legendrian: run(vec![leg(first)]),
        stabilized: run(vec![leg(second), MoveEvent::VStab { comp: "L".into(), i }]),
    }
}

/// The framing and lift constraints `n1 + n2 = n3 + n4` and `n1 - n2 = n3 - n4` on the
/// stabilization counts of a Legendrian approximation.
pub fn stab_tuple_consistent(n: (i64, i64, i64, i64)) -> bool {
    let (n1, n2, n3, n4) = n;
    n1 + n2 == n3 + n4 && n1 - n2 == n3 - n4
}

/// One row of the summary table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub row: usize,
    pub family: ExampleFamily,
    pub regime: &'static str,
    pub params: Params,
    pub verdict: Verdict,
}

impl TableRow {
    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.row,
            self.family,
            self.regime,
            self.params.i1,
            self.params.i2,
            self.verdict.link_homotopic,
            self.verdict.componentwise,
            self.verdict.isotopic
        )
    }
}

pub const CSV_HEADER: &str = "row,family,regime,i1,i2,link_homotopic,componentwise_isotopic,isotopic";

/// The seven regimes with representative levels in units of `k`.
pub const REGIMES: [(ExampleFamily, &str, i64, i64); 7] = [
    (ExampleFamily::ParallelFibers, "i1!=i2", 1, 2),
    (ExampleFamily::ParallelFibers, "i1=i2!=0", 1, 1),
    (ExampleFamily::ClaspedParallel, "i1!=0", 1, 0),
    (ExampleFamily::ClaspedParallel, "i1=0,i2!=0", 0, 1),
    (ExampleFamily::ClaspedBraided, "i1!=0,i1!=i2", 1, 2),
    (ExampleFamily::ClaspedBraided, "i1=0,i2!=0", 0, 1),
    (ExampleFamily::ClaspedBraided, "i1=i2!=0", 1, 1),
];

/// Which regime a parameter choice falls in, if any.
pub fn regime_of(p: &Params) -> Option<&'static str> {
    let (i1, i2) = (p.i1, p.i2);
    let r = match p.family {
        ExampleFamily::ParallelFibers if i1 != i2 => "i1!=i2",
        ExampleFamily::ParallelFibers if i1 != 0 => "i1=i2!=0",
        ExampleFamily::ClaspedParallel if i1 != 0 => "i1!=0",
        ExampleFamily::ClaspedParallel if i2 != 0 => "i1=0,i2!=0",
        ExampleFamily::ClaspedBraided if i1 != 0 && i1 != i2 => "i1!=0,i1!=i2",
        ExampleFamily::ClaspedBraided if i1 == 0 && i2 != 0 => "i1=0,i2!=0",
        ExampleFamily::ClaspedBraided if i1 != 0 => "i1=i2!=0",
        _ => return None,
    };
    Some(r)
}

pub fn table_row(p: &Params) -> Result<TableRow> {
    let verdict = table_verdict(p)?;
    let regime = regime_of(p).unwrap_or("trivial");
    let row = REGIMES.iter().position(|(f, r, _, _)| *f == p.family && *r == regime).map_or(0, |i| i + 1);
    Ok(TableRow { row, family: p.family, regime, params: *p, verdict })
}

/// All seven rows at genus `g` and field parameter `k`.
pub fn table_all(g: u32, k: i64) -> Result<Vec<TableRow>> {
    REGIMES.iter().map(|&(family, _, a, b)| table_row(&Params::new(family, g, k, a * k, b * k)?)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use Tri::*;

    fn v(f: ExampleFamily, i1: i64, i2: i64) -> [Tri; 5] {
        table_verdict(&Params::new(f, 2, 1, i1, i2).unwrap()).unwrap().tuple()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(v(ExampleFamily::ParallelFibers, 1, 2), [Yes, Yes, No, Yes, No]);
        let r = v(ExampleFamily::ClaspedParallel, 0, 1);
        assert_eq!((r[2], r[4]), (Unknown, Unknown));
        assert_eq!(v(ExampleFamily::ClaspedBraided, 1, 1), [Yes, Yes, Yes, No, No]);
    }

    #[test]
    fn build_example_shapes() {
        let p = Params::new(ExampleFamily::ParallelFibers, 2, 1, 1, 2).unwrap();
        assert_eq!(nu(&build_example(&p).unwrap()).unwrap().len(), 2);
        let p = Params::new(ExampleFamily::ClaspedParallel, 2, 1, 1, 0).unwrap();
        assert_eq!(build_example(&p).unwrap().cross_count(), 0);
        assert!(Params::new(ExampleFamily::ParallelFibers, 2, 2, 1, 2).is_err());
        assert!(Params::new(ExampleFamily::ParallelFibers, 2, 0, 0, 0).is_err());
        assert!(Params::new(ExampleFamily::ParallelFibers, 1, 1, 0, 0).is_err());
    }

    #[test]
    fn simplicity() {
        let b = BundleData::product(2).unwrap();
        let h = |s: &str| H1Class::parse(s, 2).unwrap();
        assert_eq!(simplicity_check(&b, &FieldData::new(0, h("A2"))), Simplicity::Simple);
        assert_eq!(simplicity_check(&b, &FieldData::new(1, h("A2"))), Simplicity::NotGuaranteed);
        assert_eq!(simplicity_check(&b, &FieldData::new(3, h("0"))), Simplicity::Simple);
    }

    #[test]
    fn promotion_examples() {
        let mut base = Verdict::default();
        base.decide(Slot::LinkHomotopic, No, Rule::NuObstruction);
        base.decide(Slot::Componentwise, Yes, Rule::SeparateDrags);
        base.close();
        for (lc, ll) in [(false, false), (true, false), (false, true), (true, true)] {
            let l = promote_to_legendrian(&base, lc, ll).verdict;
            assert_eq!(l.link_homotopic, No);
            assert_eq!(l.isotopic, No);
        }
        assert_eq!(promote_to_legendrian(&base, false, false).verdict.componentwise, Unknown);
        assert_eq!(promote_to_legendrian(&base, true, false).verdict.componentwise, Yes);
    }

    #[test]
    fn stabilization_bookkeeping() {
        for i in -3..=3 {
            assert!(stab_correspondence(i).holds(), "i = {i}");
        }
        assert!(stab_tuple_consistent((2, 1, 2, 1)));
        assert!(!stab_tuple_consistent((2, 1, 3, 0)));
    }

    #[test]
    fn classify_round_trip() {
        for &(family, _, a, b) in &REGIMES {
            let p = Params::new(family, 2, 2, 2 * a, 2 * b).unwrap();
            let s = build_example(&p).unwrap();
            assert_eq!(classify(&s), Some(p));
            assert_eq!(verdict_for_script(&s).unwrap().tuple(), table_verdict(&p).unwrap().tuple());
        }
    }
}
