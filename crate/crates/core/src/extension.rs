//! Arithmetic in `pi_1(M)` for a circle bundle `M -> F`, the Euler-class pairing of
//! `V^perp`, the kink-cancelling homomorphism `h_V`, and the abelian fragment
//! `<f~, F>` of `pi_1(E_V)` together with the conjugation action of `pi_1(M)` on it.

use std::fmt;

use crate::error::{Error, Result};
use crate::surface::{H1Class, SurfaceBase, SurfaceGroup, SurfaceWord};

/// Circle bundle over `F` with Euler number `euler` (0 is the product `F x S^1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BundleData {
    pub base: SurfaceBase,
    pub euler: i64,
}

impl BundleData {
    pub fn new(genus: u32, euler: i64) -> Result<Self> {
        Ok(Self { base: SurfaceBase::new(genus)?, euler })
    }

    pub fn product(genus: u32) -> Result<Self> {
        Self::new(genus, 0)
    }

    pub fn genus(&self) -> u32 {
        self.base.genus()
    }

    pub fn group(&self) -> SurfaceGroup {
        SurfaceGroup::new(self.base)
    }
}

/// The vector field data: `e(V^perp)` is Poincare dual to `2k * dual`, with `dual`
/// horizontal (a class of the base surface).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldData {
    pub k: i64,
    pub dual: H1Class,
}

impl FieldData {
    pub fn new(k: i64, dual: H1Class) -> Self {
        Self { k, dual }
    }

    pub fn genus(&self) -> u32 {
        self.dual.genus()
    }

    fn check(&self, c: &H1Class) -> Result<()> {
        if c.genus() != self.dual.genus() {
            return Err(Error::GenusMismatch { expected: self.dual.genus(), got: c.genus() });
        }
        Ok(())
    }

    /// Signed count of how often a curve of class `c` crosses the dual curve, oriented
    /// so that `pairing(B2) = +1` when `dual = A2`. Equals `<dual, c>`.
    pub fn pairing(&self, c: &H1Class) -> Result<i64> {
        self.check(c)?;
        self.dual.intersection_number(c)
    }

    /// Generator of the group of central shifts `{2k <dual, rho>}`; 0 when the group is trivial.
    pub fn shift_modulus(&self) -> i64 {
        2 * self.k.abs() * self.dual.content()
    }

    /// Whether `n` lies in the shift group.
    pub fn is_shift(&self, n: i64) -> bool {
        match self.shift_modulus() {
            0 => n == 0,
            m => n % m == 0,
        }
    }
}

/// Bundle, field and base group bundled together after a genus consistency check.
#[derive(Debug, Clone)]
pub struct Ambient {
    pub bundle: BundleData,
    pub field: FieldData,
    pub group: SurfaceGroup,
}

impl Ambient {
    pub fn new(bundle: BundleData, field: FieldData) -> Result<Self> {
        if field.genus() != bundle.genus() {
            return Err(Error::GenusMismatch { expected: bundle.genus(), got: field.genus() });
        }
        let group = bundle.group();
        Ok(Self { bundle, field, group })
    }

    pub fn genus(&self) -> u32 {
        self.bundle.genus()
    }
}

// the group is determined by the bundle
impl PartialEq for Ambient {
    fn eq(&self, other: &Self) -> bool {
        self.bundle == other.bundle && self.field == other.field
    }
}

impl Eq for Ambient {}

/// Which torus `S^1 x S^1 -> M` a basic loop of curves sweeps out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TorusKind {
    /// drag a fiber-power curve around a loop of class `rho` in `F`
    Drag(H1Class),
    /// push a curve of class `c` once around the fibers
    Fib(H1Class),
    /// reparametrize the curve along itself
    Rot,
}

/// Evaluate `e(V^perp)` on the torus swept by the loop. Always even.
pub fn euler_eval_torus(field: &FieldData, kind: &TorusKind) -> Result<i64> {
    match kind {
        TorusKind::Drag(c) | TorusKind::Fib(c) => Ok(2 * field.k * field.pairing(c)?),
        TorusKind::Rot => Ok(0),
    }
}

/// A generator of `pi_1(C, K) / <gamma_s>` as used in loop words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoopGen {
    Rot(i64),
    /// `gamma_fib^n` on a curve of class `class`
    Fib {
        class: H1Class,
        n: i64,
    },
    Drag(H1Class),
    /// kink slides lie in the kernel of the forgetful map and contribute nothing
    Kink(i64),
}

impl LoopGen {
    pub fn inverse(&self) -> Self {
        match self {
            LoopGen::Rot(n) => LoopGen::Rot(-n),
            LoopGen::Fib { class, n } => LoopGen::Fib { class: class.clone(), n: -n },
            LoopGen::Drag(rho) => LoopGen::Drag(-rho),
            LoopGen::Kink(n) => LoopGen::Kink(-n),
        }
    }
}

/// A formal word in loop generators.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LoopDescriptor(pub Vec<LoopGen>);

impl LoopDescriptor {
    pub fn then(&self, other: &Self) -> Self {
        Self(self.0.iter().chain(&other.0).cloned().collect())
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(LoopGen::inverse).collect())
    }
}

fn half(v: i64) -> Result<i64> {
    if v % 2 != 0 {
        return Err(Error::MalformedLoop(format!("odd Euler evaluation {v}")));
    }
    Ok(v / 2)
}

/// `h_V` of a single generator.
pub fn h_v_gen(field: &FieldData, g: &LoopGen) -> Result<i64> {
    match g {
        LoopGen::Rot(_) | LoopGen::Kink(_) => Ok(0),
        LoopGen::Fib { class, n } => Ok(n * half(euler_eval_torus(field, &TorusKind::Fib(class.clone()))?)?),
        LoopGen::Drag(rho) => half(euler_eval_torus(field, &TorusKind::Drag(rho.clone()))?),
    }
}

/// Kink-cancelling homomorphism: half the Euler class of `V^perp` on the swept torus.
pub fn h_v(field: &FieldData, word: &LoopDescriptor) -> Result<i64> {
    word.0.iter().map(|g| h_v_gen(field, g)).sum()
}

/// Element of `pi_1(M)` written as (base word, fiber exponent).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pi1MElement {
    pub base_word: SurfaceWord,
    pub fiber_exp: i64,
}

impl Pi1MElement {
    pub fn identity() -> Self {
        Self { base_word: SurfaceWord::identity(), fiber_exp: 0 }
    }

    /// `f^p`
    pub fn fiber(p: i64) -> Self {
        Self { base_word: SurfaceWord::identity(), fiber_exp: p }
    }

    pub fn horizontal(w: SurfaceWord) -> Self {
        Self { base_word: w, fiber_exp: 0 }
    }

    fn require_product(bundle: &BundleData) -> Result<()> {
        if bundle.euler != 0 {
            return Err(Error::UnsupportedBundle { euler: bundle.euler });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Self, bundle: &BundleData) -> Result<Self> {
        Self::require_product(bundle)?;
        Ok(Self { base_word: self.base_word.multiply(&other.base_word), fiber_exp: self.fiber_exp + other.fiber_exp })
    }

    pub fn inverse(&self, bundle: &BundleData) -> Result<Self> {
        Self::require_product(bundle)?;
        Ok(Self { base_word: self.base_word.inverse(), fiber_exp: -self.fiber_exp })
    }

    /// `Some(p)` when the element equals `f^p`.
    pub fn fiber_power(&self, group: &SurfaceGroup) -> Option<i64> {
        group.is_trivial(&self.base_word).then_some(self.fiber_exp)
    }
}

impl fmt::Display for Pi1MElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.base_word.is_empty(), self.fiber_exp) {
            (true, p) => write!(f, "f^{p}"),
            (false, 0) => write!(f, "{}", self.base_word),
            (false, p) => write!(f, "{} f^{p}", self.base_word),
        }
    }
}

/// Element `F^central * f~^fiber_power` of the central subgroup `<f~, F> = Z^2` of `pi_1(E_V)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EVFiberElement {
    pub fiber_power: i64,
    pub central: i64,
}

impl EVFiberElement {
    pub fn new(fiber_power: i64, central: i64) -> Self {
        Self { fiber_power, central }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    /// `F^n`
    pub fn central_power(n: i64) -> Self {
        Self::new(0, n)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.fiber_power + other.fiber_power, self.central + other.central)
    }

    pub fn inverse(&self) -> Self {
        Self::new(-self.fiber_power, -self.central)
    }
}

impl fmt::Display for EVFiberElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:+},{:+})", self.fiber_power, self.central)
    }
}

/// Conjugation `gamma x gamma^-1`: the fiber power is untouched, the `F` exponent moves
/// by `p * 2k * pairing(gamma)`.
pub fn conj_act(field: &FieldData, gamma: &Pi1MElement, x: EVFiberElement) -> Result<EVFiberElement> {
    let class = gamma.base_word.abelianize(field.genus())?;
    let shift = 2 * field.k * field.pairing(&class)?;
    Ok(EVFiberElement::new(x.fiber_power, x.central + x.fiber_power * shift))
}

/// The fiber `F` of `E_V -> M` has infinite order; `F^n` is trivial only for `n = 0`.
pub fn fiber_order_check(_field: &FieldData) -> bool {
    (1..=64)
        .all(|n| !EVFiberElement::central_power(n).is_identity() && !EVFiberElement::central_power(-n).is_identity())
}

/// A loop `rho` in `F` with `k * pairing(rho) = level`, if one exists.
pub fn drag_path_for_level(field: &FieldData, level: i64) -> Result<H1Class> {
    if level == 0 {
        return Ok(H1Class::zero(field.genus()));
    }
    let step = field.k * field.dual.content();
    if step == 0 || level % step != 0 {
        return Err(Error::Parameter(format!(
            "stabilization level {level} is not reachable by dragging: levels move in steps of {}",
            step.abs()
        )));
    }
    let unit = primitive_dual_partner(&field.dual);
    let n = level / step;
    // pairing(unit) = content and k * content * n = level
    Ok(unit.scale(n))
}

// A class rho with <dual, rho> = content(dual), built from the extended gcd of the coordinates.
fn primitive_dual_partner(dual: &H1Class) -> H1Class {
    let genus = dual.genus();
    let c = dual.coords();
    // <dual, A_j> = -b_j and <dual, B_j> = a_j
    let mut weights = Vec::with_capacity(c.len());
    for j in 0..genus as usize {
        weights.push((2 * j, -c[2 * j + 1]));
        weights.push((2 * j + 1, c[2 * j]));
    }
    let mut coeffs = vec![0i64; c.len()];
    let mut g = 0i64;
    for (idx, w) in weights {
        if w == 0 {
            continue;
        }
        let (d, x, y) = ext_gcd(g, w);
        for v in coeffs.iter_mut() {
            *v *= x;
        }
        coeffs[idx] += y;
        g = d;
    }
    if g < 0 {
        for v in coeffs.iter_mut() {
            *v = -*v;
        }
    }
    H1Class::from_coords(coeffs).expect("even length")
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (d, x, y) = ext_gcd(b, a % b);
        (d, y, x - (a / b) * y)
    }
}
