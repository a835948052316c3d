//! The finite-type invariant `nu`: signed sums of figure-8 classes over inter-component
//! double points of a homotopy, with a three-valued cancellation decision.

use std::fmt;

use crate::error::{Error, Result, ScriptError};
use crate::extension::{Ambient, EVFiberElement, FieldData, Pi1MElement};
use crate::moves::{HomotopyScript, Sign};
use crate::surface::Conjugacy;

/// Class of a component's lift to `E_V` at a double point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LiftClass {
    FiberPower(EVFiberElement),
    /// a component not homotopic to a fiber power; only its base class and `F` exponent are kept
    Opaque {
        base: Pi1MElement,
        central: i64,
    },
}

impl fmt::Display for LiftClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiftClass::FiberPower(x) => write!(f, "{x}"),
            LiftClass::Opaque { base, central } => write!(f, "<{base}; F^{central:+}>"),
        }
    }
}

/// One signed figure-8 at an inter-component double point. `pair` holds the component
/// indices in declaration order; `left` belongs to `pair.0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fig8Term {
    pub sign: Sign,
    pub pair: (usize, usize),
    pub left: LiftClass,
    pub right: LiftClass,
}

impl fmt::Display for Fig8Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{},{}]", self.sign.symbol(), self.left, self.right)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fig8Eq {
    Equal,
    Distinct,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NuVerdict {
    Zero,
    Nonzero,
    Unknown,
}

impl NuVerdict {
    pub fn keyword(self) -> &'static str {
        match self {
            NuVerdict::Zero => "ZERO",
            NuVerdict::Nonzero => "NONZERO",
            NuVerdict::Unknown => "UNKNOWN",
        }
    }
}

impl fmt::Display for NuVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// A formal sum of figure-8 terms, tagged with the field it was computed in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuValue {
    pub field: FieldData,
    pub terms: Vec<Fig8Term>,
}

impl NuValue {
    pub fn new(field: FieldData, terms: Vec<Fig8Term>) -> Self {
        Self { field, terms }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Term-sequence concatenation.
    pub fn concat(&self, other: &NuValue) -> Result<NuValue> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let terms = self.terms.iter().chain(&other.terms).cloned().collect();
        Ok(NuValue::new(self.field.clone(), terms))
    }
}

// Is there a shift m in the shift group with dl = p*m and dr = q*m?
fn solve_shift(field: &FieldData, p: i64, q: i64, dl: i64, dr: i64) -> bool {
    let m = match (p, q) {
        (0, 0) => return dl == 0 && dr == 0,
        (0, q) => {
            if dl != 0 || dr % q != 0 {
                return false;
            }
            dr / q
        }
        (p, q) => {
            if dl % p != 0 {
                return false;
            }
            let m = dl / p;
            if q * m != dr {
                return false;
            }
            m
        }
    };
    field.is_shift(m)
}

/// Decide whether two figure-8 terms are the same class, i.e. whether their lift pairs
/// are simultaneously conjugate. Signs are ignored.
pub fn fig8_equal(t1: &Fig8Term, t2: &Fig8Term, amb: &Ambient) -> Fig8Eq {
    if t1.pair != t2.pair {
        return Fig8Eq::Distinct;
    }
    use LiftClass::*;
    match ((&t1.left, &t1.right), (&t2.left, &t2.right)) {
        ((FiberPower(a), FiberPower(b)), (FiberPower(c), FiberPower(d))) => {
            if a.fiber_power != c.fiber_power || b.fiber_power != d.fiber_power {
                return Fig8Eq::Distinct;
            }
            let ok =
                solve_shift(&amb.field, a.fiber_power, b.fiber_power, c.central - a.central, d.central - b.central);
            if ok {
                Fig8Eq::Equal
            } else {
                Fig8Eq::Distinct
            }
        }
        ((l1, r1), (l2, r2)) => {
            if t1.left == t2.left && t1.right == t2.right {
                return Fig8Eq::Equal;
            }
            match (side_distinct(l1, l2, amb), side_distinct(r1, r2, amb)) {
                (true, _) | (_, true) => Fig8Eq::Distinct,
                _ => Fig8Eq::Unknown,
            }
        }
    }
}

// Conjugacy invariants in pi_1(M) that certify two lifts can never be conjugate.
fn side_distinct(x: &LiftClass, y: &LiftClass, amb: &Ambient) -> bool {
    match (x, y) {
        (LiftClass::FiberPower(_), LiftClass::Opaque { .. }) | (LiftClass::Opaque { .. }, LiftClass::FiberPower(_)) => {
            true
        }
        (LiftClass::FiberPower(a), LiftClass::FiberPower(b)) => a.fiber_power != b.fiber_power,
        (LiftClass::Opaque { base: a, .. }, LiftClass::Opaque { base: b, .. }) => {
            (amb.bundle.euler == 0 && a.fiber_exp != b.fiber_exp)
                || amb.group.conjugate(&a.base_word, &b.base_word) == Conjugacy::No
        }
    }
}

/// Largest term count for which the exhaustive pairing search runs.
pub const EXHAUSTIVE_LIMIT: usize = 8;

fn perfect_pairing(n: usize, edge: &dyn Fn(usize, usize) -> bool) -> bool {
    fn go(used: &mut Vec<bool>, edge: &dyn Fn(usize, usize) -> bool) -> bool {
        let Some(i) = used.iter().position(|u| !u) else {
            return true;
        };
        used[i] = true;
        for j in i + 1..used.len() {
            if !used[j] && edge(i, j) {
                used[j] = true;
                if go(used, edge) {
                    return true;
                }
                used[j] = false;
            }
        }
        used[i] = false;
        false
    }
    n.is_multiple_of(2) && go(&mut vec![false; n], edge)
}

fn greedy_pairing(n: usize, edge: &dyn Fn(usize, usize) -> bool) -> bool {
    let mut used = vec![false; n];
    for i in 0..n {
        if used[i] {
            continue;
        }
        match (i + 1..n).find(|&j| !used[j] && edge(i, j)) {
            Some(j) => {
                used[i] = true;
                used[j] = true;
            }
            None => return false,
        }
    }
    true
}

/// Decide whether `v` vanishes: pair off opposite-sign terms that are Equal.
pub fn is_zero(v: &NuValue, amb: &Ambient) -> NuVerdict {
    let n = v.terms.len();
    if n == 0 {
        return NuVerdict::Zero;
    }
    let eq: Vec<Vec<Fig8Eq>> =
        (0..n).map(|i| (0..n).map(|j| fig8_equal(&v.terms[i], &v.terms[j], amb)).collect()).collect();
    let undecided = eq.iter().flatten().any(|e| *e == Fig8Eq::Unknown);
    if !undecided {
        // Equal is an equivalence relation here, so count signed multiplicities per class
        let mut seen = vec![false; n];
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut total = 0;
            for j in i..n {
                if eq[i][j] == Fig8Eq::Equal {
                    seen[j] = true;
                    total += v.terms[j].sign.value();
                }
            }
            if total != 0 {
                return NuVerdict::Nonzero;
            }
        }
        return NuVerdict::Zero;
    }
    let edge = |i: usize, j: usize| v.terms[i].sign != v.terms[j].sign && eq[i][j] == Fig8Eq::Equal;
    let paired = if n <= EXHAUSTIVE_LIMIT { perfect_pairing(n, &edge) } else { greedy_pairing(n, &edge) };
    if paired {
        NuVerdict::Zero
    } else {
        NuVerdict::Unknown
    }
}

/// Collect the figure-8 terms of a homotopy on at least two components.
pub fn nu(script: &HomotopyScript) -> Result<NuValue, ScriptError> {
    if script.components.len() < 2 {
        return Err(ScriptError::Invalid(format!(
            "nu needs at least two components, `{}` has {}",
            script.name,
            script.components.len()
        )));
    }
    let out = script.run()?;
    Ok(NuValue::new(script.ambient.field.clone(), out.terms))
}

/// Whether every component is homotopic to a power of the fiber, the case in which `nu`
/// vanishes on self-homotopies and so obstructs link-homotopy.
pub fn obstruction_valid(script: &HomotopyScript) -> bool {
    script.components.iter().all(|c| c.base.fiber_power(&script.ambient.group).is_some())
}
