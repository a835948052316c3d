//! Homology and fundamental-group arithmetic for a closed oriented surface.
//!
//! Generators are ordered `A1, B1, A2, B2, ..., Ag, Bg` and the single defining
//! relator is `[A1,B1][A2,B2]...[Ag,Bg]` with `[a,b] = a b a^-1 b^-1`. In this
//! basis the intersection form is block diagonal with `<Ai,Bi> = +1`.
//!
//! For genus at least two the relator satisfies the small cancellation condition
//! C'(1/7), so Dehn's algorithm solves the word problem and a bounded search over
//! half-relator swaps handles most conjugacy questions.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};

/// The base surface `F`, identified by its genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceBase {
    genus: u32,
}

impl SurfaceBase {
    pub fn new(genus: u32) -> Result<Self> {
        if genus < 1 {
            return Err(Error::Genus { min: 1, got: genus });
        }
        Ok(Self { genus })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Number of generators, `2g`.
    pub fn rank(&self) -> usize {
        2 * self.genus as usize
    }

    /// Refuse bases below genus two for features that rely on hyperbolicity of `pi_1(F)`.
    pub fn require_hyperbolic(&self) -> Result<()> {
        if self.genus < 2 {
            return Err(Error::Genus { min: 2, got: self.genus });
        }
        Ok(())
    }

    /// `[A1,B1]...[Ag,Bg]`
    pub fn relator(&self) -> SurfaceWord {
        let mut letters = Vec::with_capacity(4 * self.genus as usize);
        for i in 0..self.genus {
            let a = 2 * i;
            let b = 2 * i + 1;
            letters.push(Letter::new(a, false));
            letters.push(Letter::new(b, false));
            letters.push(Letter::new(a, true));
            letters.push(Letter::new(b, true));
        }
        SurfaceWord { letters }
    }
}

/// Name of generator `index` (`0 -> A1`, `1 -> B1`, `2 -> A2`, ...).
pub fn generator_name(index: u32) -> String {
    let kind = if index.is_multiple_of(2) { 'A' } else { 'B' };
    format!("{}{}", kind, index / 2 + 1)
}

fn parse_generator(kind: char, number: u32) -> Result<u32> {
    if number == 0 {
        return Err(Error::Parse("generator numbers start at 1".into()));
    }
    match kind {
        'A' => Ok(2 * (number - 1)),
        'B' => Ok(2 * (number - 1) + 1),
        other => Err(Error::Parse(format!("unknown generator letter `{other}`"))),
    }
}

/// First homology class of `F` in the symplectic basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct H1Class {
    coords: Vec<i64>,
}

impl H1Class {
    pub fn zero(genus: u32) -> Self {
        Self { coords: vec![0; 2 * genus as usize] }
    }

    /// The class of generator `index` (see [`generator_name`]).
    pub fn basis(genus: u32, index: u32) -> Result<Self> {
        if index >= 2 * genus {
            return Err(Error::GeneratorOutOfRange { index, genus });
        }
        let mut c = Self::zero(genus);
        c.coords[index as usize] = 1;
        Ok(c)
    }

    pub fn a(genus: u32, i: u32) -> Result<Self> {
        Self::basis(genus, 2 * (i.max(1) - 1))
    }

    pub fn b(genus: u32, i: u32) -> Result<Self> {
        Self::basis(genus, 2 * (i.max(1) - 1) + 1)
    }

    pub fn from_coords(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() || !coords.len().is_multiple_of(2) {
            return Err(Error::Parse(format!("a homology vector needs an even positive length, got {}", coords.len())));
        }
        Ok(Self { coords })
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn genus(&self) -> u32 {
        (self.coords.len() / 2) as u32
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Greatest common divisor of the coordinates (0 for the zero class).
    pub fn content(&self) -> i64 {
        self.coords.iter().fold(0, |g, &c| gcd(g, c))
    }

    pub fn scale(&self, n: i64) -> Self {
        Self { coords: self.coords.iter().map(|c| c * n).collect() }
    }

    fn check_genus(&self, other: &Self) -> Result<()> {
        if self.coords.len() != other.coords.len() {
            return Err(Error::GenusMismatch { expected: self.genus(), got: other.genus() });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_genus(other)?;
        Ok(Self { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() })
    }

    /// Algebraic intersection number `x^T J y`.
    pub fn intersection_number(&self, other: &Self) -> Result<i64> {
        self.check_genus(other)?;
        Ok(self.coords.chunks_exact(2).zip(other.coords.chunks_exact(2)).map(|(x, y)| x[0] * y[1] - x[1] * y[0]).sum())
    }

    /// Parse an integer combination such as `2*A1 - 3*B2`. The literal `0` is the zero class.
    pub fn parse(text: &str, genus: u32) -> Result<Self> {
        let mut out = Self::zero(genus);
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty homology literal".into()));
        }
        if compact == "0" {
            return Ok(out);
        }
        let chars: Vec<char> = compact.chars().collect();
        let mut pos = 0;
        let mut first = true;
        while pos < chars.len() {
            let mut sign = 1i64;
            if chars[pos] == '+' || chars[pos] == '-' {
                if chars[pos] == '-' {
                    sign = -1;
                }
                pos += 1;
            } else if !first {
                return Err(Error::Parse(format!("expected `+` or `-` in `{text}`")));
            }
            first = false;
            let start = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            let mut coeff = 1i64;
            if pos > start {
                let digits: String = chars[start..pos].iter().collect();
                coeff = digits.parse().map_err(|_| Error::Parse(format!("bad coefficient `{digits}`")))?;
                if pos < chars.len() && chars[pos] == '*' {
                    pos += 1;
                } else if pos == chars.len() || chars[pos] == '+' || chars[pos] == '-' {
                    return Err(Error::Parse(format!("bare integer in homology literal `{text}`")));
                }
            }
            let kind = *chars.get(pos).ok_or_else(|| Error::Parse(format!("missing generator in `{text}`")))?;
            pos += 1;
            let nstart = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            if nstart == pos {
                return Err(Error::Parse(format!("generator `{kind}` needs an index in `{text}`")));
            }
            let number: u32 = chars[nstart..pos]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator index in `{text}`")))?;
            let index = parse_generator(kind, number)?;
            if index >= 2 * genus {
                return Err(Error::GeneratorOutOfRange { index, genus });
            }
            out.coords[index as usize] += sign * coeff;
        }
        Ok(out)
    }
}

impl Add for &H1Class {
    type Output = H1Class;

    fn add(self, rhs: &H1Class) -> H1Class {
        self.checked_add(rhs).expect("homology classes of different genus")
    }
}

impl Sub for &H1Class {
    type Output = H1Class;

    fn sub(self, rhs: &H1Class) -> H1Class {
        self + &(-rhs)
    }
}

impl Neg for &H1Class {
    type Output = H1Class;

    fn neg(self) -> H1Class {
        self.scale(-1)
    }
}

impl fmt::Display for H1Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let name = generator_name(i as u32);
            let mag = c.abs();
            match (wrote, c < 0) {
                (false, false) => {}
                (false, true) => write!(f, "-")?,
                (true, false) => write!(f, " + ")?,
                (true, true) => write!(f, " - ")?,
            }
            if mag == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{mag}*{name}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: u32,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: u32, inverse: bool) -> Self {
        Self { gen, inverse }
    }

    pub fn inv(self) -> Self {
        Self { gen: self.gen, inverse: !self.inverse }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    // dense index used by lookup tables: 2*gen + inverse
    fn slot(self) -> usize {
        2 * self.gen as usize + self.inverse as usize
    }
}

/// Freely reduced word in the surface generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct SurfaceWord {
    letters: Vec<Letter>,
}

fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    if out.last() == Some(&l.inv()) {
        out.pop();
    } else {
        out.push(l);
    }
}

fn free_reduce(letters: impl IntoIterator<Item = Letter>) -> Vec<Letter> {
    let mut out = Vec::new();
    for l in letters {
        push_reduced(&mut out, l);
    }
    out
}

impl SurfaceWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        Self { letters: free_reduce(letters) }
    }

    pub fn generator(index: u32) -> Self {
        Self { letters: vec![Letter::new(index, false)] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn multiply(&self, other: &Self) -> Self {
        Self::new(self.letters.iter().chain(&other.letters).copied())
    }

    pub fn inverse(&self) -> Self {
        Self { letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    pub fn power(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }

    pub fn conjugate_by(&self, x: &Self) -> Self {
        x.multiply(self).multiply(&x.inverse())
    }

    pub fn commutator(a: &Self, b: &Self) -> Self {
        a.multiply(b).multiply(&a.inverse()).multiply(&b.inverse())
    }

    pub fn max_generator(&self) -> Option<u32> {
        self.letters.iter().map(|l| l.gen).max()
    }

    /// Signed letter counts per generator.
    pub fn abelianize(&self, genus: u32) -> Result<H1Class> {
        let mut h = H1Class::zero(genus);
        for l in &self.letters {
            if l.gen >= 2 * genus {
                return Err(Error::GeneratorOutOfRange { index: l.gen, genus });
            }
            h.coords[l.gen as usize] += l.sign();
        }
        Ok(h)
    }

    /// Parse juxtaposed tokens such as `A1 B1 A1^-1 B2^3` (whitespace optional).
    /// `1` or an empty string is the identity.
    pub fn parse(text: &str) -> Result<Self> {
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() || (chars.len() == 1 && chars[0] == '1') {
            return Ok(Self::identity());
        }
        let mut letters = Vec::new();
        let mut pos = 0;
        while pos < chars.len() {
            let kind = chars[pos];
            pos += 1;
            let start = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(Error::Parse(format!("generator `{kind}` needs an index in `{text}`")));
            }
            let number: u32 = chars[start..pos]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator index in `{text}`")))?;
            let gen = parse_generator(kind, number)?;
            let mut exp = 1i64;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let estart = pos;
                if pos < chars.len() && (chars[pos] == '-' || chars[pos] == '+') {
                    pos += 1;
                }
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                let digits: String = chars[estart..pos].iter().collect();
                exp = digits.parse().map_err(|_| Error::Parse(format!("bad exponent `{digits}` in `{text}`")))?;
            }
            let l = Letter::new(gen, exp < 0);
            for _ in 0..exp.unsigned_abs() {
                letters.push(l);
            }
        }
        Ok(Self::new(letters))
    }
}

impl fmt::Display for SurfaceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut i = 0;
        let mut first = true;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let exp = run as i64 * l.sign();
            if exp == 1 {
                write!(f, "{}", generator_name(l.gen))?;
            } else {
                write!(f, "{}^{}", generator_name(l.gen), exp)?;
            }
            i += run;
        }
        Ok(())
    }
}

/// Three-valued answer for conjugacy questions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Conjugacy {
    Yes,
    No,
    Unknown,
}

/// `pi_1(F)` with precomputed relator tables for Dehn's algorithm.
#[derive(Debug, Clone)]
pub struct SurfaceGroup {
    base: SurfaceBase,
    relator_len: usize,
    // for each letter slot: the rotations of the relator and of its inverse starting with that letter
    rotations: Vec<[Vec<Letter>; 2]>,
    /// cyclic words longer than this are not searched for conjugacy
    pub conj_max_len: usize,
    /// cap on the number of cyclic words visited per half-swap closure
    pub conj_state_limit: usize,
    /// maximal conjugator length tried before answering `Unknown`
    pub conjugator_len: usize,
}

impl SurfaceGroup {
    pub fn new(base: SurfaceBase) -> Self {
        let r = base.relator().letters;
        let rinv = base.relator().inverse().letters;
        let n = r.len();
        let rotate = |w: &[Letter], start: usize| -> Vec<Letter> { (0..n).map(|j| w[(start + j) % n]).collect() };
        let mut rotations = Vec::with_capacity(2 * base.rank());
        for slot in 0..2 * base.rank() {
            let l = Letter::new((slot / 2) as u32, slot % 2 == 1);
            let i = r.iter().position(|&x| x == l).expect("each letter occurs once in the relator");
            let j = rinv.iter().position(|&x| x == l).expect("each letter occurs once in the inverse");
            rotations.push([rotate(&r, i), rotate(&rinv, j)]);
        }
        Self { base, relator_len: n, rotations, conj_max_len: 64, conj_state_limit: 4096, conjugator_len: 2 }
    }

    pub fn with_genus(genus: u32) -> Result<Self> {
        Ok(Self::new(SurfaceBase::new(genus)?))
    }

    pub fn base(&self) -> SurfaceBase {
        self.base
    }

    pub fn genus(&self) -> u32 {
        self.base.genus
    }

    /// Reject words that mention generators outside this surface.
    pub fn check(&self, w: &SurfaceWord) -> Result<()> {
        match w.max_generator() {
            Some(g) if g >= 2 * self.genus() => Err(Error::GeneratorOutOfRange { index: g, genus: self.genus() }),
            _ => Ok(()),
        }
    }

    pub fn abelianize(&self, w: &SurfaceWord) -> Result<H1Class> {
        w.abelianize(self.genus())
    }

    /// Word problem. Genus one falls back to abelianization, which is exact there.
    pub fn is_trivial(&self, w: &SurfaceWord) -> bool {
        if w.is_empty() {
            return true;
        }
        if self.genus() < 2 {
            return w.abelianize(self.genus()).map(|h| h.is_zero()).unwrap_or(false);
        }
        self.dehn_reduce(w).is_empty()
    }

    pub fn equal(&self, u: &SurfaceWord, v: &SurfaceWord) -> bool {
        self.is_trivial(&u.multiply(&v.inverse()))
    }

    /// Repeatedly replace any subword longer than half a relator by the shorter complement.
    pub fn dehn_reduce(&self, w: &SurfaceWord) -> SurfaceWord {
        if self.genus() < 2 {
            return w.clone();
        }
        let mut cur = w.letters.clone();
        let half = self.relator_len / 2;
        'outer: loop {
            for i in 0..cur.len() {
                for cand in &self.rotations[cur[i].slot()] {
                    let lcp = cur[i..].iter().zip(cand).take_while(|(a, b)| a == b).count();
                    if lcp > half {
                        let mut next = Vec::with_capacity(cur.len());
                        next.extend_from_slice(&cur[..i]);
                        for l in cand[lcp..].iter().rev() {
                            push_reduced(&mut next, l.inv());
                        }
                        for &l in &cur[i + lcp..] {
                            push_reduced(&mut next, l);
                        }
                        cur = next;
                        continue 'outer;
                    }
                }
            }
            break;
        }
        SurfaceWord { letters: cur }
    }

    /// Cyclically reduce and Dehn-reduce a word viewed as a cyclic word.
    pub fn cyclic_reduce(&self, w: &SurfaceWord) -> SurfaceWord {
        let mut cur = cyclic_free(w.letters.clone());
        if self.genus() < 2 {
            return SurfaceWord { letters: cur };
        }
        let half = self.relator_len / 2;
        'outer: loop {
            let len = cur.len();
            for i in 0..len {
                for cand in &self.rotations[cur[i].slot()] {
                    let lcp = cyclic_lcp(&cur, i, cand);
                    if lcp > half {
                        cur = splice_cyclic(&cur, i, lcp, &cand[lcp..]);
                        continue 'outer;
                    }
                }
            }
            break;
        }
        SurfaceWord { letters: cur }
    }

    fn half_swaps(&self, cur: &[Letter]) -> Vec<Vec<Letter>> {
        let half = self.relator_len / 2;
        let mut out = Vec::new();
        for i in 0..cur.len() {
            for cand in &self.rotations[cur[i].slot()] {
                if cyclic_lcp(cur, i, cand) >= half {
                    out.push(splice_cyclic(cur, i, half, &cand[half..]));
                }
            }
        }
        out
    }

    // Closure of a cyclic word under half-relator swaps followed by reduction.
    fn swap_closure(&self, start: &SurfaceWord) -> Closure {
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        let s = canonical_rotation(&self.cyclic_reduce(start).letters);
        seen.insert(s.clone());
        queue.push_back(s);
        let mut complete = true;
        while let Some(w) = queue.pop_front() {
            for next in self.half_swaps(&w) {
                let reduced = self.cyclic_reduce(&SurfaceWord { letters: next });
                let c = canonical_rotation(&reduced.letters);
                if seen.contains(&c) {
                    continue;
                }
                if seen.len() >= self.conj_state_limit {
                    complete = false;
                    break;
                }
                seen.insert(c.clone());
                queue.push_back(c);
            }
            if !complete {
                break;
            }
        }
        let min_len = seen.iter().map(Vec::len).min().unwrap_or(0);
        Closure { words: seen, min_len, complete }
    }

    /// Decide whether `u` and `v` are conjugate in `pi_1(F)`.
    pub fn conjugate(&self, u: &SurfaceWord, v: &SurfaceWord) -> Conjugacy {
        let (Ok(hu), Ok(hv)) = (self.abelianize(u), self.abelianize(v)) else {
            return Conjugacy::No;
        };
        if hu != hv {
            return Conjugacy::No;
        }
        if self.genus() < 2 {
            return Conjugacy::Yes;
        }
        let ru = self.cyclic_reduce(u);
        let rv = self.cyclic_reduce(v);
        if canonical_rotation(&ru.letters) == canonical_rotation(&rv.letters) {
            return Conjugacy::Yes;
        }
        if ru.len() > self.conj_max_len || rv.len() > self.conj_max_len {
            return Conjugacy::Unknown;
        }
        let cu = self.swap_closure(&ru);
        let cv = self.swap_closure(&rv);
        if cu.words.iter().any(|w| cv.words.contains(w)) {
            return Conjugacy::Yes;
        }
        if cu.complete && cv.complete && cu.min_len != cv.min_len {
            return Conjugacy::No;
        }
        if self.conjugator_search(&cu, &cv) {
            return Conjugacy::Yes;
        }
        Conjugacy::Unknown
    }

    fn conjugator_search(&self, cu: &Closure, cv: &Closure) -> bool {
        let Some(target) = cv.words.iter().find(|w| w.len() == cv.min_len) else {
            return false;
        };
        let target_inv = SurfaceWord { letters: target.clone() }.inverse();
        let conjugators = reduced_words(self.base.rank() as u32, self.conjugator_len);
        for w in cu.words.iter().filter(|w| w.len() == cu.min_len) {
            for r in 0..w.len().max(1) {
                let rotated: Vec<Letter> = (0..w.len()).map(|j| w[(r + j) % w.len()]).collect();
                let rotated = SurfaceWord { letters: rotated };
                for z in &conjugators {
                    let candidate = rotated.conjugate_by(z).multiply(&target_inv);
                    if self.is_trivial(&candidate) {
                        return true;
                    }
                }
            }
        }
        false
    }
}

struct Closure {
    words: HashSet<Vec<Letter>>,
    min_len: usize,
    complete: bool,
}

fn cyclic_free(letters: Vec<Letter>) -> Vec<Letter> {
    let mut w = free_reduce(letters);
    while w.len() >= 2 && w[0] == w[w.len() - 1].inv() {
        w.pop();
        w.remove(0);
    }
    w
}

fn cyclic_lcp(w: &[Letter], start: usize, cand: &[Letter]) -> usize {
    let len = w.len();
    (0..len.min(cand.len())).take_while(|&j| w[(start + j) % len] == cand[j]).count()
}

// Rotate `w` to start at `start`, replace the first `count` letters by the inverse of `rest`.
fn splice_cyclic(w: &[Letter], start: usize, count: usize, rest: &[Letter]) -> Vec<Letter> {
    let len = w.len();
    let mut out = Vec::with_capacity(len);
    for l in rest.iter().rev() {
        push_reduced(&mut out, l.inv());
    }
    for j in count..len {
        push_reduced(&mut out, w[(start + j) % len]);
    }
    cyclic_free(out)
}

/// Lexicographically least rotation, used as the key of a cyclic word.
pub fn canonical_rotation(w: &[Letter]) -> Vec<Letter> {
    let n = w.len();
    (0..n.max(1)).map(|r| (0..n).map(|j| w[(r + j) % n]).collect::<Vec<_>>()).min().unwrap_or_default()
}

/// All freely reduced words of length at most `max_len` over `rank` generators.
pub fn reduced_words(rank: u32, max_len: usize) -> Vec<SurfaceWord> {
    let mut out = vec![SurfaceWord::identity()];
    let mut frontier = vec![Vec::<Letter>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for gen in 0..rank {
                for inverse in [false, true] {
                    let l = Letter::new(gen, inverse);
                    if w.last() == Some(&l.inv()) {
                        continue;
                    }
                    let mut e = w.clone();
                    e.push(l);
                    next.push(e);
                }
            }
        }
        out.extend(next.iter().map(|w| SurfaceWord { letters: w.clone() }));
        frontier = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SurfaceWord {
        SurfaceWord::parse(s).unwrap()
    }

    fn g2() -> SurfaceGroup {
        SurfaceGroup::with_genus(2).unwrap()
    }

    #[test]
    fn intersection_examples() {
        let a1 = H1Class::parse("A1", 2).unwrap();
        let b1 = H1Class::parse("B1", 2).unwrap();
        let a2 = H1Class::parse("A2", 2).unwrap();
        assert_eq!(a1.intersection_number(&b1).unwrap(), 1);
        assert_eq!(a1.intersection_number(&a2).unwrap(), 0);
        let x = H1Class::parse("2*A1 + B2", 2).unwrap();
        let y = H1Class::parse("A1 - B1", 2).unwrap();
        // term by term: 2<A1,A1> - 2<A1,B1> + <B2,A1> - <B2,B1> = 0 - 2 + 0 - 0
        assert_eq!(x.intersection_number(&y).unwrap(), -2);
    }

    #[test]
    fn intersection_genus_mismatch() {
        let x = H1Class::zero(2);
        let y = H1Class::zero(3);
        assert!(matches!(x.intersection_number(&y), Err(Error::GenusMismatch { .. })));
    }

    #[test]
    fn h1_literal_roundtrip() {
        let x = H1Class::parse("2*A1 - 3*B2", 2).unwrap();
        assert_eq!(x.coords(), &[2, 0, 0, -3]);
        assert_eq!(x.to_string(), "2*A1 - 3*B2");
        assert_eq!(H1Class::parse(&x.to_string(), 2).unwrap(), x);
        assert_eq!(H1Class::parse("0", 2).unwrap(), H1Class::zero(2));
        assert!(H1Class::parse("A3", 2).is_err());
        assert!(H1Class::parse("2 + A1", 2).is_err());
        assert_eq!(H1Class::parse("-B1", 1).unwrap().coords(), &[0, -1]);
    }

    #[test]
    fn word_examples() {
        assert!(w("A1").multiply(&w("A1^-1")).is_empty());
        assert_eq!(w("A1 B1").multiply(&w("B1^-1")), w("A1"));
        assert_eq!(w("A1 B2^-1").inverse(), w("B2 A1^-1"));
        assert_eq!(w("A1B1A1^-1"), w("A1 B1 A1^-1"));
        assert_eq!(w("A1 B2^3").to_string(), "A1 B2^3");
        assert_eq!(w("1"), SurfaceWord::identity());
    }

    #[test]
    fn triviality_examples() {
        let g = g2();
        assert!(g.is_trivial(&w("A1 A1^-1")));
        assert!(g.is_trivial(&g.base().relator()));
        assert!(g.is_trivial(&w("A1 B1 A1^-1 B1^-1 A2 B2 A2^-1 B2^-1")));
        assert!(!g.is_trivial(&w("A1 B1")));
        // a single commutator is not a relator at genus 2
        assert!(!g.is_trivial(&w("A1 B1 A1^-1 B1^-1")));
        // conjugates of the relator and its inverse
        let r = g.base().relator();
        assert!(g.is_trivial(&r.conjugate_by(&w("B2 A1^2"))));
        assert!(g.is_trivial(&r.inverse().multiply(&w("A2")).multiply(&r).multiply(&w("A2^-1"))));
    }

    #[test]
    fn genus_one_falls_back_to_homology() {
        let g = SurfaceGroup::with_genus(1).unwrap();
        assert!(g.is_trivial(&w("A1 B1 A1^-1 B1^-1")));
        assert!(!g.is_trivial(&w("A1")));
        assert_eq!(g.conjugate(&w("A1 B1"), &w("B1 A1")), Conjugacy::Yes);
        assert_eq!(g.conjugate(&w("A1"), &w("B1")), Conjugacy::No);
    }

    #[test]
    fn conjugacy_examples() {
        let g = g2();
        let x = w("A1 B2 A2^-1");
        assert_eq!(g.conjugate(&x, &x), Conjugacy::Yes);
        assert_eq!(g.conjugate(&w("A1"), &w("B1")), Conjugacy::No);
        assert_eq!(g.conjugate(&w("A1 B1"), &w("B1 A1")), Conjugacy::Yes);
        assert_eq!(g.conjugate(&x, &x.conjugate_by(&w("B1 A2^2"))), Conjugacy::Yes);
    }

    #[test]
    fn abelianize_examples() {
        assert!(w("").abelianize(2).unwrap().is_zero());
        assert!(w("A1 B1 A1^-1 B1^-1").abelianize(2).unwrap().is_zero());
        assert_eq!(w("A1 A1 B2^-1").abelianize(2).unwrap().coords(), &[2, 0, 0, -1]);
        assert!(w("A3").abelianize(2).is_err());
    }

    #[test]
    fn genus_zero_rejected() {
        assert!(SurfaceBase::new(0).is_err());
        assert!(SurfaceBase::new(1).unwrap().require_hyperbolic().is_err());
    }

    #[test]
    fn reduced_word_count() {
        // 1 + 8 + 8*7
        assert_eq!(reduced_words(4, 2).len(), 65);
    }
}
