//! Line-oriented script format:
//!
//! ```text
//! manifold genus=2 euler=0
//! field k=1 dual="A2"
//! component K1 base="f" kinks=0
//! component K2 base="f^1" kinks=0 clasped=true
//! begin homotopy H
//!   cross K1 K2 sign=+
//!   drag K1 path="B2"
//! end
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::error::Error;
use crate::extension::{Ambient, BundleData, FieldData, Pi1MElement};
use crate::moves::{ComponentDecl, HomotopyScript, MoveEvent, PairOp, Sign};
use crate::surface::{H1Class, SurfaceWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message} (at `{token}`)")]
pub struct ParseError {
    pub line: usize,
    pub token: String,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, token: &str, message: impl Into<String>) -> Self {
        Self { line, token: token.to_string(), message: message.into() }
    }
}

/// A parsed script file: shared header and components, plus named homotopies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScriptFile {
    pub bundle: BundleData,
    pub field: FieldData,
    pub components: Vec<ComponentDecl>,
    pub homotopies: Vec<(String, Vec<MoveEvent>)>,
}

impl ScriptFile {
    pub fn ambient(&self) -> Result<Ambient, Error> {
        Ambient::new(self.bundle, self.field.clone())
    }

    pub fn scripts(&self) -> Result<Vec<HomotopyScript>, Error> {
        let amb = self.ambient()?;
        Ok(self
            .homotopies
            .iter()
            .map(|(name, events)| {
                HomotopyScript::new(name, amb.clone(), self.components.clone()).with_events(events.clone())
            })
            .collect())
    }

    /// The named homotopy, or the first one when `name` is `None`.
    pub fn script(&self, name: Option<&str>) -> Result<HomotopyScript, Error> {
        let all = self.scripts()?;
        match name {
            None => all.into_iter().next().ok_or_else(|| Error::Parse("file has no homotopy block".into())),
            Some(n) => {
                all.into_iter().find(|s| s.name == n).ok_or_else(|| Error::Parse(format!("no homotopy named `{n}`")))
            }
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "manifold genus={} euler={}", self.bundle.genus(), self.bundle.euler);
        let _ = writeln!(out, "field k={} dual=\"{}\"", self.field.k, self.field.dual);
        for c in &self.components {
            let _ = write!(out, "component {} base=\"{}\" kinks={}", c.name, c.base, c.kinks);
            if c.clasped {
                out.push_str(" clasped=true");
            }
            out.push('\n');
        }
        for (name, events) in &self.homotopies {
            let _ = writeln!(out, "begin homotopy {name}");
            for e in events {
                let _ = writeln!(out, "  {}", event_to_line(e));
            }
            out.push_str("end\n");
        }
        out
    }
}

impl From<&HomotopyScript> for ScriptFile {
    fn from(s: &HomotopyScript) -> Self {
        Self {
            bundle: s.ambient.bundle,
            field: s.ambient.field.clone(),
            components: s.components.clone(),
            homotopies: vec![(s.name.clone(), s.events.clone())],
        }
    }
}

pub fn event_to_line(e: &MoveEvent) -> String {
    match e {
        MoveEvent::Cross { a, b, sign } => format!("cross {a} {b} sign={}", sign.symbol()),
        MoveEvent::SelfCross { comp, sign } => format!("self {comp} sign={}", sign.symbol()),
        MoveEvent::Drag { comp, path } => format!("drag {comp} path=\"{path}\""),
        MoveEvent::Rot { comp, n } => format!("rot {comp} n={n}"),
        MoveEvent::Fib { comp, n } => format!("fib {comp} n={n}"),
        MoveEvent::KinkSlide { comp, n } => format!("kinkslide {comp} n={n}"),
        MoveEvent::VStab { comp, i } => format!("vstab {comp} i={i}"),
        MoveEvent::KinkPair { comp, writhe, op } => {
            let op = match op {
                PairOp::Create => "create",
                PairOp::Cancel => "cancel",
            };
            format!("kinkpair {comp} writhe={} op={op}", writhe.symbol())
        }
        MoveEvent::Clasp { comp } => format!("clasp {comp}"),
        MoveEvent::Unclasp { comp } => format!("unclasp {comp}"),
        MoveEvent::LegStab { comp, pos, neg } => format!("legstab {comp} pos={pos} neg={neg}"),
    }
}

// Split a line into tokens, keeping quoted values (which may contain spaces) whole.
fn tokenize(line: &str, lineno: usize) -> Result<Vec<String>, ParseError> {
    let mut tokens = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    for ch in line.chars() {
        match ch {
            '"' => {
                quoted = !quoted;
                cur.push(ch);
            }
            c if c.is_whitespace() && !quoted => {
                if !cur.is_empty() {
                    tokens.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if quoted {
        return Err(ParseError::new(lineno, &cur, "unterminated quote"));
    }
    if !cur.is_empty() {
        tokens.push(cur);
    }
    Ok(tokens)
}

struct Line<'a> {
    no: usize,
    keyword: &'a str,
    positional: Vec<&'a str>,
    attrs: BTreeMap<&'a str, (&'a str, &'a str)>,
}

impl<'a> Line<'a> {
    fn split(no: usize, tokens: &'a [String]) -> Result<Self, ParseError> {
        let mut positional = Vec::new();
        let mut attrs = BTreeMap::new();
        for t in &tokens[1..] {
            match t.split_once('=') {
                Some((key, value)) => {
                    if key.is_empty() {
                        return Err(ParseError::new(no, t, "empty attribute name"));
                    }
                    let value = value.strip_prefix('"').and_then(|v| v.strip_suffix('"')).unwrap_or(value);
                    if attrs.insert(key, (value, t.as_str())).is_some() {
                        return Err(ParseError::new(no, t, format!("duplicate attribute `{key}`")));
                    }
                }
                None => {
                    if !attrs.is_empty() {
                        return Err(ParseError::new(no, t, "positional argument after attributes"));
                    }
                    positional.push(t.as_str());
                }
            }
        }
        Ok(Self { no, keyword: &tokens[0], positional, attrs })
    }

    fn expect(&self, positional: usize, allowed: &[&str], required: &[&str]) -> Result<(), ParseError> {
        if self.positional.len() != positional {
            let tok = self.positional.get(positional).copied().unwrap_or(self.keyword);
            return Err(ParseError::new(
                self.no,
                tok,
                format!("`{}` takes {positional} name argument(s), got {}", self.keyword, self.positional.len()),
            ));
        }
        for (key, (_, tok)) in &self.attrs {
            if !allowed.contains(key) {
                return Err(ParseError::new(self.no, tok, format!("unknown attribute `{key}` for `{}`", self.keyword)));
            }
        }
        for key in required {
            if !self.attrs.contains_key(key) {
                return Err(ParseError::new(self.no, self.keyword, format!("missing attribute `{key}`")));
            }
        }
        Ok(())
    }

    fn raw(&self, key: &str) -> Option<(&'a str, &'a str)> {
        self.attrs.get(key).copied()
    }

    fn int(&self, key: &str) -> Result<Option<i64>, ParseError> {
        self.raw(key)
            .map(|(v, tok)| v.parse::<i64>().map_err(|_| ParseError::new(self.no, tok, "expected an integer")))
            .transpose()
    }

    fn req_int(&self, key: &str) -> Result<i64, ParseError> {
        Ok(self.int(key)?.expect("checked by expect"))
    }

    fn sign(&self, key: &str) -> Result<Sign, ParseError> {
        let (v, tok) = self.raw(key).expect("checked by expect");
        match v {
            "+" | "+1" => Ok(Sign::Pos),
            "-" | "-1" => Ok(Sign::Neg),
            _ => Err(ParseError::new(self.no, tok, "expected + or -")),
        }
    }

    fn name(&self, i: usize) -> Result<String, ParseError> {
        let n = self.positional[i];
        if !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(ParseError::new(self.no, n, "names use letters, digits and `_`"));
        }
        Ok(n.to_string())
    }
}

fn map_err(no: usize, tok: &str) -> impl Fn(Error) -> ParseError + '_ {
    move |e| ParseError::new(no, tok, e.to_string())
}

/// Parse `f`, `f^p`, a word, or `word f^p`.
pub fn parse_base(text: &str) -> Result<Pi1MElement, Error> {
    let mut word = Vec::new();
    let mut fiber = 0i64;
    for tok in text.split_whitespace() {
        if tok == "f" {
            fiber += 1;
        } else if let Some(p) = tok.strip_prefix("f^") {
            fiber += p.parse::<i64>().map_err(|_| Error::Parse(format!("bad fiber exponent `{tok}`")))?;
        } else {
            word.push(tok);
        }
    }
    let word = SurfaceWord::parse(&word.join(" "))?;
    Ok(Pi1MElement { base_word: word, fiber_exp: fiber })
}

fn parse_event(line: &Line<'_>, genus: Option<u32>) -> Result<MoveEvent, ParseError> {
    let one = |allowed: &[&str]| -> Result<String, ParseError> {
        line.expect(1, allowed, allowed)?;
        line.name(0)
    };
    let ev = match line.keyword {
        "cross" => {
            line.expect(2, &["sign"], &["sign"])?;
            MoveEvent::Cross { a: line.name(0)?, b: line.name(1)?, sign: line.sign("sign")? }
        }
        "self" => MoveEvent::SelfCross { comp: one(&["sign"])?, sign: line.sign("sign")? },
        "drag" => {
            let comp = one(&["path"])?;
            let (v, tok) = line.raw("path").expect("checked");
            let genus = genus.ok_or_else(|| ParseError::new(line.no, tok, "drag before the `manifold` line"))?;
            MoveEvent::Drag { comp, path: H1Class::parse(v, genus).map_err(map_err(line.no, tok))? }
        }
        "rot" => MoveEvent::Rot { comp: one(&["n"])?, n: line.req_int("n")? },
        "fib" => MoveEvent::Fib { comp: one(&["n"])?, n: line.req_int("n")? },
        "kinkslide" => MoveEvent::KinkSlide { comp: one(&["n"])?, n: line.req_int("n")? },
        "vstab" => MoveEvent::VStab { comp: one(&["i"])?, i: line.req_int("i")? },
        "kinkpair" => {
            let comp = one(&["writhe", "op"])?;
            let (v, tok) = line.raw("op").expect("checked");
            let op = match v {
                "create" => PairOp::Create,
                "cancel" => PairOp::Cancel,
                _ => return Err(ParseError::new(line.no, tok, "expected create or cancel")),
            };
            MoveEvent::KinkPair { comp, writhe: line.sign("writhe")?, op }
        }
        "clasp" => MoveEvent::Clasp { comp: one(&[])? },
        "unclasp" => MoveEvent::Unclasp { comp: one(&[])? },
        "legstab" => {
            MoveEvent::LegStab { comp: one(&["pos", "neg"])?, pos: line.req_int("pos")?, neg: line.req_int("neg")? }
        }
        other => return Err(ParseError::new(line.no, other, "unknown event")),
    };
    Ok(ev)
}

fn strip_comment(line: &str) -> &str {
    let mut quoted = false;
    for (i, ch) in line.char_indices() {
        match ch {
            '"' => quoted = !quoted,
            '#' if !quoted => return &line[..i],
            _ => {}
        }
    }
    line
}

/// Parse a loop word: events separated by `;` or newlines.
pub fn parse_events(text: &str, genus: u32) -> Result<Vec<MoveEvent>, ParseError> {
    let mut out = Vec::new();
    for (i, chunk) in text.split(['\n', ';']).enumerate() {
        let tokens = tokenize(strip_comment(chunk), i + 1)?;
        if tokens.is_empty() {
            continue;
        }
        out.push(parse_event(&Line::split(i + 1, &tokens)?, Some(genus))?);
    }
    Ok(out)
}

pub fn parse(text: &str) -> Result<ScriptFile, ParseError> {
    let mut bundle: Option<BundleData> = None;
    let mut field: Option<(i64, String, usize, String)> = None;
    let mut components: Vec<(ComponentDecl, usize, String)> = Vec::new();
    let mut homotopies: Vec<(String, Vec<MoveEvent>)> = Vec::new();
    let mut open: Option<(String, usize)> = None;
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        last = no;
        let tokens = tokenize(strip_comment(raw), no)?;
        if tokens.is_empty() {
            continue;
        }
        let line = Line::split(no, &tokens)?;
        let genus = bundle.map(|b| b.genus());
        if open.is_some() {
            if line.keyword == "end" {
                line.expect(0, &[], &[])?;
                open = None;
                continue;
            }
            let ev = parse_event(&line, genus)?;
            homotopies.last_mut().expect("open block").1.push(ev);
            continue;
        }
        match line.keyword {
            "manifold" => {
                line.expect(0, &["genus", "euler"], &["genus"])?;
                if bundle.is_some() {
                    return Err(ParseError::new(no, "manifold", "second `manifold` line"));
                }
                let g = line.req_int("genus")?;
                let tok = line.raw("genus").expect("checked").1;
                let g = u32::try_from(g).map_err(|_| ParseError::new(no, tok, "genus must be positive"))?;
                let euler = line.int("euler")?.unwrap_or(0);
                bundle = Some(BundleData::new(g, euler).map_err(map_err(no, tok))?);
            }
            "field" => {
                line.expect(0, &["k", "dual"], &["k", "dual"])?;
                if field.is_some() {
                    return Err(ParseError::new(no, "field", "second `field` line"));
                }
                let (dual, tok) = line.raw("dual").expect("checked");
                field = Some((line.req_int("k")?, dual.to_string(), no, tok.to_string()));
            }
            "component" => {
                line.expect(1, &["base", "kinks", "clasped"], &["base"])?;
                let name = line.name(0)?;
                let (b, tok) = line.raw("base").expect("checked");
                let base = parse_base(b).map_err(map_err(no, tok))?;
                let kinks = line.int("kinks")?.unwrap_or(0);
                let clasped = match line.raw("clasped") {
                    None | Some(("false", _)) => false,
                    Some(("true", _)) => true,
                    Some((_, tok)) => return Err(ParseError::new(no, tok, "expected true or false")),
                };
                if components.iter().any(|(c, _, _)| c.name == name) {
                    return Err(ParseError::new(no, &name, "duplicate component name"));
                }
                components.push((ComponentDecl { name, base, kinks, clasped }, no, tok.to_string()));
            }
            "begin" => {
                if line.positional.len() != 2 || line.positional[0] != "homotopy" || !line.attrs.is_empty() {
                    return Err(ParseError::new(no, "begin", "expected `begin homotopy <name>`"));
                }
                let name = line.name(1)?;
                if homotopies.iter().any(|(n, _)| *n == name) {
                    return Err(ParseError::new(no, &name, "duplicate homotopy name"));
                }
                homotopies.push((name.clone(), Vec::new()));
                open = Some((name, no));
            }
            "end" => return Err(ParseError::new(no, "end", "`end` without `begin`")),
            other => return Err(ParseError::new(no, other, "unknown directive")),
        }
    }
    if let Some((name, no)) = open {
        return Err(ParseError::new(no, &name, "homotopy block is not closed with `end`"));
    }
    let bundle = bundle.ok_or_else(|| ParseError::new(last, "", "missing `manifold` line"))?;
    let (k, dual, no, tok) = field.ok_or_else(|| ParseError::new(last, "", "missing `field` line"))?;
    let dual = H1Class::parse(&dual, bundle.genus()).map_err(map_err(no, &tok))?;
    let mut decls = Vec::with_capacity(components.len());
    for (c, no, tok) in components {
        // words must use generators of this genus
        if let Some(g) = c.base.base_word.max_generator() {
            if g >= 2 * bundle.genus() {
                return Err(ParseError::new(no, &tok, format!("generator out of range for genus {}", bundle.genus())));
            }
        }
        decls.push(c);
    }
    Ok(ScriptFile { bundle, field: FieldData::new(k, dual), components: decls, homotopies })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"
# two fibers
manifold genus=2 euler=0
field k=1 dual="A2"
component K1 base="f" kinks=0
component K2 base="f^1" clasped=true   # trailing comment
begin homotopy H
  cross K1 K2 sign=+
  drag K1 path="2*B2 - A1"
  kinkpair K2 writhe=- op=create
  legstab K1 pos=1 neg=0
end
begin homotopy G
end
"#;

    #[test]
    fn parses_sample() {
        let f = parse(SAMPLE).unwrap();
        assert_eq!(f.bundle, BundleData::product(2).unwrap());
        assert_eq!(f.field.dual.coords(), &[0, 0, 1, 0]);
        assert!(f.components[1].clasped);
        assert_eq!(f.components[1].base, Pi1MElement::fiber(1));
        assert_eq!(f.homotopies.len(), 2);
        assert_eq!(f.homotopies[0].1.len(), 4);
        assert_eq!(f.script(Some("G")).unwrap().events.len(), 0);
    }

    #[test]
    fn round_trip() {
        let f = parse(SAMPLE).unwrap();
        assert_eq!(parse(&f.to_text()).unwrap(), f);
    }

    #[test]
    fn errors_carry_line_and_token() {
        let e = parse("manifold genus=2\nfield k=1 dual=\"A2\"\nbegin homotopy H\n  twist K1\nend\n").unwrap_err();
        assert_eq!((e.line, e.token.as_str()), (4, "twist"));
        let e = parse("manifold genus=2\nfield k=x dual=\"A2\"\n").unwrap_err();
        assert_eq!((e.line, e.token.as_str()), (2, "k=x"));
        let e = parse("manifold genus=2\nmanifold genus=3\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse("manifold genus=2\nfield k=1 dual=\"A3\"\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse("manifold genus=2\nfield k=1 dual=\"A2\"\nbegin homotopy H\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse("manifold genus=2\nfield k=1 dual=\"A2\"\ncomponent K1 base=\"f\" bogus=1\n").unwrap_err();
        assert_eq!(e.token, "bogus=1");
    }

    #[test]
    fn semantic_errors_wait_for_validation() {
        let f = parse(
            "manifold genus=2\nfield k=1 dual=\"A2\"\ncomponent K1 base=\"f\"\nbegin homotopy H\n  fib K1 n=1\nend\n",
        )
        .unwrap();
        assert!(f.script(None).unwrap().validate().is_err());
    }

    #[test]
    fn loop_words() {
        let evs = parse_events("drag K1 path=\"B2\"; rot K1 n=2", 2).unwrap();
        assert_eq!(evs.len(), 2);
        assert!(parse_events("rot K1", 2).is_err());
    }

    #[test]
    fn bases() {
        assert_eq!(parse_base("f^-2").unwrap(), Pi1MElement::fiber(-2));
        let b = parse_base("A1 B1^2 f^3").unwrap();
        assert_eq!((b.base_word.len(), b.fiber_exp), (3, 3));
        assert_eq!(parse_base(&b.to_string()).unwrap(), b);
        assert!(parse_base("Q1").is_err());
    }
}
