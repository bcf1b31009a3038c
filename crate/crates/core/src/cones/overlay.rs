//! Curated facts about specific classes, shipped as a line-oriented data file.

use once_cell::sync::Lazy;
use serde::Serialize;

use super::Property;
use crate::error::{Error, Result};
use crate::lattice::{SurfaceKind, TriState};

const SOURCE: &str = include_str!("../../data/known_facts.txt");
const SUPPORTED_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GenusRange {
    Exactly(u32),
    AtLeast(u32),
}

impl GenusRange {
    fn contains(self, g: u32) -> bool {
        match self {
            GenusRange::Exactly(n) => g == n,
            GenusRange::AtLeast(n) => g >= n,
        }
    }
}

/// `constant + slope·g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Affine {
    pub constant: i64,
    pub slope: i64,
}

impl Affine {
    pub fn eval(self, g: u32) -> i64 {
        self.constant + self.slope * g as i64
    }

    fn parse(s: &str) -> std::result::Result<Self, String> {
        let mut out = Affine { constant: 0, slope: 0 };
        let mut rest = s.trim();
        if rest.is_empty() {
            return Err("empty expression".into());
        }
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body[1.min(body.len())..].find(['+', '-']).map_or(body.len(), |i| i + 1);
            let (term, tail) = body.split_at(end);
            if let Some(coef) = term.strip_suffix('g') {
                let c: i64 = if coef.is_empty() { 1 } else { coef.parse().map_err(|_| format!("bad term {term:?}"))? };
                out.slope += sign * c;
            } else {
                let c: i64 = term.parse().map_err(|_| format!("bad term {term:?}"))?;
                out.constant += sign * c;
            }
            rest = tail;
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnownFact {
    pub genus: GenusRange,
    pub surface: SurfaceKind,
    pub a: Affine,
    pub a_prime: Option<Affine>,
    pub k: Affine,
    pub property: Property,
    pub verdict: TriState,
    pub citation: String,
}

impl KnownFact {
    /// Whether this fact is about the class with the given integer coordinates.
    pub fn matches(&self, surface: SurfaceKind, genus: u32, a: i64, a_prime: Option<i64>, k: i64) -> bool {
        self.surface == surface
            && self.genus.contains(genus)
            && self.a.eval(genus) == a
            && self.a_prime.map(|x| x.eval(genus)) == a_prime
            && self.k.eval(genus) == k
    }
}

pub fn parse_overlay(text: &str) -> Result<Vec<KnownFact>> {
    let mut facts = Vec::new();
    let mut version = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |message: String| Error::OverlayParse { line, message };
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        if let Some(v) = content.strip_prefix("version") {
            let v: u32 = v.trim().parse().map_err(|_| err(format!("bad version {v:?}")))?;
            if v != SUPPORTED_VERSION {
                return Err(err(format!("unsupported overlay version {v}")));
            }
            version = Some(v);
            continue;
        }
        if version.is_none() {
            return Err(err("missing version line before the first entry".into()));
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() < 8 {
            return Err(err(format!("expected at least 8 fields, found {}", fields.len())));
        }
        let genus = match fields[0].strip_suffix('+') {
            Some(n) => GenusRange::AtLeast(n.parse().map_err(|_| err(format!("bad genus {:?}", fields[0])))?),
            None => GenusRange::Exactly(fields[0].parse().map_err(|_| err(format!("bad genus {:?}", fields[0])))?),
        };
        let surface: SurfaceKind = fields[1].parse().map_err(err)?;
        let a = Affine::parse(fields[2]).map_err(err)?;
        let a_prime = match fields[3] {
            "-" => None,
            s => Some(Affine::parse(s).map_err(err)?),
        };
        if (surface == SurfaceKind::Cartesian) != a_prime.is_some() {
            return Err(err("a2 must be given for cartesian classes and '-' for symmetric ones".into()));
        }
        let k = Affine::parse(fields[4]).map_err(err)?;
        let property: Property = fields[5].parse().map_err(err)?;
        let verdict: TriState = fields[6].parse().map_err(err)?;
        let citation = fields[7..].join(" ");
        facts.push(KnownFact { genus, surface, a, a_prime, k, property, verdict, citation });
    }
    Ok(facts)
}

static FACTS: Lazy<Vec<KnownFact>> =
    Lazy::new(|| parse_overlay(SOURCE).expect("bundled known-facts overlay must parse"));

/// The bundled overlay.
pub fn known_facts() -> &'static [KnownFact] {
    &FACTS
}

pub fn lookup(surface: SurfaceKind, genus: u32, a: i64, a_prime: Option<i64>, k: i64) -> Vec<&'static KnownFact> {
    known_facts().iter().filter(|f| f.matches(surface, genus, a, a_prime, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_overlay_parses() {
        let facts = known_facts();
        assert_eq!(facts.len(), 3);
        assert!(facts.iter().all(|f| f.property == Property::VeryAmple && f.verdict == TriState::Yes));
    }

    #[test]
    fn affine_expressions() {
        assert_eq!(Affine::parse("2g-2").unwrap(), Affine { constant: -2, slope: 2 });
        assert_eq!(Affine::parse("-g+7").unwrap(), Affine { constant: 7, slope: -1 });
        assert_eq!(Affine::parse("g").unwrap().eval(5), 5);
        assert_eq!(Affine::parse("-3").unwrap().eval(9), -3);
        assert!(Affine::parse("2h").is_err());
        assert!(Affine::parse("").is_err());
    }

    #[test]
    fn lookups() {
        assert_eq!(lookup(SurfaceKind::Cartesian, 3, 4, Some(4), 0).len(), 1);
        assert_eq!(lookup(SurfaceKind::Symmetric, 5, 8, None, 0).len(), 1);
        assert!(lookup(SurfaceKind::Symmetric, 2, 2, None, 0).is_empty());
        assert!(lookup(SurfaceKind::Cartesian, 4, 4, Some(4), 0).is_empty());
    }

    #[test]
    fn malformed_lines_report_their_position() {
        let missing_version = "3 cartesian 4 4 0 very_ample yes x";
        assert!(matches!(parse_overlay(missing_version), Err(Error::OverlayParse { line: 1, .. })));
        let bad = "version 1\n# c\n3 cartesian 4 - 0 very_ample yes x";
        assert!(matches!(parse_overlay(bad), Err(Error::OverlayParse { line: 3, .. })));
        let bad_prop = "version 1\n3 cartesian 4 4 0 shiny yes x";
        assert!(matches!(parse_overlay(bad_prop), Err(Error::OverlayParse { line: 2, .. })));
        assert!(parse_overlay("version 2").is_err());
    }
}
