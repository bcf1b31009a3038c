//! Positivity verdicts for classes on `C×C` and `C₂`.
//!
//! Each property gets a yes/no/unknown verdict with the statement it came
//! from. Theorem windows are evaluated first, then the known-facts overlay
//! may settle an unknown, and finally the implications
//! `very ample ⇒ ample ⇒ nef ⇒ quasi-effective` (plus `ample ⇒ big`,
//! `globally generated ⇒ nef`) are propagated in both directions.

mod kouvidakis;
pub mod overlay;
pub mod reider;

use std::fmt;
use std::str::FromStr;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

pub use kouvidakis::{kouvidakis_cones, KouvidakisCones, SlopeWindow};
pub use reider::{reider_certify, reider_certify_adjoint, ObstructionCandidate, ReiderCondition, ReiderMode, ReiderReport};

use crate::error::{require_genus, Error, Result};
use crate::lattice::{CartesianClass, SurfaceClass, SurfaceKind, TriState};
use crate::rational::{as_integer, q, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    QuasiEffective,
    Nef,
    Big,
    Ample,
    GloballyGenerated,
    VeryAmple,
    NonSpecial,
}

impl Property {
    pub const ALL: [Property; 7] = [
        Property::QuasiEffective,
        Property::Nef,
        Property::Big,
        Property::Ample,
        Property::GloballyGenerated,
        Property::VeryAmple,
        Property::NonSpecial,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Property::QuasiEffective => "quasi_effective",
            Property::Nef => "nef",
            Property::Big => "big",
            Property::Ample => "ample",
            Property::GloballyGenerated => "globally_generated",
            Property::VeryAmple => "very_ample",
            Property::NonSpecial => "non_special",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Property::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| format!("unknown property {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositivityVerdict {
    pub property: Property,
    pub verdict: TriState,
    pub provenance: String,
}

/// One verdict per property, in [`Property::ALL`] order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Verdicts(pub Vec<PositivityVerdict>);

const NO_CRITERION: &str = "no applicable criterion";

impl Verdicts {
    fn unknown() -> Self {
        Verdicts(
            Property::ALL
                .into_iter()
                .map(|property| PositivityVerdict { property, verdict: TriState::Unknown, provenance: NO_CRITERION.into() })
                .collect(),
        )
    }

    fn slot(&mut self, p: Property) -> &mut PositivityVerdict {
        self.0.iter_mut().find(|v| v.property == p).expect("every property has a slot")
    }

    pub fn get(&self, p: Property) -> TriState {
        self.entry(p).verdict
    }

    pub fn entry(&self, p: Property) -> &PositivityVerdict {
        self.0.iter().find(|v| v.property == p).expect("every property has a slot")
    }

    /// Records a verdict. Unknown never overwrites a settled value; two
    /// settled values that disagree are an internal inconsistency.
    fn set(&mut self, p: Property, verdict: TriState, provenance: impl Into<String>) -> Result<()> {
        let slot = self.slot(p);
        match (slot.verdict, verdict) {
            (_, TriState::Unknown) => {
                if slot.verdict == TriState::Unknown && slot.provenance == NO_CRITERION {
                    slot.provenance = provenance.into();
                }
            }
            (TriState::Unknown, v) => {
                slot.verdict = v;
                slot.provenance = provenance.into();
            }
            (old, new) if old == new => {}
            (old, new) => {
                return Err(Error::Inconsistent(format!(
                    "{p} is {old} by {:?} but {new} by {:?}",
                    slot.provenance,
                    provenance.into()
                )));
            }
        }
        Ok(())
    }

    /// Propagates the implications between properties until nothing changes.
    fn close(&mut self) -> Result<()> {
        use Property::*;
        // (stronger, weaker): stronger=yes ⇒ weaker=yes and weaker=no ⇒ stronger=no
        const IMPLIES: [(Property, Property); 6] = [
            (VeryAmple, Ample),
            (Ample, Nef),
            (Nef, QuasiEffective),
            (Ample, Big),
            (Big, QuasiEffective),
            (GloballyGenerated, Nef),
        ];
        loop {
            let before = self.clone();
            for (strong, weak) in IMPLIES {
                if self.get(strong) == TriState::Yes {
                    self.set(weak, TriState::Yes, format!("implied by {strong}"))?;
                }
                if self.get(weak) == TriState::No {
                    self.set(strong, TriState::No, format!("excluded since not {weak}"))?;
                }
            }
            if *self == before {
                return Ok(());
            }
        }
    }

    fn apply_overlay(&mut self, surface: SurfaceKind, genus: u32, a: i64, a_prime: Option<i64>, k: i64) -> Result<()> {
        for fact in overlay::lookup(surface, genus, a, a_prime, k) {
            self.set(fact.property, fact.verdict, format!("known fact: {}", fact.citation))?;
        }
        Ok(())
    }
}

fn yes_or(cond: bool, otherwise: TriState) -> TriState {
    if cond {
        TriState::Yes
    } else {
        otherwise
    }
}

/// `D_{a,a,k}` on `C×C` for an arbitrary genus-2 curve. `k` may be a
/// quarter-integer; the global-generation and very-ampleness statements
/// only cover integral classes.
pub fn cone_status_cartesian_g2(a: i64, k: Q) -> Result<Verdicts> {
    const SRC: &str = "genus-2 cartesian cone theorem";
    let mut v = Verdicts::unknown();
    let a_q = q(a);
    let abs_k = k.abs();
    let two_k = abs_k * q(2);
    v.set(Property::QuasiEffective, TriState::from_bool(abs_k <= a_q), format!("{SRC}: quasi-effective iff |k| ≤ a"))?;
    v.set(Property::Nef, TriState::from_bool(two_k <= a_q), format!("{SRC}: nef iff 2|k| ≤ a"))?;
    v.set(Property::Ample, TriState::from_bool(two_k < a_q), format!("{SRC}: ample iff 2|k| < a"))?;
    // strictly inside the effective cone = ample + effective; on the boundary
    // the class is a multiple of the (−2)-curve Δ or D(i)
    v.set(Property::Big, TriState::from_bool(abs_k < a_q), format!("{SRC}: big iff |k| < a"))?;

    if let Some(k) = as_integer(&k) {
        let gg = (a, k) == (4, 0) || (a >= 5 && 2 * k.abs() <= a - 2);
        let gg_src = format!("{SRC}: globally generated and non-special if (a,k) = (4,0) or a ≥ 5, 2|k| ≤ a−2");
        v.set(Property::GloballyGenerated, yes_or(gg, TriState::Unknown), gg_src.clone())?;
        v.set(Property::NonSpecial, yes_or(gg, TriState::Unknown), gg_src)?;
        let va = a >= 5 && 2 * k.abs() <= a - 3;
        v.set(Property::VeryAmple, TriState::from_bool(va), format!("{SRC}: very ample iff a ≥ 5 and 2|k| ≤ a−3"))?;
        v.apply_overlay(SurfaceKind::Cartesian, 2, a, Some(a), k)?;
    }
    v.close()?;
    Ok(v)
}

/// Necessary conditions for `D_{a,a′,k}` (any bidegree) on `C×C`, `g = 2`:
/// ample ⇒ `2k² < aa′` and `4|k| ≤ a+a′−1`; very ample ⇒ `a, a′ ≥ 5` and
/// `4|k| ≤ a+a′−5`. Passing them proves nothing.
pub fn necessary_conditions_g2_bidegree(a: i64, a_prime: i64, k: i64) -> Result<Verdicts> {
    const SRC: &str = "genus-2 necessary conditions for arbitrary bidegree";
    let mut v = Verdicts::unknown();
    let ample_ok = 2 * k * k < a * a_prime && 4 * k.abs() < a + a_prime;
    let va_ok = a >= 5 && a_prime >= 5 && 4 * k.abs() <= a + a_prime - 5;
    let ample = if ample_ok { TriState::Unknown } else { TriState::No };
    let va = if va_ok { TriState::Unknown } else { TriState::No };
    v.set(Property::Ample, ample, format!("{SRC}: ample ⇒ 2k² < aa′ and 4|k| ≤ a+a′−1"))?;
    v.set(Property::VeryAmple, va, format!("{SRC}: very ample ⇒ a, a′ ≥ 5 and 4|k| ≤ a+a′−5"))?;
    v.apply_overlay(SurfaceKind::Cartesian, 2, a, Some(a_prime), k)?;
    v.close()?;
    Ok(v)
}

/// `D_{a,a,k}` on `C×C` for a genus-3 curve with general moduli.
pub fn cone_status_cartesian_g3(a: i64, k: i64) -> Result<Verdicts> {
    const SRC: &str = "genus-3 cartesian cone theorem";
    const VA: &str = "genus-3 cartesian very-ampleness theorem";
    let mut v = Verdicts::unknown();
    v.set(Property::QuasiEffective, TriState::from_bool(-a <= k && 5 * k <= 3 * a), format!("{SRC}: quasi-effective iff −a ≤ k ≤ 3a/5"))?;
    v.set(Property::Big, TriState::from_bool(-a < k && 5 * k < 3 * a), format!("{SRC}: big iff −a < k < 3a/5"))?;
    v.set(Property::Nef, TriState::from_bool(-a <= 3 * k && 9 * k <= 5 * a), format!("{SRC}: nef iff −a/3 ≤ k ≤ 5a/9"))?;
    v.set(Property::Ample, TriState::from_bool(-a < 3 * k && 9 * k < 5 * a), format!("{SRC}: ample iff −a/3 < k < 5a/9"))?;

    let va = a >= 7 && (a, k) != (8, 2) && -(a - 4) <= 3 * k && 9 * k <= 5 * (a - 4);
    let gg = va || (a, k) == (6, 0) || (a, k) == (8, 2);
    v.set(
        Property::VeryAmple,
        yes_or(va, TriState::Unknown),
        format!("{VA}: very ample if a ≥ 7, (a,k) ≠ (8,2), −(a−4)/3 ≤ k ≤ 5(a−4)/9"),
    )?;
    let gg_src = format!("{VA}: globally generated and non-special in the very ample range and at (6,0), (8,2)");
    v.set(Property::GloballyGenerated, yes_or(gg, TriState::Unknown), gg_src.clone())?;
    v.set(Property::NonSpecial, yes_or(gg, TriState::Unknown), gg_src)?;
    v.apply_overlay(SurfaceKind::Cartesian, 3, a, Some(a), k)?;
    v.close()?;
    Ok(v)
}

/// Windows for global generation and very ampleness of `D′_{a,k}` on `C₂`,
/// with the necessary condition for very ampleness.
struct SymmetricWindows {
    gg: bool,
    va: bool,
    va_necessary: bool,
    source: &'static str,
}

fn symmetric_windows(g: u32, a: i64, k: i64) -> Option<SymmetricWindows> {
    let m = k - 1;
    match g {
        2 => Some(SymmetricWindows {
            gg: a >= 4 && 2 * m.abs() <= a - 2,
            va: a >= 5 && 2 * m.abs() <= a - 3,
            va_necessary: a >= 5 && 1 - a <= 2 * m && 2 * m <= a - 3,
            source: "genus-2 symmetric square: globally generated and non-special if a ≥ 4, 2|k−1| ≤ a−2; \
                     very ample if a ≥ 5, 2|k−1| ≤ a−3; very ample ⇒ a ≥ 5, 1−a ≤ 2(k−1) ≤ a−3",
        }),
        3 => Some(SymmetricWindows {
            gg: a >= 6 && (a, k) != (7, 3) && 3 - a <= 3 * m && 9 * m <= 5 * a - 15,
            va: a >= 7 && (a, k) != (7, 3) && (a, k) != (9, 4) && 4 - a <= 3 * m && 9 * m <= 5 * a - 16,
            va_necessary: a >= 4 && -1 - a <= 3 * m && 9 * m <= 5 * a - 11,
            source: "genus-3 symmetric square: globally generated and non-special if a ≥ 6, (a,k) ≠ (7,3), \
                     3−a ≤ 3(k−1) ≤ 5a/3−5; very ample if a ≥ 7, (a,k) ∉ {(7,3),(9,4)}, 4−a ≤ 3(k−1) ≤ (5a−16)/3; \
                     very ample ⇒ a ≥ 4, −1−a ≤ 3(k−1) ≤ (5a−11)/3",
        }),
        4 => Some(SymmetricWindows {
            gg: a >= 8 && 9 - a <= 4 * k && 4 * k <= 2 * a - 8,
            va: a >= 9 && 9 - a <= 4 * k && 4 * k <= 2 * a - 10,
            va_necessary: a >= 6 && 3 - a <= 4 * k && 4 * k <= 2 * a - 6,
            source: "genus-4 symmetric square: globally generated and non-special if a ≥ 8, 9−a ≤ 4k ≤ 2a−8; \
                     very ample if a ≥ 9, 9−a ≤ 4k ≤ 2a−10; very ample ⇒ a ≥ 6, 3−a ≤ 4k ≤ 2a−6",
        }),
        _ => None,
    }
}

/// `D′_{a,k}` on `C₂` for a curve with general moduli.
pub fn cone_status_symmetric(genus: u32, a: i64, k: i64) -> Result<Verdicts> {
    require_genus(genus, 2)?;
    let cones = kouvidakis_cones(genus)?;
    let src = if cones.exact { "Kouvidakis cone theorem (exact)" } else { "Kouvidakis cone theorem (inner/outer bounds)" };
    let (a_q, k_q) = (q(a), q(k));
    let mut v = Verdicts::unknown();
    v.set(Property::QuasiEffective, cones.quasi_effective(&a_q, &k_q), format!("{src}: effective cone"))?;
    v.set(Property::Big, cones.big(&a_q, &k_q), format!("{src}: interior of the effective cone"))?;
    v.set(Property::Nef, cones.nef(&a_q, &k_q), format!("{src}: nef cone"))?;
    v.set(Property::Ample, cones.ample(&a_q, &k_q), format!("{src}: interior of the nef cone"))?;

    match symmetric_windows(genus, a, k) {
        Some(w) => {
            v.set(Property::GloballyGenerated, yes_or(w.gg, TriState::Unknown), w.source)?;
            v.set(Property::NonSpecial, yes_or(w.gg || w.va, TriState::Unknown), w.source)?;
            let va = if w.va {
                TriState::Yes
            } else if !w.va_necessary {
                TriState::No
            } else {
                TriState::Unknown
            };
            v.set(Property::VeryAmple, va, w.source)?;
        }
        None => {
            for p in [Property::GloballyGenerated, Property::VeryAmple, Property::NonSpecial] {
                v.set(p, TriState::Unknown, "Kouvidakis only")?;
            }
        }
    }
    v.apply_overlay(SurfaceKind::Symmetric, genus, a, None, k)?;
    v.close()?;
    Ok(v)
}

/// Dispatches a class to the applicable statement.
pub fn cone_status(class: &SurfaceClass) -> Result<Verdicts> {
    match class {
        SurfaceClass::Symmetric(c) => {
            let (a, k) = integral_pair(&c.a, &c.k, &class.to_string())?;
            cone_status_symmetric(c.genus, a, k)
        }
        SurfaceClass::Cartesian(c) => cone_status_cartesian(c),
    }
}

fn integral_pair(a: &Q, k: &Q, shown: &str) -> Result<(i64, i64)> {
    match (as_integer(a), as_integer(k)) {
        (Some(a), Some(k)) => Ok((a, k)),
        _ => Err(Error::NonIntegralClass(shown.to_string())),
    }
}

fn cone_status_cartesian(c: &CartesianClass) -> Result<Verdicts> {
    require_genus(c.genus, 2)?;
    let a = as_integer(&c.a).ok_or_else(|| Error::NonIntegralClass(c.to_string()))?;
    let a_prime = as_integer(&c.a_prime).ok_or_else(|| Error::NonIntegralClass(c.to_string()))?;
    match c.genus {
        2 if a == a_prime => {
            if !c.in_quarter_lattice() {
                return Err(Error::NonIntegralClass(c.to_string()));
            }
            cone_status_cartesian_g2(a, c.k)
        }
        2 => {
            let k = as_integer(&c.k).ok_or_else(|| Error::NonIntegralClass(c.to_string()))?;
            necessary_conditions_g2_bidegree(a, a_prime, k)
        }
        3 if a == a_prime => {
            let k = as_integer(&c.k).ok_or_else(|| Error::NonIntegralClass(c.to_string()))?;
            cone_status_cartesian_g3(a, k)
        }
        g => Err(Error::Unsupported(format!(
            "positivity of {c} on C×C is only decided for symmetric classes in genus 2 and 3 (genus {g})"
        ))),
    }
}

/// Nefness of a class as used by the Reider enumerator: decided by the cone
/// statements above, `None` when they cannot decide.
pub(crate) fn is_nef(class: &SurfaceClass) -> Result<Option<bool>> {
    let verdicts = cone_status(class)?;
    Ok(match verdicts.get(Property::Nef) {
        TriState::Yes => Some(true),
        TriState::No => Some(false),
        TriState::Unknown => None,
    })
}

/// Symmetric classes on `C₂` transfer to `C×C` by pull-back.
pub fn transfer_agrees(genus: u32, a: i64, k: i64) -> Result<bool> {
    let sym = cone_status_symmetric(genus, a, k)?;
    let cart = match genus {
        2 => cone_status_cartesian_g2(a, q(k))?,
        3 => cone_status_cartesian_g3(a, k)?,
        _ => return Err(Error::Unsupported("transfer is only checked for genus 2 and 3".into())),
    };
    Ok([Property::QuasiEffective, Property::Nef, Property::Ample]
        .into_iter()
        .all(|p| sym.get(p) == cart.get(p)))
}
