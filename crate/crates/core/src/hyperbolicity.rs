//! Hyperbolicity verdicts for generic projections to P³, symmetric powers
//! and cartesian squares.
//!
//! Hyperbolicity of a smooth source surface is taken as an input. A generic
//! projection of a hyperbolic surface is hyperbolic once its double curve has
//! geometric genus at least 2.

use serde::Serialize;

use crate::error::{require_genus, Error, Result};
use crate::invariants::ProjectionInvariants;
use crate::lattice::{CurveProfile, TriState};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Subject {
    #[serde(rename = "projection_to_P3")]
    ProjectionToP3,
    SymmetricSquare,
    SymmetricPower,
    CartesianSquare,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum NormalizationClass {
    #[serde(rename = "C_hyperbolic")]
    CHyperbolic,
    #[serde(rename = "super_Liouville")]
    SuperLiouville,
    #[serde(rename = "unknown")]
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperbolicityVerdict {
    pub subject: Subject,
    pub verdict: TriState,
    pub normalization_class: NormalizationClass,
    pub provenance: String,
}

pub fn projection_hyperbolic(pi: &ProjectionInvariants, source_hyperbolic: bool) -> HyperbolicityVerdict {
    let (verdict, provenance) = if pi.g_dcurve <= 1 {
        (TriState::No, format!("double curve has geometric genus {} < 2", pi.g_dcurve))
    } else if !source_hyperbolic {
        (TriState::Unknown, "smooth source not known to be hyperbolic".to_string())
    } else {
        (
            TriState::Yes,
            format!("hyperbolic source and double curve of geometric genus {} ≥ 2", pi.g_dcurve),
        )
    };
    HyperbolicityVerdict {
        subject: Subject::ProjectionToP3,
        verdict,
        normalization_class: NormalizationClass::Unknown,
        provenance,
    }
}

/// `C₂` is hyperbolic iff `C` is neither hyperelliptic (rational curve
/// `g¹₂`) nor bielliptic (elliptic curve), for `g ≥ 3`.
pub fn symmetric_square_hyperbolic(profile: &CurveProfile) -> HyperbolicityVerdict {
    let (verdict, provenance) = if profile.genus() == 2 {
        (TriState::No, "genus 2: C₂ is the blow-up of the Jacobian at a point".to_string())
    } else {
        match (profile.hyperelliptic(), profile.bielliptic()) {
            (TriState::Yes, _) => (TriState::No, "hyperelliptic: the g¹₂ is a rational curve in C₂".to_string()),
            (_, TriState::Yes) => (TriState::No, "bielliptic: C₂ contains an elliptic curve".to_string()),
            (TriState::No, TriState::No) => (
                TriState::Yes,
                "neither hyperelliptic nor bielliptic (Abramovich–Harris)".to_string(),
            ),
            _ => (TriState::Unknown, "hyperelliptic or bielliptic flag unknown".to_string()),
        }
    };
    HyperbolicityVerdict {
        subject: Subject::SymmetricSquare,
        verdict,
        normalization_class: NormalizationClass::SuperLiouville,
        provenance,
    }
}

/// `C_d` carries a `g¹_d` (so a rational curve) whenever `2d ≥ g + 2`; for
/// general `C` and smaller `d` it is hyperbolic.
pub fn symmetric_power_hyperbolic(genus: u32, d: u32, generic: bool) -> Result<HyperbolicityVerdict> {
    require_genus(genus, 2)?;
    if d == 0 {
        return Err(Error::InvalidProfile("symmetric power must be at least 1".into()));
    }
    let (verdict, provenance) = if 2 * d >= genus + 2 {
        (TriState::No, format!("Brill–Noether number 2d−g−2 = {} ≥ 0 gives a g¹_d", 2 * d as i64 - genus as i64 - 2))
    } else if generic {
        (TriState::Yes, "general curve with 2d < g+2 has no g¹_d".to_string())
    } else {
        (TriState::Unknown, "2d < g+2 but the curve is not general".to_string())
    };
    let normalization_class = if d >= 2 { NormalizationClass::SuperLiouville } else { NormalizationClass::Unknown };
    Ok(HyperbolicityVerdict { subject: Subject::SymmetricPower, verdict, normalization_class, provenance })
}

pub fn cartesian_square_hyperbolic(genus: u32) -> Result<HyperbolicityVerdict> {
    require_genus(genus, 2)?;
    Ok(HyperbolicityVerdict {
        subject: Subject::CartesianSquare,
        verdict: TriState::Yes,
        normalization_class: NormalizationClass::CHyperbolic,
        provenance: "covered by the bidisc".to_string(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CorrespondenceCurve {
    pub gamma_sq: i64,
    pub gamma_dot_delta: i64,
    /// A non-rational quotient `R` forces Picard number at least 3 on `C₂`.
    pub picard_consequence: bool,
}

/// Curve `Γ ⊂ C₂` of pairs exchanged by an involution of `C` with quotient of
/// genus `g_R`: `Γ² = 1 − g` and `Γ·Δ′ = 2 + 2g − 4g_R` (the number of fixed
/// points by Riemann–Hurwitz).
pub fn correspondence_curve_data(genus: u32, g_r: u32) -> Result<CorrespondenceCurve> {
    require_genus(genus, 2)?;
    let (g, gr) = (genus as i64, g_r as i64);
    let ramification = 2 + 2 * g - 4 * gr;
    if ramification < 0 {
        return Err(Error::RiemannHurwitz(ramification));
    }
    Ok(CorrespondenceCurve { gamma_sq: 1 - g, gamma_dot_delta: ramification, picard_consequence: g_r >= 1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{cartesian_profile, symmetric_profile};
    use crate::lattice::{CartesianClass, SymmetricClass};

    #[test]
    fn projection_examples() {
        let cart = cartesian_profile(3, &CartesianClass::int(3, 4, 4, 0)).unwrap();
        assert_eq!(cart.g_dcurve, 1045);
        assert_eq!(projection_hyperbolic(&cart, true).verdict, TriState::Yes);
        assert_eq!(projection_hyperbolic(&cart, false).verdict, TriState::Unknown);
        let sym = symmetric_profile(3, &SymmetricClass::int(3, 4, 0)).unwrap();
        assert_eq!(sym.g_dcurve, 142);
        assert_eq!(projection_hyperbolic(&sym, true).verdict, TriState::Yes);
        let low = ProjectionInvariants { g_dcurve: 1, ..sym };
        assert_eq!(projection_hyperbolic(&low, true).verdict, TriState::No);
    }

    #[test]
    fn symmetric_square_examples() {
        let v = |p: CurveProfile| symmetric_square_hyperbolic(&p).verdict;
        assert_eq!(v(CurveProfile::generic(3).unwrap()), TriState::Yes);
        assert_eq!(v(CurveProfile::generic(2).unwrap()), TriState::No);
        assert_eq!(v(CurveProfile::new(3, false, TriState::Yes, TriState::Unknown, None).unwrap()), TriState::No);
        assert_eq!(v(CurveProfile::new(5, false, TriState::No, TriState::Yes, None).unwrap()), TriState::No);
        assert_eq!(v(CurveProfile::arbitrary(5).unwrap()), TriState::Unknown);
        let p = symmetric_square_hyperbolic(&CurveProfile::generic(4).unwrap());
        assert_eq!(p.normalization_class, NormalizationClass::SuperLiouville);
    }

    #[test]
    fn symmetric_power_examples() {
        let v = |g, d, gen| symmetric_power_hyperbolic(g, d, gen).unwrap().verdict;
        assert_eq!(v(4, 3, true), TriState::No);
        assert_eq!(v(4, 3, false), TriState::No);
        assert_eq!(v(2, 2, true), TriState::No);
        assert_eq!(v(5, 3, true), TriState::Yes);
        assert_eq!(v(5, 3, false), TriState::Unknown);
        assert!(symmetric_power_hyperbolic(5, 0, true).is_err());
    }

    #[test]
    fn correspondence_examples() {
        let t = |g, gr| {
            let c = correspondence_curve_data(g, gr).unwrap();
            (c.gamma_sq, c.gamma_dot_delta, c.picard_consequence)
        };
        assert_eq!(t(3, 0), (-2, 8, false));
        assert_eq!(t(3, 1), (-2, 4, true));
        assert_eq!(t(5, 1), (-4, 8, true));
        assert!(matches!(correspondence_curve_data(3, 3), Err(Error::RiemannHurwitz(-4))));
    }

    #[test]
    fn cartesian_square_is_c_hyperbolic() {
        let v = cartesian_square_hyperbolic(2).unwrap();
        assert_eq!((v.verdict, v.normalization_class), (TriState::Yes, NormalizationClass::CHyperbolic));
        assert!(cartesian_square_hyperbolic(1).is_err());
    }
}
