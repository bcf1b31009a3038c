//! Slope windows for the effective and nef cones of `C₂` for a curve with
//! general moduli (Kouvidakis). A class `D′_{a,k}` lies in a window when
//! `lower·a ≤ k ≤ upper·a`.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{require_genus, Result};
use crate::lattice::TriState;
use crate::rational::{exact_sqrt, frac, q, Surd, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlopeWindow {
    pub lower: Surd,
    pub upper: Surd,
}

impl SlopeWindow {
    fn rational(lower: Q, upper: Q) -> Self {
        Self { lower: Surd::rational(lower), upper: Surd::rational(upper) }
    }

    /// Closed membership `lower·a ≤ k ≤ upper·a`.
    pub fn contains(&self, a: &Q, k: &Q) -> bool {
        self.lower.cmp_scaled(k, a) != Ordering::Less && self.upper.cmp_scaled(k, a) != Ordering::Greater
    }

    /// Open membership `lower·a < k < upper·a`.
    pub fn contains_strictly(&self, a: &Q, k: &Q) -> bool {
        self.lower.cmp_scaled(k, a) == Ordering::Greater && self.upper.cmp_scaled(k, a) == Ordering::Less
    }
}

/// Inner and outer approximations of EFF and NEF. They coincide when the
/// cones are known exactly (`g = 2, 3` or `g` a perfect square).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KouvidakisCones {
    pub genus: u32,
    pub exact: bool,
    pub eff_inner: SlopeWindow,
    pub eff_outer: SlopeWindow,
    pub nef_inner: SlopeWindow,
    pub nef_outer: SlopeWindow,
}

/// Three-way verdict from an inner/outer pair: yes inside the inner window,
/// no outside the outer one, unknown in the gap.
fn sandwich(inner: bool, outer: bool) -> TriState {
    if inner {
        TriState::Yes
    } else if outer {
        TriState::Unknown
    } else {
        TriState::No
    }
}

impl KouvidakisCones {
    pub fn quasi_effective(&self, a: &Q, k: &Q) -> TriState {
        sandwich(self.eff_inner.contains(a, k), self.eff_outer.contains(a, k))
    }

    pub fn nef(&self, a: &Q, k: &Q) -> TriState {
        sandwich(self.nef_inner.contains(a, k), self.nef_outer.contains(a, k))
    }

    /// The ample cone is the interior of the nef cone.
    pub fn ample(&self, a: &Q, k: &Q) -> TriState {
        sandwich(self.nef_inner.contains_strictly(a, k), self.nef_outer.contains_strictly(a, k))
    }

    /// The big cone is the interior of the effective cone.
    pub fn big(&self, a: &Q, k: &Q) -> TriState {
        sandwich(self.eff_inner.contains_strictly(a, k), self.eff_outer.contains_strictly(a, k))
    }
}

pub fn kouvidakis_cones(genus: u32) -> Result<KouvidakisCones> {
    require_genus(genus, 2)?;
    let g = genus as i64;
    let square = exact_sqrt(g as i128).is_some();
    // 1/√g written as (1/g)·√g so that it collapses for perfect squares
    let inv_sqrt = Surd::new(q(0), frac(1, g), genus);
    let cones = match genus {
        2 => {
            let eff = SlopeWindow::rational(q(-1), q(1));
            let nef = SlopeWindow::rational(frac(-1, 2), frac(1, 2));
            (eff.clone(), eff, nef.clone(), nef)
        }
        3 => {
            let eff = SlopeWindow::rational(q(-1), frac(3, 5));
            let nef = SlopeWindow::rational(frac(-1, 3), frac(5, 9));
            (eff.clone(), eff, nef.clone(), nef)
        }
        _ => {
            let eff = SlopeWindow { lower: Surd::rational(q(-1)), upper: inv_sqrt.clone() };
            let nef = SlopeWindow { lower: Surd::rational(frac(-1, g)), upper: inv_sqrt };
            if square {
                (eff.clone(), eff, nef.clone(), nef)
            } else {
                // 1/(√g − 1) = (√g + 1)/(g − 1) and (√g − 1)/g
                let eff_outer = SlopeWindow {
                    lower: Surd::rational(q(-1)),
                    upper: Surd::new(frac(1, g - 1), frac(1, g - 1), genus),
                };
                let nef_inner = SlopeWindow {
                    lower: Surd::rational(frac(-1, g)),
                    upper: Surd::new(frac(-1, g), frac(1, g), genus),
                };
                (eff, eff_outer, nef_inner, nef)
            }
        }
    };
    let (eff_inner, eff_outer, nef_inner, nef_outer) = cones;
    Ok(KouvidakisCones { genus, exact: genus <= 3 || square, eff_inner, eff_outer, nef_inner, nef_outer })
}
