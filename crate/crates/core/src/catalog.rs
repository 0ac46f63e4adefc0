//! Every generating function in the crate, addressable by name.

use std::fmt;
use std::str::FromStr;

use crate::beta_one;
use crate::bounce_gf::{self, BounceFree, Side};
use crate::closed_forms::{fuss_catalan, g_ab_series, g_prefix_series, g_series};
use crate::error::{Error, Result};
use crate::{Restriction, Series, Slope, Step};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// All paths.
    All,
    /// All paths with the given first step.
    AllPrefix(Step),
    BounceFree,
    BounceFreePrefix(Step),
    NoRightBounce,
    NoLeftBounce,
    /// Exactly `left` left and `right` right bounces.
    Bounces,
    /// Unrestricted, from the four-case closed form.
    BouncesClosedForm,
    /// Exactly `bounces` bounces on one side and none on the other.
    OneSided(Side),
    NoHorizontalCross,
    NoCrossPrefix,
    NoCrossNoRightBounce,
    RationalDyck,
    FussCatalan,
    FussCatalanBounceFree,
    /// Slope (1, 1), exactly `bounces` bounces.
    ExactBounces,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::All => "g",
            Family::AllPrefix(Step::E) => "g_E",
            Family::AllPrefix(Step::N) => "g_N",
            Family::BounceFree => "f",
            Family::BounceFreePrefix(Step::E) => "f_E",
            Family::BounceFreePrefix(Step::N) => "f_N",
            Family::NoRightBounce => "nrb",
            Family::NoLeftBounce => "nlb",
            Family::Bounces => "B",
            Family::BouncesClosedForm => "B_cf",
            Family::OneSided(Side::Left) => "left",
            Family::OneSided(Side::Right) => "right",
            Family::NoHorizontalCross => "nhc",
            Family::NoCrossPrefix => "h",
            Family::NoCrossNoRightBounce => "H",
            Family::RationalDyck => "H_ne",
            Family::FussCatalan => "c_alpha",
            Family::FussCatalanBounceFree => "fc",
            Family::ExactBounces => "G_b",
        }
    }

    fn takes_restriction(self) -> bool {
        matches!(
            self,
            Family::All
                | Family::BounceFree
                | Family::NoRightBounce
                | Family::Bounces
                | Family::NoHorizontalCross
                | Family::FussCatalanBounceFree
        )
    }
}

/// Names accepted by [`SeriesName::from_str`], with a one-line description.
pub const CATALOGUE: &[(&str, &str)] = &[
    ("g, g_ab, g_ee, g_en, g_ne, g_nn", "all paths, optionally by first and last step"),
    ("g_E, g_N", "all paths starting with E or N"),
    ("f, f_ab, f_ee, f_en, f_ne, f_nn", "bounce-free paths"),
    ("f_E, f_N", "bounce-free paths starting with E or N"),
    ("nrb, nrb_ee, nrb_en, nrb_ne, nrb_nn", "paths with no right bounce"),
    ("nlb", "paths with no left bounce"),
    ("B, B_ee, B_en, B_ne, B_nn", "exactly `left` left and `right` right bounces"),
    ("B_cf", "the same, unrestricted, from the four-case closed form"),
    ("left, right", "exactly `bounces` bounces on that side and none on the other"),
    ("nhc_ee, nhc_en, nhc_ne", "beta = 1: no horizontal cross"),
    ("h", "beta = 1: E-start paths with no horizontal cross"),
    ("H", "beta = 1: E-start paths with no horizontal cross and no right bounce"),
    ("H_ne", "beta = 1: N-start paths with no horizontal cross"),
    ("c_alpha", "Fuss-Catalan series of parameter alpha"),
    ("fc_ee, fc_en, fc_nn", "beta = 1: bounce-free series in Fuss-Catalan form"),
    ("G_b", "slope (1, 1): exactly `bounces` bounces"),
];

/// A parsed series name such as `f_en`, `g` or `H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesName {
    pub family: Family,
    /// Set by a suffix like `_en`; `None` for bare names and `_ab`.
    pub restriction: Option<Restriction>,
}

impl FromStr for SeriesName {
    type Err = Error;

    fn from_str(name: &str) -> Result<Self> {
        let exact = |family| Ok(SeriesName { family, restriction: None });
        match name {
            "g_E" => return exact(Family::AllPrefix(Step::E)),
            "g_N" => return exact(Family::AllPrefix(Step::N)),
            "f_E" => return exact(Family::BounceFreePrefix(Step::E)),
            "f_N" => return exact(Family::BounceFreePrefix(Step::N)),
            "nlb" => return exact(Family::NoLeftBounce),
            "B_cf" => return exact(Family::BouncesClosedForm),
            "left" => return exact(Family::OneSided(Side::Left)),
            "right" => return exact(Family::OneSided(Side::Right)),
            "h" => return exact(Family::NoCrossPrefix),
            "H" => return exact(Family::NoCrossNoRightBounce),
            "H_ne" => return exact(Family::RationalDyck),
            "c_alpha" => return exact(Family::FussCatalan),
            "G_b" => return exact(Family::ExactBounces),
            _ => {}
        }
        let (base, suffix) = name.split_once('_').unwrap_or((name, "ab"));
        let family = match base {
            "g" => Family::All,
            "f" => Family::BounceFree,
            "nrb" => Family::NoRightBounce,
            "B" => Family::Bounces,
            "nhc" => Family::NoHorizontalCross,
            "fc" => Family::FussCatalanBounceFree,
            _ => return Err(Error::UnknownSeries(name.to_string())),
        };
        let restriction = match suffix {
            "ab" => None,
            "ee" | "en" | "ne" | "nn" => suffix.parse().ok(),
            _ => return Err(Error::UnknownSeries(name.to_string())),
        };
        Ok(SeriesName { family, restriction })
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family.name())?;
        match self.restriction {
            Some(r) if r != Restriction::All => write!(f, "_{r}"),
            _ => Ok(()),
        }
    }
}

/// Parameters some families need; ignored by the rest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SeriesParams {
    /// Used when the name has no restriction suffix.
    pub restriction: Option<Restriction>,
    pub left: u32,
    pub right: u32,
    pub bounces: u32,
}

fn beta_one_alpha(what: &'static str, slope: Slope) -> Result<u32> {
    if slope.beta() != 1 {
        return Err(Error::BetaNotOne {
            what,
            alpha: slope.alpha(),
            beta: slope.beta(),
        });
    }
    Ok(slope.alpha())
}

impl SeriesName {
    pub fn compute(self, slope: Slope, order: usize, params: SeriesParams) -> Result<Series> {
        let family = self.family;
        let restriction = if family.takes_restriction() {
            self.restriction.or(params.restriction).unwrap_or(Restriction::All)
        } else {
            Restriction::All
        };
        let what = family.name();
        let series = match family {
            Family::All => match restriction.ends() {
                None => g_series(slope, order),
                Some((first, last)) => g_ab_series(slope, first, last, order),
            },
            Family::AllPrefix(first) => g_prefix_series(slope, first, order),
            Family::BounceFree => match restriction {
                Restriction::All => bounce_gf::bounce_free_total(slope, order),
                r => bounce_gf::bounce_free_ab(slope, r, order),
            },
            Family::BounceFreePrefix(Step::E) => BounceFree::new(slope, order).e_star(),
            Family::BounceFreePrefix(Step::N) => BounceFree::new(slope, order).n_star(),
            Family::NoRightBounce => bounce_gf::nrb_series(slope, restriction, order),
            Family::NoLeftBounce => bounce_gf::no_left_bounce_total(slope, order),
            Family::Bounces => {
                let table = bounce_gf::bounce_table(slope, restriction, params.left, params.right, order);
                table.entry(params.left, params.right).clone()
            }
            Family::BouncesClosedForm => bounce_gf::b_lr_closed_form(slope, params.left, params.right, order),
            Family::OneSided(side) => bounce_gf::one_sided_bounce_series(slope, side, params.bounces, order),
            Family::NoHorizontalCross => {
                beta_one::nhc_series(beta_one_alpha(what, slope)?, restriction, order)?
            }
            Family::NoCrossPrefix => beta_one::h_prefix_series(beta_one_alpha(what, slope)?, order)?,
            Family::NoCrossNoRightBounce => {
                beta_one::no_cross_no_right_bounce_series(beta_one_alpha(what, slope)?, order)?
            }
            Family::RationalDyck => beta_one::rational_dyck_count(beta_one_alpha(what, slope)?, order)?,
            Family::FussCatalan => fuss_catalan(slope.alpha(), order)?,
            Family::FussCatalanBounceFree => {
                beta_one::f_ab_via_fuss_catalan(beta_one_alpha(what, slope)?, restriction, order)?
            }
            Family::ExactBounces => {
                if (slope.alpha(), slope.beta()) != (1, 1) {
                    return Err(Error::UnsupportedSlope {
                        what,
                        alpha: slope.alpha(),
                        beta: slope.beta(),
                    });
                }
                bounce_gf::g_b_series(params.bounces, order)?
            }
        };
        Ok(series)
    }
}

/// Parses `name` and computes that series.
pub fn series_by_name(name: &str, slope: Slope, order: usize, params: SeriesParams) -> Result<Series> {
    name.parse::<SeriesName>()?.compute(slope, order, params)
}
