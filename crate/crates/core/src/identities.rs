//! Named identity suites, each comparing two independent computations of the
//! same series (or a series against brute-force counts).
//!
//! Suites stop at the first mismatching coefficient of each check and report
//! where it happened.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::beta_one::{self, TwoRowShape};
use crate::bounce_gf::{self, BounceFree, Side};
use crate::closed_forms::{fuss_catalan, g_ab_series, g_prefix_series, BaseSeries, Restriction, Slope, Step};
use crate::error::Result;
use crate::oracle::{self, Budget, ProfileCounts};
use crate::series::Series;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Eq1,
    Pascal,
    FussCatalan,
    NoRightBounce,
    NoLeftBounce,
    BounceFreeForm,
    Specializations,
    Dual,
    OracleVsG,
    BetaOne,
    Catalan,
    GB,
    Syt,
    Crosses,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::Eq1,
        Suite::Pascal,
        Suite::FussCatalan,
        Suite::NoRightBounce,
        Suite::NoLeftBounce,
        Suite::BounceFreeForm,
        Suite::Specializations,
        Suite::Dual,
        Suite::OracleVsG,
        Suite::BetaOne,
        Suite::Catalan,
        Suite::GB,
        Suite::Syt,
        Suite::Crosses,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Eq1 => "eq1",
            Suite::Pascal => "pascal",
            Suite::FussCatalan => "fuss-catalan",
            Suite::NoRightBounce => "nrb",
            Suite::NoLeftBounce => "no-left-bounce",
            Suite::BounceFreeForm => "f-form",
            Suite::Specializations => "specializations",
            Suite::Dual => "dual",
            Suite::OracleVsG => "oracle-vs-G",
            Suite::BetaOne => "beta1",
            Suite::Catalan => "catalan",
            Suite::GB => "gb",
            Suite::Syt => "syt",
            Suite::Crosses => "crosses",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::Eq1 => "beta (g_ee + g_en) = alpha (g_nn + g_en)",
            Suite::Pascal => "g = g_ee + 2 g_en + g_nn",
            Suite::FussCatalan => "c_alpha = 1 + x c_alpha^(alpha+1)",
            Suite::NoRightBounce => "no-right-bounce series: bounce-free products vs g-quotients",
            Suite::NoLeftBounce => "sum of one-sided B_{l,0} vs closed form; 1/(1 - f_en) identity",
            Suite::BounceFreeForm => "G in f-series vs G in g-series",
            Suite::Specializations => "G at (s,t) = (1,1), (0,0), (0,1), (1,0)",
            Suite::Dual => "four-case closed form of B_{l,r} vs rational expansion",
            Suite::OracleVsG => "every table entry vs brute-force counts",
            Suite::BetaOne => "beta = 1 simplifications and Fuss-Catalan forms",
            Suite::Catalan => "alpha = beta = 1 Catalan forms",
            Suite::GB => "exactly-b-bounce series: product, binomial form, brute force",
            Suite::Syt => "two-row tableaux: hook formula, backtracking, path counts",
            Suite::Crosses => "horizontal-cross series vs brute force",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                format!("unknown suite '{s}' (expected one of: {})", names.join(", "))
            })
    }
}

/// Parameter ranges for the suites. `slope = None` sweeps the default range.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub slope: Option<Slope>,
    pub order: usize,
    /// Largest `alpha + beta` in slope sweeps.
    pub max_slope_sum: u32,
    /// Largest path length handed to the oracle.
    pub max_steps: u32,
    pub alpha_max: u32,
    /// Largest `alpha` in the horizontal-cross sweep.
    pub cross_alpha_max: u32,
    pub cross_max_steps: u32,
    pub n_max: u32,
    pub b_max: u32,
    pub bounce_max: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            slope: None,
            order: 12,
            max_slope_sum: 7,
            max_steps: 22,
            alpha_max: 5,
            cross_alpha_max: 3,
            cross_max_steps: 20,
            n_max: 10,
            b_max: 6,
            bounce_max: 4,
        }
    }
}

impl VerifyConfig {
    fn slopes(&self, max_sum: u32) -> Vec<Slope> {
        match self.slope {
            Some(s) => vec![s],
            None => Slope::all_up_to(max_sum),
        }
    }

    fn alphas(&self, max_alpha: u32) -> Vec<u32> {
        match self.slope {
            Some(s) if s.beta() == 1 => vec![s.alpha()],
            Some(_) => vec![],
            None => (1..=max_alpha).collect(),
        }
    }
}

/// Where two computations first disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub slope: Option<Slope>,
    pub k: usize,
    pub left: Option<u32>,
    pub right: Option<u32>,
    pub expected: BigInt,
    pub actual: BigInt,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(s) = self.slope {
            write!(f, "slope {s}, ")?;
        }
        write!(f, "k = {}", self.k)?;
        if let Some(l) = self.left {
            write!(f, ", l = {l}")?;
        }
        if let Some(r) = self.right {
            write!(f, ", r = {r}")?;
        }
        write!(f, ": expected {}, got {}", self.expected, self.actual)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub mismatch: Option<Mismatch>,
    /// A computation that failed outright instead of producing a value.
    pub error: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none() && self.error.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn new() -> Self {
        Checks(Vec::new())
    }

    fn series(&mut self, label: String, slope: Option<Slope>, cell: Option<(u32, u32)>, expected: &Series, actual: &Series) {
        let n = expected.order().min(actual.order());
        let mismatch = (0..=n)
            .find(|&k| expected.coeff(k) != actual.coeff(k))
            .map(|k| Mismatch {
                slope,
                k,
                left: cell.map(|c| c.0),
                right: cell.map(|c| c.1),
                expected: expected.coeff(k).clone(),
                actual: actual.coeff(k).clone(),
            });
        self.0.push(Check {
            label,
            mismatch,
            error: None,
        });
    }

    fn value(&mut self, label: String, slope: Option<Slope>, k: usize, cell: Option<(u32, u32)>, expected: BigInt, actual: BigInt) {
        let mismatch = (expected != actual).then(|| Mismatch {
            slope,
            k,
            left: cell.map(|c| c.0),
            right: cell.map(|c| c.1),
            expected,
            actual,
        });
        self.0.push(Check {
            label,
            mismatch,
            error: None,
        });
    }

    fn error(&mut self, label: String, err: crate::error::Error) {
        self.0.push(Check {
            label,
            mismatch: None,
            error: Some(err.to_string()),
        });
    }
}

pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Result<SuiteReport> {
    let mut c = Checks::new();
    let n = config.order;
    match suite {
        Suite::Eq1 => {
            for s in config.slopes(8) {
                let e = g_prefix_series(s, Step::E, n).scale_i64(s.beta().into());
                let nn = g_prefix_series(s, Step::N, n).scale_i64(s.alpha().into());
                c.series(format!("eq1 {s}"), Some(s), None, &e, &nn);
            }
        }
        Suite::Pascal => {
            for s in config.slopes(config.max_slope_sum) {
                let b = BaseSeries::new(s, n);
                let split = &b.ee + &b.en.scale_i64(2) + &b.nn;
                c.series(format!("g split {s}"), Some(s), None, &b.g, &split);
                let ne = g_ab_series(s, Step::N, Step::E, n);
                c.series(format!("g_ne = g_en {s}"), Some(s), None, &b.en, &ne);
            }
        }
        Suite::FussCatalan => {
            let alphas = match config.slope {
                Some(s) => vec![s.alpha()],
                None => (1..=config.alpha_max).collect(),
            };
            for a in alphas {
                let cs = fuss_catalan(a, n)?;
                let rhs = cs.pow(a + 1).shift_up(1).add_constant(1);
                c.series(format!("functional equation alpha = {a}"), None, None, &cs, &rhs);
            }
        }
        Suite::NoRightBounce => {
            for s in config.slopes(config.max_slope_sum) {
                let f = BounceFree::new(s, n);
                let geo = f.en.geometric_sum()?;
                let en = &f.en + &(&f.ee * &f.nn * &geo);
                let ee = &f.ee * &geo;
                let nn = &f.nn * &geo;
                c.series(format!("nrb_en {s}"), Some(s), None, &bounce_gf::nrb_series(s, Restriction::EN, n), &en);
                c.series(format!("nrb_ee {s}"), Some(s), None, &bounce_gf::nrb_series(s, Restriction::EE, n), &ee);
                c.series(format!("nrb_nn {s}"), Some(s), None, &bounce_gf::nrb_series(s, Restriction::NN, n), &nn);
            }
        }
        Suite::NoLeftBounce => {
            for s in config.slopes(config.max_slope_sum) {
                let base = BaseSeries::new(s, n);
                let f = BounceFree::from_base(&base);
                let sum = (0..=n as u32).fold(Series::zero(n), |acc, l| {
                    acc + bounce_gf::one_sided_bounce_series(s, Side::Left, l, n)
                });
                c.series(format!("sum B_l0 {s}"), Some(s), None, &bounce_gf::no_left_bounce_total(s, n), &sum);
                let lhs = f.en.geometric_sum()?;
                let rhs = base.bounce_free_denominator().div(&base.en.add_constant(1))?;
                c.series(format!("1/(1 - f_en) {s}"), Some(s), None, &rhs, &lhs);
            }
        }
        Suite::BounceFreeForm => {
            let m = config.bounce_max.max(1);
            for s in config.slopes(config.max_slope_sum) {
                let g = bounce_gf::bounce_table(s, Restriction::All, m, m, n);
                let f = bounce_gf::bounce_table_from_bounce_free(s, m, m, n);
                for (l, r, e) in g.entries() {
                    c.series(format!("f-form {s} ({l},{r})"), Some(s), Some((l, r)), e, f.entry(l, r));
                }
            }
        }
        Suite::Specializations => specializations(&mut c, config),
        Suite::Dual => {
            let m = config.bounce_max;
            for s in config.slopes(6) {
                let table = bounce_gf::bounce_table(s, Restriction::All, m, m, n);
                for l in 1..=m {
                    for r in 1..=m {
                        let closed = bounce_gf::b_lr_closed_form(s, l, r, n);
                        c.series(format!("B_{l},{r} {s}"), Some(s), Some((l, r)), table.entry(l, r), &closed);
                    }
                }
            }
        }
        Suite::OracleVsG => oracle_vs_g(&mut c, config)?,
        Suite::BetaOne => beta_one_suite(&mut c, config)?,
        Suite::Catalan => catalan_suite(&mut c, n)?,
        Suite::GB => gb_suite(&mut c, config)?,
        Suite::Syt => syt_suite(&mut c, config)?,
        Suite::Crosses => crosses_suite(&mut c, config)?,
    }
    Ok(SuiteReport { suite, checks: c.0 })
}

fn specializations(c: &mut Checks, config: &VerifyConfig) {
    let n = config.order;
    let bound = n as u32;
    for s in config.slopes(config.max_slope_sum) {
        let base = BaseSeries::new(s, n);
        let all = bounce_gf::bounce_table(s, Restriction::All, bound, bound, n);
        c.series(format!("G(1,1) = g {s}"), Some(s), None, &base.g, &all.sum());
        c.series(format!("G(0,0) = f {s}"), Some(s), Some((0, 0)), &bounce_gf::bounce_free_total(s, n), all.entry(0, 0));
        let nlb = bounce_gf::no_left_bounce_total(s, n);
        c.series(format!("G(0,1) {s}"), Some(s), None, &nlb, &all.row_sum(0));
        c.series(format!("G(1,0) {s}"), Some(s), None, &nlb, &all.column_sum(0));
        for r in [Restriction::EE, Restriction::EN, Restriction::NE, Restriction::NN] {
            let t = bounce_gf::bounce_table(s, r, bound, bound, n);
            let (first, last) = r.ends().expect("restricted");
            let g = g_ab_series(s, first, last, n);
            c.series(format!("G_{r}(1,1) {s}"), Some(s), None, &g, &t.sum());
            let f = bounce_gf::bounce_free_ab(s, r, n);
            c.series(format!("G_{r}(0,0) {s}"), Some(s), Some((0, 0)), &f, t.entry(0, 0));
            // t = 1, s = 0 keeps paths with no left bounce; s = 1, t = 0 no right bounce
            let nrb = bounce_gf::nrb_series(s, r, n);
            c.series(format!("G_{r}(1,0) {s}"), Some(s), None, &nrb, &t.column_sum(0));
        }
    }
}

fn oracle_vs_g(c: &mut Checks, config: &VerifyConfig) -> Result<()> {
    let budget = Budget {
        max_steps: config.max_steps.max(Budget::default().max_steps),
        max_paths: u64::MAX,
        ..Budget::default()
    };
    let jobs: Vec<(Slope, u32)> = config
        .slopes(config.max_slope_sum)
        .into_iter()
        .flat_map(|s| (1..).take_while(move |&k| s.path_len(k) <= config.max_steps).map(move |k| (s, k)))
        .collect();
    let profiles: Vec<ProfileCounts> = jobs
        .par_iter()
        .map(|&(s, k)| oracle::enumerate_profiles_with(s, k, &budget))
        .collect::<Result<_>>()?;
    for s in config.slopes(config.max_slope_sum) {
        let kmax = (1..).take_while(|&k| s.path_len(k) <= config.max_steps).last().unwrap_or(0);
        if kmax == 0 {
            continue;
        }
        for r in Restriction::ALL {
            let table = bounce_gf::bounce_table(s, r, kmax, kmax, kmax as usize);
            for p in profiles.iter().filter(|p| p.slope == s) {
                let counts = p.table(r);
                let k = p.k;
                let mut first_bad = None;
                'cells: for l in 0..=kmax {
                    for rr in 0..=kmax {
                        let expected = BigInt::from(counts.get(l, rr));
                        let actual = table.count(l, rr, k as usize).clone();
                        if expected != actual {
                            first_bad = Some((l, rr, expected, actual));
                            break 'cells;
                        }
                    }
                }
                let label = format!("{s} k = {k} {r}");
                match first_bad {
                    None => c.value(label, Some(s), k as usize, None, BigInt::from(0), BigInt::from(0)),
                    Some((l, rr, e, a)) => c.value(label, Some(s), k as usize, Some((l, rr)), e, a),
                }
            }
        }
    }
    Ok(())
}

fn beta_one_suite(c: &mut Checks, config: &VerifyConfig) -> Result<()> {
    let n = config.order;
    for a in config.alphas(config.alpha_max) {
        let s = Slope::new(a, 1)?;
        let ai = i64::from(a);
        let base = BaseSeries::new(s, n);
        let f = BounceFree::from_base(&base);
        let rel = base.nn.scale_i64(ai) + base.en.scale_i64(ai - 1);
        c.series(format!("g_ee = a g_nn + (a-1) g_en, a = {a}"), Some(s), None, &base.ee, &rel);
        c.series(format!("g_en^2 - g_ee g_nn = g_nn, a = {a}"), Some(s), None, &base.nn, &base.det());
        let frel = &f.nn + &f.en.scale_i64(ai - 1);
        c.series(format!("f_ee = f_nn + (a-1) f_en, a = {a}"), Some(s), None, &f.ee, &frel);
        for r in Restriction::ALL {
            let general = bounce_gf::bounce_free_ab(s, r, n);
            let simple = beta_one::simplified_bounce_free(a, r, n)?;
            c.series(format!("simplified f_{r}, a = {a}"), Some(s), None, &general, &simple);
            let fc = beta_one::f_ab_via_fuss_catalan(a, r, n)?;
            c.series(format!("Fuss-Catalan f_{r}, a = {a}"), Some(s), None, &general, &fc);
        }
        let m = config.bounce_max.max(1);
        let table = bounce_gf::bounce_table(s, Restriction::All, m, m, n);
        let simple = beta_one::simplified_bounce_markers(a, m, m, n)?;
        for (l, r, e) in table.entries() {
            c.series(format!("simplified G ({l},{r}), a = {a}"), Some(s), Some((l, r)), e, simple.get(l, r));
        }
    }
    Ok(())
}

fn catalan_suite(c: &mut Checks, n: usize) -> Result<()> {
    let s = Slope::new(1, 1)?;
    for r in Restriction::ALL {
        let general = bounce_gf::bounce_free_ab(s, r, n);
        let cat = beta_one::catalan_bounce_free(r, n)?;
        c.series(format!("Catalan f_{r}"), Some(s), None, &general, &cat);
    }
    let m = 4.min(n as u32);
    let table = bounce_gf::bounce_table(s, Restriction::All, m, m, n);
    let cat = beta_one::catalan_bounce_markers(m, m, n)?;
    for (l, r, e) in table.entries() {
        c.series(format!("Catalan G ({l},{r})"), Some(s), Some((l, r)), e, cat.get(l, r));
    }
    let f = BounceFree::new(s, n);
    let cm1 = fuss_catalan(1, n)?.add_constant(-1);
    c.series("f_E* = c - 1".into(), Some(s), None, &cm1, &f.e_star());
    c.series("f_N* = c - 1".into(), Some(s), None, &cm1, &f.n_star());
    c.series("f_E* f_N* = (c - 1)^2".into(), Some(s), None, &(&cm1 * &cm1), &(f.e_star() * f.n_star()));
    Ok(())
}

fn gb_suite(c: &mut Checks, config: &VerifyConfig) -> Result<()> {
    let s = Slope::new(1, 1)?;
    let n_top = config.n_max.max(1);
    let order = n_top as usize;
    let budget = Budget {
        max_steps: 2 * n_top,
        max_paths: u64::MAX,
        ..Budget::default()
    };
    let profiles: Vec<ProfileCounts> = (1..=n_top)
        .into_par_iter()
        .map(|k| oracle::enumerate_profiles_with(s, k, &budget))
        .collect::<Result<_>>()?;
    for b in 0..=config.b_max {
        let product = match bounce_gf::g_b_series(b, order) {
            Ok(p) => p,
            Err(e) => {
                c.error(format!("G_{b}"), e);
                continue;
            }
        };
        let closed = bounce_gf::g_b_closed_form(b, order)?;
        c.series(format!("G_{b} product vs binomial"), Some(s), None, &closed, &product);
        for p in &profiles {
            let brute = p.count_where(|q| q.total_bounces() == b);
            c.value(
                format!("G_{b} at n = {}", p.k),
                Some(s),
                p.k as usize,
                None,
                BigInt::from(brute),
                product.coeff(p.k as usize).clone(),
            );
        }
    }
    Ok(())
}

fn syt_suite(c: &mut Checks, config: &VerifyConfig) -> Result<()> {
    let s = Slope::new(1, 1)?;
    let n_top = config.n_max.max(1);
    let budget = Budget {
        max_steps: 2 * n_top,
        max_paths: u64::MAX,
        max_syt_cells: 2 * n_top,
    };
    let profiles: Vec<ProfileCounts> = (1..=n_top)
        .into_par_iter()
        .map(|k| oracle::enumerate_profiles_with(s, k, &budget))
        .collect::<Result<_>>()?;
    for p in &profiles {
        let n = p.k;
        for b in 0..n {
            let shape = TwoRowShape::from_bounces(n, b)?;
            let hook = shape.hook_length_count();
            let filled = BigInt::from(oracle::enumerate_syt_with(shape, &budget)?);
            let paths = BigInt::from(p.count_where(|q| q.first == Step::E && q.total_bounces() == b));
            let half = bounce_gf::g_b_series(b, n as usize)?.coeff(n as usize) / 2;
            let label = |what: &str| format!("n = {n}, b = {b}: {what}");
            c.value(label("hook vs backtracking"), Some(s), n as usize, None, filled, hook.clone());
            c.value(label("hook vs E-start paths"), Some(s), n as usize, None, paths, hook.clone());
            c.value(label("hook vs half of G_b"), Some(s), n as usize, None, half, hook);
        }
    }
    Ok(())
}

fn crosses_suite(c: &mut Checks, config: &VerifyConfig) -> Result<()> {
    let n = config.order;
    for a in config.alphas(config.cross_alpha_max) {
        let s = Slope::new(a, 1)?;
        if let Err(e) = beta_one::no_cross_no_right_bounce_series(a, n) {
            c.error(format!("H_E* forms, a = {a}"), e);
        }
        let kmax = (1..).take_while(|&k| s.path_len(k) <= config.cross_max_steps).last().unwrap_or(0);
        if kmax == 0 {
            continue;
        }
        let order = kmax as usize;
        let nhc_ee = beta_one::nhc_series(a, Restriction::EE, order)?;
        let nhc_en = beta_one::nhc_series(a, Restriction::EN, order)?;
        let nhc_ne = beta_one::nhc_series(a, Restriction::NE, order)?;
        let h = beta_one::h_prefix_series(a, order)?;
        let big_h = beta_one::no_cross_no_right_bounce_series(a, order)?;
        let dyck = beta_one::rational_dyck_count(a, order)?;
        let budget = Budget {
            max_steps: config.cross_max_steps.max(Budget::default().max_steps),
            max_paths: u64::MAX,
            ..Budget::default()
        };
        let profiles: Vec<ProfileCounts> = (1..=kmax)
            .into_par_iter()
            .map(|k| oracle::enumerate_profiles_with(s, k, &budget))
            .collect::<Result<_>>()?;
        for p in &profiles {
            let k = p.k as usize;
            let no_cross = |q: &crate::oracle::BounceProfile| q.horizontal_crosses == Some(0);
            let cases: [(&str, &Series, u64); 6] = [
                ("nhc_ee", &nhc_ee, p.count_where(|q| no_cross(q) && (q.first, q.last) == (Step::E, Step::E))),
                ("nhc_en", &nhc_en, p.count_where(|q| no_cross(q) && (q.first, q.last) == (Step::E, Step::N))),
                ("nhc_ne", &nhc_ne, p.count_where(|q| no_cross(q) && (q.first, q.last) == (Step::N, Step::E))),
                ("h_E*", &h, p.count_where(|q| no_cross(q) && q.first == Step::E)),
                ("H_E*", &big_h, p.count_where(|q| no_cross(q) && q.first == Step::E && q.right == 0)),
                ("H_NE", &dyck, p.count_where(|q| no_cross(q) && q.first == Step::N)),
            ];
            for (name, series, brute) in cases {
                c.value(format!("{name} a = {a}, k = {k}"), Some(s), k, None, BigInt::from(brute), series.coeff(k).clone());
            }
            let stray = p.count_where(|q| no_cross(q) && q.first == Step::N && q.last != Step::E);
            c.value(format!("N-start no-cross paths end with E, a = {a}, k = {k}"), Some(s), k, None, BigInt::from(0), BigInt::from(stray));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn cheap_suites_pass() {
        let config = VerifyConfig {
            order: 8,
            max_slope_sum: 5,
            max_steps: 12,
            alpha_max: 3,
            cross_max_steps: 12,
            n_max: 5,
            b_max: 3,
            bounce_max: 3,
            ..VerifyConfig::default()
        };
        for suite in Suite::ALL {
            let report = run_suite(suite, &config).unwrap();
            assert!(!report.checks.is_empty(), "{suite} ran no checks");
            assert!(report.passed(), "{suite}: {:?}", report.first_failure());
        }
    }

    #[test]
    fn mismatch_is_located() {
        let mut c = Checks::new();
        let a = Series::from_i64s(&[0, 1, 2], 2);
        let b = Series::from_i64s(&[0, 1, 3], 2);
        c.series("x".into(), None, Some((1, 2)), &a, &b);
        let m = c.0[0].mismatch.clone().unwrap();
        assert_eq!((m.k, m.left, m.right), (2, Some(1), Some(2)));
        assert_eq!(m.to_string(), "k = 2, l = 1, r = 2: expected 2, got 3");
    }
}
