//! Binomial generating functions for all paths to `(alpha k, beta k)`, split by
//! first and last step, and the Fuss-Catalan series.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::Series;

/// The line `y = (beta / alpha) x` with `gcd(alpha, beta) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    alpha: u32,
    beta: u32,
}

impl Slope {
    pub fn new(alpha: u32, beta: u32) -> Result<Self> {
        if alpha == 0 || beta == 0 || alpha.gcd(&beta) != 1 {
            return Err(Error::InvalidSlope { alpha, beta });
        }
        Ok(Slope { alpha, beta })
    }

    /// Horizontal run of one period of the line.
    pub fn alpha(self) -> u32 {
        self.alpha
    }

    /// Vertical rise of one period of the line.
    pub fn beta(self) -> u32 {
        self.beta
    }

    /// Steps in a path of semilength `k`.
    pub fn path_len(self, k: u32) -> u32 {
        (self.alpha + self.beta) * k
    }

    /// Reflection across `y = x`.
    pub fn transpose(self) -> Slope {
        Slope {
            alpha: self.beta,
            beta: self.alpha,
        }
    }

    /// Whether `(x, y)` lies on the line.
    pub fn on_line(self, x: u32, y: u32) -> bool {
        u64::from(self.alpha) * u64::from(y) == u64::from(self.beta) * u64::from(x)
    }

    /// All coprime slopes with `alpha + beta <= max_sum`, in lexicographic order.
    pub fn all_up_to(max_sum: u32) -> Vec<Slope> {
        let mut out = Vec::new();
        for alpha in 1..max_sum {
            for beta in 1..=(max_sum - alpha) {
                if let Ok(s) = Slope::new(alpha, beta) {
                    out.push(s);
                }
            }
        }
        out
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    E,
    N,
}

impl Step {
    pub fn flip(self) -> Step {
        match self {
            Step::E => Step::N,
            Step::N => Step::E,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::E => 'E',
            Step::N => 'N',
        }
    }
}

/// Which paths a generating function counts, by first and last step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Restriction {
    All,
    EE,
    EN,
    NE,
    NN,
}

impl Restriction {
    pub const ALL: [Restriction; 5] = [
        Restriction::All,
        Restriction::EE,
        Restriction::EN,
        Restriction::NE,
        Restriction::NN,
    ];

    pub fn from_steps(first: Step, last: Step) -> Restriction {
        match (first, last) {
            (Step::E, Step::E) => Restriction::EE,
            (Step::E, Step::N) => Restriction::EN,
            (Step::N, Step::E) => Restriction::NE,
            (Step::N, Step::N) => Restriction::NN,
        }
    }

    /// `(first, last)` for the four restricted classes.
    pub fn ends(self) -> Option<(Step, Step)> {
        match self {
            Restriction::All => None,
            Restriction::EE => Some((Step::E, Step::E)),
            Restriction::EN => Some((Step::E, Step::N)),
            Restriction::NE => Some((Step::N, Step::E)),
            Restriction::NN => Some((Step::N, Step::N)),
        }
    }

    pub fn admits(self, first: Step, last: Step) -> bool {
        self.ends().is_none_or(|e| e == (first, last))
    }

    pub fn name(self) -> &'static str {
        match self {
            Restriction::All => "all",
            Restriction::EE => "ee",
            Restriction::EN => "en",
            Restriction::NE => "ne",
            Restriction::NN => "nn",
        }
    }
}

impl fmt::Display for Restriction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Restriction {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(Restriction::All),
            "ee" => Ok(Restriction::EE),
            "en" => Ok(Restriction::EN),
            "ne" => Ok(Restriction::NE),
            "nn" => Ok(Restriction::NN),
            other => Err(format!("unknown restriction '{other}' (expected all, ee, en, ne, nn)")),
        }
    }
}

/// `C(m, n)`, zero when `n < 0` or `n > m`.
pub fn binomial(m: u64, n: i64) -> BigInt {
    if n < 0 || n as u64 > m {
        return BigInt::zero();
    }
    let n = (n as u64).min(m - n as u64);
    let mut acc = BigInt::one();
    for i in 1..=n {
        // acc = C(m - n + i - 1, i - 1) here, so the division is exact
        acc *= m - n + i;
        acc /= i;
    }
    acc
}

fn binomial_i(m: i64, n: i64) -> BigInt {
    if m < 0 {
        return BigInt::zero();
    }
    binomial(m as u64, n)
}

/// `g(x) = sum_{k>=1} C((alpha+beta)k, alpha k) x^k`.
pub fn g_series(slope: Slope, order: usize) -> Series {
    let (a, b) = (i64::from(slope.alpha), i64::from(slope.beta));
    Series::from_fn(order, |k| {
        if k == 0 {
            return BigInt::zero();
        }
        let k = k as i64;
        binomial_i((a + b) * k, a * k)
    })
}

/// Generating function of paths that start with `first` and end with `last`.
pub fn g_ab_series(slope: Slope, first: Step, last: Step, order: usize) -> Series {
    let (a, b) = (i64::from(slope.alpha), i64::from(slope.beta));
    // number of E-steps strictly between the first and last step
    let offset = match (first, last) {
        (Step::E, Step::E) => 2,
        (Step::N, Step::N) => 0,
        _ => 1,
    };
    Series::from_fn(order, |k| {
        if k == 0 {
            return BigInt::zero();
        }
        let k = k as i64;
        binomial_i((a + b) * k - 2, a * k - offset)
    })
}

/// Paths that start with `first`: `g_ee + g_en` for E, `g_nn + g_en` for N.
pub fn g_prefix_series(slope: Slope, first: Step, order: usize) -> Series {
    g_ab_series(slope, first, first, order) + g_ab_series(slope, Step::E, Step::N, order)
}

/// `c_alpha(x) = sum_{k>=0} C((alpha+1)k, k) / (alpha k + 1) x^k`.
pub fn fuss_catalan(alpha: u32, order: usize) -> Result<Series> {
    let a = u64::from(alpha);
    let coeffs = (0..=order)
        .map(|k| {
            let kk = k as u64;
            let (q, r) = binomial((a + 1) * kk, kk as i64).div_rem(&BigInt::from(a * kk + 1));
            if r.is_zero() {
                Ok(q)
            } else {
                Err(Error::NonIntegerCoefficient {
                    what: "fuss_catalan",
                    k,
                })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Series::new(coeffs))
}

/// The four binomial series every bounce formula is built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseSeries {
    pub g: Series,
    pub ee: Series,
    pub en: Series,
    pub nn: Series,
}

impl BaseSeries {
    pub fn new(slope: Slope, order: usize) -> Self {
        BaseSeries {
            g: g_series(slope, order),
            ee: g_ab_series(slope, Step::E, Step::E, order),
            en: g_ab_series(slope, Step::E, Step::N, order),
            nn: g_ab_series(slope, Step::N, Step::N, order),
        }
    }

    /// `g_en^2 - g_ee g_nn`.
    pub fn det(&self) -> Series {
        &self.en * &self.en - &self.ee * &self.nn
    }

    /// `(1 + g_en)^2 - g_ee g_nn`, the common denominator of the bounce-free series.
    pub fn bounce_free_denominator(&self) -> Series {
        let one_en = self.en.add_constant(1);
        &one_en * &one_en - &self.ee * &self.nn
    }
}
