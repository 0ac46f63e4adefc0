//! The line `y = x / alpha`: Fuss-Catalan forms, horizontal crosses, and the
//! two-row tableau count for `alpha = 1`.
//!
//! With `beta = 1` the line meets the lattice exactly at `(alpha i, i)`, and a
//! path can only pass through the line horizontally at such a point. A
//! horizontal cross is an interior EE vertex on the line.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bounce_gf::{BounceFree, MarkerSeries};
use crate::closed_forms::{binomial, fuss_catalan, g_prefix_series, BaseSeries, Restriction, Slope, Step};
use crate::error::{Error, Result};
use crate::series::Series;

fn slope_for(alpha: u32) -> Result<Slope> {
    Slope::new(alpha, 1)
}

fn ensure_equal(what: &'static str, a: &Series, b: &Series) -> Result<()> {
    match (0..=a.order().min(b.order())).find(|&k| a.coeff(k) != b.coeff(k)) {
        None => Ok(()),
        Some(k) => Err(Error::IdentityMismatch {
            what,
            k,
            left: a.coeff(k).clone(),
            right: b.coeff(k).clone(),
        }),
    }
}

/// Young diagram with two rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwoRowShape {
    first_row: u32,
    second_row: u32,
}

impl TwoRowShape {
    pub fn new(first_row: u32, second_row: u32) -> Result<Self> {
        if first_row < second_row {
            return Err(Error::InvalidShape(format!(
                "rows ({first_row}, {second_row}) are not weakly decreasing"
            )));
        }
        Ok(TwoRowShape {
            first_row,
            second_row,
        })
    }

    /// `(n + b, n - b - 1)`, whose fillings match E-start paths to `(n, n)`
    /// with exactly `b` bounces. An empty second row is a one-row shape.
    pub fn from_bounces(n: u32, b: u32) -> Result<Self> {
        if n <= b {
            return Err(Error::InvalidShape(format!("n = {n} must exceed b = {b}")));
        }
        Self::new(n + b, n - b - 1)
    }

    pub fn first_row(self) -> u32 {
        self.first_row
    }

    pub fn second_row(self) -> u32 {
        self.second_row
    }

    pub fn cells(self) -> u32 {
        self.first_row + self.second_row
    }

    /// Number of standard fillings by the hook length formula.
    pub fn hook_length_count(self) -> BigInt {
        let (p, q) = (self.first_row, self.second_row);
        let mut hooks = BigInt::one();
        for j in 1..=p {
            hooks *= (p - j) + 1 + u32::from(j <= q);
        }
        for j in 1..=q {
            hooks *= q - j + 1;
        }
        let factorial: BigInt = (1..=self.cells()).map(BigInt::from).product();
        factorial / hooks
    }
}

/// Standard Young tableaux of shape `(n + b, n - b - 1)`.
pub fn syt_two_row_count(n: u32, b: u32) -> Result<BigInt> {
    Ok(TwoRowShape::from_bounces(n, b)?.hook_length_count())
}

/// Bounce-free AB-paths as rational functions of `c = c_alpha(x)`:
///
/// ```text
/// f_ee = (alpha c - 1)(c - 1) / P,  f_nn = (c - 1)^2 / P,  f_en = c (c - 1) / P
/// P = (1 - alpha) c^2 + (alpha + 1) c - 1
/// ```
pub fn f_ab_via_fuss_catalan(alpha: u32, restriction: Restriction, order: usize) -> Result<Series> {
    slope_for(alpha)?;
    let a = i64::from(alpha);
    let c = fuss_catalan(alpha, order)?;
    let c1 = c.add_constant(-1);
    let den = (&c * &c).scale_i64(1 - a) + c.scale_i64(a + 1) - Series::one(order);
    let ee = || c.scale_i64(a).add_constant(-1) * &c1;
    let nn = || &c1 * &c1;
    let en = || &c * &c1;
    let num = match restriction {
        Restriction::EE => ee(),
        Restriction::NN => nn(),
        Restriction::EN | Restriction::NE => en(),
        Restriction::All => ee() + nn() + en().scale_i64(2),
    };
    num.div(&den)
}

/// Whether `f_ee = f_nn + (alpha - 1) f_en` holds to the given order.
pub fn beta1_f_identity_check(alpha: u32, order: usize) -> bool {
    let Ok(slope) = slope_for(alpha) else {
        return false;
    };
    let f = BounceFree::new(slope, order);
    f.ee == &f.nn + &f.en.scale_i64(i64::from(alpha) - 1)
}

/// Bounce-free series with the common denominator `1 + g - g_ee`.
pub fn simplified_bounce_free(alpha: u32, restriction: Restriction, order: usize) -> Result<Series> {
    let base = BaseSeries::new(slope_for(alpha)?, order);
    let den = (&base.g - &base.ee).add_constant(1);
    let num = match restriction {
        Restriction::EE => base.ee.clone(),
        Restriction::EN | Restriction::NE => &base.nn + &base.en,
        Restriction::NN => base.nn.clone(),
        Restriction::All => &base.ee + &base.nn + (&base.nn + &base.en).scale_i64(2),
    };
    num.div(&den)
}

/// `G(x, s, t) = (g + (2-s-t) g_nn) / (1 + (2-s-t) g_en + (1-s)(1-t) g_nn)`
/// expanded into the grid `0 <= l <= max_left`, `0 <= r <= max_right`.
pub fn simplified_bounce_markers(alpha: u32, max_left: u32, max_right: u32, order: usize) -> Result<MarkerSeries> {
    let base = BaseSeries::new(slope_for(alpha)?, order);
    let num = MarkerSeries::from_terms(
        max_left,
        max_right,
        order,
        vec![
            (0, 0, &base.g + &base.nn.scale_i64(2)),
            (1, 0, -&base.nn),
            (0, 1, -&base.nn),
        ],
    );
    let mixed = &base.en + &base.nn;
    let den = MarkerSeries::from_terms(
        max_left,
        max_right,
        order,
        vec![
            (0, 0, (base.en.scale_i64(2) + &base.nn).add_constant(1)),
            (1, 0, -&mixed),
            (0, 1, -&mixed),
            (1, 1, base.nn.clone()),
        ],
    );
    num.div(&den)
}

/// `alpha = beta = 1` forms in terms of the Catalan series `c(x)`:
/// `f_ee = f_nn = (x c^2 - x c) / (1 + x c)`, `f_en = x c^2 / (1 + x c)`,
/// `f = 2 (c - 1)`.
pub fn catalan_bounce_free(restriction: Restriction, order: usize) -> Result<Series> {
    let c = fuss_catalan(1, order)?;
    let xc = c.shift_up(1);
    let den = xc.add_constant(1);
    match restriction {
        Restriction::All => Ok(c.add_constant(-1).scale_i64(2)),
        Restriction::EE | Restriction::NN => (&xc * &c - &xc).div(&den),
        Restriction::EN | Restriction::NE => (&xc * &c).div(&den),
    }
}

/// `G` for `alpha = beta = 1`:
/// `(2 x c + (2-s-t)(x c - x)) / (1 - 2 x c + (2-s-t) x + (1-s)(1-t)(x c - x))`.
pub fn catalan_bounce_markers(max_left: u32, max_right: u32, order: usize) -> Result<MarkerSeries> {
    let c = fuss_catalan(1, order)?;
    let x = Series::x(order);
    let xc = c.shift_up(1);
    let d = &xc - &x;
    let num = MarkerSeries::from_terms(
        max_left,
        max_right,
        order,
        vec![
            (0, 0, xc.scale_i64(2) + d.scale_i64(2)),
            (1, 0, -&d),
            (0, 1, -&d),
        ],
    );
    let den = MarkerSeries::from_terms(
        max_left,
        max_right,
        order,
        vec![
            (0, 0, (xc.scale_i64(-2) + x.scale_i64(2) + &d).add_constant(1)),
            (1, 0, -(&x + &d)),
            (0, 1, -(&x + &d)),
            (1, 1, d.clone()),
        ],
    );
    num.div(&den)
}

/// AB-paths with no horizontal cross: `g_ee / (1 + g_ee)` and
/// `g_en / (1 + g_ee)` (the same for NE).
pub fn nhc_series(alpha: u32, restriction: Restriction, order: usize) -> Result<Series> {
    let base = BaseSeries::new(slope_for(alpha)?, order);
    let num = match restriction {
        Restriction::EE => base.ee.clone(),
        Restriction::EN | Restriction::NE => base.en.clone(),
        r => {
            return Err(Error::UnsupportedRestriction {
                what: "nhc_series",
                restriction: r.name(),
            })
        }
    };
    num.div(&base.ee.add_constant(1))
}

/// E-start paths with no horizontal cross, `h_E*(x) = (g_ee + g_en) / (1 + g_ee)`.
///
/// Fails if the quotient disagrees with [`h_prefix_closed_form`].
pub fn h_prefix_series(alpha: u32, order: usize) -> Result<Series> {
    let base = BaseSeries::new(slope_for(alpha)?, order);
    let quotient = (&base.ee + &base.en).div(&base.ee.add_constant(1))?;
    ensure_equal("h_E* quotient vs binomial form", &quotient, &h_prefix_closed_form(alpha, order)?)?;
    Ok(quotient)
}

/// `sum_k alpha (alpha + 2) / ((alpha + 1) k + 1) * C((alpha + 1) k + 1, k - 1) x^k`.
pub fn h_prefix_closed_form(alpha: u32, order: usize) -> Result<Series> {
    slope_for(alpha)?;
    let a = i64::from(alpha);
    let coeffs = (0..=order)
        .map(|k| {
            if k == 0 {
                return Ok(BigInt::zero());
            }
            let kk = k as i64;
            let num = BigInt::from(a * (a + 2)) * binomial(((a + 1) * kk + 1) as u64, kk - 1);
            let den = BigInt::from((a + 1) * kk + 1);
            if !(&num % &den).is_zero() {
                return Err(Error::NonIntegerCoefficient {
                    what: "h_E* closed form",
                    k,
                });
            }
            Ok(num / den)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Series::new(coeffs))
}

/// E-start paths with no horizontal cross and no right bounce,
/// `H_E*(x) = alpha (c_alpha(x) - 1)`.
///
/// Also evaluates `h_E* / (1 + nhc_en)` and `g_E* / (1 + g_E*)` and fails if
/// any of the three forms disagree.
pub fn no_cross_no_right_bounce_series(alpha: u32, order: usize) -> Result<Series> {
    let slope = slope_for(alpha)?;
    let fc = fuss_catalan(alpha, order)?
        .add_constant(-1)
        .scale_i64(i64::from(alpha));
    let h = h_prefix_series(alpha, order)?;
    let via_h = h.div(&nhc_series(alpha, Restriction::EN, order)?.add_constant(1))?;
    let ge = g_prefix_series(slope, Step::E, order);
    let via_g = ge.div(&ge.add_constant(1))?;
    ensure_equal("H_E*: h/(1+nhc_en) vs alpha(c-1)", &via_h, &fc)?;
    ensure_equal("H_E*: g_E*/(1+g_E*) vs alpha(c-1)", &via_g, &fc)?;
    Ok(fc)
}

/// N-start paths with no horizontal cross; these are exactly the rational
/// Dyck paths of slope `1/alpha`, counted by `c_alpha(x) - 1`.
pub fn rational_dyck_count(alpha: u32, order: usize) -> Result<Series> {
    slope_for(alpha)?;
    Ok(fuss_catalan(alpha, order)?.add_constant(-1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounce_gf::bounce_free_ab;

    fn ints(s: &Series, range: std::ops::RangeInclusive<usize>) -> Vec<i64> {
        range.map(|k| i64::try_from(s.coeff(k)).unwrap()).collect()
    }

    #[test]
    fn fuss_catalan_forms_examples() {
        assert_eq!(
            ints(&f_ab_via_fuss_catalan(2, Restriction::EE, 8).unwrap(), 1..=8),
            vec![1, 4, 18, 89, 466, 2537, 14209, 81316]
        );
        assert_eq!(
            ints(&f_ab_via_fuss_catalan(2, Restriction::EN, 8).unwrap(), 1..=8),
            vec![1, 3, 13, 63, 326, 1761, 9808, 55895]
        );
        let s11 = Slope::new(1, 1).unwrap();
        for r in Restriction::ALL {
            assert_eq!(catalan_bounce_free(r, 12).unwrap(), bounce_free_ab(s11, r, 12), "{r}");
        }
    }

    #[test]
    fn f_identity_examples() {
        assert!(beta1_f_identity_check(2, 8));
        assert!(beta1_f_identity_check(1, 10));
        assert!(beta1_f_identity_check(3, 6));
        assert!(!beta1_f_identity_check(0, 6));
    }

    #[test]
    fn nhc_examples() {
        assert_eq!(ints(&nhc_series(2, Restriction::EE, 3).unwrap(), 1..=3), vec![1, 5, 24]);
        assert_eq!(ints(&nhc_series(2, Restriction::EN, 1).unwrap(), 1..=1), vec![1]);
        assert!(matches!(
            nhc_series(2, Restriction::NN, 3),
            Err(Error::UnsupportedRestriction { .. })
        ));
    }

    #[test]
    fn h_examples() {
        let h = h_prefix_series(2, 2).unwrap();
        assert_eq!(ints(&h, 1..=2), vec![2, 8]);
        assert_eq!(ints(&h_prefix_series(1, 1).unwrap(), 1..=1), vec![1]);
    }

    #[test]
    fn big_h_examples() {
        assert_eq!(
            ints(&no_cross_no_right_bounce_series(2, 8).unwrap(), 1..=8),
            vec![2, 6, 24, 110, 546, 2856, 15504, 86526]
        );
        assert_eq!(ints(&no_cross_no_right_bounce_series(1, 4).unwrap(), 1..=4), vec![1, 2, 5, 14]);
        for a in 1..=5 {
            assert!(no_cross_no_right_bounce_series(a, 10).is_ok());
        }
    }

    #[test]
    fn rational_dyck_examples() {
        assert_eq!(ints(&rational_dyck_count(1, 4).unwrap(), 1..=4), vec![1, 2, 5, 14]);
        assert_eq!(ints(&rational_dyck_count(2, 4).unwrap(), 1..=4), vec![1, 3, 12, 55]);
        assert!(rational_dyck_count(2, 4).unwrap().constant_term().is_zero());
    }

    #[test]
    fn syt_examples() {
        assert_eq!(syt_two_row_count(2, 1).unwrap(), BigInt::from(1));
        assert_eq!(syt_two_row_count(3, 1).unwrap(), BigInt::from(4));
        assert_eq!(syt_two_row_count(3, 0).unwrap(), BigInt::from(5));
        assert!(matches!(syt_two_row_count(3, 3), Err(Error::InvalidShape(_))));
        assert!(TwoRowShape::new(1, 2).is_err());
    }

    #[test]
    fn hook_formula_small_shapes() {
        assert_eq!(TwoRowShape::new(2, 1).unwrap().hook_length_count(), BigInt::from(2));
        assert_eq!(TwoRowShape::new(3, 3).unwrap().hook_length_count(), BigInt::from(5));
        assert_eq!(TwoRowShape::new(0, 0).unwrap().hook_length_count(), BigInt::from(1));
    }

    #[test]
    fn simplified_forms_match_general() {
        for a in 1..=5 {
            let s = Slope::new(a, 1).unwrap();
            for r in Restriction::ALL {
                assert_eq!(simplified_bounce_free(a, r, 10).unwrap(), bounce_free_ab(s, r, 10));
            }
        }
    }
}
