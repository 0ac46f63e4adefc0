//! Exhaustive ground truth: every path to `(alpha k, beta k)` is generated and
//! classified vertex by vertex. Nothing here touches generating functions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::beta_one::TwoRowShape;
use crate::closed_forms::{Restriction, Slope, Step};
use crate::error::{Error, Result};

/// Limits on exhaustive work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_steps: u32,
    pub max_paths: u64,
    pub max_syt_cells: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_steps: 24,
            max_paths: 3_000_000,
            max_syt_cells: 12,
        }
    }
}

/// A lattice path as a word over `{E, N}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StepWord(Vec<Step>);

impl StepWord {
    pub fn new(steps: Vec<Step>) -> Self {
        StepWord(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Swaps every E with N: the mirror image across `y = x`.
    pub fn transpose(&self) -> StepWord {
        StepWord(self.0.iter().map(|s| s.flip()).collect())
    }

    /// The semilength `k` if this word ends at `(alpha k, beta k)` for some `k >= 1`.
    pub fn semilength(&self, slope: Slope) -> Option<u32> {
        let east = self.0.iter().filter(|&&s| s == Step::E).count() as u64;
        let north = self.0.len() as u64 - east;
        let (a, b) = (u64::from(slope.alpha()), u64::from(slope.beta()));
        if east == 0 || !east.is_multiple_of(a) || east / a * b != north {
            return None;
        }
        u32::try_from(east / a).ok()
    }
}

impl fmt::Display for StepWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl FromStr for StepWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c.to_ascii_uppercase() {
                'E' => Ok(Step::E),
                'N' => Ok(Step::N),
                other => Err(Error::MalformedPath(format!("unexpected step '{other}'"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(StepWord)
    }
}

/// Bounce statistics of a single path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BounceProfile {
    pub left: u32,
    pub right: u32,
    /// Only tracked for `beta = 1`.
    pub horizontal_crosses: Option<u32>,
    pub first: Step,
    pub last: Step,
    pub bounce_free: bool,
}

impl BounceProfile {
    pub fn total_bounces(&self) -> u32 {
        self.left + self.right
    }
}

/// Classifies every interior vertex of `path` that lies on the line.
///
/// An interior vertex on the line with incoming E and outgoing N is a left
/// bounce, NE is a right bounce, and for `beta = 1` an EE vertex is a
/// horizontal cross. Endpoints are never counted.
pub fn classify(path: &StepWord, slope: Slope) -> Result<BounceProfile> {
    if path.semilength(slope).is_none() {
        return Err(Error::MalformedPath(format!(
            "{path} does not end at a positive multiple of {slope}"
        )));
    }
    Ok(classify_steps(&path.0, slope))
}

fn classify_steps(steps: &[Step], slope: Slope) -> BounceProfile {
    let track_crosses = slope.beta() == 1;
    let alpha = slope.alpha();
    let (mut x, mut y) = (0u32, 0u32);
    let (mut left, mut right, mut crosses) = (0u32, 0u32, 0u32);
    for (i, &step) in steps.iter().enumerate() {
        match step {
            Step::E => {
                if track_crosses {
                    // with beta = 1 the line meets row y only at x = alpha y
                    let line_x = alpha * y;
                    assert!(
                        !(x < line_x && line_x < x + 1),
                        "E-step crosses y = x/{alpha} off a lattice point"
                    );
                }
                x += 1;
            }
            Step::N => y += 1,
        }
        let Some(&next) = steps.get(i + 1) else {
            break;
        };
        if !slope.on_line(x, y) {
            continue;
        }
        match (step, next) {
            (Step::E, Step::N) => left += 1,
            (Step::N, Step::E) => right += 1,
            (Step::E, Step::E) => crosses += 1,
            (Step::N, Step::N) => {}
        }
    }
    BounceProfile {
        left,
        right,
        horizontal_crosses: track_crosses.then_some(crosses),
        first: steps[0],
        last: steps[steps.len() - 1],
        bounce_free: left == 0 && right == 0,
    }
}

/// Multiset of profiles over all paths of one semilength.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileCounts {
    pub slope: Slope,
    pub k: u32,
    counts: BTreeMap<BounceProfile, u64>,
}

impl ProfileCounts {
    pub fn iter(&self) -> impl Iterator<Item = (&BounceProfile, u64)> {
        self.counts.iter().map(|(p, &c)| (p, c))
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Number of paths whose profile satisfies `pred`.
    pub fn count_where(&self, pred: impl Fn(&BounceProfile) -> bool) -> u64 {
        self.iter().filter(|(p, _)| pred(p)).map(|(_, c)| c).sum()
    }

    pub fn table(&self, restriction: Restriction) -> CountTable {
        let mut counts = BTreeMap::new();
        for (p, c) in self.iter() {
            if restriction.admits(p.first, p.last) {
                *counts.entry((p.left, p.right)).or_insert(0) += c;
            }
        }
        CountTable {
            slope: self.slope,
            k: self.k,
            restriction,
            counts,
        }
    }
}

/// `b_{l,r}(k)`: paths with exactly `l` left and `r` right bounces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub slope: Slope,
    pub k: u32,
    pub restriction: Restriction,
    counts: BTreeMap<(u32, u32), u64>,
}

impl CountTable {
    pub fn get(&self, left: u32, right: u32) -> u64 {
        self.counts.get(&(left, right)).copied().unwrap_or(0)
    }

    /// Nonzero cells in `(left, right)` order.
    pub fn cells(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.counts.iter().map(|(&lr, &c)| (lr, c))
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

fn path_count(slope: Slope, k: u32) -> u64 {
    let n = slope.path_len(k) as u64;
    let e = u64::from(slope.alpha() * k).min(u64::from(slope.beta() * k));
    // exact running product; fits easily within the step budget
    (1..=e).fold(1u64, |acc, i| acc * (n - e + i) / i)
}

pub fn enumerate_profiles(slope: Slope, k: u32) -> Result<ProfileCounts> {
    enumerate_profiles_with(slope, k, &Budget::default())
}

/// Classifies every path to `(alpha k, beta k)`.
///
/// The work is split over fixed prefixes and merged; the result does not
/// depend on the thread count.
pub fn enumerate_profiles_with(slope: Slope, k: u32, budget: &Budget) -> Result<ProfileCounts> {
    if k == 0 {
        return Err(Error::MalformedPath("semilength must be positive".into()));
    }
    let len = slope.path_len(k);
    if len > budget.max_steps {
        return Err(Error::BudgetExceeded(format!(
            "{len} steps for slope {slope}, k = {k} (limit {})",
            budget.max_steps
        )));
    }
    let total = path_count(slope, k);
    if total > budget.max_paths {
        return Err(Error::BudgetExceeded(format!(
            "{total} paths for slope {slope}, k = {k} (limit {})",
            budget.max_paths
        )));
    }
    let east = slope.alpha() * k;
    let north = slope.beta() * k;

    let prefix_len = len.min(8) as usize;
    let mut prefixes = Vec::new();
    extend_words(&mut Vec::new(), prefix_len, east, north, &mut |w| {
        prefixes.push(w.to_vec())
    });

    let counts = prefixes
        .into_par_iter()
        .map(|prefix| {
            let mut local = BTreeMap::new();
            let used_e = prefix.iter().filter(|&&s| s == Step::E).count() as u32;
            let used_n = prefix.len() as u32 - used_e;
            let mut word = prefix;
            extend_words(
                &mut word,
                len as usize,
                east - used_e,
                north - used_n,
                &mut |w| *local.entry(classify_steps(w, slope)).or_insert(0u64) += 1,
            );
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (p, c) in b {
                *a.entry(p).or_insert(0) += c;
            }
            a
        });

    let out = ProfileCounts { slope, k, counts };
    assert_eq!(out.total(), total, "enumeration missed paths");
    Ok(out)
}

/// Depth-first completion of `word` to length `target` using at most `east`
/// more E-steps and `north` more N-steps.
fn extend_words(
    word: &mut Vec<Step>,
    target: usize,
    east: u32,
    north: u32,
    visit: &mut impl FnMut(&[Step]),
) {
    if word.len() == target {
        visit(word);
        return;
    }
    if east > 0 {
        word.push(Step::E);
        extend_words(word, target, east - 1, north, visit);
        word.pop();
    }
    if north > 0 {
        word.push(Step::N);
        extend_words(word, target, east, north - 1, visit);
        word.pop();
    }
}

pub fn count_table(slope: Slope, k: u32, restriction: Restriction) -> Result<CountTable> {
    Ok(enumerate_profiles(slope, k)?.table(restriction))
}

pub fn enumerate_syt(shape: TwoRowShape) -> Result<u64> {
    enumerate_syt_with(shape, &Budget::default())
}

/// Counts standard fillings of a two-row shape by placing `1, 2, ...` one at
/// a time wherever the result stays a valid tableau.
pub fn enumerate_syt_with(shape: TwoRowShape, budget: &Budget) -> Result<u64> {
    let (top, bottom) = (shape.first_row(), shape.second_row());
    if top + bottom > budget.max_syt_cells {
        return Err(Error::BudgetExceeded(format!(
            "{} cells (limit {})",
            top + bottom,
            budget.max_syt_cells
        )));
    }
    fn fill(a: u32, b: u32, top: u32, bottom: u32) -> u64 {
        if a == top && b == bottom {
            return 1;
        }
        let mut n = 0;
        if a < top {
            n += fill(a + 1, b, top, bottom);
        }
        if b < bottom && b < a {
            n += fill(a, b + 1, top, bottom);
        }
        n
    }
    Ok(fill(0, 0, top, bottom))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn slope(a: u32, b: u32) -> Slope {
        Slope::new(a, b).unwrap()
    }

    fn word(s: &str) -> StepWord {
        s.parse().unwrap()
    }

    #[test]
    fn classify_examples() {
        let p = classify(&word("NENE"), slope(1, 1)).unwrap();
        assert_eq!((p.left, p.right), (1, 0));
        assert!(!p.bounce_free);
        let p = classify(&word("ENEN"), slope(1, 1)).unwrap();
        assert_eq!((p.left, p.right), (0, 1));
        let p = classify(&word("ENE"), slope(2, 1)).unwrap();
        assert_eq!((p.left, p.right, p.horizontal_crosses), (0, 0, Some(0)));
        assert!(p.bounce_free);
    }

    #[test]
    fn classify_records_ends_and_crosses() {
        let p = classify(&word("EENEEN"), slope(2, 1)).unwrap();
        assert_eq!((p.first, p.last), (Step::E, Step::N));
        assert_eq!(p.horizontal_crosses, Some(0));
        let p = classify(&word("NEEEEN"), slope(2, 1)).unwrap();
        // (2,1) is reached E then left E
        assert_eq!(p.horizontal_crosses, Some(1));
        assert_eq!(p.left + p.right, 0);
        assert_eq!(classify(&word("NEN"), slope(1, 2)).unwrap().horizontal_crosses, None);
    }

    #[test]
    fn endpoint_is_not_a_bounce() {
        let p = classify(&word("EN"), slope(1, 1)).unwrap();
        assert!(p.bounce_free);
    }

    #[test]
    fn classify_rejects_malformed() {
        assert!(matches!(
            classify(&word("EEN"), slope(1, 1)),
            Err(Error::MalformedPath(_))
        ));
        assert!(classify(&word(""), slope(1, 1)).is_err());
        assert!("EXN".parse::<StepWord>().is_err());
    }

    #[test]
    fn enumerate_examples() {
        let c = enumerate_profiles(slope(1, 1), 2).unwrap();
        assert_eq!(c.total(), 6);
        assert_eq!(c.count_where(|p| p.bounce_free), 4);

        let c = enumerate_profiles(slope(2, 3), 1).unwrap();
        assert_eq!(c.total(), 10);
        assert_eq!(c.count_where(|p| p.left == 0 && p.right == 0), 10);

        let c = enumerate_profiles(slope(1, 1), 1).unwrap();
        assert_eq!(c.total(), 2);
        assert_eq!(c.count_where(|p| p.bounce_free), 2);
    }

    #[test]
    fn count_table_examples() {
        let t = count_table(slope(1, 1), 2, Restriction::All).unwrap();
        let cells: Vec<_> = t.cells().collect();
        assert_eq!(cells, vec![((0, 0), 4), ((0, 1), 1), ((1, 0), 1)]);
        let t = count_table(slope(1, 1), 2, Restriction::EN).unwrap();
        let cells: Vec<_> = t.cells().collect();
        assert_eq!(cells, vec![((0, 0), 1), ((0, 1), 1)]);
    }

    #[test]
    fn totals_match_binomials() {
        for s in Slope::all_up_to(6) {
            for k in 1..=3 {
                if s.path_len(k) > 16 {
                    continue;
                }
                let c = enumerate_profiles(s, k).unwrap();
                assert_eq!(c.total(), path_count(s, k));
                let restricted: u64 = [Restriction::EE, Restriction::EN, Restriction::NE, Restriction::NN]
                    .iter()
                    .map(|&r| c.table(r).total())
                    .sum();
                assert_eq!(restricted, c.total());
            }
        }
    }

    #[test]
    fn bounce_count_bound() {
        for s in Slope::all_up_to(5) {
            for k in 1..=4 {
                if s.path_len(k) > 16 {
                    continue;
                }
                let c = enumerate_profiles(s, k).unwrap();
                for (p, _) in c.iter() {
                    assert!(p.left + p.right < k.max(1));
                }
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let tight = Budget {
            max_steps: 10,
            ..Budget::default()
        };
        assert!(matches!(
            enumerate_profiles_with(slope(1, 1), 6, &tight),
            Err(Error::BudgetExceeded(_))
        ));
        let few = Budget {
            max_paths: 5,
            ..Budget::default()
        };
        assert!(enumerate_profiles_with(slope(1, 1), 2, &few).is_err());
        assert!(enumerate_profiles(slope(1, 1), 13).is_err());
    }

    #[test]
    fn syt_examples() {
        let shape = |a, b| TwoRowShape::new(a, b).unwrap();
        assert_eq!(enumerate_syt(shape(3, 0)).unwrap(), 1);
        assert_eq!(enumerate_syt(shape(2, 1)).unwrap(), 2);
        assert_eq!(enumerate_syt(shape(4, 1)).unwrap(), 4);
        assert_eq!(enumerate_syt(shape(3, 3)).unwrap(), 5);
        assert!(enumerate_syt(shape(7, 6)).is_err());
    }

    #[test]
    fn transpose_swaps_bounce_sides() {
        for s in Slope::all_up_to(5) {
            let k = if s.path_len(2) <= 10 { 2 } else { 1 };
            let len = s.path_len(k) as usize;
            let mut words = Vec::new();
            extend_words(&mut Vec::new(), len, s.alpha() * k, s.beta() * k, &mut |w| {
                words.push(StepWord::new(w.to_vec()))
            });
            for w in words {
                let p = classify(&w, s).unwrap();
                let q = classify(&w.transpose(), s.transpose()).unwrap();
                assert_eq!((p.left, p.right), (q.right, q.left), "{w} at {s}");
            }
        }
    }
}
