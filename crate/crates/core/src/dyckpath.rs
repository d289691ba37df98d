//! Dyck paths in the 45°-rotated convention.
//!
//! A path of order `n` has `2n` steps and runs from `(-n, 0)` to `(n, 0)`.
//! Steps are indexed `1..=2n`; step `k` goes from column `k - 1 - n` to
//! column `k - n`. Heights are stored per vertex, so `heights()[x + n]` is
//! the height at column `x`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn flip(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
        }
    }

    fn delta(self) -> i32 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
    heights: Vec<i32>,
}

/// A matched up/down step pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chord {
    /// 1-based index of the up step.
    pub up_step: usize,
    /// 1-based index of the matching down step.
    pub down_step: usize,
    /// Column where the up step starts.
    pub left_col: i32,
    /// Column where the down step ends.
    pub right_col: i32,
}

impl Chord {
    /// Whether `other` lies strictly inside this chord.
    pub fn encloses(&self, other: &Chord) -> bool {
        self.up_step < other.up_step && other.down_step < self.down_step
    }

    /// Columns spanned by the chord, endpoints included.
    pub fn columns(&self) -> std::ops::RangeInclusive<i32> {
        self.left_col..=self.right_col
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.up_step, self.down_step)
    }
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if !steps.len().is_multiple_of(2) {
            return Err(Error::OddLength(steps.len()));
        }
        let mut heights = Vec::with_capacity(steps.len() + 1);
        let mut h = 0i32;
        heights.push(0);
        for (i, step) in steps.iter().enumerate() {
            h += step.delta();
            if h < 0 {
                return Err(Error::NegativePrefix(i + 1));
            }
            heights.push(h);
        }
        if h != 0 {
            return Err(Error::Unbalanced(h as i64));
        }
        Ok(DyckPath { steps, heights })
    }

    /// Builds a path from its vertex heights, left to right.
    pub fn from_heights(heights: &[i32]) -> Result<Self> {
        if heights.is_empty() || heights[0] != 0 {
            return Err(Error::Parse("height profile must start at 0".into()));
        }
        let steps = heights
            .windows(2)
            .map(|w| match w[1] - w[0] {
                1 => Ok(Step::Up),
                -1 => Ok(Step::Down),
                d => Err(Error::Parse(format!("height jump of {d}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }

    pub fn empty() -> Self {
        DyckPath {
            steps: Vec::new(),
            heights: vec![0],
        }
    }

    /// `(UD)^n`.
    pub fn zigzag(n: usize) -> Self {
        let steps = (0..n).flat_map(|_| [Step::Up, Step::Down]).collect();
        DyckPath::new(steps).expect("zigzag is balanced")
    }

    pub fn is_zigzag(&self) -> bool {
        self.steps.chunks(2).all(|c| c == [Step::Up, Step::Down])
    }

    pub fn order(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn heights(&self) -> &[i32] {
        &self.heights
    }

    pub fn min_col(&self) -> i32 {
        -(self.order() as i32)
    }

    pub fn max_col(&self) -> i32 {
        self.order() as i32
    }

    /// Height at column `x`; zero outside `[-n, n]`.
    pub fn height(&self, x: i32) -> i32 {
        let idx = x + self.order() as i32;
        if idx < 0 || idx as usize >= self.heights.len() {
            0
        } else {
            self.heights[idx as usize]
        }
    }

    /// The step going from column `x` to column `x + 1`.
    pub fn step_after(&self, x: i32) -> Option<Step> {
        let idx = x + self.order() as i32;
        if idx < 0 {
            return None;
        }
        self.steps.get(idx as usize).copied()
    }

    /// The step arriving at column `x`.
    pub fn step_before(&self, x: i32) -> Option<Step> {
        self.step_after(x - 1)
    }

    /// Chords ordered by their up step.
    pub fn chords(&self) -> Vec<Chord> {
        let n = self.order() as i32;
        let mut open = Vec::new();
        let mut pairs = Vec::with_capacity(self.order());
        for (i, step) in self.steps.iter().enumerate() {
            let k = i + 1;
            match step {
                Step::Up => open.push(k),
                Step::Down => {
                    let up = open.pop().expect("validated Dyck word");
                    pairs.push((up, k));
                }
            }
        }
        pairs.sort_unstable();
        pairs
            .into_iter()
            .map(|(up, down)| Chord {
                up_step: up,
                down_step: down,
                left_col: up as i32 - 1 - n,
                right_col: down as i32 - n,
            })
            .collect()
    }

    /// Number of up steps between and including the chord's endpoints.
    pub fn chord_length(&self, chord: &Chord) -> Result<usize> {
        if !self.chords().contains(chord) {
            return Err(Error::ChordNotInPath {
                up: chord.up_step,
                down: chord.down_step,
                path: self.to_string(),
            });
        }
        Ok(self.steps[chord.up_step - 1..chord.down_step]
            .iter()
            .filter(|&&s| s == Step::Up)
            .count())
    }

    /// Reverse the word and swap U with D.
    pub fn mirror(&self) -> Self {
        let steps = self.steps.iter().rev().map(|s| s.flip()).collect();
        DyckPath::new(steps).expect("mirror of a Dyck path is a Dyck path")
    }

    /// Order-raising surgery at column `s`: everything left of `s` moves one
    /// unit left, everything right moves one unit right, and the vertex at
    /// `s` becomes a peak.
    pub fn spread(&self, s: i32) -> Result<Self> {
        self.check_column(s)?;
        let (_, heights) = spread_profile(self.min_col(), &self.heights, s);
        Ok(DyckPath::from_heights(&heights).expect("spread keeps the Dyck property"))
    }

    /// Inverse of [`DyckPath::spread`]; fails unless the path has a peak at
    /// `s` flanked by equal heights.
    pub fn contract(&self, s: i32) -> Result<Self> {
        if self.order() == 0 || s <= self.min_col() || s >= self.max_col() {
            return Err(Error::NoContraction(s));
        }
        let (_, heights) =
            contract_profile(self.min_col(), &self.heights, s).ok_or(Error::NoContraction(s))?;
        DyckPath::from_heights(&heights).map_err(|_| Error::NoContraction(s))
    }

    pub(crate) fn check_column(&self, s: i32) -> Result<()> {
        if s < self.min_col() || s > self.max_col() {
            return Err(Error::ColumnOutOfRange {
                column: s,
                order: self.order(),
            });
        }
        Ok(())
    }

    /// All Dyck paths of order `n`, in lexicographic order with `U < D`.
    pub fn all(n: usize) -> Vec<DyckPath> {
        paths_between(&DyckPath::zigzag(n), None)
    }

    /// All paths of the same order weakly above `self`.
    pub fn paths_above(&self) -> Vec<DyckPath> {
        paths_between(self, None)
    }

    /// Whether `self` is weakly above `lower` everywhere.
    pub fn is_above(&self, lower: &DyckPath) -> bool {
        self.order() == lower.order()
            && self.heights.iter().zip(&lower.heights).all(|(u, l)| u >= l)
    }
}

/// Paths weakly above `lower` (and weakly below `upper`, if given).
fn paths_between(lower: &DyckPath, upper: Option<&DyckPath>) -> Vec<DyckPath> {
    let len = lower.steps.len();
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(len);
    fn rec(
        lower: &DyckPath,
        upper: Option<&DyckPath>,
        len: usize,
        h: i32,
        steps: &mut Vec<Step>,
        out: &mut Vec<DyckPath>,
    ) {
        let k = steps.len();
        if k == len {
            out.push(DyckPath::new(steps.clone()).expect("constructed balanced"));
            return;
        }
        for step in [Step::Up, Step::Down] {
            let nh = h + step.delta();
            let remaining = (len - k - 1) as i32;
            if nh < lower.heights[k + 1] || nh > remaining {
                continue;
            }
            if let Some(u) = upper {
                if nh > u.heights[k + 1] {
                    continue;
                }
            }
            steps.push(step);
            rec(lower, upper, len, nh, steps, out);
            steps.pop();
        }
    }
    rec(lower, upper, len, 0, &mut steps, &mut out);
    out
}

/// Number of steps where `lower` goes down while `upper` goes up.
pub fn discrepancy(lower: &DyckPath, upper: &DyckPath) -> Result<usize> {
    if lower.order() != upper.order() {
        return Err(Error::OrderMismatch(lower.order(), upper.order()));
    }
    check_containment(lower, upper)?;
    Ok(lower
        .steps
        .iter()
        .zip(&upper.steps)
        .filter(|(l, u)| **l == Step::Down && **u == Step::Up)
        .count())
}

fn check_containment(lower: &DyckPath, upper: &DyckPath) -> Result<()> {
    let n = lower.order() as i32;
    for (i, (l, u)) in lower.heights.iter().zip(&upper.heights).enumerate() {
        if u < l {
            return Err(Error::NotContained {
                lower: lower.to_string(),
                upper: upper.to_string(),
                column: i as i32 - n,
            });
        }
    }
    Ok(())
}

/// Spread a height profile whose first point sits at column `start`.
pub(crate) fn spread_profile(start: i32, heights: &[i32], s: i32) -> (i32, Vec<i32>) {
    let end = start + heights.len() as i32 - 1;
    if end < s {
        return (start - 1, heights.to_vec());
    }
    if start > s {
        return (start + 1, heights.to_vec());
    }
    let mut out = Vec::with_capacity(heights.len() + 2);
    for (x, &h) in (start..).zip(heights) {
        if x == s {
            out.extend([h, h + 1, h]);
        } else {
            out.push(h);
        }
    }
    (start - 1, out)
}

/// Inverse of [`spread_profile`]. `None` when the profile could not have
/// come from a spread at `s`.
pub(crate) fn contract_profile(start: i32, heights: &[i32], s: i32) -> Option<(i32, Vec<i32>)> {
    let end = start + heights.len() as i32 - 1;
    if end <= s - 2 {
        return Some((start + 1, heights.to_vec()));
    }
    if start >= s + 2 {
        return Some((start - 1, heights.to_vec()));
    }
    if start > s - 1 || end < s + 1 {
        return None;
    }
    let at = |x: i32| heights[(x - start) as usize];
    if at(s - 1) != at(s) - 1 || at(s + 1) != at(s) - 1 {
        return None;
    }
    let out = (start..=end)
        .filter(|&x| x != s && x != s + 1)
        .map(at)
        .collect();
    Some((start + 1, out))
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    /// Accepts `U`/`D` or `(`/`)`, but not both in one word.
    fn from_str(text: &str) -> Result<Self> {
        let mut letters = false;
        let mut parens = false;
        let mut steps = Vec::with_capacity(text.len());
        for (position, c) in text.chars().enumerate() {
            let step = match c {
                'U' => {
                    letters = true;
                    Step::Up
                }
                'D' => {
                    letters = true;
                    Step::Down
                }
                '(' => {
                    parens = true;
                    Step::Up
                }
                ')' => {
                    parens = true;
                    Step::Down
                }
                found => return Err(Error::InvalidCharacter { position, found }),
            };
            if letters && parens {
                return Err(Error::MixedAlphabet);
            }
            steps.push(step);
        }
        DyckPath::new(steps)
    }
}

/// Parse a Dyck word.
pub fn parse_word(text: &str) -> Result<DyckPath> {
    text.parse()
}

/// The skew shape between a lower path and an upper path of the same order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewShape {
    lower: DyckPath,
    upper: DyckPath,
}

impl SkewShape {
    pub fn new(lower: DyckPath, upper: DyckPath) -> Result<Self> {
        if lower.order() != upper.order() {
            return Err(Error::OrderMismatch(lower.order(), upper.order()));
        }
        check_containment(&lower, &upper)?;
        Ok(SkewShape { lower, upper })
    }

    pub fn lower(&self) -> &DyckPath {
        &self.lower
    }

    pub fn upper(&self) -> &DyckPath {
        &self.upper
    }

    pub fn order(&self) -> usize {
        self.lower.order()
    }

    /// Number of boxes stacked in column `x`.
    pub fn column_size(&self, x: i32) -> usize {
        ((self.upper.height(x) - self.lower.height(x)) / 2) as usize
    }

    pub fn area(&self) -> usize {
        let n = self.order() as i32;
        (-n..=n).map(|x| self.column_size(x)).sum()
    }

    pub fn discrepancy(&self) -> usize {
        discrepancy(&self.lower, &self.upper).expect("shape invariants hold")
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.lower, self.upper)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("UDUUDUDD").order(), 4);
        assert_eq!(p("").order(), 0);
        assert_eq!("DU".parse::<DyckPath>(), Err(Error::NegativePrefix(1)));
        assert_eq!(p("(()())").to_string(), "UUDUDD");
        assert_eq!("U(".parse::<DyckPath>(), Err(Error::MixedAlphabet));
        assert_eq!("UUD".parse::<DyckPath>(), Err(Error::OddLength(3)));
        assert_eq!("UUDU".parse::<DyckPath>(), Err(Error::Unbalanced(2)));
        assert!(matches!(
            "UxD".parse::<DyckPath>(),
            Err(Error::InvalidCharacter {
                position: 1,
                found: 'x'
            })
        ));
    }

    #[test]
    fn chords_of_small_paths() {
        let pairs = |s: &str| {
            p(s).chords()
                .iter()
                .map(|c| (c.up_step, c.down_step))
                .collect::<Vec<_>>()
        };
        assert_eq!(pairs("UDUUDUDD"), vec![(1, 2), (3, 8), (4, 5), (6, 7)]);
        assert_eq!(pairs("UD"), vec![(1, 2)]);
        assert_eq!(
            pairs("UUDUUDDDUDUUUDDUDUUDDDUD"),
            vec![
                (1, 8),
                (2, 3),
                (4, 7),
                (5, 6),
                (9, 10),
                (11, 22),
                (12, 15),
                (13, 14),
                (16, 17),
                (18, 21),
                (19, 20),
                (23, 24)
            ]
        );
        let c = p("UD").chords()[0];
        assert_eq!((c.left_col, c.right_col), (-1, 1));
    }

    #[test]
    fn chord_lengths() {
        let path = p("UDUUDUDD");
        let chords = path.chords();
        assert_eq!(path.chord_length(&chords[1]).unwrap(), 3);
        assert_eq!(path.chord_length(&chords[0]).unwrap(), 1);
        let uudd = p("UUDD");
        assert_eq!(uudd.chord_length(&uudd.chords()[0]).unwrap(), 2);
        assert!(uudd.chord_length(&chords[1]).is_err());
    }

    #[test]
    fn zigzag_words() {
        assert_eq!(DyckPath::zigzag(2).to_string(), "UDUD");
        assert_eq!(DyckPath::zigzag(0).to_string(), "");
        assert_eq!(DyckPath::zigzag(3).to_string(), "UDUDUD");
    }

    #[test]
    fn discrepancy_examples() {
        assert_eq!(discrepancy(&p("UUDD"), &p("UUDD")).unwrap(), 0);
        assert_eq!(discrepancy(&p("UDUD"), &p("UUDD")).unwrap(), 1);
        assert!(matches!(
            discrepancy(&p("UUDD"), &p("UDUD")),
            Err(Error::NotContained { .. })
        ));
        assert_eq!(
            discrepancy(&p("UD"), &p("UUDD")),
            Err(Error::OrderMismatch(1, 2))
        );
    }

    #[test]
    fn spread_and_contract() {
        assert_eq!(DyckPath::empty().spread(0).unwrap().to_string(), "UD");
        assert_eq!(p("UD").spread(1).unwrap().to_string(), "UDUD");
        assert_eq!(p("UUDD").spread(0).unwrap().to_string(), "UUUDDD");
        assert!(p("UD").spread(2).is_err());
        assert_eq!(p("UD").contract(0).unwrap(), DyckPath::empty());
        assert_eq!(p("UDUD").contract(1).unwrap().to_string(), "UD");
        assert_eq!(p("UDUD").contract(0), Err(Error::NoContraction(0)));
    }

    #[test]
    fn contract_at_zero_of_udud_has_no_preimage() {
        // exhaust order-1 paths: none spreads to UDUD at column 0
        for q in DyckPath::all(1) {
            assert_ne!(q.spread(0).unwrap(), p("UDUD"));
        }
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(p("UUDD").mirror().to_string(), "UUDD");
        assert_eq!(p("UDUUDD").mirror().to_string(), "UUDDUD");
        assert_eq!(p("UD").mirror().to_string(), "UD");
    }

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (0..=7).map(|n| DyckPath::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn chords_are_noncrossing_partitions() {
        for n in 0..=7 {
            for path in DyckPath::all(n) {
                let chords = path.chords();
                let mut seen = vec![false; 2 * n + 1];
                for c in &chords {
                    assert!(!seen[c.up_step] && !seen[c.down_step]);
                    seen[c.up_step] = true;
                    seen[c.down_step] = true;
                    assert_eq!((c.right_col - c.left_col) % 2, 0);
                    assert!(c.left_col < c.right_col);
                }
                assert!(seen[1..].iter().all(|&b| b));
                for a in &chords {
                    for b in &chords {
                        let crossing = a.up_step < b.up_step
                            && b.up_step < a.down_step
                            && a.down_step < b.down_step;
                        assert!(!crossing, "{path}: {a} crosses {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn chord_lengths_sum_to_total_depth() {
        for n in 0..=7 {
            for path in DyckPath::all(n) {
                let total: usize = path
                    .chords()
                    .iter()
                    .map(|c| path.chord_length(c).unwrap())
                    .sum();
                // an up step ending at height h lies inside h chords
                let depth: i32 = path
                    .steps()
                    .iter()
                    .zip(&path.heights()[1..])
                    .filter(|(s, _)| **s == Step::Up)
                    .map(|(_, h)| *h)
                    .sum();
                assert_eq!(total as i32, depth);
            }
        }
    }

    #[test]
    fn spread_contract_round_trip() {
        for n in 0..=5 {
            for path in DyckPath::all(n) {
                for s in -(n as i32)..=n as i32 {
                    let spread = path.spread(s).unwrap();
                    assert_eq!(spread.order(), n + 1);
                    assert_eq!(spread.contract(s).unwrap(), path);
                }
            }
        }
    }

    #[test]
    fn mirror_is_an_involution() {
        for n in 0..=6 {
            for path in DyckPath::all(n) {
                let m = path.mirror();
                assert_eq!(m.order(), n);
                assert_eq!(m.chords().len(), n);
                assert_eq!(m.mirror(), path);
            }
        }
    }

    #[test]
    fn paths_above_respects_lower() {
        let lower = p("UDUUDUDD");
        let above = lower.paths_above();
        assert!(above.iter().all(|u| u.is_above(&lower)));
        let brute = DyckPath::all(4)
            .into_iter()
            .filter(|u| u.is_above(&lower))
            .count();
        assert_eq!(above.len(), brute);
    }

    #[test]
    fn skew_shape_area() {
        let shape = SkewShape::new(p("UDUD"), p("UUDD")).unwrap();
        assert_eq!(shape.area(), 1);
        assert_eq!(shape.column_size(0), 1);
        assert_eq!(shape.discrepancy(), 1);
    }
}
