//! Perfect matchings of `1..=2n` grown from growth sequences.

use std::fmt;
use std::str::FromStr;

use crate::dyckpath::{DyckPath, Step};
use crate::error::{Error, Result};
use crate::permstat::Word;
use crate::treeposet::GrowthSequence;

/// Pairs `(a, b)` with `a < b`, kept sorted by `b`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PerfectMatching {
    pairs: Vec<(usize, usize)>,
}

impl PerfectMatching {
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut pairs: Vec<(usize, usize)> = pairs
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        let size = 2 * pairs.len();
        let mut seen = vec![false; size + 1];
        for &(a, b) in &pairs {
            for v in [a, b] {
                if v == 0 || v > size {
                    return Err(Error::InvalidMatching(format!("{v} is outside 1..{size}")));
                }
                if seen[v] {
                    return Err(Error::InvalidMatching(format!("{v} appears twice")));
                }
                seen[v] = true;
            }
        }
        pairs.sort_by_key(|&(_, b)| b);
        Ok(PerfectMatching { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of pairs.
    pub fn order(&self) -> usize {
        self.pairs.len()
    }

    /// Partner of `v`.
    pub fn partner(&self, v: usize) -> Option<usize> {
        self.pairs.iter().find_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }
}

impl fmt::Display for PerfectMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for PerfectMatching {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let pairs = s
            .split_whitespace()
            .map(|tok| {
                let (a, b) = tok
                    .split_once('-')
                    .ok_or_else(|| Error::Parse(format!("expected a-b, got {tok:?}")))?;
                let num = |t: &str| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad number {t:?} in {tok:?}")))
                };
                Ok((num(a)?, num(b)?))
            })
            .collect::<Result<Vec<_>>>()?;
        PerfectMatching::new(pairs)
    }
}

/// Grows the matching pair by pair: for each `p_k`, shift every entry
/// above `p_k` up by one and adjoin `(p_k + 1, 2k)`.
pub fn match_of(p: &GrowthSequence) -> PerfectMatching {
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(p.len());
    for (i, &pk) in p.values().iter().enumerate() {
        let bump = |v: usize| if v > pk { v + 1 } else { v };
        for pair in pairs.iter_mut() {
            *pair = (bump(pair.0), bump(pair.1));
        }
        pairs.push((pk + 1, 2 * (i + 1)));
    }
    PerfectMatching::new(pairs).expect("growth keeps a perfect matching")
}

/// Smaller items of the pairs, listed in order of the larger items.
pub fn min_word(m: &PerfectMatching) -> Word {
    Word::new(m.pairs.iter().map(|&(a, _)| a).collect()).expect("pair minima are distinct")
}

/// Number of pairs `(c, d)` enclosing each pair, in the stored pair order.
pub fn nesting_numbers(m: &PerfectMatching) -> Vec<((usize, usize), usize)> {
    m.pairs
        .iter()
        .map(|&(a, b)| {
            let k = m.pairs.iter().filter(|&&(c, d)| c < a && b < d).count();
            ((a, b), k)
        })
        .collect()
}

/// Total number of nested pairs of pairs.
pub fn nestings(m: &PerfectMatching) -> usize {
    nesting_numbers(m).iter().map(|&(_, k)| k).sum()
}

/// Dyck path with an up step at every pair minimum.
pub fn matching_shape(m: &PerfectMatching) -> DyckPath {
    let mut steps = vec![Step::Down; 2 * m.order()];
    for &(a, _) in &m.pairs {
        steps[a - 1] = Step::Up;
    }
    DyckPath::new(steps).expect("openers precede closers")
}

/// Nesting numbers listed along the up steps of the shape.
pub fn hermite_labels(m: &PerfectMatching) -> Vec<usize> {
    let mut by_opener = nesting_numbers(m);
    by_opener.sort();
    by_opener.into_iter().map(|(_, k)| k).collect()
}

/// Recovers the matching from its shape and the nesting numbers written on
/// its up steps.
pub fn from_hermite(shape: &DyckPath, labels: &[usize]) -> Result<PerfectMatching> {
    if labels.len() != shape.order() {
        return Err(Error::InvalidMatching(format!(
            "{} labels for a path of order {}",
            labels.len(),
            shape.order()
        )));
    }
    // A pair opened at `a` and closed at `d` is enclosed exactly by the arcs
    // still open at `d` with smaller opener, so at each down step the closing
    // opener must have rank equal to its label among the open arcs.
    fn rec(
        steps: &[Step],
        pos: usize,
        open: &mut Vec<(usize, usize)>,
        pairs: &mut Vec<(usize, usize)>,
        labels: &[usize],
        next_up: usize,
    ) -> bool {
        if pos == steps.len() {
            return true;
        }
        match steps[pos] {
            Step::Up => {
                open.push((pos + 1, labels[next_up]));
                let ok = rec(steps, pos + 1, open, pairs, labels, next_up + 1);
                if !ok {
                    open.pop();
                }
                ok
            }
            Step::Down => {
                for rank in (0..open.len()).rev() {
                    let (a, want) = open[rank];
                    if want != rank {
                        continue;
                    }
                    open.remove(rank);
                    pairs.push((a, pos + 1));
                    if rec(steps, pos + 1, open, pairs, labels, next_up) {
                        return true;
                    }
                    pairs.pop();
                    open.insert(rank, (a, want));
                }
                false
            }
        }
    }
    let mut open = Vec::new();
    let mut pairs = Vec::new();
    if rec(shape.steps(), 0, &mut open, &mut pairs, labels, 0) {
        PerfectMatching::new(pairs)
    } else {
        Err(Error::InvalidMatching(format!(
            "no matching of shape {shape} has nesting numbers {labels:?}"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permstat::{des_set, inv};

    fn seq(s: &str) -> GrowthSequence {
        s.parse().unwrap()
    }

    fn m(s: &str) -> PerfectMatching {
        s.parse().unwrap()
    }

    #[test]
    fn match_examples() {
        assert_eq!(match_of(&seq("0,2,3,5")), m("1-2 3-5 4-7 6-8"));
        assert_eq!(match_of(&seq("0,1,0,5")), m("1-7 2-4 3-5 6-8"));
        assert_eq!(match_of(&seq("0")), m("1-2"));
        assert_eq!(match_of(&seq("0,1,0,5")).to_string(), "2-4 3-5 1-7 6-8");
    }

    #[test]
    fn min_word_examples() {
        assert_eq!(min_word(&m("1-7 2-4 3-5 6-8")).entries(), &[2, 3, 1, 6]);
        assert_eq!(min_word(&m("1-2")).entries(), &[1]);
        assert_eq!(min_word(&m("1-2 3-5 4-7 6-8")).entries(), &[1, 3, 4, 6]);
    }

    #[test]
    fn nesting_examples() {
        assert_eq!(nestings(&m("1-7 2-4 3-5 6-8")), 2);
        assert_eq!(nestings(&m("1-2 3-4")), 0);
        assert_eq!(nestings(&m("1-4 2-3")), 1);
        assert_eq!(
            nesting_numbers(&m("1-4 2-3")),
            vec![((2, 3), 1), ((1, 4), 0)]
        );
        assert_eq!(nesting_numbers(&m("1-2")), vec![((1, 2), 0)]);
    }

    #[test]
    fn shape_examples() {
        assert_eq!(matching_shape(&m("1-2 3-4")).to_string(), "UDUD");
        assert_eq!(
            matching_shape(&m("1-7 2-4 3-5 6-8")).to_string(),
            "UUUDDUDD"
        );
        assert_eq!(matching_shape(&m("1-4 2-3")).to_string(), "UUDD");
    }

    #[test]
    fn malformed_matchings_are_rejected() {
        assert!("1-2 2-3".parse::<PerfectMatching>().is_err());
        assert!("1-5 2-3".parse::<PerfectMatching>().is_err());
        assert!("1_2".parse::<PerfectMatching>().is_err());
        assert_eq!("".parse::<PerfectMatching>().unwrap().order(), 0);
    }

    #[test]
    fn growth_gives_every_matching_once() {
        for n in 0..=5 {
            let mut all: Vec<_> = GrowthSequence::all(n).iter().map(match_of).collect();
            all.sort();
            all.dedup();
            let expected: usize = (1..=n).map(|k| 2 * k - 1).product();
            assert_eq!(all.len(), expected);
        }
    }

    #[test]
    fn min_word_inversions_count_nestings() {
        for n in 0..=6 {
            for p in GrowthSequence::all(n) {
                let mm = match_of(&p);
                let w = min_word(&mm);
                assert_eq!(inv(w.entries()), nestings(&mm), "{p}");
                assert_eq!(matching_shape(&mm).order(), n);
            }
        }
    }

    #[test]
    fn min_word_descents_follow_growth() {
        for n in 0..=6 {
            for p in GrowthSequence::all(n) {
                let w = min_word(&match_of(&p));
                let v = p.values();
                let expected: std::collections::BTreeSet<usize> =
                    (1..n).filter(|&i| v[i] <= v[i - 1]).collect();
                assert_eq!(des_set(w.entries()), expected, "{p}");
            }
        }
    }

    #[test]
    fn hermite_round_trip() {
        for n in 0..=5 {
            for p in GrowthSequence::all(n) {
                let mm = match_of(&p);
                let back = from_hermite(&matching_shape(&mm), &hermite_labels(&mm)).unwrap();
                assert_eq!(back, mm);
            }
        }
        assert!(from_hermite(&"UUDD".parse().unwrap(), &[1, 0]).is_err());
    }
}
