//! Permutation and word statistics.
//!
//! Statistics are defined on words of pairwise distinct entries; a
//! permutation is such a word on `1..=n`. Positions are 1-based in every
//! set-valued result (`DES`, `INV`, `REM_i`).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A sequence of pairwise distinct positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &e in &entries {
            if !seen.insert(e) {
                return Err(Error::DuplicateEntry(e));
            }
        }
        Ok(Word(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_comma_list(f, &self.0)
    }
}

/// One-line notation, values `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(n, comma_list(&values)));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// `self(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    pub fn reversed(&self) -> Self {
        Permutation(self.0.iter().rev().copied().collect())
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation(cur.clone()));
                return;
            }
            for v in 1..=n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }

    pub fn as_word(&self) -> Word {
        Word(self.0.clone())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_comma_list(f, &self.0)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Comma-separated one-line notation, e.g. `2,3,1,4`.
    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_comma_list(s)?)
    }
}

pub(crate) fn parse_comma_list(s: &str) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect()
}

pub(crate) fn comma_list(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn write_comma_list(f: &mut fmt::Formatter<'_>, v: &[usize]) -> fmt::Result {
    f.write_str(&comma_list(v))
}

pub fn inv(w: &[usize]) -> usize {
    inv_set(w).len()
}

pub fn des(w: &[usize]) -> usize {
    w.windows(2).filter(|p| p[0] > p[1]).count()
}

/// `{(i, j) : i < j, w_j < w_i}`.
pub fn inv_set(w: &[usize]) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[j] < w[i] {
                out.insert((i + 1, j + 1));
            }
        }
    }
    out
}

/// `{i : w_i > w_{i+1}}`.
pub fn des_set(w: &[usize]) -> BTreeSet<usize> {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
}

/// The permutation order-isomorphic to a word of distinct entries.
pub fn standardize(w: &[usize]) -> Result<Permutation> {
    let word = Word::new(w.to_vec())?;
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by_key(|&i| word.0[i]);
    let mut values = vec![0; word.len()];
    for (rank, &i) in order.iter().enumerate() {
        values[i] = rank + 1;
    }
    Ok(Permutation(values))
}

/// Right embraced numbers for descent `i`: `{k > i : w_i > w_k > w_{i+1}}`.
pub fn rem(w: &[usize], i: usize) -> BTreeSet<usize> {
    let (hi, lo) = (w[i - 1], w[i]);
    (i + 1..=w.len())
        .filter(|&k| hi > w[k - 1] && w[k - 1] > lo)
        .collect()
}

pub fn desdif(sigma: &Permutation) -> usize {
    let w = sigma.values();
    des_set(w).iter().map(|&i| w[i - 1] - w[i]).sum()
}

pub fn res(sigma: &Permutation) -> usize {
    let w = sigma.values();
    des_set(w)
        .iter()
        .map(|&i| {
            (0..i - 1)
                .filter(|&k| w[i - 1] > w[k] && w[k] > w[i])
                .count()
        })
        .sum()
}

/// `desdif + res`.
pub fn mad(sigma: &Permutation) -> usize {
    desdif(sigma) + res(sigma)
}

pub fn inversions_contained(sigma: &Permutation, tau: &Permutation) -> bool {
    sigma.len() == tau.len() && inv_set(sigma.values()).is_subset(&inv_set(tau.values()))
}

/// Two-permutation descent difference, summed over `DES(sigma)`.
pub fn desdif2(sigma: &Permutation, tau: &Permutation) -> Result<i64> {
    if !inversions_contained(sigma, tau) {
        return Err(Error::InversionContainment);
    }
    let (s, t) = (sigma.values(), tau.values());
    Ok(des_set(s)
        .iter()
        .map(|&i| (s[i - 1] as i64 - s[i] as i64) + (t[i - 1] as i64 - t[i] as i64))
        .sum())
}

/// Area and tile count of the ribbon-grown tiling, read off the chord
/// endpoint words `ell`, `r` (chord labeled `i` spans steps `ell_i..r_i`).
pub fn closed_area_tiles(ell: &[usize], r: &[usize]) -> Result<(i64, i64)> {
    check_endpoint_words(ell, r)?;
    let mut area = 0i64;
    let mut tiles = 0i64;
    for i in des_set(ell) {
        let gap = ell[i - 1] as i64 - r[i] as i64;
        let inside = (i + 2..=ell.len())
            .filter(|&j| r[i] < ell[j - 1] && ell[j - 1] < ell[i - 1])
            .count() as i64;
        area += gap;
        tiles += gap - 2 * inside;
    }
    Ok((area, tiles))
}

/// The same statistics expressed through the standardizations of `ell`
/// and `r`.
pub fn rem_formulas(sigma: &Permutation, tau: &Permutation) -> Result<(i64, i64)> {
    let base = desdif2(sigma, tau)? - des(sigma.values()) as i64;
    let (s, t) = (sigma.values(), tau.values());
    let mut sym = 0i64;
    let mut sum = 0i64;
    for i in des_set(s) {
        let a = rem(s, i);
        let b = rem(t, i);
        sym += a.symmetric_difference(&b).count() as i64;
        sum += (a.len() + b.len()) as i64;
    }
    Ok((base - sym, base - sum))
}

fn check_endpoint_words(ell: &[usize], r: &[usize]) -> Result<()> {
    let bad = |m: &str| Err(Error::MalformedEndpoints(m.to_string()));
    if ell.len() != r.len() {
        return bad("words have different lengths");
    }
    let n = ell.len();
    let mut seen = vec![false; 2 * n + 1];
    for (&a, &b) in ell.iter().zip(r) {
        if a >= b {
            return bad("a left endpoint is not left of its right endpoint");
        }
        for e in [a, b] {
            if e == 0 || e > 2 * n || seen[e] {
                return bad("endpoints are not exactly 1..2n");
            }
            seen[e] = true;
        }
    }
    for i in 0..n {
        for j in 0..n {
            let (a, b, c, d) = (ell[i], r[i], ell[j], r[j]);
            if a < c && c < b && b < d {
                return bad("chords cross");
            }
            if a < c && d < b && j < i {
                return bad("a nested chord has a smaller label");
            }
        }
    }
    Ok(())
}

/// No `i < j < k` with `w_k < w_i < w_j`.
pub fn avoids_231(sigma: &Permutation) -> bool {
    let w = sigma.values();
    let n = w.len();
    let mut min_right = vec![usize::MAX; n + 1];
    for k in (0..n).rev() {
        min_right[k] = min_right[k + 1].min(w[k]);
    }
    for i in 0..n {
        for j in i + 1..n {
            if w[i] < w[j] && min_right[j + 1] < w[i] {
                return false;
            }
        }
    }
    true
}

/// No `i < j < k` with `w_i < w_k < w_j`.
pub fn avoids_132(sigma: &Permutation) -> bool {
    avoids_231(&sigma.reversed())
}
