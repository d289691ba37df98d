//! Chord posets, natural labelings and growth sequences.
//!
//! Chords are indexed in order of their up steps, which is also the
//! reference labeling: chord `c` has reference label `c + 1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::dyckpath::{Chord, DyckPath, Step};
use crate::error::{Error, Result};
use crate::permstat::{comma_list, des, parse_comma_list, Permutation};
use crate::poly::IntPolynomial;
use crate::MAX_EXHAUSTIVE_ORDER;

/// The nesting order on the chords of a Dyck path, with an implicit root
/// below every outermost chord.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordPoset {
    path: DyckPath,
    chords: Vec<Chord>,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    roots: Vec<usize>,
}

impl ChordPoset {
    pub fn new(path: &DyckPath) -> Self {
        let chords = path.chords();
        let n = chords.len();
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut roots = Vec::new();
        // chords come sorted by up step, so a stack of open chords gives the
        // tightest enclosing one
        let mut stack: Vec<usize> = Vec::new();
        for (i, c) in chords.iter().enumerate() {
            while let Some(&top) = stack.last() {
                if chords[top].down_step < c.up_step {
                    stack.pop();
                } else {
                    break;
                }
            }
            match stack.last() {
                Some(&p) => {
                    parent[i] = Some(p);
                    children[p].push(i);
                }
                None => roots.push(i),
            }
            stack.push(i);
        }
        ChordPoset {
            path: path.clone(),
            chords,
            parent,
            children,
            roots,
        }
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn len(&self) -> usize {
        self.chords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chords.is_empty()
    }

    /// Tightest enclosing chord, `None` for children of the root.
    pub fn parent(&self, c: usize) -> Option<usize> {
        self.parent[c]
    }

    pub fn children(&self, c: usize) -> &[usize] {
        &self.children[c]
    }

    /// Outermost chords.
    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    /// `c < d` in the poset, i.e. `d` is nested inside `c`.
    pub fn below(&self, c: usize, d: usize) -> bool {
        self.chords[c].encloses(&self.chords[d])
    }

    /// Number of chords in the subtree rooted at `c`, which equals the
    /// number of up steps between and including its endpoints.
    pub fn subtree_size(&self, c: usize) -> usize {
        1 + self.children[c]
            .iter()
            .map(|&d| self.subtree_size(d))
            .sum::<usize>()
    }

    /// Canonical code of the underlying unordered rooted tree; two posets
    /// have the same code iff their trees are isomorphic.
    pub fn tree_code(&self) -> String {
        fn code(p: &ChordPoset, kids: &[usize]) -> String {
            let mut parts: Vec<String> = kids
                .iter()
                .map(|&k| format!("({})", code(p, p.children(k))))
                .collect();
            parts.sort();
            parts.concat()
        }
        code(self, &self.roots)
    }
}

pub fn chord_poset(path: &DyckPath) -> ChordPoset {
    ChordPoset::new(path)
}

/// Order-preserving bijection from chords to `1..=n`; `labels[c]` is the
/// label of chord `c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NaturalLabeling {
    labels: Vec<usize>,
}

impl NaturalLabeling {
    pub fn new(poset: &ChordPoset, labels: Vec<usize>) -> Result<Self> {
        let n = poset.len();
        if labels.len() != n {
            return Err(Error::LabelingSize {
                expected: n,
                got: labels.len(),
            });
        }
        Permutation::new(labels.clone())?;
        for c in 0..n {
            if let Some(p) = poset.parent(c) {
                if labels[p] > labels[c] {
                    return Err(Error::NotLinearExtension {
                        outer: poset.chords[p].to_string(),
                        inner: poset.chords[c].to_string(),
                    });
                }
            }
        }
        Ok(NaturalLabeling { labels })
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, c: usize) -> usize {
        self.labels[c]
    }

    /// Chord index carrying each label, i.e. the inverse map.
    pub fn chord_of_label(&self) -> Vec<usize> {
        let mut out = vec![0; self.labels.len()];
        for (c, &l) in self.labels.iter().enumerate() {
            out[l - 1] = c;
        }
        out
    }
}

/// Labels chords in order of their left endpoints.
pub fn reference_labeling(poset: &ChordPoset) -> NaturalLabeling {
    NaturalLabeling {
        labels: (1..=poset.len()).collect(),
    }
}

/// `sigma(i)` = reference label of the chord labeled `i`.
pub fn sigma_of_labeling(poset: &ChordPoset, labeling: &NaturalLabeling) -> Result<Permutation> {
    let checked = NaturalLabeling::new(poset, labeling.labels.clone())?;
    Permutation::new(checked.chord_of_label().iter().map(|c| c + 1).collect())
}

/// Inverse of [`sigma_of_labeling`]; fails when `sigma` is not a linear
/// extension of the poset.
pub fn labeling_of_sigma(poset: &ChordPoset, sigma: &Permutation) -> Result<NaturalLabeling> {
    if sigma.len() != poset.len() {
        return Err(Error::LabelingSize {
            expected: poset.len(),
            got: sigma.len(),
        });
    }
    NaturalLabeling::new(poset, sigma.inverse().values().to_vec())
}

/// Left and right step positions of the chords, listed by label.
pub fn endpoint_words(poset: &ChordPoset, labeling: &NaturalLabeling) -> (Vec<usize>, Vec<usize>) {
    labeling
        .chord_of_label()
        .iter()
        .map(|&c| (poset.chords[c].up_step, poset.chords[c].down_step))
        .unzip()
}

/// Integer sequence `p_1..p_n` with `0 <= p_i <= 2(i-1)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GrowthSequence(Vec<usize>);

impl GrowthSequence {
    pub fn new(p: Vec<usize>) -> Result<Self> {
        for (i, &v) in p.iter().enumerate() {
            let max = 2 * i;
            if v > max {
                return Err(Error::GrowthBound {
                    index: i + 1,
                    value: v as i64,
                    max: max as i64,
                });
            }
        }
        Ok(GrowthSequence(p))
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Growth column at stage `i` (1-based): `s_i = p_i - (i - 1)`.
    pub fn column(&self, i: usize) -> i32 {
        self.0[i - 1] as i32 - (i as i32 - 1)
    }

    /// Inverse of [`GrowthSequence::column`].
    pub fn from_columns(columns: &[i32]) -> Result<Self> {
        let p = columns
            .iter()
            .enumerate()
            .map(|(i, &s)| {
                let v = s as i64 + i as i64;
                if v < 0 {
                    Err(Error::GrowthBound {
                        index: i + 1,
                        value: v,
                        max: 2 * i as i64,
                    })
                } else {
                    Ok(v as usize)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        GrowthSequence::new(p)
    }

    /// All `(2n-1)!!` sequences of length `n`, lexicographically.
    pub fn all(n: usize) -> Vec<GrowthSequence> {
        let mut out = vec![Vec::new()];
        for i in 0..n {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<usize>| {
                    (0..=2 * i).map(move |v| {
                        let mut next = prefix.clone();
                        next.push(v);
                        next
                    })
                })
                .collect();
        }
        out.into_iter().map(GrowthSequence).collect()
    }
}

impl fmt::Display for GrowthSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&comma_list(&self.0))
    }
}

impl FromStr for GrowthSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GrowthSequence::new(parse_comma_list(s)?)
    }
}

/// Insertion positions of the chords, taken in label order.
pub fn growth_sequence(poset: &ChordPoset, labeling: &NaturalLabeling) -> Result<GrowthSequence> {
    let labeling = NaturalLabeling::new(poset, labeling.labels.clone())?;
    let (ell, r) = endpoint_words(poset, &labeling);
    let p = (0..ell.len())
        .map(|i| {
            (0..i).filter(|&j| ell[j] < ell[i]).count() + (0..i).filter(|&j| r[j] < ell[i]).count()
        })
        .collect();
    GrowthSequence::new(p)
}

/// Builds the labeled tree by inserting a `UD` pair for label `i` after the
/// first `p_i` steps.
pub fn tree_from_growth(p: &GrowthSequence) -> (DyckPath, NaturalLabeling) {
    let mut word: Vec<(Step, usize)> = Vec::with_capacity(2 * p.len());
    for (i, &pos) in p.values().iter().enumerate() {
        word.insert(pos, (Step::Down, i + 1));
        word.insert(pos, (Step::Up, i + 1));
    }
    let path =
        DyckPath::new(word.iter().map(|(s, _)| *s).collect()).expect("insertions stay balanced");
    let labels = word
        .iter()
        .filter(|(s, _)| *s == Step::Up)
        .map(|&(_, l)| l)
        .collect();
    (path, NaturalLabeling { labels })
}

fn check_limit(order: usize) -> Result<()> {
    if order > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::LimitExceeded {
            order,
            limit: MAX_EXHAUSTIVE_ORDER,
        });
    }
    Ok(())
}

/// All linear extensions `sigma`, sorted lexicographically.
pub fn enumerate_extensions(poset: &ChordPoset) -> Result<Vec<Permutation>> {
    check_limit(poset.len())?;
    let n = poset.len();
    let mut out = Vec::new();
    let mut placed = vec![false; n];
    let mut sigma = Vec::with_capacity(n);
    fn rec(
        p: &ChordPoset,
        placed: &mut [bool],
        sigma: &mut Vec<usize>,
        out: &mut Vec<Permutation>,
    ) {
        if sigma.len() == p.len() {
            out.push(Permutation::new(sigma.clone()).expect("each chord placed once"));
            return;
        }
        // the next label goes to some chord whose parent is already labeled;
        // trying chords in index order yields sigma in lexicographic order
        for c in 0..p.len() {
            let ready = !placed[c] && p.parent(c).is_none_or(|q| placed[q]);
            if ready {
                placed[c] = true;
                sigma.push(c + 1);
                rec(p, placed, sigma, out);
                sigma.pop();
                placed[c] = false;
            }
        }
    }
    rec(poset, &mut placed, &mut sigma, &mut out);
    Ok(out)
}

/// `n! / prod |c|`.
pub fn hook_count(poset: &ChordPoset) -> BigUint {
    let n = poset.len();
    let factorial: BigUint = (1..=n).fold(BigUint::one(), |acc, k| acc * k);
    let hooks: BigUint = (0..n).fold(BigUint::one(), |acc, c| acc * poset.subtree_size(c));
    assert!(
        (&factorial % &hooks) == BigUint::from(0u32),
        "hook product must divide n!"
    );
    factorial / hooks
}

/// `[n]_q! / prod [|c|]_q`.
pub fn q_hook_polynomial(poset: &ChordPoset) -> IntPolynomial {
    let denominator = (0..poset.len()).fold(IntPolynomial::one(), |acc, c| {
        &acc * &IntPolynomial::q_integer(poset.subtree_size(c))
    });
    IntPolynomial::q_factorial(poset.len())
        .div_exact(&denominator)
        .expect("q-hook division is exact")
}

/// Sum of `z^des(sigma)` over the linear extensions.
pub fn descent_polynomial(poset: &ChordPoset) -> Result<IntPolynomial> {
    Ok(IntPolynomial::from_exponents(
        enumerate_extensions(poset)?.iter().map(|s| des(s.values())),
    ))
}
