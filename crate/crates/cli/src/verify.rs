//! Exhaustive identity sweeps behind `dyck-atlas verify`.

use std::collections::BTreeSet;
use std::fmt;

use clap::ValueEnum;
use dyck_atlas::bijection::{dtr, dtr_inverse, dtr_of, dts, dts_inverse, dts_of};
use dyck_atlas::dyckpath::{DyckPath, SkewShape};
use dyck_atlas::matching::{match_of, matching_shape, min_word, nestings};
use dyck_atlas::permstat::{avoids_132, avoids_231, des, des_set, inv, mad, Permutation};
use dyck_atlas::poly::IntPolynomial;
use dyck_atlas::tiling::{
    bounded_labelings, chord_labels, enumerate_all, enumerate_tableaux, enumerate_tilings,
    from_tableau, genfun, genfun_by_enumeration, shape_bounds, tiling_from_labels, to_tableau,
    DyckTiling,
};
use dyck_atlas::treeposet::{
    descent_polynomial, enumerate_extensions, hook_count, q_hook_polynomial, sigma_of_labeling,
    tree_from_growth, ChordPoset, GrowthSequence,
};
use num_bigint::BigUint;
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Hook,
    Qart,
    Zdis,
    Bijection,
    Matching,
    Mad,
    Patterns,
    Poset,
    Genfun,
    Tableaux,
}

impl Suite {
    pub const EACH: [Suite; 10] = [
        Suite::Hook,
        Suite::Qart,
        Suite::Zdis,
        Suite::Bijection,
        Suite::Matching,
        Suite::Mad,
        Suite::Patterns,
        Suite::Poset,
        Suite::Genfun,
        Suite::Tableaux,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Hook => "hook",
            Suite::Qart => "qart",
            Suite::Zdis => "zdis",
            Suite::Bijection => "bijection",
            Suite::Matching => "matching",
            Suite::Mad => "mad",
            Suite::Patterns => "patterns",
            Suite::Poset => "poset",
            Suite::Genfun => "genfun",
            Suite::Tableaux => "tableaux",
        }
    }

    /// Sweeps over permutations or growth sequences grow like `(2n-1)!!`;
    /// the rest sweep shapes.
    pub fn is_permutation_sweep(self) -> bool {
        matches!(
            self,
            Suite::Bijection | Suite::Matching | Suite::Mad | Suite::Patterns
        )
    }

    fn unit(self) -> &'static str {
        match self {
            Suite::Hook | Suite::Qart | Suite::Zdis => "paths",
            Suite::Bijection | Suite::Matching => "growth sequences",
            Suite::Mad | Suite::Patterns => "permutations",
            Suite::Poset | Suite::Genfun => "shapes",
            Suite::Tableaux => "tableaux",
            Suite::All => "",
        }
    }

    /// Runs the sweep up to order `n`; returns the number of objects checked
    /// or the first counterexample.
    pub fn run(self, n: usize) -> Result<usize, Failure> {
        match self {
            Suite::Hook => sweep(&paths_up_to(n), check_hook),
            Suite::Qart => sweep(&paths_up_to(n), check_qart),
            Suite::Zdis => sweep(&paths_up_to(n), check_zdis),
            Suite::Bijection => sweep(&sequences_up_to(n), check_bijection),
            Suite::Matching => sweep(&sequences_up_to(n), check_matching),
            Suite::Mad => check_mad(n),
            Suite::Patterns => check_patterns(n),
            Suite::Poset => sweep(&shapes_up_to(n), check_poset),
            Suite::Genfun => sweep(&shapes_up_to(n), check_genfun),
            Suite::Tableaux => check_tableaux(n),
            Suite::All => unreachable!("`all` is expanded by the caller"),
        }
    }

    pub fn report(self, n: usize, capped_from: Option<usize>) -> (bool, String) {
        let cap = capped_from.map_or(String::new(), |m| {
            format!(" (capped from {m}; pass --unsafe-max-n to go further)")
        });
        match self.run(n) {
            Ok(count) => (
                true,
                format!(
                    "PASS {}: {count} {} checked, n <= {n}{cap}",
                    self.name(),
                    self.unit()
                ),
            ),
            Err(f) => (false, format!("FAIL {}: {f}", self.name())),
        }
    }
}

#[derive(Debug)]
pub struct Failure(String);

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<dyck_atlas::Error> for Failure {
    fn from(e: dyck_atlas::Error) -> Self {
        Failure(e.to_string())
    }
}

type Check = Result<(), Failure>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(Failure(format!($($msg)+)));
        }
    };
}

/// Checks every item in parallel and reports the first failure in input
/// order, so output does not depend on scheduling.
fn sweep<T: Sync>(
    items: &[T],
    check: impl Fn(&T) -> Check + Sync + Send,
) -> Result<usize, Failure> {
    let results: Vec<Check> = items.par_iter().map(check).collect();
    match results.into_iter().find_map(Result::err) {
        Some(f) => Err(f),
        None => Ok(items.len()),
    }
}

fn paths_up_to(n: usize) -> Vec<DyckPath> {
    (0..=n).flat_map(DyckPath::all).collect()
}

fn sequences_up_to(n: usize) -> Vec<GrowthSequence> {
    (0..=n).flat_map(GrowthSequence::all).collect()
}

fn shapes_up_to(n: usize) -> Vec<SkewShape> {
    paths_up_to(n)
        .into_iter()
        .flat_map(|lambda| {
            lambda
                .paths_above()
                .into_iter()
                .map(move |mu| SkewShape::new(lambda.clone(), mu).expect("paths_above stays above"))
        })
        .collect()
}

fn check_hook(lambda: &DyckPath) -> Check {
    let poset = ChordPoset::new(lambda);
    let tilings = enumerate_all(lambda)?.len();
    let extensions = enumerate_extensions(&poset)?.len();
    let hook = hook_count(&poset);
    ensure!(
        BigUint::from(tilings) == hook && extensions == tilings,
        "lambda = {lambda}: {tilings} tilings, {extensions} linear extensions, hook formula {hook}"
    );
    Ok(())
}

fn check_qart(lambda: &DyckPath) -> Check {
    let poset = ChordPoset::new(lambda);
    let by_art = IntPolynomial::from_exponents(enumerate_all(lambda)?.iter().map(DyckTiling::art));
    let by_inv = IntPolynomial::from_exponents(
        enumerate_extensions(&poset)?
            .iter()
            .map(|s| inv(s.values())),
    );
    let hook = q_hook_polynomial(&poset);
    ensure!(
        by_art == hook && by_inv == hook,
        "lambda = {lambda}: art gives {by_art}, inv gives {by_inv}, q-hook formula gives {hook}"
    );
    Ok(())
}

fn check_zdis(lambda: &DyckPath) -> Check {
    let by_dis = IntPolynomial::from_exponents(enumerate_all(lambda)?.iter().map(DyckTiling::dis));
    let by_des = descent_polynomial(&ChordPoset::new(lambda))?;
    ensure!(
        by_dis == by_des,
        "lambda = {lambda}: dis gives {}, des gives {}",
        by_dis.format_with("z"),
        by_des.format_with("z")
    );
    Ok(())
}

fn sigma_of_growth(p: &GrowthSequence) -> Result<(DyckPath, Permutation), Failure> {
    let (lambda, labeling) = tree_from_growth(p);
    let sigma = sigma_of_labeling(&ChordPoset::new(&lambda), &labeling)?;
    Ok((lambda, sigma))
}

fn check_bijection(p: &GrowthSequence) -> Check {
    let (lambda, sigma) = sigma_of_growth(p)?;
    let s = dts(p);
    let r = dtr(p);
    ensure!(
        dts_inverse(&s)? == *p,
        "p = {p}: strip shrink does not undo strip growth"
    );
    ensure!(
        dtr_inverse(&r)? == *p,
        "p = {p}: ribbon shrink does not undo ribbon growth"
    );
    ensure!(
        *s.lower() == lambda && *r.lower() == lambda,
        "p = {p}: tilings do not sit on {lambda}"
    );
    ensure!(
        s.art() == inv(sigma.values()),
        "p = {p}, sigma = {sigma}: art {} but inv {}",
        s.art(),
        inv(sigma.values())
    );
    ensure!(
        r.dis() == des(sigma.values()),
        "p = {p}, sigma = {sigma}: dis {} but des {}",
        r.dis(),
        des(sigma.values())
    );
    Ok(())
}

fn check_matching(p: &GrowthSequence) -> Check {
    let m = match_of(p);
    let w = min_word(&m);
    let s = dts(p);
    let (_, sigma) = sigma_of_growth(p)?;
    ensure!(
        s.tile_count() == nestings(&m) && nestings(&m) == inv(w.entries()),
        "p = {p}: {} tiles, {} nestings in {m}, min-word {w} has {} inversions",
        s.tile_count(),
        nestings(&m),
        inv(w.entries())
    );
    ensure!(
        des_set(sigma.values()) == des_set(w.entries()),
        "p = {p}: descent sets of sigma = {sigma} and min-word {w} differ"
    );
    ensure!(
        matching_shape(&m) == *s.upper(),
        "p = {p}: openers of {m} do not trace the upper path {}",
        s.upper()
    );
    Ok(())
}

fn check_mad(n: usize) -> Result<usize, Failure> {
    let mut total = 0;
    for k in 0..=n {
        let zig = DyckPath::zigzag(k);
        let poset = ChordPoset::new(&zig);
        let all = Permutation::all(k);
        let images: Vec<Result<Permutation, Failure>> = all
            .par_iter()
            .map(|sigma| {
                let t = dtr_of(&zig, sigma)?;
                ensure!(
                    t.art() == mad(sigma),
                    "sigma = {sigma}: art {} but mad {}",
                    t.art(),
                    mad(sigma)
                );
                let (_, labeling) = tree_from_growth(&dts_inverse(&t)?);
                let tau = sigma_of_labeling(&poset, &labeling)?;
                ensure!(
                    inv(tau.values()) == mad(sigma),
                    "sigma = {sigma}: composite image {tau} has inv {}",
                    inv(tau.values())
                );
                Ok(tau)
            })
            .collect();
        let mut seen = BTreeSet::new();
        for (sigma, image) in all.iter().zip(images) {
            let tau = image?;
            ensure!(
                seen.insert(tau.clone()),
                "sigma = {sigma}: composite image {tau} repeats"
            );
        }
        total += all.len();
    }
    Ok(total)
}

type Map = fn(&DyckPath, &Permutation) -> dyck_atlas::Result<DyckTiling>;

const MAPS: [(&str, Map); 2] = [("DTS", dts_of), ("DTR", dtr_of)];

fn catalan(n: usize) -> usize {
    (0..n).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

/// Over the zig-zag path the chord labels read left to right form the
/// inverse of sigma; the avoidance classes are read on that word.
fn check_patterns(n: usize) -> Result<usize, Failure> {
    let mut total = 0;
    for k in 0..=n {
        let zig = DyckPath::zigzag(k);
        let singles: BTreeSet<DyckTiling> = enumerate_all(&zig)?
            .into_iter()
            .filter(DyckTiling::only_single_boxes)
            .collect();
        ensure!(
            singles.len() == catalan(k),
            "n = {k}: {} one-box tilings, expected {}",
            singles.len(),
            catalan(k)
        );
        let uppers: BTreeSet<DyckPath> = singles.iter().map(|t| t.upper().clone()).collect();
        let all = Permutation::all(k);
        let avoid231: Vec<&Permutation> = all.iter().filter(|w| avoids_231(w)).collect();
        let avoid132: Vec<&Permutation> = all.iter().filter(|w| avoids_132(w)).collect();
        for (name, map) in MAPS {
            let mut image = BTreeSet::new();
            for w in &avoid231 {
                let t = map(&zig, &w.inverse())?;
                ensure!(
                    singles.contains(&t),
                    "{name} of 231-avoiding label word {w} is not a one-box tiling:\n{t}"
                );
                image.insert(t);
            }
            ensure!(image == singles, "{name} misses one-box tilings at n = {k}");
            let mut mirrored = BTreeSet::new();
            for w in &avoid132 {
                let t = map(&zig, &w.reversed().inverse())?;
                let m = t.upper().mirror();
                ensure!(
                    uppers.contains(&m) && mirrored.insert(m),
                    "{name}: reversed 132-avoiding word {w} gives upper path {}",
                    t.upper()
                );
            }
            ensure!(
                mirrored == uppers,
                "{name}: 132 mirror image incomplete at n = {k}"
            );
        }
        total += avoid231.len() + avoid132.len();
    }
    Ok(total)
}

fn check_poset(shape: &SkewShape) -> Check {
    let tilings = enumerate_tilings(shape)?;
    let h = shape_bounds(shape);
    for t in &tilings {
        let labels = chord_labels(t);
        ensure!(
            2 * labels.total() == t.area() - t.tile_count(),
            "{shape}: labels {:?} do not sum to (area - tiles) / 2 for\n{t}",
            labels.g
        );
        ensure!(
            tiling_from_labels(shape, &labels.g)? == *t,
            "{shape}: labels {:?} rebuild a different tiling",
            labels.g
        );
    }
    let labelings = bounded_labelings(shape);
    ensure!(
        labelings.len() == tilings.len(),
        "{shape}: {} bounded labelings but {} tilings",
        labelings.len(),
        tilings.len()
    );
    for (c, &bound) in h.iter().enumerate() {
        let best = tilings
            .iter()
            .map(|t| chord_labels(t).g[c])
            .max()
            .unwrap_or(0);
        ensure!(
            best == bound,
            "{shape}: chord {} reaches {best}, bound is {bound}",
            c + 1
        );
    }
    Ok(())
}

fn check_genfun(shape: &SkewShape) -> Check {
    let fast = genfun(shape);
    let slow = genfun_by_enumeration(shape)?;
    ensure!(
        fast == slow,
        "{shape}: recursion gives {}, enumeration gives {}",
        fast.format_with("x"),
        slow.format_with("x")
    );
    Ok(())
}

fn check_tableaux(n: usize) -> Result<usize, Failure> {
    let mut total = 0;
    let mut factorial = 1;
    for k in 0..=n {
        factorial *= k.max(1);
        let tabs = enumerate_tableaux(k)?;
        ensure!(
            tabs.len() == factorial,
            "n = {k}: {} tableaux, expected {factorial}",
            tabs.len()
        );
        for tab in &tabs {
            let t = from_tableau(tab)?;
            ensure!(
                to_tableau(&t)? == *tab,
                "n = {k}: tableau does not round-trip:\n{t}"
            );
        }
        for t in enumerate_all(&DyckPath::zigzag(k))? {
            ensure!(
                from_tableau(&to_tableau(&t)?)? == t,
                "n = {k}: tiling does not round-trip:\n{t}"
            );
        }
        total += tabs.len();
    }
    Ok(total)
}
