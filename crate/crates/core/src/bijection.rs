//! The strip (DTS) and ribbon (DTR) growth bijections from growth sequences
//! to cover-inclusive Dyck tilings.
//!
//! Both maps build a tiling one order at a time: spread at the growth
//! column `s_i = p_i - (i - 1)`, then add one-box tiles to the right of it.
//! The shrink maps undo a single step, starting from the special column.

use crate::dyckpath::{DyckPath, Step};
use crate::error::{Error, Result};
use crate::permstat::Permutation;
use crate::tiling::{DyckTile, DyckTiling};
use crate::treeposet::{growth_sequence, labeling_of_sigma, ChordPoset, GrowthSequence};

/// Whether column `s` is eligible: an up step of the upper path ends at
/// `s`, and the upper path at `s` is not the top corner of a 1-box tile.
pub fn is_eligible(t: &DyckTiling, s: i32) -> bool {
    let mu = t.upper();
    mu.step_before(s) == Some(Step::Up) && t.single_at(s, mu.height(s) - 2).is_none()
}

/// Rightmost eligible column.
pub fn special_column(t: &DyckTiling) -> Result<i32> {
    let n = t.order() as i32;
    if n == 0 {
        return Err(Error::EmptyTiling);
    }
    Ok((-n + 1..=n)
        .rev()
        .find(|&s| is_eligible(t, s))
        .expect("the first up step always ends at an eligible column"))
}

/// Raises the upper path by 2 at each column in `cols`, placing a 1-box
/// tile in every gap opened up.
fn add_singles(t: &DyckTiling, cols: &[i32]) -> DyckTiling {
    let mu = t.upper();
    let n = mu.order() as i32;
    let mut heights = mu.heights().to_vec();
    let mut tiles = Vec::with_capacity(cols.len());
    for &c in cols {
        tiles.push(DyckTile::single(c, mu.height(c)));
        heights[(c + n) as usize] += 2;
    }
    let upper = DyckPath::from_heights(&heights).expect("singles go into valleys of the boundary");
    t.with_tiles_added(upper, tiles)
}

/// Removes the 1-box tiles on top of the columns in `cols`.
fn remove_singles(t: &DyckTiling, cols: &[i32]) -> Result<DyckTiling> {
    let mu = t.upper();
    let n = mu.order() as i32;
    let mut heights = mu.heights().to_vec();
    let mut remove = Vec::with_capacity(cols.len());
    for &c in cols {
        let idx = t
            .single_at(c, mu.height(c) - 2)
            .ok_or_else(|| Error::InvalidTiling(format!("no 1-box tile on top of column {c}")))?;
        remove.push(idx);
        heights[(c + n) as usize] -= 2;
    }
    let upper = DyckPath::from_heights(&heights)
        .map_err(|_| Error::InvalidTiling("removing top tiles breaks the boundary".into()))?;
    Ok(t.with_tiles_removed(upper, &remove))
}

fn checked(t: DyckTiling) -> DyckTiling {
    debug_assert!(
        t.validate().is_ok(),
        "grow produced an invalid tiling:\n{t}"
    );
    t
}

/// Spread at `s`, then put a 1-box tile on every up step of the upper
/// boundary to the right of `s`.
pub fn strip_grow(t: &DyckTiling, s: i32) -> Result<DyckTiling> {
    let spread = t.spread(s)?;
    let mu = spread.upper();
    let cols: Vec<i32> = (s + 1..=mu.max_col())
        .filter(|&c| mu.step_after(c) == Some(Step::Up))
        .collect();
    Ok(checked(add_singles(&spread, &cols)))
}

/// Spread at `s`, then fill the columns strictly between `s` and the
/// special column of the spread with 1-box tiles.
pub fn ribbon_grow(t: &DyckTiling, s: i32) -> Result<DyckTiling> {
    let spread = t.spread(s)?;
    let q = special_column(&spread)?;
    let cols: Vec<i32> = (s + 1..q).collect();
    Ok(checked(add_singles(&spread, &cols)))
}

/// Inverse of [`strip_grow`]: returns the smaller tiling and the growth
/// column.
pub fn strip_shrink(t: &DyckTiling) -> Result<(DyckTiling, i32)> {
    let s = special_column(t)?;
    let mu = t.upper();
    let cols: Vec<i32> = (s + 1..=mu.max_col())
        .filter(|&c| mu.step_before(c) == Some(Step::Up))
        .collect();
    let stripped = remove_singles(t, &cols)?;
    Ok((stripped.contract(s)?, s))
}

/// Inverse of [`ribbon_grow`].
pub fn ribbon_shrink(t: &DyckTiling) -> Result<(DyckTiling, i32)> {
    let s = special_column(t)?;
    let mu = t.upper();
    let cols: Vec<i32> = (s + 1..mu.max_col())
        .take_while(|&c| t.single_at(c, mu.height(c) - 2).is_some())
        .collect();
    let stripped = remove_singles(t, &cols)?;
    Ok((stripped.contract(s)?, s))
}

fn fold(p: &GrowthSequence, grow: fn(&DyckTiling, i32) -> Result<DyckTiling>) -> DyckTiling {
    (1..=p.len()).fold(DyckTiling::empty(DyckPath::empty()), |t, i| {
        grow(&t, p.column(i)).expect("growth bounds keep the column in range")
    })
}

fn unfold(
    t: &DyckTiling,
    shrink: fn(&DyckTiling) -> Result<(DyckTiling, i32)>,
) -> Result<GrowthSequence> {
    let mut cols = Vec::with_capacity(t.order());
    let mut cur = t.clone();
    while cur.order() > 0 {
        let (smaller, s) = shrink(&cur)?;
        cols.push(s);
        cur = smaller;
    }
    cols.reverse();
    GrowthSequence::from_columns(&cols)
}

/// Strip-grow bijection.
pub fn dts(p: &GrowthSequence) -> DyckTiling {
    fold(p, strip_grow)
}

/// Ribbon-grow bijection.
pub fn dtr(p: &GrowthSequence) -> DyckTiling {
    fold(p, ribbon_grow)
}

pub fn dts_inverse(t: &DyckTiling) -> Result<GrowthSequence> {
    unfold(t, strip_shrink)
}

pub fn dtr_inverse(t: &DyckTiling) -> Result<GrowthSequence> {
    unfold(t, ribbon_shrink)
}

fn growth_of(lambda: &DyckPath, sigma: &Permutation) -> Result<GrowthSequence> {
    let poset = ChordPoset::new(lambda);
    let labeling = labeling_of_sigma(&poset, sigma)?;
    growth_sequence(&poset, &labeling)
}

/// DTS of the labeled tree `(lambda, sigma)`.
pub fn dts_of(lambda: &DyckPath, sigma: &Permutation) -> Result<DyckTiling> {
    Ok(dts(&growth_of(lambda, sigma)?))
}

/// DTR of the labeled tree `(lambda, sigma)`.
pub fn dtr_of(lambda: &DyckPath, sigma: &Permutation) -> Result<DyckTiling> {
    Ok(dtr(&growth_of(lambda, sigma)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    fn seq(s: &str) -> GrowthSequence {
        s.parse().unwrap()
    }

    fn one_box() -> DyckTiling {
        DyckTiling::new(path("UDUD"), path("UUDD"), vec![DyckTile::single(0, 0)]).unwrap()
    }

    #[test]
    fn special_column_examples() {
        assert_eq!(special_column(&DyckTiling::empty(path("UD"))), Ok(0));
        assert_eq!(special_column(&DyckTiling::empty(path("UDUD"))), Ok(1));
        assert_eq!(special_column(&one_box()), Ok(-1));
        assert_eq!(
            special_column(&DyckTiling::empty(DyckPath::empty())),
            Err(Error::EmptyTiling)
        );
    }

    #[test]
    fn strip_grow_examples() {
        let empty0 = DyckTiling::empty(DyckPath::empty());
        assert_eq!(
            strip_grow(&empty0, 0).unwrap(),
            DyckTiling::empty(path("UD"))
        );
        let t = strip_grow(&DyckTiling::empty(path("UD")), -1).unwrap();
        assert_eq!(t, one_box());
        assert_eq!(t.art(), 1);
        assert!(strip_grow(&empty0, 1).is_err());
    }

    #[test]
    fn ribbon_grow_examples() {
        let empty0 = DyckTiling::empty(DyckPath::empty());
        assert_eq!(
            ribbon_grow(&empty0, 0).unwrap(),
            DyckTiling::empty(path("UD"))
        );
        let ud = DyckTiling::empty(path("UD"));
        assert_eq!(ribbon_grow(&ud, -1).unwrap(), one_box());
        assert_eq!(
            ribbon_grow(&ud, 1).unwrap(),
            DyckTiling::empty(path("UDUD"))
        );
    }

    #[test]
    fn shrink_examples() {
        let ud = DyckTiling::empty(path("UD"));
        let empty0 = DyckTiling::empty(DyckPath::empty());
        assert_eq!(strip_shrink(&ud).unwrap(), (empty0.clone(), 0));
        assert_eq!(ribbon_shrink(&ud).unwrap(), (empty0, 0));
        assert_eq!(ribbon_shrink(&one_box()).unwrap(), (ud.clone(), -1));
        assert_eq!(strip_shrink(&one_box()).unwrap(), (ud, -1));
    }

    #[test]
    fn sequence_examples() {
        assert_eq!(dts(&seq("")), DyckTiling::empty(DyckPath::empty()));
        let t = dtr(&seq("0,0"));
        assert_eq!(t, one_box());
        assert_eq!(t.dis(), 1);
        let s = dts(&seq("0,1,0,5"));
        assert_eq!(s.lower().to_string(), "UDUUDUDD");
        assert_eq!(s.art(), 2);
        assert_eq!(dtr(&seq("0,1,0,5")).dis(), 1);
        assert_eq!(dts_inverse(&dts(&seq("0,1,0,3"))).unwrap(), seq("0,1,0,3"));
        assert_eq!(
            dtr_inverse(&DyckTiling::empty(DyckPath::zigzag(3))).unwrap(),
            seq("0,2,4")
        );
    }

    #[test]
    fn last_column_of_the_table() {
        let s = dts(&seq("0,1,1,0"));
        assert_eq!(s.upper().to_string(), "UUUUDDDD");
        assert_eq!((s.art(), s.tile_count()), (4, 4));
        assert_eq!(dts_inverse(&s).unwrap(), seq("0,1,1,0"));
        let sigma: Permutation = "2,4,3,1".parse().unwrap();
        assert_eq!(dts_of(&path("UDUUDUDD"), &sigma).unwrap(), s);
        let r = dtr_of(&path("UDUUDUDD"), &sigma).unwrap();
        assert_eq!(r.dis(), 2);
        assert_eq!(r.upper().to_string(), "UUUDUDDD");
    }

    #[test]
    fn twelve_chord_example() {
        let lambda = path("UUDUUDDDUDUUUDDUDUUDDDUD");
        let sigma: Permutation = "6,12,1,7,10,5,2,9,8,3,11,4".parse().unwrap();
        assert_eq!(dts_of(&lambda, &sigma).unwrap().art(), 34);
        assert_eq!(dtr_of(&lambda, &sigma).unwrap().dis(), 6);
    }

    #[test]
    fn non_extensions_are_rejected() {
        let sigma: Permutation = "2,1".parse().unwrap();
        assert!(matches!(
            dts_of(&path("UUDD"), &sigma),
            Err(Error::NotLinearExtension { .. })
        ));
    }

    #[test]
    fn grow_then_shrink_is_identity() {
        for n in 0..=5 {
            for p in GrowthSequence::all(n) {
                let s = dts(&p);
                let r = dtr(&p);
                assert_eq!(dts_inverse(&s).unwrap(), p);
                assert_eq!(dtr_inverse(&r).unwrap(), p);
                assert_eq!(special_column(&s).ok(), (n > 0).then(|| p.column(n)));
                assert_eq!(special_column(&r).ok(), (n > 0).then(|| p.column(n)));
            }
        }
    }

    #[test]
    fn grown_tilings_pass_validation() {
        for p in GrowthSequence::all(5) {
            for t in [dts(&p), dtr(&p)] {
                let text = t.to_string();
                assert_eq!(text.parse::<DyckTiling>().unwrap(), t);
            }
        }
    }
}
