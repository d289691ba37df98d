//! Groups lower paths by the isomorphism type of their chord tree and
//! compares tiling generating functions within each group.

use std::collections::BTreeMap;
use std::fmt::Write;

use dyck_atlas::dyckpath::DyckPath;
use dyck_atlas::poly::IntPolynomial;
use dyck_atlas::tiling::{enumerate_all, DyckTiling};
use dyck_atlas::treeposet::ChordPoset;
use dyck_atlas::Result;

struct Member {
    path: DyckPath,
    tiles: IntPolynomial,
    area: IntPolynomial,
    joint: BTreeMap<(usize, usize), usize>,
}

impl Member {
    fn new(path: DyckPath) -> Result<Self> {
        let all = enumerate_all(&path)?;
        let mut joint = BTreeMap::new();
        for t in &all {
            *joint.entry((t.tile_count(), t.area())).or_default() += 1;
        }
        Ok(Member {
            tiles: IntPolynomial::from_exponents(all.iter().map(DyckTiling::tile_count)),
            area: IntPolynomial::from_exponents(all.iter().map(DyckTiling::area)),
            joint,
            path,
        })
    }
}

fn agree<T: PartialEq>(members: &[Member], key: impl Fn(&Member) -> &T) -> bool {
    members.iter().all(|m| key(m) == key(&members[0]))
}

fn verdict(same: bool) -> &'static str {
    if same {
        "agree"
    } else {
        "differ"
    }
}

/// One line per class with two or more paths, then totals over all classes.
pub fn report(n: usize) -> Result<String> {
    let mut classes: BTreeMap<String, Vec<Member>> = BTreeMap::new();
    for path in DyckPath::all(n) {
        let code = ChordPoset::new(&path).tree_code();
        classes.entry(code).or_default().push(Member::new(path)?);
    }
    let mut out = String::new();
    let paths: usize = classes.values().map(Vec::len).sum();
    let _ = writeln!(
        out,
        "n = {n}: {paths} paths in {} tree classes",
        classes.len()
    );
    let mut counts = [0usize; 3];
    for members in classes.values() {
        let same = [
            agree(members, |m| &m.tiles),
            agree(members, |m| &m.area),
            agree(members, |m| &m.joint),
        ];
        for (c, s) in counts.iter_mut().zip(same) {
            *c += s as usize;
        }
        if members.len() > 1 {
            let words: Vec<String> = members.iter().map(|m| m.path.to_string()).collect();
            let _ = writeln!(
                out,
                "class {}: tiles {}, area {}, joint {}",
                words.join(" "),
                verdict(same[0]),
                verdict(same[1]),
                verdict(same[2])
            );
        }
    }
    for (name, c) in ["tiles", "area", "joint (tiles, area)"].iter().zip(counts) {
        let _ = writeln!(
            out,
            "{name} generating function agrees in {c} of {} classes",
            classes.len()
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_four() {
        let r = report(4).unwrap();
        assert!(r.starts_with("n = 4: 14 paths in 9 tree classes\n"));
        assert!(r.contains("tiles generating function agrees in 9 of 9 classes"));
        assert!(!r.contains("area generating function agrees in 9 of 9"));
    }

    #[test]
    fn order_one_is_vacuous() {
        let r = report(1).unwrap();
        assert!(r.contains("tiles generating function agrees in 1 of 1 classes"));
        assert!(!r.contains("class "));
    }
}
