//! Cover-inclusive Dyck tilings of skew shapes.
//!
//! A box is named by its bottom vertex `(x, y)`; it spans columns
//! `x - 1..=x + 1` and heights `y..=y + 2`. Column `x` of a shape holds
//! `(upper(x) - lower(x)) / 2` boxes stacked from `lower(x)` upwards.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::dyckpath::{contract_profile, spread_profile, DyckPath, SkewShape};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::treeposet::ChordPoset;
use crate::MAX_EXHAUSTIVE_ORDER;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckBox {
    pub x: i32,
    pub y: i32,
}

impl DyckBox {
    pub fn new(x: i32, y: i32) -> Self {
        DyckBox { x, y }
    }
}

impl fmt::Display for DyckBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

/// A ribbon of boxes in consecutive columns whose bottom vertices trace a
/// Dyck path profile.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckTile {
    boxes: Vec<DyckBox>,
}

impl DyckTile {
    pub fn new(mut boxes: Vec<DyckBox>) -> Result<Self> {
        boxes.sort();
        let (first, last) = match (boxes.first(), boxes.last()) {
            (Some(f), Some(l)) => (*f, *l),
            _ => return Err(Error::InvalidTile("no boxes".into())),
        };
        for w in boxes.windows(2) {
            if w[1].x != w[0].x + 1 || (w[1].y - w[0].y).abs() != 1 {
                return Err(Error::InvalidTile(format!(
                    "boxes {} and {} are not adjacent along a ribbon",
                    w[0], w[1]
                )));
            }
        }
        if first.y != last.y {
            return Err(Error::InvalidTile(format!(
                "ends {first} and {last} differ in height"
            )));
        }
        if let Some(b) = boxes.iter().find(|b| b.y < first.y) {
            return Err(Error::InvalidTile(format!("box {b} dips below the ends")));
        }
        Ok(DyckTile { boxes })
    }

    pub fn single(x: i32, y: i32) -> Self {
        DyckTile {
            boxes: vec![DyckBox::new(x, y)],
        }
    }

    /// Boxes from left to right.
    pub fn boxes(&self) -> &[DyckBox] {
        &self.boxes
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn is_single(&self) -> bool {
        self.boxes.len() == 1
    }

    /// Column of the leftmost box.
    pub fn first_col(&self) -> i32 {
        self.boxes[0].x
    }

    /// Column of the rightmost box.
    pub fn last_col(&self) -> i32 {
        self.boxes[self.boxes.len() - 1].x
    }

    /// Height of the bottom vertices of the end boxes.
    pub fn base(&self) -> i32 {
        self.boxes[0].y
    }

    /// Horizontal extent `(left, right)` in columns.
    pub fn extent(&self) -> (i32, i32) {
        (self.first_col() - 1, self.last_col() + 1)
    }

    pub fn box_in_column(&self, x: i32) -> Option<DyckBox> {
        let i = x - self.first_col();
        if i < 0 {
            return None;
        }
        self.boxes.get(i as usize).copied()
    }

    fn heights(&self) -> Vec<i32> {
        self.boxes.iter().map(|b| b.y).collect()
    }

    fn from_profile(start: i32, heights: Vec<i32>) -> Self {
        DyckTile {
            boxes: (start..)
                .zip(heights)
                .map(|(x, y)| DyckBox::new(x, y))
                .collect(),
        }
    }

    pub(crate) fn spread(&self, s: i32) -> Self {
        let (start, heights) = spread_profile(self.first_col(), &self.heights(), s);
        DyckTile::from_profile(start, heights)
    }

    pub(crate) fn contract(&self, s: i32) -> Option<Self> {
        let (start, heights) = contract_profile(self.first_col(), &self.heights(), s)?;
        Some(DyckTile::from_profile(start, heights))
    }
}

impl fmt::Display for DyckTile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.boxes.iter().map(|b| b.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Area, number of tiles, `(area + tiles) / 2` and discrepancy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TilingStats {
    pub area: usize,
    pub tiles: usize,
    pub art: usize,
    pub dis: usize,
}

/// A cover-inclusive tiling of `lower/upper`. Tiles are kept in canonical
/// (sorted) order, so equal tilings compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckTiling {
    lower: DyckPath,
    upper: DyckPath,
    tiles: Vec<DyckTile>,
}

impl DyckTiling {
    /// Validates the partition of the shape and cover-inclusivity.
    pub fn new(lower: DyckPath, upper: DyckPath, tiles: Vec<DyckTile>) -> Result<Self> {
        let shape = SkewShape::new(lower, upper)?;
        let t = DyckTiling::assemble(shape, tiles);
        t.validate()?;
        Ok(t)
    }

    /// The tiling with no tiles on `path/path`.
    pub fn empty(path: DyckPath) -> Self {
        DyckTiling {
            lower: path.clone(),
            upper: path,
            tiles: Vec::new(),
        }
    }

    pub(crate) fn assemble(shape: SkewShape, mut tiles: Vec<DyckTile>) -> Self {
        tiles.sort();
        DyckTiling {
            lower: shape.lower().clone(),
            upper: shape.upper().clone(),
            tiles,
        }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        let shape = self.shape();
        let n = self.order() as i32;
        let mut owner: HashMap<DyckBox, usize> = HashMap::new();
        for (i, tile) in self.tiles.iter().enumerate() {
            for &b in tile.boxes() {
                let lo = self.lower.height(b.x);
                let inside = b.x > -n
                    && b.x < n
                    && b.y >= lo
                    && (b.y - lo) % 2 == 0
                    && b.y + 2 <= self.upper.height(b.x);
                if !inside {
                    return Err(Error::InvalidTiling(format!(
                        "box {b} lies outside {shape}"
                    )));
                }
                if owner.insert(b, i).is_some() {
                    return Err(Error::InvalidTiling(format!("box {b} is covered twice")));
                }
            }
        }
        if owner.len() != shape.area() {
            return Err(Error::InvalidTiling(format!(
                "tiles cover {} of the {} boxes of {shape}",
                owner.len(),
                shape.area()
            )));
        }
        // checking vertically adjacent boxes suffices: the boxes of a column
        // form one stack, and extent inclusion is transitive
        for (&b, &i) in &owner {
            if let Some(&j) = owner.get(&DyckBox::new(b.x, b.y + 2)) {
                if i != j && !extent_within(&self.tiles[j], &self.tiles[i]) {
                    return Err(Error::NotCoverInclusive(format!(
                        "tile [{}] sits on tile [{}] but sticks out of it",
                        self.tiles[j], self.tiles[i]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn lower(&self) -> &DyckPath {
        &self.lower
    }

    pub fn upper(&self) -> &DyckPath {
        &self.upper
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape::new(self.lower.clone(), self.upper.clone()).expect("tiling shape is valid")
    }

    pub fn tiles(&self) -> &[DyckTile] {
        &self.tiles
    }

    pub fn order(&self) -> usize {
        self.lower.order()
    }

    pub fn area(&self) -> usize {
        self.tiles.iter().map(DyckTile::len).sum()
    }

    pub fn tile_count(&self) -> usize {
        self.tiles.len()
    }

    /// `(area + tiles) / 2`; integral because every tile has odd area.
    pub fn art(&self) -> usize {
        (self.area() + self.tile_count()) / 2
    }

    pub fn dis(&self) -> usize {
        self.shape().discrepancy()
    }

    pub fn stats(&self) -> TilingStats {
        TilingStats {
            area: self.area(),
            tiles: self.tile_count(),
            art: self.art(),
            dis: self.dis(),
        }
    }

    /// Whether every tile is a single box.
    pub fn only_single_boxes(&self) -> bool {
        self.tiles.iter().all(DyckTile::is_single)
    }

    /// The 1-box tile whose box has bottom vertex `(x, y)`, if any.
    pub fn single_at(&self, x: i32, y: i32) -> Option<usize> {
        self.tiles
            .iter()
            .position(|t| t.is_single() && t.boxes[0] == DyckBox::new(x, y))
    }

    pub(crate) fn spread(&self, s: i32) -> Result<Self> {
        let lower = self.lower.spread(s)?;
        let upper = self.upper.spread(s)?;
        let tiles = self.tiles.iter().map(|t| t.spread(s)).collect();
        let shape = SkewShape::new(lower, upper).expect("spread keeps containment");
        Ok(DyckTiling::assemble(shape, tiles))
    }

    pub(crate) fn contract(&self, s: i32) -> Result<Self> {
        let lower = self.lower.contract(s)?;
        let upper = self.upper.contract(s)?;
        let tiles = self
            .tiles
            .iter()
            .map(|t| t.contract(s).ok_or(Error::NoContraction(s)))
            .collect::<Result<Vec<_>>>()?;
        let shape = SkewShape::new(lower, upper)?;
        Ok(DyckTiling::assemble(shape, tiles))
    }

    pub(crate) fn with_tiles_added(&self, upper: DyckPath, extra: Vec<DyckTile>) -> Self {
        let mut tiles = self.tiles.clone();
        tiles.extend(extra);
        let shape = SkewShape::new(self.lower.clone(), upper).expect("added tiles sit above");
        DyckTiling::assemble(shape, tiles)
    }

    pub(crate) fn with_tiles_removed(&self, upper: DyckPath, remove: &[usize]) -> Self {
        let tiles = self
            .tiles
            .iter()
            .enumerate()
            .filter(|(i, _)| !remove.contains(i))
            .map(|(_, t)| t.clone())
            .collect();
        let shape = SkewShape::new(self.lower.clone(), upper).expect("removed tiles were on top");
        DyckTiling::assemble(shape, tiles)
    }
}

fn extent_within(inner: &DyckTile, outer: &DyckTile) -> bool {
    let (a, b) = inner.extent();
    let (c, d) = outer.extent();
    c <= a && b <= d
}

impl fmt::Display for DyckTiling {
    /// Line-oriented text form: `lower W`, `upper W`, then one `tile` line
    /// per tile with its boxes listed left to right.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lower {}", self.lower)?;
        writeln!(f, "upper {}", self.upper)?;
        for t in &self.tiles {
            writeln!(f, "tile {t}")?;
        }
        Ok(())
    }
}

impl FromStr for DyckTiling {
    type Err = Error;

    /// Accepts only the canonical form produced by `Display`.
    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text.split_inclusive('\n');
        let mut header = |key: &str| -> Result<DyckPath> {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing `{key}` line")))?;
            let word = line
                .strip_suffix('\n')
                .and_then(|l| l.strip_prefix(key))
                .and_then(|l| l.strip_prefix(' '))
                .ok_or_else(|| Error::Parse(format!("expected `{key} <word>`, got {line:?}")))?;
            word.parse()
        };
        let lower = header("lower")?;
        let upper = header("upper")?;
        let mut tiles = Vec::new();
        for line in lines {
            let body = line
                .strip_suffix('\n')
                .and_then(|l| l.strip_prefix("tile "))
                .ok_or_else(|| Error::Parse(format!("expected `tile x,y ...`, got {line:?}")))?;
            let boxes = body
                .split(' ')
                .map(|tok| {
                    let (x, y) = tok
                        .split_once(',')
                        .ok_or_else(|| Error::Parse(format!("bad box {tok:?}")))?;
                    let x = x
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad box {tok:?}")))?;
                    let y = y
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad box {tok:?}")))?;
                    Ok(DyckBox::new(x, y))
                })
                .collect::<Result<Vec<_>>>()?;
            tiles.push(DyckTile::new(boxes)?);
        }
        let tiling = DyckTiling::new(lower, upper, tiles)?;
        if tiling.to_string() != text {
            return Err(Error::Parse("tiling text is not in canonical form".into()));
        }
        Ok(tiling)
    }
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

/// All cover-inclusive tilings of `shape`, by backtracking.
///
/// The lowest uncovered box of the leftmost unfinished column always starts
/// a new tile, so each tiling is produced exactly once.
pub fn enumerate_tilings(shape: &SkewShape) -> Result<Vec<DyckTiling>> {
    check_limit(shape.order())?;
    let n = shape.order() as i32;
    let lower = shape.lower();
    let upper = shape.upper();
    let inside = |b: DyckBox| {
        b.x > -n && b.x < n && {
            let lo = lower.height(b.x);
            b.y >= lo && (b.y - lo) % 2 == 0 && b.y + 2 <= upper.height(b.x)
        }
    };

    struct State {
        owner: HashMap<DyckBox, usize>,
        tiles: Vec<DyckTile>,
    }

    fn candidate_tiles(
        start: DyckBox,
        inside: &dyn Fn(DyckBox) -> bool,
        owner: &HashMap<DyckBox, usize>,
    ) -> Vec<DyckTile> {
        let mut out = Vec::new();
        let mut path = vec![start];
        fn extend(
            path: &mut Vec<DyckBox>,
            base: i32,
            inside: &dyn Fn(DyckBox) -> bool,
            owner: &HashMap<DyckBox, usize>,
            out: &mut Vec<DyckTile>,
        ) {
            let last = *path.last().expect("nonempty");
            if last.y == base {
                out.push(DyckTile {
                    boxes: path.clone(),
                });
            }
            for dy in [1, -1] {
                let next = DyckBox::new(last.x + 1, last.y + dy);
                if next.y < base || !inside(next) || owner.contains_key(&next) {
                    continue;
                }
                path.push(next);
                extend(path, base, inside, owner, out);
                path.pop();
            }
        }
        extend(&mut path, start.y, inside, owner, &mut out);
        out
    }

    fn fits(state: &State, tile: &DyckTile) -> bool {
        for b in tile.boxes() {
            if let Some(&j) = state.owner.get(&DyckBox::new(b.x, b.y - 2)) {
                if !extent_within(tile, &state.tiles[j]) {
                    return false;
                }
            }
            if let Some(&j) = state.owner.get(&DyckBox::new(b.x, b.y + 2)) {
                if !extent_within(&state.tiles[j], tile) {
                    return false;
                }
            }
        }
        true
    }

    fn rec(
        shape: &SkewShape,
        inside: &dyn Fn(DyckBox) -> bool,
        state: &mut State,
        out: &mut Vec<DyckTiling>,
    ) {
        let n = shape.order() as i32;
        let next = (-n + 1..n).find_map(|x| {
            let lo = shape.lower().height(x);
            (0..shape.column_size(x) as i32)
                .map(|j| DyckBox::new(x, lo + 2 * j))
                .find(|b| !state.owner.contains_key(b))
        });
        let Some(start) = next else {
            out.push(DyckTiling::assemble(shape.clone(), state.tiles.clone()));
            return;
        };
        for tile in candidate_tiles(start, inside, &state.owner) {
            if !fits(state, &tile) {
                continue;
            }
            let idx = state.tiles.len();
            for &b in tile.boxes() {
                state.owner.insert(b, idx);
            }
            state.tiles.push(tile);
            rec(shape, inside, state, out);
            let tile = state.tiles.pop().expect("just pushed");
            for b in tile.boxes() {
                state.owner.remove(b);
            }
        }
    }

    let mut state = State {
        owner: HashMap::new(),
        tiles: Vec::new(),
    };
    let mut out = Vec::new();
    rec(shape, &inside, &mut state, &mut out);
    out.sort();
    Ok(out)
}

/// All cover-inclusive tilings with lower path `lower` and any upper path.
pub fn enumerate_all(lower: &DyckPath) -> Result<Vec<DyckTiling>> {
    check_limit(lower.order())?;
    let mut out = Vec::new();
    for upper in lower.paths_above() {
        let shape = SkewShape::new(lower.clone(), upper).expect("paths_above stays above");
        out.extend(enumerate_tilings(&shape)?);
    }
    out.sort();
    Ok(out)
}

/// Per-chord labels `g` of a tiling together with the shape bounds `h`,
/// indexed like [`DyckPath::chords`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChordLabeling {
    pub g: Vec<usize>,
    pub h: Vec<usize>,
}

impl ChordLabeling {
    /// Checks `g` against the bounds of `shape` and for weak increase
    /// along the nesting order.
    pub fn new(shape: &SkewShape, g: Vec<usize>) -> Result<Self> {
        let h = shape_bounds(shape);
        if g.len() != h.len() {
            return Err(Error::LabelingSize {
                expected: h.len(),
                got: g.len(),
            });
        }
        for (c, (&v, &bound)) in g.iter().zip(&h).enumerate() {
            if v > bound {
                return Err(Error::LabelBound {
                    chord: c + 1,
                    value: v,
                    bound,
                });
            }
        }
        let poset = ChordPoset::new(shape.lower());
        for c in 0..g.len() {
            if let Some(p) = poset.parent(c) {
                if g[c] < g[p] {
                    return Err(Error::LabelMonotonicity {
                        parent: p + 1,
                        child: c + 1,
                    });
                }
            }
        }
        Ok(ChordLabeling { g, h })
    }

    /// `sum g_c`.
    pub fn total(&self) -> usize {
        self.g.iter().sum()
    }
}

/// `h_c`: fewest boxes in any column from `left_col(c)` to `right_col(c)`.
pub fn shape_bounds(shape: &SkewShape) -> Vec<usize> {
    shape
        .lower()
        .chords()
        .iter()
        .map(|c| c.columns().map(|x| shape.column_size(x)).min().unwrap_or(0))
        .collect()
}

/// For each chord, the number of tiles with a box in both of its end
/// columns.
pub fn chord_labels(t: &DyckTiling) -> ChordLabeling {
    let g = t
        .lower()
        .chords()
        .iter()
        .map(|c| {
            t.tiles()
                .iter()
                .filter(|tile| {
                    tile.box_in_column(c.left_col).is_some()
                        && tile.box_in_column(c.right_col).is_some()
                })
                .count()
        })
        .collect();
    ChordLabeling {
        g,
        h: shape_bounds(&t.shape()),
    }
}

/// Inverse of [`chord_labels`].
///
/// In a cover-inclusive tiling the `j`-th box from the bottom of every
/// column belongs to a tile lying at level `j`; adjacent columns are joined
/// at level `j` exactly when `j` is below the label of the chord owning the
/// lower-path step between them.
pub fn tiling_from_labels(shape: &SkewShape, g: &[usize]) -> Result<DyckTiling> {
    let labels = ChordLabeling::new(shape, g.to_vec())?;
    let n = shape.order() as i32;
    let lower = shape.lower();
    let mut step_chord = vec![0usize; 2 * shape.order()];
    for (c, chord) in lower.chords().iter().enumerate() {
        step_chord[chord.up_step - 1] = c;
        step_chord[chord.down_step - 1] = c;
    }
    let joined = |x: i32, j: usize| j < labels.g[step_chord[(x + n) as usize]];
    let mut tiles = Vec::new();
    for x in -n + 1..n {
        for j in 0..shape.column_size(x) {
            if x > -n + 1 && joined(x - 1, j) {
                continue;
            }
            let mut boxes = vec![DyckBox::new(x, lower.height(x) + 2 * j as i32)];
            let mut col = x;
            while joined(col, j) {
                col += 1;
                boxes.push(DyckBox::new(col, lower.height(col) + 2 * j as i32));
            }
            tiles.push(DyckTile::new(boxes)?);
        }
    }
    let tiling = DyckTiling::assemble(shape.clone(), tiles);
    tiling.validate()?;
    Ok(tiling)
}

/// All weakly increasing labelings bounded by `h`, in lexicographic order.
pub fn bounded_labelings(shape: &SkewShape) -> Vec<Vec<usize>> {
    let h = shape_bounds(shape);
    let poset = ChordPoset::new(shape.lower());
    let mut out = Vec::new();
    let mut g = Vec::with_capacity(h.len());
    fn rec(h: &[usize], poset: &ChordPoset, g: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let c = g.len();
        if c == h.len() {
            out.push(g.clone());
            return;
        }
        // parents precede children in chord order
        let floor = poset.parent(c).map_or(0, |p| g[p]);
        for v in floor..=h[c] {
            g.push(v);
            rec(h, poset, g, out);
            g.pop();
        }
    }
    rec(&h, &poset, &mut g, &mut out);
    out
}

/// `sum_T x^((area(T) - tiles(T)) / 2)` over the tilings of `shape`,
/// computed with the subtree recursion
/// `f(c, v) = f(c, v + 1) + x^v prod_children f(d, v)` and `f(c, v) = 0`
/// for `v > h_c`.
pub fn genfun(shape: &SkewShape) -> IntPolynomial {
    let poset = ChordPoset::new(shape.lower());
    let h = shape_bounds(shape);
    let mut memo: BTreeMap<(usize, usize), IntPolynomial> = BTreeMap::new();
    fn f(
        c: usize,
        v: usize,
        poset: &ChordPoset,
        h: &[usize],
        memo: &mut BTreeMap<(usize, usize), IntPolynomial>,
    ) -> IntPolynomial {
        if v > h[c] {
            return IntPolynomial::zero();
        }
        if let Some(p) = memo.get(&(c, v)) {
            return p.clone();
        }
        let mut here = IntPolynomial::monomial(v, 1);
        for &d in poset.children(c) {
            here = &here * &f(d, v, poset, h, memo);
        }
        let out = &f(c, v + 1, poset, h, memo) + &here;
        memo.insert((c, v), out.clone());
        out
    }
    poset.roots().iter().fold(IntPolynomial::one(), |acc, &d| {
        &acc * &f(d, 0, &poset, &h, &mut memo)
    })
}

/// The same generating function summed directly over the tilings.
pub fn genfun_by_enumeration(shape: &SkewShape) -> Result<IntPolynomial> {
    Ok(IntPolynomial::from_exponents(
        enumerate_tilings(shape)?
            .iter()
            .map(|t| (t.area() - t.tile_count()) / 2),
    ))
}

/// A Dyck tableau: a path of order `n + 1` above the zig-zag path with one
/// dot in each of its `n` valley columns.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckTableau {
    upper: DyckPath,
    dots: Vec<usize>,
}

impl DyckTableau {
    /// `dots[i]` is the number of boxes below the dot in valley column
    /// `i + 1`.
    pub fn new(upper: DyckPath, dots: Vec<usize>) -> Result<Self> {
        let n = upper.order().checked_sub(1).ok_or(Error::EmptyTiling)?;
        if dots.len() != n {
            return Err(Error::LabelingSize {
                expected: n,
                got: dots.len(),
            });
        }
        for (i, &d) in dots.iter().enumerate() {
            let col = valley_column(n, i);
            if 2 * d as i32 + 2 > upper.height(col) {
                return Err(Error::DotOutsideShape {
                    index: i + 1,
                    height: d,
                });
            }
        }
        Ok(DyckTableau { upper, dots })
    }

    pub fn upper(&self) -> &DyckPath {
        &self.upper
    }

    pub fn dots(&self) -> &[usize] {
        &self.dots
    }

    /// Number of dots.
    pub fn order(&self) -> usize {
        self.dots.len()
    }
}

/// Column of the `i`-th (0-based) valley of the zig-zag path of order `n + 1`.
fn valley_column(n: usize, i: usize) -> i32 {
    -(n as i32) + 2 * i as i32 + 1
}

/// Converts a tiling over the zig-zag path into a Dyck tableau.
pub fn to_tableau(t: &DyckTiling) -> Result<DyckTableau> {
    if !t.lower().is_zigzag() {
        return Err(Error::NotZigzag(t.lower().to_string()));
    }
    let mut steps = vec![crate::dyckpath::Step::Up];
    steps.extend_from_slice(t.upper().steps());
    steps.push(crate::dyckpath::Step::Down);
    let upper = DyckPath::new(steps).expect("raising a Dyck path keeps it balanced");
    DyckTableau::new(upper, chord_labels(t).g)
}

/// Inverse of [`to_tableau`].
pub fn from_tableau(tab: &DyckTableau) -> Result<DyckTiling> {
    let steps = tab.upper.steps();
    let inner = DyckPath::new(steps[1..steps.len() - 1].to_vec())
        .map_err(|_| Error::InvalidTiling(format!("{} touches the axis inside", tab.upper)))?;
    let shape = SkewShape::new(DyckPath::zigzag(tab.order()), inner)?;
    tiling_from_labels(&shape, &tab.dots)
}

/// All Dyck tableaux with `n` dots.
pub fn enumerate_tableaux(n: usize) -> Result<Vec<DyckTableau>> {
    check_limit(n)?;
    let mut out = Vec::new();
    for inner in DyckPath::all(n) {
        let shape = SkewShape::new(DyckPath::zigzag(n), inner).expect("every path is above");
        for g in bounded_labelings(&shape) {
            out.push(to_tableau(&tiling_from_labels(&shape, &g)?)?);
        }
    }
    out.sort();
    Ok(out)
}
