//! ASCII and SVG pictures of a tiling in the rotated (mountain) picture.

use std::collections::BTreeMap;
use std::fmt::Write;

use dyck_atlas::dyckpath::{DyckPath, Step};
use dyck_atlas::tiling::DyckTiling;

/// Lattice units per step in SVG output.
const UNIT: i32 = 20;

/// A lattice segment from `(x, y0)` to `(x + 1, y1)`.
type Edge = (i32, i32, i32);

fn path_edges(path: &DyckPath) -> Vec<Edge> {
    (path.min_col()..path.max_col())
        .map(|x| (x, path.height(x), path.height(x + 1)))
        .collect()
}

/// The four sides of the box with bottom vertex `(x, y)`.
fn box_edges(x: i32, y: i32) -> [Edge; 4] {
    [
        (x - 1, y + 1, y),
        (x, y, y + 1),
        (x - 1, y + 1, y + 2),
        (x, y + 2, y + 1),
    ]
}

/// Box sides on a tile boundary: those not shared by two boxes of the same
/// tile.
fn tile_outline(t: &DyckTiling) -> Vec<Edge> {
    let mut owners: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
    for (i, tile) in t.tiles().iter().enumerate() {
        for b in tile.boxes() {
            for e in box_edges(b.x, b.y) {
                owners.entry(e).or_default().push(i);
            }
        }
    }
    owners
        .into_iter()
        .filter(|(_, who)| who.len() == 1 || who[0] != who[1])
        .map(|(e, _)| e)
        .collect()
}

fn tile_letter(i: usize) -> char {
    const LETTERS: &[u8] = b"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
    LETTERS.get(i).map_or('#', |&c| c as char)
}

/// Character art: steps are `/` and `\` in odd columns, each on the row of
/// its higher end; every box shows its tile's letter at its center.
pub fn ascii(t: &DyckTiling) -> String {
    let n = t.order() as i32;
    let top = (t.lower().min_col()..=t.lower().max_col())
        .map(|x| t.upper().height(x))
        .max()
        .unwrap_or(0);
    if top == 0 {
        return "\n".to_string();
    }
    let width = (4 * n + 1) as usize;
    let mut grid = vec![vec![' '; width]; top as usize];
    let mut put = |x: i32, h: i32, offset: i32, c: char| {
        let row = (top - h) as usize;
        let col = (2 * (x + n) + offset) as usize;
        grid[row][col] = c;
    };
    let mut edges = path_edges(t.lower());
    edges.extend(path_edges(t.upper()));
    edges.extend(tile_outline(t));
    for (x, y0, y1) in edges {
        put(x, y0.max(y1), 1, if y1 > y0 { '/' } else { '\\' });
    }
    for (i, tile) in t.tiles().iter().enumerate() {
        for b in tile.boxes() {
            put(b.x, b.y + 1, 0, tile_letter(i));
        }
    }
    let mut out = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn point(x: i32, y: i32) -> String {
    format!("{},{}", UNIT * x, -UNIT * y)
}

fn polyline(path: &DyckPath) -> String {
    let mut pts = vec![point(path.min_col(), 0)];
    let mut y = 0;
    for (x, step) in (path.min_col()..).zip(path.steps()) {
        y += if *step == Step::Up { 1 } else { -1 };
        pts.push(point(x + 1, y));
    }
    pts.join(" ")
}

/// Diamonds for the boxes, tile outlines on top, the upper path thin and
/// the lower path bold. The origin sits at the center of the bottom edge.
pub fn svg(t: &DyckTiling) -> String {
    let n = t.order() as i32;
    let top = (t.lower().min_col()..=t.lower().max_col())
        .map(|x| t.upper().height(x))
        .max()
        .unwrap_or(0);
    let pad = UNIT / 2;
    let (vx, vy) = (-UNIT * n - pad, -UNIT * top - pad);
    let (vw, vh) = (2 * UNIT * n + 2 * pad, UNIT * top + 2 * pad);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vx} {vy} {vw} {vh}" width="{vw}" height="{vh}">"#
    );
    let _ = writeln!(
        s,
        r##"<g fill="#e8eef7" stroke="#b0b8c8" stroke-width="0.5">"##
    );
    for tile in t.tiles() {
        for b in tile.boxes() {
            let _ = writeln!(
                s,
                r#"<polygon points="{} {} {} {}"/>"#,
                point(b.x, b.y),
                point(b.x + 1, b.y + 1),
                point(b.x, b.y + 2),
                point(b.x - 1, b.y + 1)
            );
        }
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(
        s,
        r#"<g stroke="black" stroke-width="1.5" stroke-linecap="round">"#
    );
    for (x, y0, y1) in tile_outline(t) {
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            UNIT * x,
            -UNIT * y0,
            UNIT * (x + 1),
            -UNIT * y1
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(
        s,
        r#"<polyline fill="none" stroke="black" stroke-width="1.5" points="{}"/>"#,
        polyline(t.upper())
    );
    let _ = writeln!(
        s,
        r#"<polyline fill="none" stroke="black" stroke-width="4" stroke-linejoin="round" points="{}"/>"#,
        polyline(t.lower())
    );
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiling(text: &str) -> DyckTiling {
        text.parse().unwrap()
    }

    #[test]
    fn one_box_ascii() {
        let t = tiling("lower UDUD\nupper UUDD\ntile 0,0\n");
        assert_eq!(ascii(&t), "   / \\\n / \\A/ \\\n");
    }

    #[test]
    fn empty_ascii_is_the_path() {
        let t = tiling("lower UD\nupper UD\n");
        assert_eq!(ascii(&t), " / \\\n");
        assert_eq!(ascii(&tiling("lower \nupper \n")), "\n");
    }

    #[test]
    fn interior_sides_are_hidden() {
        // a 3-box ribbon shares two sides internally; only the other 8 remain
        let t = tiling("lower UDUDUD\nupper UUUDDD\ntile -1,0 0,1 1,0\n");
        assert_eq!(tile_outline(&t).len(), 8);
        let art = ascii(&t);
        assert_eq!(art.matches('A').count(), 3);
    }

    #[test]
    fn svg_is_centered() {
        let t = tiling("lower UDUD\nupper UUDD\ntile 0,0\n");
        let s = svg(&t);
        assert!(s.contains(r#"viewBox="-50 -50 100 60""#));
        assert!(s.contains(r#"<polygon points="0,0 20,-20 0,-40 -20,-20"/>"#));
        assert!(s.contains(r#"points="-40,0 -20,-20 0,0 20,-20 40,0""#));
    }
}
