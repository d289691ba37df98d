use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid character {found:?} at position {position} in Dyck word")]
    InvalidCharacter { position: usize, found: char },
    #[error("Dyck word mixes the U/D and parenthesis alphabets")]
    MixedAlphabet,
    #[error("Dyck word has odd length {0}")]
    OddLength(usize),
    #[error("Dyck word goes below height zero after step {0}")]
    NegativePrefix(usize),
    #[error("Dyck word is unbalanced: ends at height {0}")]
    Unbalanced(i64),
    #[error("paths have different orders ({0} and {1})")]
    OrderMismatch(usize, usize),
    #[error("upper path {upper} dips below lower path {lower} at column {column}")]
    NotContained {
        lower: String,
        upper: String,
        column: i32,
    },
    #[error("column {column} outside [-{order}, {order}]")]
    ColumnOutOfRange { column: i32, order: usize },
    #[error("no contraction exists at column {0}")]
    NoContraction(i32),
    #[error("({up}, {down}) is not a chord of {path}")]
    ChordNotInPath {
        up: usize,
        down: usize,
        path: String,
    },
    #[error("p_{index} = {value} violates 0 <= p_{index} <= {max}")]
    GrowthBound { index: usize, value: i64, max: i64 },
    #[error("not a permutation of 1..{0}: {1}")]
    InvalidPermutation(usize, String),
    #[error("word has a repeated entry {0}")]
    DuplicateEntry(usize),
    #[error("not a linear extension: chord {inner} is nested in chord {outer} but receives a smaller label")]
    NotLinearExtension { outer: String, inner: String },
    #[error("labeling has {got} entries, poset has {expected} chords")]
    LabelingSize { expected: usize, got: usize },
    #[error("order {order} exceeds the exhaustive limit {limit}")]
    LimitExceeded { order: usize, limit: usize },
    #[error("inversion set of the first permutation is not contained in that of the second")]
    InversionContainment,
    #[error("endpoint words are not the chords of a naturally labeled tree: {0}")]
    MalformedEndpoints(String),
    #[error("invalid perfect matching: {0}")]
    InvalidMatching(String),
    #[error("invalid Dyck tile: {0}")]
    InvalidTile(String),
    #[error("invalid tiling: {0}")]
    InvalidTiling(String),
    #[error("tiling is not cover-inclusive: {0}")]
    NotCoverInclusive(String),
    #[error("chord {chord}: label {value} exceeds bound {bound}")]
    LabelBound {
        chord: usize,
        value: usize,
        bound: usize,
    },
    #[error("chord {child} is labeled below its parent chord {parent}")]
    LabelMonotonicity { parent: usize, child: usize },
    #[error("lower path {0} is not a zig-zag path")]
    NotZigzag(String),
    #[error("dot {index} at height {height} lies outside the tableau shape")]
    DotOutsideShape { index: usize, height: usize },
    #[error("operation needs a tiling of order at least 1")]
    EmptyTiling,
    #[error("parse error: {0}")]
    Parse(String),
}
