//! Set partitions of `{1, …, n}`, their arc diagrams, and restricted growth
//! strings.
//!
//! A [`SetPartition`] is always held in canonical form: elements inside a
//! block are increasing and blocks are ordered by their minima. The arc
//! diagram joins consecutive elements of each block; the extended arc
//! diagram additionally attaches a half-arc from the far left to every
//! opener and from every closer to the far right.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::PartitionError;

/// A set partition of `{1, …, n}` in canonical block order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

/// Text layout used by [`SetPartition::format`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionStyle {
    /// `1,8|2,5,6,9|3,7|4`
    Comma,
    /// `18|2569|37|4`, only defined for `n <= 9`.
    Compact,
}

impl SetPartition {
    /// Builds a partition from arbitrary blocks, canonicalizing their order.
    pub fn from_blocks(mut blocks: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        if blocks.is_empty() {
            return Err(PartitionError::Empty);
        }
        let mut n = 0;
        for block in &mut blocks {
            if block.is_empty() {
                return Err(PartitionError::EmptyBlock);
            }
            block.sort_unstable();
            n = n.max(*block.last().unwrap());
        }
        let mut seen = vec![false; n + 1];
        for &x in blocks.iter().flatten() {
            if x == 0 {
                return Err(PartitionError::NonPositive(x as i64));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(PartitionError::DuplicateElement(x));
            }
        }
        if let Some(missing) = (1..=n).find(|&x| !seen[x]) {
            return Err(PartitionError::MissingElement(missing));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// The partition into `n` singletons, the minimum of the order.
    pub fn singletons(n: usize) -> Self {
        assert!(n >= 1, "ground set must be nonempty");
        SetPartition {
            n,
            blocks: (1..=n).map(|x| vec![x]).collect(),
        }
    }

    /// The partition with a single block, the maximum of the order.
    pub fn single_block(n: usize) -> Self {
        assert!(n >= 1, "ground set must be nonempty");
        SetPartition {
            n,
            blocks: vec![(1..=n).collect()],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Block minima in increasing order.
    pub fn openers(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b[0]).collect()
    }

    /// Block maxima in increasing order.
    pub fn closers(&self) -> Vec<usize> {
        let mut c: Vec<usize> = self.blocks.iter().map(|b| *b.last().unwrap()).collect();
        c.sort_unstable();
        c
    }

    /// Renders the partition in the requested style.
    pub fn format(&self, style: PartitionStyle) -> Result<String, PartitionError> {
        let sep = match style {
            PartitionStyle::Comma => ",",
            PartitionStyle::Compact if self.n > 9 => {
                return Err(PartitionError::CompactTooLarge(self.n))
            }
            PartitionStyle::Compact => "",
        };
        Ok(self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(sep)
            })
            .collect::<Vec<_>>()
            .join("|"))
    }

    /// Compact form when `n <= 9`, comma form otherwise.
    pub fn to_short_string(&self) -> String {
        let style = if self.n <= 9 {
            PartitionStyle::Compact
        } else {
            PartitionStyle::Comma
        };
        self.format(style).expect("style chosen to fit n")
    }

    pub fn to_arc_diagram(&self) -> ArcDiagram {
        let mut partner = vec![0; self.n + 1];
        let mut successor = vec![0; self.n + 1];
        for block in &self.blocks {
            for w in block.windows(2) {
                successor[w[0]] = w[1];
                partner[w[1]] = w[0];
            }
        }
        ArcDiagram {
            n: self.n,
            partner,
            successor,
        }
    }

    pub fn to_rgs(&self) -> RestrictedGrowthString {
        let mut word = vec![0; self.n];
        for (idx, block) in self.blocks.iter().enumerate() {
            for &x in block {
                word[x - 1] = idx;
            }
        }
        RestrictedGrowthString(word)
    }

    /// Index (0-based, blocks by minima) of the block containing `x`.
    pub fn block_index_of(&self, x: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&x).is_ok())
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_short_string())
    }
}

impl FromStr for SetPartition {
    type Err = PartitionError;

    /// Parses either the comma grammar `1,8|2,5,6,9|3,7|4` or the compact
    /// digit form `18|2569|37|4`.
    ///
    /// Text containing a comma is always read with the comma grammar. Text
    /// without commas is read as compact digits first; if that does not
    /// describe a valid partition, each block is read as a single integer so
    /// that `1|2|…|10` still parses.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let text = text.trim();
        if text.is_empty() {
            return Err(PartitionError::Empty);
        }
        if text.contains(',') {
            return parse_comma(text);
        }
        match parse_compact(text) {
            Ok(p) => Ok(p),
            Err(compact_err) => parse_comma(text).map_err(|_| compact_err),
        }
    }
}

fn parse_int(token: &str) -> Result<usize, PartitionError> {
    let token = token.trim();
    if token.is_empty() {
        return Err(PartitionError::Malformed("empty element".into()));
    }
    match token.parse::<i64>() {
        Ok(v) if v <= 0 => Err(PartitionError::NonPositive(v)),
        Ok(v) => usize::try_from(v).map_err(|_| PartitionError::Malformed(token.into())),
        Err(_) => Err(PartitionError::Malformed(format!(
            "not an integer: {token:?}"
        ))),
    }
}

fn parse_comma(text: &str) -> Result<SetPartition, PartitionError> {
    let blocks = text
        .split('|')
        .map(|block| {
            block
                .split(',')
                .map(parse_int)
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    SetPartition::from_blocks(blocks)
}

fn parse_compact(text: &str) -> Result<SetPartition, PartitionError> {
    let blocks = text
        .split('|')
        .map(|block| {
            let block = block.trim();
            if block.is_empty() {
                return Err(PartitionError::EmptyBlock);
            }
            block
                .chars()
                .map(|c| match c.to_digit(10) {
                    Some(0) => Err(PartitionError::NonPositive(0)),
                    Some(d) => Ok(d as usize),
                    None => Err(PartitionError::Malformed(format!(
                        "unexpected character {c:?}"
                    ))),
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    SetPartition::from_blocks(blocks)
}

/// Vertices `1..=n` with arcs joining consecutive elements of each block.
///
/// Every vertex is the left endpoint of at most one arc and the right
/// endpoint of at most one arc.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArcDiagram {
    n: usize,
    // partner[v] = u if (u, v) is an arc, else 0; index 0 unused.
    partner: Vec<usize>,
    // successor[u] = v if (u, v) is an arc, else 0.
    successor: Vec<usize>,
}

impl ArcDiagram {
    pub fn new(n: usize, arcs: &[(usize, usize)]) -> Result<Self, PartitionError> {
        if n == 0 {
            return Err(PartitionError::Empty);
        }
        let mut partner = vec![0; n + 1];
        let mut successor = vec![0; n + 1];
        for &(i, j) in arcs {
            if i == 0 || i >= j || j > n {
                return Err(PartitionError::ArcOutOfRange {
                    n,
                    left: i,
                    right: j,
                });
            }
            if successor[i] != 0 {
                return Err(PartitionError::VertexReused(i));
            }
            if partner[j] != 0 {
                return Err(PartitionError::VertexReused(j));
            }
            successor[i] = j;
            partner[j] = i;
        }
        Ok(ArcDiagram {
            n,
            partner,
            successor,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Arcs sorted by left endpoint.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .filter(|&i| self.successor[i] != 0)
            .map(|i| (i, self.successor[i]))
            .collect()
    }

    pub fn num_arcs(&self) -> usize {
        self.successor.iter().filter(|&&s| s != 0).count()
    }

    /// Number of chains, i.e. blocks of the induced partition.
    pub fn num_chains(&self) -> usize {
        self.n - self.num_arcs()
    }

    pub fn contains_arc(&self, i: usize, j: usize) -> bool {
        i >= 1 && i <= self.n && self.successor[i] == j && j != 0
    }

    /// The element immediately preceding `v` in its block, or 0 for an opener.
    pub fn partner(&self, v: usize) -> Result<usize, PartitionError> {
        if v == 0 || v > self.n {
            return Err(PartitionError::VertexOutOfRange {
                n: self.n,
                vertex: v,
            });
        }
        Ok(self.partner[v])
    }

    /// The element immediately following `v` in its block, or 0 for a closer.
    pub fn successor(&self, v: usize) -> Result<usize, PartitionError> {
        if v == 0 || v > self.n {
            return Err(PartitionError::VertexOutOfRange {
                n: self.n,
                vertex: v,
            });
        }
        Ok(self.successor[v])
    }

    pub(crate) fn partners(&self) -> &[usize] {
        &self.partner
    }

    pub fn is_opener(&self, v: usize) -> bool {
        self.partner[v] == 0
    }

    pub fn is_closer(&self, v: usize) -> bool {
        self.successor[v] == 0
    }

    pub fn to_partition(&self) -> SetPartition {
        let blocks = (1..=self.n)
            .filter(|&v| self.partner[v] == 0)
            .map(|opener| {
                let mut block = vec![opener];
                let mut v = opener;
                while self.successor[v] != 0 {
                    v = self.successor[v];
                    block.push(v);
                }
                block
            })
            .collect();
        SetPartition { n: self.n, blocks }
    }

    /// Proper arcs together with one sentinel half-arc per opener and per
    /// closer.
    ///
    /// The left half-arc to opener `o` is `(-o, o)` and the right half-arc
    /// from closer `c` is `(c, 3n - c)`. Under the crossing rule
    /// `i < k < j < l` these sentinels never cross one another on the same
    /// side, and each one crosses exactly the generalized arcs spanning its
    /// vertex. The result is sorted by `(left, right)`.
    pub fn extended_arcs(&self) -> Vec<GeneralizedArc> {
        let n = self.n as i64;
        let mut out = Vec::with_capacity(self.n + self.num_chains());
        for v in 1..=self.n {
            let vi = v as i64;
            if self.partner[v] == 0 {
                out.push(GeneralizedArc::new(-vi, vi));
            }
            match self.successor[v] {
                0 => out.push(GeneralizedArc::new(vi, 3 * n - vi)),
                j => out.push(GeneralizedArc::new(vi, j as i64)),
            }
        }
        out.sort_unstable();
        out
    }
}

/// An arc of the extended arc diagram in sentinel coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeneralizedArc {
    pub left: i64,
    pub right: i64,
}

impl GeneralizedArc {
    pub fn new(left: i64, right: i64) -> Self {
        debug_assert!(left < right);
        GeneralizedArc { left, right }
    }

    /// `(i, j)` and `(k, l)` cross when `i < k < j < l`, in either order.
    pub fn crosses(&self, other: &GeneralizedArc) -> bool {
        let (a, b) = if self.left <= other.left {
            (self, other)
        } else {
            (other, self)
        };
        a.left < b.left && b.left < a.right && a.right < b.right
    }
}

/// The word `w_1 … w_n` with `w_1 = 0` and `w_{i+1} <= 1 + max(w_1, …, w_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct RestrictedGrowthString(Vec<usize>);

impl RestrictedGrowthString {
    pub fn new(word: Vec<usize>) -> Result<Self, PartitionError> {
        if word.is_empty() {
            return Err(PartitionError::Empty);
        }
        let mut max = None::<usize>;
        for (pos, &w) in word.iter().enumerate() {
            let bound = max.map_or(0, |m| m + 1);
            if w > bound {
                return Err(PartitionError::InvalidGrowth {
                    position: pos + 1,
                    value: w,
                });
            }
            max = Some(max.map_or(w, |m| m.max(w)));
        }
        Ok(RestrictedGrowthString(word))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn num_blocks(&self) -> usize {
        self.0.iter().max().map_or(0, |m| m + 1)
    }

    pub fn to_partition(&self) -> SetPartition {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (i, &w) in self.0.iter().enumerate() {
            blocks[w].push(i + 1);
        }
        SetPartition {
            n: self.0.len(),
            blocks,
        }
    }
}

impl TryFrom<Vec<usize>> for RestrictedGrowthString {
    type Error = PartitionError;

    fn try_from(word: Vec<usize>) -> Result<Self, Self::Error> {
        RestrictedGrowthString::new(word)
    }
}

impl From<RestrictedGrowthString> for Vec<usize> {
    fn from(rgs: RestrictedGrowthString) -> Self {
        rgs.0
    }
}

impl fmt::Display for RestrictedGrowthString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for RestrictedGrowthString {
    type Err = PartitionError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| PartitionError::Malformed("expected [w1,w2,...]".into()))?;
        let word = inner
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|_| {
                    PartitionError::Malformed(format!("not a nonnegative integer: {t:?}"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        RestrictedGrowthString::new(word)
    }
}

/// Streams partitions of `{1, …, n}` in lexicographic RGS order.
///
/// Optionally restricted to exactly `k` blocks and to words starting with a
/// fixed prefix. Disjoint prefixes give disjoint streams, so a caller can
/// split `Π_n` among workers by prefix and concatenate in prefix order.
#[derive(Clone, Debug)]
pub struct Partitions {
    word: Vec<usize>,
    // prefix_max[i] = max(word[0..i]), prefix_max[0] unused
    prefix_max: Vec<usize>,
    blocks: Option<usize>,
    fixed: usize,
    done: bool,
}

impl Partitions {
    fn start(n: usize, blocks: Option<usize>, prefix: &[usize]) -> Result<Self, PartitionError> {
        if n == 0 {
            return Err(PartitionError::Empty);
        }
        if let Some(k) = blocks {
            if k == 0 || k > n {
                return Err(PartitionError::BlockCountOutOfRange { n, k });
            }
        }
        if prefix.len() > n {
            return Err(PartitionError::Malformed(format!(
                "prefix of length {} longer than n = {n}",
                prefix.len()
            )));
        }
        if !prefix.is_empty() {
            RestrictedGrowthString::new(prefix.to_vec())?;
        }
        let mut it = Partitions {
            word: vec![0; n],
            prefix_max: vec![0; n + 1],
            blocks,
            fixed: prefix.len().max(1),
            done: false,
        };
        it.word[..prefix.len()].copy_from_slice(prefix);
        let start = prefix.len().max(1);
        for i in 1..start {
            it.prefix_max[i + 1] = it.prefix_max[i].max(it.word[i]);
        }
        let max_so_far = it.prefix_max[start];
        it.done = !it.fill_from(start, max_so_far);
        Ok(it)
    }

    /// Minimal completion of positions `from..n` given the maximum value used
    /// so far. Returns false if no completion meets the block count.
    fn fill_from(&mut self, from: usize, mut max: usize) -> bool {
        let n = self.word.len();
        let remaining = n - from;
        let need = match self.blocks {
            None => 0,
            Some(k) => {
                if max + 1 > k {
                    return false;
                }
                k - 1 - max
            }
        };
        if need > remaining {
            return false;
        }
        for i in from..n {
            self.prefix_max[i] = max;
            if i >= n - need {
                max += 1;
                self.word[i] = max;
            } else {
                self.word[i] = 0;
            }
        }
        if n > 0 {
            self.prefix_max[n] = max;
        }
        true
    }

    fn advance(&mut self) -> bool {
        let n = self.word.len();
        for i in (self.fixed..n).rev() {
            let m = self.prefix_max[i];
            let v = self.word[i] + 1;
            if v > m + 1 {
                continue;
            }
            if let Some(k) = self.blocks {
                let new_max = m.max(v);
                if new_max >= k || k - 1 - new_max > n - i - 1 {
                    continue;
                }
            }
            self.word[i] = v;
            let new_max = m.max(v);
            let ok = self.fill_from(i + 1, new_max);
            debug_assert!(ok);
            return true;
        }
        false
    }

    /// Current RGS word without building a partition.
    pub fn next_word(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.word.clone();
        self.done = !self.advance();
        Some(out)
    }
}

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        self.next_word()
            .map(|w| RestrictedGrowthString(w).to_partition())
    }
}

/// All partitions of `{1, …, n}`, or only those with `k` blocks.
pub fn enumerate(n: usize, blocks: Option<usize>) -> Result<Partitions, PartitionError> {
    Partitions::start(n, blocks, &[])
}

/// Partitions whose RGS word begins with `prefix`.
pub fn enumerate_with_prefix(
    n: usize,
    blocks: Option<usize>,
    prefix: &[usize],
) -> Result<Partitions, PartitionError> {
    Partitions::start(n, blocks, prefix)
}

/// All valid RGS prefixes of length `len` (clamped to `n`) in lexicographic
/// order; their streams partition `Π_n`.
pub fn rgs_prefixes(n: usize, len: usize) -> Vec<Vec<usize>> {
    let len = len.min(n).max(1);
    enumerate(len, None)
        .expect("len >= 1")
        .map(|p| p.to_rgs().0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> SetPartition {
        "1,8|2,5,6,9|3,7|4".parse().unwrap()
    }

    #[test]
    fn parses_sample_partition() {
        let p = sample();
        assert_eq!(p.n(), 9);
        assert_eq!(
            p.blocks(),
            &[vec![1, 8], vec![2, 5, 6, 9], vec![3, 7], vec![4]]
        );
        assert_eq!(p.openers(), vec![1, 2, 3, 4]);
        assert_eq!(p.closers(), vec![4, 7, 8, 9]);
    }

    #[test]
    fn parses_smallest_partition() {
        let p: SetPartition = "1".parse().unwrap();
        assert_eq!(p.n(), 1);
        assert_eq!(p.blocks(), &[vec![1]]);
    }

    #[test]
    fn compact_and_comma_agree() {
        let p: SetPartition = "137|2|456".parse().unwrap();
        assert_eq!(p.blocks(), &[vec![1, 3, 7], vec![2], vec![4, 5, 6]]);
        let comma = p.format(PartitionStyle::Comma).unwrap();
        assert_eq!(comma, "1,3,7|2|4,5,6");
        assert_eq!(comma.parse::<SetPartition>().unwrap(), p);
    }

    #[test]
    fn compact_text_with_a_gap_is_rejected() {
        // {1,3,7} ∪ {2} ∪ {4,5} leaves out 6
        assert_eq!(
            "137|2|45".parse::<SetPartition>(),
            Err(PartitionError::MissingElement(6))
        );
    }

    #[test]
    fn formats_compact_and_comma() {
        assert_eq!(
            sample().format(PartitionStyle::Compact).unwrap(),
            "18|2569|37|4"
        );
        assert_eq!(
            SetPartition::singletons(1)
                .format(PartitionStyle::Compact)
                .unwrap(),
            "1"
        );
        let mut blocks = vec![vec![1, 10]];
        blocks.extend((2..=9).map(|x| vec![x]));
        let p = SetPartition::from_blocks(blocks).unwrap();
        let text = p.format(PartitionStyle::Comma).unwrap();
        assert_eq!(text, "1,10|2|3|4|5|6|7|8|9");
        assert_eq!(text.parse::<SetPartition>().unwrap(), p);
        assert_eq!(
            p.format(PartitionStyle::Compact),
            Err(PartitionError::CompactTooLarge(10))
        );
    }

    #[test]
    fn rejects_bad_text() {
        assert!(matches!(
            "1,1|2".parse::<SetPartition>(),
            Err(PartitionError::DuplicateElement(1))
        ));
        assert!(matches!(
            "1,3".parse::<SetPartition>(),
            Err(PartitionError::MissingElement(2))
        ));
        assert!(matches!(
            "0,1".parse::<SetPartition>(),
            Err(PartitionError::NonPositive(0))
        ));
        assert!(matches!(
            "1,-2".parse::<SetPartition>(),
            Err(PartitionError::NonPositive(-2))
        ));
        assert!(matches!(
            "1,a".parse::<SetPartition>(),
            Err(PartitionError::Malformed(_))
        ));
        assert!("1||2".parse::<SetPartition>().is_err());
        assert!(matches!(
            "".parse::<SetPartition>(),
            Err(PartitionError::Empty)
        ));
    }

    #[test]
    fn singleton_blocks_beyond_nine_parse_without_commas() {
        let text = (1..=11)
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join("|");
        let p: SetPartition = text.parse().unwrap();
        assert_eq!(p, SetPartition::singletons(11));
    }

    #[test]
    fn arc_diagram_of_sample() {
        let d = sample().to_arc_diagram();
        assert_eq!(d.arcs(), vec![(1, 8), (2, 5), (3, 7), (5, 6), (6, 9)]);
        assert_eq!(d.num_chains(), 4);
        assert_eq!(d.to_partition(), sample());
    }

    #[test]
    fn arc_diagram_extremes() {
        assert!(SetPartition::singletons(3)
            .to_arc_diagram()
            .arcs()
            .is_empty());
        let chain = SetPartition::single_block(5).to_arc_diagram();
        assert_eq!(chain.arcs(), vec![(1, 2), (2, 3), (3, 4), (4, 5)]);
    }

    #[test]
    fn from_arc_diagram_examples() {
        let d = ArcDiagram::new(4, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(d.to_partition().to_string(), "123|4");
        let d = ArcDiagram::new(4, &[]).unwrap();
        assert_eq!(d.to_partition(), SetPartition::singletons(4));
        let d = ArcDiagram::new(9, &[(1, 8), (2, 5), (5, 6), (6, 9), (3, 7)]).unwrap();
        assert_eq!(d.to_partition(), sample());
    }

    #[test]
    fn arc_diagram_rejects_reused_vertex() {
        assert_eq!(
            ArcDiagram::new(4, &[(1, 3), (2, 3)]),
            Err(PartitionError::VertexReused(3))
        );
        assert_eq!(
            ArcDiagram::new(4, &[(1, 3), (1, 4)]),
            Err(PartitionError::VertexReused(1))
        );
        assert!(matches!(
            ArcDiagram::new(3, &[(2, 2)]),
            Err(PartitionError::ArcOutOfRange { .. })
        ));
        assert!(matches!(
            ArcDiagram::new(3, &[(1, 4)]),
            Err(PartitionError::ArcOutOfRange { .. })
        ));
    }

    #[test]
    fn rgs_examples() {
        assert_eq!(sample().to_rgs().as_slice(), &[0, 1, 2, 3, 1, 1, 2, 0, 1]);
        assert_eq!(sample().to_rgs().to_partition(), sample());
        assert_eq!(
            SetPartition::singletons(4).to_rgs().as_slice(),
            &[0, 1, 2, 3]
        );
        assert_eq!(
            SetPartition::single_block(4).to_rgs().as_slice(),
            &[0, 0, 0, 0]
        );
        assert_eq!(sample().to_rgs().to_string(), "[0,1,2,3,1,1,2,0,1]");
        let parsed: RestrictedGrowthString = "[0,1,2,3,1,1,2,0,1]".parse().unwrap();
        assert_eq!(parsed.to_partition(), sample());
    }

    #[test]
    fn rgs_rejects_growth_violation() {
        assert!(matches!(
            RestrictedGrowthString::new(vec![1, 0]),
            Err(PartitionError::InvalidGrowth {
                position: 1,
                value: 1
            })
        ));
        assert!(matches!(
            RestrictedGrowthString::new(vec![0, 2]),
            Err(PartitionError::InvalidGrowth {
                position: 2,
                value: 2
            })
        ));
        assert!("[0,1,3]".parse::<RestrictedGrowthString>().is_err());
    }

    #[test]
    fn partner_examples() {
        let d = sample().to_arc_diagram();
        assert_eq!(d.partner(9), Ok(6));
        assert_eq!(d.partner(4), Ok(0));
        assert_eq!(
            SetPartition::single_block(3).to_arc_diagram().partner(3),
            Ok(2)
        );
        assert!(matches!(
            d.partner(10),
            Err(PartitionError::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            d.partner(0),
            Err(PartitionError::VertexOutOfRange { .. })
        ));
    }

    fn count_crossings(arcs: &[GeneralizedArc]) -> usize {
        let mut c = 0;
        for (x, a) in arcs.iter().enumerate() {
            for b in &arcs[x + 1..] {
                if a.crosses(b) {
                    c += 1;
                }
            }
        }
        c
    }

    #[test]
    fn extended_arcs_of_two_singletons() {
        let d = SetPartition::singletons(2).to_arc_diagram();
        let arcs = d.extended_arcs();
        let expected = [
            GeneralizedArc::new(-2, 2),
            GeneralizedArc::new(-1, 1),
            GeneralizedArc::new(1, 5),
            GeneralizedArc::new(2, 4),
        ];
        assert_eq!(arcs, expected);
        let crossing: Vec<_> = arcs
            .iter()
            .enumerate()
            .flat_map(|(x, a)| {
                arcs[x + 1..]
                    .iter()
                    .filter(move |b| a.crosses(b))
                    .map(move |b| (*a, *b))
            })
            .collect();
        assert_eq!(
            crossing,
            vec![(GeneralizedArc::new(-2, 2), GeneralizedArc::new(1, 5))]
        );
    }

    #[test]
    fn extended_arcs_crossing_totals() {
        for n in 1..=6 {
            let d = SetPartition::single_block(n).to_arc_diagram();
            assert_eq!(count_crossings(&d.extended_arcs()), 0);
        }
        assert_eq!(
            count_crossings(&sample().to_arc_diagram().extended_arcs()),
            15
        );
    }

    #[test]
    fn enumeration_small_cases() {
        let all: Vec<_> = enumerate(3, None).unwrap().map(|p| p.to_string()).collect();
        assert_eq!(all, vec!["123", "12|3", "13|2", "1|23", "1|2|3"]);
        assert_eq!(enumerate(4, Some(2)).unwrap().count(), 7);
        let one: Vec<_> = enumerate(1, None).unwrap().collect();
        assert_eq!(one, vec![SetPartition::single_block(1)]);
        assert!(matches!(
            enumerate(3, Some(0)),
            Err(PartitionError::BlockCountOutOfRange { .. })
        ));
        assert!(matches!(
            enumerate(3, Some(4)),
            Err(PartitionError::BlockCountOutOfRange { .. })
        ));
        assert!(enumerate(0, None).is_err());
    }

    #[test]
    fn prefix_streams_cover_everything_in_order() {
        for n in 1..=7 {
            let full: Vec<_> = enumerate(n, None).unwrap().collect();
            for len in 1..=3 {
                let stitched: Vec<_> = rgs_prefixes(n, len)
                    .iter()
                    .flat_map(|pre| enumerate_with_prefix(n, None, pre).unwrap())
                    .collect();
                assert_eq!(stitched, full, "n={n} len={len}");
            }
            for k in 1..=n {
                let full: Vec<_> = enumerate(n, Some(k)).unwrap().collect();
                let stitched: Vec<_> = rgs_prefixes(n, 2)
                    .iter()
                    .flat_map(|pre| enumerate_with_prefix(n, Some(k), pre).unwrap())
                    .collect();
                assert_eq!(stitched, full, "n={n} k={k}");
            }
        }
    }
}
