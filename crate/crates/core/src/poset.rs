//! The Bruhat-Chevalley-Renner order on `Π_n`: `A <= B` iff the
//! rank-control matrix of `A` is entrywise at most that of `B`.

use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::PosetError;
use crate::matrix::{rank_control_of, RankControlMatrix};
use crate::partition::{enumerate, SetPartition};
use crate::poly::IntPolynomial;
use crate::stats::depth_index;

/// Largest `n` accepted by [`Poset::build`]; the relation is all-pairs.
pub const POSET_LIMIT: usize = 7;

#[derive(Clone, Debug)]
pub struct Poset {
    n: usize,
    elements: Vec<SetPartition>,
    rank_control: Vec<RankControlMatrix>,
    // above[x] has bit y set iff x < y strictly
    above: Vec<FixedBitSet>,
    covers: Vec<(usize, usize)>,
    rank: Vec<usize>,
}

impl Poset {
    /// Elements of `Π_n` in RGS order, compared entrywise on rank-control
    /// matrices, with covers from the transitive reduction.
    pub fn build(n: usize) -> Result<Self, PosetError> {
        if n == 0 {
            return Err(PosetError::Empty);
        }
        if n > POSET_LIMIT {
            return Err(PosetError::TooLarge {
                n,
                limit: POSET_LIMIT,
            });
        }
        let elements: Vec<SetPartition> = enumerate(n, None).expect("n >= 1").collect();
        let rank_control: Vec<RankControlMatrix> = elements
            .iter()
            .map(|p| rank_control_of(&p.to_arc_diagram()))
            .collect();
        let rank = elements
            .iter()
            .map(|p| depth_index(&p.to_arc_diagram()))
            .collect();
        let size = elements.len();
        let above: Vec<FixedBitSet> = (0..size)
            .into_par_iter()
            .map(|x| {
                let mut set = FixedBitSet::with_capacity(size);
                for y in 0..size {
                    if x != y && entrywise_leq(&rank_control[x], &rank_control[y]) {
                        set.insert(y);
                    }
                }
                set
            })
            .collect();
        let covers = transitive_reduction(&above);
        Ok(Poset {
            n,
            elements,
            rank_control,
            above,
            covers,
            rank,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[SetPartition] {
        &self.elements
    }

    pub fn rank_control(&self, x: usize) -> &RankControlMatrix {
        &self.rank_control[x]
    }

    pub fn index_of(&self, p: &SetPartition) -> Option<usize> {
        self.elements.iter().position(|e| e == p)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        x == y || self.above[x].contains(y)
    }

    pub fn less(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    /// Cover pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Depth index of each element.
    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    /// Rank generating polynomial `Σ_x q^{rank(x)}`.
    pub fn rank_polynomial(&self) -> IntPolynomial {
        let mut counts = vec![0u64; self.n * (self.n - 1) / 2 + 1];
        for &r in &self.rank {
            counts[r] += 1;
        }
        IntPolynomial::from_counts(&counts)
    }

    pub fn check_graded(&self) -> GradedReport {
        let size = self.len();
        let minima: Vec<usize> = (0..size)
            .filter(|&y| (0..size).all(|x| !self.less(x, y)))
            .collect();
        let maxima: Vec<usize> = (0..size).filter(|&x| self.above[x].is_clear()).collect();
        let mut violations = Vec::new();
        let bottom = SetPartition::singletons(self.n);
        let top = SetPartition::single_block(self.n);
        if minima.len() != 1 || self.elements[minima[0]] != bottom || self.rank[minima[0]] != 0 {
            violations.push(GradedViolation::Minimum(
                minima
                    .iter()
                    .map(|&x| self.elements[x].to_short_string())
                    .collect(),
            ));
        }
        let top_rank = self.n * (self.n - 1) / 2;
        if maxima.len() != 1 || self.elements[maxima[0]] != top || self.rank[maxima[0]] != top_rank
        {
            violations.push(GradedViolation::Maximum(
                maxima
                    .iter()
                    .map(|&x| self.elements[x].to_short_string())
                    .collect(),
            ));
        }
        for &(x, y) in &self.covers {
            if self.rank[y] != self.rank[x] + 1 {
                violations.push(GradedViolation::Cover {
                    lower: self.elements[x].to_short_string(),
                    upper: self.elements[y].to_short_string(),
                    lower_rank: self.rank[x],
                    upper_rank: self.rank[y],
                });
            }
        }
        GradedReport {
            n: self.n,
            max_rank: self.rank.iter().copied().max().unwrap_or(0),
            violations,
        }
    }

    pub fn export(&self, format: ExportFormat) -> String {
        match format {
            ExportFormat::Dot => self.to_dot(),
            ExportFormat::Json => {
                serde_json::to_string_pretty(&self.to_json()).expect("serializable")
            }
        }
    }

    /// Hasse diagram as a DOT digraph; nodes in RGS order, edges bottom-up.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph bcr_order_{} {{", self.n).unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        for (x, p) in self.elements.iter().enumerate() {
            writeln!(
                out,
                "  n{x} [label=\"{} ({})\"];",
                p.to_short_string(),
                self.rank[x]
            )
            .unwrap();
        }
        for &(x, y) in &self.covers {
            writeln!(out, "  n{x} -> n{y};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            n: self.n,
            elements: self
                .elements
                .iter()
                .enumerate()
                .map(|(x, p)| ElementJson {
                    index: x,
                    partition: p.to_short_string(),
                    rgs: p.to_rgs().as_slice().to_vec(),
                    rank: self.rank[x],
                })
                .collect(),
            covers: self.covers.iter().map(|&(x, y)| [x, y]).collect(),
        }
    }
}

fn entrywise_leq(a: &RankControlMatrix, b: &RankControlMatrix) -> bool {
    a.as_slice().iter().zip(b.as_slice()).all(|(x, y)| x <= y)
}

/// `x ⋖ y` iff `x < y` and no `z` with `x < z < y`.
fn transitive_reduction(above: &[FixedBitSet]) -> Vec<(usize, usize)> {
    let mut covers = Vec::new();
    for (x, up) in above.iter().enumerate() {
        let mut through = FixedBitSet::with_capacity(above.len());
        for z in up.ones() {
            through.union_with(&above[z]);
        }
        let mut direct = up.clone();
        direct.difference_with(&through);
        covers.extend(direct.ones().map(|y| (x, y)));
    }
    covers
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl std::str::FromStr for ExportFormat {
    type Err = PosetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            other => Err(PosetError::UnsupportedFormat(other.into())),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PosetJson {
    pub n: usize,
    pub elements: Vec<ElementJson>,
    pub covers: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ElementJson {
    pub index: usize,
    pub partition: String,
    pub rgs: Vec<usize>,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum GradedViolation {
    /// The minimal elements, when not exactly the all-singletons partition.
    Minimum(Vec<String>),
    Maximum(Vec<String>),
    Cover {
        lower: String,
        upper: String,
        lower_rank: usize,
        upper_rank: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedReport {
    pub n: usize,
    pub max_rank: usize,
    pub violations: Vec<GradedViolation>,
}

impl GradedReport {
    pub fn is_graded(&self) -> bool {
        self.violations.is_empty()
    }
}
