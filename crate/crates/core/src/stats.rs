//! Statistics on set partitions read off the (extended) arc diagram.
//!
//! Vertex-indexed sequences returned here are 0-based in Rust with entry
//! `v - 1` belonging to vertex `v`.

use serde::{Deserialize, Serialize};

use crate::partition::{ArcDiagram, SetPartition};

/// How [`intertwining`] counts crossings.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum IntertwiningMethod {
    /// Count crossing pairs in the extended arc diagram.
    #[default]
    ExtendedArcs,
    /// Sum, over all pairs of blocks, the number of cross-block pairs with
    /// nothing from either block strictly between them.
    BlockPairs,
}

/// Intertwining number: the number of crossings of the extended arc diagram.
pub fn intertwining(d: &ArcDiagram, method: IntertwiningMethod) -> usize {
    match method {
        IntertwiningMethod::ExtendedArcs => {
            let arcs = d.extended_arcs();
            let mut count = 0;
            for (x, a) in arcs.iter().enumerate() {
                count += arcs[x + 1..].iter().filter(|b| a.crosses(b)).count();
            }
            count
        }
        IntertwiningMethod::BlockPairs => {
            let p = d.to_partition();
            let blocks = p.blocks();
            let mut total = 0;
            for (x, b) in blocks.iter().enumerate() {
                for c in &blocks[x + 1..] {
                    total += block_pair_intertwining(b, c);
                }
            }
            total
        }
    }
}

/// Pairs `(b, c)` in `B × C` with no element of `B ∪ C` strictly between
/// them. On the merged sorted sequence these are exactly the adjacent
/// positions whose elements come from different blocks.
pub fn block_pair_intertwining(b: &[usize], c: &[usize]) -> usize {
    let (mut x, mut y) = (0, 0);
    let mut last: Option<bool> = None;
    let mut count = 0;
    while x < b.len() || y < c.len() {
        let from_b = y >= c.len() || (x < b.len() && b[x] < c[y]);
        if from_b {
            x += 1;
        } else {
            y += 1;
        }
        if last.is_some_and(|l| l != from_b) {
            count += 1;
        }
        last = Some(from_b);
    }
    count
}

/// Crossings of the generalized arc ending at each vertex `v` with the
/// generalized arcs whose left endpoint lies strictly between the partner of
/// `v` and `v`.
pub fn partial_intertwining(d: &ArcDiagram) -> Vec<usize> {
    let arcs = d.extended_arcs();
    let partners = d.partners();
    (1..=d.n())
        .map(|v| {
            let u = partners[v];
            let vi = v as i64;
            let ending =
                crate::partition::GeneralizedArc::new(if u == 0 { -vi } else { u as i64 }, vi);
            arcs.iter()
                .filter(|g| (u as i64) < g.left && g.left < vi && ending.crosses(g))
                .count()
        })
        .collect()
}

/// Number of arcs passing strictly above each vertex.
pub fn vertex_depths(d: &ArcDiagram) -> Vec<usize> {
    let arcs = d.arcs();
    (1..=d.n())
        .map(|v| arcs.iter().filter(|&&(i, j)| i < v && v < j).count())
        .collect()
}

/// Number of arcs strictly nesting over the given arc.
fn arc_depth(arcs: &[(usize, usize)], (u, v): (usize, usize)) -> usize {
    arcs.iter().filter(|&&(i, j)| i < u && v < j).count()
}

/// Depth index:
/// `Σ_{i=1}^{#arcs} (n − i) − Σ_v depth(v) + Σ_α depth(α)`.
pub fn depth_index(d: &ArcDiagram) -> usize {
    let n = d.n();
    let arcs = d.arcs();
    let first: usize = (1..=arcs.len()).map(|i| n - i).sum();
    let vertices: usize = vertex_depths(d).iter().sum();
    let nested: usize = arcs.iter().map(|&a| arc_depth(&arcs, a)).sum();
    first + nested - vertices
}

/// Per-vertex depth index: the partner `u` of `v` plus the number of arcs
/// `(i, j)` with `u < i < j < v`.
pub fn partial_depth_index(d: &ArcDiagram) -> Vec<usize> {
    let arcs = d.arcs();
    let partners = d.partners();
    (1..=d.n())
        .map(|v| {
            let u = partners[v];
            u + arcs.iter().filter(|&&(i, j)| u < i && j < v).count()
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalStats {
    pub dimension_exponent: usize,
    pub nestings: usize,
    pub crossings: usize,
}

pub fn classical_stats(d: &ArcDiagram) -> ClassicalStats {
    let arcs = d.arcs();
    let mut crossings = 0;
    for (x, &(i, j)) in arcs.iter().enumerate() {
        for &(k, l) in &arcs[x + 1..] {
            if (i < k && k < j && j < l) || (k < i && i < l && l < j) {
                crossings += 1;
            }
        }
    }
    ClassicalStats {
        dimension_exponent: vertex_depths(d).iter().sum(),
        nestings: arcs.iter().map(|&a| arc_depth(&arcs, a)).sum(),
        crossings,
    }
}

/// `Σ_B (max B − min B + 1) − n`.
pub fn dimension_exponent_by_blocks(p: &SetPartition) -> usize {
    let spans: usize = p
        .blocks()
        .iter()
        .map(|b| b.last().unwrap() - b[0] + 1)
        .sum();
    spans - p.n()
}

/// `Σ_i (i − 1)·|A_i|` over blocks ordered by minima.
pub fn dual_major_index(p: &SetPartition) -> usize {
    p.blocks()
        .iter()
        .enumerate()
        .map(|(i, b)| i * b.len())
        .sum()
}

/// Parviainen's bijection: elements with equal partial intertwining number
/// form one block of the image.
pub fn parviainen_phi(p: &SetPartition) -> SetPartition {
    let partial = partial_intertwining(&p.to_arc_diagram());
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (idx, value) in partial.into_iter().enumerate() {
        groups.entry(value).or_default().push(idx + 1);
    }
    SetPartition::from_blocks(groups.into_values().collect())
        .expect("grouping a ground set yields a partition")
}

/// Crossing index
/// `Σ_{i=1}^{#arcs} (n − i) − Σ_β depth(β) − Σ_α cross(α)`.
///
/// `depth(β)` counts arcs spanning the whole chain `β`; `cross(α)` counts
/// the chains other than the one containing `α` with one vertex strictly
/// inside `α` and another outside it, so a chain crossed twice counts once.
pub fn crossing_index(d: &ArcDiagram) -> usize {
    let n = d.n();
    let arcs = d.arcs();
    let p = d.to_partition();
    let first: usize = (1..=arcs.len()).map(|i| n - i).sum();
    let chain_depth: usize = p
        .blocks()
        .iter()
        .map(|b| {
            let (lo, hi) = (b[0], *b.last().unwrap());
            arcs.iter().filter(|&&(i, j)| i < lo && hi < j).count()
        })
        .sum();
    let cross: usize = arcs
        .iter()
        .map(|&(u, v)| {
            p.blocks()
                .iter()
                .filter(|b| !b.contains(&u))
                .filter(|b| b.iter().any(|&x| u < x && x < v) && b.iter().any(|&x| x < u || v < x))
                .count()
        })
        .sum();
    first - chain_depth - cross
}

/// Every statistic of one partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatReport {
    pub n: usize,
    pub intertwining: usize,
    pub depth_index: usize,
    pub dual_major: usize,
    pub dimension_exponent: usize,
    pub nestings: usize,
    pub crossings: usize,
    pub crossing_index: usize,
    pub partial_intertwining: Vec<usize>,
    pub partial_depth: Vec<usize>,
}

impl StatReport {
    pub fn new(p: &SetPartition) -> Self {
        let d = p.to_arc_diagram();
        let classical = classical_stats(&d);
        StatReport {
            n: p.n(),
            intertwining: intertwining(&d, IntertwiningMethod::ExtendedArcs),
            depth_index: depth_index(&d),
            dual_major: dual_major_index(p),
            dimension_exponent: classical.dimension_exponent,
            nestings: classical.nestings,
            crossings: classical.crossings,
            crossing_index: crossing_index(&d),
            partial_intertwining: partial_intertwining(&d),
            partial_depth: partial_depth_index(&d),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> SetPartition {
        "18|2569|37|4".parse().unwrap()
    }

    fn two_chain() -> ArcDiagram {
        ArcDiagram::new(4, &[(1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn intertwining_examples() {
        let d = sample().to_arc_diagram();
        assert_eq!(intertwining(&d, IntertwiningMethod::ExtendedArcs), 15);
        assert_eq!(intertwining(&d, IntertwiningMethod::BlockPairs), 15);
        for n in 1..=7 {
            let one = SetPartition::single_block(n).to_arc_diagram();
            assert_eq!(intertwining(&one, IntertwiningMethod::ExtendedArcs), 0);
            assert_eq!(intertwining(&one, IntertwiningMethod::BlockPairs), 0);
        }
        let s = SetPartition::singletons(4).to_arc_diagram();
        assert_eq!(intertwining(&s, IntertwiningMethod::ExtendedArcs), 6);
        assert_eq!(intertwining(&s, IntertwiningMethod::BlockPairs), 6);
    }

    #[test]
    fn block_pair_cardinality() {
        assert_eq!(block_pair_intertwining(&[1], &[2]), 1);
        assert_eq!(block_pair_intertwining(&[1, 3], &[2]), 2);
        assert_eq!(block_pair_intertwining(&[1, 4], &[2, 3]), 2);
        assert_eq!(block_pair_intertwining(&[1, 2], &[3, 4]), 1);
    }

    #[test]
    fn partial_intertwining_examples() {
        assert_eq!(
            partial_intertwining(&sample().to_arc_diagram()),
            vec![0, 1, 2, 3, 2, 0, 2, 3, 2]
        );
        assert_eq!(
            partial_intertwining(&SetPartition::singletons(5).to_arc_diagram()),
            vec![0, 1, 2, 3, 4]
        );
        assert_eq!(
            partial_intertwining(&SetPartition::single_block(5).to_arc_diagram()),
            vec![0; 5]
        );
    }

    #[test]
    fn depth_index_examples() {
        assert_eq!(depth_index(&sample().to_arc_diagram()), 21);
        assert_eq!(depth_index(&two_chain()), 5);
        assert_eq!(
            depth_index(&SetPartition::singletons(6).to_arc_diagram()),
            0
        );
    }

    #[test]
    fn partial_depth_examples() {
        assert_eq!(
            partial_depth_index(&sample().to_arc_diagram()),
            vec![0, 0, 0, 0, 2, 5, 4, 4, 6]
        );
        assert_eq!(
            partial_depth_index(&SetPartition::singletons(5).to_arc_diagram()),
            vec![0; 5]
        );
        assert_eq!(
            partial_depth_index(&SetPartition::single_block(4).to_arc_diagram()),
            vec![0, 1, 2, 3]
        );
    }

    #[test]
    fn classical_examples() {
        let c = classical_stats(&sample().to_arc_diagram());
        assert_eq!((c.dimension_exponent, c.nestings), (13, 4));
        assert_eq!(dimension_exponent_by_blocks(&sample()), 13);
        let c = classical_stats(&SetPartition::singletons(4).to_arc_diagram());
        assert_eq!((c.dimension_exponent, c.nestings, c.crossings), (0, 0, 0));
        // 14|23: vertices 2 and 3 each sit under (1,4); (2,3) nests once.
        let d = ArcDiagram::new(4, &[(1, 4), (2, 3)]).unwrap();
        let c = classical_stats(&d);
        assert_eq!((c.dimension_exponent, c.nestings, c.crossings), (2, 1, 0));
        assert_eq!(dimension_exponent_by_blocks(&d.to_partition()), 2);
        let d = ArcDiagram::new(4, &[(1, 3), (2, 4)]).unwrap();
        assert_eq!(classical_stats(&d).crossings, 1);
    }

    #[test]
    fn dual_major_examples() {
        let p: SetPartition = "16|2|3579|48".parse().unwrap();
        assert_eq!(dual_major_index(&p), 15);
        assert_eq!(dual_major_index(&SetPartition::single_block(5)), 0);
        assert_eq!(dual_major_index(&SetPartition::singletons(4)), 6);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(parviainen_phi(&sample()).to_string(), "16|2|3579|48");
        assert_eq!(
            parviainen_phi(&SetPartition::singletons(5)),
            SetPartition::singletons(5)
        );
        assert_eq!(
            parviainen_phi(&SetPartition::single_block(5)),
            SetPartition::single_block(5)
        );
    }

    #[test]
    fn crossing_index_examples() {
        assert_eq!(crossing_index(&sample().to_arc_diagram()), 21);
        assert_eq!(
            crossing_index(&SetPartition::singletons(5).to_arc_diagram()),
            0
        );
        assert_eq!(crossing_index(&two_chain()), 5);
    }

    #[test]
    fn report_invariants_on_sample() {
        let r = StatReport::new(&sample());
        assert_eq!(r.intertwining + r.depth_index, 36);
        assert_eq!(r.crossing_index, r.depth_index);
        assert_eq!(r.partial_intertwining.iter().sum::<usize>(), r.intertwining);
        assert_eq!(r.partial_depth.iter().sum::<usize>(), r.depth_index);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["intertwining"], 15);
        assert_eq!(
            json["partial_depth"],
            serde_json::json!([0, 0, 0, 0, 2, 5, 4, 4, 6])
        );
    }
}
