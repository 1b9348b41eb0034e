//! Linked partitions of `[n] = {1, ..., n}`.
//!
//! In the linear representation a linked partition is a set of arcs
//! `(l, r)` with `l < r`, subject to one rule: no vertex is the right
//! endpoint of two arcs. Equivalently it is a collection of nearly
//! disjoint blocks covering `[n]`: two blocks may share at most one
//! element, and only when that element is the minimum of exactly one of
//! them (the one of size at least two).
//!
//! Crossings and nestings are counted over the arcs. A `k`-crossing is a
//! chain `(i_1, j_1), ..., (i_k, j_k)` with `i_1 < ... < i_k < j_1 < ... <
//! j_k`, a `k`-nesting one with `i_1 < ... < i_k < j_k < ... < j_1`; both
//! notions are strict, so arcs sharing a left endpoint or meeting
//! head-to-tail never count.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// Left and right endpoint sets `(S, T)` of an arc diagram.
pub type EndpointSets = (BTreeSet<usize>, BTreeSet<usize>);

/// An arc of the linear representation; `left < right` always holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    left: usize,
    right: usize,
}

impl Arc {
    pub fn new(left: usize, right: usize) -> Result<Arc> {
        if left == 0 || left >= right {
            return Err(Error::InvalidArc(format!(
                "need 1 <= left < right, got {left}-{right}"
            )));
        }
        Ok(Arc { left, right })
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    /// Strict crossing: one arc starts strictly inside the other and ends
    /// strictly outside it.
    pub fn crosses(&self, other: &Arc) -> bool {
        let (a, b) = if self.left < other.left {
            (self, other)
        } else {
            (other, self)
        };
        a.left < b.left && b.left < a.right && a.right < b.right
    }

    /// Strict nesting: one arc sits strictly inside the other.
    pub fn nests(&self, other: &Arc) -> bool {
        let (a, b) = if self.left < other.left {
            (self, other)
        } else {
            (other, self)
        };
        a.left < b.left && b.right < a.right
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.left, self.right)
    }
}

/// A linked partition of `[n]` in linear representation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinkedPartition {
    n: usize,
    arcs: Vec<Arc>, // sorted by (left, right); right endpoints distinct
}

impl LinkedPartition {
    pub fn new(n: usize, mut arcs: Vec<Arc>) -> Result<LinkedPartition> {
        for arc in &arcs {
            if arc.right > n {
                return Err(Error::InvalidArc(format!(
                    "arc {arc} reaches past the ground set [{n}]"
                )));
            }
        }
        arcs.sort();
        let mut rights = BTreeSet::new();
        for arc in &arcs {
            if !rights.insert(arc.right) {
                return Err(Error::InDegree { vertex: arc.right });
            }
        }
        Ok(LinkedPartition { n, arcs })
    }

    pub fn arc_free(n: usize) -> LinkedPartition {
        LinkedPartition {
            n,
            arcs: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Arcs in canonical order, sorted by (left, right).
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// The nearly disjoint block view: every left endpoint gathers itself
    /// and all its right partners, untouched vertices become singletons.
    pub fn to_blocks(&self) -> BlockPartition {
        let mut blocks: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        let mut touched = BTreeSet::new();
        for arc in &self.arcs {
            blocks
                .entry(arc.left)
                .or_insert_with(|| BTreeSet::from([arc.left]))
                .insert(arc.right);
            touched.insert(arc.left);
            touched.insert(arc.right);
        }
        for v in 1..=self.n {
            if !touched.contains(&v) {
                blocks.insert(v, BTreeSet::from([v]));
            }
        }
        BlockPartition::new(self.n, blocks.into_values().collect())
            .expect("blocks of a valid linked partition are nearly disjoint")
    }

    /// `(cr, ne)`: the largest k for which a k-crossing / k-nesting exists
    /// (1 when there is any arc at all, 0 when there is none).
    ///
    /// A set of arcs forms a k-nesting exactly when it is pairwise nested,
    /// which makes "nested inside" a chain condition, solved by dynamic
    /// programming. Pairwise crossing likewise characterizes k-crossings,
    /// but crossing is not transitive, so that side is a maximum clique
    /// search over the (tiny) crossing graph.
    pub fn crossing_nesting(&self) -> (usize, usize) {
        let arcs = &self.arcs;
        if arcs.is_empty() {
            return (0, 0);
        }

        // nesting: arcs are sorted by (left, right), so any chain of
        // strictly later-starting, strictly earlier-ending arcs scans left
        // to right
        let mut deep = vec![1usize; arcs.len()];
        for i in 0..arcs.len() {
            for j in 0..i {
                if arcs[j].left < arcs[i].left && arcs[i].right < arcs[j].right {
                    deep[i] = deep[i].max(deep[j] + 1);
                }
            }
        }
        let ne = deep.iter().copied().max().unwrap();

        // crossing: max clique with a simple size bound
        fn grow(arcs: &[Arc], cands: &[usize], size: usize, best: &mut usize) {
            *best = (*best).max(size);
            if size + cands.len() <= *best {
                return;
            }
            for (idx, &v) in cands.iter().enumerate() {
                let next: Vec<usize> = cands[idx + 1..]
                    .iter()
                    .copied()
                    .filter(|&u| arcs[v].crosses(&arcs[u]))
                    .collect();
                grow(arcs, &next, size + 1, best);
            }
        }
        let mut cr = 0;
        let all: Vec<usize> = (0..arcs.len()).collect();
        grow(arcs, &all, 0, &mut cr);
        (cr, ne)
    }

    /// `(S, T)`: the sets of left and right endpoints.
    pub fn endpoints(&self) -> EndpointSets {
        let left = self.arcs.iter().map(|a| a.left).collect();
        let right = self.arcs.iter().map(|a| a.right).collect();
        (left, right)
    }

    /// True when no vertex is both a left and a right endpoint; these are
    /// exactly the linear representations of ordinary set partitions.
    pub fn is_front_representation(&self) -> bool {
        let (left, right) = self.endpoints();
        left.intersection(&right).next().is_none()
    }
}

impl fmt::Display for LinkedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.n)?;
        if !self.arcs.is_empty() {
            let strs: Vec<String> = self.arcs.iter().map(|a| a.to_string()).collect();
            write!(f, " {}", strs.join(","))?;
        }
        Ok(())
    }
}

/// Checks `(cr, ne)` by scanning every subset of arcs for the chain
/// conditions verbatim. Exponential on purpose; limited to 20 arcs.
pub fn crossing_nesting_oracle(p: &LinkedPartition) -> Result<(usize, usize)> {
    let arcs = p.arcs();
    if arcs.len() > 20 {
        return Err(Error::SizeCap {
            what: "crossing_nesting_oracle arcs",
            max: 20,
            got: arcs.len(),
        });
    }
    let (mut cr, mut ne) = (0usize, 0usize);
    for mask in 1u32..(1 << arcs.len()) {
        let chosen: Vec<Arc> = (0..arcs.len())
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| arcs[i])
            .collect();
        // arcs are stored sorted by (left, right), so chosen is too
        let k = chosen.len();
        let lefts_strict = chosen.windows(2).all(|w| w[0].left < w[1].left);
        if !lefts_strict {
            continue;
        }
        let rights_up = chosen.windows(2).all(|w| w[0].right < w[1].right);
        if rights_up && chosen[k - 1].left < chosen[0].right {
            cr = cr.max(k);
        }
        let rights_down = chosen.windows(2).all(|w| w[0].right > w[1].right);
        if rights_down {
            ne = ne.max(k);
        }
    }
    Ok((cr, ne))
}

/// A set of nearly disjoint blocks covering `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockPartition {
    n: usize,
    blocks: Vec<BTreeSet<usize>>, // sorted by minimum
}

impl BlockPartition {
    /// Validates the nearly disjoint conditions: every pair of blocks
    /// shares at most... in fact any shared element `t` must be the
    /// minimum of exactly one of the two blocks, and that block must have
    /// at least two elements.
    pub fn new(n: usize, mut blocks: Vec<BTreeSet<usize>>) -> Result<BlockPartition> {
        let mut seen = BTreeSet::new();
        for block in &blocks {
            let Some(&min) = block.first() else {
                return Err(Error::InvalidBlocks("empty block".into()));
            };
            let &max = block.last().unwrap();
            if min < 1 || max > n {
                return Err(Error::InvalidBlocks(format!(
                    "block {} leaves the ground set [{n}]",
                    fmt_block(block)
                )));
            }
            seen.extend(block.iter().copied());
        }
        if seen.len() != n {
            let missing = (1..=n).find(|v| !seen.contains(v)).unwrap();
            return Err(Error::InvalidBlocks(format!(
                "blocks do not cover [{n}]: {missing} is missing"
            )));
        }
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                let (a, b) = (&blocks[i], &blocks[j]);
                for &t in a.intersection(b) {
                    let ok_a = t == *a.first().unwrap() && a.len() > 1 && t != *b.first().unwrap();
                    let ok_b = t == *b.first().unwrap() && b.len() > 1 && t != *a.first().unwrap();
                    if !(ok_a || ok_b) {
                        return Err(Error::NotNearlyDisjoint {
                            a: fmt_block(a),
                            b: fmt_block(b),
                            t,
                        });
                    }
                }
            }
        }
        // distinct valid blocks have distinct minima, so this order is total
        blocks.sort_by_key(|b| *b.first().unwrap());
        Ok(BlockPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Blocks in canonical order (sorted by minimum).
    pub fn blocks(&self) -> &[BTreeSet<usize>] {
        &self.blocks
    }

    /// The linear representation: the minimum of every non-singleton block
    /// sends an arc to each other element.
    pub fn to_arcs(&self) -> LinkedPartition {
        let mut arcs = Vec::new();
        for block in &self.blocks {
            let &min = block.first().unwrap();
            for &v in block.iter().skip(1) {
                arcs.push(Arc::new(min, v).expect("block elements exceed their minimum"));
            }
        }
        LinkedPartition::new(self.n, arcs)
            .expect("nearly disjoint blocks give each vertex at most one incoming arc")
    }
}

fn fmt_block(block: &BTreeSet<usize>) -> String {
    let strs: Vec<String> = block.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", strs.join(","))
}

impl fmt::Display for BlockPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.n)?;
        if !self.blocks.is_empty() {
            write!(f, " ")?;
            for block in &self.blocks {
                write!(f, "{}", fmt_block(block))?;
            }
        }
        Ok(())
    }
}

/// Streams every linked partition of `[n]` in lexicographic order of the
/// sorted arc lists. There are exactly `n!` of them: each vertex
/// independently picks at most one smaller left partner.
pub fn enumerate_linked(n: usize) -> Result<LinkedEnumerator> {
    if !(1..=9).contains(&n) {
        return Err(Error::SizeCap {
            what: "enumerate_linked n",
            max: 9,
            got: n,
        });
    }
    let mut all = Vec::new();
    for left in 1..=n {
        for right in left + 1..=n {
            all.push(Arc { left, right });
        }
    }
    Ok(LinkedEnumerator {
        n,
        all,
        right_used: vec![false; n + 1],
        stack: Vec::new(),
        next_try: 0,
        started: false,
    })
}

/// Depth-first walk over arc sets: emitting each set before its
/// extensions yields exactly lexicographic order on sorted arc lists.
pub struct LinkedEnumerator {
    n: usize,
    all: Vec<Arc>,
    right_used: Vec<bool>,
    stack: Vec<usize>,
    next_try: usize,
    started: bool,
}

impl LinkedEnumerator {
    fn current(&self) -> LinkedPartition {
        LinkedPartition {
            n: self.n,
            arcs: self.stack.iter().map(|&i| self.all[i]).collect(),
        }
    }
}

impl Iterator for LinkedEnumerator {
    type Item = LinkedPartition;

    fn next(&mut self) -> Option<LinkedPartition> {
        if !self.started {
            self.started = true;
            return Some(self.current());
        }
        loop {
            while self.next_try < self.all.len() {
                let arc = self.all[self.next_try];
                if !self.right_used[arc.right] {
                    self.right_used[arc.right] = true;
                    self.stack.push(self.next_try);
                    self.next_try += 1;
                    return Some(self.current());
                }
                self.next_try += 1;
            }
            let top = self.stack.pop()?;
            self.right_used[self.all[top].right] = false;
            self.next_try = top + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(n: usize, arcs: &[(usize, usize)]) -> LinkedPartition {
        LinkedPartition::new(
            n,
            arcs.iter().map(|&(l, r)| Arc::new(l, r).unwrap()).collect(),
        )
        .unwrap()
    }

    fn bp(n: usize, blocks: &[&[usize]]) -> BlockPartition {
        BlockPartition::new(
            n,
            blocks.iter().map(|b| b.iter().copied().collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn arc_validation() {
        assert!(Arc::new(1, 2).is_ok());
        assert!(matches!(Arc::new(2, 2), Err(Error::InvalidArc(_))));
        assert!(matches!(Arc::new(3, 1), Err(Error::InvalidArc(_))));
        assert!(matches!(Arc::new(0, 1), Err(Error::InvalidArc(_))));
    }

    #[test]
    fn in_degree_at_most_one() {
        let arcs = vec![Arc::new(1, 3).unwrap(), Arc::new(2, 3).unwrap()];
        assert!(matches!(
            LinkedPartition::new(3, arcs),
            Err(Error::InDegree { vertex: 3 })
        ));
        let out_of_range = vec![Arc::new(1, 4).unwrap()];
        assert!(matches!(
            LinkedPartition::new(3, out_of_range),
            Err(Error::InvalidArc(_))
        ));
    }

    #[test]
    fn shared_left_endpoints_are_fine() {
        let p = lp(5, &[(1, 3), (1, 5)]);
        assert_eq!(p.arcs().len(), 2);
    }

    #[test]
    fn blocks_of_a_ten_vertex_example() {
        let p = lp(
            10,
            &[(1, 3), (1, 5), (2, 6), (2, 10), (5, 8), (5, 9), (6, 7)],
        );
        let blocks = p.to_blocks();
        assert_eq!(
            blocks,
            bp(10, &[&[1, 3, 5], &[2, 6, 10], &[4], &[5, 8, 9], &[6, 7]])
        );
        assert_eq!(blocks.to_arcs(), p);
    }

    #[test]
    fn nearly_disjoint_validation() {
        // sharing an element that is minimal in both blocks
        assert!(matches!(
            BlockPartition::new(3, vec![BTreeSet::from([1, 2]), BTreeSet::from([1, 3]),]),
            Err(Error::NotNearlyDisjoint { t: 1, .. })
        ));
        // singleton overlapping a block
        assert!(matches!(
            BlockPartition::new(2, vec![BTreeSet::from([1, 2]), BTreeSet::from([2]),]),
            Err(Error::NotNearlyDisjoint { t: 2, .. })
        ));
        // a shared element that is minimal in exactly one block is fine
        assert!(
            BlockPartition::new(3, vec![BTreeSet::from([1, 2]), BTreeSet::from([2, 3])]).is_ok()
        );
        // covering failures
        assert!(matches!(
            BlockPartition::new(3, vec![BTreeSet::from([1, 2])]),
            Err(Error::InvalidBlocks(_))
        ));
        assert!(matches!(
            BlockPartition::new(2, vec![BTreeSet::from([1, 2, 3])]),
            Err(Error::InvalidBlocks(_))
        ));
        assert!(matches!(
            BlockPartition::new(1, vec![BTreeSet::new(), BTreeSet::from([1])]),
            Err(Error::InvalidBlocks(_))
        ));
    }

    #[test]
    fn block_round_trips_are_exhaustive_identities() {
        for n in 1..=6 {
            for p in enumerate_linked(n).unwrap() {
                assert_eq!(p.to_blocks().to_arcs(), p, "partition {p}");
            }
        }
    }

    #[test]
    fn crossing_and_nesting_of_known_examples() {
        let sample = lp(
            10,
            &[(1, 3), (1, 5), (2, 6), (2, 10), (5, 8), (5, 9), (6, 7)],
        );
        assert_eq!(sample.crossing_nesting(), (2, 3));
        assert_eq!(crossing_nesting_oracle(&sample).unwrap(), (2, 3));

        let p = lp(7, &[(1, 2), (1, 3), (1, 5), (1, 6), (2, 4), (2, 7)]);
        assert_eq!(p.crossing_nesting(), (2, 2));
        assert_eq!(crossing_nesting_oracle(&p).unwrap(), (2, 2));

        assert_eq!(lp(4, &[(1, 3), (2, 4)]).crossing_nesting(), (2, 1));
        assert_eq!(lp(4, &[(2, 3)]).crossing_nesting(), (1, 1));
        assert_eq!(LinkedPartition::arc_free(4).crossing_nesting(), (0, 0));
        // head-to-tail arcs neither cross nor nest
        assert_eq!(lp(3, &[(1, 2), (2, 3)]).crossing_nesting(), (1, 1));
        // shared left endpoint never counts
        assert_eq!(lp(3, &[(1, 2), (1, 3)]).crossing_nesting(), (1, 1));
    }

    #[test]
    fn fast_statistics_match_the_oracle_exhaustively() {
        for n in 1..=6 {
            for p in enumerate_linked(n).unwrap() {
                assert_eq!(
                    p.crossing_nesting(),
                    crossing_nesting_oracle(&p).unwrap(),
                    "partition {p}"
                );
            }
        }
    }

    #[test]
    fn oracle_refuses_oversized_inputs() {
        let arcs: Vec<Arc> = (2..=23).map(|r| Arc::new(1, r).unwrap()).collect();
        let p = LinkedPartition::new(23, arcs).unwrap();
        assert!(matches!(
            crossing_nesting_oracle(&p),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn endpoints_and_front_representations() {
        let sample = lp(
            10,
            &[(1, 3), (1, 5), (2, 6), (2, 10), (5, 8), (5, 9), (6, 7)],
        );
        let (s, t) = sample.endpoints();
        assert_eq!(s, BTreeSet::from([1, 2, 5, 6]));
        assert_eq!(t, BTreeSet::from([3, 5, 6, 7, 8, 9, 10]));
        assert!(!sample.is_front_representation());

        let front = lp(10, &[(1, 3), (1, 5), (1, 8), (2, 6), (2, 9), (7, 10)]);
        let (s, t) = front.endpoints();
        assert_eq!(s, BTreeSet::from([1, 2, 7]));
        assert_eq!(t, BTreeSet::from([3, 5, 6, 8, 9, 10]));
        assert!(front.is_front_representation());
        assert_eq!(
            front.to_blocks(),
            bp(10, &[&[1, 3, 5, 8], &[2, 6, 9], &[4], &[7, 10]])
        );
    }

    #[test]
    fn enumeration_counts_factorially() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_linked(n).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 2, 6, 24, 120, 720]);
        assert!(matches!(enumerate_linked(0), Err(Error::SizeCap { .. })));
        assert!(matches!(enumerate_linked(10), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn enumeration_is_lexicographic_and_duplicate_free() {
        let all: Vec<LinkedPartition> = enumerate_linked(3).unwrap().collect();
        let shown: Vec<String> = all.iter().map(|p| p.to_string()).collect();
        assert_eq!(
            shown,
            vec![
                "n=3;",
                "n=3; 1-2",
                "n=3; 1-2,1-3",
                "n=3; 1-2,2-3",
                "n=3; 1-3",
                "n=3; 2-3",
            ]
        );
        for n in 1..=5 {
            let all: Vec<LinkedPartition> = enumerate_linked(n).unwrap().collect();
            let mut sorted = all.clone();
            sorted.sort_by(|a, b| a.arcs().cmp(b.arcs()));
            sorted.dedup();
            assert_eq!(all.len(), sorted.len());
            assert_eq!(all, sorted);
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(
            lp(7, &[(1, 2), (1, 3), (1, 5), (1, 6), (2, 4), (2, 7)]).to_string(),
            "n=7; 1-2,1-3,1-5,1-6,2-4,2-7"
        );
        assert_eq!(LinkedPartition::arc_free(2).to_string(), "n=2;");
        assert_eq!(
            lp(
                10,
                &[(1, 3), (1, 5), (2, 6), (2, 10), (5, 8), (5, 9), (6, 7)]
            )
            .to_blocks()
            .to_string(),
            "n=10; {1,3,5}{2,6,10}{4}{5,8,9}{6,7}"
        );
    }
}
