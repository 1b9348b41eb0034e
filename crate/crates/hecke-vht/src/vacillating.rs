//! Vacillating Hecke tableaux and their bijection with linked partitions.
//!
//! A vacillating Hecke tableau of length `2n` is a sequence of diagrams
//! `d_0, ..., d_2n` (some possibly marked) with empty ends, unmarked odd
//! positions, and local moves that alternate between losing at most one
//! square (into an odd position) and gaining a rook strip (into an even
//! position). A mark at an even position pins a corner and forces the next
//! odd diagram to equal the marked shape.
//!
//! The bijection [`phi`] reads such a sequence into a linked partition of
//! `[n]`. Walking left to right it maintains an increasing tableau:
//!
//! * a changed odd position `2k - 1` undoes one Hecke insertion, either
//!   from the square just lost (`alpha = 1`) or from the mark carried by
//!   the previous diagram (`alpha = 0`); the recovered letter `j` becomes
//!   the arc `(j, k)`;
//! * a changed even position `2k` fills the new rook strip with the stage
//!   number `k` and copies the mark, if any.
//!
//! [`phi_inverse`] runs the same story backwards from the empty tableau at
//! position `2n`, deleting the squares filled with `k` and redoing the
//! Hecke insertion for each arc `(j, k)`. Conjugating every diagram in
//! between ([`psi`]) is an involution on linked partitions that exchanges
//! the crossing and nesting numbers.

use std::fmt;

use crate::error::{Error, Result};
use crate::hecke::{hecke_insert, hecke_reverse_insert, Word};
use crate::linked::{Arc, LinkedPartition};
use crate::shape::{is_rook_strip, HeckeDiagram};
use crate::tableau::HeckeTableau;

/// A validated vacillating sequence of `2n + 1` diagrams.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VacillatingHeckeTableau {
    diagrams: Vec<HeckeDiagram>,
}

impl VacillatingHeckeTableau {
    pub fn new(diagrams: Vec<HeckeDiagram>) -> Result<VacillatingHeckeTableau> {
        if diagrams.len().is_multiple_of(2) {
            return Err(Error::InvalidVht {
                index: diagrams.len(),
                reason: "sequence must hold an odd number of diagrams (2n+1)".into(),
            });
        }
        let last = diagrams.len() - 1;
        if !diagrams[0].shape().is_empty() {
            return Err(Error::InvalidVht {
                index: 0,
                reason: "first diagram must be empty".into(),
            });
        }
        if !diagrams[last].shape().is_empty() || diagrams[last].is_marked() {
            return Err(Error::InvalidVht {
                index: last,
                reason: "last diagram must be empty and unmarked".into(),
            });
        }
        for (i, d) in diagrams.iter().enumerate() {
            if i % 2 == 1 && d.is_marked() {
                return Err(Error::InvalidVht {
                    index: i,
                    reason: "odd positions are unmarked".into(),
                });
            }
        }
        // each even diagram grows from its odd predecessor by a rook strip
        for e in (2..=last).step_by(2) {
            let prev = diagrams[e - 1].shape();
            let cur = diagrams[e].shape();
            if !cur.contains(prev) {
                return Err(Error::InvalidVht {
                    index: e,
                    reason: format!("does not contain its predecessor at index {}", e - 1),
                });
            }
            if !is_rook_strip(cur, prev).expect("containment just checked") {
                return Err(Error::InvalidVht {
                    index: e,
                    reason: format!("difference from index {} is not a rook strip", e - 1),
                });
            }
        }
        // each odd diagram shrinks from its even predecessor by at most
        // one square, or is pinned by a mark
        for o in (1..last).step_by(2) {
            let prev = &diagrams[o - 1];
            let cur = diagrams[o].shape();
            if prev.is_marked() {
                if cur != prev.shape() {
                    return Err(Error::InvalidVht {
                        index: o,
                        reason: format!(
                            "marked diagram at index {} forces equality with its shape",
                            o - 1
                        ),
                    });
                }
            } else {
                if !prev.shape().contains(cur) {
                    return Err(Error::InvalidVht {
                        index: o,
                        reason: format!("not contained in its predecessor at index {}", o - 1),
                    });
                }
                if prev.shape().cell_count() - cur.cell_count() > 1 {
                    return Err(Error::InvalidVht {
                        index: o,
                        reason: format!("loses more than one square from index {}", o - 1),
                    });
                }
            }
        }
        Ok(VacillatingHeckeTableau { diagrams })
    }

    /// The trivial sequence of `2n + 1` empty diagrams.
    pub fn trivial(n: usize) -> VacillatingHeckeTableau {
        VacillatingHeckeTableau {
            diagrams: vec![HeckeDiagram::empty(); 2 * n + 1],
        }
    }

    /// `n`, half the number of moves.
    pub fn half_length(&self) -> usize {
        (self.diagrams.len() - 1) / 2
    }

    pub fn diagrams(&self) -> &[HeckeDiagram] {
        &self.diagrams
    }

    /// `(r, c)`: the largest row count and largest column count over every
    /// diagram of the sequence.
    pub fn extrema(&self) -> (usize, usize) {
        let r = self
            .diagrams
            .iter()
            .map(|d| d.shape().rows())
            .max()
            .unwrap_or(0);
        let c = self
            .diagrams
            .iter()
            .map(|d| d.shape().cols())
            .max()
            .unwrap_or(0);
        (r, c)
    }

    /// Conjugates every diagram. Containment, rook strips, single-square
    /// losses and corner marks all transpose, so the result is again a
    /// valid sequence.
    pub fn conjugate(&self) -> VacillatingHeckeTableau {
        let diagrams = self.diagrams.iter().map(|d| d.conjugate()).collect();
        VacillatingHeckeTableau::new(diagrams)
            .expect("conjugation preserves the vacillating conditions")
    }
}

impl fmt::Display for VacillatingHeckeTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.diagrams.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", strs.join(";"))
    }
}

/// The intermediate states of [`phi`]: tableau and accumulated arcs after
/// every position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiTrace {
    pub tableaux: Vec<HeckeTableau>,
    pub edge_sets: Vec<Vec<Arc>>,
}

struct PhiRun {
    tableaux: Vec<HeckeTableau>,
    edge_sets: Vec<Vec<Arc>>,
    // the letter recovered at each changing odd position
    letters: Vec<Option<usize>>,
}

fn run_phi(v: &VacillatingHeckeTableau) -> PhiRun {
    let n = v.half_length();
    let mut tableaux = vec![HeckeTableau::empty()];
    let mut edges: Vec<Arc> = Vec::new();
    let mut edge_sets = vec![Vec::new()];
    let mut letters = vec![None];
    for i in 1..=2 * n {
        let prev_d = &v.diagrams()[i - 1];
        let cur_d = &v.diagrams()[i];
        let prev_t = tableaux[i - 1].clone();
        let next_t = if cur_d == prev_d {
            prev_t
        } else if i % 2 == 1 {
            let k = i.div_ceil(2);
            let (corner, grew) = match prev_d.mark() {
                Some(c) => (c, false),
                None => {
                    let lost = prev_d
                        .shape()
                        .skew_cells(cur_d.shape())
                        .expect("validated sequences shrink into odd positions");
                    debug_assert_eq!(lost.len(), 1);
                    (lost[0], true)
                }
            };
            let (t, j) = hecke_reverse_insert(prev_t.underlying(), corner, grew)
                .expect("reverse insertion succeeds on a valid vacillating sequence");
            edges.push(Arc::new(j, k).expect("every entry precedes the current stage"));
            letters.push(Some(j));
            HeckeTableau::unmarked(t)
        } else {
            let k = i / 2;
            let strip = cur_d
                .shape()
                .skew_cells(prev_d.shape())
                .expect("validated sequences grow into even positions");
            let filled = prev_t
                .underlying()
                .fill_cells(&strip, k)
                .expect("the stage number exceeds every earlier entry");
            HeckeTableau::new(filled, cur_d.mark()).expect("the mark sits on a corner")
        };
        if i % 2 == 0 || cur_d == prev_d {
            letters.push(None);
        }
        debug_assert_eq!(
            next_t.diagram(),
            *cur_d,
            "tableau shapes track the sequence"
        );
        tableaux.push(next_t);
        edge_sets.push(edges.clone());
    }
    PhiRun {
        tableaux,
        edge_sets,
        letters,
    }
}

/// Reads a vacillating sequence into its linked partition.
pub fn phi(v: &VacillatingHeckeTableau) -> LinkedPartition {
    phi_with_trace(v).0
}

/// Like [`phi`], also returning every intermediate tableau and arc set.
pub fn phi_with_trace(v: &VacillatingHeckeTableau) -> (LinkedPartition, PhiTrace) {
    let run = run_phi(v);
    let p = LinkedPartition::new(v.half_length(), run.edge_sets.last().cloned().unwrap())
        .expect("each stage closes at most one arc");
    (
        p,
        PhiTrace {
            tableaux: run.tableaux,
            edge_sets: run.edge_sets,
        },
    )
}

/// Rebuilds the vacillating sequence of a linked partition by walking from
/// position `2n` down to `0`: position `2k - 1` deletes the squares
/// holding `k`, and position `2k - 2` redoes the Hecke insertion for the
/// arc ending at `k` (a shape-preserving insertion leaves a mark instead
/// of a square).
pub fn phi_inverse(p: &LinkedPartition) -> VacillatingHeckeTableau {
    let n = p.n();
    let mut left_of: Vec<Option<usize>> = vec![None; n + 1];
    for arc in p.arcs() {
        left_of[arc.right()] = Some(arc.left());
    }
    let mut tabs: Vec<HeckeTableau> = vec![HeckeTableau::empty(); 2 * n + 1];
    for k in (1..=n).rev() {
        let stripped = tabs[2 * k]
            .underlying()
            .delete_letter(k)
            .expect("entries of the tableau at position 2k never exceed k");
        tabs[2 * k - 1] = HeckeTableau::unmarked(stripped);
        tabs[2 * k - 2] = match left_of[k] {
            None => tabs[2 * k - 1].clone(),
            Some(j) => {
                let out = hecke_insert(tabs[2 * k - 1].underlying(), j);
                let mark = if out.grew { None } else { Some(out.corner) };
                HeckeTableau::new(out.tableau, mark)
                    .expect("a shape-preserving insertion reports a corner")
            }
        };
    }
    let diagrams = tabs.iter().map(|t| t.diagram()).collect();
    VacillatingHeckeTableau::new(diagrams)
        .expect("the downward construction satisfies the vacillating conditions")
}

/// The conjugation involution on linked partitions: rebuild the
/// vacillating sequence, conjugate every diagram, read it back. Exchanges
/// the crossing and nesting numbers and preserves both endpoint sets.
pub fn psi(p: &LinkedPartition) -> LinkedPartition {
    phi(&phi_inverse(p).conjugate())
}

/// The word sequence underlying [`phi`]: `words[i]` generates the tableau
/// at position `i` via Hecke insertion. Built backwards from the empty
/// word: a changing odd position appends its recovered letter, a changing
/// even position `2k` drops every letter `k`.
pub fn word_trace(v: &VacillatingHeckeTableau) -> Vec<Word> {
    let run = run_phi(v);
    let len = 2 * v.half_length() + 1;
    let mut words: Vec<Vec<usize>> = vec![Vec::new(); len];
    for i in (1..len).rev() {
        let wi = words[i].clone();
        words[i - 1] = if run.tableaux[i - 1] == run.tableaux[i] {
            wi
        } else if i % 2 == 1 {
            let mut w = wi;
            w.push(run.letters[i].expect("a changing odd position recovered a letter"));
            w
        } else {
            let k = i / 2;
            wi.into_iter().filter(|&x| x != k).collect()
        };
    }
    words
        .into_iter()
        .map(|w| Word::new(w).expect("letters are stage numbers"))
        .collect()
}

/// Every vacillating sequence of length `2n`, found by direct search over
/// the local moves (no use of [`phi_inverse`], so bijectivity tests have
/// an independent universe to compare against).
pub fn enumerate_vhts(n: usize) -> Result<Vec<VacillatingHeckeTableau>> {
    if !(1..=7).contains(&n) {
        return Err(Error::SizeCap {
            what: "enumerate_vhts n",
            max: 7,
            got: n,
        });
    }
    let mut out = Vec::new();
    let mut seq = vec![HeckeDiagram::empty()];
    search(n, &mut seq, &mut out);
    Ok(out)
}

fn search(n: usize, seq: &mut Vec<HeckeDiagram>, out: &mut Vec<VacillatingHeckeTableau>) {
    let i = seq.len(); // position being chosen
    if i == 2 * n + 1 {
        out.push(
            VacillatingHeckeTableau::new(seq.clone())
                .expect("the search only takes valid local moves"),
        );
        return;
    }
    // squares still removable: one per remaining odd position
    let budget = n - i.div_ceil(2);
    let prev = seq[i - 1].clone();
    if i % 2 == 1 {
        if prev.is_marked() {
            let pinned = prev.shape().clone();
            if pinned.cell_count() <= budget {
                seq.push(HeckeDiagram::unmarked(pinned));
                search(n, seq, out);
                seq.pop();
            }
            return;
        }
        if prev.shape().cell_count() <= budget {
            seq.push(HeckeDiagram::unmarked(prev.shape().clone()));
            search(n, seq, out);
            seq.pop();
        }
        for corner in prev.shape().corners() {
            let smaller = prev
                .shape()
                .remove_corner(corner)
                .expect("corner of the shape");
            if smaller.cell_count() <= budget {
                seq.push(HeckeDiagram::unmarked(smaller));
                search(n, seq, out);
                seq.pop();
            }
        }
    } else {
        let base = prev.shape();
        let max_new = budget.saturating_sub(base.cell_count());
        for bigger in base.rook_strip_supersets(max_new) {
            if bigger.cell_count() > budget {
                continue;
            }
            for corner in bigger.corners() {
                seq.push(
                    HeckeDiagram::new(bigger.clone(), Some(corner))
                        .expect("marks are placed on corners"),
                );
                search(n, seq, out);
                seq.pop();
            }
            seq.push(HeckeDiagram::unmarked(bigger));
            search(n, seq, out);
            seq.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::{Cell, Partition};
    use crate::tableau::IncreasingTableau;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn d(parts: &[usize]) -> HeckeDiagram {
        HeckeDiagram::unmarked(part(parts))
    }

    fn dm(parts: &[usize], mark: (usize, usize)) -> HeckeDiagram {
        HeckeDiagram::new(part(parts), Some(Cell::new(mark.0, mark.1))).unwrap()
    }

    fn lp(n: usize, arcs: &[(usize, usize)]) -> LinkedPartition {
        LinkedPartition::new(
            n,
            arcs.iter().map(|&(l, r)| Arc::new(l, r).unwrap()).collect(),
        )
        .unwrap()
    }

    /// The running seven-stage example threaded through the docs and examples.
    fn seven_stage_example() -> VacillatingHeckeTableau {
        VacillatingHeckeTableau::new(vec![
            d(&[]),
            d(&[]),
            dm(&[1], (1, 1)),
            d(&[1]),
            dm(&[2, 1], (2, 1)),
            d(&[2, 1]),
            d(&[2, 1]),
            d(&[1, 1]),
            dm(&[1, 1], (2, 1)),
            d(&[1, 1]),
            d(&[1, 1]),
            d(&[1]),
            d(&[1]),
            d(&[]),
            d(&[]),
        ])
        .unwrap()
    }

    #[test]
    fn validation_accepts_the_running_example() {
        let v = seven_stage_example();
        assert_eq!(v.half_length(), 7);
        assert_eq!(v.extrema(), (2, 2));
        assert_eq!(
            v.to_string(),
            "-;-;1@1,1;1;2,1@2,1;2,1;2,1;1,1;1,1@2,1;1,1;1,1;1;1;-;-"
        );
    }

    #[test]
    fn validation_names_the_failing_index() {
        // even length
        assert!(matches!(
            VacillatingHeckeTableau::new(vec![d(&[]), d(&[])]),
            Err(Error::InvalidVht { index: 2, .. })
        ));
        // nonempty endpoint
        assert!(matches!(
            VacillatingHeckeTableau::new(vec![d(&[1]), d(&[]), d(&[])]),
            Err(Error::InvalidVht { index: 0, .. })
        ));
        // a diagram that fails to shrink back in time
        assert!(matches!(
            VacillatingHeckeTableau::new(vec![d(&[]), d(&[]), d(&[1]), d(&[1]), d(&[])]),
            Err(Error::InvalidVht { index: 4, .. })
        ));
        // mark on an odd position
        assert!(matches!(
            VacillatingHeckeTableau::new(vec![d(&[]), dm(&[1], (1, 1)), d(&[1]), d(&[]), d(&[])]),
            Err(Error::InvalidVht { index: 1, .. })
        ));
        // growth into an even position must be a rook strip
        assert!(matches!(
            VacillatingHeckeTableau::new(vec![d(&[]), d(&[]), d(&[2]), d(&[1]), d(&[])]),
            Err(Error::InvalidVht { index: 2, .. })
        ));
        // a marked diagram pins the next odd one
        assert!(matches!(
            VacillatingHeckeTableau::new(vec![d(&[]), d(&[]), dm(&[1], (1, 1)), d(&[]), d(&[])]),
            Err(Error::InvalidVht { index: 3, .. })
        ));
        // losing two squares at once
        assert!(matches!(
            VacillatingHeckeTableau::new(vec![
                d(&[]),
                d(&[]),
                d(&[1]),
                d(&[1]),
                d(&[2, 1]),
                d(&[]),
                d(&[]),
            ]),
            Err(Error::InvalidVht { index: 5, .. })
        ));
    }

    #[test]
    fn phi_reads_the_running_example() {
        let v = seven_stage_example();
        let (p, trace) = phi_with_trace(&v);
        assert_eq!(p, lp(7, &[(1, 2), (1, 3), (1, 5), (1, 6), (2, 4), (2, 7)]));
        let t = |rows: &[&[usize]]| {
            IncreasingTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
        };
        assert_eq!(
            trace.tableaux[2],
            HeckeTableau::new(t(&[&[1]]), Some(Cell::new(1, 1))).unwrap()
        );
        assert_eq!(
            trace.tableaux[4],
            HeckeTableau::new(t(&[&[1, 2], &[2]]), Some(Cell::new(2, 1))).unwrap()
        );
        assert_eq!(trace.tableaux[7], HeckeTableau::unmarked(t(&[&[1], &[2]])));
        assert_eq!(
            trace.tableaux[8],
            HeckeTableau::new(t(&[&[1], &[2]]), Some(Cell::new(2, 1))).unwrap()
        );
        assert_eq!(trace.tableaux[11], HeckeTableau::unmarked(t(&[&[2]])));
        // arcs appear one stage at a time
        assert_eq!(trace.edge_sets[0].len(), 0);
        assert_eq!(trace.edge_sets[3].len(), 1);
        assert_eq!(trace.edge_sets[14].len(), 6);
    }

    #[test]
    fn phi_inverse_rebuilds_the_running_example() {
        let v = seven_stage_example();
        let p = phi(&v);
        assert_eq!(phi_inverse(&p), v);
    }

    #[test]
    fn the_smallest_nontrivial_sequence() {
        let v =
            VacillatingHeckeTableau::new(vec![d(&[]), d(&[]), d(&[1]), d(&[]), d(&[])]).unwrap();
        assert_eq!(phi(&v), lp(2, &[(1, 2)]));
        assert_eq!(phi_inverse(&lp(2, &[(1, 2)])), v);
        assert_eq!(
            phi(&VacillatingHeckeTableau::trivial(3)),
            LinkedPartition::arc_free(3)
        );
    }

    #[test]
    fn psi_conjugates_the_running_example() {
        let p = lp(7, &[(1, 2), (1, 3), (1, 5), (1, 6), (2, 4), (2, 7)]);
        let q = psi(&p);
        assert_eq!(q, lp(7, &[(1, 2), (1, 4), (2, 3), (2, 5), (2, 6), (1, 7)]));
        assert_eq!(psi(&q), p);
        let (cr, ne) = p.crossing_nesting();
        assert_eq!(q.crossing_nesting(), (ne, cr));
    }

    #[test]
    fn word_trace_of_the_running_example() {
        let v = seven_stage_example();
        let words: Vec<String> = word_trace(&v).iter().map(|w| w.to_string()).collect();
        assert_eq!(
            words,
            vec![
                "-",
                "-",
                "1 1 1 1",
                "1 1 1",
                "2 1 1 2 1",
                "2 1 1 2",
                "2 1 1 2",
                "2 1 1",
                "2 1 1",
                "2 1",
                "2 1",
                "2",
                "2",
                "-",
                "-",
            ]
        );
        // each word generates exactly the tableau standing at its position
        let (_, trace) = phi_with_trace(&v);
        for (i, w) in word_trace(&v).iter().enumerate() {
            assert_eq!(
                &crate::hecke::insertion_tableau(w),
                trace.tableaux[i].underlying(),
                "position {i}"
            );
        }
    }

    #[test]
    fn enumeration_counts_factorially() {
        let counts: Vec<usize> = (1..=4).map(|n| enumerate_vhts(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 6, 24]);
        assert!(matches!(enumerate_vhts(0), Err(Error::SizeCap { .. })));
        assert!(matches!(enumerate_vhts(8), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn enumerated_sequences_are_distinct_and_biject_onto_linked_partitions() {
        for n in 1..=4 {
            let vhts = enumerate_vhts(n).unwrap();
            let images: std::collections::BTreeSet<LinkedPartition> =
                vhts.iter().map(phi).collect();
            assert_eq!(images.len(), vhts.len(), "phi is injective at n={n}");
            let all: std::collections::BTreeSet<LinkedPartition> =
                crate::linked::enumerate_linked(n).unwrap().collect();
            assert_eq!(images, all, "phi is onto at n={n}");
            for v in &vhts {
                assert_eq!(&phi_inverse(&phi(v)), v);
            }
        }
    }
}
