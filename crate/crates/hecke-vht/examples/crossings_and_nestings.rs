//! Crossing and nesting numbers, endpoint sets, and the block view of a
//! linked partition.
//!
//! Blocks may share an element as long as it is the minimum of exactly one
//! of them (that block not a singleton); the arc picture links each block
//! minimum to the rest of its block, and no vertex has two smaller
//! neighbors.

use hecke_vht::{crossing_nesting_oracle, BlockPartition};

fn main() {
    let blocks: BlockPartition = "n=10; {1,3,5}{2,6,10}{4}{5,8,9}{6,7}".parse().unwrap();
    let p = blocks.to_arcs();
    println!("blocks: {blocks}");
    println!("arcs:   {p}");
    assert_eq!(p.to_blocks(), blocks);

    let (cr, ne) = p.crossing_nesting();
    println!("cr={cr} (e.g. 2-6 and 5-8 cross; no three arcs pairwise cross)");
    println!("ne={ne} (2-10, 5-9, 6-7 nest inside one another)");
    assert_eq!(crossing_nesting_oracle(&p).unwrap(), (cr, ne));

    let (s, t) = p.endpoints();
    let fmt = |set: &std::collections::BTreeSet<usize>| {
        let strs: Vec<String> = set.iter().map(|v| v.to_string()).collect();
        strs.join(",")
    };
    println!("left endpoints  S = {{{}}}", fmt(&s));
    println!("right endpoints T = {{{}}}", fmt(&t));
    println!(
        "front representation of a set partition: {}",
        p.is_front_representation()
    );
}
