//! The involution that swaps crossings with nestings while fixing both
//! endpoint sets.
//!
//! It is defined by pulling a linked partition back to its vacillating
//! sequence, transposing every diagram, and mapping forward again. The
//! demo runs one partition in detail, then sweeps everything on [5].

use hecke_vht::{enumerate_linked, psi, LinkedPartition};

fn main() {
    let p: LinkedPartition = "n=7; 1-2,1-3,1-5,1-6,2-4,2-7".parse().unwrap();
    let q = psi(&p);
    println!("p      = {p}");
    println!("psi(p) = {q}");
    println!(
        "stats    {:?} -> {:?}",
        p.crossing_nesting(),
        q.crossing_nesting()
    );
    println!("S, T     {:?} = {:?}", p.endpoints(), q.endpoints());
    assert_eq!(psi(&q), p);

    let mut swapped = 0;
    for p in enumerate_linked(5).unwrap() {
        let q = psi(&p);
        let (cr, ne) = p.crossing_nesting();
        assert_eq!(q.crossing_nesting(), (ne, cr));
        assert_eq!(q.endpoints(), p.endpoints());
        assert_eq!(psi(&q), p);
        if p != q {
            swapped += 1;
        }
    }
    println!("\non [5] the involution moves {swapped} of 120 partitions");
}
