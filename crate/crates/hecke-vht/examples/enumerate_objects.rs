//! Exhaustive streams of linked partitions and vacillating sequences,
//! with the counting identities they witness: n! in total, large Schröder
//! numbers for the noncrossing ones, Bell numbers for set partitions.

use hecke_vht::{enumerate_linked, enumerate_vhts};

fn main() {
    println!("all linked partitions of [3], in order:");
    for p in enumerate_linked(3).unwrap() {
        println!("  {p}");
    }

    println!("\n   n      total  sequences  noncrossing  set partitions");
    for n in 1..=6 {
        let total = enumerate_linked(n).unwrap().count();
        let sequences = enumerate_vhts(n).unwrap().len();
        let noncrossing = enumerate_linked(n)
            .unwrap()
            .filter(|p| p.crossing_nesting().0 <= 1)
            .count();
        let fronts = enumerate_linked(n)
            .unwrap()
            .filter(|p| p.is_front_representation())
            .count();
        assert_eq!(total, sequences);
        println!("{n:>4} {total:>10} {sequences:>10} {noncrossing:>12} {fronts:>15}");
    }
}
