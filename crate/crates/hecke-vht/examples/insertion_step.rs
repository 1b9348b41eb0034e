//! One Hecke insertion at a time, each followed by its reversal.
//!
//! Inserting 1 bumps its way down and grows the shape (alpha = 1);
//! inserting 3 ends in a rejected append, so the shape stays put and the
//! reported corner is the bottom of the column through the rejecting row
//! (alpha = 0). Either way the corner and alpha are exactly what the
//! reverse step needs to recover the original tableau and letter.

use hecke_vht::{hecke_insert, hecke_reverse_insert, IncreasingTableau};

fn main() {
    let t: IncreasingTableau = "1,2,3,4/2,3,5/4,5/5,7".parse().unwrap();
    println!("start:  {t}");

    for x in [1, 3] {
        let out = hecke_insert(&t, x);
        println!("\ninsert {x} -> {}", out.tableau);
        println!("  corner {}  alpha {}", out.corner, out.alpha());

        let (back, letter) = hecke_reverse_insert(&out.tableau, out.corner, out.grew).unwrap();
        assert_eq!(back, t);
        assert_eq!(letter, x);
        println!("  reversed from that corner: {back} and the letter {letter}");
    }
}
