//! Insertion tableaux of words and the subsequence statistics they encode.
//!
//! The number of columns equals the longest strictly increasing
//! subsequence, the number of rows the longest strictly decreasing one.
//! Deleting every copy of the maximal letter commutes with forming the
//! tableau.

use hecke_vht::{insertion_tableau, longest_monotone, Word};

fn main() {
    for text in ["2 1 1 3 1 3 2 1", "2 1 1 1 2 1", "1 2 3 4", "4 3 2 1"] {
        let w: Word = text.parse().unwrap();
        let t = insertion_tableau(&w);
        let (is, de) = longest_monotone(&w);
        assert_eq!((t.col_count(), t.row_count()), (is, de));
        println!("word {w}");
        println!("  tableau {t}");
        println!("  longest increasing {is} = columns, longest decreasing {de} = rows");

        let m = w.letters().iter().copied().max().unwrap();
        let shorter = Word::new(w.letters().iter().copied().filter(|&l| l != m).collect()).unwrap();
        let direct = insertion_tableau(&shorter);
        assert_eq!(direct, t.delete_letter(m).unwrap());
        println!("  without the {m}s the tableau is {direct}, same as deleting them after\n");
    }
}
