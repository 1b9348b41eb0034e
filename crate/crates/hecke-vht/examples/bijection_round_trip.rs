//! A vacillating sequence mapped to its linked partition and back, with
//! the full trace of intermediate tableaux, growing arc sets, and words.
//!
//! Reading the sequence right to left, a shrink or a mark at an odd stage
//! reverse-inserts a letter out of the running tableau and records an arc;
//! an even stage writes that stage's index into the freed rook strip. The
//! word read out at each stage always re-inserts to the tableau standing
//! there, which is what makes the extrema theorem work.

use hecke_vht::{phi_inverse, phi_with_trace, word_trace, VacillatingHeckeTableau};

fn main() {
    let v: VacillatingHeckeTableau = "-;-;1@1,1;1;2,1@2,1;2,1;2,1;1,1;1,1@2,1;1,1;1,1;1;1;-;-"
        .parse()
        .unwrap();
    println!("sequence: {v}");

    let (p, trace) = phi_with_trace(&v);
    println!("linked:   {p}\n");

    let words = word_trace(&v);
    println!("stage  diagram   tableau     word       arcs so far");
    for (i, ((t, arcs), w)) in trace
        .tableaux
        .iter()
        .zip(&trace.edge_sets)
        .zip(&words)
        .enumerate()
    {
        let diagram = v.diagrams()[i].to_string();
        let tableau = t.to_string();
        let word = w.to_string();
        let arcs = if arcs.is_empty() {
            "-".to_string()
        } else {
            let strs: Vec<String> = arcs.iter().map(|a| a.to_string()).collect();
            strs.join(",")
        };
        println!("{i:>5}  {diagram:<8}  {tableau:<10}  {word:<9}  {arcs}");
    }

    assert_eq!(phi_inverse(&p), v);
    println!("\nphi_inverse rebuilds the sequence exactly");
}
