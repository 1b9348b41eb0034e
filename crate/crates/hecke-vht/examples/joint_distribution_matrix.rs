//! The joint distribution of (cr, ne) over linked partitions, printed as
//! a matrix. It is symmetric, and stays symmetric after pinning both
//! endpoint sets.

use std::collections::BTreeSet;

use hecke_vht::joint_distribution;

fn main() {
    for n in [3, 5] {
        let d = joint_distribution(n, None).unwrap();
        println!("n={n}, {} partitions", d.total());
        println!("{}", d.render_matrix());
        println!("symmetric: {}\n", d.is_symmetric());
        assert!(d.is_symmetric());
    }

    let s = BTreeSet::from([1, 2]);
    let t = BTreeSet::from([3, 4, 5]);
    let d = joint_distribution(5, Some((s, t))).unwrap();
    println!(
        "n=5 with S={{1,2}} and T={{3,4,5}}, {} partitions",
        d.total()
    );
    println!("{}", d.render_matrix());
    println!("symmetric: {}", d.is_symmetric());
    assert!(d.is_symmetric());
}
