//! Build Q(S_4, conjugation by a 4-cycle), check the quandle axioms, and
//! read off the basic numbers: the common order of the point symmetries and
//! how many distinct symmetries there are.

use quandles::autgroup::Automorphism;
use quandles::perm::parse_cycles;
use quandles::quandle::general_alexander;

fn main() {
    let pi = parse_cycles(4, "(1 2 3 4)").unwrap();
    let q = general_alexander(4, &Automorphism::inner(pi.clone()), 720).unwrap();

    q.check_axioms().expect("construction guarantees a quandle");
    println!("Q(S_4, (1 2 3 4)) on {} elements", q.size());
    println!("  ord(Q) = {}  (equals ord(pi) = {})", q.order().unwrap(), pi.order());
    println!(
        "  distinct symmetries: {}  (equals [S_4 : C(pi)] = 24/{})",
        q.distinct_symmetry_count(),
        24 / q.distinct_symmetry_count()
    );

    // the first few rows of the s-map table
    for x in 0..5 {
        println!("  s_{x}: {:?}", q.row(x));
    }
}
