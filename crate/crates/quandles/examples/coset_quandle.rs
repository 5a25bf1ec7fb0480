//! Coset quandles Q(G, K, psi): quotient the point set by a subgroup K of
//! fixed points of psi. K = {e} recovers the plain construction; K = Fix(psi)
//! gives the smallest faithful version.

use quandles::autgroup::Automorphism;
use quandles::perm::parse_cycles;
use quandles::quandle::{coset_quandle, general_alexander, QuandleTriplet};
use quandles::symgroup::centralizer_elements;

fn main() {
    let n = 4;
    let pi = parse_cycles(n, "(1 2)").unwrap();
    let psi = Automorphism::inner(pi.clone());

    // K = Fix(psi) = C(pi), the largest admissible subgroup
    let fix = centralizer_elements(&pi, 1000).unwrap();
    let triplet = QuandleTriplet::new(n, fix.clone(), psi.clone()).unwrap();
    let q = coset_quandle(&triplet, 720).unwrap();
    q.check_axioms().unwrap();
    println!(
        "Q(S_4, C((1 2)), (1 2)): {} cosets (24 / {}), ord {}",
        q.size(),
        fix.len(),
        q.order().unwrap()
    );

    // K = {e} is the generalized Alexander quandle again
    let e = vec![quandles::perm::Permutation::identity(n)];
    let tiny = QuandleTriplet::new(n, e, psi.clone()).unwrap();
    let q1 = coset_quandle(&tiny, 720).unwrap();
    let q2 = general_alexander(n, &psi, 720).unwrap();
    println!("K = {{e}} reproduces Q(S_4, psi): {}", q1 == q2);
}
