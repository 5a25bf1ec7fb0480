//! Quandle isomorphisms, two ways: the explicit witness coming from a
//! conjugation of the defining automorphism, and the brute-force backtracking
//! search that finds one from scratch.

use quandles::autgroup::Automorphism;
use quandles::iso::{are_isomorphic, conjugate_iso_witness, DEFAULT_ISO_CAP};
use quandles::perm::{conjugate, parse_cycles};
use quandles::quandle::general_alexander;

fn main() {
    let n = 4;
    let pi = parse_cycles(n, "(1 2 3)").unwrap();
    let tau = parse_cycles(n, "(3 4)").unwrap();

    // conjugating the automorphism gives an isomorphism for free
    let w = conjugate_iso_witness(n, &pi, &tau).unwrap();
    println!("Q(S_4, (1 2 3)) ≅ Q(S_4, {}) via x -> tau·x·tau^-1", conjugate(&pi, &tau));
    println!("  witness (verified on all 24^2 pairs): {w:?}");

    // the search finds a witness without being told where to look
    let q = general_alexander(n, &Automorphism::inner(pi.clone()), 720).unwrap();
    let r = general_alexander(n, &Automorphism::inner(conjugate(&pi, &tau)), 720).unwrap();
    let res = are_isomorphic(&q, &r, DEFAULT_ISO_CAP).unwrap();
    println!("  search verdict: {}", res.isomorphic);

    // different shapes never fuse at n = 4
    let other = general_alexander(
        n,
        &Automorphism::inner(parse_cycles(n, "(1 2)(3 4)").unwrap()),
        720,
    )
    .unwrap();
    let res = are_isomorphic(&q, &other, DEFAULT_ISO_CAP).unwrap();
    println!("Q((1 2 3)) ≅ Q((1 2)(3 4)): {}", res.isomorphic);
}
