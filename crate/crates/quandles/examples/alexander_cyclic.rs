//! Alexander quandles over C_9: the closed-form isomorphism criterion
//! (via N(n,a) = n/gcd(n, 1-a)) versus the brute-force search, and the
//! cautionary example where two non-conjugate automorphisms still give
//! isomorphic quandles.

use quandles::alexander::{alexander_quandle, classify_cyclic, nelson_modulus};
use quandles::iso::{are_isomorphic, DEFAULT_ISO_CAP};

fn main() {
    let n = 9;
    println!("unit classes of Q(C_{n}):");
    for class in classify_cyclic(n).unwrap() {
        let mods: Vec<String> = class.iter().map(|&a| format!("N={}", nelson_modulus(n, a))).collect();
        println!("  {class:?}  ({})", mods.join(", "));
    }

    // Aut(C_9) is abelian, so 4 and 7 are in different conjugacy classes;
    // the quandles are isomorphic anyway.
    let q4 = alexander_quandle(9, 4).unwrap();
    let q7 = alexander_quandle(9, 7).unwrap();
    let res = are_isomorphic(&q4, &q7, DEFAULT_ISO_CAP).unwrap();
    println!("Q(C_9, 4) ≅ Q(C_9, 7): {}", res.isomorphic);
    println!("witness bijection: {:?}", res.witness.unwrap());
}
