//! A tour of Aut(S_6): the exceptional outer automorphism xi defined on the
//! adjacent transpositions, the order-8 representatives eta_0 and eta_1, and
//! the thirteen conjugacy classes of the full automorphism group.

use quandles::autgroup::{aut_s6_conjugacy_classes, eta, xi, xi_image};
use quandles::perm::parse_cycles;

fn main() {
    let xi = xi();
    println!("xi on the adjacent transpositions:");
    for i in 1..6 {
        let t = parse_cycles(6, &format!("({} {})", i, i + 1)).unwrap();
        println!("  ({} {}) -> {}", i, i + 1, xi_image(&t));
    }
    let six_cycle = parse_cycles(6, "(1 2 3 4 5 6)").unwrap();
    println!("xi((1 2 3 4 5 6)) = {}", xi.apply(&six_cycle));
    println!("ord(xi) = {}", xi.order());

    for k in 0..2u8 {
        let e = eta(k);
        let fix = e.fix_subgroup();
        println!(
            "eta{k} = {e}: order {}, eta{k}^2 = {}, |Fix| = {}",
            e.order(),
            e.pow(2),
            fix.len()
        );
    }

    println!("\nconjugacy classes of Aut(S_6) (order 1440):");
    let classes = aut_s6_conjugacy_classes();
    let mut total = 0;
    for (label, size) in &classes {
        println!("  {label:<22} size {size}");
        total += size;
    }
    println!("  {} classes, sizes sum to {total}", classes.len());
}
