//! The hardest separation at n = 6: the two outer classes with identical
//! order, fix size, and power data. Their quandles have inner groups
//! A_6 ⋊ C_8 with different twists, and the multiset of centralizer sizes
//! tells them apart — one group has elements with exactly 40 centralizing
//! elements, the other has none.

use quandles::autgroup::eta;
use quandles::perm::parse_cycles;
use quandles::s6::SemiDirectGroup;

fn main() {
    for k in 0..2u8 {
        let g = SemiDirectGroup::build(6, &eta(k)).unwrap();
        let spec = g.centralizer_size_spectrum();
        let line: Vec<String> = spec.iter().map(|(s, c)| format!("{s}^{c}")).collect();
        println!("A6 ⋊ C8 (twist eta{k}), order {}:", g.order());
        println!("  centralizer sizes: {}", line.join(" "));
        println!("  contains 40: {}", spec.contains_key(&40));
    }

    let g0 = SemiDirectGroup::build(6, &eta(0)).unwrap();
    let w = g0
        .element(&parse_cycles(6, "(1 2 3 4 5)").unwrap(), 0)
        .unwrap();
    println!(
        "witness: ((1 2 3 4 5), 0) has centralizer of size {}",
        g0.centralizer_size_of(w)
    );
}
