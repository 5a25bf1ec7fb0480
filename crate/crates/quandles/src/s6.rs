//! Explicit semidirect products A_n ⋊ C_m with the twist acting through an
//! automorphism of S_n, the direct-vs-semidirect distinction, and the
//! centralizer-size spectrum that tells the two outer (4,2) classes of
//! Aut(S_6) apart.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::autgroup::Automorphism;
use crate::perm::{compose, CycleType, Parity, Permutation};
use crate::symgroup::{class_representative, enumerate_alternating, ElementIndexer};
use crate::Error;

/// Element (g, i) with g indexed into the A_n enumeration and 0 ≤ i < m.
pub type SdElement = (usize, u64);

/// A_n ⋊ C_m, with (g, i)·(h, j) = (g·ψ^i(h), i+j mod m). Fully materialized
/// with index-based multiplication tables; only small degrees are in scope.
pub struct SemiDirectGroup {
    n: usize,
    m: u64,
    elements: Vec<Permutation>,
    /// mult[a][b] = index of elements[a] ∘ elements[b] (apply b first)
    mult: Vec<Vec<u16>>,
    inv: Vec<u16>,
    /// psi[i][a] = index of ψ^i(elements[a])
    psi: Vec<Vec<u16>>,
}

impl SemiDirectGroup {
    /// m = ord(twist); the standard construction.
    pub fn build(n: usize, twist: &Automorphism) -> Result<SemiDirectGroup, Error> {
        Self::build_with_order(n, twist, twist.order())
    }

    /// General form: any m with ord(twist) | m. `twist = identity` gives the
    /// direct product A_n × C_m.
    pub fn build_with_order(
        n: usize,
        twist: &Automorphism,
        m: u64,
    ) -> Result<SemiDirectGroup, Error> {
        if !(3..=6).contains(&n) {
            return Err(Error::Other(format!(
                "semidirect product materialization supports degrees 3-6, got {n}"
            )));
        }
        assert_eq!(twist.degree(), n);
        assert!(m >= 1 && m.is_multiple_of(twist.order()), "need ord(twist) | m");

        let indexer = ElementIndexer::new(n);
        let elements: Vec<Permutation> = enumerate_alternating(n)?.collect();
        let half = elements.len();
        let mut idx_of_rank = vec![u16::MAX; indexer.size() as usize];
        for (i, p) in elements.iter().enumerate() {
            idx_of_rank[indexer.rank(p) as usize] = i as u16;
        }
        let idx = |p: &Permutation| -> u16 {
            let i = idx_of_rank[indexer.rank(p) as usize];
            assert_ne!(i, u16::MAX, "twist does not preserve A_n");
            i
        };

        let mut mult = vec![vec![0u16; half]; half];
        for (a, pa) in elements.iter().enumerate() {
            for (b, pb) in elements.iter().enumerate() {
                mult[a][b] = idx(&compose(pa, pb));
            }
        }
        let inv: Vec<u16> = elements.iter().map(|p| idx(&p.inverse())).collect();
        let mut psi = Vec::with_capacity(m as usize);
        for i in 0..m {
            let t = twist.pow(i);
            psi.push(elements.iter().map(|p| idx(&t.apply(p))).collect());
        }

        Ok(SemiDirectGroup {
            n,
            m,
            elements,
            mult,
            inv,
            psi,
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn cyclic_order(&self) -> u64 {
        self.m
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64 * self.m
    }

    pub fn unit(&self) -> SdElement {
        let e = Permutation::identity(self.n);
        let g = self
            .elements
            .iter()
            .position(|p| *p == e)
            .expect("identity is even");
        (g, 0)
    }

    pub fn iter_elements(&self) -> impl Iterator<Item = SdElement> + '_ {
        let half = self.elements.len();
        (0..self.m).flat_map(move |i| (0..half).map(move |g| (g, i)))
    }

    pub fn multiply(&self, a: SdElement, b: SdElement) -> SdElement {
        let (g, i) = a;
        let (h, j) = b;
        let th = self.psi[i as usize][h] as usize;
        (self.mult[g][th] as usize, (i + j) % self.m)
    }

    pub fn inverse(&self, a: SdElement) -> SdElement {
        let (g, i) = a;
        let j = (self.m - i) % self.m;
        // (g,i)^{-1} = (ψ^{-i}(g^{-1}), -i); ψ^{-i} = ψ^{m-i}
        (self.psi[j as usize][self.inv[g] as usize] as usize, j)
    }

    /// b·a·b⁻¹ by the closed form (h·ψ^j(g)·ψ^i(h⁻¹), i) for a = (g, i),
    /// b = (h, j); note the residue of `a` is untouched.
    pub fn conjugate_sd(&self, a: SdElement, b: SdElement) -> SdElement {
        let (g, i) = a;
        let (h, j) = b;
        let x = self.mult[h][self.psi[j as usize][g] as usize] as usize;
        let y = self.psi[i as usize][self.inv[h] as usize] as usize;
        (self.mult[x][y] as usize, i)
    }

    pub fn element_order(&self, a: SdElement) -> u64 {
        let e = self.unit();
        let mut acc = a;
        let mut k = 1;
        while acc != e {
            acc = self.multiply(acc, a);
            k += 1;
        }
        k
    }

    pub fn centralizer_size_of(&self, a: SdElement) -> u64 {
        self.iter_elements()
            .filter(|&b| self.conjugate_sd(a, b) == a)
            .count() as u64
    }

    /// Multiset {|C_G(a)| : a ∈ G}, as size -> multiplicity.
    pub fn centralizer_size_spectrum(&self) -> BTreeMap<u64, u64> {
        let all: Vec<SdElement> = self.iter_elements().collect();
        let sizes: Vec<u64> = all
            .par_iter()
            .map(|&a| self.centralizer_size_of(a))
            .collect();
        let mut spec = BTreeMap::new();
        for s in sizes {
            *spec.entry(s).or_insert(0) += 1;
        }
        spec
    }

    pub fn center_size(&self) -> u64 {
        let all: Vec<SdElement> = self.iter_elements().collect();
        all.iter()
            .filter(|&&a| all.iter().all(|&b| self.multiply(a, b) == self.multiply(b, a)))
            .count() as u64
    }

    pub fn element_order_histogram(&self) -> BTreeMap<u64, u64> {
        let mut hist = BTreeMap::new();
        for a in self.iter_elements() {
            *hist.entry(self.element_order(a)).or_insert(0) += 1;
        }
        hist
    }

    /// Look up an element from explicit data, for spot checks.
    pub fn element(&self, g: &Permutation, i: u64) -> Option<SdElement> {
        let gi = self.elements.iter().position(|p| p == g)?;
        (i < self.m).then_some((gi, i % self.m))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductKind {
    Direct,
    Semidirect,
}

/// Distinguishes A_n ⋊ C_m (twist by conjugation along shape `t`) from
/// A_n × C_m by group fingerprints (center size, element-order histogram)
/// and asserts the verdict matches the parity of `t`: odd shapes give a
/// genuinely twisted product, even shapes a direct one.
pub fn direct_vs_semidirect_check(n: usize, t: &CycleType) -> Result<ProductKind, Error> {
    assert!(n == 5 || n == 6, "materializable degrees only");
    let pi = class_representative(t);
    let m = t.order();
    let twisted = SemiDirectGroup::build(n, &Automorphism::inner(pi))?;
    let direct = SemiDirectGroup::build_with_order(n, &Automorphism::identity(n), m)?;

    let fp = |g: &SemiDirectGroup| (g.center_size(), g.element_order_histogram());
    let kind = if fp(&twisted) == fp(&direct) {
        ProductKind::Direct
    } else {
        ProductKind::Semidirect
    };
    let expected = match t.parity() {
        Parity::Even => ProductKind::Direct,
        Parity::Odd => ProductKind::Semidirect,
    };
    assert_eq!(
        kind, expected,
        "fingerprint verdict contradicts the parity dichotomy for shape {t}"
    );
    Ok(kind)
}

/// A conjugacy class of A_6 with a stable name: the cycle type, with the two
/// classes of 5-cycles tagged 5a (the class of (1 2 3 4 5)) and 5b.
#[derive(Debug, Clone)]
pub struct A6Class {
    pub name: String,
    pub members: Vec<Permutation>,
}

/// The seven conjugacy classes of A_6, recomputed by orbit partition under
/// conjugation (not hard-coded).
pub fn a6_conjugacy_classes() -> Vec<A6Class> {
    let all: Vec<Permutation> = enumerate_alternating(6).unwrap().collect();
    let mut class_of = vec![usize::MAX; all.len()];
    let indexer = ElementIndexer::new(6);
    let mut pos_of_rank = vec![usize::MAX; indexer.size() as usize];
    for (i, p) in all.iter().enumerate() {
        pos_of_rank[indexer.rank(p) as usize] = i;
    }
    let mut classes: Vec<Vec<Permutation>> = Vec::new();
    for start in 0..all.len() {
        if class_of[start] != usize::MAX {
            continue;
        }
        let cid = classes.len();
        let mut members = Vec::new();
        let mut stack = vec![start];
        class_of[start] = cid;
        while let Some(i) = stack.pop() {
            members.push(all[i].clone());
            for h in &all {
                let img = compose(&compose(h, &all[i]), &h.inverse());
                let j = pos_of_rank[indexer.rank(&img) as usize];
                if class_of[j] == usize::MAX {
                    class_of[j] = cid;
                    stack.push(j);
                }
            }
        }
        classes.push(members);
    }
    assert_eq!(classes.len(), 7, "A_6 has seven conjugacy classes");

    let five_a_rep = Permutation::from_images(vec![1, 2, 3, 4, 0, 5]).unwrap(); // (1 2 3 4 5)
    classes
        .into_iter()
        .map(|members| {
            let shape = members[0].cycle_type();
            let name = if shape.to_string() == "5,1" {
                if members.contains(&five_a_rep) {
                    "5a".to_string()
                } else {
                    "5b".to_string()
                }
            } else {
                shape.to_string()
            };
            A6Class { name, members }
        })
        .collect()
}

/// The permutation of the seven A_6-classes induced by η_k, as pairs of
/// class names (source, image).
pub fn eta_action_on_a6_classes(k: u8) -> Vec<(String, String)> {
    let eta = crate::autgroup::eta(k);
    let classes = a6_conjugacy_classes();
    classes
        .iter()
        .map(|c| {
            let img = eta.apply(&c.members[0]);
            let target = classes
                .iter()
                .find(|d| d.members.contains(&img))
                .expect("image lands in some class");
            (c.name.clone(), target.name.clone())
        })
        .collect()
}
