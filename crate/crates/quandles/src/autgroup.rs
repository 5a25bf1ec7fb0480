//! Automorphisms of `S_n`: inner automorphisms for all `n`, the outer
//! automorphism `xi` of `S_6`, and the thirteen conjugacy classes of
//! `Aut(S_6)`.

use std::collections::HashMap;
use std::fmt;

use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::perm::{compose, conjugate, parse_cycles, CycleType, Parity, Permutation};
use crate::symgroup::{self, ElementIndexer};
use crate::Error;

/// An automorphism of `S_n` in normal form: `Inner(pi)` is conjugation by
/// `pi`; `Composite(g, 1)` is `(.)^g ∘ xi` and exists only for `n = 6`.
/// `Composite(g, 0)` is normalized away to `Inner(g)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Automorphism {
    n: usize,
    kind: AutKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AutKind {
    Inner(Permutation),
    /// `(.)^g ∘ xi`; only valid for degree 6.
    Composite(Permutation),
}

/// Shared tables for `S_6`: rank-indexed multiplication, inverses, and the
/// image table of `xi`. Built once, read-only afterwards.
pub struct S6Tables {
    pub indexer: ElementIndexer,
    pub elements: Vec<Permutation>,
    /// `mult[a][b] = rank(unrank(a) ∘ unrank(b))` (apply `b` first).
    pub mult: Vec<Vec<u16>>,
    pub inv: Vec<u16>,
    /// `xi_rank[r] = rank(xi(unrank(r)))`.
    pub xi_rank: Vec<u16>,
}

pub static S6: Lazy<S6Tables> = Lazy::new(build_s6_tables);

fn build_s6_tables() -> S6Tables {
    let indexer = ElementIndexer::new(6);
    let size = indexer.size() as usize;
    let elements: Vec<Permutation> = (0..size as u64).map(|r| indexer.unrank(r)).collect();
    let rank_of: HashMap<&Permutation, u16> = elements
        .iter()
        .enumerate()
        .map(|(i, p)| (p, i as u16))
        .collect();

    let mut mult = vec![vec![0u16; size]; size];
    for (a, pa) in elements.iter().enumerate() {
        for (b, pb) in elements.iter().enumerate() {
            mult[a][b] = rank_of[&compose(pa, pb)];
        }
    }
    let inv: Vec<u16> = elements.iter().map(|p| rank_of[&p.inverse()]).collect();

    // xi on the five adjacent transpositions, then extended by decomposing
    // each element into an adjacent-transposition word.
    let gen_images: Vec<Permutation> = [
        "(1 2)(3 4)(5 6)",
        "(1 6)(2 4)(3 5)",
        "(1 2)(3 6)(4 5)",
        "(1 6)(2 5)(3 4)",
        "(1 2)(3 5)(4 6)",
    ]
    .iter()
    .map(|s| parse_cycles(6, s).expect("generator image parses"))
    .collect();

    let mut xi_rank = vec![0u16; size];
    for (r, p) in elements.iter().enumerate() {
        let word = adjacent_word(p);
        let mut acc = Permutation::identity(6);
        for &i in &word {
            acc = compose(&acc, &gen_images[i]);
        }
        xi_rank[r] = rank_of[&acc];
    }

    S6Tables {
        indexer,
        elements,
        mult,
        inv,
        xi_rank,
    }
}

/// Writes `p` as a product of adjacent transpositions `t_i = (i, i+1)`:
/// `p = t_{w[0]} ∘ t_{w[1]} ∘ …` (rightmost factor applied first).
/// Bubble-sort word construction; any correct word works.
fn adjacent_word(p: &Permutation) -> Vec<usize> {
    let mut a = p.images().to_vec();
    let mut swaps = Vec::new();
    // right-multiplying by t_i swaps positions i, i+1 of the image list
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..a.len() - 1 {
            if a[i] > a[i + 1] {
                a.swap(i, i + 1);
                swaps.push(i);
                changed = true;
            }
        }
    }
    // p ∘ t_{s1} ∘ … ∘ t_{sk} = e, hence p = t_{sk} ∘ … ∘ t_{s1}
    swaps.reverse();
    swaps
}

/// Image of `x` under the fixed outer automorphism `xi` of `S_6`.
pub fn xi_image(x: &Permutation) -> Permutation {
    let t = &*S6;
    let r = t.indexer.rank(x) as usize;
    t.elements[t.xi_rank[r] as usize].clone()
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            AutKind::Inner(pi) => write!(f, "inner:{pi}"),
            AutKind::Composite(g) => write!(f, "outer:{g}"),
        }
    }
}

impl Automorphism {
    pub fn inner(pi: Permutation) -> Self {
        Automorphism {
            n: pi.degree(),
            kind: AutKind::Inner(pi),
        }
    }

    /// `(.)^g ∘ xi` for `g` in `S_6`.
    pub fn composite(g: Permutation) -> Result<Self, Error> {
        if g.degree() != 6 {
            return Err(Error::OuterRequiresDegreeSix(g.degree()));
        }
        Ok(Automorphism {
            n: 6,
            kind: AutKind::Composite(g),
        })
    }

    pub fn identity(n: usize) -> Self {
        Automorphism::inner(Permutation::identity(n))
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> &AutKind {
        &self.kind
    }

    pub fn is_inner(&self) -> bool {
        matches!(self.kind, AutKind::Inner(_))
    }

    pub fn is_identity(&self) -> bool {
        matches!(&self.kind, AutKind::Inner(pi) if pi.is_identity())
    }

    /// Applies the automorphism to `x`.
    pub fn apply(&self, x: &Permutation) -> Permutation {
        assert_eq!(self.n, x.degree(), "apply: degree mismatch");
        match &self.kind {
            AutKind::Inner(pi) => conjugate(x, pi),
            AutKind::Composite(g) => conjugate(&xi_image(x), g),
        }
    }

    /// Normal-form composition: `self ∘ other` (apply `other` first).
    /// `((.)^{g1} ∘ xi^{e1}) ∘ ((.)^{g2} ∘ xi^{e2}) = (.)^{g1·xi^{e1}(g2)} ∘ xi^{e1+e2}`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        assert_eq!(self.n, other.n, "compose_aut: degree mismatch");
        let (g1, e1) = self.normal_form();
        let (g2, e2) = other.normal_form();
        let twisted = if e1 == 1 { xi_image(g2) } else { g2.clone() };
        let g = compose(g1, &twisted);
        if (e1 + e2) % 2 == 1 {
            Automorphism {
                n: self.n,
                kind: AutKind::Composite(g),
            }
        } else {
            Automorphism::inner(g)
        }
    }

    fn normal_form(&self) -> (&Permutation, u8) {
        match &self.kind {
            AutKind::Inner(pi) => (pi, 0),
            AutKind::Composite(g) => (g, 1),
        }
    }

    pub fn inverse_aut(&self) -> Automorphism {
        match &self.kind {
            AutKind::Inner(pi) => Automorphism::inner(pi.inverse()),
            // ((.)^g ∘ xi)^{-1} = (.)^{xi(g^{-1})} ∘ xi
            AutKind::Composite(g) => Automorphism {
                n: 6,
                kind: AutKind::Composite(xi_image(&g.inverse())),
            },
        }
    }

    /// Least `m >= 1` with `self^m = id`. For `Inner(pi)` this is `ord(pi)`
    /// since `Z(S_n)` is trivial for `n >= 3`.
    pub fn order(&self) -> u64 {
        match &self.kind {
            AutKind::Inner(pi) => pi.order(),
            AutKind::Composite(_) => {
                let mut acc = self.clone();
                let mut m = 1u64;
                while !acc.is_identity() {
                    acc = acc.compose(self);
                    m += 1;
                }
                m
            }
        }
    }

    pub fn pow(&self, e: u64) -> Automorphism {
        let mut acc = Automorphism::identity(self.n);
        for _ in 0..e {
            acc = acc.compose(self);
        }
        acc
    }

    /// The full fixed subgroup `Fix(psi, S_n)`. For inner automorphisms this
    /// is the centralizer, enumerated structurally; for composite ones the
    /// 720 elements of `S_6` are scanned.
    pub fn fix_subgroup(&self) -> Vec<Permutation> {
        match &self.kind {
            AutKind::Inner(pi) => {
                symgroup::centralizer_elements(pi, u64::MAX).expect("unbounded budget")
            }
            AutKind::Composite(_) => S6
                .elements
                .iter()
                .filter(|x| &self.apply(x) == *x)
                .cloned()
                .collect(),
        }
    }
}

/// The fixed outer automorphism `xi` of `S_6`.
pub fn xi() -> Automorphism {
    Automorphism::composite(Permutation::identity(6)).expect("degree 6")
}

/// The named representatives `eta_0 = (.)^{(2 5 6 4 3)} ∘ xi` and
/// `eta_1 = (.)^{(1 5 6 4)} ∘ xi`, where `∘` chains left to right:
/// `x` is conjugated first, then fed through `xi`.  In the right-to-left
/// normal form used by [`Automorphism::composite`] that is
/// `(.)^{xi(g)} ∘ xi`.
pub fn eta(k: u8) -> Automorphism {
    let g = match k {
        0 => parse_cycles(6, "(2 5 6 4 3)").unwrap(),
        1 => parse_cycles(6, "(1 5 6 4)").unwrap(),
        _ => panic!("eta(k) requires k in {{0, 1}}"),
    };
    Automorphism::composite(xi_image(&g)).expect("degree 6")
}

/// Fixed representative of an outer class: the named representatives where
/// they exist, otherwise the first `(.)^g ∘ xi` in rank order with the right
/// label.
pub fn outer_class_representative(tag: OuterTag) -> Automorphism {
    match tag {
        OuterTag::O16 => xi(),
        OuterTag::O42E => eta(0),
        OuterTag::O42O => eta(1),
        _ => {
            let t = &*S6;
            t.elements
                .iter()
                .map(|g| Automorphism::composite(g.clone()).unwrap())
                .find(|a| matches!(aut_class_label(a), Ok(AutClassLabel::Outer(t)) if t == tag))
                .expect("every outer tag has a representative")
        }
    }
}

/// Tag of an outer conjugacy class of `Aut(S_6)`, named by the shape of
/// `psi^2` with the (4,2) case split by the parity of `g` in `(.)^g ∘ xi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OuterTag {
    O51,
    O42E,
    O42O,
    O2211,
    O16,
}

impl fmt::Display for OuterTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OuterTag::O51 => "O(5,1)",
            OuterTag::O42E => "O(4,2)E",
            OuterTag::O42O => "O(4,2)O",
            OuterTag::O2211 => "O(2^2,1^2)",
            OuterTag::O16 => "O(1^6)",
        };
        write!(f, "{s}")
    }
}

pub const OUTER_TAGS: [OuterTag; 5] = [
    OuterTag::O51,
    OuterTag::O42E,
    OuterTag::O42O,
    OuterTag::O2211,
    OuterTag::O16,
];

/// Conjugacy-class label of an automorphism of `S_n`. For `n != 6` every
/// label is a single shape; for `n = 6` three pairs of inner shapes merge and
/// five outer classes appear.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AutClassLabel {
    /// One or two shapes (two only for the merged classes of `S_6`),
    /// sorted descending so the label is canonical.
    Inner(Vec<CycleType>),
    Outer(OuterTag),
}

impl fmt::Display for AutClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutClassLabel::Inner(shapes) => {
                let names: Vec<String> = shapes.iter().map(|t| format!("I({t})")).collect();
                write!(f, "{}", names.join("∪"))
            }
            AutClassLabel::Outer(tag) => write!(f, "{tag}"),
        }
    }
}

impl AutClassLabel {
    pub fn inner_single(t: CycleType) -> Self {
        AutClassLabel::Inner(vec![t])
    }

    pub fn shapes(&self) -> Option<&[CycleType]> {
        match self {
            AutClassLabel::Inner(shapes) => Some(shapes),
            AutClassLabel::Outer(_) => None,
        }
    }
}

/// The merged partner of shape `t` under conjugation by `xi` in `Aut(S_6)`,
/// if any: (6) <-> (3,2,1), (3,3) <-> (3,1^3), (2^3) <-> (2,1^4).
pub fn s6_merged_partner(t: &CycleType) -> Option<CycleType> {
    let pairs = [
        ("6", "3,2,1"),
        ("3,3", "3,1^3"),
        ("2^3", "2,1^4"),
    ];
    for (a, b) in pairs {
        let ta = crate::perm::parse_partition(a).unwrap();
        let tb = crate::perm::parse_partition(b).unwrap();
        if *t == ta {
            return Some(tb);
        }
        if *t == tb {
            return Some(ta);
        }
    }
    None
}

/// Canonical label for an inner class of `S_n` (merging at `n = 6`).
pub fn inner_class_label(n: usize, t: &CycleType) -> AutClassLabel {
    if n == 6 {
        if let Some(partner) = s6_merged_partner(t) {
            let mut shapes = vec![t.clone(), partner];
            shapes.sort_by(|a, b| b.cmp(a));
            return AutClassLabel::Inner(shapes);
        }
    }
    AutClassLabel::inner_single(t.clone())
}

/// Label of the `Aut(S_n)`-conjugacy class of `psi`.
pub fn aut_class_label(psi: &Automorphism) -> Result<AutClassLabel, Error> {
    match psi.kind() {
        AutKind::Inner(pi) => Ok(inner_class_label(psi.degree(), &pi.cycle_type())),
        AutKind::Composite(g) => {
            // psi^2 = (.)^{g·xi(g)} is inner; label by its shape
            let sigma = compose(g, &xi_image(g));
            let shape = sigma.cycle_type();
            let tag = match shape.to_string().as_str() {
                "5,1" => OuterTag::O51,
                "4,2" => {
                    if g.parity() == Parity::Even {
                        OuterTag::O42E
                    } else {
                        OuterTag::O42O
                    }
                }
                "2^2,1^2" => OuterTag::O2211,
                "1^6" => OuterTag::O16,
                other => {
                    return Err(Error::Other(format!(
                        "outer automorphism squared to unexpected shape {other}"
                    )))
                }
            };
            Ok(AutClassLabel::Outer(tag))
        }
    }
}

/// Brute force over all 1440 automorphisms of `S_6`: partitions them into
/// conjugacy classes under composition and checks the partition matches the
/// thirteen labels. Returns the labels with their class sizes.
pub fn aut_s6_conjugacy_classes() -> Vec<(AutClassLabel, usize)> {
    let t = &*S6;
    let size = t.elements.len();
    // element = (rank of g, epsilon); index = eps * 720 + rank
    let total = 2 * size;
    let idx = |g: u16, e: u8| e as usize * size + g as usize;

    // compose in rank form
    let comp = |a: (u16, u8), b: (u16, u8)| -> (u16, u8) {
        let (g1, e1) = a;
        let (g2, e2) = b;
        let g2t = if e1 == 1 { t.xi_rank[g2 as usize] } else { g2 };
        (t.mult[g1 as usize][g2t as usize], (e1 + e2) % 2)
    };
    let inv = |a: (u16, u8)| -> (u16, u8) {
        let (g, e) = a;
        if e == 0 {
            (t.inv[g as usize], 0)
        } else {
            (t.xi_rank[t.inv[g as usize] as usize], 1)
        }
    };

    let all: Vec<(u16, u8)> = (0..2u8)
        .flat_map(|e| (0..size as u16).map(move |g| (g, e)))
        .collect();
    debug_assert_eq!(all.len(), 1440);

    let mut class_of = vec![usize::MAX; total];
    let mut classes: Vec<Vec<(u16, u8)>> = Vec::new();
    for &a in &all {
        if class_of[idx(a.0, a.1)] != usize::MAX {
            continue;
        }
        let cid = classes.len();
        let mut members = Vec::new();
        for &b in &all {
            let conj = comp(comp(b, a), inv(b));
            let i = idx(conj.0, conj.1);
            if class_of[i] == usize::MAX {
                class_of[i] = cid;
                members.push(conj);
            }
        }
        classes.push(members);
    }

    // label each class and assert consistency
    let to_aut = |(g, e): (u16, u8)| -> Automorphism {
        let gp = t.elements[g as usize].clone();
        if e == 0 {
            Automorphism::inner(gp)
        } else {
            Automorphism::composite(gp).unwrap()
        }
    };
    let mut out: Vec<(AutClassLabel, usize)> = classes
        .iter()
        .map(|members| {
            let label = aut_class_label(&to_aut(members[0])).expect("labelable");
            for &m in &members[1..] {
                debug_assert_eq!(aut_class_label(&to_aut(m)).unwrap(), label);
            }
            (label, members.len())
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    assert_eq!(out.len(), 13, "Aut(S_6) must have thirteen classes");
    assert_eq!(out.iter().map(|(_, s)| s).sum::<usize>(), 1440);
    out
}

/// Parses CLI automorphism syntax: `inner:(1 2 3)`, `outer:(2 5 6 4 3)`,
/// `xi`, `eta0`, `eta1`, or bare cycle notation (treated as inner).
pub fn parse_automorphism(n: usize, text: &str) -> Result<Automorphism, Error> {
    let text = text.trim();
    match text {
        "xi" => {
            if n != 6 {
                return Err(Error::OuterRequiresDegreeSix(n));
            }
            return Ok(xi());
        }
        "eta0" => {
            if n != 6 {
                return Err(Error::OuterRequiresDegreeSix(n));
            }
            return Ok(eta(0));
        }
        "eta1" => {
            if n != 6 {
                return Err(Error::OuterRequiresDegreeSix(n));
            }
            return Ok(eta(1));
        }
        _ => {}
    }
    if let Some(rest) = text.strip_prefix("inner:") {
        return Ok(Automorphism::inner(parse_cycles(n, rest)?));
    }
    if let Some(rest) = text.strip_prefix("outer:") {
        if n != 6 {
            return Err(Error::OuterRequiresDegreeSix(n));
        }
        // `outer:(g)` is the paper-style `(.)^g ∘ xi` with left-to-right
        // chaining; translate to the right-to-left normal form.
        return Automorphism::composite(xi_image(&parse_cycles(6, rest)?));
    }
    Ok(Automorphism::inner(parse_cycles(n, text)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_partition;
    use crate::symgroup::enumerate_group;

    fn p6(s: &str) -> Permutation {
        parse_cycles(6, s).unwrap()
    }

    #[test]
    fn xi_generator_images() {
        assert_eq!(xi().apply(&p6("(1 2)")), p6("(1 2)(3 4)(5 6)"));
        assert_eq!(xi().apply(&p6("(2 3)")), p6("(1 6)(2 4)(3 5)"));
        assert_eq!(xi().apply(&p6("(5 6)")), p6("(1 2)(3 5)(4 6)"));
    }

    #[test]
    fn xi_of_six_cycle() {
        assert_eq!(xi().apply(&p6("(1 2 3 4 5 6)")), p6("(2 6)(3 5 4)"));
    }

    #[test]
    fn xi_is_involutive() {
        assert!(xi().compose(&xi()).is_identity());
        assert_eq!(xi().order(), 2);
    }

    #[test]
    fn xi_is_homomorphism_sampled() {
        let elems = &S6.elements;
        let x = xi();
        let mut k = 1usize;
        for _ in 0..10_000 {
            k = (k * 48_271) % 0x7fff_ffff;
            let a = &elems[k % 720];
            let b = &elems[(k / 720) % 720];
            assert_eq!(x.apply(&compose(a, b)), compose(&x.apply(a), &x.apply(b)));
        }
    }

    #[test]
    #[ignore = "slow exhaustive homomorphism check over S_6 x S_6"]
    fn xi_eta_homomorphism_exhaustive() {
        let elems = &S6.elements;
        for psi in [xi(), eta(0), eta(1)] {
            for a in elems {
                let fa = psi.apply(a);
                for b in elems {
                    assert_eq!(psi.apply(&compose(a, b)), compose(&fa, &psi.apply(b)));
                }
            }
        }
    }

    #[test]
    fn xi_swaps_the_three_class_pairs() {
        let swaps = [
            ("6", "3,2,1"),
            ("3^2", "3,1^3"),
            ("2^3", "2,1^4"),
        ];
        let x = xi();
        for g in &S6.elements {
            let t = g.cycle_type().to_string();
            let ti = x.apply(g).cycle_type().to_string();
            let mut expected = t.clone();
            for (a, b) in swaps {
                if t == a {
                    expected = b.to_string();
                }
                if t == b {
                    expected = a.to_string();
                }
            }
            assert_eq!(ti, expected, "xi image shape of {g}");
        }
    }

    #[test]
    fn apply_examples() {
        let x = p6("(1 3 5)");
        assert_eq!(Automorphism::identity(6).apply(&x), x);
        assert_eq!(xi().apply(&p6("(1 2)")), p6("(1 2)(3 4)(5 6)"));
    }

    #[test]
    fn compose_aut_normal_form() {
        let p = p6("(1 2 3)");
        let q = p6("(4 5)");
        let a = Automorphism::inner(p.clone());
        let b = Automorphism::inner(q.clone());
        assert_eq!(a.compose(&b), Automorphism::inner(compose(&p, &q)));
        assert!(xi().compose(&xi()).is_identity());
        // xi ∘ (.)^g = (.)^{xi(g)} ∘ xi
        let g = p6("(1 4 2)");
        let lhs = xi().compose(&Automorphism::inner(g.clone()));
        assert_eq!(lhs, Automorphism::composite(xi_image(&g)).unwrap());
    }

    #[test]
    fn compose_aut_agrees_with_pointwise_application() {
        let elems = &S6.elements;
        let auts = [
            Automorphism::inner(p6("(1 2 3)")),
            xi(),
            eta(0),
            eta(1),
            Automorphism::composite(p6("(1 2)(3 6)")).unwrap(),
        ];
        for a in &auts {
            for b in &auts {
                let c = a.compose(b);
                for x in elems.iter().step_by(17) {
                    assert_eq!(c.apply(x), a.apply(&b.apply(x)));
                }
            }
        }
    }

    #[test]
    fn inverse_aut_roundtrip() {
        for psi in [Automorphism::inner(p6("(1 2 3 4)")), xi(), eta(0), eta(1)] {
            assert!(psi.compose(&psi.inverse_aut()).is_identity());
            assert!(psi.inverse_aut().compose(&psi).is_identity());
        }
    }

    #[test]
    fn aut_order_examples() {
        let pi5 = crate::symgroup::class_representative(&parse_partition("3,2").unwrap());
        assert_eq!(Automorphism::inner(pi5).order(), 6);
        assert_eq!(eta(0).order(), 8);
        assert_eq!(eta(1).order(), 8);
        assert_eq!(xi().order(), 2);
    }

    #[test]
    fn eta_squared_and_fix() {
        let target = Automorphism::inner(p6("(1 2 3 4)(5 6)"));
        for k in 0..2u8 {
            assert_eq!(eta(k).compose(&eta(k)), target);
            // fix = <(1 2 3 4)(5 6)>, a cyclic group of order 4
            let fix = eta(k).fix_subgroup();
            assert_eq!(fix.len(), 4);
            let gen = p6("(1 2 3 4)(5 6)");
            let mut acc = Permutation::identity(6);
            for _ in 0..4 {
                assert!(fix.contains(&acc), "missing power of generator");
                acc = compose(&acc, &gen);
            }
        }
    }

    #[test]
    fn fix_subgroup_sizes() {
        let pi = crate::symgroup::class_representative(&parse_partition("2^3").unwrap());
        assert_eq!(Automorphism::inner(pi).fix_subgroup().len(), 48);
        assert_eq!(xi().fix_subgroup().len(), 20);
    }

    #[test]
    fn fix_inner_matches_centralizer_order_n8() {
        for n in 3..=8usize {
            for t in crate::symgroup::partitions(n) {
                if crate::symgroup::centralizer_order(&t) > 50_000 {
                    continue;
                }
                let pi = crate::symgroup::class_representative(&t);
                assert_eq!(
                    Automorphism::inner(pi).fix_subgroup().len() as u128,
                    crate::symgroup::centralizer_order(&t)
                );
            }
        }
    }

    #[test]
    fn class_labels() {
        let l1 = aut_class_label(&Automorphism::inner(
            crate::symgroup::class_representative(&parse_partition("6").unwrap()),
        ))
        .unwrap();
        let l2 = aut_class_label(&Automorphism::inner(
            crate::symgroup::class_representative(&parse_partition("3,2,1").unwrap()),
        ))
        .unwrap();
        assert_eq!(l1, l2);
        assert_eq!(
            aut_class_label(&eta(0)).unwrap(),
            AutClassLabel::Outer(OuterTag::O42E)
        );
        assert_eq!(
            aut_class_label(&eta(1)).unwrap(),
            AutClassLabel::Outer(OuterTag::O42O)
        );
        assert_eq!(
            aut_class_label(&xi()).unwrap(),
            AutClassLabel::Outer(OuterTag::O16)
        );
    }

    #[test]
    fn thirteen_conjugacy_classes() {
        let classes = aut_s6_conjugacy_classes();
        assert_eq!(classes.len(), 13);
        assert_eq!(classes.iter().map(|(_, s)| s).sum::<usize>(), 1440);
        let outer: usize = classes
            .iter()
            .filter(|(l, _)| matches!(l, AutClassLabel::Outer(_)))
            .count();
        assert_eq!(outer, 5);
    }

    #[test]
    fn every_outer_composed_with_xi_inverse_is_inner() {
        let xi_inv = xi().inverse_aut();
        for g in S6.elements.iter().step_by(13) {
            let psi = Automorphism::composite(g.clone()).unwrap();
            assert!(psi.compose(&xi_inv).is_inner());
        }
    }

    #[test]
    fn outer_orders_are_10_8_4_or_2() {
        // Lam--Leep, verified exhaustively over the 720 outer automorphisms
        for g in &S6.elements {
            let psi = Automorphism::composite(g.clone()).unwrap();
            let ord = psi.order();
            assert!(
                matches!(ord, 10 | 8 | 4 | 2),
                "outer automorphism with order {ord}"
            );
        }
    }

    #[test]
    fn parse_automorphism_syntax() {
        assert_eq!(parse_automorphism(6, "xi").unwrap(), xi());
        assert_eq!(parse_automorphism(6, "eta0").unwrap(), eta(0));
        assert_eq!(
            parse_automorphism(5, "inner:(1 2 3)").unwrap(),
            Automorphism::inner(parse_cycles(5, "(1 2 3)").unwrap())
        );
        assert!(parse_automorphism(5, "outer:(1 2)").is_err());
        assert!(parse_automorphism(5, "xi").is_err());
    }

    #[test]
    fn compose_is_action_on_sampled_triples() {
        let elems: Vec<Permutation> = enumerate_group(6).unwrap().step_by(71).collect();
        let auts = [xi(), eta(0), Automorphism::inner(p6("(1 5)(2 3 4)"))];
        for a in &auts {
            for b in &auts {
                let ab = a.compose(b);
                for x in &elems {
                    assert_eq!(ab.apply(x), a.apply(&b.apply(x)));
                }
            }
        }
    }
}
