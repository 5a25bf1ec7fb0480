//! Finite quandles as explicit operation tables: axiom checking, the
//! generalized Alexander construction, coset quandles from triplets, power
//! quandles, and the order invariant.
//!
//! Tables are stored in s-map form: `table[x][y] = s_x(y)`, so row `x` is the
//! point symmetry at `x`.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::autgroup::Automorphism;
use crate::perm::{compose, Permutation};
use crate::symgroup::{factorial, ElementIndexer};
use crate::Error;

/// Default cap on materialized quandle size (6! elements).
pub const DEFAULT_TABLE_CAP: u64 = 720;
/// Default cap on the closure computed by [`inner_group_order`].
pub const DEFAULT_CLOSURE_CAP: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteQuandle {
    table: Vec<Vec<usize>>,
}

/// First violated axiom with witnesses; returned by [`FiniteQuandle::check_axioms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `s_x(x) != x`.
    Idempotence { x: usize },
    /// Row `x` is not a permutation.
    Bijectivity { x: usize },
    /// `s_x ∘ s_y != s_{s_x(y)} ∘ s_x` at witness `z`.
    Distributivity { x: usize, y: usize, z: usize },
}

impl FiniteQuandle {
    pub fn from_table(table: Vec<Vec<usize>>) -> Self {
        FiniteQuandle { table }
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    #[inline]
    pub fn s(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.table[x]
    }

    /// The trivial quandle: every point symmetry is the identity.
    pub fn trivial(n: usize) -> Self {
        FiniteQuandle {
            table: vec![(0..n).collect(); n],
        }
    }

    /// Validates (Q1') idempotence, (Q2') row bijectivity, and (Q3')
    /// self-distributivity; reports the first violation found.
    pub fn check_axioms(&self) -> Result<(), AxiomViolation> {
        let n = self.size();
        for x in 0..n {
            if self.table[x].len() != n || self.table[x][x] != x {
                return Err(AxiomViolation::Idempotence { x });
            }
            let mut seen = vec![false; n];
            for &v in &self.table[x] {
                if v >= n || seen[v] {
                    return Err(AxiomViolation::Bijectivity { x });
                }
                seen[v] = true;
            }
        }
        for x in 0..n {
            let sx = &self.table[x];
            for y in 0..n {
                let sy = &self.table[y];
                let sxy = &self.table[sx[y]];
                for z in 0..n {
                    if sx[sy[z]] != sxy[sx[z]] {
                        return Err(AxiomViolation::Distributivity { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    /// Same set with each point symmetry replaced by its `i`-fold
    /// self-composition.
    pub fn power(&self, i: u64) -> FiniteQuandle {
        assert!(i >= 1);
        let n = self.size();
        let table = (0..n)
            .map(|x| {
                let row = &self.table[x];
                let mut acc: Vec<usize> = (0..n).collect();
                for _ in 0..i {
                    acc = acc.iter().map(|&v| row[v]).collect();
                }
                acc
            })
            .collect();
        FiniteQuandle { table }
    }

    /// Least `m` with every row's `m`-fold composition equal to the identity;
    /// asserts all rows share the same order (homogeneous input).
    pub fn order(&self) -> Result<u64, Error> {
        let mut ord0 = None;
        for x in 0..self.size() {
            let row = Permutation::from_images(self.table[x].clone())
                .map_err(|_| Error::Other(format!("row {x} is not a permutation")))?;
            let o = row.order();
            match ord0 {
                None => ord0 = Some((x, o)),
                Some((x0, o0)) if o0 != o => {
                    return Err(Error::RowOrderMismatch {
                        row_a: x0,
                        ord_a: o0,
                        row_b: x,
                        ord_b: o,
                    })
                }
                _ => {}
            }
        }
        Ok(ord0.map(|(_, o)| o).unwrap_or(1))
    }

    /// Number of distinct rows, i.e. `|{s_x}|`.
    pub fn distinct_symmetry_count(&self) -> usize {
        let set: HashSet<&Vec<usize>> = self.table.iter().collect();
        set.len()
    }

    /// Elements of the permutation group on the underlying set generated by
    /// the rows, by breadth-first closure with deduplication. Each element is
    /// an image list of length `size()`.
    pub fn inner_group_elements(&self, cap: u64) -> Result<Vec<Vec<usize>>, Error> {
        let n = self.size();
        let generators: Vec<Vec<usize>> = {
            let set: HashSet<&Vec<usize>> = self.table.iter().collect();
            set.into_iter().cloned().collect()
        };
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let id: Vec<usize> = (0..n).collect();
        seen.insert(id.clone());
        let mut frontier = vec![id];
        let mut out = Vec::new();
        while let Some(cur) = frontier.pop() {
            for g in &generators {
                let next: Vec<usize> = cur.iter().map(|&v| g[v]).collect();
                if seen.insert(next.clone()) {
                    if seen.len() as u64 > cap {
                        return Err(Error::ClosureCapExceeded { cap });
                    }
                    frontier.push(next);
                }
            }
            out.push(cur);
        }
        Ok(out)
    }

    /// Order of the group generated by the rows.
    pub fn inner_group_order(&self, cap: u64) -> Result<u64, Error> {
        Ok(self.inner_group_elements(cap)?.len() as u64)
    }

    /// Plain-text serialization: line 1 is `N`, then `N` rows of `N`
    /// space-separated integers (the s-map table).
    pub fn to_plain_text(&self) -> String {
        let mut out = format!("{}\n", self.size());
        for row in &self.table {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_plain_text(text: &str) -> Result<Self, Error> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty quandle file".into()))?
            .trim()
            .parse()
            .map_err(|_| Error::Parse("bad size line".into()))?;
        let mut table = Vec::with_capacity(n);
        for _ in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("missing table row".into()))?;
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::Parse("bad table entry".into())))
                .collect::<Result<_, _>>()?;
            if row.len() != n {
                return Err(Error::Parse("row length mismatch".into()));
            }
            table.push(row);
        }
        Ok(FiniteQuandle { table })
    }
}

/// JSON wrapper with construction metadata.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuandleFile {
    pub n: Option<usize>,
    pub automorphism: Option<String>,
    /// Always "s-map": `table[x][y] = s_x(y)`.
    pub convention: String,
    pub size: usize,
    pub table: Vec<Vec<usize>>,
}

impl QuandleFile {
    pub fn new(q: &FiniteQuandle, n: Option<usize>, automorphism: Option<String>) -> Self {
        QuandleFile {
            n,
            automorphism,
            convention: "s-map".into(),
            size: q.size(),
            table: q.table().to_vec(),
        }
    }

    pub fn quandle(&self) -> FiniteQuandle {
        FiniteQuandle::from_table(self.table.clone())
    }
}

/// The generalized Alexander quandle `Q(S_n, psi)`: elements are the `n!`
/// permutations indexed by Lehmer rank, `s_g(h) = g·psi(g^{-1}·h)`.
pub fn general_alexander(n: usize, psi: &Automorphism, cap: u64) -> Result<FiniteQuandle, Error> {
    assert_eq!(psi.degree(), n);
    let size = factorial(n);
    if size > cap {
        return Err(Error::TableCapExceeded { needed: size, cap });
    }
    let indexer = ElementIndexer::new(n);
    let elements: Vec<Permutation> = (0..size).map(|r| indexer.unrank(r)).collect();
    let psi_images: Vec<Permutation> = elements.iter().map(|x| psi.apply(x)).collect();
    let size = size as usize;
    let mut table = vec![vec![0usize; size]; size];
    for (gi, g) in elements.iter().enumerate() {
        let g_inv = g.inverse();
        for (hi, h) in elements.iter().enumerate() {
            let inner = indexer.rank(&compose(&g_inv, h)) as usize;
            let s = compose(g, &psi_images[inner]);
            table[gi][hi] = indexer.rank(&s) as usize;
        }
    }
    Ok(FiniteQuandle { table })
}

/// A quandle triplet `(S_n, K, psi)` with `K ⊆ Fix(psi, S_n)`.
#[derive(Debug, Clone)]
pub struct QuandleTriplet {
    pub n: usize,
    pub subgroup: Vec<Permutation>,
    pub psi: Automorphism,
}

impl QuandleTriplet {
    pub fn new(n: usize, subgroup: Vec<Permutation>, psi: Automorphism) -> Result<Self, Error> {
        let set: HashSet<&Permutation> = subgroup.iter().collect();
        for a in &subgroup {
            if !set.contains(&a.inverse()) {
                return Err(Error::NotASubgroup);
            }
            for b in &subgroup {
                if !set.contains(&compose(a, b)) {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        for k in &subgroup {
            if &psi.apply(k) != k {
                return Err(Error::SubgroupNotFixed);
            }
        }
        Ok(QuandleTriplet { n, subgroup, psi })
    }
}

/// Coset quandle `Q(S_n, K, psi)` on the left cosets `G/K`, with
/// `s_{[g]}([h]) = [g·psi(g^{-1}h)]`. Well-definedness is asserted by
/// recomputing each entry with alternative coset representatives.
pub fn coset_quandle(t: &QuandleTriplet, cap: u64) -> Result<FiniteQuandle, Error> {
    let size = factorial(t.n);
    let index = size / t.subgroup.len() as u64;
    if index > cap {
        return Err(Error::TableCapExceeded { needed: index, cap });
    }
    let indexer = ElementIndexer::new(t.n);
    // coset id per rank, assigned in rank order so the table is deterministic
    let mut coset_of = vec![usize::MAX; size as usize];
    // (primary representative, alternative representative)
    let mut reps: Vec<(Permutation, Permutation)> = Vec::new();
    for r in 0..size {
        if coset_of[r as usize] != usize::MAX {
            continue;
        }
        let g = indexer.unrank(r);
        let cid = reps.len();
        let mut members = Vec::new();
        for k in &t.subgroup {
            let m = compose(&g, k);
            let mr = indexer.rank(&m) as usize;
            debug_assert!(coset_of[mr] == usize::MAX || coset_of[mr] == cid);
            coset_of[mr] = cid;
            members.push(m);
        }
        members.sort();
        let alt = if members.len() > 1 {
            members[1].clone()
        } else {
            members[0].clone()
        };
        reps.push((g, alt));
    }
    let count = reps.len();
    let entry = |g: &Permutation, h: &Permutation| -> usize {
        let v = compose(g, &t.psi.apply(&compose(&g.inverse(), h)));
        coset_of[indexer.rank(&v) as usize]
    };
    let mut table = vec![vec![0usize; count]; count];
    for (gi, (g, g_alt)) in reps.iter().enumerate() {
        for (hi, (h, h_alt)) in reps.iter().enumerate() {
            let v = entry(g, h);
            // well-definedness: a second pair of representatives must agree
            let v2 = entry(g_alt, h_alt);
            assert_eq!(v, v2, "coset quandle entry not well-defined");
            table[gi][hi] = v;
        }
    }
    Ok(FiniteQuandle { table })
}

/// Left-translation map `x ↦ rank(h·unrank(x))` on `Q(S_n, psi)`; a quandle
/// automorphism for every `h`.
pub fn left_translation(n: usize, h: &Permutation) -> Vec<usize> {
    let indexer = ElementIndexer::new(n);
    (0..indexer.size())
        .map(|r| indexer.rank(&compose(h, &indexer.unrank(r))) as usize)
        .collect()
}

/// Checks that `f` (a bijection given as an image vector) is a quandle
/// homomorphism from `q` to `r` on every pair.
pub fn is_quandle_homomorphism(q: &FiniteQuandle, r: &FiniteQuandle, f: &[usize]) -> bool {
    let n = q.size();
    if r.size() != n || f.len() != n {
        return false;
    }
    for x in 0..n {
        for y in 0..n {
            if f[q.s(x, y)] != r.s(f[x], f[y]) {
                return false;
            }
        }
    }
    true
}

/// Deduplicated rows of the table, as a map row -> first index.
pub fn distinct_rows(q: &FiniteQuandle) -> HashMap<Vec<usize>, usize> {
    let mut map = HashMap::new();
    for (i, row) in q.table().iter().enumerate() {
        map.entry(row.clone()).or_insert(i);
    }
    map
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgroup::{eta, Automorphism};
    use crate::perm::{parse_cycles, parse_partition};
    use crate::symgroup::class_representative;

    fn inner(n: usize, cycles: &str) -> Automorphism {
        Automorphism::inner(parse_cycles(n, cycles).unwrap())
    }

    #[test]
    fn trivial_quandle_is_valid() {
        assert!(FiniteQuandle::trivial(5).check_axioms().is_ok());
        assert_eq!(FiniteQuandle::trivial(5).order().unwrap(), 1);
        assert_eq!(FiniteQuandle::trivial(5).distinct_symmetry_count(), 1);
        assert_eq!(FiniteQuandle::trivial(5).inner_group_order(10).unwrap(), 1);
    }

    #[test]
    fn idempotence_violation_detected() {
        let mut q = FiniteQuandle::trivial(3);
        q.table[0][0] = 1;
        q.table[0][1] = 0;
        assert_eq!(
            q.check_axioms(),
            Err(AxiomViolation::Idempotence { x: 0 })
        );
    }

    #[test]
    fn alexander_s3_inner_is_valid() {
        let q = general_alexander(3, &inner(3, "(1 2 3)"), 720).unwrap();
        assert!(q.check_axioms().is_ok());
    }

    #[test]
    fn identity_automorphism_gives_trivial_quandle() {
        let q = general_alexander(3, &Automorphism::identity(3), 720).unwrap();
        assert_eq!(q, FiniteQuandle::trivial(6));
    }

    #[test]
    fn alexander_s3_row_at_identity_is_conjugation() {
        // direct evaluation oracle over the 6 elements: s_e(h) = psi(h)
        let pi = parse_cycles(3, "(1 2)").unwrap();
        let q = general_alexander(3, &Automorphism::inner(pi.clone()), 720).unwrap();
        let indexer = ElementIndexer::new(3);
        let e_rank = indexer.rank(&Permutation::identity(3)) as usize;
        for h in 0..6usize {
            let hp = indexer.unrank(h as u64);
            let expected = crate::perm::conjugate(&hp, &pi);
            assert_eq!(q.s(e_rank, h), indexer.rank(&expected) as usize);
        }
    }

    #[test]
    fn quandle_order_examples() {
        let pi = class_representative(&parse_partition("3,2").unwrap());
        let q = general_alexander(5, &Automorphism::inner(pi), 720).unwrap();
        assert_eq!(q.order().unwrap(), 6);
    }

    #[test]
    fn distinct_symmetry_count_examples() {
        let pi = parse_cycles(5, "(1 2)(3 4)").unwrap();
        let q = general_alexander(5, &Automorphism::inner(pi), 720).unwrap();
        assert_eq!(q.distinct_symmetry_count(), 15); // 120 / 8
    }

    #[test]
    fn power_quandle_matches_power_of_automorphism() {
        let psi = inner(4, "(1 2 3)");
        let q = general_alexander(4, &psi, 720).unwrap();
        assert_eq!(q.power(1), q);
        for i in 2..=3u64 {
            let direct = general_alexander(4, &psi.pow(i), 720).unwrap();
            assert_eq!(q.power(i), direct, "i = {i}");
        }
        let ord = q.order().unwrap();
        assert_eq!(q.power(ord), FiniteQuandle::trivial(24));
    }

    #[test]
    fn inner_group_order_s5_five_cycle() {
        let pi = class_representative(&parse_partition("5").unwrap());
        let q = general_alexander(5, &Automorphism::inner(pi), 720).unwrap();
        assert_eq!(q.inner_group_order(DEFAULT_CLOSURE_CAP).unwrap(), 300); // 60 * 5
    }

    #[test]
    fn coset_quandle_with_trivial_subgroup_matches_alexander() {
        let psi = inner(3, "(1 2)");
        let t = QuandleTriplet::new(3, vec![Permutation::identity(3)], psi.clone()).unwrap();
        let qc = coset_quandle(&t, 720).unwrap();
        let qa = general_alexander(3, &psi, 720).unwrap();
        assert_eq!(qc, qa);
    }

    #[test]
    fn coset_quandle_s3_by_full_fix() {
        // G = S_3, psi = Inner((0 1)), K = C((0 1)) of order 2 -> 3 elements
        let pi = parse_cycles(3, "(1 2)").unwrap();
        let psi = Automorphism::inner(pi);
        let k = psi.fix_subgroup();
        assert_eq!(k.len(), 2);
        let t = QuandleTriplet::new(3, k, psi).unwrap();
        let q = coset_quandle(&t, 720).unwrap();
        assert_eq!(q.size(), 3);
        assert!(q.check_axioms().is_ok());
    }

    #[test]
    fn coset_quandle_full_group_is_point() {
        let psi = Automorphism::identity(3);
        let everyone: Vec<Permutation> = crate::symgroup::enumerate_group(3).unwrap().collect();
        let t = QuandleTriplet::new(3, everyone, psi).unwrap();
        let q = coset_quandle(&t, 720).unwrap();
        assert_eq!(q.size(), 1);
    }

    #[test]
    fn triplet_rejects_unfixed_subgroup() {
        // K = <(0 1 2)> is not inside Fix(Inner((0 1)))
        let k = {
            let c = parse_cycles(3, "(1 2 3)").unwrap();
            vec![
                Permutation::identity(3),
                c.clone(),
                compose(&c, &c),
            ]
        };
        let psi = inner(3, "(1 2)");
        assert!(matches!(
            QuandleTriplet::new(3, k, psi),
            Err(Error::SubgroupNotFixed)
        ));
    }

    #[test]
    fn constructed_quandles_pass_axioms_up_to_n5() {
        for n in 3..=5usize {
            for t in crate::symgroup::partitions(n) {
                let pi = class_representative(&t);
                let q = general_alexander(n, &Automorphism::inner(pi), 720).unwrap();
                assert!(q.check_axioms().is_ok(), "n={n} shape {t}");
            }
        }
    }

    #[test]
    fn order_and_fix_match_automorphism_up_to_n5() {
        for n in 3..=5usize {
            for t in crate::symgroup::partitions(n) {
                let pi = class_representative(&t);
                let psi = Automorphism::inner(pi);
                let q = general_alexander(n, &psi, 720).unwrap();
                assert_eq!(q.order().unwrap(), psi.order(), "shape {t}");
                let fix = psi.fix_subgroup().len();
                assert_eq!(
                    q.distinct_symmetry_count() * fix,
                    factorial(n) as usize,
                    "shape {t}"
                );
            }
        }
    }

    #[test]
    fn eta_quandle_order_is_eight() {
        let q = general_alexander(6, &eta(0), 720).unwrap();
        assert_eq!(q.order().unwrap(), 8);
        assert_eq!(q.distinct_symmetry_count(), 180); // 720 / |fix(eta_0)| = 720 / 4
    }

    #[test]
    fn left_translations_are_quandle_automorphisms() {
        for n in 3..=4usize {
            let psi = inner(n, "(1 2 3)");
            let q = general_alexander(n, &psi, 720).unwrap();
            for h in crate::symgroup::enumerate_group(n).unwrap().step_by(5) {
                let f = left_translation(n, &h);
                assert!(is_quandle_homomorphism(&q, &q, &f), "h = {h}");
            }
        }
    }

    #[test]
    fn plain_text_roundtrip() {
        let q = general_alexander(3, &inner(3, "(1 2)"), 720).unwrap();
        let text = q.to_plain_text();
        assert_eq!(FiniteQuandle::from_plain_text(&text).unwrap(), q);
    }

    #[test]
    fn table_cap_respected() {
        assert!(matches!(
            general_alexander(7, &Automorphism::identity(7), 720),
            Err(Error::TableCapExceeded { .. })
        ));
    }
}
