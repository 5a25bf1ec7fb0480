//! Invariant battery computed symbolically from cycle types where possible:
//! order, fix size, parity, the inner-group descriptor, power chains, and
//! double-coset counts via Burnside/Frobenius bucketing (no quandle tables,
//! no element-by-element orbit walks).

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::autgroup::{outer_class_representative, AutClassLabel, AutKind};
use crate::perm::{CycleType, Parity, Permutation};
use crate::symgroup::centralizer_order;
use crate::Error;

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// `inn(Q(pi)) ≅ A_n ⋊ C_m`, a semidirect-but-not-direct product exactly
/// when `pi` is odd (proven for n ≥ 5 and nontrivial pi).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InnDescriptor {
    pub n: usize,
    pub m: u64,
    pub semidirect: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerTriple {
    pub i: u64,
    pub ord: u64,
    #[serde(with = "u128_string")]
    pub fix: u128,
    pub parity: Option<Parity>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantProfile {
    pub label: String,
    pub ord: u64,
    #[serde(with = "u128_string")]
    pub fix: u128,
    pub parity: Option<Parity>,
    pub inn: Option<InnDescriptor>,
    pub powers: Vec<PowerTriple>,
    #[serde(with = "opt_biguint_string")]
    pub dc_alt: Option<BigUint>,
    /// Diagnostic only: not known to be a quandle invariant and never used
    /// to separate classes.
    #[serde(with = "opt_biguint_string")]
    pub dc_full: Option<BigUint>,
    pub flags: Vec<String>,
}

mod u128_string {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &u128, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u128, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

mod opt_biguint_string {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => s.serialize_some(&x.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
        let s = Option::<String>::deserialize(d)?;
        s.map(|s| BigUint::from_str(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// (ord, fix, parity) of the class of `pi^i`, from cycle-type arithmetic.
/// The parity slot is filled only for n ≥ 5, where it is a licensed
/// invariant through the inner-group structure.
fn inner_triple(n: usize, t: &CycleType, i: u64) -> PowerTriple {
    let ti = t.power(i);
    PowerTriple {
        i,
        ord: ti.order(),
        fix: centralizer_order(&ti),
        parity: if n >= 5 { Some(ti.parity()) } else { None },
    }
}

/// The derived descriptor of `inn(Q(pi))`; `None` below degree 5 or for the
/// trivial class, where the dichotomy is not established.
pub fn inn_descriptor(n: usize, t: &CycleType) -> Option<InnDescriptor> {
    let m = t.order();
    if n < 5 || m == 1 {
        return None;
    }
    Some(InnDescriptor {
        n,
        m,
        semidirect: t.parity() == Parity::Odd,
    })
}

/// Full invariant profile of an `Aut(S_n)`-class. Double-coset fields are
/// filled only on request (they are the only expensive entries).
pub fn profile(
    n: usize,
    label: &AutClassLabel,
    with_double_cosets: bool,
    budget: u64,
) -> Result<InvariantProfile, Error> {
    let mut flags = Vec::new();
    let (ord, fix, parity, inn, powers) = match label {
        AutClassLabel::Inner(shapes) => {
            let t = &shapes[0];
            let ord = t.order();
            let fix = centralizer_order(t);
            // merged S_6 labels: every slot must agree across the pair,
            // except parity, which may genuinely differ within one class
            let mut parity = Some(t.parity());
            for other in &shapes[1..] {
                assert_eq!(other.order(), ord, "merged shapes with distinct orders");
                assert_eq!(centralizer_order(other), fix);
                if other.parity() != t.parity() {
                    parity = None;
                    flags.push("parity not constant on merged class".to_string());
                }
            }
            if n < 5 {
                parity = None;
            }
            let inn = inn_descriptor(n, t).filter(|_| parity.is_some());
            let powers: Vec<PowerTriple> = (2..ord)
                .map(|i| {
                    let triple = inner_triple(n, t, i);
                    for other in &shapes[1..] {
                        let alt = inner_triple(n, other, i);
                        assert_eq!(
                            (alt.ord, alt.fix),
                            (triple.ord, triple.fix),
                            "merged shapes with distinct power data"
                        );
                    }
                    triple
                })
                .collect();
            (ord, fix, parity, inn, powers)
        }
        AutClassLabel::Outer(tag) => {
            let rep = outer_class_representative(*tag);
            let ord = rep.order();
            let fix = rep.fix_subgroup().len() as u128;
            let powers = (2..ord)
                .map(|i| {
                    let p = rep.pow(i);
                    let parity = match p.kind() {
                        AutKind::Inner(pi) => Some(pi.parity()),
                        AutKind::Composite(_) => None,
                    };
                    PowerTriple {
                        i,
                        ord: p.order(),
                        fix: p.fix_subgroup().len() as u128,
                        parity,
                    }
                })
                .collect();
            (ord, fix, None, None, powers)
        }
    };

    let (dc_alt, dc_full) = if with_double_cosets {
        match label {
            AutClassLabel::Inner(shapes) => {
                let t = &shapes[0];
                flags.push("dc_full is diagnostic, not a proven invariant".to_string());
                (
                    Some(dc_alt_invariant(n, t, budget)?),
                    Some(dc_full_diagnostic(n, t, budget)?),
                )
            }
            AutClassLabel::Outer(_) => (None, None),
        }
    } else {
        (None, None)
    };

    Ok(InvariantProfile {
        label: label.to_string(),
        ord,
        fix,
        parity,
        inn,
        powers,
        dc_alt,
        dc_full,
        flags,
    })
}

/// Cycle-type histogram of a subgroup of S_n; counts are big integers since
/// centralizers reach ~10^32 at n = 30.
type TypeCounts = BTreeMap<CycleType, BigUint>;

/// `|H \ S_n / K|` by Burnside over the action `(h,k)·g = h g k^{-1}`:
/// the pair `(h,k)` fixes some `g` iff `h` and `k` are conjugate in `S_n`
/// (same cycle type), and then fixes exactly `|C_{S_n}(h)|` of them. So the
/// orbit count is `Σ_t |H_t| |K_t| z_t / (|H| |K|)` over cycle types `t`,
/// with `z_t` the centralizer order. Cost is `O(|H| + |K|)`, not `O(|H||K|)`.
pub fn double_coset_count(h: &[Permutation], k: &[Permutation], n: usize) -> Result<BigUint, Error> {
    let bucket = |elems: &[Permutation]| -> TypeCounts {
        let mut m = TypeCounts::new();
        for p in elems {
            debug_assert_eq!(p.degree(), n);
            *m.entry(p.cycle_type()).or_default() += 1u32;
        }
        m
    };
    let denom = BigUint::from(h.len()) * BigUint::from(k.len());
    burnside_sum(&bucket(h), &bucket(k), denom)
}

fn burnside_sum(h: &TypeCounts, k: &TypeCounts, denom: BigUint) -> Result<BigUint, Error> {
    let mut sum = BigUint::from(0u32);
    for (t, ch) in h {
        if let Some(ck) = k.get(t) {
            sum += ch * ck * BigUint::from(centralizer_order(t));
        }
    }
    let (q, r) = sum.div_rem(&denom);
    if r != BigUint::from(0u32) {
        return Err(Error::InexactDivision);
    }
    Ok(q)
}

/// Number of partitions of `n`; the size bound for any cycle-type histogram
/// at degree `n`, and what the symbolic double-coset budget is checked
/// against.
fn partition_count(n: usize) -> u128 {
    let mut dp = vec![0u128; n + 1];
    dp[0] = 1;
    for part in 1..=n {
        for s in part..=n {
            dp[s] += dp[s - part];
        }
    }
    dp[n]
}

fn euler_phi(n: usize) -> u64 {
    let mut n = n as u64;
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out -= out / p;
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn big_factorial(n: usize) -> BigUint {
    (1..=n as u64).map(BigUint::from).product()
}

fn exact_div(num: BigUint, den: BigUint) -> BigUint {
    let (q, r) = num.div_rem(&den);
    debug_assert_eq!(r, BigUint::from(0u32));
    q
}

/// Histogram keyed by a raw multiset of cycle lengths (sorted descending);
/// intermediate convolution states cover only part of the n points, so the
/// keys are not yet partitions of n.
type PartsCounts = BTreeMap<Vec<usize>, BigUint>;

fn convolve(x: &PartsCounts, y: &PartsCounts) -> PartsCounts {
    let mut out = PartsCounts::new();
    for (p, cp) in x {
        for (q, cq) in y {
            let mut parts = p.clone();
            parts.extend_from_slice(q);
            parts.sort_unstable_by(|u, v| v.cmp(u));
            *out.entry(parts).or_default() += cp * cq;
        }
    }
    out
}

/// Cycle-type histogram of the wreath product `C_a ≀ S_m` in its natural
/// action on `a·m` points. An element is a twist vector in `C_a^m` together
/// with `sigma` in `S_m`; a `sigma`-cycle of length `l` whose twists sum to
/// `j` acts on its `l·a` points as `gcd(a,j)` cycles of length
/// `l·a/gcd(a,j)`. Per cycle there are `a^(l-1)` twist vectors for each `j`,
/// and `phi(a/d)` residues `j` mod `a` with `gcd(a,j) = d`.
fn wreath_histogram(a: usize, m: usize) -> PartsCounts {
    let mut out = PartsCounts::new();
    for mu in crate::symgroup::partitions(m) {
        // class size of sigma's with cycle type mu
        let sigma_count = exact_div(
            big_factorial(m),
            BigUint::from(centralizer_order(&mu)),
        );
        let mut acc = PartsCounts::new();
        acc.insert(Vec::new(), BigUint::from(1u32));
        for &l in mu.parts() {
            let mut per_cycle = PartsCounts::new();
            let twists = BigUint::from(a as u64).pow((l - 1) as u32);
            for d in divisors(a) {
                *per_cycle.entry(vec![l * a / d; d]).or_default() +=
                    &twists * euler_phi(a / d);
            }
            acc = convolve(&acc, &per_cycle);
        }
        for (parts, c) in acc {
            *out.entry(parts).or_default() += c * &sigma_count;
        }
    }
    out
}

/// Full and even-part cycle-type histograms of `C_{S_n}(pi)` for `pi` of
/// shape `t`, with no element enumeration: the centralizer is the direct
/// product over distinct cycle lengths `a` of `C_a ≀ S_{m_a}` on disjoint
/// supports, so its histogram is the convolution of the wreath factors'.
/// The budget bounds the histogram size p(n), the only quantity here that
/// grows without bound in `n`.
fn centralizer_type_counts(n: usize, t: &CycleType, budget: u64) -> Result<(TypeCounts, TypeCounts), Error> {
    debug_assert_eq!(t.degree(), n);
    let needed = partition_count(n);
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut acc = PartsCounts::new();
    acc.insert(Vec::new(), BigUint::from(1u32));
    for (a, m) in t.multiplicities() {
        acc = convolve(&acc, &wreath_histogram(a, m));
    }
    let mut full = TypeCounts::new();
    let mut alt = TypeCounts::new();
    for (parts, c) in acc {
        let shape = CycleType::new(parts).expect("convolved parts sum to n");
        if shape.parity() == Parity::Even {
            *alt.entry(shape.clone()).or_default() += &c;
        }
        *full.entry(shape).or_default() += c;
    }
    debug_assert_eq!(
        full.values().sum::<BigUint>(),
        BigUint::from(centralizer_order(t))
    );
    Ok((full, alt))
}

/// `|K_alt \ S_n / K|` for `K = C_{S_n}(pi)`, `K_alt = K ∩ A_n`, `pi` of
/// shape `t`. A proven quandle invariant of `Q(S_n, Inner(pi))`.
pub fn dc_alt_invariant(n: usize, t: &CycleType, budget: u64) -> Result<BigUint, Error> {
    let (full, alt) = centralizer_type_counts(n, t, budget)?;
    let size_full: BigUint = full.values().sum();
    let size_alt: BigUint = alt.values().sum();
    burnside_sum(&alt, &full, size_alt * size_full)
}

/// `|K \ S_n / K|`. Diagnostic only: the underlying article leaves open
/// whether this is a quandle invariant, so it must never separate classes.
pub fn dc_full_diagnostic(n: usize, t: &CycleType, budget: u64) -> Result<BigUint, Error> {
    let (full, _) = centralizer_type_counts(n, t, budget)?;
    let size: BigUint = full.values().sum();
    burnside_sum(&full, &full, size.clone() * size)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgroup::{inner_class_label, OuterTag, OUTER_TAGS};
    use crate::perm::parse_partition;
    use crate::quandle::general_alexander;
    use crate::autgroup::Automorphism;
    use crate::symgroup::{
        centralizer_elements, class_representative, enumerate_group, factorial,
        for_each_centralizer_element, partitions,
    };

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn trivial_double_cosets() {
        for n in 1..=6usize {
            let e = vec![Permutation::identity(n)];
            assert_eq!(double_coset_count(&e, &e, n).unwrap(), big(factorial(n)));
            let g: Vec<Permutation> = enumerate_group(n).unwrap().collect();
            assert_eq!(double_coset_count(&g, &g, n).unwrap(), big(1));
        }
    }

    #[test]
    fn profile_paper_values() {
        // merged class (2^3) ∪ (2,1^4): ord 2, fix 48
        let label = inner_class_label(6, &parse_partition("2^3").unwrap());
        let p = profile(6, &label, false, DEFAULT_BUDGET).unwrap();
        assert_eq!((p.ord, p.fix), (2, 48));
        // outer (5,1): ord 10, fix 5
        let p = profile(6, &AutClassLabel::Outer(OuterTag::O51), false, DEFAULT_BUDGET).unwrap();
        assert_eq!((p.ord, p.fix), (10, 5));
        // n=8 shape (5,3): ord 15, fix 15
        let label = AutClassLabel::inner_single(parse_partition("5,3").unwrap());
        let p = profile(8, &label, false, DEFAULT_BUDGET).unwrap();
        assert_eq!((p.ord, p.fix), (15, 15));
    }

    #[test]
    fn outer_table_values() {
        let expect = [
            (OuterTag::O51, 10, 5),
            (OuterTag::O42E, 8, 4),
            (OuterTag::O42O, 8, 4),
            (OuterTag::O2211, 4, 4),
            (OuterTag::O16, 2, 20),
        ];
        for (tag, ord, fix) in expect {
            let p = profile(6, &AutClassLabel::Outer(tag), false, DEFAULT_BUDGET).unwrap();
            assert_eq!((p.ord, p.fix), (ord, fix as u128), "{tag}");
        }
        assert_eq!(expect.len(), OUTER_TAGS.len());
    }

    #[test]
    fn inn_descriptor_parity() {
        // (4,2) even -> direct; (4,1,1) odd -> semidirect
        let d = inn_descriptor(6, &parse_partition("4,2").unwrap()).unwrap();
        assert_eq!((d.m, d.semidirect), (4, false));
        let d = inn_descriptor(6, &parse_partition("4,1^2").unwrap()).unwrap();
        assert_eq!((d.m, d.semidirect), (4, true));
        // the n=8 pair that parity cannot separate
        let a = inn_descriptor(8, &parse_partition("3,3,2").unwrap()).unwrap();
        let b = inn_descriptor(8, &parse_partition("3,2,1^3").unwrap()).unwrap();
        assert_eq!(a, b);
        assert!(a.semidirect);
        // out of scope below degree 5
        assert!(inn_descriptor(4, &parse_partition("2,1,1").unwrap()).is_none());
    }

    #[test]
    fn n10_separator_values() {
        let t1 = parse_partition("4,2^3").unwrap();
        let t2 = parse_partition("4,2,1^4").unwrap();
        assert_eq!(dc_alt_invariant(10, &t1, DEFAULT_BUDGET).unwrap(), big(240));
        assert_eq!(dc_alt_invariant(10, &t2, DEFAULT_BUDGET).unwrap(), big(291));
    }

    #[test]
    fn n15_obstruction_values() {
        let t1 = parse_partition("9,3^2").unwrap();
        let t2 = parse_partition("9,3,1^3").unwrap();
        let dc = big(101_415_520);
        assert_eq!(dc_alt_invariant(15, &t1, DEFAULT_BUDGET).unwrap(), dc);
        assert_eq!(dc_alt_invariant(15, &t2, DEFAULT_BUDGET).unwrap(), dc);
        assert_eq!(
            dc_full_diagnostic(15, &t1, DEFAULT_BUDGET).unwrap(),
            big(50_716_744)
        );
        assert_eq!(
            dc_full_diagnostic(15, &t2, DEFAULT_BUDGET).unwrap(),
            big(55_008_600)
        );
    }

    #[test]
    fn dc_full_of_trivial_shape_is_one() {
        for n in 3..=8usize {
            let t = CycleType::new(vec![1; n]).unwrap();
            assert_eq!(dc_full_diagnostic(n, &t, DEFAULT_BUDGET).unwrap(), big(1));
        }
    }

    #[test]
    fn budget_is_enforced() {
        // p(12) = 77 distinct cycle types, above a budget of 50
        let t = parse_partition("1^12").unwrap();
        assert!(matches!(
            dc_alt_invariant(12, &t, 50),
            Err(Error::BudgetExceeded { needed: 77, .. })
        ));
    }

    #[test]
    fn symbolic_histogram_matches_enumeration_up_to_n7() {
        for n in 1..=7usize {
            for t in partitions(n) {
                let (full, alt) = centralizer_type_counts(n, &t, DEFAULT_BUDGET).unwrap();
                let mut full_e = TypeCounts::new();
                let mut alt_e = TypeCounts::new();
                for_each_centralizer_element(&class_representative(&t), |g| {
                    let shape = g.cycle_type();
                    if g.parity() == Parity::Even {
                        *alt_e.entry(shape.clone()).or_default() += 1u32;
                    }
                    *full_e.entry(shape).or_default() += 1u32;
                });
                assert_eq!(full, full_e, "full histogram for {t}");
                assert_eq!(alt, alt_e, "alternating histogram for {t}");
            }
        }
    }

    #[test]
    fn symbolic_histogram_totals_at_scale() {
        // total mass must equal the centralizer order even where enumeration
        // is far out of reach (~2.4e11 here)
        let t = parse_partition("4^2,2^10,1^2").unwrap();
        let (full, alt) = centralizer_type_counts(30, &t, DEFAULT_BUDGET).unwrap();
        let total: BigUint = full.values().sum();
        assert_eq!(total, BigUint::from(centralizer_order(&t)));
        // index of the even part is 2 whenever the centralizer has any odd
        // element, e.g. one of the 2-cycles itself
        let even: BigUint = alt.values().sum();
        assert_eq!(even * 2u32, BigUint::from(centralizer_order(&t)));
    }

    /// Direct orbit count of the (H × K)-action on S_n, the slow oracle for
    /// the Burnside kernel.
    fn naive_orbit_count(h: &[Permutation], k: &[Permutation], n: usize) -> u64 {
        use crate::perm::compose;
        use crate::symgroup::ElementIndexer;
        let indexer = ElementIndexer::new(n);
        let size = indexer.size() as usize;
        let mut seen = vec![false; size];
        let mut orbits = 0;
        for start in 0..size {
            if seen[start] {
                continue;
            }
            orbits += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(r) = stack.pop() {
                let g = indexer.unrank(r as u64);
                for a in h {
                    for b in k {
                        let img = indexer.rank(&compose(&compose(a, &g), &b.inverse())) as usize;
                        if !seen[img] {
                            seen[img] = true;
                            stack.push(img);
                        }
                    }
                }
            }
        }
        orbits
    }

    #[test]
    fn burnside_matches_naive_orbits_on_centralizer_pairs() {
        for n in 3..=5usize {
            let shapes = partitions(n);
            let cents: Vec<Vec<Permutation>> = shapes
                .iter()
                .map(|t| centralizer_elements(&class_representative(t), 1 << 20).unwrap())
                .collect();
            for a in &cents {
                for b in &cents {
                    assert_eq!(
                        double_coset_count(a, b, n).unwrap(),
                        big(naive_orbit_count(a, b, n))
                    );
                }
            }
        }
    }

    #[test]
    fn burnside_matches_naive_orbits_n6_spot() {
        for (sa, sb) in [("4,2", "4,2"), ("3,2,1", "2^3"), ("6", "3,1^3")] {
            let a = centralizer_elements(
                &class_representative(&parse_partition(sa).unwrap()),
                1 << 20,
            )
            .unwrap();
            let b = centralizer_elements(
                &class_representative(&parse_partition(sb).unwrap()),
                1 << 20,
            )
            .unwrap();
            assert_eq!(
                double_coset_count(&a, &b, 6).unwrap(),
                big(naive_orbit_count(&a, &b, 6))
            );
        }
    }

    #[test]
    fn symbolic_profile_matches_materialized_quandle() {
        for n in 3..=5usize {
            for t in partitions(n) {
                if t.order() == 1 {
                    continue; // trivial quandle rows have no common order
                }
                let label = AutClassLabel::inner_single(t.clone());
                let p = profile(n, &label, false, DEFAULT_BUDGET).unwrap();
                let q = general_alexander(
                    n,
                    &Automorphism::inner(class_representative(&t)),
                    1000,
                )
                .unwrap();
                assert_eq!(p.ord, q.order().unwrap());
                assert_eq!(
                    p.fix,
                    (factorial(n) / q.distinct_symmetry_count() as u64) as u128
                );
            }
        }
    }

    #[test]
    fn profile_json_roundtrip() {
        let label = AutClassLabel::inner_single(parse_partition("4,2^3").unwrap());
        let p = profile(10, &label, true, DEFAULT_BUDGET).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        let back: InvariantProfile = serde_json::from_str(&s).unwrap();
        assert_eq!(p, back);
    }
}
