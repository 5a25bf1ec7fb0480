//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line (visible with `cargo test --test acceptance -- --nocapture`).
//! Criteria with expensive sub-cases run those only when QF_SLOW=1; the
//! skipped scope is stated on the line.

use num_bigint::BigUint;

use quandles::alexander::{alexander_quandle, nelson_equivalent};
use quandles::autgroup::{
    aut_s6_conjugacy_classes, eta, outer_class_representative, xi, Automorphism, OuterTag,
};
use quandles::classify::{oracle_confirm, verify_theorem};
use quandles::invariants::{
    dc_alt_invariant, dc_full_diagnostic, double_coset_count, profile, DEFAULT_BUDGET,
};
use quandles::iso::{are_isomorphic, conjugate_iso_witness};
use quandles::perm::{parse_cycles, parse_partition, Parity, Permutation};
use quandles::quandle::general_alexander;
use quandles::symgroup::{
    centralizer_elements, centralizer_order, class_representative, factorial, partitions,
};

fn slow_enabled() -> bool {
    std::env::var("QF_SLOW").map(|v| v == "1").unwrap_or(false)
}

fn report(id: u32, name: &str, check: impl FnOnce() -> Result<String, String>) {
    match check() {
        Ok(note) => {
            println!("ACCEPTANCE {id} {name}: PASS{note}");
        }
        Err(why) => {
            println!("ACCEPTANCE {id} {name}: FAIL ({why})");
            panic!("acceptance criterion {id} ({name}) failed: {why}");
        }
    }
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

#[test]
fn criterion_1_class_tables() {
    report(1, "class tables n=3..8", || {
        // full tables: symbolic ord/fix for every inner class
        for n in 3..=8usize {
            for t in partitions(n) {
                let label = quandles::autgroup::inner_class_label(n, &t);
                let p = profile(n, &label, false, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
                expect(&format!("ord of {t}"), p.ord, t.order())?;
                expect(&format!("fix of {t}"), p.fix, centralizer_order(&t))?;
            }
        }
        // spot values quoted from the published tables
        let spot = |n: usize, shape: &str| -> Result<(u64, u128), String> {
            let t = parse_partition(shape).map_err(|e| e.to_string())?;
            let label = quandles::autgroup::inner_class_label(n, &t);
            let p = profile(n, &label, false, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            Ok((p.ord, p.fix))
        };
        expect("S_5 (3,2)", spot(5, "3,2")?, (6, 6))?;
        expect("S_8 (5,3)", spot(8, "5,3")?, (15, 15))?;
        let outer = [
            (OuterTag::O51, (10u64, 5u128)),
            (OuterTag::O42E, (8, 4)),
            (OuterTag::O42O, (8, 4)),
            (OuterTag::O2211, (4, 4)),
            (OuterTag::O16, (2, 20)),
        ];
        for (tag, want) in outer {
            let p = profile(
                6,
                &quandles::autgroup::AutClassLabel::Outer(tag),
                false,
                DEFAULT_BUDGET,
            )
            .map_err(|e| e.to_string())?;
            expect(&format!("S_6 outer {tag}"), (p.ord, p.fix), want)?;
        }
        Ok(String::new())
    });
}

#[test]
fn criterion_2_n10_separator() {
    report(2, "n=10 double-coset separator", || {
        let v1 = dc_alt_invariant(10, &parse_partition("4,2^3").unwrap(), DEFAULT_BUDGET)
            .map_err(|e| e.to_string())?;
        let v2 = dc_alt_invariant(10, &parse_partition("4,2,1^4").unwrap(), DEFAULT_BUDGET)
            .map_err(|e| e.to_string())?;
        expect("dc_alt(10,(4,2^3))", v1, BigUint::from(240u32))?;
        expect("dc_alt(10,(4,2,1^4))", v2, BigUint::from(291u32))?;
        Ok(String::new())
    });
}

#[test]
fn criterion_3_n15_obstruction() {
    report(3, "n=15 obstruction values", || {
        let t1 = parse_partition("9,3^2").unwrap();
        let t2 = parse_partition("9,3,1^3").unwrap();
        let alt1 = dc_alt_invariant(15, &t1, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        let alt2 = dc_alt_invariant(15, &t2, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        expect("dc_alt(15,(9,3^2))", alt1, BigUint::from(101_415_520u64))?;
        expect("dc_alt(15,(9,3,1^3))", alt2, BigUint::from(101_415_520u64))?;
        let full1 = dc_full_diagnostic(15, &t1, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        let full2 = dc_full_diagnostic(15, &t2, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        expect("dc_full(15,(9,3^2))", full1, BigUint::from(50_716_744u64))?;
        expect("dc_full(15,(9,3,1^3))", full2, BigUint::from(55_008_600u64))?;
        Ok(String::new())
    });
}

#[test]
fn criterion_4_classification_3_to_30() {
    report(4, "classification bijective on 3..30 except n=15", || {
        let v = verify_theorem(3, 30, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        if !v.as_expected {
            return Err(format!("problems: {:?}", v.problems));
        }
        let row15 = v.rows.iter().find(|r| r.n == 15).unwrap();
        expect(
            "n=15 unresolved pair",
            row15.unresolved.clone(),
            vec![("I(9,3^2)".to_string(), "I(9,3,1^3)".to_string())],
        )?;
        let blocked: usize = v.rows.iter().map(|r| r.undetermined.len()).sum();
        expect("budget-blocked pairs", blocked, 0)?;
        Ok(String::new())
    });
}

#[test]
fn criterion_5_s6_program() {
    report(5, "Aut(S_6) program", || {
        let classes = aut_s6_conjugacy_classes();
        expect("class count", classes.len(), 13)?;
        expect(
            "|Aut(S_6)|",
            classes.iter().map(|(_, s)| s).sum::<usize>(),
            1440,
        )?;
        expect("ord(xi)", xi().order(), 2)?;
        let img = xi().apply(&parse_cycles(6, "(1 2 3 4 5 6)").unwrap());
        expect(
            "xi((1 2 3 4 5 6))",
            img,
            parse_cycles(6, "(2 6)(3 5 4)").unwrap(),
        )?;
        for k in 0..2u8 {
            expect(&format!("ord(eta{k})"), eta(k).order(), 8)?;
            let fix = eta(k).fix_subgroup();
            // Fix(eta_k) = <(1 2 3 4)(5 6)>, cyclic of order 4
            expect(&format!("|Fix(eta{k})|"), fix.len(), 4)?;
            let gen = parse_cycles(6, "(1 2 3 4)(5 6)").unwrap();
            for e in 0..4i64 {
                if !fix.contains(&gen.power(e)) {
                    return Err(format!("Fix(eta{k}) is not <(1 2 3 4)(5 6)>"));
                }
            }
        }
        let g0 = quandles::s6::SemiDirectGroup::build(6, &eta(0)).map_err(|e| e.to_string())?;
        let g1 = quandles::s6::SemiDirectGroup::build(6, &eta(1)).map_err(|e| e.to_string())?;
        let w = g0
            .element(&parse_cycles(6, "(1 2 3 4 5)").unwrap(), 0)
            .unwrap();
        expect("centralizer of ((1 2 3 4 5),0) in phi0", g0.centralizer_size_of(w), 40)?;
        let s1 = g1.centralizer_size_spectrum();
        expect("40 in phi1 spectrum", s1.contains_key(&40), false)?;
        Ok(String::new())
    });
}

#[test]
fn criterion_6_inner_group_orders() {
    report(6, "inner group orders", || {
        for t in partitions(5) {
            if t.order() == 1 {
                continue; // trivial quandle: rows generate nothing
            }
            let q = general_alexander(
                5,
                &Automorphism::inner(class_representative(&t)),
                factorial(5),
            )
            .map_err(|e| e.to_string())?;
            expect(
                &format!("inner group of Q(S_5, {t})"),
                q.inner_group_order(100_000).map_err(|e| e.to_string())?,
                60 * t.order(),
            )?;
        }
        if !slow_enabled() {
            return Ok(" (S_6 eta cases skipped; set QF_SLOW=1)".to_string());
        }
        for k in 0..2u8 {
            let q = general_alexander(6, &eta(k), factorial(6)).map_err(|e| e.to_string())?;
            expect(
                &format!("inner group of Q(S_6, eta{k})"),
                q.inner_group_order(100_000).map_err(|e| e.to_string())?,
                2880,
            )?;
        }
        Ok(String::new())
    });
}

#[test]
fn criterion_7_oracle_concordance() {
    report(7, "brute-force oracle agrees with the pipeline", || {
        for n in 3..=4usize {
            let r = oracle_confirm(n, 200).map_err(|e| e.to_string())?;
            if !r.all_pairs_non_isomorphic {
                return Err(format!("n={n}: pipeline left pairs unresolved"));
            }
        }
        // explicit conjugate witnesses at n=4
        let pi = parse_cycles(4, "(1 2 3)").unwrap();
        let tau = parse_cycles(4, "(2 4)").unwrap();
        conjugate_iso_witness(4, &pi, &tau).map_err(|e| e.to_string())?;
        if !slow_enabled() {
            return Ok(" (n=5 skipped; set QF_SLOW=1)".to_string());
        }
        let r = oracle_confirm(5, 200).map_err(|e| e.to_string())?;
        expect("n=5 pairs checked", r.pairs_checked, 21)?;
        Ok(String::new())
    });
}

#[test]
fn criterion_8_nelson_cross_check() {
    report(8, "Nelson criterion vs brute force, n<=24", || {
        use num_integer::Integer;
        for n in 2..=24u64 {
            let units: Vec<u64> = (1..n).filter(|a| a.gcd(&n) == 1).collect();
            let quandles: Vec<_> = units
                .iter()
                .map(|&a| alexander_quandle(n, a).unwrap())
                .collect();
            for (i, &a) in units.iter().enumerate() {
                for (j, &b) in units.iter().enumerate().skip(i) {
                    let by_criterion = nelson_equivalent(n, a, b).unwrap();
                    let by_oracle = are_isomorphic(&quandles[i], &quandles[j], 200)
                        .map_err(|e| e.to_string())?
                        .isomorphic;
                    expect(&format!("n={n}, {a} vs {b}"), by_criterion, by_oracle)?;
                }
            }
        }
        if !nelson_equivalent(9, 4, 7).unwrap() {
            return Err("Q(C_9,4) vs Q(C_9,7) should merge".into());
        }
        Ok(String::new())
    });
}

#[test]
fn criterion_9_property_suites() {
    report(9, "axioms, Burnside oracle, symbolic kernels", || {
        // every constructed quandle passes the axioms
        for n in 3..=5usize {
            for t in partitions(n) {
                let q = general_alexander(
                    n,
                    &Automorphism::inner(class_representative(&t)),
                    factorial(n),
                )
                .map_err(|e| e.to_string())?;
                q.check_axioms().map_err(|v| format!("axioms {t}: {v:?}"))?;
            }
        }
        general_alexander(6, &outer_class_representative(OuterTag::O51), factorial(6))
            .map_err(|e| e.to_string())?
            .check_axioms()
            .map_err(|v| format!("axioms O(5,1): {v:?}"))?;

        // Burnside counter vs naive orbit counting (small scale; the full
        // n<=6 sweep lives in the invariants unit tests)
        for (na, nb) in [("3", "2,1"), ("2,1", "1^3")] {
            let a = centralizer_elements(&class_representative(&parse_partition(na).unwrap()), 1000)
                .unwrap();
            let b = centralizer_elements(&class_representative(&parse_partition(nb).unwrap()), 1000)
                .unwrap();
            let burnside = double_coset_count(&a, &b, 3).map_err(|e| e.to_string())?;
            let mut seen = std::collections::HashSet::new();
            let mut orbits = 0u32;
            for g in quandles::symgroup::enumerate_group(3).unwrap() {
                if seen.contains(&g) {
                    continue;
                }
                orbits += 1;
                for x in &a {
                    for y in &b {
                        seen.insert(quandles::perm::compose(
                            &quandles::perm::compose(x, &g),
                            &y.inverse(),
                        ));
                    }
                }
            }
            expect(&format!("orbits {na} vs {nb}"), burnside, BigUint::from(orbits))?;
        }

        // parity is a homomorphism; class equation; power shapes
        for n in 3..=6usize {
            let sum: u128 = partitions(n)
                .iter()
                .map(|t| factorial(n) as u128 / centralizer_order(t))
                .sum();
            expect(&format!("class equation n={n}"), sum, factorial(n) as u128)?;
        }
        let p = parse_cycles(6, "(1 2 3)(4 5)").unwrap();
        let q = parse_cycles(6, "(2 6 4)").unwrap();
        expect(
            "parity homomorphism",
            quandles::perm::compose(&p, &q).parity(),
            Parity::Odd,
        )?;
        for t in partitions(6) {
            let pi = class_representative(&t);
            for i in 1..=6u64 {
                expect(
                    &format!("power shape {t}^{i}"),
                    pi.power(i as i64).cycle_type(),
                    t.power(i),
                )?;
            }
        }
        let _ = Permutation::identity(3); // keep the import honest
        Ok(String::new())
    });
}
