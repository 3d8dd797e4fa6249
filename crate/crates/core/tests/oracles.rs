//! Library results compared with direct brute-force computations that share
//! no code with the library's evaluators or enumerators.

use std::collections::BTreeSet;

use biquasi::census::{
    enumerate_linear_specs, enumerate_quasigroups, run_census, verify_structural, CensusOptions, Scope, StructuralClaim,
};
use biquasi::constructors::{catalog, derived_group, inverse_op_biq, ward_from_group, GroupName};
use biquasi::identity::{builtin, check, Builtin};
use biquasi::properties::{is_left_modular, is_medial, is_paramedial};
use biquasi::{Biquasigroup, CayleyTable, Kind};

type Op<'a> = &'a dyn Fn(usize, usize) -> usize;

/// The numbered identities written out by hand.
fn oracle(k: usize, c: Op<'_>, s: Op<'_>, x: usize, y: usize, z: usize) -> bool {
    match k {
        1 | 3 => c(c(x, z), c(y, z)) == c(x, y),
        2 => s(c(x, z), c(y, z)) == s(x, y),
        4 => c(c(x, z), c(y, z)) == s(x, y),
        5 => c(c(x, z), s(y, z)) == c(x, y),
        6 => s(c(x, z), c(y, z)) == c(x, y),
        7 => c(c(x, z), s(y, z)) == s(x, y),
        8 => s(c(x, z), s(y, z)) == c(x, y),
        9 => s(c(x, z), s(y, z)) == s(x, y),
        _ => unreachable!(),
    }
}

fn oracle_holds(k: usize, n: usize, c: Op<'_>, s: Op<'_>) -> bool {
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| oracle(k, c, s, x, y, z))))
}

fn oracle_on(k: usize, biq: &Biquasigroup) -> bool {
    let (c, s) = (biq.circ(), biq.star());
    oracle_holds(k, biq.order(), &|x, y| c.get(x, y), &|x, y| s.get(x, y))
}

fn units(n: usize) -> Vec<usize> {
    (1..=n)
        .map(|u| u % n)
        .filter(|&u| (1..=n).any(|v| (u * v) % n == 1 % n))
        .collect()
}

#[test]
fn latin_square_counts_match_exhaustive_filter() {
    for n in 1..=3usize {
        let total = n.pow((n * n) as u32);
        let latin = (0..total)
            .filter(|&code| {
                let cell = |i: usize| (code / n.pow(i as u32)) % n;
                (0..n).all(|r| {
                    let row: BTreeSet<_> = (0..n).map(|c| cell(r * n + c)).collect();
                    let col: BTreeSet<_> = (0..n).map(|c| cell(c * n + r)).collect();
                    row.len() == n && col.len() == n
                })
            })
            .count();
        assert_eq!(enumerate_quasigroups(n).unwrap().len(), latin, "n={n}");
    }
}

#[test]
fn check_agrees_with_handwritten_identities_on_all_order_3_pairs() {
    let squares = enumerate_quasigroups(3).unwrap();
    for c in &squares {
        for s in &squares {
            let biq = Biquasigroup::new(c.clone(), s.clone()).unwrap();
            for (k, id) in Builtin::NUMBERED.iter().enumerate() {
                assert_eq!(check(&biq, &builtin(*id)).holds, oracle_on(k + 1, &biq));
            }
        }
    }
}

#[test]
fn structural_pair_counts_match_direct_count() {
    let opts = CensusOptions::with_workers(1);
    let squares = enumerate_quasigroups(3).unwrap();
    for claim in StructuralClaim::ALL {
        let k = match claim.identity() {
            Builtin::E2 => 2,
            Builtin::E4 => 4,
            Builtin::E5 => 5,
            Builtin::E6 => 6,
            Builtin::E8 => 8,
            Builtin::E9 => 9,
            other => panic!("{other:?}"),
        };
        let direct = squares
            .iter()
            .flat_map(|c| squares.iter().map(move |s| (c, s)))
            .filter(|(c, s)| oracle_holds(k, 3, &|x, y| c.get(x, y), &|x, y| s.get(x, y)))
            .count();
        let report = verify_structural(claim, 3, &opts).unwrap();
        assert_eq!(report.pairs_examined, 144);
        assert_eq!(report.satisfying_pairs, direct, "{claim}");
    }
}

/// Over `Z_n` the automorphisms are `x ↦ ux` for units `u`, and sorting them
/// by image list sorts them by `u`.
#[test]
fn cyclic_censuses_match_multiplier_loops() {
    let opts = CensusOptions::with_workers(1);
    for n in 2..=6usize {
        let us = units(n);
        for (k, id) in Builtin::NUMBERED.iter().enumerate().skip(1) {
            let k = k + 1;
            if k == 3 {
                continue;
            }
            for kind in [Kind::Middle, Kind::End] {
                let mut expected = Vec::new();
                for (pi, &p) in us.iter().enumerate() {
                    for (qi, &q) in us.iter().enumerate() {
                        for a in 0..n {
                            for (ri, &r) in us.iter().enumerate() {
                                for (ti, &t) in us.iter().enumerate() {
                                    for b in 0..n {
                                        let c = |x: usize, y: usize| (p * x + q * y + a) % n;
                                        let s = |x: usize, y: usize| (r * x + t * y + b) % n;
                                        if oracle_holds(k, n, &c, &s) {
                                            expected.push((pi, qi, a, ri, ti, b));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
                let report = run_census(&GroupName::Zn(n), &builtin(*id), kind, &opts).unwrap();
                let got: Vec<_> = report
                    .satisfying
                    .iter()
                    .map(|d| (d.phi, d.psi, d.a, d.alpha, d.beta, d.b))
                    .collect();
                assert_eq!(got, expected, "Z_{n} e{k} {kind}");
            }
        }
    }
}

#[test]
fn z5_e4_middle_count_is_twenty() {
    let r = run_census(
        &GroupName::Zn(5),
        &builtin(Builtin::E4),
        Kind::Middle,
        &CensusOptions::with_workers(1),
    )
    .unwrap();
    assert_eq!(r.satisfying.len(), 20);
    assert_eq!(r.total_specs, 6400);
}

#[test]
fn ward_round_trip_entrywise() {
    for name in GroupName::catalog_up_to_8() {
        let g = catalog(&name).unwrap();
        let n = g.order();
        let w = ward_from_group(&g);
        assert!(oracle_holds(1, n, &|x, y| w.get(x, y), &|x, y| w.get(x, y)), "{name}");
        let back = derived_group(&w).unwrap();
        assert_eq!(back.table(), g.table(), "{name}");
    }
}

#[test]
fn subtractive_equivalence() {
    for name in GroupName::catalog_up_to_8() {
        let g = catalog(&name).unwrap();
        let t = g.table();
        let n = g.order();
        let commutative = (0..n).all(|x| (0..n).all(|y| t.get(x, y) == t.get(y, x)));
        let w = ward_from_group(&g);
        assert_eq!(is_medial(&w).unwrap(), commutative, "{name}");
        assert_eq!(is_left_modular(&w).unwrap(), commutative, "{name}");
    }
}

#[test]
fn inverse_op_satisfies_all_nine_exactly_on_boolean_groups() {
    for (name, boolean) in [
        (GroupName::Zn(2), true),
        (GroupName::Z2xZ2, true),
        (GroupName::Z2Cube, true),
        (GroupName::Zn(3), false),
        (GroupName::Zn(4), false),
        (GroupName::Zn(5), false),
        (GroupName::Zn(6), false),
        (GroupName::Z2xZ4, false),
    ] {
        let biq = inverse_op_biq(&catalog(&name).unwrap()).unwrap();
        let all = (1..=9).all(|k| oracle_on(k, &biq));
        assert_eq!(all, boolean, "{name}");
        assert!(oracle_on(3, &biq), "{name}");
    }
}

#[test]
fn e2_paramedial_iff_psi_squared_is_identity() {
    let z5 = catalog(&GroupName::Zn(5)).unwrap();
    let space = enumerate_linear_specs(&z5, Kind::Middle, Scope::Full).unwrap();
    let r = run_census(
        &GroupName::Zn(5),
        &builtin(Builtin::E2),
        Kind::Middle,
        &CensusOptions::with_workers(1),
    )
    .unwrap();
    assert!(!r.satisfying.is_empty());
    let mut seen = BTreeSet::new();
    for d in &r.satisfying {
        let spec = space.spec(d);
        let circ = spec.realize().circ().clone();
        let psi2_identity = (0..5).all(|z| spec.psi.apply(spec.psi.apply(z)) == z);
        assert_eq!(is_paramedial(&circ).unwrap(), psi2_identity);
        assert!(is_medial(&circ).unwrap());
        seen.insert(psi2_identity);
    }
    assert_eq!(seen.len(), 2, "both cases occur");
}

#[test]
fn e4_census_tables_are_medial_and_paramedial() {
    for name in [GroupName::Zn(3), GroupName::Zn(5), GroupName::Zn(7), GroupName::Z2xZ2] {
        let g = catalog(&name).unwrap();
        let space = enumerate_linear_specs(&g, Kind::Middle, Scope::Full).unwrap();
        let r = run_census(
            &name,
            &builtin(Builtin::E4),
            Kind::Middle,
            &CensusOptions::with_workers(1),
        )
        .unwrap();
        for d in &r.satisfying {
            let biq = space.spec(d).realize();
            for t in [biq.circ(), biq.star()] {
                assert!(is_medial(t).unwrap() && is_paramedial(t).unwrap(), "{name}");
            }
        }
    }
}

/// In an `e8` model with unipotent `∘` (value `u`), `x∘y = u*(y*x)`; the
/// variant `x∘y = x*(y*x)` does not follow.
#[test]
fn e8_unipotent_circ_form() {
    let squares = enumerate_quasigroups(3).unwrap();
    let mut unipotent_models = 0;
    let mut variant_failures = 0;
    for c in &squares {
        let u = c.get(0, 0);
        if (0..3).any(|x| c.get(x, x) != u) {
            continue;
        }
        for s in &squares {
            if !oracle_holds(8, 3, &|x, y| c.get(x, y), &|x, y| s.get(x, y)) {
                continue;
            }
            unipotent_models += 1;
            let all = |f: &dyn Fn(usize, usize) -> bool| (0..3).all(|x| (0..3).all(|y| f(x, y)));
            assert!(all(&|x, y| c.get(x, y) == s.get(u, s.get(y, x))));
            if !all(&|x, y| c.get(x, y) == s.get(x, s.get(y, x))) {
                variant_failures += 1;
            }
        }
    }
    assert!(unipotent_models > 0);
    assert!(variant_failures > 0);
}

#[test]
fn sec10_end_and_middle_tables_coincide() {
    let opts = CensusOptions::with_workers(1);
    for name in [GroupName::Zn(4), GroupName::Zn(5), GroupName::S3] {
        let g = catalog(&name).unwrap();
        for id in &Builtin::NUMBERED[1..] {
            let tables = |kind| -> BTreeSet<(CayleyTable, CayleyTable)> {
                let eq = builtin(*id);
                let scope = biquasi::census::scope_for(&eq);
                let space = enumerate_linear_specs(&g, kind, scope).unwrap();
                run_census(&name, &eq, kind, &opts)
                    .unwrap()
                    .satisfying
                    .iter()
                    .map(|d| {
                        let b = space.spec(d).realize();
                        (b.circ().clone(), b.star().clone())
                    })
                    .collect()
            };
            assert_eq!(tables(Kind::Middle), tables(Kind::End), "{name} {id:?}");
        }
    }
}
