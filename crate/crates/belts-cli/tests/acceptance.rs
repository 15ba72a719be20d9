//! Acceptance suite: one test per criterion, exact tolerances throughout
//! (every quantity in this crate is computed in integer arithmetic, so
//! every comparison is equality). Each test prints a PASS line; run with
//! `cargo test -p belts-cli --test acceptance -- --nocapture` to see them.

use std::collections::BTreeMap;
use std::process::Command;

use belts::braid::{Belt, BraidWord};
use belts::canonical::{braid_only_word, coset_candidates};
use belts::halfint::HalfInt;
use belts::jones::{
    boundary_components, hopf_value, jones_closed, jones_skein_oracle, jones_two_ribbon,
    trefoil_value,
};
use belts::laurent::LaurentPoly;
use belts::particle::{check_family_row, fermion_families, Family};
use belts::twist::{ParityClass, TwistVector};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn run_belts(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_belts"))
        .args(args)
        .output()
        .expect("binary runs");
    assert!(
        out.status.success(),
        "`belts {}` failed: {}",
        args.join(" "),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn twists(s: &str) -> TwistVector {
    s.parse().unwrap()
}

fn word(s: &str) -> BraidWord {
    s.parse().unwrap()
}

/// All half-odd twist vectors with |entries| bounded by `limit/2` (doubled
/// bound `limit`).
fn half_odd_box(limit: i64) -> Vec<TwistVector> {
    let mut out = Vec::new();
    let mut da = -limit;
    while da <= limit {
        let mut db = -limit;
        while db <= limit {
            let mut dc = -limit;
            while dc <= limit {
                out.push(TwistVector::from_doubled([da, db, dc]));
                dc += 2;
            }
            db += 2;
        }
        da += 2;
    }
    out
}

#[test]
fn criterion_01_worked_braidword_outputs_byte_for_byte() {
    let cases = [
        ("2 4 3", "2 1 1 1 1 1 2 2 2 2 2 2 3 3 3 3 3 3\n"),
        ("7/2 1/2 3/2", "3 1 1 2 2 2 2 3 3 3 3\n"),
        ("3/2 3/2 3/2", "1 2 1 1 1 2 2 3 3\n"),
    ];
    for (input, expected) in cases {
        let args: Vec<&str> = std::iter::once("braidword")
            .chain(input.split(' '))
            .collect();
        let got = run_belts(&args);
        assert_eq!(got, expected, "braidword {input}");
    }
    println!("criterion 01 PASS: three worked braidword outputs are byte-identical");
}

#[test]
fn criterion_02_isogeny_counterexample() {
    assert_eq!(word("1 2 2 1").evaluate_from_zero(), twists("2 0 0"));
    assert_eq!(word("3 2 2 1").evaluate_from_zero(), twists("1 1 0"));

    let belt = |s: &str| Belt::from_word(word(s));
    assert!(belt("2 1").is_isotopic_to(&belt("3 1")));
    assert!(belt("3 2").is_isotopic_to(&belt("1 2")));
    assert!(!belt("1 2")
        .compose(&belt("2 1"))
        .is_isotopic_to(&belt("3 2").compose(&belt("2 1"))));
    println!("criterion 02 PASS: isogeny fails exactly as the counterexample demands");
}

#[test]
fn criterion_03_braid_only_round_trip_with_unique_coset() {
    let mut orientable = 0u32;
    for da in -20..=20i64 {
        for db in -20..=20i64 {
            for dc in -20..=20i64 {
                let t = TwistVector::from_doubled([da, db, dc]);
                let parity = t.parity_class();
                if parity == ParityClass::Mixed {
                    assert!(braid_only_word(t).is_err());
                    continue;
                }
                orientable += 1;
                let successes = coset_candidates(parity)
                    .unwrap()
                    .iter()
                    .filter(|c| c.evaluate(t).is_pure())
                    .count();
                assert_eq!(successes, 1, "coset candidates for {t}");
                let w = braid_only_word(t).unwrap();
                assert_eq!(w.evaluate_from_zero(), t, "round trip for {t}");
            }
        }
    }
    assert_eq!(orientable, 21 * 21 * 21 + 20 * 20 * 20);
    println!(
        "criterion 03 PASS: braid-only round trip and coset uniqueness on all {orientable} orientable vectors"
    );
}

#[test]
fn criterion_04_braid_relations_on_random_vectors() {
    let relations = [("1 2 1", "2 1 2"), ("2 3 2", "3 2 3"), ("3 1 3", "1 3 1")];
    let mut rng = ChaCha8Rng::seed_from_u64(0x3b31);
    for _ in 0..1000 {
        let t = TwistVector::from_doubled([
            rng.gen_range(-100..=100),
            rng.gen_range(-100..=100),
            rng.gen_range(-100..=100),
        ]);
        for (lhs, rhs) in relations {
            assert_eq!(
                word(lhs).evaluate(t),
                word(rhs).evaluate(t),
                "{lhs} vs {rhs} on {t}"
            );
        }
    }
    println!("criterion 04 PASS: all three circular braid relations hold on 1000 random vectors");
}

#[test]
fn criterion_05_jones_base_values() {
    let trefoil = jones_closed(twists("1/2 1/2 1/2")).unwrap();
    assert_eq!(trefoil, LaurentPoly::from_terms([(2, 1), (6, 1), (8, -1)]));
    assert_eq!(trefoil, trefoil_value());

    let hopf = jones_two_ribbon(HalfInt::HALF, HalfInt::HALF).unwrap();
    assert_eq!(hopf, LaurentPoly::from_terms([(1, -1), (5, -1)]));
    assert_eq!(hopf, hopf_value());
    println!("criterion 05 PASS: trefoil and Hopf-link base values are exact");
}

#[test]
fn criterion_06_closed_formula_equals_skein_oracle() {
    let mut scanned = 0u32;
    for t in half_odd_box(9) {
        let closed = jones_closed(t).unwrap_or_else(|e| panic!("closed formula on {t}: {e}"));
        let skein = jones_skein_oracle(t).unwrap();
        assert_eq!(closed, skein, "closed vs skein on {t}");
        scanned += 1;
    }
    assert_eq!(scanned, 1000);
    println!(
        "criterion 06 PASS: closed formula equals the skein oracle on all {scanned} half-odd triples, no inexact division"
    );
}

#[test]
fn criterion_07_jones_sanity_battery() {
    let mut scanned = 0u32;
    for t in half_odd_box(9) {
        let v = jones_closed(t).unwrap();
        let [a, b, c] = t.entries();
        for perm in [[a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]] {
            assert_eq!(
                jones_closed(TwistVector::new(perm)).unwrap(),
                v,
                "symmetry on {t}"
            );
        }
        assert_eq!(
            jones_closed(-t).unwrap(),
            v.substitute_inverse(),
            "mirror identity on {t}"
        );
        assert_eq!(v.evaluate_at_one(), 1, "V(1) on {t}");
        scanned += 1;
    }
    assert_eq!(scanned, 1000);
    println!(
        "criterion 07 PASS: permutation symmetry, mirror identity and V(1)=1 on all {scanned} triples"
    );
}

#[test]
fn criterion_08_census_reproduces_the_knot_tables() {
    let out = run_belts(&["census", "--length", "3", "--format", "csv"]);
    let mut found: BTreeMap<String, String> = BTreeMap::new();
    for line in out.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        found.insert(cols[0].to_string(), cols[4].to_string());
    }
    let expected = [
        // positive-sum classes: the two published tables
        ("3/2 3/2 -3/2", "9_46"),
        ("3/2 1/2 -1/2", "unknot"),
        ("1/2 1/2 1/2", "3_1"),
        ("3/2 1/2 -3/2", "6_1"),
        ("3/2 -1/2 -1/2", "4_1"),
        ("1/2 1/2 -1/2", "unknot"),
        // negative sums: mirror classes
        ("3/2 -1/2 -3/2", "6_1*"),
        ("1/2 1/2 -3/2", "4_1"),
        ("1/2 -1/2 -1/2", "unknot"),
        ("3/2 -3/2 -3/2", "9_46*"),
        ("1/2 -1/2 -3/2", "unknot"),
        ("-1/2 -1/2 -1/2", "3_1*"),
    ];
    assert_eq!(found.len(), expected.len(), "class count");
    for (class, name) in expected {
        assert_eq!(
            found.get(class).map(String::as_str),
            Some(name),
            "class {class}"
        );
    }

    // the --table1/--table2 filters carve out exactly the published rows
    let table1 = run_belts(&["census", "--table1", "--format", "csv"]);
    let names1: Vec<&str> = table1
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(4).unwrap())
        .collect();
    assert_eq!(names1, ["9_46", "unknot", "3_1"]);
    let table2 = run_belts(&["census", "--table2", "--format", "csv"]);
    let names2: Vec<&str> = table2
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(4).unwrap())
        .collect();
    assert_eq!(names2, ["6_1", "4_1", "unknot"]);
    println!("criterion 08 PASS: length-3 census matches both knot tables and their mirrors");
}

#[test]
fn criterion_09_figure_eight_is_amphichiral() {
    let v = jones_closed(twists("3/2 -1/2 -1/2")).unwrap();
    assert_eq!(v.substitute_inverse(), v);
    println!("criterion 09 PASS: the 4_1 boundary value is fixed by t -> 1/t");
}

fn connect(adj: &mut [Vec<usize>], u: usize, v: usize) {
    adj[u].push(v);
    adj[v].push(u);
}

/// Independent boundary-component count: each ribbon contributes two edge
/// strands between 12 endpoints. A half-odd twist crosses a ribbon's edges
/// end to end, an integer twist keeps them parallel, and each disk joins
/// ribbon i's right edge to ribbon i+1's left edge. Components are the
/// cycles of the resulting pairing.
fn edge_trace_components(t: TwistVector) -> u8 {
    // endpoint id: side (0 top, 1 bottom) * 6 + ribbon * 2 + edge (0 L, 1 R)
    let id = |side: usize, ribbon: usize, edge: usize| side * 6 + ribbon * 2 + edge;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 12];
    for side in 0..2 {
        for ribbon in 0..3 {
            connect(&mut adj, id(side, ribbon, 1), id(side, (ribbon + 1) % 3, 0));
        }
    }
    for (ribbon, entry) in t.entries().iter().enumerate() {
        if entry.is_half_odd() {
            connect(&mut adj, id(0, ribbon, 0), id(1, ribbon, 1));
            connect(&mut adj, id(0, ribbon, 1), id(1, ribbon, 0));
        } else {
            connect(&mut adj, id(0, ribbon, 0), id(1, ribbon, 0));
            connect(&mut adj, id(0, ribbon, 1), id(1, ribbon, 1));
        }
    }
    let mut seen = [false; 12];
    let mut cycles = 0;
    for start in 0..12 {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut at = start;
        loop {
            seen[at] = true;
            match adj[at].iter().copied().find(|&v| !seen[v]) {
                Some(next) => at = next,
                None => break,
            }
        }
    }
    cycles
}

#[test]
fn criterion_10_component_rule_matches_edge_tracing() {
    let mut scanned = 0u32;
    for da in -4..=4i64 {
        for db in -4..=4i64 {
            for dc in -4..=4i64 {
                let t = TwistVector::from_doubled([da, db, dc]);
                assert_eq!(
                    boundary_components(t),
                    edge_trace_components(t),
                    "components of {t}"
                );
                scanned += 1;
            }
        }
    }
    assert_eq!(scanned, 729);
    println!("criterion 10 PASS: component rule agrees with edge tracing on all {scanned} vectors");
}

#[test]
fn criterion_11_fermion_family_rows() {
    let rows = fermion_families();
    let checks = rows.map(check_family_row);

    let by_family = |f: Family| checks.iter().find(|c| c.row.family == f).copied().unwrap();

    let neutrino = by_family(Family::Neutrino);
    assert_eq!(neutrino.label.charge().to_string(), "0");
    let lepton = by_family(Family::ChargedLepton);
    assert_eq!(lepton.label.charge().to_string(), "-1");
    let down = by_family(Family::DownQuark);
    assert_eq!(down.label.charge().to_string(), "-1/3");
    for c in [neutrino, lepton, down] {
        assert!(c.m_consistent && c.m_prime_consistent && c.charge_consistent);
    }

    // the (w,r) = (-3,-2) row: charge 2/3 reproduces, the quoted m' does not
    let up = by_family(Family::UpQuark);
    assert_eq!(up.label.charge().to_string(), "2/3");
    assert!(up.charge_consistent);
    assert!(
        !up.m_prime_consistent,
        "the m' inconsistency flag must be raised"
    );
    println!("criterion 11 PASS: three rows reproduce exactly; the fourth reproduces Q=2/3 with the m' flag raised");
}

#[test]
fn criterion_12_prime_conjecture_census_is_deterministic_and_complete() {
    let args = ["census", "--max-sum", "9/2", "--format", "csv"];
    let first = run_belts(&args);
    let second = run_belts(&args);
    assert_eq!(first, second, "byte-identical reruns");

    // expected classes, enumerated independently: sorted half-odd triples
    // with entries and |sum| bounded by 9/2
    let mut expected = 0u32;
    for t in half_odd_box(9) {
        let [a, b, c] = t.entries();
        if a >= b && b >= c && t.sum().doubled().abs() <= 9 {
            expected += 1;
        }
    }

    let rows: Vec<&str> = first.lines().skip(1).collect();
    assert_eq!(rows.len() as u32, expected, "census completeness");

    let mut named = 0u32;
    let mut seen = std::collections::BTreeSet::new();
    for row in &rows {
        let cols: Vec<&str> = row.split(',').collect();
        let class = twists(cols[0]);
        assert!(seen.insert(class), "duplicate class {class}");
        assert_eq!(class.sorted_desc(), class, "representative is sorted");
        assert!(class.sum().doubled().abs() <= 9);
        assert_eq!(cols[2], "1", "knot boundary");
        // named or honestly unidentified, polynomial always attached
        assert!(!cols[3].is_empty(), "jones column populated");
        if cols[4] == "unidentified" {
            let jones = LaurentPoly::from_compact(cols[3]).unwrap();
            assert_eq!(jones.evaluate_at_one(), 1);
        } else {
            named += 1;
        }
        // the attached example word really realizes the class
        let example: BraidWord = cols[5].parse().unwrap();
        assert_eq!(example.evaluate_from_zero(), class);
    }
    // every seeded knot appears somewhere in the scan
    for class in [
        "1/2 1/2 1/2",
        "3/2 3/2 -3/2",
        "3/2 1/2 -3/2",
        "3/2 -1/2 -1/2",
    ] {
        assert!(seen.contains(&twists(class)), "missing class {class}");
    }
    assert!(named >= 12, "all table classes and mirrors are named");
    println!(
        "criterion 12 PASS: census over {expected} classes is deterministic, complete, {named} named rows"
    );
}
