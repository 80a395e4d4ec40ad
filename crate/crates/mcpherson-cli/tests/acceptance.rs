//! Acceptance suite: one test per release criterion, each printing a
//! PASS line with its runtime (visible under `--nocapture`).
//!
//! Run with `cargo test -p mcpherson-cli --test acceptance -- --nocapture`.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mcpherson::engine::{
    exact_upsilon, greedy_mcpherson, order_invariance_check, stability_report, TieBreakPolicy,
};
use mcpherson::enumerate::{all_labeled_graphs, mask_of_graph};
use mcpherson::families::jaco::{conjecture_scan, jaco, jaco_profile, jaco_upsilon_formula};
use mcpherson::families::{closed_form_upsilon, generate, platonic_upsilon, FamilySpec, PlatonicSolid};
use mcpherson::graph::{SimpleGraph, VertexId};
use mcpherson::oracle::{upsilon_by_cover_enumeration, upsilon_by_sequence_search};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_mcpherson"));
    cmd.env_remove("MCPHERSON_SOLVER_LIMIT");
    cmd
}

fn finish(criterion: &str, summary: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    println!("PASS {criterion}: {summary} ({elapsed:.2?}, budget {budget:.0?})");
    assert!(
        elapsed <= budget,
        "{criterion} exceeded its runtime budget: {elapsed:.2?} > {budget:.0?}"
    );
}

fn random_graph(rng: &mut ChaCha8Rng, n: u32) -> SimpleGraph {
    let p: f64 = rng.gen();
    let edges = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |w| (u, w)))
        .filter(|_| rng.gen_bool(p));
    SimpleGraph::build(n, edges).unwrap()
}

fn example_graph() -> SimpleGraph {
    SimpleGraph::build(
        6,
        [
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 5),
            (2, 6),
            (3, 4),
            (3, 5),
        ],
    )
    .unwrap()
}

#[test]
fn criterion_01_jaco_table_matches_published_rows() {
    let start = Instant::now();
    let output = bin().args(["jaco-table", "15"]).output().expect("binary runs");
    assert!(output.status.success());

    let expected: [(u32, u32, u32, &str, u32); 13] = [
        (3, 1, 2, "v2", 1),
        (4, 1, 3, "v2", 2),
        (5, 2, 3, "v3", 2),
        (6, 2, 4, "v3", 3),
        (7, 3, 4, "v4", 3),
        (8, 3, 5, "v5", 4),
        (9, 3, 6, "v5", 5),
        (10, 4, 6, "v6", 5),
        (11, 4, 7, "v7", 6),
        (12, 4, 8, "v7", 7),
        (13, 5, 8, "v8", 7),
        (14, 5, 9, "v8", 8),
        (15, 6, 9, "v9", 8),
    ];
    let stdout = String::from_utf8(output.stdout).unwrap();
    let rows: Vec<Vec<&str>> = stdout
        .lines()
        .filter(|l| l.chars().next().is_some_and(|c| c.is_ascii_digit()))
        .map(|l| l.split_whitespace().collect())
        .collect();
    assert_eq!(rows.len(), 13, "expected exactly 13 data rows");
    for (row, (n, din, dout, prime, ups)) in rows.iter().zip(expected) {
        let parsed = (
            row[0].parse::<u32>().unwrap(),
            row[1].parse::<u32>().unwrap(),
            row[2].parse::<u32>().unwrap(),
            row[3],
            row[4].parse::<u32>().unwrap(),
        );
        assert_eq!(parsed, (n, din, dout, prime, ups), "row n={n}");
    }
    finish(
        "criterion 01",
        "jaco-table 15 emits the 13 published rows exactly",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_02_the_running_example_has_minimum_3_and_maximum_5() {
    let start = Instant::now();
    let report = stability_report(&example_graph()).unwrap();
    assert_eq!(report.upsilon(), 3);
    assert_eq!(report.upsilon_star(), 5);
    assert_eq!(report.discrepancy(), 2);
    assert!(!report.is_stable());
    finish(
        "criterion 02",
        "example fixture: upsilon 3, upsilon* 5, discrepancy 2, not stable",
        start,
        Duration::from_secs(1),
    );
}

fn partitions_with_sum(total: u32) -> Vec<Vec<u32>> {
    fn extend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            current.push(part);
            extend(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(total, total, &mut Vec::new(), &mut out);
    out
}

#[test]
fn criterion_03_family_formulas_agree_with_the_exact_solver() {
    let start = Instant::now();
    let mut specs = Vec::new();
    specs.extend((3..=10).map(FamilySpec::Path));
    specs.extend((4..=10).map(FamilySpec::Cycle));
    specs.extend((2..=10).map(FamilySpec::Null));
    specs.extend((1..=10).map(FamilySpec::Complete));
    specs.extend([4, 6, 8, 10].map(FamilySpec::CompleteMinusMatching));
    for total in 1..=10 {
        specs.extend(partitions_with_sum(total).into_iter().map(FamilySpec::Multipartite));
    }

    let mut checked = 0;
    for spec in specs {
        let graph = generate(&spec).unwrap();
        let formula = closed_form_upsilon(&spec).expect("family has a formula");
        let exact = exact_upsilon(&graph).unwrap().value();
        assert_eq!(formula, exact, "{spec:?}");
        checked += 1;
    }
    finish(
        "criterion 03",
        &format!("closed forms equal exact values on {checked} family instances"),
        start,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_04_jaco_formula_cross_check() {
    let start = Instant::now();
    for n in 3..=20 {
        let formula = jaco_upsilon_formula(n).unwrap();
        let exact = exact_upsilon(&jaco(n).underlying()).unwrap().value();
        assert_eq!(formula, exact, "formula vs solver at n={n}");

        let profile = jaco_profile(n).unwrap();
        assert_eq!(
            formula,
            profile.lowest_arc_to_last().index() - 1,
            "lowest-arc rule at n={n}"
        );
        let prime = profile.prime_jaconian();
        let branch = if profile.digraph().has_arc(prime, VertexId::new(n)) {
            prime.index() - 1
        } else {
            prime.index()
        };
        assert_eq!(formula, branch, "branch rule at n={n}");
    }
    finish(
        "criterion 04",
        "formula = exact solver = lowest-arc rule for n = 3..=20",
        start,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_05_oracle_triple_agreement() {
    let start = Instant::now();
    let mut triple_checked = 0u32;
    for g in all_labeled_graphs(6) {
        let clique_based = exact_upsilon(&g).unwrap().value();
        assert_eq!(clique_based, upsilon_by_cover_enumeration(&g));
        assert_eq!(clique_based, upsilon_by_sequence_search(&g));
        triple_checked += 1;
    }
    assert_eq!(triple_checked, 32_768);

    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut sequence_checked = 0u32;
    for _ in 0..500 {
        let n = rng.gen_range(1..=9);
        let g = random_graph(&mut rng, n);
        let clique_based = exact_upsilon(&g).unwrap().value();
        assert_eq!(clique_based, upsilon_by_cover_enumeration(&g), "{g:?}");
        if n <= 7 {
            assert_eq!(clique_based, upsilon_by_sequence_search(&g), "{g:?}");
            sequence_checked += 1;
        }
    }
    finish(
        "criterion 05",
        &format!(
            "clique = cover = sequence on all 32768 six-vertex graphs; \
             500 random graphs agree (sequence oracle on {sequence_checked} of them)"
        ),
        start,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_06_order_invariance_of_the_underlying_graph() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=8);
        let g = random_graph(&mut rng, n);
        let size = rng.gen_range(0..=5.min(n));
        let mut set = BTreeSet::new();
        while (set.len() as u32) < size {
            set.insert(VertexId::new(rng.gen_range(1..=n)));
        }
        let set: Vec<VertexId> = set.into_iter().collect();
        assert!(
            order_invariance_check(&g, &set, usize::MAX),
            "orderings diverged for {g:?} with set {set:?}"
        );
    }
    finish(
        "criterion 06",
        "1000 seeded (graph, set) samples: all orderings give one underlying graph",
        start,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_07_scan_flags_the_p5_complement_as_policy_sensitive() {
    let start = Instant::now();
    // the fixed labeling of the P5 complement: edges 13,14,15,24,25,35
    let p5_complement = generate(&FamilySpec::Path(5)).unwrap().complement();
    let mask = mask_of_graph(&p5_complement);

    let run_scan = || {
        let output = bin()
            .args(["scan", "--all-n", "5", "--format", "json"])
            .output()
            .expect("binary runs");
        assert!(output.status.success());
        output.stdout
    };
    let bytes = run_scan();
    assert_eq!(bytes, run_scan(), "scan output must be reproducible");

    let value: serde_json::Value = serde_json::from_slice(&bytes).unwrap();
    let table = value["table"].as_array().unwrap();
    assert_eq!(table.len(), 1024);
    let row = table
        .iter()
        .find(|r| r["instance"] == format!("g{mask}"))
        .expect("the P5-complement labeling is scanned");
    assert_eq!(row["exact"], 2);
    assert_eq!(row["policy_sensitive"], true);
    assert_eq!(row["best"], 2, "exhaustive-best attains the exact value");
    assert!(row["worst"].as_u64().unwrap() >= 3);

    // the explicit v3-first run realizes the suboptimal length
    let explicit = TieBreakPolicy::ExplicitSequence(vec![VertexId::new(3)]);
    assert_eq!(greedy_mcpherson(&p5_complement, &explicit).unwrap().len(), 3);

    let sensitive = table
        .iter()
        .filter(|r| r["policy_sensitive"] == true)
        .count();
    let hard = table
        .iter()
        .filter(|r| r["hard_counterexample"] == true)
        .count();
    assert_eq!((sensitive, hard), (60, 0), "summary counts are deterministic");
    finish(
        "criterion 07",
        "scan --all-n 5: g-mask of the P5 complement is policy-sensitive (3 > 2), 60/0 summary",
        start,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_08_exhaustive_best_greedy_audit_over_all_small_graphs() {
    let start = Instant::now();
    let audit = || {
        let mut mismatches = Vec::new();
        for n in 1..=6 {
            for g in all_labeled_graphs(n) {
                let exact = exact_upsilon(&g).unwrap().value();
                let best = greedy_mcpherson(&g, &TieBreakPolicy::ExhaustiveBest)
                    .unwrap()
                    .len() as u32;
                assert!(best >= exact);
                if best != exact {
                    mismatches.push((n, mask_of_graph(&g), exact, best));
                }
            }
        }
        mismatches
    };
    let first = audit();
    let second = audit();
    assert_eq!(first, second, "the mismatch list must be stable across runs");
    println!(
        "criterion 08 audit: {} mismatches between best-respecting greedy and exact over all graphs with n <= 6{}",
        first.len(),
        if first.is_empty() {
            String::new()
        } else {
            format!(": {first:?}")
        }
    );
    finish(
        "criterion 08",
        &format!(
            "greedy recursion audit complete; mismatch list emitted ({} entries) and stable",
            first.len()
        ),
        start,
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_09_stability_of_complete_graphs_cycles_and_paths() {
    let start = Instant::now();
    for n in 1..=8 {
        let report = stability_report(&SimpleGraph::complete(n)).unwrap();
        assert!(report.is_stable(), "K_{n} must be stable");
    }
    let c4 = generate(&FamilySpec::Cycle(4)).unwrap();
    assert!(stability_report(&c4).unwrap().is_stable());
    for n in 4..=8 {
        let p = generate(&FamilySpec::Path(n)).unwrap();
        assert!(!stability_report(&p).unwrap().is_stable(), "P_{n} must not be stable");
    }
    finish(
        "criterion 09",
        "K_n (n <= 8) and C_4 stable; P_4..P_8 not stable",
        start,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_10_conjecture_scan_runs_and_published_range_is_consistent() {
    let start = Instant::now();
    let output = bin().args(["conjecture", "50"]).output().expect("binary runs");
    assert!(output.status.success());
    let stdout = String::from_utf8(output.stdout).unwrap();
    let violations_line = stdout
        .lines()
        .find(|l| l.starts_with("violations:"))
        .expect("scan reports violations");
    println!("criterion 10 conjecture 50 -> {violations_line}");

    let report = conjecture_scan(15).unwrap();
    assert!(report.violations.is_empty());
    assert_eq!(report.unique_out_degree_indices(), vec![3, 8, 11]);
    assert_eq!(report.unique_upsilon_indices(), vec![3, 8, 11]);
    finish(
        "criterion 10",
        "conjecture 50 completes; range 3..=15 unique indices are exactly {3, 8, 11}",
        start,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_11_platonic_values_from_the_solver() {
    let start = Instant::now();
    let expected = [
        (PlatonicSolid::Tetrahedron, 0),
        (PlatonicSolid::Octahedron, 3),
        (PlatonicSolid::Cube, 6),
        (PlatonicSolid::Icosahedron, 9),
        (PlatonicSolid::Dodecahedron, 18),
    ];
    for (solid, value) in expected {
        assert_eq!(platonic_upsilon(solid), value, "{solid}");
    }
    finish(
        "criterion 11",
        "tetrahedron 0, octahedron 3, cube 6, icosahedron 9, dodecahedron 18",
        start,
        Duration::from_secs(5),
    );
}
