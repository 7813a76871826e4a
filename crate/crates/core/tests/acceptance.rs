//! Acceptance criteria over the default grid, one line per criterion.
//! Exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use swl_core::cli::{run, Instance, RunOptions, SuiteReport};
use swl_core::exact_linear::Scalar;

type Key = (Vec<usize>, Vec<Scalar>, usize);
type Ran<'a> = Vec<(&'a Key, &'a serde_json::Value, bool)>;

struct Grid {
    reports: BTreeMap<Key, SuiteReport>,
}

impl Grid {
    fn instances() -> Vec<Instance> {
        let mut out = Vec::new();
        for parts in [&[1][..], &[1, 2], &[2, 2], &[1, 1, 2], &[2, 3, 4]] {
            let level = *parts.iter().max().unwrap();
            let mut origins = vec![vec![Scalar::zero(); level]];
            if level > 1 {
                let mut split = vec![Scalar::zero(); level];
                split[level - 1] = Scalar::new(1, 2);
                origins.push(split);
            }
            let boxes: usize = parts.iter().sum();
            for c in origins {
                for d in 0..=3 {
                    if boxes.pow(d as u32) <= 1000 {
                        out.push(Instance::new(parts, Some(c.clone()), d).unwrap());
                    }
                }
            }
        }
        out
    }

    fn run() -> Grid {
        let mut reports = BTreeMap::new();
        for inst in Grid::instances() {
            let r = run("all", &inst, RunOptions::default()).expect("grid instances are valid");
            reports.insert(
                (
                    inst.diagram.parts().to_vec(),
                    inst.origin.values().to_vec(),
                    inst.d,
                ),
                r,
            );
        }
        Grid { reports }
    }

    /// Every report of `suite`, with the instances where it was skipped.
    fn suite(&self, suite: &str) -> (Ran<'_>, Vec<(&Key, String)>) {
        let mut ran = Vec::new();
        let mut skipped = Vec::new();
        for (k, r) in &self.reports {
            let m = &r.measured;
            if let Some(s) = m["suites"]
                .as_array()
                .unwrap()
                .iter()
                .find(|s| s["suite"] == suite)
            {
                ran.push((k, &s["measured"], s["pass"].as_bool().unwrap()));
            }
            if let Some(s) = m["skipped"]
                .as_array()
                .unwrap()
                .iter()
                .find(|s| s["suite"] == suite)
            {
                skipped.push((k, s["reason"].as_str().unwrap().to_string()));
            }
        }
        (ran, skipped)
    }

    /// Passes if `suite` ran and passed on every grid instance, except those
    /// `allowed` to skip.
    fn verdict(&self, suite: &str, allowed: impl Fn(&Key) -> bool) -> (bool, String) {
        let (ran, skipped) = self.suite(suite);
        let failed: Vec<_> = ran.iter().filter(|r| !r.2).map(|r| r.0).collect();
        let bad_skips: Vec<_> = skipped.iter().filter(|(k, _)| !allowed(k)).collect();
        let ok = failed.is_empty() && bad_skips.is_empty();
        let mut note = format!("{suite}: {} instances", ran.len());
        if !failed.is_empty() {
            note += &format!(", failed on {failed:?}");
        }
        if !bad_skips.is_empty() {
            note += &format!(", skipped {bad_skips:?}");
        }
        (ok, note)
    }
}

fn instance(parts: &[usize], origin: Option<Vec<Scalar>>, d: usize) -> Instance {
    Instance::new(parts, origin, d).unwrap()
}

fn suite_pass(suite: &str, inst: &Instance) -> (bool, SuiteReport) {
    let r = run(suite, inst, RunOptions::default()).expect("suite runs");
    (r.pass, r)
}

fn no_skips(_: &Key) -> bool {
    false
}

fn main() -> ExitCode {
    let start = Instant::now();
    let grid = Grid::run();
    let half = || Some(vec![Scalar::zero(), Scalar::new(1, 2)]);
    let mut results: Vec<(usize, &str, bool, String)> = Vec::new();

    // 1. Hecke basis and the multiplication oracle.
    let mut ok = true;
    let mut notes = Vec::new();
    for (parts, d) in [
        (&[2, 2][..], 2),
        (&[2, 2], 3),
        (&[2, 3, 4], 1),
        (&[2, 3, 4], 2),
    ] {
        let (p, r) = suite_pass("hecke-basis", &instance(parts, None, d));
        ok &= p && r.measured["random_pairs"] == 50;
        notes.push(format!(
            "l^d d!={} rank={}",
            r.measured["hecke_dim"], r.measured["rank"]
        ));
    }
    results.push((1, "Hecke basis & oracle", ok, notes.join("; ")));

    // 2. Minimal polynomial of x_1 on every grid instance with d >= 1.
    let (ok, note) = grid.verdict("min-poly", |k| k.2 == 0);
    results.push((2, "Minimal polynomial", ok, note));

    // 3. Graded double centralizer.
    let (mut ok, note) = grid.verdict("double-centralizer-graded", no_skips);
    let (ran, _) = grid.suite("double-centralizer-graded");
    let example = ran
        .iter()
        .find(|(k, _, _)| k.0 == [2, 3, 4] && k.2 == 1)
        .map_or("missing".to_string(), |r| r.1["c1_dim"].to_string());
    ok &= ran
        .iter()
        .filter(|(k, _, _)| k.0 == [2, 3, 4] && k.2 == 1)
        .all(|r| r.1["c1_dim"] == 23);
    results.push((
        3,
        "Graded double centralizer",
        ok,
        format!("{note}; (2,3,4) d=1 rank {example}"),
    ));

    // 4. Filtered double centralizer.
    let (mut ok, note) = grid.verdict("double-centralizer-filtered", no_skips);
    let (ran, _) = grid.suite("double-centralizer-filtered");
    let sel = |k: &Key| k.0 == [2, 2] && k.2 == 2;
    ok &= ran
        .iter()
        .filter(|(k, _, _)| sel(k))
        .all(|r| r.1["hecke_image_dim"] == 8);
    ok &= ran
        .iter()
        .filter(|(k, _, _)| k.0 == [2, 3, 4] && k.2 == 1)
        .all(|r| r.1["c1_dim"] == 23);
    results.push((
        4,
        "Filtered double centralizer",
        ok,
        format!("{note}; (2,2) d=2 image 8"),
    ));

    // 5. Ξ basis.
    let (ok, note) = grid.verdict("xi-basis", no_skips);
    results.push((5, "Xi basis correctness", ok, note));

    // 6. Symmetrizing form.
    let mut ok = true;
    let mut notes = Vec::new();
    for (parts, d) in [(&[1][..], 2), (&[1], 3), (&[2, 2], 1), (&[2, 2], 2)] {
        let (p, r) = suite_pass("symmetrizing-form", &instance(parts, None, d));
        ok &= p;
        notes.push(format!("gram rank {}", r.measured["gram_rank"]));
    }
    results.push((6, "Symmetrizing form", ok, notes.join("; ")));

    // 7. Idempotents and divided powers.
    let (ok, note) = grid.verdict("idempotents", no_skips);
    results.push((7, "Idempotents", ok, note));

    // 8. Permutation modules, plus a padded faithful instance at d = 3.
    let (mut ok, note) = grid.verdict("permutation", no_skips);
    let (p, _) = suite_pass("permutation", &instance(&[2, 2, 2], None, 3));
    ok &= p;
    let (ran, _) = grid.suite("permutation");
    let faithful = ran
        .iter()
        .flat_map(|r| r.1["tableaux"].as_array().unwrap())
        .filter(|t| t["module"]["faithful"] == true)
        .count();
    results.push((
        8,
        "Permutation modules",
        ok,
        format!("{note}; {faithful} faithful modules; (2,2,2) d=3"),
    ));

    // 9. Specht modules, the flag identity and Lemma s.
    let mut ok = true;
    let mut notes = Vec::new();
    for suite in ["specht", "specht-flag", "kostka-lemma-s"] {
        let (p, n) = grid.verdict(suite, no_skips);
        ok &= p;
        notes.push(n);
    }
    results.push((9, "Specht modules", ok, notes.join("; ")));

    // 10. Dipper–Mathas.
    let mut ok = true;
    let mut notes = Vec::new();
    for parts in [&[1, 2][..], &[2, 2]] {
        for d in 0..=2 {
            let (p, r) = suite_pass("dipper-mathas", &instance(parts, half(), d));
            ok &= p;
            notes.push(format!(
                "{parts:?} d={d}: {}={}",
                r.measured["full_dim"], r.measured["sum"]
            ));
        }
    }
    results.push((10, "Dipper-Mathas dimension identity", ok, notes.join("; ")));

    // 11. Row removal, with both ranks computed.
    let mut ok = true;
    let mut notes = Vec::new();
    for (parts, n_bar) in [(&[2, 2][..], 1), (&[2, 3, 4], 2)] {
        for d in 0..=2 {
            let mut inst = instance(parts, None, d);
            inst.n_bar = Some(n_bar);
            let (p, r) = suite_pass("row-removal", &inst);
            ok &= p && r.measured["surjective_consistent"] == true;
            notes.push(format!(
                "d={d}: {}<={}",
                r.measured["rank_sub"], r.measured["rank_full"]
            ));
        }
    }
    results.push((11, "Row removal", ok, notes.join("; ")));

    // 12. Kostka multiplicity one for (2,2), r = 1, d = 4.
    let (p, r) = suite_pass("kostka-lemma-s", &instance(&[2, 2], None, 4));
    let m = &r.measured["shift_multiplicity_one"];
    let ok = p && m["pass"] == true && m["r"] == 1;
    results.push((
        12,
        "Kostka multiplicity one",
        ok,
        format!("values {}", m["values"]),
    ));

    let mut all = true;
    for (n, name, ok, note) in &results {
        all &= ok;
        println!(
            "[{}] {n:>2}. {name}: {note}",
            if *ok { "PASS" } else { "FAIL" }
        );
    }
    println!(
        "{} of {} criteria passed over {} grid instances in {:.1}s",
        results.iter().filter(|r| r.2).count(),
        results.len(),
        grid.reports.len(),
        start.elapsed().as_secs_f64()
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
