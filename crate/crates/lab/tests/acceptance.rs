//! Acceptance suite: one PASS/FAIL line per criterion, with wall time
//! against its limit. Runs through the same entry point as the binary.
//! Exits nonzero when any criterion fails.

use std::time::{Duration, Instant};

use balance_core::graph::is_isomorphic;
use balance_core::oracle::{bal_exact, lbal_exact};
use balance_core::{choose2, Color, Label, ListColoring, NamedGraph, SmallGraph};
use balance_lab::cli::{run, Outcome, EXIT_NONE, EXIT_OK};
use balance_lab::io::{graph6, parse_target};
use serde_json::Value;

fn lab(args: &[&str]) -> Outcome {
    run(std::iter::once("balance-lab").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Result<Value, String> {
    let out = lab(args);
    if out.code != EXIT_OK && out.code != EXIT_NONE {
        return Err(format!(
            "`{}` exited {}: {}",
            args.join(" "),
            out.code,
            out.stderr.trim()
        ));
    }
    serde_json::from_str(&out.stdout).map_err(|e| format!("`{}`: bad JSON: {e}", args.join(" ")))
}

fn verify(args: &[&str]) -> Result<Value, String> {
    let mut full = vec!["verify"];
    full.extend_from_slice(args);
    json(&full)
}

fn fact_u64(report: &Value, trial: usize, key: &str) -> u64 {
    report["outcomes"][trial]["facts"][key].as_u64().unwrap_or(u64::MAX)
}

type Check = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn half_family_k5() -> Check {
    let out = lab(&["half-family", "--target", "k5"]);
    ensure(out.code == EXIT_OK, format!("exit {}", out.code))?;
    let got: Vec<SmallGraph> = out
        .stdout
        .lines()
        .map(graph6::decode)
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ensure(got.len() == 6, format!("{} graphs", got.len()))?;
    for (i, a) in got.iter().enumerate() {
        ensure(
            got[..i].iter().all(|b| !is_isomorphic(a, b)),
            "two members are isomorphic",
        )?;
    }
    for want in NamedGraph::half_k5() {
        let g = want.build().unwrap();
        ensure(got.iter().any(|h| is_isomorphic(h, &g)), format!("{want:?} missing"))?;
    }
    Ok("6 members: c5, 4pan, co4pan, bull, cricket, diamond".into())
}

fn turan_base_cases() -> Check {
    let mut seen = Vec::new();
    for (n, want) in [(5, 4), (6, 6), (7, 7), (8, 9)] {
        let t = Instant::now();
        let v = json(&["ex", "--n", &n.to_string(), "--family", "c3c4c5"])?["value"].as_u64();
        ensure(v == Some(want), format!("ex({n}) = {v:?}, expected {want}"))?;
        ensure(t.elapsed() < Duration::from_secs(60), format!("ex({n}) over 60 s"))?;
        seen.push(want.to_string());
    }
    Ok(format!("ex(5..8) = {}", seen.join(", ")))
}

fn half_family_turan_equality() -> Check {
    let mut seen = Vec::new();
    for n in 5..=9 {
        let r = verify(&["--claim", "thm4.2", "--n", &n.to_string()])?;
        let (a, b) = (fact_u64(&r, 0, "ex_half_family"), fact_u64(&r, 0, "ex_short_cycles"));
        ensure(r["all_passed"] == true && a == b, format!("n={n}: {a} vs {b}"))?;
        seen.push(format!("{n}:{a}"));
    }
    Ok(format!("equal for n = 5..9 ({})", seen.join(" ")))
}

fn split_certificate() -> Check {
    let mut seen = Vec::new();
    for (n, k) in [(8, 2), (12, 2), (12, 3)] {
        let t = Instant::now();
        let r = verify(&["--claim", "lemma3.3", "--n", &n.to_string(), "--k", &k.to_string()])?;
        let red = fact_u64(&r, 0, "red_size");
        ensure(r["all_passed"] == true, format!("({n},{k}) failed"))?;
        ensure(red as usize == (k - 1) * (n - k + 1), format!("({n},{k}): |R| = {red}"))?;
        // The same answer from the command that reports exit codes.
        let c = lab(&["construct", "split", "--n", &n.to_string(), "--k", &k.to_string()]);
        let cyc = format!("c{}", 4 * k);
        let f = lab(&[
            "find-balanced",
            "--coloring",
            &c.stdout,
            "--target",
            &cyc,
            "--deterministic",
        ]);
        ensure(
            f.code == EXIT_NONE,
            format!("find-balanced ({n},{k}) exited {}", f.code),
        )?;
        ensure(t.elapsed() < Duration::from_secs(60), format!("({n},{k}) over 60 s"))?;
        seen.push(format!("({n},{k}) |R|={red}"));
    }
    Ok(format!("no balanced C_4k; {}", seen.join(", ")))
}

fn routes(report: &Value) -> String {
    let mut counts = std::collections::BTreeMap::<String, usize>::new();
    for o in report["outcomes"].as_array().into_iter().flatten() {
        *counts
            .entry(o["facts"]["route"].as_str().unwrap_or("?").to_string())
            .or_default() += 1;
    }
    counts
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn all_trials(report: &Value, trials: u64) -> Result<(), String> {
    let passed = report["passed"].as_u64().unwrap_or(0);
    ensure(
        passed == trials,
        format!("{passed}/{trials} passed; replay seeds {}", report["failure_seeds"]),
    )
}

fn c4k2_suite() -> Check {
    let r = verify(&[
        "--claim", "thm3.5", "--n", "20", "--trials", "1000", "--seed", "42", "--excess", "1",
    ])?;
    all_trials(&r, 1000)?;
    ensure(
        r["outcomes"]
            .as_array()
            .unwrap()
            .iter()
            .all(|o| o["facts"]["bicolored"] == 2),
        "excess is not exactly 1",
    )?;
    Ok(format!("1000/1000 balanced C6 at excess 1; routes {}", routes(&r)))
}

fn odd_cycle_suite() -> Check {
    let r = verify(&[
        "--claim", "thm3.1", "--n", "15", "--trials", "1000", "--seed", "42", "--k", "1", "--alpha", "+1",
    ])?;
    all_trials(&r, 1000)?;
    let min = (0..1000).map(|i| fact_u64(&r, i, "min_class")).min().unwrap();
    ensure(min >= 2, format!("a trial had min class {min}"))?;
    let c = lab(&["construct", "single-edge", "--n", "15"]);
    let f = lab(&[
        "find-balanced",
        "--coloring",
        &c.stdout,
        "--target",
        "c5",
        "--deterministic",
    ]);
    ensure(
        f.code == EXIT_NONE,
        format!("single-edge coloring: find-balanced exited {}", f.code),
    )?;
    Ok(format!(
        "1000/1000 balanced C5 with |R|,|B| >= 2; single-edge K15 has none; routes {}",
        routes(&r)
    ))
}

fn k5_certificate() -> Check {
    let r = verify(&["--claim", "lemma4.4", "--n", "40", "--eps", "0.5", "--seed", "1"])?;
    let sets = fact_u64(&r, 0, "sets_examined");
    ensure(r["all_passed"] == true, "a balanced K5 exists")?;
    ensure(sets == 658_008, format!("{sets} sets examined"))?;
    let f = &r["outcomes"][0]["facts"];
    Ok(format!(
        "no balanced K5 over {sets} sets; m={} achieved_m={} |R|={} |B|={} class_bound={:.2} bound_met={}",
        f["m"],
        f["achieved_m"],
        f["red_size"],
        f["blue_size"],
        f["class_bound"].as_f64().unwrap_or(f64::NAN),
        f["bound_met"]
    ))
}

/// Largest smaller class over colorings without a balanced copy, checking
/// each copy by counting forced colors. Independent of the library search.
fn naive_threshold(n: usize, g: &SmallGraph, alphabet: &[Label]) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let edges = g.edge_list();
    let e = edges.len();
    let k = g.vertex_count();
    let perms: Vec<Vec<usize>> = {
        let mut all = Vec::new();
        let mut cur = Vec::new();
        fn go(n: usize, k: usize, cur: &mut Vec<usize>, all: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                all.push(cur.clone());
                return;
            }
            for v in 0..n {
                if !cur.contains(&v) {
                    cur.push(v);
                    go(n, k, cur, all);
                    cur.pop();
                }
            }
        }
        go(n, k, &mut cur, &mut all);
        all
    };
    let base = alphabet.len();
    let mut best = 0;
    for code in 0..base.pow(pairs.len() as u32) {
        let mut rest = code;
        let mut c = ListColoring::uniform(n, Label::B).unwrap();
        for &(u, v) in &pairs {
            c.set(u, v, alphabet[rest % base]);
            rest /= base;
        }
        let s = c.stats();
        if s.min_class() <= best {
            continue;
        }
        let balanced = perms.iter().any(|m| {
            let red = edges
                .iter()
                .filter(|&&(a, b)| !c.allows(m[a], m[b], Color::Blue))
                .count();
            let free = edges.iter().filter(|&&(a, b)| c.label(m[a], m[b]) == Label::RB).count();
            (red..=red + free).any(|x| x.abs_diff(e - x) <= 1)
        });
        if !balanced {
            best = s.min_class();
        }
    }
    best
}

fn oracle_agreement() -> Check {
    let mut seen = Vec::new();
    for (n, t) in [(4, "c3"), (5, "c3"), (5, "c4"), (5, "k4")] {
        let g = parse_target(t).map_err(|e| e.to_string())?;
        let ns = n.to_string();
        let bal = json(&["bal-exact", "--n", &ns, "--target", t])?["value"]
            .as_u64()
            .unwrap() as usize;
        let lbal = json(&["lbal-exact", "--n", &ns, "--target", t])?["value"]
            .as_u64()
            .unwrap() as usize;
        ensure(bal == bal_exact(n, &g).unwrap().value, "parallel and serial bal differ")?;
        ensure(
            lbal == lbal_exact(n, &g).unwrap().value,
            "parallel and serial lbal differ",
        )?;
        let nb = naive_threshold(n, &g, &[Label::R, Label::B]);
        let nl = naive_threshold(n, &g, &[Label::R, Label::B, Label::RB]);
        ensure(
            bal == nb && lbal == nl,
            format!("({n},{t}): bal {bal}/{nb} lbal {lbal}/{nl}"),
        )?;
        if 2 * bal < choose2(n) {
            ensure(bal == lbal, format!("({n},{t}): bal {bal} != lbal {lbal}"))?;
        }
        seen.push(format!("({n},{t}) {bal}/{lbal}"));
    }
    Ok(format!("bal/lbal match naive scans: {}", seen.join(" ")))
}

fn constants() -> Check {
    let v = json(&["formula", "k5", "--n", "100", "--eps", "0.1"])?;
    let c = v["c"].as_f64().unwrap_or(f64::NAN);
    let u = v["upper_coeff"].as_f64().unwrap_or(f64::NAN);
    ensure((c - 0.016).abs() < 1e-3, format!("c = {c}"))?;
    ensure((u - 0.177).abs() < 1e-3, format!("upper_coeff = {u}"))?;
    Ok(format!("c = {c:.6}, 1/(4 sqrt 2) = {u:.6}"))
}

fn determinism() -> Check {
    let suites: [&[&str]; 8] = [
        &[
            "verify", "--claim", "thm3.5", "--n", "20", "--trials", "1000", "--seed", "42",
        ],
        &[
            "verify", "--claim", "thm3.1", "--n", "15", "--trials", "1000", "--seed", "42",
        ],
        &[
            "verify", "--claim", "lemma4.4", "--n", "40", "--eps", "0.5", "--seed", "1",
        ],
        &[
            "verify",
            "--claim",
            "thm3.2-upper",
            "--n",
            "20",
            "--trials",
            "100",
            "--seed",
            "42",
        ],
        &["verify", "--claim", "thm4.2", "--n", "8"],
        &["lbal-exact", "--n", "5", "--target", "c4"],
        &["half-family", "--target", "k5"],
        &[
            "find-balanced",
            "--coloring",
            r#"{"n":3,"edges":[{"u":0,"v":1,"list":"r"},{"u":0,"v":2,"list":"rb"},{"u":1,"v":2,"list":"b"}]}"#,
            "--target",
            "c3",
            "--deterministic",
        ],
    ];
    for args in suites {
        let mut one = vec!["--workers", "1"];
        one.extend_from_slice(args);
        let mut eight = vec!["--workers", "8"];
        eight.extend_from_slice(args);
        let (a, b) = (lab(&one), lab(&eight));
        ensure(
            a.code == b.code && a.stdout == b.stdout,
            format!("`{}` differs", args.join(" ")),
        )?;
        ensure(!a.stdout.is_empty(), format!("`{}` printed nothing", args.join(" ")))?;
    }
    Ok(format!(
        "{} seeded runs byte-identical at 1 and 8 workers",
        suites.len()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("half-family exactness", Duration::from_secs(1), half_family_k5),
        ("turan base cases", Duration::from_secs(240), turan_base_cases),
        (
            "ex equality n=5..9",
            Duration::from_secs(600),
            half_family_turan_equality,
        ),
        (
            "split coloring certificate",
            Duration::from_secs(180),
            split_certificate,
        ),
        ("c4k+2 suite", Duration::from_secs(300), c4k2_suite),
        ("odd cycle suite", Duration::from_secs(120), odd_cycle_suite),
        ("k5 certificate", Duration::from_secs(600), k5_certificate),
        ("oracle agreement", Duration::from_secs(600), oracle_agreement),
        ("constants", Duration::from_secs(1), constants),
        ("determinism", Duration::from_secs(600), determinism),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.into_iter().enumerate() {
        let t = Instant::now();
        let result = check();
        let took = t.elapsed();
        let (ok, detail) = match result {
            Ok(d) if took <= limit => (true, d),
            Ok(d) => (false, format!("{d}; over the {limit:?} limit")),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "{} {:>2} {}: {} [{:.2?} / {:?}]",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            name,
            detail,
            took,
            limit
        );
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
