//! The thirteen acceptance criteria, run in order with their runtime bounds.
//! Each prints one PASS/FAIL line; the test fails if any criterion does.

use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use intertwining::matrix::{adjacency_matrix, rank_control};
use intertwining::qpoly::h_polynomial;
use intertwining::stats::{
    dual_major_index, partial_depth_index, partial_intertwining, parviainen_phi,
};
use intertwining::verify::{self, Check, VerifyConfig};
use intertwining::{depth_index, intertwining, ArcDiagram, IntertwiningMethod, SetPartition};

struct Criterion {
    id: usize,
    name: &'static str,
    bound: Duration,
    body: fn() -> Result<(), String>,
}

fn checks(list: &[(Check, usize)]) -> Result<(), String> {
    for &(check, max_n) in list {
        let config = VerifyConfig {
            max_n,
            seed: 20_240_601,
            ..VerifyConfig::default()
        };
        let outcome = verify::run(check, &config);
        if !outcome.passed {
            return Err(outcome.to_string());
        }
    }
    Ok(())
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn sample_partition() -> SetPartition {
    "18|2569|37|4".parse().unwrap()
}

fn c1_sample_statistics() -> Result<(), String> {
    let d = sample_partition().to_arc_diagram();
    expect("i", intertwining(&d, IntertwiningMethod::ExtendedArcs), 15)?;
    expect("t", depth_index(&d), 21)?;
    expect(
        "partial i",
        partial_intertwining(&d),
        vec![0, 1, 2, 3, 2, 0, 2, 3, 2],
    )?;
    expect(
        "partial t",
        partial_depth_index(&d),
        vec![0, 0, 0, 0, 2, 5, 4, 4, 6],
    )
}

fn c2_path_matrices() -> Result<(), String> {
    let d = ArcDiagram::new(4, &[(1, 2), (2, 3)]).map_err(|e| e.to_string())?;
    let m = adjacency_matrix(&d);
    let r = rank_control(&m).map_err(|e| e.to_string())?;
    expect(
        "M",
        m.rows(),
        vec![vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0; 4], vec![0; 4]],
    )?;
    expect(
        "R",
        r.rows(),
        vec![vec![0, 1, 2, 2], vec![0, 0, 1, 1], vec![0; 4], vec![0; 4]],
    )?;
    expect("D", r.d_statistic(), 5)?;
    expect("E", r.e_statistic(), 1)?;
    expect("t", depth_index(&d), 5)
}

fn c3() -> Result<(), String> {
    checks(&[(Check::TPlusI, 9)])
}

fn c4() -> Result<(), String> {
    checks(&[(Check::Partials, 9)])
}

fn c5() -> Result<(), String> {
    checks(&[(Check::RankStatistics, 8), (Check::RankCounting, 7)])
}

fn c6() -> Result<(), String> {
    checks(&[(Check::OrbitInvariance, 6)])
}

fn c7() -> Result<(), String> {
    checks(&[(Check::Phi, 9)])?;
    let image = parviainen_phi(&sample_partition());
    expect("phi", image.to_short_string().as_str(), "16|2|3579|48")?;
    expect("dualmaj", dual_major_index(&image), 15)
}

fn c8() -> Result<(), String> {
    checks(&[(Check::StirlingEnum, 9)])
}

fn c9() -> Result<(), String> {
    checks(&[(Check::BellMinusOne, 10)])
}

fn c10() -> Result<(), String> {
    checks(&[(Check::HIdentity, 40)])?;
    expect("H_0", h_polynomial(0).to_string(), "1".into())?;
    expect("H_1", h_polynomial(1).to_string(), "t".into())?;
    expect("H_2", h_polynomial(2).to_string(), "t + q*t^2".into())
}

fn c11() -> Result<(), String> {
    checks(&[(Check::BorelPointCount, 9)])
}

fn c12() -> Result<(), String> {
    checks(&[(Check::PosetGraded, 6)])
}

fn c13() -> Result<(), String> {
    checks(&[(Check::CrossingIndex, 8)])
}

const CRITERIA: [Criterion; 13] = [
    Criterion {
        id: 1,
        name: "sample statistics",
        bound: Duration::from_millis(1),
        body: c1_sample_statistics,
    },
    Criterion {
        id: 2,
        name: "path matrices",
        bound: Duration::from_millis(1),
        body: c2_path_matrices,
    },
    Criterion {
        id: 3,
        name: "t + i = C(n,2), n <= 9",
        bound: Duration::from_secs(1),
        body: c3,
    },
    Criterion {
        id: 4,
        name: "partial statistics, n <= 9",
        bound: Duration::from_secs(2),
        body: c4,
    },
    Criterion {
        id: 5,
        name: "D = t, E = i, n <= 8; counting = oracle, n <= 7",
        bound: Duration::from_secs(5),
        body: c5,
    },
    Criterion {
        id: 6,
        name: "finite-field orbit invariance, n <= 6",
        bound: Duration::from_secs(5),
        body: c6,
    },
    Criterion {
        id: 7,
        name: "phi bijection, n <= 9",
        bound: Duration::from_secs(2),
        body: c7,
    },
    Criterion {
        id: 8,
        name: "q-Stirling enumeration = recurrence, n <= 9",
        bound: Duration::from_secs(2),
        body: c8,
    },
    Criterion {
        id: 9,
        name: "X_n(-1) table and enumeration",
        bound: Duration::from_secs(1),
        body: c9,
    },
    Criterion {
        id: 10,
        name: "H identity, n <= 40",
        bound: Duration::from_secs(2),
        body: c10,
    },
    Criterion {
        id: 11,
        name: "Borel point count, n <= 9",
        bound: Duration::from_secs(2),
        body: c11,
    },
    Criterion {
        id: 12,
        name: "graded poset, n <= 6",
        bound: Duration::from_secs(5),
        body: c12,
    },
    Criterion {
        id: 13,
        name: "c = t, n <= 8",
        bound: Duration::from_secs(2),
        body: c13,
    },
];

/// The sample partition through the binary; process start-up is outside the
/// 1 ms bound, so only the output is checked here.
fn cli_sample_statistics() -> Result<(), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_intertwining"))
        .args(["stats", "--partition", "1,8|2,5,6,9|3,7|4"])
        .output()
        .map_err(|e| e.to_string())?;
    expect("exit", out.status.code(), Some(0))?;
    let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    expect("i", &v["intertwining"], &json!(15))?;
    expect("t", &v["depth_index"], &json!(21))?;
    expect(
        "partial i",
        &v["partial_intertwining"],
        &json!([0, 1, 2, 3, 2, 0, 2, 3, 2]),
    )?;
    expect(
        "partial t",
        &v["partial_depth"],
        &json!([0, 0, 0, 0, 2, 5, 4, 4, 6]),
    )
}

fn main() {
    let mut failed = Vec::new();
    for c in &CRITERIA {
        let start = Instant::now();
        let result = (c.body)();
        let elapsed = start.elapsed();
        let verdict = match result {
            Ok(()) if elapsed < c.bound => Ok(()),
            Ok(()) => Err(format!("took {elapsed:?}, bound {:?}", c.bound)),
            Err(e) => Err(e),
        };
        match &verdict {
            Ok(()) => println!(
                "PASS {:>2} {} ({elapsed:.2?} < {:?})",
                c.id, c.name, c.bound
            ),
            Err(why) => {
                println!("FAIL {:>2} {} ({elapsed:.2?}): {why}", c.id, c.name);
                failed.push(c.id);
            }
        }
    }
    match cli_sample_statistics() {
        Ok(()) => println!("PASS  1 sample statistics via CLI"),
        Err(why) => {
            println!("FAIL  1 sample statistics via CLI: {why}");
            failed.push(1);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 13 criteria passed");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
