//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use resolvedim::theorems::{
    cp_negative_witnesses, cp_positive_witnesses, jfg_positive_witnesses, negative_witnesses,
    WitnessFixture,
};
use resolvedim::{
    all_pairs_distances, are_isomorphic, cp_dimensions, gen_cayley_dihedral, gen_cayley_zn,
    gen_cocktail_party, gen_jellyfish, is_connected, jfg_diameter, min_adjacency_resolving_set,
    min_doubly_resolving_set, min_resolving_set, min_strong_resolving_set,
    min_strong_resolving_via_mmd, naive_minimum, Graph, Invariant, Solver, VertexSet,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

const JFG_GRID: [(usize, usize); 6] = [(3, 2), (3, 3), (4, 2), (4, 3), (5, 2), (5, 3)];
const JFG_SMALL: [(usize, usize); 3] = [(3, 2), (4, 2), (3, 3)];
const CP_ORDERS: [usize; 3] = [8, 10, 12];

fn criterion_1() -> Outcome {
    for (n, m) in JFG_GRID {
        let g = gen_jellyfish(n, m).map_err(e2s)?;
        let dm = all_pairs_distances(&g).map_err(e2s)?;
        let r = min_resolving_set(&g, &dm).map_err(e2s)?;
        ensure(r.value == n * m - n, || format!("JFG({n},{m}): beta={} expected {}", r.value, n * m - n))?;
    }
    Ok("beta(JFG(n,m)) = nm-n on 6 instances".into())
}

fn criterion_2() -> Outcome {
    for (n, m) in JFG_SMALL {
        let g = gen_jellyfish(n, m).map_err(e2s)?;
        let dm = all_pairs_distances(&g).map_err(e2s)?;
        let r = min_doubly_resolving_set(&g, &dm).map_err(e2s)?;
        ensure(r.value == n * m, || format!("JFG({n},{m}): psi={} expected {}", r.value, n * m))?;
    }
    Ok("psi(JFG(n,m)) = nm on 3 instances".into())
}

fn criterion_3() -> Outcome {
    for (n, m) in JFG_SMALL {
        let g = gen_jellyfish(n, m).map_err(e2s)?;
        let dm = all_pairs_distances(&g).map_err(e2s)?;
        let want = n * m - 1;
        let s = min_strong_resolving_set(&g, &dm).map_err(e2s)?.value;
        let a = min_adjacency_resolving_set(&g).map_err(e2s)?.value;
        let c = min_strong_resolving_via_mmd(&g, &dm).map_err(e2s)?.value;
        ensure(s == want && a == want && c == want, || {
            format!("JFG({n},{m}): sdim={s} adjdim={a} mmd={c} expected {want}")
        })?;
    }
    Ok("sdim = adjdim = mmd cover = nm-1 on 3 instances".into())
}

fn criterion_4() -> Outcome {
    for n in CP_ORDERS {
        let g = gen_cayley_zn(n, n / 2 - 1).map_err(e2s)?;
        let dm = all_pairs_distances(&g).map_err(e2s)?;
        let want = cp_dimensions(n).map_err(e2s)?;
        ensure(want == n / 2, || format!("closed form for n={n} is {want}"))?;
        let b = min_resolving_set(&g, &dm).map_err(e2s)?.value;
        let p = min_doubly_resolving_set(&g, &dm).map_err(e2s)?.value;
        let s = min_strong_resolving_set(&g, &dm).map_err(e2s)?.value;
        ensure(b == want && p == want && s == want, || {
            format!("Cay(Z_{n}): beta={b} psi={p} sdim={s} expected {want}")
        })?;
    }
    Ok("beta = psi = sdim = n/2 for n in {8,10,12}".into())
}

fn check_fixtures(g: &Graph, fixtures: &[WitnessFixture], label: &str) -> Result<usize, String> {
    let dm = all_pairs_distances(g).map_err(e2s)?;
    for fx in fixtures {
        let got = fx.invariant.holds(g, &dm, &fx.set).map_err(e2s)?;
        ensure(got == fx.expected, || {
            format!("{label}: {} {} {} expected {} got {got}", fx.invariant, fx.description, fx.set, fx.expected)
        })?;
    }
    Ok(fixtures.len())
}

fn criterion_5() -> Outcome {
    let mut checked = 0;
    for (n, m) in JFG_GRID {
        let g = gen_jellyfish(n, m).map_err(e2s)?;
        let label = format!("JFG({n},{m})");
        checked += check_fixtures(&g, &jfg_positive_witnesses(n, m).map_err(e2s)?, &label)?;
        checked += check_fixtures(&g, &negative_witnesses(n, m).map_err(e2s)?, &label)?;
    }
    for n in CP_ORDERS {
        let g = gen_cayley_zn(n, n / 2 - 1).map_err(e2s)?;
        let label = format!("Cay(Z_{n})");
        checked += check_fixtures(&g, &cp_positive_witnesses(n).map_err(e2s)?, &label)?;
        checked += check_fixtures(&g, &cp_negative_witnesses(n).map_err(e2s)?, &label)?;
    }
    Ok(format!("{checked} witness fixtures, 0 exceptions"))
}

fn criterion_6() -> Outcome {
    let mut count = 0;
    for n in 3..=8 {
        for m in 1..=3 {
            let g = gen_jellyfish(n, m).map_err(e2s)?;
            let d = all_pairs_distances(&g).map_err(e2s)?.diameter() as usize;
            let want = jfg_diameter(n, m).map_err(e2s)?;
            ensure(d == want, || format!("JFG({n},{m}): diameter {d} expected {want}"))?;
            count += 1;
        }
    }
    let mut cps: Vec<(String, Graph)> = Vec::new();
    for r in 2..=8 {
        cps.push((format!("CP({r})"), gen_cocktail_party(r).map_err(e2s)?));
    }
    for n in CP_ORDERS {
        cps.push((format!("Cay(Z_{n})"), gen_cayley_zn(n, n / 2 - 1).map_err(e2s)?));
    }
    for n in 2..=6 {
        cps.push((format!("Cay(D_{})", 2 * n), gen_cayley_dihedral(n).map_err(e2s)?));
    }
    for (label, g) in &cps {
        let d = all_pairs_distances(g).map_err(e2s)?.diameter();
        ensure(d == 2, || format!("{label}: diameter {d}"))?;
    }
    Ok(format!("{count} jellyfish and {} cocktail party diameters", cps.len()))
}

fn criterion_7() -> Outcome {
    for n in CP_ORDERS {
        let iso = are_isomorphic(&gen_cayley_zn(n, n / 2 - 1).map_err(e2s)?, &gen_cocktail_party(n / 2).map_err(e2s)?)
            .map_err(e2s)?;
        ensure(iso, || format!("Cay(Z_{n}) not isomorphic to CP({})", n / 2))?;
    }
    for n in 2..=6 {
        let iso = are_isomorphic(&gen_cayley_dihedral(n).map_err(e2s)?, &gen_cocktail_party(n).map_err(e2s)?)
            .map_err(e2s)?;
        ensure(iso, || format!("Cay(D_{}) not isomorphic to CP({n})", 2 * n))?;
    }
    Ok("3 circulant and 5 dihedral isomorphisms".into())
}

fn random_connected(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.gen_range(4..=9);
    let p = rng.gen_range(0.1..0.8);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("valid edges")
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2026);
    let solver = Solver::default();
    let mut sampled = 0usize;
    let mut diameter_two = 0usize;
    for case in 0..200 {
        let g = random_connected(&mut rng);
        let n = g.vertex_count();
        ensure(is_connected(&g), || format!("case {case}: generator produced a disconnected graph"))?;
        let dm = all_pairs_distances(&g).map_err(e2s)?;
        let mut value = [0usize; 4];
        for (i, inv) in Invariant::ALL.into_iter().enumerate() {
            let fast = solver.pruned(&g, Some(&dm), inv).map_err(e2s)?;
            let slow = naive_minimum(&g, inv).map_err(e2s)?;
            ensure(fast.value == slow.value && fast.witness == slow.witness, || {
                format!("case {case} {inv}: pruned {} {} vs naive {} {} on {:?}", fast.value, fast.witness, slow.value, slow.witness, g)
            })?;
            value[i] = fast.value;
        }
        let [beta, psi, sdim, adj] = value;
        ensure(beta <= psi && beta <= sdim && beta <= adj && adj < n, || {
            format!("case {case}: chain broken beta={beta} psi={psi} sdim={sdim} adjdim={adj} n={n}")
        })?;
        if dm.diameter() == 2 {
            diameter_two += 1;
            ensure(adj == beta, || format!("case {case}: diameter 2 but adjdim={adj} beta={beta}"))?;
        }
        for _ in 0..20 {
            let members: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
            if members.len() < 2 {
                continue;
            }
            let set = VertexSet::new(members).map_err(e2s)?;
            let resolving = Invariant::MetricDim.holds(&g, &dm, &set).map_err(e2s)?;
            for inv in [Invariant::DoublyDim, Invariant::StrongDim] {
                if inv.holds(&g, &dm, &set).map_err(e2s)? {
                    sampled += 1;
                    ensure(resolving, || format!("case {case}: {inv} set {set} is not resolving"))?;
                }
            }
        }
    }
    Ok(format!("200 graphs agree with the oracle; {sampled} sampled sets; {diameter_two} of diameter 2"))
}

fn sweep_csv(args: &[&str], threads: Option<&str>) -> Result<Vec<Vec<String>>, String> {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_resolvedim"));
    cmd.arg("sweep").args(args);
    match threads {
        Some(t) => cmd.env("RESOLVEDIM_THREADS", t),
        None => cmd.env_remove("RESOLVEDIM_THREADS"),
    };
    let out = cmd.output().map_err(e2s)?;
    ensure(out.status.success(), || format!("sweep exited with {}", out.status))?;
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let headers = reader.headers().map_err(e2s)?.clone();
    let skip = headers.iter().position(|h| h == "elapsed_ms").ok_or("no elapsed_ms column")?;
    let mut rows = vec![headers.iter().map(String::from).collect::<Vec<_>>()];
    for rec in reader.records() {
        let rec = rec.map_err(e2s)?;
        rows.push(rec.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, f)| f.to_string()).collect());
    }
    Ok(rows)
}

fn criterion_9() -> Outcome {
    let grids: [&[&str]; 2] = [
        &["--family", "jfg", "--n", "3..5", "--m", "2..3", "--invariants", "beta,psi,sdim,adjdim"],
        &["--family", "cp", "--n", "8..12:2", "--invariants", "beta,psi,sdim"],
    ];
    let mut rows = 0;
    for args in grids {
        let first = sweep_csv(args, None)?;
        let second = sweep_csv(args, None)?;
        ensure(first == second, || format!("consecutive runs differ for {args:?}"))?;
        let sequential = sweep_csv(args, Some("0"))?;
        ensure(first == sequential, || format!("sequential run differs for {args:?}"))?;
        rows += first.len() - 1;
    }
    Ok(format!("{rows} rows identical across runs and thread counts"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 metric dimension of JFG", criterion_1, Some(Duration::from_secs(60))),
        ("2 doubly resolving number of JFG", criterion_2, Some(Duration::from_secs(60))),
        ("3 strong and adjacency dimension of JFG", criterion_3, Some(Duration::from_secs(60))),
        ("4 cocktail party dimensions", criterion_4, Some(Duration::from_secs(30))),
        ("5 witness fidelity", criterion_5, None),
        ("6 diameters", criterion_6, None),
        ("7 isomorphisms", criterion_7, None),
        ("8 random graph properties", criterion_8, Some(Duration::from_secs(300))),
        ("9 sweep determinism", criterion_9, None),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(limit)) if elapsed >= limit => Err(format!("took {elapsed:?}, limit {limit:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({:.2}s)", elapsed.as_secs_f64()),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail} ({:.2}s)", elapsed.as_secs_f64());
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
