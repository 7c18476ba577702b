//! Acceptance criteria, one pass/fail line each. Runs with `harness = false`
//! so the table is printed on every run.

use std::collections::{BTreeMap, HashSet};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use gotzmann_core::gotzmann::labelled_graph_count;
use gotzmann_core::{
    certify, compressed_complex, f_vector, gotzmann_value_deg2, hilbert_ideal, is_valid_f_vector,
    kruskal_katona_pseudopower, lex_segment_ideal, macaulay_rep, BigUint, FVector, Graph,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn data(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
    root.join(name).to_string_lossy().into_owned()
}

fn cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("gotzmann").chain(args.iter().copied());
    let code = gotzmann_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).expect("utf-8 output"))
}

fn kv(text: &str) -> BTreeMap<String, String> {
    text.lines()
        .filter_map(|l| l.split_once('='))
        .map(|(k, v)| (k.to_owned(), v.to_owned()))
        .collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Every labelled graph on `1..=max` vertices.
fn all_graphs(max: usize) -> impl Iterator<Item = Graph> {
    (1..=max).flat_map(|n| {
        (0..labelled_graph_count(n).unwrap()).map(move |m| Graph::from_edge_mask(n, m).unwrap())
    })
}

/// 200 seeded random graphs on 1..=8 vertices plus every graph on <= 5.
fn sample_graphs() -> Vec<Graph> {
    let mut rng = StdRng::seed_from_u64(0x5eed_02e7);
    let mut graphs: Vec<Graph> = (0..200)
        .map(|_| {
            let n = rng.gen_range(1..=8usize);
            let mask = rng.gen::<u64>() & (labelled_graph_count(n).unwrap() - 1);
            Graph::from_edge_mask(n, mask).unwrap()
        })
        .collect();
    graphs.extend(all_graphs(5));
    graphs
}

/// Pascal's triangle by addition only, independent of the library binomial.
/// Entries saturate; only small ones are ever compared.
fn pascal(rows: usize) -> Vec<Vec<u64>> {
    let mut t = vec![vec![1u64]];
    for p in 1..rows {
        let mut row = vec![1u64; p + 1];
        for q in 1..p {
            row[q] = t[p - 1][q - 1].saturating_add(t[p - 1][q]);
        }
        t.push(row);
    }
    t
}

fn c1_star_theorem() -> Outcome {
    let expected: u64 = (1..=6u32).map(|n| 1u64 << (n * (n - 1) / 2)).sum();
    let start = Instant::now();
    let (code, out) = cli(&["--machine", "verify-star-theorem", "--max-vertices", "6"]);
    let elapsed = start.elapsed();
    let kv = kv(&out);
    ensure(code == 0, || format!("exit code {code}: {out}"))?;
    ensure(kv["graphs_checked"] == expected.to_string(), || {
        format!(
            "checked {} graphs, expected {expected}",
            kv["graphs_checked"]
        )
    })?;
    ensure(kv["mismatches"] == "0", || {
        format!("mismatches={}", kv["mismatches"])
    })?;
    ensure(kv["stars"] == kv["gotzmann"], || {
        "star and Gotzmann counts differ".into()
    })?;
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{expected} graphs, {} stars = Gotzmann, 0 mismatches, {:.2}s single-threaded",
        kv["stars"],
        elapsed.as_secs_f64()
    ))
}

fn c2_example() -> Outcome {
    let ideal = data("example.ideal");
    let (code, out) = cli(&["fvector", "--ideal", &ideal]);
    ensure(code == 0 && out == "4 5 1\n", || {
        format!("fvector gave `{out}` ({code})")
    })?;
    let (code, out) = cli(&["--machine", "hilbert", "--ideal", &ideal, "--degree", "3"]);
    let h = kv(&out);
    ensure(code == 0 && h["h_quotient"] == "15", || {
        format!("hilbert gave `{out}`")
    })?;
    Ok("f-vector (4,5,1), H(P/I,3) = 15".into())
}

fn c3_two_e_plus_t() -> Outcome {
    let graphs = sample_graphs();
    for g in &graphs {
        let formula = g.hilbert_edge_ideal_deg3();
        let oracle = hilbert_ideal(&g.edge_ideal(), 3);
        ensure(formula == oracle, || {
            format!("2e+t={formula} vs {oracle} on\n{g}")
        })?;
    }
    Ok(format!(
        "{} graphs, 2e + t = H(I(G),3) exactly",
        graphs.len()
    ))
}

fn c4_quadratic_closed_form(gotzmann_sf: &mut Vec<Graph>) -> Outcome {
    let mut checked = 0;
    for g in all_graphs(5) {
        let (n, m) = (g.vertex_count() as u64, g.edge_count() as u64);
        if m > n {
            continue;
        }
        let ideal = g.edge_ideal();
        let verdict = certify(&ideal).unwrap().is_gotzmann;
        let closed = hilbert_ideal(&ideal, 3) == gotzmann_value_deg2(n, m).unwrap();
        ensure(verdict == closed, || {
            format!("certifier {verdict} vs closed form {closed} on\n{g}")
        })?;
        if verdict {
            gotzmann_sf.push(g);
        }
        checked += 1;
    }
    Ok(format!(
        "{checked} square-free quadratic ideals with m <= n <= 5"
    ))
}

/// Criteria 5, 6 (first half) and 9 over every graph of criterion 1.
fn c5_c6_c9_scan(
    gotzmann_graphs: &mut Vec<Graph>,
    f_vectors: &mut HashSet<FVector>,
) -> Result<(u64, u64), String> {
    let (mut total, mut gotz) = (0, 0);
    for g in all_graphs(6) {
        total += 1;
        let r = certify(&g.edge_ideal()).unwrap();
        if r.is_gotzmann {
            gotz += 1;
            gotzmann_graphs.push(g.clone());
        }
        f_vectors.insert(f_vector(&g.independence_complex()));
    }
    Ok((total, gotz))
}

fn c5_edge_bound(gotzmann_graphs: &[Graph]) -> Outcome {
    for g in gotzmann_graphs {
        ensure(g.edge_count() < g.vertex_count(), || {
            format!("e >= n on\n{g}")
        })?;
    }
    Ok(format!(
        "{} Gotzmann edge ideals, all with e <= n - 1",
        gotzmann_graphs.len()
    ))
}

fn c6_square_free(gotzmann_graphs: &[Graph], quadratic_gotzmann: &[Graph]) -> Outcome {
    for g in gotzmann_graphs.iter().chain(quadratic_gotzmann) {
        // Independent of the certifier's own face counts: via the complex.
        let fv = f_vector(&g.independence_complex());
        let bound = kruskal_katona_pseudopower(&fv.get(1), 2);
        ensure(fv.get(2) == bound, || {
            format!("f_2 = {} != f_1^(2) = {bound} on\n{g}", fv.get(2))
        })?;
    }
    Ok(format!(
        "{} certified ideals, f_2 = f_1^(2) on all",
        gotzmann_graphs.len() + quadratic_gotzmann.len()
    ))
}

fn c7_macaulay() -> Outcome {
    let t = pascal(260);
    let binom = |p: usize, q: usize| if q > p { 0 } else { t[p][q] };
    let mut cases = 0u64;
    for d in 1..=6usize {
        for a in 0..=10_000u64 {
            let rep = macaulay_rep(&BigUint::from(a), d);
            let b: Vec<usize> = rep
                .coefficients()
                .iter()
                .map(|c| c.try_into().unwrap())
                .collect();
            let value: u128 = b
                .iter()
                .zip((1..=d).rev())
                .map(|(&bi, i)| product_binom(bi, i))
                .sum();
            ensure(value == a as u128 && b.len() == d, || {
                format!("a={a} d={d} -> {b:?}")
            })?;
            ensure(b.windows(2).all(|w| w[0] > w[1]), || {
                format!("not decreasing {b:?}")
            })?;
            cases += 1;
        }
    }
    // Every strictly decreasing tuple with value <= 200, grouped by value.
    for d in 1..=4usize {
        let mut found: BTreeMap<u64, Vec<Vec<usize>>> = BTreeMap::new();
        let mut tuple = Vec::new();
        enumerate_tuples(d, usize::MAX, 0, &binom, &mut tuple, &mut found);
        for a in 0..=200u64 {
            let reps = found.get(&a).cloned().unwrap_or_default();
            let greedy: Vec<usize> = macaulay_rep(&BigUint::from(a), d)
                .coefficients()
                .iter()
                .map(|c| c.try_into().unwrap())
                .collect();
            ensure(reps == vec![greedy.clone()], || {
                format!("a={a} d={d}: tuples {reps:?}, greedy {greedy:?}")
            })?;
        }
    }
    Ok(format!(
        "{cases} round trips; uniqueness for a <= 200, d <= 4"
    ))
}

/// Exact C(p, q) for small q by the running product, which stays integral.
fn product_binom(p: usize, q: usize) -> u128 {
    if q > p {
        return 0;
    }
    (0..q as u128).fold(1, |acc, i| acc * (p as u128 - i) / (i + 1))
}

/// Tuples `b_i > b_{i-1} > ... > b_1 >= 0` below `upper`, pruned at value 200.
fn enumerate_tuples(
    i: usize,
    upper: usize,
    partial: u64,
    binom: &impl Fn(usize, usize) -> u64,
    tuple: &mut Vec<usize>,
    found: &mut BTreeMap<u64, Vec<Vec<usize>>>,
) {
    if i == 0 {
        found.entry(partial).or_default().push(tuple.clone());
        return;
    }
    // C(b, i) grows with b once b >= i, so stop at the first overshoot.
    let mut b = i - 1;
    while b < upper {
        let v = partial + binom(b, i);
        if v > 200 {
            break;
        }
        tuple.push(b);
        enumerate_tuples(i - 1, b, v, binom, tuple, found);
        tuple.pop();
        b += 1;
    }
}

fn c8_lex_segments() -> Outcome {
    let mut checked = 0;
    for n in 1..=5usize {
        for d in 1..=3u32 {
            let total: usize = gotzmann_core::hilbert_ring(n, d).try_into().unwrap();
            for count in 0..=total {
                let ideal = lex_segment_ideal(n, d, count).unwrap();
                let r = certify(&ideal).unwrap();
                ensure(r.is_gotzmann, || {
                    format!("lex segment n={n} d={d} count={count}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} lex-segment ideals, all Gotzmann"))
}

fn c9_kruskal_katona(f_vectors: &HashSet<FVector>) -> Outcome {
    for fv in f_vectors {
        ensure(is_valid_f_vector(fv), || format!("{fv} rejected"))?;
        let c = compressed_complex(fv).map_err(|e| format!("{fv}: {e}"))?;
        ensure(f_vector(&c) == *fv, || {
            format!("{fv} came back as {}", f_vector(&c))
        })?;
    }
    Ok(format!(
        "{} distinct independence-complex f-vectors",
        f_vectors.len()
    ))
}

fn c10_triples_through_vertex() -> Outcome {
    let graphs = sample_graphs();
    let mut vertices = 0;
    for g in &graphs {
        for v in 0..g.vertex_count() {
            let closed = g.dependent_triples_through_closed_form(v);
            let enumerated = g.dependent_triples_through(v);
            ensure(closed == enumerated, || {
                format!("v={} {closed} vs {enumerated} on\n{g}", v + 1)
            })?;
            vertices += 1;
        }
    }
    Ok(format!("{vertices} vertices over {} graphs", graphs.len()))
}

fn main() -> ExitCode {
    let mut quadratic_gotzmann = Vec::new();
    let mut gotzmann_graphs = Vec::new();
    let mut f_vectors = HashSet::new();
    let scan = c5_c6_c9_scan(&mut gotzmann_graphs, &mut f_vectors);

    let mut results: Vec<(&str, Outcome)> = vec![
        ("1 star theorem, n <= 6", c1_star_theorem()),
        ("2 worked example (x1x2x3, x1x4)", c2_example()),
        ("3 H(I(G),3) = 2e + t", c3_two_e_plus_t()),
        (
            "4 closed form mn + m/2 - m^2/2",
            c4_quadratic_closed_form(&mut quadratic_gotzmann),
        ),
    ];
    match scan {
        Ok(_) => {
            results.push(("5 Gotzmann implies e < n", c5_edge_bound(&gotzmann_graphs)));
            results.push((
                "6 Gotzmann implies f_d = f_{d-1}^(d)",
                c6_square_free(&gotzmann_graphs, &quadratic_gotzmann),
            ));
        }
        Err(e) => {
            results.push(("5 Gotzmann implies e < n", Err(e.clone())));
            results.push(("6 Gotzmann implies f_d = f_{d-1}^(d)", Err(e)));
        }
    }
    results.push(("7 Macaulay representations", c7_macaulay()));
    results.push(("8 lex segments are Gotzmann", c8_lex_segments()));
    results.push(("9 Kruskal-Katona round trip", c9_kruskal_katona(&f_vectors)));
    results.push(("10 t_v closed form", c10_triples_through_vertex()));

    let mut failed = 0;
    for (name, r) in &results {
        match r {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!("{} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
