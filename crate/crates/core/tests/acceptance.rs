//! Acceptance criteria 1–10. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::time::Instant;

use rayon::prelude::*;

use lcec::aux::{build_aux, count_colourings, recognize, verify_locally_complete, EdgeColouring, RecognitionResult};
use lcec::graph::{complement, induced, Graph};
use lcec::kaleidoscope::{extract_kaleidoscope, verify_kaleidoscope};
use lcec::oracle::corpus::{cc2_pigs, colourable_graphs, reduced_pcas, reduced_pigs};
use lcec::oracle::{brute_force_colourings, generate, named, type_template, GeneratorSpec, Witness};
use lcec::orderings::{find_round, find_straight, StraightOrdering};
use lcec::patterns::non_pca_witness;
use lcec::structure::{
    canonical_cover, classify_type, complement_bipartition, pca_decide, pig_decide, type_colouring, typed_paths,
    universal_vertices, Decision, PigClass,
};

type Outcome = Result<String, String>;

fn exhaustive(n: usize, index: u64) -> Graph {
    generate(&GeneratorSpec::Exhaustive { n, index }).unwrap().graph
}

/// Certificate check for one graph: a verified colouring or a valid
/// kaleidoscope whose total length equals the auxiliary odd cycle.
fn certificate_ok(g: &Graph) -> Result<bool, String> {
    match recognize(g) {
        RecognitionResult::Colourable(c) => match verify_locally_complete(g, &c) {
            Ok(None) => Ok(true),
            other => Err(format!("colouring rejected: {other:?}")),
        },
        RecognitionResult::NotColourable(cycle) => {
            let kal = extract_kaleidoscope(g, &cycle).map_err(|e| format!("extraction: {e}"))?;
            match verify_kaleidoscope(&complement(g), &kal) {
                Ok(None) => {}
                other => return Err(format!("kaleidoscope rejected: {other:?}")),
            }
            if kal.total_length() != cycle.len() || kal.total_length() % 2 == 0 {
                return Err(format!("length {} vs cycle {}", kal.total_length(), cycle.len()));
            }
            Ok(false)
        }
    }
}

fn c1_exhaustive_oracle() -> Outcome {
    let start = Instant::now();
    let bad: Vec<u64> = (0u64..1 << 15)
        .into_par_iter()
        .filter(|&i| {
            let g = exhaustive(6, i);
            let bf = brute_force_colourings(&g, 0).unwrap();
            let count = count_colourings(&g);
            recognize(&g).is_colourable() != (bf.count > 0) || count != bf.count.into()
        })
        .collect();
    let secs = start.elapsed().as_secs_f64();
    if !bad.is_empty() {
        return Err(format!("{} disagreements, first index {}", bad.len(), bad[0]));
    }
    if secs > 300.0 {
        return Err(format!("took {secs:.1}s"));
    }
    Ok(format!("32768 graphs, 0 disagreements, {secs:.1}s"))
}

fn c2_paper_instances() -> Outcome {
    let mut checked = 0;
    for name in ["F1", "F2", "F3"] {
        let g = named(name).unwrap();
        if recognize(&g).is_colourable() {
            return Err(format!("{name} accepted"));
        }
        for v in 0..g.n() {
            let keep: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
            let (h, _) = induced(&g, &keep).unwrap();
            if !recognize(&h).is_colourable() {
                return Err(format!("{name} minus vertex {} rejected", v + 1));
            }
            checked += 1;
        }
    }
    for name in ["claw", "C5", "C7", "co-C5", "co-C7"] {
        if recognize(&named(name).unwrap()).is_colourable() {
            return Err(format!("{name} accepted"));
        }
    }
    // K1+K3 is the forbidden pattern on the complement side: the graph
    // itself is colourable and its complement is not.
    let k1k3 = named("K1+K3").unwrap();
    if recognize(&complement(&k1k3)).is_colourable() {
        return Err("complement of K1+K3 accepted".into());
    }
    if !recognize(&k1k3).is_colourable() || brute_force_colourings(&k1k3, 0).unwrap().count == 0 {
        return Err("K1+K3 rejected".into());
    }
    for seed in 0..20u64 {
        let spec = GeneratorSpec::BipartiteComplement { x: 3 + (seed as usize % 4), y: 2 + (seed as usize % 5), p: 0.4, seed };
        let gen = generate(&spec).unwrap();
        let Some(Witness::Bipartition { side }) = gen.witness else { return Err("missing bipartition".into()) };
        let g = gen.graph;
        let colours = g.edges().iter().map(|&(u, v)| if side[u] == side[v] { 1 } else { 2 }).collect();
        let c = EdgeColouring::new(colours).unwrap();
        if !matches!(verify_locally_complete(&g, &c), Ok(None)) || !recognize(&g).is_colourable() {
            return Err(format!("bipartite complement seed {seed} failed"));
        }
    }
    Ok(format!("F1-F3 rejected, {checked} deletions accepted, claw, C5, C7, their complements and co-(K1+K3) rejected, 20 bipartite complements verified"))
}

fn all_suites() -> Vec<Graph> {
    let mut out: Vec<Graph> = ["F1", "F2", "F3", "claw", "K1+K3", "C5", "C7", "co-C5", "co-C7", "tent", "C6", "P4"]
        .iter()
        .map(|n| named(n).unwrap())
        .collect();
    out.extend(reduced_pigs(150, 40, 11));
    out.extend(reduced_pcas(100, 25, 12));
    out.extend(colourable_graphs(50, 20, 13));
    for seed in 0..150u64 {
        let n = 5 + (seed as usize % 20);
        out.push(generate(&GeneratorSpec::Gnp { n, p: 0.3 + (seed % 5) as f64 * 0.1, seed }).unwrap().graph);
    }
    out
}

fn c3_certificates() -> Outcome {
    let mut graphs: Vec<Graph> = (0u64..1 << 15).map(|i| exhaustive(6, i)).collect();
    graphs.extend(all_suites());
    let results: Vec<Result<bool, String>> = graphs.par_iter().map(certificate_ok).collect();
    let (mut acc, mut rej) = (0, 0);
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(true) => acc += 1,
            Ok(false) => rej += 1,
            Err(e) => return Err(format!("instance {i}: {e}")),
        }
    }
    Ok(format!("{acc} colourings and {rej} kaleidoscopes verified"))
}

fn c4_aux_cycles() -> Outcome {
    let listed: [(&str, &[(usize, usize)]); 3] = [
        ("F1", &[(1, 2), (2, 4), (4, 6), (6, 7), (5, 6), (3, 5), (2, 3)]),
        ("F2", &[(1, 3), (3, 5), (5, 7), (4, 5), (2, 4), (4, 6), (3, 4)]),
        ("F3", &[(1, 3), (3, 6), (6, 7), (4, 6), (2, 4), (1, 2), (2, 5), (5, 7), (3, 5)]),
    ];
    for (name, cycle) in listed {
        let g = named(name).unwrap();
        let aux = build_aux(&g);
        let ids: Option<Vec<usize>> = cycle.iter().map(|&(a, b)| g.edge_id(a - 1, b - 1)).collect();
        let ids = ids.ok_or(format!("{name}: listed edge missing"))?;
        for i in 0..ids.len() {
            if !aux.adjacent(ids[i], ids[(i + 1) % ids.len()]) {
                return Err(format!("{name}: link {i} missing in auxiliary graph"));
            }
        }
    }
    Ok("listed 7-, 7- and 9-cycles present".into())
}

fn c5_uniqueness() -> Outcome {
    let mut pool = reduced_pcas(1000, 25, 21);
    pool.extend(reduced_pigs(1000, 30, 22));
    let mut used = 0;
    for g in pool {
        if complement_bipartition(&g).is_some() || !recognize(&g).is_colourable() {
            continue;
        }
        if find_round(&g).unwrap().is_none() {
            return Err("corpus graph without round ordering".into());
        }
        let count = count_colourings(&g);
        if count != 2u32.into() {
            return Err(format!("count {count} on a graph with {} vertices", g.n()));
        }
        used += 1;
        if used == 100 {
            return Ok("100 instances, all with exactly 2 colourings".into());
        }
    }
    Err(format!("only {used} accepted instances found"))
}

fn c6_cc2() -> Outcome {
    for universal in [false, true] {
        let pool = cc2_pigs(50, universal, 31 + universal as u64);
        if pool.len() < 50 {
            return Err(format!("only {} instances (universal = {universal})", pool.len()));
        }
        for (g, o) in &pool {
            if universal_vertices(g).len() > 1 {
                return Err("two universal vertices in a reduced graph".into());
            }
            let (first, last) = (o.order[0], o.order[g.n() - 1]);
            let bf = brute_force_colourings(g, usize::MAX).unwrap();
            if bf.count == 0 {
                return Err("cc = 2 instance without colouring".into());
            }
            for c in &bf.colourings {
                let mono = |v: usize| {
                    let cs: Vec<u8> = g.neighbours(v).iter().map(|&w| c.colour(g.edge_id(v, w).unwrap())).collect();
                    cs.iter().all(|&x| x == cs[0])
                };
                let ok = if universal {
                    mono(first) != mono(last)
                } else {
                    let mut cs = Vec::new();
                    for v in [first, last] {
                        cs.extend(g.neighbours(v).iter().map(|&w| c.colour(g.edge_id(v, w).unwrap())));
                    }
                    cs.iter().all(|&x| x == cs[0])
                };
                if !ok {
                    return Err(format!("colouring {:?} violates the end-vertex property", c.colours()));
                }
            }
        }
    }
    Ok("50 + 50 instances, every colouring has the end-vertex property".into())
}

fn c7_types() -> Outcome {
    let mut cases = 0;
    let mut paths = 0;
    for ty in 1..=4u8 {
        for k in 2..=5 {
            if matches!(ty, 2 | 3) && k == 2 {
                continue;
            }
            for seed in 0..4u64 {
                let t = type_template(ty, k, seed).map_err(|e| e.to_string())?;
                let g = &t.graph;
                let o = StraightOrdering::from_order(g, (0..g.n()).collect())
                    .unwrap()
                    .map_err(|v| format!("type {ty} k {k}: identity order fails {v:?}"))?;
                let cover = canonical_cover(g, &o).map_err(|e| e.to_string())?;
                if cover.s != t.s || cover.t != t.t {
                    return Err(format!("type {ty} k {k}: cover {:?} vs intended {:?}/{:?}", cover, t.s, t.t));
                }
                let class = classify_type(g, &o, &cover).map_err(|e| e.to_string())?;
                let want = [PigClass::Type1, PigClass::Type2, PigClass::Type3, PigClass::Type4][ty as usize - 1].clone();
                if class != want {
                    return Err(format!("type {ty} k {k}: classified {class:?}"));
                }
                let c = type_colouring(g, &o, &cover, &class).map_err(|e| e.to_string())?;
                if !matches!(verify_locally_complete(g, &c), Ok(None)) {
                    return Err(format!("type {ty} k {k} seed {seed}: colouring fails"));
                }
                if k >= 3 {
                    for p in typed_paths(g, &o, &cover, &class).map_err(|e| e.to_string())? {
                        if !p.holds() {
                            return Err(format!("type {ty} k {k} seed {seed}: path {} fails ({p:?})", p.label));
                        }
                        paths += 1;
                    }
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} templates, {paths} typed paths checked"))
}

fn c8_structural() -> Outcome {
    let pigs = reduced_pigs(500, 40, 41);
    if pigs.len() < 500 {
        return Err(format!("only {} PIGs generated", pigs.len()));
    }
    let bad: Vec<String> = pigs
        .par_iter()
        .filter_map(|g| {
            let o = find_straight(g).unwrap().expect("PIG");
            match pig_decide(g, &o) {
                Ok(d) => (d.is_colourable() != recognize(g).is_colourable()).then(|| format!("PIG disagreement: {}", g.to_edge_list())),
                Err(e) => Some(format!("PIG error {e}")),
            }
        })
        .collect();
    if let Some(b) = bad.first() {
        return Err(format!("{} failures; {b}", bad.len()));
    }
    let pcas = reduced_pcas(200, 25, 42);
    if pcas.len() < 200 {
        return Err(format!("only {} PCAs generated", pcas.len()));
    }
    let bad: Vec<String> = pcas
        .par_iter()
        .filter_map(|g| {
            let o = find_round(g).unwrap().expect("PCA");
            match pca_decide(g, &o) {
                Ok(d) => {
                    if let Decision::Colourable(c) = &d {
                        if !matches!(verify_locally_complete(g, c), Ok(None)) {
                            return Some("unverified PCA colouring".into());
                        }
                    }
                    (d.is_colourable() != recognize(g).is_colourable()).then(|| format!("PCA disagreement: {}", g.to_edge_list()))
                }
                Err(e) => Some(format!("PCA error {e}")),
            }
        })
        .collect();
    if let Some(b) = bad.first() {
        return Err(format!("{} failures; {b}", bad.len()));
    }
    Ok("500 PIGs and 200 PCAs agree with the auxiliary recognizer".into())
}

fn c9_witnesses() -> Outcome {
    let graphs = colourable_graphs(200, 20, 51);
    if graphs.len() < 200 {
        return Err(format!("only {} graphs generated", graphs.len()));
    }
    let results: Vec<(bool, bool)> = graphs
        .par_iter()
        .map(|g| (non_pca_witness(g).is_none(), find_round(g).unwrap().is_some()))
        .collect();
    let bad = results.iter().filter(|(a, b)| a != b).count();
    let pca = results.iter().filter(|r| r.1).count();
    if bad > 0 {
        return Err(format!("{bad} disagreements"));
    }
    Ok(format!("200 graphs ({pca} PCA, {} with witnesses), 0 disagreements", 200 - pca))
}

fn peak_rss_kib() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    line.split_whitespace().nth(1)?.parse().ok()
}

fn c10_performance() -> Outcome {
    let g = generate(&GeneratorSpec::StaircasePig { n: 2000, reach: 7, seed: 7, shuffle: true }).unwrap().graph;
    let avg = 2.0 * g.m() as f64 / g.n() as f64;
    let start = Instant::now();
    let r = recognize(&g);
    let secs = start.elapsed().as_secs_f64();
    let _ = r.is_colourable();
    let rss = peak_rss_kib().unwrap_or(0);
    if secs > 5.0 || rss > 1024 * 1024 {
        return Err(format!("{secs:.2}s, peak {rss} KiB"));
    }
    Ok(format!("n = 2000, average degree {avg:.1}, {secs:.2}s, peak RSS {} MiB", rss / 1024))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("exhaustive oracle equivalence n = 6", c1_exhaustive_oracle),
        ("named instances", c2_paper_instances),
        ("certificate soundness", c3_certificates),
        ("listed auxiliary odd cycles", c4_aux_cycles),
        ("uniqueness up to switching", c5_uniqueness),
        ("end vertices when cc = 2", c6_cc2),
        ("type machinery", c7_types),
        ("structural equals auxiliary", c8_structural),
        ("non-PCA witnesses", c9_witnesses),
        ("performance smoke", c10_performance),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
