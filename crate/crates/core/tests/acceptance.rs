//! End-to-end acceptance run: one PASS/FAIL line per criterion.
//!
//! Every comparison is exact (integer or rational equality); the only
//! tolerances are the wall-clock limits pinned next to each criterion.

mod common;

use common::*;
use motif_core::colored::{
    a_path_packing, a_path_packing_restricted, build_guarded_decomposition, count_colored_embeddings,
    count_colorful_subgraphs_ie, count_ordered_embeddings, similarity_partition, APathPacking, RestrictedPacking,
};
use motif_core::decomp::{exact_treewidth, max_spasm_treewidth};
use motif_core::extract::extract_hom_via_oracle;
use motif_core::fixtures;
use motif_core::graph::{all_graphs, canonical_form, parse_graph6, CanonicalForm, Graph};
use motif_core::homcount::{count_hom, count_hom_dp, count_hom_mm, Engine};
use motif_core::motif::{change_basis, count_pattern, evaluate, parse_motif, Basis, MotifParameter};
use motif_core::oracle::{BruteForce, CountKind};
use motif_core::partitions::{coefficient, spasm, sub_to_hom_vector, CoefficientKind};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{seq::SliceRandom, Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;
/// Name, wall-clock limit in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn g6(s: &str) -> Graph {
    parse_graph6(s).unwrap()
}

fn int(n: u64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn upto(n: usize) -> Vec<CanonicalForm> {
    (1..=n).flat_map(|k| all_graphs(k).unwrap().iter().cloned().collect::<Vec<_>>()).collect()
}

fn random_host(r: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = r.gen_range(1..=max_n);
    let p = r.gen_range(0.2..0.8);
    random_graph(r, n, p)
}

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn path3_matrices() -> Outcome {
    let s = spasm(&g6(fixtures::PATH3)).map_err(err)?;
    let want: Vec<CanonicalForm> = fixtures::PATH3_SPASM.iter().map(|c| canonical_form(&g6(c))).collect();
    ensure(s == want, || "spasm of the 3-edge path differs".into())?;
    for i in 0..4 {
        for j in 0..4 {
            let (a, b) = (s[i].graph(), s[j].graph());
            let hom = count_hom(a, b, Engine::Auto).map_err(err)?;
            let surj = coefficient(CoefficientKind::Surj, &s[i], &s[j]).map_err(err)?;
            let sub = count_pattern(Basis::Sub, a, b).map_err(err)?;
            ensure(hom == big(fixtures::HOM[i][j] as u64), || format!("Hom[{i}][{j}] = {hom}"))?;
            ensure(surj == int(fixtures::SURJ[i][j] as u64), || format!("Surj[{i}][{j}] = {surj}"))?;
            ensure(sub == big(fixtures::SUB[i][j] as u64), || format!("Sub[{i}][{j}] = {sub}"))?;
            let product: u64 = (0..4).map(|k| (fixtures::SURJ[i][k] * fixtures::SUB[k][j]) as u64).sum();
            ensure(product == fixtures::HOM[i][j] as u64, || format!("Surj·Sub differs at [{i}][{j}]"))?;
        }
    }
    Ok("Hom, Surj, Sub and Hom = Surj·Sub match on the 4×4 fixture".into())
}

fn path4_expansion() -> Outcome {
    let got = sub_to_hom_vector(&g6(fixtures::PATH4)).map_err(err)?;
    ensure(got.len() == 8, || format!("{} terms", got.len()))?;
    for (code, p, q) in fixtures::PATH4_SUB_TO_HOM {
        let want = BigRational::new(p.into(), q.into());
        let have = got.get(&canonical_form(&g6(code))).cloned().unwrap_or_else(BigRational::zero);
        ensure(have == want, || format!("coefficient of {code} is {have}, expected {want}"))?;
    }
    Ok("8 exact coefficients".into())
}

fn walk_cancellation() -> Outcome {
    let p = parse_motif(fixtures::WALK4_EMB).map_err(err)?;
    let hom = change_basis(&p, Basis::Hom).map_err(err)?;
    ensure(hom == MotifParameter::single(Basis::Hom, &g6(fixtures::PATH4)), || format!("hom basis:\n{hom}"))?;
    let mut r = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let g = random_host(&mut r, 8);
        let v = evaluate(&p, &g).map_err(err)?;
        ensure(v == int(walks(&g, 4)), || format!("{v} vs {} walks", walks(&g, 4)))?;
    }
    Ok("collapses to the 4-edge path; 20 hosts match walk counts".into())
}

fn spasm_facts() -> Outcome {
    let p4 = g6(fixtures::PATH4);
    let size = spasm(&p4).map_err(err)?.len();
    let tw4 = max_spasm_treewidth(&p4).map_err(err)?;
    let p6 = Graph::from_edges(7, &(0..6).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap();
    let tw6 = max_spasm_treewidth(&p6).map_err(err)?;
    ensure((size, tw4, tw6) == (8, 2, 2), || format!("|spasm| {size}, tw {tw4}, 6-path tw {tw6}"))?;
    Ok("|spasm(P4)| = 8, treewidth 2; 6-edge path treewidth 2".into())
}

fn oracle_equivalence() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(5);
    let mut patterns = upto(4);
    let five = all_graphs(5).map_err(err)?;
    patterns.extend(five.choose_multiple(&mut r, 10).cloned());
    let hosts: Vec<Graph> = (0..50).map(|_| random_host(&mut r, 8)).collect();
    let oracle = BruteForce::default();
    let kinds = [
        (Basis::Hom, CountKind::Hom),
        (Basis::Sub, CountKind::Sub),
        (Basis::IndSub, CountKind::IndSub),
        (Basis::Emb, CountKind::Emb),
        (Basis::StrEmb, CountKind::StrEmb),
    ];
    let mut checked = 0;
    for h in &patterns {
        for g in &hosts {
            for (basis, kind) in kinds {
                let fast = count_pattern(basis, h.graph(), g).map_err(err)?;
                let slow = oracle.count(kind, h.graph(), g).map_err(err)?;
                ensure(fast == slow, || format!("{basis}({}) = {fast}, oracle {slow}", h.key()))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{} patterns × 50 hosts × 5 kinds = {checked} counts", patterns.len()))
}

fn engine_agreement() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(6);
    let patterns: Vec<CanonicalForm> =
        upto(6).into_iter().filter(|h| exact_treewidth(h.graph()).map(|(w, _)| w <= 2).unwrap_or(false)).collect();
    let hosts: Vec<Graph> = (0..30).map(|_| random_host(&mut r, 10)).collect();
    for h in &patterns {
        for g in &hosts {
            let mm = count_hom_mm(h.graph(), g).map_err(err)?;
            let dp = count_hom_dp(h.graph(), g).map_err(err)?;
            ensure(mm == dp, || format!("Hom({}): mm {mm}, dp {dp}", h.key()))?;
        }
    }
    Ok(format!("{} treewidth-≤2 patterns × 30 hosts", patterns.len()))
}

fn extraction() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(7);
    let pool = upto(4);
    let mut recovered = 0;
    for _ in 0..20 {
        let mut alpha = MotifParameter::new(Basis::Hom);
        while alpha.is_empty() {
            let terms = r.gen_range(1..=4);
            for h in pool.choose_multiple(&mut r, terms) {
                let c: i64 = *[-3, -2, -1, 1, 2, 3].choose(&mut r).unwrap();
                alpha.add(h.graph(), BigRational::from_integer(c.into()));
            }
        }
        let g = random_host(&mut r, 6);
        let oracle = |x: &Graph| evaluate(&alpha, x);
        for f in alpha.terms().keys() {
            let got = extract_hom_via_oracle(&alpha, f, &g, &oracle).map_err(err)?;
            let want = big(brute_hom(f.graph(), &g));
            ensure(got == want, || format!("Hom({}) recovered {got}, expected {want}", f.key()))?;
            recovered += 1;
        }
    }
    Ok(format!("{recovered} terms recovered from 20 parameters"))
}

fn inversions() -> Outcome {
    let check = |kind: CoefficientKind, inv_kind: CoefficientKind, set: &[CanonicalForm]| -> Result<(), String> {
        let m: Vec<Vec<BigRational>> =
            set.iter().map(|a| set.iter().map(|b| coefficient(kind, a, b).unwrap()).collect()).collect();
        let inv = invert(&m).ok_or("singular matrix")?;
        for (i, a) in set.iter().enumerate() {
            for (j, b) in set.iter().enumerate() {
                let c = coefficient(inv_kind, a, b).map_err(err)?;
                ensure(c == inv[i][j], || format!("{inv_kind:?}({}, {}) = {c}, inverse {}", a.key(), b.key(), inv[i][j]))?;
                if kind == CoefficientKind::Ext {
                    let sign = if (a.edge_count() + b.edge_count()) % 2 == 0 { 1 } else { -1 };
                    ensure(c == &m[i][j] * BigRational::from_integer(sign.into()), || "sign law fails".into())?;
                }
            }
        }
        Ok(())
    };
    let mut blocks = 0;
    for n in 1..=4 {
        let layer = all_graphs(n).map_err(err)?;
        check(CoefficientKind::Ext, CoefficientKind::ExtInv, &layer)?;
        for h in layer.iter() {
            check(CoefficientKind::Surj, CoefficientKind::SurjInv, &spasm(h.graph()).map_err(err)?)?;
        }
        blocks += 1 + layer.len();
    }
    Ok(format!("{blocks} principal blocks inverted exactly"))
}

fn colored_pipeline() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(9);
    let oracle = BruteForce::default();
    for i in 0..200 {
        let colors = r.gen_range(1..=4);
        let (hn, gn) = (r.gen_range(1..=6), r.gen_range(1..=8));
        let h = random_colored(&mut r, hn, 0.5, colors);
        let g = random_colored(&mut r, gn, 0.5, colors);
        let d = build_guarded_decomposition(&h).map_err(err)?;
        let pi = similarity_partition(&h, &d);
        let ord = count_ordered_embeddings(&h, &g, &d).map_err(err)?;
        let emb = count_colored_embeddings(&h, &g).map_err(err)?;
        let want = oracle.count_colored(CountKind::ColoredEmb, &h, &g).map_err(err)?;
        ensure(emb == want, || format!("instance {i}: {emb} embeddings, oracle {want}"))?;
        ensure(&ord * pi.factor() == emb, || format!("instance {i}: OrdEmb·∏|P|! ≠ Emb"))?;
    }
    let mut ie = 0;
    for f in upto(4) {
        let k = f.vertex_count();
        for _ in 0..10 {
            let n = r.gen_range(1..=8);
            let g = random_graph(&mut r, n, 0.6);
            let coloring: Vec<usize> = (0..n).map(|_| r.gen_range(0..k)).collect();
            let edges: Vec<(usize, usize)> =
                g.edges().filter(|&(u, v)| f.graph().has_edge(coloring[u], coloring[v])).collect();
            let host = Graph::from_edges(n, &edges).unwrap();
            let got = count_colorful_subgraphs_ie(f.graph(), &host, &coloring).map_err(err)?;
            let want = oracle.colorful_partitioned(f.graph(), &host, &coloring).map_err(err)?;
            ensure(got == want, || format!("colorful {}: {got} vs {want}", f.key()))?;
            ie += 1;
        }
    }
    Ok(format!("200 colored instances; {ie} colorful inclusion–exclusion instances"))
}

fn a_paths() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(10);
    let (mut covers, mut restricted) = (0, 0);
    for n in 1..=8 {
        for f in all_graphs(n).map_err(err)?.iter() {
            let g = f.graph();
            let a: Vec<usize> = (0..n).filter(|_| r.gen_bool(0.5)).collect();
            let k = r.gen_range(1..=3);
            if let APathPacking::Cover(s) = a_path_packing(g, &a, k).map_err(err)? {
                ensure(s.len() <= 2 * k - 2 && no_a_path(g, &a, &s), || format!("bad cover on {}", f.key()))?;
                covers += 1;
            }
            if g.is_connected() {
                let l = 2 * k;
                if let RestrictedPacking::Separated { s_star, .. } =
                    a_path_packing_restricted(g, &a, k, l).map_err(err)?
                {
                    let want: Vec<usize> = (0..n).filter(|&v| brute_attached(g, v, &a, l)).collect();
                    ensure(s_star == want, || format!("S* on {} is {s_star:?}, expected {want:?}", f.key()))?;
                    restricted += 1;
                }
            }
        }
    }
    Ok(format!("{covers} covers verified; {restricted} restricted S* sets match"))
}

fn performance() -> Outcome {
    let p6 = Graph::from_edges(7, &(0..6).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap();
    let mut r = ChaCha8Rng::seed_from_u64(11);
    let large = random_graph(&mut r, 500, 3.0 / 500.0);
    let t = Instant::now();
    count_pattern(Basis::Sub, &p6, &large).map_err(err)?;
    let big_time = t.elapsed();
    ensure(big_time < Duration::from_secs(60), || format!("500-vertex host took {big_time:?}"))?;

    let small = random_graph(&mut r, 30, 0.3);
    let t = Instant::now();
    let fast = count_pattern(Basis::Sub, &p6, &small).map_err(err)?;
    let fast_time = t.elapsed();
    let t = Instant::now();
    let slow = BruteForce::new(30u128.pow(7)).count(CountKind::Sub, &p6, &small).map_err(err)?;
    let slow_time = t.elapsed();
    ensure(fast == slow, || format!("{fast} vs brute {slow}"))?;
    let ratio = slow_time.as_secs_f64() / fast_time.as_secs_f64().max(1e-9);
    ensure(ratio >= 10.0, || format!("speedup only {ratio:.1}× ({fast_time:?} vs {slow_time:?})"))?;
    Ok(format!("500 vertices in {big_time:.2?}; {ratio:.0}× faster than brute force on 30 vertices"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("1 3-edge-path matrices", 1, path3_matrices),
        ("2 4-edge-path expansion", 1, path4_expansion),
        ("3 walk cancellation", 5, walk_cancellation),
        ("4 spasm facts", 30, spasm_facts),
        ("5 oracle equivalence", 300, oracle_equivalence),
        ("6 engine agreement", 120, engine_agreement),
        ("7 extraction", 120, extraction),
        ("8 inversion identities", 60, inversions),
        ("9 colored pipeline", 300, colored_pipeline),
        ("10 A-path guarantees", 300, a_paths),
        ("11 performance smoke", 120, performance),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > Duration::from_secs(limit) => Err(format!("{msg}, but over the {limit}s limit")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS {name} ({took:.2?}): {msg}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name} ({took:.2?}): {why}");
            }
        }
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
