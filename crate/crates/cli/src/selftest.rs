//! Built-in fixtures with exactly known answers plus small oracle cross-checks.

use motif_core::colored::count_colored_embeddings;
use motif_core::decomp::max_spasm_treewidth;
use motif_core::extract::extract_hom_via_oracle;
use motif_core::fixtures;
use motif_core::graph::{all_graphs, canonical_form, parse_graph6, ColoredGraph, Graph};
use motif_core::homcount::{count_hom, Engine};
use motif_core::motif::{change_basis, count_pattern, evaluate, parse_motif, Basis, MotifParameter};
use motif_core::oracle::{BruteForce, CountKind};
use motif_core::partitions::{coefficient, spasm, sub_to_hom_vector, CoefficientKind};
use num_rational::BigRational;

type Check = Result<(), String>;
type Fixture = (&'static str, fn() -> Check);

fn g6(s: &str) -> Graph {
    parse_graph6(s).expect("fixture codes are valid")
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn matrix(name: &str, want: &[[u32; 4]; 4], entry: &dyn Fn(&Graph, &Graph) -> Result<BigRational, String>) -> Check {
    let s: Vec<Graph> = fixtures::PATH3_SPASM.iter().map(|c| g6(c)).collect();
    for (i, a) in s.iter().enumerate() {
        for (j, b) in s.iter().enumerate() {
            let got = entry(a, b)?;
            if got != int(want[i][j] as i64) {
                return Err(format!("{name}[{i}][{j}] = {got}, expected {}", want[i][j]));
            }
        }
    }
    Ok(())
}

fn path3_hom() -> Check {
    matrix("Hom", &fixtures::HOM, &|h, g| {
        count_hom(h, g, Engine::Auto).map(|n| BigRational::from_integer(n.into())).map_err(|e| e.to_string())
    })
}

fn path3_surj() -> Check {
    matrix("Surj", &fixtures::SURJ, &|h, f| {
        coefficient(CoefficientKind::Surj, &canonical_form(h), &canonical_form(f)).map_err(|e| e.to_string())
    })
}

fn path3_sub() -> Check {
    matrix("Sub", &fixtures::SUB, &|f, g| {
        count_pattern(Basis::Sub, f, g).map(|n| BigRational::from_integer(n.into())).map_err(|e| e.to_string())
    })
}

fn path3_spasm() -> Check {
    let got = spasm(&g6(fixtures::PATH3)).map_err(|e| e.to_string())?;
    let want: Vec<_> = fixtures::PATH3_SPASM.iter().map(|c| canonical_form(&g6(c))).collect();
    if got == want {
        Ok(())
    } else {
        Err(format!("spasm is {:?}", got.iter().map(|f| f.key()).collect::<Vec<_>>()))
    }
}

fn path4_expansion() -> Check {
    let got = sub_to_hom_vector(&g6(fixtures::PATH4)).map_err(|e| e.to_string())?;
    if got.len() != fixtures::PATH4_SUB_TO_HOM.len() {
        return Err(format!("{} terms instead of 8", got.len()));
    }
    for (code, p, q) in fixtures::PATH4_SUB_TO_HOM {
        let want = BigRational::new(p.into(), q.into());
        match got.get(&canonical_form(&g6(code))) {
            Some(c) if *c == want => {}
            other => return Err(format!("coefficient of {code} is {other:?}, expected {want}")),
        }
    }
    Ok(())
}

fn walk_cancellation() -> Check {
    let p = parse_motif(fixtures::WALK4_EMB).map_err(|e| e.to_string())?;
    let hom = change_basis(&p, Basis::Hom).map_err(|e| e.to_string())?;
    if hom != MotifParameter::single(Basis::Hom, &g6(fixtures::PATH4)) {
        return Err(format!("hom basis is\n{hom}"));
    }
    for (host, walks) in [(fixtures::K3, 48), (fixtures::C4, 64)] {
        let v = evaluate(&p, &g6(host)).map_err(|e| e.to_string())?;
        if v != int(walks) {
            return Err(format!("value on {host} is {v}, expected {walks}"));
        }
    }
    Ok(())
}

fn spasm_facts() -> Check {
    let p4 = g6(fixtures::PATH4);
    let n = spasm(&p4).map_err(|e| e.to_string())?.len();
    let tw = max_spasm_treewidth(&p4).map_err(|e| e.to_string())?;
    if (n, tw) == (8, 2) {
        Ok(())
    } else {
        Err(format!("spasm size {n}, max treewidth {tw}"))
    }
}

fn oracle_cross_check() -> Check {
    let hosts = [fixtures::C5, fixtures::PAW, "En@o", "G@CB\\g"];
    let oracle = BruteForce::default();
    for n in 1..=4 {
        for h in all_graphs(n).map_err(|e| e.to_string())?.iter() {
            for host in hosts {
                let g = g6(host);
                for (basis, kind) in [
                    (Basis::Hom, CountKind::Hom),
                    (Basis::Sub, CountKind::Sub),
                    (Basis::IndSub, CountKind::IndSub),
                    (Basis::Emb, CountKind::Emb),
                    (Basis::StrEmb, CountKind::StrEmb),
                ] {
                    let fast = count_pattern(basis, h.graph(), &g).map_err(|e| e.to_string())?;
                    let slow = oracle.count(kind, h.graph(), &g).map_err(|e| e.to_string())?;
                    if fast != slow {
                        return Err(format!("{basis}({}, {host}) = {fast}, oracle says {slow}", h.key()));
                    }
                }
            }
        }
    }
    Ok(())
}

fn engines_agree() -> Check {
    let host = g6("G@CB\\g");
    for code in [fixtures::K3, fixtures::PATH4, fixtures::C4, fixtures::PAW, "D]o"] {
        let h = g6(code);
        let dp = count_hom(&h, &host, Engine::Dp).map_err(|e| e.to_string())?;
        let mm = count_hom(&h, &host, Engine::Mm).map_err(|e| e.to_string())?;
        if dp != mm {
            return Err(format!("Hom({code}): dp {dp}, mm {mm}"));
        }
    }
    Ok(())
}

fn extraction() -> Check {
    let alpha = parse_motif("basis hom\n1 BW\n").map_err(|e| e.to_string())?;
    let g = g6(fixtures::PATH3);
    let oracle = |x: &Graph| evaluate(&alpha, x);
    let v = extract_hom_via_oracle(&alpha, &canonical_form(&g6(fixtures::PATH2)), &g, &oracle).map_err(|e| e.to_string())?;
    if v == 10u32.into() {
        Ok(())
    } else {
        Err(format!("recovered {v}, expected 10"))
    }
}

fn colored_cross_check() -> Check {
    let h = ColoredGraph::new(g6(fixtures::PATH2), vec![1, 0, 1]).map_err(|e| e.to_string())?;
    let g = ColoredGraph::new(g6(fixtures::C5), vec![0, 1, 0, 1, 1]).map_err(|e| e.to_string())?;
    let fast = count_colored_embeddings(&h, &g).map_err(|e| e.to_string())?;
    let slow = BruteForce::default().count_colored(CountKind::ColoredEmb, &h, &g).map_err(|e| e.to_string())?;
    if fast == slow {
        Ok(())
    } else {
        Err(format!("{fast} colored embeddings, oracle says {slow}"))
    }
}

/// Runs every fixture; returns the report and whether all passed.
pub fn run() -> (String, bool) {
    let checks: [Fixture; 11] = [
        ("path3-spasm", path3_spasm),
        ("path3-hom", path3_hom),
        ("path3-surj", path3_surj),
        ("path3-sub", path3_sub),
        ("path4-expansion", path4_expansion),
        ("walk_cancellation-cancellation", walk_cancellation),
        ("spasm-facts", spasm_facts),
        ("oracle-cross-check", oracle_cross_check),
        ("engine-agreement", engines_agree),
        ("extraction", extraction),
        ("colored-cross-check", colored_cross_check),
    ];
    let mut lines = Vec::new();
    let mut ok = true;
    for (name, check) in checks {
        match check() {
            Ok(()) => lines.push(format!("PASS {name}")),
            Err(why) => {
                ok = false;
                lines.push(format!("FAIL {name}: {why}"));
            }
        }
    }
    (lines.join("\n"), ok)
}
