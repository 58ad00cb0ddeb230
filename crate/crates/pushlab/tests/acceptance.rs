//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fail.

use std::io::Cursor;
use std::time::Instant;

use pushlab::drivers::{self, build_pool, resolve_threads};
use pushlab::{parse_digraph6, parse_graph6, write_digraph6, write_graph6};
use pushlab_core::census::{
    check_exception_graph, verify_four_cycle_property, verify_spanning_characterization,
    verify_structural_observations, verify_theorem2_at_9, Census,
};
use pushlab_core::{are_isomorphic, enumerate_graphs, verify_star_lemma, Graph, PushClassReps};
use rayon::ThreadPool;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: String) -> Verdict {
    Verdict { pass, detail }
}

fn characterization(pool: &ThreadPool, _: &Census) -> Verdict {
    let r = drivers::characterization_sweep(pool, 5).unwrap();
    verdict(
        r.passed() && r.classes == 52,
        format!("{} classes, {} orientations, {} mismatches", r.classes, r.orientations, r.mismatches.len()),
    )
}

fn chromatic_oracle(pool: &ThreadPool, _: &Census) -> Verdict {
    let r = drivers::chromatic_sweep(pool, 5).unwrap();
    verdict(
        r.passed() && r.classes == 52,
        format!("{} classes, {} orientations, {} mismatches", r.classes, r.orientations, r.mismatches.len()),
    )
}

fn star_lemma(_: &ThreadPool, _: &Census) -> Verdict {
    let r = verify_star_lemma(6).unwrap();
    let upto5: usize = r.per_order.iter().filter(|t| t.order <= 5).map(|t| t.classes).sum();
    verdict(
        r.passed() && upto5 == 52,
        format!(
            "{} classes through order 5, {} through order 6, {} counterexamples",
            upto5,
            r.classes(),
            r.counterexamples.len()
        ),
    )
}

fn census_characterization(_: &ThreadPool, census: &Census) -> Verdict {
    let t3 = verify_spanning_characterization(census, 6).unwrap();
    let counts = census.minimal_counts();
    let total: usize = counts.iter().sum();
    let h5 = Graph::cycle(5).unwrap().with_edge(0, 2).with_edge(1, 3);
    let min5: Vec<_> = census.of_order(5).iter().filter(|r| r.minimal).collect();
    let order5_ok = min5.len() == 1 && are_isomorphic(&min5[0].graph, &h5);
    verdict(
        total == 18 && counts[7] == 4 && order5_ok && t3.characterization_holds(),
        format!(
            "minimal per order {:?}: total {} (expected 18), order 8 has {} (expected 4), order 5 is the chorded 5-cycle {}; \
             biconditional over {} planar graphs n<=6 and cover of {} census graphs n=7,8 {}",
            counts,
            total,
            counts[7],
            order5_ok,
            t3.planar_checked,
            t3.census_checked,
            if t3.characterization_holds() { "holds" } else { "fails" }
        ),
    )
}

fn no_nine_vertex_clique(_: &ThreadPool, census: &Census) -> Verdict {
    let t2 = verify_theorem2_at_9().unwrap();
    let classes_ok = t2.triangulations.iter().all(|t| t.push_classes == 8192);
    let order8 = census.of_order(8).len();
    verdict(
        order8 > 0 && t2.passed() && classes_ok,
        format!(
            "order-8 census {} graphs; {} triangulations on 9 vertices, {} underlying push cliques, 8192 classes each {}",
            order8,
            t2.triangulations.len(),
            t2.push_clique_count(),
            classes_ok
        ),
    )
}

fn exception_graph(_: &ThreadPool, _: &Census) -> Verdict {
    let r = check_exception_graph().unwrap();
    verdict(
        r.passed(),
        format!(
            "diameter {:?}, domination {}, planar {}, underlying push clique {}, a/b common neighbors {}",
            r.diameter, r.domination_number, r.planar, r.underlying_push_clique, r.ab_common_neighbors
        ),
    )
}

fn push_classes(pool: &ThreadPool, _: &Census) -> Verdict {
    let r = drivers::push_class_sweep(pool, 5).unwrap();
    verdict(
        r.passed() && r.classes == 52,
        format!(
            "{} graphs, {} orientations in {} classes, {} failures",
            r.classes,
            r.orientations,
            r.positives,
            r.mismatches.len()
        ),
    )
}

fn structural(_: &ThreadPool, census: &Census) -> Verdict {
    let (seen, no_c4) = verify_four_cycle_property(6).unwrap();
    let obs = verify_structural_observations(census);
    let g6 = |gs: &[Graph]| gs.iter().map(write_graph6).collect::<Vec<_>>();
    verdict(
        no_c4.is_empty() && obs.hamiltonian_holds() && obs.min_degree_two_holds(),
        format!(
            "4-cycle: {} checked, {} failures; Hamiltonian edges: {} minimal graphs checked, failures {:?}; \
             min-degree-2 classes {:?} (expected exactly one), minimal among them {:?}",
            seen,
            no_c4.len(),
            obs.hamiltonian_checked,
            g6(&obs.hamiltonian_failures),
            g6(&obs.min_degree_two),
            g6(&obs.min_degree_two_minimal)
        ),
    )
}

fn outerplanar_bound(pool: &ThreadPool, _: &Census) -> Verdict {
    let r = drivers::outerplanar_sweep(pool, 8).unwrap();
    verdict(
        r.passed() && r.classes == 12346,
        format!(
            "{} classes, {} outerplanar, {} underlying oriented cliques",
            r.classes,
            r.outerplanar,
            r.oriented_cliques.len()
        ),
    )
}

fn format_fidelity(_: &ThreadPool, _: &Census) -> Verdict {
    let mut graphs = 0;
    let mut digraphs = 0u64;
    let mut bad = 0;
    for n in 1..=7 {
        for g in enumerate_graphs(n).unwrap() {
            graphs += 1;
            let s = write_graph6(&g);
            if parse_graph6(&s).map(|h| write_graph6(&h)) != Ok(s.clone()) || parse_graph6(&s) != Ok(g) {
                bad += 1;
            }
            for d in PushClassReps::new(&g) {
                digraphs += 1;
                let t = write_digraph6(&d);
                if parse_digraph6(&t).as_ref() != Ok(&d) || write_digraph6(&parse_digraph6(&t).unwrap()) != t {
                    bad += 1;
                }
            }
        }
    }
    let malformed_g6 = ["", "C ", "B@", "Crr", "N??", "?", "C\u{7f}"];
    let malformed_d6 = ["CS`?", "&AW", "&@_", "&A@", "&C", "&"];
    let mut rejected = 0;
    for s in malformed_g6 {
        rejected += matches!(parse_graph6(s), Err(e) if !e.to_string().is_empty()) as usize;
    }
    for s in malformed_d6 {
        rejected += matches!(parse_digraph6(s), Err(e) if !e.to_string().is_empty()) as usize;
    }
    let mut cli_ok = true;
    for (cmd, s) in [("planar", "B@"), ("check", "&AW")] {
        let mut args = vec!["pushlab", cmd];
        if cmd == "check" {
            args.push("push-clique");
        }
        args.push(s);
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = pushlab::run(args, &mut Cursor::new(Vec::new()), &mut out, &mut err);
        cli_ok &= code == 2 && out.is_empty() && String::from_utf8(err).unwrap().lines().count() == 1;
    }
    let total_malformed = malformed_g6.len() + malformed_d6.len();
    verdict(
        bad == 0 && rejected == total_malformed && cli_ok,
        format!(
            "{graphs} graphs and {digraphs} orientations round-tripped, {bad} differences; {rejected}/{total_malformed} malformed inputs rejected; CLI diagnostics {cli_ok}"
        ),
    )
}

type Criterion = (&'static str, fn(&ThreadPool, &Census) -> Verdict);

fn main() {
    let pool = build_pool(resolve_threads(None).unwrap()).unwrap();
    let start = Instant::now();
    let census = drivers::census(&pool, 8).unwrap();
    println!("census of planar underlying push cliques through order 8 built in {:.2?}", start.elapsed());

    let criteria: [Criterion; 10] = [
        ("characterization equivalence", characterization),
        ("chromatic oracle", chromatic_oracle),
        ("star augmentation equivalence", star_lemma),
        ("minimal planar census and spanning cover", census_characterization),
        ("no planar push clique on nine vertices", no_nine_vertex_clique),
        ("diameter-2 domination-3 exception", exception_graph),
        ("push-class algebra", push_classes),
        ("structural observations", structural),
        ("outerplanar bound", outerplanar_bound),
        ("format fidelity", format_fidelity),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let v = check(&pool, &census);
        failed += !v.pass as usize;
        println!(
            "{} criterion {:>2} {}: {} [{:.2?}]",
            if v.pass { "PASS" } else { "FAIL" },
            i + 1,
            name,
            v.detail,
            t.elapsed()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
