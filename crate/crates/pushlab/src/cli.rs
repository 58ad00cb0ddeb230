//! Command-line front end. Exit codes: 0 yes or pass, 1 no or fail, 2 usage,
//! input or budget error.

use std::ffi::OsString;
use std::io::{BufRead, Write};

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use pushlab_core::census::{
    check_exception_graph, verify_four_cycle_property, verify_spanning_characterization,
    verify_structural_observations, verify_theorem2_at_9, Census, CENSUS_MAX_ORDER,
};
use pushlab_core::decide::is_underlying_push_clique;
use pushlab_core::{
    generate_triangulations, is_outerplanar, is_planar, is_underlying_oriented_clique, oriented_chromatic_number,
    pushable_chromatic_number, star_augment, verify_star_lemma, Graph, Orientation,
};
use rayon::ThreadPool;
use serde::Serialize;
use serde_json::json;

use crate::drivers;
use crate::format::{parse_digraph6, parse_graph6, write_digraph6, write_graph6};
use crate::report::{census_summary, characterization_pass, golden_text, nine_vertex_pass, CLAIMED_MINIMAL_TOTAL};

#[derive(Parser, Debug)]
#[command(name = "pushlab", version, about = "Exact push-operation combinatorics on small oriented graphs")]
pub struct Cli {
    /// Worker threads; falls back to PUSHLAB_THREADS, then all cores.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Test an orientation (digraph6, or `-` for one per stdin line).
    Check {
        property: CliqueKind,
        input: String,
    },
    /// Decide whether some orientation of a graph (graph6) is a clique.
    #[command(group(ArgGroup::new("mode").required(true).args(["oriented", "push"])))]
    Decide {
        #[arg(long)]
        oriented: bool,
        #[arg(long)]
        push: bool,
        input: String,
    },
    /// Exact oriented or pushable chromatic number of an orientation.
    #[command(group(ArgGroup::new("mode").required(true).args(["oriented", "pushable"])))]
    Chromatic {
        #[arg(long)]
        oriented: bool,
        #[arg(long)]
        pushable: bool,
        input: String,
    },
    /// Add a universal vertex.
    ReduceStar {
        input: String,
    },
    Planar {
        input: String,
    },
    Outerplanar {
        input: String,
    },
    /// One graph6 line per isomorphism class.
    Gen {
        kind: GenKind,
        n: usize,
    },
    /// Planar underlying push cliques as `order graph6 minimal witness` lines.
    Census {
        #[arg(long, default_value_t = CENSUS_MAX_ORDER)]
        max_order: usize,
        #[arg(long)]
        minimal: bool,
    },
    /// Run an exhaustive verification.
    Verify {
        target: VerifyTarget,
        /// Largest order for the sweeps that take one.
        #[arg(long)]
        max_order: Option<usize>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum CliqueKind {
    OrientedClique,
    PushClique,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum GenKind {
    Graphs,
    Triangulations,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum VerifyTarget {
    Characterization,
    StarLemma,
    Theorem2,
    Theorem3,
    Observations,
    ChromaticOracle,
    PushClasses,
    OuterplanarBound,
    Exception,
}

const USAGE: i32 = 2;

/// A failure reported as one diagnostic line with exit code 2.
struct Fatal(String);

impl<E: std::fmt::Display> From<E> for Fatal {
    fn from(e: E) -> Self {
        Fatal(e.to_string())
    }
}

type Outcome = Result<bool, Fatal>;

pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut ctx = Ctx { json: cli.json, threads: cli.threads, stdin, out };
    match ctx.dispatch(cli.command) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Fatal(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            USAGE
        }
    }
}

struct Ctx<'a> {
    json: bool,
    threads: Option<usize>,
    stdin: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn pool(&self) -> Result<ThreadPool, Fatal> {
        Ok(drivers::build_pool(drivers::resolve_threads(self.threads)?)?)
    }

    /// The argument itself, or every non-empty stdin line for `-`.
    fn inputs(&mut self, arg: &str) -> Result<Vec<String>, Fatal> {
        if arg != "-" {
            return Ok(vec![arg.to_owned()]);
        }
        let mut lines = Vec::new();
        for line in self.stdin.lines() {
            let line = line?;
            let line = line.trim_end_matches('\r');
            if !line.is_empty() {
                lines.push(line.to_owned());
            }
        }
        if lines.is_empty() {
            return Err(Fatal("no input on stdin".into()));
        }
        Ok(lines)
    }

    fn graphs(&mut self, arg: &str) -> Result<Vec<(String, Graph)>, Fatal> {
        self.inputs(arg)?
            .into_iter()
            .map(|s| parse_graph6(&s).map(|g| (s.clone(), g)).map_err(|e| Fatal(format!("{s:?}: {e}"))))
            .collect()
    }

    fn orientations(&mut self, arg: &str) -> Result<Vec<(String, Orientation)>, Fatal> {
        self.inputs(arg)?
            .into_iter()
            .map(|s| parse_digraph6(&s).map(|d| (s.clone(), d)).map_err(|e| Fatal(format!("{s:?}: {e}"))))
            .collect()
    }

    fn line(&mut self, text: &str) -> Result<(), Fatal> {
        writeln!(self.out, "{text}")?;
        Ok(())
    }

    fn emit<S: Serialize>(&mut self, value: &S, text: impl FnOnce() -> String) -> Result<(), Fatal> {
        if self.json {
            let s = serde_json::to_string(value)?;
            self.line(&s)
        } else {
            let s = text();
            self.line(&s)
        }
    }

    fn dispatch(&mut self, cmd: Command) -> Outcome {
        match cmd {
            Command::Check { property, input } => self.check(property, &input),
            Command::Decide { push, input, .. } => self.decide(push, &input),
            Command::Chromatic { pushable, input, .. } => self.chromatic(pushable, &input),
            Command::ReduceStar { input } => {
                for (s, g) in self.graphs(&input)? {
                    let h = write_graph6(&star_augment(&g)?);
                    self.emit(&json!({ "input": s, "graph6": h }), || h.clone())?;
                }
                Ok(true)
            }
            Command::Planar { input } => self.yes_no(&input, |g| Ok(is_planar(g))),
            Command::Outerplanar { input } => self.yes_no(&input, |g| Ok(is_outerplanar(g)?)),
            Command::Gen { kind, n } => self.generate(kind, n),
            Command::Census { max_order, minimal } => self.census(max_order, minimal),
            Command::Verify { target, max_order } => self.verify(target, max_order),
        }
    }

    fn yes_no(&mut self, input: &str, f: impl Fn(&Graph) -> Result<bool, Fatal>) -> Outcome {
        let mut all = true;
        for (s, g) in self.graphs(input)? {
            let r = f(&g)?;
            all &= r;
            self.emit(&json!({ "input": s, "result": r }), || yes_no(r).into())?;
        }
        Ok(all)
    }

    fn check(&mut self, kind: CliqueKind, input: &str) -> Outcome {
        let mut all = true;
        for (s, d) in self.orientations(input)? {
            let pair = match kind {
                CliqueKind::OrientedClique => d.oriented_clique_violation(),
                CliqueKind::PushClique => d.push_clique_violation(),
            };
            all &= pair.is_none();
            self.emit(&json!({ "input": s, "result": pair.is_none(), "pair": pair }), || match pair {
                None => "yes".into(),
                Some((u, v)) => format!("no {u} {v}"),
            })?;
        }
        Ok(all)
    }

    fn decide(&mut self, push: bool, input: &str) -> Outcome {
        let mut all = true;
        for (s, g) in self.graphs(input)? {
            let d = if push { is_underlying_push_clique(&g)? } else { is_underlying_oriented_clique(&g)? };
            all &= d.holds;
            let witness = d.witness.as_ref().map(write_digraph6);
            let value = json!({
                "input": s,
                "result": d.holds,
                "witness": witness,
                "checked": d.checked,
                "prefilter_pair": d.prefilter_pair,
            });
            self.emit(&value, || match &witness {
                Some(w) => format!("yes {w}"),
                None => "no".into(),
            })?;
        }
        Ok(all)
    }

    fn chromatic(&mut self, pushable: bool, input: &str) -> Outcome {
        for (s, d) in self.orientations(input)? {
            let (value, colors, push_set) = if pushable {
                let p = pushable_chromatic_number(&d)?;
                (p.value, p.coloring.colors, Some(p.push_set.iter().collect::<Vec<_>>()))
            } else {
                let c = oriented_chromatic_number(&d)?;
                (c.size, c.colors, None)
            };
            let v = json!({ "input": s, "value": value, "coloring": colors, "push_set": push_set });
            self.emit(&v, || value.to_string())?;
        }
        Ok(true)
    }

    fn generate(&mut self, kind: GenKind, n: usize) -> Outcome {
        let graphs = match kind {
            GenKind::Graphs => pushlab_core::enumerate_graphs(n)?,
            GenKind::Triangulations => generate_triangulations(n)?,
        };
        let lines: Vec<String> = graphs.iter().map(write_graph6).collect();
        if self.json {
            self.emit(&json!({ "order": n, "count": lines.len(), "graphs": lines }), String::new)?;
        } else {
            for l in &lines {
                self.line(l)?;
            }
        }
        Ok(true)
    }

    fn full_census(&self) -> Result<Census, Fatal> {
        Ok(drivers::census(&self.pool()?, CENSUS_MAX_ORDER)?)
    }

    fn census(&mut self, max_order: usize, minimal: bool) -> Outcome {
        let census = drivers::census(&self.pool()?, max_order)?;
        if self.json {
            let theorems = if max_order == CENSUS_MAX_ORDER {
                Some((verify_theorem2_at_9()?, verify_spanning_characterization(&census, 6)?))
            } else {
                None
            };
            let summary = census_summary(&census, minimal, theorems.as_ref().map(|(a, b)| (a, b)));
            self.emit(&summary, String::new)?;
        } else {
            let body = golden_text(census.records().filter(|r| !minimal || r.minimal));
            self.out.write_all(body.as_bytes())?;
        }
        Ok(true)
    }

    fn verify(&mut self, target: VerifyTarget, max_order: Option<usize>) -> Outcome {
        let pool = self.pool()?;
        match target {
            VerifyTarget::Characterization => {
                let n = max_order.unwrap_or(5);
                let r = drivers::characterization_sweep(&pool, n)?;
                self.sweep_report("characterization", n, &r)
            }
            VerifyTarget::ChromaticOracle => {
                let n = max_order.unwrap_or(5);
                let r = drivers::chromatic_sweep(&pool, n)?;
                self.sweep_report("chromatic-oracle", n, &r)
            }
            VerifyTarget::PushClasses => {
                let n = max_order.unwrap_or(5);
                let r = drivers::push_class_sweep(&pool, n)?;
                self.sweep_report("push-classes", n, &r)
            }
            VerifyTarget::StarLemma => {
                let r = verify_star_lemma(max_order.unwrap_or(5))?;
                let per_order: Vec<_> = r
                    .per_order
                    .iter()
                    .map(|t| json!({ "order": t.order, "classes": t.classes, "mismatches": t.mismatches }))
                    .collect();
                let ce: Vec<String> = r.counterexamples.iter().map(write_graph6).collect();
                let v = json!({ "target": "star-lemma", "classes": r.classes(), "per_order": per_order, "counterexamples": ce, "pass": r.passed() });
                self.emit(&v, || {
                    let mut s = String::new();
                    for t in &r.per_order {
                        s += &format!("order {}: {} classes, {} mismatches\n", t.order, t.classes, t.mismatches);
                    }
                    s + pass_fail(r.passed())
                })?;
                Ok(r.passed())
            }
            VerifyTarget::Theorem2 => {
                let census8 = drivers::census(&pool, CENSUS_MAX_ORDER)?;
                let t2 = verify_theorem2_at_9()?;
                let pass = nine_vertex_pass(&census8, &t2);
                let rows: Vec<_> = t2
                    .triangulations
                    .iter()
                    .map(|t| json!({ "graph6": write_graph6(&t.graph), "edges": t.edges, "push_classes": t.push_classes, "classes_checked": t.classes_checked, "result": t.underlying_push_clique }))
                    .collect();
                let order8 = census8.of_order(8).len();
                let v = json!({ "target": "theorem2", "order8_census": order8, "triangulations": rows, "push_cliques": t2.push_clique_count(), "pass": pass });
                self.emit(&v, || {
                    let mut s = format!("order-8 planar underlying push cliques: {order8}\n");
                    for t in &t2.triangulations {
                        s += &format!(
                            "{}\t{} push classes\t{} checked\t{}\n",
                            write_graph6(&t.graph),
                            t.push_classes,
                            t.classes_checked,
                            yes_no(t.underlying_push_clique)
                        );
                    }
                    s += &format!(
                        "{} triangulations on 9 vertices, {} underlying push cliques\n",
                        t2.triangulations.len(),
                        t2.push_clique_count()
                    );
                    s + pass_fail(pass)
                })?;
                Ok(pass)
            }
            VerifyTarget::Theorem3 => {
                let census = self.full_census()?;
                let t3 = verify_spanning_characterization(&census, 6)?;
                let pass = characterization_pass(&t3);
                let fails: Vec<String> =
                    t3.biconditional_failures.iter().chain(&t3.uncovered).map(write_graph6).collect();
                let v = json!({
                    "target": "theorem3",
                    "minimal_counts": t3.minimal_counts,
                    "minimal_total": t3.total_minimal(),
                    "claimed_total": CLAIMED_MINIMAL_TOTAL,
                    "planar_checked": t3.planar_checked,
                    "census_checked": t3.census_checked,
                    "failures": fails,
                    "characterization_holds": t3.characterization_holds(),
                    "pass": pass,
                });
                self.emit(&v, || {
                    format!(
                        "minimal per order: {:?} (total {}, claimed {})\nbiconditional on {} planar graphs of order <= 6, cover on {} census graphs: {}\n{}",
                        t3.minimal_counts,
                        t3.total_minimal(),
                        CLAIMED_MINIMAL_TOTAL,
                        t3.planar_checked,
                        t3.census_checked,
                        if t3.characterization_holds() { "holds" } else { "fails" },
                        pass_fail(pass)
                    )
                })?;
                Ok(pass)
            }
            VerifyTarget::Observations => {
                let census = self.full_census()?;
                let (seen, no_c4) = verify_four_cycle_property(6)?;
                let obs = verify_structural_observations(&census);
                let pass = no_c4.is_empty() && obs.passed();
                let g6 = |gs: &[Graph]| gs.iter().map(write_graph6).collect::<Vec<_>>();
                let v = json!({
                    "target": "observations",
                    "four_cycle": { "checked": seen, "failures": g6(&no_c4), "pass": no_c4.is_empty() },
                    "hamiltonian": { "checked": obs.hamiltonian_checked, "failures": g6(&obs.hamiltonian_failures), "pass": obs.hamiltonian_holds() },
                    "min_degree_two": {
                        "classes": g6(&obs.min_degree_two),
                        "minimal_classes": g6(&obs.min_degree_two_minimal),
                        "share_core": obs.min_degree_two_share_core,
                        "pass": obs.min_degree_two_holds(),
                    },
                    "cover": { "checked": obs.cover_checked, "failures": g6(&obs.uncovered), "pass": obs.cover_holds() },
                    "pass": pass,
                });
                self.emit(&v, || {
                    format!(
                        "4-cycle in non-complete underlying push cliques (n <= 6): {} checked, failures {:?}\n\
                         every edge on a Hamiltonian cycle (minimal, orders 6-7): {} checked, failures {:?}\n\
                         min-degree-2 classes (order >= 6): {:?}, minimal {:?}, all contain the minimal one: {}\n\
                         spanning cover: {} checked, failures {:?}\n{}",
                        seen,
                        g6(&no_c4),
                        obs.hamiltonian_checked,
                        g6(&obs.hamiltonian_failures),
                        g6(&obs.min_degree_two),
                        g6(&obs.min_degree_two_minimal),
                        obs.min_degree_two_share_core,
                        obs.cover_checked,
                        g6(&obs.uncovered),
                        pass_fail(pass)
                    )
                })?;
                Ok(pass)
            }
            VerifyTarget::OuterplanarBound => {
                let r = drivers::outerplanar_sweep(&pool, max_order.unwrap_or(8))?;
                let found: Vec<String> = r.oriented_cliques.iter().map(write_graph6).collect();
                let v = json!({ "target": "outerplanar-bound", "order": r.order, "classes": r.classes, "outerplanar": r.outerplanar, "oriented_cliques": found, "pass": r.passed() });
                self.emit(&v, || {
                    format!(
                        "order {}: {} classes, {} outerplanar, {} underlying oriented cliques\n{}",
                        r.order,
                        r.classes,
                        r.outerplanar,
                        found.len(),
                        pass_fail(r.passed())
                    )
                })?;
                Ok(r.passed())
            }
            VerifyTarget::Exception => {
                let r = check_exception_graph()?;
                let diameter = format!("{:?}", r.diameter);
                let v = json!({
                    "target": "exception",
                    "order": r.order,
                    "edges": r.size,
                    "diameter": diameter,
                    "domination_number": r.domination_number,
                    "planar": r.planar,
                    "underlying_push_clique": r.underlying_push_clique,
                    "ab_common_neighbors": r.ab_common_neighbors,
                    "pass": r.passed(),
                });
                self.emit(&v, || {
                    format!(
                        "order {}, {} edges, diameter {}, domination {}, planar {}, underlying push clique {}, a/b common neighbors {}\n{}",
                        r.order,
                        r.size,
                        diameter,
                        r.domination_number,
                        r.planar,
                        r.underlying_push_clique,
                        r.ab_common_neighbors,
                        pass_fail(r.passed())
                    )
                })?;
                Ok(r.passed())
            }
        }
    }

    fn sweep_report(&mut self, name: &str, n: usize, r: &drivers::SweepReport) -> Outcome {
        let mism: Vec<_> = r
            .mismatches
            .iter()
            .map(|(g, mask)| json!({ "graph6": write_graph6(g), "mask": mask.to_string() }))
            .collect();
        let v = json!({
            "target": name,
            "max_order": n,
            "classes": r.classes,
            "orientations": r.orientations,
            "positives": r.positives,
            "mismatches": mism,
            "pass": r.passed(),
        });
        self.emit(&v, || {
            format!(
                "{name} (n <= {n}): {} classes, {} orientations, {} positives, {} mismatches\n{}",
                r.classes,
                r.orientations,
                r.positives,
                r.mismatches.len(),
                pass_fail(r.passed())
            )
        })?;
        Ok(r.passed())
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pass_fail(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}
