//! `epar`: run the approximation algorithms on instance files.
//!
//! Instances ending in `.graph` are read as graphs, anything else as a
//! point file. Reports are JSON on stdout (or `--out`); a short human
//! summary goes to stderr. Exit status: 0 ok, 1 bad arguments, 2
//! certificate failure, 3 parse error, 4 guard exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::One;
use serde_json::{json, Value};

use epsilon_pareto::bi_engine::{
    delta_from_eps, greedy_approx, greedy_exact, prune_redundant, two_approx, EngineReport,
};
use epsilon_pareto::brute::{guard_max, min_eps_pareto};
use epsilon_pareto::bsp::{
    bsp_oracles, enumerate_paths, pareto_paths, path_points, rsp_exact, rsp_fptas, BiGraph, BspMode,
};
use epsilon_pareto::dual_k::{brute_force_dual_capped, dual_k_explicit, harmonic, DualResult};
use epsilon_pareto::error::Error;
use epsilon_pareto::generators::{
    chain_instance, claim34_stage, cluster_instance, prop31_points, random_bigraph, random_points,
    random_tradeoff_points, shatter_construction, PartitionSpec,
};
use epsilon_pareto::io::{parse_graph, parse_points, write_graph, write_points};
use epsilon_pareto::multi_grid::{eps_prime_pareto, gap_grid_pareto, MultiReport};
use epsilon_pareto::oracle::{
    adversarial_wrapper, exact_oracle_from_points, AdversaryPolicy, DualRestrictOracle,
    RestrictOracle, Witness,
};
use epsilon_pareto::point::{is_eps_pareto, pareto_indices, CoverCertificate, Point, PointSet};
use epsilon_pareto::rational::{fmt_rat, parse_rat, powi, to_f64, Rat};

#[derive(Parser, Debug)]
#[command(
    name = "epar",
    version,
    about = "Approximate Pareto sets with exact rational arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Two-objective 2-approximation of the smallest eps-Pareto set
    Pareto2(RunArgs),
    /// Greedy eps-Pareto set (exact oracles, or approximate with --delta)
    Greedy(RunArgs),
    /// Two-phase eps'-Pareto set for d objectives
    Multi(RunArgs),
    /// Best-ratio cover by at most k points
    Dual(RunArgs),
    /// Write a generated instance
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        #[arg(long, short, global = true)]
        out: Option<PathBuf>,
    },
    /// Check every invariant that applies to the instance
    Verify {
        #[command(flatten)]
        run: RunArgs,
        /// Also compare against exhaustive search
        #[arg(long)]
        against_bruteforce: bool,
    },
    /// TSV of all solutions flagged pareto / chosen / covered-by
    Plotdata(RunArgs),
}

#[derive(Args, Debug, Clone)]
struct RunArgs {
    instance: PathBuf,
    #[arg(long, value_parser = rat_arg, default_value = "1/2")]
    eps: Rat,
    #[arg(long, value_parser = rat_arg)]
    eps_prime: Option<Rat>,
    #[arg(long, value_parser = rat_arg)]
    delta: Option<Rat>,
    #[arg(long, short)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    oracle: Mode,
    /// Drop redundant points from the result
    #[arg(long)]
    prune: bool,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Exact,
    Fptas,
    Adversarial,
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// Partition chain graph
    Chain {
        #[arg(long = "A", value_delimiter = ',', required = true)]
        a: Vec<u64>,
        #[arg(long, value_parser = rat_arg)]
        eps: Rat,
    },
    /// k scaled chain copies in parallel
    Cluster {
        #[arg(long = "A", value_delimiter = ',', required = true)]
        a: Vec<u64>,
        #[arg(long, value_parser = rat_arg)]
        eps: Rat,
        #[arg(long, short)]
        k: usize,
    },
    /// Random points
    Points {
        #[arg(long, short)]
        n: usize,
        #[arg(long, short, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        bits: u32,
        /// Two objectives on a noisy anti-diagonal
        #[arg(long)]
        tradeoff: bool,
    },
    /// Random acyclic graph
    Graph {
        #[arg(long, short)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        bits: u32,
    },
    /// Points of the greedy lower-bound scenario; the script is a comment
    Claim34 {
        #[arg(long, short)]
        k: usize,
        #[arg(long, value_parser = rat_arg)]
        eps: Rat,
        #[arg(long, value_parser = rat_arg)]
        delta: Rat,
    },
    /// The two point families with far apart optima
    Prop31 {
        #[arg(long = "M", value_parser = rat_arg)]
        m: Rat,
        #[arg(long, value_parser = rat_arg)]
        eps: Rat,
        /// Emit the second family
        #[arg(long)]
        primed: bool,
    },
    /// A d-point set whose coverage family shatters it
    Shatter {
        #[arg(long, short)]
        d: usize,
        #[arg(long, value_parser = rat_arg)]
        eps: Rat,
    },
}

fn rat_arg(s: &str) -> Result<Rat, String> {
    parse_rat(s).ok_or_else(|| format!("expected `a` or `a/b`, got {s:?}"))
}

#[derive(Debug)]
enum Fail {
    Lib(Error),
    Io(String),
    Cert(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

type Res<T> = std::result::Result<T, Fail>;

enum Instance {
    Points(PointSet),
    Graph(BiGraph),
}

fn load(path: &Path) -> Res<Instance> {
    let text =
        fs::read_to_string(path).map_err(|e| Fail::Io(format!("{}: {e}", path.display())))?;
    if path.extension().is_some_and(|x| x == "graph") {
        Ok(Instance::Graph(parse_graph(&text)?))
    } else {
        Ok(Instance::Points(parse_points(&text)?))
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Res<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Fail::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn jr(x: &Rat) -> Value {
    Value::String(fmt_rat(x))
}

fn jp(p: &Point) -> Value {
    Value::Array(p.coords.iter().map(jr).collect())
}

fn jset(p: &PointSet) -> Value {
    Value::Array(p.iter().map(jp).collect())
}

fn jcert(c: &Option<CoverCertificate>) -> Value {
    match c {
        None => Value::Null,
        Some(c) => json!({
            "ratio": jr(&c.ratio),
            "covered_by": c.assignments.iter().map(|(k, v)| json!([k, v])).collect::<Vec<_>>(),
        }),
    }
}

fn jwit(w: &Witness) -> Value {
    match w {
        Witness::Index(i) => json!({ "index": i }),
        Witness::Path(e) => json!({ "edges": e }),
    }
}

fn bad(msg: &str) -> Fail {
    Fail::Lib(Error::InvalidParameter(msg.into()))
}

trait Both: RestrictOracle + DualRestrictOracle {}
impl<T: RestrictOracle + DualRestrictOracle> Both for T {}

/// Oracles over the instance plus the solution set used for checking.
struct Backend {
    oracle: Box<dyn Both>,
    reference: PointSet,
    exact: bool,
    /// Path edges for adversarial graph runs, indexed by witness.
    paths: Option<Vec<Vec<usize>>>,
}

fn backend(inst: &Instance, mode: Mode, eps: &Rat, delta: Option<&Rat>) -> Res<Backend> {
    let slack = match delta {
        Some(d) => d.clone(),
        None => delta_from_eps(eps)?,
    };
    match inst {
        Instance::Points(p) => {
            if p.dim != 2 && !p.is_empty() {
                return Err(bad("this command needs two objectives"));
            }
            let oracle: Box<dyn Both> = match mode {
                Mode::Exact => Box::new(exact_oracle_from_points(p.clone())),
                Mode::Adversarial => Box::new(adversarial_wrapper(
                    p.clone(),
                    slack,
                    AdversaryPolicy::WorstTarget,
                )),
                Mode::Fptas => return Err(bad("--oracle fptas needs a graph instance")),
            };
            Ok(Backend {
                oracle,
                reference: p.clone(),
                exact: mode == Mode::Exact,
                paths: None,
            })
        }
        Instance::Graph(g) => {
            let reference = PointSet::new(pareto_paths(g).iter().map(|w| w.point()).collect())?;
            match mode {
                Mode::Exact | Mode::Fptas => {
                    let m = if mode == Mode::Exact {
                        BspMode::Exact
                    } else {
                        BspMode::Fptas
                    };
                    Ok(Backend {
                        oracle: Box::new(bsp_oracles(g.clone(), m)),
                        reference,
                        exact: true,
                        paths: None,
                    })
                }
                Mode::Adversarial => {
                    let all = enumerate_paths(g, guard_max())?;
                    let pts = path_points(&all);
                    let oracle = Box::new(adversarial_wrapper(
                        pts,
                        slack,
                        AdversaryPolicy::WorstTarget,
                    ));
                    let paths = Some(all.into_iter().map(|w| w.edges).collect());
                    Ok(Backend {
                        oracle,
                        reference,
                        exact: false,
                        paths,
                    })
                }
            }
        }
    }
}

fn engine_json(name: &str, a: &RunArgs, rep: &EngineReport, be: &Backend) -> Value {
    let wits: Vec<Value> = rep
        .witnesses
        .iter()
        .map(|w| match (w, &be.paths) {
            (Witness::Index(i), Some(p)) => json!({ "edges": p[*i] }),
            _ => jwit(w),
        })
        .collect();
    json!({
        "command": name,
        "instance": a.instance.display().to_string(),
        "eps": jr(&a.eps),
        "delta": jr(&rep.state.delta),
        "oracle": format!("{:?}", a.oracle).to_lowercase(),
        "result": jset(&rep.result),
        "witnesses": wits,
        "size": rep.len(),
        "empty_instance": rep.empty_instance,
        "iterations": rep.iterations,
        "oracle_calls": {
            "restrict": rep.oracle_calls.restrict,
            "dual_restrict": rep.oracle_calls.dual_restrict,
            "total": rep.oracle_calls.total(),
        },
        "certificate": jcert(&rep.certificate),
    })
}

/// Brute-force OPT_eps when within the guard, else `None`.
fn brute_opt(reference: &PointSet, eps: &Rat) -> Res<Option<usize>> {
    match min_eps_pareto(reference, eps, guard_max()) {
        Ok(q) => Ok(Some(q.len())),
        Err(Error::GuardExceeded { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn summary(line: String) {
    eprintln!("{line}");
}

fn run_engine(name: &str, a: &RunArgs) -> Res<()> {
    let inst = load(&a.instance)?;
    let be = backend(&inst, a.oracle, &a.eps, a.delta.as_ref())?;
    let mut rep = match (name, &a.delta) {
        ("pareto2", _) => two_approx(&*be.oracle, &*be.oracle, &a.eps)?,
        (_, Some(d)) => greedy_approx(&*be.oracle, &a.eps, d)?,
        (_, None) if be.exact => greedy_exact(&*be.oracle, &*be.oracle, &a.eps)?,
        _ => return Err(bad("greedy with an inexact oracle needs --delta")),
    };
    if a.prune {
        rep = prune_redundant(&rep, Some(&be.reference));
    }
    let ok = rep.certify(&be.reference);
    let mut v = engine_json(name, a, &rep, &be);
    if let Some(opt) = brute_opt(&be.reference, &a.eps)? {
        v["bruteforce"] = json!({
            "opt_eps": opt,
            "size_le_2opt": rep.len() <= 2 * opt,
            "calls_le_4opt_plus_4": rep.oracle_calls.total() <= 4 * opt as u64 + 4,
        });
    } else {
        v["bruteforce"] = json!("skipped: guard");
    }
    emit(&a.out, &format!("{:#}\n", v))?;
    summary(format!(
        "{name}: |Q| = {}, calls = {}, certificate {}",
        rep.len(),
        rep.oracle_calls.total(),
        if ok { "ok" } else { "FAILED" }
    ));
    if ok {
        Ok(())
    } else {
        Err(Fail::Cert("result is not an eps-Pareto set".into()))
    }
}

fn points_only(inst: Instance) -> Res<PointSet> {
    match inst {
        Instance::Points(p) => Ok(p),
        Instance::Graph(_) => Err(bad("this command needs a point file")),
    }
}

fn eps_prime_of(a: &RunArgs) -> Rat {
    a.eps_prime
        .clone()
        .unwrap_or_else(|| &a.eps * Rat::from_integer(2.into()))
}

fn multi_report(p: &PointSet, eps: &Rat, eps_prime: &Rat) -> Res<MultiReport> {
    let o = exact_oracle_from_points(p.clone());
    let mut rep = eps_prime_pareto(&o, eps, eps_prime)?;
    rep.certify(p, eps_prime);
    Ok(rep)
}

fn run_multi(a: &RunArgs) -> Res<()> {
    let p = points_only(load(&a.instance)?)?;
    let ep = eps_prime_of(a);
    let rep = multi_report(&p, &a.eps, &ep)?;
    let mut v = json!({
        "command": "multi",
        "instance": a.instance.display().to_string(),
        "eps": jr(&a.eps),
        "eps_prime": jr(&ep),
        "delta": jr(&rep.delta),
        "grid_size": rep.grid.len(),
        "gap_calls": rep.gap_calls,
        "result": jset(&rep.result),
        "size": rep.result.len(),
        "certificate": jcert(&rep.certificate),
    });
    if let Some(opt) = brute_opt(&p, &a.eps)? {
        let bound =
            harmonic(&Rat::from_integer(rep.grid.len().into())) * Rat::from_integer(opt.into());
        v["bruteforce"] = json!({
            "opt_eps": opt,
            "h_bound": jr(&bound),
            "size_le_h_bound": Rat::from_integer(rep.result.len().into()) <= bound,
        });
    }
    emit(&a.out, &format!("{:#}\n", v))?;
    summary(format!(
        "multi: |Q| = {}, |R| = {}, GAP calls = {}",
        rep.result.len(),
        rep.grid.len(),
        rep.gap_calls
    ));
    match rep.certificate {
        Some(_) => Ok(()),
        None => Err(Fail::Cert("result is not an eps'-Pareto set".into())),
    }
}

fn dual_json(r: &DualResult) -> Value {
    json!({
        "chosen": jset(&r.chosen),
        "chosen_index": r.chosen_idx,
        "achieved_ratio": jr(&r.achieved_ratio),
        "candidate_ratio": jr(&r.optimal_ratio_guess),
        "nominal_exponent": r.nominal_exponent,
        "honest_exponent": r.honest_exponent,
        "beta_used": jr(&r.beta_used),
        "cases": r.cases.iter().map(|c| format!("{c:?}")).collect::<Vec<_>>(),
        "certificate": jcert(&Some(r.certificate.clone())),
    })
}

fn run_dual(a: &RunArgs) -> Res<()> {
    let p = points_only(load(&a.instance)?)?;
    let k = a.k.ok_or_else(|| bad("dual needs --k"))?;
    let r = dual_k_explicit(&p, k, 2, 4)?;
    let ok = r.certificate.verify(&r.chosen, &p);
    let mut v = json!({ "command": "dual", "instance": a.instance.display().to_string(), "k": k });
    v["dual"] = dual_json(&r);
    match brute_force_dual_capped(&p, k, guard_max()) {
        Ok(b) => {
            v["bruteforce"] = json!({
                "rho_star": jr(&b.achieved_ratio),
                "within_nominal": r.achieved_ratio <= powi(&b.achieved_ratio, r.nominal_exponent),
            })
        }
        Err(Error::GuardExceeded { .. }) => v["bruteforce"] = json!("skipped: guard"),
        Err(e) => return Err(e.into()),
    }
    emit(&a.out, &format!("{:#}\n", v))?;
    summary(format!(
        "dual: {} points, ratio {} (~{:.4})",
        r.chosen.len(),
        fmt_rat(&r.achieved_ratio),
        to_f64(&r.achieved_ratio)
    ));
    if ok {
        Ok(())
    } else {
        Err(Fail::Cert("dual certificate does not verify".into()))
    }
}

fn run_gen(kind: &GenKind, out: &Option<PathBuf>) -> Res<()> {
    let text = match kind {
        GenKind::Chain { a, eps } => write_graph(&chain_instance(&PartitionSpec::new(
            a.clone(),
            eps.clone(),
            1,
        )?)),
        GenKind::Cluster { a, eps, k } => write_graph(&cluster_instance(&PartitionSpec::new(
            a.clone(),
            eps.clone(),
            *k,
        )?)),
        GenKind::Points {
            n,
            d,
            seed,
            bits,
            tradeoff,
        } => {
            if *tradeoff {
                write_points(&random_tradeoff_points(*n, *seed, *bits))
            } else {
                write_points(&random_points(*n, *d, *seed, *bits))
            }
        }
        GenKind::Graph {
            n,
            density,
            seed,
            bits,
        } => write_graph(&random_bigraph(*n, *density, *seed, *bits)),
        GenKind::Claim34 { k, eps, delta } => {
            let (p, policy) = claim34_stage(*k, eps, delta)?;
            let script = match policy {
                AdversaryPolicy::Scripted(s) => s
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
                _ => String::new(),
            };
            format!("# script {script}\n{}", write_points(&p))
        }
        GenKind::Prop31 { m, eps, primed } => {
            let (p, pp) = prop31_points(m, eps)?;
            write_points(if *primed { &pp } else { &p })
        }
        GenKind::Shatter { d, eps } => write_points(&shatter_construction(*d, eps)?),
    };
    emit(out, &text)
}

struct Checks {
    lines: Vec<String>,
    failed: bool,
}

impl Checks {
    fn check(&mut self, name: &str, ok: bool) {
        self.lines
            .push(format!("{} {name}", if ok { "PASS" } else { "FAIL" }));
        self.failed |= !ok;
    }

    fn skip(&mut self, name: &str, why: &str) {
        self.lines.push(format!("SKIP {name} ({why})"));
    }
}

fn verify_two(
    c: &mut Checks,
    p: &PointSet,
    graph: Option<&BiGraph>,
    a: &RunArgs,
    brute: bool,
) -> Res<()> {
    let eps = &a.eps;
    let (mut two, mut greedy) = match graph {
        Some(g) => {
            let fp = bsp_oracles(g.clone(), BspMode::Fptas);
            let ex = bsp_oracles(g.clone(), BspMode::Exact);
            (two_approx(&fp, &fp, eps)?, greedy_exact(&ex, &ex, eps)?)
        }
        None => {
            let o = exact_oracle_from_points(p.clone());
            (two_approx(&o, &o, eps)?, greedy_exact(&o, &o, eps)?)
        }
    };
    c.check("two_approx certified eps-Pareto", two.certify(p));
    c.check(
        "two_approx calls = 2|Q| + 2",
        two.oracle_calls.total() == 2 * two.len() as u64 + 2 || two.empty_instance,
    );
    c.check("greedy_exact certified eps-Pareto", greedy.certify(p));
    let pruned = prune_redundant(&two, Some(p));
    c.check(
        "pruned result still eps-Pareto",
        is_eps_pareto(&pruned.result, p, eps).is_some(),
    );
    if !brute {
        return Ok(());
    }
    match brute_opt(p, eps)? {
        Some(opt) => {
            c.check("two_approx |Q| <= 2 OPT", two.len() <= 2 * opt);
            c.check(
                "two_approx calls <= 4 OPT + 4",
                two.oracle_calls.total() <= 4 * opt as u64 + 4,
            );
            c.check("greedy_exact |Q| = OPT", greedy.len() == opt);
        }
        None => c.skip("size bounds", "guard"),
    }
    Ok(())
}

fn run_verify(a: &RunArgs, brute: bool) -> Res<()> {
    let inst = load(&a.instance)?;
    let mut c = Checks {
        lines: Vec::new(),
        failed: false,
    };
    match &inst {
        Instance::Graph(g) => {
            let front = PointSet::new(pareto_paths(g).iter().map(|w| w.point()).collect())?;
            if brute {
                match enumerate_paths(g, guard_max()) {
                    Ok(all) => {
                        let pts = path_points(&all);
                        let brute_front = pts.select(&pareto_indices(&pts));
                        let same = brute_front.len() == front.len()
                            && front.iter().all(|q| brute_front.contains(q));
                        c.check("pareto_paths equals enumerated front", same);
                    }
                    Err(Error::GuardExceeded { .. }) => {
                        c.skip("pareto_paths equals enumerated front", "guard")
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            let delta = a
                .delta
                .clone()
                .unwrap_or_else(|| Rat::new(1.into(), 10.into()));
            let one = Rat::one();
            let mut fptas_ok = true;
            for q in front.iter() {
                let bound = q.x().clone();
                let (Some(ex), Some(ap)) = (rsp_exact(g, &bound), rsp_fptas(g, &bound, &delta))
                else {
                    fptas_ok = false;
                    continue;
                };
                fptas_ok &=
                    ap.total_cost <= bound && ap.total_delay <= (&one + &delta) * &ex.total_delay;
            }
            c.check("rsp_fptas within (1+delta) of rsp_exact", fptas_ok);
            verify_two(&mut c, &front, Some(g), a, brute)?;
        }
        Instance::Points(p) if p.dim == 2 || p.is_empty() => verify_two(&mut c, p, None, a, brute)?,
        Instance::Points(p) => {
            let ep = eps_prime_of(a);
            let o = exact_oracle_from_points(p.clone());
            let grid_delta = a.delta.clone().unwrap_or_else(|| a.eps.clone());
            let grid = gap_grid_pareto(&o, &grid_delta)?;
            c.check(
                "grid set is delta-Pareto",
                is_eps_pareto(&grid.result, p, &grid_delta).is_some(),
            );
            let rep = multi_report(p, &a.eps, &ep)?;
            c.check(
                "multi result certified at 1+eps'",
                rep.certificate.is_some(),
            );
            let k = a.k.unwrap_or(2).min(p.len()).max(1);
            if !p.is_empty() {
                let d = dual_k_explicit(p, k, 2, 4)?;
                c.check("dual returns at most k points", d.chosen.len() <= k);
                c.check(
                    "dual certificate verifies",
                    d.certificate.verify(&d.chosen, p),
                );
                if brute {
                    match brute_force_dual_capped(p, k, guard_max()) {
                        Ok(b) => c.check(
                            "dual ratio <= rho*^9",
                            d.achieved_ratio <= powi(&b.achieved_ratio, d.nominal_exponent),
                        ),
                        Err(Error::GuardExceeded { .. }) => c.skip("dual ratio <= rho*^9", "guard"),
                        Err(e) => return Err(e.into()),
                    }
                }
            }
            if brute {
                match brute_opt(p, &a.eps)? {
                    Some(opt) => {
                        let bound = harmonic(&Rat::from_integer(rep.grid.len().into()))
                            * Rat::from_integer(opt.into());
                        c.check(
                            "multi |Q| <= H(|R|) OPT",
                            Rat::from_integer(rep.result.len().into()) <= bound,
                        );
                    }
                    None => c.skip("multi |Q| <= H(|R|) OPT", "guard"),
                }
            }
        }
    }
    emit(&a.out, &(c.lines.join("\n") + "\n"))?;
    if c.failed {
        Err(Fail::Cert("an invariant failed".into()))
    } else {
        Ok(())
    }
}

fn run_plot(a: &RunArgs) -> Res<()> {
    let inst = load(&a.instance)?;
    let (rows, rho, chosen): (PointSet, Rat, PointSet) = match &inst {
        Instance::Graph(g) => {
            let rows = path_points(&enumerate_paths(g, guard_max())?);
            let o = bsp_oracles(g.clone(), BspMode::Exact);
            (
                rows,
                Rat::one() + &a.eps,
                two_approx(&o, &o, &a.eps)?.result,
            )
        }
        Instance::Points(p) if p.dim == 2 || p.is_empty() => {
            let o = exact_oracle_from_points(p.clone());
            (
                p.clone(),
                Rat::one() + &a.eps,
                two_approx(&o, &o, &a.eps)?.result,
            )
        }
        Instance::Points(p) => {
            let ep = eps_prime_of(a);
            (
                p.clone(),
                Rat::one() + &ep,
                multi_report(p, &a.eps, &ep)?.result,
            )
        }
    };
    let front = pareto_indices(&rows);
    let mut chosen_rows: Vec<usize> = Vec::new();
    for q in chosen.iter() {
        if let Some(i) = rows.iter().position(|r| r == q) {
            chosen_rows.push(i);
        }
    }
    let dim = rows.dim.max(2);
    let mut out = String::from("id");
    for j in 1..=dim {
        out += &format!("\tc{j}");
    }
    out += "\tpareto\tchosen\tcovered_by\n";
    for (i, r) in rows.iter().enumerate() {
        out += &i.to_string();
        for x in &r.coords {
            out += &format!("\t{}", fmt_rat(x));
        }
        let by = chosen_rows
            .iter()
            .find(|&&j| rows[j].covers(r, &rho))
            .map_or("-".to_string(), |j| j.to_string());
        out += &format!(
            "\t{}\t{}\t{by}\n",
            u8::from(front.contains(&i)),
            u8::from(chosen_rows.contains(&i))
        );
    }
    emit(&a.out, &out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let res = match &cli.cmd {
        Cmd::Pareto2(a) => run_engine("pareto2", a),
        Cmd::Greedy(a) => run_engine("greedy", a),
        Cmd::Multi(a) => run_multi(a),
        Cmd::Dual(a) => run_dual(a),
        Cmd::Gen { kind, out } => run_gen(kind, out),
        Cmd::Verify {
            run,
            against_bruteforce,
        } => run_verify(run, *against_bruteforce),
        Cmd::Plotdata(a) => run_plot(a),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (code, msg) = match f {
                Fail::Cert(m) => (2, m),
                Fail::Lib(e @ Error::Parse { .. }) => (3, e.to_string()),
                Fail::Lib(e @ Error::GuardExceeded { .. }) => (4, e.to_string()),
                Fail::Lib(e) => (1, e.to_string()),
                Fail::Io(m) => (1, m),
            };
            eprintln!("epar: {msg}");
            ExitCode::from(code)
        }
    }
}
