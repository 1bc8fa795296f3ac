use std::time::Instant;

use mstcover::cover::{greedy_cover_with, weighted_greedy_cover_with};
use mstcover::instances::{
    costs_from_str, instance_to_string, read_instance, Meta, RoundRecord, SolutionFile,
};
use mstcover::matroid::{matroid_greedy_with, matroids_from_str, MstMatroid, RankOracle};
use mstcover::oracle::{exact_min_cover, Objective};
use mstcover::{perfect_cover, CostModel, CoverSolution, Instance, SolveOptions};
use serde_json::json;

use crate::report::{digest, RunReport};
use crate::{verify, Algorithm, ExactObjective, Failure, SolveArgs};

fn load_costs(args: &SolveArgs, instance: &Instance) -> Result<CostModel, Failure> {
    let Some(path) = &args.costs else {
        return Ok(instance.cost_model());
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::malformed(format!("{}: {e}", path.display())))?;
    Ok(costs_from_str(&text, instance.graph.edge_count())?)
}

/// Extra matroids that `matroid-greedy` must also bring to full rank.
fn load_matroids(args: &SolveArgs) -> Result<Vec<Box<dyn RankOracle>>, Failure> {
    let Some(path) = &args.matroids else {
        return Ok(Vec::new());
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::malformed(format!("{}: {e}", path.display())))?;
    matroids_from_str(&text)?
        .into_iter()
        .map(|spec| Ok(spec.into_oracle()?))
        .collect()
}

pub fn run(args: &SolveArgs) -> Result<u8, Failure> {
    if args.matroids.is_some() && args.alg != Algorithm::MatroidGreedy {
        return Err(Failure::malformed(
            "--matroids only applies to --alg matroid-greedy",
        ));
    }
    let instance = read_instance(&args.input)?;
    let cost = load_costs(args, &instance)?;
    let (graph, profile) = (&instance.graph, &instance.profile);
    let options = SolveOptions {
        parallel: args.parallel_agents,
    };

    let started = Instant::now();
    let solution = match args.alg {
        Algorithm::Perfect => match perfect_cover(graph, profile) {
            Some(tree) => CoverSolution {
                selected: tree.edge_ids().to_vec(),
                witnesses: vec![tree; profile.len()],
                rounds: Vec::new(),
            },
            None => {
                println!("no perfect cover");
                return Ok(3);
            }
        },
        Algorithm::Greedy => greedy_cover_with(graph, profile, options)?,
        Algorithm::WeightedGreedy => weighted_greedy_cover_with(graph, profile, &cost, options)?,
        Algorithm::MatroidGreedy => {
            let matroids = profile
                .agents()
                .iter()
                .map(|p| MstMatroid::new(graph, p))
                .collect::<Result<Vec<_>, _>>()?;
            let extra = load_matroids(args)?;
            let oracles: Vec<&dyn RankOracle> = matroids
                .iter()
                .map(|m| m as &dyn RankOracle)
                .chain(extra.iter().map(|m| m.as_ref()))
                .collect();
            let run = matroid_greedy_with(&oracles, &cost, options)?;
            let mut solution = CoverSolution::from_selected(graph, profile, run.selected)
                .ok_or_else(|| Failure::new(2, "matroid greedy ended without a cover"))?;
            solution.rounds = run.rounds;
            solution
        }
        Algorithm::Exact => {
            let objective = match args.objective {
                ExactObjective::Size => Objective::Cardinality,
                ExactObjective::Cost => Objective::Cost(&cost),
            };
            let selected = exact_min_cover(graph, profile, objective)?;
            CoverSolution::from_selected(graph, profile, selected)
                .ok_or_else(|| Failure::new(2, "exact solver returned an infeasible set"))?
        }
    };
    let elapsed = started.elapsed();

    let canonical = instance_to_string(&instance)?;
    let instance_digest = digest(&canonical);
    let mut meta = Meta::new();
    meta.insert("algorithm".into(), json!(args.alg.name()));
    meta.insert("instance".into(), json!(instance_digest));
    let file = SolutionFile::new(&solution, meta);
    if let Some(path) = &args.output {
        mstcover::instances::write_solution(&file, path)?;
    }

    let verdict = verify::check(&instance, &file)?;
    let cost_value = solution.cost(&cost);
    let report = RunReport {
        algorithm: args.alg.name(),
        instance_digest,
        size: solution.len(),
        cost: if cost_value.is_integer() {
            cost_value.numer().to_string()
        } else {
            format!("{}/{}", cost_value.numer(), cost_value.denom())
        },
        rounds: solution.rounds.iter().map(RoundRecord::from).collect(),
        verified: verdict.ok(),
        wall_time_ms: args.timing.then_some(elapsed.as_secs_f64() * 1e3),
    };
    if args.json_report {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    Ok(if verdict.ok() { 0 } else { 1 })
}
