use mstcover::instances::{read_instance, read_solution, SolutionFile};
use mstcover::{is_spanning_tree, progress, Instance};

use crate::{Failure, VerifyArgs};

/// Per-agent verdict for a solution.
pub struct Verdict {
    /// `f_i(selected)` per agent.
    pub progress: Vec<usize>,
    pub tree_size: usize,
    /// Agents (0-based) whose claimed witness is invalid, with the reason.
    pub bad_witnesses: Vec<(usize, &'static str)>,
}

impl Verdict {
    pub fn unsatisfied(&self) -> Vec<usize> {
        (0..self.progress.len())
            .filter(|&i| self.progress[i] != self.tree_size)
            .collect()
    }

    pub fn ok(&self) -> bool {
        self.unsatisfied().is_empty() && self.bad_witnesses.is_empty()
    }
}

/// Checks `solution` against `instance` from scratch. Malformed solutions
/// (ids out of range, wrong witness count) are errors, not verdicts.
pub fn check(instance: &Instance, solution: &SolutionFile) -> Result<Verdict, Failure> {
    let graph = &instance.graph;
    let m = graph.edge_count();
    let k = instance.profile.len();
    let out_of_range = |ids: &[usize]| ids.iter().find(|&&e| e >= m).copied();
    if let Some(e) = out_of_range(&solution.selected) {
        return Err(Failure::malformed(format!(
            "selected edge {e} out of range (m = {m})"
        )));
    }
    if !solution.witnesses.is_empty() && solution.witnesses.len() != k {
        return Err(Failure::malformed(format!(
            "{} witnesses for {k} agents",
            solution.witnesses.len()
        )));
    }
    for w in &solution.witnesses {
        if let Some(e) = out_of_range(w) {
            return Err(Failure::malformed(format!(
                "witness edge {e} out of range (m = {m})"
            )));
        }
    }

    let progress_per_agent = instance
        .profile
        .agents()
        .iter()
        .map(|p| progress(graph, p, &solution.selected))
        .collect();
    let mut bad_witnesses = Vec::new();
    for (i, witness) in solution.witnesses.iter().enumerate() {
        let reason = if !is_spanning_tree(graph, witness) {
            Some("not a spanning tree")
        } else if witness.iter().any(|e| !solution.selected.contains(e)) {
            Some("not contained in the selected edges")
        } else if progress(graph, instance.profile.agent(i), witness) != graph.tree_size() {
            Some("not a minimum spanning tree for the agent")
        } else {
            None
        };
        if let Some(reason) = reason {
            bad_witnesses.push((i, reason));
        }
    }
    Ok(Verdict {
        progress: progress_per_agent,
        tree_size: graph.tree_size(),
        bad_witnesses,
    })
}

pub fn run(args: &VerifyArgs) -> Result<u8, Failure> {
    let instance = read_instance(&args.input)?;
    let solution = read_solution(&args.solution)?;
    let verdict = check(&instance, &solution)?;
    for (i, f) in verdict.progress.iter().enumerate() {
        println!("agent {}: progress {f}/{}", i + 1, verdict.tree_size);
    }
    for i in verdict.unsatisfied() {
        println!("agent {} unsatisfied", i + 1);
    }
    for (i, reason) in &verdict.bad_witnesses {
        println!("agent {} witness invalid: {reason}", i + 1);
    }
    if verdict.ok() {
        println!("feasible");
        Ok(0)
    } else {
        println!("infeasible");
        Ok(1)
    }
}
