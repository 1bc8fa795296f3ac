use std::fmt::Write as _;

use mstcover::instances::RoundRecord;
use serde_json::json;
use sha2::{Digest, Sha256};

pub fn digest(canonical: &str) -> String {
    format!(
        "sha256:{}",
        hex::encode(Sha256::digest(canonical.as_bytes()))
    )
}

pub struct RunReport {
    pub algorithm: &'static str,
    pub instance_digest: String,
    pub size: usize,
    pub cost: String,
    pub rounds: Vec<RoundRecord>,
    /// Recomputed from scratch by the verifier, never taken from the solver.
    pub verified: bool,
    pub wall_time_ms: Option<f64>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let mut value = json!({
            "algorithm": self.algorithm,
            "instance": self.instance_digest,
            "size": self.size,
            "cost": self.cost,
            "rounds": self.rounds,
            "verified": self.verified,
        });
        if let Some(ms) = self.wall_time_ms {
            value["wall_time_ms"] = json!(ms);
        }
        value.to_string()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "algorithm: {}", self.algorithm);
        let _ = writeln!(out, "instance: {}", self.instance_digest);
        let _ = writeln!(out, "size: {}", self.size);
        let _ = writeln!(out, "cost: {}", self.cost);
        let _ = writeln!(out, "rounds: {}", self.rounds.len());
        for (i, round) in self.rounds.iter().enumerate() {
            let _ = writeln!(
                out,
                "  round {}: edge {} gain {}",
                i + 1,
                round.edge,
                round.gain
            );
        }
        let verdict = if self.verified {
            "feasible"
        } else {
            "INFEASIBLE"
        };
        let _ = writeln!(out, "verified: {verdict}");
        if let Some(ms) = self.wall_time_ms {
            let _ = writeln!(out, "wall time: {ms:.3} ms");
        }
        out
    }
}
