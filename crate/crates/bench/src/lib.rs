//! Fixed benchmark inputs, so that numbers are comparable across runs.

use mstcover::instances::generate_random;
use mstcover::Instance;

/// Random multigraph instances of increasing size: `(label, instance)`.
pub fn random_fixtures() -> Vec<(String, Instance)> {
    [(8, 16, 4), (16, 48, 8), (32, 96, 16)]
        .into_iter()
        .map(|(n, m, k)| {
            let inst = generate_random(n, m, k, 4, 42).expect("valid fixture parameters");
            (format!("n{n}_m{m}_k{k}"), inst)
        })
        .collect()
}

/// Instances small enough for the exhaustive solver.
pub fn exact_fixtures() -> Vec<(String, Instance)> {
    [(5, 8, 3), (6, 11, 3), (7, 14, 4)]
        .into_iter()
        .map(|(n, m, k)| {
            let inst = generate_random(n, m, k, 3, 42).expect("valid fixture parameters");
            (format!("n{n}_m{m}_k{k}"), inst)
        })
        .collect()
}
