use mstcover::instances::{
    generate_random_with, instance_to_string, reduce_set_cover, RandomSpec, ReductionMode,
};
use mstcover::SetCoverInput;

use crate::report::digest;
use crate::{Failure, GenArgs, Kind};

pub fn run(args: &GenArgs) -> Result<u8, Failure> {
    let instance = match args.kind {
        Kind::Random => {
            let (Some(n), Some(m), Some(k), Some(max_rank)) =
                (args.n, args.m, args.k, args.max_rank)
            else {
                return Err(Failure::malformed(
                    "--kind random needs --n, --m, --k and --max-rank",
                ));
            };
            if args.sc_file.is_some() || args.h.is_some() {
                return Err(Failure::malformed(
                    "--sc-file/--h do not apply to --kind random",
                ));
            }
            generate_random_with(&RandomSpec {
                simple: args.simple,
                max_cost: args.max_cost,
                ..RandomSpec::new(n, m, k, max_rank, args.seed)
            })?
        }
        Kind::SetcoverT1 | Kind::SetcoverT2 => {
            if args.n.is_some() || args.m.is_some() || args.k.is_some() || args.max_rank.is_some() {
                return Err(Failure::malformed(
                    "--n/--m/--k/--max-rank do not apply to set cover reductions",
                ));
            }
            let path = args
                .sc_file
                .as_ref()
                .ok_or_else(|| Failure::malformed("set cover reductions need --sc-file"))?;
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::malformed(format!("{}: {e}", path.display())))?;
            let sc = SetCoverInput::from_json_str(&text)?;
            let mode = match (args.kind, args.h) {
                (Kind::SetcoverT1, None) => ReductionMode::SingleCopy,
                (Kind::SetcoverT1, Some(_)) => {
                    return Err(Failure::malformed("--h only applies to setcover-t2"))
                }
                (_, Some(h)) => ReductionMode::Amplified { h },
                (_, None) => return Err(Failure::malformed("setcover-t2 needs --h")),
            };
            reduce_set_cover(&sc, mode)?
        }
    };
    let text = instance_to_string(&instance)?;
    match &args.output {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| Failure::malformed(format!("{}: {e}", path.display())))?;
            println!("{}", digest(&text));
        }
        None => print!("{text}"),
    }
    Ok(0)
}
