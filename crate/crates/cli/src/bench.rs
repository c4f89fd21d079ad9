use std::time::Instant;

use bandinv::verify::random_full_band_stencil;
use bandinv::{with_field, Algorithm, OpCounter, Phase};
use clap::Args;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::{parse_field, Failure};

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Half-bandwidths, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    k: Vec<usize>,
    /// Sequence lengths, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    #[arg(long)]
    field: String,
    /// Algorithms, comma separated (sliding, naive).
    #[arg(long, value_delimiter = ',', default_value = "sliding")]
    algo: Vec<Algorithm>,
    /// Seed for the random stencils (one per k).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit CSV with a header row instead of a table.
    #[arg(long)]
    csv: bool,
}

#[derive(Debug, Serialize)]
struct Row {
    k: usize,
    n: usize,
    algo: String,
    wall_ms: f64,
    generate_muldiv: u64,
    eliminate_mul: u64,
    /// k(2k+1)n + k²n/2; sliding rows only.
    budget: Option<u64>,
    singular: usize,
}

fn budget(k: usize, n: usize) -> u64 {
    let (k, n) = (k as u64, n as u64);
    k * (2 * k + 1) * n + k * k * n / 2
}

pub fn run(args: &BenchArgs) -> Result<String, Failure> {
    if args.k.contains(&0) || args.n.contains(&0) {
        return Err(Failure::usage("--k and --n values must be positive"));
    }
    if args.algo.contains(&Algorithm::Dense) {
        return Err(Failure::usage("bench supports --algo sliding and naive"));
    }
    let spec = parse_field(&args.field)?;
    let mut rows = Vec::new();
    with_field!(spec, |f| {
        for &k in &args.k {
            let mut rng =
                ChaCha8Rng::seed_from_u64(args.seed ^ (k as u64).wrapping_mul(0x9e37_79b9));
            let s = random_full_band_stencil(&f, k, &mut rng);
            for &n in &args.n {
                for &algo in &args.algo {
                    let mut c = OpCounter::new();
                    let start = Instant::now();
                    let seq = algo.run(&s, n, &mut c).map_err(Failure::invalid)?;
                    let wall = start.elapsed();
                    rows.push(Row {
                        k,
                        n,
                        algo: algo.to_string(),
                        wall_ms: wall.as_secs_f64() * 1e3,
                        generate_muldiv: c.tally(Phase::Generate).mul_div(),
                        eliminate_mul: c.tally(Phase::Eliminate).muls,
                        budget: (algo == Algorithm::Sliding).then(|| budget(k, n)),
                        singular: seq.singular_orders().len(),
                    });
                }
            }
        }
        Ok::<(), Failure>(())
    })?;
    if args.csv {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &rows {
            w.serialize(row)
                .map_err(|e| Failure::usage(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| Failure::usage(e.to_string()))?;
        return Ok(String::from_utf8(bytes)
            .expect("csv is utf-8")
            .trim_end()
            .to_string());
    }
    let mut out = format!(
        "{:>3} {:>9} {:>8} {:>11} {:>16} {:>13} {:>14} {:>9}",
        "k", "n", "algo", "wall_ms", "generate_mul+div", "eliminate_mul", "budget", "singular"
    );
    for r in &rows {
        out.push('\n');
        out.push_str(&format!(
            "{:>3} {:>9} {:>8} {:>11.3} {:>16} {:>13} {:>14} {:>9}",
            r.k,
            r.n,
            r.algo,
            r.wall_ms,
            r.generate_muldiv,
            r.eliminate_mul,
            r.budget.map_or_else(|| "-".to_string(), |b| b.to_string()),
            r.singular
        ));
    }
    Ok(out)
}
