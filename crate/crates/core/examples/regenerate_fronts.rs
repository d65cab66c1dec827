//! Rebuilds the bundled POL and KUR reference fronts under `data/`.
//!
//! ```text
//! cargo run --release -p otnsga --example regenerate_fronts
//! ```

use std::fs::File;
use std::io::BufWriter;
use std::path::Path;

use otnsga::problems::{brute_force_front, write_front, Benchmark};

const KEEP: usize = 1000;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    for (b, per_dim) in [(Benchmark::Pol, 2001), (Benchmark::Kur, 201)] {
        let front = brute_force_front(b, per_dim, KEEP)?;
        let path = data.join(format!("{}.front", b.name().to_lowercase()));
        let comments = vec![
            format!("{} reference Pareto front", b.name()),
            format!(
                "brute force: {per_dim} points per decision dimension ({} evaluations), non-dominated set thinned to <= {KEEP}",
                (per_dim as u64).pow(b.n_vars() as u32)
            ),
            "regenerate with: cargo run --release -p otnsga --example regenerate_fronts".to_string(),
        ];
        write_front(BufWriter::new(File::create(&path)?), &front, &comments)?;
        println!("{}: {} points -> {}", b.name(), front.len(), path.display());
    }
    Ok(())
}
