// Lists the cycles of K4 with their signs under a signature, and the
// negative cycle counts by length.

use std::sync::Arc;

use signed_graphs::graph::enumerate_cycles;
use signed_graphs::{Graph, Signature};

pub fn run_example() -> signed_graphs::Result<()> {
    let k4 = Arc::new(Graph::complete(4)?);
    let sig = Signature::parse(Arc::clone(&k4), "0-1")?;
    for cycle in enumerate_cycles(&k4, 4)? {
        println!("{:?}  {:?}", cycle.vertices(), sig.cycle_sign(&cycle)?);
    }
    let spectrum = sig.negative_cycle_spectrum(4)?;
    for (k, count) in spectrum.counts() {
        println!("|C{k}-| = {count}");
    }
    println!("unbalanced cycles: {}", sig.unbalanced_cycle_set().len());
    Ok(())
}

fn main() -> signed_graphs::Result<()> {
    run_example()
}
