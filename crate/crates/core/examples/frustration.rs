// Frustration index and a minimum-size representative for a few signatures,
// followed by the degree bound on minimal representatives of K6.

use std::sync::Arc;

use signed_graphs::classify::{check_min_degree_bound, frustration_index, max_negative_degree};
use signed_graphs::{Graph, Signature};

pub fn run_example() -> signed_graphs::Result<bool> {
    let k6 = Arc::new(Graph::complete(6)?);
    for text in [
        "",
        "0-1,2-3,4-5",
        "0-1,0-2,0-3,0-4,0-5",
        "0-1,1-2,0-2,3-4,4-5,3-5",
    ] {
        let sig = Signature::parse(Arc::clone(&k6), text)?;
        let (size, rep) = frustration_index(&sig)?;
        println!(
            "{{{sig}}}: frustration {size}, representative {{{rep}}}, max negative degree {}",
            max_negative_degree(&rep)
        );
    }
    let bound = check_min_degree_bound(k6)?;
    println!("every K6 class has a minimal representative of negative degree at most 2: {bound}");
    Ok(bound)
}

fn main() -> signed_graphs::Result<()> {
    run_example().map(drop)
}
