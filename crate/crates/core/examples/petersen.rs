// Builds the Petersen and Heawood graphs, checks their automorphism groups
// and cycle structure, and classifies the signed Petersen graphs.

use std::sync::Arc;

use signed_graphs::classify::enumerate_isomorphism_classes;
use signed_graphs::graph::{automorphism_group, builtin_graph, enumerate_cycles};

pub fn run_example() -> signed_graphs::Result<usize> {
    let petersen = Arc::new(builtin_graph("petersen", None)?);
    let heawood = builtin_graph("heawood", None)?;
    println!(
        "Petersen automorphisms: {}",
        automorphism_group(&petersen)?.order()
    );
    println!(
        "Heawood automorphisms: {}",
        automorphism_group(&heawood)?.order()
    );

    let cycles = enumerate_cycles(&petersen, 6)?;
    for k in [5, 6] {
        println!(
            "Petersen {k}-cycles: {}",
            cycles.iter().filter(|c| c.len() == k).count()
        );
    }

    let classes = enumerate_isomorphism_classes(petersen, 1)?;
    for class in &classes {
        println!(
            "frustration {}  size {:>4}  min rep {{{}}}",
            class.frustration, class.class_size, class.min_rep
        );
    }
    println!(
        "{} signed Petersen graphs up to switching isomorphism",
        classes.len()
    );
    Ok(classes.len())
}

fn main() -> signed_graphs::Result<()> {
    run_example().map(drop)
}
