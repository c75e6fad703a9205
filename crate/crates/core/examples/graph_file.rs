// Reads a graph in the line-based text format and classifies its signatures.

use std::sync::Arc;

use signed_graphs::classify::Classifier;
use signed_graphs::Graph;

const PRISM: &str = "\
# triangular prism
n 6
e 0 1
e 1 2
e 2 0
e 3 4
e 4 5
e 5 3
e 0 3
e 1 4
e 2 5
";

pub fn run_example() -> signed_graphs::Result<usize> {
    let g = Arc::new(Graph::parse(PRISM)?);
    println!(
        "{} vertices, {} edges, cycle space dimension {}",
        g.vertex_count(),
        g.edge_count(),
        g.cyclomatic_number()
    );
    let classifier = Classifier::new(Arc::clone(&g))?;
    println!("automorphism group order {}", classifier.group().order());
    let classes = classifier.isomorphism_classes(1)?;
    for class in &classes {
        println!("{}", class.to_json());
    }
    print!("{}", g.to_text());
    Ok(classes.len())
}

fn main() -> signed_graphs::Result<()> {
    run_example().map(drop)
}
