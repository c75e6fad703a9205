// Counts edge sets of K6 up to automorphism, by size, with and without a
// bound on the maximum vertex degree.

use signed_graphs::classify::{automorphic_type_count, automorphic_types};
use signed_graphs::Graph;

pub fn run_example() -> signed_graphs::Result<Vec<usize>> {
    let k6 = Graph::complete(6)?;
    let mut counts = Vec::new();
    println!("size  types(max degree 2)  types(any degree)");
    for size in 0..=6 {
        let bounded = automorphic_type_count(&k6, size, 2)?;
        let any = automorphic_type_count(&k6, size, 5)?;
        println!("{size:>4}  {bounded:>19}  {any:>17}");
        counts.push(bounded);
    }
    for set in automorphic_types(&k6, 6, 2)? {
        let edges: Vec<_> = set.iter().map(|e| k6.edge(e)).collect();
        println!("6 edges, degree <= 2: {edges:?}");
    }
    Ok(counts)
}

fn main() -> signed_graphs::Result<()> {
    run_example().map(drop)
}
