// Enumerates the switching-isomorphism classes of signed K6 and prints each
// class with the published label of its representative.

use std::sync::Arc;

use signed_graphs::classify::Classifier;
use signed_graphs::reference::k6_class_labels;
use signed_graphs::Graph;

pub fn run_example() -> signed_graphs::Result<usize> {
    let classifier = Classifier::new(Arc::new(Graph::complete(6)?))?;
    let labels = k6_class_labels(&classifier)?;
    let classes = classifier.isomorphism_classes(2)?;
    println!(
        "{:<5} {:>6} {:>13} {:>3}  min rep",
        "class", "size", "|C3-,C4-,C5-|", "fr"
    );
    for class in &classes {
        let label = labels
            .get(&class.canonical.bits().0)
            .map_or("?", String::as_str);
        let (c3, c4, c5) = class.spectrum.triple();
        println!(
            "{label:<5} {:>6} {:>13} {:>3}  {}",
            class.class_size,
            format!("({c3},{c4},{c5})"),
            class.frustration,
            class.min_rep
        );
    }
    println!("{} classes", classes.len());
    Ok(classes.len())
}

fn main() -> signed_graphs::Result<()> {
    run_example().map(drop)
}
