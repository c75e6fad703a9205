// Finds an explicit automorphism and switching set carrying one signed K6
// onto another, and shows that distinct spectra separate classes.

use std::sync::Arc;

use signed_graphs::classify::Classifier;
use signed_graphs::reference::k6_representatives_on;
use signed_graphs::Graph;

pub fn run_example() -> signed_graphs::Result<()> {
    let k6 = Arc::new(Graph::complete(6)?);
    let classifier = Classifier::new(Arc::clone(&k6))?;
    let reps = k6_representatives_on(&k6)?;

    for (a, b) in [(6, 17), (10, 14), (13, 9), (1, 3)] {
        let (sa, sb) = (&reps[&a], &reps[&b]);
        match classifier.is_switching_isomorphic(sa, sb)? {
            Some(w) => {
                assert!(w.verify(sa, sb));
                println!(
                    "Σ{a} ~ Σ{b}: permutation {:?}, switch at {:?}",
                    w.perm.images(),
                    w.switch_set.to_vec()
                );
            }
            None => {
                let table = classifier.cycle_table();
                println!(
                    "Σ{a} and Σ{b} differ: spectra {:?} vs {:?}",
                    table.spectrum(sa.bits()).triple(),
                    table.spectrum(sb.bits()).triple()
                );
            }
        }
    }
    Ok(())
}

fn main() -> signed_graphs::Result<()> {
    run_example()
}
