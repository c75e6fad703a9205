// Switching a signature at a vertex set, reducing it to its coset
// representative, and recovering the switching set between two signatures.

use std::sync::Arc;

use signed_graphs::signed::Gf2Basis;
use signed_graphs::{Graph, Signature};

pub fn run_example() -> signed_graphs::Result<()> {
    let k6 = Arc::new(Graph::complete(6)?);
    let basis = Gf2Basis::new(Arc::clone(&k6));
    println!("cut space of K6 has rank {}", basis.rank());

    let sig = Signature::parse(Arc::clone(&k6), "0-1,1-2,2-3")?;
    let switched = sig.switch(&[1, 4])?;
    println!("{sig}  switched at {{1,4}}  ->  {switched}");

    let reduced = switched.coset_reduce(&basis)?;
    println!("coset representative: {reduced}");
    assert_eq!(reduced, sig.coset_reduce(&basis)?);

    let witness = sig
        .switching_witness(&switched)?
        .expect("same switching class");
    println!("recovered switching set: {:?}", witness.to_vec());
    assert_eq!(sig.switch_set(witness), switched);

    let all_negative = Signature::from_bits(Arc::clone(&k6), k6.all_edges())?;
    println!("all-negative K6 balanced: {}", all_negative.is_balanced());
    let bipartite_cut = Signature::empty(Arc::clone(&k6)).switch(&[0, 2, 4])?;
    println!(
        "cut {bipartite_cut} balanced: {}",
        bipartite_cut.is_balanced()
    );
    Ok(())
}

fn main() -> signed_graphs::Result<()> {
    run_example()
}
