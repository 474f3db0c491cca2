//! Tangent cones: defining binomials, the Cohen–Macaulay criterion,
//! minimal generators of the ideal of initial forms, and the obstruction
//! witness in the non-CM case.
//!
//! ```bash
//! cargo run --release --example tangent_cones
//! ```

use nsg::ideal::{
    binomial_to_string, cm_check, cm_initial_generators, defining_ideal, find_cm_obstruction,
    multiplicity_variable_condition, same_ideal, tangent_cone_ideal,
};
use nsg::kw::KwSemigroup;

fn main() -> nsg::Result<()> {
    // A Cohen–Macaulay example.
    let k = KwSemigroup::new(5, 8, &[3], &[1])?;
    println!("<5,8,17>:");
    println!("defining ideal:\n{}", defining_ideal(&k)?.printout());
    let report = cm_check(&k);
    println!("{}", report.summary);
    let (cone, mu) = tangent_cone_ideal(&k)?;
    println!("initial-form ideal (mu = {mu}):\n{}", cone.printout());
    let closed = cm_initial_generators(&k)?;
    println!(
        "closed-form generators cut the same ideal: {}",
        same_ideal(&cone, &closed)?
    );
    println!(
        "multiplicity-variable condition on the defining set: {}",
        multiplicity_variable_condition(&defining_ideal(&k)?, 0)
    );

    // The three non-CM showcases.
    for (x, y) in [
        (vec![1u64, 2, 3], vec![4u64, 3, 2]),
        (vec![2, 4, 6], vec![3, 2, 1]),
        (vec![3, 4, 7], vec![4, 2, 1]),
    ] {
        let k = KwSemigroup::new(8, 17, &x, &y)?;
        let gens = k.semigroup().generators().to_vec();
        let report = cm_check(&k);
        let (_, mu) = tangent_cone_ideal(&k)?;
        println!("\n{gens:?}: {} — mu = {mu}", report.summary);
        let witness = find_cm_obstruction(&k)?;
        println!(
            "obstruction witness: {}",
            binomial_to_string(&witness, k.embedding_dimension())
        );
    }
    Ok(())
}
