//! Construct numerical semigroups and query their basic invariants.
//!
//! ```bash
//! cargo run --example semigroup_basics
//! ```

use nsg::semigroup::NumericalSemigroup;

fn main() -> nsg::Result<()> {
    let s = NumericalSemigroup::new(&[8, 17, 60, 69, 78])?;
    println!("generators:  {:?}", s.generators());
    println!("multiplicity: {}", s.multiplicity());
    println!("frobenius:    {}", s.frobenius());
    println!("genus:        {}", s.genus());

    let mut apery = s.apery().to_vec();
    apery.sort_unstable();
    println!("apery set:    {apery:?}");

    // Membership is an O(1) lookup once the Apéry set is known.
    for t in [52u64, 60, 87, 88] {
        println!("contains({t}) = {}", s.contains(t));
    }

    // Redundant generators are dropped silently.
    let t = NumericalSemigroup::new(&[9, 4, 5])?;
    println!("minimalized [9,4,5] -> {:?}", t.generators());

    // Complete factorization enumeration with maximal lengths.
    let s = NumericalSemigroup::new(&[17, 19, 21, 23, 25])?;
    let f = s.factorizations(44)?;
    println!("factorizations of 44 in <17,19,21,23,25>:");
    for alpha in &f.factorizations {
        println!("  {alpha:?}");
    }
    println!("max length: {}", f.max_length);

    // Homogeneity: all factorizations of Apéry elements share one length.
    let (hom, witness) = s.is_homogeneous()?;
    println!("homogeneous: {hom} (witness: {witness:?})");
    Ok(())
}
