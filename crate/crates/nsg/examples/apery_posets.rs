//! Apéry posets: definitional construction, the closed-form covers of a
//! lattice-path semigroup, and DOT export for Hasse diagrams.
//!
//! ```bash
//! cargo run --example apery_posets
//! ```

use nsg::kw::KwSemigroup;
use nsg::poset::AperyPoset;
use nsg::semigroup::NumericalSemigroup;

fn main() -> nsg::Result<()> {
    let s = NumericalSemigroup::new(&[8, 17, 60, 69, 78])?;
    let poset = AperyPoset::of_semigroup(&s);
    println!("covers of P(<8,17,60,69,78>):");
    for &(i, j) in poset.covers() {
        println!("  {i} < {j}");
    }
    println!("graded: {}", poset.is_graded());

    // The closed-form cover rule agrees with the definition here.
    let k = KwSemigroup::new(8, 17, &[1, 2, 3], &[4, 3, 2])?;
    let formula = AperyPoset::of_kw(&k)?;
    println!("closed form matches: {}", formula.labeled_eq(&poset));

    // Two different semigroups with the same labeled poset.
    let a = AperyPoset::of_semigroup(&NumericalSemigroup::new(&[5, 13, 14, 17])?);
    let b = AperyPoset::of_semigroup(&NumericalSemigroup::new(&[5, 8, 9, 12])?);
    println!(
        "P(<5,13,14,17>) equals P(<5,8,9,12>) as labeled posets: {}",
        a.labeled_eq(&b)
    );

    // An element with many lower covers: 44 = 19 + 25 = 21 + 23.
    let t = AperyPoset::of_semigroup(&NumericalSemigroup::new(&[17, 19, 21, 23, 25])?);
    println!(
        "lower covers of label 10 in P(<17,19,21,23,25>): {:?}",
        t.lower_covers(10)
    );

    println!("\nDOT of P(<5,13,14,17>):\n{}", a.to_dot());
    Ok(())
}
