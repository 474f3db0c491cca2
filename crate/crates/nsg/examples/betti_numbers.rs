//! Graded Betti numbers two ways: the homology oracle over squarefree
//! divisor complexes, against the closed form i·C(n, i+1).
//!
//! ```bash
//! cargo run --release --example betti_numbers
//! ```

use nsg::kw::betti_formula;
use nsg::resolution::{betti_oracle, divisor_complex, verify_kw_betti, Field};
use nsg::semigroup::NumericalSemigroup;

fn main() -> nsg::Result<()> {
    // A divisor complex: faces are generator subsets that divide 44.
    let s = NumericalSemigroup::new(&[17, 19, 21, 23, 25])?;
    let complex = divisor_complex(&s, 44)?;
    println!(
        "faces of the divisor complex at degree 44: {:?}",
        complex.faces
    );
    println!(
        "reduced homology dims: {:?}",
        complex.reduced_homology_dims(Field::Rationals)?
    );

    // Full graded tables.
    let table = betti_oracle(&s, Field::Rationals)?;
    println!("betti totals of <17,19,21,23,25>: {:?}", table.totals());
    println!("closed form for n = 5:            {:?}", betti_formula(5)?);
    println!("graded beta_1 entries: {:?}", table.graded_row(1));

    for gens in [vec![5u64, 13, 14, 17], vec![5, 8, 9, 12]] {
        let t = betti_oracle(&NumericalSemigroup::new(&gens)?, Field::Rationals)?;
        println!("betti of {gens:?}: {:?}", t.totals());
    }

    // A small sweep of the closed form against the oracle. Mismatches are
    // confined to one-corner paths touching the boundary of the parameter
    // rectangle, where the semigroup degenerates to a complete
    // intersection.
    let report = verify_kw_betti(60, Field::Rationals)?;
    println!(
        "sweep pq <= 60: {} instances, {} mismatches",
        report.instances, report.mismatches
    );
    for r in report.records.iter().filter(|r| !r.matches) {
        println!(
            "  boundary case p={} q={} x={:?} y={:?}: oracle {:?} vs closed form {:?}",
            r.p, r.q, r.x, r.y, r.betti, r.expected
        );
    }
    Ok(())
}
