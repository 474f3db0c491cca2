//! The poset characterization pipeline: decompose a labeled poset into
//! chain-and-branches data, check the arithmetic conditions, and realize a
//! lattice-path semigroup from valid data.
//!
//! ```bash
//! cargo run --example poset_characterization
//! ```

use nsg::poset::{AperyPoset, Primality};
use nsg::semigroup::NumericalSemigroup;

fn main() -> nsg::Result<()> {
    let s = NumericalSemigroup::new(&[5, 13, 14, 17])?;
    let poset = AperyPoset::of_semigroup(&s);

    let data = poset.decompose().expect("matches the pattern");
    println!(
        "decomposition: a = {}, ell0 = {}, branches = {:?}",
        data.a, data.ell0, data.branches
    );

    let check = data.check(Primality::Strict)?;
    println!("conditions: {:?}", check.conditions);
    println!("y sorted: {:?}", check.y_sorted);

    let realized = data.realize(None, None, Primality::Strict)?;
    println!(
        "realized: p = {}, q = {}, generators = {:?}",
        realized.p(),
        realized.q(),
        realized.semigroup().generators()
    );
    let back = AperyPoset::of_kw(&realized)?;
    println!(
        "realized poset equals the input poset: {}",
        back.labeled_eq(&poset)
    );

    // A poset that does not match the pattern at all.
    let t = NumericalSemigroup::new(&[17, 19, 21, 23, 25])?;
    let p = AperyPoset::of_semigroup(&t);
    println!(
        "P(<17,19,21,23,25>) decomposes: {:?}",
        p.decompose().is_some()
    );

    // A composite modulus needs relaxed mode.
    let eight = NumericalSemigroup::new(&[8, 17, 60, 69, 78])?;
    let p8 = AperyPoset::of_semigroup(&eight);
    if let Some(d) = p8.decompose() {
        match d.check(Primality::Strict) {
            Err(e) => println!("strict mode on modulus 8: {e}"),
            Ok(_) => unreachable!("8 is composite"),
        }
        let relaxed = d.check(Primality::Relaxed)?;
        println!(
            "relaxed mode: conditions {:?}, warning = {}",
            relaxed.conditions, relaxed.relaxed_warning
        );
    }
    Ok(())
}
