//! The lattice-path parametrization: construction, the path bijection,
//! enumeration over a fixed pair, and the membership test.
//!
//! ```bash
//! cargo run --example kw_lattice_paths
//! ```

use nsg::kw::{enumerate_kw, find_kw_witness, is_kw, KwSemigroup, LatticePath};
use nsg::semigroup::NumericalSemigroup;

fn main() -> nsg::Result<()> {
    // h_i = pq − x_i·p − y_i·q
    let k = KwSemigroup::new(8, 17, &[1, 2, 3], &[4, 3, 2])?;
    println!("KW(8,17) with x = {:?}, y = {:?}", k.x(), k.y());
    println!("  h = {:?}", k.h());
    println!("  generators = {:?}", k.semigroup().generators());

    let path = k.lattice_path();
    println!(
        "  path corners {:?} in the {}x{} rectangle",
        path.corners, path.q_prime, path.p_prime
    );
    let back = LatticePath::realize(8, 17, &path.corners)?;
    assert_eq!(back, k);
    println!("  corner data reproduces the semigroup");

    // All members over (5, 8): one per monotone lattice path.
    let e = enumerate_kw(5, 8, None)?;
    println!(
        "enumerate over (5,8): {} candidates, {} valid, {} skipped",
        e.candidates,
        e.semigroups.len(),
        e.skipped
    );
    for k in &e.semigroups {
        println!(
            "  x={:?} y={:?} -> {:?}",
            k.x(),
            k.y(),
            k.semigroup().generators()
        );
    }

    // The containment test <p,q> strictly inside S inside <p,q,r>.
    let s = NumericalSemigroup::new(&[5, 13, 14, 17])?;
    for (p, q) in [(5u64, 13u64), (5, 14), (5, 17)] {
        println!("is_kw(<5,13,14,17>, {p}, {q}) = {}", is_kw(&s, p, q)?);
    }
    println!(
        "witness search over element pairs: {:?}",
        find_kw_witness(&s, None)?
    );

    let h = NumericalSemigroup::new(&[5, 8, 9, 12])?;
    println!("witness for <5,8,9,12>: {:?}", find_kw_witness(&h, None)?);

    // Determinantal pattern x_i = i·x, y_i = (n−1−i)·y.
    let det = KwSemigroup::new(8, 17, &[1, 2, 3], &[3, 2, 1])?;
    println!(
        "determinantal pattern of x={:?}, y={:?}: {:?}",
        det.x(),
        det.y(),
        det.determinantal_pattern()
    );
    Ok(())
}
