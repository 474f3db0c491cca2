//! Numerical semigroups with exact arithmetic.
//!
//! A numerical semigroup is a cofinite additive submonoid of the nonnegative
//! integers. Everything here is driven by the Apéry set with respect to the
//! multiplicity m (the least nonzero element): `apery[i]` is the least element
//! congruent to i mod m, which makes membership, Frobenius number and genus
//! O(1) lookups after construction.

use crate::error::{Error, Result};

/// Default cap on search nodes for factorization enumeration.
pub const DEFAULT_FACTORIZATION_NODE_CAP: u64 = 10_000_000;

/// A numerical semigroup, stored through its minimal generators and the
/// Apéry set of the multiplicity. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    multiplicity: u64,
    apery: Vec<u64>,
    frobenius: i64,
    genus: u64,
}

/// The complete set of factorizations of one element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationSet {
    pub element: u64,
    /// Exponent vectors over the minimal generators, in lexicographic order.
    pub factorizations: Vec<Vec<u64>>,
    /// Maximum of the coordinate sums over `factorizations`.
    pub max_length: u64,
}

/// Witness that a semigroup is not homogeneous: an Apéry element together
/// with two factorizations of different lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneityWitness {
    pub element: u64,
    pub short: Vec<u64>,
    pub long: Vec<u64>,
}

impl NumericalSemigroup {
    /// Construct from any generating list with gcd 1. The list is reduced to
    /// the minimal generating set; redundant entries are dropped silently
    /// (scaling transforms naturally produce redundant lists).
    pub fn new(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::input("generator list is empty"));
        }
        if gens.contains(&0) {
            return Err(Error::input("generators must be positive"));
        }
        let mut sorted: Vec<u64> = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let g = sorted.iter().fold(0u64, |acc, &v| gcd(acc, v));
        if g != 1 {
            return Err(Error::input(format!("generators have gcd {g}, expected 1")));
        }

        let m = sorted[0];
        if m == 1 {
            return Ok(NumericalSemigroup {
                generators: vec![1],
                multiplicity: 1,
                apery: vec![0],
                frobenius: -1,
                genus: 0,
            });
        }
        // The Apéry table has one entry per residue class.
        const MULTIPLICITY_CAP: u64 = 10_000_000;
        if m > MULTIPLICITY_CAP {
            return Err(Error::resource(format!(
                "multiplicity {m} exceeds the Apéry table cap {MULTIPLICITY_CAP}"
            )));
        }

        let apery = apery_by_relaxation(m, &sorted);
        let contains = |t: u64| t >= apery[(t % m) as usize];

        // Keep g iff it is not a sum of two nonzero elements.
        let mut minimal = Vec::new();
        for &g in &sorted {
            let mut redundant = false;
            let mut s = m;
            while 2 * s <= g {
                if contains(s) && contains(g - s) {
                    redundant = true;
                    break;
                }
                s += 1;
            }
            if !redundant {
                minimal.push(g);
            }
        }

        let max_apery = *apery.iter().max().expect("nonempty apery");
        let frobenius = max_apery as i64 - m as i64;
        let genus = apery
            .iter()
            .enumerate()
            .map(|(r, &b)| (b - r as u64) / m)
            .sum();

        Ok(NumericalSemigroup {
            generators: minimal,
            multiplicity: m,
            apery,
            frobenius,
            genus,
        })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Embedding dimension: the number of minimal generators.
    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    /// Apéry set of the multiplicity, indexed by residue class.
    pub fn apery(&self) -> &[u64] {
        &self.apery
    }

    /// Largest integer not in the semigroup (-1 for the full monoid).
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Number of gaps.
    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Membership test via the Apéry set.
    pub fn contains(&self, t: u64) -> bool {
        t >= self.apery[(t % self.multiplicity) as usize]
    }

    /// All elements up to and including `bound`, ascending.
    pub fn elements_upto(&self, bound: u64) -> Vec<u64> {
        (0..=bound).filter(|&t| self.contains(t)).collect()
    }

    /// Complete factorization enumeration by bounded depth-first search,
    /// with the default node cap.
    pub fn factorizations(&self, t: u64) -> Result<FactorizationSet> {
        self.factorizations_capped(t, DEFAULT_FACTORIZATION_NODE_CAP)
    }

    /// Complete factorization enumeration. Exponent of generator `a_i` is
    /// bounded by `t / a_i`; the search reports an explicit resource error
    /// if it would visit more than `node_cap` nodes.
    pub fn factorizations_capped(&self, t: u64, node_cap: u64) -> Result<FactorizationSet> {
        if !self.contains(t) {
            return Err(Error::input(format!("{t} is not in the semigroup")));
        }
        let n = self.generators.len();
        let mut out: Vec<Vec<u64>> = Vec::new();
        let mut current = vec![0u64; n];
        let mut nodes = 0u64;
        // Recurse from the largest generator down: fewer branches up top.
        fn dfs(
            gens: &[u64],
            idx: usize,
            remaining: u64,
            current: &mut Vec<u64>,
            out: &mut Vec<Vec<u64>>,
            nodes: &mut u64,
            cap: u64,
        ) -> Result<()> {
            *nodes += 1;
            if *nodes > cap {
                return Err(Error::resource(format!(
                    "factorization search exceeded {cap} nodes"
                )));
            }
            if idx == 0 {
                if remaining.is_multiple_of(gens[0]) {
                    current[0] = remaining / gens[0];
                    out.push(current.clone());
                    current[0] = 0;
                }
                return Ok(());
            }
            let a = gens[idx];
            for e in 0..=remaining / a {
                current[idx] = e;
                dfs(gens, idx - 1, remaining - e * a, current, out, nodes, cap)?;
            }
            current[idx] = 0;
            Ok(())
        }
        dfs(
            &self.generators,
            n - 1,
            t,
            &mut current,
            &mut out,
            &mut nodes,
            node_cap,
        )?;
        out.sort_unstable();
        let max_length = out
            .iter()
            .map(|f| f.iter().sum::<u64>())
            .max()
            .ok_or_else(|| Error::contract(format!("{t} in semigroup but no factorization")))?;
        Ok(FactorizationSet {
            element: t,
            factorizations: out,
            max_length,
        })
    }

    /// Maximum factorization length ("order") of every element up to `bound`,
    /// by dynamic programming. `None` marks gaps.
    pub fn max_lengths_upto(&self, bound: u64) -> Vec<Option<u64>> {
        let mut ord: Vec<Option<u64>> = vec![None; bound as usize + 1];
        ord[0] = Some(0);
        for t in 1..=bound {
            let mut best: Option<u64> = None;
            for &a in &self.generators {
                if a > t {
                    break;
                }
                if let Some(o) = ord[(t - a) as usize] {
                    best = Some(best.map_or(o + 1, |b: u64| b.max(o + 1)));
                }
            }
            ord[t as usize] = best;
        }
        ord
    }

    /// A semigroup is homogeneous when every Apéry element has all its
    /// factorizations of equal length. Returns a witness on failure.
    pub fn is_homogeneous(&self) -> Result<(bool, Option<HomogeneityWitness>)> {
        for &b in &self.apery {
            if b == 0 {
                continue;
            }
            let facs = self.factorizations(b)?;
            let min_len = facs
                .factorizations
                .iter()
                .map(|f| f.iter().sum::<u64>())
                .min()
                .expect("apery element has a factorization");
            if min_len != facs.max_length {
                let short = facs
                    .factorizations
                    .iter()
                    .find(|f| f.iter().sum::<u64>() == min_len)
                    .cloned()
                    .unwrap();
                let long = facs
                    .factorizations
                    .iter()
                    .find(|f| f.iter().sum::<u64>() == facs.max_length)
                    .cloned()
                    .unwrap();
                return Ok((
                    false,
                    Some(HomogeneityWitness {
                        element: b,
                        short,
                        long,
                    }),
                ));
            }
        }
        Ok((true, None))
    }

    /// Independent re-derivation of the Apéry set: sieve the elements bottom
    /// up and take the least one in each residue class. Kept deliberately
    /// separate from the relaxation used by the constructor.
    pub fn apery_brute_force(&self) -> Vec<u64> {
        let m = self.multiplicity as usize;
        let mut found: Vec<Option<u64>> = vec![None; m];
        let mut missing = m;
        // Sieve membership from the generators alone.
        let mut reachable: Vec<bool> = vec![true];
        let mut t: u64 = 0;
        while missing > 0 {
            if reachable[t as usize] {
                let r = (t % self.multiplicity) as usize;
                if found[r].is_none() {
                    found[r] = Some(t);
                    missing -= 1;
                }
            }
            t += 1;
            let next = self
                .generators
                .iter()
                .any(|&a| a <= t && reachable[(t - a) as usize]);
            reachable.push(next);
        }
        found.into_iter().map(|v| v.unwrap()).collect()
    }
}

/// Least element of the semigroup in each residue class mod `m`, by
/// round-robin shortest-path relaxation until a fixed point.
fn apery_by_relaxation(m: u64, gens: &[u64]) -> Vec<u64> {
    let mu = m as usize;
    let mut best: Vec<u64> = vec![u64::MAX; mu];
    best[0] = 0;
    let mut changed = true;
    while changed {
        changed = false;
        for r in 0..mu {
            let b = best[r];
            if b == u64::MAX {
                continue;
            }
            for &a in gens {
                let nr = ((r as u64 + a) % m) as usize;
                let cand = b + a;
                if cand < best[nr] {
                    best[nr] = cand;
                    changed = true;
                }
            }
        }
    }
    best
}

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}
