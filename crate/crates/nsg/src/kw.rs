//! Kunz–Waldi semigroups.
//!
//! For coprime p < q let 2r be whichever of p, q, p+q is even. A semigroup H
//! with ⟨p,q⟩ ⊊ H ⊆ ⟨p,q,r⟩ is parametrized by two integer sequences
//! 0 < x_1 < … < x_d ≤ q/2 and p/2 ≥ y_1 > … > y_d > 0 through the extra
//! generators h_i = pq − x_i·p − y_i·q, and corresponds to the lattice path
//! with corners (x_i − 1, y_i − 1) inside the (⌊q/2⌋ × ⌊p/2⌋) rectangle.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;
use crate::semigroup::{gcd, lcm, NumericalSemigroup};

/// A Kunz–Waldi semigroup together with its parametrization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KwSemigroup {
    p: u64,
    q: u64,
    r: u64,
    x: Vec<u64>,
    y: Vec<u64>,
    h: Vec<u64>,
    semigroup: NumericalSemigroup,
}

/// Corners of the monotone lattice path encoding a Kunz–Waldi semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePath {
    pub p: u64,
    pub q: u64,
    /// ⌊p/2⌋ and ⌊q/2⌋: the rectangle is [0, q′−1] × [0, p′−1].
    pub p_prime: u64,
    pub q_prime: u64,
    /// (x_i − 1, y_i − 1), first coordinates strictly increasing.
    pub corners: Vec<(u64, u64)>,
}

/// Result of enumerating all parametrizations over a fixed pair (p, q).
#[derive(Debug, Clone)]
pub struct KwEnumeration {
    pub semigroups: Vec<KwSemigroup>,
    /// Number of (x, y) candidates examined.
    pub candidates: usize,
    /// Candidates whose generator set failed to be minimal.
    pub skipped: usize,
}

/// Half of whichever of p, q, p+q is even.
pub fn half_even(p: u64, q: u64) -> Result<u64> {
    if gcd(p, q) != 1 {
        return Err(Error::input(format!("p = {p} and q = {q} are not coprime")));
    }
    if p.is_multiple_of(2) {
        Ok(p / 2)
    } else if q.is_multiple_of(2) {
        Ok(q / 2)
    } else {
        Ok((p + q) / 2)
    }
}

impl KwSemigroup {
    /// Build and validate a Kunz–Waldi semigroup from its parametrization.
    pub fn new(p: u64, q: u64, x: &[u64], y: &[u64]) -> Result<Self> {
        if p < 2 || q < 2 || p >= q {
            return Err(Error::input(format!(
                "need 2 <= p < q, got p = {p}, q = {q}"
            )));
        }
        let r = half_even(p, q)?;
        if x.len() != y.len() || x.is_empty() {
            return Err(Error::input(
                "x and y must have the same nonzero length".to_string(),
            ));
        }
        let d = x.len();
        for i in 0..d {
            if x[i] == 0 || (i > 0 && x[i] <= x[i - 1]) {
                return Err(Error::input(format!(
                    "x must be strictly increasing: {x:?}"
                )));
            }
            if y[i] == 0 || (i > 0 && y[i] >= y[i - 1]) {
                return Err(Error::input(format!(
                    "y must be strictly decreasing: {y:?}"
                )));
            }
        }
        if 2 * x[d - 1] > q {
            return Err(Error::input(format!("x_d = {} exceeds q/2", x[d - 1])));
        }
        if 2 * y[0] > p {
            return Err(Error::input(format!("y_1 = {} exceeds p/2", y[0])));
        }

        let pq = p
            .checked_mul(q)
            .ok_or_else(|| Error::input("p*q overflows".to_string()))?;
        let h: Vec<u64> = x
            .iter()
            .zip(y)
            .map(|(&xi, &yi)| pq - xi * p - yi * q)
            .collect();

        let mut gens = vec![p, q];
        gens.extend_from_slice(&h);
        let semigroup = NumericalSemigroup::new(&gens)?;

        let mut expected: Vec<u64> = gens.clone();
        expected.sort_unstable();
        expected.dedup();
        if semigroup.generators() != expected.as_slice() || expected.len() != d + 2 {
            return Err(Error::input(format!(
                "{{p, q, h_i}} = {gens:?} is not a minimal generating set"
            )));
        }

        // ⟨p,q⟩ ⊊ H is implied by minimality of the h_i; check H ⊆ ⟨p,q,r⟩.
        let ambient = NumericalSemigroup::new(&[p, q, r])?;
        for &hi in &h {
            if !ambient.contains(hi) {
                return Err(Error::contract(format!(
                    "h = {hi} lies outside <p, q, r> = <{p}, {q}, {r}>"
                )));
            }
        }

        Ok(KwSemigroup {
            p,
            q,
            r,
            x: x.to_vec(),
            y: y.to_vec(),
            h,
            semigroup,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Half of whichever of p, q, p+q is even.
    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn x(&self) -> &[u64] {
        &self.x
    }

    pub fn y(&self) -> &[u64] {
        &self.y
    }

    /// The derived generators h_i = pq − x_i·p − y_i·q, in parameter order.
    pub fn h(&self) -> &[u64] {
        &self.h
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    /// Embedding dimension n = d + 2.
    pub fn embedding_dimension(&self) -> usize {
        self.x.len() + 2
    }

    /// The lattice path with corners (x_i − 1, y_i − 1).
    pub fn lattice_path(&self) -> LatticePath {
        LatticePath {
            p: self.p,
            q: self.q,
            p_prime: self.p / 2,
            q_prime: self.q / 2,
            corners: self
                .x
                .iter()
                .zip(&self.y)
                .map(|(&xi, &yi)| (xi - 1, yi - 1))
                .collect(),
        }
    }

    /// Tests whether the parametrization is the determinantal pattern
    /// x_i = i·x, y_i = (n−1−i)·y; returns the pair (x, y) when it is.
    pub fn determinantal_pattern(&self) -> Option<(u64, u64)> {
        let d = self.x.len();
        let n = d + 2;
        let x = self.x[0];
        let y = self.y[d - 1];
        for i in 1..=d {
            if self.x[i - 1] != (i as u64) * x {
                return None;
            }
            if self.y[i - 1] != ((n - 1 - i) as u64) * y {
                return None;
            }
        }
        if 2 * (d as u64) * x > self.q || 2 * (d as u64) * y > self.p {
            return None;
        }
        Some((x, y))
    }
}

impl LatticePath {
    /// Validate corner data and rebuild a Kunz–Waldi semigroup.
    pub fn realize(p: u64, q: u64, corners: &[(u64, u64)]) -> Result<KwSemigroup> {
        let p_prime = p / 2;
        let q_prime = q / 2;
        for &(cx, cy) in corners {
            if cx >= q_prime || cy >= p_prime {
                return Err(Error::input(format!(
                    "corner ({cx}, {cy}) outside rectangle {q_prime} x {p_prime}"
                )));
            }
        }
        let x: Vec<u64> = corners.iter().map(|&(cx, _)| cx + 1).collect();
        let y: Vec<u64> = corners.iter().map(|&(_, cy)| cy + 1).collect();
        KwSemigroup::new(p, q, &x, &y)
    }
}

/// All Kunz–Waldi semigroups over (p, q), one per lattice path, eagerly,
/// with candidates that fail minimal generation counted and skipped.
pub fn enumerate_kw(p: u64, q: u64, max_n: Option<usize>) -> Result<KwEnumeration> {
    if gcd(p, q) != 1 || p >= q || p < 2 {
        return Err(Error::input(format!("invalid pair (p, q) = ({p}, {q})")));
    }
    let xh = q / 2;
    let yh = p / 2;
    let d_cap = (xh.min(yh) as usize).min(max_n.map_or(usize::MAX, |n| n.saturating_sub(2)));
    let mut semigroups = Vec::new();
    let mut candidates = 0;
    let mut skipped = 0;
    for d in 1..=d_cap {
        let xs = combinations(xh, d);
        let ys = combinations(yh, d);
        for x in &xs {
            for y in &ys {
                let y_desc: Vec<u64> = y.iter().rev().copied().collect();
                candidates += 1;
                match KwSemigroup::new(p, q, x, &y_desc) {
                    Ok(k) => semigroups.push(k),
                    Err(Error::Input(_)) => skipped += 1,
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(KwEnumeration {
        semigroups,
        candidates,
        skipped,
    })
}

/// All coprime pairs 3 <= p < q with p*q <= budget, ascending.
pub fn coprime_pairs_within(budget: u64) -> Vec<(u64, u64)> {
    let mut pairs = Vec::new();
    let mut p = 3;
    while p * (p + 1) <= budget {
        let mut q = p + 1;
        while p * q <= budget {
            if gcd(p, q) == 1 {
                pairs.push((p, q));
            }
            q += 1;
        }
        p += 1;
    }
    pairs
}

/// Strictly increasing d-subsets of {1, ..., top}, lexicographic.
fn combinations(top: u64, d: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    if (top as usize) < d {
        return out;
    }
    let mut cur: Vec<u64> = (1..=d as u64).collect();
    loop {
        out.push(cur.clone());
        // Advance to the next combination.
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < top - (d - 1 - i) as u64 {
                cur[i] += 1;
                for j in i + 1..d {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Does S satisfy ⟨p,q⟩ ⊊ S ⊆ ⟨p,q,r⟩? Errors when p or q is missing from S
/// or the pair is not coprime.
pub fn is_kw(s: &NumericalSemigroup, p: u64, q: u64) -> Result<bool> {
    if p >= q {
        return Err(Error::input(format!("need p < q, got ({p}, {q})")));
    }
    let r = half_even(p, q)?;
    if !s.contains(p) || !s.contains(q) {
        return Err(Error::input(format!(
            "p = {p} or q = {q} is not an element of the semigroup"
        )));
    }
    let ambient = NumericalSemigroup::new(&[p, q, r])?;
    if !s.generators().iter().all(|&g| ambient.contains(g)) {
        return Ok(false);
    }
    let floor = NumericalSemigroup::new(&[p, q])?;
    let strictly_larger = s.generators().iter().any(|&g| !floor.contains(g));
    Ok(strictly_larger)
}

/// Search coprime element pairs p < q of S up to `bound` (default:
/// frobenius + sum of minimal generators) for one with `is_kw`. The search
/// is exhaustive within the bound only.
pub fn find_kw_witness(s: &NumericalSemigroup, bound: Option<u64>) -> Result<Option<(u64, u64)>> {
    let default = s.frobenius().max(0) as u64 + s.generators().iter().sum::<u64>();
    let bound = bound.unwrap_or(default);
    let elements: Vec<u64> = s
        .elements_upto(bound)
        .into_iter()
        .filter(|&e| e >= 2)
        .collect();
    for (i, &p) in elements.iter().enumerate() {
        for &q in &elements[i + 1..] {
            if gcd(p, q) != 1 {
                continue;
            }
            if is_kw(s, p, q)? {
                return Ok(Some((p, q)));
            }
        }
    }
    Ok(None)
}

/// Closed-form Betti numbers of a Kunz–Waldi semigroup of embedding
/// dimension n: beta_0 = 1 and beta_i = i * C(n, i+1) for 1 <= i <= n-1.
pub fn betti_formula(n: usize) -> Result<Vec<u64>> {
    if n < 3 {
        return Err(Error::input(format!(
            "embedding dimension {n} < 3 has no Kunz–Waldi parametrization"
        )));
    }
    let mut betti = vec![1u64];
    for i in 1..n {
        betti.push(i as u64 * binomial(n as u64, i as u64 + 1));
    }
    Ok(betti)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// λ_i = min { b > 0 : b·a_i lies in the group generated by the other
/// columns }, or None when no such b exists. Columns are vectors in N^m.
pub fn lambda_min(columns: &[Vec<u64>], index: usize) -> Result<Option<u64>> {
    if columns.is_empty() {
        return Err(Error::input("empty generator list".to_string()));
    }
    if index >= columns.len() {
        return Err(Error::input(format!("index {index} out of range")));
    }
    let m = columns[0].len();
    if columns.iter().any(|c| c.len() != m) || m == 0 {
        return Err(Error::input(
            "columns must share a positive dimension".to_string(),
        ));
    }
    let target = &columns[index];
    let others: Vec<&Vec<u64>> = columns
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != index)
        .map(|(_, c)| c)
        .collect();

    if m == 1 {
        let a = target[0];
        let d = others.iter().fold(0u64, |acc, c| gcd(acc, c[0]));
        if d == 0 {
            return Ok(if a == 0 { Some(1) } else { None });
        }
        return Ok(Some(d / gcd(d, a)));
    }

    // b·a ∈ colLat(B)  ⟺  b·(U·a) ∈ colLat(D) for any diagonalization
    // D = U·B·V, which reduces to congruences on each coordinate.
    let matrix: Vec<Vec<BigInt>> = (0..m)
        .map(|row| others.iter().map(|c| BigInt::from(c[row])).collect())
        .collect();
    let diag = linalg::diagonalize(&matrix);
    let w: Vec<BigInt> = diag
        .left
        .iter()
        .map(|row| {
            row.iter()
                .zip(target)
                .map(|(u, &a)| u * BigInt::from(a))
                .sum()
        })
        .collect();
    let rank = diag.diagonal.len();
    for wi in w.iter().skip(rank) {
        if !wi.is_zero() {
            return Ok(None);
        }
    }
    let mut lambda: u64 = 1;
    for (di, wi) in diag.diagonal.iter().zip(&w) {
        // need d | b*w  ⟺  (d / gcd(d, w)) | b
        let d: u64 = u64::try_from(di)
            .map_err(|_| Error::resource("lattice invariant factor exceeds u64".to_string()))?;
        let wm = u64::try_from(((wi % di) + di) % di).expect("reduced residue fits");
        let need = d / gcd(d, wm);
        lambda = lcm(lambda, need);
    }
    Ok(Some(lambda))
}

/// Scale every generator except `fixed` by k. Requires
/// `gcd(gens[fixed], k) = 1`. The raw list may be redundant; the result is
/// minimalized on construction.
pub fn scale_list(raw: &[u64], k: u64, fixed: usize) -> Result<NumericalSemigroup> {
    if k == 0 {
        return Err(Error::input("k must be positive".to_string()));
    }
    if fixed >= raw.len() {
        return Err(Error::input(format!("fixed index {fixed} out of range")));
    }
    if gcd(raw[fixed], k) != 1 {
        return Err(Error::input(format!(
            "gcd(a_fixed, k) = gcd({}, {k}) != 1",
            raw[fixed]
        )));
    }
    let scaled: Vec<u64> = raw
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            if i == fixed {
                Ok(a)
            } else {
                a.checked_mul(k)
                    .ok_or_else(|| Error::input(format!("{a} * {k} overflows")))
            }
        })
        .collect::<Result<_>>()?;
    NumericalSemigroup::new(&scaled)
}

/// Scale all but one minimal generator of a semigroup by k.
pub fn scale(s: &NumericalSemigroup, k: u64, fixed: usize) -> Result<NumericalSemigroup> {
    scale_list(s.generators(), k, fixed)
}

/// The swap transform: H ∈ KW(p,q) with gcd(k,p) = 1 and q < kp maps to
/// ⟨q, kp, k·h_d, …, k·h_1⟩ ∈ KW(q, kp), reversing the parameter roles.
pub fn swap_scale(kw: &KwSemigroup, k: u64) -> Result<KwSemigroup> {
    let (p, q) = (kw.p(), kw.q());
    if gcd(k, p) != 1 {
        return Err(Error::input(format!("gcd(k, p) = gcd({k}, {p}) != 1")));
    }
    let kp = k
        .checked_mul(p)
        .ok_or_else(|| Error::input("k*p overflows".to_string()))?;
    if q >= kp {
        return Err(Error::input(format!("need q < k*p, got {q} >= {kp}")));
    }
    let new_x: Vec<u64> = kw.y().iter().rev().map(|&yi| k * yi).collect();
    let new_y: Vec<u64> = kw.x().iter().rev().copied().collect();
    KwSemigroup::new(q, kp, &new_x, &new_y)
}
