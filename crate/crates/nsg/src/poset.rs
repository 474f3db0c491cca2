//! Apéry posets.
//!
//! The Apéry poset of a semigroup S with multiplicity m lives on the labels
//! Z_m: i ⪯ j iff b_j − b_i ∈ S, where b_i is the Apéry element in residue
//! class i. We store the cover relation (transitive reduction). For a
//! Kunz–Waldi semigroup the covers have a closed form — a main chain of
//! multiples of the class of q with short branch chains hanging off it — and
//! that shape, together with three arithmetic conditions, characterizes the
//! Apéry posets of Kunz–Waldi semigroups over a prime multiplicity. The
//! characterization comes with a realizer that rebuilds a semigroup from
//! valid poset data.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::kw::KwSemigroup;
use crate::linalg::is_prime;
use crate::semigroup::{gcd, NumericalSemigroup};

/// A labeled poset on Z_m given by its cover relation. Apéry values are
/// kept when the poset came from an actual semigroup; posets read from
/// descriptor files carry labels only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyPoset {
    m: usize,
    apery: Option<Vec<u64>>,
    covers: BTreeSet<(usize, usize)>,
}

/// The structured decomposition of a Kunz–Waldi-shaped Apéry poset:
/// a main chain 0, a, 2a, …, ℓ₀·a and branch chains k_i + λa of lengths ℓ_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KwPosetData {
    pub p: u64,
    pub a: usize,
    pub ell0: u64,
    /// (k_i, ℓ_i) pairs, in the order discovered.
    pub branches: Vec<(usize, u64)>,
}

/// Whether the characterization checker insists on a prime modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Primality {
    #[default]
    Strict,
    Relaxed,
}

/// Outcome of the four-condition check on poset data.
#[derive(Debug, Clone)]
pub struct PosetCheck {
    /// Shape, bound on y_1, congruence solvability, chain-length equations.
    pub conditions: [bool; 4],
    /// y-values sorted descending, present when condition 3 holds.
    pub y_sorted: Option<Vec<u64>>,
    /// Branches reordered to match `y_sorted`.
    pub branches_sorted: Option<Vec<(usize, u64)>>,
    /// Set when a composite modulus was allowed through in relaxed mode.
    pub relaxed_warning: bool,
    pub messages: Vec<String>,
}

impl PosetCheck {
    pub fn passed(&self) -> bool {
        self.conditions.iter().all(|&c| c)
    }
}

impl AperyPoset {
    /// Poset from raw label data (descriptor input). Validates label bounds
    /// and acyclicity of the cover relation.
    pub fn from_covers(m: usize, covers: &[(usize, usize)]) -> Result<Self> {
        if m == 0 {
            return Err(Error::input("modulus must be positive".to_string()));
        }
        let set: BTreeSet<(usize, usize)> = covers.iter().copied().collect();
        for &(i, j) in &set {
            if i >= m || j >= m {
                return Err(Error::input(format!(
                    "cover ({i}, {j}) references a label outside 0..{m}"
                )));
            }
            if i == j {
                return Err(Error::input(format!("self-loop at label {i}")));
            }
        }
        let poset = AperyPoset {
            m,
            apery: None,
            covers: set,
        };
        if poset.topological_order().is_none() {
            return Err(Error::input("cover relation contains a cycle".to_string()));
        }
        Ok(poset)
    }

    /// The Apéry poset of a semigroup, computed from the definition with
    /// covers obtained by transitive reduction.
    pub fn of_semigroup(s: &NumericalSemigroup) -> Self {
        let m = s.multiplicity() as usize;
        let ap = s.apery().to_vec();
        let less = |i: usize, j: usize| i != j && ap[j] >= ap[i] && s.contains(ap[j] - ap[i]);
        let mut covers = BTreeSet::new();
        for i in 0..m {
            for j in 0..m {
                if less(i, j) && !(0..m).any(|k| less(i, k) && less(k, j)) {
                    covers.insert((i, j));
                }
            }
        }
        AperyPoset {
            m,
            apery: Some(ap),
            covers,
        }
    }

    /// The Apéry poset of a Kunz–Waldi semigroup built directly from the
    /// closed-form cover rule, never from the membership definition.
    pub fn of_kw(kw: &KwSemigroup) -> Result<Self> {
        let p = kw.p();
        let q = kw.q();
        let m = p as usize;
        let y = kw.y();
        let h = kw.h();
        let d = y.len();
        let y_at = |j: usize| if j < d { y[j] } else { 0 };

        // chains[0] is the main chain of labels; chains[j] the j-th branch.
        let mut chains: Vec<Vec<usize>> = Vec::with_capacity(d + 1);
        let mut values: Vec<Option<u64>> = vec![None; m];
        let main_len = p - y[0];
        let mut main = Vec::new();
        for lam in 0..main_len {
            let value = lam * q;
            let label = (value % p) as usize;
            main.push(label);
            if values[label].replace(value).is_some() {
                return Err(Error::contract(format!("label collision at {label}")));
            }
        }
        chains.push(main);
        for j in 0..d {
            let len = y[j] - y_at(j + 1);
            let mut chain = Vec::new();
            for lam in 0..len {
                let value = h[j] + lam * q;
                let label = (value % p) as usize;
                chain.push(label);
                if values[label].replace(value).is_some() {
                    return Err(Error::contract(format!("label collision at {label}")));
                }
            }
            chains.push(chain);
        }
        if values.iter().any(|v| v.is_none()) {
            return Err(Error::contract(
                "Apéry chains do not cover every residue class".to_string(),
            ));
        }

        let mut covers = BTreeSet::new();
        for chain in &chains {
            for w in chain.windows(2) {
                covers.insert((w[0], w[1]));
            }
        }
        for branch in &chains[1..] {
            for (lam, &label) in branch.iter().enumerate() {
                covers.insert((chains[0][lam], label));
            }
        }

        Ok(AperyPoset {
            m,
            apery: Some(values.into_iter().map(|v| v.unwrap()).collect()),
            covers,
        })
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    pub fn apery_values(&self) -> Option<&[u64]> {
        self.apery.as_deref()
    }

    pub fn covers(&self) -> &BTreeSet<(usize, usize)> {
        &self.covers
    }

    /// Labeled equality: same modulus and same cover set. Apéry values are
    /// deliberately ignored — distinct semigroups share labeled posets.
    pub fn labeled_eq(&self, other: &AperyPoset) -> bool {
        self.m == other.m && self.covers == other.covers
    }

    /// Labels covering the minimum 0.
    pub fn atoms(&self) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|&&(i, _)| i == 0)
            .map(|&(_, j)| j)
            .collect()
    }

    /// Labels directly below `j`.
    pub fn lower_covers(&self, j: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|&&(_, t)| t == j)
            .map(|&(i, _)| i)
            .collect()
    }

    fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.m];
        for &(_, j) in &self.covers {
            indeg[j] += 1;
        }
        let mut queue: Vec<usize> = (0..self.m).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.m);
        while let Some(v) = queue.pop() {
            order.push(v);
            for &(i, j) in &self.covers {
                if i == v {
                    indeg[j] -= 1;
                    if indeg[j] == 0 {
                        queue.push(j);
                    }
                }
            }
        }
        (order.len() == self.m).then_some(order)
    }

    /// True iff for every comparable pair all maximal chains between the two
    /// elements have the same length.
    pub fn is_graded(&self) -> bool {
        let order = self.topological_order().expect("validated acyclic");
        let succ: Vec<Vec<usize>> = {
            let mut s = vec![Vec::new(); self.m];
            for &(i, j) in &self.covers {
                s[i].push(j);
            }
            s
        };
        for &src in &order {
            // min/max cover-path lengths from src to every reachable label
            let mut min_len = vec![None::<u64>; self.m];
            let mut max_len = vec![None::<u64>; self.m];
            min_len[src] = Some(0);
            max_len[src] = Some(0);
            for &v in &order {
                let (Some(mn), Some(mx)) = (min_len[v], max_len[v]) else {
                    continue;
                };
                for &w in &succ[v] {
                    min_len[w] = Some(min_len[w].map_or(mn + 1, |cur| cur.min(mn + 1)));
                    max_len[w] = Some(max_len[w].map_or(mx + 1, |cur| cur.max(mx + 1)));
                }
            }
            for v in 0..self.m {
                if min_len[v] != max_len[v] {
                    return false;
                }
            }
        }
        true
    }

    /// Try to match the Kunz–Waldi cover pattern: each atom is tried as the
    /// chain step a, and the first candidate whose implied cover set equals
    /// this poset exactly wins.
    pub fn decompose(&self) -> Option<KwPosetData> {
        let m = self.m;
        if m < 2 {
            return None;
        }
        let atoms = self.atoms();
        for &a in &atoms {
            if gcd(a as u64, m as u64) != 1 {
                continue;
            }
            let mut main = vec![0usize];
            let mut cur = 0usize;
            loop {
                let next = (cur + a) % m;
                if self.covers.contains(&(cur, next)) && !main.contains(&next) {
                    main.push(next);
                    cur = next;
                } else {
                    break;
                }
            }
            let ell0 = (main.len() - 1) as u64;
            if ell0 < 1 {
                continue;
            }
            let in_main: BTreeSet<usize> = main.iter().copied().collect();
            let mut consumed = in_main.clone();
            let mut branches = Vec::new();
            let mut consistent = true;
            for &k in &atoms {
                if in_main.contains(&k) {
                    continue;
                }
                if consumed.contains(&k) {
                    consistent = false;
                    break;
                }
                consumed.insert(k);
                let mut len = 0u64;
                let mut cur = k;
                loop {
                    let next = (cur + a) % m;
                    if self.covers.contains(&(cur, next)) && !consumed.contains(&next) {
                        consumed.insert(next);
                        len += 1;
                        cur = next;
                    } else {
                        break;
                    }
                }
                branches.push((k, len));
            }
            if !consistent || consumed.len() != m {
                continue;
            }
            if branches.iter().any(|&(_, ell)| ell >= ell0) {
                continue;
            }
            let data = KwPosetData {
                p: m as u64,
                a,
                ell0,
                branches,
            };
            if data.implied_covers() == self.covers {
                return Some(data);
            }
        }
        None
    }

    /// Graphviz DOT output: nodes labeled by residue class, tooltips carry
    /// the Apéry value, ordered by Apéry value for stable diagrams.
    pub fn to_dot(&self) -> String {
        let mut order: Vec<usize> = (0..self.m).collect();
        if let Some(ap) = &self.apery {
            order.sort_by_key(|&l| ap[l]);
        }
        let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n");
        for &label in &order {
            match &self.apery {
                Some(ap) => {
                    let _ = writeln!(
                        out,
                        "  n{label} [label=\"{label}\", tooltip=\"{}\"];",
                        ap[label]
                    );
                }
                None => {
                    let _ = writeln!(out, "  n{label} [label=\"{label}\"];");
                }
            }
        }
        for &(i, j) in &self.covers {
            let _ = writeln!(out, "  n{i} -> n{j};");
        }
        out.push_str("}\n");
        out
    }
}

impl KwPosetData {
    /// Number of branch chains; the realized embedding dimension is this + 2.
    pub fn branch_count(&self) -> usize {
        self.branches.len()
    }

    /// y_1 = p − 1 − ℓ₀.
    pub fn y1(&self) -> u64 {
        self.p - 1 - self.ell0
    }

    /// The exact cover set this data prescribes.
    pub fn implied_covers(&self) -> BTreeSet<(usize, usize)> {
        let m = self.p as usize;
        let mut covers = BTreeSet::new();
        for lam in 0..self.ell0 as usize {
            covers.insert(((lam * self.a) % m, ((lam + 1) * self.a) % m));
        }
        for &(k, ell) in &self.branches {
            for lam in 0..ell as usize {
                covers.insert(((k + lam * self.a) % m, (k + (lam + 1) * self.a) % m));
            }
            for lam in 0..=ell as usize {
                covers.insert(((lam * self.a) % m, (k + lam * self.a) % m));
            }
        }
        covers
    }

    /// Check the characterization conditions. In strict mode a composite
    /// modulus is an input error; relaxed mode proceeds with a warning flag.
    pub fn check(&self, mode: Primality) -> Result<PosetCheck> {
        let p = self.p;
        if p < 3 {
            return Err(Error::input(format!("modulus {p} < 3")));
        }
        let prime = is_prime(p);
        if mode == Primality::Strict && !prime {
            return Err(Error::input(format!(
                "modulus {p} is not prime; rerun in relaxed mode to allow it"
            )));
        }
        let mut messages = Vec::new();
        let relaxed_warning = !prime;
        if relaxed_warning {
            messages.push(format!(
                "warning: modulus {p} is composite; the characterization is stated for primes"
            ));
        }

        let m = p as usize;
        // Condition 1: shape. Structural sanity of the decomposition data.
        let mut cond1 = self.a < m && gcd(self.a as u64, p) == 1 && self.ell0 >= 1;
        let main: BTreeSet<usize> = (0..=self.ell0 as usize)
            .map(|lam| (lam * self.a) % m)
            .collect();
        if main.len() != self.ell0 as usize + 1 {
            cond1 = false;
        }
        let mut seen = main.clone();
        let mut total = self.ell0 + 1;
        for &(k, ell) in &self.branches {
            if k >= m || main.contains(&k) || ell >= self.ell0 {
                cond1 = false;
            }
            for lam in 0..=ell as usize {
                if !seen.insert((k + lam * self.a) % m) {
                    cond1 = false;
                }
            }
            total += ell + 1;
        }
        if total != p {
            cond1 = false;
            messages.push(format!("chain lengths cover {total} labels, expected {p}"));
        }

        // Condition 2: y_1 <= floor(p/2).
        let y1 = self.y1();
        let cond2 = y1 <= p / 2;
        if !cond2 {
            messages.push(format!("y_1 = {y1} exceeds floor(p/2) = {}", p / 2));
        }

        // Condition 3: solve −a·y ≡ k (mod p) for each branch; the values
        // must be positive, bounded by y_1, and attain it.
        let (cond3, mut labeled) = if cond1 {
            let a_inv = mod_inverse(self.a as u64, p);
            let mut labeled: Vec<(u64, usize, u64)> = Vec::new(); // (y, k, ell)
            let mut ok = !self.branches.is_empty();
            for &(k, ell) in &self.branches {
                let t = (k as u64 * a_inv) % p;
                let y = p - t; // in (0, p) because k != 0
                if y > y1 {
                    messages.push(format!("branch k = {k} solves to y = {y} > y_1 = {y1}"));
                    ok = false;
                }
                labeled.push((y, k, ell));
            }
            if ok && !labeled.iter().any(|&(y, _, _)| y == y1) {
                messages.push(format!("no branch attains y_1 = {y1}"));
                ok = false;
            }
            (ok, labeled)
        } else {
            (false, Vec::new())
        };

        // Condition 4: after reordering descending, ℓ_i = y_i − y_{i+1} − 1.
        let mut cond4 = cond3;
        let mut y_sorted = None;
        let mut branches_sorted = None;
        if cond3 {
            labeled.sort_by_key(|l| std::cmp::Reverse(l.0));
            let ys: Vec<u64> = labeled.iter().map(|&(y, _, _)| y).collect();
            for i in 0..labeled.len() {
                let y_next = if i + 1 < labeled.len() { ys[i + 1] } else { 0 };
                let expect = ys[i].checked_sub(y_next + 1);
                if expect != Some(labeled[i].2) {
                    messages.push(format!(
                        "branch k = {} has length {} but y_{} - y_{} - 1 = {}",
                        labeled[i].1,
                        labeled[i].2,
                        i + 1,
                        i + 2,
                        ys[i] as i64 - y_next as i64 - 1,
                    ));
                    cond4 = false;
                }
            }
            y_sorted = Some(ys);
            branches_sorted = Some(labeled.iter().map(|&(_, k, ell)| (k, ell)).collect());
        }

        Ok(PosetCheck {
            conditions: [cond1, cond2, cond3, cond4],
            y_sorted,
            branches_sorted,
            relaxed_warning,
            messages,
        })
    }

    /// Realize a Kunz–Waldi semigroup from valid poset data: q = αp + a with
    /// the smallest admissible α by default, x_i = i by default. The
    /// resulting semigroup's closed-form poset must reproduce the data.
    pub fn realize(
        &self,
        alpha: Option<u64>,
        x_seq: Option<&[u64]>,
        mode: Primality,
    ) -> Result<KwSemigroup> {
        let check = self.check(mode)?;
        if !check.passed() {
            return Err(Error::input(format!(
                "poset data fails the characterization: conditions {:?}; {}",
                check.conditions,
                check.messages.join("; ")
            )));
        }
        let y = check.y_sorted.expect("passed check carries y");
        let d = y.len();
        let x: Vec<u64> = match x_seq {
            Some(xs) => xs.to_vec(),
            None => (1..=d as u64).collect(),
        };
        if x.len() != d {
            return Err(Error::input(format!(
                "x sequence has length {}, expected {d}",
                x.len()
            )));
        }
        let xd = *x.last().expect("d >= 1");
        const ALPHA_CAP: u64 = 1_000_000;
        let alpha = match alpha {
            Some(al) => al,
            None => {
                let mut al = 1;
                while al * self.p + (self.a as u64) < 2 * xd {
                    al += 1;
                    if al > ALPHA_CAP {
                        return Err(Error::resource(format!(
                            "no admissible alpha below {ALPHA_CAP}"
                        )));
                    }
                }
                al
            }
        };
        if alpha == 0 {
            return Err(Error::input("alpha must be positive".to_string()));
        }
        let q = alpha * self.p + self.a as u64;
        let kw = KwSemigroup::new(self.p, q, &x, &y)?;
        let poset = AperyPoset::of_kw(&kw)?;
        if poset.covers() != &self.implied_covers() {
            return Err(Error::contract(
                "realized semigroup's poset does not reproduce the data".to_string(),
            ));
        }
        Ok(kw)
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Extended Euclid; gcd(a, p) = 1 is checked by callers.
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(p as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kw::enumerate_kw;

    fn covers(pairs: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn poset_of_worked_example() {
        let s = NumericalSemigroup::new(&[8, 17, 60, 69, 78]).unwrap();
        let p = AperyPoset::of_semigroup(&s);
        assert_eq!(
            p.covers(),
            &covers(&[
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 4),
                (0, 5),
                (0, 6),
                (6, 7),
                (1, 7)
            ])
        );
    }

    #[test]
    fn poset_of_non_kw_example() {
        let s = NumericalSemigroup::new(&[5, 13, 14, 17]).unwrap();
        let p = AperyPoset::of_semigroup(&s);
        assert_eq!(p.covers(), &covers(&[(0, 3), (3, 1), (0, 2), (0, 4)]));
    }

    #[test]
    fn poset_of_two_generators() {
        let s = NumericalSemigroup::new(&[2, 3]).unwrap();
        let p = AperyPoset::of_semigroup(&s);
        assert_eq!(p.covers(), &covers(&[(0, 1)]));
    }

    #[test]
    fn kw_covers_match_definition() {
        let k = KwSemigroup::new(8, 17, &[1, 2, 3], &[4, 3, 2]).unwrap();
        let formula = AperyPoset::of_kw(&k).unwrap();
        let definition = AperyPoset::of_semigroup(k.semigroup());
        assert!(formula.labeled_eq(&definition));
        assert_eq!(formula.apery_values(), definition.apery_values());
    }

    #[test]
    fn kw_covers_match_definition_on_small_sweep() {
        // The closed-form rule reproduces the definitional covers except on
        // the saturated boundary x_d = q/2, where extra comparabilities like
        // 2·h_d = λq appear; even there the rule's covers are a subset.
        for (p, q) in [(5u64, 8u64), (5, 9), (7, 8), (8, 9), (3, 10)] {
            for k in enumerate_kw(p, q, None).unwrap().semigroups {
                let formula = AperyPoset::of_kw(&k).unwrap();
                let definition = AperyPoset::of_semigroup(k.semigroup());
                let x_saturated = q % 2 == 0 && *k.x().last().unwrap() == q / 2;
                if x_saturated {
                    assert!(
                        formula.covers().is_subset(definition.covers()),
                        "formula covers exceed definition for ({p},{q}) x={:?} y={:?}",
                        k.x(),
                        k.y()
                    );
                } else {
                    assert!(
                        formula.labeled_eq(&definition),
                        "mismatch for ({p},{q}) x={:?} y={:?}",
                        k.x(),
                        k.y()
                    );
                }
            }
        }
    }

    #[test]
    fn kw_covers_miss_saturated_relation() {
        // <5,8,12> has 24 = 3*8 = 2*12, so label 2 sits below label 4 in the
        // real poset; the closed-form rule cannot see it.
        let k = KwSemigroup::new(5, 8, &[4], &[1]).unwrap();
        let formula = AperyPoset::of_kw(&k).unwrap();
        let definition = AperyPoset::of_semigroup(k.semigroup());
        assert!(!formula.labeled_eq(&definition));
        let extra: Vec<_> = definition
            .covers()
            .difference(formula.covers())
            .copied()
            .collect();
        assert_eq!(extra, vec![(2, 4)]);
    }

    #[test]
    fn decompose_non_kw_example() {
        let s = NumericalSemigroup::new(&[5, 13, 14, 17]).unwrap();
        let p = AperyPoset::of_semigroup(&s);
        let d = p.decompose().unwrap();
        assert_eq!(d.a, 3);
        assert_eq!(d.ell0, 2);
        assert_eq!(d.branches, vec![(2, 0), (4, 0)]);
    }

    #[test]
    fn decompose_rejects_wide_element() {
        let s = NumericalSemigroup::new(&[17, 19, 21, 23, 25]).unwrap();
        let p = AperyPoset::of_semigroup(&s);
        assert!(p.decompose().is_none());
        // 44 = 19 + 25 = 21 + 23 makes label 10 cover at least 2, 4, 6, 8.
        let lc = p.lower_covers(10);
        assert!(lc.len() >= 3, "lower covers of 10: {lc:?}");
    }

    #[test]
    fn decompose_chain_poset() {
        // A bare chain 0 < 1 < 2 < 3 < 4 decomposes with no branches.
        let chain = AperyPoset::from_covers(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let d = chain.decompose().unwrap();
        assert_eq!(d.a, 1);
        assert_eq!(d.ell0, 4);
        assert!(d.branches.is_empty());
        // ...but fails the checker: no branch can attain y_1.
        let check = d.check(Primality::Strict).unwrap();
        assert!(!check.passed());
    }

    #[test]
    fn check_worked_example() {
        let d = KwPosetData {
            p: 5,
            a: 3,
            ell0: 2,
            branches: vec![(2, 0), (4, 0)],
        };
        let check = d.check(Primality::Strict).unwrap();
        assert!(check.passed(), "messages: {:?}", check.messages);
        assert_eq!(check.y_sorted, Some(vec![2, 1]));
        assert_eq!(check.branches_sorted, Some(vec![(4, 0), (2, 0)]));
    }

    #[test]
    fn check_rejects_large_y1() {
        // ell0 = 1 forces y_1 = p - 2 > floor(p/2) for p = 7.
        let d = KwPosetData {
            p: 7,
            a: 1,
            ell0: 1,
            branches: vec![(2, 0), (3, 0), (4, 0), (5, 0), (6, 0)],
        };
        let check = d.check(Primality::Strict).unwrap();
        assert!(!check.conditions[1]);
    }

    #[test]
    fn strict_mode_rejects_composite_modulus() {
        let d = KwPosetData {
            p: 8,
            a: 1,
            ell0: 3,
            branches: vec![(4, 0), (5, 0), (6, 1)],
        };
        assert!(d.check(Primality::Strict).is_err());
        assert!(d.check(Primality::Relaxed).unwrap().relaxed_warning);
    }

    #[test]
    fn realize_worked_example() {
        let d = KwPosetData {
            p: 5,
            a: 3,
            ell0: 2,
            branches: vec![(2, 0), (4, 0)],
        };
        let kw = d.realize(None, None, Primality::Strict).unwrap();
        assert_eq!((kw.p(), kw.q()), (5, 8));
        assert_eq!(kw.h(), &[19, 22]);
        assert_eq!(kw.semigroup().generators(), &[5, 8, 19, 22]);
        let mut ap = kw.semigroup().apery().to_vec();
        ap.sort_unstable();
        assert_eq!(ap, vec![0, 8, 16, 19, 22]);
    }

    #[test]
    fn realize_synthetic_data_reverse_direction() {
        // Data built straight from the arithmetic conditions — never
        // derived from any semigroup — must realize, and the realized
        // semigroup's poset must reproduce the prescribed covers.
        for p in [5u64, 7, 11, 13] {
            for a in 1..p as usize {
                let half = (p / 2) as usize;
                for ys in [vec![1u64], vec![2, 1], vec![3, 1], vec![half as u64, 1]] {
                    if ys[0] > p / 2 || ys.windows(2).any(|w| w[0] <= w[1]) {
                        continue;
                    }
                    let ell0 = p - 1 - ys[0];
                    let branches: Vec<(usize, u64)> = ys
                        .iter()
                        .enumerate()
                        .map(|(i, &y)| {
                            let k = ((p - y) as usize * a) % p as usize;
                            let y_next = if i + 1 < ys.len() { ys[i + 1] } else { 0 };
                            (k, y - y_next - 1)
                        })
                        .collect();
                    let data = KwPosetData {
                        p,
                        a,
                        ell0,
                        branches,
                    };
                    let check = data.check(Primality::Strict).unwrap();
                    assert!(check.passed(), "p={p} a={a} ys={ys:?}: {:?}", check.messages);
                    assert_eq!(check.y_sorted.as_deref(), Some(ys.as_slice()));
                    let kw = data.realize(None, None, Primality::Strict).unwrap();
                    let poset = AperyPoset::of_kw(&kw).unwrap();
                    assert_eq!(poset.covers(), &data.implied_covers());
                }
            }
        }
    }

    #[test]
    fn realize_round_trip_from_decomposition() {
        let s = NumericalSemigroup::new(&[5, 13, 14, 17]).unwrap();
        let p = AperyPoset::of_semigroup(&s);
        let d = p.decompose().unwrap();
        let kw = d.realize(None, None, Primality::Strict).unwrap();
        assert!(AperyPoset::of_kw(&kw).unwrap().labeled_eq(&p));
        // The motivating coincidence: <5,8,9,12> shares the labeled poset.
        let h = NumericalSemigroup::new(&[5, 8, 9, 12]).unwrap();
        assert!(AperyPoset::of_semigroup(&h).labeled_eq(&p));
    }

    #[test]
    fn gradedness() {
        let s = NumericalSemigroup::new(&[8, 17, 60, 69, 78]).unwrap();
        assert!(AperyPoset::of_semigroup(&s).is_graded());

        // Diamond with one long side is not graded.
        let bad = AperyPoset::from_covers(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(!bad.is_graded());

        // Arithmetic example: computed, no claim from theory.
        let t = NumericalSemigroup::new(&[17, 19, 21, 23, 25]).unwrap();
        let _ = AperyPoset::of_semigroup(&t).is_graded();
    }

    #[test]
    fn from_covers_validates() {
        assert!(AperyPoset::from_covers(3, &[(0, 5)]).is_err());
        assert!(AperyPoset::from_covers(3, &[(1, 1)]).is_err());
        assert!(AperyPoset::from_covers(3, &[(0, 1), (1, 2), (2, 0)]).is_err());
    }

    #[test]
    fn dot_output_is_stable() {
        let s = NumericalSemigroup::new(&[5, 13, 14, 17]).unwrap();
        let dot = AperyPoset::of_semigroup(&s).to_dot();
        assert!(dot.starts_with("digraph hasse {"));
        assert!(dot.contains("n0 [label=\"0\", tooltip=\"0\"];"));
        assert!(dot.contains("n0 -> n3;"));
        // node order follows apery values: 0, 13, 14, 17, 26
        let i3 = dot.find("n3 [").unwrap();
        let i1 = dot.find("n1 [").unwrap();
        assert!(i3 < i1);
    }
}
