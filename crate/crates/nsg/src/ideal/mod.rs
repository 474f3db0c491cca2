//! Defining ideals and tangent cones of Kunz–Waldi semigroup rings.
//!
//! The defining ideal I_H of H = ⟨p, q, h_1, …, h_{n−2}⟩ lives in
//! k[u, v, u_1, …, u_{n−2}] with the substitution u ↦ t^p, v ↦ t^q,
//! u_i ↦ t^{h_i}, and is minimally generated by C(n,2) binomials in four
//! families. The tangent cone is cut out by the ideal of initial forms
//! (I_H)_*, computed here through a standard basis: homogenize, run the
//! binomial Buchberger completion under the homogenized local order,
//! dehomogenize, take initial forms, and minimalize by graded Nakayama.

pub mod groebner;

use serde::Serialize;
use std::fmt;

use crate::error::{Error, Result};
use crate::kw::{binomial as choose, KwSemigroup};

use groebner::{buchberger, cmp_mono, normal_form, Element, Order, DEFAULT_BASIS_CAP};

/// Exponent vector over the variables u, v, u_1, …, u_{n−2} (in that order).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ExponentVector(pub Vec<u64>);

impl ExponentVector {
    pub fn total_degree(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn h_degree(&self, h_degrees: &[u64]) -> u64 {
        self.0.iter().zip(h_degrees).map(|(&e, &w)| e * w).sum()
    }
}

/// A binomial first − second, or a monomial when `second` is `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Binomial {
    pub first: ExponentVector,
    pub second: Option<ExponentVector>,
}

impl Binomial {
    pub fn monomial(exps: Vec<u64>) -> Self {
        Binomial {
            first: ExponentVector(exps),
            second: None,
        }
    }

    pub fn pair(first: Vec<u64>, second: Vec<u64>) -> Self {
        Binomial {
            first: ExponentVector(first),
            second: Some(ExponentVector(second)),
        }
    }

    /// Both sides have the same weighted degree under `h_degrees`.
    pub fn is_h_homogeneous(&self, h_degrees: &[u64]) -> bool {
        match &self.second {
            None => true,
            Some(s) => self.first.h_degree(h_degrees) == s.h_degree(h_degrees),
        }
    }

    /// The homogeneous summand of least total degree: the lower-degree
    /// side, or the whole binomial when both sides have equal degree.
    pub fn initial_form(&self) -> Binomial {
        match &self.second {
            None => self.clone(),
            Some(s) => {
                let (da, db) = (self.first.total_degree(), s.total_degree());
                if da < db {
                    Binomial {
                        first: self.first.clone(),
                        second: None,
                    }
                } else if db < da {
                    Binomial {
                        first: s.clone(),
                        second: None,
                    }
                } else {
                    self.clone()
                }
            }
        }
    }

    fn to_element(&self, order: Order) -> Option<Element> {
        Element::oriented(
            self.first.0.clone(),
            self.second.as_ref().map(|s| s.0.clone()),
            order,
        )
    }

    fn format_with(&self, f: &mut fmt::Formatter<'_>, names: &[String]) -> fmt::Result {
        write_monomial(f, &self.first.0, names)?;
        if let Some(s) = &self.second {
            write!(f, " - ")?;
            write_monomial(f, &s.0, names)?;
        }
        Ok(())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, exps: &[u64], names: &[String]) -> fmt::Result {
    let mut wrote = false;
    for (k, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if wrote {
            write!(f, "*")?;
        }
        write!(f, "{}", names[k])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
        wrote = true;
    }
    if !wrote {
        write!(f, "1")?;
    }
    Ok(())
}

pub fn variable_names(n: usize) -> Vec<String> {
    let mut names = vec!["u".to_string(), "v".to_string()];
    for i in 1..=n.saturating_sub(2) {
        names.push(format!("u{i}"));
    }
    names
}

/// A list of binomials together with the weight of each variable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinomialIdeal {
    pub generators: Vec<Binomial>,
    pub variable_h_degrees: Vec<u64>,
}

impl BinomialIdeal {
    pub fn variable_count(&self) -> usize {
        self.variable_h_degrees.len()
    }

    /// One generator per line in the fixed variable order.
    pub fn printout(&self) -> String {
        let names = variable_names(self.variable_count());
        self.generators
            .iter()
            .map(|b| {
                DisplayBinomial {
                    binomial: b,
                    names: &names,
                }
                .to_string()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    fn elements(&self, order: Order) -> Vec<Element> {
        self.generators
            .iter()
            .filter_map(|b| b.to_element(order))
            .collect()
    }

    /// Gröbner basis under the global order, for membership tests.
    pub fn groebner(&self) -> Result<Vec<Element>> {
        buchberger(
            &self.elements(Order::DegRevLex),
            Order::DegRevLex,
            DEFAULT_BASIS_CAP,
        )
    }
}

struct DisplayBinomial<'a> {
    binomial: &'a Binomial,
    names: &'a [String],
}

impl fmt::Display for DisplayBinomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.binomial.format_with(f, self.names)
    }
}

/// Render one binomial in the fixed variable order of an n-variable ring.
pub fn binomial_to_string(b: &Binomial, n_vars: usize) -> String {
    let names = variable_names(n_vars);
    DisplayBinomial {
        binomial: b,
        names: &names,
    }
    .to_string()
}

fn unit(n: usize, idx: usize, e: u64) -> Vec<u64> {
    let mut v = vec![0u64; n];
    v[idx] = e;
    v
}

/// The C(n,2) defining binomials of I_H: f_ij = u_iu_j − u^{q−x_i−x_j}
/// v^{p−y_i−y_j}, g_i = v^{y_i−y_{i+1}}u_i − u^{x_{i+1}−x_i}u_{i+1},
/// η_1 = v^{p−y_1} − u^{x_1}u_1, η_2 = v^{y_{n−2}}u_{n−2} − u^{q−x_{n−2}}.
pub fn defining_ideal(kw: &KwSemigroup) -> Result<BinomialIdeal> {
    let (p, q) = (kw.p(), kw.q());
    let (x, y, h) = (kw.x(), kw.y(), kw.h());
    let d = x.len();
    let n = d + 2;
    let nv = n; // variables: u, v, u_1..u_d
    let var_u = 0usize;
    let var_v = 1usize;
    let var_ui = |i: usize| 1 + i; // 1-based branch index

    let mut h_degrees = vec![p, q];
    h_degrees.extend_from_slice(h);

    let mut gens = Vec::with_capacity(choose(n as u64, 2) as usize);
    for i in 1..=d {
        for j in i..=d {
            let mut first = vec![0u64; nv];
            first[var_ui(i)] += 1;
            first[var_ui(j)] += 1;
            let mut second = vec![0u64; nv];
            second[var_u] = q - x[i - 1] - x[j - 1];
            second[var_v] = p - y[i - 1] - y[j - 1];
            gens.push(Binomial::pair(first, second));
        }
    }
    for i in 1..=d.saturating_sub(1) {
        let mut first = vec![0u64; nv];
        first[var_v] = y[i - 1] - y[i];
        first[var_ui(i)] = 1;
        let mut second = vec![0u64; nv];
        second[var_u] = x[i] - x[i - 1];
        second[var_ui(i + 1)] = 1;
        gens.push(Binomial::pair(first, second));
    }
    {
        let first = unit(nv, var_v, p - y[0]);
        let mut second = unit(nv, var_u, x[0]);
        second[var_ui(1)] = 1;
        gens.push(Binomial::pair(first, second));
    }
    {
        let mut first = unit(nv, var_v, y[d - 1]);
        first[var_ui(d)] = 1;
        let second = unit(nv, var_u, q - x[d - 1]);
        gens.push(Binomial::pair(first, second));
    }

    let ideal = BinomialIdeal {
        generators: gens,
        variable_h_degrees: h_degrees,
    };
    for b in &ideal.generators {
        if !b.is_h_homogeneous(&ideal.variable_h_degrees) {
            return Err(Error::contract(format!(
                "defining generator is not H-homogeneous: {:?}",
                b
            )));
        }
    }
    debug_assert_eq!(ideal.generators.len() as u64, choose(n as u64, 2));
    Ok(ideal)
}

/// Diagnostics for the Cohen–Macaulay test on the tangent cone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CmReport {
    pub cohen_macaulay: bool,
    /// x_{i+1} − x_i ≥ y_i − y_{i+1} for all i.
    pub condition1: bool,
    /// First 1-based index violating condition 1, if any.
    pub condition1_failure: Option<usize>,
    /// x_1 + y_1 ≥ p − 1.
    pub condition2: bool,
    pub summary: String,
}

/// The arithmetic Cohen–Macaulay criterion: every lattice-path step at
/// least as wide as tall, and the first corner close enough to the
/// antidiagonal.
pub fn cm_check(kw: &KwSemigroup) -> CmReport {
    let (x, y, p) = (kw.x(), kw.y(), kw.p());
    let d = x.len();
    let mut condition1 = true;
    let mut condition1_failure = None;
    for i in 1..d {
        if x[i] - x[i - 1] < y[i - 1] - y[i] {
            condition1 = false;
            condition1_failure = Some(i);
            break;
        }
    }
    let condition2 = x[0] + y[0] + 1 >= p;
    let cohen_macaulay = condition1 && condition2;
    let summary = if cohen_macaulay {
        "Cohen-Macaulay: every step is at least as wide as tall and x1+y1 >= p-1".to_string()
    } else if !condition1 {
        let i = condition1_failure.unwrap();
        format!(
            "not CM: step {i} is taller than wide (x{}−x{} = {} < {} = y{}−y{})",
            i + 1,
            i,
            x[i] - x[i - 1],
            y[i - 1] - y[i],
            i,
            i + 1
        )
    } else {
        format!("not CM: x1+y1 = {} < p-1 = {}", x[0] + y[0], p - 1)
    };
    CmReport {
        cohen_macaulay,
        condition1,
        condition1_failure,
        condition2,
        summary,
    }
}

/// The closed-form minimal generators of (I_H)_* in the Cohen–Macaulay
/// case, with the ε flags deciding which initial forms stay binomial.
pub fn cm_initial_generators(kw: &KwSemigroup) -> Result<BinomialIdeal> {
    let report = cm_check(kw);
    if !report.cohen_macaulay {
        return Err(Error::input(format!(
            "tangent cone is not Cohen-Macaulay: {}",
            report.summary
        )));
    }
    let (p, q) = (kw.p(), kw.q());
    let (x, y) = (kw.x(), kw.y());
    let d = x.len();
    let nv = d + 2;
    let var_u = 0usize;
    let var_v = 1usize;
    let var_ui = |i: usize| 1 + i;

    let mut h_degrees = vec![p, q];
    h_degrees.extend_from_slice(kw.h());

    let mut gens = Vec::new();
    for i in 1..=d {
        for j in i..=d {
            let mut first = vec![0u64; nv];
            first[var_ui(i)] += 1;
            first[var_ui(j)] += 1;
            gens.push(Binomial::monomial(first));
        }
    }
    for i in 1..=d.saturating_sub(1) {
        let mut first = vec![0u64; nv];
        first[var_v] = y[i - 1] - y[i];
        first[var_ui(i)] = 1;
        if x[i] - x[i - 1] == y[i - 1] - y[i] {
            let mut second = vec![0u64; nv];
            second[var_u] = x[i] - x[i - 1];
            second[var_ui(i + 1)] = 1;
            gens.push(Binomial::pair(first, second));
        } else {
            gens.push(Binomial::monomial(first));
        }
    }
    {
        let first = unit(nv, var_v, p - y[0]);
        if x[0] + y[0] == p - 1 {
            let mut second = unit(nv, var_u, x[0]);
            second[var_ui(1)] = 1;
            gens.push(Binomial::pair(first, second));
        } else {
            gens.push(Binomial::monomial(first));
        }
    }
    {
        let mut first = unit(nv, var_v, y[d - 1]);
        first[var_ui(d)] = 1;
        if y[d - 1] + 1 == q - x[d - 1] {
            let second = unit(nv, var_u, q - x[d - 1]);
            gens.push(Binomial::pair(first, second));
        } else {
            gens.push(Binomial::monomial(first));
        }
    }

    Ok(BinomialIdeal {
        generators: gens,
        variable_h_degrees: h_degrees,
    })
}

/// The ideal of initial forms (I_H)_* with its minimal generator count μ,
/// via a standard basis: homogenize, complete under the homogenized local
/// order, dehomogenize, take initial forms, minimalize.
pub fn tangent_cone_ideal(kw: &KwSemigroup) -> Result<(BinomialIdeal, usize)> {
    tangent_cone_ideal_capped(kw, DEFAULT_BASIS_CAP)
}

pub fn tangent_cone_ideal_capped(kw: &KwSemigroup, cap: usize) -> Result<(BinomialIdeal, usize)> {
    let n = kw.embedding_dimension();
    if n > 7 {
        return Err(Error::resource(format!(
            "embedding dimension {n} > 7 for the standard-basis engine"
        )));
    }
    let ideal = defining_ideal(kw)?;
    let nv = ideal.variable_count();

    // Homogenize with one extra (last) variable up to each binomial's top
    // total degree.
    let mut homogenized = Vec::new();
    for b in &ideal.generators {
        let (a, bb) = (
            &b.first.0,
            &b.second
                .as_ref()
                .expect("defining generators are binomials")
                .0,
        );
        let (da, db) = (a.iter().sum::<u64>(), bb.iter().sum::<u64>());
        let top = da.max(db);
        let mut first = a.clone();
        first.push(top - da);
        let mut second = bb.clone();
        second.push(top - db);
        if let Some(e) = Element::oriented(first, Some(second), Order::HomogenizedLocal) {
            homogenized.push(e);
        }
    }
    let gb = buchberger(&homogenized, Order::HomogenizedLocal, cap)?;

    // Dehomogenize and take initial forms.
    let mut forms: Vec<Element> = Vec::new();
    for e in &gb {
        let mut first = e.lead.clone();
        first.truncate(nv);
        let form = match &e.tail {
            None => Element {
                lead: first,
                tail: None,
            },
            Some(t) => {
                let mut second = t.clone();
                second.truncate(nv);
                let (da, db) = (first.iter().sum::<u64>(), second.iter().sum::<u64>());
                if da < db {
                    Element {
                        lead: first,
                        tail: None,
                    }
                } else if db < da {
                    Element {
                        lead: second,
                        tail: None,
                    }
                } else {
                    Element::oriented(first, Some(second), Order::DegRevLex)
                        .expect("equal-degree sides are distinct")
                }
            }
        };
        if !forms.contains(&form) {
            forms.push(form);
        }
    }

    // Minimalize by increasing degree: a form already in the ideal of the
    // kept ones is redundant (graded Nakayama).
    forms.sort_by(|a, b| {
        let (da, db) = (a.lead.iter().sum::<u64>(), b.lead.iter().sum::<u64>());
        da.cmp(&db)
            .then_with(|| cmp_mono(Order::DegRevLex, &a.lead, &b.lead))
    });
    let mut kept: Vec<Element> = Vec::new();
    let mut kept_gb: Vec<Element> = Vec::new();
    for form in forms {
        if !kept.is_empty() && normal_form(&form, &kept_gb, Order::DegRevLex).is_none() {
            continue;
        }
        kept.push(form);
        kept_gb = buchberger(&kept, Order::DegRevLex, cap)?;
    }

    let mu = kept.len();
    let generators = kept
        .into_iter()
        .map(|e| Binomial {
            first: ExponentVector(e.lead),
            second: e.tail.map(ExponentVector),
        })
        .collect();
    Ok((
        BinomialIdeal {
            generators,
            variable_h_degrees: ideal.variable_h_degrees,
        },
        mu,
    ))
}

/// Do two generating sets cut out the same ideal? Mutual reduction to zero.
pub fn same_ideal(a: &BinomialIdeal, b: &BinomialIdeal) -> Result<bool> {
    let gb_a = a.groebner()?;
    let gb_b = b.groebner()?;
    for g in &b.elements(Order::DegRevLex) {
        if normal_form(g, &gb_a, Order::DegRevLex).is_some() {
            return Ok(false);
        }
    }
    for g in &a.elements(Order::DegRevLex) {
        if normal_form(g, &gb_b, Order::DegRevLex).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The generating-set Cohen–Macaulay test: every generator whose sides
/// have different total degrees must use the multiplicity variable on its
/// longer side.
pub fn multiplicity_variable_condition(ideal: &BinomialIdeal, multiplicity_var: usize) -> bool {
    ideal.generators.iter().all(|b| {
        let Some(second) = &b.second else {
            return true;
        };
        let (da, db) = (b.first.total_degree(), second.total_degree());
        if da == db {
            return true;
        }
        let longer = if da > db { &b.first } else { second };
        longer.0[multiplicity_var] != 0
    })
}

/// The finite obstruction procedure: starting from the defining binomial
/// of the violated condition, repeatedly swap the tail against a maximal
/// factorization, dividing out common powers of u. The u-exponent of the
/// tail strictly decreases, and the terminal binomial certifies that the
/// tangent cone is not Cohen–Macaulay.
pub fn find_cm_obstruction(kw: &KwSemigroup) -> Result<Binomial> {
    let report = cm_check(kw);
    if report.cohen_macaulay {
        return Err(Error::input(
            "tangent cone is Cohen-Macaulay; no obstruction exists".to_string(),
        ));
    }
    let (p, q) = (kw.p(), kw.q());
    let (x, y) = (kw.x(), kw.y());
    let d = x.len();
    let nv = d + 2;
    let var_u = 0usize;
    let var_v = 1usize;
    let var_ui = |i: usize| 1 + i;
    let mut h_degrees = vec![p, q];
    h_degrees.extend_from_slice(kw.h());

    // Map between variables and the sorted minimal generators.
    let sem = kw.semigroup();
    let var_to_gen: Vec<usize> = h_degrees
        .iter()
        .map(|w| {
            sem.generators()
                .iter()
                .position(|g| g == w)
                .expect("variable weights are the minimal generators")
        })
        .collect();

    let (mut head, mut tail) = match report.condition1_failure {
        Some(i) => {
            // g_i with a taller-than-wide step
            let mut first = vec![0u64; nv];
            first[var_v] = y[i - 1] - y[i];
            first[var_ui(i)] = 1;
            let mut second = vec![0u64; nv];
            second[var_u] = x[i] - x[i - 1];
            second[var_ui(i + 1)] = 1;
            (first, second)
        }
        None => {
            // η_1 with x_1 + y_1 < p − 1
            let first = unit(nv, var_v, p - y[0]);
            let mut second = unit(nv, var_u, x[0]);
            second[var_ui(1)] = 1;
            (first, second)
        }
    };

    let h_deg = |m: &[u64]| -> u64 { m.iter().zip(&h_degrees).map(|(&e, &w)| e * w).sum() };
    let total = |m: &[u64]| -> u64 { m.iter().sum() };

    for _round in 0..10_000 {
        if tail[var_u] == 0 {
            return Err(Error::contract(
                "obstruction tail lost its u factor".to_string(),
            ));
        }
        let mut m = tail.clone();
        m[var_u] -= 1;
        let s = h_deg(&m);
        let facs = sem.factorizations(s)?;
        if total(&m) == facs.max_length {
            // m is itself maximal: the current binomial violates the
            // length condition. Verify before returning.
            let witness = Binomial::pair(head.clone(), tail.clone());
            debug_assert!(total(&head) > total(&tail));
            if h_deg(&head) != h_deg(&tail) {
                return Err(Error::contract("witness is not H-homogeneous".to_string()));
            }
            let gb = defining_ideal(kw)?.groebner()?;
            if let Some(e) = witness.to_element(Order::DegRevLex) {
                if normal_form(&e, &gb, Order::DegRevLex).is_some() {
                    return Err(Error::contract(
                        "witness does not reduce to zero against I_H".to_string(),
                    ));
                }
            }
            return Ok(witness);
        }
        // Deterministic pick: first maximal factorization in sorted order.
        let alpha = facs
            .factorizations
            .iter()
            .find(|f| f.iter().sum::<u64>() == facs.max_length)
            .expect("max length is attained");
        let mut m_prime = vec![0u64; nv];
        for (var, &gen_idx) in var_to_gen.iter().enumerate() {
            m_prime[var] = alpha[gen_idx];
        }
        let ell = m_prime[var_u];
        if ell == 0 {
            if m[var_u] == 0 {
                return Err(Error::contract(
                    "both sides lost u; homogeneity argument violated".to_string(),
                ));
            }
            head = m_prime;
            tail = m;
        } else {
            if m[var_u] < ell {
                return Err(Error::contract(
                    "maximal factorization uses more u than the tail".to_string(),
                ));
            }
            m_prime[var_u] -= ell;
            m[var_u] -= ell;
            head = m_prime;
            tail = m;
        }
    }
    Err(Error::resource(
        "obstruction search exceeded 10000 rounds".to_string(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kw(p: u64, q: u64, x: &[u64], y: &[u64]) -> KwSemigroup {
        KwSemigroup::new(p, q, x, y).unwrap()
    }

    fn monomials_of_degree(n: usize, d: u64) -> Vec<Vec<u64>> {
        fn rec(n: usize, d: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if n == 1 {
                cur.push(d);
                out.push(cur.clone());
                cur.pop();
                return;
            }
            for e in 0..=d {
                cur.push(e);
                rec(n - 1, d - e, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, d, &mut Vec::new(), &mut out);
        out
    }

    /// Independent validation of the whole standard-basis pipeline: the
    /// quotient by the computed initial-form ideal must have the Hilbert
    /// function counting semigroup elements by maximal factorization
    /// length. Standard monomials against the Gröbner basis give the left
    /// side; a dynamic program over the semigroup gives the right.
    fn assert_tangent_cone_hilbert_function(k: &KwSemigroup, degrees: u64) {
        let (cone, _) = tangent_cone_ideal(k).unwrap();
        let gb = cone.groebner().unwrap();
        let n = k.embedding_dimension();
        let s = k.semigroup();
        let max_gen = *s.generators().last().unwrap();
        let ord = s.max_lengths_upto(degrees * max_gen);
        for d in 0..=degrees {
            let standard = monomials_of_degree(n, d)
                .into_iter()
                .filter(|m| {
                    !gb.iter()
                        .any(|g| g.lead.iter().zip(m).all(|(&a, &b)| a <= b))
                })
                .count() as u64;
            let by_order = ord.iter().filter(|o| **o == Some(d)).count() as u64;
            assert_eq!(
                standard,
                by_order,
                "Hilbert function mismatch at degree {d} for x={:?} y={:?}",
                k.x(),
                k.y()
            );
        }
    }

    #[test]
    fn tangent_cone_hilbert_functions() {
        assert_tangent_cone_hilbert_function(&kw(5, 8, &[3], &[1]), 8);
        assert_tangent_cone_hilbert_function(&kw(8, 17, &[1, 2, 3], &[4, 3, 2]), 7);
        assert_tangent_cone_hilbert_function(&kw(8, 17, &[2, 4, 6], &[3, 2, 1]), 7);
        assert_tangent_cone_hilbert_function(&kw(8, 17, &[3, 4, 7], &[4, 2, 1]), 7);
        assert_tangent_cone_hilbert_function(&kw(5, 8, &[1, 2], &[2, 1]), 8);
    }

    #[test]
    fn defining_ideal_smallest() {
        let k = kw(5, 8, &[3], &[1]);
        let ideal = defining_ideal(&k).unwrap();
        assert_eq!(ideal.generators.len(), 3);
        assert_eq!(ideal.printout(), "u1^2 - u^2*v^3\nv^4 - u^3*u1\nv*u1 - u^5");
        assert_eq!(ideal.variable_h_degrees, vec![5, 8, 17]);
    }

    #[test]
    fn defining_ideal_counts_and_homogeneity() {
        for (p, q, x, y) in [
            (8u64, 17u64, vec![1, 2, 3], vec![4, 3, 2]),
            (8, 17, vec![2, 4, 6], vec![3, 2, 1]),
            (8, 17, vec![3, 4, 7], vec![4, 2, 1]),
            (5, 8, vec![1, 2], vec![2, 1]),
        ] {
            let k = kw(p, q, &x, &y);
            let n = k.embedding_dimension() as u64;
            let ideal = defining_ideal(&k).unwrap();
            assert_eq!(ideal.generators.len() as u64, choose(n, 2));
            for b in &ideal.generators {
                assert!(b.is_h_homogeneous(&ideal.variable_h_degrees));
            }
        }
    }

    #[test]
    fn defining_degrees_match_oracle_beta1_row() {
        // Two independent routes to the first resolution step: the weighted
        // degrees of the defining binomials, and the graded beta_1 row of
        // the homology oracle. They must agree as multisets off the
        // saturated parameter boundary.
        use crate::resolution::{betti_oracle, Field};
        for (p, q, x, y) in [
            (8u64, 17u64, vec![1u64, 2, 3], vec![4u64, 3, 2]),
            (8, 17, vec![2, 4, 6], vec![3, 2, 1]),
            (8, 17, vec![3, 4, 7], vec![4, 2, 1]),
            (5, 8, vec![1, 2], vec![2, 1]),
            (5, 8, vec![3], vec![1]),
            (7, 9, vec![1, 2], vec![3, 1]),
        ] {
            let k = kw(p, q, &x, &y);
            let ideal = defining_ideal(&k).unwrap();
            let mut from_ideal: Vec<u64> = ideal
                .generators
                .iter()
                .map(|b| b.first.h_degree(&ideal.variable_h_degrees))
                .collect();
            from_ideal.sort_unstable();
            let table = betti_oracle(k.semigroup(), Field::Rationals).unwrap();
            let mut from_oracle: Vec<u64> = Vec::new();
            for (s, mult) in table.graded_row(1) {
                for _ in 0..mult {
                    from_oracle.push(s);
                }
            }
            assert_eq!(from_ideal, from_oracle, "x={x:?} y={y:?}");
        }
    }

    #[test]
    fn initial_form_cases() {
        let f = Binomial::pair(vec![0, 0, 2], vec![2, 3, 0]);
        assert_eq!(f.initial_form(), Binomial::monomial(vec![0, 0, 2]));
        let eta = Binomial::pair(vec![0, 4, 0], vec![3, 0, 1]);
        assert_eq!(eta.initial_form(), eta); // equal degrees: keep both
        let g = Binomial::pair(vec![5, 0, 0], vec![0, 1, 1]);
        assert_eq!(g.initial_form(), Binomial::monomial(vec![0, 1, 1]));
    }

    #[test]
    fn cm_check_paper_examples() {
        let h1 = kw(8, 17, &[1, 2, 3], &[4, 3, 2]);
        let r = cm_check(&h1);
        assert!(!r.cohen_macaulay && r.condition1 && !r.condition2);
        assert!(r.summary.contains("x1+y1 = 5 < p-1 = 7"));

        let h3 = kw(8, 17, &[3, 4, 7], &[4, 2, 1]);
        let r = cm_check(&h3);
        assert!(!r.cohen_macaulay && !r.condition1);
        assert_eq!(r.condition1_failure, Some(1));

        let small = kw(5, 8, &[3], &[1]);
        assert!(cm_check(&small).cohen_macaulay);

        let h2 = kw(8, 17, &[2, 4, 6], &[3, 2, 1]);
        let r = cm_check(&h2);
        assert!(!r.cohen_macaulay && r.condition1 && !r.condition2);
    }

    #[test]
    fn cm_initial_generators_smallest() {
        let k = kw(5, 8, &[3], &[1]);
        let ideal = cm_initial_generators(&k).unwrap();
        // ε'_1 = 1 because 3 + 1 = 4 = p − 1; ε'_{n−2} = 0 because 1+1 ≠ 5.
        assert_eq!(ideal.printout(), "u1^2\nv^4 - u^3*u1\nv*u1");
        assert_eq!(ideal.generators.len(), 3);
    }

    #[test]
    fn cm_initial_generators_requires_cm() {
        let h1 = kw(8, 17, &[1, 2, 3], &[4, 3, 2]);
        assert!(cm_initial_generators(&h1).is_err());
    }

    #[test]
    fn tangent_cone_smallest_cm() {
        let k = kw(5, 8, &[3], &[1]);
        let (ideal, mu) = tangent_cone_ideal(&k).unwrap();
        assert_eq!(mu, 3);
        let closed = cm_initial_generators(&k).unwrap();
        assert!(same_ideal(&ideal, &closed).unwrap());
    }

    #[test]
    fn tangent_cone_paper_mu_values() {
        let h1 = kw(8, 17, &[1, 2, 3], &[4, 3, 2]);
        assert_eq!(tangent_cone_ideal(&h1).unwrap().1, 11);
        let h2 = kw(8, 17, &[2, 4, 6], &[3, 2, 1]);
        assert_eq!(tangent_cone_ideal(&h2).unwrap().1, 12);
        let h3 = kw(8, 17, &[3, 4, 7], &[4, 2, 1]);
        assert_eq!(tangent_cone_ideal(&h3).unwrap().1, 11);
    }

    #[test]
    fn multiplicity_condition_on_generating_sets() {
        let cm = kw(5, 8, &[3], &[1]);
        assert!(multiplicity_variable_condition(&defining_ideal(&cm).unwrap(), 0));
        let h1 = kw(8, 17, &[1, 2, 3], &[4, 3, 2]);
        // η_1 = v^4 − u·u_1 has its longer side v^4 without u.
        assert!(!multiplicity_variable_condition(&defining_ideal(&h1).unwrap(), 0));
        let homog = BinomialIdeal {
            generators: vec![Binomial::pair(vec![0, 1, 1], vec![1, 0, 1])],
            variable_h_degrees: vec![2, 3, 4],
        };
        assert!(multiplicity_variable_condition(&homog, 0)); // vacuous on equal degrees
    }

    #[test]
    fn obstruction_for_condition2_failure() {
        let h1 = kw(8, 17, &[1, 2, 3], &[4, 3, 2]);
        let w = find_cm_obstruction(&h1).unwrap();
        // Procedure starts from η_1 = v^4 − u·u_1 and u_1's factorization
        // is already maximal, so the witness is η_1 itself.
        assert_eq!(w, Binomial::pair(vec![0, 4, 0, 0, 0], vec![1, 0, 1, 0, 0]));
    }

    #[test]
    fn obstruction_for_condition1_failure() {
        let h3 = kw(8, 17, &[3, 4, 7], &[4, 2, 1]);
        let w = find_cm_obstruction(&h3).unwrap();
        // Starts from g_1 = v^2·u_1 − u·u_2 and terminates immediately.
        assert_eq!(w, Binomial::pair(vec![0, 2, 1, 0, 0], vec![1, 0, 0, 1, 0]));
    }

    #[test]
    fn obstruction_rejects_cm_instance() {
        let k = kw(5, 8, &[3], &[1]);
        assert!(find_cm_obstruction(&k).is_err());
    }

    #[test]
    fn obstruction_witness_contract_on_sweep() {
        // Every non-CM instance over a couple of small pairs yields a
        // verified witness: H-homogeneous, length-unbalanced, u-free head.
        for (p, q) in [(5u64, 9u64), (7, 9), (8, 9)] {
            for k in crate::kw::enumerate_kw(p, q, None).unwrap().semigroups {
                if cm_check(&k).cohen_macaulay {
                    continue;
                }
                let w = find_cm_obstruction(&k).unwrap();
                let weights = {
                    let mut ws = vec![k.p(), k.q()];
                    ws.extend_from_slice(k.h());
                    ws
                };
                assert!(w.is_h_homogeneous(&weights));
                let second = w.second.as_ref().unwrap();
                assert!(w.first.total_degree() > second.total_degree());
                assert_eq!(w.first.0[0], 0);
                assert!(second.0[0] >= 1);
            }
        }
    }
}
