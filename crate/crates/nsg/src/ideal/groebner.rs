//! Buchberger completion restricted to binomials and monomials.
//!
//! Generators, S-polynomials and reduction steps of binomial ideals stay
//! binomial (coefficients ±1), so the basis never needs general polynomial
//! arithmetic. Two orders are provided: degree-reverse-lexicographic for
//! ordinary Gröbner bases, and a homogenized order for standard bases of
//! local degree orderings — homogenize the generators with one extra
//! variable (last coordinate), complete, then set that variable to 1.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

pub type Mono = Vec<u64>;

/// Default cap on the working basis size.
pub const DEFAULT_BASIS_CAP: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    /// Global: total degree, ties by reverse lexicographic with the first
    /// variable smallest.
    DegRevLex,
    /// Homogenized local order: total degree (including the homogenizing
    /// last variable), then smaller base degree wins, then reverse lex on
    /// the base variables. Restricted to the homogeneous slice this makes
    /// the lead term carry the lowest base degree.
    HomogenizedLocal,
}

fn revlex(a: &[u64], b: &[u64]) -> Ordering {
    for j in 0..a.len() {
        match a[j].cmp(&b[j]) {
            Ordering::Equal => continue,
            // more of the smallest variable loses
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

pub fn cmp_mono(order: Order, a: &Mono, b: &Mono) -> Ordering {
    let (da, db) = (a.iter().sum::<u64>(), b.iter().sum::<u64>());
    match order {
        Order::DegRevLex => da.cmp(&db).then_with(|| revlex(a, b)),
        Order::HomogenizedLocal => {
            let n = a.len() - 1;
            let (za, zb) = (da - a[n], db - b[n]);
            da.cmp(&db)
                .then_with(|| zb.cmp(&za))
                .then_with(|| revlex(&a[..n], &b[..n]))
        }
    }
}

fn divides(d: &Mono, m: &Mono) -> bool {
    d.iter().zip(m).all(|(&a, &b)| a <= b)
}

fn div(m: &Mono, d: &Mono) -> Mono {
    m.iter().zip(d).map(|(&a, &b)| a - b).collect()
}

fn mul(a: &Mono, b: &Mono) -> Mono {
    a.iter().zip(b).map(|(&x, &y)| x + y).collect()
}

fn lcm(a: &Mono, b: &Mono) -> Mono {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

/// A monic binomial lead − tail, or a monomial when `tail` is `None`.
/// Signs are irrelevant for ideal generation and are not tracked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    pub lead: Mono,
    pub tail: Option<Mono>,
}

impl Element {
    /// Orient a difference of monomials; `None` is the zero element.
    pub fn oriented(first: Mono, second: Option<Mono>, order: Order) -> Option<Element> {
        match second {
            None => Some(Element {
                lead: first,
                tail: None,
            }),
            Some(second) => match cmp_mono(order, &first, &second) {
                Ordering::Equal => None,
                Ordering::Greater => Some(Element {
                    lead: first,
                    tail: Some(second),
                }),
                Ordering::Less => Some(Element {
                    lead: second,
                    tail: Some(first),
                }),
            },
        }
    }
}

fn s_pair(f: &Element, g: &Element, order: Order) -> Option<Element> {
    let l = lcm(&f.lead, &g.lead);
    let (cf, cg) = (div(&l, &f.lead), div(&l, &g.lead));
    match (&f.tail, &g.tail) {
        (None, None) => None,
        (Some(ft), None) => Some(Element {
            lead: mul(&cf, ft),
            tail: None,
        }),
        (None, Some(gt)) => Some(Element {
            lead: mul(&cg, gt),
            tail: None,
        }),
        (Some(ft), Some(gt)) => Element::oriented(mul(&cg, gt), Some(mul(&cf, ft)), order),
    }
}

/// Full normal form against `basis`; `None` means reduction to zero.
pub fn normal_form(elem: &Element, basis: &[Element], order: Order) -> Option<Element> {
    let mut cur = elem.clone();
    'outer: loop {
        for g in basis {
            if divides(&g.lead, &cur.lead) {
                let c = div(&cur.lead, &g.lead);
                let replacement = g.tail.as_ref().map(|t| mul(&c, t));
                cur = match (replacement, cur.tail.take()) {
                    (None, None) => return None,
                    (None, Some(t)) => Element {
                        lead: t,
                        tail: None,
                    },
                    (Some(r), None) => Element {
                        lead: r,
                        tail: None,
                    },
                    (Some(r), Some(t)) => Element::oriented(r, Some(t), order)?,
                };
                continue 'outer;
            }
        }
        if let Some(tail) = &cur.tail {
            for g in basis {
                if divides(&g.lead, tail) {
                    let c = div(tail, &g.lead);
                    match &g.tail {
                        None => cur.tail = None,
                        Some(gt) => {
                            let nt = mul(&c, gt);
                            if nt == cur.lead {
                                return None;
                            }
                            cur.tail = Some(nt);
                        }
                    }
                    continue 'outer;
                }
            }
        }
        return Some(cur);
    }
}

/// Buchberger completion with the coprime-lead pair criterion and a hard
/// cap on the basis size.
pub fn buchberger(generators: &[Element], order: Order, cap: usize) -> Result<Vec<Element>> {
    let mut basis: Vec<Element> = Vec::new();
    for g in generators {
        if let Some(e) = normal_form(g, &basis, order) {
            basis.push(e);
        }
    }
    // pair queue keyed by lcm degree for a deterministic normal strategy
    let mut pairs: BinaryHeap<std::cmp::Reverse<(u64, usize, usize)>> = BinaryHeap::new();
    let push_pairs = |pairs: &mut BinaryHeap<std::cmp::Reverse<(u64, usize, usize)>>,
                      basis: &[Element],
                      j: usize| {
        for i in 0..j {
            let l = lcm(&basis[i].lead, &basis[j].lead);
            pairs.push(std::cmp::Reverse((l.iter().sum(), i, j)));
        }
    };
    for j in 0..basis.len() {
        push_pairs(&mut pairs, &basis, j);
    }
    while let Some(std::cmp::Reverse((_, i, j))) = pairs.pop() {
        let (f, g) = (&basis[i], &basis[j]);
        // coprime leads: S-polynomial reduces to zero
        if f.lead.iter().zip(&g.lead).all(|(&a, &b)| a.min(b) == 0) {
            continue;
        }
        let Some(s) = s_pair(f, g, order) else {
            continue;
        };
        if let Some(r) = normal_form(&s, &basis, order) {
            basis.push(r);
            if basis.len() > cap {
                return Err(Error::resource(format!("basis exceeded {cap} elements")));
            }
            push_pairs(&mut pairs, &basis, basis.len() - 1);
        }
    }
    Ok(interreduce(basis, order))
}

/// Keep only elements with minimal leads, then reduce every tail; output
/// sorted by lead for reproducibility.
fn interreduce(mut basis: Vec<Element>, order: Order) -> Vec<Element> {
    basis.sort_by(|a, b| cmp_mono(order, &a.lead, &b.lead));
    let mut minimal: Vec<Element> = Vec::new();
    for e in basis {
        if !minimal.iter().any(|m| divides(&m.lead, &e.lead)) {
            minimal.push(e);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Element> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, e)| e.clone())
            .collect();
        if let Some(e) = normal_form(&minimal[i], &others, order) {
            reduced.push(e)
        }
    }
    reduced.sort_by(|a, b| cmp_mono(order, &a.lead, &b.lead));
    reduced
}

/// Membership test: does `elem` reduce to zero against `basis`?
pub fn reduces_to_zero(elem: &Element, basis: &[Element], order: Order) -> bool {
    normal_form(elem, basis, order).is_none()
}
