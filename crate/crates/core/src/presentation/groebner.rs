//! Buchberger's algorithm specialized to pure binomials `x^a - x^b`.
//!
//! S-polynomials and reductions of pure binomials are again pure binomials
//! or zero, so a polynomial is just an ordered pair of exponent vectors and
//! no coefficient arithmetic is needed.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use crate::error::GkzError;

/// `x^lead - x^trail` with `lead > trail` in the active order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    pub lead: Vec<u32>,
    pub trail: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic with `x_0 > x_1 > ...`.
    Grevlex,
    /// Degree in `x_0` first, ties broken by grevlex: eliminates `x_0`.
    EliminateFirst,
}

impl MonomialOrder {
    pub fn cmp(self, a: &[u32], b: &[u32]) -> Ordering {
        if self == MonomialOrder::EliminateFirst {
            match a[0].cmp(&b[0]) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        let da: u64 = a.iter().map(|&e| u64::from(e)).sum();
        let db: u64 = b.iter().map(|&e| u64::from(e)).sum();
        da.cmp(&db).then_with(|| {
            for i in (0..a.len()).rev() {
                if a[i] != b[i] {
                    // smaller exponent in the last differing variable is larger
                    return b[i].cmp(&a[i]);
                }
            }
            Ordering::Equal
        })
    }

    /// Orients `x^a - x^b`; `None` when the two monomials coincide.
    pub fn binomial(self, a: Vec<u32>, b: Vec<u32>) -> Option<Binomial> {
        match self.cmp(&a, &b) {
            Ordering::Equal => None,
            Ordering::Greater => Some(Binomial { lead: a, trail: b }),
            Ordering::Less => Some(Binomial { lead: b, trail: a }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerLimits {
    pub max_spairs: usize,
    pub time_cap: Duration,
}

impl Default for GroebnerLimits {
    fn default() -> Self {
        Self {
            max_spairs: 10_000,
            time_cap: Duration::from_secs(30),
        }
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// `m / a * b`, assuming `a | m`.
fn replace(m: &[u32], a: &[u32], b: &[u32]) -> Vec<u32> {
    m.iter()
        .zip(a)
        .zip(b)
        .map(|((m, a), b)| m - a + b)
        .collect()
}

/// Full reduction (leading and trailing term) of `p` modulo `basis`.
pub fn reduce(p: &Binomial, basis: &[Binomial], order: MonomialOrder) -> Option<Binomial> {
    let mut p = p.clone();
    loop {
        if let Some(g) = basis.iter().find(|g| divides(&g.lead, &p.lead)) {
            p = order.binomial(replace(&p.lead, &g.lead, &g.trail), p.trail)?;
            continue;
        }
        if let Some(g) = basis.iter().find(|g| divides(&g.lead, &p.trail)) {
            p = order.binomial(p.lead, replace(&p.trail, &g.lead, &g.trail))?;
            continue;
        }
        return Some(p);
    }
}

/// Reduced Gröbner basis of the ideal generated by `generators`.
pub fn groebner_basis(
    generators: &[Binomial],
    order: MonomialOrder,
    limits: &GroebnerLimits,
) -> Result<Vec<Binomial>, GkzError> {
    let start = Instant::now();
    let mut basis: Vec<Binomial> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let add = |p: Binomial, basis: &mut Vec<Binomial>, pairs: &mut Vec<(usize, usize)>| {
        let k = basis.len();
        pairs.extend((0..k).map(|i| (i, k)));
        basis.push(p);
    };
    for g in generators {
        if let Some(r) = reduce(g, &basis, order) {
            add(r, &mut basis, &mut pairs);
        }
    }
    let mut processed = 0usize;
    while !pairs.is_empty() {
        // normal strategy: smallest lcm first
        let best = (0..pairs.len())
            .min_by(|&x, &y| {
                let (a, b) = pairs[x];
                let (c, d) = pairs[y];
                order.cmp(
                    &lcm(&basis[a].lead, &basis[b].lead),
                    &lcm(&basis[c].lead, &basis[d].lead),
                )
            })
            .expect("pairs is nonempty");
        let (i, j) = pairs.swap_remove(best);
        processed += 1;
        if processed > limits.max_spairs {
            return Err(GkzError::ScaleLimit(format!(
                "Gröbner basis computation exceeded {} S-pairs",
                limits.max_spairs
            )));
        }
        if start.elapsed() > limits.time_cap {
            return Err(GkzError::ScaleLimit(format!(
                "Gröbner basis computation exceeded {:?}",
                limits.time_cap
            )));
        }
        let (f, g) = (&basis[i], &basis[j]);
        if coprime(&f.lead, &g.lead) {
            continue;
        }
        let l = lcm(&f.lead, &g.lead);
        let Some(s) = order.binomial(
            replace(&l, &f.lead, &f.trail),
            replace(&l, &g.lead, &g.trail),
        ) else {
            continue;
        };
        if let Some(r) = reduce(&s, &basis, order) {
            add(r, &mut basis, &mut pairs);
        }
    }

    // Minimize, then tail-reduce.
    let mut minimal: Vec<Binomial> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(m, h)| m != k && divides(&h.lead, &g.lead) && (h.lead != g.lead || m < k));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Binomial> = (0..minimal.len())
        .map(|k| {
            let others: Vec<Binomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(m, _)| m != k)
                .map(|(_, h)| h.clone())
                .collect();
            reduce(&minimal[k], &others, order)
                .expect("a minimal basis element has an irreducible lead")
        })
        .collect();
    reduced.sort_by(|a, b| {
        order
            .cmp(&a.lead, &b.lead)
            .then_with(|| order.cmp(&a.trail, &b.trail))
    });
    Ok(reduced)
}
