//! Exhaustive agreement runs between the theorem classifiers and the
//! vertex oracle.
//!
//! Every primary inequality on `A_n` (disjoint `A`, `B`, `β ∈ {-1,0,1}`,
//! `A ∪ B ≠ ∅`) is classified twice: by the combinatorial theorems and by
//! scanning the polytope's vertex set. The scan parallelizes over
//! candidates with a deterministic merge, so the output is independent of
//! the thread count.

use std::sync::atomic::{AtomicUsize, Ordering};

use serde::Serialize;

use crate::exactlin::IntRankAccumulator;
use crate::polytope::VertexSet;
use crate::primaryineq::{classify_pio, classify_ppo, classify_pso_fdi, PrimaryInequality};
use crate::relations::{arc_count, Arc, OrderClass};
use crate::{Error, Result};

/// One candidate on which theorem and oracle disagree.
#[derive(Clone, Debug, Serialize)]
pub struct Disagreement {
    pub ineq: PrimaryInequality,
    pub theorem_valid: bool,
    pub theorem_fdi: bool,
    pub oracle_valid: bool,
    pub oracle_fdi: bool,
}

/// Result of one exhaustive run.
#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub n: usize,
    pub class: OrderClass,
    pub candidates: u64,
    pub disagreements: Vec<Disagreement>,
}

impl CrosscheckReport {
    pub fn agreed(&self) -> bool {
        self.disagreements.is_empty()
    }
}

fn classify(class: OrderClass, p: &PrimaryInequality) -> Result<(bool, bool)> {
    match class {
        OrderClass::PartialOrder => {
            let c = classify_ppo(p);
            Ok((c.valid, c.fdi))
        }
        OrderClass::IntervalOrder => {
            let c = classify_pio(p);
            Ok((c.valid, c.fdi))
        }
        OrderClass::Semiorder => {
            let v = classify_pso_fdi(p);
            Ok((v.valid, v.fdi))
        }
        other => Err(Error::InvalidInequality(format!(
            "no primary classification theorem for {other}"
        ))),
    }
}

/// Validity and facet flags straight from the vertex masks. Valid proper
/// faces of a full polytope have affine rank at most dim-1, so the rank
/// scan exits early as soon as the facet threshold is reached.
fn oracle_flags(masks: &[u64], arcs: usize, dim: usize, a: u64, b: u64, beta: i32) -> (bool, bool) {
    let mut tight: Vec<u64> = Vec::new();
    for &m in masks {
        let lhs = (m & a).count_ones() as i32 - (m & b).count_ones() as i32;
        if lhs > beta {
            return (false, false);
        }
        if lhs == beta {
            tight.push(m);
        }
    }
    if tight.is_empty() {
        return (true, false);
    }
    let base = tight[0];
    let mut acc = IntRankAccumulator::new();
    let mut row = vec![0i128; arcs];
    for &t in &tight[1..] {
        for (k, slot) in row.iter_mut().enumerate() {
            *slot = (t >> k & 1) as i128 - (base >> k & 1) as i128;
        }
        if acc.insert(&row) && acc.rank() == dim - 1 {
            return (true, true);
        }
    }
    (true, false)
}

/// Runs the exhaustive cross-check for one polytope at one n.
pub fn crosscheck(n: usize, class: OrderClass, threads: usize) -> Result<CrosscheckReport> {
    let vs = VertexSet::build(n, class)?;
    crosscheck_against(&vs, threads)
}

pub fn crosscheck_against(vs: &VertexSet, threads: usize) -> Result<CrosscheckReport> {
    let n = vs.n();
    let class = vs.class();
    // fail fast if the class has no classifier
    classify(class, &PrimaryInequality::from_pairs(n, &[(1, 2)], &[], 1)?)?;

    let arcs = arc_count(n);
    let masks: Vec<u64> = vs.vertices().iter().map(|v| v.bits()).collect();
    let dim = vs.dim();
    let patterns: u64 = 3u64.pow(arcs as u32);
    let threads = threads.max(1);
    let chunk = patterns.div_ceil((threads * 16) as u64).max(1);
    let chunks: Vec<(u64, u64)> =
        (0..patterns).step_by(chunk as usize).map(|s| (s, (s + chunk).min(patterns))).collect();

    let next = AtomicUsize::new(0);
    let all_arcs: Vec<Arc> = crate::relations::all_arcs(n).collect();

    let run_chunk = |start: u64, end: u64| -> Vec<Disagreement> {
        let mut out = Vec::new();
        for pattern in start..end {
            if pattern == 0 {
                continue; // A ∪ B must be nonempty
            }
            let mut a_mask = 0u64;
            let mut b_mask = 0u64;
            let mut rem = pattern;
            for k in 0..arcs {
                match rem % 3 {
                    1 => a_mask |= 1 << k,
                    2 => b_mask |= 1 << k,
                    _ => {}
                }
                rem /= 3;
            }
            let a_set: std::collections::BTreeSet<Arc> = all_arcs
                .iter()
                .enumerate()
                .filter(|(k, _)| a_mask >> k & 1 == 1)
                .map(|(_, &x)| x)
                .collect();
            let b_set: std::collections::BTreeSet<Arc> = all_arcs
                .iter()
                .enumerate()
                .filter(|(k, _)| b_mask >> k & 1 == 1)
                .map(|(_, &x)| x)
                .collect();
            for beta in [-1i8, 0, 1] {
                let p = PrimaryInequality::new(n, a_set.clone(), b_set.clone(), beta)
                    .expect("candidate is structurally primary");
                let (tv, tf) = classify(class, &p).expect("classifier checked above");
                let (ov, of) = oracle_flags(&masks, arcs, dim, a_mask, b_mask, beta as i32);
                if tv != ov || tf != of {
                    out.push(Disagreement {
                        ineq: p,
                        theorem_valid: tv,
                        theorem_fdi: tf,
                        oracle_valid: ov,
                        oracle_fdi: of,
                    });
                }
            }
        }
        out
    };

    let mut per_chunk: Vec<Vec<Disagreement>> = Vec::with_capacity(chunks.len());
    per_chunk.resize_with(chunks.len(), Vec::new);
    if threads == 1 {
        for (ci, &(s, e)) in chunks.iter().enumerate() {
            per_chunk[ci] = run_chunk(s, e);
        }
    } else {
        let slots: Vec<std::sync::Mutex<Vec<Disagreement>>> =
            chunks.iter().map(|_| std::sync::Mutex::new(Vec::new())).collect();
        std::thread::scope(|scope| {
            for _ in 0..threads {
                scope.spawn(|| loop {
                    let ci = next.fetch_add(1, Ordering::Relaxed);
                    if ci >= chunks.len() {
                        break;
                    }
                    let (s, e) = chunks[ci];
                    *slots[ci].lock().unwrap() = run_chunk(s, e);
                });
            }
        });
        for (ci, slot) in slots.into_iter().enumerate() {
            per_chunk[ci] = slot.into_inner().unwrap();
        }
    }

    Ok(CrosscheckReport {
        n,
        class,
        candidates: (patterns - 1) * 3,
        disagreements: per_chunk.concat(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n3_all_three_polytopes_agree() {
        for class in
            [OrderClass::PartialOrder, OrderClass::IntervalOrder, OrderClass::Semiorder]
        {
            let report = crosscheck(3, class, 2).unwrap();
            assert_eq!(report.candidates, 2184);
            assert!(
                report.agreed(),
                "{} disagreements on {class}: first = {:?}",
                report.disagreements.len(),
                report.disagreements.first()
            );
        }
    }

    #[test]
    fn thread_count_does_not_change_the_report() {
        let a = crosscheck(3, OrderClass::Semiorder, 1).unwrap();
        let b = crosscheck(3, OrderClass::Semiorder, 4).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn no_classifier_for_linear_orders() {
        assert!(crosscheck(3, OrderClass::LinearOrder, 1).is_err());
    }
}
