//! Per-gate timing of a single C3 application on random graph states.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::c3engine::apply_c3;
use crate::coeff::CycCoeff;
use crate::gate::Gate;
use crate::sample::{random_graph_with_degree, random_operands, random_vops, rng};
use crate::state::{StabilizerTerm, StateSum};

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct BenchPoint {
    pub n: usize,
    pub target_degree: f64,
    /// Mean measured average degree of the sampled graphs.
    pub degree: f64,
    pub samples: usize,
    pub median_ns: f64,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ScalingRow {
    /// `"n"` when n doubled at fixed d, `"d"` when d doubled at fixed n.
    pub doubled: &'static str,
    pub from: (usize, f64),
    pub to: (usize, f64),
    pub ratio: f64,
    pub within: bool,
}

pub const RATIO_LIMIT: f64 = 2.5;

fn median(mut xs: Vec<Duration>) -> f64 {
    xs.sort_unstable();
    let m = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[m].as_nanos() as f64
    } else {
        (xs[m - 1].as_nanos() + xs[m].as_nanos()) as f64 / 2.0
    }
}

/// Times `gate` applied to one random term per sample: random graph with
/// average degree close to `d`, random vertex operators, random operands.
pub fn bench_point(gate: Gate, n: usize, d: f64, samples: usize, seed: u64) -> BenchPoint {
    assert!(samples > 0 && n >= gate.arity());
    let mut r = rng(seed ^ ((n as u64) << 32) ^ d.to_bits());
    let mut times = Vec::with_capacity(samples);
    let mut degree = 0.0;
    for _ in 0..samples {
        let g = random_graph_with_degree(&mut r, n, d);
        degree += g.average_degree();
        let vops = random_vops(&mut r, n);
        let sum = StateSum::from_term(StabilizerTerm::new(CycCoeff::ONE, vops, g));
        let qs = random_operands(&mut r, n, gate.arity());
        let start = Instant::now();
        let out = apply_c3(&sum, gate, &qs).expect("valid operands");
        times.push(start.elapsed());
        std::hint::black_box(out);
    }
    BenchPoint { n, target_degree: d, degree: degree / samples as f64, samples, median_ns: median(times) }
}

/// Measures every `(n, d)` combination and compares medians across each
/// doubling of `n` or `d` present in the grid.
pub fn scaling(
    gate: Gate,
    ns: &[usize],
    ds: &[f64],
    samples: usize,
    seed: u64,
) -> (Vec<BenchPoint>, Vec<ScalingRow>) {
    let mut points = Vec::new();
    for &n in ns {
        for &d in ds {
            points.push(bench_point(gate, n, d, samples, seed));
        }
    }
    let find = |n: usize, d: f64| points.iter().find(|p| p.n == n && p.target_degree == d);
    let mut rows = Vec::new();
    for p in &points {
        let candidates = [("n", find(p.n * 2, p.target_degree)), ("d", find(p.n, p.target_degree * 2.0))];
        for (doubled, q) in candidates {
            if let Some(q) = q {
                let ratio = q.median_ns / p.median_ns.max(1.0);
                rows.push(ScalingRow {
                    doubled,
                    from: (p.n, p.target_degree),
                    to: (q.n, q.target_degree),
                    ratio,
                    within: ratio <= RATIO_LIMIT,
                });
            }
        }
    }
    (points, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_of_odd_and_even() {
        let ms = |v: &[u64]| v.iter().map(|&x| Duration::from_nanos(x)).collect::<Vec<_>>();
        assert_eq!(median(ms(&[5, 1, 3])), 3.0);
        assert_eq!(median(ms(&[4, 1, 3, 2])), 2.5);
    }

    #[test]
    fn grid_rows() {
        let (points, rows) = scaling(Gate::T, &[8, 16], &[2.0, 4.0], 3, 1);
        assert_eq!(points.len(), 4);
        // (8,2)→(16,2), (8,2)→(8,4), (8,4)→(16,4), (16,2)→(16,4)
        assert_eq!(rows.len(), 4);
        assert!(points.iter().all(|p| p.median_ns > 0.0));
    }
}
