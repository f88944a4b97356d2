//! Wall-clock benchmarks over a grid of generated walk instances.

use std::fmt;
use std::hint::black_box;
use std::str::FromStr;
use std::time::Instant;

use crate::error::{precondition, Error, Result};
use crate::gen::gen_random_walk_instance;
use crate::instance::{Color, Variant, WalkInstance};
use crate::solvers::{solve_uniform_color_power, solve_walk_dp, solve_walk_matrix_chain, uniform_color};

pub const BENCH_HEADER: &str = "solver,n,m,l,variant,seed,time_ns,answer";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BenchSolver {
    Dp,
    MatrixChain,
    UniformPower,
}

impl BenchSolver {
    pub const ALL: [BenchSolver; 3] = [BenchSolver::Dp, BenchSolver::MatrixChain, BenchSolver::UniformPower];

    pub fn name(self) -> &'static str {
        match self {
            BenchSolver::Dp => "dp",
            BenchSolver::MatrixChain => "matrix-chain",
            BenchSolver::UniformPower => "uniform-power",
        }
    }

    fn uses_matrices(self) -> bool {
        self != BenchSolver::Dp
    }

    pub fn run(self, inst: &WalkInstance) -> Result<bool> {
        match self {
            BenchSolver::Dp => Ok(solve_walk_dp(inst)),
            BenchSolver::MatrixChain => Ok(solve_walk_matrix_chain(inst)),
            BenchSolver::UniformPower => solve_uniform_color_power(inst),
        }
    }
}

impl fmt::Display for BenchSolver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BenchSolver {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BenchSolver::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::Unknown(format!("solver {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub solver: BenchSolver,
    pub n: usize,
    pub m: usize,
    pub l: usize,
    pub variant: Variant,
    pub seed: u64,
    pub time_ns: u128,
    pub answer: bool,
}

impl BenchRecord {
    pub fn work(&self) -> f64 {
        self.m as f64 * self.l as f64
    }
}

impl fmt::Display for BenchRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{},{},{},{},{}",
            self.solver,
            self.n,
            self.m,
            self.l,
            self.variant,
            self.seed,
            self.time_ns,
            if self.answer { "YES" } else { "NO" }
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum BenchLine {
    Record(BenchRecord),
    /// A cell left out by a guard; rendered as a `#` comment line.
    Skipped { solver: BenchSolver, n: usize, reason: String },
}

impl fmt::Display for BenchLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BenchLine::Record(r) => r.fmt(f),
            BenchLine::Skipped { solver, n, reason } => write!(f, "# skipped {solver} n={n}: {reason}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchGrid {
    pub ns: Vec<usize>,
    pub betas: Vec<f64>,
    pub alpha: f64,
    pub variants: Vec<Variant>,
    pub colors: Color,
    pub solvers: Vec<BenchSolver>,
    /// Timed repetitions per cell; one extra untimed warm-up run precedes them.
    pub repetitions: usize,
    pub seed: u64,
    /// Largest `n` for the `n × n` matrix baselines.
    pub max_matrix_n: usize,
    /// Largest edge count generated.
    pub max_edges: usize,
}

impl Default for BenchGrid {
    fn default() -> Self {
        BenchGrid {
            ns: vec![128, 256, 512],
            betas: vec![1.0],
            alpha: 2.0,
            variants: vec![Variant::DIR_EDGE],
            colors: 2,
            solvers: vec![BenchSolver::Dp, BenchSolver::MatrixChain],
            repetitions: 5,
            seed: 1,
            max_matrix_n: 4096,
            max_edges: 1 << 26,
        }
    }
}

fn median(mut xs: Vec<u128>) -> u128 {
    xs.sort_unstable();
    xs[xs.len() / 2]
}

/// Median wall time of `reps` runs after one warm-up run.
pub fn time_solver(solver: BenchSolver, inst: &WalkInstance, reps: usize) -> Result<(u128, bool)> {
    let answer = black_box(solver.run(black_box(inst))?);
    let mut times = Vec::with_capacity(reps);
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        let a = black_box(solver.run(black_box(inst))?);
        let elapsed = start.elapsed().as_nanos().max(1);
        debug_assert_eq!(a, answer);
        times.push(elapsed);
    }
    Ok((median(times), answer))
}

/// Runs the grid strictly sequentially, handing each line to `sink` as soon
/// as it is measured.
pub fn run_bench(grid: &BenchGrid, mut sink: impl FnMut(&BenchLine)) -> Result<Vec<BenchLine>> {
    if grid.repetitions == 0 {
        return precondition("repetitions must be at least 1");
    }
    let mut lines = Vec::new();
    let mut emit = |line: BenchLine, lines: &mut Vec<BenchLine>| {
        sink(&line);
        lines.push(line);
    };
    for &variant in &grid.variants {
        for &beta in &grid.betas {
            for &n in &grid.ns {
                let m_est = crate::gen::ceil_pow(n, grid.alpha);
                if m_est > grid.max_edges {
                    for &solver in &grid.solvers {
                        let reason = format!("~{m_est} edges exceed the guard {}", grid.max_edges);
                        emit(BenchLine::Skipped { solver, n, reason }, &mut lines);
                    }
                    continue;
                }
                let inst = gen_random_walk_instance(n, grid.alpha, beta, grid.colors, variant, grid.seed)?;
                for &solver in &grid.solvers {
                    if solver.uses_matrices() && n > grid.max_matrix_n {
                        let reason = format!("n exceeds the matrix guard {}", grid.max_matrix_n);
                        emit(BenchLine::Skipped { solver, n, reason }, &mut lines);
                        continue;
                    }
                    if solver == BenchSolver::UniformPower && uniform_color(&inst.seq).is_none() && !inst.seq.is_empty() {
                        let reason = "sequence is not single-colored".to_string();
                        emit(BenchLine::Skipped { solver, n, reason }, &mut lines);
                        continue;
                    }
                    let (time_ns, answer) = time_solver(solver, &inst, grid.repetitions)?;
                    let record = BenchRecord {
                        solver,
                        n,
                        m: inst.graph.m(),
                        l: inst.l(),
                        variant,
                        seed: grid.seed,
                        time_ns,
                        answer,
                    };
                    emit(BenchLine::Record(record), &mut lines);
                }
            }
        }
    }
    Ok(lines)
}

/// Least-squares slope of `ln y` against `ln x`; needs two distinct `x`.
pub fn fit_loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|&(x, y)| (x.ln(), y.ln()))
        .collect();
    let k = pts.len() as f64;
    if pts.len() < 2 {
        return None;
    }
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Slope of time against `m·ℓ` for each solver and variant present.
pub fn slopes(lines: &[BenchLine]) -> Vec<(BenchSolver, Variant, Option<f64>)> {
    let mut keys: Vec<(BenchSolver, Variant)> = Vec::new();
    for l in lines {
        if let BenchLine::Record(r) = l {
            if !keys.contains(&(r.solver, r.variant)) {
                keys.push((r.solver, r.variant));
            }
        }
    }
    keys.into_iter()
        .map(|(s, v)| {
            let pts: Vec<(f64, f64)> = lines
                .iter()
                .filter_map(|l| match l {
                    BenchLine::Record(r) if r.solver == s && r.variant == v => Some((r.work(), r.time_ns as f64)),
                    _ => None,
                })
                .collect();
            (s, v, fit_loglog_slope(&pts))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_a_power_law() {
        let pts: Vec<_> = [1.0, 2.0, 4.0, 8.0].iter().map(|&x: &f64| (x, 3.0 * x.powf(1.5))).collect();
        assert!((fit_loglog_slope(&pts).unwrap() - 1.5).abs() < 1e-9);
        assert_eq!(fit_loglog_slope(&pts[..1]), None);
    }

    #[test]
    fn solvers_agree_per_cell() {
        let grid = BenchGrid {
            ns: vec![16, 24],
            repetitions: 1,
            solvers: BenchSolver::ALL.to_vec(),
            ..BenchGrid::default()
        };
        let lines = run_bench(&grid, |_| {}).unwrap();
        for n in [16, 24] {
            let answers: Vec<bool> = lines
                .iter()
                .filter_map(|l| match l {
                    BenchLine::Record(r) if r.n == n => Some(r.answer),
                    _ => None,
                })
                .collect();
            assert!(answers.len() >= 2);
            assert!(answers.windows(2).all(|w| w[0] == w[1]));
        }
        // two colors: the uniform-power baseline is skipped with a marker
        assert!(lines.iter().any(|l| l.to_string().starts_with("# skipped uniform-power")));
    }

    #[test]
    fn record_matches_header() {
        let r = BenchRecord {
            solver: BenchSolver::Dp,
            n: 4,
            m: 4,
            l: 4,
            variant: Variant::DIR_EDGE,
            seed: 7,
            time_ns: 10,
            answer: true,
        };
        assert_eq!(r.to_string(), "dp,4,4,4,dir-edge,7,10,YES");
        assert_eq!(r.to_string().split(',').count(), BENCH_HEADER.split(',').count());
    }

    #[test]
    fn solver_names_parse() {
        for s in BenchSolver::ALL {
            assert_eq!(s.name().parse::<BenchSolver>().unwrap(), s);
        }
        assert!("fast".parse::<BenchSolver>().is_err());
    }
}
