use std::fmt::Write as _;
use std::time::Duration;

use bdd_core::{DegreeBound, Graph, KernelResult};

/// Oracle figures added by `kernelize --exact`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactFigures {
    pub alpha_kernel: usize,
}

/// One kernelization run, emitted as flat `key=value` lines.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub kernel_n: usize,
    pub kernel_m: usize,
    pub c_size: usize,
    pub i_size: usize,
    pub rounds: usize,
    pub packing_upgrades: usize,
    pub repair_iterations: usize,
    pub special_set: usize,
    pub bound_factor: u64,
    pub wall_time: Duration,
    pub exact: Option<ExactFigures>,
}

impl RunReport {
    pub fn new(
        g: &Graph,
        d: DegreeBound,
        result: &KernelResult,
        bound_factor: u64,
        wall_time: Duration,
    ) -> Self {
        let report = Self {
            n: g.vertex_count(),
            m: g.edge_count(),
            d: d.get(),
            kernel_n: result.kernel.vertex_count(),
            kernel_m: result.kernel.edge_count(),
            c_size: result.c_total.len(),
            i_size: result.i_total.len(),
            rounds: result.rounds,
            packing_upgrades: result.packing_upgrades(),
            repair_iterations: result.repair_iterations(),
            special_set: result
                .stats
                .first()
                .map_or(0, |r| r.decompose.special_deletion_set_size),
            bound_factor,
            wall_time,
            exact: None,
        };
        debug_assert_eq!(report.kernel_n + report.c_size + report.i_size, report.n);
        report
    }

    pub fn to_key_value(&self) -> String {
        let mut out = String::new();
        let mut kv = |k: &str, v: &dyn std::fmt::Display| writeln!(out, "{k}={v}").unwrap();
        kv("n", &self.n);
        kv("m", &self.m);
        kv("d", &self.d);
        kv("kernel_n", &self.kernel_n);
        kv("kernel_m", &self.kernel_m);
        kv("c_size", &self.c_size);
        kv("i_size", &self.i_size);
        kv("rounds", &self.rounds);
        kv("packing_upgrades", &self.packing_upgrades);
        kv("repair_iterations", &self.repair_iterations);
        kv("special_set", &self.special_set);
        kv("packing_policy", &"greedy-lowest-index");
        kv("bound_factor", &self.bound_factor);
        kv(
            "wall_time_ms",
            &format!("{:.3}", self.wall_time.as_secs_f64() * 1e3),
        );
        if let Some(exact) = self.exact {
            kv("alpha_kernel", &exact.alpha_kernel);
            let ratio = if exact.alpha_kernel == 0 {
                "0".to_string()
            } else {
                format!("{:.4}", self.kernel_n as f64 / exact.alpha_kernel as f64)
            };
            kv("bound_ratio", &ratio);
            kv(
                "bound_holds",
                &(self.kernel_n as u64 <= self.bound_factor * exact.alpha_kernel as u64),
            );
        }
        out
    }
}
