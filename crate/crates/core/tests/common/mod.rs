#![allow(dead_code)]

use std::path::PathBuf;

use absolute_core::absolute::{describe_absolute, AbsoluteDescriptor, DescribeOptions};
use absolute_core::latgeo::{rational_point_on_lambda, DistributionPoint};
use absolute_core::rational::{rat, Rational};
use absolute_core::{parse_presentation, Presentation};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const GOLDEN: &[&str] = &[
    "free2",
    "free3",
    "z",
    "z2",
    "z3",
    "z_0_6_m1",
    "tripod",
    "two_points",
    "z5",
    "z_times_z2",
    "z_with_unit",
];

pub fn presentation_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../presentations").join(format!("{name}.sgp"))
}

pub fn load(name: &str) -> Presentation {
    let text = std::fs::read_to_string(presentation_path(name)).expect("golden presentation exists");
    parse_presentation(&text).expect("golden presentation parses")
}

pub fn describe(name: &str) -> AbsoluteDescriptor {
    describe_absolute(&load(name), &DescribeOptions::default()).expect("describe succeeds")
}

pub fn exact(w: &[(i64, i64)]) -> DistributionPoint {
    DistributionPoint::exact(w.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
}

/// Random rational distribution with denominator `den`, possibly with zeros.
pub fn random_distribution(rng: &mut ChaCha8Rng, n: usize, den: i64) -> DistributionPoint {
    let mut cuts: Vec<i64> = (0..n - 1).map(|_| rng.gen_range(0..=den)).collect();
    cuts.push(0);
    cuts.push(den);
    cuts.sort_unstable();
    let w: Vec<Rational> = cuts.windows(2).map(|c| rat(c[1] - c[0], den)).collect();
    DistributionPoint::exact(w).unwrap()
}

/// Random positive rational distribution.
pub fn random_positive(rng: &mut ChaCha8Rng, n: usize) -> DistributionPoint {
    let raw: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=9)).collect();
    let total: i64 = raw.iter().sum();
    DistributionPoint::exact(raw.into_iter().map(|x| rat(x, total)).collect()).unwrap()
}

/// Exact point of Λ from random positive toric parameters.
pub fn random_lambda_point(rng: &mut ChaCha8Rng, d: &AbsoluteDescriptor) -> DistributionPoint {
    let t: Vec<Rational> = (0..d.chart.dimension).map(|_| rat(rng.gen_range(1..=4), rng.gen_range(1..=4))).collect();
    rational_point_on_lambda(&d.central_lattice, &t).unwrap()
}

/// Mix of precentral points (strata samples, toric points) and arbitrary
/// rational distributions.
pub fn sample_measures(rng: &mut ChaCha8Rng, d: &AbsoluteDescriptor, count: usize) -> Vec<DistributionPoint> {
    let n = d.generators.len();
    let mut out: Vec<DistributionPoint> = d.strata.iter().map(|s| s.sample.clone()).collect();
    out.truncate(count / 3);
    while out.len() < 2 * count / 3 {
        out.push(random_lambda_point(rng, d));
    }
    while out.len() < count {
        out.push(random_distribution(rng, n, 12));
    }
    out
}
