//! ρ(Δ_S) as an exact integer polytope.
//!
//! ρ is the linear map `μ ↦ Aμ` where the rows of `A` are the chart basis,
//! so ρ(e_s) is the s-th column of `A`. Facets are found by brute force over
//! affinely independent d-subsets, which is adequate for |S| ≤ 20.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::chart::chart;
use super::distribution::DistributionPoint;
use super::hnf::{hermite_basis, integer_kernel};
use super::lattice::IntegerLattice;
use crate::rational::{int, Rational};

/// `normal · y ≤ offset`, with `(normal, offset)` primitive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl Facet {
    fn slack(&self, y: &[i64]) -> i64 {
        self.offset - dot(&self.normal, y)
    }

    pub fn slack_rational(&self, y: &[Rational]) -> Rational {
        let lhs: Rational = self.normal.iter().zip(y).map(|(&n, v)| int(n) * v).sum();
        int(self.offset) - lhs
    }

    pub fn slack_f64(&self, y: &[f64]) -> f64 {
        self.offset as f64 - self.normal.iter().zip(y).map(|(&n, v)| n as f64 * v).sum::<f64>()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectedPolytope {
    /// Rows of the chart basis; ρ(μ) = projection · μ.
    pub projection: Vec<Vec<i64>>,
    /// ρ(e_s) for every generator s.
    pub vertex_images: Vec<Vec<i64>>,
    /// Generators whose image is a vertex (first index for coincident images).
    pub hull_vertices: Vec<usize>,
    pub vertices: Vec<Vec<i64>>,
    pub facets: Vec<Facet>,
    pub dimension: usize,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl ProjectedPolytope {
    pub fn num_generators(&self) -> usize {
        self.vertex_images.len()
    }

    pub fn project(&self, mu: &DistributionPoint) -> Vec<Rational> {
        match mu {
            DistributionPoint::Exact(w) => self
                .projection
                .iter()
                .map(|row| row.iter().zip(w).map(|(&a, m)| int(a) * m).sum())
                .collect(),
            DistributionPoint::Float(_) => self
                .project_f64(&mu.to_f64())
                .into_iter()
                .map(|x| Rational::from_float(x).unwrap_or_else(Rational::zero))
                .collect(),
        }
    }

    pub fn project_f64(&self, mu: &[f64]) -> Vec<f64> {
        self.projection
            .iter()
            .map(|row| row.iter().zip(mu).map(|(&a, m)| a as f64 * m).sum())
            .collect()
    }

    pub fn contains(&self, y: &[Rational]) -> bool {
        self.facets.iter().all(|f| !f.slack_rational(y).is_negative())
    }

    pub fn contains_strictly(&self, y: &[Rational]) -> bool {
        self.facets.iter().all(|f| f.slack_rational(y).is_positive())
    }

    /// Inside the polytope and tight on at least one facet.
    pub fn on_boundary(&self, y: &[Rational]) -> bool {
        self.contains(y) && self.facets.iter().any(|f| f.slack_rational(y).is_zero())
    }

    /// Minimum facet slack of a float point (negative outside).
    pub fn min_slack_f64(&self, y: &[f64]) -> f64 {
        self.facets.iter().map(|f| f.slack_f64(y)).fold(f64::INFINITY, f64::min)
    }

    /// Generator sets (bitmasks) whose images span a face, from the whole
    /// polytope down to single vertices. The empty face is omitted.
    pub fn faces(&self) -> Vec<u64> {
        let all: u64 = (0..self.num_generators()).fold(0, |m, i| m | 1 << i);
        let facet_sets: Vec<u64> = self
            .facets
            .iter()
            .map(|f| {
                self.vertex_images
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| f.slack(v) == 0)
                    .fold(0, |m, (i, _)| m | 1 << i)
            })
            .collect();
        let mut faces = vec![all];
        let mut frontier = vec![all];
        while let Some(face) = frontier.pop() {
            for &fs in &facet_sets {
                let g = face & fs;
                if g != 0 && g != face && !faces.contains(&g) {
                    faces.push(g);
                    frontier.push(g);
                }
            }
        }
        faces.sort_unstable_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
        faces
    }
}

pub fn project_simplex(central: &IntegerLattice) -> ProjectedPolytope {
    let n = central.ambient_dim;
    let basis = chart(central);
    let d = basis.dimension;
    let a = basis.complement_basis;
    let vertex_images: Vec<Vec<i64>> = (0..n).map(|s| a.iter().map(|row| row[s]).collect()).collect();

    let mut distinct: Vec<usize> = Vec::new();
    for s in 0..n {
        if !distinct.iter().any(|&t| vertex_images[t] == vertex_images[s]) {
            distinct.push(s);
        }
    }

    let facets = if d == 0 { Vec::new() } else { hull_facets(&vertex_images, &distinct, d) };

    let hull_vertices: Vec<usize> = if d == 0 {
        distinct.clone()
    } else {
        distinct
            .iter()
            .copied()
            .filter(|&s| {
                let tight: Vec<Vec<i64>> = facets
                    .iter()
                    .filter(|f| f.slack(&vertex_images[s]) == 0)
                    .map(|f| f.normal.clone())
                    .collect();
                hermite_basis(&tight, d).len() == d
            })
            .collect()
    };
    let vertices = hull_vertices.iter().map(|&s| vertex_images[s].clone()).collect();

    ProjectedPolytope { projection: a, vertex_images, hull_vertices, vertices, facets, dimension: d }
}

fn hull_facets(points: &[Vec<i64>], candidates: &[usize], d: usize) -> Vec<Facet> {
    let mut facets: Vec<Facet> = Vec::new();
    for subset in combinations(candidates, d) {
        // (normal, -offset) is the kernel of the rows [p, 1]
        let rows: Vec<Vec<i64>> = subset
            .iter()
            .map(|&s| points[s].iter().copied().chain(std::iter::once(1)).collect())
            .collect();
        let kernel = integer_kernel(&rows, d + 1);
        if kernel.len() != 1 {
            continue;
        }
        let mut normal = kernel[0][..d].to_vec();
        if normal.iter().all(|&x| x == 0) {
            continue;
        }
        let mut offset = -kernel[0][d];
        let slacks: Vec<i64> = candidates.iter().map(|&s| offset - dot(&normal, &points[s])).collect();
        let has_pos = slacks.iter().any(|&x| x > 0);
        let has_neg = slacks.iter().any(|&x| x < 0);
        if has_pos && has_neg {
            continue;
        }
        if has_neg {
            normal.iter_mut().for_each(|x| *x = -*x);
            offset = -offset;
        }
        let f = Facet { normal, offset };
        if !facets.contains(&f) {
            facets.push(f);
        }
    }
    facets.sort();
    facets
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(items: &[usize], k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - current.len() {
                break;
            }
            current.push(items[i]);
            go(items, k, i + 1, current, out);
            current.pop();
        }
    }
    go(items, k, 0, &mut current, &mut out);
    out
}
