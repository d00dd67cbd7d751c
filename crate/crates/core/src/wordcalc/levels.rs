use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::rewrite::{Limits, RewriteSystem};
use crate::error::{Error, Result};
use crate::presentation::ExponentVector;

/// The dynamic graph truncated at `depth`: level `n` holds the normal forms
/// of elements reachable by words of length exactly `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyLevels {
    pub depth: usize,
    /// Vertices per level, sorted in decreasing monomial order.
    pub levels: Vec<Vec<ExponentVector>>,
    /// `edges[n]` holds `(source, generator, target)` from level `n` to `n + 1`.
    pub edges: Vec<Vec<(usize, usize, usize)>>,
}

impl CayleyLevels {
    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn index_of(&self, level: usize, element: &ExponentVector) -> Option<usize> {
        self.levels.get(level)?.iter().position(|v| v == element)
    }

    /// Number of directed paths from the root to every vertex, per level.
    pub fn path_counts(&self) -> Vec<Vec<u128>> {
        let mut counts = vec![vec![1u128]];
        for (n, edges) in self.edges.iter().enumerate() {
            let mut next = vec![0u128; self.levels[n + 1].len()];
            for &(s, _, t) in edges {
                next[t] += counts[n][s];
            }
            counts.push(next);
        }
        counts
    }
}

pub fn cayley_levels(rs: &RewriteSystem, depth: usize) -> Result<CayleyLevels> {
    cayley_levels_with_limits(rs, depth, &Limits::default())
}

pub fn cayley_levels_with_limits(
    rs: &RewriteSystem,
    depth: usize,
    limits: &Limits,
) -> Result<CayleyLevels> {
    let n = rs.num_vars;
    let root = rs.normal_form(&ExponentVector::zeros(n));
    let mut levels = vec![vec![root]];
    let mut edges = Vec::with_capacity(depth);

    for level in 0..depth {
        let frontier = &levels[level];
        let targets: Vec<Vec<ExponentVector>> = frontier
            .par_iter()
            .map(|v| (0..n).map(|g| rs.normal_form(&v.add_unit(g))).collect())
            .collect();

        let mut next: Vec<ExponentVector> = targets.iter().flatten().cloned().collect();
        next.sort_by(|a, b| rs.order.compare(b.as_slice(), a.as_slice()));
        next.dedup();
        if next.len() > limits.max_level_width {
            return Err(Error::ResourceLimit {
                what: "vertices per level",
                limit: limits.max_level_width,
            });
        }
        let index: HashMap<&ExponentVector, usize> =
            next.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let level_edges = targets
            .iter()
            .enumerate()
            .flat_map(|(s, ts)| ts.iter().enumerate().map(move |(g, t)| (s, g, t)))
            .map(|(s, g, t)| (s, g, index[t]))
            .collect();
        edges.push(level_edges);
        levels.push(next);
    }

    Ok(CayleyLevels { depth, levels, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_presentation;
    use crate::wordcalc::{complete, MonomialOrder};

    fn levels(text: &str, depth: usize) -> CayleyLevels {
        let p = parse_presentation(text).unwrap();
        cayley_levels(&complete(&p, MonomialOrder::DegRevLex), depth).unwrap()
    }

    #[test]
    fn free_commutative_levels_are_multisets() {
        assert_eq!(levels("generators: a b", 2).level_sizes(), vec![1, 2, 3]);
    }

    #[test]
    fn integers_with_plus_minus_one() {
        let l = levels("generators: a b\nrelations: a+b=0", 2);
        assert_eq!(l.level_sizes(), vec![1, 2, 3]);
        let level2: Vec<Vec<u32>> = l.levels[2].iter().map(|v| v.as_slice().to_vec()).collect();
        assert!(level2.contains(&vec![2, 0]));
        assert!(level2.contains(&vec![0, 0]));
        assert!(level2.contains(&vec![0, 2]));
    }

    #[test]
    fn z2_second_level_has_nine_vertices() {
        let l = levels("generators: a b c d\nrelations: a+b=0; c+d=0", 2);
        assert_eq!(l.level_sizes(), vec![1, 4, 9]);
        assert!(l.index_of(2, &ExponentVector::zeros(4)).is_some());
    }

    #[test]
    fn path_counts_match_word_enumeration() {
        for text in [
            "generators: a b c d\nrelations: a+b=0; c+d=0",
            "generators: a b c\nrelations: a+b = a+c",
            "generators: a b\nrelations: a+b=0; 5a=0",
        ] {
            let p = parse_presentation(text).unwrap();
            let rs = complete(&p, MonomialOrder::DegRevLex);
            let depth = 4;
            let l = cayley_levels(&rs, depth).unwrap();
            let counts = l.path_counts();
            let k = p.rank();
            for (n, level_counts) in counts.iter().enumerate() {
                let mut brute: HashMap<ExponentVector, u128> = HashMap::new();
                for code in 0..k.pow(n as u32) {
                    let mut c = code;
                    let word: Vec<usize> = (0..n).map(|_| { let g = c % k; c /= k; g }).collect();
                    let nf = rs.normal_form(&ExponentVector::from_word(k, &word));
                    *brute.entry(nf).or_default() += 1;
                }
                assert_eq!(brute.len(), l.levels[n].len());
                for (v, count) in brute {
                    let i = l.index_of(n, &v).unwrap();
                    assert_eq!(level_counts[i], count, "{text} level {n} {v}");
                }
            }
        }
    }

    #[test]
    fn width_cap() {
        let p = parse_presentation("generators: a b c").unwrap();
        let rs = complete(&p, MonomialOrder::DegRevLex);
        let limits = Limits { max_level_width: 5, ..Limits::default() };
        assert!(matches!(
            cayley_levels_with_limits(&rs, 3, &limits),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
