use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

/// Term orders on ℕ₀^S. All of them refine divisibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonomialOrder {
    /// Graded reverse lexicographic, first generator largest.
    #[default]
    DegRevLex,
    /// Graded lexicographic, first generator largest.
    DegLex,
    /// Two blocks: coordinates `split..` form the eliminated block and
    /// dominate coordinates `..split`; degrevlex inside each block.
    Elimination { split: usize },
}

impl MonomialOrder {
    pub fn compare(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match *self {
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::DegLex => deglex(a, b),
            MonomialOrder::Elimination { split } => {
                let split = split.min(a.len());
                degrevlex(&a[split..], &b[split..]).then_with(|| degrevlex(&a[..split], &b[..split]))
            }
        }
    }
}

fn degree(a: &[u32]) -> u64 {
    a.iter().map(|&c| c as u64).sum()
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    degree(a).cmp(&degree(b)).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // smaller exponent in the last differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

fn deglex(a: &[u32], b: &[u32]) -> Ordering {
    degree(a).cmp(&degree(b)).then_with(|| a.cmp(b))
}
