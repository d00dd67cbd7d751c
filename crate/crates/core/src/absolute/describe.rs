use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::equations::{centrality_equations, CentralityEquation};
use super::strata::{strata_with_cap, Stratum, MAX_STRATA_GENERATORS};
use crate::error::{Error, Result};
use crate::latgeo::{
    absolute_dimension, central_sublattice, chart, difference_lattice, group_of_fractions_rank,
    project_simplex, ChartBasis, IntegerLattice, ProjectedPolytope,
};
use crate::presentation::{Presentation, SemigroupClass};
use crate::wordcalc::{
    cancellativity_witness, central_pairs_exact_with, complete_with_limits, is_branching,
    CancellativityWitness, CentralPairSet, Limits, MonomialOrder, RewriteSystem, DEFAULT_FALLBACK_DEPTH,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum TopologyClaim {
    ClosedDisk(usize),
    CompactStratified,
    Unknown,
}

impl fmt::Display for TopologyClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologyClaim::ClosedDisk(d) => write!(f, "closed_disk({d})"),
            TopologyClaim::CompactStratified => write!(f, "compact_stratified"),
            TopologyClaim::Unknown => write!(f, "unknown"),
        }
    }
}

impl FromStr for TopologyClaim {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "compact_stratified" => Ok(TopologyClaim::CompactStratified),
            "unknown" => Ok(TopologyClaim::Unknown),
            _ => s
                .strip_prefix("closed_disk(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|d| d.parse().ok())
                .map(TopologyClaim::ClosedDisk)
                .ok_or_else(|| format!("unknown topology claim `{s}`")),
        }
    }
}

impl TryFrom<String> for TopologyClaim {
    type Error = String;

    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}

impl From<TopologyClaim> for String {
    fn from(t: TopologyClaim) -> String {
        t.to_string()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescribeOptions {
    pub limits: Limits,
    /// Enumeration depth used when elimination does not finish.
    pub fallback_depth: usize,
    /// Depth of the search for a failure of cancellation.
    pub witness_depth: usize,
    pub max_strata_generators: usize,
    pub order: MonomialOrder,
}

impl Default for DescribeOptions {
    fn default() -> Self {
        DescribeOptions {
            limits: Limits::default(),
            fallback_depth: DEFAULT_FALLBACK_DEPTH,
            witness_depth: 6,
            max_strata_generators: MAX_STRATA_GENERATORS,
            order: MonomialOrder::DegRevLex,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AbsoluteDescriptor {
    pub name: Option<String>,
    /// SHA-256 of the normalized presentation text.
    pub digest: String,
    pub generators: Vec<String>,
    pub class: SemigroupClass,
    pub rewrite_system: RewriteSystem,
    pub central_pairs: CentralPairSet,
    pub equations: Vec<CentralityEquation>,
    pub reduced_relation_lattice: IntegerLattice,
    pub central_lattice: IntegerLattice,
    pub group_rank: usize,
    pub dimension: usize,
    pub chart: ChartBasis,
    pub polytope: ProjectedPolytope,
    pub strata: Vec<Stratum>,
    pub branching: bool,
    pub cancellativity: CancellativityWitness,
    pub topology_claim: TopologyClaim,
    pub exact: bool,
}

impl AbsoluteDescriptor {
    pub fn main_stratum(&self) -> Option<&Stratum> {
        self.strata.iter().find(|s| s.is_main)
    }

    pub fn points(&self) -> impl Iterator<Item = &Stratum> {
        self.strata.iter().filter(|s| s.is_point())
    }
}

pub fn presentation_digest(p: &Presentation) -> String {
    Sha256::digest(p.to_dsl().as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

pub fn describe_absolute(p: &Presentation, options: &DescribeOptions) -> Result<AbsoluteDescriptor> {
    let n = p.rank();
    let rs = complete_with_limits(p, options.order, &options.limits);
    if !rs.confluent {
        return Err(Error::ResourceLimit { what: "binomial completion rules", limit: options.limits.max_rules });
    }
    let central_pairs = central_pairs_exact_with(p, &options.limits, options.fallback_depth)?;
    let equations = centrality_equations(&central_pairs);
    let exact = central_pairs.exact;

    let reduced_relation_lattice = difference_lattice(p);
    let central_lattice = central_sublattice(&reduced_relation_lattice);
    let dimension = absolute_dimension(&central_lattice, n);
    let group_rank = group_of_fractions_rank(&reduced_relation_lattice, n);
    let chart = chart(&central_lattice);
    let polytope = project_simplex(&central_lattice);
    let strata = strata_with_cap(&equations, n, exact, options.max_strata_generators)?;

    let branching = is_branching(&rs);
    let cancellativity = cancellativity_witness(&rs, options.witness_depth)?;
    if p.declared_class.is_cancellative() {
        if let CancellativityWitness::NotCancellative { a, b, c } = &cancellativity {
            let names = p.names();
            return Err(Error::ClassMismatch {
                declared: p.declared_class.as_str().into(),
                detail: format!(
                    "{} + {} = {} + {} with {} ≠ {}",
                    a.render(names),
                    c.render(names),
                    b.render(names),
                    c.render(names),
                    a.render(names),
                    b.render(names)
                ),
            });
        }
    }

    let topology_claim = if !exact {
        TopologyClaim::Unknown
    } else if p.declared_class.is_cancellative() {
        TopologyClaim::ClosedDisk(dimension)
    } else {
        TopologyClaim::CompactStratified
    };

    Ok(AbsoluteDescriptor {
        name: p.name.clone(),
        digest: presentation_digest(p),
        generators: p.names().to_vec(),
        class: p.declared_class,
        rewrite_system: rs,
        central_pairs,
        equations,
        reduced_relation_lattice,
        central_lattice,
        group_rank,
        dimension,
        chart,
        polytope,
        strata,
        branching,
        cancellativity,
        topology_claim,
        exact,
    })
}

/// Whether the quotient `p2` of `p1` has the same absolute: equal central
/// lattices and identical strata (supports, lattices, dimensions).
pub fn compare_quotient(p1: &Presentation, p2: &Presentation) -> Result<bool> {
    compare_quotient_with(p1, p2, &DescribeOptions::default())
}

pub fn compare_quotient_with(p1: &Presentation, p2: &Presentation, options: &DescribeOptions) -> Result<bool> {
    if p1.names() != p2.names() {
        return Err(Error::MismatchedGenerators(format!(
            "[{}] vs [{}]",
            p1.names().join(" "),
            p2.names().join(" ")
        )));
    }
    let d1 = describe_absolute(p1, options)?;
    let d2 = describe_absolute(p2, options)?;
    Ok(same_absolute(&d1, &d2))
}

pub fn same_absolute(d1: &AbsoluteDescriptor, d2: &AbsoluteDescriptor) -> bool {
    let key = |d: &AbsoluteDescriptor| -> Vec<(Vec<usize>, IntegerLattice, usize)> {
        d.strata.iter().map(|s| (s.support.clone(), s.lattice.clone(), s.dimension)).collect()
    };
    d1.central_lattice == d2.central_lattice && key(d1) == key(d2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_presentation;

    fn describe(text: &str) -> AbsoluteDescriptor {
        describe_absolute(&parse_presentation(text).unwrap(), &DescribeOptions::default()).unwrap()
    }

    #[test]
    fn z2_descriptor() {
        let d = describe("generators: a b c d\nrelations: a+b=0; c+d=0\nclass: group");
        assert_eq!(d.dimension, 2);
        assert_eq!(d.topology_claim, TopologyClaim::ClosedDisk(2));
        assert_eq!(d.group_rank, 2);
        assert_eq!(d.chart.dimension, 2);
        assert_eq!(d.polytope.dimension, 2);
        assert_eq!(d.main_stratum().unwrap().dimension, 2);
        assert!(d.exact);
        assert_eq!(d.digest.len(), 64);
    }

    #[test]
    fn free_descriptor() {
        let d = describe("generators: a b c");
        assert!(d.equations.is_empty());
        assert_eq!(d.dimension, 2);
        assert_eq!(d.topology_claim, TopologyClaim::CompactStratified);
        assert!(d.branching);
    }

    #[test]
    fn tripod_is_stratified() {
        let d = describe("generators: a b c\nrelations: a+b = a+c");
        assert_eq!(d.topology_claim, TopologyClaim::CompactStratified);
        assert!(d.branching);
        assert!(!d.cancellativity.is_cancellative_so_far());
    }

    #[test]
    fn contradicted_class_is_an_error() {
        let p = parse_presentation("generators: a b c\nrelations: a+b = a+c\nclass: cancellative").unwrap();
        assert!(matches!(describe_absolute(&p, &DescribeOptions::default()), Err(Error::ClassMismatch { .. })));
    }

    #[test]
    fn topology_claim_text() {
        for t in [TopologyClaim::ClosedDisk(3), TopologyClaim::CompactStratified, TopologyClaim::Unknown] {
            assert_eq!(t.to_string().parse::<TopologyClaim>().unwrap(), t);
        }
        assert!("closed_disk(x)".parse::<TopologyClaim>().is_err());
    }

    #[test]
    fn quotients() {
        let zz2 = parse_presentation("generators: a b c\nrelations: a+b=0; 2c=0").unwrap();
        let z = parse_presentation("generators: a b c\nrelations: a+b=0; c=0").unwrap();
        assert!(compare_quotient(&zz2, &z).unwrap());
        let z_pm = parse_presentation("generators: a b\nrelations: a+b=0").unwrap();
        let z5 = parse_presentation("generators: a b\nrelations: a+b=0; 5a=0").unwrap();
        assert!(!compare_quotient(&z_pm, &z5).unwrap());
        assert!(compare_quotient(&z5, &z5).unwrap());
        assert!(matches!(compare_quotient(&z, &z5), Err(Error::MismatchedGenerators(_))));
    }
}
