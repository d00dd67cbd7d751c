//! Stable JSON form of an [`AbsoluteDescriptor`].

use serde::{Deserialize, Serialize};

use super::describe::{AbsoluteDescriptor, TopologyClaim};
use crate::latgeo::{DistributionPoint, Facet};
use crate::rational::{format_rational, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationDoc {
    pub lhs: Vec<u32>,
    pub rhs: Vec<u32>,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartDoc {
    pub complement_basis: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeDoc {
    pub vertices: Vec<Vec<i64>>,
    pub facets: Vec<Facet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumDoc {
    pub support: Vec<String>,
    pub dimension: usize,
    pub lattice: Vec<Vec<i64>>,
    /// Exact weights written as `p/q`.
    pub sample: Vec<String>,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescriptorDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub digest: String,
    pub generators: Vec<String>,
    pub class: String,
    pub reduced_relation_lattice: Vec<Vec<i64>>,
    pub central_lattice: Vec<Vec<i64>>,
    pub group_rank: usize,
    pub absolute_dimension: usize,
    pub branching: bool,
    pub equations: Vec<EquationDoc>,
    pub chart: ChartDoc,
    pub polytope: PolytopeDoc,
    pub strata: Vec<StratumDoc>,
    pub topology_claim: TopologyClaim,
    pub exact: bool,
}

impl DescriptorDocument {
    pub fn from_descriptor(d: &AbsoluteDescriptor) -> Self {
        let names = &d.generators;
        DescriptorDocument {
            name: d.name.clone(),
            digest: d.digest.clone(),
            generators: names.clone(),
            class: d.class.as_str().to_string(),
            reduced_relation_lattice: d.reduced_relation_lattice.basis.clone(),
            central_lattice: d.central_lattice.basis.clone(),
            group_rank: d.group_rank,
            absolute_dimension: d.dimension,
            branching: d.branching,
            equations: d
                .equations
                .iter()
                .map(|e| EquationDoc {
                    lhs: e.pair.lhs.as_slice().to_vec(),
                    rhs: e.pair.rhs.as_slice().to_vec(),
                    text: e.render_named(names),
                })
                .collect(),
            chart: ChartDoc { complement_basis: d.chart.complement_basis.clone() },
            polytope: PolytopeDoc { vertices: d.polytope.vertices.clone(), facets: d.polytope.facets.clone() },
            strata: d
                .strata
                .iter()
                .map(|s| StratumDoc {
                    support: s.support.iter().map(|&i| names[i].clone()).collect(),
                    dimension: s.dimension,
                    lattice: s.lattice.basis.clone(),
                    sample: match &s.sample {
                        DistributionPoint::Exact(w) => w.iter().map(format_rational).collect(),
                        DistributionPoint::Float(w) => w.iter().map(|x| x.to_string()).collect(),
                    },
                    exact: s.exact,
                })
                .collect(),
            topology_claim: d.topology_claim,
            exact: d.exact,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("descriptor serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

impl StratumDoc {
    pub fn sample_weights(&self) -> Option<Vec<Rational>> {
        self.sample.iter().map(|s| parse_rational(s)).collect()
    }
}

pub fn descriptor_to_json(d: &AbsoluteDescriptor) -> String {
    DescriptorDocument::from_descriptor(d).to_json()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::absolute::describe::{describe_absolute, DescribeOptions};
    use crate::presentation::parse_presentation;
    use crate::rational::rat;

    #[test]
    fn round_trip_and_field_names() {
        let p = parse_presentation("generators: a b c d\nrelations: a+b=0; c+d=0\nclass: group").unwrap();
        let d = describe_absolute(&p, &DescribeOptions::default()).unwrap();
        let doc = DescriptorDocument::from_descriptor(&d);
        let text = doc.to_json();
        assert_eq!(DescriptorDocument::from_json(&text).unwrap(), doc);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        for key in [
            "generators",
            "class",
            "reduced_relation_lattice",
            "central_lattice",
            "absolute_dimension",
            "equations",
            "chart",
            "polytope",
            "strata",
            "topology_claim",
            "exact",
        ] {
            assert!(value.get(key).is_some(), "missing {key}");
        }
        assert_eq!(value["absolute_dimension"], 2);
        assert_eq!(value["topology_claim"], "closed_disk(2)");
        assert_eq!(value["central_lattice"], serde_json::json!([[1, 1, -1, -1]]));
        assert_eq!(value["strata"][0]["sample"], serde_json::json!(["1", "0", "0", "0"]));
        assert_eq!(doc.strata.last().unwrap().sample_weights().unwrap(), vec![rat(1, 4); 4]);
    }
}
