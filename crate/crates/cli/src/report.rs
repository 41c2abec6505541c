//! JSON reports. Polynomials only ever appear as canonical strings.

use serde::{Deserialize, Serialize};

use cab_core::boundary::BoundaryReport;
use cab_core::format;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VarietySummary {
    pub n: usize,
    pub dim: i64,
    pub degree: u64,
    pub variant: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RSummary {
    pub bound: usize,
    pub used: usize,
    pub flag: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub k: usize,
    pub codim: i64,
    pub degree: u64,
    /// Defining polynomial of a hypersurface component.
    pub poly: Option<String>,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagnosticJson {
    pub k: usize,
    pub status: String,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundaryJson {
    pub variety: VarietySummary,
    pub r: RSummary,
    pub components: Vec<ComponentJson>,
    pub product: Option<String>,
    pub total_degree: u64,
    pub diagnostics: Vec<DiagnosticJson>,
}

impl From<&BoundaryReport> for BoundaryJson {
    fn from(rep: &BoundaryReport) -> Self {
        BoundaryJson {
            variety: VarietySummary {
                n: rep.n,
                dim: rep.dim,
                degree: rep.degree,
                variant: format!("{:?}", rep.variant).to_lowercase(),
            },
            r: RSummary { bound: rep.r.bound, used: rep.r.value, flag: rep.r.flag.name().into() },
            components: rep
                .components
                .iter()
                .map(|c| ComponentJson {
                    k: c.k,
                    codim: c.codim,
                    degree: c.degree,
                    poly: c.defining_poly.as_ref().map(format),
                    generators: c.ideal.generators().iter().map(format).collect(),
                })
                .collect(),
            product: rep.product_poly.as_ref().map(format),
            total_degree: rep.total_degree(),
            diagnostics: rep
                .diagnostics
                .iter()
                .map(|d| DiagnosticJson { k: d.k, status: d.status.name().into(), elapsed_ms: d.elapsed_ms })
                .collect(),
        }
    }
}

/// Output of every other command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommandJson {
    pub command: String,
    pub vars: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub generators: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value: Option<serde_json::Value>,
}
