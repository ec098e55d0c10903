use serde::{Deserialize, Serialize};

use super::{AnnularDiagram, Mode, Morphism, Point};
use crate::error::{AtlError, Result};
use crate::scalar::GaussianRational;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub seam: usize,
    pub ess: usize,
    pub arcs: Vec<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: GaussianRational,
    pub diagram: DiagramJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MorphismJson {
    pub dom: usize,
    pub cod: usize,
    pub terms: Vec<TermJson>,
}

impl From<&AnnularDiagram> for DiagramJson {
    fn from(d: &AnnularDiagram) -> Self {
        DiagramJson {
            seam: d.seam(),
            ess: d.ess(),
            arcs: d.arcs().iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect(),
        }
    }
}

impl DiagramJson {
    pub fn to_diagram(&self, dom: usize, cod: usize) -> Result<AnnularDiagram> {
        let arcs = self
            .arcs
            .iter()
            .map(|[a, b]| Ok((a.parse::<Point>()?, b.parse::<Point>()?)))
            .collect::<Result<Vec<_>>>()?;
        AnnularDiagram::new(dom, cod, self.seam, self.ess, arcs)
    }
}

impl From<&Morphism> for MorphismJson {
    fn from(m: &Morphism) -> Self {
        MorphismJson {
            dom: m.dom(),
            cod: m.cod(),
            terms: m
                .terms()
                .iter()
                .map(|(d, c)| TermJson { coeff: c.clone(), diagram: d.into() })
                .collect(),
        }
    }
}

impl MorphismJson {
    pub fn to_morphism(&self, mode: Mode) -> Result<Morphism> {
        let mut m = Morphism::zero(self.dom, self.cod, mode);
        for t in &self.terms {
            let d = t.diagram.to_diagram(self.dom, self.cod)?;
            if m.terms().contains_key(&d) {
                return Err(AtlError::InvalidDiagram(format!("duplicate term {d}")));
            }
            m.add_term(d, t.coeff.clone());
        }
        Ok(m)
    }
}

impl Morphism {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&MorphismJson::from(self)).expect("serializable")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&MorphismJson::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str, mode: Mode) -> Result<Morphism> {
        let j: MorphismJson = serde_json::from_str(text).map_err(|e| AtlError::parse("morphism JSON", &e.to_string()))?;
        j.to_morphism(mode)
    }
}
