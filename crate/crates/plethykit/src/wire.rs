//! JSON forms of the core types.
//!
//! Partitions are arrays of parts, polynomials are arrays of decimal
//! strings (coefficients can exceed 64 bits), SL-instances are
//! `{"lambda": [...], "d": n}` and GL-instances `{"lambda": [...], "delta": [a, b]}`.

use plethykit_core::search::{EquivalenceClass, GlClassification};
use plethykit_core::{
    Partition, PlethysmInstance, QPolynomial, SLInstance, StaircaseDescriptor, TwistSolution,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum WireError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] plethykit_core::Error),
}

pub fn partition_from_parts(parts: &[usize]) -> Result<Partition, WireError> {
    Ok(Partition::new(parts)?)
}

pub fn poly_to_strings(p: &QPolynomial) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SlJson {
    pub lambda: Vec<usize>,
    pub d: usize,
}

impl SlJson {
    pub fn to_core(&self) -> Result<SLInstance, WireError> {
        Ok(SLInstance::new(
            partition_from_parts(&self.lambda)?,
            self.d,
        )?)
    }
}

impl From<&SLInstance> for SlJson {
    fn from(inst: &SLInstance) -> Self {
        SlJson {
            lambda: inst.lambda().parts().to_vec(),
            d: inst.d(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GlJson {
    pub lambda: Vec<usize>,
    pub delta: [usize; 2],
}

impl GlJson {
    pub fn to_core(&self) -> Result<PlethysmInstance, WireError> {
        let lambda = partition_from_parts(&self.lambda)?;
        Ok(PlethysmInstance::new(
            lambda,
            (self.delta[0], self.delta[1]),
        )?)
    }
}

impl From<&PlethysmInstance> for GlJson {
    fn from(inst: &PlethysmInstance) -> Self {
        let (a, b) = inst.delta();
        GlJson {
            lambda: inst.lambda().parts().to_vec(),
            delta: [a, b],
        }
    }
}

/// Either instance form; an SL-instance lifts to `δ = (d, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InstanceJson {
    Sl(SlJson),
    Gl(GlJson),
}

impl InstanceJson {
    pub fn parse(text: &str) -> Result<Self, WireError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_gl(&self) -> Result<PlethysmInstance, WireError> {
        match self {
            InstanceJson::Sl(s) => Ok(s.to_core()?.lift()),
            InstanceJson::Gl(g) => g.to_core(),
        }
    }

    pub fn to_sl(&self) -> Result<SLInstance, WireError> {
        Ok(self.to_gl()?.sl())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DescriptorJson {
    pub steps: Vec<[usize; 2]>,
    pub slack: usize,
}

impl From<&StaircaseDescriptor> for DescriptorJson {
    fn from(s: &StaircaseDescriptor) -> Self {
        DescriptorJson {
            steps: s.steps().iter().map(|&(w, h)| [w, h]).collect(),
            slack: s.slack(),
        }
    }
}

impl From<&DescriptorJson> for StaircaseDescriptor {
    fn from(s: &DescriptorJson) -> Self {
        StaircaseDescriptor::new(s.steps.iter().map(|&[w, h]| (w, h)).collect(), s.slack)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistJson {
    pub found: bool,
    pub l: Option<usize>,
    pub m: Option<usize>,
    pub x: Option<usize>,
    pub y: Option<usize>,
    pub verified: bool,
}

impl TwistJson {
    pub fn new(solution: Option<TwistSolution>, verified: bool) -> Self {
        TwistJson {
            found: solution.is_some(),
            l: solution.map(|t| t.l),
            m: solution.map(|t| t.m),
            x: solution.map(|t| t.x),
            y: solution.map(|t| t.y),
            verified,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistedPairJson {
    pub pair: [usize; 2],
    pub l: usize,
    pub m: usize,
    pub x: usize,
    pub y: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlJsonLabels {
    pub direct: Vec<[usize; 2]>,
    pub twistable: Vec<TwistedPairJson>,
    pub obstructed: Vec<[usize; 2]>,
    pub unresolved: Vec<[usize; 2]>,
}

impl From<&GlClassification> for GlJsonLabels {
    fn from(g: &GlClassification) -> Self {
        let pairs = |v: &[(usize, usize)]| v.iter().map(|&(i, j)| [i, j]).collect();
        GlJsonLabels {
            direct: pairs(&g.direct),
            twistable: g
                .twistable
                .iter()
                .map(|&(i, j, t)| TwistedPairJson {
                    pair: [i, j],
                    l: t.l,
                    m: t.m,
                    x: t.x,
                    y: t.y,
                })
                .collect(),
            obstructed: pairs(&g.obstructed),
            unresolved: pairs(&g.unresolved),
        }
    }
}

/// One line of `search` output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    #[serde(rename = "P")]
    pub p: Vec<String>,
    pub members: Vec<SlJson>,
    pub gl: GlJsonLabels,
}

impl ClassJson {
    pub fn new(class: &EquivalenceClass, gl: &GlClassification) -> Self {
        ClassJson {
            p: poly_to_strings(&class.key),
            members: class.members.iter().map(SlJson::from).collect(),
            gl: gl.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub kind: String,
    pub descriptors: Vec<DescriptorJson>,
    pub instances: Vec<SlJson>,
    pub verified: bool,
    pub gl_pairs: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gl_condition: Option<bool>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_forms() {
        let sl = InstanceJson::parse(r#"{"lambda":[2],"d":3}"#).unwrap();
        assert_eq!(sl.to_gl().unwrap().delta(), (3, 0));
        let gl = InstanceJson::parse(r#"{"lambda":[2,1],"delta":[4,1]}"#).unwrap();
        assert_eq!(gl.to_sl().unwrap().d(), 3);
        assert!(InstanceJson::parse(r#"{"lambda":[2],"d":3,"extra":1}"#).is_err());
        assert!(InstanceJson::parse(r#"{"lambda":[1,2],"d":3}"#)
            .unwrap()
            .to_sl()
            .is_err());
        assert!(InstanceJson::parse(r#"{"lambda":[2],"d":0}"#)
            .unwrap()
            .to_sl()
            .is_ok());
        assert!(InstanceJson::parse(r#"{"lambda":[1,1],"d":0}"#)
            .unwrap()
            .to_sl()
            .is_err());
    }

    #[test]
    fn descriptor_round_trip() {
        let text = r#"{"steps":[[3,2],[2,4],[4,4]],"slack":0}"#;
        let json: DescriptorJson = serde_json::from_str(text).unwrap();
        let desc = StaircaseDescriptor::from(&json);
        assert_eq!(
            serde_json::to_string(&DescriptorJson::from(&desc)).unwrap(),
            text
        );
        assert_eq!(
            desc.to_instance().unwrap().lambda().parts(),
            &[9, 9, 5, 5, 5, 5, 3, 3, 3, 3]
        );
    }

    #[test]
    fn polynomial_strings() {
        let p = QPolynomial::from_i64s(&[1, 1, 2, 2, 2, 1, 1]);
        assert_eq!(poly_to_strings(&p), ["1", "1", "2", "2", "2", "1", "1"]);
    }
}
