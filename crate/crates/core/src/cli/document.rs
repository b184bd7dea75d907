//! Versioned JSON document for generated potentials.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{MPoly, Monomial, RatFun, Var};
use crate::cli::expr::{parse_ratfun, parse_rational_string, rational_string};
use crate::error::{Error, Result};
use crate::families::{finalize, Family, PotentialResult, Provenance};
use crate::gauge::{CaseTag, Gauge, GaugeCase};
use crate::seeds::{NodeSpec1, NodeSpec2, Sign};
use crate::spectrum::{EigenPair, L2Flags};

pub const SCHEMA_VERSION: u32 = 1;

/// One monomial in the parameters with its coefficient as `[p, q]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub params: BTreeMap<String, u32>,
    pub coeff: [String; 2],
}

/// Indexed by `E`-degree, then `z`-degree.
pub type Structured = Vec<Vec<Vec<TermDoc>>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExprDoc {
    pub text: String,
    pub num: Structured,
    pub den: Structured,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nodes: Option<String>,
    #[serde(rename = "P1", default, skip_serializing_if = "Option::is_none")]
    pub p1: Option<String>,
    #[serde(rename = "P2", default, skip_serializing_if = "Option::is_none")]
    pub p2: Option<String>,
    #[serde(rename = "F", default, skip_serializing_if = "Option::is_none")]
    pub f: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootDoc {
    pub root: String,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct L2Doc {
    #[serde(rename = "R")]
    pub real_line: bool,
    #[serde(rename = "R+")]
    pub positive: bool,
    #[serde(rename = "R-")]
    pub negative: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenDoc {
    #[serde(rename = "E0")]
    pub e0: String,
    pub psi: String,
    pub q: String,
    pub g: String,
    #[serde(rename = "R")]
    pub r: String,
    pub l2: L2Doc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PotentialDocument {
    pub schema_version: u32,
    pub family: String,
    pub case: u8,
    pub nu: String,
    pub input: InputDoc,
    /// `None` for the gauge at infinity.
    #[serde(rename = "M")]
    pub m: Option<ExprDoc>,
    #[serde(rename = "H")]
    pub h: Option<ExprDoc>,
    #[serde(rename = "V")]
    pub v: ExprDoc,
    pub w: Option<String>,
    pub w_roots: Vec<RootDoc>,
    pub eigenpairs: Vec<EigenDoc>,
}

fn structured(p: &MPoly) -> Structured {
    p.coeffs_in(Var::E)
        .into_iter()
        .map(|ce| {
            ce.coeffs_in(Var::Z)
                .into_iter()
                .map(|cz| {
                    cz.terms()
                        .iter()
                        .map(|(m, c)| TermDoc {
                            params: Var::PARAMS
                                .iter()
                                .filter(|v| m.exp(**v) > 0)
                                .map(|v| (v.name().to_string(), m.exp(*v)))
                                .collect(),
                            coeff: [c.numer().to_string(), c.denom().to_string()],
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn from_structured(s: &Structured) -> Result<MPoly> {
    let mut terms = Vec::new();
    for (i, row) in s.iter().enumerate() {
        for (j, cell) in row.iter().enumerate() {
            for t in cell {
                let mut exps = vec![(Var::E, i as u32), (Var::Z, j as u32)];
                for (name, e) in &t.params {
                    let v = Var::from_name(name)
                        .filter(|v| Var::PARAMS.contains(v))
                        .ok_or_else(|| Error::Invalid(format!("unknown parameter {}", name)))?;
                    exps.push((v, *e));
                }
                let c = parse_rational_string(&format!("{}/{}", t.coeff[0], t.coeff[1]))?;
                terms.push((Monomial::from_exponents(&exps), c));
            }
        }
    }
    Ok(MPoly::from_terms(terms))
}

impl ExprDoc {
    pub fn new(r: &RatFun) -> ExprDoc {
        ExprDoc { text: r.to_string(), num: structured(r.num()), den: structured(r.den()) }
    }

    /// Parses both forms and checks they agree.
    pub fn value(&self) -> Result<RatFun> {
        let text = parse_ratfun(&self.text)?;
        let st = RatFun::new(from_structured(&self.num)?, from_structured(&self.den)?)?;
        if text != st {
            return Err(Error::Invalid(format!("structured form disagrees with {}", self.text)));
        }
        Ok(text)
    }
}

fn eigen_doc(p: &EigenPair) -> EigenDoc {
    EigenDoc {
        e0: rational_string(&p.e0),
        psi: p.psi_string(),
        q: p.q.to_string(),
        g: rational_string(&p.g),
        r: p.r.to_string(),
        l2: L2Doc { real_line: p.l2.real_line, positive: p.l2.positive, negative: p.l2.negative },
    }
}

impl EigenDoc {
    pub fn value(&self) -> Result<EigenPair> {
        Ok(EigenPair {
            e0: parse_rational_string(&self.e0)?,
            q: parse_ratfun(&self.q)?,
            g: parse_rational_string(&self.g)?,
            r: parse_ratfun(&self.r)?,
            l2: L2Flags { real_line: self.l2.real_line, positive: self.l2.positive, negative: self.l2.negative },
        })
    }
}

pub fn format_nodes1(nodes: &[NodeSpec1]) -> String {
    nodes.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(";")
}

pub fn format_nodes2(nodes: &[NodeSpec2]) -> String {
    nodes.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(";")
}

fn parse_sign(s: &str) -> Result<Sign> {
    match s.trim() {
        "+" => Ok(Sign::Plus),
        "-" | "\u{2212}" => Ok(Sign::Minus),
        other => Err(Error::Invalid(format!("expected sign, got {:?}", other))),
    }
}

fn node_tuples(text: &str) -> Result<Vec<Vec<String>>> {
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            let inner = s
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| Error::Invalid(format!("node {:?} must be parenthesized", s)))?;
            Ok(inner.split(',').map(|x| x.trim().to_string()).collect())
        })
        .collect()
}

fn parse_k(s: &str) -> Result<u32> {
    s.parse().map_err(|_| Error::Invalid(format!("bad node index {:?}", s)))
}

/// `"(k,±,±);…"`
pub fn parse_nodes1(text: &str) -> Result<Vec<NodeSpec1>> {
    node_tuples(text)?
        .into_iter()
        .map(|t| match t.as_slice() {
            [k, e1, e2] => Ok(NodeSpec1 { k: parse_k(k)?, eps1: parse_sign(e1)?, eps2: parse_sign(e2)? }),
            _ => Err(Error::Invalid("family-1 nodes have the form (k,±,±)".into())),
        })
        .collect()
}

/// `"(k,±);…"`
pub fn parse_nodes2(text: &str) -> Result<Vec<NodeSpec2>> {
    node_tuples(text)?
        .into_iter()
        .map(|t| match t.as_slice() {
            [k, e] => Ok(NodeSpec2 { k: parse_k(k)?, eps: parse_sign(e)? }),
            _ => Err(Error::Invalid("family-2 nodes have the form (k,±)".into())),
        })
        .collect()
}

impl PotentialDocument {
    pub fn from_result(r: &PotentialResult, eigenpairs: &[EigenPair]) -> PotentialDocument {
        let input = match &r.provenance {
            Provenance::Nodes1(n) => InputDoc { nodes: Some(format_nodes1(n)), ..Default::default() },
            Provenance::Nodes2(n) => InputDoc { nodes: Some(format_nodes2(n)), ..Default::default() },
            Provenance::LogPair { p1, p2 } => {
                InputDoc { p1: Some(p1.to_string()), p2: Some(p2.to_string()), ..Default::default() }
            }
            Provenance::Poly(f) => InputDoc { f: Some(f.to_string()), ..Default::default() },
            Provenance::Singular => InputDoc::default(),
        };
        let m = match &r.m {
            Gauge::Finite(m) => Some(ExprDoc::new(m)),
            Gauge::Infinite => None,
        };
        PotentialDocument {
            schema_version: SCHEMA_VERSION,
            family: r.family.tag(),
            case: r.case.tag.number(),
            nu: r.nu().to_string(),
            input,
            m,
            h: r.h.as_ref().map(ExprDoc::new),
            v: ExprDoc::new(&r.v),
            w: r.structure.as_ref().map(|s| s.w.to_string()),
            w_roots: r
                .w_roots()
                .iter()
                .map(|(root, m)| RootDoc { root: root.to_string(), multiplicity: *m })
                .collect(),
            eigenpairs: eigenpairs.iter().map(eigen_doc).collect(),
        }
    }

    /// Rebuilds and re-verifies the potential; fails if anything stored
    /// disagrees with the recomputation.
    pub fn to_result(&self) -> Result<PotentialResult> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Invalid(format!("unsupported schema version {}", self.schema_version)));
        }
        let family = Family::from_tag(&self.family)
            .ok_or_else(|| Error::Invalid(format!("unknown family {}", self.family)))?;
        let tag = CaseTag::from_number(self.case).ok_or_else(|| Error::Invalid(format!("bad case {}", self.case)))?;
        let nu = parse_ratfun(&self.nu)?;
        let provenance = match family {
            Family::F1 => Provenance::Nodes1(parse_nodes1(self.input.nodes.as_deref().unwrap_or(""))?),
            Family::F2 => Provenance::Nodes2(parse_nodes2(self.input.nodes.as_deref().unwrap_or(""))?),
            Family::F3Log => {
                let get = |s: &Option<String>| -> Result<MPoly> {
                    let r = parse_ratfun(s.as_deref().ok_or_else(|| Error::Invalid("missing P1/P2".into()))?)?;
                    Ok(r.num().clone())
                };
                Provenance::LogPair { p1: get(&self.input.p1)?, p2: get(&self.input.p2)? }
            }
            Family::F3Poly => {
                let f = parse_ratfun(self.input.f.as_deref().ok_or_else(|| Error::Invalid("missing F".into()))?)?;
                Provenance::Poly(f.num().clone())
            }
            Family::F4 | Family::Singular(_) => Provenance::Singular,
        };
        let m = match &self.m {
            Some(m) => Gauge::Finite(m.value()?),
            None => Gauge::Infinite,
        };
        let hints = self.w_roots.iter().map(|r| parse_ratfun(&r.root)).collect::<Result<Vec<_>>>()?;
        let out = finalize(family, GaugeCase::new(tag, nu), m, provenance, hints)?;
        if out.v != self.v.value()? {
            return Err(Error::Invalid("stored V differs from the recomputed potential".into()));
        }
        match (&self.h, &out.h) {
            (Some(h), Some(oh)) if &h.value()? == oh => {}
            (None, None) => {}
            _ => return Err(Error::Invalid("stored H differs from the recomputed one".into())),
        }
        Ok(out)
    }

    pub fn eigenpairs(&self) -> Result<Vec<EigenPair>> {
        self.eigenpairs.iter().map(EigenDoc::value).collect()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<PotentialDocument> {
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("bad document: {}", e)))
    }
}
