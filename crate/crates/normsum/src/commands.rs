//! One function per CLI subcommand, each returning a renderable value.

use normsum_core::classdata::{class_reps, congruence_for, CongruenceCondition, IdealClassRep};
use normsum_core::quadfield::{CLASS_THREE, CLASS_TWO};
use normsum_core::repsearch::{
    find_certificate_with, g_invariant_with, ClassProfile, GInvariant, LatticeQuery, MinTerms,
    RepCertificate, SearchConfig,
};
use normsum_core::universality::universal_norm_count;
use normsum_core::{make_field, Error, FieldParams, OmegaBranch};
use serde_json::{json, Value};

use crate::output::Render;

pub struct FieldInfo {
    pub field: FieldParams,
    pub classes: Vec<(IdealClassRep, CongruenceCondition)>,
}

fn norm_form(f: &FieldParams) -> String {
    match f.branch() {
        OmegaBranch::SqrtMinusD => format!("a^2+{}b^2", f.b2_coefficient()),
        OmegaBranch::HalfOnePlusSqrtMinusD => format!("a^2+ab+{}b^2", f.b2_coefficient()),
    }
}

fn condition_text(c: &CongruenceCondition) -> String {
    c.simplified()
        .map_or_else(|| c.to_string(), |l| l.to_string())
}

pub fn field_info(d: u64) -> Result<FieldInfo, Error> {
    let field = make_field(d)?;
    let classes = class_reps(&field)
        .into_iter()
        .map(|r| (r, congruence_for(&field, &r)))
        .collect();
    Ok(FieldInfo { field, classes })
}

impl Render for FieldInfo {
    fn to_json(&self) -> Value {
        let classes: Vec<Value> = self
            .classes
            .iter()
            .map(|(r, c)| {
                json!({
                    "class_index": r.class_index,
                    "k": r.k,
                    "s": r.s,
                    "t": r.t,
                    "rep": [r.k, r.s, r.t],
                    "ideal": r.to_string(),
                    "condition": condition_text(c),
                    "conditions": c.to_string(),
                })
            })
            .collect();
        json!({
            "d": self.field.d(),
            "class_number": self.field.class_number(),
            "omega": self.field.branch().to_string(),
            "norm_form": norm_form(&self.field),
            "classes": classes,
        })
    }

    fn headers(&self) -> Vec<&'static str> {
        vec!["d", "class_index", "k", "s", "t", "condition"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.classes
            .iter()
            .map(|(r, c)| {
                vec![
                    self.field.d().to_string(),
                    r.class_index.to_string(),
                    r.k.to_string(),
                    r.s.to_string(),
                    r.t.to_string(),
                    condition_text(c),
                ]
            })
            .collect()
    }
}

pub struct MinTermsResult(pub MinTerms);

pub fn min_terms(
    d: u64,
    class_index: usize,
    r: u64,
    cfg: &SearchConfig,
) -> Result<MinTermsResult, Error> {
    let q = LatticeQuery::new(make_field(d)?, class_index, r)?;
    normsum_core::repsearch::min_terms_with(&q, cfg).map(MinTermsResult)
}

impl Render for MinTermsResult {
    fn to_json(&self) -> Value {
        match self.0 {
            MinTerms::Representable(m) => json!({ "outcome": "representable", "m": m }),
            MinTerms::Unrepresentable => json!({ "outcome": "unrepresentable" }),
        }
    }

    fn headers(&self) -> Vec<&'static str> {
        vec!["outcome", "m"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let row = match self.0 {
            MinTerms::Representable(m) => vec!["representable".into(), m.to_string()],
            MinTerms::Unrepresentable => vec!["unrepresentable".into(), String::new()],
        };
        vec![row]
    }
}

pub struct CertificateResult {
    pub certificate: Option<RepCertificate>,
    /// Sum of norms reported by the independent checker.
    pub check: Option<u64>,
}

pub fn certificate(
    d: u64,
    class_index: usize,
    r: u64,
    m: usize,
    cfg: &SearchConfig,
) -> Result<CertificateResult, Error> {
    let q = LatticeQuery::new(make_field(d)?, class_index, r)?;
    let certificate = find_certificate_with(&q, m, cfg)?;
    let check = match &certificate {
        Some(c) => Some(
            c.check()
                .map_err(|_| Error::InvalidArgument("search produced an invalid certificate"))?,
        ),
        None => None,
    };
    Ok(CertificateResult { certificate, check })
}

impl Render for CertificateResult {
    fn to_json(&self) -> Value {
        let Some(c) = &self.certificate else {
            return json!({ "outcome": "unrepresentable" });
        };
        let gammas: Vec<[i64; 2]> = c.gammas.iter().map(|g| [g.a, g.b]).collect();
        json!({
            "d": c.query.field.d(),
            "class_index": c.query.class_index,
            "k": c.query.rep().k,
            "r": c.query.r,
            "m": c.m(),
            "gammas": gammas,
            "check": self.check,
        })
    }

    fn headers(&self) -> Vec<&'static str> {
        vec!["d", "class_index", "k", "r", "index", "a", "b", "norm"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let Some(c) = &self.certificate else {
            return Vec::new();
        };
        let (f, k) = (c.query.field, c.query.rep().k);
        c.gammas
            .iter()
            .enumerate()
            .map(|(i, g)| {
                vec![
                    f.d().to_string(),
                    c.query.class_index.to_string(),
                    k.to_string(),
                    c.query.r.to_string(),
                    (i + 1).to_string(),
                    g.a.to_string(),
                    g.b.to_string(),
                    f.norm(*g)
                        .map_or_else(|_| "overflow".into(), |n| n.to_string()),
                ]
            })
            .collect()
    }
}

pub struct Exceptional {
    pub d: u64,
    pub class_index: usize,
    pub r_max: u64,
    pub exceptions: Vec<u64>,
}

pub fn exceptional(
    d: u64,
    class_index: usize,
    r_max: u64,
    cfg: &SearchConfig,
) -> Result<Exceptional, Error> {
    let f = make_field(d)?;
    let rep = normsum_core::classdata::class_rep(&f, class_index)?;
    let exceptions = ClassProfile::compute(&f, &rep, r_max, cfg)?.exceptions();
    Ok(Exceptional {
        d,
        class_index,
        r_max,
        exceptions,
    })
}

impl Render for Exceptional {
    fn to_json(&self) -> Value {
        json!({
            "d": self.d,
            "class_index": self.class_index,
            "r_max": self.r_max,
            "exceptions": self.exceptions,
        })
    }

    fn headers(&self) -> Vec<&'static str> {
        vec!["d", "class_index", "r"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.exceptions
            .iter()
            .map(|r| {
                vec![
                    self.d.to_string(),
                    self.class_index.to_string(),
                    r.to_string(),
                ]
            })
            .collect()
    }
}

pub struct GResult {
    pub r_max: u64,
    pub g: GInvariant,
}

pub fn g(d: u64, r_max: u64, cfg: &SearchConfig) -> Result<GResult, Error> {
    Ok(GResult {
        r_max,
        g: g_invariant_with(&make_field(d)?, r_max, cfg)?,
    })
}

impl Render for GResult {
    fn to_json(&self) -> Value {
        json!({
            "d": self.g.witness.field.d(),
            "r_max": self.r_max,
            "g": self.g.g,
            "witness": { "class_index": self.g.witness.class_index, "r": self.g.witness.r },
            "stable": self.g.stable,
        })
    }

    fn headers(&self) -> Vec<&'static str> {
        vec!["d", "r_max", "g", "class_index", "r", "stable"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.g.witness.field.d().to_string(),
            self.r_max.to_string(),
            self.g.g.to_string(),
            self.g.witness.class_index.to_string(),
            self.g.witness.r.to_string(),
            self.g.stable.to_string(),
        ]]
    }
}

pub struct NormCount {
    pub d: u64,
    pub m_d: u32,
}

pub fn norm_count(d: u64) -> Result<NormCount, Error> {
    Ok(NormCount {
        d,
        m_d: universal_norm_count(&make_field(d)?)?,
    })
}

impl Render for NormCount {
    fn to_json(&self) -> Value {
        json!({ "d": self.d, "m_d": self.m_d })
    }

    fn headers(&self) -> Vec<&'static str> {
        vec!["d", "m_d"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![self.d.to_string(), self.m_d.to_string()]]
    }
}

/// Non-principal class representatives of every class-number-2 and -3 field.
pub struct ClassTables(pub Vec<(u64, IdealClassRep)>);

pub fn class_tables() -> ClassTables {
    let rows = CLASS_TWO
        .iter()
        .chain(CLASS_THREE.iter())
        .flat_map(|&d| {
            let f = make_field(d).expect("listed fields are supported");
            class_reps(&f)
                .into_iter()
                .filter(|r| !r.is_principal())
                .map(move |r| (d, r))
        })
        .collect();
    ClassTables(rows)
}

impl Render for ClassTables {
    fn to_json(&self) -> Value {
        Value::Array(
            self.0
                .iter()
                .map(|(d, r)| json!({ "d": d, "class_index": r.class_index, "k": r.k, "s": r.s, "t": r.t }))
                .collect(),
        )
    }

    fn headers(&self) -> Vec<&'static str> {
        vec!["d", "class_index", "k", "s", "t"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.0
            .iter()
            .map(|(d, r)| {
                vec![
                    d.to_string(),
                    r.class_index.to_string(),
                    r.k.to_string(),
                    r.s.to_string(),
                    r.t.to_string(),
                ]
            })
            .collect()
    }
}
