//! JSON tensor files and report serialization.
//!
//! A tensor file has the fields `m`, `n`, `encoding` (`"dense"` or
//! `"form"`) and `entries`. Dense entries are the `n^m` values in
//! lexicographic index order; form entries are `{exponents, coeff}`
//! objects. A value is a number, an `[re, im]` pair or a Gaussian-rational
//! string such as `"1/2-3i"`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{ExactTensor, GR};
use crate::spectra::SpectralReport;
use crate::tensor::{tensor_from_form, EigenClass, PolyForm, Tensor, C64};

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(untagged)]
pub enum RawValue {
    Real(f64),
    Pair([f64; 2]),
    Text(String),
}

impl RawValue {
    fn exact(&self) -> Result<Option<GR>> {
        match self {
            RawValue::Text(s) => Ok(Some(s.parse()?)),
            _ => Ok(None),
        }
    }

    fn float(&self) -> Result<C64> {
        match self {
            RawValue::Real(v) => Ok(C64::new(*v, 0.0)),
            RawValue::Pair([re, im]) => Ok(C64::new(*re, *im)),
            RawValue::Text(s) => Ok(s.parse::<GR>()?.to_c64()),
        }
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct FormTerm {
    pub exponents: Vec<u32>,
    pub coeff: RawValue,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(tag = "encoding", rename_all = "lowercase", deny_unknown_fields)]
pub enum TensorFile {
    Dense { m: usize, n: usize, entries: Vec<RawValue> },
    Form { m: usize, n: usize, entries: Vec<FormTerm> },
}

/// A parsed tensor file. `exact` is present when every value was given as
/// a rational string; `form` when the file used the form encoding.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorInput {
    pub tensor: Tensor,
    pub exact: Option<ExactTensor>,
    pub form: Option<PolyForm>,
}

impl TensorInput {
    pub fn require_exact(&self) -> Result<&ExactTensor> {
        self.exact
            .as_ref()
            .ok_or_else(|| Error::UnsupportedFormat("exact commands need rational-string entries".into()))
    }

    pub fn require_form(&self) -> Result<PolyForm> {
        match &self.form {
            Some(f) => Ok(f.clone()),
            None => crate::tensor::form_from_tensor(&self.tensor),
        }
    }
}

pub fn parse_tensor(text: &str) -> Result<TensorInput> {
    let file: TensorFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    match file {
        TensorFile::Dense { m, n, entries } => {
            let floats = entries.iter().map(RawValue::float).collect::<Result<Vec<_>>>()?;
            let tensor = Tensor::new(m, n, floats)?;
            let exact = all_exact(entries.iter())?.map(|e| ExactTensor::new(m, n, e)).transpose()?;
            Ok(TensorInput { tensor, exact, form: None })
        }
        TensorFile::Form { m, n, entries } => {
            let terms = entries
                .iter()
                .map(|t| Ok((t.exponents.clone(), t.coeff.float()?)))
                .collect::<Result<Vec<_>>>()?;
            let form = PolyForm::new(m as u32, n, terms)?;
            let tensor = tensor_from_form(&form)?;
            let exact = match all_exact(entries.iter().map(|t| &t.coeff))? {
                Some(cs) => Some(exact_from_form(m, n, entries.iter().map(|t| t.exponents.clone()).zip(cs))?),
                None => None,
            };
            Ok(TensorInput { tensor, exact, form: Some(form) })
        }
    }
}

fn all_exact<'a>(vals: impl Iterator<Item = &'a RawValue>) -> Result<Option<Vec<GR>>> {
    let mut out = Vec::new();
    for v in vals {
        match v.exact()? {
            Some(g) => out.push(g),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

/// Symmetric tensor entry `c_a a! / (m-1)!` at every index with exponent multiset `a`.
fn exact_from_form(m: usize, n: usize, terms: impl Iterator<Item = (Vec<u32>, GR)>) -> Result<ExactTensor> {
    let mut coeffs: std::collections::BTreeMap<Vec<u32>, GR> = Default::default();
    for (e, c) in terms {
        if e.len() != n || e.iter().sum::<u32>() as usize != m {
            return Err(Error::InvalidForm(format!("exponent vector {e:?} does not match degree {m}")));
        }
        *coeffs.entry(e).or_insert_with(GR::zero) += &c;
    }
    let fact = |k: u32| (1..=k as i64).product::<i64>();
    Ok(ExactTensor::from_fn(m, n, |idx| {
        let mut e = vec![0u32; n];
        for &i in idx {
            e[i] += 1;
        }
        match coeffs.get(&e) {
            Some(c) => {
                let afact: i64 = e.iter().map(|&k| fact(k)).product();
                c * &GR::ratio(afact, fact(m as u32 - 1))
            }
            None => GR::zero(),
        }
    }))
}

fn value_of(z: C64) -> RawValue {
    if z.im == 0.0 {
        RawValue::Real(z.re)
    } else {
        RawValue::Pair([z.re, z.im])
    }
}

/// Dense file text for a floating tensor.
pub fn write_tensor(a: &Tensor) -> String {
    let f = TensorFile::Dense { m: a.order(), n: a.dim(), entries: a.entries().iter().map(|&z| value_of(z)).collect() };
    serde_json::to_string_pretty(&f).expect("serializable")
}

/// Dense file text with rational-string entries.
pub fn write_exact_tensor(a: &ExactTensor) -> String {
    let entries = a.entries().iter().map(|g| RawValue::Text(g.to_string())).collect();
    serde_json::to_string_pretty(&TensorFile::Dense { m: a.order(), n: a.dim(), entries }).expect("serializable")
}

/// Form file text.
pub fn write_form(f: &PolyForm) -> String {
    let entries =
        f.terms().iter().map(|(e, &c)| FormTerm { exponents: e.clone(), coeff: value_of(c) }).collect();
    let file = TensorFile::Form { m: f.degree() as usize, n: f.nvars(), entries };
    serde_json::to_string_pretty(&file).expect("serializable")
}

/// Rounds to 15 significant digits and maps `-0` to `0`.
pub fn round15(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return if v.is_finite() { 0.0 } else { v };
    }
    let r: f64 = format!("{v:.14e}").parse().expect("formatted float");
    if r == 0.0 { 0.0 } else { r }
}

pub fn complex_json(z: C64) -> Value {
    json!([round15(z.re), round15(z.im)])
}

fn class_json(c: &EigenClass) -> Value {
    json!({
        "lambda": complex_json(c.representative.lambda),
        "x": c.representative.x.iter().map(|&z| complex_json(z)).collect::<Vec<_>>(),
        "multiplicity": c.multiplicity,
        "isotropic": c.isotropic,
        "normalized_lambdas": c.normalized_lambdas.iter().map(|&z| complex_json(z)).collect::<Vec<_>>(),
        "residual": round15(c.representative.residual),
    })
}

pub fn report_json(r: &SpectralReport) -> Value {
    let d = &r.diagnostics;
    json!({
        "summary": {
            "m": r.m,
            "n": r.n,
            "expected_count": r.expected_count as u64,
            "total_multiplicity": r.total_multiplicity,
            "positive_dimensional": r.positive_dimensional,
            "failed_paths": r.failed_paths,
            "isotropic_count": r.isotropic_count,
            "normalized_values": r.normalized_values.iter().map(|&z| complex_json(z)).collect::<Vec<_>>(),
            "value_multiplicities": r.value_multiplicities.iter()
                .map(|&(z, k)| json!({"value": complex_json(z), "multiplicity": k}))
                .collect::<Vec<_>>(),
        },
        "diagnostics": {
            "paths": d.paths,
            "converged": d.converged,
            "diverged": d.diverged,
            "step_underflow": d.step_underflow,
            "inaccurate": d.inaccurate,
            "trivial": d.trivial,
            "at_infinity": d.at_infinity,
            "degenerate_clusters": d.degenerate_clusters,
            "suspicious_clusters": d.suspicious_clusters,
        },
        "classes": r.classes.iter().map(class_json).collect::<Vec<_>>(),
    })
}
