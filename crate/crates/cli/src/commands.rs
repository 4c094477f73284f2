use std::fs;
use std::io::Read;
use std::path::Path;

use hclif::besselexp::{bessel_csv, bessel_series, exp_solution, BesselKind, ExpParams, ExpSolution};
use hclif::ck::{self, CkClass, CkTable, DoubleData};
use hclif::clifford::AlgebraDim;
use hclif::hermite::{hermite_closed_form, hermite_rodrigues, BetaMode};
use hclif::polyfun::PolyFunction;
use hclif::rational::{self, Rational};
use hclif::vekua::{
    generalized_powers, power_coefficients, vekua_solve_plain, vekua_solve_z0barpower, vekua_solve_z0power,
    AxialKind, AxialSolution, BetaPoly, NuSeries, PlainData, SeriesTermWire, Z0Data, Z0barData,
};
use serde::{de::DeserializeOwned, Deserialize, Serialize};

use crate::args::{BesselArgs, CkArgs, Format, HermiteArgs, PowersArgs, VekuaArgs, VerifyArgs};

#[derive(Debug)]
pub enum Failure {
    /// Flags that parse but do not fit together.
    Usage(String),
    /// Solver preconditions, unreadable or inconsistent input.
    Domain(String),
}

impl From<hclif::Error> for Failure {
    fn from(e: hclif::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn json<T: Serialize>(value: &T) -> Outcome {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| Failure::Domain(format!("serialization failed: {e}")))
}

fn read_input<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Domain(format!("cannot read standard input: {e}")))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Domain(format!("cannot read {}: {e}", path.display())))?
    };
    serde_json::from_str(&text).map_err(|e| Failure::Domain(format!("malformed input {}: {e}", path.display())))
}

fn check_truncation(m: &Rational) -> Result<(), Failure> {
    let limit = hclif::max_order();
    if *m > rational::int(limit as i64) {
        return Err(Failure::Domain(format!(
            "truncation order M = {} exceeds the limit {limit} (HCLIF_MAX_K)",
            rational::to_string(m)
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct HermiteOut {
    #[serde(rename = "type")]
    type_id: u8,
    p: u32,
    n: usize,
    degree: u32,
    rodrigues: PolyFunction,
    closed_form: PolyFunction,
    verdict: &'static str,
}

pub fn hermite(a: &HermiteArgs) -> Outcome {
    let r = hermite_rodrigues(a.type_id, a.p, a.n)?;
    let c = hermite_closed_form(a.type_id, a.p, a.n, BetaMode::Element)?;
    json(&HermiteOut {
        type_id: a.type_id,
        p: a.p,
        n: a.n,
        degree: r.expected_degree(),
        verdict: if r.value == c.value { "equal" } else { "different" },
        rodrigues: r.value,
        closed_form: c.value,
    })
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CkInput {
    #[serde(rename = "A0")]
    a0: Option<PolyFunction>,
    #[serde(rename = "B0")]
    b0: Option<PolyFunction>,
    #[serde(rename = "C0")]
    c0: Option<PolyFunction>,
    #[serde(rename = "D0")]
    d0: Option<PolyFunction>,
    #[serde(rename = "A_row")]
    a_row: Option<Vec<PolyFunction>>,
    #[serde(rename = "B_row")]
    b_row: Option<Vec<PolyFunction>>,
    #[serde(rename = "C_col")]
    c_col: Option<Vec<PolyFunction>>,
    #[serde(rename = "D_col")]
    d_col: Option<Vec<PolyFunction>>,
}

fn field<T>(value: Option<T>, name: &str, class: CkClass) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Domain(format!("class {class} input needs '{name}'")))
}

#[derive(Serialize)]
struct ResidualOut {
    s1: PolyFunction,
    s2: PolyFunction,
    min_order: Option<u32>,
    exact: bool,
}

#[derive(Serialize)]
struct CkOut {
    table: CkTable,
    residuals: ResidualOut,
}

fn ck_shift(a: &CkArgs) -> Result<u32, Failure> {
    match (a.class, a.s) {
        (CkClass::II | CkClass::III, Some(s)) => Ok(s),
        (CkClass::II | CkClass::III, None) => Err(Failure::Usage(format!("--s is required for class {}", a.class))),
        (_, Some(_)) => Err(Failure::Usage(format!("--s does not apply to class {}", a.class))),
        (_, None) => Ok(0),
    }
}

fn ck_from_input(a: &CkArgs, path: &Path, s: u32) -> Result<CkTable, Failure> {
    let i: CkInput = read_input(path)?;
    let c = a.class;
    let table = match c {
        CkClass::I => ck::ck_class1(&field(i.a0, "A0", c)?, &field(i.d0, "D0", c)?, a.order)?,
        CkClass::II => ck::ck_class2(&field(i.c0, "C0", c)?, &field(i.d0, "D0", c)?, s, a.order)?,
        CkClass::III => ck::ck_class3(&field(i.a0, "A0", c)?, &field(i.b0, "B0", c)?, s, a.order)?,
        CkClass::Double => {
            let data = DoubleData {
                a_row: field(i.a_row, "A_row", c)?,
                b_row: field(i.b_row, "B_row", c)?,
                c_col: field(i.c_col, "C_col", c)?,
                d_col: field(i.d_col, "D_col", c)?,
            };
            ck::ck_double(&data, a.order)?
        }
    };
    Ok(table)
}

/// Gaussian initial data `e^{−|z̲|²/2}` in the slots of each class.
fn ck_gaussian(a: &CkArgs, s: u32) -> Result<CkTable, Failure> {
    let n = a.n.ok_or_else(|| Failure::Usage("--n is required without --input".into()))?;
    let dim = AlgebraDim::new(n, false)?;
    let g = PolyFunction::gaussian(dim);
    let table = match a.class {
        CkClass::I => ck::ck_class1(&g, &PolyFunction::zero(dim), a.order)?,
        CkClass::II => ck::ck_class2(&g, &g, s, a.order)?,
        CkClass::III => ck::ck_class3(&g, &g, s, a.order)?,
        CkClass::Double => return Err(Failure::Usage("--input is required for the double class".into())),
    };
    Ok(table)
}

pub fn ck(a: &CkArgs) -> Outcome {
    let s = ck_shift(a)?;
    let table = match &a.input {
        Some(path) => {
            if a.n.is_some() {
                return Err(Failure::Usage("--n cannot be combined with --input".into()));
            }
            ck_from_input(a, path, s)?
        }
        None => ck_gaussian(a, s)?,
    };
    let r = table.residual_report();
    let exact = r.is_exact();
    json(&CkOut { table, residuals: ResidualOut { s1: r.s1, s2: r.s2, min_order: r.min_order, exact } })
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct VekuaInput {
    kind: AxialKind,
    n: usize,
    a1: Option<Vec<SeriesTermWire>>,
    a2: Option<Vec<SeriesTermWire>>,
    b: Option<Vec<SeriesTermWire>>,
    c: Option<Vec<SeriesTermWire>>,
    d1: Option<Vec<SeriesTermWire>>,
    d2: Option<Vec<SeriesTermWire>>,
}

impl VekuaInput {
    fn series(&self, w: &Option<Vec<SeriesTermWire>>) -> Result<NuSeries, Failure> {
        match w {
            Some(terms) => Ok(NuSeries::from_wire(self.n, terms)?),
            None => Ok(NuSeries::zero(self.n)),
        }
    }

    fn reject(&self, present: &[(&str, bool)]) -> Result<(), Failure> {
        match present.iter().find(|(_, p)| *p) {
            Some((name, _)) => Err(Failure::Domain(format!("'{name}' is not initial data of the {:?} kind", self.kind))),
            None => Ok(()),
        }
    }
}

#[derive(Serialize)]
struct PowerCoefficient {
    k: usize,
    alpha: BetaPoly,
    delta: BetaPoly,
}

#[derive(Serialize)]
struct AxialResiduals {
    vanish: bool,
    series: Vec<Vec<SeriesTermWire>>,
}

#[derive(Serialize)]
struct AxialOut {
    solution: AxialSolution,
    #[serde(skip_serializing_if = "Option::is_none")]
    coefficients: Option<Vec<PowerCoefficient>>,
    residuals: AxialResiduals,
    #[serde(skip_serializing_if = "Option::is_none")]
    expanded: Option<PolyFunction>,
}

fn axial_out(solution: AxialSolution, coefficients: Option<Vec<PowerCoefficient>>, expand: bool) -> Outcome {
    let series = solution.residuals()?;
    let vanish = series.iter().all(NuSeries::is_zero);
    let expanded = if expand { Some(solution.expand()?) } else { None };
    json(&AxialOut {
        coefficients,
        residuals: AxialResiduals { vanish, series: series.iter().map(NuSeries::to_wire).collect() },
        expanded,
        solution,
    })
}

pub fn vekua(a: &VekuaArgs) -> Outcome {
    check_truncation(&a.m)?;
    let i: VekuaInput = read_input(&a.input)?;
    let shift = |kind: &str| a.s.ok_or_else(|| Failure::Usage(format!("--s is required for the {kind} kind")));
    let solution = match i.kind {
        AxialKind::Plain => {
            if a.s.is_some() {
                return Err(Failure::Usage("--s does not apply to the plain kind".into()));
            }
            i.reject(&[("b", i.b.is_some()), ("c", i.c.is_some())])?;
            let data = PlainData { a1: i.series(&i.a1)?, a2: i.series(&i.a2)?, d1: i.series(&i.d1)?, d2: i.series(&i.d2)? };
            vekua_solve_plain(i.n, &data, a.order, &a.m)?
        }
        AxialKind::Z0Power => {
            let s = shift("z0_power")?;
            i.reject(&[("a1", i.a1.is_some()), ("a2", i.a2.is_some()), ("b", i.b.is_some())])?;
            let data = Z0Data { c: i.series(&i.c)?, d1: i.series(&i.d1)?, d2: i.series(&i.d2)? };
            vekua_solve_z0power(i.n, &data, s, a.order, &a.m)?
        }
        AxialKind::Z0barPower => {
            let s = shift("z0bar_power")?;
            i.reject(&[("c", i.c.is_some()), ("d1", i.d1.is_some()), ("d2", i.d2.is_some())])?;
            let data = Z0barData { a1: i.series(&i.a1)?, a2: i.series(&i.a2)?, b: i.series(&i.b)? };
            vekua_solve_z0barpower(i.n, &data, s, a.order, &a.m)?
        }
    };
    axial_out(solution, None, a.expand)
}

pub fn powers(a: &PowersArgs) -> Outcome {
    let alphas = (&a.alpha1, &a.alpha2);
    let deltas = (&a.delta1, &a.delta2);
    let solution = generalized_powers(&a.s, a.n, alphas, deltas, a.order)?;
    let coefficients = (0..=a.order)
        .map(|k| {
            let (alpha, delta) = power_coefficients(&a.s, a.n, alphas, deltas, k);
            PowerCoefficient { k, alpha, delta }
        })
        .collect();
    axial_out(solution, Some(coefficients), a.expand)
}

#[derive(Serialize)]
struct BesselValue {
    t: f64,
    value: f64,
}

#[derive(Serialize)]
struct BesselNumericOut {
    alpha: u32,
    kind: BesselKind,
    values: Vec<BesselValue>,
}

#[derive(Serialize)]
struct BesselSeriesOut {
    lambda: String,
    mu: String,
    n: usize,
    alpha1: String,
    alpha2: String,
    solution: ExpSolution,
    ode_residuals: [Vec<SeriesTermWire>; 2],
    system_residuals: Vec<Vec<SeriesTermWire>>,
    residuals_vanish: bool,
    closed_forms_match: bool,
}

pub fn bessel(a: &BesselArgs) -> Outcome {
    if let (Some(alpha), Some(kind)) = (a.alpha, a.kind) {
        let values = a.t.iter().map(|&t| BesselValue { t, value: bessel_series(alpha, kind, t) }).collect();
        return match a.format {
            Format::Csv => Ok(bessel_csv(alpha, kind, &a.t)),
            Format::Json => json(&BesselNumericOut { alpha, kind, values }),
        };
    }
    if a.format == Format::Csv {
        return Err(Failure::Usage("--format csv applies to numeric mode (--t) only".into()));
    }
    let (Some(lambda), Some(mu), Some(n)) = (&a.lambda, &a.mu, a.n) else {
        return Err(Failure::Usage("series mode needs --lambda, --mu and --n".into()));
    };
    let m = a.m.unwrap_or(12);
    check_truncation(&rational::int(i64::from(m)))?;
    let params = ExpParams {
        lambda: lambda.clone(),
        mu: mu.clone(),
        n,
        alpha1: a.alpha1.clone().unwrap_or_else(|| rational::int(1)),
        alpha2: a.alpha2.clone().unwrap_or_else(|| rational::int(0)),
    };
    let solution = exp_solution(&params, m)?;
    let (ob, oc) = solution.ode_residuals();
    let system = solution.system_residuals();
    let residuals_vanish = ob.is_zero() && oc.is_zero() && system.iter().all(NuSeries::is_zero);
    json(&BesselSeriesOut {
        lambda: rational::to_string(&params.lambda),
        mu: rational::to_string(&params.mu),
        n,
        alpha1: rational::to_string(&params.alpha1),
        alpha2: rational::to_string(&params.alpha2),
        ode_residuals: [ob.to_wire(), oc.to_wire()],
        system_residuals: system.iter().map(NuSeries::to_wire).collect(),
        residuals_vanish,
        closed_forms_match: solution.closed_forms_match(),
        solution,
    })
}

#[derive(Serialize)]
struct Family {
    zero: bool,
    residuals: Vec<PolyFunction>,
}

impl Family {
    fn new(residuals: Vec<PolyFunction>) -> Self {
        Family { zero: residuals.iter().all(PolyFunction::is_zero), residuals }
    }
}

#[derive(Serialize)]
struct InhomogeneousOut {
    g: PolyFunction,
    h: PolyFunction,
}

#[derive(Serialize)]
struct VerifyOut {
    n: usize,
    submonogenic: Family,
    components: Family,
    hmonogenic: Family,
    hms_split: Family,
    inhomogeneous_data: InhomogeneousOut,
}

pub fn verify(a: &VerifyArgs) -> Outcome {
    let f: PolyFunction = read_input(&a.input)?;
    let (s1, s2) = ck::residuals_submonogenic(&f)?;
    let comps = ck::component_residuals(&ck::decompose(&f)?)?;
    let (r1, r2) = ck::residuals_hmonogenic(&f)?;
    let split = ck::residuals_hms_split(&f)?;
    let (g, h) = ck::inhomogeneous_data(&f)?;
    json(&VerifyOut {
        n: f.n(),
        submonogenic: Family::new(vec![s1, s2]),
        components: Family::new(comps.to_vec()),
        hmonogenic: Family::new(vec![r1, r2]),
        hms_split: Family::new(split.to_vec()),
        inhomogeneous_data: InhomogeneousOut { g, h },
    })
}
