//! Problem files, routing to the solvers, and result documents.
//!
//! A problem file is a header of `key: value` lines followed by one
//! generator per line; `#` starts a comment. The same fields are accepted
//! as a JSON object.
//!
//! ```text
//! field: Q
//! xvars: x1, x2
//! yvars: y
//! x1^2 + 2*x1*x2 + x2^2 + x1*y + x2*y + y^2
//! ```
//!
//! `field: Q[a]/(a^2 + 1)` declares the extension by a root `a` of an
//! irreducible polynomial. `intersect-with: p1` makes the generator lines a
//! zero-dimensional `I0` and asks for `A(I0 ∩ <p1>)`.

pub mod parse;

use std::sync::Arc;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::enumerate::{enumerate_generators, naive_degree_search, Budget, EnumerationStatus, Strategy};
use crate::field::{AlgNum, Field, NumberField, Rational};
use crate::groebner::{ideal_intersect, GroebnerBasis};
use crate::intersect::intersect_with_generator;
use crate::poly::merge::{SeparatedPair, VariablePartition};
use crate::poly::{MonomialOrder, Poly};
use crate::principal::{
    thm5_generator, thm5_generator_in_field, PrincipalError, PrincipalOutcome, PrincipalProblem,
};
use crate::zerodim::AlgebraPresentation;

pub use parse::{parse_expr, parse_poly, ExprError};

pub const DEFAULT_MAX_DEGREE: u32 = 4;
pub const DEFAULT_EXPONENT_CAP: u32 = 32;

/// A problem-file error with its line and column, when known.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ProblemError {
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub message: String,
}

impl std::fmt::Display for ProblemError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.line, self.column) {
            (Some(l), Some(c)) => write!(f, "line {l}, column {c}: {}", self.message),
            (Some(l), None) => write!(f, "line {l}: {}", self.message),
            _ => f.write_str(&self.message),
        }
    }
}

fn problem_error(line: Option<usize>, message: impl Into<String>) -> ProblemError {
    ProblemError {
        line,
        column: None,
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    /// `Q(name)` with `name` a root of `minpoly`.
    Extension { name: String, minpoly: String },
}

impl FieldSpec {
    pub fn describe(&self) -> String {
        match self {
            FieldSpec::Rationals => "Q".into(),
            FieldSpec::Extension { name, minpoly } => format!("Q[{name}]/({minpoly})"),
        }
    }

    fn parse(text: &str) -> Result<FieldSpec, String> {
        let t = text.trim();
        if matches!(t, "Q" | "QQ" | "rationals") {
            return Ok(FieldSpec::Rationals);
        }
        let bad = || format!("unknown field `{t}`; expected Q or Q[a]/(minimal polynomial)");
        let rest = t.strip_prefix("Q[").ok_or_else(bad)?;
        let (name, rest) = rest.split_once(']').ok_or_else(bad)?;
        let inner = rest
            .trim()
            .strip_prefix("/")
            .map(str::trim)
            .and_then(|r| r.strip_prefix('('))
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let name = name.trim();
        if !is_identifier(name) {
            return Err(format!("`{name}` is not a valid generator name"));
        }
        Ok(FieldSpec::Extension {
            name: name.to_string(),
            minpoly: inner.trim().to_string(),
        })
    }

    /// The number field, checking that the polynomial is irreducible.
    pub fn number_field(&self) -> Result<Option<Arc<NumberField>>, String> {
        let FieldSpec::Extension { name, minpoly } = self else {
            return Ok(None);
        };
        let p: Poly<Rational> =
            parse_poly(minpoly, std::slice::from_ref(name)).map_err(|e| e.to_string())?;
        let u = p
            .to_upoly(0)
            .ok_or_else(|| "minimal polynomial must be univariate".to_string())?;
        if u.deg() < 2 {
            return Err("minimal polynomial must have degree at least 2".into());
        }
        let field = NumberField::new(u.monic(), name).map_err(|_| {
            format!("minimal polynomial {minpoly} is reducible over Q")
        })?;
        Ok(Some(field))
    }
}

fn is_identifier(s: &str) -> bool {
    let mut cs = s.chars();
    cs.next().is_some_and(|c| c.is_alphabetic() || c == '_')
        && cs.all(|c| c.is_alphanumeric() || c == '_')
}

/// A validated problem.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec {
    pub field: FieldSpec,
    pub x_vars: Vec<String>,
    pub y_vars: Vec<String>,
    pub generators: Vec<String>,
    /// Principal part `p1` of an explicit `I0 ∩ <p1>` form.
    pub intersect_with: Option<String>,
    pub strategy: Strategy,
    pub max_degree: u32,
    pub exponent_cap: u32,
    pub timeout_seconds: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
struct JsonProblem {
    #[serde(default)]
    field: Option<String>,
    xvars: Vec<String>,
    yvars: Vec<String>,
    generators: Vec<String>,
    #[serde(default)]
    intersect_with: Option<String>,
    #[serde(default)]
    strategy: Option<String>,
    #[serde(default)]
    max_degree: Option<u32>,
    #[serde(default)]
    exponent_cap: Option<u32>,
    #[serde(default)]
    timeout_seconds: Option<f64>,
}

pub fn parse_strategy(s: &str) -> Result<Strategy, String> {
    match s.trim() {
        "naive" => Ok(Strategy::Naive),
        "merged" => Ok(Strategy::Merged),
        other => Err(format!("unknown strategy `{other}`; expected naive or merged")),
    }
}

fn split_names(s: &str) -> Vec<String> {
    s.split([',', ' ', '\t'])
        .filter(|w| !w.is_empty())
        .map(str::to_string)
        .collect()
}

/// Parses a problem in the header format or as JSON.
pub fn parse_problem(text: &str) -> Result<ProblemSpec, ProblemError> {
    if text.trim_start().starts_with('{') {
        return parse_json_problem(text);
    }
    let mut field = None;
    let mut xs = None;
    let mut ys = None;
    let mut gens: Vec<(String, usize)> = Vec::new();
    let mut i1 = None;
    let mut strategy = Strategy::Merged;
    let mut max_degree = DEFAULT_MAX_DEGREE;
    let mut exponent_cap = DEFAULT_EXPONENT_CAP;
    let mut timeout = None;
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let header = line.split_once(':').filter(|(key, _)| {
            key.chars().all(|c| c.is_ascii_lowercase() || c == '-') && !key.is_empty()
        });
        let Some((key, value)) = header else {
            gens.push((line.to_string(), line_no));
            continue;
        };
        let err = |m: String| problem_error(Some(line_no), m);
        let number = |v: &str| {
            v.trim()
                .parse::<u32>()
                .map_err(|_| err(format!("`{key}` expects a nonnegative integer")))
        };
        match key {
            "field" => field = Some(FieldSpec::parse(value).map_err(err)?),
            "xvars" => xs = Some((split_names(value), line_no)),
            "yvars" => ys = Some((split_names(value), line_no)),
            "intersect-with" => i1 = Some((value.trim().to_string(), line_no)),
            "strategy" => strategy = parse_strategy(value).map_err(err)?,
            "max-degree" => max_degree = number(value)?,
            "exponent-cap" => exponent_cap = number(value)?,
            "timeout-seconds" => {
                timeout = Some(
                    value
                        .trim()
                        .parse::<f64>()
                        .map_err(|_| err("`timeout-seconds` expects a number".into()))?,
                )
            }
            other => return Err(err(format!("unknown header `{other}`"))),
        }
    }
    let (xs, xline) = xs.ok_or_else(|| problem_error(None, "missing `xvars:` header"))?;
    let (ys, _) = ys.ok_or_else(|| problem_error(None, "missing `yvars:` header"))?;
    let spec = ProblemSpec {
        field: field.unwrap_or(FieldSpec::Rationals),
        x_vars: xs,
        y_vars: ys,
        generators: gens.iter().map(|(g, _)| g.clone()).collect(),
        intersect_with: i1.as_ref().map(|(p, _)| p.clone()),
        strategy,
        max_degree,
        exponent_cap,
        timeout_seconds: timeout,
    };
    let mut lines: Vec<usize> = gens.iter().map(|(_, l)| *l).collect();
    if let Some((_, l)) = i1 {
        lines.push(l);
    }
    validate(&spec, Some(xline), &lines)?;
    Ok(spec)
}

fn parse_json_problem(text: &str) -> Result<ProblemSpec, ProblemError> {
    let j: JsonProblem = serde_json::from_str(text).map_err(|e| ProblemError {
        line: Some(e.line()),
        column: Some(e.column()),
        message: e.to_string(),
    })?;
    let field = match &j.field {
        Some(f) => FieldSpec::parse(f).map_err(|m| problem_error(None, m))?,
        None => FieldSpec::Rationals,
    };
    let strategy = match &j.strategy {
        Some(s) => parse_strategy(s).map_err(|m| problem_error(None, m))?,
        None => Strategy::Merged,
    };
    let spec = ProblemSpec {
        field,
        x_vars: j.xvars,
        y_vars: j.yvars,
        generators: j.generators,
        intersect_with: j.intersect_with,
        strategy,
        max_degree: j.max_degree.unwrap_or(DEFAULT_MAX_DEGREE),
        exponent_cap: j.exponent_cap.unwrap_or(DEFAULT_EXPONENT_CAP),
        timeout_seconds: j.timeout_seconds,
    };
    validate(&spec, None, &[])?;
    Ok(spec)
}

fn validate(spec: &ProblemSpec, header_line: Option<usize>, lines: &[usize]) -> Result<(), ProblemError> {
    for v in spec.x_vars.iter().chain(&spec.y_vars) {
        if !is_identifier(v) {
            return Err(problem_error(header_line, format!("`{v}` is not a valid variable name")));
        }
    }
    let part = spec
        .partition()
        .map_err(|m| problem_error(header_line, m))?;
    let gen_name = match &spec.field {
        FieldSpec::Extension { name, .. } => {
            if part.index_of(name).is_some() || name == "s" || name == "t" {
                return Err(problem_error(
                    None,
                    format!("field generator `{name}` clashes with a variable name"),
                ));
            }
            Some(name.clone())
        }
        FieldSpec::Rationals => None,
    };
    spec.field
        .number_field()
        .map_err(|m| problem_error(None, m))?;
    if spec.generators.is_empty() {
        return Err(problem_error(None, "no generators given"));
    }
    let names = part.names();
    let n = part.n() + part.m();
    let exprs = spec.generators.iter().chain(&spec.intersect_with);
    for (k, e) in exprs.enumerate() {
        // the field generator resolves to a placeholder; only syntax and names matter here
        let resolve = |s: &str| {
            if gen_name.as_deref() == Some(s) {
                return Some(Poly::<Rational>::one());
            }
            names[..n].iter().position(|x| x == s).map(Poly::var)
        };
        parse_expr(e, &resolve).map_err(|err| ProblemError {
            line: lines.get(k).copied(),
            column: Some(err.column),
            message: err.message,
        })?;
    }
    Ok(())
}

impl ProblemSpec {
    pub fn partition(&self) -> Result<VariablePartition, String> {
        VariablePartition::new(self.x_vars.clone(), self.y_vars.clone()).map_err(|e| e.to_string())
    }
}

/// A pair printed with the problem's variable names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairText {
    pub f: String,
    pub g: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Trivial,
    Simple,
    Finite,
    Partial,
    UnsupportedFallback,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    Principal,
    Zerodim,
    Intersection,
    Enumerate,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub elapsed_ms: u128,
    /// Degrees processed by the enumerator.
    pub degrees_tried: Vec<u32>,
    /// Degree at which each enumerated generator appeared.
    pub found_at: Vec<u32>,
    pub strategy: Option<String>,
    /// Route taken for the merged ideal in the enumerator.
    pub merged_route: Option<String>,
    pub interrupted: bool,
    /// Generators that passed the final membership check.
    pub membership_checked: usize,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub status: Status,
    pub route: Route,
    pub field: String,
    pub xvars: Vec<String>,
    pub yvars: Vec<String>,
    /// Algebra generators besides `(1, 1)`.
    pub generators: Vec<PairText>,
    pub diagnostics: Diagnostics,
}

impl ResultDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error(transparent)]
    Invalid(#[from] ProblemError),
    #[error("not supported: {0}")]
    Unsupported(String),
}

/// Coefficient fields accepted in problem files.
pub trait InputField: Field {
    fn principal(prob: &PrincipalProblem<Self>) -> Result<PrincipalOutcome<Self>, PrincipalError>;
}

impl InputField for Rational {
    fn principal(prob: &PrincipalProblem<Self>) -> Result<PrincipalOutcome<Self>, PrincipalError> {
        thm5_generator(prob)
    }
}

impl InputField for AlgNum {
    fn principal(prob: &PrincipalProblem<Self>) -> Result<PrincipalOutcome<Self>, PrincipalError> {
        thm5_generator_in_field(prob)
    }
}

/// The problem's polynomials over a concrete field.
pub struct Instance<F: Field> {
    pub part: VariablePartition,
    pub generators: Vec<Poly<F>>,
    pub intersect_with: Option<Poly<F>>,
    generator_element: Option<F>,
    gen_name: Option<String>,
}

impl<F: Field> Instance<F> {
    /// Parses an expression over the problem's variables and field.
    pub fn parse(&self, text: &str) -> Result<Poly<F>, ExprError> {
        let names = self.part.names();
        let n = self.part.n() + self.part.m();
        parse_expr(text, &|s: &str| {
            if self.gen_name.as_deref() == Some(s) {
                return self.generator_element.clone().map(Poly::constant);
            }
            names[..n].iter().position(|x| x == s).map(Poly::var)
        })
    }

    /// Generators of the ideal the pairs must satisfy.
    pub fn ideal(&self) -> Vec<Poly<F>> {
        match &self.intersect_with {
            Some(p1) => ideal_intersect(&self.generators, std::slice::from_ref(p1)),
            None => self.generators.clone(),
        }
    }

    pub fn render(&self, p: &Poly<F>) -> String {
        p.render(&self.part.names())
    }

    pub fn render_pair(&self, pair: &SeparatedPair<F>) -> PairText {
        PairText {
            f: self.render(&pair.f),
            g: self.render(&pair.g),
        }
    }
}

fn instance<F: Field>(
    spec: &ProblemSpec,
    generator_element: Option<F>,
) -> Result<Instance<F>, ProblemError> {
    let part = spec.partition().map_err(|m| problem_error(None, m))?;
    let gen_name = match &spec.field {
        FieldSpec::Extension { name, .. } => Some(name.clone()),
        FieldSpec::Rationals => None,
    };
    let mut inst = Instance {
        part,
        generators: Vec::new(),
        intersect_with: None,
        generator_element,
        gen_name,
    };
    let to_err = |e: ExprError| ProblemError {
        line: None,
        column: Some(e.column),
        message: e.message,
    };
    inst.generators = spec
        .generators
        .iter()
        .map(|g| inst.parse(g))
        .collect::<Result<_, _>>()
        .map_err(to_err)?;
    inst.intersect_with = match &spec.intersect_with {
        Some(p) => Some(inst.parse(p).map_err(to_err)?),
        None => None,
    };
    Ok(inst)
}

/// Runs `body` over the field the problem declares.
macro_rules! with_field {
    ($spec:expr, |$inst:ident| $body:expr) => {{
        match $spec.field.number_field().map_err(|m| problem_error(None, m))? {
            None => {
                let $inst = instance::<Rational>($spec, None)?;
                $body
            }
            Some(nf) => {
                let $inst = instance::<AlgNum>($spec, Some(nf.generator()))?;
                $body
            }
        }
    }};
}

/// Orders pairs by total degree, then by printed form.
fn sort_pairs<F: Field>(inst: &Instance<F>, pairs: &mut [SeparatedPair<F>]) {
    pairs.sort_by_cached_key(|p| {
        let t = inst.render_pair(p);
        (p.total_degree(), t.f, t.g)
    });
}

/// The current time; absent on targets without a clock.
fn now() -> Option<Instant> {
    if cfg!(target_arch = "wasm32") {
        None
    } else {
        Some(Instant::now())
    }
}

/// Routes the problem to the matching solver.
pub fn route_and_solve(spec: &ProblemSpec) -> Result<ResultDocument, SolveError> {
    let start = now();
    with_field!(spec, |inst| solve_in(spec, &inst, start))
}

fn solve_in<F: InputField>(
    spec: &ProblemSpec,
    inst: &Instance<F>,
    start: Option<Instant>,
) -> Result<ResultDocument, SolveError> {
    let mut diag = Diagnostics::default();
    let (status, route, mut pairs): (Status, Route, Vec<SeparatedPair<F>>) = if let Some(p1) =
        &inst.intersect_with
    {
        let pres = AlgebraPresentation::new(&inst.generators, &inst.part.x_vars(), &inst.part.y_vars())
            .map_err(|e| SolveError::Unsupported(format!("I0: {e}")))?;
        let prob = PrincipalProblem::new(p1.clone(), inst.part.clone())
            .map_err(|e| SolveError::Unsupported(format!("principal part: {e}")))?;
        match F::principal(&prob).map_err(|e| SolveError::Unsupported(e.to_string()))? {
            PrincipalOutcome::Trivial => (Status::Trivial, Route::Intersection, Vec::new()),
            PrincipalOutcome::Simple(g) => {
                let out = intersect_with_generator(&pres, &g, spec.exponent_cap);
                diag.notes.push(format!(
                    "base generator ({}, {})",
                    inst.render(&g.f),
                    inst.render(&g.g)
                ));
                for c in &out.generators {
                    diag.notes.push(format!("generator {}", c.render("g")));
                }
                let status = if out.complete {
                    Status::Finite
                } else {
                    Status::Partial
                };
                (
                    status,
                    Route::Intersection,
                    out.generators.into_iter().map(|c| c.pair.canonical()).collect(),
                )
            }
        }
    } else if inst.generators.len() == 1 {
        let prob = PrincipalProblem::new(inst.generators[0].clone(), inst.part.clone())
            .map_err(|e| SolveError::Unsupported(format!("{e} (see Non-goals in the README)")))?;
        match F::principal(&prob).map_err(|e| SolveError::Unsupported(e.to_string()))? {
            PrincipalOutcome::Trivial => (Status::Trivial, Route::Principal, Vec::new()),
            PrincipalOutcome::Simple(g) => (Status::Simple, Route::Principal, vec![g]),
        }
    } else if let Ok(pres) =
        AlgebraPresentation::new(&inst.generators, &inst.part.x_vars(), &inst.part.y_vars())
    {
        (Status::Finite, Route::Zerodim, pres.generators().to_vec())
    } else {
        let deadline = start
            .zip(spec.timeout_seconds)
            .map(|(t, s)| t + Duration::from_secs_f64(s.max(0.0)));
        let stop = move || deadline.is_some_and(|d| now().is_some_and(|n| n >= d));
        let budget = Budget {
            max_degree: spec.max_degree,
            exponent_cap: spec.exponent_cap,
            stop: &stop,
        };
        let e = enumerate_generators(&inst.generators, &inst.part, spec.strategy, &budget);
        diag.degrees_tried = (1..=e.degree_reached).collect();
        diag.found_at = e.found_at.clone();
        diag.strategy = Some(spec.strategy.name().into());
        diag.interrupted = e.interrupted;
        if let Some(m) = &e.merged {
            diag.merged_route = Some(m.route.name().into());
            if let crate::enumerate::MergedRoute::Unsupported(why) = &m.route {
                diag.notes.push(format!("merged ideal: {why}"));
            }
        }
        if e.rejected > 0 {
            diag.notes.push(format!("{} candidates failed membership", e.rejected));
        }
        let status = match e.status {
            EnumerationStatus::Trivial => Status::Trivial,
            EnumerationStatus::Partial => Status::Partial,
            EnumerationStatus::UnsupportedFallback => Status::UnsupportedFallback,
        };
        (status, Route::Enumerate, e.generators)
    };
    if route != Route::Enumerate {
        sort_pairs(inst, &mut pairs);
    }
    // independent check on the printed forms
    let gb = GroebnerBasis::ideal(&inst.ideal(), MonomialOrder::Grevlex);
    let mut generators = Vec::new();
    for pair in &pairs {
        let text = inst.render_pair(pair);
        let ok = match (inst.parse(&text.f), inst.parse(&text.g)) {
            (Ok(f), Ok(g)) => {
                SeparatedPair::new(f.clone(), g.clone()).is_separated(&inst.part)
                    && gb.contains_poly(&f.sub(&g))
            }
            _ => false,
        };
        if ok {
            generators.push(text);
        } else {
            diag.notes.push(format!("dropped ({}, {}): failed membership re-check", text.f, text.g));
        }
    }
    diag.membership_checked = generators.len();
    diag.elapsed_ms = start.map_or(0, |t| t.elapsed().as_millis());
    Ok(ResultDocument {
        status,
        route,
        field: spec.field.describe(),
        xvars: spec.x_vars.clone(),
        yvars: spec.y_vars.clone(),
        generators,
        diagnostics: diag,
    })
}

/// A basis of the pairs of degree at most `d`, `(1, 1)` included.
pub fn oracle_basis(spec: &ProblemSpec, d: u32) -> Result<Vec<PairText>, SolveError> {
    with_field!(spec, |inst| {
        let gb = GroebnerBasis::ideal(&inst.ideal(), MonomialOrder::Grevlex);
        Ok(naive_degree_search(&gb, &inst.part, d)
            .iter()
            .map(|p| inst.render_pair(p))
            .collect())
    })
}

/// Whether `(f, g)` is a separated pair of the problem's ideal.
pub fn check_pair(spec: &ProblemSpec, f: &str, g: &str) -> Result<bool, SolveError> {
    with_field!(spec, |inst| {
        let parse = |text: &str, which: &str| {
            inst.parse(text).map_err(|e| {
                SolveError::Invalid(problem_error(None, format!("{which}: {e}")))
            })
        };
        let (f, g) = (parse(f, "f")?, parse(g, "g")?);
        let gb = GroebnerBasis::ideal(&inst.ideal(), MonomialOrder::Grevlex);
        Ok(SeparatedPair::new(f.clone(), g.clone()).is_separated(&inst.part)
            && gb.contains_poly(&f.sub(&g)))
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MergeReport {
    /// `phi(p)` for each generator, over `K[X,Y,s,t]`.
    pub merged: Vec<String>,
    /// Gröbner basis of the merged ideal over `K(X,Y)`, denominators cleared.
    pub merged_basis: Vec<String>,
    pub route: String,
    pub gcd: Option<String>,
    /// Generators of the merged algebra, each scaled to clear denominators.
    pub generators: Vec<PairText>,
}

/// The merged image of the problem and how its algebra is obtained.
pub fn merge_report(spec: &ProblemSpec) -> Result<MergeReport, SolveError> {
    use crate::enumerate::{bivar_ideal_dispatch, merged_ideal};
    use crate::poly::merge::phi_merge;
    use crate::principal::from_bivariate;
    with_field!(spec, |inst| {
        let gens = inst.ideal();
        let ibar = merged_ideal(&gens, &inst.part);
        let a = bivar_ideal_dispatch(&ibar, &inst.part, spec.exponent_cap);
        let mut why = String::new();
        if let crate::enumerate::MergedRoute::Unsupported(w) = &a.route {
            why = format!(" ({w})");
        }
        Ok(MergeReport {
            merged: gens
                .iter()
                .map(|p| inst.render(&phi_merge(p, &inst.part)))
                .collect(),
            merged_basis: ibar
                .polys()
                .iter()
                .map(|p| inst.render(&from_bivariate(p, &inst.part)))
                .collect(),
            route: format!("{}{why}", a.route.name()),
            gcd: a.gcd.as_ref().map(|g| inst.render(g)),
            generators: a
                .generators
                .iter()
                .map(|p| {
                    // F - u G with a fresh u keeps both sides under one common denominator
                    let cleared = from_bivariate(&p.f.sub(&p.g), &inst.part);
                    let mut f = Poly::zero();
                    let mut g = Poly::zero();
                    for (m, c) in cleared.terms() {
                        if m.exp(inst.part.s()) > 0 {
                            f.add_term(m.clone(), c);
                        } else {
                            g.add_term(m.clone(), &c.neg());
                        }
                    }
                    inst.render_pair(&SeparatedPair::new(f, g))
                })
                .collect(),
        })
    })
}
