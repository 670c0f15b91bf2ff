//! Executes manifest jobs.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use multiheight::bounds::{self, HeightKind, Invariants, NewtonRegion, PerronVariant};
use multiheight::elim;
use multiheight::hilbert;
use multiheight::measures::{height_inf, height_in_group};
use multiheight::nullcert::{self, UMode, DEFAULT_RETRIES};
use multiheight::poly::{parse_poly, GroupKind, Ideal, MPoly, VarSpec};
use multiheight::resultants;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::error::JobError;
use crate::fixtures;
use crate::manifest::{parse_list, parse_num, Command, InvariantsDecl, Job, Rule};
use crate::report::{Check, ErrorInfo, JobReport, JobStatus, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    SymbolicU,
    RandomU,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::SymbolicU => "symbolic-u",
            Mode::RandomU => "random-u",
        }
    }

    fn parse(text: &str) -> Result<Mode, JobError> {
        match text {
            "symbolic-u" => Ok(Mode::SymbolicU),
            "random-u" => Ok(Mode::RandomU),
            other => Err(JobError::Input(format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub seed: u64,
    pub mode: Mode,
    pub tol: f64,
    pub timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { seed: 0, mode: Mode::RandomU, tol: 1e-9, timing: true }
    }
}

/// Outputs of one job: the JSON shown in reports plus the polynomials
/// behind some of its string fields, for exact comparisons.
#[derive(Default)]
struct Outputs {
    json: Map<String, Value>,
    polys: BTreeMap<String, MPoly>,
    checks: Vec<Check>,
}

impl Outputs {
    fn put(&mut self, key: &str, v: impl Into<Value>) {
        self.json.insert(key.to_string(), v.into());
    }

    fn put_poly(&mut self, key: &str, f: &MPoly) {
        self.json.insert(key.to_string(), Value::String(f.to_string()));
        self.polys.insert(key.to_string(), f.clone());
    }

    fn put_polys(&mut self, key: &str, fs: &[MPoly]) {
        self.json.insert(key.to_string(), Value::Array(fs.iter().map(|f| Value::String(f.to_string())).collect()));
        for (i, f) in fs.iter().enumerate() {
            self.polys.insert(format!("{key}.{i}"), f.clone());
        }
    }
}

/// Runs every job (expanding `verify-examples`) and assembles the report.
pub fn run_manifest(jobs: &[Job], cfg: &RunConfig) -> Report {
    let mut reports = Vec::new();
    for job in jobs {
        if job.command == Command::VerifyExamples {
            for fx in fixtures::fixtures() {
                reports.push(run_job(&fx, cfg));
            }
        } else {
            reports.push(run_job(job, cfg));
        }
    }
    Report::new(cfg.seed, cfg.mode.as_str(), cfg.tol, reports)
}

pub fn run_job(job: &Job, cfg: &RunConfig) -> JobReport {
    let start = Instant::now();
    let seed = job.options.seed.as_deref().map(|s| parse_num::<u64>("options.seed", s)).transpose();
    let inputs = serde_json::to_value(job).unwrap_or(Value::Null);
    let mut report = JobReport {
        name: job.name.clone(),
        command: job.command.as_str().to_string(),
        note: job.note.clone(),
        status: JobStatus::Ok,
        seed: cfg.seed.to_string(),
        inputs,
        outputs: Value::Object(Map::new()),
        checks: Vec::new(),
        error: None,
        timing_ms: None,
    };
    let result = seed.and_then(|s| {
        let seed = s.unwrap_or(cfg.seed);
        report.seed = seed.to_string();
        execute(job, cfg, seed)
    });
    match result {
        Ok(mut out) => {
            let tol = job.options.tolerance.as_deref().map(|t| parse_num::<f64>("options.tolerance", t));
            match tol.transpose() {
                Ok(tol) => {
                    let tol = tol.unwrap_or(cfg.tol);
                    for e in &job.expect {
                        out.checks.push(expectation(&out, &e.path, &e.rule, tol));
                    }
                }
                Err(e) => out.checks.push(Check::new("options.tolerance", false, e.to_string())),
            }
            if out.checks.iter().any(|c| c.status == crate::report::CheckStatus::Fail) {
                report.status = JobStatus::Failed;
            }
            report.outputs = Value::Object(out.json);
            report.checks = out.checks;
        }
        Err(e) => {
            report.status = JobStatus::Error;
            report.error = Some(ErrorInfo { kind: e.kind().to_string(), message: e.to_string() });
        }
    }
    if cfg.timing {
        report.timing_ms = Some((start.elapsed().as_secs_f64() * 1e4).round() / 10.0);
    }
    report
}

fn execute(job: &Job, cfg: &RunConfig, seed: u64) -> Result<Outputs, JobError> {
    let mode = match &job.options.mode {
        Some(m) => Mode::parse(m)?,
        None => cfg.mode,
    };
    let retries = match &job.options.max_retries {
        Some(r) => parse_num::<usize>("options.max_retries", r)?,
        None => DEFAULT_RETRIES,
    };
    let tol = match &job.options.tolerance {
        Some(t) => parse_num::<f64>("options.tolerance", t)?,
        None => cfg.tol,
    };
    let umode = match mode {
        Mode::SymbolicU => UMode::Symbolic,
        Mode::RandomU => UMode::Specialized { seed },
    };
    match job.command {
        Command::Certify => certify(job, &umode, retries, tol),
        Command::CertifyStrong => certify_strong(job, &umode, retries, tol),
        Command::Implicitize => implicitize(job),
        Command::NewtonCheck => newton_check(job),
        Command::Hilbert => hilbert_job(job),
        Command::Chow => chow(job),
        Command::Resultant => resultant(job, seed),
        Command::Bounds => bounds_job(job),
        Command::VerifyExamples => Err(JobError::Input("verify-examples cannot be nested".into())),
    }
}

fn build_spec(job: &Job) -> Result<Arc<VarSpec>, JobError> {
    if job.variables.is_empty() {
        return Err(JobError::Input("no variables declared".into()));
    }
    let mut groups = Vec::new();
    for (i, v) in job.variables.iter().enumerate() {
        let kind = match v.kind.as_str() {
            "projective" => GroupKind::Projective,
            "affine" => GroupKind::Affine,
            "parameter" => GroupKind::Parameter,
            "auxiliary" => GroupKind::Auxiliary,
            other => return Err(JobError::Input(format!("variables[{i}]: unknown kind `{other}`"))),
        };
        let size = parse_num::<usize>(&format!("variables[{i}].size"), &v.size)?;
        groups.push((v.name.as_str(), size, kind));
    }
    VarSpec::build(&groups).map_err(|e| JobError::Input(e.to_string()))
}

fn parse_all(field: &str, texts: &[String], spec: &Arc<VarSpec>) -> Result<Vec<MPoly>, JobError> {
    texts
        .iter()
        .enumerate()
        .map(|(i, t)| parse_poly(t, spec).map_err(|e| JobError::Input(format!("{field}[{i}]: {e}"))))
        .collect()
}

fn variety(job: &Job, spec: &Arc<VarSpec>) -> Result<Ideal, JobError> {
    let gens = parse_all("ideal", &job.ideal, spec)?;
    Ok(Ideal::new(spec, gens)?)
}

fn group_vars(spec: &VarSpec, kind: GroupKind) -> Vec<usize> {
    spec.groups_of_kind(kind).into_iter().flat_map(|g| spec.group_range(g)).collect()
}

fn big(v: impl Into<BigInt>) -> Value {
    Value::String(v.into().to_string())
}

fn le_int(name: &str, have: u64, bound: &BigInt) -> Check {
    let pass = BigInt::from(have) <= *bound;
    Check::new(name, pass, format!("{have} <= {bound}"))
}

fn le_real(name: &str, have: f64, bound: f64, tol: f64) -> Check {
    let pass = have <= bound + tol * bound.abs().max(1.0);
    Check::new(name, pass, format!("{have:.12} <= {bound:.12}"))
}

/// Invariants of `(V, f)` as the weak and strong bounds read them.
struct Derived {
    inv: Invariants,
    params: Vec<usize>,
    h_v_known: bool,
    h_v_t_known: bool,
}

fn derive(job: &Job, v: &Ideal, fs: &[MPoly]) -> Result<Derived, JobError> {
    let spec = v.spec();
    let xs = group_vars(spec, GroupKind::Affine);
    let params = spec.groups_of_kind(GroupKind::Parameter);
    let r = nullcert::affine_dimension(v)?.ok_or(nullcert::NullError::EmptyVariety)?;
    let d: Vec<u64> = fs.iter().map(|f| f.degree_in_vars(&xs).unwrap_or(0) as u64).collect();
    let delta: Vec<Vec<u64>> = params
        .iter()
        .map(|&g| fs.iter().map(|f| f.group_degree(g).unwrap_or(0) as u64).collect())
        .collect();
    let h: Vec<f64> = if params.is_empty() {
        fs.iter().map(height_inf).collect::<Result<_, _>>()?
    } else {
        vec![0.0; fs.len()]
    };
    let (deg_v, h_v_t, h_v_t_known) = if v.gens().is_empty() {
        (1, vec![0; params.len()], true)
    } else {
        let aff = hilbert::affine_invariants(v)?;
        let deg = aff.degree.to_u64().ok_or_else(|| JobError::compute("hilbert", "degree too large"))?;
        match aff.ff_height {
            Some(h) if params.len() == 1 => (deg, vec![h.to_u64().unwrap_or(u64::MAX)], true),
            _ => (deg, vec![0; params.len()], params.is_empty()),
        }
    };
    let (h_v, h_v_known) = match (&job.options.height_v, v.gens().is_empty()) {
        (Some(t), _) => (parse_num::<f64>("options.height_v", t)?, true),
        (None, true) => (0.0, true),
        (None, false) => (0.0, false),
    };
    let inv = Invariants {
        n: xs.len(),
        r,
        d,
        h,
        delta,
        supp: fs.iter().map(|f| f.nterms() as u64).collect(),
        p: params.iter().map(|&g| spec.group(g).size).collect(),
        deg_v,
        h_v,
        h_v_t,
        d0: 1,
        h0: 0.0,
        h0_t: 0,
    };
    Ok(Derived { inv, params, h_v_known, h_v_t_known })
}

fn certify(job: &Job, mode: &UMode, retries: usize, tol: f64) -> Result<Outputs, JobError> {
    let spec = build_spec(job)?;
    let v = variety(job, &spec)?;
    let fs = parse_all("polys", &job.polys, &spec)?;
    let cert = nullcert::certify(&v, &fs, mode, retries)?;
    let m = nullcert::measure(&cert)?;
    let mut out = Outputs::default();
    out.put_poly("alpha", &cert.alpha);
    out.put_polys("gs", &cert.gs);
    out.put_poly("minimal_polynomial", &cert.e);
    out.put("delta", big(cert.delta));
    out.put("verified", cert.verified);
    out.put("attempts", big(cert.attempts as u64));
    if let Some(u) = &cert.u_values {
        out.put("u_values", json!(u.iter().map(|row| row.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>()));
    }
    out.put("deg_x_gf", json!(m.deg_x_gf.iter().map(|&d| d.to_string()).collect::<Vec<_>>()));
    out.put("deg_t_alpha", json!(m.deg_t_alpha.iter().map(|&d| d.to_string()).collect::<Vec<_>>()));
    out.put("h_alpha", m.h_alpha);
    out.checks.push(Check::new("identity verified", cert.verified, "alpha = sum g_i f_i modulo I(V)"));

    let dv = derive(job, &v, &fs)?;
    let inv = &dv.inv;
    let s = fs.len();
    if s > inv.r + 1 {
        out.checks.push(Check::skipped("weak bounds", format!("s = {s} > r+1 = {}", inv.r + 1)));
    } else if dv.params.is_empty() {
        if dv.h_v_known {
            let b = bounds::weak_z(inv)?;
            out.put("bound", json!({"name": b.provenance.bound, "inputs": b.provenance.inputs, "deg": b.deg.to_string(), "ht": b.ht}));
            for (i, &d) in m.deg_x_gf.iter().enumerate() {
                out.checks.push(le_int(&format!("weak_Z deg(g{} f{})", i + 1, i + 1), d as u64, &b.deg));
            }
            out.checks.push(le_real("weak_Z h(alpha)", m.h_alpha, b.ht, tol));
            for (i, h) in m.h_gf.iter().enumerate() {
                if let Some(h) = h {
                    out.checks.push(le_real(&format!("weak_Z h(g{}) + h(f{})", i + 1, i + 1), *h, b.ht, tol));
                }
            }
        } else {
            out.checks.push(Check::skipped("weak_Z", "canonical height of V unknown: set options.height_v"));
        }
    } else if dv.h_v_t_known {
        let b = bounds::weak_ff_groups(inv)?;
        out.put(
            "bound",
            json!({"name": b.provenance.bound, "inputs": b.provenance.inputs, "deg": b.deg.to_string(),
                   "t_deg": b.t_deg.iter().map(|t| t.to_string()).collect::<Vec<_>>()}),
        );
        for (i, &d) in m.deg_x_gf.iter().enumerate() {
            out.checks.push(le_int(&format!("weak_ff deg(g{} f{})", i + 1, i + 1), d as u64, &b.deg));
        }
        for (l, t) in b.t_deg.iter().enumerate() {
            out.checks.push(le_int(&format!("weak_ff deg_t{}(alpha)", l + 1), m.deg_t_alpha[l] as u64, t));
            for (i, row) in m.deg_t_gf.iter().enumerate() {
                out.checks.push(le_int(&format!("weak_ff deg_t{}(g{} f{})", l + 1, i + 1, i + 1), row[l] as u64, t));
            }
        }
    } else {
        out.checks.push(Check::skipped("weak_ff", "height of V over several parameter groups unavailable"));
    }
    Ok(out)
}

fn certify_strong(job: &Job, mode: &UMode, retries: usize, tol: f64) -> Result<Outputs, JobError> {
    let spec = build_spec(job)?;
    let v = variety(job, &spec)?;
    let fs = parse_all("polys", &job.polys, &spec)?;
    let g_text = job.g.as_ref().ok_or_else(|| JobError::Input("certify-strong needs `g`".into()))?;
    let g = parse_poly(g_text, &spec).map_err(|e| JobError::Input(format!("g: {e}")))?;
    let cert = nullcert::strong_certify(&v, &fs, &g, mode, retries)?;
    let mut out = Outputs::default();
    out.put("mu", big(cert.mu));
    out.put_poly("alpha", &cert.alpha);
    out.put_polys("gs", &cert.gs);
    out.put("verified", cert.verified);
    out.checks.push(Check::new("identity verified", cert.verified, "alpha g^mu = sum g_i f_i modulo I(V)"));

    let mut dv = derive(job, &v, &fs)?;
    let xs = group_vars(&spec, GroupKind::Affine);
    dv.inv.d0 = g.degree_in_vars(&xs).unwrap_or(0).max(1) as u64;
    let gfs: Vec<MPoly> = cert.gs.iter().zip(&fs).map(|(a, b)| a * b).collect();
    let deg_gf: Vec<u64> = gfs.iter().map(|p| p.degree_in_vars(&xs).unwrap_or(0) as u64).collect();
    if dv.params.is_empty() {
        dv.inv.h0 = height_inf(&g)?;
        if dv.h_v_known {
            let b = bounds::strong_z(&dv.inv)?;
            out.checks.push(le_int("strong_Z mu", cert.mu as u64, &b.mu));
            for (i, &d) in deg_gf.iter().enumerate() {
                out.checks.push(le_int(&format!("strong_Z deg(g{} f{})", i + 1, i + 1), d, &b.deg));
            }
            out.checks.push(le_real("strong_Z h(alpha)", height_inf(&cert.alpha)?, b.ht, tol));
            for (i, (gi, fi)) in cert.gs.iter().zip(&fs).enumerate() {
                if !gi.is_zero() {
                    let h = height_inf(gi)? + height_inf(fi)?;
                    out.checks.push(le_real(&format!("strong_Z h(g{}) + h(f{})", i + 1, i + 1), h, b.ht, tol));
                }
            }
        } else {
            out.checks.push(Check::skipped("strong_Z", "canonical height of V unknown: set options.height_v"));
        }
    } else if dv.params.len() == 1 && dv.h_v_t_known {
        let pname = spec.group(dv.params[0]).name.clone();
        dv.inv.h0_t = height_in_group(&g, &pname)? as u64;
        let b = bounds::strong_ff(&dv.inv)?;
        out.checks.push(le_int("strong_ff mu", cert.mu as u64, &b.mu));
        for (i, &d) in deg_gf.iter().enumerate() {
            out.checks.push(le_int(&format!("strong_ff deg(g{} f{})", i + 1, i + 1), d, &b.deg));
        }
        out.checks.push(le_int("strong_ff deg_t(alpha)", height_in_group(&cert.alpha, &pname)? as u64, &b.t_deg));
        for (i, p) in gfs.iter().enumerate() {
            let t = height_in_group(p, &pname)? as u64;
            out.checks.push(le_int(&format!("strong_ff deg_t(g{} f{})", i + 1, i + 1), t, &b.t_deg));
        }
    } else {
        out.checks.push(Check::skipped("strong_ff", "needs exactly one parameter group"));
    }
    Ok(out)
}

fn region_json(reg: &NewtonRegion) -> Value {
    let hs: Vec<Value> = reg
        .halfspaces
        .iter()
        .map(|h| match &h.exact {
            Some((w, b)) => json!({
                "label": h.label,
                "w": w.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "beta": b.to_string(),
            }),
            None => json!({"label": h.label, "w": h.w, "beta": h.beta}),
        })
        .collect();
    let scalars: Map<String, Value> = reg.scalars.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
    json!({
        "name": reg.provenance.bound,
        "inputs": reg.provenance.inputs,
        "dim": reg.dim,
        "extended": reg.extended,
        "halfspaces": hs,
        "scalars": scalars,
    })
}

fn newton_outputs(out: &mut Outputs, e: &MPoly, reg: &NewtonRegion) -> Result<(), JobError> {
    out.put("region", region_json(reg));
    let check = bounds::newton_check(e, reg, reg.extended)?;
    let violations: Vec<Value> = check
        .violations
        .iter()
        .map(|v| json!({"point": v.point, "halfspace": v.halfspace, "excess": v.excess}))
        .collect();
    out.put("contained", check.contained);
    out.put("violations", Value::Array(violations));
    out.checks.push(Check::new(
        "support in region",
        check.contained,
        format!("{} violation(s)", check.violations.len()),
    ));
    let exact = reg.halfspaces.iter().all(|h| h.exact.is_some());
    if !reg.extended && exact && reg.dim <= 4 {
        let hull = bounds::hull_vertices(&bounds::newton_points(e))?;
        let rv = bounds::region_vertices(reg)?;
        out.put("hull_vertices", json!(hull.iter().map(|p| p.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>()));
        out.put("region_vertices", json!(rv.iter().map(|p| p.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>()));
        out.put("hull_equals_region", bounds::hull_equals_region(e, reg)?);
    }
    Ok(())
}

fn implicitize(job: &Job) -> Result<Outputs, JobError> {
    let spec = build_spec(job)?;
    let v = variety(job, &spec)?;
    let qs = parse_all("map", &job.map, &spec)?;
    let dv = derive(job, &v, &qs)?;
    if qs.len() != dv.inv.r + 1 {
        return Err(JobError::Input(format!("map has {} entries; the variety has dimension {}", qs.len(), dv.inv.r)));
    }
    let e = elim::implicit_equation(&v, &qs)?;
    let mut out = Outputs::default();
    out.put_poly("implicit_equation", &e);
    out.put("nterms", big(e.nterms() as u64));
    if !dv.params.is_empty() {
        if dv.h_v_t_known {
            let reg = bounds::perron_region(&dv.inv, PerronVariant::Param)?;
            newton_outputs(&mut out, &e, &reg)?;
        } else {
            out.checks.push(Check::skipped("newton region", "height of V over several parameter groups unavailable"));
        }
    } else if dv.h_v_known {
        let reg = bounds::perron_region(&dv.inv, PerronVariant::Z)?;
        newton_outputs(&mut out, &e, &reg)?;
        out.put("max_weighted_height", bounds::max_weighted_height(&e, &dv.inv.h)?);
    } else {
        out.checks.push(Check::skipped("newton region", "canonical height of V unknown: set options.height_v"));
    }
    Ok(out)
}

fn invariants_from(decl: &InvariantsDecl) -> Result<Invariants, JobError> {
    let opt_u = |f: &str, v: &Option<String>, default: u64| v.as_deref().map_or(Ok(default), |s| parse_num::<u64>(f, s));
    let opt_f = |f: &str, v: &Option<String>| v.as_deref().map_or(Ok(0.0), |s| parse_num::<f64>(f, s));
    Ok(Invariants {
        n: parse_num("invariants.n", &decl.n)?,
        r: parse_num("invariants.r", &decl.r)?,
        d: parse_list("invariants.d", &decl.d)?,
        h: parse_list("invariants.h", &decl.h)?,
        delta: decl
            .delta
            .iter()
            .enumerate()
            .map(|(l, row)| parse_list(&format!("invariants.delta[{l}]"), row))
            .collect::<Result<_, _>>()?,
        supp: parse_list("invariants.supp", &decl.supp)?,
        p: parse_list("invariants.p", &decl.p)?,
        deg_v: opt_u("invariants.deg_v", &decl.deg_v, 1)?,
        h_v: opt_f("invariants.h_v", &decl.h_v)?,
        h_v_t: parse_list("invariants.h_v_t", &decl.h_v_t)?,
        d0: opt_u("invariants.d0", &decl.d0, 1)?,
        h0: opt_f("invariants.h0", &decl.h0)?,
        h0_t: opt_u("invariants.h0_t", &decl.h0_t, 0)?,
    })
}

fn variant(job: &Job) -> Result<PerronVariant, JobError> {
    match job.options.variant.as_deref().unwrap_or("param") {
        "param" => Ok(PerronVariant::Param),
        "z" => Ok(PerronVariant::Z),
        "z-nonfinite" => Ok(PerronVariant::ZNonFinite),
        "rational-param" => Ok(PerronVariant::RationalParam),
        "rational-z" => Ok(PerronVariant::RationalZ),
        other => Err(JobError::Input(format!("unknown region variant `{other}`"))),
    }
}

fn newton_check(job: &Job) -> Result<Outputs, JobError> {
    let spec = build_spec(job)?;
    let polys = parse_all("polys", &job.polys, &spec)?;
    let [e] = polys.as_slice() else {
        return Err(JobError::Input("newton-check needs exactly one polynomial".into()));
    };
    let decl = job.invariants.as_ref().ok_or_else(|| JobError::Input("newton-check needs `invariants`".into()))?;
    let inv = invariants_from(decl)?;
    let reg = bounds::perron_region(&inv, variant(job)?)?;
    let mut out = Outputs::default();
    out.put("nterms", big(e.nterms() as u64));
    newton_outputs(&mut out, e, &reg)?;
    Ok(out)
}

fn degrees_json(m: &BTreeMap<Vec<u32>, BigInt>) -> Value {
    let map: Map<String, Value> = m
        .iter()
        .map(|(k, v)| (k.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","), big(v.clone())))
        .collect();
    Value::Object(map)
}

fn hilbert_job(job: &Job) -> Result<Outputs, JobError> {
    let spec = build_spec(job)?;
    let v = variety(job, &spec)?;
    let mut out = Outputs::default();
    if spec.groups_of_kind(GroupKind::Parameter).is_empty() {
        let data = hilbert::hilbert_fit(&v)?;
        out.put("dimension", data.dimension.map(|d| big(d as u64)).unwrap_or(Value::Null));
        out.put("mixed_degrees", degrees_json(&data.mixed_degrees));
    } else {
        let model = hilbert::standard_model(&v)?;
        let data = hilbert::hilbert_fit(&model)?;
        out.put("dimension", data.dimension.map(|d| big(d.saturating_sub(1) as u64)).unwrap_or(Value::Null));
        out.put("standard_model_mixed_degrees", degrees_json(&data.mixed_degrees));
        out.put("ff_height", big(hilbert::ff_height(&v)?));
    }
    Ok(out)
}

fn chow(job: &Job) -> Result<Outputs, JobError> {
    let spec = build_spec(job)?;
    let v = variety(job, &spec)?;
    let r: usize = match &job.options.r {
        Some(t) => parse_num("options.r", t)?,
        None => hilbert::hilbert_fit(&v)?.dimension.ok_or(hilbert::HilbertError::NoProjectiveGroup)?,
    };
    let f = elim::chow_form(&v, r)?;
    let mut out = Outputs::default();
    out.put_poly("chow_form", &resultants::normalize(&f));
    out.put("nterms", big(f.nterms() as u64));
    for g in f.spec().groups_of_kind(GroupKind::Parameter) {
        let name = &f.spec().group(g).name;
        out.put(&format!("deg_{name}"), big(f.group_degree(g).unwrap_or(0) as u64));
    }
    Ok(out)
}

fn resultant(job: &Job, seed: u64) -> Result<Outputs, JobError> {
    let spec = build_spec(job)?;
    let mut out = Outputs::default();
    if !job.polys.is_empty() {
        let fs = parse_all("polys", &job.polys, &spec)?;
        let res = resultants::macaulay_resultant(&fs, seed)?;
        out.put_poly("resultant", &res);
        out.put("nterms", big(res.nterms() as u64));
        return Ok(out);
    }
    let v = variety(job, &spec)?;
    let index = job.options.index.as_ref().ok_or_else(|| JobError::Input("resultant needs `polys` or options.index".into()))?;
    let parts: Vec<String> = index.split(',').map(|s| s.trim().to_string()).collect();
    let c: Vec<usize> = parse_list("options.index", &parts)?;
    let data = resultants::eliminant_with_multiplicity(&v, &c, seed)?;
    out.put_poly("eliminant", &resultants::normalize(&data.elim));
    out.put("nu", big(data.nu));
    out.put("predicted_degrees", json!(data.predicted_degrees.iter().map(|d| d.to_string()).collect::<Vec<_>>()));
    Ok(out)
}

fn bounds_job(job: &Job) -> Result<Outputs, JobError> {
    let decl = job.invariants.as_ref().ok_or_else(|| JobError::Input("bounds needs `invariants`".into()))?;
    let inv = invariants_from(decl)?;
    let mut out = Outputs::default();
    let err = |e: bounds::BoundError| json!({"error": e.to_string()});
    out.put(
        "weak_Z",
        bounds::weak_z(&inv).map_or_else(err, |b| json!({"deg": b.deg.to_string(), "ht": b.ht, "inputs": b.provenance.inputs})),
    );
    out.put(
        "weak_Z_groups",
        bounds::weak_z_groups(&inv).map_or_else(err, |b| {
            json!({"deg": b.deg.to_string(), "t_deg": b.t_deg.iter().map(|t| t.to_string()).collect::<Vec<_>>(), "ht": b.ht})
        }),
    );
    out.put(
        "strong_Z",
        bounds::strong_z(&inv).map_or_else(err, |b| json!({"mu": b.mu.to_string(), "deg": b.deg.to_string(), "ht": b.ht})),
    );
    out.put(
        "weak_ff",
        bounds::weak_ff_groups(&inv).map_or_else(err, |b| {
            json!({"deg": b.deg.to_string(), "t_deg": b.t_deg.iter().map(|t| t.to_string()).collect::<Vec<_>>()})
        }),
    );
    out.put(
        "strong_ff",
        bounds::strong_ff(&inv).map_or_else(err, |b| {
            json!({"mu": b.mu.to_string(), "deg": b.deg.to_string(), "t_deg": b.t_deg.to_string()})
        }),
    );
    out.put(
        "mixed_S_Z",
        bounds::mixed_s(&inv, HeightKind::Z).map_or_else(err, |b| json!({"deg": b.deg.to_string(), "ht": b.ht})),
    );
    out.put(
        "mixed_S_ff",
        bounds::mixed_s(&inv, HeightKind::Ff)
            .map_or_else(err, |b| json!({"deg": b.deg.to_string(), "t_deg": b.t_deg.map(|t| t.to_string())})),
    );
    if job.options.variant.is_some() {
        out.put("region", region_json(&bounds::perron_region(&inv, variant(job)?)?));
    }
    Ok(out)
}

fn lookup<'a>(root: &'a Map<String, Value>, path: &str) -> Option<&'a Value> {
    let mut parts = path.split('.');
    let mut cur = root.get(parts.next()?)?;
    for p in parts {
        cur = match cur {
            Value::Object(m) => m.get(p)?,
            Value::Array(a) => a.get(p.parse::<usize>().ok()?)?,
            _ => return None,
        };
    }
    Some(cur)
}

fn as_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn as_number(v: &Value) -> Option<f64> {
    match v {
        Value::Number(n) => n.as_f64(),
        Value::String(s) => s.parse::<f64>().ok(),
        _ => None,
    }
}

fn expectation(out: &Outputs, path: &str, rule: &Rule, tol: f64) -> Check {
    let name = format!("expect {path}");
    let Some(value) = lookup(&out.json, path) else {
        return Check::new(name, false, "no such output");
    };
    let have = as_text(value);
    match rule {
        Rule::Equals(want) | Rule::UpToSign(want) => {
            let signed = matches!(rule, Rule::UpToSign(_));
            if let Some(f) = out.polys.get(path) {
                return match parse_poly(want, f.spec()) {
                    Ok(w) => {
                        let pass = *f == w || (signed && *f == -&w);
                        let how = if signed { "up to sign" } else { "exactly" };
                        Check::new(name, pass, format!("{have} vs {want} ({how})"))
                    }
                    Err(e) => Check::new(name, false, format!("expected value does not parse: {e}")),
                };
            }
            Check::new(name, have == *want, format!("{have} vs {want}"))
        }
        Rule::Approx(want) | Rule::AtLeast(want) | Rule::AtMost(want) => {
            let (Some(x), Ok(w)) = (as_number(value), want.parse::<f64>()) else {
                return Check::new(name, false, format!("not numeric: {have} vs {want}"));
            };
            let slack = tol * w.abs().max(1.0);
            let (pass, op) = match rule {
                Rule::Approx(_) => ((x - w).abs() <= slack, "~"),
                Rule::AtLeast(_) => (x >= w - slack, ">="),
                _ => (x <= w + slack, "<="),
            };
            Check::new(name, pass, format!("{x} {op} {w}"))
        }
    }
}
