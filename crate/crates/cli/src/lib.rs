//! Command dispatch for the `ordercone` binary.
//!
//! [`run`] parses arguments, loads the cone, runs one command and returns the
//! rendered report with its exit code: 0 success, 1 domain error, 2 theorem
//! violation, 3 parse error.

pub mod input;
pub mod report;

use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ordercone::lab::random_space;
use ordercone::space::Method;
use ordercone::{Band, BooleanAlgebraReport, Error, OrderedSpace, RatVec};
use serde_json::{json, Value};

use crate::input::{load_spec, parse_pairs, parse_set, parse_vector, InputError};
use crate::report::{Check, ErrorPayload, Report, SpaceSummary, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Oracle,
    Fast,
}

#[derive(Debug, Parser)]
#[command(name = "ordercone", version, about = "Exact order theory of polyhedral cones")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Cone specification file, or a built-in name such as fourray.json;
    /// reads standard input when omitted.
    pub spec: Option<String>,
    /// Same as the positional argument.
    #[arg(long, conflicts_with = "spec")]
    pub input: Option<String>,
}

impl InputArgs {
    fn path(&self) -> Option<&str> {
        self.spec.as_deref().or(self.input.as_deref())
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that the generators span a pointed, generating cone.
    Validate(InputArgs),
    /// Facet functionals and extreme rays.
    Facets(InputArgs),
    /// Every band, with directedness and projection flags.
    Bands(InputArgs),
    /// Every band projection and the number of minimal ones.
    Projections(InputArgs),
    /// The Boolean algebra of band projections with its tables.
    BooleanAlgebra(InputArgs),
    /// Split into minimal projection bands.
    Decompose(InputArgs),
    /// Decide whether the space is a vector lattice.
    IsLattice(InputArgs),
    /// Decide whether two vectors are disjoint.
    Disjoint {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, value_enum, default_value = "oracle")]
        method: MethodArg,
    },
    /// Disjoint complement of a set, e.g. --set "1,0,1;0,1,1".
    Complement {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Smallest band containing a set.
    Closure {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Greatest lower bound of a finite set.
    Inf {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Least upper bound of a finite set.
    Sup {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Disjoint, symmetric-interval-disjoint and D-disjoint per pair,
    /// e.g. --pairs "1,0,1:0,1,1;1,1,2:-1,-1,2".
    Hierarchy {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, allow_hyphen_values = true)]
        pairs: String,
    },
    /// Is there a non-zero positive vector below every positive upper bound of b?
    PervasiveAt {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// A D-disjoint pair that is not disjoint.
    Witness(InputArgs),
    /// A seeded random space.
    Random {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        rays: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate(_) => "validate",
            Command::Facets(_) => "facets",
            Command::Bands(_) => "bands",
            Command::Projections(_) => "projections",
            Command::BooleanAlgebra(_) => "boolean-algebra",
            Command::Decompose(_) => "decompose",
            Command::IsLattice(_) => "is-lattice",
            Command::Disjoint { .. } => "disjoint",
            Command::Complement { .. } => "complement",
            Command::Closure { .. } => "closure",
            Command::Inf { .. } => "inf",
            Command::Sup { .. } => "sup",
            Command::Hierarchy { .. } => "hierarchy",
            Command::PervasiveAt { .. } => "pervasive-at",
            Command::Witness(_) => "witness",
            Command::Random { .. } => "random",
        }
    }

    fn input(&self) -> Option<&InputArgs> {
        match self {
            Command::Validate(i)
            | Command::Facets(i)
            | Command::Bands(i)
            | Command::Projections(i)
            | Command::BooleanAlgebra(i)
            | Command::Decompose(i)
            | Command::IsLattice(i)
            | Command::Witness(i) => Some(i),
            Command::Disjoint { input, .. }
            | Command::Complement { input, .. }
            | Command::Closure { input, .. }
            | Command::Inf { input, .. }
            | Command::Sup { input, .. }
            | Command::Hierarchy { input, .. }
            | Command::PervasiveAt { input, .. } => Some(input),
            Command::Random { .. } => None,
        }
    }
}

/// Rendered output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

enum Failure {
    Parse(InputError),
    Domain(Error),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Parse(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

#[derive(Default)]
struct Output {
    space: Option<SpaceSummary>,
    result: Value,
    checks: Vec<Check>,
}

impl Output {
    fn check(&mut self, name: &str, passed: bool) {
        self.checks.push(Check { name: name.to_string(), passed });
    }
}

/// Applies `ORDERCONE_THREADS` (default 1) to the global worker pool.
pub fn configure_threads() {
    let threads =
        std::env::var("ORDERCONE_THREADS").ok().and_then(|v| v.parse::<usize>().ok()).filter(|&n| n > 0).unwrap_or(1);
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
}

/// Runs one command line (including the program name).
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { stdout: text, stderr: String::new(), code: 0 }
                }
                _ => Outcome { stdout: String::new(), stderr: text, code: Status::ParseError.exit_code() },
            };
        }
    };
    let mut out = Output::default();
    let outcome = dispatch(&cli.command, stdin, &mut out);
    let (status, error) = match outcome {
        Ok(()) if out.checks.iter().all(|c| c.passed) => (Status::Ok, None),
        Ok(()) => (
            Status::TheoremViolation,
            Some(ErrorPayload { kind: "CheckFailed".into(), message: "a theorem check failed".into() }),
        ),
        Err(Failure::Parse(e)) => {
            (Status::ParseError, Some(ErrorPayload { kind: "ParseError".into(), message: e.to_string() }))
        }
        Err(Failure::Domain(e)) => {
            let status = if e.is_theorem_violation() { Status::TheoremViolation } else { Status::DomainError };
            (status, Some(ErrorPayload { kind: e.kind().into(), message: e.to_string() }))
        }
    };
    let report = Report {
        command: cli.command.name().to_string(),
        space: out.space,
        result: out.result,
        checks: out.checks,
        status,
        exit_code: status.exit_code(),
        error,
    };
    let stdout = match cli.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    Outcome { stdout, stderr: String::new(), code: report.exit_code }
}

fn strings(vs: &[RatVec]) -> Value {
    Value::from(vs.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn band_json(b: &Band) -> Value {
    json!({
        "id": b.id,
        "dim": b.dim(),
        "basis": strings(b.basis.rows()),
        "support": b.support,
        "directed": b.directed,
        "projection_band": b.is_projection_band,
    })
}

fn pair_json(pair: &Option<(RatVec, RatVec)>) -> Value {
    match pair {
        Some((x, y)) => json!([x.to_string(), y.to_string()]),
        None => Value::Null,
    }
}

fn algebra_json(space: &OrderedSpace, report: &BooleanAlgebraReport, with_tables: bool) -> Result<Value, Failure> {
    let lattice = space.enumerate_bands()?;
    let id_of = |b: &Band| lattice.find(b).and_then(|x| x.id);
    let projections: Vec<Value> = report
        .projections
        .iter()
        .enumerate()
        .map(|(i, p)| {
            json!({
                "index": i,
                "rank": p.rank(),
                "matrix": p.matrix.to_string(),
                "range_band": id_of(&p.range),
                "kernel_band": id_of(&p.kernel),
                "positive": p.positivity.projection_positive,
                "complement_positive": p.positivity.complement_positive,
                "minimal_parts": report.atoms_of[i],
            })
        })
        .collect();
    let mut v = json!({
        "count": report.len(),
        "m": report.m,
        "rank_one": report.rank_one,
        "is_lattice": report.is_lattice,
        "minimal": report.minimal,
        "projections": projections,
    });
    if with_tables {
        let l = &report.laws;
        v["meet_table"] = json!(report.meet_table);
        v["join_table"] = json!(report.join_table);
        v["complement_map"] = json!(report.complement_map);
        v["laws"] = json!({
            "commutative": l.commutative,
            "associative": l.associative,
            "absorptive": l.absorptive,
            "distributive": l.distributive,
            "complemented": l.complemented,
            "bounded": l.bounded,
            "pairwise_commuting": l.pairwise_commuting,
        });
    }
    Ok(v)
}

fn algebra_checks(out: &mut Output, space: &OrderedSpace, report: &BooleanAlgebraReport) {
    out.check("number of band projections is 2^m", report.len() == 1 << report.m);
    out.check("m <= dim", report.m <= space.dim());
    out.check("Boolean algebra laws", report.laws.all());
    out.check("rank-one band projections <= dim", report.rank_one <= space.dim());
}

fn dispatch(command: &Command, stdin: &mut dyn Read, out: &mut Output) -> Result<(), Failure> {
    if let Command::Random { dim, rays, seed } = command {
        let space: OrderedSpace = random_space(*dim, *rays, *seed)?;
        out.space = Some(SpaceSummary::new(Some(format!("random-{dim}-{rays}-{seed}")), &space));
        out.result = json!({
            "seed": seed,
            "spec": {
                "dim": dim,
                "generators": space
                    .cone()
                    .generators()
                    .iter()
                    .map(|g| g.iter().map(ToString::to_string).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            },
        });
        return Ok(());
    }
    let spec = load_spec(command.input().and_then(InputArgs::path), stdin)?;
    let space = spec.space()?;
    out.space = Some(SpaceSummary::new(spec.name.clone(), &space));
    let dim = space.dim();
    match command {
        Command::Validate(_) => {
            let v = space.validation();
            out.result = json!({
                "valid": v.preriesz,
                "pointed": v.pointed,
                "generating": v.generating,
                "preriesz": v.preriesz,
            });
            out.check(
                "every generator satisfies every facet",
                spec.generators.iter().all(|g| space.contains_positive(g)),
            );
        }
        Command::Facets(_) => {
            out.result = json!({
                "facets": strings(space.facets()),
                "extreme_rays": strings(space.atoms()),
                "generators": strings(space.cone().generators()),
            });
            out.check(
                "extreme rays have active facet rank dim - 1",
                space.atoms().iter().all(|a| space.cone().active_rank(a) + 1 == dim),
            );
        }
        Command::Bands(_) => {
            let lattice = space.enumerate_bands()?;
            out.result = json!({
                "count": lattice.len(),
                "bands": lattice.iter().map(band_json).collect::<Vec<_>>(),
            });
            let mut stable = true;
            let mut closed = true;
            for b in lattice.iter() {
                let perp = space.band_complement(b)?;
                stable &= space.band_complement(&perp)?.same_band(b);
                closed &= lattice.find(&perp).is_some();
            }
            out.check("every band equals its double complement", stable);
            out.check("every complement is an enumerated band", closed);
        }
        Command::Projections(_) | Command::BooleanAlgebra(_) => {
            let report = space.enumerate_band_projections()?;
            out.result = algebra_json(&space, &report, matches!(command, Command::BooleanAlgebra(_)))?;
            algebra_checks(out, &space, &report);
        }
        Command::Decompose(_) => {
            let d = space.decompose()?;
            let factors: Vec<Value> = d
                .factors
                .iter()
                .map(|f| {
                    json!({
                        "dim": f.space.dim(),
                        "basis": strings(f.band.basis.rows()),
                        "facets": strings(f.space.facets()),
                        "extreme_rays": strings(f.space.atoms()),
                        "projection": f.projection.matrix.to_string(),
                    })
                })
                .collect();
            out.result = json!({
                "factor_count": d.factors.len(),
                "factors": factors,
                "j": d.j.to_string(),
                "j_inverse": d.j_inverse.to_string(),
            });
            out.check("J maps the product cone into the cone", d.forward_positive);
            out.check("J^-1 maps the cone into the product cone", d.backward_positive);
            out.check("factors have only trivial band projections", d.factors_irreducible);
        }
        Command::IsLattice(_) => {
            let v = space.is_vector_lattice()?;
            out.result = json!({
                "is_lattice": v.is_lattice,
                "routes": {
                    "simplicial": v.routes.simplicial,
                    "rank1_census": v.routes.rank1_census,
                    "m_equals_n": v.routes.m_equals_n,
                    "extreme_ray_pairwise_disjoint": v.routes.extreme_ray_pairwise_disjoint,
                },
                "witness": pair_json(&v.witness),
            });
            if let Some((x, y)) = &v.witness {
                out.check(
                    "witness is symmetric-interval-disjoint and not disjoint",
                    space.is_symmetric_interval_disjoint(x, y)? && !space.is_disjoint(x, y, Method::Oracle)?.disjoint,
                );
            }
        }
        Command::Disjoint { x, y, method, .. } => {
            let x = parse_vector(x, dim)?;
            let y = parse_vector(y, dim)?;
            let (chosen, other) = match method {
                MethodArg::Oracle => (Method::Oracle, Method::Fast),
                MethodArg::Fast => (Method::Fast, Method::Oracle),
            };
            let verdict = space.is_disjoint(&x, &y, chosen)?;
            let cross = space.is_disjoint(&x, &y, other)?;
            out.result = json!({
                "disjoint": verdict.disjoint,
                "witness": verdict.witness.as_ref().map(ToString::to_string),
                "method": match chosen { Method::Oracle => "oracle", Method::Fast => "fast" },
            });
            out.check("oracle and fast methods agree", verdict.disjoint == cross.disjoint);
            if let Some(w) = &verdict.witness {
                if space.contains_positive(&x) && space.contains_positive(&y) {
                    out.check(
                        "witness is a lower bound of both and not <= 0",
                        space.leq(w, &x) && space.leq(w, &y) && !space.contains_positive(&w.neg()),
                    );
                }
            }
        }
        Command::Complement { set, .. } | Command::Closure { set, .. } => {
            let set = parse_set(set, dim)?;
            let band = if matches!(command, Command::Complement { .. }) {
                space.disjoint_complement(&set)?
            } else {
                space.band_closure(&set)?
            };
            let lattice = space.enumerate_bands()?;
            let band = lattice.find(&band).cloned().unwrap_or(band);
            out.check("result is an enumerated band", band.id.is_some());
            out.result = band_json(&band);
        }
        Command::Inf { set, .. } | Command::Sup { set, .. } => {
            let set = parse_set(set, dim)?;
            let lower = matches!(command, Command::Inf { .. });
            let value = if lower { space.infimum(&set)? } else { space.supremum(&set)? };
            if let Some(g) = &value {
                let bounded = set.iter().all(|a| if lower { space.leq(g, a) } else { space.leq(a, g) });
                out.check(if lower { "value is a lower bound" } else { "value is an upper bound" }, bounded);
            }
            out.result = json!({
                "exists": value.is_some(),
                "value": value.as_ref().map(ToString::to_string),
            });
        }
        Command::Hierarchy { pairs, .. } => {
            let pairs = parse_pairs(pairs, dim)?;
            let rows = space.hierarchy_report(&pairs)?;
            out.result = json!({
                "rows": rows
                    .iter()
                    .map(|r| json!({
                        "x": r.x.to_string(),
                        "y": r.y.to_string(),
                        "disjoint": r.disjoint,
                        "symmetric_interval_disjoint": r.symmetric_interval_disjoint,
                        "d_disjoint": r.d_disjoint,
                        "separation": r.separation(),
                    }))
                    .collect::<Vec<_>>(),
            });
            out.check("disjoint => symmetric-interval-disjoint => D-disjoint", true);
        }
        Command::PervasiveAt { b, .. } => {
            let b = parse_vector(b, dim)?;
            let probe = space.pervasive_at(&b)?;
            if let Some(w) = &probe.witness {
                let below = space.facets().iter().zip(&probe.bounds).all(|(f, m)| f.dot(w) <= *m);
                out.check(
                    "witness is non-zero, positive and below the bounds",
                    !w.is_zero() && space.contains_positive(w) && below,
                );
            }
            out.result = json!({
                "pervasive": probe.pervasive,
                "witness": probe.witness.as_ref().map(ToString::to_string),
                "bounds": probe.bounds.iter().map(ToString::to_string).collect::<Vec<_>>(),
            });
        }
        Command::Witness(_) => {
            let w = space.weakly_pervasive_witness()?;
            if let Some((x, y)) = &w {
                out.check(
                    "witness is D-disjoint and not disjoint",
                    space.is_d_disjoint(x, y)? && !space.is_disjoint(x, y, Method::Oracle)?.disjoint,
                );
            }
            out.result = json!({ "witness": pair_json(&w) });
        }
        Command::Random { .. } => unreachable!("handled above"),
    }
    Ok(())
}
