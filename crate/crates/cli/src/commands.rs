use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use squarefold::cones::{cone_status, reider_certify, reider_certify_adjoint, ReiderMode};
use squarefold::hyperbolicity::{
    cartesian_square_hyperbolic, correspondence_curve_data, projection_hyperbolic, symmetric_power_hyperbolic,
    symmetric_square_hyperbolic,
};
use squarefold::invariants::{cartesian_profile, consistency_audit, symmetric_profile};
use squarefold::lattice::{chern_data, named_correspondences};
use squarefold::rational::{parse_q, Q};
use squarefold::search::{
    delta_lower_bound, gs_lower_bound, min_degree_cartesian, min_degree_symmetric, nonspecial_p4_exclusion,
    p4_search, DeltaMode,
};
use squarefold::{
    CartesianClass, CurveProfile, Error, Exec, SurfaceClass, SurfaceKind, SymmetricClass, TriState,
};

use crate::envelope::{Format, ReportEnvelope, Status};
use crate::golden;

const DEFAULT_REIDER_CAP: u32 = 64;

#[derive(Parser, Debug)]
#[command(name = "squarefold", version)]
#[command(about = "Invariants, positivity and degree bounds for cartesian and symmetric squares of curves")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,

    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Run enumerations on a single thread
    #[arg(long, global = true)]
    pub sequential: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Invariants of a generic projection to P³
    Invariants(ClassArgs),
    /// Positivity verdicts for a divisor class
    Cone(ClassArgs),
    /// Search for Reider obstruction curves
    Reider(ReiderArgs),
    /// Degree and genus bounds for embeddings and projections
    #[command(subcommand)]
    Search(SearchCommand),
    /// Hyperbolicity verdicts
    #[command(subcommand)]
    Hyperbolic(HyperbolicCommand),
    /// Named correspondences and involution quotient curves
    Correspondences(CorrespondenceArgs),
    /// Replay the reference values
    VerifyPaper,
}

fn parse_rational(s: &str) -> Result<Q, String> {
    parse_q(s)
}

#[derive(Args, Debug, Clone)]
pub struct ClassArgs {
    #[arg(long)]
    pub surface: SurfaceKind,
    #[arg(long)]
    pub genus: u32,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub a: Q,
    /// Second bidegree coordinate (cartesian only, defaults to a)
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub a2: Option<Q>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub k: Q,
}

impl ClassArgs {
    fn class(&self) -> squarefold::Result<SurfaceClass> {
        match self.surface {
            SurfaceKind::Cartesian => Ok(SurfaceClass::Cartesian(CartesianClass::new(
                self.genus,
                self.a,
                self.a2.unwrap_or(self.a),
                self.k,
            ))),
            SurfaceKind::Symmetric => {
                if self.a2.is_some_and(|a2| a2 != self.a) {
                    return Err(Error::InvalidProfile("--a2 only applies to cartesian classes".into()));
                }
                Ok(SurfaceClass::Symmetric(SymmetricClass::new(self.genus, self.a, self.k)))
            }
        }
    }

    fn inputs(&self) -> BTreeMap<String, Value> {
        let mut m = BTreeMap::new();
        m.insert("surface".into(), json!(self.surface.to_string()));
        m.insert("genus".into(), json!(self.genus));
        m.insert("a".into(), json!(self.a.to_string()));
        if self.surface == SurfaceKind::Cartesian {
            m.insert("a2".into(), json!(self.a2.unwrap_or(self.a).to_string()));
        }
        m.insert("k".into(), json!(self.k.to_string()));
        m
    }
}

#[derive(Args, Debug, Clone)]
pub struct ProfileArgs {
    /// The curve is arbitrary rather than of general moduli
    #[arg(long)]
    pub arbitrary: bool,
    #[arg(long)]
    pub hyperelliptic: Option<TriState>,
    #[arg(long)]
    pub bielliptic: Option<TriState>,
    /// Known lower bound for the minimal degree of an embedding of the curve
    #[arg(long)]
    pub delta_override: Option<u32>,
}

impl ProfileArgs {
    fn profile(&self, genus: u32) -> squarefold::Result<CurveProfile> {
        CurveProfile::new(
            genus,
            !self.arbitrary,
            self.hyperelliptic.unwrap_or(TriState::Unknown),
            self.bielliptic.unwrap_or(TriState::Unknown),
            self.delta_override,
        )
    }
}

#[derive(Args, Debug, Clone)]
pub struct ReiderArgs {
    #[command(flatten)]
    pub class: ClassArgs,
    #[arg(long, default_value = "va")]
    pub mode: ReiderMode,
    /// Treat the class as L itself instead of H = K + L
    #[arg(long)]
    pub as_l: bool,
    /// Bound on the coordinate sum of candidate curves
    #[arg(long, env = "SQUAREFOLD_CAP", value_parser = clap::value_parser!(u32).range(1..))]
    pub cap: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum SearchCommand {
    /// Lower bound for the degree of an embedding
    MinDegree {
        #[arg(long)]
        surface: SurfaceKind,
        #[arg(long)]
        genus: u32,
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long, default_value = "conservative")]
        delta_mode: DeltaMode,
        /// Largest a enumerated per candidate degree (symmetric only)
        #[arg(long, env = "SQUAREFOLD_CAP", value_parser = clap::value_parser!(u32).range(1..))]
        cap: Option<u32>,
    },
    /// Classes on C×C meeting the P⁴ double-point condition
    P4 {
        #[arg(long)]
        genus: u32,
        #[arg(long, default_value_t = 600)]
        a_max: u32,
        #[arg(long)]
        diagonal_only: bool,
    },
    /// Lower bound for the geometric genus of the double curve
    GsBound {
        #[arg(long)]
        surface: SurfaceKind,
        #[arg(long)]
        genus: u32,
    },
    /// Lower bound for the minimal degree of the curve itself
    Delta {
        #[arg(long)]
        genus: u32,
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long, default_value = "conservative")]
        delta_mode: DeltaMode,
    },
    /// Non-special embeddings of C×C in P⁴
    P4Exclusion {
        #[arg(long)]
        genus: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum HyperbolicCommand {
    /// Generic projection to P³ of an embedded square
    Projection {
        #[command(flatten)]
        class: ClassArgs,
        #[command(flatten)]
        profile: ProfileArgs,
    },
    SymmetricSquare {
        #[arg(long)]
        genus: u32,
        #[command(flatten)]
        profile: ProfileArgs,
    },
    SymmetricPower {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        arbitrary: bool,
    },
    CartesianSquare {
        #[arg(long)]
        genus: u32,
    },
}

#[derive(Args, Debug, Clone)]
pub struct CorrespondenceArgs {
    #[arg(long)]
    pub genus: u32,
    /// Also list the correspondence of a plane nodal model of this degree
    #[arg(long)]
    pub plane_degree: Option<u32>,
    /// Genus of the quotient by an involution
    #[arg(long)]
    pub quotient_genus: Option<u32>,
}

/// Result of a command: an envelope to print (if any) and the exit code.
pub struct Outcome {
    pub envelope: Option<ReportEnvelope>,
    pub exit: u8,
    pub diagnostic: Option<String>,
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn inputs(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn profile_inputs(m: &mut BTreeMap<String, Value>, p: &CurveProfile) {
    m.insert("profile".into(), to_value(p));
}

pub fn run(cli: &Cli) -> Outcome {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    match dispatch(&cli.command, exec) {
        Ok(env) => {
            let exit = match env.status {
                Status::Ok => crate::EXIT_OK,
                Status::Mismatch => crate::EXIT_MISMATCH,
                Status::Inconclusive => crate::EXIT_INCONCLUSIVE,
            };
            Outcome { envelope: Some(env), exit, diagnostic: None }
        }
        Err((command, inputs, Error::Inconclusive(info))) => {
            let mut env = ReportEnvelope::new(
                command,
                inputs,
                json!({ "reason": info.reason, "partial": to_value(&info.partial) }),
                Vec::new(),
            );
            env.status = Status::Inconclusive;
            Outcome { envelope: Some(env), exit: crate::EXIT_INCONCLUSIVE, diagnostic: Some(info.reason.clone()) }
        }
        Err((_, _, e)) => Outcome { envelope: None, exit: crate::exit_code(&e), diagnostic: Some(e.to_string()) },
    }
}

type Failure = (&'static str, BTreeMap<String, Value>, Error);

fn dispatch(command: &Command, exec: Exec) -> Result<ReportEnvelope, Failure> {
    match command {
        Command::Invariants(args) => {
            let name = "invariants";
            let ins = args.inputs();
            invariants(args).map_err(|e| (name, ins, e))
        }
        Command::Cone(args) => {
            let ins = args.inputs();
            let run = || -> squarefold::Result<ReportEnvelope> {
                let verdicts = cone_status(&args.class()?)?;
                let citations = verdicts.0.iter().map(|v| v.provenance.clone()).collect();
                Ok(ReportEnvelope::new("cone", args.inputs(), to_value(&verdicts), citations))
            };
            run().map_err(|e| ("cone", ins, e))
        }
        Command::Reider(args) => {
            let cap = args.cap.unwrap_or(DEFAULT_REIDER_CAP);
            let mut ins = args.class.inputs();
            ins.insert("mode".into(), to_value(&args.mode));
            ins.insert("as_l".into(), json!(args.as_l));
            ins.insert("cap".into(), json!(cap));
            let run = || -> squarefold::Result<ReportEnvelope> {
                let class = args.class.class()?;
                let report = if args.as_l {
                    reider_certify(&class, args.mode, cap, exec)?
                } else {
                    reider_certify_adjoint(&class, args.mode, cap, exec)?
                };
                let cite = "Reider: K + L globally generated (L² ≥ 5) or very ample (L² ≥ 10) unless an obstruction curve exists";
                Ok(ReportEnvelope::new("reider", ins.clone(), to_value(&report), vec![cite.into()]))
            };
            run().map_err(|e| ("reider", ins.clone(), e))
        }
        Command::Search(s) => search(s, exec),
        Command::Hyperbolic(h) => hyperbolic(h),
        Command::Correspondences(args) => {
            let ins = inputs(&[
                ("genus", json!(args.genus)),
                ("plane_degree", json!(args.plane_degree)),
                ("quotient_genus", json!(args.quotient_genus)),
            ]);
            let run = || -> squarefold::Result<ReportEnvelope> {
                let named = named_correspondences(args.genus, args.plane_degree)?;
                let quotient = args.quotient_genus.map(|gr| correspondence_curve_data(args.genus, gr)).transpose()?;
                let mut citations = vec!["classes of named correspondences on C×C".to_string()];
                if quotient.is_some() {
                    citations.push("involution quotient: Γ² = 1 − g, Γ·Δ′ = 2 + 2g − 4g_R (Riemann–Hurwitz)".into());
                }
                Ok(ReportEnvelope::new(
                    "correspondences",
                    ins.clone(),
                    json!({ "named": to_value(&named), "quotient_curve": to_value(&quotient) }),
                    citations,
                ))
            };
            run().map_err(|e| ("correspondences", ins.clone(), e))
        }
        Command::VerifyPaper => Ok(verify_paper(&golden::cases())),
    }
}

fn invariants(args: &ClassArgs) -> squarefold::Result<ReportEnvelope> {
    let class = args.class()?;
    let pi = match &class {
        SurfaceClass::Cartesian(c) => cartesian_profile(args.genus, c)?,
        SurfaceClass::Symmetric(c) => symmetric_profile(args.genus, c)?,
    };
    let chern = chern_data(args.surface, args.genus)?;
    let audit = consistency_audit(&pi, &chern);
    let citations = vec![
        "n = H²".to_string(),
        "g_H from adjunction: 2g_H − 2 = H² + H·K".to_string(),
        "d_dcurve = C(n−1,2) − g_H".to_string(),
        "pinch = c₁² − c₂ + 2n + 8(g_H − 1)".to_string(),
        "g_dcurve from c₁² + c₂ = 12[C(n−1,3) − (n−4)d + g_S + 2t]".to_string(),
        "triple from c₁² = n(n−4)² − (3n−16)d + 3t − p".to_string(),
        "double_pts_p4 from 2b = n(n−5) − 10(g_H − 1) − c₁² + c₂".to_string(),
    ];
    Ok(ReportEnvelope::new(
        "invariants",
        args.inputs(),
        json!({ "invariants": to_value(&pi), "chern": to_value(&chern), "audit": to_value(&audit) }),
        citations,
    ))
}

fn search(cmd: &SearchCommand, exec: Exec) -> Result<ReportEnvelope, Failure> {
    match cmd {
        SearchCommand::MinDegree { surface, genus, profile, delta_mode, cap } => {
            let mut ins = inputs(&[
                ("surface", json!(surface.to_string())),
                ("genus", json!(genus)),
                ("delta_mode", to_value(delta_mode)),
            ]);
            let p = profile.profile(*genus).map_err(|e| ("search min-degree", ins.clone(), e))?;
            profile_inputs(&mut ins, &p);
            if *surface == SurfaceKind::Symmetric {
                ins.insert("cap".into(), json!(cap.unwrap_or(80 * genus)));
            }
            let delta = delta_lower_bound(&p, *delta_mode);
            let run = || -> squarefold::Result<ReportEnvelope> {
                match surface {
                    SurfaceKind::Cartesian => {
                        let r = min_degree_cartesian(*genus, delta)?;
                        let cite = "C×C: n(n−10) ≥ 4(g−1)(g−1+5δ), n even".to_string();
                        Ok(ReportEnvelope::new("search min-degree", ins.clone(), to_value(&r), vec![cite]))
                    }
                    SurfaceKind::Symmetric => {
                        let a_cap = cap.unwrap_or(80 * genus);
                        let r = min_degree_symmetric(&p, delta, a_cap)?;
                        let cites = vec![
                            "C₂: (n−5)² > 2g² − 8g + 31 + 5δ(2g − √g − 3)".to_string(),
                            "C₂: g_H ≤ (n² − 5n + 10 − 2(g−1)(g−3))/10 and n = a² − gk²".to_string(),
                        ];
                        Ok(ReportEnvelope::new("search min-degree", ins.clone(), to_value(&r), cites))
                    }
                }
            };
            run().map_err(|e| ("search min-degree", ins.clone(), e))
        }
        SearchCommand::P4 { genus, a_max, diagonal_only } => {
            let ins = inputs(&[("genus", json!(genus)), ("a_max", json!(a_max)), ("diagonal_only", json!(diagonal_only))]);
            p4_search(*genus, *a_max, *diagonal_only, exec)
                .map(|r| {
                    let cite = "P⁴ without improper double points: n(n−10) = 10(g−1)(a+a′) + 4(g−1)²".to_string();
                    ReportEnvelope::new("search p4", ins.clone(), to_value(&r), vec![cite])
                })
                .map_err(|e| ("search p4", ins.clone(), e))
        }
        SearchCommand::GsBound { surface, genus } => {
            let ins = inputs(&[("surface", json!(surface.to_string())), ("genus", json!(genus))]);
            gs_lower_bound(*surface, *genus)
                .map(|r| {
                    let cite = match surface {
                        SurfaceKind::Cartesian => "g_S ≥ ½(2n² − 17n + 2) + 2δ(n−12)(g−1) − 7(g−1)²",
                        SurfaceKind::Symmetric => "g_S = ½(n² − 7n − 7g² + 25g + 8) + (n−12)g_H",
                    };
                    ReportEnvelope::new("search gs-bound", ins.clone(), to_value(&r), vec![cite.into()])
                })
                .map_err(|e| ("search gs-bound", ins.clone(), e))
        }
        SearchCommand::Delta { genus, profile, delta_mode } => {
            let mut ins = inputs(&[("genus", json!(genus)), ("delta_mode", to_value(delta_mode))]);
            let p = profile.profile(*genus).map_err(|e| ("search delta", ins.clone(), e))?;
            profile_inputs(&mut ins, &p);
            let delta = delta_lower_bound(&p, *delta_mode);
            let cite = "plane model: g ≤ (δ−1)(δ−2)/2; δ = 5 in genus 2".to_string();
            Ok(ReportEnvelope::new("search delta", ins, json!({ "delta": delta }), vec![cite]))
        }
        SearchCommand::P4Exclusion { genus } => {
            let ins = inputs(&[("genus", json!(genus))]);
            nonspecial_p4_exclusion(*genus)
                .map(|r| {
                    let cite = "non-special surfaces in P⁴: (n−5)(n−10) ≤ 14(g−1)²".to_string();
                    ReportEnvelope::new("search p4-exclusion", ins.clone(), to_value(&r), vec![cite])
                })
                .map_err(|e| ("search p4-exclusion", ins.clone(), e))
        }
    }
}

fn hyperbolic(cmd: &HyperbolicCommand) -> Result<ReportEnvelope, Failure> {
    let name = "hyperbolic";
    match cmd {
        HyperbolicCommand::Projection { class, profile } => {
            let mut ins = class.inputs();
            let run = |ins: &mut BTreeMap<String, Value>| -> squarefold::Result<ReportEnvelope> {
                let p = profile.profile(class.genus)?;
                profile_inputs(ins, &p);
                let (pi, source) = match class.class()? {
                    SurfaceClass::Cartesian(c) => (cartesian_profile(class.genus, &c)?, cartesian_square_hyperbolic(class.genus)?),
                    SurfaceClass::Symmetric(c) => (symmetric_profile(class.genus, &c)?, symmetric_square_hyperbolic(&p)),
                };
                let verdict = projection_hyperbolic(&pi, source.verdict == TriState::Yes);
                let citations = vec![source.provenance.clone(), verdict.provenance.clone()];
                Ok(ReportEnvelope::new(
                    name,
                    ins.clone(),
                    json!({ "source": to_value(&source), "projection": to_value(&verdict), "invariants": to_value(&pi) }),
                    citations,
                ))
            };
            run(&mut ins).map_err(|e| (name, ins, e))
        }
        HyperbolicCommand::SymmetricSquare { genus, profile } => {
            let mut ins = inputs(&[("genus", json!(genus))]);
            let p = profile.profile(*genus).map_err(|e| (name, ins.clone(), e))?;
            profile_inputs(&mut ins, &p);
            let v = symmetric_square_hyperbolic(&p);
            Ok(ReportEnvelope::new(name, ins, to_value(&v), vec![v.provenance.clone()]))
        }
        HyperbolicCommand::SymmetricPower { genus, d, arbitrary } => {
            let ins = inputs(&[("genus", json!(genus)), ("d", json!(d)), ("generic", json!(!arbitrary))]);
            symmetric_power_hyperbolic(*genus, *d, !arbitrary)
                .map(|v| ReportEnvelope::new(name, ins.clone(), to_value(&v), vec![v.provenance.clone()]))
                .map_err(|e| (name, ins.clone(), e))
        }
        HyperbolicCommand::CartesianSquare { genus } => {
            let ins = inputs(&[("genus", json!(genus))]);
            cartesian_square_hyperbolic(*genus)
                .map(|v| ReportEnvelope::new(name, ins.clone(), to_value(&v), vec![v.provenance.clone()]))
                .map_err(|e| (name, ins.clone(), e))
        }
    }
}

pub fn verify_paper(cases: &[golden::GoldenCase]) -> ReportEnvelope {
    let outcomes = golden::run_cases(cases);
    let mismatches: Vec<_> = outcomes.iter().filter_map(|o| o.mismatch()).collect();
    let citations = outcomes.iter().map(|o| o.citation.clone()).collect();
    let matched = outcomes.len() - mismatches.len();
    let mut env = ReportEnvelope::new(
        "verify-paper",
        BTreeMap::new(),
        json!({ "cases": to_value(&outcomes), "total": outcomes.len(), "matched": matched }),
        citations,
    );
    if !mismatches.is_empty() {
        env.status = Status::Mismatch;
    }
    env.mismatches = mismatches;
    env
}
