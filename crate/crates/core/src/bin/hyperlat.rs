use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use hyperlat::coxeter::{
    diagram_automorphisms, diagram_from_roots, finite_volume, involution_classes, negation_partners, render,
    CoxeterSystem, Format,
};
use hyperlat::exact::gauss::GaussInt;
use hyperlat::exact::matrix::{GaussMatrix, IntMatrix, Matrix};
use hyperlat::gaussian::{
    build_gaussian, e7_reduction, fixed_lattice, group_generated, invariant_pair, make_involution, max_closure,
    mirror_orthocomplement, named_involution, projective_roots, reduce_mod_one_plus_i, tetraflection,
    AntiunitaryInvolution, GaussianLattice,
};
use hyperlat::vinberg::{gaussian_root_predicate, run_vinberg, VinbergConfig};
use hyperlat::zlattice::{build_z, decide_isomorphic, IsoDecision, ZLattice};

/// Exact computations with integral and Gaussian hyperbolic lattices.
#[derive(Parser)]
#[command(name = "hyperlat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integral lattices.
    #[command(subcommand)]
    Lat(LatCommand),
    /// Gaussian lattices and antiunitary involutions.
    #[command(subcommand)]
    Gauss(GaussCommand),
    /// Run Vinberg's algorithm.
    Vinberg(VinbergArgs),
    /// Coxeter systems and diagrams.
    #[command(subcommand)]
    Cox(CoxCommand),
    /// Recompute every bundled reference value.
    VerifyPaper {
        /// Comma separated check groups (all when omitted).
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Write the full JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum LatCommand {
    /// Invariants of a lattice (expression, JSON Gram matrix or file).
    Info { lattice: String },
    /// Decide whether two lattices are isometric.
    Iso { a: String, b: String },
}

#[derive(Subcommand)]
enum GaussCommand {
    /// Roots of Hermitian norm -2 up to units.
    Roots { lattice: String },
    /// Order of the group generated by the tetraflections.
    Group { lattice: String },
    /// Fixed lattice of an involution such as `chi3`, `ipsi2'` or `psi2+psi1`.
    Fixed {
        involution: String,
        #[arg(long)]
        lattice: Option<String>,
    },
    /// Fixed lattices of `χ` and `iχ`.
    Pair {
        involution: String,
        #[arg(long)]
        lattice: Option<String>,
    },
    /// Reduction modulo `1+i`, with the `E7` class for rank seven.
    Reduce {
        involution: String,
        #[arg(long)]
        lattice: Option<String>,
    },
    /// Orthogonal complement of a root and the type of its mirror.
    Mirror {
        lattice: String,
        /// Comma separated Gaussian integers, e.g. `1+i,0,1`.
        root: String,
    },
}

#[derive(Args)]
struct VinbergArgs {
    /// Lattice expression, JSON Gram matrix or file; defaults to the fixed lattice of the predicate involution.
    #[arg(long)]
    lattice: Option<String>,
    /// Controlling vector, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    controller: Option<String>,
    /// Allowed root norms (positive, comma separated).
    #[arg(long, value_delimiter = ',')]
    norms: Vec<u64>,
    /// `gaussian:<involution>` keeps roots whose reflection extends to the Gaussian lattice.
    #[arg(long)]
    predicate: Option<String>,
    /// Gaussian lattice of the involution (defaults to the one it is named on).
    #[arg(long)]
    gaussian: Option<String>,
    /// Basis of the fixed lattice as JSON rows of Gaussian integers (defaults to the computed one).
    #[arg(long)]
    basis: Option<String>,
    #[arg(long)]
    max_height: Option<String>,
    #[arg(long, default_value = "ascii")]
    emit: String,
}

#[derive(Subcommand)]
enum CoxCommand {
    /// Involution classes of a Coxeter group (type name or JSON Coxeter matrix, 0 for ∞).
    Classes { system: String },
    /// Symmetries of the diagram of a root Gram matrix.
    Auto {
        gram: String,
        /// Preserve only norms and edge classes.
        #[arg(long)]
        labels_only: bool,
    },
    /// Render the diagram of a root Gram matrix.
    Render {
        gram: String,
        #[arg(long, default_value = "dot")]
        format: String,
        /// Also report the finite-volume census in this dimension.
        #[arg(long)]
        dimension: Option<usize>,
    },
}

/// Inline JSON, a JSON file, or plain text.
fn read_arg(arg: &str) -> Result<Either> {
    let t = arg.trim_start();
    if t.starts_with('[') || t.starts_with('{') {
        return Ok(Either::Json(serde_json::from_str(t)?));
    }
    let p = Path::new(arg);
    if p.is_file() {
        let text = fs::read_to_string(p).with_context(|| format!("reading {arg}"))?;
        return Ok(Either::Json(serde_json::from_str(&text).with_context(|| format!("parsing {arg}"))?));
    }
    Ok(Either::Text(arg.to_string()))
}

enum Either {
    Json(Value),
    Text(String),
}

fn gram_value(v: &Value) -> &Value {
    v.get("gram").unwrap_or(v)
}

fn int_matrix_of(v: &Value) -> Result<IntMatrix> {
    let rows: Vec<Vec<i64>> = serde_json::from_value(gram_value(v).clone()).context("expected an integer matrix")?;
    Ok(Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect()))
}

fn gauss_entry(v: &Value) -> Result<GaussInt> {
    match v {
        Value::String(s) => Ok(s.parse()?),
        Value::Number(n) => Ok(GaussInt::new(n.as_i64().ok_or_else(|| anyhow!("entry {n}"))?, 0)),
        Value::Array(a) if a.len() == 2 => {
            let p = |x: &Value| x.as_i64().ok_or_else(|| anyhow!("entry {x}"));
            Ok(GaussInt::new(p(&a[0])?, p(&a[1])?))
        }
        _ => bail!("cannot read Gaussian integer from {v}"),
    }
}

fn gauss_matrix_of(v: &Value) -> Result<GaussMatrix> {
    let rows = gram_value(v).as_array().ok_or_else(|| anyhow!("expected a matrix"))?;
    let parsed: Result<Vec<Vec<GaussInt>>> = rows
        .iter()
        .map(|r| r.as_array().ok_or_else(|| anyhow!("expected rows")).and_then(|r| r.iter().map(gauss_entry).collect()))
        .collect();
    Ok(Matrix::from_rows(parsed?))
}

fn z_lattice(arg: &str) -> Result<ZLattice> {
    Ok(match read_arg(arg)? {
        Either::Json(v) => ZLattice::new("L", int_matrix_of(&v)?)?,
        Either::Text(t) => build_z(&t)?,
    })
}

fn gauss_lattice(arg: &str) -> Result<GaussianLattice> {
    Ok(match read_arg(arg)? {
        Either::Json(v) => GaussianLattice::new("Λ", gauss_matrix_of(&v)?)?,
        Either::Text(t) => build_gaussian(&t)?,
    })
}

fn involution(spec: &str, lattice: Option<&str>) -> Result<AntiunitaryInvolution> {
    Ok(match lattice {
        Some(l) => make_involution(&gauss_lattice(l)?, spec)?,
        None => named_involution(spec)?,
    })
}

fn int_list(s: &str) -> Result<Vec<BigInt>> {
    s.split(',').map(|x| x.trim().parse::<BigInt>().map_err(|e| anyhow!("'{x}': {e}"))).collect()
}

fn int_json(x: &BigInt) -> Value {
    x.to_i64().map(Value::from).unwrap_or_else(|| Value::String(x.to_string()))
}

fn matrix_json(m: &IntMatrix) -> Value {
    json!(m.to_rows().iter().map(|r| r.iter().map(int_json).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn decision_json(d: &IsoDecision) -> Value {
    let (verdict, reason) = match d {
        IsoDecision::Isomorphic(r) => ("isomorphic", r),
        IsoDecision::Distinct(r) => ("distinct", r),
        IsoDecision::Unknown(r) => ("unknown", r),
    };
    json!({ "decision": verdict, "reason": reason })
}

fn gauss_vec_json(v: &[GaussInt]) -> Value {
    json!(v.iter().map(|z| z.to_string()).collect::<Vec<_>>())
}

fn emit(text: &str) {
    // a closed pipe (e.g. `| head`) is not an error
    let _ = std::io::stdout().write_all(text.as_bytes());
}

fn print(v: &Value) {
    emit(&format!("{}\n", serde_json::to_string_pretty(v).expect("json")));
}

fn lat(cmd: LatCommand) -> Result<()> {
    match cmd {
        LatCommand::Info { lattice } => {
            let l = z_lattice(&lattice)?;
            print(&json!({ "gram": matrix_json(&l.gram), "summary": l.summary() }));
        }
        LatCommand::Iso { a, b } => print(&decision_json(&decide_isomorphic(&z_lattice(&a)?, &z_lattice(&b)?))),
    }
    Ok(())
}

fn gauss(cmd: GaussCommand) -> Result<()> {
    match cmd {
        GaussCommand::Roots { lattice } => {
            let roots = projective_roots(&gauss_lattice(&lattice)?)?;
            print(
                &json!({ "count": roots.len(), "roots": roots.iter().map(|r| gauss_vec_json(r)).collect::<Vec<_>>() }),
            );
        }
        GaussCommand::Group { lattice } => {
            let l = gauss_lattice(&lattice)?;
            let gens: Vec<GaussMatrix> =
                projective_roots(&l)?.iter().map(|r| tetraflection(&l, r)).collect::<hyperlat::Result<_>>()?;
            print(&json!({ "generators": gens.len(), "order": group_generated(&gens, max_closure())?.len() }));
        }
        GaussCommand::Fixed { involution: spec, lattice } => {
            let chi = involution(&spec, lattice.as_deref())?;
            let f = fixed_lattice(&chi)?;
            let basis: Vec<Value> = f.basis.to_cols().iter().map(|c| gauss_vec_json(c)).collect();
            print(&json!({ "basis_columns": basis, "gram": matrix_json(&f.zlat.gram), "summary": f.zlat.summary() }));
        }
        GaussCommand::Pair { involution: spec, lattice } => {
            print(&serde_json::to_value(invariant_pair(&involution(&spec, lattice.as_deref())?)?)?);
        }
        GaussCommand::Reduce { involution: spec, lattice } => {
            let chi = involution(&spec, lattice.as_deref())?;
            let r = reduce_mod_one_plus_i(&chi.lattice, &chi.m)?;
            let mut out = serde_json::to_value(&r)?;
            if chi.lattice.rank() == 7 && lattice.is_none() {
                let (r, q) = e7_reduction(&chi.m)?;
                let class = hyperlat::coxeter::f2_class_of(&CoxeterSystem::of_type("E7")?, &r.matrix, &q)?;
                out["e7_class"] = serde_json::to_value(class)?;
            }
            print(&out);
        }
        GaussCommand::Mirror { lattice, root } => {
            let l = gauss_lattice(&lattice)?;
            let r: Vec<GaussInt> = root.split(',').map(|x| x.trim().parse()).collect::<hyperlat::Result<_>>()?;
            let (perp, kind) = mirror_orthocomplement(&l, &r)?;
            let gram: Vec<Value> = perp.gram.to_rows().iter().map(|row| gauss_vec_json(row)).collect();
            print(&json!({ "kind": kind, "complement_gram": gram }));
        }
    }
    Ok(())
}

fn vinberg(a: VinbergArgs) -> Result<()> {
    let format: Format = a.emit.parse()?;
    let mut config = match (&a.predicate, &a.lattice) {
        (Some(p), lattice) => {
            let spec = p.strip_prefix("gaussian:").ok_or_else(|| anyhow!("predicate must be gaussian:<involution>"))?;
            let chi = involution(spec, a.gaussian.as_deref())?;
            let basis = match &a.basis {
                Some(b) => match read_arg(b)? {
                    Either::Json(v) => gauss_matrix_of(&v)?,
                    Either::Text(_) => bail!("--basis must be JSON"),
                },
                None => fixed_lattice(&chi)?.basis,
            };
            let gram = hyperlat::gaussian::gram_of_basis(&chi.lattice, &basis)?;
            if let Some(l) = lattice {
                if z_lattice(l)?.gram != gram {
                    bail!("--lattice does not match the Gram matrix of the fixed-lattice basis");
                }
            }
            let pred = gaussian_root_predicate(&chi.lattice, &basis)?;
            VinbergConfig::new(ZLattice::new(format!("Λ^{spec}"), gram)?)?.with_predicate(pred)
        }
        (None, Some(l)) => VinbergConfig::new(z_lattice(l)?)?,
        (None, None) => bail!("give --lattice or --predicate"),
    };
    if let Some(c) = &a.controller {
        config = config.with_controller(int_list(c)?);
    }
    if !a.norms.is_empty() {
        config = config.with_norms(a.norms.clone());
    }
    if let Some(h) = &a.max_height {
        config = config.with_max_height(h.parse::<BigRational>().map_err(|e| anyhow!("max height '{h}': {e}"))?);
    }
    let run = run_vinberg(&config)?;
    let d = run.diagram()?;
    if format == Format::Json {
        let roots: Vec<Value> = run
            .roots
            .iter()
            .map(|r| {
                json!({
                    "vector": r.vector.iter().map(int_json).collect::<Vec<_>>(),
                    "norm": int_json(&r.norm),
                    "product": int_json(&r.product),
                    "height": r.height.to_string(),
                    "distance_height": r.distance_height().to_string(),
                })
            })
            .collect();
        print(&json!({
            "controller": run.controller.iter().map(int_json).collect::<Vec<_>>(),
            "status": run.status,
            "roots": roots,
            "census": run.census,
            "diagram": hyperlat::coxeter::render::to_json(&d),
        }));
    } else {
        let mut out = String::new();
        if format == Format::Ascii {
            out.push_str(&format!("status: {:?}\n", run.status));
            for (k, r) in run.roots.iter().enumerate() {
                let v: Vec<String> = r.vector.iter().map(|x| x.to_string()).collect();
                out.push_str(&format!("r{}  height {}  norm {}  ({})\n", k + 1, r.height, r.norm, v.join(", ")));
            }
        }
        out.push_str(&render(&d, format));
        emit(&out);
    }
    Ok(())
}

fn coxeter_system(arg: &str) -> Result<CoxeterSystem> {
    Ok(match read_arg(arg)? {
        Either::Json(v) => {
            let m: Vec<Vec<u32>> = serde_json::from_value(v.get("m").unwrap_or(&v).clone())?;
            CoxeterSystem::new(m)?
        }
        Either::Text(t) => CoxeterSystem::of_type(&t)?,
    })
}

fn root_gram(arg: &str) -> Result<IntMatrix> {
    match read_arg(arg)? {
        Either::Json(v) => int_matrix_of(&v),
        Either::Text(_) => bail!("expected a JSON Gram matrix of roots"),
    }
}

fn cox(cmd: CoxCommand) -> Result<()> {
    match cmd {
        CoxCommand::Classes { system } => {
            let sys = coxeter_system(&system)?;
            let classes = involution_classes(&sys)?;
            let partners = negation_partners(&sys, &classes)?;
            let list: Vec<Value> = classes
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    json!({
                        "class": c.name,
                        "type": c.type_name,
                        "members": c.members,
                        "negation": partners.as_ref().map(|p| classes[p[i]].name.clone()),
                    })
                })
                .collect();
            print(&json!({ "count": classes.len(), "classes": list }));
        }
        CoxCommand::Auto { gram, labels_only } => {
            let d = diagram_from_roots(&root_gram(&gram)?)?;
            print(&serde_json::to_value(diagram_automorphisms(&d, labels_only))?);
        }
        CoxCommand::Render { gram, format, dimension } => {
            let d = diagram_from_roots(&root_gram(&gram)?)?;
            emit(&render(&d, format.parse()?));
            if let Some(n) = dimension {
                print(&serde_json::to_value(finite_volume(&d, n))?);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Lat(c) => lat(c),
        Command::Gauss(c) => gauss(c),
        Command::Vinberg(a) => vinberg(a),
        Command::Cox(c) => cox(c),
        Command::VerifyPaper { only, json } => {
            return match hyperlat::verify::verify_paper(&only) {
                Ok(report) => {
                    emit(&report.summary());
                    if let Some(path) = json {
                        if let Err(e) = fs::write(&path, report.to_json()) {
                            eprintln!("error: writing {}: {e}", path.display());
                            return ExitCode::from(2);
                        }
                    }
                    if report.pass {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::FAILURE
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            };
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
