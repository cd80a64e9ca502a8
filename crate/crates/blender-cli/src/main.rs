//! Command-line surface over the exact form-cone kernels: membership
//! queries with the deciding data, certificate emission, the bundled
//! identity suite, and region scans with CSV/SVG output.
//!
//! Exit codes: membership verdicts map to 0 (interior), 1 (boundary),
//! 2 (outside), 3 (unknown); malformed input exits 64; an incompatible
//! cone/form combination exits 65.

mod input;
mod region;

use blender_core::cert::Certificate;
use blender_core::convexity::{convex_status, region_scan, theta};
use blender_core::forms::json::{tower_form_to_json, CoeffJson};
use blender_core::forms::SquareMatrix;
use blender_core::quartics::{
    btau_membership, canonical_lambda, compare_k_phi, invariants, CanonicalLambda,
};
use blender_core::rat::{parse_rat, rat, rat_i, Rat};
use blender_core::realroots::{
    binary_psd_status, catalecticant, q_membership, sym_psd_status, PsdStatus, SymPsdStatus,
};
use blender_core::verdict::MembershipVerdict;
use blender_core::waring::{quartic_decomposition, two_square_decomposition, wtilde_membership};
use clap::{Args, Parser, Subcommand};
use input::{
    as_even_symmetric_octic, build_family, load_form, parse_matrix, parse_point, LoadedForm,
    Params,
};
use num::{Integer, Zero};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "blender-lab",
    version,
    about = "Exact membership, certificates and decompositions for cones of binary forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FormInput {
    /// Form as a JSON file (`-` reads stdin).
    #[arg(long)]
    form: Option<String>,
    /// Builtin family name (flam, glam, qlam, hrk, psi, omega, trinomial, eso).
    #[arg(long)]
    family: Option<String>,
    /// Even symmetric octic coordinates A B C.
    #[arg(long, num_args = 3, allow_hyphen_values = true, value_names = ["A", "B", "C"])]
    eso: Option<Vec<String>>,
    /// Family parameters as k=v pairs with exact rational values.
    #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
    params: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide membership of a form in one of the cones P, Q, K, Btau, Wtilde.
    Membership {
        #[arg(long)]
        cone: String,
        /// Parameter of the Btau cone, a rational in [-1/3, 0].
        #[arg(long, allow_hyphen_values = true)]
        tau: Option<String>,
        #[command(flatten)]
        input: FormInput,
    },
    /// Produce a verified decomposition certificate.
    Decompose {
        /// `two-squares` (even symmetric octics) or `quartic-4th-powers`.
        #[arg(long)]
        kind: String,
        #[arg(long)]
        out: Option<String>,
        #[command(flatten)]
        input: FormInput,
    },
    /// Run the bundled exact identity suite; exit 0 iff everything passes.
    VerifyPaper,
    /// Scan the even-sextic section rectangle and emit CSV (and SVG).
    Region {
        #[arg(long, allow_hyphen_values = true)]
        a_min: String,
        #[arg(long, allow_hyphen_values = true)]
        a_max: String,
        #[arg(long, allow_hyphen_values = true)]
        b_min: String,
        #[arg(long, allow_hyphen_values = true)]
        b_max: String,
        #[arg(long, allow_hyphen_values = true)]
        step: String,
        #[arg(long)]
        csv: String,
        #[arg(long)]
        svg: Option<String>,
    },
    /// Evaluate a form at an exact rational point.
    Eval {
        #[arg(long)]
        form: String,
        /// Comma-separated rational coordinates.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Apolarity inner product of two forms.
    Inner {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Substitute a square matrix into a form.
    Compose {
        #[arg(long)]
        form: String,
        /// Rows separated by `;`, entries by `,` (e.g. "1,1;1,-1").
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// The Hessian-determinant cofactor of a binary form.
    Theta {
        #[arg(long)]
        form: String,
    },
    /// The canonical parameter of a positive definite binary quartic.
    CanonicalLambda {
        #[command(flatten)]
        input: FormInput,
    },
    /// Verify and print the certificate suite.
    Certificates {
        #[arg(long)]
        out: Option<String>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

fn input_err<E: std::fmt::Display>(e: E) -> Failure {
    Failure { code: 64, message: format!("input error: {}", e) }
}

fn incompatible<E: std::fmt::Display>(e: E) -> Failure {
    Failure { code: 65, message: format!("incompatible request: {}", e) }
}

fn internal<E: std::fmt::Display>(e: E) -> Failure {
    Failure { code: 70, message: format!("internal verification failed: {}", e) }
}

fn main() {
    if let Ok(threads) = std::env::var("BLENDER_LAB_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
        }
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{}", e);
                    std::process::exit(0);
                }
                _ => {
                    eprintln!("{}", e);
                    std::process::exit(64);
                }
            }
        }
    };
    match dispatch(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(f) => {
            eprintln!("{}", f.message);
            std::process::exit(f.code);
        }
    }
}

fn resolve_input(input: &FormInput) -> Result<LoadedForm, Failure> {
    let sources = [input.form.is_some(), input.family.is_some(), input.eso.is_some()];
    if sources.iter().filter(|&&b| b).count() != 1 {
        return Err(input_err("exactly one of --form, --family, --eso is required"));
    }
    if let Some(path) = &input.form {
        return load_form(path).map_err(input_err);
    }
    if let Some(values) = &input.eso {
        let mut qs = Vec::new();
        for v in values {
            qs.push(
                parse_rat(v)
                    .ok_or_else(|| input_err(format!("`{}` is not an exact rational", v)))?,
            );
        }
        let eso = blender_core::waring::EvenSymmetricOctic::new(
            qs[0].clone(),
            qs[1].clone(),
            qs[2].clone(),
        );
        return Ok(LoadedForm::Rational(eso.expand()));
    }
    let name = input.family.as_deref().expect("family presence checked above");
    let params = Params::parse(&input.params).map_err(input_err)?;
    build_family(name, &params).map_err(input_err)
}

#[derive(Serialize)]
struct MembershipReport {
    cone: String,
    verdict: String,
    exit_code: i32,
    detail: serde_json::Value,
}

fn psd_detail<K: blender_core::scalar::Scalar>(status: &PsdStatus<K>) -> serde_json::Value {
    match status {
        PsdStatus::PositiveDefinite => serde_json::json!({"class": "positive-definite"}),
        PsdStatus::Indefinite => serde_json::json!({"class": "indefinite"}),
        PsdStatus::PsdWithZeros(zeros) => {
            let zs: Vec<serde_json::Value> = zeros
                .iter()
                .map(|z| match &z.point {
                    blender_core::realroots::ZeroPoint::Rational(x, y) => serde_json::json!({
                        "point": [x.to_string(), y.to_string()],
                        "multiplicity": z.multiplicity,
                    }),
                    blender_core::realroots::ZeroPoint::Isolated { poly, lo, hi } => {
                        serde_json::json!({
                            "defining_polynomial":
                                poly.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                            "interval": [lo.to_string(), hi.to_string()],
                            "multiplicity": z.multiplicity,
                        })
                    }
                })
                .collect();
            serde_json::json!({"class": "psd-with-zeros", "zeros": zs})
        }
    }
}

fn verdict_report(
    cone: &str,
    verdict: MembershipVerdict,
    detail: serde_json::Value,
) -> Result<i32, Failure> {
    let report = MembershipReport {
        cone: cone.to_string(),
        verdict: verdict.to_string(),
        exit_code: verdict.exit_code(),
        detail,
    };
    println!("{}", serde_json::to_string_pretty(&report).expect("report serialization"));
    Ok(verdict.exit_code())
}

fn dispatch(cmd: Command) -> Result<i32, Failure> {
    match cmd {
        Command::Membership { cone, tau, input } => cmd_membership(&cone, tau.as_deref(), &input),
        Command::Decompose { kind, out, input } => cmd_decompose(&kind, out.as_deref(), &input),
        Command::VerifyPaper => cmd_verify_paper(),
        Command::Region { a_min, a_max, b_min, b_max, step, csv, svg } => {
            cmd_region(&a_min, &a_max, &b_min, &b_max, &step, &csv, svg.as_deref())
        }
        Command::Eval { form, point } => cmd_eval(&form, &point),
        Command::Inner { lhs, rhs } => cmd_inner(&lhs, &rhs),
        Command::Compose { form, matrix } => cmd_compose(&form, &matrix),
        Command::Theta { form } => cmd_theta(&form),
        Command::CanonicalLambda { input } => cmd_canonical_lambda(&input),
        Command::Certificates { out } => cmd_certificates(out.as_deref()),
    }
}

fn cmd_membership(cone: &str, tau: Option<&str>, input: &FormInput) -> Result<i32, Failure> {
    let loaded = resolve_input(input)?;
    match cone {
        "P" => {
            let p = loaded.to_tower();
            if p.nvars() != 2 {
                return Err(incompatible("P membership needs a binary form"));
            }
            if p.is_zero() {
                return verdict_report("P", MembershipVerdict::Boundary, serde_json::json!({}));
            }
            let status = binary_psd_status(&p).map_err(incompatible)?;
            let verdict = match status {
                PsdStatus::PositiveDefinite => MembershipVerdict::Interior,
                PsdStatus::PsdWithZeros(_) => MembershipVerdict::Boundary,
                PsdStatus::Indefinite => MembershipVerdict::Outside,
            };
            verdict_report("P", verdict, psd_detail(&status))
        }
        "Q" => {
            let p = loaded.rational().map_err(incompatible)?;
            let verdict = q_membership(p).map_err(incompatible)?;
            let detail = if p.is_zero() {
                serde_json::json!({})
            } else {
                let h = catalecticant(p).map_err(incompatible)?;
                let chi: Vec<String> = h.char_poly().iter().map(|c| c.to_string()).collect();
                let kernel: Vec<Vec<String>> = match sym_psd_status(&h) {
                    SymPsdStatus::PsdWithKernel(basis) => basis
                        .iter()
                        .map(|v| v.iter().map(|c| c.to_string()).collect())
                        .collect(),
                    _ => Vec::new(),
                };
                serde_json::json!({
                    "hankel_char_poly": chi,
                    "hankel_kernel": kernel,
                })
            };
            verdict_report("Q", verdict, detail)
        }
        "K" => {
            let p = loaded.to_tower();
            let verdict = convex_status(&p).map_err(incompatible)?;
            let detail = if p.is_zero() || p.degree() < 2 {
                serde_json::json!({})
            } else {
                let th = theta(&p).map_err(incompatible)?;
                let status = if th.is_zero() {
                    serde_json::json!({"class": "identically-zero"})
                } else {
                    psd_detail(&binary_psd_status(&th).map_err(incompatible)?)
                };
                serde_json::json!({
                    "theta": serde_json::from_str::<serde_json::Value>(&tower_form_to_json(&th))
                        .expect("theta JSON is well formed"),
                    "theta_status": status,
                })
            };
            verdict_report("K", verdict, detail)
        }
        "Btau" => {
            let t = tau.ok_or_else(|| input_err("--tau is required for the Btau cone"))?;
            let t = parse_rat(t).ok_or_else(|| input_err("--tau must be an exact rational"))?;
            let p = loaded.rational().map_err(incompatible)?;
            let verdict = btau_membership(p, &t).map_err(incompatible)?;
            let detail = match binary_psd_status(p) {
                Ok(PsdStatus::PositiveDefinite) => {
                    let inv = invariants(p).map_err(incompatible)?;
                    let cmp = compare_k_phi(&inv, &t);
                    // Cleared denominators: two integers an auditor can
                    // compare by hand.
                    let den = cmp.lhs.denom().lcm(cmp.rhs.denom());
                    let lhs_int = cmp.lhs.numer() * (&den / cmp.lhs.denom());
                    let rhs_int = cmp.rhs.numer() * (&den / cmp.rhs.denom());
                    serde_json::json!({
                        "invariant_i": inv.i.to_string(),
                        "invariant_j": inv.j.to_string(),
                        "comparison": {
                            "lhs_cleared": lhs_int.to_string(),
                            "rhs_cleared": rhs_int.to_string(),
                            "sign_j": cmp.sign_j,
                            "sign_phi_tau": cmp.sign_phi_tau,
                            "ordering": format!("{:?}", cmp.ordering),
                        }
                    })
                }
                _ => serde_json::json!({}),
            };
            verdict_report("Btau", verdict, detail)
        }
        "Wtilde" => {
            let p = loaded.rational().map_err(incompatible)?;
            let eso = as_even_symmetric_octic(p).map_err(incompatible)?;
            let verdict = wtilde_membership(&eso);
            let edge = &eso.b + rat_i(4) * &eso.a;
            let parabola = rat_i(36) * &eso.a * &eso.c
                - (&eso.b * &eso.b - rat_i(64) * &eso.a * &eso.b - rat_i(56) * &eso.a * &eso.a);
            let detail = serde_json::json!({
                "coordinates": [eso.a.to_string(), eso.b.to_string(), eso.c.to_string()],
                "edge_slack": edge.to_string(),
                "parabola_slack": parabola.to_string(),
            });
            verdict_report("Wtilde", verdict, detail)
        }
        other => Err(incompatible(format!("unknown cone `{}`", other))),
    }
}

fn write_certificate(cert: &Certificate, out: Option<&str>) -> Result<(), Failure> {
    print!("{}", cert.transcript());
    let json = cert.to_json();
    match out {
        Some(path) => std::fs::write(path, json).map_err(input_err)?,
        None => println!("{}", json),
    }
    Ok(())
}

fn cmd_decompose(kind: &str, out: Option<&str>, input: &FormInput) -> Result<i32, Failure> {
    match kind {
        "two-squares" => {
            let loaded = resolve_input(input)?;
            let p = loaded.rational().map_err(incompatible)?;
            let eso = as_even_symmetric_octic(p).map_err(incompatible)?;
            if wtilde_membership(&eso) == MembershipVerdict::Outside {
                let edge = &eso.b + rat_i(4) * &eso.a;
                let parabola = rat_i(36) * &eso.a * &eso.c
                    - (&eso.b * &eso.b - rat_i(64) * &eso.a * &eso.b - rat_i(56) * &eso.a * &eso.a);
                let violated = if eso.a < Rat::zero() || (eso.a.is_zero() && !eso.b.is_zero()) {
                    "A ≥ 0 with B = 0 on the A = 0 ray".to_string()
                } else if edge < Rat::zero() {
                    format!("B ≥ -4A (slack {})", edge)
                } else {
                    format!("36AC ≥ B² - 64AB - 56A² (slack {})", parabola)
                };
                eprintln!("not a member: violated inequality: {}", violated);
                return Ok(2);
            }
            let d = two_square_decomposition(&eso).map_err(incompatible)?;
            d.verify(&eso).map_err(internal)?;
            let cert = d.to_certificate(&eso);
            cert.verify().map_err(internal)?;
            write_certificate(&cert, out)?;
            Ok(0)
        }
        "quartic-4th-powers" => {
            if input.family.as_deref() != Some("flam") {
                return Err(incompatible("quartic decomposition takes --family flam lambda=<r>"));
            }
            let params = Params::parse(&input.params).map_err(input_err)?;
            let l = params.get("lambda").map_err(input_err)?;
            match quartic_decomposition(l) {
                Ok((f, g)) => {
                    let target = blender_core::quartics::flam(l).to_tower();
                    let mut terms = vec![blender_core::cert::CertificateTerm {
                        weight: blender_core::tower::Tower::from_int(1),
                        form: f,
                        exponent: 2,
                    }];
                    if !g.is_zero() {
                        terms.push(blender_core::cert::CertificateTerm {
                            weight: blender_core::tower::Tower::from_int(1),
                            form: g,
                            exponent: 2,
                        });
                    }
                    let cert =
                        Certificate::new(format!("quartic two-psd-squares λ={}", l), terms, target);
                    cert.verify().map_err(internal)?;
                    write_certificate(&cert, out)?;
                    Ok(0)
                }
                Err(e) => {
                    eprintln!("not a member: {}", e);
                    Ok(2)
                }
            }
        }
        other => Err(incompatible(format!("unknown decomposition kind `{}`", other))),
    }
}

fn cmd_verify_paper() -> Result<i32, Failure> {
    let results = blender_core::verify::paper_suite();
    let mut ok = true;
    for r in &results {
        match &r.error {
            None => println!("fixture {}: PASS", r.name),
            Some(e) => {
                ok = false;
                println!("fixture {}: FAIL ({})", r.name, e);
            }
        }
    }
    println!(
        "{} of {} fixtures passed",
        results.iter().filter(|r| r.passed()).count(),
        results.len()
    );
    Ok(if ok { 0 } else { 1 })
}

fn cmd_region(
    a_min: &str,
    a_max: &str,
    b_min: &str,
    b_max: &str,
    step: &str,
    csv: &str,
    svg: Option<&str>,
) -> Result<i32, Failure> {
    let parse =
        |s: &str| parse_rat(s).ok_or_else(|| input_err(format!("`{}` is not an exact rational", s)));
    let (a0, a1) = (parse(a_min)?, parse(a_max)?);
    let (b0, b1) = (parse(b_min)?, parse(b_max)?);
    let st = parse(step)?;
    if st <= rat(0, 1) {
        return Err(input_err("step must be positive"));
    }
    if a0 > a1 || b0 > b1 {
        return Err(input_err("empty grid"));
    }
    let rows = region_scan(&a0, &a1, &b0, &b1, &st);
    region::write_file(csv, &region::rows_to_csv(&rows)).map_err(input_err)?;
    if let Some(path) = svg {
        let rendered =
            region::rows_to_svg(&rows, blender_core::rat::rat_to_f64(&st)).map_err(input_err)?;
        region::write_file(path, &rendered).map_err(input_err)?;
    }
    let (in_p, in_q, in_k) = region::verdict_counts(&rows);
    println!(
        "{} grid points: {} psd, {} power-sum members, {} convex",
        rows.len(),
        in_p,
        in_q,
        in_k
    );
    Ok(0)
}

fn cmd_eval(form: &str, point: &str) -> Result<i32, Failure> {
    let loaded = load_form(form).map_err(input_err)?;
    let pt = parse_point(point).map_err(input_err)?;
    let p = loaded.to_tower();
    let value = p.evaluate_rat(&pt).map_err(incompatible)?;
    let coeff = CoeffJson::from_tower(&value);
    println!(
        "{}",
        serde_json::to_string_pretty(&serde_json::json!({ "value": coeff })).expect("value JSON")
    );
    Ok(0)
}

fn cmd_inner(lhs: &str, rhs: &str) -> Result<i32, Failure> {
    let a = load_form(lhs).map_err(input_err)?.to_tower();
    let b = load_form(rhs).map_err(input_err)?.to_tower();
    let value = a.inner_product(&b).map_err(incompatible)?;
    let coeff = CoeffJson::from_tower(&value);
    println!(
        "{}",
        serde_json::to_string_pretty(&serde_json::json!({ "value": coeff })).expect("value JSON")
    );
    Ok(0)
}

fn cmd_compose(form: &str, matrix: &str) -> Result<i32, Failure> {
    let p = load_form(form).map_err(input_err)?.to_tower();
    let rows = parse_matrix(matrix).map_err(input_err)?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(input_err("matrix must be square"));
    }
    let m = SquareMatrix::from_rows(
        rows.into_iter()
            .map(|r| r.into_iter().map(blender_core::tower::Tower::from_rat).collect())
            .collect(),
    );
    let q = p.compose(&m).map_err(incompatible)?;
    println!("{}", tower_form_to_json(&q));
    Ok(0)
}

fn cmd_theta(form: &str) -> Result<i32, Failure> {
    let p = load_form(form).map_err(input_err)?.to_tower();
    let th = theta(&p).map_err(incompatible)?;
    println!("{}", tower_form_to_json(&th));
    Ok(0)
}

fn cmd_canonical_lambda(input: &FormInput) -> Result<i32, Failure> {
    let p = resolve_input(input)?;
    let p = p.rational().map_err(incompatible)?;
    match canonical_lambda(p) {
        Ok(CanonicalLambda::Rational(l)) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::json!({
                    "type": "rational",
                    "lambda": l.to_string(),
                }))
                .expect("lambda JSON")
            );
            Ok(0)
        }
        Ok(CanonicalLambda::Algebraic { poly, lo, hi, sign }) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::json!({
                    "type": "algebraic",
                    "defining_polynomial":
                        poly.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "interval": [lo.to_string(), hi.to_string()],
                    "sign": sign,
                }))
                .expect("lambda JSON")
            );
            Ok(0)
        }
        Err(e) => Err(incompatible(e)),
    }
}

fn cmd_certificates(out: Option<&str>) -> Result<i32, Failure> {
    let suite = blender_core::waring::certificate_suite();
    let mut jsons = Vec::new();
    for cert in &suite {
        cert.verify().map_err(internal)?;
        print!("{}", cert.transcript());
        println!("  verified: yes");
        jsons.push(
            serde_json::from_str::<serde_json::Value>(&cert.to_json())
                .expect("certificate JSON is well formed"),
        );
    }
    if let Some(path) = out {
        std::fs::write(path, serde_json::to_string_pretty(&jsons).expect("suite JSON"))
            .map_err(input_err)?;
    }
    println!("{} certificates verified", suite.len());
    Ok(0)
}
