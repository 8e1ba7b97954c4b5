//! Command-line front end.
//!
//! Exit codes: 0 on success, 2 on invalid input, 1 when a computed object
//! fails an internal consistency check.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::finite_field::{
    borel_pair_generators, bruhat_factor, enumerate_matrices, orbit_enumerate, two_sided_action, FqMatrix,
};
use crate::involution::{
    check_positive_system, check_weight_set_stability, is_special, restricted_simple_roots, InvolutionFamily,
    InvolutionSpec,
};
use crate::orbits::{twisted_orbit_census, verify_borel_meets_closure_n, SymForm, SymOrbitReport};
use crate::polytope::{f_vector, to_off, weight_polytope};
use crate::renner::{
    bruhat_leq, enumerate_rook, hasse_covers, hasse_dot, rook_count, symmetric_rook_elements, w_e_w_decomposition,
};
use crate::root_weight::{Family, RootSystem, Weight};

#[derive(Parser, Debug)]
#[command(name = "symvar", version, about = "Special weights, Renner monoids and Borel orbits of classical symmetric varieties")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Simple roots, Cartan matrix, positive roots and fundamental weights.
    Roots(RootsArgs),
    /// Fundamental weights and semigroup generators of an involution, tested for specialness.
    SpecialWeights(SpecialArgs),
    /// Hull of a Weyl orbit (shifted by chi in type A).
    WeightPolytope(PolytopeArgs),
    /// The rook monoid: elements, W e W classes, Bruhat-Chevalley order.
    Renner(RennerArgs),
    /// Factor a matrix over F_q as u (t r) v.
    Factor(FactorArgs),
    /// Borel congruence orbits on symmetric or skew matrices over F_q.
    Census(CensusArgs),
    /// Run the built-in consistency checks.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
    Off,
}

#[derive(Args, Debug)]
pub struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct RootsArgs {
    /// Root system family: A, B, C or D.
    #[arg(long)]
    pub family: String,
    /// Rank.
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct SpecialArgs {
    /// Involution family (AI, AII, AIII, CI, CII, DIII, BDI). Omit to list every instance of rank at most 4.
    #[arg(long)]
    pub family: Option<String>,
    /// Size parameter for AI, AII, CI, DIII.
    #[arg(long)]
    pub n: Option<usize>,
    /// First block size for AIII, CII, BDI.
    #[arg(long)]
    pub p: Option<usize>,
    /// Second block size for AIII, CII, BDI.
    #[arg(long)]
    pub q: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct PolytopeArgs {
    /// Root system family (A, B, C, D) or an involution family; an involution requires a special weight.
    #[arg(long)]
    pub family: String,
    /// Rank for a root system family, or the size parameter of an involution.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    /// Comma-separated fundamental-weight coefficients.
    #[arg(long)]
    pub lambda: String,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct RennerArgs {
    #[arg(long)]
    pub n: usize,
    /// List every element as a rook diagram.
    #[arg(long)]
    pub list: bool,
    /// Restrict to symmetric elements (partial involutions).
    #[arg(long)]
    pub symmetric: bool,
    /// With --symmetric, restrict further to empty diagonal.
    #[arg(long, requires = "symmetric")]
    pub fpf: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct FactorArgs {
    /// Matrix rows separated by ';', entries by ',' (e.g. "1,1;1,1").
    #[arg(long)]
    pub matrix: String,
    /// Field size (prime: 2, 3, 5, 7).
    #[arg(long, alias = "field")]
    pub q: u8,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct CensusArgs {
    /// sym or skew.
    #[arg(long)]
    pub form: String,
    #[arg(long)]
    pub n: usize,
    /// Odd prime field size (3, 5, 7).
    #[arg(long, alias = "field")]
    pub q: u8,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub output: Output,
}

/// Parses `argv` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{rendered}");
            } else {
                let _ = write!(stderr, "{rendered}");
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    let (result, output) = match &cli.command {
        Command::Roots(a) => (roots(a), &a.output),
        Command::SpecialWeights(a) => (special_weights(a), &a.output),
        Command::WeightPolytope(a) => (polytope(a), &a.output),
        Command::Renner(a) => (renner(a), &a.output),
        Command::Factor(a) => (factor(a), &a.output),
        Command::Census(a) => (census(a), &a.output),
        Command::Verify(a) => (verify(a), &a.output),
    };
    match result.and_then(|text| emit(&text, output, stdout)) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_internal() {
                1
            } else {
                2
            }
        }
    }
}

fn emit(text: &str, output: &Output, stdout: &mut dyn Write) -> Result<()> {
    match &output.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidParams(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Error::InvalidParams(format!("cannot write to stdout: {e}"))),
    }
}

fn require_format(format: Format, allowed: &[Format], command: &str) -> Result<()> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        let names: Vec<String> = allowed.iter().map(|f| format!("{f:?}").to_lowercase()).collect();
        Err(Error::InvalidParams(format!(
            "{command} supports --format {}, not {}",
            names.join("|"),
            format!("{format:?}").to_lowercase()
        )))
    }
}

fn to_json(v: &impl serde::Serialize) -> Result<String> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|e| Error::InvariantViolation(format!("serialization failed: {e}")))
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| Error::Parse(format!("integer {t:?}: {e}"))))
        .collect()
}

fn parse_matrix(s: &str, q: u8) -> Result<FqMatrix> {
    let rows = s.split(';').map(parse_ints).collect::<Result<Vec<_>>>()?;
    FqMatrix::new(q, &rows)
}

fn coeff_text(c: &[i64]) -> String {
    c.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn weight_text(w: &Weight) -> String {
    w.to_strings().join(" ")
}

fn roots(a: &RootsArgs) -> Result<String> {
    require_format(a.output.format, &[Format::Text, Format::Json], "roots")?;
    let rs = RootSystem::new(a.family.parse::<Family>()?, a.n)?;
    if a.output.format == Format::Json {
        return to_json(&json!({
            "family": rs.family().to_string(),
            "rank": rs.rank(),
            "ambient_dim": rs.ambient_dim(),
            "cartan": rs.cartan(),
            "simple_roots": rs.simple_roots(),
            "positive_roots": rs.positive_roots(),
            "fundamental_weights": rs.fundamental_weights(),
        }));
    }
    let mut s = String::new();
    let _ = writeln!(s, "family {} rank {} ambient_dim {}", rs.family(), rs.rank(), rs.ambient_dim());
    let _ = writeln!(s, "roots {}", rs.roots().len());
    let _ = writeln!(s, "cartan");
    for row in rs.cartan() {
        let _ = writeln!(s, "  {}", coeff_text(row));
    }
    for (i, a) in rs.simple_roots().iter().enumerate() {
        let _ = writeln!(s, "simple_root {} {}", i + 1, weight_text(a));
    }
    for (i, w) in rs.fundamental_weights().iter().enumerate() {
        let _ = writeln!(s, "fundamental_weight {} {}", i + 1, weight_text(w));
    }
    for a in rs.positive_roots() {
        let _ = writeln!(s, "positive_root {}", weight_text(a));
    }
    Ok(s)
}

fn involution_from_flags(family: &str, n: Option<usize>, p: Option<usize>, q: Option<usize>) -> Result<InvolutionSpec> {
    let fam: InvolutionFamily = family.parse()?;
    let params = if fam.takes_pair() {
        if n.is_some() {
            return Err(Error::InvalidParams(format!("{fam} takes --p and --q, not --n")));
        }
        vec![
            p.ok_or_else(|| Error::InvalidParams(format!("{fam} needs --p")))?,
            q.ok_or_else(|| Error::InvalidParams(format!("{fam} needs --q")))?,
        ]
    } else {
        if p.is_some() || q.is_some() {
            return Err(Error::InvalidParams(format!("{fam} takes --n, not --p/--q")));
        }
        vec![n.ok_or_else(|| Error::InvalidParams(format!("{fam} needs --n")))?]
    };
    InvolutionSpec::from_params(fam, &params)
}

/// One row of the special-weights table.
#[derive(serde::Serialize)]
struct SpecialRow {
    instance: String,
    variety: String,
    kind: &'static str,
    coefficients: Vec<i64>,
    weight: Weight,
    special: bool,
    /// Only computed for special generator rows.
    stable: Option<bool>,
}

fn special_rows(inv: &InvolutionSpec) -> Result<Vec<SpecialRow>> {
    let rs = inv.root_system();
    let rank = rs.rank();
    let mut rows = Vec::new();
    let mut push = |kind: &'static str, coeffs: Vec<i64>, check_stable: bool| -> Result<()> {
        let weight = rs.weight_from_fundamental(&coeffs)?;
        let special = is_special(inv, &weight)?;
        let stable = if check_stable && special { Some(check_weight_set_stability(rs, inv, &weight)?) } else { None };
        rows.push(SpecialRow { instance: inv.label(), variety: inv.variety(), kind, coefficients: coeffs, weight, special, stable });
        Ok(())
    };
    for i in 0..rank {
        let mut c = vec![0; rank];
        c[i] = 1;
        push("fundamental", c, false)?;
    }
    let generators = inv.generator_coefficients();
    for g in &generators {
        push("generator", g.clone(), true)?;
    }
    for g in inv.printed_generator_coefficients() {
        if !generators.contains(&g) {
            push("printed", g, false)?;
        }
    }
    Ok(rows)
}

fn special_weights(a: &SpecialArgs) -> Result<String> {
    require_format(a.output.format, &[Format::Text, Format::Json, Format::Csv], "special-weights")?;
    let specs = match &a.family {
        Some(f) => vec![involution_from_flags(f, a.n, a.p, a.q)?],
        None => {
            if a.n.is_some() || a.p.is_some() || a.q.is_some() {
                return Err(Error::InvalidParams("--n/--p/--q need --family".into()));
            }
            InvolutionSpec::catalog(4)
        }
    };
    let mut all = Vec::new();
    for inv in &specs {
        if !check_positive_system(inv.root_system(), inv) {
            return Err(Error::InvariantViolation(format!("{}: positivity fails", inv.label())));
        }
        all.push((inv, special_rows(inv)?));
    }
    match a.output.format {
        Format::Json => {
            let rows: Vec<&SpecialRow> = all.iter().flat_map(|(_, r)| r).collect();
            to_json(&rows)
        }
        Format::Csv => {
            let mut s = String::from("instance,variety,kind,coefficients,weight,special,stable\n");
            for row in all.iter().flat_map(|(_, r)| r) {
                let stable = row.stable.map_or(String::new(), |b| b.to_string());
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{}",
                    row.instance,
                    row.variety,
                    row.kind,
                    coeff_text(&row.coefficients),
                    weight_text(&row.weight),
                    row.special,
                    stable
                );
            }
            Ok(s)
        }
        _ => {
            let mut s = String::new();
            for (inv, rows) in &all {
                let data = restricted_simple_roots(inv.root_system(), inv)?;
                let _ = writeln!(
                    s,
                    "{} {} rank {} restricted_rank {}",
                    inv.label(),
                    inv.variety(),
                    inv.root_system().rank(),
                    data.rank_l
                );
                let _ = writeln!(s, "  {:<12} {:<16} {:<8} stable", "kind", "coefficients", "special");
                for row in rows {
                    let stable = row.stable.map_or("-".to_string(), |b| b.to_string());
                    let _ = writeln!(
                        s,
                        "  {:<12} {:<16} {:<8} {}",
                        row.kind,
                        coeff_text(&row.coefficients),
                        row.special,
                        stable
                    );
                }
            }
            Ok(s)
        }
    }
}

fn polytope(a: &PolytopeArgs) -> Result<String> {
    require_format(a.output.format, &[Format::Text, Format::Json, Format::Off], "weight-polytope")?;
    let coeffs = parse_ints(&a.lambda)?;
    let (p, rs_label) = if let Ok(family) = a.family.parse::<Family>() {
        if a.p.is_some() || a.q.is_some() {
            return Err(Error::InvalidParams("a root system family takes only --n".into()));
        }
        let rank = a.n.ok_or_else(|| Error::InvalidParams("--n (rank) is required".into()))?;
        let rs = RootSystem::new(family, rank)?;
        let lambda = rs.weight_from_fundamental(&coeffs)?;
        (weight_polytope(&rs, &lambda, None)?, format!("{family}{rank}"))
    } else {
        let inv = involution_from_flags(&a.family, a.n, a.p, a.q)?;
        let rs = inv.root_system();
        let lambda = rs.weight_from_fundamental(&coeffs)?;
        (weight_polytope(rs, &lambda, Some(&inv))?, inv.label())
    };
    match a.output.format {
        Format::Json => to_json(&p),
        Format::Off => to_off(&p),
        _ => {
            let mut s = String::new();
            let _ = writeln!(s, "root_system {rs_label}");
            let _ = writeln!(s, "lambda {}", coeff_text(&coeffs));
            let _ = writeln!(s, "affine_dim {}", p.affine_dim());
            let _ = writeln!(s, "vertices {}", p.vertices().len());
            let _ = writeln!(s, "facets {}", p.facets().len());
            if let Ok(f) = f_vector(&p) {
                let _ = writeln!(s, "f_vector {}", f.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
            }
            for v in p.vertices() {
                let _ = writeln!(s, "vertex {}", weight_text(v));
            }
            Ok(s)
        }
    }
}

fn renner(a: &RennerArgs) -> Result<String> {
    require_format(a.output.format, &[Format::Text, Format::Json, Format::Dot], "renner")?;
    let elements = if a.symmetric { symmetric_rook_elements(a.n, a.fpf)? } else { enumerate_rook(a.n)? };
    match a.output.format {
        Format::Dot => Ok(hasse_dot(&elements, &hasse_covers(&elements, bruhat_leq))),
        Format::Json => {
            let covers = hasse_covers(&elements, bruhat_leq);
            let maps: Vec<&[usize]> = elements.iter().map(|e| e.map()).collect();
            to_json(&json!({ "n": a.n, "elements": maps, "bruhat_covers": covers }))
        }
        _ => {
            let mut s = String::new();
            if a.list {
                for e in &elements {
                    let _ = writeln!(s, "{}", e.diagram());
                }
                return Ok(s);
            }
            let _ = writeln!(s, "n {}", a.n);
            let _ = writeln!(s, "size {}", elements.len());
            if !a.symmetric {
                let _ = writeln!(s, "formula {}", rook_count(a.n));
                if a.n <= crate::renner::MAX_WEW_N {
                    let sizes: Vec<String> = w_e_w_decomposition(a.n)?.iter().map(|c| c.len().to_string()).collect();
                    let _ = writeln!(s, "wew_class_sizes {}", sizes.join(" "));
                }
            }
            Ok(s)
        }
    }
}

fn factor(a: &FactorArgs) -> Result<String> {
    require_format(a.output.format, &[Format::Text, Format::Json], "factor")?;
    let m = parse_matrix(&a.matrix, a.q)?;
    let f = bruhat_factor(&m);
    if f.product() != m || !f.satisfies_patterns() {
        return Err(Error::InvariantViolation(format!("factorization of {m} failed its checks")));
    }
    if a.output.format == Format::Json {
        return to_json(&f);
    }
    Ok(format!("m {m}\nu {}\nt {}\nr {}\nv {}\n", f.u, f.t, f.r.diagram(), f.v))
}

fn census(a: &CensusArgs) -> Result<String> {
    require_format(a.output.format, &[Format::Text, Format::Json, Format::Csv], "census")?;
    let form: SymForm = a.form.parse()?;
    let report = twisted_orbit_census(a.n, a.q, form)?;
    match a.output.format {
        Format::Json => to_json(&report),
        Format::Csv => Ok(format!("{}\n{}\n", SymOrbitReport::csv_header(), report.csv_row())),
        _ => {
            let mut s = String::new();
            let _ = writeln!(s, "form {} n {} q {}", report.form, report.n, report.q);
            let _ = writeln!(s, "orbit_count {}", report.orbit_count);
            let _ = writeln!(s, "invariant_values {}", report.invariant_values);
            let _ = writeln!(s, "parametrizers {}", report.expected_parametrizer_count);
            let _ = writeln!(s, "match {}", report.matches());
            for w in &report.witnesses {
                let nf = w.normal_form.as_ref().map_or("-".to_string(), ToString::to_string);
                let _ = writeln!(s, "orbit {} size {} parametrizer {} normal_form {}", w.label, w.size, w.parametrizer, nf);
            }
            Ok(s)
        }
    }
}

struct Check {
    name: String,
    ok: bool,
}

/// Ehresmann's tableau criterion for the Bruhat order on permutations in
/// one-line notation: sorted prefixes compare entrywise.
fn tableau_leq(v: &[usize], w: &[usize]) -> bool {
    (1..=v.len()).all(|k| {
        let (mut a, mut b) = (v[..k].to_vec(), w[..k].to_vec());
        a.sort_unstable();
        b.sort_unstable();
        a.iter().zip(&b).all(|(x, y)| x <= y)
    })
}

fn verify_checks() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let mut add = |name: String, ok: bool| checks.push(Check { name, ok });
    for n in 1..=4 {
        add(format!("rook_count n={n}"), enumerate_rook(n)?.len() as u128 == rook_count(n));
    }
    for (n, q) in [(2, 2), (2, 3), (3, 2)] {
        let space = enumerate_matrices(n, q)?;
        let orbits = orbit_enumerate(&space, &borel_pair_generators(n, q), two_sided_action, None)?;
        let index = orbits.orbit_index();
        let mut consistent = orbits.count() as u128 == rook_count(n);
        for orbit in &orbits.orbits {
            let r = bruhat_factor(&orbit[0]).r;
            consistent &= orbit.iter().all(|m| {
                let f = bruhat_factor(m);
                f.r == r && f.product() == *m && f.satisfies_patterns()
            });
        }
        let mut comps: Vec<_> = orbits.orbits.iter().map(|o| bruhat_factor(&o[0]).r).collect();
        comps.sort();
        comps.dedup();
        consistent &= comps.len() == orbits.count() && index.len() == space.len();
        add(format!("bruhat_decomposition n={n} q={q}"), consistent);
    }
    for n in 1..=4 {
        let perms: Vec<_> = enumerate_rook(n)?.into_iter().filter(|r| r.is_permutation()).collect();
        let ok = perms.iter().all(|v| perms.iter().all(|w| bruhat_leq(v, w) == tableau_leq(v.map(), w.map())));
        add(format!("permutation_bruhat_order n={n}"), ok);
    }
    let a3 = RootSystem::new(Family::A, 3)?;
    let cubo = weight_polytope(&a3, &a3.weight_from_fundamental(&[1, 0, 1])?, None)?;
    add("cuboctahedron_f_vector".into(), f_vector(&cubo)? == [12, 24, 14]);
    for inv in InvolutionSpec::catalog(4) {
        let rs = inv.root_system();
        let mut ok = check_positive_system(rs, &inv);
        for g in inv.generator_coefficients() {
            let w = rs.weight_from_fundamental(&g)?;
            ok &= is_special(&inv, &w)? && check_weight_set_stability(rs, &inv, &w)?;
        }
        add(format!("special_generators {}", inv.label()), ok);
    }
    for (n, q, form) in [(2, 3, SymForm::Sym), (3, 3, SymForm::Sym), (3, 3, SymForm::Skew)] {
        add(format!("census {form} n={n} q={q}"), twisted_orbit_census(n, q, form)?.matches());
    }
    for (n, q, form) in [(2, 3, SymForm::Sym), (3, 3, SymForm::Skew)] {
        add(format!("monomial_witnesses {form} n={n} q={q}"), verify_borel_meets_closure_n(n, q, form)?);
    }
    Ok(checks)
}

fn verify(a: &VerifyArgs) -> Result<String> {
    require_format(a.output.format, &[Format::Text, Format::Json], "verify")?;
    let checks = verify_checks()?;
    let failed: Vec<&str> = checks.iter().filter(|c| !c.ok).map(|c| c.name.as_str()).collect();
    if !failed.is_empty() {
        return Err(Error::InvariantViolation(format!("checks failed: {}", failed.join(", "))));
    }
    if a.output.format == Format::Json {
        let rows: Vec<_> = checks.iter().map(|c| json!({ "check": c.name, "ok": c.ok })).collect();
        return to_json(&rows);
    }
    Ok(checks.iter().map(|c| format!("ok {}\n", c.name)).collect())
}
