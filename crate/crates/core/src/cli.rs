//! The `fusionburnside` command line: argument parsing, input loading and
//! report rendering for every subcommand.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde_json::{json, Map, Value};

use crate::burnside::{
    format_combination, read_labelled_row, restrict_ambient, verify_ses_group, write_labelled_row,
    BurnsideElement,
};
use crate::catalog;
use crate::error::Error;
use crate::fusion::{fusion_from_group, FusionData, FusionSystem};
use crate::permgroup::{
    enumerate_subgroups_with, is_prime, p_part, parse_group_file, sylow_subgroup, Limits,
};
use crate::ses::{SesReport, DEFAULT_SEED};
use crate::stablesets::{alpha_basis, verify_ses_fusion};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Subcommand {
    /// Table of marks of the Sylow subgroup S.
    Marks,
    /// Conjugacy classes of subgroups of S.
    Classes,
    /// F-conjugacy classes with their fully normalized representatives.
    Fusion,
    /// The irreducible F-stable sets.
    Alpha,
    /// Decompose an F-stable element (see --element) into irreducibles.
    Decompose,
    /// Check both short exact sequences (group and fusion system).
    Verify,
    /// Walk through the S5 / D8 example.
    Demo,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputSource {
    File(PathBuf),
    Catalog(String),
}

/// Burnside rings of p-groups and of fusion systems of finite groups.
#[derive(Parser, Debug)]
#[command(name = "fusionburnside", version)]
pub struct Args {
    #[arg(value_enum)]
    pub subcommand: Subcommand,
    /// Group file: `degree n` then one generator per line.
    #[arg(long, conflicts_with = "catalog")]
    pub group: Option<PathBuf>,
    /// Built-in group by name (C2, C4, C2xC2, C8, D8, Q8, C2xC4, D16, S3, S4, S5, A4).
    #[arg(long)]
    pub catalog: Option<String>,
    #[arg(long)]
    pub prime: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Burnside element CSV for `decompose`.
    #[arg(long)]
    pub element: Option<PathBuf>,
    /// Also print representative element lists.
    #[arg(long)]
    pub verbose: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub subcommand: Subcommand,
    pub input: Option<InputSource>,
    pub prime: Option<u64>,
    pub format: Format,
    pub seed: u64,
    pub element: Option<PathBuf>,
    pub verbose: bool,
}

impl RunConfig {
    pub fn new(subcommand: Subcommand) -> Self {
        RunConfig {
            subcommand,
            input: None,
            prime: None,
            format: Format::Text,
            seed: DEFAULT_SEED,
            element: None,
            verbose: false,
        }
    }

    pub fn catalog(mut self, name: &str) -> Self {
        self.input = Some(InputSource::Catalog(name.to_string()));
        self
    }
}

impl From<Args> for RunConfig {
    fn from(a: Args) -> Self {
        let input = match (a.group, a.catalog) {
            (Some(path), _) => Some(InputSource::File(path)),
            (None, Some(name)) => Some(InputSource::Catalog(name)),
            (None, None) => None,
        };
        RunConfig {
            subcommand: a.subcommand,
            input,
            prime: a.prime,
            format: a.format,
            seed: a.seed,
            element: a.element,
            verbose: a.verbose,
        }
    }
}

/// Exit status plus everything the run printed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    /// Malformed input; exit 2.
    Input(String),
    /// A library error or a failed check; exit 1.
    Module(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Module(e.to_string())
    }
}

fn input_error(e: Error) -> Failure {
    Failure::Input(e.to_string())
}

pub fn run(config: &RunConfig) -> Outcome {
    let mut out = String::new();
    let result = match config.subcommand {
        Subcommand::Demo => demo(&mut out),
        _ => load(config).and_then(|ctx| dispatch(config, &ctx, &mut out)),
    };
    match result {
        Ok(true) => Outcome {
            status: 0,
            stdout: out,
            stderr: String::new(),
        },
        Ok(false) => Outcome {
            status: 1,
            stdout: out,
            stderr: String::new(),
        },
        Err(Failure::Module(m)) => Outcome {
            status: 1,
            stdout: out,
            stderr: format!("error: {}\n", m),
        },
        Err(Failure::Input(m)) => Outcome {
            status: 2,
            stdout: out,
            stderr: format!("error: {}\n", m),
        },
    }
}

struct Context {
    name: String,
    fusion: FusionData,
}

fn load(config: &RunConfig) -> Result<Context, Failure> {
    let (group, name, default_prime) = match &config.input {
        None => {
            return Err(Failure::Input(
                "one of --group or --catalog is required".into(),
            ))
        }
        Some(InputSource::Catalog(name)) => {
            let entry = catalog::lookup(name).map_err(input_error)?;
            (
                entry.build()?,
                entry.name.to_string(),
                Some(entry.default_prime()),
            )
        }
        Some(InputSource::File(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("cannot read {}: {}", path.display(), e)))?;
            let spec = parse_group_file(&text).map_err(input_error)?;
            let group = spec.build().map_err(|e| match e {
                Error::Input(_) => input_error(e),
                other => other.into(),
            })?;
            (group, "G".to_string(), None)
        }
    };
    let prime = match config
        .prime
        .or(default_prime)
        .or_else(|| prime_power_base(group.order() as u64))
    {
        Some(p) if is_prime(p) => p,
        Some(p) => return Err(Failure::Input(format!("{} is not prime", p))),
        None => {
            return Err(Failure::Input(
                "--prime is required when the group is not a p-group".into(),
            ))
        }
    };
    let fusion = fusion_from_group(&group, prime)?;
    let name = if fusion.sylow().order() == group.order() {
        name
    } else {
        "S".to_string()
    };
    Ok(Context { name, fusion })
}

fn prime_power_base(n: u64) -> Option<u64> {
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    (p_part(n, p) == n).then_some(p)
}

fn dispatch(config: &RunConfig, ctx: &Context, out: &mut String) -> Result<bool, Failure> {
    match config.subcommand {
        Subcommand::Classes => classes(config, ctx, out),
        Subcommand::Marks => marks(config, ctx, out),
        Subcommand::Fusion => fusion(config, ctx, out),
        Subcommand::Alpha => alpha(config, ctx, out),
        Subcommand::Decompose => decompose(config, ctx, out),
        Subcommand::Verify => verify(config, ctx, out),
        Subcommand::Demo => unreachable!("handled in run"),
    }
}

fn csv_text(rows: &[Vec<String>]) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.write_record(r)
            .map_err(|e| Failure::Module(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Module(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Failure::Module(e.to_string()))
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn representative_text(ctx: &Context, class: usize) -> String {
    let ring = ctx.fusion.ring();
    let s = ring.group();
    ring.table()
        .representative(class)
        .elements()
        .iter()
        .map(|&x| s.element(x).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn classes(config: &RunConfig, ctx: &Context, out: &mut String) -> Result<bool, Failure> {
    let ring = ctx.fusion.ring();
    let t = ring.table();
    let mut rows = vec![vec![
        "label".to_string(),
        "order".into(),
        "class_size".into(),
        "normalizer_order".into(),
        "weyl_order".into(),
    ]];
    if config.verbose {
        rows[0].push("representative".into());
    }
    for (i, c) in t.classes().iter().enumerate() {
        let mut row = vec![
            c.label.clone(),
            c.order.to_string(),
            c.members.len().to_string(),
            c.normalizer_order.to_string(),
            c.weyl_order().to_string(),
        ];
        if config.verbose {
            row.push(representative_text(ctx, i));
        }
        rows.push(row);
    }
    match config.format {
        Format::Csv => out.push_str(&csv_text(&rows)?),
        Format::Json => {
            let mut obj = Map::new();
            for row in &rows[1..] {
                let mut entry = Map::new();
                for (k, v) in rows[0].iter().zip(row).skip(1) {
                    let value = v
                        .parse::<i64>()
                        .map(Value::from)
                        .unwrap_or_else(|_| Value::from(v.clone()));
                    entry.insert(k.clone(), value);
                }
                obj.insert(row[0].clone(), Value::Object(entry));
            }
            out.push_str(&json_text(&Value::Object(obj)));
        }
        Format::Text => {
            let _ = writeln!(
                out,
                "{}: order {}, {} subgroups in {} conjugacy classes",
                ctx.name,
                ring.group().order(),
                t.subgroup_count(),
                t.len()
            );
            let _ = writeln!(
                out,
                "{:<8} {:>6} {:>6} {:>8} {:>8}",
                "class", "order", "size", "|N_S P|", "|W_S P|"
            );
            for row in &rows[1..] {
                let _ = writeln!(
                    out,
                    "{:<8} {:>6} {:>6} {:>8} {:>8}",
                    row[0], row[1], row[2], row[3], row[4]
                );
                if config.verbose {
                    let _ = writeln!(out, "         {{{}}}", row[5]);
                }
            }
        }
    }
    Ok(true)
}

fn marks(config: &RunConfig, ctx: &Context, out: &mut String) -> Result<bool, Failure> {
    let ring = ctx.fusion.ring();
    let labels = ring.table().labels();
    let m = ring.mark_matrix();
    match config.format {
        Format::Csv => {
            let mut rows = vec![std::iter::once("class".to_string())
                .chain(labels.iter().map(|l| l.to_string()))
                .collect::<Vec<_>>()];
            for (q, row) in m.rows().iter().enumerate() {
                rows.push(
                    std::iter::once(labels[q].to_string())
                        .chain(row.iter().map(|v| v.to_string()))
                        .collect(),
                );
            }
            out.push_str(&csv_text(&rows)?);
        }
        Format::Json => {
            let mut obj = Map::new();
            for (q, row) in m.rows().iter().enumerate() {
                let entry: Map<String, Value> = labels
                    .iter()
                    .zip(row)
                    .map(|(l, &v)| (l.to_string(), Value::from(v)))
                    .collect();
                obj.insert(labels[q].to_string(), Value::Object(entry));
            }
            out.push_str(&json_text(&Value::Object(obj)));
        }
        Format::Text => {
            let _ = writeln!(
                out,
                "Table of marks of {} (order {}): row Q, column P holds |(S/P)^Q|",
                ctx.name,
                ring.group().order()
            );
            let width = labels.iter().map(|l| l.len()).max().unwrap_or(1).max(3) + 1;
            let _ = write!(out, "{:<width$}", "");
            for l in &labels {
                let _ = write!(out, "{:>width$}", l);
            }
            out.push('\n');
            for (q, row) in m.rows().iter().enumerate() {
                let _ = write!(out, "{:<width$}", labels[q]);
                for &v in row {
                    if v == 0 {
                        let _ = write!(out, "{:>width$}", ".");
                    } else {
                        let _ = write!(out, "{:>width$}", v);
                    }
                }
                out.push('\n');
            }
        }
    }
    Ok(true)
}

fn fusion(config: &RunConfig, ctx: &Context, out: &mut String) -> Result<bool, Failure> {
    let f = &ctx.fusion;
    let ring = f.ring();
    let starred = |fc: usize| -> Vec<String> {
        f.fusion_classes()[fc]
            .iter()
            .map(|&m| {
                if m == f.fully_normalized(fc) {
                    format!("{}*", ring.label(m))
                } else {
                    ring.label(m).to_string()
                }
            })
            .collect()
    };
    match config.format {
        Format::Csv => {
            let mut rows = vec![vec![
                "fclass".to_string(),
                "members".into(),
                "representative".into(),
            ]];
            for fc in 0..f.num_fusion_classes() {
                rows.push(vec![
                    f.fusion_label(fc),
                    starred(fc).join(" "),
                    ring.label(f.fully_normalized(fc)).to_string(),
                ]);
            }
            out.push_str(&csv_text(&rows)?);
        }
        Format::Json => {
            let mut obj = Map::new();
            for fc in 0..f.num_fusion_classes() {
                let members: Vec<&str> = f.fusion_classes()[fc]
                    .iter()
                    .map(|&m| ring.label(m))
                    .collect();
                obj.insert(
                    f.fusion_label(fc),
                    json!({ "members": members, "representative": ring.label(f.fully_normalized(fc)) }),
                );
            }
            out.push_str(&json_text(&Value::Object(obj)));
        }
        Format::Text => {
            let _ = writeln!(
                out,
                "F_S(G) with |G| = {}, p = {}, |S| = {}: {} S-classes in {} F-classes (* = fully normalized representative)",
                f.ambient().order(),
                f.prime(),
                ring.group().order(),
                ring.len(),
                f.num_fusion_classes()
            );
            for fc in 0..f.num_fusion_classes() {
                let _ = writeln!(out, "{}: {}", f.fusion_label(fc), starred(fc).join(" "));
                if config.verbose {
                    let rep = f.fully_normalized(fc);
                    let target = ring.table().representative(rep);
                    for &m in f.fusion_classes()[fc].iter().filter(|&&m| m != rep) {
                        let w = f.normalizer_lift(ring.table().representative(m), target)?;
                        let _ = writeln!(
                            out,
                            "    {} -> {} via {}",
                            ring.label(m),
                            ring.label(rep),
                            w.element
                        );
                    }
                }
            }
        }
    }
    Ok(true)
}

fn alpha(config: &RunConfig, ctx: &Context, out: &mut String) -> Result<bool, Failure> {
    let f = &ctx.fusion;
    let ring = f.ring();
    let basis = alpha_basis(f)?;
    let labels = ring.table().labels();
    match config.format {
        Format::Csv => {
            let mut rows = vec![["fclass", "representative"]
                .iter()
                .map(|s| s.to_string())
                .chain(labels.iter().map(|l| l.to_string()))
                .collect::<Vec<_>>()];
            for fc in 0..basis.len() {
                rows.push(
                    [
                        f.fusion_label(fc),
                        ring.label(f.fully_normalized(fc)).to_string(),
                    ]
                    .into_iter()
                    .chain(basis.alpha(fc).coeffs().iter().map(|c| c.to_string()))
                    .collect(),
                );
            }
            out.push_str(&csv_text(&rows)?);
        }
        Format::Json => {
            let mut obj = Map::new();
            for fc in 0..basis.len() {
                let coeffs: Map<String, Value> = labels
                    .iter()
                    .zip(basis.alpha(fc).coeffs())
                    .map(|(l, &c)| (l.to_string(), Value::from(c)))
                    .collect();
                obj.insert(
                    f.fusion_label(fc),
                    json!({ "representative": ring.label(f.fully_normalized(fc)), "coefficients": coeffs }),
                );
            }
            out.push_str(&json_text(&Value::Object(obj)));
        }
        Format::Text => {
            let _ = writeln!(
                out,
                "Irreducible F-stable sets over {} ({} F-classes):",
                ctx.name,
                basis.len()
            );
            for fc in 0..basis.len() {
                let _ = writeln!(
                    out,
                    "alpha{} = {}",
                    f.fusion_label(fc),
                    ring.format_element(basis.alpha(fc), &ctx.name)
                );
            }
        }
    }
    Ok(true)
}

fn decompose(config: &RunConfig, ctx: &Context, out: &mut String) -> Result<bool, Failure> {
    let f = &ctx.fusion;
    let ring = f.ring();
    let path = config
        .element
        .as_ref()
        .ok_or_else(|| Failure::Input("decompose needs --element FILE".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {}", path.display(), e)))?;
    let labels = ring.table().labels();
    let x = BurnsideElement::new(read_labelled_row(&text, &labels).map_err(input_error)?);
    let basis = alpha_basis(f)?;
    let lambdas = match basis.decompose(&x, f) {
        Ok(l) => l,
        Err(Error::NotStable {
            first,
            first_mark,
            second,
            second_mark,
        }) => {
            let fc = f.fusion_class_of(ring.table().find_label(&first).expect("label from table"));
            return Err(Failure::Module(format!(
                "element is not F-stable: in F-class {} the marks differ, {} has {} fixed points but {} has {}",
                f.fusion_label(fc),
                first,
                first_mark,
                second,
                second_mark
            )));
        }
        Err(e) => return Err(e.into()),
    };
    let flabels: Vec<String> = (0..f.num_fusion_classes())
        .map(|fc| f.fusion_label(fc))
        .collect();
    match config.format {
        Format::Csv => out.push_str(&write_labelled_row(&flabels, &lambdas)?),
        Format::Json => {
            let obj: Map<String, Value> = flabels
                .iter()
                .zip(&lambdas)
                .map(|(l, &v)| (l.clone(), Value::from(v)))
                .collect();
            out.push_str(&json_text(&Value::Object(obj)));
        }
        Format::Text => {
            let _ = writeln!(out, "X = {}", ring.format_element(&x, &ctx.name));
            let _ = writeln!(
                out,
                "  = {}",
                format_combination(&lambdas, |fc| format!("alpha{}", flabels[fc]))
            );
        }
    }
    Ok(true)
}

fn report_json(r: &SesReport) -> Value {
    let checks: Map<String, Value> = r
        .checks
        .iter()
        .map(|c| {
            (
                c.name.to_string(),
                json!({ "passed": c.passed, "detail": c.detail, "witness": c.witness }),
            )
        })
        .collect();
    json!({
        "title": r.title,
        "passed": r.passed(),
        "obstruction_order": r.obstruction_order,
        "checks": checks,
    })
}

fn verify(config: &RunConfig, ctx: &Context, out: &mut String) -> Result<bool, Failure> {
    let f = &ctx.fusion;
    let group_report = verify_ses_group(f.ring().group(), config.seed)?;
    let fusion_report = verify_ses_fusion(f, config.seed)?;
    let reports = [("group", &group_report), ("fusion", &fusion_report)];
    match config.format {
        Format::Csv => {
            let mut rows = vec![vec![
                "sequence".to_string(),
                "check".into(),
                "passed".into(),
                "detail".into(),
            ]];
            for (name, r) in reports {
                for c in &r.checks {
                    rows.push(vec![
                        name.to_string(),
                        c.name.to_string(),
                        c.passed.to_string(),
                        c.detail.clone(),
                    ]);
                }
            }
            out.push_str(&csv_text(&rows)?);
        }
        Format::Json => {
            let obj: Map<String, Value> = reports
                .iter()
                .map(|(name, r)| (name.to_string(), report_json(r)))
                .collect();
            out.push_str(&json_text(&Value::Object(obj)));
        }
        Format::Text => {
            for (_, r) in reports {
                let _ = write!(out, "{}", r);
            }
        }
    }
    Ok(group_report.passed() && fusion_report.passed())
}

/// The S5 / D8 walkthrough. Returns `Ok(true)` iff every expected number
/// matches.
fn demo(out: &mut String) -> Result<bool, Failure> {
    let s5 = catalog::lookup("S5")?.build()?;
    let f = fusion_from_group(&s5, 2)?;
    let ring = f.ring();
    let trivial = ring.table().trivial_class();
    let name = |c: usize| {
        if c == trivial {
            "[D8/1]".to_string()
        } else {
            format!("[D8/{}]", ring.label(c))
        }
    };
    let mut all_ok = true;
    let mut check = |out: &mut String, ok: bool, line: String| {
        all_ok &= ok;
        let _ = writeln!(
            out,
            "{} {}",
            if ok { "[ok]      " } else { "[MISMATCH]" },
            line
        );
    };

    let _ = writeln!(out, "G = S5 (order {}), p = 2", s5.order());
    let s = f.sylow();
    check(
        out,
        s.order() == 8,
        format!("Sylow 2-subgroup S = D8 has order {}", s.order()),
    );
    let h = sylow_subgroup(&s5, 3)?;
    let k = sylow_subgroup(&s5, 5)?;
    let free = |n: i64| ring.transitive(trivial).checked_scale(n);

    let res_h = restrict_ambient(&s5, &h, s, ring)?;
    check(
        out,
        res_h == free(5)?,
        format!(
            "[S5/H] (H Sylow-3, {} points) restricts to {}",
            s5.order() / h.order(),
            format_combination(res_h.coeffs(), name)
        ),
    );
    let res_k = restrict_ambient(&s5, &k, s, ring)?;
    check(
        out,
        res_k == free(3)?,
        format!(
            "[S5/K] (K Sylow-5, {} points) restricts to {}",
            s5.order() / k.order(),
            format_combination(res_k.coeffs(), name)
        ),
    );
    let three_h = res_h.checked_scale(3)?;
    let five_k = res_k.checked_scale(5)?;
    check(
        out,
        three_h == five_k && three_h == free(15)?,
        format!(
            "3·[S5/H] restricts to {} and 5·[S5/K] restricts to {}",
            format_combination(three_h.coeffs(), name),
            format_combination(five_k.coeffs(), name)
        ),
    );

    let limits = Limits {
        max_enumeration_order: s5.order(),
        ..Limits::default()
    };
    let subgroups = enumerate_subgroups_with(&s5, &limits)?;
    let mut orders: Vec<usize> = subgroups.iter().map(|g| g.order()).collect();
    orders.sort_unstable();
    orders.dedup();
    check(
        out,
        !orders.contains(&(s5.order() / 8)),
        format!(
            "S5 has {} subgroups with orders {:?}: none of index 8, so no transitive S5-set has 8 points",
            subgroups.len(),
            orders
        ),
    );

    let free_marks = ring.mark(&free(1)?)?;
    let stable = crate::stablesets::is_f_stable(&free(1)?, &f)?;
    check(
        out,
        stable && free_marks.mark(trivial) == 8 && (0..trivial).all(|c| free_marks.mark(c) == 0),
        format!(
            "[D8/1] is F-stable with marks {:?} but is not the restriction of an S5-set",
            free_marks.marks()
        ),
    );

    let _ = writeln!(out, "F-classes of F_D8(S5) (* = fully normalized):");
    for fc in 0..f.num_fusion_classes() {
        let members: Vec<String> = f.fusion_classes()[fc]
            .iter()
            .map(|&m| {
                if m == f.fully_normalized(fc) {
                    format!("{}*", ring.label(m))
                } else {
                    ring.label(m).to_string()
                }
            })
            .collect();
        let _ = writeln!(out, "  {}: {}", f.fusion_label(fc), members.join(" "));
    }
    check(
        out,
        f.num_fusion_classes() == 7,
        format!(
            "{} F-classes over {} S-classes",
            f.num_fusion_classes(),
            ring.len()
        ),
    );

    let basis = alpha_basis(&f)?;
    let _ = writeln!(out, "Irreducible F-stable sets:");
    for fc in 0..basis.len() {
        let _ = writeln!(
            out,
            "  alpha{} = {}",
            f.fusion_label(fc),
            format_combination(basis.alpha(fc).coeffs(), name)
        );
    }
    let fused = (0..f.num_fusion_classes()).find(|&fc| f.fusion_classes()[fc].len() > 1);
    if let Some(fc) = fused {
        let z = f.fully_normalized(fc);
        let other = f.fusion_classes()[fc]
            .iter()
            .copied()
            .find(|&m| m != z)
            .expect("fused class");
        let expected = ring.transitive(z).add_scaled(2, &ring.transitive(other))?;
        let marks = ring.mark(basis.alpha(fc))?;
        check(
            out,
            basis.alpha(fc) == &expected && marks.mark(z) == 4 && marks.mark(other) == 4,
            format!(
                "alpha of the fused class is {} with common mark {} on {} and {}",
                format_combination(basis.alpha(fc).coeffs(), name),
                marks.mark(z),
                ring.label(z),
                ring.label(other)
            ),
        );
    } else {
        check(out, false, "no fused F-class found".into());
    }

    let lambdas = basis.decompose(&three_h, &f)?;
    let trivial_f = f.fusion_class_of(trivial);
    let expected: Vec<i64> = (0..basis.len())
        .map(|fc| if fc == trivial_f { 15 } else { 0 })
        .collect();
    check(
        out,
        lambdas == expected,
        format!(
            "both restrictions decompose as {}",
            format_combination(&lambdas, |fc| format!("alpha{}", f.fusion_label(fc)))
        ),
    );
    Ok(all_ok)
}
