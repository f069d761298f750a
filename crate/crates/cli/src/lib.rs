//! The `rometric` command line.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;

use rometric_core::generalized::{
    check_generalized_axioms, generalized_topology, sierpinski_embed_ordered, universal_generalized_metrization,
    CoordinateOrder, MapFamily,
};
use rometric_core::ground::GroundSet;
use rometric_core::json::{self, MetricDoc, SpaceDoc, TopologyDoc};
use rometric_core::line::{check_line_axioms, line_ball, LineMetric};
use rometric_core::metric::{check_rometric_axioms, classify_axioms, generated_topology, ROMetric};
use rometric_core::metrization::{
    builtin_example, lift_from_quotient, metrize_finite, verify_metrization, ExampleSpec,
};
use rometric_core::oracle::{
    brute_force_metrize, cross_check_suite, enumerate_topologies, SearchBudget, SearchOutcome,
};
use rometric_core::{rational, Error, FiniteTopology, Rational, RawDistanceMatrix};

pub mod report;

use report::*;

#[derive(Parser)]
#[command(name = "rometric", version, about = "Check and build R.O-metrics on finite spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check the topology axioms for a family of sets.
    ValidateTopology {
        #[arg(long)]
        topology: PathBuf,
    },
    /// Check the R.O-metric axioms for a matrix.
    ValidateMetric {
        #[arg(long)]
        metric: PathBuf,
    },
    /// Report which distance axiom systems a matrix satisfies.
    Classify {
        #[arg(long)]
        metric: PathBuf,
    },
    /// The topology generated by the balls of a metric.
    Topology {
        #[arg(long)]
        metric: PathBuf,
    },
    /// A two-valued metric generating a topology.
    Metrize {
        #[arg(long)]
        topology: PathBuf,
    },
    /// Does the metric generate exactly the topology?
    Verify {
        #[arg(long)]
        topology: PathBuf,
        #[arg(long)]
        metric: PathBuf,
    },
    /// Kolmogorov quotient.
    Quotient {
        #[arg(long)]
        topology: PathBuf,
    },
    /// Lift a metric on the Kolmogorov quotient (default: a metrization of it).
    Lift {
        #[arg(long)]
        topology: PathBuf,
        #[arg(long)]
        metric: Option<PathBuf>,
    },
    /// A built-in example: three_point, particular_set, paired_cofinite, sierpinski.
    Example {
        name: String,
        /// Comma-separated point labels.
        #[arg(long)]
        points: Option<String>,
        /// Comma-separated labels of the distinguished subset (particular_set).
        #[arg(long)]
        subset: Option<String>,
    },
    /// Check the generalized axiom for a metric with a map family.
    Gcheck {
        #[arg(long)]
        space: PathBuf,
    },
    /// The topology generated by generalized balls.
    Gtopology {
        #[arg(long)]
        space: PathBuf,
    },
    /// Embed a T0 topology into a product of Sierpinski spaces.
    Embed {
        #[arg(long)]
        topology: PathBuf,
        /// Index the coordinates in reverse canonical order.
        #[arg(long)]
        reversed: bool,
    },
    /// A generalized space whose topology is the input.
    Universal {
        #[arg(long)]
        topology: PathBuf,
    },
    /// All labeled topologies on n ≤ 4 points.
    Census { n: usize },
    /// Brute-force search for a metric over a finite value set.
    Search {
        #[arg(required_unless_present = "topology")]
        input: Option<PathBuf>,
        #[arg(long, conflicts_with = "input")]
        topology: Option<PathBuf>,
        /// Comma-separated candidate values; must include 0.
        #[arg(long, default_value = "0,1", allow_hyphen_values = true)]
        values: String,
        /// Maximum number of candidates to examine.
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
    },
    /// Run the structural checks over the census on n points.
    Crosscheck { n: usize },
    /// Balls and axiom checks for metrics on the rational line.
    Line {
        #[command(subcommand)]
        command: LineCommand,
    },
}

#[derive(Subcommand)]
enum LineCommand {
    /// Exact ball of a line metric.
    Ball {
        metric: String,
        #[arg(allow_hyphen_values = true)]
        center: String,
        #[arg(allow_hyphen_values = true)]
        radius: String,
    },
    /// Axiom check over a finite sample of points.
    Check {
        metric: String,
        #[arg(long, allow_hyphen_values = true)]
        values: String,
    },
}

/// What a command prints.
struct Output {
    success: bool,
    json: String,
    text: String,
}

fn output<T: Serialize>(success: bool, report: &T, text: String) -> Output {
    Output {
        success,
        json: json::render(report),
        text,
    }
}

enum Failure {
    /// Bad input: printed on stderr, exit 2.
    Usage(String),
    /// The checked property is false: report on stdout, exit 1.
    Check(Output),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::BadRational(_)
            | Error::NotSquare { .. }
            | Error::UnknownPoint(_)
            | Error::DuplicateLabel(_)
            | Error::GroundTooLarge(_)
            | Error::GroundMismatch
            | Error::Budget(_) => Failure::Usage(e.to_string()),
            other => {
                let witnesses = error_witnesses(&other);
                let report = FailureReport {
                    ok: false,
                    error: other.to_string(),
                    witnesses,
                };
                let text = text_with_witnesses(format!("failed: {}", report.error), &report.witnesses);
                Failure::Check(output(false, &report, text))
            }
        }
    }
}

/// Witnesses for errors that carry no ground set; points are indices.
fn error_witnesses(e: &Error) -> Vec<Witness> {
    match e {
        Error::NotT0 { first, second } => vec![Witness {
            kind: "inseparable".to_string(),
            points: vec![first.clone(), second.clone()],
            message: format!("`{first}` and `{second}` lie in the same open sets"),
            ..Default::default()
        }],
        Error::RoAxioms(vs) => vs
            .iter()
            .map(|v| Witness::note("violation", format!("{v:?}")))
            .collect(),
        _ => vec![],
    }
}

type Outcome = Result<Output, Failure>;

fn read_doc<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    json::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_topology(path: &Path) -> Result<FiniteTopology, Failure> {
    let doc: TopologyDoc = read_doc(path)?;
    let (ground, family) = doc.family()?;
    FiniteTopology::validate(ground.clone(), &family).map_err(|e| invalid_topology(e, &ground))
}

fn invalid_topology(e: Error, ground: &GroundSet) -> Failure {
    match e {
        Error::InvalidTopology { message, violation } => {
            let report = FailureReport {
                ok: false,
                error: format!("not a topology: {message}"),
                witnesses: vec![Witness::from_topology_violation(&violation, ground)],
            };
            let text = text_with_witnesses(report.error.clone(), &report.witnesses);
            Failure::Check(output(false, &report, text))
        }
        other => other.into(),
    }
}

fn load_matrix(path: &Path) -> Result<RawDistanceMatrix, Failure> {
    let doc: MetricDoc = read_doc(path)?;
    Ok(doc.to_matrix()?)
}

fn load_metric(path: &Path) -> Result<ROMetric, Failure> {
    let raw = load_matrix(path)?;
    let ground = raw.ground().clone();
    check_rometric_axioms(raw).map_err(|e| not_ro(e, &ground))
}

fn not_ro(e: Error, ground: &GroundSet) -> Failure {
    match e {
        Error::RoAxioms(violations) => {
            let witnesses: Vec<Witness> = violations.iter().map(|v| Witness::from_violation(v, ground)).collect();
            let report = FailureReport {
                ok: false,
                error: format!("not an R.O-metric: {} violation(s)", witnesses.len()),
                witnesses,
            };
            let text = text_with_witnesses(report.error.clone(), &report.witnesses);
            Failure::Check(output(false, &report, text))
        }
        other => other.into(),
    }
}

fn load_space(path: &Path) -> Result<(ROMetric, MapFamily), Failure> {
    let doc: SpaceDoc = read_doc(path)?;
    let (raw, family) = doc.to_parts()?;
    let ground = raw.ground().clone();
    let metric = check_rometric_axioms(raw).map_err(|e| not_ro(e, &ground))?;
    Ok((metric, family))
}

fn parse_list(text: &str) -> Result<Vec<Rational>, Failure> {
    Ok(text
        .split(',')
        .map(|v| rational::parse(v.trim()))
        .collect::<Result<_, _>>()?)
}

fn labels(text: &str) -> Vec<String> {
    text.split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

fn text_with_witnesses(head: String, witnesses: &[Witness]) -> String {
    let mut out = head;
    for w in witnesses {
        out.push_str(&format!("\n  - [{}] {}", w.kind, w.message));
    }
    out
}

fn matrix_text(m: &RawDistanceMatrix) -> String {
    m.to_string().trim_end().to_string()
}

fn validate_topology(path: &Path) -> Outcome {
    let doc: TopologyDoc = read_doc(path)?;
    let (ground, family) = doc.family()?;
    match FiniteTopology::validate(ground.clone(), &family) {
        Ok(t) => {
            let report = ValidationReport {
                valid: true,
                witnesses: vec![],
            };
            Ok(output(
                true,
                &report,
                format!("valid topology with {} open sets", t.opens().len()),
            ))
        }
        Err(Error::InvalidTopology { message, violation }) => {
            let report = ValidationReport {
                valid: false,
                witnesses: vec![Witness::from_topology_violation(&violation, &ground)],
            };
            let text = text_with_witnesses(format!("not a topology: {message}"), &report.witnesses);
            Ok(output(false, &report, text))
        }
        Err(e) => Err(e.into()),
    }
}

fn validate_metric(path: &Path) -> Outcome {
    let raw = load_matrix(path)?;
    let ground = raw.ground().clone();
    match check_rometric_axioms(raw) {
        Ok(_) => Ok(output(
            true,
            &ValidationReport {
                valid: true,
                witnesses: vec![],
            },
            "valid R.O-metric".to_string(),
        )),
        Err(Error::RoAxioms(violations)) => {
            let witnesses: Vec<Witness> = violations.iter().map(|v| Witness::from_violation(v, &ground)).collect();
            let text = text_with_witnesses(
                format!("not an R.O-metric: {} violation(s)", witnesses.len()),
                &witnesses,
            );
            Ok(output(
                false,
                &ValidationReport {
                    valid: false,
                    witnesses,
                },
                text,
            ))
        }
        Err(e) => Err(e.into()),
    }
}

fn classify(path: &Path) -> Outcome {
    let raw = load_matrix(path)?;
    let ground = raw.ground().clone();
    let profile = classify_axioms(&raw).map_err(|e| not_ro(e, &ground))?;
    let report = ProfileReport {
        ro: profile.is_ro,
        quasi_pseudo: profile.is_quasi_pseudo,
        pseudo: profile.is_pseudo,
        quasi: profile.is_quasi,
        t0_quasi: profile.is_t0_quasi,
        metric: profile.is_metric,
        witnesses: profile
            .witnesses
            .iter()
            .map(|w| Witness::from_axiom(w, &ground))
            .collect(),
    };
    let head = format!(
        "ro: {}\nquasi_pseudo: {}\npseudo: {}\nquasi: {}\nt0_quasi: {}\nmetric: {}",
        report.ro, report.quasi_pseudo, report.pseudo, report.quasi, report.t0_quasi, report.metric
    );
    let text = text_with_witnesses(head, &report.witnesses);
    Ok(output(true, &report, text))
}

fn topology_from_metric(path: &Path) -> Outcome {
    let metric = load_metric(path)?;
    let t = generated_topology(&metric);
    Ok(output(
        true,
        &TopologyReport::new(TopologyDoc::from_topology(&t)),
        t.to_string(),
    ))
}

fn metrize(path: &Path) -> Outcome {
    let t = load_topology(path)?;
    let m = metrize_finite(&t)?;
    Ok(output(
        true,
        &MetricReport::new(MetricDoc::from_matrix(m.raw())),
        matrix_text(m.raw()),
    ))
}

fn verify(topology: &Path, metric: &Path) -> Outcome {
    let t = load_topology(topology)?;
    let raw = load_matrix(metric)?;
    let check = verify_metrization(&t, &raw)?;
    let ground = t.ground();
    let mut witnesses: Vec<Witness> = check
        .violations
        .iter()
        .map(|v| Witness::from_violation(v, ground))
        .collect();
    witnesses.extend(
        check
            .missing
            .iter()
            .map(|s| Witness::open_set("missing_open", *s, ground)),
    );
    witnesses.extend(check.extra.iter().map(|s| Witness::open_set("extra_open", *s, ground)));
    let head = if check.holds() {
        "the metric generates the topology".to_string()
    } else {
        "the metric does not generate the topology".to_string()
    };
    let text = text_with_witnesses(head, &witnesses);
    Ok(output(
        check.holds(),
        &VerifyReport {
            holds: check.holds(),
            witnesses,
        },
        text,
    ))
}

fn quotient(path: &Path) -> Outcome {
    let t = load_topology(path)?;
    let q = t.kolmogorov_quotient();
    let classes: Vec<Vec<String>> = q.classes.iter().map(|c| t.ground().names(*c)).collect();
    let report = QuotientReport {
        classes: classes.clone(),
        quotient: TopologyDoc::from_topology(&q.quotient),
        is_t0: q.quotient.is_t0(),
        witnesses: vec![],
    };
    let listed: Vec<String> = classes.iter().map(|c| format!("{{{}}}", c.join(", "))).collect();
    let text = format!("classes: {}\nquotient: {}", listed.join(" "), q.quotient);
    Ok(output(true, &report, text))
}

fn lift(topology: &Path, metric: Option<&Path>) -> Outcome {
    let t = load_topology(topology)?;
    let q = t.kolmogorov_quotient();
    let dq = match metric {
        Some(path) => {
            let m = load_metric(path)?;
            if m.ground() != q.quotient.ground() {
                return Err(Error::GroundMismatch.into());
            }
            m
        }
        None => metrize_finite(&q.quotient)?,
    };
    let lifted = lift_from_quotient(&t, &q, &dq)?;
    Ok(output(
        true,
        &MetricReport::new(MetricDoc::from_matrix(lifted.raw())),
        matrix_text(lifted.raw()),
    ))
}

fn example(name: &str, points: Option<&str>, subset: Option<&str>) -> Outcome {
    let mut spec = ExampleSpec::by_name(name).map_err(|e| Failure::Usage(e.to_string()))?;
    match &mut spec {
        ExampleSpec::ParticularSet { points: p, subset: s } => {
            if let Some(text) = points {
                *p = labels(text);
            }
            if let Some(text) = subset {
                *s = labels(text);
            }
        }
        ExampleSpec::PairedCofinite { points: p } => {
            if let Some(text) = points {
                *p = labels(text);
            }
        }
        _ if points.is_some() || subset.is_some() => {
            return Err(Failure::Usage(format!("example `{name}` takes no parameters")));
        }
        _ => {}
    }
    let (t, m) = builtin_example(&spec)?;
    let report = ExampleReport {
        name: spec.name().to_string(),
        topology: TopologyDoc::from_topology(&t),
        metric: MetricDoc::from_matrix(m.raw()),
        witnesses: vec![],
    };
    let text = format!("{}\ntopology: {}\nmetric:\n{}", spec.name(), t, matrix_text(m.raw()));
    Ok(output(true, &report, text))
}

fn gcheck(path: &Path) -> Outcome {
    let (metric, family) = load_space(path)?;
    match check_generalized_axioms(&metric, &family) {
        Ok(_) => Ok(output(
            true,
            &GeneralizedReport {
                generalized: true,
                witnesses: vec![],
            },
            "generalized R.O-metric space".to_string(),
        )),
        Err(Error::GeneralizedAxiom(w)) => {
            let witnesses = vec![Witness::from_generalized(&w, metric.ground())];
            let text = text_with_witnesses("the generalized balls are not a basis".to_string(), &witnesses);
            Ok(output(
                false,
                &GeneralizedReport {
                    generalized: false,
                    witnesses,
                },
                text,
            ))
        }
        Err(e) => Err(e.into()),
    }
}

fn gtopology(path: &Path) -> Outcome {
    let (metric, family) = load_space(path)?;
    let space = check_generalized_axioms(&metric, &family).map_err(|e| match e {
        Error::GeneralizedAxiom(w) => {
            let report = FailureReport {
                ok: false,
                error: "the generalized balls are not a basis".to_string(),
                witnesses: vec![Witness::from_generalized(&w, metric.ground())],
            };
            let text = text_with_witnesses(report.error.clone(), &report.witnesses);
            Failure::Check(output(false, &report, text))
        }
        other => other.into(),
    })?;
    let t = generalized_topology(&space)?;
    Ok(output(
        true,
        &TopologyReport::new(TopologyDoc::from_topology(&t)),
        t.to_string(),
    ))
}

fn embed(path: &Path, reversed: bool) -> Outcome {
    let t = load_topology(path)?;
    let order = if reversed {
        CoordinateOrder::Reversed
    } else {
        CoordinateOrder::Canonical
    };
    let e = sierpinski_embed_ordered(&t, order)?;
    let check = e.verify()?;
    let coordinates: Vec<Vec<String>> = e.closed_index().iter().map(|c| t.ground().names(*c)).collect();
    let images: Vec<ImageEntry> = e
        .images()
        .iter()
        .enumerate()
        .map(|(i, &tuple)| ImageEntry {
            point: t.ground().label(i).to_string(),
            tuple: e.label(tuple),
        })
        .collect();
    let report = EmbedReport {
        coordinates: coordinates.clone(),
        images: images.clone(),
        space: SpaceDoc::from_parts(e.induced_metric().raw(), e.beta()),
        checks: EmbeddingChecks {
            injective: check.injective,
            metric_valid: check.metric_valid,
            product_topology: check.product_topology,
            subspace_topology: check.subspace_topology,
        },
        witnesses: vec![],
    };
    let flag = |v: Option<bool>| v.map_or("skipped".to_string(), |b| b.to_string());
    let mut text = String::new();
    let coords: Vec<String> = coordinates.iter().map(|c| format!("{{{}}}", c.join(", "))).collect();
    text.push_str(&format!("coordinates: {}\n", coords.join(" ")));
    for img in &images {
        text.push_str(&format!("F({}) = {}\n", img.point, img.tuple));
    }
    text.push_str(&format!("maps: {}\n", e.beta().len()));
    text.push_str(&format!(
        "injective: {}\nmetric_valid: {}\nproduct_topology: {}\nsubspace_topology: {}",
        check.injective,
        flag(check.metric_valid),
        flag(check.product_topology),
        check.subspace_topology
    ));
    Ok(output(check.holds(), &report, text))
}

fn universal(path: &Path) -> Outcome {
    let t = load_topology(path)?;
    let (metric, family) = universal_generalized_metrization(&t)?;
    let doc = SpaceDoc::from_parts(metric.raw(), &family);
    let names: Vec<&str> = family.maps().iter().map(|m| m.name.as_str()).collect();
    let text = format!("metric:\n{}\nmaps: {}", matrix_text(metric.raw()), names.join(", "));
    Ok(output(true, &SpaceReport::new(doc), text))
}

fn census(n: usize) -> Outcome {
    let census = enumerate_topologies(n)?;
    let docs: Vec<TopologyDoc> = census.topologies.iter().map(TopologyDoc::from_topology).collect();
    let mut text = format!("{} topologies on {} points", census.count(), n);
    for t in &census.topologies {
        text.push_str(&format!("\n{t}"));
    }
    Ok(output(true, &docs, text))
}

fn search(path: &Path, values: &str, cap: u64) -> Outcome {
    let t = load_topology(path)?;
    let budget = SearchBudget::new(parse_list(values)?, cap.into())?;
    let fit = |v: u128| u64::try_from(v).ok();
    let report = match brute_force_metrize(&t, &budget)? {
        SearchOutcome::Found { metric, candidate } => SearchReport {
            found: true,
            examined: fit(candidate).unwrap_or(u64::MAX),
            total: None,
            complete: false,
            metric: Some(MetricDoc::from_matrix(metric.raw())),
            witnesses: vec![],
        },
        SearchOutcome::Exhausted {
            examined,
            total,
            complete,
        } => SearchReport {
            found: false,
            examined: fit(examined).unwrap_or(u64::MAX),
            total: total.and_then(fit),
            complete,
            metric: None,
            witnesses: vec![Witness::note(
                if complete { "no_solution" } else { "budget_exhausted" },
                if complete {
                    "no matrix over these values generates the topology".to_string()
                } else {
                    format!("no solution among the first {examined} candidates")
                },
            )],
        },
    };
    let text = match &report.metric {
        Some(doc) => format!(
            "found at candidate #{}\n{}",
            report.examined,
            matrix_text(&doc.to_matrix()?)
        ),
        None => text_with_witnesses("no metric found".to_string(), &report.witnesses),
    };
    Ok(output(report.found, &report, text))
}

fn crosscheck(n: usize) -> Outcome {
    let report = cross_check_suite(n)?;
    let census = enumerate_topologies(n)?;
    let witnesses = report
        .checks
        .iter()
        .filter_map(|c| {
            let (index, message) = c.first_failure.as_ref()?;
            let t = &census.topologies[*index];
            Some(Witness {
                kind: c.name.to_string(),
                sets: t.opens().iter().map(|u| t.ground().names(*u)).collect(),
                message: format!("topology #{index}: {message}"),
                ..Default::default()
            })
        })
        .collect();
    let out = CrossCheckOutput {
        n,
        topologies: report.topologies,
        t0_count: report.t0_count,
        passed: report.passed(),
        checks: report
            .checks
            .iter()
            .map(|c| CheckEntry {
                name: c.name.to_string(),
                passed: c.passed,
                failed: c.failed,
                skipped: c.skipped,
            })
            .collect(),
        witnesses,
    };
    Ok(output(out.passed, &out, report.to_string().trim_end().to_string()))
}

fn line(command: &LineCommand) -> Outcome {
    match command {
        LineCommand::Ball { metric, center, radius } => {
            let metric: LineMetric = metric.parse()?;
            let ball = line_ball(metric, &rational::parse(center)?, &rational::parse(radius)?)?;
            let mut witnesses = vec![];
            let mut text = ball.set.to_string();
            if !ball.matches_nominal() {
                let msg = format!("differs from the listed shape {}", ball.nominal);
                text.push_str(&format!("\nnote: {msg}"));
                witnesses.push(Witness::note("listed_shape_differs", msg));
            }
            let report = LineBallReport {
                metric: metric.to_string(),
                center: rational::format(&ball.center),
                radius: rational::format(&ball.radius),
                ball: ball.set.to_string(),
                listed: ball.nominal.to_string(),
                matches_listed: ball.matches_nominal(),
                witnesses,
            };
            Ok(output(true, &report, text))
        }
        LineCommand::Check { metric, values } => {
            let metric: LineMetric = metric.parse()?;
            let r = check_line_axioms(metric, &parse_list(values)?)?;
            let witnesses: Vec<Witness> = r
                .violations
                .iter()
                .map(|v| Witness::from_violation(v, &r.points))
                .collect();
            let head = if r.is_clean() {
                format!("no violations over {} points", r.points.len())
            } else {
                format!("{} violation(s)", witnesses.len())
            };
            let text = text_with_witnesses(head, &witnesses);
            let report = LineCheckReport {
                metric: metric.to_string(),
                points: r.points.labels().to_vec(),
                clean: r.is_clean(),
                witnesses,
            };
            Ok(output(report.clean, &report, text))
        }
    }
}

fn run(command: &Command) -> Outcome {
    match command {
        Command::ValidateTopology { topology } => validate_topology(topology),
        Command::ValidateMetric { metric } => validate_metric(metric),
        Command::Classify { metric } => classify(metric),
        Command::Topology { metric } => topology_from_metric(metric),
        Command::Metrize { topology } => metrize(topology),
        Command::Verify { topology, metric } => verify(topology, metric),
        Command::Quotient { topology } => quotient(topology),
        Command::Lift { topology, metric } => lift(topology, metric.as_deref()),
        Command::Example { name, points, subset } => example(name, points.as_deref(), subset.as_deref()),
        Command::Gcheck { space } => gcheck(space),
        Command::Gtopology { space } => gtopology(space),
        Command::Embed { topology, reversed } => embed(topology, *reversed),
        Command::Universal { topology } => universal(topology),
        Command::Census { n } => census(*n),
        Command::Search {
            input,
            topology,
            values,
            cap,
        } => {
            let path = input.as_deref().or(topology.as_deref()).expect("clap requires one");
            search(path, values, *cap)
        }
        Command::Crosscheck { n } => crosscheck(*n),
        Command::Line { command } => line(command),
    }
}

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invocation {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line `args` (including the program name).
pub fn invoke<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Invocation {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Invocation {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    let render = |out: &Output| match cli.format {
        Format::Json => out.json.clone(),
        Format::Text => format!("{}\n", out.text),
    };
    match run(&cli.command) {
        Ok(out) => Invocation {
            code: if out.success { 0 } else { 1 },
            stdout: render(&out),
            stderr: String::new(),
        },
        Err(Failure::Check(out)) => Invocation {
            code: 1,
            stdout: render(&out),
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => Invocation {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}
