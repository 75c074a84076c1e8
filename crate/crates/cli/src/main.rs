use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use branchorder_core::coset::todd_coxeter;
use branchorder_core::family::{build_raw_presentation, build_standard_presentation};
use branchorder_core::homology::h1;
use branchorder_core::orderability::{
    nlo_search, verify_certificate, CertificateSource, InconclusiveReason, NloCertificate, NloOptions, NloOutcome,
    Verdict,
};
use branchorder_core::replay::{replay_suite, summarize, SuiteOptions};
use branchorder_core::{FamilyParams, Presentation, SearchBudget};

#[derive(Parser, Debug)]
#[command(name = "branchorder", version, about = "Presentations, homology, coset enumeration and orderability certificates for the L(k1, ..., kn) family")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a presentation as JSON.
    Present {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// First homology via Smith normal form.
    Homology {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Search for a certificate of non-left-orderability.
    Certify {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 2)]
        radius: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Longest product chain in the cone search.
        #[arg(long, default_value_t = 8)]
        max_chain: usize,
        /// Skip the finite-group shortcut.
        #[arg(long)]
        no_shortcut: bool,
        /// Write the certificate here instead of embedding it in the output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate against the presentation.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Replay the word identities for every i and every m in range.
    Replay {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = -4, allow_hyphen_values = true)]
        m_from: i64,
        #[arg(long, default_value_t = 4, allow_hyphen_values = true)]
        m_to: i64,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Report zero for every timing field.
        #[arg(long)]
        no_timestamp: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Todd-Coxeter enumeration of the whole group.
    Coset {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = SearchBudget::default().max_cosets)]
        max_cosets: usize,
    },
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// Comma-separated twist parameters, e.g. `-1,0,2`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_k)]
    k: KList,
    /// Number of parameters; inferred from --k when omitted.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value_t = Form::Standard)]
    form: Form,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Form {
    Raw,
    Standard,
}

#[derive(Args, Debug)]
struct BudgetArgs {
    /// Rewriting states per search.
    #[arg(long = "budget", alias = "max-states", default_value_t = SearchBudget::default().max_states)]
    max_states: usize,
    /// Longest intermediate word, in syllables.
    #[arg(long, default_value_t = SearchBudget::default().max_word_length)]
    max_word_length: usize,
    #[arg(long, default_value_t = SearchBudget::default().max_cosets)]
    max_cosets: usize,
}

impl BudgetArgs {
    fn budget(&self) -> Result<SearchBudget, Failure> {
        if self.max_states == 0 || self.max_word_length == 0 || self.max_cosets == 0 {
            return Err(Failure::Usage("budgets must be positive".into()));
        }
        Ok(SearchBudget::new(self.max_states, self.max_word_length, self.max_cosets))
    }
}

#[derive(Clone, Debug)]
struct KList(Vec<i64>);

fn parse_k(s: &str) -> Result<KList, String> {
    if s.trim().is_empty() {
        return Err("expected at least one integer".into());
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<_, _>>()
        .map(KList)
}

enum Failure {
    Usage(String),
    Internal(String),
}

type Outcome = Result<(), Failure>;

impl FamilyArgs {
    fn params(&self) -> Result<FamilyParams, Failure> {
        let k = self.k.0.clone();
        let params = match self.n {
            Some(n) => FamilyParams::with_n(n, k),
            None => FamilyParams::new(k),
        };
        params.map_err(|e| Failure::Usage(e.to_string()))
    }

    fn presentation(&self) -> Result<(FamilyParams, Presentation), Failure> {
        let params = self.params()?;
        let p = match self.form {
            Form::Raw => build_raw_presentation(&params),
            Form::Standard => build_standard_presentation(&params),
        };
        Ok((params, p))
    }
}

fn emit(value: &Value) -> Outcome {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Internal(e.to_string()))?;
    let mut out = io::stdout().lock();
    match writeln!(out, "{text}").and_then(|()| out.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(Failure::Internal(e.to_string())),
        _ => Ok(()),
    }
}

fn write_file(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Present { family } => {
            let (_, p) = family.presentation()?;
            let value = serde_json::to_value(p.to_json()).map_err(|e| Failure::Internal(e.to_string()))?;
            eprintln!(
                "{}: {} generators, {} relators",
                p.label(),
                p.generator_count(),
                p.relators().len()
            );
            emit(&value)
        }
        Command::Homology { family } => {
            let (params, p) = family.presentation()?;
            let snf = h1(&p);
            let mut value = snf.to_json();
            value["k"] = json!(params.k());
            value["form"] = json!(p.label());
            eprintln!("H1 order: {}", value["order"]);
            emit(&value)
        }
        Command::Coset { family, max_cosets } => {
            let (params, p) = family.presentation()?;
            if max_cosets == 0 {
                return Err(Failure::Usage("--max-cosets must be positive".into()));
            }
            let budget = SearchBudget {
                max_cosets,
                ..SearchBudget::default()
            };
            let e = todd_coxeter(&p, &budget);
            let mut value = e.to_json();
            value["k"] = json!(params.k());
            match e.order() {
                Some(n) => eprintln!("finite group of order {n}"),
                None => eprintln!("enumeration exceeded {max_cosets} cosets"),
            }
            emit(&value)
        }
        Command::Certify {
            family,
            radius,
            budget,
            max_chain,
            no_shortcut,
            out,
        } => {
            let (params, p) = family.presentation()?;
            if radius == 0 {
                return Err(Failure::Usage("--radius must be positive".into()));
            }
            let opts = NloOptions {
                budget: budget.budget()?,
                max_chain_factors: max_chain.max(1),
                try_shortcut: !no_shortcut,
            };
            let outcome = nlo_search(&p, radius, &opts);
            let mut value = json!({
                "k": params.k(),
                "form": p.label(),
                "radius": radius,
                "outcome": outcome.label(),
            });
            match &outcome {
                NloOutcome::Certified { certificate, source } => {
                    if !verify_certificate(&p, certificate).is_accept() {
                        return Err(Failure::Internal("emitted certificate fails verification".into()));
                    }
                    value["source"] = match source {
                        CertificateSource::Torsion { order, group_order } => json!({
                            "kind": "torsion", "element_order": order, "group_order": group_order
                        }),
                        CertificateSource::ConeSearch => json!({"kind": "cone-search"}),
                    };
                    value["leaves"] = json!(certificate.tree.leaf_count());
                    let cert_json = serde_json::to_value(certificate.to_json(&p))
                        .map_err(|e| Failure::Internal(e.to_string()))?;
                    match &out {
                        Some(path) => {
                            write_file(path, &certificate.to_json_string(&p))?;
                            value["certificate_path"] = json!(path.display().to_string());
                        }
                        None => value["certificate"] = cert_json,
                    }
                    eprintln!("certified ({} leaves)", certificate.tree.leaf_count());
                }
                NloOutcome::TrivialGroup => {
                    value["note"] = json!("the group is trivial; left-orderability is defined for nontrivial groups only");
                    eprintln!("trivial-group");
                }
                NloOutcome::Inconclusive { reason, classes, nodes } => {
                    value["reason"] = json!(match reason {
                        InconclusiveReason::ConsistentBranch => "consistent-branch",
                        InconclusiveReason::NodeBudget => "node-budget",
                    });
                    value["classes"] = json!(classes);
                    value["nodes"] = json!(nodes);
                    eprintln!("inconclusive");
                }
            }
            emit(&value)
        }
        Command::Verify { family, cert } => {
            let (_, p) = family.presentation()?;
            let text = fs::read_to_string(&cert)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", cert.display())))?;
            let certificate: NloCertificate =
                NloCertificate::from_json_str(&p, &text).map_err(|e| Failure::Usage(e.to_string()))?;
            let verdict = verify_certificate(&p, &certificate);
            eprintln!("{verdict}");
            let value = match verdict {
                Verdict::Accept => json!({"verdict": "accept"}),
                Verdict::Reject { path, reason } => json!({"verdict": "reject", "path": path, "reason": reason}),
            };
            emit(&value)
        }
        Command::Replay {
            family,
            m_from,
            m_to,
            budget,
            no_timestamp,
            out,
        } => {
            let params = family.params()?;
            let opts = SuiteOptions {
                budget: budget.budget()?,
                timing: !no_timestamp,
            };
            let report = replay_suite(&params, m_from..=m_to, &opts);
            let s = summarize(&report);
            eprintln!("proved {}, unknown {}, error {}", s.proved, s.unknown, s.error);
            let value = serde_json::to_value(&report).map_err(|e| Failure::Internal(e.to_string()))?;
            match out {
                Some(path) => {
                    let text = serde_json::to_string_pretty(&value).map_err(|e| Failure::Internal(e.to_string()))?;
                    write_file(&path, &text)
                }
                None => emit(&value),
            }
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("BRANCHORDER_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| Failure::Usage(format!("BRANCHORDER_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::Internal(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
