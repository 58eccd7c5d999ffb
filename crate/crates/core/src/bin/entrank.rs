use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use entrank::commands::{self, SweepKind};
use entrank::{CategoryFlavor, RunConfig, Task};

#[derive(Parser)]
#[command(name = "entrank", version, about = "Entity ranking over a Wikipedia-style collection")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Load the corpus, build the page and category indexes, print counts.
    Index(Opts),
    /// Rank every topic and write a TREC run file.
    Rank(Opts),
    /// Evaluate a TREC run file against qrels.
    Eval {
        run: PathBuf,
        #[command(flatten)]
        opts: Opts,
    },
    /// Sweep M (1..=20) or the 66 (alpha, beta) cells.
    Sweep {
        which: Which,
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    M,
    Alphabeta,
}

#[derive(Clone, Copy, ValueEnum)]
enum CatIndex {
    C,
    Ce,
}

#[derive(Args)]
struct Opts {
    /// key = value config file; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    corpus: Option<PathBuf>,
    #[arg(long)]
    categories: Option<PathBuf>,
    /// Topic directory or a single topic file.
    #[arg(long)]
    topics: Option<PathBuf>,
    #[arg(long)]
    qrels: Option<PathBuf>,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    task: Option<u8>,
    /// base | extended | lex-c | lex-t | lex-tc (task 1); base | u-t | u-e | u-both (task 2)
    #[arg(long)]
    strategy: Option<String>,
    #[arg(long, value_enum)]
    cat_index: Option<CatIndex>,
    #[arg(short = 'M')]
    m: Option<usize>,
    #[arg(long)]
    top_n: Option<usize>,
    #[arg(long)]
    top_k: Option<usize>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    max_results: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    tag: Option<String>,
    #[arg(long)]
    csv: bool,
}

impl Opts {
    fn into_config(self) -> entrank::Result<RunConfig> {
        let mut cfg = match &self.config {
            Some(path) => RunConfig::load(path)?,
            None => RunConfig::default(),
        };
        macro_rules! over {
            ($($field:ident),*) => {$(
                if let Some(v) = self.$field { cfg.$field = v; }
            )*};
        }
        over!(m, top_n, top_k, alpha, beta, max_results, tag, strategy);
        macro_rules! over_path {
            ($($field:ident),*) => {$(
                if self.$field.is_some() { cfg.$field = self.$field; }
            )*};
        }
        over_path!(corpus, categories, topics, qrels, out);
        if let Some(t) = self.task {
            cfg.task = Task::from_number(t)?;
        }
        if let Some(c) = self.cat_index {
            cfg.cat_index = match c {
                CatIndex::C => CategoryFlavor::Names,
                CatIndex::Ce => CategoryFlavor::NamesPlusEntities,
            };
        }
        cfg.csv |= self.csv;
        Ok(cfg)
    }
}

fn run(cli: Cli) -> entrank::Result<ExitCode> {
    match cli.command {
        Command::Index(opts) => {
            let summary = commands::cmd_index(&opts.into_config()?)?;
            print!("{}", summary.render());
        }
        Command::Rank(opts) => {
            let cfg = opts.into_config()?;
            let out = commands::cmd_rank(&cfg)?;
            if cfg.out.is_none() {
                print!("{}", out.run.to_trec());
            }
            if !out.failures.is_empty() {
                for (topic, err) in &out.failures {
                    eprintln!("topic {topic} skipped: {err}");
                }
                return Ok(ExitCode::from(1));
            }
        }
        Command::Eval { run, opts } => {
            let report = commands::cmd_eval(&opts.into_config()?, &run)?;
            print!("{}", report.to_table());
        }
        Command::Sweep { which, opts } => {
            let kind = match which {
                Which::M => SweepKind::M,
                Which::Alphabeta => SweepKind::AlphaBeta,
            };
            print!("{}", commands::cmd_sweep(&opts.into_config()?, kind)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
