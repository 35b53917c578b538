mod args;
mod commands;
mod sat_commands;

use std::fmt;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use serde_json::Value;

use args::{Cli, Command};

/// Any failure that is not a verdict: bad input, unreadable file, over-budget request.
#[derive(Debug)]
pub struct Fail(pub String);

impl fmt::Display for Fail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<prunix::Error> for Fail {
    fn from(e: prunix::Error) -> Self {
        Fail(e.to_string())
    }
}

impl From<String> for Fail {
    fn from(s: String) -> Self {
        Fail(s)
    }
}

pub type Res<T> = Result<T, Fail>;

/// What a command produced. A false verdict exits 1 with its witness on stderr.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub witness: Option<String>,
}

impl Output {
    pub fn new(text: impl Into<String>, json: Value) -> Self {
        Output { text: text.into(), json, witness: None }
    }

    pub fn verdict(mut self, holds: bool, witness: impl FnOnce() -> String) -> Self {
        if !holds {
            self.witness = Some(witness());
        }
        self
    }
}

fn run(cli: Cli) -> Res<Output> {
    if let Some(n) = cli.global.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Fail(format!("thread pool: {e}")))?;
    }
    let seed = cli.global.seed;
    match cli.command {
        Command::Check(a) => commands::check(a, seed),
        Command::Generate(g) => commands::generate(g, seed),
        Command::Closure(a) => commands::closure(a),
        Command::Identity(a) => commands::identity(a, seed),
        Command::Sample(s) => commands::sample(s, seed),
        Command::Lattice(l) => commands::lattice(l),
        Command::Prune(p) => commands::prune(p),
        Command::Sat(s) => sat_commands::sat(s, seed),
    }
}

fn emit(out: &Output, json: bool, path: Option<&std::path::Path>) -> Res<()> {
    let mut body = if json {
        serde_json::to_string_pretty(&out.json).expect("values always serialize")
    } else {
        out.text.clone()
    };
    if !body.is_empty() && !body.ends_with('\n') {
        body.push('\n');
    }
    match path {
        Some(p) => std::fs::write(p, body).map_err(|e| Fail(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| Fail(format!("stdout: {e}")))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.global.json;
    let path = cli.global.out.clone();
    let result = run(cli).and_then(|out| emit(&out, json, path.as_deref()).map(|()| out));
    match result {
        Ok(Output { witness: None, .. }) => ExitCode::SUCCESS,
        Ok(Output { witness: Some(w), .. }) => {
            eprintln!("{w}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
