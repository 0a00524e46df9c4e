//! Command-line front end: compute q-characters, list dominant loop weights,
//! run the verification suite.

use std::process::ExitCode;

use qchar::output::{self, Notation};
use qchar::qcharacter::full_character;
use qchar::root_system::{Kind, RootSystem};
use qchar::verify::{run_suite, VerifyOptions};

const USAGE: &str = "\
usage: qchar <command> [flags]

commands:
  compute   --type {A|B|C|D} --rank N --node I [--base-exp K] [--format json|text]
            [--notation w|y] [--out FILE]
  dominant  --type {B|C|D} --rank N --node I [--r R] [--format json|text]
            [--notation w|y] [--out FILE]
  verify    --suite {counts|dims|proj|braid|classes|all} [--max-rank R]
            [--samples S] [--seed X] [--format json|text] [--out FILE]

valid nodes per type:
  A: any 1 <= i <= n (rank n >= 1)
  B: any 1 <= i <= n (rank n >= 2); i = n is the spin node
  C: any 1 <= i <= n (rank n >= 2); i = 1 is the natural node
  D: any 1 <= i <= n (rank n >= 4); i in {1, n-1, n} minuscule, else 1 < i <= n-2
  dominant additionally needs a non-minuscule node and, for C and D, r = i mod 2

exit codes: 0 ok, 1 verification failure, 2 usage error
";

struct Flags {
    values: std::collections::BTreeMap<String, String>,
}

impl Flags {
    fn parse(args: &[String]) -> Result<Flags, String> {
        let mut values = std::collections::BTreeMap::new();
        let mut idx = 0;
        while idx < args.len() {
            let key = &args[idx];
            if !key.starts_with("--") {
                return Err(format!("unexpected argument {key:?}"));
            }
            let name = key.trim_start_matches("--").to_string();
            let val = args
                .get(idx + 1)
                .ok_or_else(|| format!("flag {key} needs a value"))?;
            if values.insert(name, val.clone()).is_some() {
                return Err(format!("flag {key} given twice"));
            }
            idx += 2;
        }
        Ok(Flags { values })
    }

    fn take(&mut self, name: &str) -> Option<String> {
        self.values.remove(name)
    }

    fn require(&mut self, name: &str) -> Result<String, String> {
        self.take(name).ok_or_else(|| format!("missing --{name}"))
    }

    fn parsed<T: std::str::FromStr>(&mut self, name: &str) -> Result<Option<T>, String>
    where
        T::Err: std::fmt::Display,
    {
        match self.take(name) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|e| format!("bad value for --{name}: {e}")),
        }
    }

    fn finish(self) -> Result<(), String> {
        match self.values.keys().next() {
            None => Ok(()),
            Some(k) => Err(format!("unknown flag --{k}")),
        }
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}\n\n{USAGE}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let Some(command) = args.first() else {
        return usage_error("no command given");
    };
    if command == "--help" || command == "-h" || command == "help" {
        print!("{USAGE}");
        return ExitCode::SUCCESS;
    }
    let mut flags = match Flags::parse(&args[1..]) {
        Ok(f) => f,
        Err(e) => return usage_error(&e),
    };
    let result = match command.as_str() {
        "compute" => cmd_compute(&mut flags),
        "dominant" => cmd_dominant(&mut flags),
        "verify" => cmd_verify(&mut flags),
        other => Err(CliError::Usage(format!("unknown command {other:?}"))),
    };
    let result = result.and_then(|code| {
        flags.finish().map_err(CliError::Usage)?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => usage_error(&msg),
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

enum CliError {
    Usage(String),
    Io(String),
}

impl From<qchar::Error> for CliError {
    fn from(e: qchar::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn parse_system(flags: &mut Flags) -> Result<(RootSystem, usize), CliError> {
    let kind: Kind = flags
        .require("type")
        .map_err(CliError::Usage)?
        .parse()
        .map_err(CliError::Usage)?;
    let rank: usize = flags
        .parsed("rank")
        .map_err(CliError::Usage)?
        .ok_or_else(|| CliError::Usage("missing --rank".into()))?;
    let node: usize = flags
        .parsed("node")
        .map_err(CliError::Usage)?
        .ok_or_else(|| CliError::Usage("missing --node".into()))?;
    if kind == Kind::D && rank < 4 {
        return Err(CliError::Usage(format!(
            "type D requires rank >= 4 (got {rank}); see the valid ranges below"
        )));
    }
    let rs = RootSystem::new(kind, rank)?;
    rs.check_node(node)?;
    Ok((rs, node))
}

struct OutputFlags {
    json: bool,
    notation: Notation,
    out: Option<String>,
}

fn parse_output(flags: &mut Flags) -> Result<OutputFlags, CliError> {
    let json = match flags.take("format").as_deref() {
        None | Some("json") => true,
        Some("text") => false,
        Some(other) => {
            return Err(CliError::Usage(format!(
                "bad value for --format: {other:?} (expected json or text)"
            )))
        }
    };
    let notation = match flags.take("notation").as_deref() {
        None | Some("w") | Some("omega") => Notation::Omega,
        Some("y") | Some("Y") => Notation::Y,
        Some(other) => {
            return Err(CliError::Usage(format!(
                "bad value for --notation: {other:?} (expected w or y)"
            )))
        }
    };
    Ok(OutputFlags {
        json,
        notation,
        out: flags.take("out"),
    })
}

fn emit(doc: &output::OutputDocument, out: &OutputFlags) -> Result<(), CliError> {
    let text = if out.json {
        doc.to_json()
    } else {
        output::render_text(doc, out.notation)
    };
    match &out.out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {path}: {e}"))),
    }
}

fn cmd_compute(flags: &mut Flags) -> Result<ExitCode, CliError> {
    let (rs, node) = parse_system(flags)?;
    let base: i64 = flags.parsed("base-exp").map_err(CliError::Usage)?.unwrap_or(0);
    let out = parse_output(flags)?;
    let ch = full_character(&rs, node, base)?;
    emit(&output::character_document(&ch), &out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_dominant(flags: &mut Flags) -> Result<ExitCode, CliError> {
    let (rs, node) = parse_system(flags)?;
    let r: Option<usize> = flags.parsed("r").map_err(CliError::Usage)?;
    let out = parse_output(flags)?;
    let doc = output::dominant_document(&rs, node, r)?;
    emit(&doc, &out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(flags: &mut Flags) -> Result<ExitCode, CliError> {
    let suite = flags.take("suite").unwrap_or_else(|| "all".to_string());
    let opts = VerifyOptions {
        max_rank: flags.parsed("max-rank").map_err(CliError::Usage)?.unwrap_or(5),
        samples: flags.parsed("samples").map_err(CliError::Usage)?.unwrap_or(100),
        seed: flags.parsed("seed").map_err(CliError::Usage)?.unwrap_or(0),
    };
    let out = parse_output(flags)?;
    let reports = run_suite(&suite, opts)?;
    let all_pass = reports.iter().all(|r| r.passed);
    let rendered = if out.json {
        let mut s = serde_json::to_string_pretty(&reports).expect("reports serialize");
        s.push('\n');
        s
    } else {
        let mut s = String::new();
        for r in &reports {
            s.push_str(&r.status_line());
            s.push('\n');
        }
        s
    };
    match &out.out {
        None => print!("{rendered}"),
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| CliError::Io(format!("cannot write {path}: {e}")))?,
    }
    if !out.json || out.out.is_some() {
        // keep a terse status on stderr so scripted runs see the outcome
        eprintln!("verify {suite}: {}", if all_pass { "pass" } else { "FAIL" });
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
