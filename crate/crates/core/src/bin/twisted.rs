use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use twisted_coord::lab::{self, RunConfig};

fn main() -> ExitCode {
    let config = match RunConfig::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let env_budget = std::env::var(lab::BUDGET_ENV).ok();
    let result = config
        .with_env_budget(env_budget.as_deref())
        .and_then(|c| lab::run(&c).and_then(|r| r.emit(c.format, c.out.as_deref())));
    match result {
        Ok(Some(text)) => {
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(lab::exit_code(&e) as u8)
        }
    }
}
