//! Text-in, text-out commands shared by the command-line tool and the web
//! demo. All output is deterministic.

use crate::bijection::bijection_table;
use crate::check::check_pair;
use crate::compatible::compatible_family;
use crate::error::{Error, Result};
use crate::input::InputDocument;
use crate::tutte::{tutte, Method};

/// Seed used by `check` when none is given.
pub const DEFAULT_SEED: u64 = 0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Tutte(Method),
    Table,
    Compatible,
    Check { seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    /// 0 success, 1 parse or input error, 2 invalid perspective, 3 failed check.
    pub exit_code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            stderr: String::new(),
            exit_code: 0,
        }
    }

    fn error(e: &Error) -> Self {
        Output {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            exit_code: e.exit_code(),
        }
    }
}

/// Canonical polynomial string plus newline.
pub fn tutte_text(doc: &InputDocument, method: Method) -> Result<String> {
    let p = doc.perspective()?;
    Ok(format!("{}\n", tutte(&p, method)?))
}

/// Tab-separated bijection table with header `B Int Ext X Term`.
pub fn table_text(doc: &InputDocument) -> Result<String> {
    let p = doc.perspective()?;
    let l = &doc.labels;
    let mut out = String::from("B\tInt\tExt\tX\tTerm\n");
    for r in bijection_table(&p)? {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            l.set(r.basis),
            l.set(r.internal),
            l.set(r.external),
            l.set(r.compatible),
            r.term()
        ));
    }
    Ok(out)
}

/// `D(M, M′, <)`, one set per line, by size then lexicographically.
pub fn compatible_text(doc: &InputDocument) -> Result<String> {
    let p = doc.perspective()?;
    Ok(compatible_family(&p)
        .into_iter()
        .map(|x| format!("{}\n", doc.labels.set(x)))
        .collect())
}

/// The property report and whether every check passed. An invalid
/// perspective is reported as a failed check rather than an error.
pub fn check_text(doc: &InputDocument, seed: u64) -> Result<(String, bool)> {
    let (m, q) = doc.matroids()?;
    let q = q.unwrap_or_else(|| m.clone());
    let report = check_pair(&m, &q, seed)?;
    Ok((report.to_string(), report.passed()))
}

pub fn run(command: Command, input: &str) -> Output {
    let doc = match InputDocument::parse(input) {
        Ok(doc) => doc,
        Err(e) => return Output::error(&e),
    };
    let result = match command {
        Command::Tutte(method) => tutte_text(&doc, method),
        Command::Table => table_text(&doc),
        Command::Compatible => compatible_text(&doc),
        Command::Check { seed } => match check_text(&doc, seed) {
            Ok((text, true)) => Ok(text),
            Ok((text, false)) => {
                return Output {
                    stdout: text,
                    stderr: String::new(),
                    exit_code: 3,
                }
            }
            Err(e) => Err(e),
        },
    };
    match result {
        Ok(text) => Output::ok(text),
        Err(e) => Output::error(&e),
    }
}
