//! Argument parsing and command dispatch for `dnum`.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use dnum_core::distance::jaccard_matrix;
use dnum_core::{
    bpa_distance, build_matrices, dnumber_distance, DistanceOptions, FocalSpace, Interpretation,
};

use crate::document::{EvidenceDocument, Exclusivity};
use crate::error::CliError;
use crate::format::{braced, matrix_table, significant};
use crate::paper::{self, Case, Format};

#[derive(Debug, Parser)]
#[command(name = "dnum", version, about = "Distances between bodies of evidence")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check an evidence document and summarize it.
    Validate {
        /// Document path, or `-` for standard input.
        path: String,
    },
    /// Distance between two named masses.
    Dist {
        path: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, value_enum, default_value_t = KindArg::Dnumber)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = InterpArg::Matrix)]
        interp: InterpArg,
        /// Also print D, I and the effective matrix.
        #[arg(long)]
        show_matrices: bool,
        /// Clamp a slightly negative radicand to zero instead of failing.
        #[arg(long)]
        clamp: bool,
    },
    /// Print R, D or I with subset labels.
    Matrix {
        path: String,
        #[arg(long, value_enum, ignore_case = true)]
        which: WhichArg,
        /// Two mass names, comma-separated (needed for D and I).
        #[arg(long, value_delimiter = ',')]
        masses: Vec<String>,
    },
    /// Regenerate a worked example or the comparison table.
    Paper {
        #[arg(long, value_enum)]
        case: CaseArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Bpa,
    Dnumber,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InterpArg {
    Matrix,
    Elementwise,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum WhichArg {
    #[value(name = "R")]
    R,
    #[value(name = "D")]
    D,
    #[value(name = "I")]
    I,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CaseArg {
    Ex2,
    Ex3,
    Ex4,
    Ex5,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
}

/// Runs `dnum` with `args` (including the program name) and returns the
/// process exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, stdin) {
        Ok(text) => match out.write_all(text.as_bytes()) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                2
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn load(path: &str, stdin: &mut dyn Read) -> Result<EvidenceDocument, CliError> {
    let (text, origin) = if path == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io("<stdin>".into(), e.to_string()))?;
        (s, "<stdin>".to_owned())
    } else {
        let s = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.into(), e.to_string()))?;
        (s, path.to_owned())
    };
    EvidenceDocument::parse(&text, &origin)
}

fn execute(command: Command, stdin: &mut dyn Read) -> Result<String, CliError> {
    match command {
        Command::Validate { path } => load(&path, stdin).map(|doc| validate(&doc)),
        Command::Dist {
            path,
            from,
            to,
            kind,
            interp,
            show_matrices,
            clamp,
        } => {
            let doc = load(&path, stdin)?;
            let interpretation = match interp {
                InterpArg::Matrix => Interpretation::MatrixProduct,
                InterpArg::Elementwise => Interpretation::Elementwise,
            };
            let opts = DistanceOptions {
                interpretation,
                clamp_negative: clamp,
            };
            dist(&doc, &from, &to, matches!(kind, KindArg::Dnumber), opts, show_matrices)
        }
        Command::Matrix {
            path,
            which,
            masses,
        } => {
            let doc = load(&path, stdin)?;
            matrix(&doc, which, &masses)
        }
        Command::Paper { case, format } => {
            let case = match case {
                CaseArg::Ex2 => Case::Ex2,
                CaseArg::Ex3 => Case::Ex3,
                CaseArg::Ex4 => Case::Ex4,
                CaseArg::Ex5 => Case::Ex5,
            };
            let format = match format {
                FormatArg::Text => Format::Text,
                FormatArg::Csv => Format::Csv,
            };
            paper::render(case, format)
        }
    }
}

fn validate(doc: &EvidenceDocument) -> String {
    let mut out = format!(
        "ok: frame of {} elements ({})\n",
        doc.frame.len(),
        doc.frame.labels().join(", ")
    );
    for (name, m) in &doc.masses {
        out.push_str(&format!(
            "mass {name}: {}, focal elements {}, total {}, {}\n",
            m.kind().as_str(),
            m.num_focal(),
            significant(m.total()),
            if m.is_complete() { "complete" } else { "incomplete" },
        ));
    }
    out.push_str(&match &doc.exclusivity {
        None => "exclusivity: none (elements exclusive)\n".to_owned(),
        Some(Exclusivity::Pairs(p)) => format!("exclusivity: pairs ({})\n", p.len()),
        Some(Exclusivity::Curves(c)) => format!("exclusivity: membership curves ({})\n", c.len()),
    });
    out
}

fn subset_labels(space: &FocalSpace) -> Vec<String> {
    space.labels().iter().map(|l| braced(l)).collect()
}

fn dist(
    doc: &EvidenceDocument,
    from: &str,
    to: &str,
    dnumber: bool,
    opts: DistanceOptions,
    show_matrices: bool,
) -> Result<String, CliError> {
    let (a, b) = (doc.mass(from)?, doc.mass(to)?);
    let space = FocalSpace::of(a, b)?;
    let labels = subset_labels(&space);
    let mut out = String::new();
    if dnumber {
        let r = doc.relative()?;
        let rep = dnumber_distance(a, b, r, opts)?;
        out.push_str(&format!(
            "distance: {}\nradicand: {}\nkind: dnumber\ninterpretation: {}\n",
            significant(rep.value),
            significant(rep.radicand),
            rep.interpretation.as_str()
        ));
        if rep.clamped {
            out.push_str("clamped: negative radicand set to zero\n");
        }
        out.push_str(&format!("focal space: {}\n", labels.join(" ")));
        if show_matrices {
            let (d, i_mat) = build_matrices(&space, r)?;
            let m = dnum_core::distance::effective_matrix(&space, r, opts.interpretation)?;
            out.push_str(&format!("D:\n{}", matrix_table(&labels, &d)));
            out.push_str(&format!("I:\n{}", matrix_table(&labels, &i_mat)));
            out.push_str(&format!("effective (symmetric part):\n{}", matrix_table(&labels, &m)));
        }
    } else {
        let value = bpa_distance(a, b)?;
        out.push_str(&format!(
            "distance: {}\nradicand: {}\nkind: bpa\nfocal space: {}\n",
            significant(value),
            significant(value * value),
            labels.join(" ")
        ));
        if show_matrices {
            let d = jaccard_matrix(&space)?;
            out.push_str(&format!("D:\n{}", matrix_table(&labels, &d)));
        }
    }
    Ok(out)
}

fn matrix(doc: &EvidenceDocument, which: WhichArg, masses: &[String]) -> Result<String, CliError> {
    if let WhichArg::R = which {
        let r = doc.relative()?;
        return Ok(matrix_table(doc.frame.labels(), r.matrix()));
    }
    let [first, second] = masses else {
        return Err(CliError::Usage(
            "--masses must name exactly two masses for D and I".into(),
        ));
    };
    let space = FocalSpace::of(doc.mass(first)?, doc.mass(second)?)?;
    let labels = subset_labels(&space);
    let m = match which {
        WhichArg::D => jaccard_matrix(&space)?,
        _ => build_matrices(&space, doc.relative()?)?.1,
    };
    Ok(matrix_table(&labels, &m))
}
