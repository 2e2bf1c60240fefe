//! Regenerates the published worked examples and the comparison table from
//! the fixtures embedded in `dnum_core::reference`.

use dnum_core::oracle::{resolve_fixtures, OracleReport};
use dnum_core::reference::{ex2, ex3, table, Reading};
use dnum_core::{
    bpa_distance, build_matrices, dnumber_distance, dnumber_distance_in, DistanceOptions,
    FocalSpace, Frame, Mass, MassKind, Subset,
};

use crate::error::CliError;
use crate::format::{braced, matrix_table, shortest, significant};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    Ex2,
    Ex3,
    Ex4,
    Ex5,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Csv,
}

pub fn render(case: Case, format: Format) -> Result<String, CliError> {
    let report = resolve_fixtures()?;
    match case {
        Case::Ex2 => example2(&report, format),
        Case::Ex3 => example3(format),
        Case::Ex4 => comparison_table(&report, true, format),
        Case::Ex5 => comparison_table(&report, false, format),
    }
}

fn dnumber(frame: &Frame, reading: &Reading) -> Result<Mass, CliError> {
    Ok(Mass::new(frame, MassKind::DNumber, reading.subsets(frame)?)?)
}

fn residual_note(computed: f64, reference: f64) -> String {
    format!(
        "printed {reference}, residual {:.1e}",
        (computed - reference).abs()
    )
}

fn csv_output(header: &[&str], rows: Vec<Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Io("csv output".into(), e.to_string());
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(&r).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Io("csv output".into(), e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn reference_cells(computed: f64, reference: Option<f64>) -> [String; 3] {
    match reference {
        Some(r) => [shortest(computed), shortest(r), shortest((computed - r).abs())],
        None => [shortest(computed), String::new(), String::new()],
    }
}

fn ex2_operands(report: &OracleReport) -> (Reading, Reading) {
    let wanted = report.ex2_reading.as_deref();
    for a in ex2::first_readings() {
        for b in ex2::second_readings() {
            if wanted == Some(format!("d1={},d2={}", a.name, b.name).as_str()) {
                return (a, b);
            }
        }
    }
    (ex2::first_readings().remove(0), ex2::second_readings().remove(0))
}

fn example2(report: &OracleReport, format: Format) -> Result<String, CliError> {
    let f = ex2::frame();
    let r = ex2::relative()?;
    let (first, second) = ex2_operands(report);
    let d1 = dnumber(&f, &first)?;
    let d2 = dnumber(&f, &second)?;
    let layout = ex2::LAYOUT
        .iter()
        .map(|l| f.subset(l.iter().copied()))
        .collect::<dnum_core::Result<Vec<Subset>>>()?;
    let space = FocalSpace::with_order(&d1, &d2, layout)?;
    let labels: Vec<String> = space.labels().iter().map(|l| braced(l)).collect();
    let v1 = space.coordinates(&d1)?;
    let v2 = space.coordinates(&d2)?;
    let diff = space.difference(&d1, &d2)?;
    let (d, i_mat) = build_matrices(&space, &r)?;
    let opts = DistanceOptions {
        interpretation: report.resolved_interpretation,
        clamp_negative: false,
    };
    let value = dnumber_distance_in(space, &d1, &d2, &r, opts)?.value;

    match format {
        Format::Text => {
            let vector = |v: &[f64]| v.iter().map(|&x| significant(x)).collect::<Vec<_>>().join(", ");
            let frame_labels: Vec<String> = f.labels().to_vec();
            Ok(format!(
                "reading: d1={}, d2={}; interpretation: {}\n\
                 step 1: mass vectors over {}\n  d1 = [{}]\n  d2 = [{}]\n  d1 - d2 = [{}]\n\
                 step 2: relative matrix R\n{}\
                 step 3: Jaccard matrix D\n{}\
                 step 4: intersection matrix I\n{}\
                 step 5: distance {} ({})\n",
                first.name,
                second.name,
                report.resolved_interpretation.as_str(),
                labels.join(" "),
                vector(&v1),
                vector(&v2),
                vector(&diff),
                matrix_table(&frame_labels, r.matrix()),
                matrix_table(&labels, &d),
                matrix_table(&labels, &i_mat),
                significant(value),
                residual_note(value, ex2::DISTANCE),
            ))
        }
        Format::Csv => {
            let mut rows = Vec::new();
            let mut push = |artifact: &str, row: &str, col: &str, x: f64, reference: Option<f64>| {
                let mut r = vec![artifact.to_owned(), row.to_owned(), col.to_owned()];
                r.extend(reference_cells(x, reference));
                rows.push(r);
            };
            for (k, l) in labels.iter().enumerate() {
                push("d1", l, "", v1[k], None);
            }
            for (k, l) in labels.iter().enumerate() {
                push("d2", l, "", v2[k], None);
            }
            for (k, l) in labels.iter().enumerate() {
                push("difference", l, "", diff[k], Some(ex2::DIFFERENCE[k]));
            }
            for (a, la) in f.labels().iter().enumerate() {
                for (b, lb) in f.labels().iter().enumerate() {
                    push("R", la, lb, r.get(a, b), Some(ex2::RELATIVE[a][b]));
                }
            }
            for (a, la) in labels.iter().enumerate() {
                for (b, lb) in labels.iter().enumerate() {
                    push("D", la, lb, d[(a, b)], Some(ex2::JACCARD[a][b]));
                }
            }
            for (a, la) in labels.iter().enumerate() {
                for (b, lb) in labels.iter().enumerate() {
                    push("I", la, lb, i_mat[(a, b)], Some(ex2::INTERSECTION[a][b]));
                }
            }
            push("distance", "", "", value, Some(ex2::DISTANCE));
            csv_output(
                &["artifact", "row", "column", "computed", "reference", "residual"],
                rows,
            )
        }
    }
}

fn example3(format: Format) -> Result<String, CliError> {
    let f = ex3::frame();
    let a = dnumber(&f, &ex3::first())?;
    let b = dnumber(&f, &ex3::second())?;
    let bpa = bpa_distance(&a, &b)?;
    let dn = dnumber_distance(&a, &b, &ex3::relative()?, DistanceOptions::default())?.value;
    match format {
        Format::Text => Ok(format!(
            "frame: {{{}}}; non-exclusive degree {}\nd_BPA = {} ({})\nd_Dnumber = {} ({})\n",
            f.labels().join(", "),
            ex3::NON_EXCLUSIVE_DEGREE,
            significant(bpa),
            residual_note(bpa, ex3::BPA_DISTANCE),
            significant(dn),
            residual_note(dn, ex3::DNUMBER_DISTANCE),
        )),
        Format::Csv => {
            let row = |name: &str, x: f64, r: f64| {
                let mut v = vec![name.to_owned()];
                v.extend(reference_cells(x, Some(r)));
                v
            };
            csv_output(
                &["quantity", "computed", "reference", "residual"],
                vec![
                    row("d_BPA", bpa, ex3::BPA_DISTANCE),
                    row("d_Dnumber", dn, ex3::DNUMBER_DISTANCE),
                ],
            )
        }
    }
}

struct TableRow {
    case: usize,
    subset: String,
    bpa: f64,
    dn: f64,
    reference_bpa: f64,
    reference_dn: f64,
}

fn table_rows(report: &OracleReport, exclusive: bool) -> Result<Vec<TableRow>, CliError> {
    let name = report.table_reading.as_deref().unwrap_or("normalized");
    let reading = table::first_readings()
        .into_iter()
        .find(|r| r.name == name)
        .expect("resolved reading is one of the candidates");
    let f = table::frame();
    let (r, reference) = if exclusive {
        (table::relative_exclusive()?, table::DNUMBER_EXCLUSIVE)
    } else {
        (table::relative_overlapping()?, table::DNUMBER_OVERLAPPING)
    };
    let opts = DistanceOptions {
        interpretation: report.resolved_interpretation,
        clamp_negative: false,
    };
    let second = Mass::new(&f, MassKind::DNumber, table::second_assignment())?;
    (1..=table::CASES)
        .map(|k| {
            let first = Mass::new(&f, MassKind::DNumber, reading.assignment(k))?;
            Ok(TableRow {
                case: k,
                subset: table::case_label(k),
                bpa: bpa_distance(&first, &second)?,
                dn: dnumber_distance(&first, &second, &r, opts)?.value,
                reference_bpa: table::BPA[k - 1],
                reference_dn: reference[k - 1],
            })
        })
        .collect()
}

fn comparison_table(report: &OracleReport, exclusive: bool, format: Format) -> Result<String, CliError> {
    let rows = table_rows(report, exclusive)?;
    let dn_name = if exclusive { "d_Dnumber1" } else { "d_Dnumber" };
    match format {
        Format::Csv => {
            let header = [
                "case".to_owned(),
                "subset_A".to_owned(),
                "d_BPA".to_owned(),
                dn_name.to_owned(),
                "reference_d_BPA".to_owned(),
                format!("reference_{dn_name}"),
                "residual_d_BPA".to_owned(),
                format!("residual_{dn_name}"),
            ];
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            let body = rows
                .iter()
                .map(|r| {
                    vec![
                        r.case.to_string(),
                        r.subset.clone(),
                        shortest(r.bpa),
                        shortest(r.dn),
                        shortest(r.reference_bpa),
                        shortest(r.reference_dn),
                        shortest((r.bpa - r.reference_bpa).abs()),
                        shortest((r.dn - r.reference_dn).abs()),
                    ]
                })
                .collect();
            csv_output(&header, body)
        }
        Format::Text => {
            let mut out = format!(
                "reading: {}; interpretation: {}; relative matrix: {}\n",
                report.table_reading.as_deref().unwrap_or("normalized"),
                report.resolved_interpretation.as_str(),
                if exclusive { "identity" } else { "E12 = 0.1, E23 = 0.2" },
            );
            out.push_str(&format!(
                "{:>4}  {:<12}  {:>12}  {:>12}  {:>8}  {:>8}\n",
                "case", "A", "d_BPA", dn_name, "ref BPA", "ref D"
            ));
            let mut worst: f64 = 0.0;
            for r in &rows {
                out.push_str(&format!(
                    "{:>4}  {:<12}  {:>12}  {:>12}  {:>8}  {:>8}\n",
                    r.case,
                    r.subset,
                    significant(r.bpa),
                    significant(r.dn),
                    r.reference_bpa,
                    r.reference_dn
                ));
                worst = worst
                    .max((r.bpa - r.reference_bpa).abs())
                    .max((r.dn - r.reference_dn).abs());
            }
            out.push_str(&format!("max residual {worst:.1e}\n"));
            Ok(out)
        }
    }
}
