use crate::output::{self, sink};
use crate::Failure;
use pmf_core::constructions::{
    reference_table, verify_theorem_suite, CheckKind, Status, VerifyConfig,
};
use pmf_core::forcing::{forcing_number, forcing_polynomial, ForcingPolynomial};
use pmf_core::graph::build_generalized_petersen;
use pmf_core::matchings::{decode, parse_chain_expression, PerfectMatching};
use pmf_core::{EdgeId, Graph, SweepBudget};
use std::io::Write;
use std::process::ExitCode;

pub(crate) struct Context {
    pub format: String,
    pub out: Option<std::path::PathBuf>,
    pub budget: SweepBudget,
}

pub(crate) fn gen(ctx: &Context, n: usize, k: usize) -> Result<ExitCode, Failure> {
    let g = build_generalized_petersen(n, k)?;
    let mut w = sink(&ctx.out)?;
    w.write_all(g.render_edge_list().as_bytes())?;
    Ok(ExitCode::SUCCESS)
}

fn polynomial_of(n: usize, budget: SweepBudget) -> Result<ForcingPolynomial, pmf_core::Error> {
    let g = build_generalized_petersen(n, 2)?;
    forcing_polynomial(&g, budget)
}

pub(crate) fn polynomial(
    ctx: &Context,
    (lo, hi): (usize, usize),
    type_filter: &str,
) -> Result<ExitCode, Failure> {
    // Range sweeps with an output directory checkpoint one JSON file per n
    // and skip n's that already have a valid checkpoint.
    let checkpoint_dir = ctx.out.as_ref().filter(|_| lo != hi);
    if let Some(dir) = checkpoint_dir {
        std::fs::create_dir_all(dir)?;
    }
    let mut lines = Vec::new();
    for n in lo..=hi {
        let path = checkpoint_dir.map(|d| d.join(format!("poly_n{n:03}.json")));
        let cached: Option<ForcingPolynomial> = path
            .as_ref()
            .filter(|p| p.exists())
            .and_then(|p| std::fs::read_to_string(p).ok())
            .and_then(|text| output::polynomial_from_json(&text, n));
        let (poly, from_cache) = match cached {
            Some(p) => (p, true),
            None => match polynomial_of(n, ctx.budget) {
                Ok(p) => (p, false),
                Err(pmf_core::Error::BudgetExceeded { enumerated, budget }) => {
                    let marker = serde_json::json!({
                        "n": n,
                        "status": "budget-exceeded",
                        "enumerated": enumerated,
                        "budget": budget,
                    });
                    if let Some(p) = &path {
                        std::fs::write(p.with_extension("partial.json"), marker.to_string())?;
                    } else if let Some(single) = ctx.out.as_ref().filter(|_| lo == hi) {
                        std::fs::write(single, format!("{marker}\n"))?;
                    }
                    return Err(Failure {
                        code: 3,
                        message: format!(
                            "budget exceeded at n={n}: {enumerated} matchings of {budget}"
                        ),
                    });
                }
                Err(e) => return Err(e.into()),
            },
        };
        if let (Some(p), false) = (&path, from_cache) {
            std::fs::write(p, output::polynomial_to_json(&poly))?;
        }
        lines.push((n, poly, from_cache));
    }

    if lo == hi {
        let (_, poly, _) = &lines[0];
        let rendered = match ctx.format.as_str() {
            "json" => output::polynomial_to_json(poly),
            "csv" => output::polynomial_to_csv(poly, type_filter),
            _ => output::polynomial_to_text(poly, type_filter),
        };
        let mut w = sink(&ctx.out)?;
        w.write_all(rendered.as_bytes())?;
        return Ok(ExitCode::SUCCESS);
    }

    // range: per-n text summary on stdout (files already checkpointed)
    let mut stdout = std::io::stdout().lock();
    for (n, poly, cached) in &lines {
        let rendered = match ctx.format.as_str() {
            "csv" => output::polynomial_to_csv(poly, type_filter),
            "json" => format!("{}\n", output::polynomial_to_json(poly).trim_end()),
            _ => format!(
                "n={n} ({})+({}){}\n",
                ForcingPolynomial::render(&poly.type1),
                ForcingPolynomial::render(&poly.type2),
                if *cached { "  [checkpoint]" } else { "" }
            ),
        };
        stdout.write_all(rendered.as_bytes())?;
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_matching(g: &Graph, n: usize, text: &str) -> Result<PerfectMatching, Failure> {
    let text = text.trim();
    if text
        .chars()
        .all(|c| c.is_ascii_digit() || c == ',' || c.is_whitespace())
    {
        let mut edges = Vec::new();
        for tok in text.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let id: u32 = tok
                .parse()
                .map_err(|_| Failure::usage(format!("bad edge id {tok:?}")))?;
            edges.push(EdgeId(id));
        }
        return Ok(PerfectMatching::from_edges(g, &edges)?);
    }
    let word = parse_chain_expression(text)?;
    if word.span() != n {
        return Err(Failure::usage(format!("length {} != {n}", word.span())));
    }
    Ok(decode(g, &word)?)
}

pub(crate) fn forcing(ctx: &Context, n: usize, matching: &str) -> Result<ExitCode, Failure> {
    let g = build_generalized_petersen(n, 2)?;
    let m = parse_matching(&g, n, matching)?;
    let (f, witness) = forcing_number(&g, &m)?;
    let witness = witness.to_sorted_edges();
    let rendered = match ctx.format.as_str() {
        "json" => {
            let v = serde_json::json!({
                "n": n,
                "matching": m.to_sorted_edges(),
                "f": f,
                "witness": witness,
            });
            format!("{v}\n")
        }
        "csv" => {
            let ids: Vec<String> = witness.iter().map(|e| e.to_string()).collect();
            format!("n,f,witness\n{n},{f},{}\n", ids.join(" "))
        }
        _ => {
            let ids: Vec<String> = witness.iter().map(|e| e.to_string()).collect();
            format!("f = {f}\nwitness: {}\n", ids.join(" "))
        }
    };
    let mut w = sink(&ctx.out)?;
    w.write_all(rendered.as_bytes())?;
    Ok(ExitCode::SUCCESS)
}

pub(crate) fn verify(
    ctx: &Context,
    what: &str,
    range: (Option<usize>, Option<usize>),
) -> Result<ExitCode, Failure> {
    // per-family default windows; an explicit range overrides
    let table_max = reference_table().max_n();
    let (checks, default_range): (Vec<CheckKind>, (usize, usize)) = match what {
        "counts" => (vec![CheckKind::Counts], (3, table_max)),
        "table1" => (vec![CheckKind::Table1], (3, 20)),
        "extremal" => (vec![CheckKind::Extremal], (9, 22)),
        "dcform" => (vec![CheckKind::DcForm], (3, 24)),
        "spectrum" => (vec![CheckKind::Spectrum], (34, table_max)),
        "gaps" => (vec![CheckKind::Gaps], (3, 200)),
        "textual" => (vec![CheckKind::Textual], (9, 400)),
        "all" => (
            vec![
                CheckKind::Counts,
                CheckKind::Table1,
                CheckKind::Extremal,
                CheckKind::DcForm,
                CheckKind::Spectrum,
                CheckKind::Gaps,
                CheckKind::Textual,
            ],
            (3, 24),
        ),
        other => {
            return Err(Failure::usage(format!(
                "unknown verify target {other:?}; expected counts|table1|extremal|dcform|spectrum|gaps|textual|all"
            )))
        }
    };
    let min_n = range.0.unwrap_or(default_range.0);
    let max_n = range.1.unwrap_or(default_range.1);
    if min_n > max_n {
        return Err(Failure::usage(format!("empty range {min_n}..{max_n}")));
    }
    let report = verify_theorem_suite(&VerifyConfig {
        checks,
        min_n,
        max_n,
        budget: ctx.budget,
    })?;
    let rendered = match ctx.format.as_str() {
        "json" => format!("{}\n", serde_json::to_string_pretty(&report).unwrap()),
        _ => report.render_text(),
    };
    let mut w = sink(&ctx.out)?;
    w.write_all(rendered.as_bytes())?;
    drop(w);
    if report.failures() > 0 {
        let summary: Vec<&str> = report
            .items
            .iter()
            .filter(|i| i.status == Status::Fail)
            .map(|i| i.claim.as_str())
            .take(3)
            .collect();
        eprintln!(
            "verification failed: {} item(s), e.g. {}",
            report.failures(),
            summary.join("; ")
        );
        return Ok(ExitCode::from(2));
    }
    if report.budget_exhaustions() > 0 {
        eprintln!(
            "verification incomplete: {} item(s) hit the enumeration budget",
            report.budget_exhaustions()
        );
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}
