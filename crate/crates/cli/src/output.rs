use crate::Failure;
use pmf_core::forcing::ForcingPolynomial;
use std::collections::BTreeMap;
use std::io::Write;

/// Opens the output sink: a file when `--out` was given, stdout otherwise.
pub(crate) fn sink(out: &Option<std::path::PathBuf>) -> Result<Box<dyn Write>, Failure> {
    match out {
        Some(path) => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent)?;
            }
            Ok(Box::new(std::fs::File::create(path)?))
        }
        None => Ok(Box::new(std::io::stdout().lock())),
    }
}

pub(crate) fn polynomial_to_json(poly: &ForcingPolynomial) -> String {
    format!("{}\n", serde_json::to_string(poly).unwrap())
}

/// Re-reads a checkpointed polynomial, accepting it only if it matches `n`.
pub(crate) fn polynomial_from_json(text: &str, n: usize) -> Option<ForcingPolynomial> {
    let v: serde_json::Value = serde_json::from_str(text).ok()?;
    if v.get("n")?.as_u64()? != n as u64 {
        return None;
    }
    let read_map = |key: &str| -> Option<BTreeMap<usize, u64>> {
        let mut map = BTreeMap::new();
        for pair in v.get(key)?.as_array()? {
            let pair = pair.as_array()?;
            map.insert(pair.first()?.as_u64()? as usize, pair.get(1)?.as_u64()?);
        }
        Some(map)
    };
    Some(ForcingPolynomial {
        n: Some(n),
        total: read_map("total")?,
        type1: read_map("type1")?,
        type2: read_map("type2")?,
    })
}

pub(crate) fn polynomial_to_csv(poly: &ForcingPolynomial, type_filter: &str) -> String {
    let mut out = String::from("n,type,exponent,coefficient\n");
    let n = poly.n.unwrap_or(0);
    for (ty, map) in [(1usize, &poly.type1), (2, &poly.type2)] {
        if type_filter != "all" && type_filter != ty.to_string() {
            continue;
        }
        for (exp, coeff) in map {
            out.push_str(&format!("{n},{ty},{exp},{coeff}\n"));
        }
    }
    out
}

pub(crate) fn polynomial_to_text(poly: &ForcingPolynomial, type_filter: &str) -> String {
    let mut out = String::new();
    if let Some(n) = poly.n {
        out.push_str(&format!("n = {n}\n"));
    }
    if type_filter == "all" {
        out.push_str(&format!(
            "total: {}\n",
            ForcingPolynomial::render(&poly.total)
        ));
    }
    if type_filter != "2" {
        out.push_str(&format!(
            "type1: {}\n",
            ForcingPolynomial::render(&poly.type1)
        ));
    }
    if type_filter != "1" {
        out.push_str(&format!(
            "type2: {}\n",
            ForcingPolynomial::render(&poly.type2)
        ));
    }
    out
}
