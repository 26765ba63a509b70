//! Text, JSON, and LaTeX emitters for every surface type.
//!
//! JSON schemas (rationals always appear as `"p"` or `"p/q"` strings,
//! never floats):
//!
//! ```text
//!   Element:          {"n": N, "terms": [{"word": [[a] | [a,b], ..], "coeff": "p/q"}]}
//!   WeylElement:      same as Element with "weyl": true and odd letters only
//!   OmegaElement:     {"n": N, "terms": [{"indices": [a, ..], "coeff": "p/q"}]}
//!   CoeffTable:       {"n": N, "route": "series", "x": ["p/q", ..], "y": ["p/q", ..]}
//!   CartanPolynomial: {"vars": N, "terms": [{"exps": [e1, .., eN], "coeff": "p/q"}]}
//!   Matrix:           [["p/q", ..], ..]   (row-major)
//!   Report:           {"name": .., "status": "pass"|"fail", "details": [..], "timing_ms": ..}
//! ```

use serde_json::{json, Value};

use scasimir_core::{
    CartanPolynomial, CoeffTable, Element, Generator, OmegaElement, RatMatrix, Report, Status,
    WeylElement,
};

pub fn element_json(x: &Element) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .map(|(w, c)| {
            let word: Vec<Value> = w
                .0
                .iter()
                .map(|g| match g {
                    Generator::Odd(a) => json!([a]),
                    Generator::Even(a, b) => json!([a, b]),
                })
                .collect();
            json!({"word": word, "coeff": c.to_string()})
        })
        .collect();
    json!({"n": x.n(), "terms": terms})
}

pub fn weyl_json(x: &WeylElement) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .map(|(w, c)| {
            let word: Vec<Value> = w.iter().map(|a| json!([a])).collect();
            json!({"word": word, "coeff": c.to_string()})
        })
        .collect();
    json!({"n": x.n(), "weyl": true, "terms": terms})
}

pub fn omega_json(w: &OmegaElement) -> Value {
    let terms: Vec<Value> = w
        .terms()
        .map(|(b, c)| json!({"indices": b.indices(), "coeff": c.to_string()}))
        .collect();
    json!({"n": w.n(), "terms": terms})
}

pub fn coeff_table_json(t: &CoeffTable) -> Value {
    json!({
        "n": t.n,
        "route": t.route.to_string(),
        "x": t.x.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "y": t.y.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    })
}

pub fn cartan_json(p: &CartanPolynomial) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| json!({"exps": e, "coeff": c.to_string()}))
        .collect();
    json!({"vars": p.n(), "terms": terms})
}

pub fn matrix_json(m: &RatMatrix) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|r| {
            Value::Array(
                m.row(r)
                    .iter()
                    .map(|v| Value::String(v.to_string()))
                    .collect(),
            )
        })
        .collect();
    Value::Array(rows)
}

pub fn report_json(r: &Report) -> Value {
    json!({
        "name": r.name,
        "status": match r.status { Status::Pass => "pass", Status::Fail => "fail" },
        "details": r.details,
        "timing_ms": r.elapsed.as_secs_f64() * 1e3,
    })
}

// ---------------------------------------------------------------------
// LaTeX
// ---------------------------------------------------------------------

/// Wraps `body` (display-math content) into a standalone document.
pub fn latex_document(body: &str) -> String {
    format!(
        "\\documentclass{{article}}\n\\usepackage{{amsmath}}\n\\begin{{document}}\n{body}\n\\end{{document}}\n"
    )
}

pub fn rat_latex(r: &scasimir_core::Rat) -> String {
    use num_traits::One;
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else if r.numer() < &num_bigint::BigInt::from(0) {
        format!("-\\frac{{{}}}{{{}}}", -r.numer(), r.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

fn index_latex(n: u32, a: u32) -> String {
    if a > n {
        format!("\\bar{{{}}}", a - n)
    } else {
        format!("{a}")
    }
}

pub fn generator_latex(n: u32, g: Generator) -> String {
    match g {
        Generator::Odd(a) => format!("\\sigma_{{{}}}", index_latex(n, a)),
        Generator::Even(a, b) => {
            format!("\\sigma_{{{}{}}}", index_latex(n, a), index_latex(n, b))
        }
    }
}

pub fn element_latex(x: &Element) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let n = x.n();
    let mut parts = Vec::new();
    for (w, c) in x.terms() {
        let coeff = rat_latex(c);
        let word: Vec<String> = w.0.iter().map(|g| generator_latex(n, *g)).collect();
        let body = if word.is_empty() {
            coeff
        } else if c == &scasimir_core::rat(1, 1) {
            word.join("\\,")
        } else {
            format!("{coeff}\\,{}", word.join("\\,"))
        };
        parts.push(body);
    }
    parts.join(" + ")
}

pub fn omega_latex(w: &OmegaElement) -> String {
    if w.is_zero() {
        return "0".into();
    }
    let n = w.n();
    let mut parts = Vec::new();
    for (b, c) in w.terms() {
        let bracket = if b.is_empty() {
            String::new()
        } else {
            let idx: Vec<String> = b.indices().iter().map(|a| index_latex(n, *a)).collect();
            format!("[{}]", idx.join("\\,"))
        };
        let coeff = rat_latex(c);
        let body = if bracket.is_empty() {
            coeff
        } else if c == &scasimir_core::rat(1, 1) {
            bracket
        } else {
            format!("{coeff}\\,{bracket}")
        };
        parts.push(body);
    }
    parts.join(" + ")
}

/// One `Sc` line in the layout of the coefficient tables:
/// `Sc^{(n)} = A^{(n)}_{2n} + x_1 A^{(n)}_{2n-2} + ..`.
pub fn coeff_table_latex(t: &CoeffTable) -> String {
    let mut terms = Vec::new();
    for (k, x) in t.x.iter().enumerate() {
        let degree = 2 * t.n - 2 * k as u32;
        let coeff = if k == 0 {
            String::new()
        } else {
            format!("{} \\, ", rat_latex(x))
        };
        terms.push(format!("{coeff}A^{{({})}}_{{{degree}}}", t.n));
    }
    format!("S\\!c^{{({})}} = {}", t.n, terms.join(" + "))
}

pub fn cartan_latex(p: &CartanPolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (exps, c) in p.terms() {
        let vars: Vec<String> = exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, e)| {
                if *e == 1 {
                    format!("H_{{{}}}", i + 1)
                } else {
                    format!("H_{{{}}}^{{{}}}", i + 1, e)
                }
            })
            .collect();
        let body = if vars.is_empty() {
            rat_latex(c)
        } else if c == &scasimir_core::rat(1, 1) {
            vars.join(" ")
        } else {
            format!("{} \\, {}", rat_latex(c), vars.join(" "))
        };
        parts.push(body);
    }
    parts.join(" + ")
}

pub fn matrix_latex(m: &RatMatrix) -> String {
    let mut rows = Vec::new();
    for r in 0..m.rows() {
        let cells: Vec<String> = m.row(r).iter().map(rat_latex).collect();
        rows.push(cells.join(" & "));
    }
    format!(
        "\\begin{{pmatrix}} {} \\end{{pmatrix}}",
        rows.join(" \\\\ ")
    )
}

pub fn report_latex(r: &Report) -> String {
    let tag = match r.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
    };
    let mut body = format!("\\texttt{{[{tag}]}} \\texttt{{{}}}", escape_latex(&r.name));
    if !r.details.is_empty() {
        body.push_str("\\begin{itemize}\n");
        for d in &r.details {
            body.push_str(&format!("\\item \\texttt{{{}}}\n", escape_latex(d)));
        }
        body.push_str("\\end{itemize}");
    }
    body
}

pub fn escape_latex(s: &str) -> String {
    s.replace('\\', "\\textbackslash ")
        .replace('_', "\\_")
        .replace('{', "\\{")
        .replace('}', "\\}")
        .replace('^', "\\^{}")
        .replace('#', "\\#")
        .replace('%', "\\%")
        .replace('&', "\\&")
        .replace('$', "\\$")
        .replace('▷', "|>")
}

#[cfg(test)]
mod tests {
    use super::*;
    use scasimir_core::{rat, scasimir, coeffs};

    #[test]
    fn rationals_render_as_strings() {
        assert_eq!(rat_latex(&rat(3, 1)), "3");
        assert_eq!(rat_latex(&rat(-3, 2)), "-\\frac{3}{2}");
        assert_eq!(rat_latex(&rat(9, 2)), "\\frac{9}{2}");
    }

    #[test]
    fn omega_json_schema() {
        let v = omega_json(&scasimir(2));
        assert_eq!(v["n"], 2);
        let terms = v["terms"].as_array().unwrap();
        assert_eq!(terms.len(), 4);
        for t in terms {
            assert!(t["indices"].is_array());
            assert!(t["coeff"].is_string());
        }
    }

    #[test]
    fn coeff_table_json_schema() {
        let v = coeff_table_json(&coeffs(2));
        assert_eq!(v["route"], "series");
        assert_eq!(v["x"].as_array().unwrap().len(), 3);
        assert_eq!(v["x"][2], "9/2");
    }

    #[test]
    fn latex_document_is_balanced() {
        let doc = latex_document(&format!("\\[ {} \\]", omega_latex(&scasimir(2))));
        assert!(doc.starts_with("\\documentclass"));
        assert!(doc.contains("\\begin{document}"));
        assert!(doc.contains("\\end{document}"));
        let opens = doc.matches('{').count();
        let closes = doc.matches('}').count();
        assert_eq!(opens, closes);
    }
}
