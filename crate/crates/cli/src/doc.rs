//! The `tnp/1` document format: a line-oriented key/value text form for
//! polynomials, polynomials in `y`, systems, rational functions, and CNFs.
//!
//! Rationals are serialized as `p` or `p/q` strings; exponent vectors are
//! length-checked against the declared variable list. Printing is canonical
//! (monomials in their stored order), so `parse(print(doc)) == doc`.

use std::fmt;
use tnp_core::poly::{Monomial, NpPoly, PolyInY};
use tnp_core::rat::{format_rat, parse_rat, Rat};
use tnp_core::resolve::RationalPl;
use tnp_core::sat::Cnf3;

pub const FORMAT_VERSION: &str = "tnp/1";

#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    Polynomial { vars: Vec<String>, name: String, poly: NpPoly },
    PolynomialInY { vars: Vec<String>, poly: PolyInY },
    System { vars: Vec<String>, polys: Vec<(String, NpPoly)> },
    RationalFunction { vars: Vec<String>, func: RationalPl },
    Cnf { cnf: Cnf3 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub format_version: String,
    pub payload: Payload,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocError {
    pub line: Option<usize>,
    pub field: String,
    pub msg: String,
}

impl DocError {
    fn new(line: Option<usize>, field: &str, msg: impl Into<String>) -> Self {
        DocError { line, field: field.to_string(), msg: msg.into() }
    }
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(n) => write!(f, "line {n}: field `{}`: {}", self.field, self.msg),
            None => write!(f, "field `{}`: {}", self.field, self.msg),
        }
    }
}

impl std::error::Error for DocError {}

enum Section {
    Poly { name: String, terms: Vec<(Rat, Vec<Rat>)>, line: usize },
    Coeff { degree: usize, terms: Vec<(Rat, Vec<Rat>)>, line: usize },
}

/// Parses a `tnp/1` document.
pub fn parse_document(text: &str) -> Result<Document, DocError> {
    let mut format_version: Option<String> = None;
    let mut kind: Option<String> = None;
    let mut vars: Option<Vec<String>> = None;
    let mut nvars: Option<usize> = None;
    let mut clauses: Vec<[i64; 3]> = Vec::new();
    let mut sections: Vec<Section> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| DocError::new(Some(lineno), "line", "expected `key: value`"))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "format" => format_version = Some(value.to_string()),
            "kind" => kind = Some(value.to_string()),
            "vars" => {
                let list: Vec<String> = value.split_whitespace().map(String::from).collect();
                if list.is_empty() {
                    return Err(DocError::new(Some(lineno), "vars", "empty variable list"));
                }
                for (i, v) in list.iter().enumerate() {
                    if list[..i].contains(v) {
                        return Err(DocError::new(
                            Some(lineno),
                            "vars",
                            format!("duplicate variable `{v}`"),
                        ));
                    }
                }
                vars = Some(list);
            }
            "nvars" => {
                nvars = Some(value.parse().map_err(|_| {
                    DocError::new(Some(lineno), "nvars", format!("bad count `{value}`"))
                })?);
            }
            "poly" => {
                if value.is_empty() || value.contains(char::is_whitespace) {
                    return Err(DocError::new(Some(lineno), "poly", "bad polynomial name"));
                }
                sections.push(Section::Poly {
                    name: value.to_string(),
                    terms: Vec::new(),
                    line: lineno,
                });
            }
            "coeff" => {
                let degree = value.parse().map_err(|_| {
                    DocError::new(Some(lineno), "coeff", format!("bad degree `{value}`"))
                })?;
                sections.push(Section::Coeff { degree, terms: Vec::new(), line: lineno });
            }
            "term" => {
                let (coeff_str, exps_str) = value.split_once(';').ok_or_else(|| {
                    DocError::new(Some(lineno), "term", "expected `coeff ; exponents`")
                })?;
                let coeff = parse_rat(coeff_str)
                    .map_err(|e| DocError::new(Some(lineno), "term", e.to_string()))?;
                let mut exps = Vec::new();
                for tok in exps_str.split_whitespace() {
                    exps.push(
                        parse_rat(tok)
                            .map_err(|e| DocError::new(Some(lineno), "term", e.to_string()))?,
                    );
                }
                match sections.last_mut() {
                    Some(Section::Poly { terms, .. }) | Some(Section::Coeff { terms, .. }) => {
                        terms.push((coeff, exps));
                    }
                    None => {
                        return Err(DocError::new(
                            Some(lineno),
                            "term",
                            "term outside a `poly` or `coeff` section",
                        ));
                    }
                }
            }
            "clause" => {
                let lits: Result<Vec<i64>, _> =
                    value.split_whitespace().map(str::parse).collect();
                let lits = lits.map_err(|_| {
                    DocError::new(Some(lineno), "clause", format!("bad literals `{value}`"))
                })?;
                let arr: [i64; 3] = lits.try_into().map_err(|_| {
                    DocError::new(Some(lineno), "clause", "expected exactly 3 literals")
                })?;
                clauses.push(arr);
            }
            other => {
                return Err(DocError::new(Some(lineno), other, "unknown field"));
            }
        }
    }

    let format_version =
        format_version.ok_or_else(|| DocError::new(None, "format", "missing"))?;
    if format_version != FORMAT_VERSION {
        return Err(DocError::new(
            None,
            "format",
            format!("unsupported version `{format_version}`"),
        ));
    }
    let kind = kind.ok_or_else(|| DocError::new(None, "kind", "missing"))?;

    let build_poly = |name: &str,
                      terms: &[(Rat, Vec<Rat>)],
                      vars: &[String],
                      line: usize|
     -> Result<NpPoly, DocError> {
        if terms.is_empty() {
            return Err(DocError::new(Some(line), "poly", format!("`{name}` has no terms")));
        }
        for (_, exps) in terms {
            if exps.len() != vars.len() {
                return Err(DocError::new(
                    Some(line),
                    "term",
                    format!(
                        "`{name}`: exponent count {} does not match {} variables",
                        exps.len(),
                        vars.len()
                    ),
                ));
            }
        }
        NpPoly::new(
            vars.len(),
            terms.iter().map(|(c, e)| Monomial::new(c.clone(), e.clone())).collect(),
        )
        .map_err(|e| DocError::new(Some(line), "poly", e.to_string()))
    };

    let need_vars = |vars: &Option<Vec<String>>| -> Result<Vec<String>, DocError> {
        vars.clone().ok_or_else(|| DocError::new(None, "vars", "missing"))
    };

    let payload = match kind.as_str() {
        "polynomial" => {
            let vars = need_vars(&vars)?;
            let mut polys = Vec::new();
            for s in &sections {
                match s {
                    Section::Poly { name, terms, line } => {
                        polys.push((name.clone(), build_poly(name, terms, &vars, *line)?));
                    }
                    Section::Coeff { line, .. } => {
                        return Err(DocError::new(
                            Some(*line),
                            "coeff",
                            "coeff sections belong to polynomial-in-y documents",
                        ));
                    }
                }
            }
            if polys.len() != 1 {
                return Err(DocError::new(
                    None,
                    "poly",
                    format!("expected exactly one polynomial, found {}", polys.len()),
                ));
            }
            let (name, poly) = polys.into_iter().next().expect("checked");
            Payload::Polynomial { vars, name, poly }
        }
        "polynomial-in-y" => {
            let vars = need_vars(&vars)?;
            let mut coeffs: Vec<(usize, NpPoly, usize)> = Vec::new();
            for s in &sections {
                match s {
                    Section::Coeff { degree, terms, line } => {
                        if coeffs.iter().any(|(d, _, _)| d == degree) {
                            return Err(DocError::new(
                                Some(*line),
                                "coeff",
                                format!("duplicate degree {degree}"),
                            ));
                        }
                        let poly = build_poly(&format!("coeff {degree}"), terms, &vars, *line)?;
                        coeffs.push((*degree, poly, *line));
                    }
                    Section::Poly { line, .. } => {
                        return Err(DocError::new(
                            Some(*line),
                            "poly",
                            "poly sections belong to polynomial or system documents",
                        ));
                    }
                }
            }
            let max_degree = coeffs
                .iter()
                .map(|(d, _, _)| *d)
                .max()
                .ok_or_else(|| DocError::new(None, "coeff", "no coefficient sections"))?;
            let mut slots: Vec<Option<NpPoly>> = vec![None; max_degree + 1];
            for (d, p, _) in coeffs {
                slots[d] = Some(p);
            }
            let poly = PolyInY::new(vars.len(), slots)
                .map_err(|e| DocError::new(None, "coeff", e.to_string()))?;
            Payload::PolynomialInY { vars, poly }
        }
        "system" => {
            let vars = need_vars(&vars)?;
            let mut polys = Vec::new();
            for s in &sections {
                match s {
                    Section::Poly { name, terms, line } => {
                        if polys.iter().any(|(n, _): &(String, NpPoly)| n == name) {
                            return Err(DocError::new(
                                Some(*line),
                                "poly",
                                format!("duplicate polynomial `{name}`"),
                            ));
                        }
                        polys.push((name.clone(), build_poly(name, terms, &vars, *line)?));
                    }
                    Section::Coeff { line, .. } => {
                        return Err(DocError::new(
                            Some(*line),
                            "coeff",
                            "coeff sections belong to polynomial-in-y documents",
                        ));
                    }
                }
            }
            if polys.is_empty() {
                return Err(DocError::new(None, "poly", "system has no polynomials"));
            }
            Payload::System { vars, polys }
        }
        "rational-function" => {
            let vars = need_vars(&vars)?;
            let mut g = None;
            let mut h = None;
            for s in &sections {
                match s {
                    Section::Poly { name, terms, line } => match name.as_str() {
                        "g" => g = Some(build_poly(name, terms, &vars, *line)?),
                        "h" => h = Some(build_poly(name, terms, &vars, *line)?),
                        other => {
                            return Err(DocError::new(
                                Some(*line),
                                "poly",
                                format!("expected `g` or `h`, found `{other}`"),
                            ));
                        }
                    },
                    Section::Coeff { line, .. } => {
                        return Err(DocError::new(Some(*line), "coeff", "unexpected section"));
                    }
                }
            }
            let g = g.ok_or_else(|| DocError::new(None, "poly", "missing part `g`"))?;
            let h = h.ok_or_else(|| DocError::new(None, "poly", "missing part `h`"))?;
            let func = RationalPl::new(g, h)
                .map_err(|e| DocError::new(None, "poly", e.to_string()))?;
            Payload::RationalFunction { vars, func }
        }
        "cnf" => {
            let nvars = nvars.ok_or_else(|| DocError::new(None, "nvars", "missing"))?;
            let cnf = Cnf3::new(nvars, clauses)
                .map_err(|e| DocError::new(None, "clause", e.to_string()))?;
            Payload::Cnf { cnf }
        }
        other => {
            return Err(DocError::new(None, "kind", format!("unknown kind `{other}`")));
        }
    };
    Ok(Document { format_version, payload })
}

fn print_terms(out: &mut String, poly: &NpPoly) {
    for m in poly.monomials() {
        let exps: Vec<String> = m.exps.iter().map(format_rat).collect();
        out.push_str(&format!("term: {} ; {}\n", format_rat(&m.coeff), exps.join(" ")));
    }
}

/// Canonical text form of a document.
pub fn print_document(doc: &Document) -> String {
    let mut out = String::new();
    out.push_str(&format!("format: {}\n", doc.format_version));
    match &doc.payload {
        Payload::Polynomial { vars, name, poly } => {
            out.push_str("kind: polynomial\n");
            out.push_str(&format!("vars: {}\n", vars.join(" ")));
            out.push_str(&format!("poly: {name}\n"));
            print_terms(&mut out, poly);
        }
        Payload::PolynomialInY { vars, poly } => {
            out.push_str("kind: polynomial-in-y\n");
            out.push_str(&format!("vars: {}\n", vars.join(" ")));
            for (d, coeff) in poly.coeffs().iter().enumerate() {
                if let Some(c) = coeff {
                    out.push_str(&format!("coeff: {d}\n"));
                    print_terms(&mut out, c);
                }
            }
        }
        Payload::System { vars, polys } => {
            out.push_str("kind: system\n");
            out.push_str(&format!("vars: {}\n", vars.join(" ")));
            for (name, poly) in polys {
                out.push_str(&format!("poly: {name}\n"));
                print_terms(&mut out, poly);
            }
        }
        Payload::RationalFunction { vars, func } => {
            out.push_str("kind: rational-function\n");
            out.push_str(&format!("vars: {}\n", vars.join(" ")));
            out.push_str("poly: g\n");
            print_terms(&mut out, func.g());
            out.push_str("poly: h\n");
            print_terms(&mut out, func.h());
        }
        Payload::Cnf { cnf } => {
            out.push_str("kind: cnf\n");
            out.push_str(&format!("nvars: {}\n", cnf.num_vars));
            for c in &cnf.clauses {
                out.push_str(&format!("clause: {} {} {}\n", c[0], c[1], c[2]));
            }
        }
    }
    out
}

/// Human-readable inline form of a polynomial with named variables.
pub fn inline_poly(poly: &NpPoly, vars: &[String]) -> String {
    let parts: Vec<String> =
        poly.monomials().iter().map(|m| tnp_core::poly::format_monomial(m, vars)).collect();
    if parts.len() == 1 {
        parts.into_iter().next().expect("single")
    } else {
        format!("min({})", parts.join(", "))
    }
}

pub fn inline_rational(func: &RationalPl, vars: &[String]) -> String {
    format!("[{}] - [{}]", inline_poly(func.g(), vars), inline_poly(func.h(), vars))
}

#[cfg(test)]
mod tests {
    use super::*;
    use tnp_core::rat::rat_int;

    fn sample_poly() -> NpPoly {
        NpPoly::new(
            2,
            vec![
                Monomial::new(rat_int(0), vec![rat_int(1), rat_int(0)]),
                Monomial::new(
                    tnp_core::rat::rat(-1, 2),
                    vec![tnp_core::rat::rat(1, 3), rat_int(2)],
                ),
            ],
        )
        .unwrap()
    }

    #[test]
    fn polynomial_round_trip() {
        let doc = Document {
            format_version: FORMAT_VERSION.to_string(),
            payload: Payload::Polynomial {
                vars: vec!["x".into(), "y".into()],
                name: "f".into(),
                poly: sample_poly(),
            },
        };
        let text = print_document(&doc);
        assert_eq!(parse_document(&text).unwrap(), doc);
    }

    #[test]
    fn polynomial_in_y_round_trip() {
        let f0 = NpPoly::new(
            1,
            vec![
                Monomial::new(rat_int(0), vec![rat_int(1)]),
                Monomial::new(rat_int(0), vec![rat_int(0)]),
            ],
        )
        .unwrap();
        let poly =
            PolyInY::new(1, vec![Some(f0), None, Some(NpPoly::constant(1, rat_int(0)))]).unwrap();
        let doc = Document {
            format_version: FORMAT_VERSION.to_string(),
            payload: Payload::PolynomialInY { vars: vec!["x".into()], poly },
        };
        let text = print_document(&doc);
        assert_eq!(parse_document(&text).unwrap(), doc);
    }

    #[test]
    fn system_and_rational_round_trip() {
        let doc = Document {
            format_version: FORMAT_VERSION.to_string(),
            payload: Payload::System {
                vars: vec!["x".into(), "y".into()],
                polys: vec![
                    ("f1".into(), sample_poly()),
                    ("f2".into(), NpPoly::constant(2, rat_int(3))),
                ],
            },
        };
        assert_eq!(parse_document(&print_document(&doc)).unwrap(), doc);

        let func = RationalPl::new(
            NpPoly::constant(1, rat_int(0)),
            NpPoly::new(
                1,
                vec![
                    Monomial::new(rat_int(0), vec![rat_int(1)]),
                    Monomial::new(rat_int(0), vec![rat_int(0)]),
                ],
            )
            .unwrap(),
        )
        .unwrap();
        let doc = Document {
            format_version: FORMAT_VERSION.to_string(),
            payload: Payload::RationalFunction { vars: vec!["x".into()], func },
        };
        assert_eq!(parse_document(&print_document(&doc)).unwrap(), doc);
    }

    #[test]
    fn cnf_round_trip() {
        let doc = Document {
            format_version: FORMAT_VERSION.to_string(),
            payload: Payload::Cnf { cnf: Cnf3::new(3, vec![[1, -2, 3]]).unwrap() },
        };
        assert_eq!(parse_document(&print_document(&doc)).unwrap(), doc);
    }

    #[test]
    fn diagnostics_name_the_field() {
        let bad = "format: tnp/1\nkind: polynomial\nvars: x\npoly: f\nterm: 1 ; 2 3\n";
        let err = parse_document(bad).unwrap_err();
        assert_eq!(err.field, "term");
        assert!(err.msg.contains("exponent count"));

        let err = parse_document("format: tnp/2\nkind: cnf\nnvars: 1\n").unwrap_err();
        assert_eq!(err.field, "format");

        let err =
            parse_document("format: tnp/1\nkind: polynomial\nvars: x x\npoly: f\nterm: 0 ; 1\n")
                .unwrap_err();
        assert_eq!(err.field, "vars");
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let text = "# header\nformat: tnp/1\n\nkind: polynomial\nvars: x\npoly: f\nterm: 0 ; 1\n";
        assert!(parse_document(text).is_ok());
    }
}
