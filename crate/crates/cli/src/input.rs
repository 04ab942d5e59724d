//! Algebra files and built-in fixtures.
//!
//! An algebra file is a JSON object
//!
//! ```text
//! {
//!   "name": "paper_L",
//!   "kind": "hom_leibniz",
//!   "dim": 2,
//!   "field": "rational",
//!   "product": [
//!     [["0", "0"], ["0", "0"]],
//!     [["0", "0"], ["1", "0"]]
//!   ],
//!   "twist": [
//!     ["1", "1"],
//!     ["0", "1"]
//!   ]
//! }
//! ```
//!
//! `product[i][j]` holds the coordinates of `eᵢ·eⱼ` and `twist[r][c]` is the
//! row-major matrix of the twist, so column `c` is the image of `e_c`.
//! Entries are rational strings `[+-]?digits(/digits)?` with a nonzero
//! denominator and no whitespace. No other keys are accepted.

use homleib::algebra::fixtures::{
    abelian, diagonal_leibniz3, dual_numbers, heisenberg, leibniz_right_unit, nilpotent_leibniz3, paper_a, paper_l,
    rational_unit, truncated_poly_scaled, zinbiel_scaled, zinbiel_truncated,
};
use homleib::algebra::{AlgebraKind, AlgebraSpec};
use homleib::linalg::{int, parse_scalar, Matrix, Scalar};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub kind: String,
    pub dim: usize,
    pub field: String,
    pub product: Vec<Vec<Vec<String>>>,
    pub twist: Vec<Vec<String>>,
}

/// A resolved input: the declared kind is kept apart from the spec, which is
/// untyped until [`Loaded::typed`] runs the matching axiom checker.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub name: String,
    pub kind: AlgebraKind,
    pub spec: AlgebraSpec,
}

impl Loaded {
    pub fn typed(&self) -> Result<AlgebraSpec, CliError> {
        Ok(self.spec.clone().with_kind(self.kind)?)
    }
}

fn input_error(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn scalar(s: &str, at: &str) -> Result<Scalar, CliError> {
    parse_scalar(s).ok_or_else(|| input_error(format!("{at}: `{s}` is not a rational string")))
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let file: AlgebraFile = serde_json::from_str(text).map_err(|e| input_error(format!("algebra file: {e}")))?;
        file.validate()?;
        Ok(file)
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.field != "rational" {
            return Err(input_error(format!("field must be \"rational\", got \"{}\"", self.field)));
        }
        if AlgebraKind::from_tag(&self.kind).is_none() {
            return Err(input_error(format!("unknown kind \"{}\"", self.kind)));
        }
        let d = self.dim;
        if d == 0 {
            return Err(input_error("dim must be at least 1"));
        }
        let cube = self.product.len() == d
            && self
                .product
                .iter()
                .all(|row| row.len() == d && row.iter().all(|v| v.len() == d));
        if !cube {
            return Err(input_error(format!("product must be a {d}x{d}x{d} array")));
        }
        if self.twist.len() != d || self.twist.iter().any(|row| row.len() != d) {
            return Err(input_error(format!("twist must be a {d}x{d} array")));
        }
        for (i, row) in self.product.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                for (k, s) in v.iter().enumerate() {
                    scalar(s, &format!("product[{i}][{j}][{k}]"))?;
                }
            }
        }
        for (r, row) in self.twist.iter().enumerate() {
            for (c, s) in row.iter().enumerate() {
                scalar(s, &format!("twist[{r}][{c}]"))?;
            }
        }
        Ok(())
    }

    pub fn to_loaded(&self) -> Result<Loaded, CliError> {
        self.validate()?;
        let kind = AlgebraKind::from_tag(&self.kind).expect("validated");
        let product = self
            .product
            .iter()
            .flatten()
            .flatten()
            .map(|s| scalar(s, "product"))
            .collect::<Result<Vec<_>, _>>()?;
        let rows = self
            .twist
            .iter()
            .map(|row| row.iter().map(|s| scalar(s, "twist")).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let twist = Matrix::from_rows(rows)?;
        Ok(Loaded {
            name: self.name.clone(),
            kind,
            spec: AlgebraSpec::untyped(self.dim, product, twist)?,
        })
    }

    pub fn from_spec(name: &str, spec: &AlgebraSpec) -> Self {
        let d = spec.dim();
        let product = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| spec.basis_product(i, j).iter().map(ToString::to_string).collect())
                    .collect()
            })
            .collect();
        let twist = (0..d)
            .map(|r| (0..d).map(|c| spec.twist().get(r, c).to_string()).collect())
            .collect();
        AlgebraFile {
            name: name.to_string(),
            kind: spec.kind().tag().to_string(),
            dim: d,
            field: "rational".into(),
            product,
            twist,
        }
    }

    /// Canonical text: two-space indentation, one row of each table per line,
    /// entries in lowest terms, trailing newline.
    pub fn to_canonical(&self) -> String {
        let q = |s: &String| {
            let canonical = parse_scalar(s).map_or_else(|| s.clone(), |x| x.to_string());
            serde_json::to_string(&canonical).expect("strings serialize")
        };
        let vector = |v: &Vec<String>| format!("[{}]", v.iter().map(q).collect::<Vec<_>>().join(", "));
        let product_rows: Vec<String> = self
            .product
            .iter()
            .map(|row| format!("    [{}]", row.iter().map(vector).collect::<Vec<_>>().join(", ")))
            .collect();
        let twist_rows: Vec<String> = self.twist.iter().map(|row| format!("    {}", vector(row))).collect();
        let text = |s: &str| serde_json::to_string(s).expect("strings serialize");
        format!(
            "{{\n  \"name\": {},\n  \"kind\": {},\n  \"dim\": {},\n  \"field\": {},\n  \"product\": [\n{}\n  ],\n  \"twist\": [\n{}\n  ]\n}}\n",
            text(&self.name),
            text(&self.kind),
            self.dim,
            text(&self.field),
            product_rows.join(",\n"),
            twist_rows.join(",\n"),
        )
    }
}

fn diag(entries: &[i64]) -> Matrix {
    let n = entries.len();
    Matrix::from_fn(n, n, |r, c| if r == c { int(entries[r]) } else { int(0) })
}

/// Names accepted after `builtin:`.
pub const BUILTIN_NAMES: [&str; 16] = [
    "paper_L",
    "paper_A",
    "abelian1",
    "abelian2",
    "abelian3",
    "abelian2_scaled",
    "rational_unit",
    "dual_numbers",
    "truncated_poly",
    "truncated_poly_scaled",
    "leibniz_right_unit",
    "nilpotent_leibniz3",
    "diagonal_leibniz3",
    "heisenberg",
    "zinbiel_truncated3",
    "zinbiel_scaled3",
];

pub fn builtin(name: &str) -> Option<AlgebraSpec> {
    Some(match name {
        "paper_L" => paper_l(),
        "paper_A" => paper_a(),
        "abelian1" => abelian(1, Matrix::identity(1)),
        "abelian2" => abelian(2, Matrix::identity(2)),
        "abelian3" => abelian(3, Matrix::identity(3)),
        "abelian2_scaled" => abelian(2, diag(&[1, 2])),
        "rational_unit" => rational_unit(),
        "dual_numbers" => dual_numbers(),
        "truncated_poly" => truncated_poly_scaled(1),
        "truncated_poly_scaled" => truncated_poly_scaled(2),
        "leibniz_right_unit" => leibniz_right_unit(),
        "nilpotent_leibniz3" => nilpotent_leibniz3(),
        "diagonal_leibniz3" => diagonal_leibniz3(),
        "heisenberg" => heisenberg(),
        "zinbiel_truncated3" => zinbiel_truncated(3),
        "zinbiel_scaled3" => zinbiel_scaled(3, 2),
        _ => return None,
    })
}

/// Resolves `builtin:NAME` without touching the filesystem, anything else as
/// a path to an algebra file.
pub fn resolve(arg: &str) -> Result<Loaded, CliError> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        let spec = builtin(name).ok_or_else(|| {
            input_error(format!("unknown builtin `{name}`; known: {}", BUILTIN_NAMES.join(", ")))
        })?;
        return Ok(Loaded {
            name: name.to_string(),
            kind: spec.kind(),
            spec,
        });
    }
    let text = std::fs::read_to_string(arg).map_err(|e| input_error(format!("{arg}: {e}")))?;
    AlgebraFile::parse(&text)?.to_loaded()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_round_trip_through_files() {
        for name in BUILTIN_NAMES {
            let spec = builtin(name).unwrap();
            let file = AlgebraFile::from_spec(name, &spec);
            let text = file.to_canonical();
            let parsed = AlgebraFile::parse(&text).unwrap();
            assert_eq!(parsed, file, "{name}");
            assert_eq!(parsed.to_canonical(), text, "{name}");
            let loaded = parsed.to_loaded().unwrap();
            assert_eq!(loaded.typed().unwrap(), spec, "{name}");
        }
    }

    #[test]
    fn canonical_paper_l_text() {
        let text = AlgebraFile::from_spec("paper_L", &paper_l()).to_canonical();
        assert!(text.contains("    [[\"0\", \"0\"], [\"1\", \"0\"]]"));
        assert!(text.contains("    [\"1\", \"1\"],\n    [\"0\", \"1\"]"));
    }

    #[test]
    fn rejects_bad_files() {
        let good = AlgebraFile::from_spec("x", &paper_l()).to_canonical();
        assert!(AlgebraFile::parse(&good).is_ok());
        let cases = [
            good.replace("\"rational\"", "\"real\""),
            good.replace("\"hom_leibniz\"", "\"lie\""),
            good.replace("\"dim\": 2", "\"dim\": 3"),
            good.replace("\"1\", \"0\"]]", "\"1.0\", \"0\"]]"),
            good.replace("\"1\", \"0\"]]", "\"1/0\", \"0\"]]"),
            good.replace("\"1\", \"0\"]]", "\" 1\", \"0\"]]"),
            good.replace("\"1\", \"0\"]]", "1, \"0\"]]"),
            good.replace("\"field\"", "\"extra\": 1,\n  \"field\""),
            good.replace("\"name\": \"x\",\n", ""),
        ];
        for (i, bad) in cases.iter().enumerate() {
            assert_ne!(bad, &good, "case {i} did not change the text");
            assert!(matches!(AlgebraFile::parse(bad), Err(CliError::Input(_))), "case {i}");
        }
    }

    #[test]
    fn non_canonical_entries_are_normalized() {
        let text = AlgebraFile::from_spec("x", &paper_l())
            .to_canonical()
            .replace("[\"1\", \"1\"]", "[\"+2/2\", \"1\"]");
        let file = AlgebraFile::parse(&text).unwrap();
        assert_eq!(file.to_canonical(), AlgebraFile::from_spec("x", &paper_l()).to_canonical());
    }

    #[test]
    fn unknown_builtin_is_an_input_error() {
        assert!(matches!(resolve("builtin:nope"), Err(CliError::Input(_))));
        assert!(matches!(resolve("/definitely/not/here.json"), Err(CliError::Input(_))));
    }
}
