//! Code-spec documents: a TOML description of a field and an alternant code.
//!
//! ```toml
//! [field]
//! p = 5
//! m = 2
//! modulus = [3, 0, 1]     # ascending, x^2 = 2
//! generator = "x"
//!
//! [code]
//! kind = "goppa"
//! g = [1, 1, 0, 1, 0, 0, 1]
//! a = "all-nonroots"
//! ```
//!
//! Elements are integers, generator powers such as `"x^5"`, or coordinate
//! lists such as `[0, 1]`. Unknown keys are rejected.

use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

use crate::codes::{goppa_support, rs_multipliers, AlternantCode, CodeError};
use crate::galois::{get_irreducible_polynomial, Elem, Field, FieldError, Poly};
use crate::linalg::Vector;

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid code spec: {0}")]
    Syntax(String),
    #[error("invalid code spec: {0}")]
    Invalid(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeSpec {
    pub field: FieldSpec,
    pub code: CodeParams,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub p: u64,
    #[serde(default = "one")]
    pub m: usize,
    /// Ascending coefficients over `Z_p`; defaults to the first irreducible
    /// polynomial of degree `m` in canonical order.
    #[serde(default)]
    pub modulus: Option<Vec<i64>>,
    #[serde(default)]
    pub generator: Option<String>,
}

fn one() -> usize {
    1
}

/// One element in the textual syntax.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum Token {
    Int(i64),
    Text(String),
    Coords(Vec<i64>),
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum Support {
    /// `"all-nonroots"`: nonzero elements where `g` does not vanish.
    Selector(String),
    List(Vec<Token>),
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum CodeParams {
    Ac {
        h: Vec<Token>,
        a: Vec<Token>,
        r: usize,
        /// `"prime"` (default) or `"extension"`.
        #[serde(default)]
        base: Option<String>,
    },
    Rs {
        a: Vec<Token>,
        k: usize,
    },
    Grs {
        a: Vec<Token>,
        k: usize,
        #[serde(default)]
        h: Option<Vec<Token>>,
    },
    Prs {
        k: usize,
    },
    Bch {
        alpha: Token,
        d: usize,
        #[serde(default = "offset_one")]
        l: u64,
    },
    Goppa {
        g: Vec<Token>,
        a: Support,
        /// Keep only the first `n` support elements.
        #[serde(default)]
        n: Option<usize>,
    },
}

fn offset_one() -> u64 {
    1
}

impl CodeSpec {
    pub fn from_toml_str(text: &str) -> Result<CodeSpec, SpecError> {
        toml::from_str(text).map_err(|e| SpecError::Syntax(e.to_string()))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<CodeSpec, SpecError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|source| SpecError::Io { path: path.display().to_string(), source })?;
        CodeSpec::from_toml_str(&text)
    }

    /// The field `K̄` described by the `[field]` table.
    pub fn build_field(&self) -> Result<Field, SpecError> {
        let base = Field::prime(self.field.p)?;
        let m = self.field.m;
        if m == 0 {
            return Err(SpecError::Invalid("m must be at least 1".into()));
        }
        if m == 1 {
            if self.field.modulus.is_some() {
                return Err(SpecError::Invalid("modulus given for a prime field".into()));
            }
            return Ok(base);
        }
        let modulus = match &self.field.modulus {
            Some(c) => Poly::from_ints(&base, c),
            None => get_irreducible_polynomial(&base, m)?,
        };
        if modulus.degree() != Some(m) {
            return Err(SpecError::Invalid(format!("modulus has degree {:?}, expected {m}", modulus.degree())));
        }
        let label = self.field.generator.as_deref().unwrap_or("a");
        Ok(Field::extension(&base, &modulus, label)?.0)
    }

    pub fn build(&self) -> Result<AlternantCode, SpecError> {
        let field = self.build_field()?;
        let vector = |tokens: &[Token]| -> Result<Vector, SpecError> {
            let data = tokens.iter().map(|t| parse_token(&field, t)).collect::<Result<Vec<_>, _>>()?;
            Ok(Vector::new(&field, data))
        };
        let code = match &self.code {
            CodeParams::Ac { h, a, r, base } => {
                let k = match base.as_deref() {
                    None | Some("prime") => field.prime_subfield(),
                    Some("extension") => field.clone(),
                    Some(other) => return Err(SpecError::Invalid(format!("unknown base {other:?}"))),
                };
                AlternantCode::ac(&vector(h)?, &vector(a)?, *r, &k)?
            }
            CodeParams::Rs { a, k } => {
                require_prime(&field, "rs")?;
                AlternantCode::rs(&vector(a)?, *k)?
            }
            CodeParams::Grs { a, k, h } => {
                let a = vector(a)?;
                let h = match h {
                    Some(h) => vector(h)?,
                    None => rs_multipliers(&a)?,
                };
                AlternantCode::grs(&h, &a, *k)?
            }
            CodeParams::Prs { k } => AlternantCode::prs(&field, *k)?,
            CodeParams::Bch { alpha, d, l } => AlternantCode::bch(&field, parse_token(&field, alpha)?, *d, *l)?,
            CodeParams::Goppa { g, a, n } => {
                let g = Poly::new(&field, vector(g)?.into_vec());
                let a = match a {
                    Support::Selector(s) if s == "all-nonroots" => goppa_support(&g),
                    Support::Selector(s) => return Err(SpecError::Invalid(format!("unknown selector {s:?}"))),
                    Support::List(tokens) => vector(tokens)?,
                };
                let a = match *n {
                    Some(n) if n > a.len() => {
                        return Err(SpecError::Invalid(format!("n = {n} but only {} support elements", a.len())))
                    }
                    Some(n) => Vector::new(&field, a.as_slice()[..n].to_vec()),
                    None => a,
                };
                AlternantCode::goppa(&g, &a)?
            }
        };
        Ok(code)
    }
}

fn require_prime(field: &Field, kind: &str) -> Result<(), SpecError> {
    if field.is_prime() {
        Ok(())
    } else {
        Err(SpecError::Invalid(format!("{kind} codes are defined over their own field; use grs for {field}")))
    }
}

fn parse_token(field: &Field, token: &Token) -> Result<Elem, FieldError> {
    match token {
        Token::Int(c) => Ok(field.from_int(*c)),
        Token::Text(s) => field.parse_elem(s),
        Token::Coords(c) => field.from_coords(c),
    }
}

/// Reads and builds a code from a spec file.
pub fn load_code(path: impl AsRef<Path>) -> Result<AlternantCode, SpecError> {
    CodeSpec::load(path)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::CodeKind;

    #[test]
    fn prime_field_prs() {
        let spec = CodeSpec::from_toml_str("[field]\np = 13\n[code]\nkind = \"prs\"\nk = 8\n").unwrap();
        let c = spec.build().unwrap();
        assert_eq!((c.n(), c.dimension()), (12, 8));
        assert_eq!(c.kind(), &CodeKind::PrimitiveReedSolomon { k: 8 });
    }

    #[test]
    fn unknown_fields_rejected() {
        let bad = "[field]\np = 13\ncolour = 1\n[code]\nkind = \"prs\"\nk = 8\n";
        assert!(matches!(CodeSpec::from_toml_str(bad), Err(SpecError::Syntax(_))));
        let bad = "[field]\np = 13\n[code]\nkind = \"prs\"\nk = 8\nd = 3\n";
        assert!(matches!(CodeSpec::from_toml_str(bad), Err(SpecError::Syntax(_))));
        let bad = "[field]\np = 13\n[code]\nkind = \"reed\"\nk = 8\n";
        assert!(CodeSpec::from_toml_str(bad).is_err());
    }

    #[test]
    fn mixed_element_tokens() {
        let text = r#"
            [field]
            p = 5
            m = 2
            modulus = [3, 0, 1]
            generator = "x"
            [code]
            kind = "ac"
            h = [1, "x", [1, 1], 2]
            a = [1, 2, "x", "x^2"]
            r = 2
        "#;
        let spec = CodeSpec::from_toml_str(text).unwrap();
        let err = spec.build().unwrap_err();
        // x^2 = 2 repeats alpha[1]
        assert!(matches!(err, SpecError::Code(CodeError::RepeatedAlpha { first: 1, second: 3 })));
    }

    #[test]
    fn bad_field_reported() {
        let spec = CodeSpec::from_toml_str("[field]\np = 12\n[code]\nkind = \"prs\"\nk = 3\n").unwrap();
        assert!(matches!(spec.build(), Err(SpecError::Field(FieldError::NotPrime { .. }))));
        let spec =
            CodeSpec::from_toml_str("[field]\np = 2\nm = 2\nmodulus = [1, 0, 1]\n[code]\nkind = \"prs\"\nk = 1\n")
                .unwrap();
        assert!(matches!(spec.build(), Err(SpecError::Field(FieldError::Reducible { .. }))));
    }

    #[test]
    fn default_modulus_is_canonical() {
        let spec = CodeSpec::from_toml_str("[field]\np = 3\nm = 4\n[code]\nkind = \"prs\"\nk = 70\n").unwrap();
        let f = spec.build_field().unwrap();
        assert_eq!(f.order(), 81);
        assert_eq!(f.modulus().unwrap(), vec![Elem(2), Elem(1), Elem(0), Elem(0), Elem(1)]);
    }
}
