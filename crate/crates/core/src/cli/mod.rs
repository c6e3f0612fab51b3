//! Command-line surface: variety files in and out, result rendering, and
//! the benchmark harness.

pub mod bench;
pub mod format;

use std::fmt;

use crate::error::Error;
use crate::order::Monomial;
use crate::poly::Polynomial;

/// Failures of a CLI run, split by exit code: input problems exit with 2,
/// verification failures with 1.
#[derive(Debug)]
pub enum CliError {
    Input(Error),
    Io(std::io::Error),
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Verification(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Verification(msg) => write!(f, "verification failed: {msg}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError::Input(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::Io(e)
    }
}

/// Canonical result rendering: one basis polynomial per line, then the
/// standard monomials, then (when known) the essential variables.
pub fn render_result(
    basis: &[Polynomial],
    standard: &[Monomial],
    essential: Option<&[usize]>,
) -> String {
    let mut out = String::new();
    for g in basis {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    let sms: Vec<String> = standard.iter().map(ToString::to_string).collect();
    out.push_str(&format!("SM: {}\n", sms.join(" ")));
    if let Some(vars) = essential {
        if vars.is_empty() {
            out.push_str("EV:\n");
        } else {
            let names: Vec<String> = vars.iter().map(|v| format!("x{}", v + 1)).collect();
            out.push_str(&format!("EV: {}\n", names.join(" ")));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::essbm::{essbm, Variety};
    use crate::field::PrimeField;
    use crate::order::TermOrder;

    #[test]
    fn rendering_shape() {
        let field = PrimeField::new(3).unwrap();
        let v = Variety::from_values(field, 2, &[vec![0, 0], vec![1, 1]]).unwrap();
        let res = essbm(&v, &TermOrder::lex(2)).unwrap();
        let text = render_result(
            &res.full_basis(),
            &res.standard_monomials,
            Some(&res.essential_vars),
        );
        assert_eq!(text, "x2^2 + 2*x2\nx1 + 2*x2\nSM: 1 x2\nEV: x2\n");
    }
}
