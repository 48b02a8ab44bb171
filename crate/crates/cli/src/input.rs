use std::fs;
use std::path::PathBuf;

use clap::Args;
use symbolic_powers::format::{ideal_from_json, parse_generator_list, parse_monomial};
use symbolic_powers::{star_configuration, Monomial, MonomialIdeal, RingContext};

use crate::CliError;

/// Where the ideal comes from: a JSON file, an inline list, or a star configuration.
#[derive(Debug, Args)]
pub struct IdealInput {
    /// JSON ideal file ({"vars": [...], "generators": [...]}); `-` reads stdin
    #[arg(long, value_name = "PATH")]
    pub ideal: Option<PathBuf>,

    /// Inline generators such as "x*y, x*z, y*z" (needs --vars)
    #[arg(long, value_name = "GENS", requires = "vars")]
    pub gens: Option<String>,

    /// Comma-separated variable names for --gens
    #[arg(long, value_name = "NAMES")]
    pub vars: Option<String>,

    /// Star configuration in V variables of codimension H
    #[arg(long, num_args = 2, value_names = ["V", "H"])]
    pub star: Option<Vec<usize>>,
}

fn read_text(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
            .map_err(|e| CliError::Usage(format!("stdin: {e}")))
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    }
}

impl IdealInput {
    pub fn load(&self) -> Result<MonomialIdeal, CliError> {
        let given = [
            self.ideal.is_some(),
            self.gens.is_some(),
            self.star.is_some(),
        ]
        .iter()
        .filter(|&&b| b)
        .count();
        if given != 1 {
            return Err(CliError::Usage(
                "give exactly one of --ideal, --gens/--vars, --star".into(),
            ));
        }
        if let Some(path) = &self.ideal {
            let text = read_text(path)?;
            return ideal_from_json(&text)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())));
        }
        if let Some(gens) = &self.gens {
            let vars = self.vars.as_deref().unwrap_or_default();
            let ctx = RingContext::new(vars.split(',').map(str::trim))
                .map_err(|e| CliError::Usage(format!("--vars: {e}")))?;
            return parse_generator_list(ctx, gens)
                .map_err(|e| CliError::Usage(format!("--gens: {e}")));
        }
        let star = self.star.as_ref().expect("one input given");
        star_configuration(star[0], star[1]).map_err(|e| CliError::Usage(format!("--star: {e}")))
    }
}

pub fn monomial_arg(ideal: &MonomialIdeal, flag: &str, text: &str) -> Result<Monomial, CliError> {
    parse_monomial(ideal.context(), text).map_err(|e| CliError::Usage(format!("{flag}: {e}")))
}

/// A second ideal in the same ring, given as an inline generator list.
pub fn second_ideal(
    ideal: &MonomialIdeal,
    flag: &str,
    text: &str,
) -> Result<MonomialIdeal, CliError> {
    parse_generator_list(ideal.context().clone(), text)
        .map_err(|e| CliError::Usage(format!("{flag}: {e}")))
}
