//! Reference ideals shipped with the crate. They are embedded as text and
//! parsed on every use, so each verification run exercises the parser.
//!
//! Setting `MFV_FIXTURE_DIR` makes [`load`] prefer `<dir>/<name>.id` when that
//! file exists; the command-line fault-injection tests rely on this.

use crate::error::{Error, Result};
use crate::polyring::{parse_ideal_file, IdealFile};

macro_rules! fixtures {
    ($($name:literal),* $(,)?) => {
        /// `(name, file contents)` for every fixture.
        pub const ALL: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../../fixtures/", $name, ".id")))),*
        ];
    };
}

fixtures!(
    "full_j",
    "full_preimage",
    "half_i",
    "half_j",
    "half_p_prime",
    "half_preimage",
    "mixed_ss",
    "mixed_support",
    "twisted_cubic",
    "xi_relations",
    "zeta_relation",
);

pub fn text(name: &str) -> Result<&'static str> {
    ALL.iter().find(|(n, _)| *n == name).map(|(_, t)| *t).ok_or_else(|| Error::UnknownCase(format!("fixture {name}")))
}

pub const OVERRIDE_ENV: &str = "MFV_FIXTURE_DIR";

pub fn load(name: &str) -> Result<IdealFile> {
    let builtin = text(name)?;
    if let Some(dir) = std::env::var_os(OVERRIDE_ENV) {
        let path = std::path::Path::new(&dir).join(format!("{name}.id"));
        if path.is_file() {
            return crate::polyring::read_ideal_file(&path);
        }
    }
    parse_ideal_file(builtin)
}
