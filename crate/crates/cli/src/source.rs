//! Algebra arguments: `name[:key=value,...]` for builtins, or a path to a
//! JSON XC-spec.

use std::path::Path;

use tangle_algebra::Scalar;
use tangle_xc::spec::XcSpec;
use tangle_xc::{builtin, BuiltinParams, XCStructure, BUILTIN_NAMES};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SourceError {
    #[error("cannot read {path}: {err}")]
    Io { path: String, err: std::io::Error },
    #[error("unknown parameter {0:?}; matrix2 takes lambda=<scalar>, sweedler takes tr1=<scalar>")]
    UnknownParam(String),
    #[error("bad value for {key}: {value:?}")]
    BadValue { key: String, value: String },
    #[error(transparent)]
    Xc(#[from] tangle_xc::XcError),
}

/// Loads a builtin (`sweedler:tr1=2`, `matrix2:lambda=1/3`, `double_sweedler`)
/// or, when the argument is not a builtin name, a JSON XC-spec file.
pub fn load_algebra(arg: &str) -> Result<XCStructure, SourceError> {
    let (name, params) = arg.split_once(':').unwrap_or((arg, ""));
    if !BUILTIN_NAMES.contains(&name) && Path::new(arg).exists() {
        let text = std::fs::read_to_string(arg).map_err(|err| SourceError::Io { path: arg.into(), err })?;
        return Ok(XcSpec::from_json(&text)?.to_xc()?);
    }
    let mut p = BuiltinParams::default();
    for kv in params.split(',').filter(|s| !s.is_empty()) {
        let (key, value) = kv.split_once('=').ok_or_else(|| SourceError::UnknownParam(kv.into()))?;
        let scalar = value
            .parse::<Scalar>()
            .map_err(|_| SourceError::BadValue { key: key.into(), value: value.into() })?;
        match key {
            "lambda" => p.lambda = Some(scalar),
            "tr1" => p.trace_one = Some(scalar),
            _ => return Err(SourceError::UnknownParam(key.into())),
        }
    }
    Ok(builtin(name, &p)?)
}

/// Reads a text argument: `-` is stdin, `@path` or an existing path is a
/// file, anything else is the text itself.
pub fn read_text(arg: &str) -> Result<String, SourceError> {
    fn io(path: &str) -> impl FnOnce(std::io::Error) -> SourceError + '_ {
        move |err| SourceError::Io { path: path.into(), err }
    }
    if arg == "-" {
        return std::io::read_to_string(std::io::stdin()).map_err(io("<stdin>"));
    }
    if let Some(path) = arg.strip_prefix('@') {
        return std::fs::read_to_string(path).map_err(io(path));
    }
    if !arg.contains(['\n', ':', '{']) && Path::new(arg).is_file() {
        return std::fs::read_to_string(arg).map_err(io(arg));
    }
    Ok(arg.to_string())
}
