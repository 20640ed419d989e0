use std::fmt;
use std::path::Path;

use lenscluster_core::cluster2d::Diagnostic;
use lenscluster_core::Error as CoreError;
use serde::Serialize;

/// Failure of one CLI command, with the exit code it maps to.
#[derive(Debug)]
pub enum CliError {
    Core(CoreError),
    Io { path: String, message: String },
    Parse { path: String, message: String },
    Usage(String),
    /// A polygonal cluster failed validation.
    Cluster(Vec<Diagnostic>),
}

impl CliError {
    pub fn io(path: &Path, e: std::io::Error) -> Self {
        CliError::Io { path: path.display().to_string(), message: e.to_string() }
    }

    pub fn parse(path: &Path, e: impl fmt::Display) -> Self {
        CliError::Parse { path: path.display().to_string(), message: e.to_string() }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.kind(),
            CliError::Io { .. } => "IoError",
            CliError::Parse { .. } => "ParseError",
            CliError::Usage(_) => "UsageError",
            CliError::Cluster(_) => "InvalidCluster",
        }
    }

    /// 2 for failures of an iterative method, 1 for everything rejected
    /// as invalid input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_numerical() => 2,
            _ => 1,
        }
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Body<'a> {
            kind: &'a str,
            message: String,
        }
        #[derive(Serialize)]
        struct Wrapper<'a> {
            error: Body<'a>,
        }
        serde_json::to_string(&Wrapper { error: Body { kind: self.kind(), message: self.to_string() } })
            .expect("error JSON")
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io { path, message } => write!(f, "{path}: {message}"),
            CliError::Parse { path, message } => write!(f, "{path}: {message}"),
            CliError::Usage(m) => f.write_str(m),
            CliError::Cluster(d) => {
                let kinds: Vec<&str> = d.iter().map(|x| x.kind()).collect();
                write!(f, "cluster is invalid: {}", kinds.join(", "))
            }
        }
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;
