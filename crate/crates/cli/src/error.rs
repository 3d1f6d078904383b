use std::path::PathBuf;

use thiserror::Error;

/// Process exit codes. `2` is left to the argument parser.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INTERNAL: i32 = 1;
    pub const IO: i32 = 3;
    pub const PARSE: i32 = 4;
    pub const INVALID_GRAPH: i32 = 5;
    pub const DISCONNECTED: i32 = 6;
    pub const TOO_LARGE: i32 = 7;
    pub const GENERATOR: i32 = 8;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Core(#[from] compact_span::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    pub fn exit_code(&self) -> i32 {
        use compact_span::Error as E;
        match self {
            CliError::Io { .. } | CliError::Csv(_) => exit::IO,
            CliError::Usage(_) => 2,
            CliError::Core(e) => match e {
                E::MalformedHeader(_) | E::MalformedEdgeLine { .. } => exit::PARSE,
                E::EmptyGraph
                | E::SelfLoop(_)
                | E::DuplicateEdge(_)
                | E::VertexOutOfRange { .. }
                | E::NotSimple(_)
                | E::MissingEdge(_) => exit::INVALID_GRAPH,
                E::Disconnected => exit::DISCONNECTED,
                E::TooLarge(_) => exit::TOO_LARGE,
                E::InvalidSpec(_) | E::ConnectivityRetriesExhausted(_) => exit::GENERATOR,
                E::NumericalFailure(_) | E::BridgeDowndate { .. } | E::NotATree(_) => exit::INTERNAL,
            },
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
