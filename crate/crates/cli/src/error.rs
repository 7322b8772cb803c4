use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown suite {0:?}; run `morph verify --help` for the registered names")]
    UnknownSuite(String),
    #[error("unknown pipeline {0:?}; expected uresnet, laplacian, or type2")]
    UnknownPipeline(String),
    #[error("bad argument: {0}")]
    BadArgument(String),
    #[error(transparent)]
    Format(#[from] grid_core::FormatError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Net(#[from] nets::NetError),
    #[error(transparent)]
    Layer(#[from] layers::LayerError),
    #[error(transparent)]
    Mmbb(#[from] mmbb::MmbbError),
    #[error(transparent)]
    Pyramid(#[from] pyramid::PyramidError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
