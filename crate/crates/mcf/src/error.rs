use thiserror::Error;

/// Errors produced by the clustering pipelines.
#[derive(Debug, Error)]
pub enum McfError {
    #[error("empty dataset")]
    EmptyDataset,

    #[error("hierarchy undefined: need at least 2 points, got {0}")]
    HierarchyUndefined(usize),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("labels length {labels} does not match point count {points}")]
    LabelLengthMismatch { labels: usize, points: usize },

    #[error("unknown scene `{0}`")]
    UnknownScene(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("model unfit: no background observations available")]
    ModelUnfit,

    #[error("root component has no father and cannot be tested")]
    RootUntestable,

    #[error("singleton component cannot be tested")]
    SingletonUntestable,

    #[error("degenerate fill region: acceptance rate below 1e-6")]
    DegenerateFillRegion,

    #[error("fill region is empty: no cells selected")]
    EmptyFillRegion,

    #[error("unsupported model file version {0}")]
    UnsupportedVersion(u32),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}
