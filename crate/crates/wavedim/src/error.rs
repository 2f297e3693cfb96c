use thiserror::Error;

/// Errors surfaced by the estimators, generators and file I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("flat signal: ordinate has zero range, dimension undefined")]
    FlatSignal,
    #[error("zero abscissa: max(x) == 0, normalization undefined")]
    ZeroAbscissa,
    #[error("negative abscissa: waveforms must start at x >= 0")]
    NegativeAbscissa,
    #[error("waveform too short: need at least {need} samples, got {got}")]
    TooShort { need: usize, got: usize },
    #[error("stage {0} too large for this construction")]
    StageTooLarge(u32),
    #[error("zero length: all points coincide")]
    ZeroLength,
    #[error("series too short for the requested k schedule (max k {max_k}, n {n})")]
    SeriesTooShort { max_k: usize, n: usize },
    #[error("non-positive mean length at stride k = {0} (constant series?)")]
    NonPositiveLength(usize),
    #[error("zero variance: every segment of the series is constant")]
    ZeroVariance,
    #[error("estimate has no variance; comparison needs both variances")]
    MissingVariance,
    #[error("degenerate fit: all abscissa values equal")]
    DegenerateFit,
    #[error("window of {window} does not fit a series of {n} samples")]
    WindowTooLarge { window: usize, n: usize },
    #[error("profiles differ in length or window size")]
    LengthMismatch,
    #[error("numerical blowup: coordinate exceeded 1e6, reduce dt")]
    NumericalBlowup,
    #[error("invalid waveform: {0}")]
    InvalidWaveform(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
