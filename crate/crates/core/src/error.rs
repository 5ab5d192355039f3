use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument fell outside the closed unit interval (or another stated domain).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// Affine map with slope 1 has no unique fixed point.
    #[error("singular affine map: slope is 1")]
    Singular,

    /// Requested construction level exceeds the supported cap.
    #[error("resource error: level {level} exceeds cap {cap}")]
    Resource { level: u32, cap: u32 },

    #[error("parameter error: {0}")]
    Parameter(String),

    /// Two construction routes produced different values for the same point.
    #[error("consistency error: {0}")]
    Consistency(String),

    #[error("order error: lower limit {lower} exceeds upper limit {upper}")]
    Order { lower: String, upper: String },

    #[error("empty input: {0}")]
    Empty(String),

    #[error("invalid digit {0}: expected 0, 1 or 2")]
    InvalidDigit(u8),
}

pub(crate) fn check_level(level: u32, cap: u32) -> Result<()> {
    if level > cap {
        Err(Error::Resource { level, cap })
    } else {
        Ok(())
    }
}
