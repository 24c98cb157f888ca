use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-invertible divisor")]
    NonInvertibleDivisor,
    #[error("non-invertible series")]
    NonInvertibleSeries,
    #[error("log requires constant term 1")]
    LogConstantTerm,
    #[error("exp requires a series without constant or negative-power terms")]
    ExpConstantTerm,
    #[error("real power requires constant term 1")]
    PowConstantTerm,
    #[error("composition requires an inner series of positive valuation")]
    ComposeValuation,
    #[error("gamma pole at {0}")]
    GammaPole(i64),
    #[error("zeta pole")]
    ZetaPole,
    #[error("use continuation: Re(s) = {re} is below the direct-summation bound {min}")]
    UseContinuation { re: f64, min: f64 },
    #[error("near pole: s is within {dist:e} of the pole {pole}")]
    NearPole { pole: String, dist: f64 },
    #[error("evaluate at perturbed point: removable collision at s = {0}")]
    Collision(i64),
    #[error("strip condition 3/4 - M/2 < Re(s) < M + 1/2 fails for M = {m}, Re(s) = {re}")]
    Strip { m: usize, re: f64 },
    #[error("order {order} too large for {digits} digits; raise the precision to at least {needed}")]
    OrderTooLarge { order: usize, digits: u32, needed: u32 },
    #[error("expansion not positive at this n")]
    NotPositive,
    #[error("eta = {0} is in the excluded set")]
    EtaExcluded(f64),
    #[error("Re(z) must be positive")]
    NonPositiveRe,
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
