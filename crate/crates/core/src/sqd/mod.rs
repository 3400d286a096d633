//! Correlation measures and super-quantum-discord bounds.

mod bounds;
mod displays;
mod distribution;
mod measures;
mod search;
mod theta;

pub use bounds::{
    classical_correlation_special, correlation_difference_d, correlation_difference_with, mutual_information_closed_form,
    sqd_bound_closed_form, sqd_bound_werner, sqd_upper_bound_at, sqd_upper_bound_block, sqd_upper_bound_diag,
    CorrelationReport, CorrelationSpec, EntropyFactor, Method, RowNormBound, Strength,
};
pub use displays::{
    classical_state_correlations, finite_strength_correlations, pure_state_correlations, ClassicalStateCorrelations,
    CorrelationTriple, PureStateCorrelations,
};
pub use distribution::{
    distribution_experiment, distribution_samples, sample_points, summarize, DistributionConfig, DistributionResult,
    DistributionSample, Sampler, ADMISSIBLE_SLACK,
};
pub use measures::{classical_mutual_information, measured_conditional_entropy, measured_mutual_information, mutual_information};
pub use search::{classical_correlation_search, fibonacci_sphere, givens_frame, BestFamily, SearchOptions, SearchResult};
pub use theta::{dominant_index, max_row_norm, theta_bar, theta_bar_max, theta_diag, theta_diag_max};
