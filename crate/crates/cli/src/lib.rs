//! Configuration, suite orchestration and reporting for the `contentalg`
//! command-line tool.

pub mod config;
pub mod report;
pub mod text;

pub use config::{load_config, parse_config, ConfigError, SuiteConfig, Validated};
pub use report::{run_suite, Report, EXIT_CONFIG, EXIT_FAIL, EXIT_MISMATCH, EXIT_OK};
