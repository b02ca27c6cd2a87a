use crate::error::{Error, Result};
use crate::group::BsgsOptions;

/// Environment variable that overrides the default degree cap.
pub const DEGREE_CAP_ENV: &str = "RTA_DEGREE_CAP";

pub const DEFAULT_DEGREE_CAP: usize = 1_000_000;
/// Smallest cap that still admits every built-in check (degree 256).
pub const MIN_DEGREE_CAP: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Largest number of points `k^n` any slice may have.
    pub degree_cap: usize,
    /// Seed for randomized Schreier–Sims and sampled checks.
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            degree_cap: DEFAULT_DEGREE_CAP,
            seed: 0x5EED,
        }
    }
}

impl Config {
    /// Default config with the cap taken from `RTA_DEGREE_CAP` when set.
    pub fn from_env() -> std::result::Result<Config, String> {
        let mut cfg = Config::default();
        if let Ok(raw) = std::env::var(DEGREE_CAP_ENV) {
            cfg.degree_cap = raw
                .trim()
                .parse()
                .map_err(|_| format!("{DEGREE_CAP_ENV}={raw} is not a point count"))?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.degree_cap < MIN_DEGREE_CAP {
            return Err(format!(
                "degree cap {} is below the minimum of {MIN_DEGREE_CAP}",
                self.degree_cap
            ));
        }
        Ok(())
    }

    /// `k^n`, or `CapExceeded` when it is above the cap.
    pub fn slice_degree(&self, k: usize, n: usize) -> Result<usize> {
        let degree = (k as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if degree > self.degree_cap as u128 {
            return Err(Error::CapExceeded {
                degree,
                cap: self.degree_cap,
            });
        }
        Ok(degree as usize)
    }

    pub fn bsgs_options(&self) -> BsgsOptions {
        BsgsOptions {
            seed: self.seed,
            ..BsgsOptions::default()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_check() {
        let cfg = Config {
            degree_cap: 256,
            ..Config::default()
        };
        assert_eq!(cfg.slice_degree(4, 4).unwrap(), 256);
        assert!(matches!(
            cfg.slice_degree(2, 9),
            Err(Error::CapExceeded { degree: 512, cap: 256 })
        ));
        assert!(cfg.slice_degree(1000, 1000).is_err());
    }

    #[test]
    fn minimum_cap() {
        let cfg = Config {
            degree_cap: 255,
            ..Config::default()
        };
        assert!(cfg.validate().is_err());
        assert!(Config::default().validate().is_ok());
    }
}
