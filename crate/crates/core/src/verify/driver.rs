use crate::complex::{FreeComplex, SopData};
use crate::error::{Error, Result};
use crate::groebner::{colon, submodule_equal};
use crate::transform::StarTransform;

use super::{run, VerificationReport};

#[derive(Clone, Debug)]
pub struct DriverRound {
    pub transform: StarTransform,
    pub report: VerificationReport,
    /// `Im ∗φ_1` after this round equals the iterated colon `M : Q^k`.
    pub colon_matches_oracle: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StopReason {
    Completed,
    /// The top module vanished in this round, so later rounds would only
    /// repeat the fast path.
    TopVanished {
        round: usize,
    },
    /// The complex produced by the previous round no longer satisfies the
    /// hypotheses of the transform.
    PreconditionFailed {
        round: usize,
        reason: String,
    },
}

#[derive(Clone, Debug)]
pub struct DriverRun {
    pub rounds: Vec<DriverRound>,
    pub stop: StopReason,
}

impl DriverRun {
    pub fn passed(&self) -> bool {
        self.rounds.iter().all(|r| r.report.passed() && r.colon_matches_oracle)
    }

    pub fn last(&self) -> Option<&DriverRound> {
        self.rounds.last()
    }
}

/// Applies the transform up to `rounds` times, checking each result against
/// the colon iterated on `Im φ_1` directly.
///
/// A precondition failure in the first round is returned as an error; in a
/// later round it ends the run.
pub fn star_iteration_driver(f: &FreeComplex, sop: &SopData, rounds: usize) -> Result<DriverRun> {
    let mut out = Vec::new();
    let mut current = f.clone();
    let mut oracle = f.image(1)?;
    for round in 1..=rounds {
        let (transform, report) = match run(&current, sop) {
            Ok(r) => r,
            Err(Error::PreconditionFailed(reason)) if round > 1 => {
                return Ok(DriverRun {
                    rounds: out,
                    stop: StopReason::PreconditionFailed { round, reason },
                })
            }
            Err(e) => return Err(e),
        };
        oracle = colon(&oracle, sop.elements())?;
        let colon_matches_oracle = submodule_equal(&transform.star.complex.image(1)?, &oracle);
        let vanished = transform.star.top_vanished;
        current = transform.star.complex.clone();
        out.push(DriverRound {
            transform,
            report,
            colon_matches_oracle,
        });
        if vanished {
            return Ok(DriverRun {
                rounds: out,
                stop: StopReason::TopVanished { round },
            });
        }
    }
    Ok(DriverRun {
        rounds: out,
        stop: StopReason::Completed,
    })
}
