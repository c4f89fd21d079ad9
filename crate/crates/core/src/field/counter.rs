use std::fmt;
use std::ops::AddAssign;

use super::Field;
use crate::error::Result;

/// Algorithm phase an operation is charged to.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Phase {
    /// Evaluating the recurrence rows.
    #[default]
    Generate,
    /// Row reduction of the window matrix.
    Eliminate,
    /// Dense reference computations.
    Oracle,
}

impl Phase {
    pub const ALL: [Phase; 3] = [Phase::Generate, Phase::Eliminate, Phase::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Phase::Generate => "generate",
            Phase::Eliminate => "eliminate",
            Phase::Oracle => "oracle",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Operation counts for one phase.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub muls: u64,
    pub divs: u64,
    pub adds: u64,
}

impl Tally {
    /// Multiplicative work: multiplications plus divisions.
    pub fn mul_div(&self) -> u64 {
        self.muls + self.divs
    }
}

impl AddAssign for Tally {
    fn add_assign(&mut self, rhs: Tally) {
        self.muls += rhs.muls;
        self.divs += rhs.divs;
        self.adds += rhs.adds;
    }
}

/// Counts field operations, split by [`Phase`].
///
/// Counts only grow; [`OpCounter::reset`] is the one way back to zero.
/// Every counted operation charges the phase set by
/// [`OpCounter::set_phase`]. Negation is charged as an addition,
/// inversion and division as one division each.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OpCounter {
    phase: Phase,
    tallies: [Tally; 3],
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn set_phase(&mut self, phase: Phase) {
        self.phase = phase;
    }

    pub fn tally(&self, phase: Phase) -> Tally {
        self.tallies[phase.index()]
    }

    pub fn total(&self) -> Tally {
        let mut t = Tally::default();
        for x in &self.tallies {
            t += *x;
        }
        t
    }

    pub fn reset(&mut self) {
        self.tallies = Default::default();
    }

    /// Adds another counter's tallies phase by phase.
    pub fn absorb(&mut self, other: &OpCounter) {
        for (a, b) in self.tallies.iter_mut().zip(other.tallies.iter()) {
            *a += *b;
        }
    }

    #[inline]
    fn cur(&mut self) -> &mut Tally {
        &mut self.tallies[self.phase.index()]
    }

    #[inline]
    pub fn mul<F: Field>(&mut self, f: &F, a: &F::Elem, b: &F::Elem) -> F::Elem {
        self.cur().muls += 1;
        f.mul(a, b)
    }

    #[inline]
    pub fn add<F: Field>(&mut self, f: &F, a: &F::Elem, b: &F::Elem) -> F::Elem {
        self.cur().adds += 1;
        f.add(a, b)
    }

    #[inline]
    pub fn sub<F: Field>(&mut self, f: &F, a: &F::Elem, b: &F::Elem) -> F::Elem {
        self.cur().adds += 1;
        f.sub(a, b)
    }

    #[inline]
    pub fn neg<F: Field>(&mut self, f: &F, a: &F::Elem) -> F::Elem {
        self.cur().adds += 1;
        f.neg(a)
    }

    #[inline]
    pub fn invert<F: Field>(&mut self, f: &F, a: &F::Elem) -> Result<F::Elem> {
        self.cur().divs += 1;
        f.invert(a)
    }

    /// `a / b`, charged as a single division.
    #[inline]
    pub fn div<F: Field>(&mut self, f: &F, a: &F::Elem, b: &F::Elem) -> Result<F::Elem> {
        self.cur().divs += 1;
        f.div(a, b)
    }
}
