use std::fmt;

use num::BigUint;

use super::params::ParamSpec;
use crate::error::Error;

/// Default cap on the number of symbols a materialized word may have.
/// Lengths grow exponentially in the level, so analysis operations use the
/// closed recurrences instead of materializing; this cap only guards the
/// operations that genuinely need the symbols.
pub const DEFAULT_WORD_BUDGET: u64 = 1 << 26;

/// A generating word over the alphabet `{0, 1}`, tagged with its level.
///
/// Every generating word begins and ends with `0`, and its number of
/// `0`-symbols is the product of the cut counts below its level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    level: u64,
    symbols: Vec<u8>,
}

impl Word {
    pub fn level(&self) -> u64 {
        self.level
    }

    /// The symbols as raw `0` / `1` values.
    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false // every word contains at least the level-0 word `0`
    }

    pub fn zero_count(&self) -> u64 {
        self.symbols.iter().filter(|&&s| s == 0).count() as u64
    }

    pub fn one_count(&self) -> u64 {
        self.symbols.len() as u64 - self.zero_count()
    }

    /// The word read backwards, at the same level.
    pub fn reversed(&self) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Word {
            level: self.level,
            symbols,
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            write!(f, "{}", if s == 0 { '0' } else { '1' })?;
        }
        Ok(())
    }
}

impl ParamSpec {
    /// Length of the generating word at `level`, by the recurrence
    /// `len(0) = 1`, `len(n + 1) = r_n * len(n) + sum(s_n)`, without
    /// materializing any symbols.
    pub fn word_length(&self, level: u64) -> Result<BigUint, Error> {
        let mut len = BigUint::from(1u32);
        for k in 0..level {
            let spec = self.resolve_level(k)?;
            len = len * spec.cut_count() + BigUint::from(spec.spacers().sum());
        }
        Ok(len)
    }

    /// Number of `0`-symbols in the word at `level`: the product of the cut
    /// counts of all lower levels.
    pub fn zero_count(&self, level: u64) -> Result<BigUint, Error> {
        let mut count = BigUint::from(1u32);
        for k in 0..level {
            count *= self.resolve_level(k)?.cut_count();
        }
        Ok(count)
    }

    /// Materializes the generating word at `level`: the level-0 word is
    /// `0`, and each next word is `r` copies of the previous one with the
    /// level's spacer runs of 1-symbols in between. Fails when the length
    /// would exceed `budget` symbols.
    pub fn build_word(&self, level: u64, budget: u64) -> Result<Word, Error> {
        let len = self.word_length(level)?;
        if len > BigUint::from(budget) {
            return Err(Error::BudgetExceeded {
                level,
                length: len.to_string(),
                budget,
            });
        }
        let mut symbols = vec![0u8];
        for k in 0..level {
            let spec = self.resolve_level(k)?;
            let spacers = spec.spacers();
            let mut next = Vec::with_capacity(
                symbols.len() * spec.cut_count() as usize + spacers.sum() as usize,
            );
            next.extend_from_slice(&symbols);
            for i in 1..spec.cut_count() {
                next.resize(next.len() + spacers.entry(i as usize) as usize, 1u8);
                next.extend_from_slice(&symbols);
            }
            symbols = next;
        }
        Ok(Word { level, symbols })
    }
}
