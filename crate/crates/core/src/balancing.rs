//! Color-selection policies.
//!
//! First-fit picks the smallest free color. B1 and B2 keep a worker-private
//! running maximum and try to spread picks over `[0, col_max]` to flatten the
//! color-class sizes without tracking them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::engine::forbidden::ForbiddenColors;
use crate::engine::StrategySchedule;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BalanceMode {
    #[default]
    None,
    B1,
    B2,
}

impl BalanceMode {
    pub const ALL: [BalanceMode; 3] = [BalanceMode::None, BalanceMode::B1, BalanceMode::B2];

    pub fn name(self) -> &'static str {
        match self {
            BalanceMode::None => "none",
            BalanceMode::B1 => "b1",
            BalanceMode::B2 => "b2",
        }
    }
}

impl fmt::Display for BalanceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for BalanceMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "none" | "u" => Ok(BalanceMode::None),
            "b1" => Ok(BalanceMode::B1),
            "b2" => Ok(BalanceMode::B2),
            other => Err(format!("unknown balance mode '{other}' (expected none, b1, b2)")),
        }
    }
}

/// Worker-private balancing state. Lives for a whole run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BalancerState {
    pub col_max: u32,
    pub col_next: u32,
}

#[inline]
pub fn first_fit<F: ForbiddenColors + ?Sized>(forbidden: &F) -> u32 {
    ascend(forbidden, 0)
}

#[inline]
fn ascend<F: ForbiddenColors + ?Sized>(forbidden: &F, from: u32) -> u32 {
    let mut col = from;
    while forbidden.is_forbidden(col) {
        col += 1;
    }
    col
}

/// Odd ids take first-fit. Even ids descend from `col_max`, falling back to
/// an ascending search above `col_max` when nothing below is free.
#[inline]
pub fn select_color_b1<F: ForbiddenColors + ?Sized>(forbidden: &F, id: u32, state: &mut BalancerState) -> u32 {
    let col = if id % 2 == 0 {
        let mut col = state.col_max as i64;
        while col >= 0 && forbidden.is_forbidden(col as u32) {
            col -= 1;
        }
        if col < 0 {
            ascend(forbidden, state.col_max + 1)
        } else {
            col as u32
        }
    } else {
        first_fit(forbidden)
    };
    state.col_max = state.col_max.max(col);
    col
}

/// Ascends from `col_next`, wrapping to 0 when the search passes `col_max`.
/// The next start is capped at `col_max / 3 + 1` (floor division).
#[inline]
pub fn select_color_b2<F: ForbiddenColors + ?Sized>(forbidden: &F, state: &mut BalancerState) -> u32 {
    let mut col = ascend(forbidden, state.col_next);
    if col > state.col_max {
        col = first_fit(forbidden);
    }
    state.col_max = state.col_max.max(col);
    state.col_next = (col + 1).min(state.col_max / 3 + 1);
    col
}

/// Picks a color for vertex `id` under `mode`.
#[inline]
pub fn select_color<F: ForbiddenColors + ?Sized>(
    mode: BalanceMode,
    forbidden: &F,
    id: u32,
    state: &mut BalancerState,
) -> u32 {
    match mode {
        BalanceMode::None => first_fit(forbidden),
        BalanceMode::B1 => select_color_b1(forbidden, id, state),
        BalanceMode::B2 => select_color_b2(forbidden, state),
    }
}

/// Returns `schedule` with its color-selection policy replaced by `mode`.
pub fn attach_balancer(schedule: StrategySchedule, mode: BalanceMode) -> StrategySchedule {
    StrategySchedule { balance: mode, ..schedule }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn set(cs: &[u32]) -> BTreeSet<u32> {
        cs.iter().copied().collect()
    }

    #[test]
    fn first_fit_smallest_gap() {
        assert_eq!(first_fit(&set(&[])), 0);
        assert_eq!(first_fit(&set(&[0, 1, 3])), 2);
    }

    #[test]
    fn b1_descends_from_col_max() {
        let mut s = BalancerState { col_max: 2, col_next: 0 };
        assert_eq!(select_color_b1(&set(&[0, 2]), 4, &mut s), 1);
        assert_eq!(s.col_max, 2);
    }

    #[test]
    fn b1_fallback_ascends_above_col_max() {
        let mut s = BalancerState { col_max: 2, col_next: 0 };
        assert_eq!(select_color_b1(&set(&[0, 1, 2]), 0, &mut s), 3);
        assert_eq!(s.col_max, 3);
    }

    #[test]
    fn b1_odd_is_first_fit() {
        let mut s = BalancerState { col_max: 5, col_next: 0 };
        assert_eq!(select_color_b1(&set(&[0, 2]), 7, &mut s), 1);
        assert_eq!(s.col_max, 5);
    }

    #[test]
    fn b2_update_rule() {
        let mut s = BalancerState { col_max: 5, col_next: 3 };
        assert_eq!(select_color_b2(&set(&[3, 4]), &mut s), 5);
        assert_eq!(s, BalancerState { col_max: 5, col_next: 2 });
    }

    #[test]
    fn b2_overflow_restarts_from_zero() {
        let mut s = BalancerState { col_max: 3, col_next: 3 };
        assert_eq!(select_color_b2(&set(&[3]), &mut s), 0);
        assert_eq!(s, BalancerState { col_max: 3, col_next: 1 });
    }

    #[test]
    fn b2_fresh_state() {
        let mut s = BalancerState::default();
        assert_eq!(select_color_b2(&set(&[]), &mut s), 0);
        assert_eq!(s, BalancerState { col_max: 0, col_next: 1 });
    }

    #[test]
    fn policies_never_pick_forbidden_exhaustive() {
        for mask in 0u32..256 {
            let forbidden: Vec<bool> = (0..8).map(|b| mask & (1 << b) != 0).collect();
            let f = forbidden.as_slice();
            for col_max in 0..=8 {
                for col_next in 0..=8 {
                    for id in 0..2 {
                        let mut s = BalancerState { col_max, col_next };
                        let c = select_color_b1(f, id, &mut s);
                        assert!(!f.is_forbidden(c), "b1 mask={mask:#b} state=({col_max},{col_next}) -> {c}");
                        assert!(s.col_max >= col_max);
                    }
                    let mut s = BalancerState { col_max, col_next };
                    let c = select_color_b2(f, &mut s);
                    assert!(!f.is_forbidden(c), "b2 mask={mask:#b} state=({col_max},{col_next}) -> {c}");
                    assert!(s.col_max >= col_max);
                }
            }
        }
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("B2".parse::<BalanceMode>().unwrap(), BalanceMode::B2);
        assert!("b3".parse::<BalanceMode>().is_err());
    }
}
