//! Brute-force optimum: every vertex selection, each scored by its maximum
//! spanning tree. Sums of distances to fixed points are convex, so the
//! optimum over a polyhedral region is attained at one of its vertices.

use crate::approx::{selection_of, Producer, Solution};
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::spanning::max_spanning_tree;

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// `prod |V(X_i)|`, saturating at `u64::MAX`.
pub fn count_selections(inst: &Instance) -> u64 {
    inst.regions()
        .iter()
        .fold(1u64, |acc, r| acc.saturating_mul(r.vertices.len() as u64))
}

/// Exact optimum over all vertex selections.
///
/// Selections are enumerated as a mixed-radix counter with the last region
/// varying fastest, so they come in lexicographic order and keeping only
/// strict improvements returns the lexicographically smallest maximizer.
pub fn exact_opt(inst: &Instance, budget: u64) -> Result<Solution> {
    if inst.n() < 2 {
        return Err(Error::TooFewRegions {
            required: 2,
            found: inst.n(),
        });
    }
    let selections = count_selections(inst);
    if selections > budget {
        return Err(Error::BudgetExceeded { selections, budget });
    }
    let regions = inst.regions();
    if let Some(region) = regions.iter().position(|r| r.vertices.is_empty()) {
        return Err(Error::EmptyRegion { region });
    }

    let mut choice = vec![0usize; regions.len()];
    let mut sel = selection_of(inst, &choice);
    let mut best_len = f64::NEG_INFINITY;
    let mut best_choice = choice.clone();
    loop {
        let len = max_spanning_tree(&sel).length;
        if len > best_len {
            best_len = len;
            best_choice.copy_from_slice(&choice);
        }
        // Advance the counter; stop after wrapping the most significant digit.
        let mut digit = regions.len();
        loop {
            if digit == 0 {
                let sel = selection_of(inst, &best_choice);
                let tree = max_spanning_tree(&sel);
                return Ok(Solution::new(Producer::Exact, best_choice, sel, tree));
            }
            digit -= 1;
            choice[digit] += 1;
            if choice[digit] < regions[digit].vertices.len() {
                sel.points[digit] = regions[digit].vertices[choice[digit]].clone();
                break;
            }
            choice[digit] = 0;
            sel.points[digit] = regions[digit].vertices[0].clone();
        }
    }
}
