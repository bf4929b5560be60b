//! Periodic broadcast patterns on infinite grids.
//!
//! A periodic pattern dominates `Z^n` iff every coset representative of the
//! period lattice receives at least `r`, so verification only ever looks at a
//! fundamental domain. Two-dimensional towers `T(d,e)` get a specialised
//! row-by-row evaluator; general sublattices go through their Hermite normal
//! form.

mod search;
mod sublattice;
mod tower;

pub use search::{lattice_search_3d, min_density_search, min_density_search_traced, SearchTrace};
pub use sublattice::{
    is_dominating_lattice, is_dominating_lattice_capped, lattice_reception_profile, lattice_reception_profile_capped,
    SublatticePattern, DEFAULT_INDEX_CAP,
};
pub use tower::{is_dominating_tower, is_dominating_tower_exhaustive, reception_table, tower_reception, TowerPattern};

use serde::Serialize;

use crate::coverage::Params;

/// Reception delivered by one row `y` of a tower to positions `0..d` of row 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowContribution {
    pub y: i64,
    pub contributions: Vec<u64>,
}

/// Receptions over one fundamental domain of a pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReceptionProfile {
    pub pattern: String,
    pub params: Params,
    /// One entry per coset representative; for towers, position `i` is `(i, 0)`.
    pub receptions: Vec<u64>,
    /// Row breakdown, towers only. Rows run from `t-1` down to `-(t-1)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<RowContribution>>,
}

impl ReceptionProfile {
    pub fn min_reception(&self) -> u64 {
        self.receptions.iter().copied().min().unwrap_or(0)
    }

    pub fn dominates(&self) -> bool {
        self.min_reception() >= u64::from(self.params.r())
    }

    /// Aligned plain-text table: header of positions, one line per row, then `Sum`.
    pub fn to_text_table(&self) -> String {
        let width = self.receptions.len();
        let mut lines: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend((0..width).map(|i| i.to_string()));
        lines.push(header);
        if let Some(rows) = &self.rows {
            for row in rows {
                let mut line = vec![row.y.to_string()];
                line.extend(row.contributions.iter().map(u64::to_string));
                lines.push(line);
            }
        }
        let mut sum = vec!["Sum".to_string()];
        sum.extend(self.receptions.iter().map(u64::to_string));
        lines.push(sum);

        let cols = width + 1;
        let widths: Vec<usize> = (0..cols).map(|c| lines.iter().map(|l| l[c].len()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for (k, line) in lines.iter().enumerate() {
            let cells: Vec<String> = line.iter().zip(&widths).map(|(cell, &w)| format!("{cell:>w$}")).collect();
            out.push_str(cells.join(" ").trim_end());
            out.push('\n');
            if k == 0 || (self.rows.is_some() && k == lines.len() - 2) {
                let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
                out.push_str(&rule.join(" "));
                out.push('\n');
            }
        }
        out
    }
}
