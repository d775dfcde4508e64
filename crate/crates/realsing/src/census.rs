//! The mod-12 residue census for `a = 2`, `b = 1`.

use std::collections::BTreeMap;
use std::fmt::Write;

use realsing_core::milnor::PROPOSITION_ZERO_SET;
use realsing_core::{residue_table, Census, ResidueCell};

pub struct CensusTable {
    pub max_p: u64,
    pub max_q: u64,
    pub cells: BTreeMap<(u8, u8), ResidueCell>,
}

pub fn census(max_p: u64, max_q: u64) -> realsing_core::Result<CensusTable> {
    Ok(CensusTable {
        max_p,
        max_q,
        cells: residue_table(max_p, max_q)?,
    })
}

impl CensusTable {
    pub fn zero_set(&self) -> Vec<(u8, u8)> {
        self.cells
            .iter()
            .filter(|(_, c)| c.census() == Census::AlwaysZero)
            .map(|(&k, _)| k)
            .collect()
    }

    pub fn mixed(&self) -> Vec<(u8, u8)> {
        self.cells
            .iter()
            .filter(|(_, c)| c.census() == Census::Mixed)
            .map(|(&k, _)| k)
            .collect()
    }

    /// True when the always-zero classes are exactly the expected eight and
    /// no class is mixed.
    pub fn matches_proposition(&self) -> bool {
        self.zero_set() == PROPOSITION_ZERO_SET && self.mixed().is_empty()
    }

    /// 12x12 grid, rows `p mod 12`, columns `q mod 12`. `[0]` marks a class
    /// where the value is always 0, otherwise the cell shows the class's
    /// constant value (`*` if it varies); `.` means no coprime sample.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "congruence census, a=2 b=1, coprime 2 <= p <= {}, 2 <= q <= {}",
            self.max_p, self.max_q
        );
        out.push_str("p\\q ");
        for q in 0..12 {
            let _ = write!(out, "{q:>4}");
        }
        out.push('\n');
        for p in 0u8..12 {
            let _ = write!(out, "{p:>3} ");
            for q in 0u8..12 {
                let cell = match self.cells.get(&(p, q)) {
                    None => ".".to_owned(),
                    Some(c) => match c.census() {
                        Census::AlwaysZero => "[0]".to_owned(),
                        Census::NeverZero => c.witness.2.to_string(),
                        Census::Mixed => "*".to_owned(),
                    },
                };
                let _ = write!(out, "{cell:>4}");
            }
            out.push('\n');
        }
        let zeros: Vec<String> = self.zero_set().iter().map(|(p, q)| format!("({p},{q})")).collect();
        let _ = writeln!(out, "always zero: {}", zeros.join(" "));
        let mixed: Vec<String> = self.mixed().iter().map(|(p, q)| format!("({p},{q})")).collect();
        let _ = writeln!(
            out,
            "mixed: {}",
            if mixed.is_empty() {
                "none".to_owned()
            } else {
                mixed.join(" ")
            }
        );
        out
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::from("p_mod_12,q_mod_12,samples,zeros,census,witness_p,witness_q,witness_value\n");
        for (&(p, q), c) in &self.cells {
            let census = match c.census() {
                Census::AlwaysZero => "always_zero",
                Census::NeverZero => "never_zero",
                Census::Mixed => "mixed",
            };
            let (wp, wq, wv) = c.witness;
            let _ = writeln!(out, "{p},{q},{},{},{census},{wp},{wq},{wv}", c.samples, c.zeros);
        }
        out
    }
}
