//! The minuscule table: one row per (type, minuscule weight).

use quadpair::drop_kit::drop_spectrum;
use quadpair::minuscule::enumerate_minuscule;
use quadpair::root_kit::{CartanType, Family, LengthClass};
use serde::{Deserialize, Serialize};

/// Column order is fixed: family, rank, weight, dimension, sign, drops_long,
/// drops_short. Drops are empty for length classes the type lacks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub family: String,
    pub rank: usize,
    pub weight: String,
    pub dimension: String,
    pub sign: String,
    pub drops_long: Option<String>,
    pub drops_short: Option<String>,
}

pub const COLUMNS: [&str; 7] = [
    "family",
    "rank",
    "weight",
    "dimension",
    "sign",
    "drops_long",
    "drops_short",
];

/// Classical rows A_1.., B_2.., C_2.., D_3.. up to `max_rank`, followed by
/// E6 and E7 once `max_rank` reaches their ranks.
pub fn table_rows(max_rank: usize) -> Vec<TableRow> {
    let mut types = Vec::new();
    for family in [Family::A, Family::B, Family::C, Family::D] {
        for n in family.min_rank()..=max_rank {
            types.push(CartanType::new(family, n).expect("rank >= min_rank"));
        }
    }
    for family in [Family::E6, Family::E7] {
        if family.fixed_rank().is_some_and(|r| r <= max_rank) {
            types.push(CartanType::exceptional(family).expect("exceptional"));
        }
    }
    let mut rows = Vec::new();
    for t in types {
        for rep in enumerate_minuscule(t) {
            let drops = drop_spectrum(&rep);
            let class = |c: LengthClass| drops.drop(c).map(|v| v.to_string());
            rows.push(TableRow {
                family: t.family().to_string(),
                rank: t.rank(),
                weight: format!("w{}", rep.fundamental_index()),
                dimension: rep.dimension().to_string(),
                sign: rep.sign().to_string(),
                drops_long: class(LengthClass::Long),
                drops_short: class(LengthClass::Short),
            });
        }
    }
    rows
}

impl TableRow {
    pub fn cells(&self) -> [String; 7] {
        [
            self.family.clone(),
            self.rank.to_string(),
            self.weight.clone(),
            self.dimension.clone(),
            self.sign.clone(),
            self.drops_long.clone().unwrap_or_default(),
            self.drops_short.clone().unwrap_or_default(),
        ]
    }

    pub fn is_exceptional(&self) -> bool {
        self.family.starts_with('E')
    }
}

pub fn to_csv(rows: &[TableRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(COLUMNS).expect("in-memory write");
    for row in rows {
        w.write_record(row.cells()).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

pub fn to_markdown(rows: &[TableRow]) -> String {
    let mut out = format!("| {} |\n", COLUMNS.join(" | "));
    out.push_str(&format!("|{}\n", "---|".repeat(COLUMNS.len())));
    for row in rows {
        out.push_str(&format!("| {} |\n", row.cells().join(" | ")));
    }
    if rows.iter().any(TableRow::is_exceptional) {
        out.push_str("\nE6 and E7 rows lie outside the classical A-D table.\n");
    }
    out
}
