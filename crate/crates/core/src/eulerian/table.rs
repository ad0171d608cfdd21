//! Per-element comparison of the type-B and naive type-D statistics on `D_n`.

use serde::Serialize;

use crate::coxeter::{enumerate_d, ColoredPerm};

/// One element of `D_n`. Slot 0 is shown as `X` (descent) or `Y` (ascent);
/// the remaining slots as the product of their tops, e.g. `x2*y3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub sigma: String,
    pub b_slot0: char,
    pub b_tops: String,
    pub d_slot0: char,
    pub d_tops: String,
}

fn slot_tops(w: &[i32], first: i32) -> (char, String) {
    let mut prev = first;
    let mut slot0 = 'Y';
    let mut parts = Vec::new();
    for (i, &cur) in w.iter().enumerate() {
        let desc = prev > cur;
        if i == 0 {
            slot0 = if desc { 'X' } else { 'Y' };
        } else {
            let top = prev.unsigned_abs().max(cur.unsigned_abs());
            parts.push(format!("{}{top}", if desc { 'x' } else { 'y' }));
        }
        prev = cur;
    }
    (slot0, parts.join("*"))
}

pub fn table_row(sigma: &ColoredPerm) -> TableRow {
    let w = sigma.signed_window();
    let (b_slot0, b_tops) = slot_tops(&w, 0);
    let (d_slot0, d_tops) = slot_tops(&w, -w[1]);
    TableRow {
        sigma: sigma.to_string(),
        b_slot0,
        b_tops,
        d_slot0,
        d_tops,
    }
}

/// All rows for `D_n`, `n >= 2`, in enumeration order.
pub fn table1(n: usize) -> Vec<TableRow> {
    enumerate_d(n).map(|s| table_row(&s)).collect()
}
