//! Parallel census over `(|x|, |y|)` blocks and its CSV output.
//!
//! Blocks are classified on the rayon pool and concatenated in block order,
//! so the output matches the sequential enumeration exactly.

use std::io::Write;

use hitomezashi_core::classify::classify;
use hitomezashi_core::theorems::{
    census_blocks, check_bounds, patterns_in_block, CensusRow, TheoremReport,
};
use hitomezashi_core::Error as CoreError;
use rayon::prelude::*;

fn blocks(max_x: usize, max_y: usize) -> Result<Vec<(usize, usize)>, CoreError> {
    check_bounds(max_x, max_y)?;
    Ok(census_blocks(max_x, max_y).collect())
}

/// Classifies every pattern within the bounds, in enumeration order.
pub fn census(max_x: usize, max_y: usize) -> Result<Vec<CensusRow>, CoreError> {
    let per_block: Vec<Result<Vec<CensusRow>, CoreError>> = blocks(max_x, max_y)?
        .into_par_iter()
        .map(|(lx, ly)| {
            patterns_in_block(lx, ly)
                .map(|p| classify(&p).map(|r| CensusRow::from(&r)))
                .collect()
        })
        .collect();
    let mut rows = Vec::new();
    for block in per_block {
        rows.extend(block?);
    }
    Ok(rows)
}

/// [`hitomezashi_core::theorems::verify_theorems`], spread over the rayon pool.
pub fn verify(max_x: usize, max_y: usize) -> Result<TheoremReport, CoreError> {
    let parts: Vec<TheoremReport> = blocks(max_x, max_y)?
        .into_par_iter()
        .map(|(lx, ly)| {
            let mut part = TheoremReport::new(max_x, max_y);
            for p in patterns_in_block(lx, ly) {
                part.record(&p, &classify(&p));
            }
            part
        })
        .collect();
    let mut report = TheoremReport::new(max_x, max_y);
    for part in parts {
        report.merge(part);
    }
    Ok(report)
}

/// Writes rows as CSV with header `x,y,label,period`.
pub fn write_csv<W: Write>(rows: &[CensusRow], out: W) -> csv::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(["x", "y", "label", "period"])?;
    for row in rows {
        writer.write_record([
            row.x.to_string(),
            row.y.to_string(),
            row.label.to_string(),
            row.period.to_string(),
        ])?;
    }
    writer.flush()?;
    Ok(())
}

pub fn csv_string(rows: &[CensusRow]) -> String {
    let mut buf = Vec::new();
    write_csv(rows, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("census fields are ASCII")
}
