//! Verification suites with line-oriented PASS/FAIL reports.

mod report;
mod suites;

pub use report::{matrix_diff, Check, Report};
pub use suites::{
    all, faithfulness, k0, presentation, product, product_cell, ptr, quotient, reidemeister, technical, weight_split,
    welldef, Suite,
};
