//! Report formatting shared between the gcensus binary and its tests.

pub mod report_fmt;
