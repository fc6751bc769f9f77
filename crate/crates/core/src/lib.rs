// `!(x > 0.0)` is used on purpose to reject NaN along with non-positive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod cyclotomic;
pub mod homology;
pub mod specfun;
pub mod volume;
