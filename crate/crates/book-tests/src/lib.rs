//! Compiles the guide's code blocks as doctests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/posets.md")]
pub mod posets {}
#[doc = include_str!("../../../book/src/kfamilies.md")]
pub mod kfamilies {}
#[doc = include_str!("../../../book/src/saturation.md")]
pub mod saturation {}
#[doc = include_str!("../../../book/src/construction.md")]
pub mod construction {}
#[doc = include_str!("../../../book/src/duality.md")]
pub mod duality {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
