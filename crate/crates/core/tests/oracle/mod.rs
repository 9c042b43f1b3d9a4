//! Independent reference implementations shared by several test targets.
#![allow(dead_code)]

pub mod polynomial;
pub mod resolution;
