#![no_std]

extern crate alloc;

pub mod lang;
pub mod prob;
pub mod syntax;
pub mod engine;
pub mod aspgen;
pub mod random;
