pub mod commands;
pub mod error;
pub mod job;
pub mod parse;
pub mod report;
