//! Library surface of the command-line front end, split out so the
//! integration tests can drive dispatch and introspect the clap command.

pub mod app;
pub mod render;
pub mod report;
