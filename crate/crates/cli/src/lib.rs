//! Command line and HTTP front end for `clusterkit`.

pub mod commands;
pub mod service;
