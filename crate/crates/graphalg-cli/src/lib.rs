//! Support code for the `graphalg` binary that integration tests also
//! exercise: the machine-readable row format.

pub mod rows;
