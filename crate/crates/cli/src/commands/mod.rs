pub mod channel;
pub mod distribution;
pub mod report;
pub mod sweep;
pub mod verify;
