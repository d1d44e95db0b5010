pub mod dto;
pub mod suites;
