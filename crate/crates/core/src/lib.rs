pub mod capability;
pub mod catalog;
pub mod exactlin;
pub mod format;
pub mod multiplier;
pub mod recognize;
pub mod superalg;
