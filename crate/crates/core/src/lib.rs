pub mod alphabet;
pub mod cadence;
pub mod gadgets;
pub mod lr;
pub mod oracle;
pub mod slp;
pub mod view;
pub mod witness;
