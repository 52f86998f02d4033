pub use asms;
