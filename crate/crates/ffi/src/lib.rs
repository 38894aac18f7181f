pub use hquot;
