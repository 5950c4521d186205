pub mod chainring;
pub mod error;
pub mod factorbase;
pub mod gray;
pub mod ideals;
pub mod length2;
pub mod negacode;
pub mod oracle;
pub mod z4poly;

pub use error::{Error, Result};
