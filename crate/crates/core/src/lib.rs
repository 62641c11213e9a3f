pub mod citation;
pub mod cohomology;
pub mod combinatorics;
pub mod dynamics;
pub mod error;
pub mod json;
pub mod lab;
pub mod linalg;
pub mod ring;
