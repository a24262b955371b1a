pub mod qt_ring;
pub mod partitions;
pub mod linalg;
pub mod symfunc;
pub mod macdonald;
pub mod whittaker;
pub mod pieri;
pub mod eigenops;
pub mod ghmodules;
pub mod cli;
