pub mod cohomology;
pub mod exact;
pub mod groups;
pub mod lyapunov;
pub mod quaternions;
pub mod superell;
pub mod verify;
pub mod zariski;
