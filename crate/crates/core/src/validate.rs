//! Placeholder; the validation suite is assembled after the kernels and
//! oracles are in place.
