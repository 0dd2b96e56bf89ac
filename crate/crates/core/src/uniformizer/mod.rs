//! The Hilbert-uniformization: from a generic flat surface back to its
//! parallel slit domain.
//!
//! The critical graph of `Re z` consists of the leftward horizontal rays into
//! the zeros. Cutting along it leaves a simply connected surface whose
//! developing map is injective; its image is the plane minus `2h` leftward
//! slits, which are read off as the normal form.

mod critical;
mod develop;
mod normal_form;
mod scramble;

pub use critical::{trace_critical_graph, CriticalGraph, Ray, TraceError, Zero};
pub use develop::{develop, Banks, DevelopError, Development};
pub use normal_form::{
    periods, uniformize, uniformize_full, uniformize_slit_data, PeriodMatrix, UniformizeError,
    Uniformization,
};
pub use scramble::{
    apply_random_move, insert_fake_wall, relabel_strips, scramble, scramble_plan, split_strip,
    translate, Move,
};
