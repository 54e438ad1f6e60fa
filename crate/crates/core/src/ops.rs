//! Arithmetic-operation accounting.
//!
//! Kernels report the number of scalar field operations they perform to a
//! counter owned by the calling thread. [`measure`] reads the counter before
//! and after a closure, so nested measurements compose and concurrent threads
//! never see each other's counts.

use std::cell::Cell;

thread_local! {
    static COUNT: Cell<u64> = const { Cell::new(0) };
}

#[inline]
pub(crate) fn tick(n: usize) {
    COUNT.with(|c| c.set(c.get().wrapping_add(n as u64)));
}

/// Runs `f` and returns its result with the number of scalar operations it
/// performed on this thread.
pub fn measure<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let start = COUNT.with(Cell::get);
    let out = f();
    let end = COUNT.with(Cell::get);
    (out, end.wrapping_sub(start))
}
