//! Thin data-parallel helpers: rayon when the `parallel` feature is on,
//! plain iterators otherwise.  Callers stay agnostic.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub(crate) fn map_vec<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_vec<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// Map then associatively fold, parallel when available.
#[cfg(feature = "parallel")]
pub(crate) fn map_reduce<T, R, F, G>(items: &[T], identity: impl Fn() -> R + Sync + Send, f: F, g: G) -> R
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
    G: Fn(R, R) -> R + Sync + Send,
{
    items.par_iter().map(f).reduce(&identity, g)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_reduce<T, R, F, G>(items: &[T], identity: impl Fn() -> R, f: F, g: G) -> R
where
    F: Fn(&T) -> R,
    G: Fn(R, R) -> R,
{
    items.iter().map(f).fold(identity(), g)
}

