//! Common interface for the bubble bases used by the Galerkin assembly.

/// A basis of the trial space `{(1 - |x|^2) p(x) : p in Pi_n}` on the unit
/// ball, evaluable together with Cartesian gradients.
///
/// Implementations are pure functions of `(degree, x)` and safe to call from
/// multiple threads.
pub trait BubbleBasis: Send + Sync {
    fn dim(&self) -> usize;

    fn degree(&self) -> usize;

    /// Number of basis functions, `dim Pi_n(B_d)`.
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// One-line description of the flat-index ordering, embedded in
    /// coefficient files.
    fn ordering(&self) -> String;

    /// Bubble values at `x` (`|x| <= 1`), written into `values`
    /// (length `len()`).
    fn values_into(&self, x: &[f64], values: &mut [f64]);

    /// Bubble values and Cartesian gradients at `x`. `gradients` is flat,
    /// `dim()` components per basis function.
    fn values_gradients_into(&self, x: &[f64], values: &mut [f64], gradients: &mut [f64]);
}
