//! The forest matrix `Q = (I + L)⁻¹`, the Laplacian pseudoinverse `L⁺`,
//! and the two edge distances derived from them.
//!
//! Both matrices come from a single Cholesky factorization each:
//! `I + L` is positive definite for any graph, and for a connected graph
//! `L + J/n` is positive definite with inverse `L⁺ + J/n`, where `J` is the
//! all-ones matrix.
//!
//! Deleting a non-bridge edge `(i, j)` lowers both matrices being inverted
//! by `b bᵀ`, with `b = eᵢ − eⱼ`, so both inverses admit a Sherman-Morrison
//! update. The denominators are `1 − Δᵢⱼ` and `1 − Ωᵢⱼ`; the latter vanishes
//! exactly on bridges.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// `L = D − A` as a dense matrix.
pub fn build_laplacian<T: Scalar>(g: &Graph) -> Matrix<T> {
    let mut l = Matrix::zeros(g.n());
    for e in g.edges() {
        let (u, v) = e.endpoints();
        l[(u, u)] += T::one();
        l[(v, v)] += T::one();
        l[(u, v)] -= T::one();
        l[(v, u)] -= T::one();
    }
    l
}

/// `Q = (I + L)⁻¹`. Defined for disconnected graphs too.
pub fn forest_matrix<T: Scalar>(g: &Graph) -> Result<Matrix<T>> {
    let mut a = build_laplacian::<T>(g);
    for i in 0..g.n() {
        a[(i, i)] += T::one();
    }
    Ok(a.cholesky()?.inverse())
}

/// `det(I + L)`, which counts the spanning rooted forests of `g`.
pub fn forest_determinant<T: Scalar>(g: &Graph) -> Result<T> {
    let mut a = build_laplacian::<T>(g);
    for i in 0..g.n() {
        a[(i, i)] += T::one();
    }
    Ok(a.cholesky()?.determinant())
}

/// Moore-Penrose pseudoinverse of the Laplacian of a connected graph,
/// computed as `(L + J/n)⁻¹ − J/n`.
pub fn laplacian_pseudoinverse<T: Scalar>(g: &Graph) -> Result<Matrix<T>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let shift = T::one() / T::from_count(g.n());
    let shifted = build_laplacian::<T>(g).add_scalar(shift);
    Ok(shifted.cholesky()?.inverse().add_scalar(-shift))
}

/// `Q` and `L⁺` for one graph state.
#[derive(Clone, Debug, PartialEq)]
pub struct ForestMatrices<T> {
    q: Matrix<T>,
    lplus: Matrix<T>,
}

impl<T: Scalar> ForestMatrices<T> {
    /// Requires a connected graph.
    pub fn compute(g: &Graph) -> Result<Self> {
        Ok(ForestMatrices { q: forest_matrix(g)?, lplus: laplacian_pseudoinverse(g)? })
    }

    pub fn q(&self) -> &Matrix<T> {
        &self.q
    }

    pub fn lplus(&self) -> &Matrix<T> {
        &self.lplus
    }

    /// Forest distance `Δᵢⱼ = Qᵢᵢ − Qᵢⱼ − Qⱼᵢ + Qⱼⱼ`.
    pub fn forest_distance(&self, i: usize, j: usize) -> T {
        self.q.incidence_quadratic(i, j)
    }

    /// Effective resistance `Ωᵢⱼ = L⁺ᵢᵢ − L⁺ᵢⱼ − L⁺ⱼᵢ + L⁺ⱼⱼ`.
    pub fn resistance(&self, i: usize, j: usize) -> T {
        self.lplus.incidence_quadratic(i, j)
    }

    pub fn metric(&self, edge: Edge) -> EdgeMetric<T> {
        let (u, v) = edge.endpoints();
        EdgeMetric { edge, delta: self.forest_distance(u, v), omega: self.resistance(u, v) }
    }

    /// Rank-one update to the matrices of the graph with `edge` removed.
    ///
    /// `delta` and `omega` must be the edge's current forest distance and
    /// resistance. The `L⁺` update is applied to `L⁺` directly: since `b`
    /// is orthogonal to the all-ones vector, `(L⁺ + J/n) b = L⁺ b` and the
    /// `J/n` shift cancels.
    pub fn downdate(&mut self, edge: Edge, delta: T, omega: T) -> Result<()> {
        let tol = T::bridge_tol();
        let omega_gap = T::one() - omega;
        if omega_gap < tol {
            return Err(Error::BridgeDowndate { edge, omega: omega.to_f64_lossy() });
        }
        let delta_gap = T::one() - delta;
        if delta_gap < tol {
            return Err(Error::NumericalFailure(format!(
                "forest distance {delta} of {edge} leaves no room for a downdate"
            )));
        }
        let (u, v) = edge.endpoints();
        let qb = self.q.times_incidence(u, v);
        self.q.rank_one_update(&qb, T::one() / delta_gap);
        let lb = self.lplus.times_incidence(u, v);
        self.lplus.rank_one_update(&lb, T::one() / omega_gap);
        Ok(())
    }
}

/// Forest distance and effective resistance across one edge.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct EdgeMetric<T> {
    pub edge: Edge,
    pub delta: T,
    pub omega: T,
}

impl<T: Scalar> EdgeMetric<T> {
    /// `Ω ≥ 1 − tol`: deleting this edge would disconnect the graph.
    pub fn is_bridge(&self) -> bool {
        self.omega >= T::one() - T::bridge_tol()
    }
}

/// One metric per edge of `g`, in canonical edge order.
pub fn edge_metrics<T: Scalar>(g: &Graph, matrices: &ForestMatrices<T>) -> Vec<EdgeMetric<T>> {
    g.edges().iter().map(|&e| matrices.metric(e)).collect()
}

/// Non-mutating form of [`ForestMatrices::downdate`].
pub fn downdate_after_deletion<T: Scalar>(
    matrices: &ForestMatrices<T>,
    edge: Edge,
    delta: T,
    omega: T,
) -> Result<ForestMatrices<T>> {
    let mut out = matrices.clone();
    out.downdate(edge, delta, omega)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn triangle_pendant() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap()
    }

    fn p2() -> Graph {
        Graph::new(2, [(0, 1)]).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn laplacians() {
        let l = build_laplacian::<f64>(&p2());
        assert_eq!(l, Matrix::from_fn(2, |i, j| if i == j { 1.0 } else { -1.0 }));

        let l = build_laplacian::<f64>(&k4());
        assert_eq!(l, Matrix::from_fn(4, |i, j| if i == j { 3.0 } else { -1.0 }));

        let l = build_laplacian::<f64>(&triangle_pendant());
        let diag: Vec<f64> = (0..4).map(|i| l[(i, i)]).collect();
        assert_eq!(diag, vec![3.0, 2.0, 2.0, 1.0]);
        assert_eq!(l[(0, 3)], -1.0);
        assert_eq!(l[(1, 3)], 0.0);
        assert!(l.row_sums().iter().all(|s| s.abs() < 1e-12));
    }

    #[test]
    fn forest_matrix_of_k4() {
        let q = forest_matrix::<f64>(&k4()).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let expected = if i == j { 0.4 } else { 0.2 };
                assert!(close(q[(i, j)], expected, 1e-12));
            }
        }
    }

    #[test]
    fn forest_matrix_of_triangle_pendant() {
        let g = triangle_pendant();
        let q = forest_matrix::<f64>(&g).unwrap();
        assert!(close(q[(3, 3)], 0.6, 1e-12));
        assert!(close(q[(0, 0)], 0.4, 1e-12));
        assert!(close(q[(0, 3)], 0.2, 1e-12));
        assert!(close(forest_determinant::<f64>(&g).unwrap(), 40.0, 1e-9));
        assert!(q.row_sums().iter().all(|s| close(*s, 1.0, 1e-12)));
    }

    #[test]
    fn forest_matrix_allows_disconnected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let q = forest_matrix::<f64>(&g).unwrap();
        assert!(close(q[(0, 2)], 0.0, 1e-15));
        assert!(close(q[(0, 0)], 2.0 / 3.0, 1e-12));
    }

    #[test]
    fn pseudoinverse_of_p2() {
        let lp = laplacian_pseudoinverse::<f64>(&p2()).unwrap();
        assert!(close(lp[(0, 0)], 0.25, 1e-12));
        assert!(close(lp[(0, 1)], -0.25, 1e-12));
        assert_eq!(
            laplacian_pseudoinverse::<f64>(&Graph::new(2, Vec::<Edge>::new()).unwrap()),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn pseudoinverse_defining_property() {
        let g = triangle_pendant();
        let l = build_laplacian::<f64>(&g);
        let lp = laplacian_pseudoinverse::<f64>(&g).unwrap();
        assert!(l.matmul(&lp).matmul(&l).max_abs_diff(&l) < 1e-12);
    }

    #[test]
    fn edge_metrics_examples() {
        let g = k4();
        let fm = ForestMatrices::<f64>::compute(&g).unwrap();
        for m in edge_metrics(&g, &fm) {
            assert!(close(m.delta, 0.4, 1e-12));
            assert!(close(m.omega, 0.5, 1e-12));
        }

        let g = triangle_pendant();
        let fm = ForestMatrices::<f64>::compute(&g).unwrap();
        let m03 = fm.metric(Edge::new(0, 3));
        assert!(close(m03.delta, 0.6, 1e-12));
        assert!(close(m03.omega, 1.0, 1e-12));
        assert!(m03.is_bridge());
        assert!(close(fm.metric(Edge::new(1, 2)).delta, 0.5, 1e-12));

        let fm = ForestMatrices::<f64>::compute(&p2()).unwrap();
        let m = fm.metric(Edge::new(0, 1));
        assert!(close(m.delta, 2.0 / 3.0, 1e-12));
        assert!(close(m.omega, 1.0, 1e-12));
    }

    #[test]
    fn downdate_matches_recompute() {
        for (g, e) in [(k4(), Edge::new(0, 1)), (triangle_pendant(), Edge::new(1, 2))] {
            let fm = ForestMatrices::<f64>::compute(&g).unwrap();
            let m = fm.metric(e);
            let down = downdate_after_deletion(&fm, e, m.delta, m.omega).unwrap();
            let fresh = ForestMatrices::<f64>::compute(&g.without_edge(e).unwrap()).unwrap();
            assert!(down.q().max_abs_diff(fresh.q()) < 1e-8);
            assert!(down.lplus().max_abs_diff(fresh.lplus()) < 1e-8);
        }
    }

    #[test]
    fn downdate_refuses_bridge() {
        let g = triangle_pendant();
        let fm = ForestMatrices::<f64>::compute(&g).unwrap();
        let e = Edge::new(0, 3);
        let m = fm.metric(e);
        assert!(matches!(
            downdate_after_deletion(&fm, e, m.delta, m.omega),
            Err(Error::BridgeDowndate { .. })
        ));
    }

    #[test]
    fn single_precision_agrees() {
        let g = triangle_pendant();
        let fm = ForestMatrices::<f32>::compute(&g).unwrap();
        let m = fm.metric(Edge::new(0, 3));
        assert!((m.delta - 0.6).abs() < 1e-5);
        assert!(m.is_bridge());
        assert!(!fm.metric(Edge::new(1, 2)).is_bridge());
    }
}
