//! End-user computations: zero-sum bounds for monic complex polynomials via
//! the companion matrix, and rank-refined energy bounds for simple graphs.

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{ComplexMatrix, LinalgError};

#[derive(Debug, Error)]
pub enum AppError {
    #[error("invalid polynomial: {message}")]
    BadPolynomial { message: String },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("self-loop at vertex {v} (line {line})")]
    SelfLoop { line: usize, v: usize },
    #[error("duplicate edge {u}-{v} (line {line})")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("vertex {v} out of range for {n} vertices (line {line})")]
    VertexOutOfRange { line: usize, v: usize, n: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Monic polynomial p(z) = zⁿ + aₙz^{n−1} + … + a₂z + a₁ of degree n ≥ 2
/// with a₁ ≠ 0; coefficients stored as a₁..aₙ.
#[derive(Debug, Clone)]
pub struct Polynomial {
    coefficients: Vec<Complex64>,
}

impl Polynomial {
    /// Builds from the coefficient list a₁..aₙ (constant term first); the
    /// degree is the list length.
    pub fn new(coefficients: Vec<Complex64>) -> Result<Self, AppError> {
        if coefficients.len() < 2 {
            return Err(AppError::BadPolynomial {
                message: format!("degree must be ≥ 2, got {}", coefficients.len()),
            });
        }
        if coefficients[0].norm() == 0.0 {
            return Err(AppError::BadPolynomial {
                message: "constant term a₁ must be nonzero".to_string(),
            });
        }
        for (i, c) in coefficients.iter().enumerate() {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(AppError::BadPolynomial {
                    message: format!("coefficient a{} is not finite", i + 1),
                });
            }
        }
        Ok(Polynomial { coefficients })
    }

    /// Divides a non-monic coefficient list by the leading coefficient. The
    /// plain constructors reject non-monic input instead of scaling silently,
    /// since scaling changes every |aᵢ| in the bound.
    pub fn normalized(
        leading: Complex64,
        coefficients: Vec<Complex64>,
    ) -> Result<Self, AppError> {
        if leading.norm() == 0.0 {
            return Err(AppError::BadPolynomial {
                message: "leading coefficient must be nonzero".to_string(),
            });
        }
        Polynomial::new(coefficients.into_iter().map(|c| c / leading).collect())
    }

    /// Accepts either a bare JSON array `[[re, im], …]` of a₁..aₙ or an
    /// object `{"degree": n, "coefficients": [...]}` with an optional
    /// `"leading"` entry that must equal 1.
    pub fn from_json(text: &str) -> Result<Self, AppError> {
        let bad = |message: String| AppError::BadPolynomial { message };
        let value: serde_json::Value = serde_json::from_str(text)
            .map_err(|e| bad(format!("not valid JSON: {e}")))?;

        let parse_pair = |v: &serde_json::Value, what: &str| -> Result<Complex64, AppError> {
            let arr = v
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| bad(format!("{what} must be a [re, im] pair")))?;
            let re = arr[0].as_f64().ok_or_else(|| bad(format!("{what}: bad real part")))?;
            let im = arr[1]
                .as_f64()
                .ok_or_else(|| bad(format!("{what}: bad imaginary part")))?;
            Ok(Complex64::new(re, im))
        };

        let (coeff_value, declared_degree, leading) = match &value {
            serde_json::Value::Array(_) => (&value, None, None),
            serde_json::Value::Object(map) => {
                let coeffs = map
                    .get("coefficients")
                    .ok_or_else(|| bad("missing \"coefficients\"".to_string()))?;
                let degree = map
                    .get("degree")
                    .map(|d| {
                        d.as_u64()
                            .map(|d| d as usize)
                            .ok_or_else(|| bad("\"degree\" must be a non-negative integer".into()))
                    })
                    .transpose()?;
                let leading = map
                    .get("leading")
                    .map(|l| parse_pair(l, "leading"))
                    .transpose()?;
                (coeffs, degree, leading)
            }
            _ => return Err(bad("expected an array or object".to_string())),
        };

        let arr = coeff_value
            .as_array()
            .ok_or_else(|| bad("coefficients must be an array".to_string()))?;
        let mut coefficients = Vec::with_capacity(arr.len());
        for (i, v) in arr.iter().enumerate() {
            coefficients.push(parse_pair(v, &format!("coefficient a{}", i + 1))?);
        }
        if let Some(d) = declared_degree {
            if d != coefficients.len() {
                return Err(bad(format!(
                    "degree {d} disagrees with {} coefficients",
                    coefficients.len()
                )));
            }
        }
        if let Some(l) = leading {
            if (l - Complex64::new(1.0, 0.0)).norm() > 0.0 {
                return Err(bad(
                    "input is not monic; divide through the leading coefficient first \
                     (Polynomial::normalized)"
                        .to_string(),
                ));
            }
        }
        Polynomial::new(coefficients)
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len()
    }

    /// a₁..aₙ, constant term first.
    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        // Horner on zⁿ + aₙz^{n−1} + … + a₁
        let mut acc = Complex64::new(1.0, 0.0);
        for a in self.coefficients.iter().rev() {
            acc = acc * z + a;
        }
        acc
    }
}

/// Companion matrix with first row (−aₙ, −aₙ₋₁, …, −a₁) and a subdiagonal of
/// ones; its eigenvalues are the zeros of the polynomial.
pub fn companion_matrix(poly: &Polynomial) -> ComplexMatrix {
    let n = poly.degree();
    let coeffs = poly.coefficients();
    ComplexMatrix::from_fn(n, n, |i, j| {
        if i == 0 {
            -coeffs[n - 1 - j]
        } else if j + 1 == i {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
    .expect("finite coefficients")
}

#[derive(Debug, Clone, Serialize)]
pub struct ZeroSumReport {
    /// Σ|λᵢ| over the companion eigenvalues.
    pub zero_sum: f64,
    /// √(n(n−1+Σ|aᵢ|²)).
    pub bound: f64,
    pub zeros: Vec<(f64, f64)>,
}

/// Zero-modulus sum of p against its closed-form bound.
pub fn zero_sum_bound(poly: &Polynomial) -> Result<ZeroSumReport, AppError> {
    let companion = companion_matrix(poly);
    let schur = companion.schur(false)?;
    let zero_sum = schur.values.iter().map(|z| z.norm()).sum();
    Ok(ZeroSumReport {
        zero_sum,
        bound: coefficient_bound(poly),
        zeros: schur.values.iter().map(|z| (z.re, z.im)).collect(),
    })
}

fn coefficient_bound(poly: &Polynomial) -> f64 {
    let n = poly.degree() as f64;
    let coeff_sq: f64 = poly.coefficients().iter().map(|a| a.norm_sqr()).sum();
    (n * (n - 1.0 + coeff_sq)).sqrt()
}

/// Upper bound on the smallest zero modulus: the zero-sum bound divided by
/// the degree.
pub fn smallest_zero_bound(poly: &Polynomial) -> f64 {
    coefficient_bound(poly) / poly.degree() as f64
}

/// Simple undirected graph: vertex count plus a deduplicated edge set with
/// 0-indexed endpoints.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, AppError> {
        let mut normalized = Vec::with_capacity(edges.len());
        for (line, &(u, v)) in edges.iter().enumerate() {
            Self::admit(n, u, v, line + 1, &normalized)?;
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        Ok(Graph {
            n,
            edges: normalized,
        })
    }

    fn admit(
        n: usize,
        u: usize,
        v: usize,
        line: usize,
        seen: &[(usize, usize)],
    ) -> Result<(), AppError> {
        if u == v {
            return Err(AppError::SelfLoop { line, v });
        }
        for vert in [u, v] {
            if vert >= n {
                return Err(AppError::VertexOutOfRange { line, v: vert, n });
            }
        }
        let key = (u.min(v), u.max(v));
        if seen.contains(&key) {
            return Err(AppError::DuplicateEdge {
                line,
                u: key.0,
                v: key.1,
            });
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// Edge-list text: first non-comment line is the vertex count, then one
/// `u v` pair per line; `#`-prefixed lines are comments. The explicit header
/// keeps isolated vertices representable.
pub fn load_graph(text: &str) -> Result<Graph, AppError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        if n.is_none() {
            n = Some(content.parse().map_err(|_| AppError::Parse {
                line,
                message: format!("expected vertex count, got {content:?}"),
            })?);
            continue;
        }
        let mut parts = content.split_whitespace();
        let mut next = |what: &str| -> Result<usize, AppError> {
            parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| AppError::Parse {
                    line,
                    message: format!("expected {what} in {content:?}"),
                })
        };
        let u = next("source vertex")?;
        let v = next("target vertex")?;
        if parts.next().is_some() {
            return Err(AppError::Parse {
                line,
                message: format!("trailing tokens after edge in {content:?}"),
            });
        }
        edges.push((u, v, line));
    }
    let n = n.ok_or(AppError::Parse {
        line: text.lines().count().max(1),
        message: "missing vertex-count header".to_string(),
    })?;

    let mut seen: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
    for &(u, v, line) in &edges {
        Graph::admit(n, u, v, line, &seen)?;
        seen.push((u.min(v), u.max(v)));
    }
    Graph::new(n, edges.into_iter().map(|(u, v, _)| (u, v)).collect())
}

/// Symmetric 0/1 adjacency matrix with zero diagonal.
pub fn adjacency(graph: &Graph) -> ComplexMatrix {
    let n = graph.vertex_count();
    let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
    for &(u, v) in graph.edges() {
        entries[u * n + v] = Complex64::new(1.0, 0.0);
        entries[v * n + u] = Complex64::new(1.0, 0.0);
    }
    ComplexMatrix::from_rows(n, n, entries).expect("finite adjacency")
}

#[derive(Debug, Clone, Serialize)]
pub struct EnergyReport {
    /// Σ|λᵢ| over the adjacency spectrum.
    pub energy: f64,
    /// Numeric rank of the adjacency matrix.
    pub rank: usize,
    /// √(2m·rank), the rank-refined bound.
    pub bound_rank: f64,
    /// √(2mn), the classical bound.
    pub bound_mcclelland: f64,
    /// Adjacency eigenvalues, descending.
    pub eigenvalues: Vec<f64>,
}

/// Graph energy against the rank-refined and classical bounds.
pub fn energy_report(graph: &Graph) -> Result<EnergyReport, AppError> {
    let adj = adjacency(graph);
    let eig = adj.hermitian_eig(false)?;
    let rank = adj.numeric_rank()?;
    let two_m = 2.0 * graph.edge_count() as f64;
    Ok(EnergyReport {
        energy: eig.values.iter().map(|v| v.abs()).sum(),
        rank,
        bound_rank: (two_m * rank as f64).sqrt(),
        bound_mcclelland: (two_m * graph.vertex_count() as f64).sqrt(),
        eigenvalues: eig.values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn poly(coeffs: &[(f64, f64)]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&(re, im)| c(re, im)).collect()).unwrap()
    }

    #[test]
    fn companion_of_z_squared_plus_one() {
        // z² + 1: a₁ = 1, a₂ = 0
        let p = poly(&[(1.0, 0.0), (0.0, 0.0)]);
        let m = companion_matrix(&p);
        let expected =
            ComplexMatrix::from_real_rows(2, 2, &[0.0, -1.0, 1.0, 0.0]).unwrap();
        assert!(m.approx_eq(&expected, 0.0));
    }

    #[test]
    fn companion_shape_for_binomial() {
        // zⁿ + a₁: the only entries are −a₁ in the corner and the subdiagonal
        let p = poly(&[(-2.5, 1.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0)]);
        let m = companion_matrix(&p);
        assert_eq!((m.get(0, 3) - c(2.5, -1.0)).norm(), 0.0);
        let mut off_first_row = 0;
        for i in 1..4 {
            for j in 0..4 {
                if m.get(i, j).norm() != 0.0 {
                    assert_eq!(j + 1, i, "subdiagonal only");
                    assert_eq!(m.get(i, j), c(1.0, 0.0));
                    off_first_row += 1;
                }
            }
        }
        assert_eq!(off_first_row, 3);
    }

    #[test]
    fn companion_of_z_cubed_minus_one_has_unit_roots() {
        let p = poly(&[(-1.0, 0.0), (0.0, 0.0), (0.0, 0.0)]);
        let report = zero_sum_bound(&p).unwrap();
        assert!((report.zero_sum - 3.0).abs() < 1e-10);
        assert!((report.bound - 3.0).abs() < 1e-12);
        for &(re, im) in &report.zeros {
            let modulus = (re * re + im * im).sqrt();
            assert!((modulus - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn zero_sum_of_z_squared_plus_one_is_tight() {
        let p = poly(&[(1.0, 0.0), (0.0, 0.0)]);
        let report = zero_sum_bound(&p).unwrap();
        assert!((report.zero_sum - 2.0).abs() < 1e-12);
        assert!((report.bound - 2.0).abs() < 1e-12);
    }

    #[test]
    fn zero_sum_quadratic_with_real_roots() {
        // z² + 4z + 1: zeros −2 ± √3, moduli summing to 4
        let p = poly(&[(1.0, 0.0), (4.0, 0.0)]);
        let report = zero_sum_bound(&p).unwrap();
        assert!((report.zero_sum - 4.0).abs() < 1e-10);
        assert!((report.bound - 6.0).abs() < 1e-12);
        assert!((smallest_zero_bound(&p) - 3.0).abs() < 1e-12);
        let min_zero = report
            .zeros
            .iter()
            .map(|&(re, im)| (re * re + im * im).sqrt())
            .fold(f64::INFINITY, f64::min);
        assert!((min_zero - (2.0 - 3f64.sqrt())).abs() < 1e-10);
    }

    #[test]
    fn smallest_zero_bound_unit_cases() {
        assert!((smallest_zero_bound(&poly(&[(1.0, 0.0), (0.0, 0.0)])) - 1.0).abs() < 1e-12);
        assert!(
            (smallest_zero_bound(&poly(&[(-1.0, 0.0), (0.0, 0.0), (0.0, 0.0)])) - 1.0).abs()
                < 1e-12
        );
    }

    #[test]
    fn polynomial_rejects_zero_constant_and_low_degree() {
        assert!(Polynomial::new(vec![c(0.0, 0.0), c(1.0, 0.0)]).is_err());
        assert!(Polynomial::new(vec![c(1.0, 0.0)]).is_err());
    }

    #[test]
    fn polynomial_normalized_divides_through() {
        let p = Polynomial::normalized(c(2.0, 0.0), vec![c(2.0, 0.0), c(8.0, 0.0)]).unwrap();
        assert!((p.coefficients()[0] - c(1.0, 0.0)).norm() < 1e-15);
        assert!((p.coefficients()[1] - c(4.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn polynomial_json_forms() {
        let arr = Polynomial::from_json("[[1, 0], [0, 0]]").unwrap();
        assert_eq!(arr.degree(), 2);
        let obj =
            Polynomial::from_json(r#"{"degree": 2, "coefficients": [[1, 0], [0, 0]]}"#).unwrap();
        assert_eq!(obj.degree(), 2);
        assert!(Polynomial::from_json(r#"{"degree": 3, "coefficients": [[1, 0]]}"#).is_err());
        // non-monic input is rejected, not rescaled
        let err = Polynomial::from_json(
            r#"{"coefficients": [[1, 0], [0, 0]], "leading": [2, 0]}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("monic"));
    }

    #[test]
    fn polynomial_evaluation_matches_roots() {
        let p = poly(&[(1.0, 0.0), (4.0, 0.0)]);
        let root = c(-2.0 + 3f64.sqrt(), 0.0);
        assert!(p.evaluate(root).norm() < 1e-12);
    }

    #[test]
    fn load_graph_basics() {
        let k2 = load_graph("2\n0 1\n").unwrap();
        assert_eq!(k2.vertex_count(), 2);
        assert_eq!(k2.edge_count(), 1);

        let star = load_graph("4\n0 1\n0 2\n0 3\n").unwrap();
        assert_eq!(star.edge_count(), 3);

        let commented = load_graph("# star graph\n4\n0 1\n# middle comment\n0 2\n0 3\n").unwrap();
        assert_eq!(commented.edge_count(), 3);
    }

    #[test]
    fn load_graph_error_cases() {
        assert!(matches!(
            load_graph("3\n0 1\n0 1\n"),
            Err(AppError::DuplicateEdge { line: 3, .. })
        ));
        assert!(matches!(
            load_graph("3\n1 1\n"),
            Err(AppError::SelfLoop { line: 2, .. })
        ));
        assert!(matches!(
            load_graph("3\n0 7\n"),
            Err(AppError::VertexOutOfRange { line: 2, v: 7, .. })
        ));
        assert!(matches!(
            load_graph("3\n0\n"),
            Err(AppError::Parse { line: 2, .. })
        ));
        assert!(matches!(load_graph("# nothing\n"), Err(AppError::Parse { .. })));
        // duplicate given in reversed orientation is still a duplicate
        assert!(matches!(
            load_graph("3\n0 1\n1 0\n"),
            Err(AppError::DuplicateEdge { .. })
        ));
    }

    #[test]
    fn adjacency_shape_and_handshake() {
        let g = load_graph("4\n0 1\n0 2\n0 3\n").unwrap();
        let adj = adjacency(&g);
        assert!(adj.adjoint().approx_eq(&adj, 0.0));
        for i in 0..4 {
            assert_eq!(adj.get(i, i).norm(), 0.0);
        }
        // trace(Adj²) = Σdᵢ = 2m
        let sq = &adj * &adj;
        assert!((sq.trace().re - 6.0).abs() < 1e-12);
    }

    #[test]
    fn energy_of_k2() {
        let g = load_graph("2\n0 1\n").unwrap();
        let r = energy_report(&g).unwrap();
        assert!((r.energy - 2.0).abs() < 1e-10);
        assert_eq!(r.rank, 2);
        assert!((r.bound_rank - 2.0).abs() < 1e-12);
    }

    #[test]
    fn energy_of_star_is_rank_tight() {
        let g = load_graph("4\n0 1\n0 2\n0 3\n").unwrap();
        let r = energy_report(&g).unwrap();
        let expected = 2.0 * 3f64.sqrt();
        assert!((r.energy - expected).abs() < 1e-10);
        assert_eq!(r.rank, 2);
        assert!((r.bound_rank - expected).abs() < 1e-12);
        assert!((r.bound_mcclelland - 24f64.sqrt()).abs() < 1e-12);
        assert!(r.bound_rank < r.bound_mcclelland);
    }

    #[test]
    fn energy_of_k4_full_rank() {
        let g = load_graph("4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
        let r = energy_report(&g).unwrap();
        assert!((r.energy - 6.0).abs() < 1e-10);
        assert_eq!(r.rank, 4);
        assert!((r.bound_rank - 48f64.sqrt()).abs() < 1e-12);
        assert!((r.bound_rank - r.bound_mcclelland).abs() < 1e-12);
        // spectrum 3, −1, −1, −1
        assert!((r.eigenvalues[0] - 3.0).abs() < 1e-10);
        for &v in &r.eigenvalues[1..] {
            assert!((v + 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn energy_of_empty_graph() {
        let g = Graph::new(5, vec![]).unwrap();
        let r = energy_report(&g).unwrap();
        assert_eq!(r.energy, 0.0);
        assert_eq!(r.rank, 0);
        assert_eq!(r.bound_rank, 0.0);
        assert_eq!(r.bound_mcclelland, 0.0);
    }
}
