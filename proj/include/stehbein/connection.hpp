#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "stehbein/braiding.hpp"
#include "stehbein/calculus.hpp"

namespace stehbein {

/// A linear connection (D, sigma): D theta^a = -omega^a_{bc} theta^b (x) theta^c,
/// extended to all 1-forms by the left Leibniz rule.
struct Connection {
  std::shared_ptr<const FrameGeometry> geom;
  Braiding sigma;
  FrameTensorField omega;  ///< degree-3 grid, omega^a_{bc} at (a, b, c)
};

/// D_(0) theta^a = -theta (x) theta^a + sigma(theta^a (x) theta), i.e.
/// omega^a_{bd} = -lambda_b delta^a_d + lambda_c S^{ac}_{bd}.
Connection d0_connection(std::shared_ptr<const FrameGeometry> geom, const Braiding& sigma);

Connection connection_from_omega(std::shared_ptr<const FrameGeometry> geom, const Braiding& sigma,
                                 FrameTensorField omega);

/// D + chi with chi(theta^a) = -chi^a_{bc} theta^b (x) theta^c and central chi.
Connection with_central_correction(const Connection& base, const CentralTensor& chi);

/// Minimum-norm central chi making base + chi torsion-free. `noncentral_residual`
/// receives the size of the part of the torsion that no central chi can remove.
CentralTensor solve_torsion_free_chi(const Connection& base, double* noncentral_residual = nullptr);

/// D(xi_a theta^a) = d xi_a (x) theta^a + xi_a D theta^a.
FrameTensorField covariant_derivative(const Connection& conn, const FrameTensorField& xi);

/// ||D(f xi) - df (x) xi - f D xi||.
double check_left_leibniz(const Connection& conn, const AlgebraElement& f, const FrameTensorField& xi);
/// ||D(xi f) - sigma(xi (x) df) - (D xi) f||.
double check_right_leibniz(const Connection& conn, const AlgebraElement& f, const FrameTensorField& xi);

struct TorsionResult {
  std::vector<FrameTensorField> forms;  ///< Theta^a = d theta^a - pi(D theta^a), one per a
  double form_norm = 0.0;               ///< max over a of max_coeff_norm(Theta^a)
  double algebraic_residual = 0.0;      ///< max ||omega^a_{de} P^{de}_{bc} - 1/2 C^a_{bc}||
};
TorsionResult torsion(const Connection& conn);

/// Theta(xi) = d xi - pi(D xi) on an arbitrary 1-form.
FrameTensorField torsion_map(const Connection& conn, const FrameTensorField& xi);

/// g(T) = sum T_{ab} g^{ab}.
AlgebraElement metric_eval(const CentralTensor& g, const FrameTensorField& t);

struct MetricSymmetry {
  double residual = 0.0;
  Complex factor{};
};
/// Least-squares c with S^{ab}_{cd} g^{cd} ~ c g^{ab}, and the residual at that c.
MetricSymmetry check_metric_symmetry(const CentralTensor& g, const CentralTensor& S);

struct MetricCompatibility {
  double first = 0.0;   ///< omega^a_{bc} + omega_{cd}^e S^{ad}_{be}
  double second = 0.0;  ///< S^{ae}_{df} g^{fg} S^{bc}_{eg} - g^{ab} delta^c_d
};
/// Indices of omega are lowered and raised with g_{ab} = (g^{ab})^{-1}.
MetricCompatibility check_metric_compatibility(const Connection& conn, const CentralTensor& g);

/// D_2 from its frame form:
/// D_2(f_{ab} theta^a theta^b) = df_{ab} (x) theta^a theta^b
///   - f_{ab} (omega^a_{pq} delta^b_r + S^{ac}_{pq} omega^b_{cr}) theta^p theta^q theta^r.
FrameTensorField D2(const Connection& conn, const FrameTensorField& t);

/// D_2(xi (x) eta) = D xi (x) eta + sigma_12(xi (x) D eta).
FrameTensorField D2_decomposable(const Connection& conn, const FrameTensorField& xi,
                                 const FrameTensorField& eta);

/// D_n = sum_i sigma_12 ... sigma_{(i-1)i} (1 (x) ... (x) D (x) ... (x) 1) on degree-n fields.
FrameTensorField Dn(const Connection& conn, const FrameTensorField& t);

/// ||D_n(sigma_{(i-1)i} T) - sigma_{i(i+1)} D_n(T)|| for 2 <= i <= degree(T).
double check_Dn_lemma(const Connection& conn, const FrameTensorField& t, int i);

struct CurvatureData {
  FrameTensorField R;      ///< R^a_{bcd} at (a, b, c, d); P-reduced in (c, d)
  std::optional<FrameTensorField> ricci;  ///< R^a_c = 1/2 R^a_{bcd} g^{db} at (a, c); needs a metric
  double centrality_residual = 0.0;  ///< max_{abcd} centrality residual of R^a_{bcd}
  double reduction_residual = 0.0;   ///< max ||R^a_{bcd} P^{cd}_{ef} - R^a_{bef}||
};

/// Curv(xi) = pi_12 D_2 D xi.
FrameTensorField curvature_map(const Connection& conn, const FrameTensorField& xi);

/// R^a_{bcd} from Curv(theta^a) = -1/2 R^a_{bcd} theta^c theta^d (x) theta^b.
CurvatureData curvature(const Connection& conn);

/// theta^2 (x) theta^a + pi_12 sigma_12 sigma_23 sigma_12 (theta^a (x) theta (x) theta), one per a.
std::vector<FrameTensorField> curvature_d0_formula(const FrameGeometry& geom, const Braiding& sigma);

/// xi_a theta^2 (x) theta^a + pi_12 sigma_12 sigma_23 sigma_12 (xi (x) theta (x) theta).
FrameTensorField curvature_d0_formula(const FrameGeometry& geom, const Braiding& sigma,
                                      const FrameTensorField& xi);

}  // namespace stehbein
