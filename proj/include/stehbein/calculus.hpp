#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stehbein/central_tensor.hpp"
#include "stehbein/frame_field.hpp"
#include "stehbein/matalg.hpp"

namespace stehbein {

/// A frame geometry over M_N(C): inner derivations e_a = ad(lambda_a), the
/// wedge projector P, the braiding S, the central structure tensors F^a_{bc}
/// and K_{ab}, the metric g^{ab}, and optionally a connection given either by
/// its full coefficients omega^a_{bc} or by a central correction chi^a_{bc}
/// to D_(0).
struct FrameGeometry {
  std::string name;
  int N = 0;
  int n = 0;
  std::vector<AlgebraElement> lambda;
  CentralTensor P;
  CentralTensor S;
  std::optional<CentralTensor> tau;
  CentralTensor F;
  CentralTensor K;
  std::optional<CentralTensor> g;  ///< g^{ab}; absent when the input has no metric
  std::optional<FrameTensorField> omega;
  std::optional<CentralTensor> chi;
};

/// Residuals of the invariants every geometry must satisfy.
struct GeometryInvariants {
  double lambda_antihermitian = 0.0;  ///< max_a ||lambda_a + lambda_a*||_F
  double P_projector = 0.0;           ///< max |P P - P|
  double F_reduced = 0.0;             ///< max |F^a_{bc} P^{bc}_{de} - F^a_{de}|
};

GeometryInvariants geometry_invariants(const FrameGeometry& geom);

/// Throws InvariantViolation naming the first invariant above `tol`, or
/// InputError for inconsistent shapes.
void validate_geometry(const FrameGeometry& geom, double tol);

/// theta = -lambda_a theta^a.
FrameTensorField dirac_form(const FrameGeometry& geom);

/// df = [lambda_a, f] theta^a.
FrameTensorField differential0(const AlgebraElement& f, const FrameGeometry& geom);

/// C^a_{bc} = F^a_{bc} - lambda_e (P^{ae}_{bc} + P^{ea}_{bc}), as a degree-3 grid.
FrameTensorField maurer_cartan(const FrameGeometry& geom);

/// d on 1-forms via the graded Leibniz rule and d theta^a = -1/2 C^a_{bc} theta^b theta^c,
/// returned as the P-projected degree-2 field.
FrameTensorField differential1(const FrameTensorField& xi, const FrameGeometry& geom);

/// max over (a,b) of ||2 lambda_c lambda_d P^{cd}_{ab} - lambda_c F^c_{ab} - K_{ab}||_F.
double check_structure(const FrameGeometry& geom);

/// max-coeff norm of d theta + theta^2 + 1/2 K_{ab} theta^a theta^b. The sign of
/// K is the one fixed by check_structure; with that sign the K term enters here
/// with a plus.
double check_theta_squared(const FrameGeometry& geom);

/// The frame generators as a span, for centrality tests.
double centrality_residual(const AlgebraElement& a, const FrameGeometry& geom);

}  // namespace stehbein
