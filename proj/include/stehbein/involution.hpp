#pragma once

#include <optional>

#include "stehbein/braiding.hpp"
#include "stehbein/connection.hpp"
#include "stehbein/permutation_word.hpp"

namespace stehbein {

// Antilinear maps are stored through their action on the frame basis:
// j(theta^A) = J^A_B theta^B, extended by j(f theta^A) = J^A_B f* theta^B.
// Composites follow two rules. Antilinear J then linear L is the tensor J;L.
// Linear L then antilinear J is conj(L);J.

/// star(T)_B = sum_A J^A_B adjoint(T_A). Degree 0 is the plain adjoint; pass an
/// empty optional for degree 1 (the frame is hermitian).
FrameTensorField star_form(const FrameTensorField& t, const std::optional<CentralTensor>& Jn);

/// l_n: reverse the slots and take the adjoint of every coefficient.
FrameTensorField reverse_adjoint(const FrameTensorField& t);

/// The reversal theta^A -> theta^{rev A} as a rank-2n tensor.
CentralTensor reversal_tensor(int n, int order);

/// I^{ab}_{cd} = -P^{ba}_{cd}.
CentralTensor build_I(const CentralTensor& P);
/// J^{ab}_{cd} = S^{ba}_{cd}.
CentralTensor build_J(const CentralTensor& S);

/// J^(n): the sigma word (reverse_word(n) unless `word` is given) after l_n.
/// J^(1) is the identity.
CentralTensor build_jn(const Braiding& b, int order, const std::optional<PermutationWord>& word = {});

/// J^{abc}_{def} = J^{ab}_{pq} J^{pc}_{dr} J^{qr}_{ef}.
CentralTensor jn_from_yang_baxter(const CentralTensor& J);

/// j_3 = sigma_12 sigma_23 eps_23 eps_12 (j_1 (x) j_2).
CentralTensor j3_recursive(const Braiding& b);
/// j_4 = sigma_12 sigma_23 sigma_34 eps_34 eps_23 eps_12 (j_1 (x) j_3).
CentralTensor j4_recursive_1_3(const Braiding& b);
/// j_4 = sigma_23 sigma_34 sigma_12 sigma_23 eps_23 eps_12 eps_34 eps_23 (j_2 (x) j_2).
CentralTensor j4_recursive_2_2(const Braiding& b);

/// max |conj(J) ; J - 1|.
double check_jn_involutive(const CentralTensor& Jn);

/// sigma_{i(i+1)} l_n = l_n sigma^{-1}_{(n-i)(n+1-i)}. Throws InputError without S_inv.
double check_fifa(const Braiding& b, int n, int i);

/// sigma_12^{-1} j_4 = j_4 sigma_12. Throws InputError without S_inv.
double check_sigma_inverse_j4(const Braiding& b);

/// (S^{ba}_{cd})* S^{dc}_{ef} = delta^a_e delta^b_f.
double check_sigma_unitarity(const CentralTensor& S);

/// max of |(P^{ab}_{cd})* J^{cd}_{ef} - I^{ab}_{ef}| and |I^{ab}_{cd} P^{cd}_{ef} - I^{ab}_{ef}|.
double check_involution_compat(const CentralTensor& P, const CentralTensor& J, const CentralTensor& I);

/// (P^{ab}_{cd})* P^{dc}_{ef} = P^{ba}_{ef}.
double check_P_star(const CentralTensor& P);

/// S^{ab}_{cd} g^{cd} = (g^{ba})*.
double check_metric_reality(const CentralTensor& g, const CentralTensor& S);

/// (omega^a_{bc})* = omega^a_{de} (J^{de}_{bc})*.
double check_connection_reality(const Connection& conn, const CentralTensor& J);

/// The antilinear image X -> (sum_{de} X^a_{de} conj J^{de}_{bc})* on a connection grid;
/// a grid with X = R(X) satisfies check_connection_reality.
FrameTensorField reality_image(const FrameTensorField& omega, const CentralTensor& J);

struct D2Reality {
  double dopo = 0.0;     ///< D_2 j_2 - j_3 D_2 on basis monomials
  double real2nd = 0.0;  ///< the four-term index form
  double equi = 0.0;     ///< D_2 sigma - sigma_23 D_2 on basis monomials
  double real1st = 0.0;  ///< check_connection_reality
};
D2Reality check_D2_reality(const Connection& conn);

/// D_n j_n - j_{n+1} D_n over all degree-n basis monomials.
double check_Dn_reality(const Connection& conn, int n);

/// The wedge-star relations: (P^{ab}_{cd})* J^{cd}_{ef} = -P^{ba}_{ef}, and
/// pi(j_2(df (x) dg)) = -pi(dg* (x) df*) for the given f, g.
double check_wedge_star(const FrameGeometry& geom, const CentralTensor& J,
                        const AlgebraElement& f, const AlgebraElement& g);

}  // namespace stehbein
