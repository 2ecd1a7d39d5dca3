#ifndef HOMLIE_HYBE_HPP
#define HOMLIE_HYBE_HPP

#include "homlie/homalg.hpp"

namespace homlie {

/// Operator on the k-th tensor power of the carrier K (+) L. Carrier basis:
/// the unit of K first, then the algebra basis.
struct HybeOperator {
  std::size_t carrier_dim = 0;
  std::size_t strands = 0;
  Matrix matrix;
  LinearSelfMap alpha_ext = LinearSelfMap::identity(0);  // Id (+) alpha
};

/// Largest ambient dimension carrier_dim^n accepted by braid_operators.
inline constexpr std::size_t kMaxBraidDim = 10000;

/// B((a,x)(x)(b,y)) = (b,alpha y)(x)(a,alpha x) + (1,0)(x)(0,[x,y]).
/// Throws AlgebraError unless the input is Hom-Lie.
HybeOperator build_B_alpha(const HomAlgebra& l);

/// True iff B commutes with alpha_ext^{(x)strands}.
bool commutes_with_alpha(const HybeOperator& b);

/// (a(x)B)(B(x)a)(a(x)B) == (B(x)a)(a(x)B)(B(x)a).
bool check_hybe(const HybeOperator& b);

/// B_i = a^{(x)(i-1)} (x) B (x) a^{(x)(n-i-1)}, i = 1..n-1.
std::vector<HybeOperator> braid_operators(const HybeOperator& b, std::size_t n);

/// False if the operators act on different ambient dimensions.
bool check_braid_relations(const std::vector<HybeOperator>& ops);

bool is_invertible_operator(const HybeOperator& b);

}  // namespace homlie

#endif  // HOMLIE_HYBE_HPP
