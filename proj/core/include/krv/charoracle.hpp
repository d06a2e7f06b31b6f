#pragma once

// Weight-multiplicity characters (Freudenthal), tensor-product decomposition by
// highest-weight peeling, and type-A KR tensor multiplicities.

#include <krv/fermionic.hpp>
#include <krv/liealg.hpp>

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

namespace krv {

/// Weight (fundamental-weight coordinates) -> multiplicity.
using CharacterMap = std::map<Weight, Int>;

struct OracleLimits {
  std::size_t max_support = 200000;  ///< lattice points in any character built
  int max_rank = 4;
};

class CostGuardExceeded : public std::runtime_error {
 public:
  CostGuardExceeded(const std::string& what, std::size_t estimate)
      : std::runtime_error(what + " (estimated support " + std::to_string(estimate) + ")"), estimate_(estimate) {}
  [[nodiscard]] std::size_t estimate() const { return estimate_; }

 private:
  std::size_t estimate_;
};

/// s_i(mu) = mu - mu_i alpha_i
Weight simple_reflection(const CartanData& cartan, const Weight& mu, int i);
/// Dominant representative of the Weyl orbit of mu.
Weight dominant_representative(const CartanData& cartan, const Weight& mu);
/// Full Weyl orbit of a weight.
std::vector<Weight> weyl_orbit(const CartanData& cartan, const Weight& mu);

/// Multiplicities of the dominant weights of V(lambda).
CharacterMap dominant_character(const CartanData& cartan, const Weight& lambda, const OracleLimits& limits = {});
/// Full character of V(lambda).
CharacterMap irr_character(const CartanData& cartan, const Weight& lambda, const OracleLimits& limits = {});

/// Pointwise convolution.
CharacterMap character_product(const CharacterMap& a, const CharacterMap& b, const OracleLimits& limits = {});
/// Sum of multiplicities.
Int character_mass(const CharacterMap& chi);
/// Invariant under every simple reflection.
bool is_weyl_symmetric(const CartanData& cartan, const CharacterMap& chi);

/// Irreducible constituents of a Weyl-symmetric virtual character.
std::map<Weight, Int> decompose_character(const CartanData& cartan, const CharacterMap& chi,
                                          const OracleLimits& limits = {});
/// Constituents of V(w_1) (x) ... (x) V(w_s); the empty list is the trivial module.
std::map<Weight, Int> tensor_decompose(const CartanData& cartan, const std::vector<Weight>& factors,
                                       const OracleLimits& limits = {});

/// Type A: factors j*omega_a with multiplicity n_j^(a).
std::vector<Weight> kr_factors_typeA(const CartanData& cartan, const KrMultiplicities& n);
std::map<Weight, Int> kr_tensor_decomposition_typeA(const CartanData& cartan, const KrMultiplicities& n,
                                                    const OracleLimits& limits = {});
Int kr_tensor_multiplicity_typeA(const CartanData& cartan, const KrMultiplicities& n, const Weight& lambda,
                                 const OracleLimits& limits = {});

}  // namespace krv
