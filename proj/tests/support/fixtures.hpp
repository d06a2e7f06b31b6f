#pragma once

#include <krv/fermionic.hpp>
#include <krv/liealg.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace fx {

inline krv::CartanData algebra(std::string_view label) { return krv::CartanData::parse(label); }

inline krv::Weight weight(const krv::CartanData& c, std::string_view text) { return krv::Weight::parse(text, c.rank()); }

inline krv::KrMultiplicities mult(const krv::CartanData& c, std::string_view text) {
  return krv::KrMultiplicities::parse(text, c.rank());
}

inline krv::FermionicInput input(std::string_view label, std::string_view lambda, std::string_view n,
                                 krv::Grading g = krv::Grading::paper) {
  const auto c = algebra(label);
  return krv::FermionicInput{c, weight(c, lambda), mult(c, n), g, krv::VacancyScope::all_indices, std::nullopt};
}

/// (a, j) pairs with a 1-based, one per KR factor.
inline std::vector<std::pair<int, int>> factor_list(const krv::KrMultiplicities& n) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [a, j, count] : n.entries())
    for (int i = 0; i < count; ++i) out.emplace_back(a + 1, j);
  return out;
}

}  // namespace fx
