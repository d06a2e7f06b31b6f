#pragma once

// Cartan data for the simple Lie algebras.
//
// Convention: C[a][b] = 2 (alpha_a, alpha_b) / (alpha_a, alpha_a), rows indexed
// by a. Nodes follow Bourbaki numbering (0-based in the C++ API, 1-based in
// every textual surface), except G2 where node 1 is the long root so that
// C(G2) = [[2,-1],[-3,2]].
//
//   B_r : alpha_r short     C[r-1][r-2] = -2
//   C_r : alpha_r long      C[r-2][r-1] = -2
//   F_4 : alpha_1, alpha_2 long; alpha_3, alpha_4 short   C[2][1] = -2
//   G_2 : alpha_1 long, alpha_2 short                      C[1][0] = -3
//   D_r : chain 1..r-2, node r-2 joined to r-1 and r
//   E_r : chain 1,3,4,...,r with node 2 joined to node 4

#include <krv/integer.hpp>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace krv {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

using IntMatrix = std::vector<std::vector<int>>;

/// Dominant (or, inside character arithmetic, arbitrary) integral weight,
/// stored as coefficients on the fundamental weights.
struct Weight {
  std::vector<int> coeffs;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coeffs(std::move(c)) {}
  static Weight zero(int rank) { return Weight(std::vector<int>(static_cast<std::size_t>(rank), 0)); }

  [[nodiscard]] int rank() const { return static_cast<int>(coeffs.size()); }
  [[nodiscard]] bool is_dominant() const;
  int& operator[](int a) { return coeffs[static_cast<std::size_t>(a)]; }
  int operator[](int a) const { return coeffs[static_cast<std::size_t>(a)]; }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend auto operator<=>(const Weight&, const Weight&) = default;

  /// "2,0,1"
  [[nodiscard]] std::string to_string() const;
  static Weight parse(std::string_view text, int rank);
};

/// A positive root, in simple-root and fundamental-weight coordinates.
struct Root {
  std::vector<int> simple;  // alpha = sum simple[i] alpha_i
  std::vector<int> omega;   // alpha = sum omega[i] omega_i
  [[nodiscard]] int height() const;
};

/// The standard Cartan matrix for (family, rank); throws std::invalid_argument
/// for pairs that are not simple types.
IntMatrix cartan_matrix(Family family, int rank);

class CartanData {
 public:
  CartanData(Family family, int rank);

  /// Parses labels such as "A2", "g2", "D4".
  static CartanData parse(std::string_view label);

  [[nodiscard]] Family family() const { return family_; }
  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] std::string name() const;

  [[nodiscard]] int operator()(int a, int b) const {
    return c_[static_cast<std::size_t>(a * rank_ + b)];
  }
  [[nodiscard]] IntMatrix matrix() const;

  /// Positive integers d with d[a] C[a][b] = d[b] C[b][a]; d[a] = (alpha_a, alpha_a)/2
  /// normalised so that the short roots carry 1.
  [[nodiscard]] const std::vector<int>& symmetrizer() const { return d_; }
  [[nodiscard]] long determinant() const { return det_; }
  /// adj(C), so that C^{-1} = adjugate / determinant.
  [[nodiscard]] long adjugate(int a, int b) const {
    return adj_[static_cast<std::size_t>(a * rank_ + b)];
  }
  [[nodiscard]] bool simply_laced() const;
  [[nodiscard]] int max_abs_entry() const;
  [[nodiscard]] const std::vector<Root>& positive_roots() const { return roots_; }

  /// Coordinates of alpha_b on the fundamental weights (column b of C).
  [[nodiscard]] Weight simple_root(int b) const;

  /// Scaled invariant form: det(C) * (mu, nu), always integral.
  [[nodiscard]] Int scaled_form(const Weight& mu, const Weight& nu) const;

  /// Copy with C replaced by its transpose (used only for convention experiments).
  [[nodiscard]] CartanData transposed() const;

  friend bool operator==(const CartanData& a, const CartanData& b) {
    return a.family_ == b.family_ && a.c_ == b.c_;
  }

 private:
  CartanData(Family family, int rank, std::vector<int> entries);
  void derive();

  Family family_;
  int rank_;
  std::vector<int> c_;
  std::vector<int> d_;
  long det_ = 0;
  std::vector<long> adj_;
  std::vector<Root> roots_;
};

/// B^{(a,b)}_{i,j} = sign(C_ab) min(|C_ab| j, |C_ba| i), with sign(0) = 0.
/// Nodes are 0-based, string lengths i, j >= 1.
int b_entry(const CartanData& cartan, int a, int b, int i, int j);

/// Dimension of the irreducible module of highest weight lambda.
Int weyl_dim(const CartanData& cartan, const Weight& lambda);

}  // namespace krv
