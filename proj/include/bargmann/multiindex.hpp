#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bargmann {

/// Element of N_0^n. Indexes Wirtinger derivatives, monomials z^alpha and the
/// Fock basis vectors e_alpha.
class MultiIndex {
 public:
  MultiIndex() = default;
  /// The zero multi-index of dimension n (n >= 1).
  explicit MultiIndex(std::size_t n);
  MultiIndex(std::initializer_list<int> entries);
  explicit MultiIndex(std::vector<int> entries);

  static MultiIndex unit(std::size_t n, std::size_t j);

  std::size_t dimension() const { return entries_.size(); }
  int operator[](std::size_t j) const { return entries_[j]; }
  const std::vector<int>& entries() const { return entries_; }

  /// |alpha| = alpha_1 + ... + alpha_n
  int degree() const;
  bool is_zero() const;

  /// Componentwise order: every alpha_j <= other_j.
  bool le(const MultiIndex& other) const;

  MultiIndex operator+(const MultiIndex& other) const;
  MultiIndex& operator+=(const MultiIndex& other);

  /// Lexicographic on entries; used for map keys.
  auto operator<=>(const MultiIndex&) const = default;
  bool operator==(const MultiIndex&) const = default;

  std::string to_string() const;

 private:
  std::vector<int> entries_;
};

/// alpha! = prod_j alpha_j!, exact.
mpz_class factorial(const MultiIndex& alpha);

/// alpha - beta when beta <= alpha componentwise, nullopt otherwise.
/// Throws std::invalid_argument on dimension mismatch.
std::optional<MultiIndex> try_subtract(const MultiIndex& alpha, const MultiIndex& beta);

/// Every alpha in N_0^n with |alpha| <= k exactly once, ordered by degree and
/// then by descending lexicographic order, so (1,0) precedes (0,1).
std::vector<MultiIndex> enumerate_upto(std::size_t n, int k);

/// All alpha with |alpha| == k, in the same order as enumerate_upto.
std::vector<MultiIndex> enumerate_exact(std::size_t n, int k);

/// All alpha with alpha <= bound componentwise (the box below bound).
std::vector<MultiIndex> enumerate_box(const MultiIndex& bound);

/// Number of multi-indices of dimension n and degree <= k, C(n+k, n).
std::size_t count_upto(std::size_t n, int k);

}  // namespace bargmann
