#include "bargmann/multiindex.hpp"

#include <numeric>
#include <stdexcept>

namespace bargmann {

namespace {

void check_entries(const std::vector<int>& entries) {
  if (entries.empty()) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
  for (int e : entries) {
    if (e < 0) throw std::invalid_argument("MultiIndex: negative entry");
  }
}

void check_same_dimension(const MultiIndex& a, const MultiIndex& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("MultiIndex: dimension mismatch (" + a.to_string() + " vs " +
                                b.to_string() + ")");
  }
}

// Fills entries [pos, n) with all compositions of `remaining`, largest first entry first.
void compositions(std::vector<int>& current, std::size_t pos, int remaining,
                  std::vector<MultiIndex>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    out.emplace_back(current);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    current[pos] = v;
    compositions(current, pos + 1, remaining - v, out);
  }
}

}  // namespace

MultiIndex::MultiIndex(std::size_t n) : entries_(n, 0) {
  if (n == 0) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
}

MultiIndex::MultiIndex(std::initializer_list<int> entries) : entries_(entries) {
  check_entries(entries_);
}

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  check_entries(entries_);
}

MultiIndex MultiIndex::unit(std::size_t n, std::size_t j) {
  MultiIndex e(n);
  e.entries_.at(j) = 1;
  return e;
}

int MultiIndex::degree() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool MultiIndex::is_zero() const {
  for (int e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

bool MultiIndex::le(const MultiIndex& other) const {
  check_same_dimension(*this, other);
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (entries_[j] > other.entries_[j]) return false;
  }
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  MultiIndex r = *this;
  r += other;
  return r;
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& other) {
  check_same_dimension(*this, other);
  for (std::size_t j = 0; j < entries_.size(); ++j) entries_[j] += other.entries_[j];
  return *this;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(entries_[j]);
  }
  return s + ")";
}

mpz_class factorial(const MultiIndex& alpha) {
  mpz_class result = 1;
  for (int e : alpha.entries()) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(e));
    result *= f;
  }
  return result;
}

std::optional<MultiIndex> try_subtract(const MultiIndex& alpha, const MultiIndex& beta) {
  check_same_dimension(alpha, beta);
  std::vector<int> diff(alpha.dimension());
  for (std::size_t j = 0; j < diff.size(); ++j) {
    diff[j] = alpha[j] - beta[j];
    if (diff[j] < 0) return std::nullopt;
  }
  return MultiIndex(std::move(diff));
}

std::vector<MultiIndex> enumerate_exact(std::size_t n, int k) {
  if (n == 0) throw std::invalid_argument("enumerate_exact: n must be >= 1");
  std::vector<MultiIndex> out;
  if (k < 0) return out;
  std::vector<int> current(n, 0);
  compositions(current, 0, k, out);
  return out;
}

std::vector<MultiIndex> enumerate_upto(std::size_t n, int k) {
  if (n == 0) throw std::invalid_argument("enumerate_upto: n must be >= 1");
  if (k < 0) throw std::invalid_argument("enumerate_upto: k must be >= 0");
  std::vector<MultiIndex> out;
  out.reserve(count_upto(n, k));
  for (int d = 0; d <= k; ++d) {
    auto level = enumerate_exact(n, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<MultiIndex> enumerate_box(const MultiIndex& bound) {
  std::vector<MultiIndex> out;
  std::vector<int> current(bound.dimension(), 0);
  while (true) {
    out.emplace_back(current);
    std::size_t j = 0;
    while (j < current.size() && current[j] == bound[j]) {
      current[j] = 0;
      ++j;
    }
    if (j == current.size()) break;
    ++current[j];
  }
  return out;
}

std::size_t count_upto(std::size_t n, int k) {
  // C(n+k, n) computed incrementally; exact for the sizes used here.
  std::size_t c = 1;
  for (std::size_t i = 1; i <= n; ++i) c = c * (static_cast<std::size_t>(k) + i) / i;
  return c;
}

}  // namespace bargmann
