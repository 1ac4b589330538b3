#include "core/monomial.hpp"

#include <limits>

#include "core/error.hpp"

namespace hodgekit {

namespace {

constexpr int kTableDegree = 512;

// dims[m][r] = C(r+m-1, m-1), saturated at uint64 max.
struct DimTable {
  std::array<std::array<std::uint64_t, kTableDegree + 1>, kMaxVars + 1> dims{};
  DimTable() {
    constexpr auto kSat = std::numeric_limits<std::uint64_t>::max();
    for (int r = 0; r <= kTableDegree; ++r) dims[1][r] = 1;
    for (int m = 2; m <= kMaxVars; ++m) {
      std::uint64_t acc = 0;
      for (int r = 0; r <= kTableDegree; ++r) {
        // C(r+m-1, m-1) = sum_{j<=r} C(j+m-2, m-2)
        std::uint64_t add = dims[m - 1][r];
        acc = (add == kSat || acc > kSat - add) ? kSat : acc + add;
        dims[m][r] = acc;
      }
    }
  }
};

const DimTable& table() {
  static const DimTable t;
  return t;
}

inline std::uint64_t dim_unchecked(int n, int k) {
  return k < 0 ? 0 : table().dims[n][k];
}

void enumerate(int n, int var, int remaining, std::array<int, kMaxVars>& exps,
               std::vector<Monomial>& out) {
  if (var == n - 1) {
    exps[var] = remaining;
    out.emplace_back(n, std::span<const int>(exps.data(), n));
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[var] = e;
    enumerate(n, var + 1, remaining - e, exps, out);
  }
}

}  // namespace

std::uint64_t dim_graded(int n, int k) {
  require(n >= 1, ErrorCode::InvalidArgument, "variable count must be >= 1");
  if (k < 0) return 0;
  // C(k+n-1, n-1) built incrementally; each step is exact division.
  const std::uint64_t top = static_cast<std::uint64_t>(k) + n - 1;
  const std::uint64_t r = static_cast<std::uint64_t>(n - 1) < static_cast<std::uint64_t>(k)
                              ? static_cast<std::uint64_t>(n - 1)
                              : static_cast<std::uint64_t>(k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (top - r + i) / i;
    if (acc > std::numeric_limits<std::int64_t>::max())
      fail(ErrorCode::ParameterTooLarge, "dim S^" + std::to_string(k) + " in " +
                                             std::to_string(n) +
                                             " variables overflows");
  }
  return static_cast<std::uint64_t>(acc);
}

Monomial::Monomial(int nvars, std::span<const int> exponents) {
  require(nvars >= 1 && nvars <= kMaxVars, ErrorCode::InvalidArgument,
          "variable count must be in [1, " + std::to_string(kMaxVars) + "]");
  require(static_cast<int>(exponents.size()) == nvars, ErrorCode::InvalidArgument,
          "exponent vector length does not match variable count");
  n_ = static_cast<std::uint8_t>(nvars);
  int deg = 0;
  for (int i = 0; i < nvars; ++i) {
    require(exponents[i] >= 0 && exponents[i] <= kMaxExponent,
            ErrorCode::ParameterTooLarge, "exponent out of range");
    e_[i] = static_cast<std::uint8_t>(exponents[i]);
    deg += exponents[i];
  }
  require(deg <= kTableDegree, ErrorCode::ParameterTooLarge, "monomial degree too large");
  deg_ = static_cast<std::uint16_t>(deg);
}

Monomial Monomial::one(int nvars) {
  std::array<int, kMaxVars> z{};
  return Monomial(nvars, std::span<const int>(z.data(), nvars));
}

Monomial Monomial::variable(int nvars, int i) {
  require(i >= 0 && i < nvars, ErrorCode::InvalidArgument, "variable index out of range");
  std::array<int, kMaxVars> z{};
  z[i] = 1;
  return Monomial(nvars, std::span<const int>(z.data(), nvars));
}

Monomial Monomial::operator*(const Monomial& o) const {
  require(n_ == o.n_, ErrorCode::InvalidArgument, "monomials in different rings");
  Monomial r = *this;
  for (int i = 0; i < n_; ++i) {
    const int e = int{e_[i]} + o.e_[i];
    require(e <= kMaxExponent, ErrorCode::ParameterTooLarge, "exponent overflow");
    r.e_[i] = static_cast<std::uint8_t>(e);
  }
  require(deg_ + o.deg_ <= kTableDegree, ErrorCode::ParameterTooLarge, "degree overflow");
  r.deg_ = static_cast<std::uint16_t>(deg_ + o.deg_);
  return r;
}

bool Monomial::divides(const Monomial& o) const noexcept {
  if (n_ != o.n_) return false;
  for (int i = 0; i < n_; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  require(divides(o), ErrorCode::InvalidArgument, "monomial does not divide");
  Monomial r = o;
  for (int i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint8_t>(o.e_[i] - e_[i]);
  r.deg_ = static_cast<std::uint16_t>(o.deg_ - deg_);
  return r;
}

std::size_t Monomial::index() const noexcept {
  std::size_t idx = 0;
  int rem = deg_;
  for (int i = 0; i + 1 < n_; ++i) {
    // monomials in x_i..x_{n-1} of degree rem whose x_i-exponent exceeds e_i
    idx += dim_unchecked(n_ - i, rem - e_[i] - 1);
    rem -= e_[i];
  }
  return idx;
}

std::size_t product_index(const Monomial& a, const Monomial& b) noexcept {
  std::size_t idx = 0;
  int rem = a.degree() + b.degree();
  const int n = a.nvars();
  for (int i = 0; i + 1 < n; ++i) {
    const int e = a[i] + b[i];
    idx += dim_unchecked(n - i, rem - e - 1);
    rem -= e;
  }
  return idx;
}

std::string Monomial::to_string() const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    if (e_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i);
    if (e_[i] > 1) s += '^' + std::to_string(e_[i]);
  }
  return s.empty() ? "1" : s;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const noexcept {
  if (auto c = deg_ <=> o.deg_; c != 0) return c;
  for (int i = 0; i < kMaxVars; ++i)
    if (auto c = e_[i] <=> o.e_[i]; c != 0) return c;
  return n_ <=> o.n_;
}

std::vector<Monomial> monomial_basis(int n, int k) {
  require(n >= 1 && n <= kMaxVars, ErrorCode::InvalidArgument, "variable count out of range");
  std::vector<Monomial> out;
  if (k < 0) return out;
  require(k <= kTableDegree, ErrorCode::ParameterTooLarge, "degree too large");
  out.reserve(dim_graded(n, k));
  std::array<int, kMaxVars> exps{};
  enumerate(n, 0, k, exps, out);
  return out;
}

}  // namespace hodgekit
