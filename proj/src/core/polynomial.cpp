#include "core/polynomial.hpp"

#include <array>
#include <cctype>

#include "core/error.hpp"

namespace hodgekit {

Polynomial::Polynomial(int nvars, PrimeField field) : n_(nvars), field_(field) {
  require(nvars >= 1 && nvars <= kMaxVars, ErrorCode::InvalidArgument,
          "variable count out of range");
}

Polynomial Polynomial::constant(int nvars, PrimeField field, Residue c) {
  Polynomial p(nvars, field);
  p.add_term(Monomial::one(nvars), c);
  return p;
}

Polynomial Polynomial::term(PrimeField field, const Monomial& m, Residue c) {
  Polynomial p(m.nvars(), field);
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::fermat(int nvars, int degree, PrimeField field) {
  require(degree >= 1, ErrorCode::InvalidArgument, "Fermat degree must be >= 1");
  Polynomial p(nvars, field);
  std::array<int, kMaxVars> e{};
  for (int i = 0; i < nvars; ++i) {
    e.fill(0);
    e[i] = degree;
    p.add_term(Monomial(nvars, std::span<const int>(e.data(), nvars)), 1);
  }
  return p;
}

Polynomial Polynomial::from_vector(const SparseVector& v, int nvars, int k, PrimeField field) {
  Polynomial p(nvars, field);
  if (v.empty()) return p;
  const auto basis = monomial_basis(nvars, k);
  for (std::size_t t = 0; t < v.size(); ++t) {
    require(v.idx[t] < basis.size(), ErrorCode::InvalidArgument,
            "vector index outside S^" + std::to_string(k));
    p.add_term(basis[v.idx[t]], v.val[t]);
  }
  return p;
}

bool Polynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

std::optional<int> Polynomial::degree() const noexcept {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.begin()->first.degree();
}

Residue Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Monomial& m, Residue c) {
  require(m.nvars() == n_, ErrorCode::InvalidArgument, "monomial in wrong ring");
  c %= field_.modulus();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& o) const {
  require(n_ == o.n_, ErrorCode::InvalidArgument, "polynomials in different rings");
  require(field_ == o.field_, ErrorCode::ModulusMismatch, "polynomials over different fields");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, field_.neg(c));
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(n_, field_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, field_.mul(ca, cb));
  return r;
}

Polynomial Polynomial::scaled(Residue c) const {
  Polynomial r(n_, field_);
  for (const auto& [m, a] : terms_) r.add_term(m, field_.mul(a, c % field_.modulus()));
  return r;
}

Polynomial Polynomial::derivative(int var) const {
  require(var >= 0 && var < n_, ErrorCode::InvalidArgument, "variable index out of range");
  Polynomial r(n_, field_);
  const Monomial x = Monomial::variable(n_, var);
  for (const auto& [m, c] : terms_) {
    const int e = m[var];
    if (e == 0) continue;
    r.add_term(x.quotient_of(m), field_.mul(c, field_.from_int(e)));
  }
  return r;
}

SparseVector Polynomial::to_vector(int k) const {
  std::vector<std::pair<std::uint32_t, Residue>> entries;
  entries.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    require(m.degree() == k, ErrorCode::DegreeMismatch,
            "polynomial is not homogeneous of degree " + std::to_string(k));
    entries.emplace_back(static_cast<std::uint32_t>(m.index()), c);
  }
  return normalize(std::move(entries), field_);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    const std::int64_t v = field_.to_signed(c);
    const std::int64_t mag = v < 0 ? -v : v;
    if (s.empty()) {
      if (v < 0) s += '-';
    } else {
      s += v < 0 ? " - " : " + ";
    }
    const bool is_one = m.degree() == 0;
    if (mag != 1 || is_one) {
      s += std::to_string(mag);
      if (!is_one) s += '*';
    }
    if (!is_one) s += m.to_string();
  }
  return s;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) { return a * b; }

namespace {

class Parser {
 public:
  Parser(std::string_view text, int nvars, PrimeField field)
      : n_(nvars), field_(field) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
  }

  Polynomial run() {
    if (s_.empty()) error("empty polynomial");
    Polynomial result(n_, field_);
    bool first = true;
    while (pos_ < s_.size()) {
      bool negative = false;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        negative = s_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        error("expected '+' or '-'");
      }
      first = false;
      auto [m, c] = parse_term();
      result.add_term(m, negative ? field_.neg(c) : c);
    }
    return result;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::Parse, "parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  bool at_digit() const {
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  // Integer literal reduced mod p.
  Residue parse_coefficient() {
    Residue v = 0;
    while (at_digit()) {
      v = field_.add(field_.mul(v, 10 % field_.modulus()),
                     static_cast<Residue>(s_[pos_] - '0') % field_.modulus());
      ++pos_;
    }
    return v;
  }

  int parse_small_int() {
    if (!at_digit()) error("expected integer");
    long v = 0;
    while (at_digit()) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > kMaxExponent) error("exponent too large");
      ++pos_;
    }
    return static_cast<int>(v);
  }

  std::pair<Monomial, Residue> parse_term() {
    std::array<int, kMaxVars> exps{};
    Residue coeff = 1;
    bool any = false;
    while (true) {
      if (at_digit()) {
        coeff = field_.mul(coeff, parse_coefficient());
      } else if (pos_ < s_.size() && s_[pos_] == 'x') {
        ++pos_;
        const int var = parse_small_int();
        if (var >= n_) error("variable x" + std::to_string(var) + " outside x0..x" +
                             std::to_string(n_ - 1));
        int e = 1;
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          e = parse_small_int();
        }
        exps[var] += e;
        if (exps[var] > kMaxExponent) error("exponent too large");
      } else {
        error("expected coefficient or variable");
      }
      any = true;
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) error("empty term");
    return {Monomial(n_, std::span<const int>(exps.data(), n_)), coeff};
  }

  std::string s_;
  std::size_t pos_ = 0;
  int n_;
  PrimeField field_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int nvars, PrimeField field) {
  return Parser(text, nvars, field).run();
}

}  // namespace hodgekit
