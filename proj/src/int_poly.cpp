#include "fdpi/int_poly.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "fdpi/detail/multiply.hpp"
#include "fdpi/error.hpp"

namespace fdpi {

namespace {

struct IntegerRing {
  mpz_class zero() const { return 0; }
  bool is_zero(const mpz_class& a) const { return sgn(a) == 0; }
  mpz_class add(const mpz_class& a, const mpz_class& b) const { return a + b; }
  mpz_class sub(const mpz_class& a, const mpz_class& b) const { return a - b; }
  mpz_class mul(const mpz_class& a, const mpz_class& b) const { return a * b; }
};

}  // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t degree) {
  std::vector<mpz_class> v(degree + 1, mpz_class(0));
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpz_class> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

IntPoly& IntPoly::operator+=(const IntPoly& b) {
  if (coeffs_.size() < b.coeffs_.size()) coeffs_.resize(b.coeffs_.size(), mpz_class(0));
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& b) {
  if (coeffs_.size() < b.coeffs_.size()) coeffs_.resize(b.coeffs_.size(), mpz_class(0));
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& c) {
  for (auto& a : coeffs_) a *= c;
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  return IntPoly(detail::multiply<mpz_class>(a.coeffs_, b.coeffs_, IntegerRing{}));
}

IntPoly IntPoly::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<mpz_class> coeffs;
  std::string token;
  while (in >> token) {
    mpz_class c;
    if (c.set_str(token, 10) != 0)
      fail(ErrorKind::invalid_argument, "bad polynomial coefficient '" + token + "'");
    coeffs.push_back(std::move(c));
  }
  if (coeffs.empty()) fail(ErrorKind::invalid_argument, "empty polynomial");
  return IntPoly(std::move(coeffs));
}

std::string IntPoly::to_text() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ' ';
    out += coeffs_[i].get_str();
  }
  return out;
}

std::string IntPoly::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const mpz_class& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += '-';
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += mag.get_str();
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

IntPoly rem_monic(const IntPoly& a, const IntPoly& monic) {
  if (!monic.is_monic()) fail(ErrorKind::invalid_argument, "rem_monic: divisor must be monic");
  const int n = monic.degree();
  std::vector<mpz_class> r = a.coeffs();
  const auto& m = monic.coeffs();
  for (int k = static_cast<int>(r.size()) - 1; k >= n; --k) {
    if (sgn(r[k]) == 0) continue;
    mpz_class q = r[k];
    for (int i = 0; i <= n; ++i) r[k - n + i] -= q * m[i];
  }
  if (static_cast<int>(r.size()) > n) r.resize(n);
  return IntPoly(std::move(r));
}

IntPoly shifted_reflection(const IntPoly& g, const mpz_class& y) {
  const IntPoly step(std::vector<mpz_class>{y, mpz_class(-1)});  // y - x
  IntPoly acc;
  for (auto it = g.coeffs().rbegin(); it != g.coeffs().rend(); ++it)
    acc = acc * step + IntPoly::constant(*it);
  return acc;
}

std::vector<IntPoly> parse_poly_list(std::string_view text) {
  std::vector<IntPoly> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(IntPoly::parse(line));
  }
  return out;
}

std::vector<IntPoly> read_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::invalid_argument, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_poly_list(buf.str());
}

}  // namespace fdpi
