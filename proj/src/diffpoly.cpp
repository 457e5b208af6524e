#include "arcpart/diffpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace arcpart {

DiffPolynomial::DiffPolynomial(const Monomial& m, const Integer& coeff) { add_term(m, coeff); }

void DiffPolynomial::add_term(const Monomial& m, const Integer& coeff) {
  if (coeff == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0)
      terms_.erase(it);
  }
}

std::optional<int> DiffPolynomial::weight() const {
  if (terms_.empty())
    return std::nullopt;
  const int w = terms_.begin()->first.weight();
  for (const auto& [m, c] : terms_)
    if (m.weight() != w)
      return std::nullopt;
  return w;
}

DiffPolynomial DiffPolynomial::derive() const {
  DiffPolynomial out;
  for (const auto& [m, c] : terms_) {
    const auto& e = m.exponents();
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0)
        continue;
      std::vector<int> next = e;
      --next[k];
      if (k + 1 == next.size())
        next.push_back(0);
      ++next[k + 1];
      out.add_term(Monomial(std::move(next)), c * e[k]);
    }
  }
  return out;
}

DiffPolynomial DiffPolynomial::operator*(const Monomial& m) const {
  DiffPolynomial out;
  for (const auto& [t, c] : terms_)
    out.terms_.emplace(t * m, c);
  return out;
}

DiffPolynomial& DiffPolynomial::operator+=(const DiffPolynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_)
    add_term(m, c);
  return *this;
}

std::string DiffPolynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty())
      s += c > 0 ? " + " : " - ";
    else if (c < 0)
      s += "-";
    const Integer mag = abs(c);
    if (mag != 1 || m.is_one())
      s += mag.get_str() + (m.is_one() ? "" : "*");
    if (!m.is_one())
      s += m.to_string();
  }
  return s;
}

DiffPolynomial derive(const DiffPolynomial& f, int j) {
  if (j < 0)
    throw std::invalid_argument("derive needs j >= 0");
  DiffPolynomial out = f;
  for (int t = 0; t < j; ++t)
    out = out.derive();
  return out;
}

std::strong_ordering compare(OrderTag order, const Monomial& a, const Monomial& b) {
  if (a.weight() != b.weight())
    return a.weight() <=> b.weight();
  const int top = std::max(a.max_variable(), b.max_variable());
  if (order == OrderTag::wlex) {
    for (int v = 1; v <= top; ++v)
      if (a.exponent(v) != b.exponent(v))
        return a.exponent(v) <=> b.exponent(v);
  } else {
    for (int v = top; v >= 1; --v)
      if (a.exponent(v) != b.exponent(v))
        return b.exponent(v) <=> a.exponent(v);
  }
  return std::strong_ordering::equal;
}

std::string to_string(OrderTag t) { return t == OrderTag::wlex ? "wlex" : "wrevlex"; }

OrderTag parse_order(const std::string& s) {
  if (s == "wlex")
    return OrderTag::wlex;
  if (s == "wrevlex")
    return OrderTag::wrevlex;
  throw std::invalid_argument("unknown monomial order '" + s + "' (expected wlex or wrevlex)");
}

}  // namespace arcpart
