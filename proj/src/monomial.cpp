#include "arcpart/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace arcpart {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_)
    if (e < 0)
      throw std::invalid_argument("negative exponent in a monomial");
  trim_and_measure();
}

void Monomial::trim_and_measure() {
  while (!exps_.empty() && exps_.back() == 0)
    exps_.pop_back();
  weight_ = degree_ = 0;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    weight_ += static_cast<int>(k + 1) * exps_[k];
    degree_ += exps_[k];
  }
}

Monomial Monomial::variable(int v, int power) {
  if (v < 1)
    throw std::invalid_argument("variable index must be >= 1");
  std::vector<int> e(static_cast<std::size_t>(v), 0);
  e.back() = power;
  return Monomial(std::move(e));
}

Monomial Monomial::from_partition(const Partition& p) {
  std::vector<int> e(p.empty() ? 0 : static_cast<std::size_t>(p.at(1)), 0);
  for (int part : p.parts())
    ++e[static_cast<std::size_t>(part - 1)];
  return Monomial(std::move(e));
}

Partition Monomial::to_partition() const {
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(degree_));
  for (std::size_t k = exps_.size(); k-- > 0;)
    parts.insert(parts.end(), static_cast<std::size_t>(exps_[k]), static_cast<int>(k + 1));
  return Partition(std::move(parts));
}

int Monomial::exponent(int v) const noexcept {
  if (v < 1 || v > max_variable())
    return 0;
  return exps_[static_cast<std::size_t>(v - 1)];
}

int Monomial::min_variable() const noexcept {
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (exps_[k] > 0)
      return static_cast<int>(k + 1);
  return 0;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (exps_.size() > other.exps_.size() || weight_ > other.weight_)
    return false;
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (exps_[k] > other.exps_[k])
      return false;
  return true;
}

Monomial Monomial::colon(const Monomial& f) const {
  std::vector<int> e = exps_;
  for (std::size_t k = 0; k < e.size() && k < f.exps_.size(); ++k)
    e[k] = std::max(0, e[k] - f.exps_[k]);
  return Monomial(std::move(e));
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  if (!divisor.divides(*this))
    throw std::invalid_argument("quotient: " + divisor.to_string() + " does not divide " +
                                to_string());
  return colon(divisor);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<int> e(std::max(a.exps_.size(), b.exps_.size()), 0);
  for (std::size_t k = 0; k < a.exps_.size(); ++k)
    e[k] += a.exps_[k];
  for (std::size_t k = 0; k < b.exps_.size(); ++k)
    e[k] += b.exps_[k];
  return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
  if (is_one())
    return "1";
  std::string s;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] == 0)
      continue;
    if (!s.empty())
      s += '*';
    s += "x" + std::to_string(k + 1);
    if (exps_[k] > 1)
      s += "^" + std::to_string(exps_[k]);
  }
  return s;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.weight() != b.weight() ? a.weight() < b.weight() : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // a divisor never has larger weight, so scanning in weight order suffices
  std::vector<Monomial> out;
  for (const Monomial& g : gens)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); }))
      out.push_back(g);
  return out;
}

}  // namespace arcpart
