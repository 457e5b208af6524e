#include "arcpart/predicates.hpp"

#include <algorithm>
#include <numeric>

namespace arcpart {

void require_gordon_params(int r, int i) {
  if (r < 2)
    throw ParameterError("r must be at least 2, got " + std::to_string(r));
  if (i < 1 || i > r)
    throw ParameterError("i must lie in [1, r], got i=" + std::to_string(i) +
                         " r=" + std::to_string(r));
}

bool gordon_b_predicate(const Partition& p, int r, int i) {
  require_gordon_params(r, i);
  const auto parts = p.parts();
  const std::size_t span = static_cast<std::size_t>(r - 1);
  for (std::size_t j = 0; j + span < parts.size(); ++j)
    if (parts[j] - parts[j + span] < 2)
      return false;
  return p.multiplicity(1) <= i - 1;
}

bool congruence_a_predicate(const Partition& p, int r, int i) {
  require_gordon_params(r, i);
  const int modulus = 2 * r + 1;
  return std::none_of(p.parts().begin(), p.parts().end(), [&](int part) {
    const int res = part % modulus;
    return res == 0 || res == i || res == modulus - i;
  });
}

int NewPartProfile::prefix_sum(int l) const {
  return std::accumulate(values.begin(), values.begin() + l, 0);
}

bool NewPartProfile::has_zero() const {
  return std::find(values.begin(), values.end(), 0) != values.end();
}

NewPartProfile new_parts(const Partition& p, int r, int i) {
  require_gordon_params(r, i);
  const long m = static_cast<long>(p.length());
  NewPartProfile prof{r, i, std::vector<int>(static_cast<std::size_t>(r), 0), 0};
  long sum = 0;
  for (int l = 1; l <= r; ++l) {
    long index;
    if (l == 1)
      index = m;
    else if (l <= i)
      index = m - sum;
    else
      index = m + l - i - sum;
    const int value = p.at(index);
    prof.values[static_cast<std::size_t>(l - 1)] = value;
    // once zero, always zero
    if (value == 0)
      break;
    sum += value;
  }
  for (int l = 1; l <= r - 1; ++l)
    if (prof.at(l) != 0)
      ++prof.count_nonzero;
  return prof;
}

bool c_predicate(const Partition& p, int r, int i, CForm form) {
  const NewPartProfile prof = new_parts(p, r, i);
  if (form == CForm::remark)
    return prof.has_zero();
  if (p.multiplicity(1) > i - 1)
    return false;
  if (prof.count_nonzero < r - 1)
    return true;
  return static_cast<long>(p.length()) <= prof.prefix_sum(r - 1) - (r - i);
}

namespace {

void require_shift_params(const Partition& p, std::size_t m, int k, int i) {
  if (i != 1 && i != 2)
    throw ParameterError("shifted families need i in {1, 2}");
  if (k < 1)
    throw ParameterError("shifted families need k >= 1");
  if (p.length() != m)
    throw ParameterError("partition length " + std::to_string(p.length()) +
                         " does not match m=" + std::to_string(m));
}

}  // namespace

bool shifted_c_predicate(const Partition& p, std::size_t m, int k, int i) {
  require_shift_params(p, m, k, i);
  if (m == 0)
    return true;
  return p.smallest() > static_cast<int>(m) + k - i;
}

bool shifted_b_predicate(const Partition& p, std::size_t m, int k, int i) {
  require_shift_params(p, m, k, i);
  if (m == 0)
    return true;
  if (p.smallest() < k || p.multiplicity(k) > i - 1)
    return false;
  const auto parts = p.parts();
  for (std::size_t j = 0; j + 1 < parts.size(); ++j)
    if (parts[j] - parts[j + 1] < 2)
      return false;
  return true;
}

std::string to_string(CForm form) { return form == CForm::remark ? "remark" : "conjecture"; }

CForm parse_cform(const std::string& s) {
  if (s == "remark")
    return CForm::remark;
  if (s == "conjecture")
    return CForm::conjecture;
  throw ParameterError("unknown C-predicate form '" + s + "'");
}

}  // namespace arcpart
