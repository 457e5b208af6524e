#include "arcpart/counting.hpp"

#include <cstdint>

namespace arcpart {

namespace {

bool is_r3(FamilyTag t) { return t == FamilyTag::c3 || t == FamilyTag::b3; }
bool is_shifted(FamilyTag t) { return t == FamilyTag::c2k || t == FamilyTag::b2k; }

int effective_r(const CountFamily& f) { return is_r3(f.tag) ? 3 : f.r; }

}  // namespace

void CountFamily::validate() const {
  if (is_shifted(tag)) {
    if (i != 1 && i != 2)
      throw ParameterError("c2k/b2k need i in {1, 2}");
    if (k < 1)
      throw ParameterError("c2k/b2k need k >= 1");
  } else {
    require_gordon_params(effective_r(*this), i);
  }
}

std::string CountFamily::describe() const {
  std::string s = to_string(tag) + "(";
  if (is_shifted(tag))
    s += "k=" + std::to_string(k) + ",i=" + std::to_string(i);
  else
    s += "r=" + std::to_string(effective_r(*this)) + ",i=" + std::to_string(i);
  if (length)
    s += ",m=" + std::to_string(*length);
  return s + ")";
}

CountFamily CountFamily::gordon_a(int r, int i, std::optional<int> m) {
  return {FamilyTag::A, r, i, 1, m, CForm::remark};
}
CountFamily CountFamily::gordon_b(int r, int i, std::optional<int> m) {
  return {FamilyTag::B, r, i, 1, m, CForm::remark};
}
CountFamily CountFamily::new_part(int r, int i, std::optional<int> m, CForm form) {
  return {FamilyTag::C, r, i, 1, m, form};
}
CountFamily CountFamily::shifted_c(int k, int i, std::optional<int> m) {
  return {FamilyTag::c2k, 2, i, k, m, CForm::remark};
}
CountFamily CountFamily::shifted_b(int k, int i, std::optional<int> m) {
  return {FamilyTag::b2k, 2, i, k, m, CForm::remark};
}

bool family_contains(const CountFamily& f, const Partition& p) {
  if (f.length && static_cast<int>(p.length()) != *f.length)
    return false;
  const int r = effective_r(f);
  switch (f.tag) {
  case FamilyTag::A:
    return congruence_a_predicate(p, r, f.i);
  case FamilyTag::B:
  case FamilyTag::b3:
    return gordon_b_predicate(p, r, f.i);
  case FamilyTag::C:
  case FamilyTag::c3:
    return c_predicate(p, r, f.i, f.form);
  case FamilyTag::c2k:
    return shifted_c_predicate(p, p.length(), f.k, f.i);
  case FamilyTag::b2k:
    return shifted_b_predicate(p, p.length(), f.k, f.i);
  }
  return false;
}

Constraint family_constraint(const CountFamily& f) {
  Constraint c;
  c.accept = [f](const Partition& p) { return family_contains(f, p); };
  const int r = effective_r(f);
  switch (f.tag) {
  case FamilyTag::A: {
    const int modulus = 2 * r + 1, i = f.i;
    c.extend_ok = [modulus, i](std::span<const int> prefix) {
      const int res = prefix.back() % modulus;
      return res != 0 && res != i && res != modulus - i;
    };
    break;
  }
  case FamilyTag::B:
  case FamilyTag::b3: {
    const std::size_t span = static_cast<std::size_t>(r - 1);
    const int max_ones = f.i - 1;
    c.extend_ok = [span, max_ones](std::span<const int> prefix) {
      const std::size_t j = prefix.size() - 1;
      if (j >= span && prefix[j - span] - prefix[j] < 2)
        return false;
      if (prefix[j] == 1) {
        int ones = 0;
        for (std::size_t t = prefix.size(); t-- > 0 && prefix[t] == 1;)
          ++ones;
        return ones <= max_ones;
      }
      return true;
    };
    break;
  }
  case FamilyTag::b2k: {
    const int k = f.k, max_k = f.i - 1;
    c.extend_ok = [k, max_k](std::span<const int> prefix) {
      const std::size_t j = prefix.size() - 1;
      if (prefix[j] < k)
        return false;
      if (j >= 1 && prefix[j - 1] - prefix[j] < 2)
        return false;
      return !(prefix[j] == k && max_k == 0);
    };
    break;
  }
  case FamilyTag::c2k:
    if (f.length) {
      // the smallest part bounds every part from below
      const int floor = *f.length + f.k - f.i + 1;
      c.extend_ok = [floor](std::span<const int> prefix) { return prefix.back() >= floor; };
    }
    break;
  case FamilyTag::C:
  case FamilyTag::c3:
    break;  // not prefix-monotone
  }
  return c;
}

namespace {

EnumerationOptions options_for(const CountFamily& f) {
  EnumerationOptions opts;
  if (f.length)
    opts.exact_length = static_cast<std::size_t>(*f.length);
  return opts;
}

Integer count_with(const CountFamily& f, int n, const Constraint& c) {
  f.validate();
  if (n < 0 || (f.length && *f.length < 0))
    return 0;
  // enumeration visits one partition at a time, so a 64-bit tally cannot overflow in practice
  std::uint64_t total = 0;
  for_each_partition(n, options_for(f), c, [&](const Partition&) { ++total; });
  static_assert(sizeof(unsigned long) >= sizeof(std::uint64_t));
  return Integer(static_cast<unsigned long>(total));
}

}  // namespace

Integer count(const CountFamily& f, int n) { return count_with(f, n, family_constraint(f)); }

Integer count_by_filter(const CountFamily& f, int n) {
  Constraint plain;
  plain.accept = [f](const Partition& p) { return family_contains(f, p); };
  return count_with(f, n, plain);
}

std::string to_string(FamilyTag tag) {
  switch (tag) {
  case FamilyTag::A: return "A";
  case FamilyTag::B: return "B";
  case FamilyTag::C: return "C";
  case FamilyTag::c2k: return "c2k";
  case FamilyTag::b2k: return "b2k";
  case FamilyTag::c3: return "c3";
  case FamilyTag::b3: return "b3";
  }
  return "?";
}

FamilyTag parse_family(const std::string& s) {
  for (FamilyTag t : {FamilyTag::A, FamilyTag::B, FamilyTag::C, FamilyTag::c2k, FamilyTag::b2k,
                      FamilyTag::c3, FamilyTag::b3})
    if (to_string(t) == s)
      return t;
  throw ParameterError("unknown family '" + s + "'");
}

}  // namespace arcpart
