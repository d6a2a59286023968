#pragma once

// The signed block-sum operator
//
//   T({c_j}, phi) = sum_{s=1}^{2n-1} (-1)^s sum_{i=1}^{2n-s} phi(c_i + ... + c_{i+s-1})
//                   + phi(c_1 + c_3 + ... + c_{2n-1})
//
// and its per-variable part T_k. The evaluators are templates over the number
// type so that the vanishing identities can be checked in exact rational
// arithmetic as well as in double precision.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace specon {

/// One signed evaluation phi(argument). The block covers 0-based indices
/// [first, last]; the alternating-total term is flagged and spans everything.
template <class Num>
struct BasicTTerm {
  int sign = 1;
  Num argument{};
  std::size_t first = 0;
  std::size_t last = 0;
  bool alternating_total = false;

  /// Whether the term involves c_k (0-based k).
  bool involves(std::size_t k) const {
    if (alternating_total) return k % 2 == 0;
    return first <= k && k <= last;
  }
};

using TTerm = BasicTTerm<double>;

namespace detail {
inline void require_odd_length(std::size_t len, const char* what) {
  if (len == 0 || len % 2 == 0) throw std::invalid_argument(std::string(what) + ": length must be odd (2n-1)");
}
}  // namespace detail

/// Number of terms for a sequence of length L = 2n-1: sum_{s=1}^{L} (L+1-s) + 1.
inline std::size_t t_term_count(std::size_t len) { return len * (len + 1) / 2 + 1; }

/// Enumerates the terms in the fixed order: s ascending, then i ascending,
/// alternating total last.
template <class Num>
std::vector<BasicTTerm<Num>> t_terms(std::span<const Num> c) {
  detail::require_odd_length(c.size(), "t_terms");
  const std::size_t len = c.size();
  std::vector<BasicTTerm<Num>> out;
  out.reserve(t_term_count(len));
  for (std::size_t s = 1; s <= len; ++s) {
    const int sign = (s % 2 == 0) ? 1 : -1;
    for (std::size_t i = 0; i + s <= len; ++i) {
      Num arg = c[i];
      for (std::size_t m = i + 1; m < i + s; ++m) arg += c[m];
      out.push_back({sign, arg, i, i + s - 1, false});
    }
  }
  Num alt = c[0];
  for (std::size_t m = 2; m < len; m += 2) alt += c[m];
  out.push_back({1, alt, 0, len - 1, true});
  return out;
}

/// T({c_j}, phi) by direct block enumeration.
template <class Num, class Phi>
auto t_apply(std::span<const Num> c, Phi&& phi) {
  detail::require_odd_length(c.size(), "t_apply");
  using R = std::decay_t<decltype(phi(c[0]))>;
  const std::size_t len = c.size();
  R total{};
  for (std::size_t s = 1; s <= len; ++s) {
    R level{};
    for (std::size_t i = 0; i + s <= len; ++i) {
      Num arg = c[i];
      for (std::size_t m = i + 1; m < i + s; ++m) arg += c[m];
      level += phi(arg);
    }
    if (s % 2 == 0) {
      total += level;
    } else {
      total -= level;
    }
  }
  Num alt = c[0];
  for (std::size_t m = 2; m < len; m += 2) alt += c[m];
  total += phi(alt);
  return total;
}

/// T({c_j}, phi) through prefix sums y_1 = 0, y_j = c_1 + ... + c_{j-1}:
///   sum_{k>s} (-1)^{k-s} phi(y_k - y_s) + phi(sum_j (y_{2j} - y_{2j-1})).
template <class Num, class Phi>
auto t_apply_prefix(std::span<const Num> c, Phi&& phi) {
  detail::require_odd_length(c.size(), "t_apply_prefix");
  using R = std::decay_t<decltype(phi(c[0]))>;
  std::vector<Num> y(c.size() + 1);
  y[0] = Num{};
  for (std::size_t j = 0; j < c.size(); ++j) y[j + 1] = y[j] + c[j];
  R total{};
  for (std::size_t s = 0; s < y.size(); ++s) {
    for (std::size_t k = s + 1; k < y.size(); ++k) {
      if ((k - s) % 2 == 0) {
        total += phi(Num(y[k] - y[s]));
      } else {
        total -= phi(Num(y[k] - y[s]));
      }
    }
  }
  Num measure{};
  for (std::size_t j = 0; j + 1 < y.size(); j += 2) measure += y[j + 1] - y[j];
  total += phi(measure);
  return total;
}

/// T_k: the part of T involving c_k (k is 1-based, 1 <= k <= 2n-1). The
/// T_k overlap, so summing them over k does not reproduce T.
template <class Num, class Phi>
auto t_k_apply(std::span<const Num> c, std::size_t k, Phi&& phi) {
  detail::require_odd_length(c.size(), "t_k_apply");
  if (k < 1 || k > c.size()) throw std::out_of_range("t_k_apply: index out of range");
  using R = std::decay_t<decltype(phi(c[0]))>;
  R total{};
  for (const auto& term : t_terms<Num>(c)) {
    if (!term.involves(k - 1)) continue;
    if (term.sign > 0) {
      total += phi(term.argument);
    } else {
      total -= phi(term.argument);
    }
  }
  return total;
}

}  // namespace specon
