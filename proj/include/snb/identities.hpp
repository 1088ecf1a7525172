#pragma once

// Identity relations for an abstract n-ary bracket, generic over the value
// type so they serve both polynomial brackets and brackets built from Lie
// superalgebras. T needs +, -, signed_by(int); the product-based relations
// additionally need operator*.
//
// Arguments are homogeneous; `par` holds their parities. All indices below
// are 0-based; relation labels use 1-based slot numbers.

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace snb {

template <class T>
using NaryBracket = std::function<T(std::span<const T>)>;

template <class T>
struct Relation {
  std::string name;
  T lhs;
  T rhs;
};

namespace detail {

inline int parity_sum(std::span<const int> par, std::size_t from, std::size_t to) {
  int s = 0;
  for (std::size_t i = from; i < to && i < par.size(); ++i) s += par[i];
  return s;
}

template <class T>
T call(const NaryBracket<T>& b, std::vector<T> args) {
  return b(std::span<const T>(args));
}

}  // namespace detail

/// {..,f_i,f_{i+1},..} = -(-1)^{|f_i||f_{i+1}|} {..,f_{i+1},f_i,..}, for the
/// adjacent pair starting at slot `i` (0-based).
template <class T>
Relation<T> swap_relation(const NaryBracket<T>& b, std::span<const T> f, std::span<const int> par, std::size_t i) {
  std::vector<T> swapped(f.begin(), f.end());
  std::swap(swapped[i], swapped[i + 1]);
  T lhs = b(f);
  T rhs = -detail::call(b, std::move(swapped)).signed_by(par[i] * par[i + 1]);
  return {"swap slots " + std::to_string(i + 1) + "," + std::to_string(i + 2), std::move(lhs), std::move(rhs)};
}

/// Skew-symmetry for every adjacent pair of slots 2..n.
template <class T>
std::vector<Relation<T>> skew_relations(const NaryBracket<T>& b, std::span<const T> f, std::span<const int> par) {
  std::vector<Relation<T>> out;
  for (std::size_t i = 1; i + 1 < f.size(); ++i) out.push_back(swap_relation(b, f, par, i));
  return out;
}

/// Args (g1..gn, f1..f_{n-1}):
///   {{g},f} = sum_{i>=2} (-1)^{(eps+|F|)(sum_{k>i}|g_k|)} {g1,..,{g_i,f},..,gn}
///           + (-1)^{(eps+|F|)(eps+sum_{k>=2}|g_k|)} {{g1,f},g2,..,gn}
template <class T>
Relation<T> fundamental_identity(const NaryBracket<T>& b, int eps, std::size_t n, std::span<const T> a,
                                 std::span<const int> par) {
  std::span<const T> g = a.subspan(0, n);
  std::span<const T> f = a.subspan(n, n - 1);
  std::span<const int> pg = par.subspan(0, n);
  const int pF = detail::parity_sum(par, n, 2 * n - 1);

  auto with_first = [&](const T& head, std::span<const T> tail) {
    std::vector<T> v{head};
    v.insert(v.end(), tail.begin(), tail.end());
    return detail::call(b, std::move(v));
  };

  T lhs = with_first(b(g), f);
  T rhs = with_first(with_first(g[0], f), g.subspan(1)).signed_by((eps + pF) * (eps + detail::parity_sum(pg, 1, n)));
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<T> v(g.begin(), g.end());
    v[i] = with_first(g[i], f);
    rhs = rhs + detail::call(b, std::move(v)).signed_by((eps + pF) * detail::parity_sum(pg, i + 1, n));
  }
  return {"fundamental identity", std::move(lhs), std::move(rhs)};
}

/// Args (g, h, f2..fn): {gh,f2..} = g{h,f2..} + (-1)^{(eps+sum|f_i|)|h|} {g,f2..} h
template <class T>
Relation<T> leibniz_first(const NaryBracket<T>& b, int eps, std::size_t n, std::span<const T> a,
                          std::span<const int> par) {
  const T& g = a[0];
  const T& h = a[1];
  std::span<const T> rest = a.subspan(2, n - 1);
  auto with_first = [&](const T& head) {
    std::vector<T> v{head};
    v.insert(v.end(), rest.begin(), rest.end());
    return detail::call(b, std::move(v));
  };
  T lhs = with_first(g * h);
  T rhs = g * with_first(h) + (with_first(g) * h).signed_by((eps + detail::parity_sum(par, 2, n + 1)) * par[1]);
  return {"leibniz slot 1", std::move(lhs), std::move(rhs)};
}

/// Args (f1..fn, g, h); for each slot i >= 2 with gh placed there:
///   {..,gh,..} = (-1)^{(sum_{j>i}|f_j|)|h|} {..,g,..} h
///              + (-1)^{(|h|+sum_{j>i}|f_j|)|g|} {..,h,..} g
template <class T>
std::vector<Relation<T>> leibniz_inner(const NaryBracket<T>& b, std::size_t n, std::span<const T> a,
                                       std::span<const int> par) {
  std::span<const T> f = a.subspan(0, n);
  const T& g = a[n];
  const T& h = a[n + 1];
  const int pg = par[n];
  const int ph = par[n + 1];
  std::vector<Relation<T>> out;
  for (std::size_t i = 1; i < n; ++i) {
    const int after = detail::parity_sum(par, i + 1, n);
    auto at = [&](const T& v) {
      std::vector<T> args(f.begin(), f.end());
      args[i] = v;
      return detail::call(b, std::move(args));
    };
    T lhs = at(g * h);
    T rhs = (at(g) * h).signed_by(after * ph) + (at(h) * g).signed_by((ph + after) * pg);
    out.push_back({"leibniz slot " + std::to_string(i + 1), std::move(lhs), std::move(rhs)});
  }
  return out;
}

/// Args (f, f1..fn):
///   sum_{i=1}^{n-1} (-1)^{i+1} {f,f1,..,f_i f_{i+1},..,fn}
///     + (-1)^{n+wrap+|f_n| sum_{j<n}|f_j|} {f, f_n f1, f2,..,f_{n-1}}  = 0
/// `wrap` = 1 gives the relation implied by the slot Leibniz rule; wrap = 0
/// is the sign without the extra factor, kept for diagnostics.
template <class T>
Relation<T> cyclic_relation(const NaryBracket<T>& b, std::size_t n, std::span<const T> a, std::span<const int> par,
                            int wrap, const T& zero) {
  const T& f = a[0];
  std::span<const T> fs = a.subspan(1, n);
  std::span<const int> pf = par.subspan(1, n);
  T sum = zero;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<T> v{f};
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) {
        v.push_back(fs[i] * fs[i + 1]);
        ++j;
      } else {
        v.push_back(fs[j]);
      }
    }
    sum = sum + detail::call(b, std::move(v)).signed_by(static_cast<int>(i));
  }
  std::vector<T> v{f, fs[n - 1] * fs[0]};
  for (std::size_t j = 1; j + 1 < n; ++j) v.push_back(fs[j]);
  const int e = static_cast<int>(n) + wrap + pf[n - 1] * detail::parity_sum(pf, 0, n - 1);
  sum = sum + detail::call(b, std::move(v)).signed_by(e);
  return {wrap ? "cyclic" : "cyclic (unwrapped sign)", std::move(sum), zero};
}

/// Ternary brackets only. Args (f1,f2,g1,g2,h1,h2):
///   {f1,g1,g2}{f2,h1,h2} - {f2,g1,g2}{f1,h1,h2}
///     = -{g1,f1,f2}{g2,h1,h2} + {g2,f1,f2}{g1,h1,h2}
/// `koszul` switches to the dressing
///   {f1,G}{f2,H} - (-1)^{|f1||f2|}{f2,G}{f1,H}
///     = -(-1)^{(|f1|+|f2|)(|g1|+|g2|)} [{g1,F}{g2,H} - (-1)^{|g1||g2|}{g2,F}{g1,H}]
template <class T>
Relation<T> generalized_skew(const NaryBracket<T>& b, std::span<const T> a, std::span<const int> par, bool koszul) {
  const T &f1 = a[0], &f2 = a[1], &g1 = a[2], &g2 = a[3], &h1 = a[4], &h2 = a[5];
  auto br = [&](const T& x, const T& y, const T& z) { return detail::call(b, {x, y, z}); };
  const int s_f = koszul ? par[0] * par[1] : 0;
  const int s_g = koszul ? par[2] * par[3] : 0;
  const int s_fg = koszul ? (par[0] + par[1]) * (par[2] + par[3]) : 0;
  T lhs = br(f1, g1, g2) * br(f2, h1, h2) - (br(f2, g1, g2) * br(f1, h1, h2)).signed_by(s_f);
  T rhs = -(br(g1, f1, f2) * br(g2, h1, h2) - (br(g2, f1, f2) * br(g1, h1, h2)).signed_by(s_g)).signed_by(s_fg);
  return {koszul ? "generalized skew (koszul dressing)" : "generalized skew", std::move(lhs), std::move(rhs)};
}

}  // namespace snb
