#pragma once

// Type A_{n-1} root datum of GL(n): weights in the fundamental-weight basis,
// the Weyl group as permutations, standard parabolics, association classes,
// cone functions and the terms of the truncation sum.
//
// Conventions
//   * Simple roots alpha_k = e_k - e_{k+1}, k = 1..n-1 (1-based everywhere in
//     the public API, matching the usual indexing of s_k, alpha_k, varpi_k).
//   * A weight stores coeffs[k-1] = <lambda, alpha_k^vee>.
//   * Simply-laced normalisation <alpha_k, alpha_k> = 2, coroots identified
//     with roots.
//   * A permutation w acts by e_i -> e_{w(i)}.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "eis/errors.hpp"

namespace eis {

using Rational = boost::rational<std::int64_t>;
using Complex = std::complex<double>;

inline double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

/// Linear functional on a_0 / a_G in fundamental-weight coordinates.
template <class T>
struct BasicWeight {
  std::vector<T> coeffs;

  BasicWeight() = default;
  explicit BasicWeight(std::vector<T> c) : coeffs(std::move(c)) {}
  BasicWeight(std::initializer_list<T> c) : coeffs(c) {}

  static BasicWeight zero(std::size_t rank) { return BasicWeight(std::vector<T>(rank, T(0))); }

  std::size_t rank() const { return coeffs.size(); }

  BasicWeight& operator+=(const BasicWeight& o) {
    check_rank(o);
    for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] += o.coeffs[k];
    return *this;
  }
  BasicWeight& operator-=(const BasicWeight& o) {
    check_rank(o);
    for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] -= o.coeffs[k];
    return *this;
  }
  BasicWeight& operator*=(const T& a) {
    for (auto& c : coeffs) c *= a;
    return *this;
  }

  friend BasicWeight operator+(BasicWeight a, const BasicWeight& b) { return a += b; }
  friend BasicWeight operator-(BasicWeight a, const BasicWeight& b) { return a -= b; }
  friend BasicWeight operator*(const T& s, BasicWeight a) { return a *= s; }
  friend BasicWeight operator-(BasicWeight a) {
    for (auto& c : a.coeffs) c = -c;
    return a;
  }
  friend bool operator==(const BasicWeight&, const BasicWeight&) = default;

 private:
  void check_rank(const BasicWeight& o) const {
    if (o.coeffs.size() != coeffs.size()) throw DomainError("weights of different rank");
  }
};

using RationalWeight = BasicWeight<Rational>;
using Weight = BasicWeight<Complex>;

template <class T>
BasicWeight<T> conj(const BasicWeight<T>& w) {
  BasicWeight<T> out = w;
  if constexpr (std::is_same_v<T, Complex>) {
    for (auto& c : out.coeffs) c = std::conj(c);
  }
  return out;
}

inline Weight to_complex(const RationalWeight& w) {
  Weight out = Weight::zero(w.rank());
  for (std::size_t k = 0; k < w.rank(); ++k) out.coeffs[k] = to_double(w.coeffs[k]);
  return out;
}

/// <lambda, alpha_k^vee> for a simple coroot, k in 1..n-1.
template <class T>
T pairing(const BasicWeight<T>& lambda, std::size_t k) {
  if (k < 1 || k > lambda.rank()) throw DomainError("simple coroot index out of range");
  return lambda.coeffs[k - 1];
}

/// <lambda, rho^vee>; rho^vee is the sum of the simple coroots.
template <class T>
T pairing_rho(const BasicWeight<T>& lambda) {
  T s(0);
  for (const auto& c : lambda.coeffs) s += c;
  return s;
}

/// Positive root e_i - e_j with 1 <= i < j <= n.
struct PositiveRoot {
  int i = 1;
  int j = 2;

  int height() const { return j - i; }
  bool is_simple() const { return j == i + 1; }

  /// <lambda, alpha^vee> = sum of the coordinates i..j-1.
  template <class T>
  T pair(const BasicWeight<T>& lambda) const {
    T s(0);
    for (int k = i; k < j; ++k) s += lambda.coeffs[static_cast<std::size_t>(k - 1)];
    return s;
  }

  std::string label() const {
    if (is_simple()) return "alpha_" + std::to_string(i);
    return "e" + std::to_string(i) + "-e" + std::to_string(j);
  }

  friend auto operator<=>(const PositiveRoot&, const PositiveRoot&) = default;
};

/// The root datum of GL(n).
class RootDatum {
 public:
  explicit RootDatum(int n) : n_(n) {
    if (n < 2) throw DomainError("GL(n) requires n >= 2");
    const std::size_t r = rank();
    cartan_.assign(r, std::vector<int>(r, 0));
    for (std::size_t a = 0; a < r; ++a) {
      cartan_[a][a] = 2;
      if (a + 1 < r) cartan_[a][a + 1] = cartan_[a + 1][a] = -1;
    }
    gram_fw_.assign(r, std::vector<Rational>(r, Rational(0)));
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t b = 0; b < r; ++b) {
        gram_fw_[a][b] = inner(fundamental_weight(a + 1), fundamental_weight(b + 1));
      }
    }
  }

  int n() const { return n_; }
  std::size_t rank() const { return static_cast<std::size_t>(n_ - 1); }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<std::vector<Rational>>& gram_fw() const { return gram_fw_; }

  RationalWeight fundamental_weight(std::size_t k) const {
    auto w = RationalWeight::zero(rank());
    w.coeffs.at(k - 1) = 1;
    return w;
  }

  /// Simple root alpha_k in fundamental-weight coordinates (row k of the Cartan matrix).
  RationalWeight simple_root(std::size_t k) const {
    auto w = RationalWeight::zero(rank());
    for (std::size_t b = 0; b < rank(); ++b) {
      w.coeffs[b] = Rational(cartan_[k - 1][b]);
    }
    return w;
  }

  RationalWeight root(const PositiveRoot& a) const {
    auto w = RationalWeight::zero(rank());
    for (int k = a.i; k < a.j; ++k) w += simple_root(static_cast<std::size_t>(k));
    return w;
  }

  RationalWeight rho() const {
    auto w = RationalWeight::zero(rank());
    for (auto& c : w.coeffs) c = 1;
    return w;
  }

  std::vector<PositiveRoot> positive_roots() const {
    std::vector<PositiveRoot> out;
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j) out.push_back({i, j});
    return out;
  }

  /// Trace form <lambda, mu> on a_0^* / a_G^*, evaluated through e-coordinates.
  template <class T>
  T inner(const BasicWeight<T>& lambda, const BasicWeight<T>& mu) const {
    const auto x = to_e_coordinates(lambda);
    const auto y = to_e_coordinates(mu);
    T sxy(0), sx(0), sy(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      sxy += x[i] * y[i];
      sx += x[i];
      sy += y[i];
    }
    return sxy - sx * sy / T(n_);
  }

  /// Representative x in C^n (x_n = 0) with x_k - x_{k+1} = coeffs[k-1].
  template <class T>
  std::vector<T> to_e_coordinates(const BasicWeight<T>& lambda) const {
    if (lambda.rank() != rank()) throw DomainError("weight rank does not match root datum");
    std::vector<T> x(static_cast<std::size_t>(n_), T(0));
    for (int k = n_ - 2; k >= 0; --k) {
      x[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(k + 1)] + lambda.coeffs[static_cast<std::size_t>(k)];
    }
    return x;
  }

 private:
  int n_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rational>> gram_fw_;
};

/// Element of the Weyl group S_n stored as a permutation of {0..n-1}.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(std::vector<int> perm) : perm_(std::move(perm)) {
    std::vector<int> seen(perm_.size(), 0);
    for (int p : perm_) {
      if (p < 0 || p >= static_cast<int>(perm_.size()) || seen[static_cast<std::size_t>(p)]++) {
        throw DomainError("WeylElement: not a permutation");
      }
    }
  }

  static WeylElement identity(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return WeylElement(std::move(p));
  }

  /// Simple reflection s_k (transposition of k and k+1), k in 1..n-1.
  static WeylElement simple_reflection(int n, int k) {
    if (k < 1 || k >= n) throw DomainError("simple reflection index out of range");
    auto w = identity(n);
    std::swap(w.perm_[static_cast<std::size_t>(k - 1)], w.perm_[static_cast<std::size_t>(k)]);
    return w;
  }

  /// Reflection in the positive root e_i - e_j.
  static WeylElement reflection(int n, const PositiveRoot& a) {
    auto w = identity(n);
    std::swap(w.perm_[static_cast<std::size_t>(a.i - 1)], w.perm_[static_cast<std::size_t>(a.j - 1)]);
    return w;
  }

  /// Product s_{k_1} s_{k_2} ... s_{k_m}.
  static WeylElement from_word(int n, const std::vector<int>& word) {
    auto w = identity(n);
    for (int k : word) w = w * simple_reflection(n, k);
    return w;
  }

  static WeylElement longest(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = n - 1 - i;
    return WeylElement(std::move(p));
  }

  /// All n! elements in lexicographic order of their permutations.
  static std::vector<WeylElement> all(int n) {
    std::vector<WeylElement> out;
    auto p = identity(n).perm_;
    do {
      out.emplace_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  int n() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }

  /// Image of the 1-based index i.
  int operator()(int i) const { return perm_.at(static_cast<std::size_t>(i - 1)) + 1; }

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    if (a.n() != b.n()) throw DomainError("Weyl elements of different groups");
    std::vector<int> p(a.perm_.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = a.perm_[static_cast<std::size_t>(b.perm_[i])];
    return WeylElement(std::move(p));
  }

  WeylElement inverse() const {
    std::vector<int> p(perm_.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[static_cast<std::size_t>(perm_[i])] = static_cast<int>(i);
    return WeylElement(std::move(p));
  }

  int length() const {
    int inv = 0;
    for (std::size_t i = 0; i < perm_.size(); ++i)
      for (std::size_t j = i + 1; j < perm_.size(); ++j) inv += perm_[i] > perm_[j];
    return inv;
  }

  int sign() const { return length() % 2 == 0 ? 1 : -1; }

  /// True when w(e_i - e_j) is a positive root.
  bool keeps_positive(const PositiveRoot& a) const { return (*this)(a.i) < (*this)(a.j); }

  /// {alpha > 0 : w alpha < 0}.
  std::vector<PositiveRoot> inversion_set() const {
    std::vector<PositiveRoot> out;
    for (int i = 1; i <= n(); ++i)
      for (int j = i + 1; j <= n(); ++j)
        if (!keeps_positive({i, j})) out.push_back({i, j});
    return out;
  }

  /// Linear action on weights: permute e-coordinates and read back the
  /// fundamental-weight coordinates.
  template <class T>
  BasicWeight<T> act(const BasicWeight<T>& lambda) const {
    const std::size_t n = perm_.size();
    if (lambda.rank() + 1 != n) throw DomainError("weight rank does not match Weyl group");
    std::vector<T> x(n, T(0));
    for (std::size_t k = n - 1; k-- > 0;) x[k] = x[k + 1] + lambda.coeffs[k];
    std::vector<T> y(n, T(0));
    for (std::size_t i = 0; i < n; ++i) y[static_cast<std::size_t>(perm_[i])] = x[i];
    BasicWeight<T> out = BasicWeight<T>::zero(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) out.coeffs[k] = y[k] - y[k + 1];
    return out;
  }

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

  /// One-line notation, e.g. "[3 2 1]".
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(perm_[i] + 1);
    }
    return s + "]";
  }

 private:
  std::vector<int> perm_;
};

/// Standard parabolic subgroup, identified by the simple roots of its Levi.
class StandardParabolic {
 public:
  StandardParabolic(int n, std::uint32_t levi_mask) : n_(n), mask_(levi_mask) {
    if (n < 2 || levi_mask >= (1u << (n - 1))) throw DomainError("invalid parabolic");
  }

  static StandardParabolic minimal(int n) { return {n, 0u}; }
  static StandardParabolic group(int n) { return {n, (1u << (n - 1)) - 1u}; }
  static StandardParabolic from_levi(int n, const std::vector<int>& levi) {
    std::uint32_t m = 0;
    for (int k : levi) {
      if (k < 1 || k >= n) throw DomainError("levi root index out of range");
      m |= 1u << (k - 1);
    }
    return {n, m};
  }

  int n() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  bool in_levi(int k) const { return (mask_ >> (k - 1)) & 1u; }

  std::vector<int> levi_roots() const {
    std::vector<int> out;
    for (int k = 1; k < n_; ++k)
      if (in_levi(k)) out.push_back(k);
    return out;
  }

  /// dim a_P (before the quotient by a_G).
  int dim_a() const { return n_ - static_cast<int>(levi_roots().size()); }
  /// dim a_P - dim a_G.
  int dim_a_mod_center() const { return dim_a() - 1; }

  bool is_minimal() const { return mask_ == 0; }
  bool is_group() const { return mask_ == (1u << (n_ - 1)) - 1u; }

  /// Block of each coordinate 1..n (0-based block ids) in the Levi decomposition.
  std::vector<int> blocks() const {
    std::vector<int> b(static_cast<std::size_t>(n_), 0);
    for (int i = 2; i <= n_; ++i)
      b[static_cast<std::size_t>(i - 1)] = b[static_cast<std::size_t>(i - 2)] + (in_levi(i - 1) ? 0 : 1);
    return b;
  }

  std::string label() const {
    if (is_minimal()) return "P0";
    if (is_group()) return "G";
    std::string s = "P{";
    bool first = true;
    for (int k : levi_roots()) {
      if (!first) s += ',';
      s += std::to_string(k);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(const StandardParabolic&, const StandardParabolic&) = default;

 private:
  int n_;
  std::uint32_t mask_;
};

inline std::vector<StandardParabolic> standard_parabolics(const RootDatum& d) {
  std::vector<StandardParabolic> out;
  for (std::uint32_t m = 0; m < (1u << d.rank()); ++m) out.emplace_back(d.n(), m);
  return out;
}

/// Elements of the Levi Weyl group W_P (generated by the Levi simple reflections).
inline std::vector<WeylElement> levi_weyl_group(const StandardParabolic& p) {
  std::vector<WeylElement> out;
  const auto blocks = p.blocks();
  for (const auto& w : WeylElement::all(p.n())) {
    bool ok = true;
    for (int i = 1; i <= p.n() && ok; ++i)
      ok = blocks[static_cast<std::size_t>(i - 1)] == blocks[static_cast<std::size_t>(w(i) - 1)];
    if (ok) out.push_back(w);
  }
  return out;
}

/// True when w(a_P) = a_Q, tested in the dual: every varpi_j (j outside the
/// Levi of P) must land in the span of the varpi_k with k outside the Levi of Q.
inline bool maps_onto(const WeylElement& w, const StandardParabolic& p, const StandardParabolic& q) {
  if (p.dim_a() != q.dim_a()) return false;
  const RootDatum d(p.n());
  for (int j = 1; j < p.n(); ++j) {
    if (p.in_levi(j)) continue;
    const auto image = w.act(d.fundamental_weight(static_cast<std::size_t>(j)));
    for (int k = 1; k < q.n(); ++k)
      if (q.in_levi(k) && image.coeffs[static_cast<std::size_t>(k - 1)] != Rational(0)) return false;
  }
  return true;
}

/// W(a_P, a_Q): elements of minimal length in their coset w W_P with w(a_P) = a_Q.
inline std::vector<WeylElement> transporters(const StandardParabolic& p, const StandardParabolic& q) {
  if (p.n() != q.n()) throw DomainError("parabolics of different groups");
  std::vector<WeylElement> out;
  const auto wp = levi_weyl_group(p);
  for (const auto& w : WeylElement::all(p.n())) {
    if (!maps_onto(w, p, q)) continue;
    const int len = w.length();
    bool minimal = std::all_of(wp.begin(), wp.end(), [&](const WeylElement& u) { return (w * u).length() >= len; });
    if (minimal) out.push_back(w);
  }
  return out;
}

namespace detail {

inline int rational_rank(std::vector<std::vector<Rational>> m) {
  int rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < m.size() && m[pivot][c] == Rational(0)) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[static_cast<std::size_t>(rank)]);
    const auto& prow = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < m.size(); ++r) {
      if (m[r][c] == Rational(0)) continue;
      const Rational f = m[r][c] / prow[c];
      for (std::size_t cc = c; cc < cols; ++cc) m[r][cc] -= f * prow[cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Number of chambers of a_P / a_G cut out by the restricted roots, counted
/// with Zaslavsky's formula sum_S (-1)^{|S| - rank S} over subsets of the
/// distinct restricted hyperplanes. Independent of any Weyl group data.
inline long chamber_count(const StandardParabolic& p) {
  const auto blocks = p.blocks();
  const int r = blocks.back() + 1;
  std::vector<std::vector<Rational>> hyperplanes;
  for (int i = 1; i <= p.n(); ++i) {
    for (int j = i + 1; j <= p.n(); ++j) {
      const int bi = blocks[static_cast<std::size_t>(i - 1)], bj = blocks[static_cast<std::size_t>(j - 1)];
      if (bi == bj) continue;
      std::vector<Rational> v(static_cast<std::size_t>(r), Rational(0));
      v[static_cast<std::size_t>(bi)] = 1;
      v[static_cast<std::size_t>(bj)] = -1;
      auto neg = v;
      for (auto& x : neg) x = -x;
      if (std::find(hyperplanes.begin(), hyperplanes.end(), v) == hyperplanes.end() &&
          std::find(hyperplanes.begin(), hyperplanes.end(), neg) == hyperplanes.end()) {
        hyperplanes.push_back(std::move(v));
      }
    }
  }
  const std::size_t h = hyperplanes.size();
  long total = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << h); ++s) {
    std::vector<std::vector<Rational>> rows;
    for (std::size_t k = 0; k < h; ++k)
      if ((s >> k) & 1u) rows.push_back(hyperplanes[k]);
    const int exponent = static_cast<int>(rows.size()) - detail::rational_rank(rows);
    total += exponent % 2 == 0 ? 1 : -1;
  }
  return total;
}

/// Counts attached to one member P of an association class.
struct ClassMemberCounts {
  StandardParabolic parabolic;
  long w = 0;        ///< |W(a_P, a_P)|
  long chambers = 0; ///< n(a_P)
};

struct AssociationClass {
  std::vector<StandardParabolic> members;
  std::vector<ClassMemberCounts> counts;

  long size() const { return static_cast<long>(members.size()); }  ///< a(class)

  /// n(a_P) = w(P) a(class) for every member.
  bool counting_identity_holds() const {
    return std::all_of(counts.begin(), counts.end(),
                       [&](const ClassMemberCounts& c) { return c.chambers == c.w * size(); });
  }
};

inline std::vector<AssociationClass> association_classes(const RootDatum& d) {
  const auto ps = standard_parabolics(d);
  std::vector<int> parent(ps.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (std::size_t a = 0; a < ps.size(); ++a)
    for (std::size_t b = a + 1; b < ps.size(); ++b)
      if (!transporters(ps[a], ps[b]).empty()) parent[static_cast<std::size_t>(find(static_cast<int>(b)))] = find(static_cast<int>(a));

  std::vector<AssociationClass> classes;
  std::vector<int> class_of_root(ps.size(), -1);
  for (std::size_t a = 0; a < ps.size(); ++a) {
    const int root = find(static_cast<int>(a));
    auto& slot = class_of_root[static_cast<std::size_t>(root)];
    if (slot < 0) {
      slot = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(slot)].members.push_back(ps[a]);
  }
  for (auto& c : classes) {
    for (const auto& p : c.members) {
      c.counts.push_back({p, static_cast<long>(transporters(p, p).size()), chamber_count(p)});
    }
  }
  return classes;
}

/// Characteristic function of the cone attached to P: H is given in
/// simple-coroot coordinates, so <varpi_j, H> = H[j-1]. Strict inequality;
/// for P = G the condition set is empty and the value is true.
inline bool tau_hat(const StandardParabolic& p, const std::vector<double>& h) {
  if (h.size() + 1 != static_cast<std::size_t>(p.n())) throw DomainError("tau_hat: wrong dimension");
  for (int j = 1; j < p.n(); ++j)
    if (!p.in_levi(j) && !(h[static_cast<std::size_t>(j - 1)] > 0.0)) return false;
  return true;
}

struct TruncationTerm {
  StandardParabolic parabolic;
  int sign;
};

/// One term (P, (-1)^{dim a_P - dim a_G}) per standard parabolic, ordered
/// from G down to P0.
inline std::vector<TruncationTerm> truncation_terms(const RootDatum& d) {
  auto ps = standard_parabolics(d);
  std::stable_sort(ps.begin(), ps.end(), [](const StandardParabolic& a, const StandardParabolic& b) {
    return a.levi_roots().size() > b.levi_roots().size();
  });
  std::vector<TruncationTerm> out;
  for (const auto& p : ps) out.push_back({p, p.dim_a_mod_center() % 2 == 0 ? 1 : -1});
  return out;
}

}  // namespace eis
