#pragma once

// Exact univariate polynomials with arbitrary-precision integer coefficients,
// plus certified sign analysis on rays [a, inf) via Sturm sequences.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "chromax/error.hpp"

namespace chromax {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense integer polynomial; coeffs()[i] is the coefficient of x^i.
/// Always normalized: no trailing zero coefficients, so the zero polynomial
/// has an empty coefficient vector and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long long> coeffs) {
    c_.reserve(coeffs.size());
    for (long long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPoly constant(const BigInt& v) { return IntPoly(std::vector<BigInt>{v}); }
  static IntPoly monomial(const BigInt& v, std::size_t degree) {
    std::vector<BigInt> c(degree + 1);
    c[degree] = v;
    return IntPoly(std::move(c));
  }
  /// The linear polynomial x - shift.
  static IntPoly x_minus(const BigInt& shift) { return IntPoly(std::vector<BigInt>{-shift, BigInt(1)}); }
  static IntPoly x() { return monomial(1, 1); }

  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  BigInt leading() const { return c_.empty() ? BigInt(0) : c_.back(); }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  IntPoly operator-() const {
    IntPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  IntPoly& operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  IntPoly& operator*=(const BigInt& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(r));
  }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

inline IntPoly add(const IntPoly& a, const IntPoly& b) { return a + b; }
inline IntPoly sub(const IntPoly& a, const IntPoly& b) { return a - b; }
inline IntPoly mul(const IntPoly& a, const IntPoly& b) { return a * b; }

inline IntPoly pow(const IntPoly& base, unsigned e) {
  IntPoly result = IntPoly::constant(1);
  IntPoly b = base;
  while (e) {
    if (e & 1u) result *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return result;
}

/// Quotient of an exact division in Z[x]. Throws NotDivisible when b does not
/// divide a (nonzero remainder, a non-integral quotient coefficient, or b = 0).
inline IntPoly div_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(Errc::not_divisible, "division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw Error(Errc::not_divisible, "divisor degree exceeds dividend degree");
  std::vector<BigInt> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const BigInt& lead = bc.back();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree() - db; i >= 0; --i) {
    const BigInt& top = rem[static_cast<std::size_t>(i + db)];
    if (top == 0) continue;
    if (top % lead != 0) throw Error(Errc::not_divisible, "quotient coefficient is not an integer");
    BigInt t = top / lead;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i + j)] -= t * bc[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(i)] = std::move(t);
  }
  for (const auto& r : rem)
    if (r != 0) throw Error(Errc::not_divisible, "nonzero remainder");
  return IntPoly(std::move(q));
}

inline Rational eval(const IntPoly& p, const Rational& x) {
  Rational acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

inline BigInt eval(const IntPoly& p, const BigInt& x) {
  BigInt acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline BigInt eval(const IntPoly& p, long long x) { return eval(p, BigInt(x)); }

inline IntPoly derivative(const IntPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<BigInt> d(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) d[i - 1] = p.coeffs()[i] * static_cast<unsigned long long>(i);
  return IntPoly(std::move(d));
}

/// p(x + c).
inline IntPoly compose_shift(const IntPoly& p, const BigInt& c) {
  IntPoly acc;
  const IntPoly lin(std::vector<BigInt>{c, BigInt(1)});
  const auto& co = p.coeffs();
  for (auto it = co.rbegin(); it != co.rend(); ++it) acc = acc * lin + IntPoly::constant(*it);
  return acc;
}

/// (x - shift)(x - shift - 1) ... (x - shift - k + 1); the empty product for k = 0.
inline IntPoly falling_factorial(unsigned k, long long shift = 0) {
  IntPoly r = IntPoly::constant(1);
  for (unsigned i = 0; i < k; ++i) r *= IntPoly::x_minus(BigInt(shift) + i);
  return r;
}

/// (x-1)_{k-1} * ((x-1)^{n-k+1} + (-1)^{n-k}), the conjectured maximum over
/// 2-connected k-chromatic graphs on n vertices. Equals (x)_k when n = k.
inline IntPoly f_bound(int n, int k) {
  if (k < 1 || n < k) throw Error(Errc::invalid_params, "f_bound requires n >= k >= 1");
  const IntPoly xm1 = IntPoly::x_minus(1);
  IntPoly tail = pow(xm1, static_cast<unsigned>(n - k + 1)) + IntPoly::constant((n - k) % 2 == 0 ? 1 : -1);
  return falling_factorial(static_cast<unsigned>(k - 1), 1) * tail;
}

/// Human-readable form, highest degree first, e.g. "x^2 - 3*x + 2".
inline std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    BigInt c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i > 0) os << (c != 1 ? "*" : "") << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational parse_rational(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw Error(Errc::parse_error, "not a rational number: '" + s + "'");
  }
}

/// JSON array of decimal-string coefficients, lowest degree first.
inline nlohmann::json to_json(const IntPoly& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : p.coeffs()) j.push_back(c.str());
  return j;
}

inline IntPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(Errc::parse_error, "polynomial JSON must be an array");
  std::vector<BigInt> c;
  for (const auto& e : j) {
    if (e.is_string()) {
      const auto& s = e.get_ref<const std::string&>();
      try {
        c.emplace_back(s);
      } catch (const std::exception&) {
        throw Error(Errc::parse_error, "bad coefficient '" + s + "'");
      }
    } else if (e.is_number_integer()) {
      c.emplace_back(e.get<long long>());
    } else {
      throw Error(Errc::parse_error, "coefficient must be a decimal string");
    }
  }
  return IntPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Sign certification on rays

enum class Verdict { nonneg_on_ray, negative_at };

inline const char* verdict_name(Verdict v) { return v == Verdict::nonneg_on_ray ? "nonneg_on_ray" : "negative_at"; }

/// One isolated real root of the polynomial. lo == hi means the root is
/// exactly lo; otherwise the interval (lo, hi] holds exactly one distinct root
/// and neither endpoint is a root.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool inside_ray = false;
};

struct SignSample {
  Rational point;
  int sign = 0;
};

/// Evidence that `poly` is (or is not) nonnegative on [ray_start, inf).
///
/// `roots` isolates every distinct real root; `samples` holds one rational
/// point in each sign-constant region of the ray with the exact sign of poly
/// there. The verdict is negative_at exactly when some sample is negative;
/// `witness` is then the first such sample.
struct NonnegCertificate {
  IntPoly poly;
  Rational ray_start;
  Verdict verdict = Verdict::nonneg_on_ray;
  std::optional<Rational> witness;
  std::vector<RootInterval> roots;
  std::vector<SignSample> samples;
  int leading_sign = 0;
  /// No root of poly in [ray_start, inf). False for the zero polynomial.
  bool root_free = true;

  bool nonneg() const noexcept { return verdict == Verdict::nonneg_on_ray; }
  bool identically_zero() const noexcept { return poly.is_zero(); }
  /// Nonnegative and root-free: poly > 0 on the whole ray.
  bool strictly_positive() const noexcept { return nonneg() && root_free && !poly.is_zero(); }
};

namespace detail {

// Integer polynomials, lowest degree first, kept primitive where only signs
// matter.
using ZPoly = std::vector<BigInt>;

inline void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }
inline int sign(const BigInt& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

/// Divide by the positive content; signs are unchanged.
inline void make_primitive(ZPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& c : p) c /= g;
}

inline ZPoly z_derivative(const ZPoly& p) {
  ZPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long long>(i));
  trim(d);
  return d;
}

/// A positive multiple of the remainder of a by b (b nonzero).
inline ZPoly z_rem(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const BigInt lc = abs(b.back());
  const int s = sign(b.back());
  while (!a.empty() && a.size() - 1 >= db) {
    const BigInt t = s > 0 ? a.back() : BigInt(-a.back());
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lc;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= t * b[j];
    a.pop_back();
    trim(a);
    make_primitive(a);
  }
  return a;
}

/// Primitive gcd with positive leading coefficient.
inline ZPoly z_gcd(ZPoly a, ZPoly b) {
  make_primitive(a);
  make_primitive(b);
  while (!b.empty()) {
    ZPoly r = z_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

/// Sign of p at num/den, den > 0, via the homogenized value den^deg * p(num/den).
inline int sign_at(const ZPoly& p, const Rational& x) {
  if (p.empty()) return 0;
  const BigInt num = boost::multiprecision::numerator(x), den = boost::multiprecision::denominator(x);
  BigInt acc = p.back(), dpow = 1;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    dpow *= den;
    acc = acc * num + p[i] * dpow;
  }
  return sign(acc);
}

class SturmChain {
 public:
  explicit SturmChain(ZPoly q) {
    make_primitive(q);
    chain_.push_back(std::move(q));
    ZPoly d = z_derivative(chain_.front());
    make_primitive(d);
    if (d.empty()) return;
    chain_.push_back(std::move(d));
    for (;;) {
      ZPoly r = z_rem(chain_[chain_.size() - 2], chain_.back());
      if (r.empty()) break;
      for (auto& c : r) c = -c;
      chain_.push_back(std::move(r));
    }
  }

  int variations(const Rational& x) const {
    int count = 0, prev = 0;
    for (const auto& s : chain_) {
      int sg = sign_at(s, x);
      if (sg == 0) continue;
      if (prev != 0 && sg != prev) ++count;
      prev = sg;
    }
    return count;
  }

  /// Distinct roots in (lo, hi]; lo and hi must not be roots.
  int count(const Rational& lo, const Rational& hi) const { return variations(lo) - variations(hi); }

  const ZPoly& base() const { return chain_.front(); }

 private:
  std::vector<ZPoly> chain_;
};

/// A point strictly inside (lo, hi) that is not a root of q.
inline Rational split_point(const ZPoly& q, const Rational& lo, const Rational& hi) {
  for (int d = 2;; ++d) {
    for (int j = 1; j < d; ++j) {
      Rational m = lo + (hi - lo) * j / d;
      if (sign_at(q, m) != 0) return m;
    }
  }
}

inline void isolate(const SturmChain& s, const Rational& lo, const Rational& hi, std::vector<RootInterval>& out,
                    bool inside) {
  const int c = s.count(lo, hi);
  if (c == 0) return;
  if (c == 1) {
    out.push_back({lo, hi, inside});
    return;
  }
  Rational m = split_point(s.base(), lo, hi);
  isolate(s, lo, m, out, inside);
  isolate(s, m, hi, out, inside);
}

}  // namespace detail

/// Certify the sign of p on [ray_start, inf) by exact real-root isolation.
///
/// p is reduced to its square-free part, whose distinct real roots on the ray
/// are isolated with a primitive integer Sturm sequence. Sign of p is then
/// evaluated exactly at one rational point per root-free region of the ray.
inline NonnegCertificate certify_nonneg_on_ray(const IntPoly& p, const Rational& ray_start) {
  using namespace detail;
  NonnegCertificate cert;
  cert.poly = p;
  cert.ray_start = ray_start;
  if (p.is_zero()) {
    cert.root_free = false;
    return cert;
  }
  cert.leading_sign = p.leading() > 0 ? 1 : -1;

  IntPoly q = p;
  if (p.degree() >= 1) {
    ZPoly g = z_gcd(p.coeffs(), z_derivative(p.coeffs()));
    if (g.size() > 1) q = div_exact(p, IntPoly(g));
  }

  // Every root lies strictly inside (-bound, bound).
  Rational bound = 1;
  const auto& qc = q.coeffs();
  for (std::size_t i = 0; i + 1 < qc.size(); ++i) bound = std::max(bound, Rational(1) + Rational(abs(qc[i]), abs(qc.back())));

  const Rational& a = ray_start;
  const bool root_at_start = sign_at(qc, a) == 0;
  IntPoly q_open = q;  // q with the root at a (if any) divided out
  if (root_at_start)
    q_open = div_exact(q, IntPoly(std::vector<BigInt>{-boost::multiprecision::numerator(a), boost::multiprecision::denominator(a)}));

  std::vector<RootInterval> inside;
  std::optional<SturmChain> chain;
  if (q_open.degree() >= 1) {
    chain.emplace(q_open.coeffs());
    if (a < bound) isolate(*chain, std::max(a, Rational(-bound)), bound, inside, true);
  }
  if (root_at_start) cert.roots.push_back({a, a, true});
  cert.roots.insert(cert.roots.end(), inside.begin(), inside.end());
  cert.root_free = !root_at_start && inside.empty();

  std::vector<Rational> points;
  if (!root_at_start) {
    points.push_back(a);
  } else if (inside.empty()) {
    points.push_back(a + 1);
  } else {
    // A sample strictly between a and the first root above it.
    Rational hi = inside.front().hi;
    for (;;) {
      Rational m = split_point(q_open.coeffs(), a, hi);
      if (chain->count(a, m) == 0) {
        points.push_back(m);
        break;
      }
      hi = m;
    }
  }
  for (const auto& iv : inside) points.push_back(iv.hi);

  for (const auto& pt : points) {
    int sg = sign(eval(p, pt));
    cert.samples.push_back({pt, sg});
    if (sg < 0 && !cert.witness) {
      cert.verdict = Verdict::negative_at;
      cert.witness = pt;
    }
  }
  return cert;
}

/// Certificate for q - p on [ray_start, inf), i.e. for p <= q on the ray.
inline NonnegCertificate leq_on_ray(const IntPoly& p, const IntPoly& q, const Rational& ray_start) {
  return certify_nonneg_on_ray(q - p, ray_start);
}

/// Independent re-check of a certificate's internal consistency: the witness
/// really is negative and on the ray, every recorded sample sign is exact, and a
/// nonneg verdict implies a positive leading coefficient.
inline bool certificate_consistent(const NonnegCertificate& c) {
  if (c.poly.is_zero()) return c.nonneg() && !c.witness;
  for (const auto& s : c.samples) {
    if (s.point < c.ray_start) return false;
    Rational v = eval(c.poly, s.point);
    if (detail::sign(v) != s.sign) return false;
  }
  if (c.verdict == Verdict::negative_at) {
    if (!c.witness || *c.witness < c.ray_start) return false;
    return eval(c.poly, *c.witness) < 0;
  }
  if (c.leading_sign <= 0) return false;
  return std::none_of(c.samples.begin(), c.samples.end(), [](const SignSample& s) { return s.sign < 0; });
}

inline nlohmann::json to_json(const NonnegCertificate& c) {
  nlohmann::json j;
  j["poly"] = to_json(c.poly);
  j["ray_start"] = c.ray_start.str();
  j["verdict"] = verdict_name(c.verdict);
  j["witness"] = c.witness ? nlohmann::json(c.witness->str()) : nlohmann::json(nullptr);
  j["leading_sign"] = c.leading_sign;
  j["root_free"] = c.root_free;
  j["identically_zero"] = c.identically_zero();
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& r : c.roots) roots.push_back({{"lo", r.lo.str()}, {"hi", r.hi.str()}, {"inside_ray", r.inside_ray}});
  j["roots"] = roots;
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& s : c.samples) samples.push_back({{"x", s.point.str()}, {"sign", s.sign}});
  j["samples"] = samples;
  return j;
}

}  // namespace chromax
