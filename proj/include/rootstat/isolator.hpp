#pragma once

// Generic subdivision solver: a depth-first stack of (state, interval) pairs
// with pluggable counters (Sturm, Descartes, Bernstein), Hong's root bound,
// bisection refinement and separation measurement.

#include "bernstein.hpp"
#include "bigint.hpp"
#include "dyadic.hpp"
#include "polynomial.hpp"
#include "sturm.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace rootstat {

enum class CounterMethod { Sturm, Descartes, Bernstein };

inline const char* to_string(CounterMethod m) {
  switch (m) {
    case CounterMethod::Sturm: return "sturm";
    case CounterMethod::Descartes: return "descartes";
    case CounterMethod::Bernstein: return "bernstein";
  }
  return "?";
}

inline CounterMethod parse_counter_method(const std::string& s) {
  if (s == "sturm") return CounterMethod::Sturm;
  if (s == "descartes") return CounterMethod::Descartes;
  if (s == "bernstein") return CounterMethod::Bernstein;
  throw std::invalid_argument("unknown counter method '" + s + "'");
}

/// An isolating interval. Non-exact roots lie in the open interval
/// (lo, hi), which holds exactly one root; an exact root is stored as the
/// point interval [r, r].
struct RootInterval {
  DyadicInterval interval;
  std::optional<Dyadic> exact_root;
  int depth = 0;

  bool is_exact() const { return exact_root.has_value(); }
};

struct IsolationStats {
  long tree_nodes = 0;     // number of pops
  int max_depth = 0;
  long counter_calls = 0;
  Dyadic bound_B;          // width of the initial interval
  std::vector<Rational> gaps;  // lower bounds on Delta_j, filled by measure_gaps
  long sep_bitsize = 0;        // ceil(|lg min Delta_j|), filled by measure_gaps
};

struct IsolationResult {
  std::vector<RootInterval> roots;  // sorted left to right
  IsolationStats stats;
};

// -- Root bound -------------------------------------------------------------

enum class HongVariant {
  Standard,  // |a_i / a_k|^(1/(k-i)), the chosen positive coefficient
  Printed,   // |a_i / a_d|^(1/(k-i)), for comparison only; not a valid bound in general
};

/// Power-of-two upper rounding of 2 max_{a_i<0} min_{a_k>0,k>i} |a_i/a_k|^(1/(k-i)):
/// every root with positive real part has real part below it. Zero when
/// there is no negative coefficient. The leading coefficient is made
/// positive first.
inline Dyadic hong_bound(const IntPolynomial& input, HongVariant variant = HongVariant::Standard) {
  if (input.is_zero()) throw std::domain_error("hong_bound: zero polynomial");
  IntPolynomial a = sgn(input.leading()) < 0 ? -input : input;
  const int d = a.degree();
  bool any = false;
  long best = 0;
  for (int i = 0; i < d; ++i) {
    if (sgn(a[static_cast<std::size_t>(i)]) >= 0) continue;
    const Integer ai = abs(a[static_cast<std::size_t>(i)]);
    bool have = false;
    long inner = 0;
    for (int k = i + 1; k <= d; ++k) {
      if (sgn(a[static_cast<std::size_t>(k)]) <= 0) continue;
      const Integer& ak = variant == HongVariant::Standard ? a[static_cast<std::size_t>(k)] : a.leading();
      const long span = k - i;
      // Smallest e with |a_i| <= |a_k| 2^(e * span), starting from a bitsize estimate.
      long diff = static_cast<long>(bitsize(ai)) - static_cast<long>(bitsize(ak)) + 1;
      long e = diff >= 0 ? (diff + span - 1) / span : -((-diff) / span);
      auto fits = [&](long ee) {
        long sh = ee * span;
        if (sh >= 0) return ai <= shl(ak, static_cast<unsigned long>(sh));
        return shl(ai, static_cast<unsigned long>(-sh)) <= ak;
      };
      while (!fits(e)) ++e;
      while (fits(e - 1)) --e;
      if (!have || e < inner) inner = e;
      have = true;
    }
    if (!have) continue;  // cannot happen with a positive leading coefficient
    if (!any || inner > best) best = inner;
    any = true;
  }
  if (!any) return Dyadic();
  return Dyadic::pow2(best + 1);
}

/// Cauchy's bound 1 + max |a_i| / |a_d| on all root moduli.
inline Rational cauchy_bound(const IntPolynomial& a) {
  Integer m(0);
  for (int i = 0; i < a.degree(); ++i) m = std::max(m, Integer(abs(a[static_cast<std::size_t>(i)])));
  Rational r(m, abs(a.leading()));
  r.canonicalize();
  return r + 1;
}

/// [-B-, B+] from Hong's bound on A(x) and A(-x), each at least 1.
inline DyadicInterval root_bound_interval(const IntPolynomial& a) {
  Dyadic pos = hong_bound(a);
  Dyadic neg = hong_bound(negate_variable(a));
  Dyadic one(1);
  return DyadicInterval(-(neg < one ? one : neg), pos < one ? one : pos);
}

// -- Counters ---------------------------------------------------------------

/// Sign variations of a coefficient vector, zeros skipped.
inline int coefficient_variations(const std::vector<Integer>& v) {
  int count = 0;
  int last = 0;
  for (const auto& c : v) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

/// Descartes bound for roots in (0, 1) of a polynomial given on the unit
/// interval: variations of (x+1)^d Q(1/(x+1)).
inline int descartes_unit_count(const std::vector<Integer>& q) {
  std::vector<Integer> t(q.rbegin(), q.rend());
  taylor_shift_one(t);
  return coefficient_variations(t);
}

/// Upper bound on the roots of A in the open interval I, exact when 0 or 1
/// and congruent to the true count mod 2.
inline int count_descartes(const IntPolynomial& a, const DyadicInterval& iv) {
  return descartes_unit_count(affine_to_unit(a, iv));
}

/// Bernstein-coefficient sign variations; same contract as count_descartes.
inline int count_bernstein(const std::vector<Integer>& bernstein_coeffs) {
  return coefficient_variations(bernstein_coeffs);
}

/// Midpoint de Casteljau split of integer Bernstein coefficients, both halves
/// scaled by 2^d and stripped of common powers of two.
inline std::pair<std::vector<Integer>, std::vector<Integer>> de_casteljau_split(const std::vector<Integer>& b) {
  const std::size_t n = b.size();
  std::vector<Integer> work(b);
  std::vector<Integer> left(n), right(n);
  if (n == 0) return {left, right};
  const std::size_t d = n - 1;
  left[0] = work[0];
  right[d] = work[d];
  for (std::size_t j = 1; j <= d; ++j) {
    for (std::size_t i = 0; i + j <= d; ++i) mpz_add(work[i].get_mpz_t(), work[i].get_mpz_t(), work[i + 1].get_mpz_t());
    left[j] = work[0];
    right[d - j] = work[d - j];
  }
  for (std::size_t j = 0; j <= d; ++j) {
    mpz_mul_2exp(left[j].get_mpz_t(), left[j].get_mpz_t(), d - j);
    mpz_mul_2exp(right[j].get_mpz_t(), right[j].get_mpz_t(), j);
  }
  strip_pow2(left);
  strip_pow2(right);
  return {std::move(left), std::move(right)};
}

/// Bernstein coefficients of A on I (positive multiple).
inline std::vector<Integer> bernstein_on_interval(const IntPolynomial& a, const DyadicInterval& iv) {
  return bernstein_coefficients(affine_to_unit(a, iv));
}

// -- Subdivision solver -----------------------------------------------------

struct IsolateOptions {
  bool check_squarefree = true;
  /// Refine every isolating interval to this width and record Delta_j
  /// lower bounds in the stats (zero disables).
  Rational gap_eps{0};
  int depth_limit = 100000;
};

namespace detail {

struct SturmState {
  int v_lo;
  int v_hi;
};

struct Node {
  DyadicInterval iv;
  int depth;
  std::variant<SturmState, std::vector<Integer>> state;
};

}  // namespace detail

IsolationResult isolate(const IntPolynomial& a, const DyadicInterval& initial, CounterMethod method,
                        const IsolateOptions& opts = {});
RootInterval refine(const IntPolynomial& a, const RootInterval& r, const Rational& eps);

namespace detail {

inline int sign_right_of(const IntPolynomial& a, const IntPolynomial& da, const Dyadic& x) {
  int s = sign_at(a, x);
  return s != 0 ? s : sign_at(da, x);
}

inline int sign_left_of(const IntPolynomial& a, const IntPolynomial& da, const Dyadic& x) {
  int s = sign_at(a, x);
  return s != 0 ? s : -sign_at(da, x);
}

/// Lower bounds on the distance from each root to its nearest neighbour,
/// from intervals already refined and sorted.
inline std::vector<Rational> neighbour_gaps(const std::vector<RootInterval>& roots, const Rational& fallback) {
  std::vector<Rational> gaps;
  for (std::size_t j = 0; j < roots.size(); ++j) {
    std::optional<Rational> g;
    if (j > 0) g = roots[j].interval.lo.to_rational() - roots[j - 1].interval.hi.to_rational();
    if (j + 1 < roots.size()) {
      Rational r = roots[j + 1].interval.lo.to_rational() - roots[j].interval.hi.to_rational();
      if (!g || r < *g) g = r;
    }
    gaps.push_back(g ? *g : fallback);
  }
  return gaps;
}

}  // namespace detail

/// Isolate the real roots of a squarefree A inside I0 (endpoints must not be
/// roots). Depth-first; counts are taken on open intervals; a midpoint that
/// is a root is reported exactly and both open halves continue.
inline IsolationResult isolate(const IntPolynomial& a, const DyadicInterval& initial, CounterMethod method,
                               const IsolateOptions& opts) {
  if (a.is_zero()) throw std::domain_error("isolate: zero polynomial");
  if (initial.is_point()) throw std::invalid_argument("isolate: degenerate initial interval");
  if (sign_at(a, initial.lo) == 0 || sign_at(a, initial.hi) == 0) {
    throw EndpointRootError("isolate: an endpoint of the initial interval is a root");
  }
  IsolationResult result;
  result.stats.bound_B = initial.width();
  if (a.degree() < 1) {
    result.stats.tree_nodes = 1;
    result.stats.counter_calls = 1;
    return result;
  }
  if (opts.check_squarefree && method != CounterMethod::Sturm && !is_squarefree(a)) {
    throw NotSquarefreeError("isolate: input is not squarefree");
  }

  std::optional<SturmSequence> sturm;
  if (method == CounterMethod::Sturm) sturm.emplace(a);  // throws NotSquarefreeError

  std::vector<detail::Node> stack;
  switch (method) {
    case CounterMethod::Sturm:
      stack.push_back({initial, 0, detail::SturmState{sturm->variations_at(initial.lo), sturm->variations_at(initial.hi)}});
      break;
    case CounterMethod::Descartes:
      stack.push_back({initial, 0, affine_to_unit(a, initial)});
      break;
    case CounterMethod::Bernstein:
      stack.push_back({initial, 0, bernstein_on_interval(a, initial)});
      break;
  }

  auto& stats = result.stats;
  while (!stack.empty()) {
    detail::Node node = std::move(stack.back());
    stack.pop_back();
    ++stats.tree_nodes;
    stats.max_depth = std::max(stats.max_depth, node.depth);

    int count = 0;
    ++stats.counter_calls;
    switch (method) {
      case CounterMethod::Sturm: {
        const auto& st = std::get<detail::SturmState>(node.state);
        // Open interval: a root at hi would otherwise be included.
        count = st.v_lo - st.v_hi - (sign_at(a, node.iv.hi) == 0 ? 1 : 0);
        break;
      }
      case CounterMethod::Descartes:
        count = descartes_unit_count(std::get<std::vector<Integer>>(node.state));
        break;
      case CounterMethod::Bernstein:
        count = count_bernstein(std::get<std::vector<Integer>>(node.state));
        break;
    }
    if (count == 0) continue;
    if (count == 1) {
      result.roots.push_back({node.iv, std::nullopt, node.depth});
      continue;
    }
    if (node.depth >= opts.depth_limit) {
      throw std::runtime_error("isolate: depth limit reached (input not squarefree?)");
    }

    Dyadic mid = node.iv.mid();
    DyadicInterval left(node.iv.lo, mid);
    DyadicInterval right(mid, node.iv.hi);
    bool mid_is_root = false;
    detail::Node ln{left, node.depth + 1, {}};
    detail::Node rn{right, node.depth + 1, {}};
    switch (method) {
      case CounterMethod::Sturm: {
        const auto& st = std::get<detail::SturmState>(node.state);
        int v_mid = sturm->variations_at(mid);
        mid_is_root = sign_at(a, mid) == 0;
        ln.state = detail::SturmState{st.v_lo, v_mid};
        rn.state = detail::SturmState{v_mid, st.v_hi};
        break;
      }
      case CounterMethod::Descartes: {
        auto& q = std::get<std::vector<Integer>>(node.state);
        // Q_L(x) = 2^d Q(x/2), Q_R(x) = Q_L(x + 1).
        scale_down_pow2(q, 1);
        strip_pow2(q);
        std::vector<Integer> qr = q;
        taylor_shift_one(qr);
        mid_is_root = qr[0] == 0;
        ln.state = std::move(q);
        rn.state = std::move(qr);
        break;
      }
      case CounterMethod::Bernstein: {
        auto halves = de_casteljau_split(std::get<std::vector<Integer>>(node.state));
        mid_is_root = halves.second[0] == 0;
        ln.state = std::move(halves.first);
        rn.state = std::move(halves.second);
        break;
      }
    }
    if (mid_is_root) {
      result.roots.push_back({DyadicInterval(mid, mid), mid, node.depth + 1});
    }
    stack.push_back(std::move(rn));
    stack.push_back(std::move(ln));
  }

  std::sort(result.roots.begin(), result.roots.end(),
            [](const RootInterval& x, const RootInterval& y) { return x.interval.lo < y.interval.lo ||
                                                                      (x.interval.lo == y.interval.lo && x.interval.hi < y.interval.hi); });

  if (opts.gap_eps > 0 && !result.roots.empty()) {
    for (auto& r : result.roots) r = refine(a, r, opts.gap_eps);
    stats.gaps = detail::neighbour_gaps(result.roots, initial.width().to_rational());
    Rational m = *std::min_element(stats.gaps.begin(), stats.gaps.end());
    stats.sep_bitsize = m > 0 ? static_cast<long>(std::ceil(std::fabs(log2_abs(m)))) : 0;
  }
  return result;
}

/// Isolate every real root using the Hong-bound interval.
inline IsolationResult isolate_real_roots(const IntPolynomial& a, CounterMethod method, const IsolateOptions& opts = {}) {
  return isolate(a, root_bound_interval(a), method, opts);
}

/// Bisect an isolating interval down to width <= eps. Endpoints may be roots
/// found exactly elsewhere; one-sided signs are taken from A' there.
inline RootInterval refine(const IntPolynomial& a, const RootInterval& r, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("refine: eps must be positive");
  if (r.is_exact()) return r;
  IntPolynomial da = derivative(a);
  Dyadic lo = r.interval.lo;
  Dyadic hi = r.interval.hi;
  int s_lo = detail::sign_right_of(a, da, lo);
  int s_hi = detail::sign_left_of(a, da, hi);
  if (s_lo == s_hi || s_lo == 0) throw std::invalid_argument("refine: interval does not bracket a simple root");
  int depth = r.depth;
  while ((hi - lo).to_rational() > eps) {
    Dyadic mid = midpoint(lo, hi);
    ++depth;
    int s = sign_at(a, mid);
    if (s == 0) return {DyadicInterval(mid, mid), mid, depth};
    if (s == s_lo) lo = mid;
    else hi = mid;
  }
  return {DyadicInterval(lo, hi), std::nullopt, depth};
}

struct SeparationBracket {
  Rational lower;
  Rational upper;
};

/// Brackets on min (alpha_{i+1} - alpha_i) over consecutive real roots, with
/// upper - lower <= 2 eps.
inline SeparationBracket min_separation(const IntPolynomial& a, const Rational& eps,
                                        CounterMethod method = CounterMethod::Descartes) {
  auto res = isolate_real_roots(a, method);
  if (res.roots.size() < 2) throw std::domain_error("min_separation: fewer than 2 real roots");
  std::vector<RootInterval> refined;
  refined.reserve(res.roots.size());
  for (const auto& r : res.roots) refined.push_back(refine(a, r, eps));
  std::optional<Rational> lower, upper;
  for (std::size_t i = 0; i + 1 < refined.size(); ++i) {
    Rational lo = refined[i + 1].interval.lo.to_rational() - refined[i].interval.hi.to_rational();
    Rational hi = refined[i + 1].interval.hi.to_rational() - refined[i].interval.lo.to_rational();
    if (!lower || lo < *lower) lower = lo;
    if (!upper || hi < *upper) upper = hi;
  }
  return {*lower, *upper};
}

/// sum_j ceil(lg(2W / Delta_j)) bounded above by 2r + r lg W - sum_j lg Delta_j,
/// the subdivision count of r independent binary searches in a width-W
/// interval. Returns the right-hand side.
inline double binary_search_tree_bound(const Rational& width, const std::vector<Rational>& gaps) {
  double r = static_cast<double>(gaps.size());
  double s = 2.0 * r + r * log2_abs(width);
  for (const auto& g : gaps) s -= log2_abs(g);
  return s;
}

}  // namespace rootstat
