#pragma once

// Hermitian-space utilities: classical group orders, the expected monodromy
// image, norm equations, extension matrices and their commutators, the
// zero-sum subsequence procedure, and the transvection radical of a
// degenerate form.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigmono/arith/algebra.hpp"
#include "bigmono/gassner.hpp"
#include "bigmono/linalg.hpp"

namespace bigmono::unitary {

using arith::AlgElem;
using arith::InvolutiveAlgebra;
using gassner::AlgMatrix;
using gassner::AlgVector;

// ---------------------------------------------------------------------------
// Classical group orders.

enum class ClassicalKind
{
  SL,
  SU,
  Sp
};

inline const char *to_string(ClassicalKind k)
{
  switch (k) {
  case ClassicalKind::SL:
    return "SL";
  case ClassicalKind::SU:
    return "SU";
  case ClassicalKind::Sp:
    return "Sp";
  }
  return "?";
}

inline bool is_odd_prime_power(const BigInt &q)
{
  if (q < 3 || (q & 1) == 0)
    return false;
  BigInt p = 3;
  while (p * p <= q && q % p != 0)
    p += 2;
  if (p * p > q)
    return true;
  BigInt r = q;
  while (r % p == 0)
    r /= p;
  return r == 1;
}

/// |SL(m,q)|, |SU(m,q)| (SU inside GL(m,q^2)) or |Sp(m,q)| (m even).
inline BigInt classical_group_order(ClassicalKind kind, std::uint32_t m, const BigInt &q)
{
  if (m < 1)
    throw std::invalid_argument("dimension must be positive");
  if (!is_odd_prime_power(q))
    throw std::invalid_argument("q must be an odd prime power");
  if (kind == ClassicalKind::Sp) {
    if (m % 2 != 0)
      throw std::invalid_argument("symplectic groups need even dimension");
    const std::uint32_t h = m / 2;
    BigInt order = boost::multiprecision::pow(q, h * h);
    for (std::uint32_t i = 1; i <= h; ++i)
      order *= boost::multiprecision::pow(q, 2 * i) - 1;
    return order;
  }
  BigInt order = boost::multiprecision::pow(q, m * (m - 1) / 2);
  for (std::uint32_t i = 2; i <= m; ++i) {
    BigInt qi = boost::multiprecision::pow(q, i);
    if (kind == ClassicalKind::SL || i % 2 == 0)
      order *= qi - 1;
    else
      order *= qi + 1;
  }
  return order;
}

// ---------------------------------------------------------------------------
// Zero-sum subsequences.

struct SubsequenceCertificate
{
  /// Strictly increasing indices into the monodromy vector.
  std::vector<std::size_t> indices;
  /// Which case of the pigeonhole argument produced it.
  std::string branch;
};

inline bool is_valid_certificate(const std::vector<std::uint32_t> &k, std::uint32_t d,
                                 const SubsequenceCertificate &c)
{
  if (c.indices.size() < 3)
    return false;
  std::uint64_t sum = 0;
  for (std::size_t t = 0; t < c.indices.size(); ++t) {
    if (c.indices[t] >= k.size() || (t > 0 && c.indices[t] <= c.indices[t - 1]))
      return false;
    if (k[c.indices[t]] % d == 0)
      return false;
    sum += k[c.indices[t]];
  }
  return sum % d == 0;
}

namespace detail {

inline SubsequenceCertificate make_certificate(std::vector<std::size_t> idx, std::string branch)
{
  std::sort(idx.begin(), idx.end());
  return {std::move(idx), std::move(branch)};
}

// All pairs a < b of prefix positions with equal prefix sums.
inline std::vector<std::pair<std::size_t, std::size_t>> prefix_collisions(
    const std::vector<std::uint32_t> &values, std::uint32_t d)
{
  std::vector<std::uint64_t> prefix{0};
  for (auto v : values)
    prefix.push_back((prefix.back() + v) % d);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t b = 1; b < prefix.size(); ++b)
    for (std::size_t a = 0; a < b; ++a)
      if (prefix[a] == prefix[b])
        pairs.emplace_back(a, b);
  return pairs;
}

} // namespace detail

/// Pigeonhole search for a subsequence of length >= 3 with sum 0 mod d and
/// no zero entries. Entries are grouped into blocks of equal value; prefix
/// sums over the first d+1 entries are scanned for collisions. A collision
/// (a, b) gives the block of sorted positions a..b-1. Two overlapping
/// collisions of length 2 force three equal entries of value d/2, which is
/// handled by a second pigeonhole in the quotient by {0, d/2}.
inline std::optional<SubsequenceCertificate> find_degenerate_subsequence(
    const std::vector<std::uint32_t> &k, std::uint32_t d)
{
  if (d < 3)
    throw std::invalid_argument("modulus must be at least 3");
  for (auto x : k)
    if (x % d == 0)
      throw std::invalid_argument("entries must be nonzero mod d");

  std::vector<std::size_t> order(k.size());
  for (std::size_t i = 0; i < k.size(); ++i)
    order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return k[x] % d < k[y] % d; });
  const std::size_t window = std::min<std::size_t>(order.size(), d + 1);
  std::vector<std::uint32_t> values;
  for (std::size_t s = 0; s < window; ++s)
    values.push_back(k[order[s]] % d);

  auto positions = [&](std::size_t a, std::size_t b) {
    std::vector<std::size_t> out;
    for (std::size_t s = a; s < b; ++s)
      out.push_back(order[s]);
    return out;
  };

  const auto pairs = detail::prefix_collisions(values, d);
  for (auto [a, b] : pairs)
    if (b - a >= 3)
      return detail::make_certificate(positions(a, b), "long-gap");
  for (std::size_t x = 0; x < pairs.size(); ++x)
    for (std::size_t y = x + 1; y < pairs.size(); ++y) {
      auto [a, b] = pairs[x];
      auto [c, e] = pairs[y];
      if (b <= c || e <= a) {
        auto idx = positions(a, b);
        auto more = positions(c, e);
        idx.insert(idx.end(), more.begin(), more.end());
        return detail::make_certificate(std::move(idx), "disjoint-pairs");
      }
    }
  // overlapping length-2 collisions (a, a+2), (a+1, a+3)
  for (auto [a, b] : pairs)
    for (auto [c, e] : pairs) {
      if (c != a + 1 || b != a + 2 || e != a + 3)
        continue;
      if (d % 2 != 0 || values[a] != d / 2 || values[a + 1] != d / 2 || values[a + 2] != d / 2)
        continue;
      const std::size_t m1 = order[a], m2 = order[a + 1], m3 = order[a + 2];
      std::vector<std::size_t> rest;
      for (std::size_t s = 0; s < order.size(); ++s)
        if (s < a || s > a + 2)
          rest.push_back(order[s]);
      if (rest.size() > d - 2)
        rest.resize(d - 2);
      // prefix sums of the remaining entries in Z/d modulo {0, d/2}
      std::vector<std::uint64_t> prefix{0};
      for (auto i : rest)
        prefix.push_back((prefix.back() + k[i]) % d);
      for (std::size_t j = 1; j < prefix.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
          const std::uint64_t diff = (prefix[j] + d - prefix[i]) % d;
          if (diff != 0 && diff != d / 2)
            continue;
          std::vector<std::size_t> idx(rest.begin() + static_cast<std::ptrdiff_t>(i),
                                       rest.begin() + static_cast<std::ptrdiff_t>(j));
          idx.push_back(m2);
          idx.push_back(m3);
          if (diff == d / 2)
            idx.push_back(m1);
          return detail::make_certificate(std::move(idx), "minus-one");
        }
    }
  return std::nullopt;
}

/// Exhaustive oracle over all subsets (k.size() <= 20).
inline std::optional<SubsequenceCertificate> exhaustive_degenerate_subsequence(
    const std::vector<std::uint32_t> &k, std::uint32_t d, bool proper)
{
  if (k.size() > 20)
    throw std::invalid_argument("exhaustive search limited to 20 entries");
  const std::uint32_t full = (1u << k.size()) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (proper && mask == full)
      continue;
    if (__builtin_popcount(mask) < 3)
      continue;
    SubsequenceCertificate c;
    for (std::size_t i = 0; i < k.size(); ++i)
      if (mask >> i & 1)
        c.indices.push_back(i);
    c.branch = "exhaustive";
    if (is_valid_certificate(k, d, c))
      return c;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Expected image.

enum class ImageKind
{
  SlU,
  SlL
};

inline const char *to_string(ImageKind k) { return k == ImageKind::SlU ? "SlU" : "SlL"; }

struct HypothesisReport
{
  std::size_t n = 0;
  bool n_at_least_l_plus_1 = false;
  bool n_at_least_l = false;
  std::optional<SubsequenceCertificate> certificate;
  bool satisfied() const { return n_at_least_l_plus_1 || n_at_least_l || certificate.has_value(); }
};

struct ExpectedImage
{
  ImageKind kind = ImageKind::SlU;
  std::uint32_t dim = 0;
  BigInt q;
  std::uint32_t l = 0;
  BigInt classical_order;
  BigInt order;
  HypothesisReport hypotheses;
};

/// Target group for the monodromy vector k (n+1 entries, matrices of size n).
inline ExpectedImage expected_image(const arith::SplittingData &sd, const std::vector<std::uint32_t> &k)
{
  if (k.size() < 3)
    throw std::invalid_argument("need at least three monodromy exponents");
  std::uint64_t sum = 0;
  for (auto x : k) {
    if (x == 0 || x >= sd.l)
      throw std::invalid_argument("monodromy exponents must lie in 1..l-1");
    sum += x;
  }
  if (sum % sd.l == 0)
    throw std::invalid_argument("exponent sum is 0 mod l: the form is degenerate");

  ExpectedImage e;
  e.kind = sd.kind == arith::AlgebraKind::Unitary ? ImageKind::SlU : ImageKind::SlL;
  e.dim = static_cast<std::uint32_t>(k.size() - 1);
  e.q = sd.q;
  e.l = sd.l;
  const BigInt divides = e.kind == ImageKind::SlU ? BigInt(sd.q + 1) : BigInt(sd.q - 1);
  if (divides % sd.l != 0)
    throw std::logic_error("l does not divide the order of the target torus");
  e.classical_order = classical_group_order(
      e.kind == ImageKind::SlU ? ClassicalKind::SU : ClassicalKind::SL, e.dim, sd.q);
  e.order = e.classical_order * sd.l;
  e.hypotheses.n = e.dim;
  e.hypotheses.n_at_least_l_plus_1 = e.dim >= sd.l + 1;
  e.hypotheses.n_at_least_l = e.dim >= sd.l;
  e.hypotheses.certificate = find_degenerate_subsequence(k, sd.l);
  if (!e.hypotheses.certificate && k.size() <= 20)
    e.hypotheses.certificate = exhaustive_degenerate_subsequence(k, sd.l, true);
  return e;
}

// ---------------------------------------------------------------------------
// Norms.

/// Least element (canonical order) with norm c; c must be fixed.
inline AlgElem norm_preimage(const InvolutiveAlgebra &alg, const AlgElem &c)
{
  if (!alg.is_fixed(c))
    throw std::invalid_argument("norm target must be fixed by the involution");
  if (!alg.is_unitary())
    return alg.from_components(alg.component(c, 0), alg.field().one());
  const std::uint64_t count = alg.element_count();
  for (std::uint64_t i = 0; i < count; ++i) {
    AlgElem x = alg.element_at(i);
    if (alg.norm(x) == c)
      return x;
  }
  throw std::logic_error("norm map is not surjective: arithmetic bug");
}

/// Least eta with xi xi-bar / 4 + eta eta-bar = 1.
inline AlgElem solve_norm_equation(const InvolutiveAlgebra &alg, const AlgElem &xi)
{
  if (!alg.is_unitary())
    throw std::invalid_argument("norm equation is posed over the unitary algebra");
  if (!alg.is_imaginary(xi))
    throw std::invalid_argument("xi must be imaginary");
  const AlgElem quarter = alg.inv(alg.from_int(4));
  const AlgElem target = alg.sub(alg.one(), alg.mul(alg.norm(xi), quarter));
  return norm_preimage(alg, target);
}

/// All imaginary elements, in canonical order.
inline std::vector<AlgElem> imaginary_elements(const InvolutiveAlgebra &alg)
{
  std::vector<AlgElem> out;
  for (std::uint64_t i = 0; i < alg.element_count(); ++i) {
    AlgElem x = alg.element_at(i);
    if (alg.is_imaginary(x))
      out.push_back(x);
  }
  return out;
}

template <class Rng>
AlgElem random_imaginary(const InvolutiveAlgebra &alg, Rng &rng)
{
  const AlgElem x = alg.random(rng);
  return alg.mul(alg.sub(x, alg.involve(x)), alg.inv(alg.from_int(2)));
}

template <class Rng>
AlgElem random_fixed(const InvolutiveAlgebra &alg, Rng &rng)
{
  const AlgElem x = alg.random(rng);
  return alg.mul(alg.add(x, alg.involve(x)), alg.inv(alg.from_int(2)));
}

// ---------------------------------------------------------------------------
// Extension matrices.

/// m x m identity with top row (1, conj(alpha), lambda) and last column
/// (lambda, alpha, 1); alpha has m-2 entries.
inline AlgMatrix extension_matrix(const InvolutiveAlgebra &alg, const AlgVector &alpha,
                                  const AlgElem &lambda)
{
  const std::size_t m = alpha.size() + 2;
  AlgMatrix t = linalg::identity(alg, m);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    t(0, i + 1) = alg.involve(alpha[i]);
    t(i + 1, m - 1) = alpha[i];
  }
  t(0, m - 1) = lambda;
  return t;
}

/// The inverse as displayed: entries negated, top-right 1 - lambda.
inline AlgMatrix displayed_extension_inverse(const InvolutiveAlgebra &alg, const AlgVector &alpha,
                                             const AlgElem &lambda)
{
  AlgVector neg(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i)
    neg[i] = alg.neg(alpha[i]);
  return extension_matrix(alg, neg, alg.sub(alg.one(), lambda));
}

/// sum conj(alpha_i) alpha_i
inline AlgElem hermitian_square(const InvolutiveAlgebra &alg, const AlgVector &alpha)
{
  AlgElem s = alg.zero();
  for (const auto &a : alpha)
    s = alg.add(s, alg.norm(a));
  return s;
}

/// sum conj(alpha_i) beta_i - alpha_i conj(beta_i)
inline AlgElem commutator_entry(const InvolutiveAlgebra &alg, const AlgVector &alpha,
                                const AlgVector &beta)
{
  AlgElem s = alg.zero();
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    s = alg.add(s, alg.mul(alg.involve(alpha[i]), beta[i]));
    s = alg.sub(s, alg.mul(alpha[i], alg.involve(beta[i])));
  }
  return s;
}

/// Hermitian Gram matrix (h(x,y) = x^* H y) in the basis (v, e_2..e_{m-1},
/// eps) with v isotropic, e orthonormal and h(v, eps) = -1. The displayed
/// shape is unitary for it exactly when lambda + conj(lambda) = sum alpha
/// conj(alpha).
inline AlgMatrix extension_gram(const InvolutiveAlgebra &alg, std::size_t m, const AlgElem &corner)
{
  AlgMatrix h = linalg::identity(alg, m);
  h(0, 0) = alg.zero();
  h(0, m - 1) = alg.neg(alg.one());
  h(m - 1, 0) = alg.neg(alg.one());
  h(m - 1, m - 1) = corner;
  return h;
}

inline AlgMatrix group_commutator(const InvolutiveAlgebra &alg, const AlgMatrix &a, const AlgMatrix &b)
{
  const AlgMatrix ai = *gassner::inverse(alg, a), bi = *gassner::inverse(alg, b);
  return linalg::multiply(alg, linalg::multiply(alg, a, b), linalg::multiply(alg, ai, bi));
}

/// A vector of m-2 entries with hermitian square 1: random leading entries,
/// last entry a norm preimage.
template <class Rng>
AlgVector random_normalized_vector(const InvolutiveAlgebra &alg, std::size_t len, Rng &rng)
{
  AlgVector v(len);
  for (std::size_t i = 0; i + 1 < len; ++i)
    v[i] = alg.random(rng);
  v[len - 1] = alg.zero();
  const AlgElem rest = alg.sub(alg.one(), hermitian_square(alg, v));
  v[len - 1] = norm_preimage(alg, rest);
  return v;
}

struct ExtensionReport
{
  std::size_t trials = 0;
  std::size_t commutator_matches = 0;
  std::size_t entry_imaginary = 0;
  /// Commutator differs from the identity exactly when the entry is nonzero.
  std::size_t nontrivial_iff_entry = 0;
  std::size_t unitary = 0;
  std::size_t displayed_inverse_matches = 0;
  /// True top-right inverse entry equals sum alpha conj(alpha) - lambda.
  std::size_t inverse_entry_formula = 0;
  std::vector<std::string> findings;

  bool all_pass() const
  {
    return commutator_matches == trials && entry_imaginary == trials &&
           nontrivial_iff_entry == trials && unitary == trials && inverse_entry_formula == trials;
  }
};

template <class Rng>
ExtensionReport verify_extension_identities(const InvolutiveAlgebra &alg, std::size_t m,
                                            std::size_t trials, Rng &rng)
{
  if (m <= 2)
    throw std::invalid_argument("extension matrices need m > 2");
  if (!alg.is_unitary())
    throw std::invalid_argument("extension identities are checked over the unitary algebra");
  const AlgElem half = alg.inv(alg.from_int(2));
  ExtensionReport rep;
  rep.trials = trials;
  const AlgMatrix id = linalg::identity(alg, m);
  for (std::size_t t = 0; t < trials; ++t) {
    const AlgVector alpha = random_normalized_vector(alg, m - 2, rng);
    AlgVector beta = random_normalized_vector(alg, m - 2, rng);
    if (t % 10 == 0)
      beta = alpha;
    const AlgElem lambda = alg.add(half, random_imaginary(alg, rng));
    const AlgElem mu = t % 10 == 0 ? lambda : alg.add(half, random_imaginary(alg, rng));
    const AlgMatrix ta = extension_matrix(alg, alpha, lambda);
    const AlgMatrix tb = extension_matrix(alg, beta, mu);

    const AlgElem entry = commutator_entry(alg, alpha, beta);
    const AlgMatrix comm = group_commutator(alg, ta, tb);
    AlgMatrix predicted = id;
    predicted(0, m - 1) = entry;
    rep.commutator_matches += comm == predicted;
    rep.entry_imaginary += alg.is_imaginary(entry);
    rep.nontrivial_iff_entry += (comm == id) == alg.is_zero(entry);

    const AlgMatrix gram = extension_gram(alg, m, random_fixed(alg, rng));
    rep.unitary += gassner::preserves_form(alg, ta, gram) && gassner::preserves_form(alg, tb, gram);

    const AlgMatrix inv = *gassner::inverse(alg, ta);
    rep.displayed_inverse_matches += inv == displayed_extension_inverse(alg, alpha, lambda);
    rep.inverse_entry_formula +=
        inv(0, m - 1) == alg.sub(hermitian_square(alg, alpha), lambda);
  }
  if (rep.displayed_inverse_matches != trials)
    rep.findings.push_back("displayed inverse differs from the true inverse in " +
                           std::to_string(trials - rep.displayed_inverse_matches) + " trials");
  return rep;
}

/// The choice alpha = (xi/2, eta, 0, ...), beta = (1, 0, ...) with eta from
/// the norm equation. `entry` is the top-right entry of [T_alpha, T_beta];
/// `swapped_entry` that of [T_beta, T_alpha].
struct NormConstruction
{
  AlgVector alpha, beta;
  AlgElem eta;
  AlgElem entry;
  AlgElem swapped_entry;
  bool normalized = false;
  bool entry_is_commutator = false;
};

inline NormConstruction norm_construction(const InvolutiveAlgebra &alg, const AlgElem &xi, std::size_t m)
{
  if (m < 4)
    throw std::invalid_argument("the construction needs two free coordinates (m >= 4)");
  NormConstruction c;
  c.eta = solve_norm_equation(alg, xi);
  c.alpha.assign(m - 2, alg.zero());
  c.beta.assign(m - 2, alg.zero());
  c.alpha[0] = alg.mul(xi, alg.inv(alg.from_int(2)));
  c.alpha[1] = c.eta;
  c.beta[0] = alg.one();
  c.normalized = hermitian_square(alg, c.alpha) == alg.one() &&
                 hermitian_square(alg, c.beta) == alg.one();
  const AlgElem half = alg.inv(alg.from_int(2));
  const AlgMatrix ta = extension_matrix(alg, c.alpha, half);
  const AlgMatrix tb = extension_matrix(alg, c.beta, half);
  const AlgMatrix comm = group_commutator(alg, ta, tb);
  c.entry = comm(0, m - 1);
  c.swapped_entry = group_commutator(alg, tb, ta)(0, m - 1);
  AlgMatrix predicted = linalg::identity(alg, m);
  predicted(0, m - 1) = commutator_entry(alg, c.alpha, c.beta);
  c.entry_is_commutator = comm == predicted;
  return c;
}

// ---------------------------------------------------------------------------
// Explicit frame for the extension argument.

/// Basis (v, e_1..e_{n-1}, eps_n) of the representation on n+2 strands
/// whose first n+1 colors multiply to 1. v spans the kernel on
/// <eps_0..eps_{n-1}> and is rescaled by conj(h(v, eps_n))^{-1}; the e_i are
/// an orthonormal basis of <eps_1..eps_{n-1}> for the hermitian form
/// iota * G; h(x, y) = x^* H y.
struct ExtensionFrame
{
  AlgElem iota;
  AlgMatrix hermitian;
  /// Columns are the frame vectors.
  AlgMatrix basis;
  /// Gram matrix of the hermitian form in the frame.
  AlgMatrix frame_gram;
  AlgElem pairing;
  bool v_isotropic = false;
  bool v_orthogonal_to_e = false;
  bool e_orthonormal = false;
};

inline AlgElem hermitian_pair(const InvolutiveAlgebra &alg, const AlgMatrix &h, const AlgVector &x,
                              const AlgVector &y)
{
  AlgElem s = alg.zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const AlgElem xi = alg.involve(x[i]);
    for (std::size_t j = 0; j < y.size(); ++j)
      s = alg.add(s, alg.mul(alg.mul(xi, h(i, j)), y[j]));
  }
  return s;
}

inline AlgElem least_imaginary_unit(const InvolutiveAlgebra &alg)
{
  if (!alg.is_unitary())
    return alg.from_components(alg.field().one(), alg.field().neg(alg.field().one()));
  for (std::uint64_t i = 1; i < alg.element_count(); ++i) {
    AlgElem x = alg.element_at(i);
    if (alg.is_imaginary(x))
      return x;
  }
  throw std::logic_error("no imaginary unit");
}

template <class Rng>
ExtensionFrame extension_frame(const gassner::GassnerContext &ctx, Rng &rng)
{
  const auto &alg = ctx.algebra();
  const std::size_t N = ctx.dimension();
  const std::size_t n = N - 1;
  if (n < 2)
    throw std::invalid_argument("frame needs at least four strands");
  std::uint64_t partial = 0;
  for (std::size_t i = 0; i <= n; ++i)
    partial += ctx.exponents()[i];
  if (partial % alg.l() != 0)
    throw std::invalid_argument("first n+1 colors must multiply to 1");

  ExtensionFrame fr;
  fr.iota = least_imaginary_unit(alg);
  const gassner::HermitianForm form = gassner::invariant_form(ctx);
  fr.hermitian = AlgMatrix(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      fr.hermitian(i, j) = alg.mul(fr.iota, form.gram(i, j));
  const AlgMatrix &H = fr.hermitian;

  AlgMatrix sub(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sub(i, j) = H(i, j);
  const auto ker = gassner::kernel(alg, sub);
  if (ker.dimension() != 1)
    throw std::runtime_error("restricted form does not have a one-dimensional kernel");
  AlgVector v(N, alg.zero());
  std::copy(ker.basis.front().begin(), ker.basis.front().end(), v.begin());
  const AlgVector eps = gassner::basis_vector(alg, N, n);
  const AlgElem a = hermitian_pair(alg, H, v, eps);
  const AlgElem scale = alg.inv(alg.involve(a));
  for (auto &x : v)
    x = alg.mul(x, scale);

  std::vector<AlgVector> pending;
  for (std::size_t i = 1; i < n; ++i)
    pending.push_back(gassner::basis_vector(alg, N, i));
  std::vector<AlgVector> ortho;
  while (!pending.empty()) {
    // w = u_0 + sum c_i u_i keeps u_0 replaceable by w
    AlgVector w;
    for (int attempt = 0; attempt < 1000 && w.empty(); ++attempt) {
      AlgVector cand = pending.front();
      for (std::size_t k = 1; k < pending.size() && attempt > 0; ++k) {
        const AlgElem c = alg.random(rng);
        for (std::size_t i = 0; i < N; ++i)
          cand[i] = alg.add(cand[i], alg.mul(c, pending[k][i]));
      }
      if (alg.is_unit(hermitian_pair(alg, H, cand, cand)))
        w = std::move(cand);
    }
    if (w.empty())
      throw std::runtime_error("no anisotropic vector found");
    const AlgElem s = alg.inv(norm_preimage(alg, hermitian_pair(alg, H, w, w)));
    for (auto &x : w)
      x = alg.mul(x, s);
    pending.erase(pending.begin());
    for (auto &u : pending) {
      const AlgElem c = hermitian_pair(alg, H, w, u);
      for (std::size_t i = 0; i < N; ++i)
        u[i] = alg.sub(u[i], alg.mul(w[i], c));
    }
    ortho.push_back(std::move(w));
  }

  fr.basis = AlgMatrix(N, N);
  for (std::size_t i = 0; i < N; ++i) {
    fr.basis(i, 0) = v[i];
    for (std::size_t j = 0; j < ortho.size(); ++j)
      fr.basis(i, j + 1) = ortho[j][i];
    fr.basis(i, N - 1) = eps[i];
  }
  fr.frame_gram =
      linalg::multiply(alg, linalg::multiply(alg, gassner::involve_transpose(alg, fr.basis), H), fr.basis);
  fr.pairing = fr.frame_gram(0, N - 1);
  fr.v_isotropic = alg.is_zero(fr.frame_gram(0, 0));
  fr.v_orthogonal_to_e = true;
  fr.e_orthonormal = true;
  for (std::size_t j = 1; j + 1 < N; ++j) {
    fr.v_orthogonal_to_e = fr.v_orthogonal_to_e && alg.is_zero(fr.frame_gram(0, j));
    for (std::size_t k = 1; k + 1 < N; ++k)
      fr.e_orthonormal =
          fr.e_orthonormal && fr.frame_gram(j, k) == (j == k ? alg.one() : alg.zero());
  }
  return fr;
}

// ---------------------------------------------------------------------------
// Transvection radical of a degenerate form.

/// Transvections I + v phi with phi(v) = 0, where v spans the form kernel.
/// phi is parametrized by its values on eps_1..eps_{n-1}; phi(eps_0) is then
/// forced, which needs v_0 to be a unit.
struct RadicalDescription
{
  AlgVector direction;
  std::size_t parameters = 0;

  AlgMatrix element(const InvolutiveAlgebra &alg, const AlgVector &values) const
  {
    const std::size_t n = direction.size();
    if (values.size() != n - 1)
      throw std::invalid_argument("radical element needs n-1 functional values");
    AlgVector phi(n, alg.zero());
    AlgElem acc = alg.zero();
    for (std::size_t j = 1; j < n; ++j) {
      phi[j] = values[j - 1];
      acc = alg.add(acc, alg.mul(values[j - 1], direction[j]));
    }
    phi[0] = alg.neg(alg.mul(acc, alg.inv(direction[0])));
    AlgMatrix t = linalg::identity(alg, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        t(i, j) = alg.add(t(i, j), alg.mul(direction[i], phi[j]));
    return t;
  }

  /// M - 1 = v phi with phi(v) = 0, checked per component.
  bool contains(const InvolutiveAlgebra &alg, const AlgMatrix &m) const
  {
    const std::size_t n = direction.size();
    const AlgMatrix nil = linalg::subtract(alg, m, linalg::identity(alg, n));
    for (std::size_t c = 0; c < alg.component_count(); ++c) {
      const auto nc = gassner::component(alg, nil, c);
      if (linalg::is_zero_matrix(alg.field(), nc))
        continue;
      const auto vc = gassner::component(alg, direction, c);
      std::size_t r = 0;
      while (r < n && alg.field().is_zero(vc[r]))
        ++r;
      const auto scale = alg.field().inv(vc[r]);
      gassner::FieldVector phi = nc.row(r);
      for (auto &x : phi)
        x = alg.field().mul(x, scale);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!(nc(i, j) == alg.field().mul(vc[i], phi[j])))
            return false;
      arith::FieldElem pv = alg.field().zero();
      for (std::size_t j = 0; j < n; ++j)
        pv = alg.field().add(pv, alg.field().mul(phi[j], vc[j]));
      if (!alg.field().is_zero(pv))
        return false;
    }
    return true;
  }
};

inline RadicalDescription radical_transvections(const gassner::GassnerContext &ctx,
                                                const gassner::HermitianForm &form)
{
  if (!form.degenerate())
    throw std::invalid_argument("radical transvections need a degenerate form");
  if (form.kernel.dimension() != 1)
    throw std::invalid_argument("form kernel is not a line");
  RadicalDescription d;
  d.direction = gassner::kernel_closed_form(ctx, true);
  if (!gassner::proportional(ctx.algebra(), d.direction, form.kernel.basis.front()))
    d.direction = form.kernel.basis.front();
  if (!ctx.algebra().is_unit(d.direction[0]))
    throw std::invalid_argument("kernel vector has a non-unit first coordinate");
  d.parameters = ctx.dimension() - 1;
  return d;
}

} // namespace bigmono::unitary
