#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's arithmetic, so agreement is a real cross-check.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using boost::multiprecision::cpp_int;

inline bool is_prime(std::uint32_t n)
{
  if (n < 2)
    return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

/// Unitary iff some power of p is -1 mod l.
inline bool unitary_by_powers(std::uint32_t p, std::uint32_t l)
{
  std::uint64_t x = p % l;
  for (std::uint32_t j = 1; j < l; ++j) {
    if (x == l - 1)
      return true;
    x = x * p % l;
  }
  return false;
}

inline cpp_int ipow(cpp_int b, unsigned e)
{
  cpp_int r = 1;
  while (e--)
    r *= b;
  return r;
}

/// |SL(m,q)| = q^{m(m-1)/2} prod_{i=2..m} (q^i - 1).
inline cpp_int sl_order(unsigned m, const cpp_int &q)
{
  cpp_int r = ipow(q, m * (m - 1) / 2);
  for (unsigned i = 2; i <= m; ++i)
    r *= ipow(q, i) - 1;
  return r;
}

/// |SU(m,q)| = q^{m(m-1)/2} prod_{i=2..m} (q^i - (-1)^i).
inline cpp_int su_order(unsigned m, const cpp_int &q)
{
  cpp_int r = ipow(q, m * (m - 1) / 2);
  for (unsigned i = 2; i <= m; ++i)
    r *= ipow(q, i) - (i % 2 == 0 ? 1 : -1);
  return r;
}

/// Matrices over a small field whose elements are 0..Q-1, with caller
/// supplied add/mul tables.
struct SmallField
{
  unsigned Q = 0;
  std::vector<unsigned> add, mul;
  unsigned a(unsigned x, unsigned y) const { return add[x * Q + y]; }
  unsigned m(unsigned x, unsigned y) const { return mul[x * Q + y]; }
};

inline SmallField prime_field(unsigned p)
{
  SmallField F;
  F.Q = p;
  F.add.resize(p * p);
  F.mul.resize(p * p);
  for (unsigned x = 0; x < p; ++x)
    for (unsigned y = 0; y < p; ++y) {
      F.add[x * p + y] = (x + y) % p;
      F.mul[x * p + y] = (x * y) % p;
    }
  return F;
}

/// F_9 = F_3[i], i^2 = -1; element a + b i is stored as a + 3b.
inline SmallField f9()
{
  SmallField F;
  F.Q = 9;
  F.add.resize(81);
  F.mul.resize(81);
  for (unsigned x = 0; x < 9; ++x)
    for (unsigned y = 0; y < 9; ++y) {
      const unsigned a = x % 3, b = x / 3, c = y % 3, d = y / 3;
      F.add[x * 9 + y] = (a + c) % 3 + 3 * ((b + d) % 3);
      F.mul[x * 9 + y] = (a * c + 2 * b * d) % 3 + 3 * ((a * d + b * c) % 3);
    }
  return F;
}

using Mat = std::vector<unsigned>;

inline Mat mat_mul(const SmallField &F, unsigned n, const Mat &x, const Mat &y)
{
  Mat r(n * n, 0);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      unsigned s = 0;
      for (unsigned k = 0; k < n; ++k)
        s = F.a(s, F.m(x[i * n + k], y[k * n + j]));
      r[i * n + j] = s;
    }
  return r;
}

/// Breadth-first closure of the generated monoid (a group, being finite).
inline std::size_t closure_size(const SmallField &F, unsigned n, const std::vector<Mat> &gens)
{
  Mat id(n * n, 0);
  for (unsigned i = 0; i < n; ++i)
    id[i * n + i] = 1;
  std::set<Mat> seen{id};
  std::vector<Mat> frontier{id};
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto &x : frontier)
      for (const auto &g : gens) {
        Mat y = mat_mul(F, n, x, g);
        if (seen.insert(y).second)
          next.push_back(std::move(y));
      }
    frontier.swap(next);
  }
  return seen.size();
}

} // namespace oracle
