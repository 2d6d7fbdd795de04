#pragma once

// Braid words on n+1 strands. Generator sigma_i (i = 0..n-1) crosses strands
// i and i+1. Words act left to right.

#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bigmono::braid {

struct Letter
{
  std::uint32_t generator = 0;
  bool inverse = false;

  bool operator==(const Letter &) const = default;
};

/// perm[s] is the original strand sitting in slot s after the word.
using Permutation = std::vector<std::uint32_t>;

inline Permutation identity_permutation(std::size_t strands)
{
  Permutation p(strands);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

/// (a o b)[s] = a[b[s]]; this is the image of the concatenation ab.
inline Permutation compose(const Permutation &a, const Permutation &b)
{
  if (a.size() != b.size())
    throw std::invalid_argument("permutation size mismatch");
  Permutation out(a.size());
  for (std::size_t s = 0; s < a.size(); ++s)
    out[s] = a[b[s]];
  return out;
}

inline bool is_identity(const Permutation &p)
{
  for (std::size_t s = 0; s < p.size(); ++s)
    if (p[s] != s)
      return false;
  return true;
}

class BraidWord
{
public:
  explicit BraidWord(std::size_t strands) : strands_(strands)
  {
    if (strands < 2)
      throw std::invalid_argument("a braid needs at least two strands");
  }

  BraidWord(std::size_t strands, std::vector<Letter> letters) : BraidWord(strands)
  {
    for (const auto &x : letters)
      push_back(x);
  }

  std::size_t strands() const { return strands_; }
  const std::vector<Letter> &letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push_back(Letter x)
  {
    if (x.generator + 1 >= strands_)
      throw std::out_of_range("generator index " + std::to_string(x.generator) +
                              " out of range for " + std::to_string(strands_) + " strands");
    letters_.push_back(x);
  }

  BraidWord &append(std::uint32_t generator, bool inverse = false)
  {
    push_back({generator, inverse});
    return *this;
  }

  bool operator==(const BraidWord &) const = default;

private:
  std::size_t strands_;
  std::vector<Letter> letters_;
};

inline Permutation underlying_permutation(const BraidWord &w)
{
  Permutation p = identity_permutation(w.strands());
  for (const auto &x : w.letters())
    std::swap(p[x.generator], p[x.generator + 1]);
  return p;
}

inline bool is_pure(const BraidWord &w) { return is_identity(underlying_permutation(w)); }

inline BraidWord concat(const BraidWord &a, const BraidWord &b)
{
  if (a.strands() != b.strands())
    throw std::invalid_argument("strand-count mismatch in concat");
  BraidWord out = a;
  for (const auto &x : b.letters())
    out.push_back(x);
  return out;
}

inline BraidWord invert(const BraidWord &w)
{
  BraidWord out(w.strands());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back({it->generator, !it->inverse});
  return out;
}

inline BraidWord free_reduce(const BraidWord &w)
{
  std::vector<Letter> stack;
  for (const auto &x : w.letters()) {
    if (!stack.empty() && stack.back().generator == x.generator &&
        stack.back().inverse != x.inverse)
      stack.pop_back();
    else
      stack.push_back(x);
  }
  return BraidWord(w.strands(), std::move(stack));
}

inline BraidWord power(const BraidWord &w, unsigned k)
{
  BraidWord out(w.strands());
  for (unsigned i = 0; i < k; ++i)
    out = concat(out, w);
  return out;
}

/// [a, b] = a b a^{-1} b^{-1}
inline BraidWord commutator(const BraidWord &a, const BraidWord &b)
{
  return concat(concat(a, b), concat(invert(a), invert(b)));
}

/// sigma_i^2 on the given number of strands.
inline BraidWord generator_square(std::uint32_t i, std::size_t strands)
{
  return BraidWord(strands).append(i).append(i);
}

/// A_ij = (s_{j-1} ... s_{i+1}) s_i^2 (s_{j-1} ... s_{i+1})^{-1}, 0 <= i < j <= n.
inline BraidWord pure_generator(std::uint32_t i, std::uint32_t j, std::size_t n)
{
  if (!(i < j && j <= n))
    throw std::out_of_range("pure generator needs 0 <= i < j <= n");
  BraidWord conj(n + 1);
  for (std::uint32_t g = j - 1; g > i; --g)
    conj.append(g);
  return concat(concat(conj, generator_square(i, n + 1)), invert(conj));
}

/// All A_ij in lexicographic (i, j) order.
inline std::vector<BraidWord> pure_generators(std::size_t n)
{
  std::vector<BraidWord> out;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j <= n; ++j)
      out.push_back(pure_generator(i, j, n));
  return out;
}

/// (s_first ... s_last)(s_first ... s_{last-1}) ... (s_first).
inline BraidWord half_twist(std::uint32_t first, std::uint32_t last, std::size_t strands)
{
  if (first > last || last + 1 >= strands)
    throw std::out_of_range("half twist generator range out of bounds");
  BraidWord w(strands);
  for (std::uint32_t top = last + 1; top-- > first;)
    for (std::uint32_t g = first; g <= top; ++g)
      w.append(g);
  return w;
}

/// Whitespace-separated signed generator indices; a leading '-' marks an
/// inverse letter (so "-0" is sigma_0^{-1}).
inline BraidWord parse_word(const std::string &text, std::size_t strands)
{
  BraidWord w(strands);
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    bool inv = false;
    std::size_t pos = 0;
    if (tok[0] == '-' || tok[0] == '+') {
      inv = tok[0] == '-';
      pos = 1;
    }
    if (pos >= tok.size() || tok.find_first_not_of("0123456789", pos) != std::string::npos)
      throw std::invalid_argument("malformed braid letter '" + tok + "'");
    w.push_back({static_cast<std::uint32_t>(std::stoul(tok.substr(pos))), inv});
  }
  return w;
}

inline std::string format_word(const BraidWord &w)
{
  std::string out;
  for (const auto &x : w.letters()) {
    if (!out.empty())
      out += ' ';
    if (x.inverse)
      out += '-';
    out += std::to_string(x.generator);
  }
  return out;
}

template <class Rng>
BraidWord random_word(Rng &rng, std::size_t strands, std::size_t length)
{
  std::uniform_int_distribution<std::uint32_t> gen(0, static_cast<std::uint32_t>(strands - 2));
  std::bernoulli_distribution inv(0.5);
  BraidWord w(strands);
  for (std::size_t k = 0; k < length; ++k)
    w.push_back({gen(rng), inv(rng)});
  return w;
}

} // namespace bigmono::braid
