#pragma once

// Matrices over a TableField as flat arrays of 16-bit element indices, plus
// breadth-first closure enumeration with a byte-arena hash set.

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "bigmono/engine/table_field.hpp"
#include "bigmono/linalg.hpp"

namespace bigmono::engine {

inline constexpr std::size_t kMaxDim = 8;

/// Row-major square matrix of dimension <= kMaxDim.
using Element = std::array<std::uint16_t, kMaxDim * kMaxDim>;

/// Arithmetic on Elements of one dimension over one field.
class MatrixOps
{
public:
  MatrixOps(std::shared_ptr<const TableField> field, std::size_t dim)
    : field_(std::move(field)), dim_(dim), q_(field_->order()), add_(field_->add_table()),
      mul_(field_->mul_table())
  {
    if (dim_ == 0 || dim_ > kMaxDim)
      throw std::invalid_argument("matrix dimension must be 1.." + std::to_string(kMaxDim));
  }

  const TableField &field() const { return *field_; }
  const std::shared_ptr<const TableField> &field_ptr() const { return field_; }
  std::size_t dim() const { return dim_; }
  std::size_t entries() const { return dim_ * dim_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const
  {
    return add_ ? add_[a * q_ + b] : field_->add(a, b);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
  {
    return mul_ ? mul_[a * q_ + b] : field_->mul(a, b);
  }

  Element identity() const
  {
    Element e{};
    for (std::size_t i = 0; i < dim_; ++i)
      e[i * dim_ + i] = 1;
    return e;
  }

  bool is_identity(const Element &a) const
  {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        if (a[i * dim_ + j] != (i == j ? 1 : 0))
          return false;
    return true;
  }

  bool equal(const Element &a, const Element &b) const
  {
    return std::memcmp(a.data(), b.data(), entries() * sizeof(std::uint16_t)) == 0;
  }

  void multiply(const std::uint16_t *a, const std::uint16_t *b, std::uint16_t *out) const
  {
    const std::size_t d = dim_;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        std::uint32_t s = 0;
        for (std::size_t k = 0; k < d; ++k) {
          const std::uint32_t x = a[i * d + k];
          if (x != 0)
            s = add(s, mul(x, b[k * d + j]));
        }
        out[i * d + j] = static_cast<std::uint16_t>(s);
      }
  }

  Element multiply(const Element &a, const Element &b) const
  {
    Element out{};
    multiply(a.data(), b.data(), out.data());
    return out;
  }

  Element inverse(const Element &a) const
  {
    linalg::Matrix<std::uint32_t> m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        m(i, j) = a[i * dim_ + j];
    auto inv = linalg::inverse(*field_, m);
    if (!inv)
      throw std::domain_error("singular group element");
    return from_matrix(*inv);
  }

  /// Row vector times matrix.
  void apply(const std::uint16_t *v, const std::uint16_t *a, std::uint16_t *out) const
  {
    const std::size_t d = dim_;
    for (std::size_t j = 0; j < d; ++j) {
      std::uint32_t s = 0;
      for (std::size_t k = 0; k < d; ++k)
        if (v[k] != 0)
          s = add(s, mul(v[k], a[k * d + j]));
      out[j] = static_cast<std::uint16_t>(s);
    }
  }

  Element from_matrix(const linalg::Matrix<std::uint32_t> &m) const
  {
    if (m.rows() != dim_ || m.cols() != dim_)
      throw std::invalid_argument("matrix has wrong size");
    Element e{};
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        e[i * dim_ + j] = static_cast<std::uint16_t>(m(i, j));
    return e;
  }

  linalg::Matrix<std::uint32_t> to_matrix(const Element &e) const
  {
    linalg::Matrix<std::uint32_t> m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        m(i, j) = e[i * dim_ + j];
    return m;
  }

  std::uint32_t determinant(const Element &e) const
  {
    return linalg::determinant(*field_, to_matrix(e));
  }

  /// Canonical encoding: row-major entries, each as little-endian base-p
  /// digit bytes (two bytes per digit when p > 255).
  std::size_t encoded_size() const
  {
    return entries() * field_->degree() * (field_->p() > 255 ? 2 : 1);
  }

  void encode(const Element &e, std::uint8_t *out) const
  {
    const std::uint32_t p = field_->p();
    const bool wide = p > 255;
    for (std::size_t i = 0; i < entries(); ++i) {
      std::uint32_t x = e[i];
      for (std::size_t k = 0; k < field_->degree(); ++k) {
        const std::uint32_t digit = x % p;
        x /= p;
        *out++ = static_cast<std::uint8_t>(digit & 0xff);
        if (wide)
          *out++ = static_cast<std::uint8_t>(digit >> 8);
      }
    }
  }

  Element decode(const std::uint8_t *in) const
  {
    const std::uint32_t p = field_->p();
    const bool wide = p > 255;
    Element e{};
    for (std::size_t i = 0; i < entries(); ++i) {
      std::uint32_t x = 0, scale = 1;
      for (std::size_t k = 0; k < field_->degree(); ++k) {
        std::uint32_t digit = *in++;
        if (wide)
          digit |= static_cast<std::uint32_t>(*in++) << 8;
        x += digit * scale;
        scale *= p;
      }
      e[i] = static_cast<std::uint16_t>(x);
    }
    return e;
  }

private:
  std::shared_ptr<const TableField> field_;
  std::size_t dim_;
  std::uint32_t q_;
  const std::uint16_t *add_;
  const std::uint16_t *mul_;
};

struct MatrixGroup
{
  std::shared_ptr<const MatrixOps> ops;
  std::vector<Element> generators;
};

struct ClosureResult
{
  bool overflow = false;
  std::uint64_t size = 0;
  /// Canonical encodings of all elements, back to back (empty on overflow).
  std::vector<std::uint8_t> arena;

  Element element(const MatrixOps &ops, std::uint64_t i) const
  {
    return ops.decode(arena.data() + i * ops.encoded_size());
  }
};

/// Breadth-first closure of {1} under left multiplication by the
/// generators. Stops with overflow once more than `cap` elements are found.
inline ClosureResult enumerate_closure(const MatrixGroup &g, std::uint64_t cap)
{
  const MatrixOps &ops = *g.ops;
  const std::size_t width = ops.encoded_size();
  ClosureResult res;
  std::vector<std::uint8_t> &arena = res.arena;

  struct Hash
  {
    const std::vector<std::uint8_t> *arena;
    std::size_t width;
    std::size_t operator()(std::uint64_t i) const
    {
      return std::hash<std::string_view>()(std::string_view(
          reinterpret_cast<const char *>(arena->data() + i * width), width));
    }
  };
  struct Eq
  {
    const std::vector<std::uint8_t> *arena;
    std::size_t width;
    bool operator()(std::uint64_t a, std::uint64_t b) const
    {
      return std::memcmp(arena->data() + a * width, arena->data() + b * width, width) == 0;
    }
  };
  std::unordered_set<std::uint64_t, Hash, Eq> seen(1024, Hash{&arena, width}, Eq{&arena, width});

  auto insert = [&](const Element &e) {
    const std::uint64_t id = arena.size() / width;
    arena.resize(arena.size() + width);
    ops.encode(e, arena.data() + id * width);
    if (!seen.insert(id).second) {
      arena.resize(arena.size() - width);
      return false;
    }
    return true;
  };

  insert(ops.identity());
  for (std::uint64_t next = 0; next < arena.size() / width; ++next) {
    const Element x = ops.decode(arena.data() + next * width);
    for (const auto &gen : g.generators) {
      if (insert(ops.multiply(gen, x)) && arena.size() / width > cap) {
        res.overflow = true;
        res.size = arena.size() / width;
        arena.clear();
        arena.shrink_to_fit();
        return res;
      }
    }
  }
  res.size = arena.size() / width;
  return res;
}

} // namespace bigmono::engine
