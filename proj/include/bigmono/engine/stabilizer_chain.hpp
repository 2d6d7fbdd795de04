#pragma once

// Randomized Schreier-Sims for matrix groups acting on row vectors, with a
// deterministic verification pass over all Schreier generators. Transversal
// elements and their inverses are stored explicitly per orbit point.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "bigmono/arith/prime_field.hpp"
#include "bigmono/engine/group.hpp"

namespace bigmono::engine {

struct ChainOptions
{
  std::uint64_t seed = 1;
  std::size_t pool_size = 10;
  std::size_t warmup = 50;
  /// Consecutive random elements sifting to the identity before the
  /// randomized phase stops.
  std::size_t patience = 30;
  /// Upper bound on the total number of stored orbit points.
  std::uint64_t max_points = 8'000'000;
};

class ChainOverflow : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct SiftResult
{
  Element residue;
  /// Level at which sifting stopped; equals the chain depth when every
  /// base point was matched.
  std::size_t level = 0;
  bool identity = false;
};

class StabilizerChain
{
public:
  StabilizerChain(const MatrixGroup &group, const ChainOptions &opt = {})
    : ops_(group.ops), opt_(opt), rng_(opt.seed)
  {
    const MatrixOps &ops = *ops_;
    std::uint64_t points = 1;
    for (std::size_t i = 0; i < ops.dim(); ++i) {
      if (points > (std::uint64_t{1} << 63) / ops.field().order())
        throw std::overflow_error("point space too large to encode");
      points *= ops.field().order();
    }
    point_space_ = points;

    for (const auto &g : group.generators)
      if (!ops.is_identity(g))
        input_.push_back(g);
    if (input_.empty())
      return;
    build();
  }

  const MatrixOps &ops() const { return *ops_; }
  std::size_t depth() const { return levels_.size(); }

  BigInt order() const
  {
    BigInt o = 1;
    for (const auto &lv : levels_)
      o *= lv.points.size();
    return o;
  }

  std::vector<std::uint64_t> orbit_sizes() const
  {
    std::vector<std::uint64_t> out;
    for (const auto &lv : levels_)
      out.push_back(lv.points.size());
    return out;
  }

  std::size_t strong_generator_count() const { return gens_.size(); }
  std::size_t verification_rounds() const { return verification_rounds_; }
  std::uint64_t schreier_generators_checked() const { return schreier_checked_; }

  /// Sifts g from the given level downward.
  SiftResult sift(Element g, std::size_t from = 0) const
  {
    const MatrixOps &ops = *ops_;
    const std::size_t d = ops.dim();
    std::array<std::uint16_t, kMaxDim> img{};
    for (std::size_t L = from; L < levels_.size(); ++L) {
      const Level &lv = levels_[L];
      ops.apply(lv.base.data(), g.data(), img.data());
      const auto idx = lv.find(encode(img.data(), d));
      if (!idx)
        return {g, L, false};
      Element tmp{};
      ops.multiply(g.data(), lv.inv_at(*idx, ops.entries()), tmp.data());
      g = tmp;
    }
    return {g, levels_.size(), ops.is_identity(g)};
  }

  bool contains(const Element &g) const { return sift(g).identity; }

private:
  struct Level
  {
    std::array<std::uint16_t, kMaxDim> base{};
    std::vector<std::uint32_t> gens; // indices into gens_
    std::vector<std::uint64_t> points;
    std::vector<std::uint32_t> parent;
    std::vector<std::uint32_t> label;
    std::vector<std::uint16_t> fwd, inv; // transversal u_b and u_b^{-1}
    std::vector<std::int32_t> dense;
    std::unordered_map<std::uint64_t, std::uint32_t> sparse;

    std::optional<std::uint32_t> find(std::uint64_t key) const
    {
      if (!dense.empty()) {
        const std::int32_t v = dense[key];
        return v < 0 ? std::nullopt : std::optional<std::uint32_t>(static_cast<std::uint32_t>(v));
      }
      auto it = sparse.find(key);
      return it == sparse.end() ? std::nullopt : std::optional<std::uint32_t>(it->second);
    }
    const std::uint16_t *fwd_at(std::uint32_t i, std::size_t e) const { return fwd.data() + i * e; }
    const std::uint16_t *inv_at(std::uint32_t i, std::size_t e) const { return inv.data() + i * e; }
  };

  static constexpr std::uint32_t kNoParent = 0xffffffffu;
  static constexpr std::uint64_t kDenseLimit = 1u << 21;

  std::uint64_t encode(const std::uint16_t *v, std::size_t d) const
  {
    std::uint64_t key = 0;
    for (std::size_t j = d; j-- > 0;)
      key = key * ops_->field().order() + v[j];
    return key;
  }

  void decode(std::uint64_t key, std::uint16_t *v) const
  {
    for (std::size_t j = 0; j < ops_->dim(); ++j) {
      v[j] = static_cast<std::uint16_t>(key % ops_->field().order());
      key /= ops_->field().order();
    }
  }

  void record(Level &lv, std::uint64_t key, std::uint32_t parent, std::uint32_t label,
              const Element &u, const Element &uinv)
  {
    const auto id = static_cast<std::uint32_t>(lv.points.size());
    if (!lv.dense.empty())
      lv.dense[key] = static_cast<std::int32_t>(id);
    else
      lv.sparse.emplace(key, id);
    lv.points.push_back(key);
    lv.parent.push_back(parent);
    lv.label.push_back(label);
    const std::size_t e = ops_->entries();
    lv.fwd.insert(lv.fwd.end(), u.begin(), u.begin() + static_cast<std::ptrdiff_t>(e));
    lv.inv.insert(lv.inv.end(), uinv.begin(), uinv.begin() + static_cast<std::ptrdiff_t>(e));
    if (++total_points_ > opt_.max_points)
      throw ChainOverflow("stabilizer chain exceeds " + std::to_string(opt_.max_points) +
                          " orbit points");
  }

  // Applies generator gi to the point with index idx; records a new point if needed.
  void step(Level &lv, std::uint32_t idx, std::uint32_t gi)
  {
    const MatrixOps &ops = *ops_;
    const std::size_t d = ops.dim(), e = ops.entries();
    std::array<std::uint16_t, kMaxDim> pt{}, img{};
    decode(lv.points[idx], pt.data());
    ops.apply(pt.data(), gens_[gi].data(), img.data());
    const std::uint64_t key = encode(img.data(), d);
    if (lv.find(key))
      return;
    Element u{}, uinv{};
    ops.multiply(lv.fwd_at(idx, e), gens_[gi].data(), u.data());
    ops.multiply(gens_inv_[gi].data(), lv.inv_at(idx, e), uinv.data());
    record(lv, key, idx, gi, u, uinv);
  }

  // Closes the orbit after generator `added` joined the level.
  void extend_orbit(Level &lv, std::uint32_t added)
  {
    const std::size_t old = lv.points.size();
    for (std::uint32_t i = 0; i < old; ++i)
      step(lv, i, added);
    for (std::size_t i = old; i < lv.points.size(); ++i)
      for (auto gi : lv.gens)
        step(lv, static_cast<std::uint32_t>(i), gi);
  }

  bool moves_basis_vector(const Element &g, std::size_t k) const
  {
    const std::size_t d = ops_->dim();
    for (std::size_t j = 0; j < d; ++j)
      if (g[k * d + j] != (k == j ? 1 : 0))
        return true;
    return false;
  }

  void new_level(std::size_t basis_index)
  {
    const MatrixOps &ops = *ops_;
    const std::size_t d = ops.dim();
    Level lv;
    lv.base[basis_index] = 1;
    if (point_space_ <= kDenseLimit)
      lv.dense.assign(point_space_, -1);
    record(lv, encode(lv.base.data(), d), kNoParent, kNoParent, ops.identity(), ops.identity());
    levels_.push_back(std::move(lv));
  }

  // Adds a strong generator to levels 0..level, creating a new level if needed.
  void add_generator(const Element &g, std::size_t level)
  {
    const auto gi = static_cast<std::uint32_t>(gens_.size());
    gens_.push_back(g);
    gens_inv_.push_back(ops_->inverse(g));
    if (level == levels_.size()) {
      // first standard basis vector moved by the residue
      std::size_t k = 0;
      while (!moves_basis_vector(g, k))
        ++k;
      new_level(k);
    }
    for (std::size_t L = 0; L <= level; ++L) {
      levels_[L].gens.push_back(gi);
      extend_orbit(levels_[L], gi);
    }
  }

  Element random_element()
  {
    std::uniform_int_distribution<std::size_t> pick(0, pool_.size() - 1);
    std::size_t i = pick(rng_), j = pick(rng_);
    while (j == i)
      j = pick(rng_);
    const bool invert = rng_() & 1;
    const Element rhs = invert ? ops_->inverse(pool_[j]) : pool_[j];
    if (rng_() & 1)
      pool_[i] = ops_->multiply(pool_[i], rhs);
    else
      pool_[i] = ops_->multiply(rhs, pool_[i]);
    accumulator_ = ops_->multiply(accumulator_, pool_[i]);
    return accumulator_;
  }

  void build()
  {
    const MatrixOps &ops = *ops_;
    // first base point: the standard basis vector moved by the most generators
    const std::size_t d = ops.dim();
    std::size_t best = 0, best_count = 0;
    for (std::size_t k = 0; k < d; ++k) {
      std::size_t count = 0;
      for (const auto &g : input_)
        count += moves_basis_vector(g, k);
      if (count > best_count) {
        best = k;
        best_count = count;
      }
    }
    new_level(best);

    for (const auto &g : input_) {
      SiftResult s = sift(g);
      if (!s.identity)
        add_generator(s.residue, s.level);
    }

    pool_.clear();
    while (pool_.size() < std::max(opt_.pool_size, input_.size()))
      for (const auto &g : input_)
        if (pool_.size() < std::max(opt_.pool_size, input_.size()))
          pool_.push_back(g);
    accumulator_ = ops.identity();
    for (std::size_t i = 0; i < opt_.warmup; ++i)
      random_element();

    std::size_t quiet = 0;
    while (quiet < opt_.patience) {
      SiftResult s = sift(random_element());
      if (s.identity) {
        ++quiet;
        continue;
      }
      quiet = 0;
      add_generator(s.residue, s.level);
    }
    verify();
  }

  // Every Schreier generator of every level must sift to the identity
  // through the levels below it. Levels are checked from the bottom up.
  void verify()
  {
    const MatrixOps &ops = *ops_;
    const std::size_t e = ops.entries();
    std::size_t L = levels_.size();
    while (L-- > 0) {
      ++verification_rounds_;
      bool restarted = false;
      Level *lv = &levels_[L];
      for (std::uint32_t b = 0; !restarted && b < lv->points.size(); ++b) {
        for (std::size_t gk = 0; !restarted && gk < lv->gens.size(); ++gk) {
          const std::uint32_t gi = lv->gens[gk];
          std::array<std::uint16_t, kMaxDim> pt{}, img{};
          decode(lv->points[b], pt.data());
          ops.apply(pt.data(), gens_[gi].data(), img.data());
          const std::uint32_t c = *lv->find(encode(img.data(), ops.dim()));
          if (lv->parent[c] == b && lv->label[c] == gi)
            continue;
          ++schreier_checked_;
          Element t{}, sg{};
          ops.multiply(lv->fwd_at(b, e), gens_[gi].data(), t.data());
          ops.multiply(t.data(), lv->inv_at(c, e), sg.data());
          SiftResult s = sift(sg, L + 1);
          if (s.identity)
            continue;
          add_generator(s.residue, s.level);
          // levels L+1..s.level changed; re-verify from the deepest change
          L = s.level + 1;
          restarted = true;
        }
      }
    }
  }

  std::shared_ptr<const MatrixOps> ops_;
  ChainOptions opt_;
  std::mt19937_64 rng_;
  std::uint64_t point_space_ = 0;
  std::uint64_t total_points_ = 0;
  std::vector<Element> input_;
  std::vector<Element> gens_, gens_inv_;
  std::vector<Level> levels_;
  std::vector<Element> pool_;
  Element accumulator_{};
  std::size_t verification_rounds_ = 0;
  std::uint64_t schreier_checked_ = 0;
};

} // namespace bigmono::engine
