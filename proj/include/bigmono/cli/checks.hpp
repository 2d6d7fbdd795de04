#pragma once

// The verification checks behind the `verify` and `scan` commands. Each
// check yields one Record; checks run in dependency order and never abort
// the run on a mathematical mismatch.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "bigmono/arith/algebra.hpp"
#include "bigmono/arith/splitting.hpp"
#include "bigmono/braid.hpp"
#include "bigmono/cli/config.hpp"
#include "bigmono/cli/report.hpp"
#include "bigmono/engine/monodromy.hpp"
#include "bigmono/gassner.hpp"
#include "bigmono/unitary.hpp"

namespace bigmono::cli {

/// Raised inside a check when its preconditions do not hold.
class Precondition : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

inline std::string join_kvec(const std::vector<std::uint32_t> &k)
{
  std::string s;
  for (auto x : k)
    s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

inline std::string reproduce_command(const VerificationConfig &cfg, const std::string &check)
{
  std::string cmd = "bigmono verify -p " + std::to_string(cfg.p) + " -l " + std::to_string(cfg.l);
  if (!cfg.kvec.empty())
    cmd += " -k " + join_kvec(cfg.kvec);
  cmd += " --checks " + check + " --seed " + std::to_string(cfg.seed);
  return cmd;
}

/// Per-check seed derived from the run seed (splitmix64 step).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt)
{
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t check_salt(const std::string &name)
{
  std::uint64_t h = 1469598103934665603ull;
  for (char c : name)
    h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------------------
// Individual checks.

struct CheckInput
{
  const VerificationConfig &cfg;
  std::shared_ptr<const arith::InvolutiveAlgebra> alg;
  std::mt19937_64 rng;

  const gassner::GassnerContext context() const
  {
    if (cfg.kvec.empty())
      throw Precondition("this check needs a monodromy vector (-k)");
    return gassner::GassnerContext(alg, cfg.kvec);
  }
};

inline void check_splitting(CheckInput &in, Record &r)
{
  const auto sd = in.alg->splitting();
  const auto pat = arith::cyclotomic_pattern(in.cfg.p, in.cfg.l);
  r.expected = expected_value(arith::to_string(pat.kind),
                              "oracle: factorization of the l-th cyclotomic polynomial over F_p");
  r.computed["kind"] = arith::to_string(sd.kind);
  r.computed["f"] = sd.f;
  r.computed["q"] = decimal(sd.q);
  r.computed["factor_degree"] = pat.factor_degree;
  r.computed["factor_count"] = pat.factor_count;
  r.computed["parity_kind"] = arith::to_string(sd.parity_kind);
  r.match = sd.kind == pat.kind && pat.uniform && pat.factor_degree == sd.f;
  if (sd.parity_kind != sd.kind)
    r.findings.push_back(std::string("classification by the parity of (l-1)/f gives ") +
                         arith::to_string(sd.parity_kind) + ", the factorization gives " +
                         arith::to_string(sd.kind));
}

inline void check_relations(CheckInput &in, Record &r)
{
  const auto ctx = in.context();
  const auto &alg = ctx.algebra();
  const std::size_t strands = ctx.strands(), n = ctx.dimension();
  std::size_t braid_checks = 0, braid_fail = 0, square_checks = 0, square_fail = 0;
  std::size_t rank_fail = 0, inverse_checks = 0, inverse_fail = 0;
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    braid::BraidWord a(strands), b(strands);
    a.append(i).append(i + 1).append(i);
    b.append(i + 1).append(i).append(i + 1);
    ++braid_checks;
    braid_fail += !(gassner::evaluate_word(a, ctx) == gassner::evaluate_word(b, ctx));
  }
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 2; j < n; ++j) {
      braid::BraidWord a(strands), b(strands);
      a.append(i).append(j);
      b.append(j).append(i);
      ++braid_checks;
      braid_fail += !(gassner::evaluate_word(a, ctx) == gassner::evaluate_word(b, ctx));
    }
  const auto squares = gassner::square_generator_images(ctx);
  for (std::uint32_t i = 0; i < n; ++i) {
    ++square_checks;
    square_fail +=
        !(squares[i] == gassner::square_closed_form(alg, n, i, ctx.color(i), ctx.color(i + 1)));
    const auto ranks = gassner::component_ranks(
        alg, linalg::subtract(alg, squares[i], linalg::identity(alg, n)));
    rank_fail += std::any_of(ranks.begin(), ranks.end(), [](std::size_t x) { return x != 1; });
  }
  for (int t = 0; t < 20; ++t) {
    const auto w = braid::random_word(in.rng, strands, 12);
    ++inverse_checks;
    const auto e = gassner::evaluate_word(braid::concat(w, braid::invert(w)), ctx);
    inverse_fail += !(e == gassner::identity_element(ctx));
  }
  r.expected = expected_value("all relations hold",
                              "oracle: both sides evaluated; squares against the explicit "
                              "sigma_i^2 matrix with rows (a(1-b), ab, 1-a)");
  r.computed["braid_relations_checked"] = braid_checks;
  r.computed["braid_relation_failures"] = braid_fail;
  r.computed["squares_checked"] = square_checks;
  r.computed["square_failures"] = square_fail;
  r.computed["square_rank_failures"] = rank_fail;
  r.computed["inverse_words_checked"] = inverse_checks;
  r.computed["inverse_word_failures"] = inverse_fail;
  r.match = braid_fail == 0 && square_fail == 0 && rank_fail == 0 && inverse_fail == 0;
}

inline void check_form(CheckInput &in, Record &r)
{
  const auto ctx = in.context();
  const auto &alg = ctx.algebra();
  const bool degenerate = ctx.product_is_one();
  Json exp = Json::object();
  exp["degenerate"] = degenerate;
  exp["kernel_dim"] = degenerate ? 1 : 0;
  exp["invariant_dim"] = degenerate ? 1 : 0;
  r.expected = expected_value(exp, "paper: the form degenerates iff k_0 + ... + k_n = 0 mod l");

  const auto form = gassner::invariant_form(ctx);
  const auto inv = gassner::invariant_vectors(ctx);
  bool preserved = true;
  for (const auto &m : gassner::pure_generator_images(ctx))
    preserved = preserved && gassner::preserves_form(alg, m, form.gram);
  const bool skew =
      gassner::involve_transpose(alg, form.gram) ==
      linalg::subtract(alg, gassner::AlgMatrix(form.gram.rows(), form.gram.cols()), form.gram);

  r.computed["degenerate"] = form.degenerate();
  r.computed["rank"] = form.component_ranks;
  r.computed["kernel_dim"] = form.kernel.component_dims;
  r.computed["invariant_dim"] = inv.component_dims;
  r.computed["solution_prime_dim"] = form.solution_prime_dim;
  r.computed["fixed_prime_dim"] = alg.fixed_prime_dim();
  r.computed["constraint_set"] = form.constraint_set;
  r.computed["preserved_by_pure_generators"] = preserved;
  r.computed["skew_hermitian"] = skew;

  bool ok = preserved && skew && form.solution_prime_dim == alg.fixed_prime_dim() &&
            form.degenerate() == degenerate && form.kernel.uniform() && inv.uniform() &&
            form.kernel.dimension() == (degenerate ? 1u : 0u) &&
            inv.dimension() == (degenerate ? 1u : 0u);
  if (degenerate && ok) {
    const auto &kv = form.kernel.basis.front();
    const bool line = gassner::proportional(alg, kv, inv.basis.front());
    const bool inclusive = gassner::proportional(alg, kv, gassner::kernel_closed_form(ctx, true));
    const bool exclusive = gassner::proportional(alg, kv, gassner::kernel_closed_form(ctx, false));
    r.computed["kernel_equals_invariant_line"] = line;
    r.computed["kernel_vector"] = vector_json(alg, kv);
    r.computed["closed_form"] = inclusive && exclusive ? "both"
                                : inclusive            ? "x_i = 1 - t_0...t_i"
                                : exclusive            ? "x_i = 1 - t_0...t_{i-1}"
                                                       : "neither";
    if (!exclusive)
      r.findings.push_back("kernel vector is not (1 - t_0...t_{i-1})_i; it is " +
                           std::string(inclusive ? "(1 - t_0...t_i)_i" : "neither closed form"));
    ok = ok && line;
  }
  if (form.constraint_set != "squares")
    r.findings.push_back("sigma_i^2 constraints left extra solutions; all pure generators were used");
  r.match = ok;
}

inline void check_irreducibility(CheckInput &in, Record &r)
{
  const auto ctx = in.context();
  const auto &alg = ctx.algebra();
  const std::size_t n = ctx.dimension();
  const auto det = gassner::determinant_subgroup(ctx);
  bool some_nontrivial = false;
  for (std::size_t i = 0; i + 1 < ctx.strands(); ++i)
    some_nontrivial =
        some_nontrivial || !(alg.mul(ctx.color(i), ctx.color(i + 1)) == alg.one());
  r.computed["determinant_subgroup_order"] = det.elements.size();
  r.computed["determinants_match_t_i_t_i+1"] = det.generators_match_closed_form;

  if (ctx.product_is_one()) {
    const auto inv = gassner::invariant_vectors(ctx);
    Json exp = Json::object();
    exp["invariant_vector_span"] = 1;
    r.expected = expected_value(exp, "trivial: an invariant vector spans an invariant line");
    const auto span = gassner::spin_span(ctx, inv.basis.front(), gassner::SpinMode::Algebra);
    r.computed["invariant_vector_span"] = span.dims;
    r.match = std::all_of(span.dims.begin(), span.dims.end(), [](auto d) { return d == 1; }) &&
              det.generators_match_closed_form;
    return;
  }

  Json exp = Json::object();
  exp["algebra_span"] = n;
  exp["prime_field_span"] = n * alg.prime_dim();
  exp["determinant_subgroup_order"] = some_nontrivial ? alg.l() : 1;
  r.expected = expected_value(
      exp, "paper: absolutely irreducible when t_0...t_n != 1; determinants generate mu_l");
  std::vector<std::size_t> algebra_dims;
  bool algebra_full = true;
  for (std::size_t j = 0; j <= n; ++j) {
    gassner::AlgVector v = j < n ? gassner::basis_vector(alg, n, j) : gassner::AlgVector(n);
    if (j == n)
      do
        for (auto &x : v)
          x = alg.random(in.rng);
      while (linalg::is_zero_vector(alg, v));
    const auto span = gassner::spin_span(ctx, v, gassner::SpinMode::Algebra);
    algebra_full = algebra_full && span.full();
    algebra_dims.push_back(*std::min_element(span.dims.begin(), span.dims.end()));
  }
  const auto prime = gassner::spin_span(ctx, gassner::basis_vector(alg, n, 0),
                                        gassner::SpinMode::PrimeField);
  r.computed["algebra_span_min"] = algebra_dims;
  r.computed["prime_field_span"] = prime.dims.front();
  const bool det_ok = det.generators_match_closed_form &&
                      (some_nontrivial ? det.equals_mu_l : det.elements.size() == 1);
  r.match = algebra_full && prime.full() && det_ok;
  if (!prime.full())
    r.findings.push_back("prime-field spin of eps_0 is a proper subspace of dimension " +
                         std::to_string(prime.dims.front()));
}

inline void check_prop21(CheckInput &in, Record &r)
{
  const auto ctx = in.context();
  const auto &alg = ctx.algebra();
  if (!ctx.product_is_one())
    throw Precondition("needs k_0 + ... + k_n = 0 mod l");
  if (!alg.is_unit(alg.sub(alg.one(), ctx.color(0))))
    throw Precondition("needs 1 - t_0 to be a unit");
  Json exp = Json::object();
  exp["nontrivial"] = true;
  exp["transvection"] = true;
  exp["direction_spans_kernel"] = true;
  exp["xi(eps_2)"] = "t_1^-1 t_2^-1 (1 - t_1)";
  r.expected = expected_value(exp, "paper: [sigma_0^2, D'^2] is a nontrivial element of the "
                                   "unipotent radical; quoted functional value");
  const auto rep = gassner::prop21_commutator(ctx);
  r.computed["nontrivial"] = rep.nontrivial;
  r.computed["transvection"] = rep.transvection.has_value();
  r.computed["direction_spans_kernel"] = rep.direction_spans_kernel;
  r.computed["full_twist_commutator_trivial"] = rep.full_twist_commutator_trivial;
  r.computed["functional_values"] = vector_json(alg, rep.functional_values);
  if (ctx.dimension() >= 3) {
    r.computed["quoted_value"] = element_json(alg, rep.quoted_value);
    r.computed["quoted_value_matches"] = rep.quoted_value_matches;
    r.computed["reversed_convention_matches"] = rep.reversed_quoted_value_matches;
  }
  r.computed["shifted_labels_value_matches"] = rep.shifted_value_matches;
  r.findings = rep.findings;
  if (rep.shifted_value_matches && !rep.quoted_value_matches)
    r.findings.push_back("xi(eps_1) = t_0^-1 t_1^-1 (1 - t_0): the quoted formula holds with "
                         "strands labelled from 1");
  bool ok = rep.nontrivial && rep.transvection && rep.direction_spans_kernel;

  engine::ChainOptions opt;
  opt.seed = derive_seed(in.cfg.seed, 21);
  opt.max_points = in.cfg.point_cap;
  try {
    const auto rc = engine::radical_containment(ctx, in.rng, 200'000, 500, opt);
    Json rad = Json::object();
    rad["tested"] = rc.tested;
    rad["contained"] = rc.contained;
    rad["exhaustive"] = rc.exhaustive;
    rad["commutator_in_image"] = rc.commutator_contained;
    rad["image_order"] = decimal(rc.group_order);
    if (!alg.is_unitary()) {
      rad["first_component_only"] = std::to_string(rc.contained_first_only) + "/" +
                                    std::to_string(rc.tested_first_only);
      rad["second_component_only"] = std::to_string(rc.contained_second_only) + "/" +
                                     std::to_string(rc.tested_second_only);
      rad["graph_pattern"] = rc.graph_pattern;
    }
    r.computed["radical"] = rad;
    for (const auto &f : rc.findings)
      r.findings.push_back(f);
    ok = ok && rc.commutator_contained;
    if (alg.is_unitary())
      ok = ok && rc.full();
  } catch (const engine::ChainOverflow &) {
    r.computed["radical"] = "skipped: overflow";
  } catch (const std::invalid_argument &e) {
    r.computed["radical"] = std::string("skipped: ") + e.what();
  }
  r.match = ok;
}

inline void check_extension(CheckInput &in, Record &r)
{
  const auto &alg = *in.alg;
  if (!alg.is_unitary())
    throw Precondition("extension identities are stated over the unitary algebra");
  const std::size_t m = std::max<std::size_t>(4, in.cfg.kvec.empty() ? 4 : in.cfg.kvec.size());
  Json exp = Json::object();
  exp["commutator"] = "elementary, top-right sum conj(a_i) b_i - a_i conj(b_i)";
  exp["entry_imaginary"] = true;
  exp["norm_construction_realizes_every_imaginary_scalar"] = true;
  r.expected = expected_value(exp, "paper: displayed extension-matrix identities");
  const auto rep = unitary::verify_extension_identities(alg, m, in.cfg.trials, in.rng);
  r.parameters["m"] = m;
  r.parameters["trials"] = in.cfg.trials;
  r.computed["commutator_matches"] = rep.commutator_matches;
  r.computed["entry_imaginary"] = rep.entry_imaginary;
  r.computed["nontrivial_iff_entry_nonzero"] = rep.nontrivial_iff_entry;
  r.computed["unitary"] = rep.unitary;
  r.computed["displayed_inverse_matches"] = rep.displayed_inverse_matches;
  r.computed["inverse_entry_is_norm_minus_lambda"] = rep.inverse_entry_formula;

  std::vector<arith::AlgElem> scalars;
  bool exhaustive = alg.element_count() <= 4096;
  if (exhaustive) {
    scalars = unitary::imaginary_elements(alg);
  } else {
    for (int t = 0; t < 64; ++t)
      scalars.push_back(unitary::random_imaginary(alg, in.rng));
  }
  std::size_t realized = 0, minus = 0, swapped = 0;
  for (const auto &xi : scalars) {
    const auto c = unitary::norm_construction(alg, xi, m);
    const bool ok = c.normalized && c.entry_is_commutator;
    realized += ok && (c.entry == xi || c.swapped_entry == xi);
    minus += ok && c.entry == alg.neg(xi);
    swapped += ok && c.swapped_entry == xi;
  }
  r.computed["imaginary_scalars_tested"] = scalars.size();
  r.computed["imaginary_scalars_exhaustive"] = exhaustive;
  r.computed["construction_realized"] = realized;
  r.computed["construction_entry_is_minus_xi"] = minus;
  r.computed["swapped_order_entry_is_xi"] = swapped;
  if (minus == scalars.size() && scalars.size() > 1)
    r.findings.push_back("with alpha = (xi/2, eta, 0, ...), beta = (1, 0, ...) the commutator "
                         "entry is -xi; [T_beta, T_alpha] gives xi");
  for (const auto &f : rep.findings)
    r.findings.push_back(f);
  r.match = rep.all_pass() && realized == scalars.size();
}

inline void check_image(CheckInput &in, Record &r)
{
  const auto ctx = in.context();
  const auto &alg = ctx.algebra();
  unitary::ExpectedImage e;
  try {
    e = unitary::expected_image(alg.splitting(), in.cfg.kvec);
  } catch (const std::invalid_argument &ex) {
    throw Precondition(ex.what());
  }
  Json hyp = Json::object();
  hyp["n"] = e.hypotheses.n;
  hyp["n_at_least_l_plus_1"] = e.hypotheses.n_at_least_l_plus_1;
  hyp["n_at_least_l"] = e.hypotheses.n_at_least_l;
  if (e.hypotheses.certificate) {
    Json c = Json::object();
    c["indices"] = e.hypotheses.certificate->indices;
    c["branch"] = e.hypotheses.certificate->branch;
    hyp["certificate"] = c;
  } else {
    hyp["certificate"] = nullptr;
  }
  r.parameters["hypotheses"] = hyp;
  Json exp = Json::object();
  exp["group"] = std::string(unitary::to_string(e.kind)) + "(" + std::to_string(e.dim) + "," +
                 decimal(e.q) + ")";
  exp["order"] = decimal(e.order);
  r.expected = expected_value(exp, std::string("formula: |") +
                                       (e.kind == unitary::ImageKind::SlU ? "SU" : "SL") +
                                       "(m,q)| * l");
  const auto form = gassner::invariant_form(ctx);
  const auto group = engine::monodromy_group(ctx, form);
  if (!alg.is_unitary())
    r.computed["dual_determination"] = "asserted for all generators";
  engine::ChainOptions opt;
  opt.seed = derive_seed(in.cfg.seed, 7);
  opt.max_points = in.cfg.point_cap;
  engine::StabilizerChain chain(group.group, opt);
  r.computed["order"] = decimal(chain.order());
  r.computed["embedding"] = engine::to_string(group.mode);
  r.computed["orbit_sizes"] = chain.orbit_sizes();
  r.computed["strong_generators"] = chain.strong_generator_count();
  r.computed["schreier_generators_checked"] = chain.schreier_generators_checked();
  r.match = chain.order() == e.order;
  // small groups get a second, independent count by brute-force closure
  if (chain.order() <= in.cfg.closure_cap) {
    const auto closure = engine::enumerate_closure(group.group, in.cfg.closure_cap);
    r.computed["closure_order"] = closure.overflow ? Json("overflow") : Json(closure.size);
    r.match = r.match && !closure.overflow && BigInt(closure.size) == chain.order();
  }
  if (!e.hypotheses.satisfied()) {
    r.outcome = Outcome::Informational;
    r.findings.push_back("theorem hypotheses are not met; the comparison is informational");
  }
}

// ---------------------------------------------------------------------------

inline Record run_check(const VerificationConfig &cfg,
                        const std::shared_ptr<const arith::InvolutiveAlgebra> &alg,
                        const std::string &name)
{
  using Clock = std::chrono::steady_clock;
  Record r;
  r.name = name;
  r.parameters["p"] = cfg.p;
  r.parameters["l"] = cfg.l;
  if (!cfg.kvec.empty())
    r.parameters["k"] = cfg.kvec;
  r.parameters["seed"] = cfg.seed;
  CheckInput in{cfg, alg, std::mt19937_64(derive_seed(cfg.seed, check_salt(name)))};
  const auto start = Clock::now();
  try {
    if (name == "splitting")
      check_splitting(in, r);
    else if (name == "relations")
      check_relations(in, r);
    else if (name == "form")
      check_form(in, r);
    else if (name == "irreducibility")
      check_irreducibility(in, r);
    else if (name == "prop21")
      check_prop21(in, r);
    else if (name == "extension")
      check_extension(in, r);
    else if (name == "image")
      check_image(in, r);
    else
      throw std::logic_error("unknown check " + name);
  } catch (const Precondition &e) {
    r.outcome = Outcome::Skipped;
    r.match = false;
    r.computed = std::string("skipped: precondition: ") + e.what();
  } catch (const engine::ChainOverflow &e) {
    r.outcome = Outcome::Skipped;
    r.match = false;
    r.computed = "skipped: overflow";
    r.findings.push_back(e.what());
  } catch (const std::logic_error &e) {
    // internal consistency failures (e.g. dual determination) are findings
    r.outcome = Outcome::Checked;
    r.match = false;
    r.computed = std::string("failed: ") + e.what();
  } catch (const std::exception &e) {
    r.outcome = Outcome::Error;
    r.match = false;
    r.computed = std::string("error: ") + e.what();
  }
  r.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (r.outcome == Outcome::Checked && !r.match)
    r.findings.push_back("reproduce: " + reproduce_command(cfg, name));
  return r;
}

/// Runs the configured checks in dependency order.
inline Report run_verification(const VerificationConfig &cfg)
{
  Report rep;
  if (cfg.checks.empty())
    return rep;
  arith::require_odd_prime(cfg.p, "p");
  arith::require_odd_prime(cfg.l, "l");
  const auto alg = arith::build_algebra(cfg.p, cfg.l);
  for (const auto &name : known_checks())
    if (std::find(cfg.checks.begin(), cfg.checks.end(), name) != cfg.checks.end())
      rep.records.push_back(run_check(cfg, alg, name));
  return rep;
}

// ---------------------------------------------------------------------------
// Scan.

struct ScanConfig
{
  std::uint32_t p_max = 20;
  std::uint32_t l_max = 20;
  std::uint32_t n_max = 4;
  BigInt order_cap = 10'000'000;
  std::vector<std::string> checks{"splitting"};
  std::uint64_t seed = 1;
  std::uint64_t point_cap = 8'000'000;
  std::size_t jobs = 0;
};

struct ScanCase
{
  std::uint32_t p, l, n;
};

inline std::vector<ScanCase> scan_cases(const ScanConfig &sc)
{
  std::vector<ScanCase> cases;
  for (std::uint32_t p = 3; p <= sc.p_max; p += 2) {
    if (!arith::is_prime(p))
      continue;
    for (std::uint32_t l = 3; l <= sc.l_max; l += 2) {
      if (!arith::is_prime(l) || l == p)
        continue;
      for (std::uint32_t n = 2; n <= sc.n_max; ++n)
        cases.push_back({p, l, n});
    }
  }
  return cases;
}

/// One record per (case, check). Splitting depends only on (p, l) and is
/// reported once per pair. The image check runs only where the expected
/// order is below the cap. Cases run on a worker pool; records come back in
/// case order.
inline Report scan(const ScanConfig &sc)
{
  const auto cases = scan_cases(sc);
  std::vector<std::vector<Record>> results(cases.size());
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      const ScanCase c = cases[i];
      VerificationConfig cfg;
      cfg.p = c.p;
      cfg.l = c.l;
      cfg.kvec.assign(c.n + 1, 1);
      cfg.seed = derive_seed(sc.seed, i);
      cfg.point_cap = sc.point_cap;
      cfg.trials = 50;
      std::shared_ptr<const arith::InvolutiveAlgebra> alg;
      try {
        alg = arith::build_algebra(c.p, c.l);
      } catch (const std::exception &e) {
        Record r;
        r.name = "algebra";
        r.parameters["p"] = c.p;
        r.parameters["l"] = c.l;
        r.outcome = Outcome::Skipped;
        r.computed = std::string("skipped: ") + e.what();
        results[i].push_back(std::move(r));
        continue;
      }
      for (const auto &name : known_checks()) {
        if (std::find(sc.checks.begin(), sc.checks.end(), name) == sc.checks.end())
          continue;
        if (name == "splitting" && c.n != 2)
          continue;
        if (name == "image") {
          bool run = false;
          try {
            run = unitary::expected_image(alg->splitting(), cfg.kvec).order < sc.order_cap;
          } catch (const std::exception &) {
            run = true; // let run_check report the precondition
          }
          if (!run) {
            Record r;
            r.name = name;
            r.parameters["p"] = c.p;
            r.parameters["l"] = c.l;
            r.parameters["k"] = cfg.kvec;
            r.parameters["seed"] = cfg.seed;
            r.outcome = Outcome::Skipped;
            r.computed = "skipped: overflow";
            r.findings.push_back("expected order exceeds the order cap " + decimal(sc.order_cap));
            results[i].push_back(std::move(r));
            continue;
          }
        }
        Record r = run_check(cfg, alg, name);
        if (name == "splitting")
          r.parameters.erase("k");
        results[i].push_back(std::move(r));
      }
    }
  };

  std::size_t jobs = sc.jobs ? sc.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, std::max<std::size_t>(1, cases.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t)
    pool.emplace_back(work);
  work();
  for (auto &t : pool)
    t.join();

  Report rep;
  for (auto &v : results)
    for (auto &r : v)
      rep.records.push_back(std::move(r));
  return rep;
}

} // namespace bigmono::cli
