#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "bigmono/bigmono.hpp"
#include "bigmono/cli/checks.hpp"

using namespace bigmono;
using cli::Json;

namespace {

int emit(const std::string &text, const std::string &out)
{
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out);
  if (!f) {
    std::cerr << "error: cannot write '" << out << "'\n";
    return 2;
  }
  f << text;
  return 0;
}

Json analyze(std::uint32_t p, std::uint32_t l)
{
  const auto alg = arith::build_algebra(p, l);
  const auto &sd = alg->splitting();
  Json j = Json::object();
  j["p"] = p;
  j["l"] = l;
  j["f"] = sd.f;
  j["kind"] = arith::to_string(sd.kind);
  j["parity_kind"] = arith::to_string(sd.parity_kind);
  j["q"] = cli::decimal(sd.q);
  j["field_order"] = cli::decimal(alg->field().order());
  j["modulus"] = alg->field().modulus();
  j["zeta"] = cli::element_json(*alg, alg->zeta());
  j["components"] = alg->component_count();
  j["prime_dim"] = alg->prime_dim();
  return j;
}

Json matrices(std::uint32_t p, std::uint32_t l, const std::vector<std::uint32_t> &k,
              const std::string &word)
{
  const auto alg = arith::build_algebra(p, l);
  const gassner::GassnerContext ctx(alg, k);
  Json j = Json::object();
  j["p"] = p;
  j["l"] = l;
  j["k"] = k;
  j["dimension"] = ctx.dimension();
  j["encoding"] = "entries are coefficient vectors over F_p, component 0 first";
  Json colors = Json::array();
  for (std::size_t i = 0; i < ctx.strands(); ++i)
    colors.push_back(cli::element_json(*alg, ctx.color(i)));
  j["colors"] = colors;
  Json squares = Json::array();
  for (const auto &m : gassner::square_generator_images(ctx))
    squares.push_back(cli::matrix_json(*alg, m));
  j["squares"] = squares;
  Json pure = Json::array();
  std::size_t idx = 0;
  const auto images = gassner::pure_generator_images(ctx);
  for (std::uint32_t a = 0; a < ctx.dimension(); ++a)
    for (std::uint32_t b = a + 1; b <= ctx.dimension(); ++b) {
      Json g = Json::object();
      g["i"] = a;
      g["j"] = b;
      g["matrix"] = cli::matrix_json(*alg, images[idx++]);
      pure.push_back(g);
    }
  j["pure_generators"] = pure;
  const auto form = gassner::invariant_form(ctx);
  j["form"] = cli::matrix_json(*alg, form.gram);
  j["form_rank"] = form.component_ranks;
  if (!word.empty()) {
    const auto e = gassner::evaluate_word(braid::parse_word(word, ctx.strands()), ctx);
    Json w = Json::object();
    w["word"] = word;
    w["matrix"] = cli::matrix_json(*alg, e.matrix);
    w["permutation"] = e.perm;
    j["word"] = w;
  }
  return j;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Specialized reduced Gassner representations and their monodromy groups"};
  app.require_subcommand(1);

  std::uint32_t p = 0, l = 0;
  std::string kvec_text, word, out;

  auto *an = app.add_subcommand("analyze", "splitting type of the algebra for (p, l)");
  an->add_option("-p", p, "odd prime p")->required();
  an->add_option("-l", l, "odd prime l")->required();

  auto *mx = app.add_subcommand("matrices", "generator images and the invariant form as JSON");
  mx->add_option("-p", p, "odd prime p")->required();
  mx->add_option("-l", l, "odd prime l")->required();
  mx->add_option("-k", kvec_text, "monodromy vector, comma separated")->required();
  mx->add_option("--word", word, "also evaluate this braid word (e.g. \"0 1 -0\")");
  mx->add_option("--out", out, "write to a file instead of stdout");

  cli::VerificationConfig cfg;
  std::string config_file, checks_text, format;
  std::uint64_t seed = 1, closure_cap = 0, point_cap = 0, trials = 0;
  bool no_timing = false;
  auto *vf = app.add_subcommand("verify", "run verification checks");
  vf->add_option("--config", config_file, "key=value configuration file");
  auto *vp = vf->add_option("-p", p, "odd prime p");
  auto *vl = vf->add_option("-l", l, "odd prime l");
  auto *vk = vf->add_option("-k", kvec_text, "monodromy vector, comma separated");
  auto *vc = vf->add_option("--checks", checks_text, "comma list of checks, 'all' or 'none'");
  auto *vs = vf->add_option("--seed", seed, "random seed");
  auto *vo = vf->add_option("--out", out, "write the report to a file");
  auto *vfm = vf->add_option("--format", format, "json or tsv");
  auto *vcc = vf->add_option("--closure-cap", closure_cap, "largest group counted by closure");
  auto *vpc = vf->add_option("--point-cap", point_cap, "orbit point budget of the stabilizer chain");
  auto *vt = vf->add_option("--trials", trials, "random trials for the extension check");
  vf->add_flag("--no-timing", no_timing, "report runtime_ms as 0 for byte-identical output");

  cli::ScanConfig sc;
  std::string scan_checks = "splitting", order_cap_text;
  std::string scan_format = "json";
  auto *sn = app.add_subcommand("scan", "run checks over a parameter grid");
  sn->add_option("--p-max", sc.p_max, "largest p");
  sn->add_option("--l-max", sc.l_max, "largest l");
  sn->add_option("--n-max", sc.n_max, "largest n");
  sn->add_option("--order-cap", order_cap_text, "skip image checks above this expected order");
  sn->add_option("--checks", scan_checks, "comma list of checks");
  sn->add_option("--jobs", sc.jobs, "worker threads (0 = hardware)");
  sn->add_option("--seed", sc.seed, "random seed");
  sn->add_option("--point-cap", sc.point_cap, "orbit point budget");
  sn->add_option("--format", scan_format, "json or tsv");
  sn->add_option("--out", out, "write the report to a file");
  sn->add_flag("--no-timing", no_timing, "report runtime_ms as 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (an->parsed()) {
      std::cout << analyze(p, l).dump(2) << "\n";
      return 0;
    }
    if (mx->parsed())
      return emit(matrices(p, l, cli::parse_kvec(kvec_text), word).dump(2) + "\n", out);

    if (vf->parsed()) {
      if (!config_file.empty())
        for (const auto &[key, value] : cli::read_config_file(config_file))
          cli::apply_key(cfg, key, value);
      if (*vp)
        cfg.p = p;
      if (*vl)
        cfg.l = l;
      if (*vk)
        cfg.kvec = cli::parse_kvec(kvec_text);
      if (*vc)
        cfg.checks = cli::parse_checks(checks_text);
      if (*vs)
        cfg.seed = seed;
      if (*vo)
        cfg.out = out;
      if (*vfm)
        cli::apply_key(cfg, "format", format);
      if (*vcc)
        cfg.closure_cap = closure_cap;
      if (*vpc)
        cfg.point_cap = point_cap;
      if (*vt)
        cfg.trials = trials;
      if (no_timing)
        cfg.timing = false;
      if (!cfg.checks.empty() && (cfg.p == 0 || cfg.l == 0))
        throw cli::ConfigError("verify needs -p and -l");
      const auto rep = cli::run_verification(cfg);
      const std::string text = cfg.format == "tsv" ? cli::report_tsv(rep, cfg.timing)
                                                   : cli::report_json(rep, cfg.timing).dump(2) + "\n";
      if (emit(text, cfg.out) != 0)
        return 2;
      return rep.exit_code();
    }

    if (sn->parsed()) {
      sc.checks = cli::parse_checks(scan_checks);
      if (!order_cap_text.empty())
        sc.order_cap = BigInt(order_cap_text);
      if (scan_format != "json" && scan_format != "tsv")
        throw cli::ConfigError("format must be json or tsv");
      const auto rep = cli::scan(sc);
      const std::string text = scan_format == "tsv" ? cli::report_tsv(rep, !no_timing)
                                                    : cli::report_json(rep, !no_timing).dump(2) + "\n";
      if (emit(text, out) != 0)
        return 2;
      return rep.exit_code();
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
