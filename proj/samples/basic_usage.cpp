// Builds the algebra for p = 5, l = 3, evaluates the representation for the
// monodromy vector (1, 1, 1, 1) and counts its image.

#include <iostream>

#include "bigmono/bigmono.hpp"

int main()
{
  using namespace bigmono;

  const auto alg = arith::build_algebra(5, 3);
  std::cout << "algebra: " << arith::to_string(alg->kind()) << ", q = " << alg->q() << "\n";

  const gassner::GassnerContext ctx(alg, {1, 1, 1, 1});
  const auto form = gassner::invariant_form(ctx);
  std::cout << "form rank " << form.rank() << " of " << ctx.dimension() << "\n";

  braid::BraidWord w(ctx.strands());
  w.append(0).append(1).append(0, true);
  const auto image = gassner::evaluate_word(w, ctx);
  std::cout << "word " << braid::format_word(w) << " permutes strands to";
  for (auto s : image.perm)
    std::cout << " " << s;
  std::cout << "\n";

  const auto expected = unitary::expected_image(alg->splitting(), ctx.exponents());
  const auto r = engine::image_order(ctx);
  std::cout << "image order " << r.order << ", expected " << unitary::to_string(expected.kind) << "("
            << expected.dim << "," << expected.q << ") of order " << expected.order << "\n";
  return r.order == expected.order ? 0 : 1;
}
