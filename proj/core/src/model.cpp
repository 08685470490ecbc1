#include "extremal/model.hpp"

#include <sstream>

#include "extremal/errors.hpp"

namespace extremal {

namespace {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

std::string ModelSpec::name() const {
  return std::visit(
      overloaded{
          [](const Ex51&) { return std::string("ex51"); },
          [](const Ex52& m) {
            std::ostringstream os;
            os << "ex52(rho=" << m.rho << ")";
            return os.str();
          },
          [](const Ex53& m) { return "ex53(" + m.g.name + ")"; },
          [](const FromAngular& m) { return "angular(" + m.s->label() + ")"; },
          [](const ProductLimit& m) { return "product(" + m.h.name + ")"; },
          [](const DiagonalPareto&) { return std::string("diagonal"); },
      },
      variant);
}

ModelSpec make_ex51(std::uint64_t seed, double interior_alpha) {
  if (!(interior_alpha > 0.5 && interior_alpha < 1.0))
    throw PreconditionError("Ex51: interior alpha must lie in (1/2, 1)");
  return {Ex51{interior_alpha}, seed};
}

ModelSpec make_ex52(double rho, std::uint64_t seed) {
  if (!(rho > 0.0 && rho < 1.0)) throw PreconditionError("Ex52: need 0 < rho < 1");
  return {Ex52{rho}, seed};
}

ModelSpec make_ex53(Distribution g, std::uint64_t seed) {
  if (!g.cdf || !g.quantile) throw PreconditionError("Ex53: G needs cdf and quantile");
  if (g.support_lo < 0.0) throw PreconditionError("Ex53: G must live on [0, inf)");
  return {Ex53{std::move(g)}, seed};
}

ModelSpec make_from_angular(AngularMeasure s, std::uint64_t seed) {
  if (!s.finite_total())
    throw DivergentIntegral("FromAngular: " + s.label() +
                            " has infinite mass, so no sampler (R0 Theta0, R0 (1-Theta0)) exists");
  return {FromAngular{std::make_shared<const AngularMeasure>(std::move(s))}, seed};
}

ModelSpec make_product_limit(Distribution h, std::uint64_t seed) {
  if (!h.cdf || !h.quantile) throw PreconditionError("ProductLimit: H needs cdf and quantile");
  return {ProductLimit{std::move(h)}, seed};
}

ModelSpec make_diagonal(std::uint64_t seed) { return {DiagonalPareto{}, seed}; }

}  // namespace extremal
