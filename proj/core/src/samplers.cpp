#include "extremal/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "extremal/errors.hpp"
#include "extremal/rng.hpp"

namespace extremal {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr std::size_t kThetaCells = 10000;

// Inverse-cdf table for Theta0 ~ S/|S|: one entry per atom and per cell of a
// uniform grid on [0,1), ordered by theta. Inside a cell theta is uniform.
class ThetaTable {
 public:
  explicit ThetaTable(const AngularMeasure& s) {
    std::size_t next_atom = 0;
    const auto& atoms = s.atoms();
    double cum = 0.0;
    for (std::size_t j = 0; j < kThetaCells; ++j) {
      double lo = static_cast<double>(j) / kThetaCells;
      double hi = static_cast<double>(j + 1) / kThetaCells;
      while (next_atom < atoms.size() && atoms[next_atom].location < hi) {
        cum += atoms[next_atom].mass;
        entries_.push_back({cum, atoms[next_atom].location, atoms[next_atom].location});
        ++next_atom;
      }
      if (s.has_density()) {
        double a = std::max(lo, s.density_lo()), b = std::min(hi, s.density_hi());
        if (a < b) {
          double m = integrate([&](double th) { return s.density(th); }, a, b);
          if (m > 0.0) {
            cum += m;
            entries_.push_back({cum, a, b});
          }
        }
      }
    }
    total_ = cum;
    if (!(total_ > 0.0)) throw PreconditionError("FromAngular: S has zero mass");
  }

  double total() const noexcept { return total_; }

  double draw(double u) const {
    double target = u * total_;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), target,
                               [](const Entry& e, double v) { return e.cum_end < v; });
    if (it == entries_.end()) it = std::prev(entries_.end());
    if (it->lo == it->hi) return it->lo;
    double start = it == entries_.begin() ? 0.0 : std::prev(it)->cum_end;
    double frac = (target - start) / (it->cum_end - start);
    return std::min(it->lo + frac * (it->hi - it->lo), std::nextafter(it->hi, 0.0));
  }

 private:
  struct Entry {
    double cum_end;
    double lo;
    double hi;  // lo == hi marks an atom
  };
  std::vector<Entry> entries_;
  double total_ = 0.0;
};

}  // namespace

double pareto_inverse(double u, double a) {
  if (!(u > 0.0 && u < 1.0)) throw PreconditionError("pareto_inverse: need 0 < u < 1");
  if (!(a > 0.0)) throw PreconditionError("pareto_inverse: need index a > 0");
  return std::pow(u, -1.0 / a);
}

SampleBatch sample_range(const ModelSpec& model, std::size_t begin, std::size_t end) {
  if (end < begin) throw PreconditionError("sample_range: end < begin");
  const std::size_t n = end - begin;
  SampleBatch b;
  b.model = model.name();
  b.seed = model.seed;
  b.xs.resize(n);
  b.ys.resize(n);
  const CounterRng rx(model.seed, stream::kX), rz(model.seed, stream::kZ),
      rxi(model.seed, stream::kXi), rth(model.seed, stream::kTheta),
      rr(model.seed, stream::kRadius);

  std::visit(
      overloaded{
          [&](const Ex51&) {
            for (std::size_t i = 0; i < n; ++i) {
              double x = 1.0 / rx.uniform(begin + i);
              double z = 1.0 / rz.uniform(begin + i);
              b.xs[i] = x;
              b.ys[i] = std::min(x * x, z * z);
            }
          },
          [&](const Ex52& m) {
            for (std::size_t i = 0; i < n; ++i) {
              double x = pareto_inverse(rx.uniform(begin + i), m.rho);
              double z = pareto_inverse(rz.uniform(begin + i), 1.0 - m.rho);
              b.xs[i] = x;
              b.ys[i] = std::min(x, z);
            }
          },
          [&](const Ex53& m) {
            for (std::size_t i = 0; i < n; ++i) {
              double r = 1.0 / rr.uniform(begin + i);
              double xi = m.g.quantile(rxi.uniform(begin + i));
              b.xs[i] = r * xi;
              b.ys[i] = r;
            }
          },
          [&](const FromAngular& m) {
            ThetaTable table(*m.s);
            for (std::size_t i = 0; i < n; ++i) {
              double th = table.draw(rth.uniform(begin + i));
              // Scaling R0 by |S| makes t P(R0/t > r, Theta0 in A) = S(A)/r.
              double r = table.total() / rr.uniform(begin + i);
              b.xs[i] = r * th;
              b.ys[i] = r * (1.0 - th);
            }
          },
          [&](const ProductLimit& m) {
            for (std::size_t i = 0; i < n; ++i) {
              b.xs[i] = m.h.quantile(rx.uniform(begin + i));
              b.ys[i] = 1.0 / rr.uniform(begin + i);
            }
          },
          [&](const DiagonalPareto&) {
            for (std::size_t i = 0; i < n; ++i) {
              double x = 1.0 / rx.uniform(begin + i);
              b.xs[i] = x;
              b.ys[i] = x;
            }
          },
      },
      model.variant);
  return b;
}

SampleBatch sample(const ModelSpec& model, std::size_t n) {
  if (n < 1) throw PreconditionError("sample: need n >= 1");
  return sample_range(model, 0, n);
}

void write_csv(const SampleBatch& b, std::ostream& out) {
  std::ostringstream os;
  os.precision(17);
  os << "x,y\n";
  for (std::size_t i = 0; i < b.n(); ++i) os << b.xs[i] << ',' << b.ys[i] << '\n';
  out << os.str();
}

SampleBatch read_csv(std::istream& in) {
  SampleBatch b;
  std::string line;
  if (!std::getline(in, line) || line.rfind("x,y", 0) != 0)
    throw ConfigError("sample csv: expected header x,y");
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto comma = line.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument(line);
      b.xs.push_back(std::stod(line.substr(0, comma)));
      b.ys.push_back(std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      throw ConfigError("sample csv: bad row at line " + std::to_string(lineno));
    }
  }
  return b;
}

}  // namespace extremal
