#include "hopf/atlas.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>

#include "hopf/errors.hpp"

namespace hopf {

double unit_uniform(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double symmetric(std::mt19937_64& rng) { return 2.0 * unit_uniform(rng()) - 1.0; }

struct TrigTerm {
  double amplitude;
  int mode;
  double phase;
  std::vector<double> affine;  // constant followed by one coefficient per coordinate
};

std::vector<TrigTerm> random_terms(std::uint64_t seed, std::size_t coords, int count) {
  std::mt19937_64 rng(seed);
  std::vector<TrigTerm> terms;
  for (int j = 0; j < count; ++j) {
    TrigTerm term;
    term.amplitude = symmetric(rng);
    term.mode = static_cast<int>(rng() % 3);
    term.phase = kTwoPi * unit_uniform(rng());
    for (std::size_t i = 0; i <= coords; ++i) term.affine.push_back(symmetric(rng));
    terms.push_back(std::move(term));
  }
  return terms;
}

Complex eval_terms(const std::vector<TrigTerm>& terms, std::span<const double> x, double theta) {
  double acc = 0.0;
  for (const TrigTerm& term : terms) {
    double poly = term.affine[0];
    for (std::size_t i = 0; i < x.size(); ++i) poly += term.affine[i + 1] * x[i];
    acc += term.amplitude * std::cos(kTwoPi * term.mode * theta + term.phase) * poly;
  }
  return {acc, 0.0};
}

// Recursive-descent parser for field expressions.
class Parser {
 public:
  Parser(const std::string& text, const HopfModel& m) : s_(text), m_(m) {}

  FieldM parse() {
    FieldM f = expr();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError(0, "field '" + s_ + "' at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FieldM expr() {
    FieldM f = term();
    for (;;) {
      if (accept('+')) {
        f = f + term();
      } else if (accept('-')) {
        f = f - term();
      } else {
        return f;
      }
    }
  }

  FieldM term() {
    FieldM f = factor();
    while (accept('*')) f = f * factor();
    return f;
  }

  double number() {
    skip_space();
    double v = 0.0;
    auto [end, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc{}) fail("expected a number");
    pos_ = static_cast<std::size_t>(end - s_.data());
    return v;
  }

  long integer() {
    skip_space();
    long v = 0;
    auto [end, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc{}) fail("expected an integer");
    pos_ = static_cast<std::size_t>(end - s_.data());
    return v;
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
    }
    return s_.substr(start, pos_ - start);
  }

  FieldM factor() {
    if (accept('-')) return Complex{-1.0, 0.0} * factor();
    if (accept('(')) {
      FieldM f = expr();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    skip_space();
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
      return FieldM::constant(number());
    }
    const std::size_t start = pos_;
    const std::string name = identifier();
    if (name.empty()) fail("expected a field");
    const bool has_arg = accept(':');
    const int ambient = m_.n + 1;

    if (!has_arg) {
      if (name == "const1") return FieldM::constant(1.0);
      if (name == "zero") return FieldM::constant(0.0);
      if (name == "t_over_r") return coordinate(ambient);
      if (name == "cos_theta") return mode(1, false);
      if (name == "sin_theta") return mode(1, true);
      if (name.size() > 1 && name[0] == 'w') {
        int i = 0;
        auto [end, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), i);
        if (ec == std::errc{} && end == name.data() + name.size() && i >= 1 && i <= ambient) {
          return coordinate(i);
        }
        pos_ = start;
        fail("coordinate index out of range 1.." + std::to_string(ambient));
      }
    } else {
      if (name == "const") return FieldM::constant(number());
      if (name == "cos" || name == "sin") return mode(static_cast<int>(integer()), name == "sin");
      if (name == "random") {
        const long seed = integer();
        if (seed < 0) fail("seed must be non-negative");
        return random_field_m(static_cast<std::uint64_t>(seed), m_);
      }
      if (name == "coboundary") return apply_X(factor(), m_);
    }
    pos_ = start;
    fail("unknown field '" + name + "'");
  }

  static FieldM coordinate(int i) {
    return FieldM([i](const HopfPoint& q) {
      return Complex{q.w[static_cast<std::size_t>(i - 1)], 0.0};
    });
  }

  static FieldM mode(int k, bool sine) {
    return FieldM([k, sine](const HopfPoint& q) {
      const double x = kTwoPi * k * q.theta;
      return Complex{sine ? std::sin(x) : std::cos(x), 0.0};
    });
  }

  std::string s_;
  const HopfModel& m_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldM random_field_m(std::uint64_t seed, const HopfModel& m) {
  auto terms = random_terms(seed, static_cast<std::size_t>(m.n + 1), 4);
  return FieldM([terms](const HopfPoint& q) { return eval_terms(terms, q.w, q.theta); });
}

FieldV random_field_v(std::uint64_t seed, const HopfModel& m) {
  // Offset the stream so V densities differ from M fields with the same seed.
  auto terms = random_terms(seed ^ 0x9e3779b97f4a7c15ULL, static_cast<std::size_t>(m.n), 3);
  return [terms](const TransversalPoint& v) { return eval_terms(terms, v.u, v.theta); };
}

TransversalPoint random_point_v(std::uint64_t seed, const HopfModel& m) {
  std::mt19937_64 rng(seed);
  TransversalPoint v;
  double len = 0.0;
  // Box-Muller from raw bits, then normalize.
  while (len < 1e-3) {
    v.u.assign(0, 0.0);
    len = 0.0;
    for (int i = 0; i < m.n; ++i) {
      const double a = unit_uniform(rng()) + 0x1.0p-54;
      const double b = unit_uniform(rng());
      const double g = std::sqrt(-2.0 * std::log(a)) * std::cos(kTwoPi * b);
      v.u.push_back(g);
      len += g * g;
    }
    len = std::sqrt(len);
  }
  for (double& x : v.u) x /= len;
  v.theta = unit_uniform(rng());
  return v;
}

FieldM parse_field(const std::string& expr, const HopfModel& m) { return Parser(expr, m).parse(); }

std::vector<NamedField> builtin_atlas(const HopfModel& m) {
  std::vector<std::string> names{"const1", "t_over_r", "cos_theta", "sin_theta", "cos:2"};
  for (int i = 1; i <= m.n + 1; ++i) names.push_back("w" + std::to_string(i));
  names.insert(names.end(), {"w1*cos_theta", "t_over_r*t_over_r", "random:1", "random:2",
                             "coboundary:cos_theta"});
  std::vector<NamedField> out;
  for (const std::string& name : names) out.push_back({name, parse_field(name, m)});
  return out;
}

std::vector<NamedFieldE> contraction_atlas(const HopfModel&) {
  std::vector<NamedFieldE> out;
  auto add = [&](std::string name, auto f) {
    out.push_back({std::move(name), FieldE([f](std::span<const double> z) {
                     return Complex{f(z), 0.0};
                   })});
  };
  add("z1", [](std::span<const double> z) { return z[0]; });
  add("2z1-z2", [](std::span<const double> z) { return 2.0 * z[0] - z[1]; });
  add("|z|^2", [](std::span<const double> z) {
    double s = 0.0;
    for (double x : z) s += x * x;
    return s;
  });
  add("z1*z2", [](std::span<const double> z) { return z[0] * z[1]; });
  add("sin(z1)", [](std::span<const double> z) { return std::sin(z[0]); });
  add("z1*exp(z2)", [](std::span<const double> z) { return z[0] * std::exp(z[1]); });
  add("cos(z1+z2)-1", [](std::span<const double> z) { return std::cos(z[0] + z[1]) - 1.0; });
  return out;
}

}  // namespace hopf
