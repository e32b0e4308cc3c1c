#include "nodal/eigenfunction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nodal {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool in_half_set(const LatticePoint& p) {
  return p[0] > 0 || (p[0] == 0 && p[1] > 0);
}

}  // namespace

ToralEigenfunction::ToralEigenfunction(std::vector<Term> terms)
    : terms_(std::move(terms)) {
  if (terms_.empty())
    throw std::invalid_argument("ToralEigenfunction: no terms");
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.lambda < b.lambda; });
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (terms_[i].lambda == terms_[i - 1].lambda)
      throw std::invalid_argument("ToralEigenfunction: duplicate frequency");

  // Conjugate symmetry c_{-lambda} = conj(c_lambda) within 1e-12.
  for (const auto& t : terms_) {
    const LatticePoint neg{-t.lambda[0], -t.lambda[1]};
    const auto it = std::lower_bound(
        terms_.begin(), terms_.end(), neg,
        [](const Term& a, const LatticePoint& p) { return a.lambda < p; });
    if (it == terms_.end() || it->lambda != neg)
      throw std::invalid_argument(
          "ToralEigenfunction: frequency without its negative");
    if (std::abs(it->c - std::conj(t.c)) > 1e-12)
      throw std::invalid_argument(
          "ToralEigenfunction: conjugate symmetry violated");
  }

  // Monochromatic?
  const std::int64_t n0 =
      terms_[0].lambda[0] * terms_[0].lambda[0] +
      terms_[0].lambda[1] * terms_[0].lambda[1];
  bool mono = n0 > 0;
  for (const auto& t : terms_)
    mono = mono && (t.lambda[0] * t.lambda[0] + t.lambda[1] * t.lambda[1] == n0);
  if (mono) n_ = n0;
}

double ToralEigenfunction::eigenvalue() const {
  if (!n_) throw std::logic_error("eigenvalue: eigenfunction is not monochromatic");
  return kTwoPi * kTwoPi * static_cast<double>(*n_);
}

double ToralEigenfunction::value(Vec2 x) const {
  std::complex<double> sum = 0.0;
  for (const auto& t : terms_) {
    const double phase =
        kTwoPi * (static_cast<double>(t.lambda[0]) * x[0] +
                  static_cast<double>(t.lambda[1]) * x[1]);
    sum += t.c * std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return sum.real();
}

JetAtPoint ToralEigenfunction::evaluate_jet(Vec2 x) const {
  std::complex<double> s = 0.0, s1 = 0.0, s2 = 0.0;
  std::complex<double> s11 = 0.0, s12 = 0.0, s22 = 0.0;
  for (const auto& t : terms_) {
    const double l1 = static_cast<double>(t.lambda[0]);
    const double l2 = static_cast<double>(t.lambda[1]);
    const double phase = kTwoPi * (l1 * x[0] + l2 * x[1]);
    const std::complex<double> e =
        t.c * std::complex<double>(std::cos(phase), std::sin(phase));
    s += e;
    s1 += l1 * e;
    s2 += l2 * e;
    s11 += l1 * l1 * e;
    s12 += l1 * l2 * e;
    s22 += l2 * l2 * e;
  }
  JetAtPoint jet;
  jet.f = s.real();
  // d/dx_j multiplies by 2*pi*i*lambda_j.
  jet.grad = {-kTwoPi * s1.imag(), -kTwoPi * s2.imag()};
  jet.f11 = -kTwoPi * kTwoPi * s11.real();
  jet.f12 = -kTwoPi * kTwoPi * s12.real();
  jet.f22 = -kTwoPi * kTwoPi * s22.real();
  return jet;
}

std::vector<double> ToralEigenfunction::sample_grid(int grid_cells) const {
  if (grid_cells < 1) throw std::invalid_argument("sample_grid: grid_cells < 1");
  const int G = grid_cells;
  std::vector<std::complex<double>> unit(G);
  for (int t = 0; t < G; ++t) {
    const double phase = kTwoPi * static_cast<double>(t) / G;
    unit[t] = {std::cos(phase), std::sin(phase)};
  }
  std::vector<std::complex<double>> acc(static_cast<std::size_t>(G) * G, 0.0);
  for (const auto& t : terms_) {
    const int l1 = static_cast<int>(((t.lambda[0] % G) + G) % G);
    const int l2 = static_cast<int>(((t.lambda[1] % G) + G) % G);
    for (int j = 0; j < G; ++j) {
      int idx = static_cast<int>((static_cast<std::int64_t>(l2) * j) % G);
      std::complex<double>* row = acc.data() + static_cast<std::size_t>(j) * G;
      for (int i = 0; i < G; ++i) {
        row[i] += t.c * unit[idx];
        idx += l1;
        if (idx >= G) idx -= G;
      }
    }
  }
  std::vector<double> values(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) values[i] = acc[i].real();
  return values;
}

void ToralEigenfunction::dump(std::ostream& os) const {
  for (const auto& t : terms_) {
    char line[128];
    std::snprintf(line, sizeof line, "%lld %lld %.17g %.17g\n",
                  static_cast<long long>(t.lambda[0]),
                  static_cast<long long>(t.lambda[1]), t.c.real(), t.c.imag());
    os << line;
  }
}

ToralEigenfunction ToralEigenfunction::load(std::istream& is) {
  std::vector<Term> terms;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    long long l1 = 0, l2 = 0;
    double re = 0.0, im = 0.0;
    if (!(ls >> l1 >> l2 >> re >> im))
      throw std::runtime_error("eigenfunction load: bad line: " + line);
    terms.push_back({{l1, l2}, {re, im}});
  }
  return ToralEigenfunction(std::move(terms));
}

void ToralEigenfunction::dump_file(const std::string& path) const {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for write: " + path);
  dump(os);
}

ToralEigenfunction ToralEigenfunction::load_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open for read: " + path);
  return load(is);
}

ToralEigenfunction sample_arithmetic_wave(const LatticeCircle& circle,
                                          RngStream& rng) {
  const double scale =
      1.0 / std::sqrt(2.0 * static_cast<double>(circle.points.size()));
  std::vector<ToralEigenfunction::Term> terms;
  terms.reserve(circle.points.size());
  for (const auto& p : circle.points) {
    if (!in_half_set(p)) continue;
    const double a = rng.next_gaussian();
    const double b = rng.next_gaussian();
    const std::complex<double> c(a * scale, b * scale);
    terms.push_back({p, c});
    terms.push_back({{-p[0], -p[1]}, std::conj(c)});
  }
  return ToralEigenfunction(std::move(terms));
}

namespace {

using Term = ToralEigenfunction::Term;

// Adds the four terms of sin(2*pi*a*u) * sin(2*pi*b*v).
void add_sine_product(std::map<LatticePoint, std::complex<double>>& coeffs,
                      std::int64_t a, std::int64_t b, double amplitude) {
  const double q = amplitude * 0.25;
  coeffs[{a, b}] += std::complex<double>(-q, 0.0);
  coeffs[{a, -b}] += std::complex<double>(q, 0.0);
  coeffs[{-a, b}] += std::complex<double>(q, 0.0);
  coeffs[{-a, -b}] += std::complex<double>(-q, 0.0);
}

// sin(2*pi*<w,x>): conjugate pair with coefficients -i/2, +i/2.
void add_sine(std::map<LatticePoint, std::complex<double>>& coeffs,
              LatticePoint w) {
  coeffs[w] += std::complex<double>(0.0, -0.5);
  coeffs[{-w[0], -w[1]}] += std::complex<double>(0.0, 0.5);
}

// cos(2*pi*<w,x>): 1/2 on both.
void add_cosine(std::map<LatticePoint, std::complex<double>>& coeffs,
                LatticePoint w, double amplitude) {
  coeffs[w] += std::complex<double>(0.5 * amplitude, 0.0);
  coeffs[{-w[0], -w[1]}] += std::complex<double>(0.5 * amplitude, 0.0);
}

ToralEigenfunction from_map(
    const std::map<LatticePoint, std::complex<double>>& coeffs) {
  std::vector<Term> terms;
  for (const auto& [lambda, c] : coeffs)
    if (std::abs(c) > 0.0) terms.push_back({lambda, c});
  return ToralEigenfunction(std::move(terms));
}

}  // namespace

ToralEigenfunction fixture(const std::string& name) {
  std::map<LatticePoint, std::complex<double>> coeffs;
  if (name == "fig1") {
    // sin(2*pi*(8x - y)) + sin(2*pi*(4x + 7y)) + cos(2*pi*(4x - 7y)), n = 65.
    add_sine(coeffs, {8, -1});
    add_sine(coeffs, {4, 7});
    add_cosine(coeffs, {4, -7}, 1.0);
    return from_map(coeffs);
  }
  if (name == "fig2") {
    // 2*(sin 8x sin y + sin 7x sin 4y + sin x sin 8y + sin 4x sin 7y) with
    // x,y rescaled to the unit torus; all 16 frequencies of |lambda|^2 = 65.
    add_sine_product(coeffs, 8, 1, 2.0);
    add_sine_product(coeffs, 7, 4, 2.0);
    add_sine_product(coeffs, 1, 8, 2.0);
    add_sine_product(coeffs, 4, 7, 2.0);
    return from_map(coeffs);
  }
  if (name == "fig3") {
    // 2*cos(2*pi*10x) + cos(2*pi*10y), n = 100.
    add_cosine(coeffs, {10, 0}, 2.0);
    add_cosine(coeffs, {0, 10}, 1.0);
    return from_map(coeffs);
  }
  long long m = 0, n = 0;
  if (std::sscanf(name.c_str(), "grid(%lld,%lld)", &m, &n) == 2) {
    if (m < 1 || n < 1)
      throw std::invalid_argument("fixture: grid indices must be >= 1");
    add_sine_product(coeffs, m, n, 1.0);
    return from_map(coeffs);
  }
  if (std::sscanf(name.c_str(), "cosline(%lld)", &m) == 1) {
    if (m < 1) throw std::invalid_argument("fixture: cosline index must be >= 1");
    add_cosine(coeffs, {m, 0}, 2.0);
    add_cosine(coeffs, {0, m}, 1.0);
    return from_map(coeffs);
  }
  throw std::invalid_argument("fixture: unknown name: " + name);
}

}  // namespace nodal
