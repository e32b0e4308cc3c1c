#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nodal/lattice.hpp"
#include "nodal/rng.hpp"

namespace nodal {

using Vec2 = std::array<double, 2>;

// Value, gradient and Hessian of f at one torus point.
struct JetAtPoint {
  double f = 0.0;
  Vec2 grad{0.0, 0.0};
  double f11 = 0.0, f12 = 0.0, f22 = 0.0;
};

// Real trigonometric polynomial f(x) = sum_lambda c_lambda e(<lambda,x>) on
// the unit torus, with e(t) = exp(2*pi*i*t) and c_{-lambda} = conj(c_lambda).
class ToralEigenfunction {
 public:
  struct Term {
    LatticePoint lambda;
    std::complex<double> c;
  };

  // Validates conjugate symmetry (1e-12), rejects duplicate frequencies and
  // the zero polynomial; n is set when all frequencies share one norm.
  explicit ToralEigenfunction(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::optional<std::int64_t> n() const { return n_; }
  bool monochromatic() const { return n_.has_value(); }
  double eigenvalue() const;  // 4*pi^2*n, monochromatic only

  double value(Vec2 x) const;
  JetAtPoint evaluate_jet(Vec2 x) const;

  // f on the G x G periodic grid x = (i/G, j/G), row-major in j (outer) and
  // i (inner): values[j*G + i]. Uses the G-th roots of unity, so grid phases
  // are exact.
  std::vector<double> sample_grid(int grid_cells) const;

  // Plain text: one term per line, "lambda1 lambda2 re im".
  void dump(std::ostream& os) const;
  static ToralEigenfunction load(std::istream& is);
  void dump_file(const std::string& path) const;
  static ToralEigenfunction load_file(const std::string& path);

 private:
  std::vector<Term> terms_;  // sorted by frequency
  std::optional<std::int64_t> n_;
};

// Gaussian arithmetic random wave on the circle: c_lambda = (a+ib)/sqrt(2N)
// on the half-set {lambda1>0 or (lambda1=0, lambda2>0)}, mirrored by
// conjugation. Normalized so that E[f(x)^2] = 1.
ToralEigenfunction sample_arithmetic_wave(const LatticeCircle& circle,
                                          RngStream& rng);

// Named fixtures: fig1, fig2, fig3, grid(m,n), cosline(m).
ToralEigenfunction fixture(const std::string& name);

}  // namespace nodal
