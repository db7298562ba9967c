#include "yukawa/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace yukawa {
namespace {

void to_real_coords(CSpan z, std::vector<double>& x) {
  x.resize(2 * z.size());
  for (std::size_t k = 0; k < z.size(); ++k) {
    x[2 * k] = z[k].real();
    x[2 * k + 1] = z[k].imag();
  }
}

void require_dim(CSpan z, int n) {
  if (static_cast<int>(z.size()) != n) throw DomainError("point dimension does not match solution");
}

// Horner evaluation of sum c_k z^k and its derivative.
std::pair<Complex, Complex> poly_and_derivative(const CVec& c, Complex z) {
  Complex p{};
  Complex dp{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

std::string format_cvec(const CVec& v) {
  std::ostringstream os;
  os.precision(17);
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << '(' << v[i].real() << ',' << v[i].imag() << ')';
  }
  os << ']';
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------

HarmonicPolynomial::HarmonicPolynomial(int n, int degree, std::vector<Monomial> terms)
    : n_(n), degree_(degree), terms_(std::move(terms)) {
  if (n < 1) throw DomainError("harmonic polynomial: dimension must be positive");
  if (degree < 0) throw DomainError("harmonic polynomial: degree must be nonnegative");
  double coef_scale = 1.0;
  for (const auto& t : terms_) {
    if (static_cast<int>(t.powers.size()) != 2 * n) {
      throw DomainError("harmonic polynomial: monomial needs 2n exponents");
    }
    int d = 0;
    for (int e : t.powers) {
      if (e < 0) throw DomainError("harmonic polynomial: negative exponent");
      d += e;
    }
    if (d != degree) throw DomainError("harmonic polynomial: monomial is not of the stated degree");
    coef_scale = std::max(coef_scale, std::abs(t.coef));
  }

  // Harmonicity by sampling the Laplacian at fixed points of the unit ball.
  std::vector<double> x(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < 8; ++k) {
    double sq = 0.0;
    for (int i = 0; i < 2 * n; ++i) {
      x[static_cast<std::size_t>(i)] = std::sin(1.3 * (i + 1) * (k + 1) + 0.7);
      sq += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    }
    const double scale = 0.9 / std::sqrt(sq);
    for (auto& xi : x) xi *= scale;
    if (std::abs(eval(x).laplacian) > 1e-10 * coef_scale) {
      throw DomainError("harmonic polynomial: Laplacian does not vanish");
    }
  }
}

HarmonicPolynomial::Eval HarmonicPolynomial::eval(std::span<const double> x) const {
  const auto nx = static_cast<std::size_t>(2 * n_);
  const auto dm = static_cast<std::size_t>(degree_) + 1;
  // powers[i * dm + k] = x_i^k
  std::vector<double> powers(nx * dm, 1.0);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t k = 1; k < dm; ++k) powers[i * dm + k] = powers[i * dm + k - 1] * x[i];
  }
  auto pw = [&](std::size_t i, int k) { return k < 0 ? 0.0 : powers[i * dm + static_cast<std::size_t>(k)]; };

  Eval out{Complex{}, CVec(nx), Complex{}};
  for (const auto& t : terms_) {
    double prod = 1.0;
    for (std::size_t i = 0; i < nx; ++i) prod *= pw(i, t.powers[i]);
    out.value += t.coef * prod;
    for (std::size_t i = 0; i < nx; ++i) {
      const int e = t.powers[i];
      if (e == 0) continue;
      double others = 1.0;
      for (std::size_t j = 0; j < nx; ++j) {
        if (j != i) others *= pw(j, t.powers[j]);
      }
      out.grad[i] += t.coef * (e * pw(i, e - 1) * others);
      if (e >= 2) out.laplacian += t.coef * (e * (e - 1) * pw(i, e - 2) * others);
    }
  }
  return out;
}

Complex HarmonicPolynomial::value(std::span<const double> x) const {
  Complex v{};
  for (const auto& t : terms_) {
    double prod = 1.0;
    for (std::size_t i = 0; i < t.powers.size(); ++i) {
      for (int e = 0; e < t.powers[i]; ++e) prod *= x[i];
    }
    v += t.coef * prod;
  }
  return v;
}

bool HarmonicPolynomial::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Monomial& t) { return t.coef.imag() == 0.0; });
}

HarmonicPolynomial HarmonicPolynomial::catalogue(std::string_view name, int n) {
  if (n < 1) throw DomainError("harmonic catalogue: dimension must be positive");
  const auto nx = static_cast<std::size_t>(2 * n);
  auto mono = [&](Complex c, std::initializer_list<std::pair<int, int>> exps) {
    Monomial m{c, std::vector<int>(nx, 0)};
    for (auto [idx, e] : exps) m.powers[static_cast<std::size_t>(idx)] = e;
    return m;
  };
  auto need = [&](int k) {
    if (k > n) throw DomainError("harmonic catalogue: entry needs more complex coordinates");
  };
  // x_k has index 2(k-1), y_k has index 2(k-1)+1.
  auto coord_index = [&](std::string_view prefix) -> int {
    const std::string rest(name.substr(prefix.size()));
    const int k = std::stoi(rest);
    if (k < 1) throw DomainError("harmonic catalogue: coordinate index must be >= 1");
    need(k);
    return k;
  };

  if (name == "one") return HarmonicPolynomial(n, 0, {mono(1.0, {})});
  if (name == "zero") return HarmonicPolynomial(n, 0, {mono(0.0, {})});
  if (name == "re_z1_sq") {
    return HarmonicPolynomial(n, 2, {mono(1.0, {{0, 2}}), mono(-1.0, {{1, 2}})});
  }
  if (name == "re_z1z2") {
    need(2);
    return HarmonicPolynomial(n, 2, {mono(1.0, {{0, 1}, {2, 1}}), mono(-1.0, {{1, 1}, {3, 1}})});
  }
  if (name == "z1z2") {
    need(2);
    const Complex i{0.0, 1.0};
    return HarmonicPolynomial(n, 2,
                              {mono(1.0, {{0, 1}, {2, 1}}), mono(-1.0, {{1, 1}, {3, 1}}),
                               mono(i, {{0, 1}, {3, 1}}), mono(i, {{1, 1}, {2, 1}})});
  }
  if (name == "abs_z1_sq_minus_abs_z2_sq") {
    need(2);
    return HarmonicPolynomial(n, 2,
                              {mono(1.0, {{0, 2}}), mono(1.0, {{1, 2}}), mono(-1.0, {{2, 2}}),
                               mono(-1.0, {{3, 2}})});
  }
  if (name.starts_with("re_z")) {
    const int k = coord_index("re_z");
    return HarmonicPolynomial(n, 1, {mono(1.0, {{2 * (k - 1), 1}})});
  }
  if (name.starts_with("im_z")) {
    const int k = coord_index("im_z");
    return HarmonicPolynomial(n, 1, {mono(1.0, {{2 * (k - 1) + 1, 1}})});
  }
  if (name.starts_with("z") && name.size() > 1) {
    const int k = coord_index("z");
    return HarmonicPolynomial(n, 1,
                              {mono(1.0, {{2 * (k - 1), 1}}), mono(Complex{0.0, 1.0}, {{2 * (k - 1) + 1, 1}})});
  }
  throw DomainError("harmonic catalogue: unknown entry '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------

RadialProfile::RadialProfile(int n, int m, double lambda, int truncation)
    : n_(n), m_(m), lambda_(lambda) {
  if (n < 1 || m < 0) throw DomainError("radial profile: need n >= 1 and m >= 0");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw DomainError("radial profile: lambda must be >= 0");
  if (truncation < 1) throw DomainError("radial profile: truncation must be positive");
  coeffs_.resize(static_cast<std::size_t>(truncation) + 1);
  coeffs_[0] = 1.0;
  for (int j = 0; j < truncation; ++j) {
    coeffs_[static_cast<std::size_t>(j) + 1] =
        lambda * coeffs_[static_cast<std::size_t>(j)] / (4.0 * (j + 1.0) * (j + n + m));
  }
}

RadialProfile::Eval RadialProfile::eval(double s) const {
  double u = 0.0, du = 0.0, d2u = 0.0;
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    d2u = d2u * s + 2.0 * du;
    du = du * s + u;
    u = u * s + coeffs_[j];
  }
  return {u, du, d2u};
}

double RadialProfile::value(double s) const {
  double u = 0.0;
  for (std::size_t j = coeffs_.size(); j-- > 0;) u = u * s + coeffs_[j];
  return u;
}

double RadialProfile::tail_bound(double lambda, int truncation) {
  if (lambda == 0.0) return 0.0;
  const double j1 = truncation + 1.0;
  const double log_bound = std::log(2.0) + j1 * std::log(lambda / 4.0) - 2.0 * std::lgamma(j1 + 1.0);
  return std::exp(log_bound);
}

// ---------------------------------------------------------------------------

std::string_view to_string(Family f) {
  switch (f) {
    case Family::exponential: return "exponential";
    case Family::separable: return "separable";
    case Family::planar_harmonic: return "planar_harmonic";
  }
  return "unknown";
}

Solution::Solution(Family family, int n, double lambda, Params params)
    : family_(family), n_(n), lambda_(lambda), params_(std::move(params)) {}

Solution make_exponential(int n, CVec a, CVec b) {
  if (n < 1) throw DomainError("make_exponential: dimension must be positive");
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n) {
    throw DomainError("make_exponential: coefficient vectors must have length n");
  }
  Complex ab{};
  for (int k = 0; k < n; ++k) ab += a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)];
  if (std::abs(ab.imag()) > 1e-14 * (1.0 + std::abs(ab))) {
    throw DomainError("make_exponential: sum a_k b_k must be real");
  }
  if (ab.real() < 0.0) throw DomainError("make_exponential: sum a_k b_k must be nonnegative");
  const double lambda = 4.0 * ab.real();
  return Solution(Family::exponential, n, lambda, ExponentialParams{std::move(a), std::move(b)});
}

Solution make_separable(int n, HarmonicPolynomial h, double lambda, int truncation) {
  if (h.dim() != n) throw DomainError("make_separable: harmonic factor has wrong dimension");
  if (truncation < 20) throw DomainError("make_separable: truncation must be >= 20");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw DomainError("make_separable: lambda must be >= 0");
  if (RadialProfile::tail_bound(lambda, truncation) > 1e-14) {
    throw DomainError("make_separable: series tail bound exceeds 1e-14; raise truncation");
  }
  RadialProfile profile(n, h.degree(), lambda, truncation);
  return Solution(Family::separable, n, lambda, SeparableParams{std::move(h), std::move(profile)});
}

Solution make_planar_harmonic(CVec h_coeffs, CVec g_coeffs) {
  return Solution(Family::planar_harmonic, 1, 0.0,
                  PlanarHarmonicParams{std::move(h_coeffs), std::move(g_coeffs)});
}

Solution with_lambda(const Solution& s, double lambda) {
  if (!(lambda >= 0.0)) throw DomainError("with_lambda: lambda must be >= 0");
  return std::visit(
      [&](const auto& p) -> Solution {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, ExponentialParams>) {
          if (s.lambda() == 0.0) {
            if (lambda == 0.0) return s;
            throw DomainError("with_lambda: cannot rescale an exponential with sum a_k b_k = 0");
          }
          CVec b = p.b;
          for (auto& bk : b) bk *= lambda / s.lambda();
          return make_exponential(s.dim(), p.a, std::move(b));
        } else if constexpr (std::is_same_v<P, SeparableParams>) {
          return make_separable(s.dim(), p.harmonic, lambda, p.profile.truncation());
        } else {
          if (lambda != 0.0) throw DomainError("with_lambda: planar harmonic maps have lambda = 0");
          return s;
        }
      },
      s.params());
}

Complex Solution::value(CSpan z) const {
  require_dim(z, n_);
  return std::visit(
      [&](const auto& p) -> Complex {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, ExponentialParams>) {
          Complex e{};
          for (std::size_t k = 0; k < z.size(); ++k) e += p.a[k] * z[k] + p.b[k] * std::conj(z[k]);
          return std::exp(e);
        } else if constexpr (std::is_same_v<P, SeparableParams>) {
          thread_local std::vector<double> x;
          to_real_coords(z, x);
          const double s = squared_norm(z);
          return p.profile.value(s) * p.harmonic.value(x);
        } else {
          const auto [h, dh] = poly_and_derivative(p.h, z[0]);
          const auto [g, dg] = poly_and_derivative(p.g, z[0]);
          return h + std::conj(g);
        }
      },
      params_);
}

Jet Solution::jet(CSpan z) const {
  require_dim(z, n_);
  const auto n = static_cast<std::size_t>(n_);
  Jet out{Complex{}, CVec(n), CVec(n), Complex{}};
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, ExponentialParams>) {
          Complex e{};
          Complex ab{};
          for (std::size_t k = 0; k < n; ++k) {
            e += p.a[k] * z[k] + p.b[k] * std::conj(z[k]);
            ab += p.a[k] * p.b[k];
          }
          const Complex f = std::exp(e);
          out.value = f;
          for (std::size_t k = 0; k < n; ++k) {
            out.dz[k] = p.a[k] * f;
            out.dzbar[k] = p.b[k] * f;
          }
          out.laplacian = 4.0 * ab * f;
        } else if constexpr (std::is_same_v<P, SeparableParams>) {
          thread_local std::vector<double> x;
          to_real_coords(z, x);
          double s = 0.0;
          for (double xi : x) s += xi * xi;
          const auto u = p.profile.eval(s);
          const auto h = p.harmonic.eval(x);
          Complex x_dot_grad{};
          for (std::size_t i = 0; i < x.size(); ++i) x_dot_grad += x[i] * h.grad[i];
          out.value = u.u * h.value;
          const Complex i_unit{0.0, 1.0};
          for (std::size_t k = 0; k < n; ++k) {
            const Complex fx = 2.0 * u.du * x[2 * k] * h.value + u.u * h.grad[2 * k];
            const Complex fy = 2.0 * u.du * x[2 * k + 1] * h.value + u.u * h.grad[2 * k + 1];
            out.dz[k] = 0.5 * (fx - i_unit * fy);
            out.dzbar[k] = 0.5 * (fx + i_unit * fy);
          }
          out.laplacian = (4.0 * s * u.d2u + 4.0 * static_cast<double>(n) * u.du) * h.value +
                          4.0 * u.du * x_dot_grad + u.u * h.laplacian;
        } else {
          const auto [h, dh] = poly_and_derivative(p.h, z[0]);
          const auto [g, dg] = poly_and_derivative(p.g, z[0]);
          out.value = h + std::conj(g);
          out.dz[0] = dh;
          out.dzbar[0] = std::conj(dg);
          out.laplacian = 0.0;
        }
      },
      params_);
  return out;
}

PointEvaluator Solution::evaluator() const {
  return [self = *this](CSpan z) { return self.value(z); };
}

std::string Solution::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << to_string(family_) << "(n=" << n_ << ", lambda=" << lambda_;
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, ExponentialParams>) {
          os << ", a=" << format_cvec(p.a) << ", b=" << format_cvec(p.b);
        } else if constexpr (std::is_same_v<P, SeparableParams>) {
          os << ", m=" << p.harmonic.degree() << ", terms=" << p.harmonic.terms().size()
             << ", truncation=" << p.profile.truncation();
        } else {
          os << ", h=" << format_cvec(p.h) << ", g=" << format_cvec(p.g);
        }
      },
      params_);
  os << ')';
  return os.str();
}

double yukawa_residual(const Solution& s, std::span<const BallPoint> sample) {
  double worst = 0.0;
  for (const auto& z : sample) {
    require_interior(z, "yukawa_residual");
    const Jet j = s.jet(z);
    worst = std::max(worst, std::abs(j.laplacian - s.lambda() * j.value) / (1.0 + std::abs(j.value)));
  }
  return worst;
}

double poisson_kernel(int n, double r, CSpan z, CSpan zeta) {
  if (static_cast<int>(z.size()) != n || static_cast<int>(zeta.size()) != n) {
    throw DomainError("poisson_kernel: dimension mismatch");
  }
  if (std::abs(norm(zeta) - 1.0) > 1e-12) throw DomainError("poisson_kernel: zeta must be a unit vector");
  const double z2 = squared_norm(z);
  if (!(r > 0.0) || !(std::sqrt(z2) < r)) throw DomainError("poisson_kernel: requires |z| < r");
  double d2 = 0.0;
  for (std::size_t k = 0; k < z.size(); ++k) d2 += std::norm(z[k] - r * zeta[k]);
  return std::pow(r, 2 * n - 2) * (r * r - z2) / std::pow(d2, n);
}

}  // namespace yukawa
