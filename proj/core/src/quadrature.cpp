#include "platewave/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "platewave/errors.hpp"

namespace pw {

namespace {

// Edge-midpoint rule, exact through degree 2.
TriangleRule make_degree2() {
  TriangleRule r;
  r.points = {{0.5, 0.5, 0.0}, {0.0, 0.5, 0.5}, {0.5, 0.0, 0.5}};
  r.weights = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  return r;
}

// Six-point symmetric rule (Dunavant), exact through degree 4.
TriangleRule make_degree4() {
  TriangleRule r;
  const double a1 = 0.445948490915965;
  const double w1 = 0.223381589678011;
  const double a2 = 0.091576213509771;
  const double w2 = 0.109951743655322;
  for (const auto& [a, w] : {std::pair{a1, w1}, std::pair{a2, w2}}) {
    const double b = 1.0 - 2.0 * a;
    r.points.push_back({b, a, a});
    r.points.push_back({a, b, a});
    r.points.push_back({a, a, b});
    r.weights.insert(r.weights.end(), 3, w);
  }
  return r;
}

// Gauss-Legendre nodes/weights on [0,1] by Newton iteration on P_n.
void gauss_legendre_01(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < n; ++i) {
    // Chebyshev initial guess on [-1,1]
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[i] = 0.5 * (1.0 + t);
    w[i] = 1.0 / ((1.0 - t * t) * dp * dp);
  }
}

// Duffy-collapsed tensor rule: exact for total degree <= 2n - 2 on the
// triangle (the Jacobi weight (1-u) raises the u-degree by one).
TriangleRule make_collapsed(int degree) {
  const int n = degree / 2 + 2;
  std::vector<double> gx, gw;
  gauss_legendre_01(n, gx, gw);
  TriangleRule r;
  r.points.reserve(static_cast<std::size_t>(n) * n);
  r.weights.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double u = gx[i];
      const double v = gx[j] * (1.0 - u);
      r.points.push_back({1.0 - u - v, u, v});
      r.weights.push_back(2.0 * gw[i] * gw[j] * (1.0 - u));
    }
  }
  return r;
}

}  // namespace

const TriangleRule& triangle_rule(int degree) {
  if (degree < 0) throw InvalidArgumentError("triangle_rule: degree must be >= 0");
  static std::map<int, TriangleRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(degree);
  if (it != cache.end()) return it->second;

  TriangleRule rule;
  if (degree <= 2)
    rule = make_degree2();
  else if (degree <= 4)
    rule = make_degree4();
  else
    rule = make_collapsed(degree);
  return cache.emplace(degree, std::move(rule)).first->second;
}

}  // namespace pw
