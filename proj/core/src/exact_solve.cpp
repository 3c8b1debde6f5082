#include <cmath>
#include <numeric>
#include <utility>

#include "shapewalk/errors.hpp"
#include "shapewalk/linear_solve.hpp"

namespace shapewalk {

std::vector<Rational> solve_exact(IntegerMatrix m, std::vector<mpz_class> rhs) {
  const std::size_t n = m.size();
  if (rhs.size() != n) throw DimensionError("solve_exact: rhs length differs from matrix size");
  for (auto& row : m) {
    if (row.size() != n) throw DimensionError("solve_exact: matrix must be square");
    row.push_back(0);
  }
  for (std::size_t i = 0; i < n; ++i) m[i][n] = std::move(rhs[i]);

  mpz_class previous = 1;
  mpz_class t;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == n) throw NumericError("solve_exact: singular matrix", 0.0);
    std::swap(m[pivot], m[c]);

    const mpz_class& p = m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const mpz_class factor = m[r][c];
      for (std::size_t j = c + 1; j <= n; ++j) {
        // m[r][j] = (m[r][j] * p - factor * m[c][j]) / previous; the division is exact.
        mpz_mul(t.get_mpz_t(), m[r][j].get_mpz_t(), p.get_mpz_t());
        mpz_submul(t.get_mpz_t(), factor.get_mpz_t(), m[c][j].get_mpz_t());
        mpz_divexact(m[r][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      m[r][c] = 0;
    }
    previous = p;
  }

  std::vector<Rational> x(n);
  for (std::size_t r = n; r-- > 0;) {
    Rational sum(m[r][n]);
    for (std::size_t j = r + 1; j < n; ++j) {
      if (sgn(m[r][j]) != 0) sum -= Rational(m[r][j]) * x[j];
    }
    x[r] = sum / Rational(m[r][r]);
    x[r].canonicalize();
  }
  return x;
}

std::vector<Rational> solve_exact(const std::vector<std::vector<Rational>>& matrix,
                                  const std::vector<Rational>& rhs) {
  const std::size_t n = matrix.size();
  if (rhs.size() != n) throw DimensionError("solve_exact: rhs length differs from matrix size");
  IntegerMatrix m(n);
  std::vector<mpz_class> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw DimensionError("solve_exact: matrix must be square");
    mpz_class scale = rhs[i].get_den();
    for (const Rational& v : matrix[i]) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
    m[i].reserve(n);
    for (const Rational& v : matrix[i]) m[i].push_back(v.get_num() * (scale / v.get_den()));
    b[i] = rhs[i].get_num() * (scale / rhs[i].get_den());
  }
  return solve_exact(std::move(m), std::move(b));
}

Potential<Rational> solve_laplacian_exact(const ShapeGraph& g, const Potential<Rational>& rhs,
                                          std::uint32_t gauge_vertex) {
  if (rhs.order() != g.order()) throw DimensionError("laplacian rhs order differs from graph");
  const std::size_t n = g.vertex_count();
  if (gauge_vertex >= n) throw DimensionError("gauge vertex outside V_K");

  Rational total = 0;
  for (const Rational& v : rhs.values()) total += v;
  if (sgn(total) != 0) throw PreconditionError("laplacian rhs must sum to zero");

  // Integer right-hand side: the solution is scaled by the lcm of denominators.
  mpz_class scale = 1;
  for (const Rational& v : rhs.values()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());

  IntegerMatrix m(n, std::vector<mpz_class>(n));
  std::vector<mpz_class> b(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (v == gauge_vertex) {
      m[v][v] = 1;
      b[v] = 0;
      continue;
    }
    for (const EdgeRecord& e : g.out_edges(v)) {
      if (e.loop) continue;
      m[v][e.head] += 1;
      m[v][v] -= 1;
    }
    b[v] = rhs[v].get_num() * (scale / rhs[v].get_den());
  }

  std::vector<Rational> x = solve_exact(std::move(m), std::move(b));
  const Rational inverse_scale(mpz_class(1), scale);
  for (Rational& v : x) {
    v *= inverse_scale;
    v.canonicalize();
  }
  return Potential<Rational>(g.order(), std::move(x));
}

namespace {

// y = -div(grad x), the positive semidefinite graph Laplacian.
void apply_laplacian(const ShapeGraph& g, const std::vector<double>& x, std::vector<double>& y) {
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    double sum = 0.0;
    for (const EdgeRecord& e : g.out_edges(v)) {
      if (!e.loop) sum += x[v] - x[e.head];
    }
    y[v] = sum;
  }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

}  // namespace

Potential<double> solve_laplacian_cg(const ShapeGraph& g, const Potential<double>& rhs,
                                     std::uint32_t gauge_vertex, double relative_tolerance,
                                     int max_iterations, CgReport* report) {
  if (rhs.order() != g.order()) throw DimensionError("laplacian rhs order differs from graph");
  const std::size_t n = g.vertex_count();
  if (gauge_vertex >= n) throw DimensionError("gauge vertex outside V_K");

  std::vector<double> b(n);
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = -rhs[static_cast<std::uint32_t>(i)];
    mean += b[i];
  }
  mean /= static_cast<double>(n);
  for (double& v : b) v -= mean;

  std::vector<double> x(n, 0.0);
  const double b_norm = std::sqrt(dot(b, b));
  int iterations = 0;
  double relative = 0.0;
  if (b_norm > 0.0) {
    std::vector<double> r = b;
    std::vector<double> p = r;
    std::vector<double> q(n);
    double rr = dot(r, r);
    relative = std::sqrt(rr) / b_norm;
    while (relative > relative_tolerance) {
      if (iterations >= max_iterations) {
        throw NumericError("conjugate gradients did not converge", relative);
      }
      apply_laplacian(g, p, q);
      const double alpha = rr / dot(p, q);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] += alpha * p[i];
        r[i] -= alpha * q[i];
      }
      const double rr_next = dot(r, r);
      for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + (rr_next / rr) * p[i];
      rr = rr_next;
      relative = std::sqrt(rr) / b_norm;
      ++iterations;
    }
  }

  const double gauge = x[gauge_vertex];
  for (double& v : x) v -= gauge;
  if (report != nullptr) *report = CgReport{iterations, relative};
  return Potential<double>(g.order(), std::move(x));
}

}  // namespace shapewalk
