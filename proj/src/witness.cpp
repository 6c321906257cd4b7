#include "formhasse/witness.hpp"

#include <cmath>

#include "formhasse/localglobal.hpp"

namespace formhasse {

namespace {

long isqrt(long n) {
  if (n <= 0) return 0;
  auto r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

FourSquares four_squares(long d) {
  if (d < 1) throw Error("four_squares: d must be positive");
  for (long w = isqrt(d); w >= 0; --w) {
    const long r1 = d - w * w;
    for (long x = std::min(w, isqrt(r1)); x >= 0; --x) {
      const long r2 = r1 - x * x;
      for (long y = std::min(x, isqrt(r2)); y >= 0; --y) {
        const long r3 = r2 - y * y;
        const long z = isqrt(r3);
        if (z <= y && z * z == r3) return {w, x, y, z};
      }
    }
  }
  throw Error("four_squares: no decomposition found");  // Lagrange says unreachable
}

KMatrix quaternion_block(const FourSquares& q) {
  const K5Elem w(q.w), x(q.x), y(q.y), z(q.z);
  return KMatrix{{w, x, y, z}, {-x, w, -z, y}, {-y, z, w, -x}, {-z, -y, x, w}};
}

Witness Witness::make(KMatrix p, Form source, Form target) {
  if (source.field() != target.field()) throw Error("Witness: forms live over different fields");
  if (source.dim() != target.dim()) throw Error("Witness: dimension mismatch");
  if (p.rows() != source.dim() || p.cols() != source.dim()) throw Error("Witness: matrix has the wrong shape");
  if (p.determinant().is_zero()) throw Error("Witness: matrix is singular");
  if (!(p.transpose() * source.gram() * p == target.gram())) throw Error("Witness: p^t F p != Q");
  return {std::move(p), std::move(source), std::move(target)};
}

KMatrix Ad_matrix(long d) {
  const KMatrix block = quaternion_block(four_squares(d));
  KMatrix a = KMatrix::identity(7);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) a(i, j) = block(i, j);
  return a;
}

Witness build_Ad(long d) {
  const KMatrix a = Ad_matrix(d);
  return Witness::make(a.transpose(), diag_q({1, 1, 1, 1, 1, 1, -1}).to_form(),
                       diag_q({d, d, d, d, 1, 1, -1}).to_form());
}

// ------------------------------------------------------------ find_witness

namespace {

using IntMatrix = std::vector<std::vector<Int>>;  // row-major

IntMatrix int_product_t(const IntMatrix& k, const IntMatrix& g) {
  // k^t g k
  const std::size_t m = k.size(), c = k.empty() ? 0 : k[0].size();
  IntMatrix gk(m, std::vector<Int>(c, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < m; ++l) {
      if (g[i][l] == 0) continue;
      for (std::size_t j = 0; j < c; ++j) gk[i][j] += g[i][l] * k[l][j];
    }
  IntMatrix out(c, std::vector<Int>(c, 0));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t l = 0; l < m; ++l) {
      if (k[l][i] == 0) continue;
      for (std::size_t j = 0; j < c; ++j) out[i][j] += k[l][i] * gk[l][j];
    }
  return out;
}

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), m = b.size(), c = b.empty() ? 0 : b[0].size();
  IntMatrix out(n, std::vector<Int>(c, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < m; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

// Columns of a unimodular U with r U = (g, 0, ..., 0), minus the first:
// a lattice basis of {x in Z^m : r . x = 0}.
IntMatrix hyperplane_basis(std::vector<Int> r) {
  const std::size_t m = r.size();
  IntMatrix u(m, std::vector<Int>(m, 0));
  for (std::size_t i = 0; i < m; ++i) u[i][i] = 1;
  for (std::size_t j = 1; j < m; ++j) {
    if (r[j] == 0) continue;
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), r[0].get_mpz_t(), r[j].get_mpz_t());
    const Int a = r[0] / g, b = r[j] / g;
    for (std::size_t i = 0; i < m; ++i) {
      const Int c0 = u[i][0], cj = u[i][j];
      u[i][0] = s * c0 + t * cj;
      u[i][j] = -b * c0 + a * cj;
    }
    r[0] = g;
    r[j] = 0;
  }
  IntMatrix basis(m, std::vector<Int>(m - 1, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 1; j < m; ++j) basis[i][j - 1] = u[i][j];
  return basis;
}

Form gram_form(const IntMatrix& g) {
  const std::size_t m = g.size();
  KMatrix k(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) k(i, j) = K5Elem(g[i][j]);
  return {Field::Q, std::move(k)};
}

class Searcher {
 public:
  Searcher(std::vector<Int> scaled_target, const WitnessSearch& opts)
      : target_(std::move(scaled_target)), opts_(opts) {}

  // basis: n x m integer columns spanning the current complement; gram: its
  // Gram matrix under the scaled source form.
  bool solve(std::size_t level, const IntMatrix& basis, const IntMatrix& gram) {
    const std::size_t m = gram.size();
    if (m == 1) {
      Rat s2(target_[level], gram[0][0]);
      s2.canonicalize();
      if (sgn(s2) <= 0 || !is_square(Rat(s2))) return false;
      const Rat s = rational_sqrt(Rat(s2));
      std::vector<Rat> v;
      for (const auto& row : basis) v.push_back(s * row[0]);
      vectors_.push_back(std::move(v));
      return true;
    }
    std::vector<std::int64_t> g(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (!gram[i][j].fits_slong_p()) return false;
        g[i * m + j] = gram[i][j].get_si();
      }
    std::vector<__int128> goals;
    for (long den : opts_.denominators) {
      const Int goal = target_[level] * den * den;
      if (!goal.fits_slong_p()) return false;
      goals.push_back(static_cast<__int128>(goal.get_si()));
    }

    int tried = 0;
    std::vector<long> c(m, 0);
    for (long radius = 1; radius <= opts_.bound; ++radius) {
      // odometer over [-radius, radius]^m, keeping vectors on the shell whose
      // first nonzero coordinate is positive
      std::fill(c.begin(), c.end(), -radius);
      for (;;) {
        if (on_shell(c, radius) && first_nonzero_positive(c)) {
          const __int128 val = evaluate(g, c);
          for (std::size_t di = 0; di < goals.size(); ++di) {
            if (val != goals[di]) continue;
            if (++tried > opts_.max_candidates) return false;
            if (try_candidate(level, basis, gram, c, opts_.denominators[di])) return true;
          }
        }
        std::size_t i = m;
        while (i > 0) {
          --i;
          if (c[i] < radius) {
            ++c[i];
            break;
          }
          c[i] = -radius;
          if (i == 0) {
            i = m + 1;
            break;
          }
        }
        if (i == m + 1) break;
      }
    }
    return false;
  }

  const std::vector<std::vector<Rat>>& vectors() const { return vectors_; }

 private:
  static bool on_shell(const std::vector<long>& c, long radius) {
    for (long x : c)
      if (x == radius || x == -radius) return true;
    return false;
  }

  static bool first_nonzero_positive(const std::vector<long>& c) {
    for (long x : c)
      if (x != 0) return x > 0;
    return false;
  }

  static __int128 evaluate(const std::vector<std::int64_t>& g, const std::vector<long>& c) {
    const std::size_t m = c.size();
    __int128 total = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (c[i] == 0) continue;
      __int128 row = 0;
      for (std::size_t j = 0; j < m; ++j) row += static_cast<__int128>(g[i * m + j]) * c[j];
      total += row * c[i];
    }
    return total;
  }

  bool try_candidate(std::size_t level, const IntMatrix& basis, const IntMatrix& gram, const std::vector<long>& c,
                     long den) {
    const std::size_t m = gram.size();
    std::vector<Int> r(m, 0);  // gram * c, the linear form cutting out the complement
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) r[i] += gram[i][j] * c[j];
    const IntMatrix k = hyperplane_basis(r);
    const IntMatrix next_gram = int_product_t(k, gram);

    std::vector<K5Elem> tail;
    for (std::size_t i = level + 1; i < target_.size(); ++i) tail.emplace_back(target_[i]);
    if (!equivalent_Q(gram_form(next_gram), DiagForm(Field::Q, tail).to_form())) return false;

    std::vector<Rat> v;
    for (const auto& row : basis) {
      Int acc = 0;
      for (std::size_t j = 0; j < m; ++j) acc += row[j] * c[j];
      v.emplace_back(acc, den);
      v.back().canonicalize();
    }
    vectors_.push_back(std::move(v));
    if (solve(level + 1, int_mul(basis, k), next_gram)) return true;
    vectors_.pop_back();
    return false;
  }

  std::vector<Int> target_;
  WitnessSearch opts_;
  std::vector<std::vector<Rat>> vectors_;
};

}  // namespace

std::optional<Witness> find_witness(const DiagForm& source, const DiagForm& target, const WitnessSearch& opts) {
  if (source.field() != Field::Q || target.field() != Field::Q)
    throw Error("find_witness: both forms must be over Q");
  if (source.dim() != target.dim()) throw Error("find_witness: dimension mismatch");
  const std::size_t n = source.dim();
  if (source == target) return Witness::make(KMatrix::identity(n), source.to_form(), target.to_form());
  if (!equivalent_Q(source, target)) return std::nullopt;

  Int scale = 1;
  for (const auto* form : {&source, &target})
    for (const auto& e : form->entries()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.a().get_den_mpz_t());
  IntMatrix gram(n, std::vector<Int>(n, 0));
  IntMatrix basis(n, std::vector<Int>(n, 0));
  std::vector<Int> goals;
  for (std::size_t i = 0; i < n; ++i) {
    gram[i][i] = Rat(source[i].a() * scale).get_num();
    basis[i][i] = 1;
    goals.push_back(Rat(target[i].a() * scale).get_num());
  }

  Searcher searcher(std::move(goals), opts);
  if (!searcher.solve(0, basis, gram)) return std::nullopt;
  KMatrix p(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) p(i, j) = K5Elem(searcher.vectors()[j][i]);
  return Witness::make(std::move(p), source.to_form(), target.to_form());
}

std::optional<Witness> find_witness(const DiagForm& source, const DiagForm& target, long bound) {
  WitnessSearch opts;
  opts.bound = bound;
  return find_witness(source, target, opts);
}

// ------------------------------------------------------------ isometries

KMatrix embed_block(const KMatrix& m, std::size_t n, std::size_t offset) {
  if (!m.is_square()) throw Error("embed_block: block must be square");
  if (offset + m.rows() > n) throw Error("embed_block: block does not fit at the requested offset");
  KMatrix out = KMatrix::identity(n);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(offset + i, offset + j) = m(i, j);
  return out;
}

KMatrix embed_block(const KMatrix& m, std::size_t n, std::size_t offset, const Form& form) {
  if (form.dim() != n) throw Error("embed_block: form has the wrong dimension");
  KMatrix out = embed_block(m, n, offset);
  if (!preserves(out, form)) throw Error("embed_block: embedded matrix does not preserve the form");
  return out;
}

bool preserves(const KMatrix& m, const Form& f) {
  if (m.rows() != f.dim() || m.cols() != f.dim()) return false;
  return m.transpose() * f.gram() * m == f.gram();
}

bool is_integral(const KMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!OInt::from_k5(m(i, j))) return false;
  return true;
}

Conjugated conjugate_isometry(const Witness& wit, const KMatrix& m) {
  if (!preserves(m, wit.target())) throw Error("conjugate_isometry: matrix does not preserve the witness target");
  KMatrix x = wit.matrix() * m * wit.matrix().inverse();
  if (!preserves(x, wit.source())) throw Error("conjugate_isometry: conjugate does not preserve the source form");
  const bool integral = is_integral(x);
  K5Elem det = x.determinant();
  return {std::move(x), integral, std::move(det)};
}

}  // namespace formhasse
