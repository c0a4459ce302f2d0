#include "orbitkit/exact_linalg.hpp"

#include <algorithm>
#include <utility>

namespace orbitkit {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw LinalgError("mat_mul: dimension mismatch");
  IntMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& xi = x.at(i, k);
      if (xi == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        if (y.at(k, j) != 0) r.at(i, j) += xi * y.at(k, j);
    }
  return r;
}

std::vector<Int> mat_apply(const IntMatrix& x, const std::vector<Int>& v) {
  if (x.cols != static_cast<int>(v.size())) throw LinalgError("mat_apply: dimension mismatch");
  std::vector<Int> r(x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j)
      if (x.at(i, j) != 0 && v[j] != 0) r[i] += x.at(i, j) * v[j];
  return r;
}

namespace {

// Row/column operations on the working matrix w, mirrored into u, u_inv,
// v, v_inv so that  a = u * w * v  stays true throughout.
struct SnfState {
  IntMatrix w, u, ui, v, vi;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < w.cols; ++c) std::swap(w.at(i, c), w.at(j, c));
    for (int r = 0; r < u.rows; ++r) std::swap(u.at(r, i), u.at(r, j));
    for (int c = 0; c < ui.cols; ++c) std::swap(ui.at(i, c), ui.at(j, c));
  }
  // row j += k * row i
  void add_row(int i, int j, const Int& k) {
    if (k == 0) return;
    for (int c = 0; c < w.cols; ++c) w.at(j, c) += k * w.at(i, c);
    for (int r = 0; r < u.rows; ++r) u.at(r, i) -= k * u.at(r, j);
    for (int c = 0; c < ui.cols; ++c) ui.at(j, c) += k * ui.at(i, c);
  }
  void negate_row(int i) {
    for (int c = 0; c < w.cols; ++c) w.at(i, c) = -w.at(i, c);
    for (int r = 0; r < u.rows; ++r) u.at(r, i) = -u.at(r, i);
    for (int c = 0; c < ui.cols; ++c) ui.at(i, c) = -ui.at(i, c);
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < w.rows; ++r) std::swap(w.at(r, i), w.at(r, j));
    for (int c = 0; c < v.cols; ++c) std::swap(v.at(i, c), v.at(j, c));
    for (int r = 0; r < vi.rows; ++r) std::swap(vi.at(r, i), vi.at(r, j));
  }
  // col j += k * col i
  void add_col(int i, int j, const Int& k) {
    if (k == 0) return;
    for (int r = 0; r < w.rows; ++r) w.at(r, j) += k * w.at(r, i);
    for (int c = 0; c < v.cols; ++c) v.at(i, c) -= k * v.at(j, c);
    for (int r = 0; r < vi.rows; ++r) vi.at(r, j) += k * vi.at(r, i);
  }
};

}  // namespace

namespace {

// quotient rounded to nearest, so remainders satisfy |r| <= |b|/2
Int round_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (2 * int_abs(r) > int_abs(b)) {
    if ((r > 0) == (b > 0))
      ++q;
    else
      --q;
  }
  return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const int m = a.rows, n = a.cols;
  SnfState s{a, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n),
             IntMatrix::identity(n)};

  int t = 0;
  const int limit = std::min(m, n);
  while (t < limit) {
    // re-select the globally minimal |entry| of the block as pivot each pass;
    // with rounded division this keeps the working entries from blowing up
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        const Int& e = s.w.at(i, j);
        if (e == 0) continue;
        if (pi < 0 || int_abs(e) < int_abs(s.w.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    s.swap_rows(t, pi);
    s.swap_cols(t, pj);

    bool dirty = false;
    for (int i = t + 1; i < m; ++i) {
      if (s.w.at(i, t) == 0) continue;
      s.add_row(t, i, -round_div(s.w.at(i, t), s.w.at(t, t)));
      if (s.w.at(i, t) != 0) dirty = true;
    }
    if (dirty) continue;  // a remainder is now smaller than the pivot
    // column t below row t is zero now, so column operations only touch row t
    for (int j = t + 1; j < n; ++j) {
      if (s.w.at(t, j) == 0) continue;
      s.add_col(t, j, -round_div(s.w.at(t, j), s.w.at(t, t)));
      if (s.w.at(t, j) != 0) dirty = true;
    }
    if (dirty) continue;

    // pivot must divide the rest of the block; pulling a violating row into
    // row t strictly shrinks the eventual pivot gcd
    bool divides = true;
    for (int i = t + 1; i < m && divides; ++i)
      for (int j = t + 1; j < n && divides; ++j)
        if (s.w.at(i, j) % s.w.at(t, t) != 0) {
          s.add_row(i, t, 1);
          divides = false;
        }
    if (!divides) continue;

    if (s.w.at(t, t) < 0) s.negate_row(t);
    ++t;
  }

  SmithDecomposition out;
  out.rank = t;
  out.d = std::move(s.w);
  out.u = std::move(s.u);
  out.u_inv = std::move(s.ui);
  out.v = std::move(s.v);
  out.v_inv = std::move(s.vi);
  return out;
}

std::vector<std::vector<Int>> kernel_basis(const IntMatrix& a) {
  if (a.cols == 0) return {};
  SmithDecomposition snf = smith_normal_form(a);
  std::vector<std::vector<Int>> basis;
  for (int j = snf.rank; j < a.cols; ++j) {
    std::vector<Int> x(a.cols);
    for (int i = 0; i < a.cols; ++i) x[i] = snf.v_inv.at(i, j);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b) {
  IntMatrix bm(a.rows, 1);
  for (int i = 0; i < a.rows; ++i) bm.at(i, 0) = b[i];
  auto x = solve_integer_matrix(a, bm);
  if (!x) return std::nullopt;
  std::vector<Int> out(a.cols);
  for (int i = 0; i < a.cols; ++i) out[i] = x->at(i, 0);
  return out;
}

std::optional<IntMatrix> solve_integer_matrix(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows != b.rows) throw LinalgError("solve_integer_matrix: dimension mismatch");
  SmithDecomposition snf = smith_normal_form(a);
  IntMatrix y = mat_mul(snf.u_inv, b);
  IntMatrix z(a.cols, b.cols);
  for (int c = 0; c < b.cols; ++c) {
    for (int i = 0; i < a.rows; ++i) {
      if (i < snf.rank) {
        if (y.at(i, c) % snf.diag(i) != 0) return std::nullopt;
        if (i < a.cols) z.at(i, c) = y.at(i, c) / snf.diag(i);
      } else if (y.at(i, c) != 0) {
        return std::nullopt;
      }
    }
  }
  return mat_mul(snf.v_inv, z);
}

// ---------------------------------------------------------------------------

Ring Ring::GF(long p) {
  if (!is_prime(p)) throw LinalgError("GF(p) needs a prime modulus");
  return {Kind::gf, p};
}

std::string Ring::label() const {
  switch (kind) {
    case Kind::integers:
      return "Z";
    case Kind::rationals:
      return "Q";
    case Kind::gf:
      return "GF(" + std::to_string(p) + ")";
  }
  return "?";
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMatrix::is_zero() const {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

RatMatrix rat_mul(const RatMatrix& x, const RatMatrix& y) {
  if (x.cols != y.rows) throw LinalgError("rat_mul: dimension mismatch");
  RatMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rat& xi = x.at(i, k);
      if (xi == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        if (y.at(k, j) != 0) r.at(i, j) += xi * y.at(k, j);
    }
  return r;
}

RatMatrix rat_add(const RatMatrix& x, const RatMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw LinalgError("rat_add: dimension mismatch");
  RatMatrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

RatMatrix rat_sub(const RatMatrix& x, const RatMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw LinalgError("rat_sub: dimension mismatch");
  RatMatrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

RatMatrix rat_scale(const Rat& c, const RatMatrix& x) {
  RatMatrix r = x;
  for (Rat& e : r.a) e *= c;
  return r;
}

RatMatrix to_rat(const IntMatrix& a) {
  RatMatrix r(a.rows, a.cols);
  for (size_t i = 0; i < a.a.size(); ++i) r.a[i] = a.a[i];
  return r;
}

IntMatrix to_int(const RatMatrix& a) {
  IntMatrix r(a.rows, a.cols);
  for (size_t i = 0; i < a.a.size(); ++i) {
    if (boost::multiprecision::denominator(a.a[i]) != 1)
      throw LinalgError("to_int: non-integral entry");
    r.a[i] = boost::multiprecision::numerator(a.a[i]);
  }
  return r;
}

namespace {

// inverse of a mod p via extended Euclid; a must be a unit
Int mod_inverse(Int a, const Int& p) {
  a %= p;
  if (a < 0) a += p;
  Int r0 = a, r1 = p, s0 = 1, s1 = 0;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    Int s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw LinalgError("mod_inverse: not a unit");
  s0 %= p;
  if (s0 < 0) s0 += p;
  return s0;
}

}  // namespace

Rat field_normalize(const Ring& ring, const Rat& v) {
  if (ring.kind != Ring::Kind::gf) return v;
  Int num = boost::multiprecision::numerator(v);
  Int den = boost::multiprecision::denominator(v);
  Int p = ring.p;
  if (den % p == 0) throw LinalgError("GF(p): denominator divisible by p");
  if (den != 1) num *= mod_inverse(den, p);
  Int r = num % p;
  if (r < 0) r += p;
  return Rat(r);
}

Rat field_add(const Ring& ring, const Rat& x, const Rat& y) { return field_normalize(ring, x + y); }
Rat field_sub(const Ring& ring, const Rat& x, const Rat& y) { return field_normalize(ring, x - y); }
Rat field_mul(const Ring& ring, const Rat& x, const Rat& y) { return field_normalize(ring, x * y); }

Rat field_inv(const Ring& ring, const Rat& x) {
  if (x == 0) throw LinalgError("field_inv: zero");
  if (ring.kind == Ring::Kind::rationals) return Rat(1) / x;
  if (ring.kind != Ring::Kind::gf) throw LinalgError("field_inv: Z is not a field");
  return field_normalize(ring, Rat(1) / x);
}

RatMatrix ring_normalize(const Ring& ring, RatMatrix m) {
  if (ring.kind == Ring::Kind::gf)
    for (Rat& e : m.a) e = field_normalize(ring, e);
  return m;
}

RatMatrix ring_mul(const Ring& ring, const RatMatrix& x, const RatMatrix& y) {
  return ring_normalize(ring, rat_mul(x, y));
}

namespace {

// Reduced row echelon form over Q or GF(p), in place; returns pivot columns.
std::vector<int> rref(const Ring& ring, RatMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pr = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
    Rat inv = field_inv(ring, m.at(row, col));
    for (int j = col; j < m.cols; ++j) m.at(row, j) = field_mul(ring, m.at(row, j), inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = col; j < m.cols; ++j)
        m.at(i, j) = field_sub(ring, m.at(i, j), field_mul(ring, f, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int field_rank(const Ring& ring, RatMatrix m) {
  if (!ring.is_field()) throw LinalgError("field_rank: need a field");
  m = ring_normalize(ring, std::move(m));
  return static_cast<int>(rref(ring, m).size());
}

std::optional<RatMatrix> field_solve(const Ring& ring, const RatMatrix& a, const RatMatrix& b) {
  if (!ring.is_field()) throw LinalgError("field_solve: need a field");
  if (a.rows != b.rows) throw LinalgError("field_solve: dimension mismatch");
  RatMatrix m(a.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols; ++j) m.at(i, a.cols + j) = b.at(i, j);
  }
  m = ring_normalize(ring, std::move(m));
  std::vector<int> pivots = rref(ring, m);
  // infeasible iff some pivot lands in the rhs block
  for (int p : pivots)
    if (p >= a.cols) return std::nullopt;
  RatMatrix x(a.cols, b.cols);
  for (size_t r = 0; r < pivots.size(); ++r)
    for (int j = 0; j < b.cols; ++j) x.at(pivots[r], j) = m.at(static_cast<int>(r), a.cols + j);
  return x;
}

std::vector<std::vector<Rat>> field_nullspace(const Ring& ring, const RatMatrix& a) {
  if (!ring.is_field()) throw LinalgError("field_nullspace: need a field");
  RatMatrix m = ring_normalize(ring, a);
  std::vector<int> pivots = rref(ring, m);
  std::vector<char> is_pivot(a.cols, 0);
  for (int p : pivots) is_pivot[p] = 1;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < a.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> x(a.cols);
    x[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      x[pivots[r]] = field_sub(ring, Rat(0), m.at(static_cast<int>(r), free));
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<std::vector<Rat>> solve_linear(const IntMatrix& a, const std::vector<Int>& b,
                                             const Ring& ring) {
  if (ring.kind == Ring::Kind::integers) {
    auto x = solve_integer(a, b);
    if (!x) return std::nullopt;
    std::vector<Rat> out(x->size());
    for (size_t i = 0; i < x->size(); ++i) out[i] = (*x)[i];
    return out;
  }
  RatMatrix bm(a.rows, 1);
  for (int i = 0; i < a.rows; ++i) bm.at(i, 0) = b[i];
  auto x = field_solve(ring, to_rat(a), bm);
  if (!x) return std::nullopt;
  std::vector<Rat> out(a.cols);
  for (int i = 0; i < a.cols; ++i) out[i] = x->at(i, 0);
  return out;
}

}  // namespace orbitkit
