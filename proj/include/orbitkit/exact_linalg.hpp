#pragma once

#include "orbitkit/numeric.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitkit {

struct LinalgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static IntMatrix identity(int n);
  bool operator==(const IntMatrix&) const = default;
};

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);
std::vector<Int> mat_apply(const IntMatrix& x, const std::vector<Int>& v);

// A = U * D * V with U, V unimodular and D diagonal, d1 | d2 | ... | dr,
// remaining diagonal entries zero.  u_inv and v_inv are tracked alongside so
// kernels and solutions come out of the same decomposition.
struct SmithDecomposition {
  IntMatrix u, d, v;
  IntMatrix u_inv, v_inv;
  int rank = 0;

  Int diag(int i) const { return d.at(i, i); }
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// Basis of the integer lattice {x : A x = 0}; empty iff the kernel is trivial.
// The basis is saturated: every integer kernel vector is an integer
// combination of it.
std::vector<std::vector<Int>> kernel_basis(const IntMatrix& a);

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b);

// ---------------------------------------------------------------------------
// Coefficient rings.  Z for integral work, Q and GF(p) as fields.

struct Ring {
  enum class Kind { integers, rationals, gf };
  Kind kind = Kind::integers;
  long p = 0;

  static Ring Z() { return {Kind::integers, 0}; }
  static Ring Q() { return {Kind::rationals, 0}; }
  static Ring GF(long p);

  bool is_field() const { return kind != Kind::integers; }
  std::string label() const;
  bool operator==(const Ring&) const = default;
};

struct RatMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static RatMatrix identity(int n);
  bool is_zero() const;
  bool operator==(const RatMatrix&) const = default;
};

RatMatrix rat_mul(const RatMatrix& x, const RatMatrix& y);
RatMatrix rat_add(const RatMatrix& x, const RatMatrix& y);
RatMatrix rat_sub(const RatMatrix& x, const RatMatrix& y);
RatMatrix rat_scale(const Rat& c, const RatMatrix& x);
RatMatrix to_rat(const IntMatrix& a);
IntMatrix to_int(const RatMatrix& a);  // throws if any entry is non-integral

// Scalar arithmetic in Q or GF(p).  GF(p) values are kept as integer residues
// in [0, p).
Rat field_normalize(const Ring& ring, const Rat& v);
Rat field_add(const Ring& ring, const Rat& x, const Rat& y);
Rat field_sub(const Ring& ring, const Rat& x, const Rat& y);
Rat field_mul(const Ring& ring, const Rat& x, const Rat& y);
Rat field_inv(const Ring& ring, const Rat& x);
RatMatrix ring_normalize(const Ring& ring, RatMatrix m);
RatMatrix ring_mul(const Ring& ring, const RatMatrix& x, const RatMatrix& y);

int field_rank(const Ring& ring, RatMatrix m);

// Solve A X = B columnwise over a field; nullopt if any column is infeasible.
std::optional<RatMatrix> field_solve(const Ring& ring, const RatMatrix& a, const RatMatrix& b);

std::vector<std::vector<Rat>> field_nullspace(const Ring& ring, const RatMatrix& a);

// Solve A X = B over Z (one Smith decomposition, applied per column).
std::optional<IntMatrix> solve_integer_matrix(const IntMatrix& a, const IntMatrix& b);

// The spec-level entry point: exact solve over Z, Q, or GF(p); nullopt means
// "no solution" (a value, not a fault).
std::optional<std::vector<Rat>> solve_linear(const IntMatrix& a, const std::vector<Int>& b,
                                             const Ring& ring);

}  // namespace orbitkit
