#include "charrig/zlin.hpp"

#include <algorithm>
#include <sstream>

namespace charrig {
namespace {

// Working state of the elimination. Every elementary operation is applied to
// the working matrix, the accumulated transform and its inverse at once.
class SmithReducer {
 public:
  explicit SmithReducer(const ZMatrix& a)
      : w_(a),
        u_(ZMatrix::identity(a.rows())),
        u_inv_(ZMatrix::identity(a.rows())),
        v_(ZMatrix::identity(a.cols())),
        v_inv_(ZMatrix::identity(a.cols())) {}

  SNFResult run() {
    const std::size_t m = w_.rows(), n = w_.cols();
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
      std::size_t pi = 0, pj = 0;
      if (!find_min_pivot(t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      reduce_at(t);
      if (sgn(w_(t, t)) < 0) negate_row(t);
    }
    SNFResult r;
    r.rank = t;
    r.S = std::move(w_);
    r.U = std::move(u_);
    r.U_inv = std::move(u_inv_);
    r.V = std::move(v_);
    r.V_inv = std::move(v_inv_);
    return r;
  }

 private:
  // Smallest |entry| in the trailing block; ties go to the first entry in
  // row-major order, so a +-1 ends the scan immediately.
  bool find_min_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < w_.rows(); ++i) {
      auto r = w_.row(i);
      for (std::size_t j = t; j < w_.cols(); ++j) {
        if (sgn(r[j]) == 0) continue;
        if (!found || cmpabs(r[j], best) < 0) {
          best = abs(r[j]);
          pi = i;
          pj = j;
          found = true;
          if (best == 1) return true;
        }
      }
    }
    return found;
  }

  void reduce_at(std::size_t t) {
    for (;;) {
      bool clear = true;
      for (std::size_t i = t + 1; i < w_.rows(); ++i) {
        if (sgn(w_(i, t)) == 0) continue;
        Integer q = floor_div(w_(i, t), w_(t, t));
        if (q != 0) add_row(i, t, -q);
        if (sgn(w_(i, t)) != 0) clear = false;
      }
      for (std::size_t j = t + 1; j < w_.cols(); ++j) {
        if (sgn(w_(t, j)) == 0) continue;
        Integer q = floor_div(w_(t, j), w_(t, t));
        if (q != 0) add_col(j, t, -q);
        if (sgn(w_(t, j)) != 0) clear = false;
      }
      if (!clear) {
        // A remainder smaller than the pivot survived; promote the smallest
        // entry of row/column t and go again.
        std::size_t bi = t, bj = t;
        Integer best = abs(w_(t, t));
        for (std::size_t i = t + 1; i < w_.rows(); ++i)
          if (sgn(w_(i, t)) != 0 && cmpabs(w_(i, t), best) < 0) {
            best = abs(w_(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < w_.cols(); ++j)
          if (sgn(w_(t, j)) != 0 && cmpabs(w_(t, j), best) < 0) {
            best = abs(w_(t, j));
            bi = t;
            bj = j;
          }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      const Integer p = abs(w_(t, t));
      if (p == 1) return;
      bool divisible = true;
      for (std::size_t i = t + 1; i < w_.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < w_.cols(); ++j)
          if (sgn(w_(i, j)) != 0 && !mpz_divisible_p(w_(i, j).get_mpz_t(), p.get_mpz_t())) {
            add_row(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) return;
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    auto ra = w_.row(a), rb = w_.row(b);
    std::swap_ranges(ra.begin(), ra.end(), rb.begin());
    auto ua = u_.row(a), ub = u_.row(b);
    std::swap_ranges(ua.begin(), ua.end(), ub.begin());
    for (std::size_t i = 0; i < u_inv_.rows(); ++i) std::swap(u_inv_(i, a), u_inv_(i, b));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < w_.rows(); ++i) std::swap(w_(i, a), w_(i, b));
    for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, a), v_(i, b));
    auto ra = v_inv_.row(a), rb = v_inv_.row(b);
    std::swap_ranges(ra.begin(), ra.end(), rb.begin());
  }

  static void axpy_row(ZMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
    auto dst = m.row(target);
    auto src = m.row(source);
    for (std::size_t j = 0; j < src.size(); ++j)
      if (sgn(src[j]) != 0) dst[j] += q * src[j];
  }

  static void axpy_col(ZMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (sgn(m(i, source)) != 0) m(i, target) += q * m(i, source);
  }

  // row_target += q * row_source
  void add_row(std::size_t target, std::size_t source, const Integer& q) {
    axpy_row(w_, target, source, q);
    axpy_row(u_, target, source, q);
    axpy_col(u_inv_, source, target, -q);
  }

  // col_target += q * col_source
  void add_col(std::size_t target, std::size_t source, const Integer& q) {
    axpy_col(w_, target, source, q);
    axpy_col(v_, target, source, q);
    axpy_row(v_inv_, source, target, -q);
  }

  void negate_row(std::size_t i) {
    for (auto& x : w_.row(i)) x = -x;
    for (auto& x : u_.row(i)) x = -x;
    for (std::size_t r = 0; r < u_inv_.rows(); ++r) u_inv_(r, i) = -u_inv_(r, i);
  }

  ZMatrix w_, u_, u_inv_, v_, v_inv_;
};

}  // namespace

IntVector SNFResult::invariant_factors() const {
  IntVector d;
  for (std::size_t i = 0; i < rank; ++i) d.push_back(S(i, i));
  return d;
}

SNFResult SNFResult::transposed() const {
  SNFResult t;
  t.U = V.transpose();
  t.V = U.transpose();
  t.S = S.transpose();
  t.U_inv = V_inv.transpose();
  t.V_inv = U_inv.transpose();
  t.rank = rank;
  return t;
}

SNFResult smith_normal_form(const ZMatrix& a) { return SmithReducer(a).run(); }

std::optional<IntVector> solve_integer(const SNFResult& snf, const IntVector& b) {
  if (b.size() != snf.U.cols())
    throw ShapeError("solve_integer: right-hand side has length " + std::to_string(b.size()) +
                     ", expected " + std::to_string(snf.U.cols()));
  IntVector c = multiply(snf.U, b);
  IntVector y(snf.V.rows());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < snf.rank) {
      const Integer& d = snf.S(i, i);
      if (!mpz_divisible_p(c[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
      y[i] = c[i] / d;
    } else if (sgn(c[i]) != 0) {
      return std::nullopt;
    }
  }
  return multiply(snf.V, y);
}

std::optional<IntVector> solve_integer(const ZMatrix& a, const IntVector& b) {
  if (b.size() != a.rows())
    throw ShapeError("solve_integer: right-hand side has length " + std::to_string(b.size()) +
                     ", matrix has " + std::to_string(a.rows()) + " rows");
  return solve_integer(smith_normal_form(a), b);
}

std::optional<RatVector> solve_rational(const SNFResult& snf, const RatVector& b) {
  if (b.size() != snf.U.cols())
    throw ShapeError("solve_rational: right-hand side has length " + std::to_string(b.size()) +
                     ", expected " + std::to_string(snf.U.cols()));
  RatVector c = multiply(snf.U, b);
  RatVector y(snf.V.rows());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < snf.rank)
      y[i] = c[i] / Rational(snf.S(i, i));
    else if (sgn(c[i]) != 0)
      return std::nullopt;
  }
  return multiply(snf.V, y);
}

KernelBasis kernel_with_coordinates(const SNFResult& snf) {
  const std::size_t n = snf.V.cols();
  return {snf.V.columns(snf.rank, n), snf.V_inv.rows_range(snf.rank, n)};
}

ZMatrix kernel_basis(const ZMatrix& a) {
  return kernel_with_coordinates(smith_normal_form(a)).basis;
}

std::size_t FgAbelianGroup::rank() const {
  return static_cast<std::size_t>(
      std::count_if(orders.begin(), orders.end(), [](const Integer& o) { return o == 0; }));
}

std::vector<Integer> FgAbelianGroup::torsion() const {
  std::vector<Integer> t;
  for (const auto& o : orders)
    if (o != 0) t.push_back(o);
  return t;
}

IntVector FgAbelianGroup::reduce(IntVector coords) const {
  if (coords.size() != orders.size()) throw ShapeError("group coordinate length mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (orders[i] != 0) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), coords[i].get_mpz_t(), orders[i].get_mpz_t());
      coords[i] = r;
    }
  return coords;
}

IntVector FgAbelianGroup::coordinates(const IntVector& ambient) const {
  return reduce(multiply(project, ambient));
}

IntVector FgAbelianGroup::lift(const IntVector& coords) const {
  return multiply(gen_lift, coords);
}

std::string FgAbelianGroup::describe() const {
  if (orders.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << " + ";
    first = false;
  };
  for (const auto& o : orders)
    if (o != 0) {
      sep();
      out << "Z/" << o.get_str();
    }
  const std::size_t r = rank();
  if (r > 0) {
    sep();
    out << "Z";
    if (r > 1) out << "^" << r;
  }
  return out.str();
}

FgAbelianGroup cokernel(const SNFResult& snf) {
  const std::size_t m = snf.U.rows();
  std::vector<std::size_t> kept;
  FgAbelianGroup g;
  for (std::size_t i = 0; i < snf.rank; ++i)
    if (snf.S(i, i) != 1) {
      kept.push_back(i);
      g.orders.push_back(snf.S(i, i));
    }
  for (std::size_t i = snf.rank; i < m; ++i) {
    kept.push_back(i);
    g.orders.push_back(0);
  }
  g.gen_lift = ZMatrix(m, kept.size());
  g.project = ZMatrix(kept.size(), m);
  for (std::size_t c = 0; c < kept.size(); ++c)
    for (std::size_t r = 0; r < m; ++r) {
      g.gen_lift(r, c) = snf.U_inv(r, kept[c]);
      g.project(c, r) = snf.U(kept[c], r);
    }
  return g;
}

FgAbelianGroup cokernel(const ZMatrix& a) { return cokernel(smith_normal_form(a)); }

}  // namespace charrig
