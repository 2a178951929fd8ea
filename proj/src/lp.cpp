#include "bincayley/lp.hpp"

#include <optional>

#include "bincayley/error.hpp"
#include "bincayley/exactla.hpp"

namespace bincayley::exactla {

namespace {

// Dense simplex tableau for: minimize cost . z subject to T z = rhs, z >= 0.
// Columns are laid out as [c+ (d) | c- (d) | slack (R) | artificial (A)].
class Tableau {
 public:
  Tableau(const PolytopeQuery& q) : d_(q.normals.cols()), rows_(q.normals.rows()) {
    const std::size_t nrows = rows_;
    std::size_t n_art = 0;
    for (const Rat& b : q.offsets)
      if (sgn(b) < 0) ++n_art;
    art_start_ = 2 * d_ + nrows;
    ncols_ = art_start_ + n_art;
    t_ = RatMatrix(nrows, ncols_);
    rhs_.resize(nrows);
    basis_.resize(nrows);
    sigma_.resize(nrows);
    art_of_row_.assign(nrows, kNone);
    std::size_t next_art = art_start_;
    for (std::size_t i = 0; i < nrows; ++i) {
      // Row i reads  K_i c+ - K_i c- - s_i = -b_i, negated when b_i >= 0 so the
      // slack can start in the basis.
      const bool flip = sgn(q.offsets[i]) >= 0;
      sigma_[i] = flip ? -1 : 1;
      for (std::size_t j = 0; j < d_; ++j) {
        const Rat& k = q.normals(i, j);
        if (sgn(k) == 0) continue;
        t_(i, j) = flip ? Rat(-k) : k;
        t_(i, d_ + j) = flip ? k : Rat(-k);
      }
      t_(i, 2 * d_ + i) = flip ? 1 : -1;
      rhs_[i] = flip ? q.offsets[i] : Rat(-q.offsets[i]);
      if (flip) {
        basis_[i] = 2 * d_ + i;
      } else {
        t_(i, next_art) = 1;
        basis_[i] = next_art;
        art_of_row_[i] = next_art;
        ++next_art;
      }
    }
    active_rows_ = nrows;
  }

  // Phase 1; returns the minimal total artificial mass.
  Rat phase_one() {
    cost_.assign(ncols_, Rat(0));
    for (std::size_t j = art_start_; j < ncols_; ++j) cost_[j] = 1;
    allowed_end_ = ncols_;
    recompute_reduced();
    run();
    Rat w = 0;
    for (std::size_t i = 0; i < active_rows_; ++i)
      if (basis_[i] >= art_start_) w += rhs_[i];
    return w;
  }

  // Multipliers y of the Farkas alternative, read from the phase-1 reduced costs.
  std::vector<Rat> farkas() const {
    std::vector<Rat> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Rat u = art_of_row_[i] == kNone ? Rat(-reduced_[2 * d_ + i]) : Rat(1 - reduced_[art_of_row_[i]]);
      y[i] = sigma_[i] > 0 ? u : Rat(-u);
    }
    return y;
  }

  std::vector<Rat> point() const {
    std::vector<Rat> z(ncols_);
    for (std::size_t i = 0; i < active_rows_; ++i) z[basis_[i]] = rhs_[i];
    std::vector<Rat> c(d_);
    for (std::size_t j = 0; j < d_; ++j) c[j] = z[j] - z[d_ + j];
    return c;
  }

  // Phase 2 after a zero-mass phase 1; returns false when unbounded.
  bool maximize(std::span<const Rat> objective) {
    drive_out_artificials();
    cost_.assign(ncols_, Rat(0));
    for (std::size_t j = 0; j < d_; ++j) {
      cost_[j] = -objective[j];
      cost_[d_ + j] = objective[j];
    }
    allowed_end_ = art_start_;
    recompute_reduced();
    return run();
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void recompute_reduced() {
    reduced_ = cost_;
    for (std::size_t i = 0; i < active_rows_; ++i) {
      const Rat& cb = cost_[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < ncols_; ++j)
        if (sgn(t_(i, j)) != 0) reduced_[j] -= cb * t_(i, j);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rat inv = 1 / t_(r, c);
    for (std::size_t j = 0; j < ncols_; ++j)
      if (sgn(t_(r, j)) != 0) t_(r, j) *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < active_rows_; ++i) {
      if (i == r || sgn(t_(i, c)) == 0) continue;
      const Rat f = t_(i, c);
      for (std::size_t j = 0; j < ncols_; ++j)
        if (sgn(t_(r, j)) != 0) t_(i, j) -= f * t_(r, j);
      rhs_[i] -= f * rhs_[r];
    }
    if (sgn(reduced_[c]) != 0) {
      const Rat f = reduced_[c];
      for (std::size_t j = 0; j < ncols_; ++j)
        if (sgn(t_(r, j)) != 0) reduced_[j] -= f * t_(r, j);
    }
    basis_[r] = c;
  }

  // Bland's rule: lowest entering index, ties in the ratio test broken by the
  // lowest basic index. Returns false on an unbounded ray.
  bool run() {
    while (true) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < allowed_end_; ++j)
        if (sgn(reduced_[j]) < 0) {
          enter = j;
          break;
        }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rat best;
      for (std::size_t i = 0; i < active_rows_; ++i) {
        if (sgn(t_(i, enter)) <= 0) continue;
        Rat ratio = rhs_[i] / t_(i, enter);
        if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < active_rows_;) {
      if (basis_[i] < art_start_) {
        ++i;
        continue;
      }
      std::size_t col = kNone;
      for (std::size_t j = 0; j < art_start_; ++j)
        if (sgn(t_(i, j)) != 0) {
          col = j;
          break;
        }
      if (col != kNone) {
        pivot(i, col);
        ++i;
        continue;
      }
      // Redundant equality: move it past the active block.
      --active_rows_;
      std::swap_ranges(t_.row(i).begin(), t_.row(i).end(), t_.row(active_rows_).begin());
      std::swap(rhs_[i], rhs_[active_rows_]);
      std::swap(basis_[i], basis_[active_rows_]);
    }
  }

  std::size_t d_;
  std::size_t rows_;
  std::size_t art_start_ = 0;
  std::size_t ncols_ = 0;
  std::size_t allowed_end_ = 0;
  std::size_t active_rows_ = 0;
  RatMatrix t_;
  std::vector<Rat> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<int> sigma_;
  std::vector<std::size_t> art_of_row_;
  std::vector<Rat> cost_;
  std::vector<Rat> reduced_;
};

std::vector<Rat> slacks(const PolytopeQuery& q, std::span<const Rat> c) {
  std::vector<Rat> s = multiply(q.normals, c);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += q.offsets[i];
  return s;
}

}  // namespace

void PolytopeQuery::validate() const {
  require(normals.rows() == offsets.size(), "polytope query: offsets length must equal constraint count");
}

bool check_witness(const PolytopeQuery& q, std::span<const Rat> c) {
  if (c.size() != q.normals.cols()) return false;
  for (const Rat& s : slacks(q, c))
    if (sgn(s) < 0) return false;
  return true;
}

bool check_farkas(const PolytopeQuery& q, std::span<const Rat> y) {
  if (y.size() != q.normals.rows()) return false;
  Rat yb = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (sgn(y[i]) < 0) return false;
    yb += y[i] * q.offsets[i];
  }
  if (sgn(yb) >= 0) return false;
  for (std::size_t j = 0; j < q.normals.cols(); ++j) {
    Rat s = 0;
    for (std::size_t i = 0; i < y.size(); ++i) s += y[i] * q.normals(i, j);
    if (sgn(s) != 0) return false;
  }
  return true;
}

Feasibility lp_feasible(const PolytopeQuery& q) {
  q.validate();
  Tableau t(q);
  Feasibility out;
  if (sgn(t.phase_one()) > 0) {
    out.farkas = t.farkas();
    ensure(check_farkas(q, out.farkas), "simplex produced an invalid infeasibility certificate");
    return out;
  }
  out.feasible = true;
  out.witness = t.point();
  ensure(check_witness(q, out.witness), "simplex produced an infeasible witness");
  return out;
}

Optimum lp_maximize(const PolytopeQuery& q, std::span<const Rat> objective) {
  q.validate();
  require(objective.size() == q.normals.cols(), "objective length must equal variable count");
  Tableau t(q);
  Optimum out;
  if (sgn(t.phase_one()) > 0) return out;
  if (!t.maximize(objective)) {
    out.status = Optimum::Status::Unbounded;
    return out;
  }
  out.status = Optimum::Status::Optimal;
  out.point = t.point();
  ensure(check_witness(q, out.point), "simplex optimum violates a constraint");
  for (std::size_t j = 0; j < objective.size(); ++j) out.value += objective[j] * out.point[j];
  return out;
}

std::size_t polytope_dimension(const PolytopeQuery& q) {
  Feasibility f = lp_feasible(q);
  if (!f.feasible) throw EmptyPolytope("polytope is empty");
  const std::size_t nrows = q.normals.rows(), d = q.normals.cols();

  // 0 = unknown, 1 = strict somewhere, 2 = implicit equality.
  std::vector<int> state(nrows, 0);
  auto mark_strict = [&](std::span<const Rat> c) {
    auto s = slacks(q, c);
    for (std::size_t i = 0; i < nrows; ++i)
      if (state[i] == 0 && sgn(s[i]) > 0) state[i] = 1;
  };
  mark_strict(f.witness);
  for (std::size_t i = 0; i < nrows; ++i) {
    if (state[i] != 0) continue;
    Optimum o = lp_maximize(q, q.normals.row(i));
    ensure(o.status != Optimum::Status::Infeasible, "feasible polytope reported infeasible");
    if (o.status == Optimum::Status::Unbounded) {
      state[i] = 1;
      continue;
    }
    mark_strict(o.point);
    if (state[i] == 0) state[i] = 2;  // max of a nonnegative slack is 0
  }

  std::size_t n_eq = 0;
  for (int s : state) n_eq += s == 2;
  RatMatrix eq(n_eq, d);
  std::size_t r = 0;
  for (std::size_t i = 0; i < nrows; ++i)
    if (state[i] == 2) {
      for (std::size_t j = 0; j < d; ++j) eq(r, j) = q.normals(i, j);
      ++r;
    }
  return d - (n_eq == 0 ? 0 : rank_nullity(eq).rank);
}

}  // namespace bincayley::exactla
