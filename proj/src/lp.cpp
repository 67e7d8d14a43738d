#include "tricolor/lp.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

#include "tricolor/errors.hpp"

namespace tricolor {

namespace {

// Dense exact simplex for  max 1'u  s.t.  A' u <= 1, u >= 0  where
// A[x][y] in {0,1} is given by rows[X[i]].test(Y[j]).
//
// Returns primal u (row player), dual z (column player, from slack reduced
// costs) and the optimum; the game value is 1/sum(u), w = z/sum(z).
struct SubgameSolution {
  std::vector<Rat> u;  // size |X|
  std::vector<Rat> z;  // size |Y|
  Rat value;           // game value = 1/opt
};

SubgameSolution solve_subgame(const std::vector<BitRow>& rows, const std::vector<int>& X,
                              const std::vector<int>& Y) {
  int nx = static_cast<int>(X.size());
  int ny = static_cast<int>(Y.size());
  int cols = nx + ny + 1;  // structural, slack, rhs
  // minimize -sum u; tableau rows: constraints per y, plus objective row
  std::vector<std::vector<Rat>> t(static_cast<std::size_t>(ny) + 1,
                                  std::vector<Rat>(static_cast<std::size_t>(cols), Rat(0)));
  for (int j = 0; j < ny; ++j) {
    auto& row = t[static_cast<std::size_t>(j)];
    for (int i = 0; i < nx; ++i)
      if (rows[static_cast<std::size_t>(X[static_cast<std::size_t>(i)])].test(Y[static_cast<std::size_t>(j)]))
        row[static_cast<std::size_t>(i)] = 1;
    row[static_cast<std::size_t>(nx + j)] = 1;
    row[static_cast<std::size_t>(cols - 1)] = 1;
  }
  auto& obj = t[static_cast<std::size_t>(ny)];
  for (int i = 0; i < nx; ++i) obj[static_cast<std::size_t>(i)] = -1;

  std::vector<int> basis(static_cast<std::size_t>(ny));
  for (int j = 0; j < ny; ++j) basis[static_cast<std::size_t>(j)] = nx + j;

  int stall = 0;
  Rat last_obj = 0;
  for (long iter = 0;; ++iter) {
    if (iter > 200000) throw Error("simplex iteration cap exceeded");
    bool bland = stall > 2 * (nx + ny) + 16;
    // entering column
    int enter = -1;
    Rat best(0);
    for (int c = 0; c < nx + ny; ++c) {
      const Rat& rc = obj[static_cast<std::size_t>(c)];
      if (rc < 0) {
        if (bland) {
          enter = c;
          break;
        }
        if (enter == -1 || rc < best) {
          enter = c;
          best = rc;
        }
      }
    }
    if (enter == -1) break;  // optimal
    // ratio test
    int leave = -1;
    Rat best_ratio(0);
    for (int r = 0; r < ny; ++r) {
      const Rat& a = t[static_cast<std::size_t>(r)][static_cast<std::size_t>(enter)];
      if (a > 0) {
        Rat ratio = t[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols - 1)] / a;
        if (leave == -1 || ratio < best_ratio ||
            (ratio == best_ratio && basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(leave)])) {
          leave = r;
          best_ratio = ratio;
        }
      }
    }
    if (leave == -1) throw Error("packing subgame unbounded (zero row reached the basis)");
    // pivot
    auto& prow = t[static_cast<std::size_t>(leave)];
    Rat piv = prow[static_cast<std::size_t>(enter)];
    for (auto& v : prow) v /= piv;
    for (int r = 0; r <= ny; ++r) {
      if (r == leave) continue;
      auto& row = t[static_cast<std::size_t>(r)];
      const Rat f = row[static_cast<std::size_t>(enter)];
      if (f == 0) continue;
      for (int c = 0; c < cols; ++c) row[static_cast<std::size_t>(c)] -= f * prow[static_cast<std::size_t>(c)];
    }
    basis[static_cast<std::size_t>(leave)] = enter;
    const Rat& cur = obj[static_cast<std::size_t>(cols - 1)];
    if (cur == last_obj)
      ++stall;
    else {
      stall = 0;
      last_obj = cur;
    }
  }

  SubgameSolution s;
  s.u.assign(static_cast<std::size_t>(nx), Rat(0));
  for (int r = 0; r < ny; ++r)
    if (basis[static_cast<std::size_t>(r)] < nx)
      s.u[static_cast<std::size_t>(basis[static_cast<std::size_t>(r)])] =
          t[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols - 1)];
  s.z.assign(static_cast<std::size_t>(ny), Rat(0));
  Rat zsum(0);
  for (int j = 0; j < ny; ++j) {
    s.z[static_cast<std::size_t>(j)] = obj[static_cast<std::size_t>(nx + j)];
    zsum += s.z[static_cast<std::size_t>(j)];
  }
  if (zsum == 0) throw Error("degenerate subgame: zero dual");
  s.value = 1 / zsum;
  return s;
}

}  // namespace

MaxMinResult max_min_distribution(const std::vector<BitRow>& rows, const Rat& target,
                                  GameLpState* state) {
  int m = static_cast<int>(rows.size());
  assert(m > 0);
  GameLpState local;
  GameLpState& st = state ? *state : local;

  std::vector<char> in_rows(static_cast<std::size_t>(m), 0), in_cols(static_cast<std::size_t>(m), 0);
  auto add_row = [&](int x) {
    if (!in_rows[static_cast<std::size_t>(x)]) {
      in_rows[static_cast<std::size_t>(x)] = 1;
      st.rows.push_back(x);
    }
    if (!in_cols[static_cast<std::size_t>(x)]) {
      in_cols[static_cast<std::size_t>(x)] = 1;
      st.cols.push_back(x);
    }
  };
  auto add_col = [&](int y) {
    if (!in_cols[static_cast<std::size_t>(y)]) {
      in_cols[static_cast<std::size_t>(y)] = 1;
      st.cols.push_back(y);
    }
  };

  // sanitize warm-started sets against the current index range
  {
    std::vector<int> r = std::move(st.rows), c = std::move(st.cols);
    st.rows.clear();
    st.cols.clear();
    for (int y : c)
      if (y >= 0 && y < m) add_col(y);
    for (int x : r)
      if (x >= 0 && x < m) add_row(x);
  }
  if (st.rows.empty()) add_row(0);

  double target_d = to_double(target);
  std::vector<double> sx(static_cast<std::size_t>(m));

  for (long round = 0;; ++round) {
    if (round > 4L * m + 64) throw Error("double oracle failed to converge");
    SubgameSolution sub = solve_subgame(rows, st.rows, st.cols);

    // double scan of all rows against the sparse w
    std::vector<double> wd(st.cols.size());
    for (std::size_t j = 0; j < st.cols.size(); ++j) wd[j] = to_double(sub.z[j]);
    double zsum_d = 0;
    for (double v : wd) zsum_d += v;
    for (int x = 0; x < m; ++x) {
      double s = 0;
      const BitRow& row = rows[static_cast<std::size_t>(x)];
      for (std::size_t j = 0; j < st.cols.size(); ++j)
        if (row.test(st.cols[j])) s += wd[j];
      sx[static_cast<std::size_t>(x)] = s / zsum_d;
    }

    // exact min over candidate rows (double margin, then exact confirm)
    double min_d = std::numeric_limits<double>::infinity();
    for (int x = 0; x < m; ++x) min_d = std::min(min_d, sx[static_cast<std::size_t>(x)]);
    double margin = 1e-7 * (1.0 + std::abs(target_d));
    Rat zsum(0);
    for (const auto& z : sub.z) zsum += z;
    auto exact_sx = [&](int x) {
      Rat s(0);
      const BitRow& row = rows[static_cast<std::size_t>(x)];
      for (std::size_t j = 0; j < st.cols.size(); ++j)
        if (row.test(st.cols[j])) s += sub.z[j];
      return s / zsum;
    };
    int x_min = -1;
    Rat min_exact(0);
    for (int x = 0; x < m; ++x) {
      if (sx[static_cast<std::size_t>(x)] > min_d + margin) continue;
      Rat s = exact_sx(x);
      if (x_min == -1 || s < min_exact) {
        x_min = x;
        min_exact = s;
      }
    }

    if (min_exact >= target) {
      MaxMinResult res;
      res.w.assign(static_cast<std::size_t>(m), Rat(0));
      for (std::size_t j = 0; j < st.cols.size(); ++j)
        res.w[static_cast<std::size_t>(st.cols[j])] = sub.z[j] / zsum;
      res.min_cover = min_exact;
      res.feasible = true;
      return res;
    }

    bool progress = false;
    if (!in_rows[static_cast<std::size_t>(x_min)]) {
      add_row(x_min);
      progress = true;
    }

    // column oracle: best response against the subgame row mixture
    Rat usum(0);
    for (const auto& u : sub.u) usum += u;
    std::vector<double> ud(st.rows.size());
    for (std::size_t i = 0; i < st.rows.size(); ++i)
      ud[i] = to_double(sub.u[i]) / to_double(usum);
    std::vector<double> gain(static_cast<std::size_t>(m), 0.0);
    for (std::size_t i = 0; i < st.rows.size(); ++i) {
      if (ud[i] == 0) continue;
      rows[static_cast<std::size_t>(st.rows[i])].for_each([&](int y) { gain[static_cast<std::size_t>(y)] += ud[i]; });
    }
    int y_best = -1;
    double gbest = -1;
    for (int y = 0; y < m; ++y) {
      if (in_cols[static_cast<std::size_t>(y)]) continue;
      if (gain[static_cast<std::size_t>(y)] > gbest) {
        gbest = gain[static_cast<std::size_t>(y)];
        y_best = y;
      }
    }
    if (y_best >= 0 && gbest > to_double(sub.value) - 1e-12) {
      // exact confirmation that the column improves the subgame value
      Rat g(0);
      for (std::size_t i = 0; i < st.rows.size(); ++i)
        if (rows[static_cast<std::size_t>(st.rows[i])].test(y_best)) g += sub.u[i];
      g /= usum;
      if (g > sub.value) {
        add_col(y_best);
        progress = true;
      }
    }

    if (!progress) {
      // full equilibrium reached; target unattainable
      MaxMinResult res;
      res.w.assign(static_cast<std::size_t>(m), Rat(0));
      for (std::size_t j = 0; j < st.cols.size(); ++j)
        res.w[static_cast<std::size_t>(st.cols[j])] = sub.z[j] / zsum;
      res.min_cover = min_exact;
      res.feasible = false;
      return res;
    }
  }
}

}  // namespace tricolor
