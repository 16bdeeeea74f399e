#include "ccomp/truncated_examples.hpp"

#include "ccomp/error.hpp"

#include <cmath>

namespace ccomp {

namespace {

void require_level(Index level, const char* name) {
  if (level < 1) fail(ErrorKind::Input, std::string(name) + ": level must be at least 1");
}

PairDiagnostics diagnose(const TruncatedExample& ex, const std::string& a, const std::string& b,
                         const TolerancePolicy& tol) {
  const Subspace& m = ex.subspaces.at(a);
  const Subspace& n = ex.subspaces.at(b);
  const auto d = pair_decomposition(m, n, tol);
  PairDiagnostics out;
  out.first = a;
  out.second = b;
  out.dim_first = m.dim();
  out.dim_second = n.dim();
  out.decision = has_common_complement(m, n, tol).decision;
  out.margin = sum_closedness_margin(m, n, tol);
  out.dim_MN = d.dim_MN;
  out.dim_M_Nperp = d.dim_M_Nperp;
  out.dim_Mperp_N = d.dim_Mperp_N;
  out.dim_Mperp_Nperp = d.dim_Mperp_Nperp;
  return out;
}

Subspace from_matrix(const Matrix& cols, const TolerancePolicy& tol) {
  return Subspace::from_columns(cols, tol);
}

}  // namespace

TruncatedExample nonclosed_sum_pair(Index level, const TolerancePolicy& tol) {
  require_level(level, "nonclosed_sum_pair");
  TruncatedExample ex;
  ex.name = "nonclosed-sum";
  ex.level = level;
  ex.ambient_dim = 2 * level;
  Matrix m = Matrix::Zero(ex.ambient_dim, level);
  Matrix n = Matrix::Zero(ex.ambient_dim, level);
  for (Index k = 1; k <= level; ++k) {
    const double kk = static_cast<double>(k);
    // e_{2k-1} and e_{2k} sit at zero-based rows 2k-2 and 2k-1
    m(2 * k - 2, k - 1) = 1.0;
    n(2 * k - 2, k - 1) = std::sqrt((kk - 1.0) / kk);
    n(2 * k - 1, k - 1) = std::sqrt(1.0 / kk);
  }
  ex.subspaces.emplace("M", from_matrix(m, tol));
  ex.subspaces.emplace("N", from_matrix(n, tol));
  ex.diagnostics.push_back(diagnose(ex, "M", "N", tol));
  ex.notes.push_back("finite truncations always have closed sum; the margin 1/sqrt(level) "
                     "tends to 0 as the level grows");
  return ex;
}

TruncatedExample shift_triple(Index level, ShiftWindow window, const TolerancePolicy& tol) {
  require_level(level, "shift_triple");
  const Index lo = -level;
  const Index hi = window == ShiftWindow::Symmetric ? level - 1 : level;
  TruncatedExample ex;
  ex.name = "shift-triple";
  ex.level = level;
  ex.ambient_dim = hi - lo + 1;
  auto span_where = [&](auto pred) {
    Matrix cols = Matrix::Zero(ex.ambient_dim, 0);
    for (Index i = lo; i <= hi; ++i) {
      if (!pred(i)) continue;
      cols.conservativeResize(Eigen::NoChange, cols.cols() + 1);
      cols.col(cols.cols() - 1).setZero();
      cols(i - lo, cols.cols() - 1) = 1.0;
    }
    return from_matrix(cols, tol);
  };
  ex.subspaces.emplace("M", span_where([](Index i) { return i >= 0; }));
  ex.subspaces.emplace("N", span_where([](Index i) { return i <= -1; }));
  ex.subspaces.emplace("L", span_where([](Index i) { return i >= 1; }));
  ex.diagnostics.push_back(diagnose(ex, "M", "N", tol));
  ex.diagnostics.push_back(diagnose(ex, "N", "L", tol));
  ex.diagnostics.push_back(diagnose(ex, "M", "L", tol));
  ex.notes.push_back(window == ShiftWindow::Symmetric ? "window -level..level-1"
                                                      : "window -level..level");
  ex.notes.push_back("in finite dimensions a common complement exists iff dimensions agree, "
                     "which is transitive; at most two of the three pairs can be balanced "
                     "in one window");
  return ex;
}

TruncatedExample hexagonal_pair(Index level, const TolerancePolicy& tol) {
  require_level(level, "hexagonal_pair");
  TruncatedExample ex;
  ex.name = "hexagonal";
  ex.level = level;
  ex.ambient_dim = 2 * level + 1;  // e_0 .. e_{2 level}
  const double half = 0.5;
  const double root3_2 = std::sqrt(3.0) / 2.0;
  Matrix m = Matrix::Zero(ex.ambient_dim, level);
  Matrix n = Matrix::Zero(ex.ambient_dim, level + 1);
  n(0, 0) = 1.0;  // g_0 = e_0
  for (Index k = 1; k <= level; ++k) {
    m(2 * k - 1, k - 1) = half;
    m(2 * k, k - 1) = -root3_2;
    n(2 * k - 1, k) = half;
    n(2 * k, k) = root3_2;
  }
  ex.subspaces.emplace("M", from_matrix(m, tol));
  ex.subspaces.emplace("N", from_matrix(n, tol));
  ex.diagnostics.push_back(diagnose(ex, "M", "N", tol));
  ex.notes.push_back("dim N - dim M = 1 at every finite level, so no common complement; the "
                     "infinite-dimensional pair has one because both reduced dimensions are "
                     "infinite");
  return ex;
}

TruncatedExample make_example(const std::string& name, Index level, ShiftWindow window,
                              const TolerancePolicy& tol) {
  if (name == "nonclosed-sum") return nonclosed_sum_pair(level, tol);
  if (name == "shift-triple") return shift_triple(level, window, tol);
  if (name == "hexagonal") return hexagonal_pair(level, tol);
  fail(ErrorKind::Input, "unknown example '" + name +
                             "' (expected nonclosed-sum, shift-triple or hexagonal)");
}

}  // namespace ccomp
