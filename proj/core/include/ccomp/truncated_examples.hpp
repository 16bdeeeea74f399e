#pragma once

// Finite truncations of three classical infinite-dimensional pairs, with
// diagnostics showing what survives (and what collapses) at finite level.

#include "ccomp/relpos.hpp"

#include <map>
#include <string>
#include <vector>

namespace ccomp {

enum class ShiftWindow {
  Asymmetric,  // indices -level .. level
  Symmetric,   // indices -level .. level-1
};

struct PairDiagnostics {
  std::string first;
  std::string second;
  Index dim_first = 0;
  Index dim_second = 0;
  bool decision = false;
  double margin = 1.0;  // sum_closedness_margin
  Index dim_MN = 0;
  Index dim_M_Nperp = 0;
  Index dim_Mperp_N = 0;
  Index dim_Mperp_Nperp = 0;
};

struct TruncatedExample {
  std::string name;  // "nonclosed-sum", "shift-triple" or "hexagonal"
  Index level = 0;
  Index ambient_dim = 0;
  std::map<std::string, Subspace> subspaces;
  std::vector<PairDiagnostics> diagnostics;
  std::vector<std::string> notes;
};

/// M = span{e_{2k-1}}, N = span{√((k-1)/k) e_{2k-1} + √(1/k) e_{2k}}, k = 1..level.
TruncatedExample nonclosed_sum_pair(Index level, const TolerancePolicy& tol = {});

/// Truncation of M = {n ≥ 0}, N = {n ≤ -1}, L = {n ≥ 1} on Z.
TruncatedExample shift_triple(Index level, ShiftWindow window = ShiftWindow::Symmetric,
                              const TolerancePolicy& tol = {});

/// f_k = ½e_{2k-1} − (√3/2)e_{2k}, g_k = ½e_{2k-1} + (√3/2)e_{2k}, g_0 = e_0.
TruncatedExample hexagonal_pair(Index level, const TolerancePolicy& tol = {});

/// Dispatch by name; throws ErrorKind::Input on unknown names or level < 1.
TruncatedExample make_example(const std::string& name, Index level,
                              ShiftWindow window = ShiftWindow::Symmetric,
                              const TolerancePolicy& tol = {});

}  // namespace ccomp
