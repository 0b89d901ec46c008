#include "adugs/tracker/assignment.hpp"

#include <algorithm>
#include <limits>

namespace adugs::tracker {

namespace {
constexpr double kForbiddenCost = 1e6;
}

std::vector<int> solve_assignment(const std::vector<std::vector<double>>& cost) {
  const int n = static_cast<int>(cost.size());
  if (n == 0) return {};
  constexpr double inf = std::numeric_limits<double>::infinity();

  // 1-based potentials; p[j] = row currently assigned to column j
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = -1;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j) {
    if (p[j] > 0) row_to_col[p[j] - 1] = j - 1;
  }
  return row_to_col;
}

Association associate(std::span<const BoundingBox> predicted,
                      std::span<const Measurement> detections,
                      double gate_iou) {
  Association out;
  const int nt = static_cast<int>(predicted.size());
  const int nd = static_cast<int>(detections.size());
  if (nt == 0 || nd == 0) {
    for (int t = 0; t < nt; ++t) out.unmatched_tracks.push_back(t);
    for (int d = 0; d < nd; ++d) out.unmatched_detections.push_back(d);
    return out;
  }

  const int n = std::max(nt, nd);
  std::vector<std::vector<double>> cost(n, std::vector<double>(n, kForbiddenCost));
  std::vector<std::vector<double>> overlap(nt, std::vector<double>(nd, 0.0));
  for (int t = 0; t < nt; ++t) {
    for (int d = 0; d < nd; ++d) {
      const double o = iou(predicted[t], detections[d].box());
      overlap[t][d] = o;
      if (o >= gate_iou) cost[t][d] = 1.0 - o;
    }
  }

  const std::vector<int> row_to_col = solve_assignment(cost);
  std::vector<char> det_matched(nd, 0);
  for (int t = 0; t < nt; ++t) {
    const int d = row_to_col[t];
    if (d >= 0 && d < nd && overlap[t][d] >= gate_iou) {
      out.matches.emplace_back(t, d);
      det_matched[d] = 1;
    } else {
      out.unmatched_tracks.push_back(t);
    }
  }
  for (int d = 0; d < nd; ++d) {
    if (!det_matched[d]) out.unmatched_detections.push_back(d);
  }
  return out;
}

}  // namespace adugs::tracker
