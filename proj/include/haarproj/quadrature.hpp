/* Copyright (C) 2026 The haarproj authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#ifndef HAARPROJ_QUADRATURE_HPP
#define HAARPROJ_QUADRATURE_HPP

#include <haarproj/errors.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace haarproj {

struct QuadResult {
  double value = 0.0;
  double err_bound = 0.0; // accumulated |Kronrod - Gauss| over panels
};

namespace gk {

// 15-point Kronrod rule with embedded 7-point Gauss rule on [-1,1].
// xgk[0..6] are the positive abscissae in descending order, xgk[7] = 0;
// the Gauss points are xgk[1], xgk[3], xgk[5] and the origin.
inline constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
inline constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
inline constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

} // namespace gk

// One Kronrod-15 panel on [a,b]; err_bound is the raw |K - G| difference.
template <class F>
QuadResult gk15(F&& f, double a, double b)
{
  double c = 0.5 * (a + b);
  double h = 0.5 * (b - a);
  double fc = f(c);
  double resk = gk::wgk[7] * fc;
  double resg = gk::wg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    double dx = h * gk::xgk[i];
    double pair = f(c - dx) + f(c + dx);
    resk += gk::wgk[i] * pair;
    if (i % 2 == 1) resg += gk::wg[i / 2] * pair;
  }
  return {resk * h, std::abs(resk - resg) * std::abs(h)};
}

// Adaptive bisection on [a,b], optionally pre-split at interior kink
// points. A panel is accepted once its error estimate drops below its
// width-proportional share of abs_tol (or below panel_floor, whichever
// is larger). Panels that stall at the minimal width are accepted too,
// but their combined error must stay within abs_tol or the call throws
// AccuracyError carrying the achieved bound.
template <class F>
QuadResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                              const std::vector<double>& splits = {},
                              double panel_floor = 0.0)
{
  struct Seg {
    double a, b;
  };
  std::vector<Seg> stack;
  {
    std::vector<double> cuts{a};
    for (double s : splits)
      if (s > a && s < b) cuts.push_back(s);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = cuts.size(); i-- > 1;)
      stack.push_back({cuts[i - 1], cuts[i]});
  }

  const double total_width = std::abs(b - a);
  const double min_width = total_width * 1e-13;
  double value = 0.0;
  double err_total = 0.0;
  double err_stalled = 0.0;

  while (!stack.empty()) {
    Seg seg = stack.back();
    stack.pop_back();
    QuadResult r = gk15(f, seg.a, seg.b);
    double width = seg.b - seg.a;
    double share = std::max(abs_tol * (width / total_width), panel_floor);
    if (r.err_bound <= share || width <= min_width) {
      value += r.value;
      err_total += r.err_bound;
      if (r.err_bound > share) err_stalled += r.err_bound;
      continue;
    }
    double mid = 0.5 * (seg.a + seg.b);
    stack.push_back({seg.a, mid});
    stack.push_back({mid, seg.b});
  }

  if (err_stalled > abs_tol)
    throw AccuracyError("adaptive quadrature stalled before reaching the "
                        "requested tolerance",
                        err_total);
  return {value, err_total};
}

} // namespace haarproj

#endif // HAARPROJ_QUADRATURE_HPP
