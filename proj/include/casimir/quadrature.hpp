#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <type_traits>
#include <vector>

namespace casimir {

template <class Real>
struct QuadResult {
  Real value{};
  Real error{};
  long evals{};
  bool converged{};
  int intervals{};
};

template <class Real>
struct QuadControl {
  Real rel_tol = Real(1e-10L);
  Real abs_tol = Real(0);
  int max_intervals = 4000;
};

namespace gk15 {
// Gauss-Kronrod 15(7) nodes and weights (positive half, QUADPACK values).
inline constexpr long double nodes[8] = {
    0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
    0.586087235467691130294144838258730L, 0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L, 0.000000000000000000000000000000000L};
inline constexpr long double wk[8] = {
    0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L};
inline constexpr long double wg[4] = {
    0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L};
}  // namespace gk15

namespace detail {

template <class Real>
struct Segment {
  Real a, b, value, error;
};

// Evaluates one GK15 panel with a single batched call.
// BatchFn: void(const Real* x, Real* fx, int n)
template <class Real, class BatchFn>
Segment<Real> gk15_panel(BatchFn&& fn, Real a, Real b) {
  const Real hl = (b - a) / 2;
  const Real mid = (a + b) / 2;
  Real xs[15], fs[15];
  for (int i = 0; i < 7; ++i) {
    xs[2 * i] = mid - hl * Real(gk15::nodes[i]);
    xs[2 * i + 1] = mid + hl * Real(gk15::nodes[i]);
  }
  xs[14] = mid;
  fn(xs, fs, 15);

  Real resk = Real(gk15::wk[7]) * fs[14];
  Real resg = Real(gk15::wg[3]) * fs[14];
  for (int i = 0; i < 7; ++i) {
    const Real pair = fs[2 * i] + fs[2 * i + 1];
    resk += Real(gk15::wk[i]) * pair;
    if (i % 2 == 1) resg += Real(gk15::wg[i / 2]) * pair;
  }
  resk *= hl;
  resg *= hl;

  // QUADPACK-style error scaling keeps the estimate conservative.
  Real resabs = 0;
  for (int i = 0; i < 7; ++i)
    resabs += Real(gk15::wk[i]) * (std::abs(fs[2 * i]) + std::abs(fs[2 * i + 1]));
  resabs += Real(gk15::wk[7]) * std::abs(fs[14]);
  resabs *= std::abs(hl);

  Real err = std::abs(resk - resg);
  if (resabs > Real(0) && err > Real(0)) {
    const Real scale = std::pow(Real(200) * err / resabs, Real(1.5L));
    if (scale < Real(1)) err = resabs * scale;
  }
  return {a, b, resk, err};
}

}  // namespace detail

/// Globally adaptive GK15 on [a,b]. `breakpoints` seeds the initial
/// subdivision (values outside (a,b) are ignored).
template <class Real, class BatchFn>
QuadResult<Real> integrate_gk15(BatchFn&& fn, Real a, Real b,
                                const QuadControl<std::type_identity_t<Real>>& ctl,
                                std::span<const std::type_identity_t<Real>> breakpoints = {}) {
  QuadResult<Real> out;
  if (!(b > a)) {
    out.converged = true;
    return out;
  }

  std::vector<Real> pts;
  pts.push_back(a);
  for (Real p : breakpoints)
    if (p > a && p < b) pts.push_back(p);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());

  std::vector<detail::Segment<Real>> segs;
  segs.reserve(64);
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    segs.push_back(detail::gk15_panel(fn, pts[i], pts[i + 1]));
    out.evals += 15;
  }

  auto worse = [](const detail::Segment<Real>& l, const detail::Segment<Real>& r) {
    return l.error < r.error;
  };
  std::make_heap(segs.begin(), segs.end(), worse);

  Real total = 0, toterr = 0;
  for (auto& s : segs) {
    total += s.value;
    toterr += s.error;
  }

  while ((int)segs.size() < ctl.max_intervals) {
    const Real target = std::max(ctl.abs_tol, ctl.rel_tol * std::abs(total));
    if (toterr <= target) break;

    std::pop_heap(segs.begin(), segs.end(), worse);
    detail::Segment<Real> s = segs.back();
    segs.pop_back();
    total -= s.value;
    toterr -= s.error;

    const Real m = (s.a + s.b) / 2;
    if (!(m > s.a && m < s.b)) {  // interval exhausted at machine precision
      total += s.value;
      toterr += s.error;
      segs.push_back(s);
      std::push_heap(segs.begin(), segs.end(), worse);
      break;
    }
    auto sl = detail::gk15_panel(fn, s.a, m);
    auto sr = detail::gk15_panel(fn, m, s.b);
    out.evals += 30;
    total += sl.value + sr.value;
    toterr += sl.error + sr.error;
    segs.push_back(sl);
    std::push_heap(segs.begin(), segs.end(), worse);
    segs.push_back(sr);
    std::push_heap(segs.begin(), segs.end(), worse);
  }

  // Exact recomputation of the accumulated sums (ordered, compensated).
  std::sort(segs.begin(), segs.end(),
            [](const auto& l, const auto& r) { return l.a < r.a; });
  Real sum = 0, comp = 0, errsum = 0;
  for (const auto& s : segs) {
    const Real t = sum + s.value;
    if (std::abs(sum) >= std::abs(s.value))
      comp += (sum - t) + s.value;
    else
      comp += (s.value - t) + sum;
    sum = t;
    errsum += s.error;
  }
  out.value = sum + comp;
  out.error = errsum;
  out.intervals = (int)segs.size();
  out.converged =
      errsum <= std::max(ctl.abs_tol, ctl.rel_tol * std::abs(out.value));
  return out;
}

/// Convenience wrapper for scalar integrands f(x).
template <class Real, class Fn>
QuadResult<Real> integrate_gk15_fn(Fn&& f, Real a, Real b,
                                   const QuadControl<std::type_identity_t<Real>>& ctl,
                                   std::span<const std::type_identity_t<Real>> breakpoints = {}) {
  auto batch = [&f](const Real* x, Real* y, int n) {
    for (int i = 0; i < n; ++i) y[i] = f(x[i]);
  };
  return integrate_gk15(batch, a, b, ctl, breakpoints);
}

/// Geometric + linear breakpoints for integrands with structure near `a`
/// followed by exponential decay.
template <class Real>
std::vector<Real> decay_breakpoints(Real a, Real b) {
  std::vector<Real> pts;
  Real p = std::max(a * 2, Real(1e-6L));
  while (p < std::min(b, Real(1)) && pts.size() < 24) {
    if (p > a) pts.push_back(p);
    p *= 4;
  }
  for (Real q : {Real(1), Real(2), Real(5), Real(10), Real(20), Real(40)})
    if (q > a && q < b) pts.push_back(q);
  return pts;
}

}  // namespace casimir
