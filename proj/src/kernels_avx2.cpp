// AVX2+FMA batch kernel. Compiled with -mavx2 -mfma in its own translation
// unit; only reached through select_batch() after a cpuid check.

#include <immintrin.h>

#include <limits>

#include "casimir/kernels.hpp"

namespace casimir::kernels {

namespace {

inline __m256d set1(double v) { return _mm256_set1_pd(v); }

// exp(x) via Cephes-style range reduction and a rational approximant,
// ~1 ulp on [-708, 709]. Out-of-range inputs flush to 0 / +inf.
inline __m256d exp_pd(__m256d x) {
  const __m256d log2e = set1(1.4426950408889634073599);
  const __m256d c1 = set1(6.93145751953125e-1);
  const __m256d c2 = set1(1.42860682030941723212e-6);

  const __m256d too_small = _mm256_cmp_pd(x, set1(-708.396418532264), _CMP_LT_OQ);
  const __m256d too_big = _mm256_cmp_pd(x, set1(709.782712893384), _CMP_GT_OQ);

  __m256d px = _mm256_round_pd(_mm256_fmadd_pd(log2e, x, set1(0.5)),
                               _MM_FROUND_TO_NEG_INF | _MM_FROUND_NO_EXC);
  x = _mm256_fnmadd_pd(px, c1, x);
  x = _mm256_fnmadd_pd(px, c2, x);
  const __m256d xx = _mm256_mul_pd(x, x);

  __m256d p = set1(1.26177193074810590878e-4);
  p = _mm256_fmadd_pd(p, xx, set1(3.02994407707441961300e-2));
  p = _mm256_fmadd_pd(p, xx, set1(9.99999999999999999910e-1));
  p = _mm256_mul_pd(p, x);

  __m256d q = set1(3.00198505138664455042e-6);
  q = _mm256_fmadd_pd(q, xx, set1(2.52448340349684104192e-3));
  q = _mm256_fmadd_pd(q, xx, set1(2.27265548208155028766e-1));
  q = _mm256_fmadd_pd(q, xx, set1(2.00000000000000000005e0));

  __m256d r = _mm256_div_pd(p, _mm256_sub_pd(q, p));
  r = _mm256_fmadd_pd(set1(2.0), r, set1(1.0));

  // scale by 2^n: n is small, convert through int32
  const __m128i n32 = _mm256_cvtpd_epi32(px);
  const __m256i n64 = _mm256_cvtepi32_epi64(n32);
  const __m256i pow2 =
      _mm256_slli_epi64(_mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
  r = _mm256_mul_pd(r, _mm256_castsi256_pd(pow2));

  r = _mm256_blendv_pd(r, _mm256_setzero_pd(), too_small);
  r = _mm256_blendv_pd(r, set1(std::numeric_limits<double>::infinity()), too_big);
  return r;
}

// log(x) for positive normal x, Cephes rational form.
inline __m256d log_pd(__m256d x) {
  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i exp_bits =
      _mm256_and_si256(_mm256_srli_epi64(bits, 52), _mm256_set1_epi64x(0x7ff));
  // int64 -> double for small non-negative values via the 2^52 trick
  const __m256d magic = set1(4503599627370496.0);  // 2^52
  __m256d e = _mm256_sub_pd(
      _mm256_castsi256_pd(_mm256_or_si256(exp_bits, _mm256_castpd_si256(magic))),
      magic);
  e = _mm256_sub_pd(e, set1(1022.0));

  const __m256i mant_mask = _mm256_set1_epi64x(0x000fffffffffffffLL);
  const __m256i half_bits = _mm256_set1_epi64x(0x3fe0000000000000LL);  // 0.5
  __m256d m = _mm256_castsi256_pd(
      _mm256_or_si256(_mm256_and_si256(bits, mant_mask), half_bits));

  const __m256d sqrth = set1(0.70710678118654752440);
  const __m256d below = _mm256_cmp_pd(m, sqrth, _CMP_LT_OQ);
  e = _mm256_sub_pd(e, _mm256_and_pd(below, set1(1.0)));
  // z = m - 1, or 2m - 1 when m < sqrt(1/2)
  const __m256d z = _mm256_blendv_pd(
      _mm256_sub_pd(m, set1(1.0)),
      _mm256_fmsub_pd(m, set1(2.0), set1(1.0)), below);

  __m256d p = set1(1.01875663804580931796e-4);
  p = _mm256_fmadd_pd(p, z, set1(4.97494994976747001425e-1));
  p = _mm256_fmadd_pd(p, z, set1(4.70579119878881725854e0));
  p = _mm256_fmadd_pd(p, z, set1(1.44989225341610930846e1));
  p = _mm256_fmadd_pd(p, z, set1(1.79368678507819816313e1));
  p = _mm256_fmadd_pd(p, z, set1(7.70838733755885391666e0));

  __m256d q = _mm256_add_pd(z, set1(1.12873587189167450590e1));
  q = _mm256_fmadd_pd(q, z, set1(4.52279145837532221105e1));
  q = _mm256_fmadd_pd(q, z, set1(8.29875266912776603211e1));
  q = _mm256_fmadd_pd(q, z, set1(7.11544750618563894466e1));
  q = _mm256_fmadd_pd(q, z, set1(2.31251620126765340583e1));

  const __m256d zz = _mm256_mul_pd(z, z);
  __m256d y = _mm256_mul_pd(_mm256_mul_pd(z, zz), _mm256_div_pd(p, q));
  y = _mm256_fnmadd_pd(e, set1(2.121944400546905827679e-4), y);
  y = _mm256_fnmadd_pd(set1(0.5), zz, y);
  __m256d r = _mm256_add_pd(z, y);
  r = _mm256_fmadd_pd(e, set1(0.693359375), r);
  return r;
}

// log1p(u) for u in (-1, 0], via log(1+u) * u / ((1+u) - 1).
inline __m256d log1p_pd(__m256d u) {
  const __m256d one = set1(1.0);
  const __m256d w = _mm256_add_pd(one, u);
  const __m256d wm1 = _mm256_sub_pd(w, one);
  const __m256d exact = _mm256_cmp_pd(wm1, _mm256_setzero_pd(), _CMP_EQ_OQ);
  const __m256d denom = _mm256_blendv_pd(wm1, one, exact);
  __m256d r = _mm256_mul_pd(log_pd(w), _mm256_div_pd(u, denom));
  return _mm256_blendv_pd(r, u, exact);
}

inline __m256d coth_pd(__m256d z, bool semispace) {
  if (semispace) return set1(1.0);
  const __m256d one = set1(1.0);
  const __m256d e2 = exp_pd(_mm256_mul_pd(set1(-2.0), z));
  return _mm256_div_pd(_mm256_add_pd(one, e2), _mm256_sub_pd(one, e2));
}

}  // namespace

void eval_f_avx2(const Profile& p, const double* y, double* f, int n) {
  using Mode = Profile::Mode;
  if (p.mode == Mode::vacuum) {
    for (int i = 0; i < n; ++i) f[i] = 0.0;
    return;
  }

  const __m256d one = set1(1.0);
  const __m256d two = set1(2.0);
  int i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d yv = _mm256_loadu_pd(y + i);
    const __m256d y2 = _mm256_mul_pd(yv, yv);
    const __m256d t = exp_pd(_mm256_sub_pd(_mm256_setzero_pd(), yv));
    __m256d fv;

    if (p.mode == Mode::ideal_metal) {
      fv = _mm256_mul_pd(_mm256_mul_pd(two, yv),
                         log1p_pd(_mm256_sub_pd(_mm256_setzero_pd(), t)));
    } else if (p.mode == Mode::zero_zeta) {
      const __m256d w = set1(p.w);
      __m256d r_te = _mm256_setzero_pd();
      if (p.w > 0) {
        const __m256d s = _mm256_sqrt_pd(_mm256_add_pd(y2, w));
        const __m256d cth =
            coth_pd(_mm256_mul_pd(set1(p.half_thickness), s), p.semispace);
        const __m256d den = _mm256_add_pd(
            _mm256_fmadd_pd(two, y2, w),
            _mm256_mul_pd(two, _mm256_mul_pd(yv, _mm256_mul_pd(s, cth))));
        r_te = _mm256_div_pd(w, den);
      }
      const __m256d ln_tm = log1p_pd(_mm256_sub_pd(_mm256_setzero_pd(), t));
      const __m256d ln_te = log1p_pd(
          _mm256_sub_pd(_mm256_setzero_pd(),
                        _mm256_mul_pd(_mm256_mul_pd(r_te, r_te), t)));
      fv = _mm256_mul_pd(yv, _mm256_add_pd(ln_tm, ln_te));
    } else {
      const __m256d eps = set1(p.eps);
      const __m256d em1z2 = set1(p.em1z2);
      const __m256d zeta2 = set1(p.zeta2);
      const __m256d h = _mm256_sqrt_pd(_mm256_add_pd(y2, em1z2));
      const __m256d cth =
          coth_pd(_mm256_mul_pd(set1(p.half_thickness), h), p.semispace);
      const __m256d yhc =
          _mm256_mul_pd(two, _mm256_mul_pd(yv, _mm256_mul_pd(h, cth)));
      const __m256d num_tm = _mm256_mul_pd(
          _mm256_sub_pd(eps, one),
          _mm256_fmsub_pd(_mm256_add_pd(eps, one), y2, zeta2));
      const __m256d den_tm =
          _mm256_add_pd(_mm256_fmadd_pd(_mm256_fmadd_pd(eps, eps, one), y2, em1z2),
                        _mm256_mul_pd(eps, yhc));
      const __m256d r_tm = _mm256_div_pd(num_tm, den_tm);
      const __m256d r_te =
          _mm256_div_pd(em1z2, _mm256_add_pd(_mm256_fmadd_pd(two, y2, em1z2), yhc));
      const __m256d u_tm = _mm256_sub_pd(
          _mm256_setzero_pd(), _mm256_mul_pd(_mm256_mul_pd(r_tm, r_tm), t));
      const __m256d u_te = _mm256_sub_pd(
          _mm256_setzero_pd(), _mm256_mul_pd(_mm256_mul_pd(r_te, r_te), t));
      fv = _mm256_mul_pd(yv, _mm256_add_pd(log1p_pd(u_tm), log1p_pd(u_te)));
    }
    _mm256_storeu_pd(f + i, fv);
  }
  if (i < n) eval_f_scalar(p, y + i, f + i, n - i);
}

}  // namespace casimir::kernels
