#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>

namespace hweno {

// Unevaluated-pair arithmetic: a value is hi + lo with |lo| <= ulp(hi)/2,
// giving ~106 mantissa bits (~31.9 decimal digits).  The error-free
// transforms below require strict IEEE double evaluation; the build sets
// -ffp-contract=off so the compiler cannot fuse any of these expressions.

inline double dd_two_sum(double a, double b, double& err) {
  double s = a + b;
  double bb = s - a;
  err = (a - (s - bb)) + (b - bb);
  return s;
}

inline double dd_quick_two_sum(double a, double b, double& err) {  // |a|>=|b|
  double s = a + b;
  err = b - (s - a);
  return s;
}

inline double dd_two_prod(double a, double b, double& err) {
  double p = a * b;
  err = std::fma(a, b, -p);
  return p;
}

struct DDReal {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DDReal() = default;
  constexpr DDReal(double h) : hi(h), lo(0.0) {}
  constexpr DDReal(double h, double l) : hi(h), lo(l) {}
  constexpr DDReal(int v) : hi(v), lo(0.0) {}
  DDReal(long long v) : hi(static_cast<double>(v)) {
    lo = static_cast<double>(v - static_cast<long long>(hi));
  }

  DDReal& operator+=(const DDReal& o);
  DDReal& operator-=(const DDReal& o);
  DDReal& operator*=(const DDReal& o);
  DDReal& operator/=(const DDReal& o);
};

inline DDReal operator+(const DDReal& a, const DDReal& b) {
  double s1, s2, t1, t2;
  s1 = dd_two_sum(a.hi, b.hi, s2);
  t1 = dd_two_sum(a.lo, b.lo, t2);
  s2 += t1;
  s1 = dd_quick_two_sum(s1, s2, s2);
  s2 += t2;
  s1 = dd_quick_two_sum(s1, s2, s2);
  return {s1, s2};
}

inline DDReal operator+(const DDReal& a, double b) {
  double s1, s2;
  s1 = dd_two_sum(a.hi, b, s2);
  s2 += a.lo;
  s1 = dd_quick_two_sum(s1, s2, s2);
  return {s1, s2};
}

inline DDReal operator+(double a, const DDReal& b) { return b + a; }

inline DDReal operator-(const DDReal& a) { return {-a.hi, -a.lo}; }

inline DDReal operator-(const DDReal& a, const DDReal& b) { return a + (-b); }
inline DDReal operator-(const DDReal& a, double b) { return a + (-b); }
inline DDReal operator-(double a, const DDReal& b) { return (-b) + a; }

inline DDReal operator*(const DDReal& a, const DDReal& b) {
  double p1, p2;
  p1 = dd_two_prod(a.hi, b.hi, p2);
  p2 += a.hi * b.lo + a.lo * b.hi;
  p1 = dd_quick_two_sum(p1, p2, p2);
  return {p1, p2};
}

inline DDReal operator*(const DDReal& a, double b) {
  double p1, p2;
  p1 = dd_two_prod(a.hi, b, p2);
  p2 += a.lo * b;
  p1 = dd_quick_two_sum(p1, p2, p2);
  return {p1, p2};
}

inline DDReal operator*(double a, const DDReal& b) { return b * a; }

inline DDReal operator/(const DDReal& a, const DDReal& b) {
  double q1 = a.hi / b.hi;
  DDReal r = a - b * q1;
  double q2 = r.hi / b.hi;
  r = r - b * q2;
  double q3 = r.hi / b.hi;
  double s1, s2;
  s1 = dd_quick_two_sum(q1, q2, s2);
  return DDReal(s1, s2) + q3;
}

inline DDReal operator/(const DDReal& a, double b) { return a / DDReal(b); }
inline DDReal operator/(double a, const DDReal& b) { return DDReal(a) / b; }

inline DDReal& DDReal::operator+=(const DDReal& o) { return *this = *this + o; }
inline DDReal& DDReal::operator-=(const DDReal& o) { return *this = *this - o; }
inline DDReal& DDReal::operator*=(const DDReal& o) { return *this = *this * o; }
inline DDReal& DDReal::operator/=(const DDReal& o) { return *this = *this / o; }

inline bool operator==(const DDReal& a, const DDReal& b) {
  return a.hi == b.hi && a.lo == b.lo;
}
inline bool operator!=(const DDReal& a, const DDReal& b) { return !(a == b); }
inline bool operator<(const DDReal& a, const DDReal& b) {
  return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(const DDReal& a, const DDReal& b) { return b < a; }
inline bool operator<=(const DDReal& a, const DDReal& b) { return !(b < a); }
inline bool operator>=(const DDReal& a, const DDReal& b) { return !(a < b); }

inline bool dd_isfinite(const DDReal& a) { return std::isfinite(a.hi); }

inline DDReal abs(const DDReal& a) { return a.hi < 0.0 ? -a : a; }
inline DDReal fabs(const DDReal& a) { return abs(a); }

inline DDReal max(const DDReal& a, const DDReal& b) { return a < b ? b : a; }
inline DDReal min(const DDReal& a, const DDReal& b) { return a < b ? a : b; }

inline DDReal ldexp(const DDReal& a, int n) {
  return {std::ldexp(a.hi, n), std::ldexp(a.lo, n)};
}

inline DDReal fma(const DDReal& a, const DDReal& b, const DDReal& c) {
  return a * b + c;
}

inline constexpr DDReal dd_pi{0x1.921fb54442d18p+1, 0x1.1a62633145c07p-53};
inline constexpr DDReal dd_half_pi{0x1.921fb54442d18p+0, 0x1.1a62633145c07p-54};
inline constexpr DDReal dd_ln2{0x1.62e42fefa39efp-1, 0x1.abc9e3b39803fp-56};

inline DDReal sqrt(const DDReal& a) {
  if (a.hi == 0.0 && a.lo == 0.0) return DDReal(0);
  if (a.hi < 0.0) return DDReal(std::nan(""));
  // Karp-Markstein: one pair-precision correction of the double estimate
  double x = 1.0 / std::sqrt(a.hi);
  double ax = a.hi * x;
  DDReal d = a - DDReal(ax) * DDReal(ax);
  return DDReal(ax) + d.hi * (x * 0.5);
}

namespace detail {
inline const DDReal* inv_factorials() {
  static DDReal table[36];
  static bool init = [] {
    table[0] = DDReal(1);
    for (int k = 1; k < 36; ++k) table[k] = table[k - 1] / double(k);
    return true;
  }();
  (void)init;
  return table;
}
}  // namespace detail

inline DDReal exp(const DDReal& a) {
  if (a.hi <= -709.0) return DDReal(0);
  if (a.hi >= 709.8) return DDReal(HUGE_VAL);
  // Cody-Waite split of ln2: L1 and L2 carry 26 bits each so m*L1 and m*L2
  // are exact for |m| < 2^11; the (L3, L4) tail goes through an exact product.
  // Plain a - dd_ln2*m loses ~m*2^-107 absolute, which shows up at |a| ~ 700.
  constexpr double kL1 = 0x1.62e42f8000000p-1;
  constexpr double kL2 = 0x1.be8e7b8000000p-27;
  constexpr double kL3 = 0x1.35793c7673008p-53;
  constexpr double kL4 = -0x1.a12a17e1979b3p-109;
  double m = std::nearbyint(a.hi / dd_ln2.hi);
  DDReal t = a - DDReal(m * kL1);
  t = t - DDReal(m * kL2);
  double e3, lo3;
  double p3 = dd_two_prod(m, kL3, e3);
  double hi3 = dd_quick_two_sum(p3, e3 + m * kL4, lo3);
  t = t - DDReal(hi3, lo3);
  DDReal r = ldexp(t, -9);  // |r| <= ln2/1024
  const DDReal* invf = detail::inv_factorials();
  // e^r - 1 by Taylor, then square up 9 times via s <- 2s + s^2
  DDReal p = r;
  DDReal s = r;
  for (int k = 2; k <= 10; ++k) {
    p = p * r;
    s = s + p * invf[k];
  }
  for (int i = 0; i < 9; ++i) s = ldexp(s, 1) + s * s;
  return ldexp(s + 1.0, static_cast<int>(m));
}

inline DDReal log(const DDReal& a) {  // a > 0
  if (a.hi <= 0.0) return DDReal(std::nan(""));
  if (std::isinf(a.hi)) return a;
  // Scale to [0.5, 1) so exp() below never leaves its accurate range, then
  // Newton on y -> y + m e^-y - 1; each pass squares the error, so two
  // passes from the double seed reach pair roundoff.
  int k = 0;
  std::frexp(a.hi, &k);
  DDReal m = ldexp(a, -k);
  DDReal y(std::log(m.hi));
  y = y + m * exp(-y) - 1.0;
  y = y + m * exp(-y) - 1.0;
  return y + dd_ln2 * double(k);
}

inline void sin_cos(const DDReal& a, DDReal& s, DDReal& c) {
  double k = std::nearbyint((a.hi / dd_half_pi.hi));
  DDReal r = a - dd_half_pi * k;
  const DDReal* invf = detail::inv_factorials();
  DDReal r2 = r * r;
  DDReal st = r;  // odd series
  DDReal p = r;
  for (int n = 3; n <= 31; n += 2) {
    p = p * r2;
    st = st + p * ((n / 2) % 2 ? -invf[n] : invf[n]);
  }
  DDReal ct(1);  // even series
  p = DDReal(1);
  for (int n = 2; n <= 30; n += 2) {
    p = p * r2;
    ct = ct + p * ((n / 2) % 2 ? -invf[n] : invf[n]);
  }
  switch (((static_cast<long long>(k) % 4) + 4) % 4) {
    case 0: s = st; c = ct; break;
    case 1: s = ct; c = -st; break;
    case 2: s = -st; c = -ct; break;
    default: s = -ct; c = st; break;
  }
}

inline DDReal sin(const DDReal& a) {
  DDReal s, c;
  sin_cos(a, s, c);
  return s;
}

inline DDReal cos(const DDReal& a) {
  DDReal s, c;
  sin_cos(a, s, c);
  return c;
}

inline DDReal dd_pow10(int n) {  // |n| <= ~300; larger overflows double
  bool neg = n < 0;
  unsigned k = neg ? -n : n;
  DDReal base(10);
  DDReal r(1);
  while (k) {
    if (k & 1u) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return neg ? DDReal(1) / r : r;
}

// v * 10^n in chunks, so decimal exponents past the double range (as happens
// when scaling 36-digit mantissas near 1e+-308) never overflow an intermediate.
inline DDReal dd_scale_pow10(DDReal v, int n) {
  while (n > 280) { v = v * dd_pow10(280); n -= 280; }
  while (n < -280) { v = v * dd_pow10(-280); n += 280; }
  return v * dd_pow10(n);
}

// Decimal text form with 36 significant digits, "[-]d.dd...de[+-]dd".
inline std::string dd_format(const DDReal& x) {
  if (std::isnan(x.hi)) return "nan";
  if (std::isinf(x.hi)) return x.hi > 0 ? "inf" : "-inf";
  constexpr int kDigits = 36;
  char out[kDigits + 16];
  char* o = out;
  if (x.hi < 0.0 || (x.hi == 0.0 && x.lo < 0.0)) *o++ = '-';
  DDReal r = abs(x);
  int e = 0;
  int d[kDigits + 1];
  if (r.hi == 0.0 && r.lo == 0.0) {
    for (int i = 0; i <= kDigits; ++i) d[i] = 0;
  } else {
    e = static_cast<int>(std::floor(std::log10(r.hi)));
    r = dd_scale_pow10(r, -e);
    if (r.hi >= 10.0) { r = r / 10.0; ++e; }
    if (r.hi < 1.0) { r = r * 10.0; --e; }
    for (int i = 0; i <= kDigits; ++i) {
      d[i] = static_cast<int>(r.hi);
      r = (r - DDReal(d[i])) * 10.0;
    }
    for (int i = kDigits; i > 0; --i) {  // settle borrows/carries
      if (d[i] < 0) { d[i] += 10; d[i - 1] -= 1; }
      else if (d[i] > 9) { d[i] -= 10; d[i - 1] += 1; }
    }
    if (d[kDigits] >= 5) {  // round on the guard digit
      int i = kDigits - 1;
      d[i] += 1;
      while (i > 0 && d[i] > 9) { d[i] -= 10; d[i - 1] += 1; --i; }
    }
    if (d[0] > 9) {  // carry out of the leading digit
      for (int i = kDigits - 1; i > 0; --i) d[i] = d[i - 1];
      d[1] = d[0] % 10;
      d[0] = d[0] / 10;
      ++e;
    }
    if (d[0] == 0) {  // borrow consumed the leading digit
      for (int i = 0; i + 1 < kDigits; ++i) d[i] = d[i + 1];
      --e;
    }
  }
  *o++ = static_cast<char>('0' + d[0]);
  *o++ = '.';
  for (int i = 1; i < kDigits; ++i) *o++ = static_cast<char>('0' + d[i]);
  o += std::snprintf(o, 8, "e%+03d", e);
  return std::string(out, o);
}

inline DDReal dd_parse(std::string_view s, bool* ok = nullptr) {
  if (ok) *ok = false;
  size_t i = 0;
  auto peek = [&]() { return i < s.size() ? s[i] : '\0'; };
  bool neg = false;
  if (peek() == '+' || peek() == '-') neg = s[i++] == '-';
  if (s.substr(i) == "inf") {
    if (ok) *ok = true;
    return DDReal(neg ? -HUGE_VAL : HUGE_VAL);
  }
  if (s.substr(i) == "nan") {
    if (ok) *ok = true;
    return DDReal(std::nan(""));
  }
  DDReal r(0);
  int frac = 0;
  bool in_frac = false;
  bool any = false;
  for (; i < s.size(); ++i) {
    char ch = s[i];
    if (ch >= '0' && ch <= '9') {
      r = r * 10.0 + double(ch - '0');
      if (in_frac) ++frac;
      any = true;
    } else if (ch == '.' && !in_frac) {
      in_frac = true;
    } else {
      break;
    }
  }
  if (!any) return DDReal(std::nan(""));
  int ex = 0;
  if (peek() == 'e' || peek() == 'E') {
    ++i;
    bool eneg = false;
    if (peek() == '+' || peek() == '-') eneg = s[i++] == '-';
    bool eany = false;
    for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) {
      ex = ex * 10 + (s[i] - '0');
      eany = true;
    }
    if (!eany) return DDReal(std::nan(""));
    if (eneg) ex = -ex;
  }
  if (i != s.size()) return DDReal(std::nan(""));
  if (ex - frac != 0) r = dd_scale_pow10(r, ex - frac);
  if (ok) *ok = true;
  return neg ? -r : r;
}

// Working scalar of the evolution and the demoted scalar used only inside
// reconstruction-weight computation.
using WorkReal = DDReal;
using WeightReal = double;

inline WeightReal demote(const WorkReal& x) { return x.hi; }
inline WorkReal promote(WeightReal x) { return WorkReal(x); }

inline double to_double(const DDReal& x) { return x.hi; }

}  // namespace hweno
