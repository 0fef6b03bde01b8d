#include "makai/certificates.hpp"

#include <gmpxx.h>

#include <cmath>
#include <limits>

#include "makai/errors.hpp"

namespace makai::cert {

namespace {

mpz_class ipow(long base, unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  return r;
}

// exact value of G^deg * p(j/G) for an integer-coefficient polynomial p
mpz_class scaled_eval(const std::vector<mpz_class>& c, long j, long G) {
  const int deg = static_cast<int>(c.size()) - 1;
  mpz_class acc = 0;
  for (int k = deg; k >= 0; --k) {
    acc *= j;
    acc += c[k] * ipow(G, static_cast<unsigned>(deg - k));
  }
  return acc;
}

std::vector<mpz_class> derivative(const std::vector<mpz_class>& c) {
  std::vector<mpz_class> d;
  for (size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * long(k));
  if (d.empty()) d.push_back(0);
  return d;
}

}  // namespace

PolynomialCertificate control_polynomial(int n) {
  if (n < 2) throw DimensionUnsupported("dimension must be at least 2");
  if (n > 64) throw InputError("dimension out of the supported range");
  PolynomialCertificate p;
  p.n = n;
  p.coeff.assign(2 * n + 1, 0);
  const long long N = n;
  p.coeff[0] -= N * N + 3 * N - 4;
  p.coeff[1] += 2 * N * (N + 2);
  p.coeff[2] -= N * (N + 1);
  p.coeff[n] -= 6;
  p.coeff[2 * n] += 2;
  return p;
}

CertificateReport certify_control_polynomial(int n, long grid) {
  if (grid < 16 || grid > 2'000'000)
    throw InputError("certificate grid out of range");
  const PolynomialCertificate pc = control_polynomial(n);
  const long G = grid;
  const long A = static_cast<long>(n) * n + 3 * n - 4;

  std::vector<mpz_class> h;
  for (long long c : pc.coeff) h.push_back(mpz_class(static_cast<long>(c)));
  const auto h1 = derivative(h);
  const auto h2 = derivative(h1);
  const auto h3 = derivative(h2);

  CertificateReport rep;
  rep.n = n;
  rep.grid = G;

  rep.triple_root_at_one = scaled_eval(h, 1, 1) == 0 &&
                           scaled_eval(h1, 1, 1) == 0 &&
                           scaled_eval(h2, 1, 1) == 0;

  // h(0) = -(n^2+3n-4); h'''(1) = sum k(k-1)(k-2) c_k = 2n(n-1)(5n+2)
  rep.endpoint_values =
      h[0] == mpz_class(-A) &&
      scaled_eval(h3, 1, 1) == mpz_class(2L * n * (n - 1) * (5L * n + 2));

  // coefficient-level identity for the third derivative
  {
    std::vector<mpz_class> want(h3.size(), 0);
    const long f = 2L * n * (n - 1);
    if (2 * n - 3 >= 0 && 2 * n - 3 < static_cast<int>(want.size()))
      want[2 * n - 3] += f * 4 * (2 * n - 1);
    if (n >= 3) want[n - 3] -= f * 3 * (n - 2);
    rep.d3_identity = (h3 == want);
  }

  const double scale = std::pow(static_cast<double>(G), 2 * n);
  double min_contact = std::numeric_limits<double>::infinity();
  double min_mono = std::numeric_limits<double>::infinity();
  bool nonpos = true, contact = true, mono = true;
  for (long j = 0; j <= G; ++j) {
    const mpz_class N_j = scaled_eval(h, j, G);          // G^2n h(j/G)
    const mpz_class Np_j = scaled_eval(h1, j, G);        // G^(2n-1) h'(j/G)
    if (N_j > 0) nonpos = false;
    const mpz_class slack_c =
        -N_j - A * ipow(G - j, 3) * ipow(G, 2 * static_cast<unsigned>(n) - 3);
    if (slack_c < 0) contact = false;
    const mpz_class slack_m = -Np_j * (G - j) - 3 * N_j;
    if (slack_m < 0) mono = false;
    min_contact = std::min(min_contact, slack_c.get_d() / scale);
    min_mono = std::min(min_mono, slack_m.get_d() / scale);
  }
  rep.grid_nonpositive = nonpos;
  rep.cubic_contact = contact;
  rep.ratio_monotone = mono;
  rep.min_contact_slack = min_contact;
  rep.min_monotone_slack = min_mono;

  // s(j) = 4(2n-1) j^n - 3(n-2) G^n carries the sign of h''' (up to the
  // positive factor 2n(n-1) z^(n-3)); it must cross once, at ztilde
  rep.ztilde =
      (n == 2) ? 0.0
               : std::pow(3.0 * (n - 2) / (4.0 * (2 * n - 1)), 1.0 / n);
  {
    long first_nonneg = -1;
    bool single = true;
    bool seen_nonneg = false;
    for (long j = 0; j <= G; ++j) {
      const mpz_class s =
          long(4 * (2L * n - 1)) * ipow(j, static_cast<unsigned>(n)) -
          long(3 * (n - 2L)) * ipow(G, static_cast<unsigned>(n));
      if (s >= 0) {
        if (!seen_nonneg) first_nonneg = j;
        seen_nonneg = true;
      } else if (seen_nonneg) {
        single = false;
      }
    }
    rep.sign_change_index = first_nonneg;
    const double crossing = static_cast<double>(first_nonneg) / G;
    rep.d3_sign_change =
        single && first_nonneg >= 0 &&
        std::abs(crossing - rep.ztilde) <= 1.0 / G + 1e-12;
  }

  rep.pass = rep.triple_root_at_one && rep.endpoint_values &&
             rep.d3_identity && rep.grid_nonpositive && rep.cubic_contact &&
             rep.ratio_monotone && rep.d3_sign_change;
  return rep;
}

}  // namespace makai::cert
