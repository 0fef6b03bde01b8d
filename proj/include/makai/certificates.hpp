#pragma once

#include <cstdint>
#include <vector>

namespace makai::cert {

// coefficients (index = power of z) of the degree-2n control polynomial
//   h(z) = 2 z^(2n) - 6 z^n - n(n+1) z^2 + 2n(n+2) z - (n^2 + 3n - 4)
// h has a triple root at z = 1 and is <= 0 on [0,1]; the normalized ratio
// H = -h/(1-z)^3 runs from n^2+3n-4 at z = 0 up to 2n(n-1)(5n+2)/6 at z = 1.
struct PolynomialCertificate {
  int n = 0;
  std::vector<long long> coeff;
};

PolynomialCertificate control_polynomial(int n);

struct CertificateReport {
  int n = 0;
  long grid = 0;
  bool triple_root_at_one = false;   // h(1) = h'(1) = h''(1) = 0, exact
  bool endpoint_values = false;      // h(0) and h'''(1) match closed forms
  bool d3_identity = false;          // h''' = 2n(n-1)[4(2n-1)z^(2n-3)
                                     //              - 3(n-2)z^(n-3)]
  bool grid_nonpositive = false;     // h(j/G) <= 0 for all 0 <= j <= G
  bool cubic_contact = false;        // -h(j/G) >= (n^2+3n-4)(1-j/G)^3
  bool ratio_monotone = false;       // -h'(z)(1-z) - 3h(z) >= 0, i.e. H' >= 0
  bool d3_sign_change = false;       // h''' changes sign once, at ztilde
  double min_contact_slack = 0.0;    // scaled by G^(-2n)
  double min_monotone_slack = 0.0;   // scaled by G^(-2n)
  double ztilde = 0.0;               // (3(n-2)/(4(2n-1)))^(1/n)
  long sign_change_index = 0;
  bool pass = false;
};

// every inequality below is evaluated in exact integer arithmetic at the
// rationals j/G, cleared of denominators
CertificateReport certify_control_polynomial(int n, long grid = 10000);

}  // namespace makai::cert
