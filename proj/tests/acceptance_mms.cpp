#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hweno/harness.hpp"
#include "support/criteria.hpp"

using namespace hweno;

TEST_CASE("criterion 6: manufactured-solution residual orders") {
  const std::vector<int> ns{128, 192, 256, 384};
  ConvergenceReport w5 = mms_orders(Scheme::weno5, ns);
  ConvergenceReport f6 = mms_orders(Scheme::fd6ko, ns);
  bool pass = w5.order >= 4.5 && f6.order >= 5.5;
  criterion_line(6, pass,
                 "first-order-system residual under rho-refinement "
                 "{128,192,256,384}x8: weno5 order %.3f (gate >= 4.5), fd6 "
                 "order %.3f (gate >= 5.5)",
                 w5.order, f6.order);
  CHECK(w5.order >= 4.5);
  CHECK(f6.order >= 5.5);
}
