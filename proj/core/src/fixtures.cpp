#include "ecdlp/fixtures.hpp"

namespace ecdlp {

GroupSpec small_fixture() {
  Curve c(PrimeModulus(17), 2, 2);
  return GroupSpec(c, c.point(5, 1), 19);
}

GroupSpec medium_fixture() {
  Curve c(PrimeModulus(911), 1, 113);
  return GroupSpec(c, c.point(0, 32), 907);
}

}  // namespace ecdlp
