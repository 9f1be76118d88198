// Builds R(W_6) and prints the differential of W_6 and of R(W_6), together
// with a differential set of R(W_6) drawn from the original vertices.

#include <iostream>

#include "gdiff/gdiff.hpp"

int main() {
  using namespace gdiff;
  const Graph wheel = generate(FamilySpec::wheel(6));
  const RGraph rg = build_r(wheel);

  const DifferentialResult d = differential_exact(wheel);
  const DifferentialResult dr = differential_of_r(rg);

  std::cout << "W_6: n=" << wheel.order() << " m=" << wheel.size() << " d=" << d.value << " witness "
            << d.witness.to_string() << "\n";
  std::cout << "R(W_6): n=" << rg.total.order() << " m=" << rg.total.size() << " d=" << dr.value << " witness "
            << dr.witness.to_string() << " (" << dr.search_space_size << " nodes)\n";
  std::cout << "tau(W_6)=" << vertex_cover_number(wheel).value
            << " gamma(R(W_6))=" << domination_number(rg.total).gamma << "\n";
}
