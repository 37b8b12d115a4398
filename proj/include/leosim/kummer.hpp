// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace leosim {

// Confluent hypergeometric 1F1(m; 1; z) for m > 0, z >= 0 -- the only case the
// shadowed-Rician densities need. Integer m collapses to a degree m-1
// polynomial times e^z; non-integer m uses the ascending series up to z = 512
// and the large-argument asymptotic expansion beyond. Throws std::domain_error
// outside the supported domain.
double kummer_1f1(double m, double z);

// log of the above; stays finite where the direct value overflows, which is
// what the density evaluations in the far tail rely on.
double log_kummer_1f1(double m, double z);

}  // namespace leosim
