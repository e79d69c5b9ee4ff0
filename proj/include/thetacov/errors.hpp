#pragma once

#include <stdexcept>
#include <string>

namespace thetacov {

// A ramification profile with an even part, a part < 1, or otherwise not a
// partition. Maps to CLI exit code 2.
struct InvalidRamification : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Requested computation exceeds a documented size bound. Exit code 3.
struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element handed to canonical_lift is not conjugate to a pure odd-cycle
// permutation, so no distinguished preimage exists.
struct NotCanonicallyLiftable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The supplied handle and branch lifts do not satisfy the surface relation
// up to a central sign, so no epsilon power is defined.
struct RelationViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Interpolation against the supersymmetric power sums failed: the sampled
// values are inconsistent with any polynomial of the admitted degree.
struct PolynomialityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No exact quasimodular representation at the requested weight. Carries the
// first q-power whose coefficient cannot be matched. Exit code 4.
struct NotQuasimodular : std::runtime_error {
  long index;
  explicit NotQuasimodular(long i)
      : std::runtime_error("no quasimodular fit: first failing coefficient at q^" +
                           std::to_string(i)),
        index(i) {}
};

} // namespace thetacov
