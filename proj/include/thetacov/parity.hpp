#pragma once

#include "thetacov/covers.hpp"
#include "thetacov/sergeev.hpp"

namespace thetacov {

// Lift of a monodromy tuple to the hyperoctahedral group: sign vectors on
// the handle pair are free, branch elements must stay conjugate to pure,
// and the surface relation [A,B] = D_1 ... D_r must hold on the nose.
struct BLift {
  SignedPerm A, B;
  std::vector<SignedPerm> D;
};

struct ComponentParity {
  int d_c = 0;
  int genus = 0;
  long long lift_count = 0;
  long long q_count[2] = {0, 0};  // histogram of the quadratic form
  long long arf_sum = 0;          // sum of (-1)^q, always +-2^{g + d_c - 1}
  int parity = 0;                 // 0 if the Arf sum is positive
};

struct ParityReport {
  std::vector<ComponentParity> comps;
  int parity = 0;  // sum of component parities mod 2
};

// Visit every B-lift of the tuple in a fixed order; the last branch lift is
// solved from the relation and filtered by the pure-class sign condition.
// Returns the number of lifts.
long long enumerate_b_lifts(const MonodromyTuple& t,
                            const std::function<void(const BLift&)>& visit,
                            int max_d = 8);

// The theta-characteristic quadratic form evaluated on one lift: the
// central discrepancy between [A^, B^] and the product of canonical branch
// lifts, plus 1 unless both handle lifts lie in the even subgroup B0.
int q_of_lift(const BLift& psi);

// Componentwise Arf invariants assembled into the parity of the cover.
ParityReport parity_of_cover(const MonodromyTuple& t);

struct ParityMasses {
  long long tuples = 0;
  Rational even, odd, signed_sum;
};

// Masses of even and odd covers and their difference, automorphism
// weighted. Enumerates handle representatives per conjugacy class only;
// parity is a class function of the tuple.
ParityMasses parity_masses(const RamificationData& M, const EnumOptions& opt = {});

// sum over covers of (-1)^{p(f)} / |Aut|, the quantity the character sum
// must reproduce degree by degree.
Rational signed_mass(const RamificationData& M, const EnumOptions& opt = {});

// (-1)^{p} of a single tuple recovered from four group-averaged lift
// counts: all lifts, even lifts, and each weighted by 4 when the epsilon
// power vanishes, normalized by the orders of B(d), B0, and the Clifford
// extensions. Must come out +-1.
Rational signed_mass_via_alternating_sum(const MonodromyTuple& t);

} // namespace thetacov
