#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latmass {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Library-level error for violated preconditions on mathematical input
// (degenerate lattice, indefinite form, invalid Lie type, ...).
class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

// floor(sqrt(n)) for n >= 0.
Int isqrt_floor(const Int& n);

// floor(a/b) for b != 0 (division rounding toward -infinity).
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

// v_p(n) for n != 0.
int valuation(Int n, const Int& p);

bool is_prime(const Int& n);
Int next_prime(Int n);

// Prime factorization by trial division; returns (prime, exponent) pairs in
// increasing prime order. Intended for the smooth determinants that show up
// in genus computations.
std::vector<std::pair<Int, int>> factorize(Int n);

// Kronecker symbol (a|n), the usual extension of the Jacobi symbol.
int kronecker(Int a, Int n);

// Fundamental discriminant d0 with D = d0 * f^2, for D != 0 congruent to
// 0 or 1 mod 4. d0 = 1 when D is a perfect square.
Int fundamental_discriminant(const Int& D);

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

// Bernoulli number B_k with the B_1 = -1/2 convention.
Rat bernoulli(unsigned k);

// Bernoulli polynomial B_k(x).
Rat bernoulli_poly(unsigned k, const Rat& x);

// Generalized Bernoulli number B_{k,chi} for the quadratic character
// chi = kronecker(d0|.) attached to a fundamental discriminant d0.
Rat bernoulli_chi(unsigned k, const Int& d0);

}  // namespace latmass
