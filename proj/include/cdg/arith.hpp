#ifndef CDG_ARITH_HPP
#define CDG_ARITH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cdg::arith {

// Exact factorization of a 64-bit integer, prime factors ascending.
struct Factorization {
  std::uint64_t value = 1;
  std::vector<std::pair<std::uint64_t, int>> factors;  // (prime, exponent)
};

/// Deterministic primality test for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Factorize n >= 1. Trial division for small factors, then Pollard rho with
/// deterministic Miller-Rabin on the cofactors. Throws std::invalid_argument
/// for n == 0.
Factorization factorize(std::uint64_t n);

/// Distinct prime divisors of n, ascending. pi(1) is empty; n == 0 is an
/// error because "the primes dividing 0" is not a meaningful set here.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// If n = p^e for a prime p and e >= 1, returns (p, e); otherwise nullopt.
/// n == 1 yields nullopt.
std::optional<std::pair<std::uint64_t, int>> is_prime_power(std::uint64_t n);

// One maximal-subgroup index of a simple group of Lie type Psl2(2^f),
// kept in the exact form 2^two_exponent * odd_part. The composed value can
// exceed 64 bits for large f, so checks work on the split form and rendering
// goes through 128-bit arithmetic.
struct Psl2Index {
  int two_exponent = 0;
  std::uint64_t odd_part = 1;  // always odd, always >= 1

  bool fits_uint64() const;
  std::uint64_t value_u64() const;  // throws std::overflow_error if too wide
  bool is_prime_power_value() const;
  std::string to_string() const;  // exact decimal digits
  bool divides(int f) const;      // divides 2^f (2^{2f} - 1)?
};

// The indices of the maximal subgroups of Psl2(2^f): the two Borel-flavoured
// dihedral normalizer indices 2^{f-1}(2^f +/- 1), the torus index 2^f + 1,
// and one subfield-subgroup index per prime n dividing f (with b = f/n).
struct MaximalIndexSet {
  int f = 0;
  std::vector<Psl2Index> indices;
};

/// Maximal-subgroup indices for Psl2(2^f). Requires 2 <= f <= 31.
MaximalIndexSet psl2_even_maximal_indices(int f);

struct PrimePowerScan {
  bool none_is_prime_power = false;
  std::optional<Psl2Index> witness;  // set when the scan fails
};

/// True iff no entry of psl2_even_maximal_indices(f) is a prime power.
PrimePowerScan no_prime_power_index(int f);

/// For b | f with f/b >= 3 prime: is (2^{2f}-1)/(2^{2b}-1) a prime power?
/// Returns true exactly when the ratio is a prime power.
bool ratio_prime_power_check(int f, int b);

}  // namespace cdg::arith

#endif  // CDG_ARITH_HPP
