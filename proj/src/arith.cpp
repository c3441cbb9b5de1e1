#include "cdg/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cdg::arith {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// One strong-pseudoprime round. n odd, n - 1 = d * 2^s.
bool sprp(u64 n, u64 a, u64 d, int s) {
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

constexpr u64 kTrialBound = 1000000;  // trial division handles factors below this

// Deterministic Pollard-Brent rho. Only called on odd composites with no
// factor below kTrialBound; cycles over fixed increments, so the output is
// reproducible run to run.
u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    u64 saved_x = 2;
    int power = 1, lam = 1;
    auto step = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      if (lam == power) {
        saved_x = y;
        power *= 2;
        lam = 0;
      }
      // Batch gcd over 64 steps cuts the gcd count without hurting determinism.
      u64 q = 1;
      int batch = std::min(64, power - lam);
      u64 y0 = y;
      for (int i = 0; i < batch; ++i) {
        y = step(y);
        u64 diff = saved_x > y ? saved_x - y : y - saved_x;
        if (diff == 0) diff = 1;
        q = mulmod(q, diff, n);
      }
      lam += batch;
      d = std::gcd(q, n);
      if (d == n) {
        // A factor was crossed inside the batch; replay one step at a time.
        y = y0;
        d = 1;
        for (int i = 0; i < batch && d == 1; ++i) {
          y = step(y);
          u64 diff = saved_x > y ? saved_x - y : y - saved_x;
          if (diff == 0) diff = 1;
          d = std::gcd(diff, n);
        }
        if (d == 1 || d == n) break;  // retry with the next c
      }
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<u64> out;
    for (u64 p = 2; p <= kTrialBound; ++p) {
      if (composite[static_cast<std::size_t>(p)]) continue;
      out.push_back(p);
      for (u64 m = p * p; m <= kTrialBound; m += p) {
        composite[static_cast<std::size_t>(m)] = true;
      }
    }
    return out;
  }();
  return primes;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases decide primality for every n < 3.3 * 10^24.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!sprp(n, a, d, s)) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization out;
  out.value = n;
  std::vector<u64> primes;
  if (n > 1 && !is_prime(n)) {
    for (u64 p : small_primes()) {
      if (p * p > n) break;
      while (n % p == 0) {
        primes.push_back(p);
        n /= p;
      }
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  for (u64 p : primes) {
    if (!out.factors.empty() && out.factors.back().first == p) {
      ++out.factors.back().second;
    } else {
      out.factors.emplace_back(p, 1);
    }
  }
  return out;
}

std::vector<u64> prime_divisors(u64 n) {
  if (n == 0) throw std::invalid_argument("prime_divisors: n must be positive");
  std::vector<u64> out;
  for (const auto& [p, e] : factorize(n).factors) out.push_back(p);
  return out;
}

std::optional<std::pair<u64, int>> is_prime_power(u64 n) {
  if (n < 2) return std::nullopt;
  Factorization f = factorize(n);
  if (f.factors.size() != 1) return std::nullopt;
  return f.factors.front();
}

bool Psl2Index::fits_uint64() const {
  if (two_exponent >= 64) return false;
  return odd_part <= (~0ull >> two_exponent);
}

std::uint64_t Psl2Index::value_u64() const {
  if (!fits_uint64()) throw std::overflow_error("Psl2Index::value_u64: index exceeds 64 bits");
  return odd_part << two_exponent;
}

bool Psl2Index::is_prime_power_value() const {
  if (two_exponent == 0) return is_prime_power(odd_part).has_value();
  // 2^e with e >= 1 is a prime power only when the odd part is trivial.
  return odd_part == 1;
}

std::string Psl2Index::to_string() const {
  u128 v = odd_part;
  v <<= two_exponent;
  if (v == 0) return "0";
  std::string digits;
  while (v > 0) {
    digits.push_back(char('0' + int(v % 10)));
    v /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

bool Psl2Index::divides(int f) const {
  if (two_exponent > f) return false;
  u64 group_odd = (f < 32) ? ((1ull << (2 * f)) - 1) : ~0ull;  // 2^{2f} - 1, f <= 31
  return group_odd % odd_part == 0;
}

MaximalIndexSet psl2_even_maximal_indices(int f) {
  if (f < 2 || f > 31) throw std::invalid_argument("psl2_even_maximal_indices: need 2 <= f <= 31");
  MaximalIndexSet out;
  out.f = f;
  u64 qf = 1ull << f;
  out.indices.push_back({f - 1, qf + 1});
  out.indices.push_back({f - 1, qf - 1});
  out.indices.push_back({0, qf + 1});
  // One subfield entry per prime divisor n of f, smallest n first.
  for (u64 n : prime_divisors(static_cast<u64>(f))) {
    int b = f / static_cast<int>(n);
    u64 ratio = ((1ull << (2 * f)) - 1) / ((1ull << (2 * b)) - 1);
    out.indices.push_back({f - b, ratio});
  }
  return out;
}

PrimePowerScan no_prime_power_index(int f) {
  PrimePowerScan scan;
  for (const Psl2Index& ix : psl2_even_maximal_indices(f).indices) {
    if (ix.is_prime_power_value()) {
      scan.none_is_prime_power = false;
      scan.witness = ix;
      return scan;
    }
  }
  scan.none_is_prime_power = true;
  return scan;
}

bool ratio_prime_power_check(int f, int b) {
  if (b < 1 || f < 3 || f > 31 || f % b != 0)
    throw std::invalid_argument("ratio_prime_power_check: need b | f with 2 <= f <= 31");
  int n = f / b;
  if (n < 3 || !is_prime(static_cast<u64>(n)))
    throw std::invalid_argument("ratio_prime_power_check: f/b must be a prime >= 3");
  u64 ratio = ((1ull << (2 * f)) - 1) / ((1ull << (2 * b)) - 1);
  return is_prime_power(ratio).has_value();
}

}  // namespace cdg::arith
