#pragma once

// Exact integer and rational arithmetic for leading-digit work: factorization,
// squarefree tests, the canonical form a = (r/s) * b^k with 1 < r/s < b, and
// validation of admissible (a, b) pairs.
//
// Most routines are templates over the integer type so that parameter sweeps
// can run on machine words; the default everywhere is the arbitrary-precision
// Natural.  Fixed-width instantiations do not check for overflow.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include "ldc/error.hpp"

namespace ldc {

using Natural = boost::multiprecision::cpp_int;

template <class T>
concept exact_integer = std::unsigned_integral<T> || std::same_as<T, Natural>;

namespace detail {

template <exact_integer Int>
Int gcd(const Int& a, const Int& b) {
  if constexpr (std::same_as<Int, Natural>) {
    return boost::multiprecision::gcd(a, b);
  } else {
    return std::gcd(a, b);
  }
}

// Compares x*y with u*v without overflowing fixed-width operands.
template <exact_integer Int>
std::strong_ordering mul_compare(const Int& x, const Int& y, const Int& u, const Int& v) {
  if constexpr (std::same_as<Int, Natural>) {
    const Natural lhs = x * y;
    const Natural rhs = u * v;
    return lhs.compare(rhs) <=> 0;
  } else {
    static_assert(sizeof(Int) <= 8);
    using wide = unsigned __int128;
    return static_cast<wide>(x) * y <=> static_cast<wide>(u) * v;
  }
}

template <exact_integer Int>
Int ipow(Int base, std::uint64_t exp) {
  Int result = 1;
  while (exp != 0) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp != 0) base *= base;
  }
  return result;
}

inline bool fits_u64(const Natural& n) {
  return n >= 0 && boost::multiprecision::msb(n + 1) < 64;
}

template <exact_integer Int>
bool is_positive(const Int& n) {
  return n > 0;
}

template <exact_integer Int>
std::string to_decimal(const Int& n) {
  if constexpr (std::same_as<Int, Natural>) {
    return n.str();
  } else {
    return std::to_string(n);
  }
}

}  // namespace detail

/// Positive rational kept in lowest terms; equality is structural.
template <exact_integer Int = Natural>
class Rational {
 public:
  Rational(Int num, Int den = Int{1}) : num_(std::move(num)), den_(std::move(den)) {
    if (!detail::is_positive(num_) || !detail::is_positive(den_)) {
      throw error(errc::invalid_argument, "rational must have positive numerator and denominator");
    }
    const Int g = detail::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  const Int& num() const noexcept { return num_; }
  const Int& den() const noexcept { return den_; }

  bool is_integer() const { return den_ == 1; }

  friend bool operator==(const Rational&, const Rational&) = default;

  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    return detail::mul_compare(x.num_, y.den_, y.num_, x.den_);
  }

  friend Rational operator*(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.num_, x.den_ * y.den_);
  }

  friend Rational operator/(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.den_, x.den_ * y.num_);
  }

  Rational reciprocal() const { return Rational(den_, num_); }

  std::string str() const {
    std::string out = detail::to_decimal(num_);
    if (den_ != 1) out += "/" + detail::to_decimal(den_);
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

 private:
  Int num_;
  Int den_;
};

/// Parses "INT" or "INT/INT" (decimal, no sign, no whitespace).
inline Rational<Natural> parse_rational(std::string_view text) {
  const auto bad = [&] {
    return error(errc::invalid_argument, "expected INT or INT/INT, got '" + std::string(text) + "'");
  };
  const auto parse_int = [&](std::string_view part) {
    if (part.empty() || part.size() > 4096) throw bad();
    for (char ch : part) {
      if (ch < '0' || ch > '9') throw bad();
    }
    return Natural(std::string(part));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    const Natural n = parse_int(text);
    if (n == 0) throw bad();
    return Rational<Natural>(n);
  }
  const Natural num = parse_int(text.substr(0, slash));
  const Natural den = parse_int(text.substr(slash + 1));
  if (num == 0 || den == 0) throw bad();
  return Rational<Natural>(num, den);
}

/// Prime -> exponent, primes ascending.
template <exact_integer Int = Natural>
using Factorization = std::map<Int, unsigned>;

/// Trial division up to sqrt(n).
template <exact_integer Int>
Factorization<Int> factorize(Int n) {
  if (!detail::is_positive(n)) throw error(errc::invalid_argument, "factorize requires n >= 1");
  Factorization<Int> out;
  const auto strip = [&](const Int& p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e != 0) out.emplace(p, e);
  };
  strip(Int{2});
  for (Int p = 3; p * p <= n; p += 2) strip(p);
  if (n > 1) out.emplace(n, 1U);
  return out;
}

template <exact_integer Int>
bool is_squarefree(const Int& n) {
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return false;
  }
  return true;
}

/// a = (r/s) * b^k with gcd(r, s) = 1 and 1 < r/s < b.
template <exact_integer Int = Natural>
struct CanonicalForm {
  std::int64_t k = 0;
  Int r{};
  Int s{};

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Finds k by multiplying or dividing by b until the value lands in [1, b).
/// Throws integral_power_of_base when it lands exactly on 1 (a = b^k, a = 1 included).
template <exact_integer Int>
CanonicalForm<Int> canonicalize(const Rational<Int>& a, const Int& b) {
  if (b < 3) throw error(errc::invalid_argument, "base must be at least 3");
  Int num = a.num();
  Int den = a.den();
  std::int64_t k = 0;
  while (num < den) {
    num *= b;
    --k;
  }
  while (detail::mul_compare(den, b, num, Int{1}) != std::strong_ordering::greater) {
    den *= b;
    ++k;
  }
  const Int g = detail::gcd(num, den);
  num /= g;
  den /= g;
  if (num == den) {
    throw error(errc::integral_power_of_base,
                a.str() + " is an integral power of " + detail::to_decimal(b));
  }
  return CanonicalForm<Int>{k, std::move(num), std::move(den)};
}

/// True iff a^q = b^p for some integers p and q >= 1.  Only b is factored;
/// a is tested by dividing out b's primes.
template <exact_integer Int>
bool is_rational_power_of(const Rational<Int>& a, const Int& b) {
  if (b < 2) throw error(errc::invalid_argument, "base must be at least 2");
  if (a.num() == 1 && a.den() == 1) return true;
  if (a.num() != 1 && a.den() != 1) return false;
  Int rest = a.num() == 1 ? a.den() : a.num();

  const Factorization<Int> fb = factorize(b);
  // exponent of each prime of b in rest; proportionality f_p / e_p constant
  unsigned ref_f = 0;
  unsigned ref_e = 0;
  for (const auto& [p, e] : fb) {
    unsigned f = 0;
    while (rest % p == 0) {
      rest /= p;
      ++f;
    }
    if (f == 0) return false;
    if (ref_e == 0) {
      ref_f = f;
      ref_e = e;
    } else if (static_cast<std::uint64_t>(f) * ref_e != static_cast<std::uint64_t>(ref_f) * e) {
      return false;
    }
  }
  return rest == 1;
}

/// A base b >= 3 together with a rational a that is not an integral power of
/// it.  This is all that digit generation needs; b need not be squarefree.
struct PowerSequence {
  Rational<Natural> a;
  Natural b;
  CanonicalForm<Natural> canon;
};

inline PowerSequence make_power_sequence(const Rational<Natural>& a, const Natural& b) {
  return PowerSequence{a, b, canonicalize(a, b)};
}

/// Validated pair: b squarefree and >= 5, a rational and not an integral power of b.
class AdmissiblePair {
 public:
  const Rational<Natural>& a() const noexcept { return seq_.a; }
  const Natural& b() const noexcept { return seq_.b; }
  const CanonicalForm<Natural>& canon() const noexcept { return seq_.canon; }
  const Factorization<Natural>& b_factorization() const noexcept { return fb_; }
  const PowerSequence& sequence() const noexcept { return seq_; }

  friend AdmissiblePair check_admissible(const Rational<Natural>& a, const Natural& b);

 private:
  AdmissiblePair(PowerSequence seq, Factorization<Natural> fb)
      : seq_(std::move(seq)), fb_(std::move(fb)) {}

  PowerSequence seq_;
  Factorization<Natural> fb_;
};

inline void require_squarefree_base(const Natural& b) {
  if (b < 5) throw error(errc::base_too_small, "base " + b.str() + " is below 5");
  if (!is_squarefree(b)) throw error(errc::base_not_squarefree, "base " + b.str() + " is not squarefree");
}

inline AdmissiblePair check_admissible(const Rational<Natural>& a, const Natural& b) {
  require_squarefree_base(b);
  return AdmissiblePair(make_power_sequence(a, b), factorize(b));
}

inline AdmissiblePair check_admissible(std::uint64_t a, std::uint64_t b) {
  return check_admissible(Rational<Natural>(Natural(a)), Natural(b));
}

}  // namespace ldc
