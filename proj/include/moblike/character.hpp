#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "moblike/errors.hpp"
#include "moblike/factor.hpp"

namespace moblike {

// A real non-principal Dirichlet character mod q, stored as its period table.
// Immutable after construction.
class RealCharacter {
 public:
  // Validates the table: zero exactly off the units, completely multiplicative
  // on units, takes the value -1 somewhere.
  RealCharacter(std::int64_t modulus, std::vector<std::int8_t> values)
      : q_(modulus), values_(std::move(values)) {
    validate();
  }

  std::int64_t modulus() const { return q_; }
  std::span<const std::int8_t> table() const { return values_; }

  int operator()(std::int64_t n) const {
    auto r = n % q_;
    if (r < 0) r += q_;
    return values_[static_cast<std::size_t>(r)];
  }

  friend bool operator==(const RealCharacter& a, const RealCharacter& b) {
    return a.q_ == b.q_ && a.values_ == b.values_;
  }

 private:
  void validate() const {
    if (q_ < 3) throw range_error("RealCharacter: modulus must be >= 3");
    if (static_cast<std::int64_t>(values_.size()) != q_) {
      throw range_error("RealCharacter: table length must equal modulus");
    }
    bool has_minus = false;
    for (std::int64_t a = 0; a < q_; ++a) {
      const int v = values_[a];
      const bool unit = std::gcd(a, q_) == 1;
      if (unit != (v != 0) || v < -1 || v > 1) {
        throw range_error("RealCharacter: value table does not match units mod q");
      }
      has_minus |= v == -1;
    }
    if (!has_minus) throw range_error("RealCharacter: principal character");
    // the full multiplicativity check is O(q^2)
    if (q_ <= 512) {
      for (std::int64_t a = 1; a < q_; ++a) {
        if (values_[a] == 0) continue;
        for (std::int64_t b = a; b < q_; ++b) {
          if (values_[b] == 0) continue;
          if (values_[a * b % q_] != values_[a] * values_[b]) {
            throw range_error("RealCharacter: table is not multiplicative");
          }
        }
      }
    }
  }

  std::int64_t q_;
  std::vector<std::int8_t> values_;
};

namespace detail {

inline std::int64_t find_generator(std::int64_t m, std::int64_t phi) {
  const auto ps = prime_divisors(phi);
  for (std::int64_t g = 2; g < m; ++g) {
    if (std::gcd(g, m) != 1) continue;
    bool ok = true;
    for (auto r : ps) {
      if (pow_mod(g, phi / r, m) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;  // m == 2: trivial group
}

// Parity of the discrete log base g of each residue mod m; -1 off <g>.
inline std::vector<std::int8_t> parity_table(std::int64_t m, std::int64_t g, std::int64_t order) {
  std::vector<std::int8_t> t(static_cast<std::size_t>(m), -1);
  std::int64_t x = 1;
  for (std::int64_t k = 0; k < order; ++k) {
    t[x] = static_cast<std::int8_t>(k & 1);
    x = x * g % m;
  }
  return t;
}

// Sign-valued "coordinates" of a unit: the real characters of (Z/qZ)^* are
// exactly the products of subsets of these basic sign characters.
inline std::vector<std::vector<std::int8_t>> basic_sign_characters(std::int64_t q) {
  std::vector<std::vector<std::int8_t>> basics;
  for (const auto& [p, e] : factorize(q).factors) {
    std::int64_t pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    std::vector<std::int8_t> sign(static_cast<std::size_t>(q), 0);
    if (p != 2) {
      const std::int64_t phi = pe / p * (p - 1);
      const auto g = find_generator(pe, phi);
      const auto par = parity_table(pe, g, phi);
      for (std::int64_t a = 0; a < q; ++a) {
        if (std::gcd(a, q) == 1) sign[a] = par[a % pe] ? -1 : 1;
      }
      basics.push_back(std::move(sign));
    } else if (e == 2) {
      for (std::int64_t a = 0; a < q; ++a) {
        if (std::gcd(a, q) == 1) sign[a] = (a % 4 == 3) ? -1 : 1;
      }
      basics.push_back(std::move(sign));
    } else if (e >= 3) {
      // (Z/2^e)^* = <-1> x <5>
      const auto par5 = parity_table(pe, 5, pe / 4);
      std::vector<std::int8_t> sign5(static_cast<std::size_t>(q), 0);
      for (std::int64_t a = 0; a < q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        const std::int64_t r = a % pe;
        const bool minus = r % 4 == 3;
        sign[a] = minus ? -1 : 1;
        sign5[a] = par5[minus ? pe - r : r] ? -1 : 1;
      }
      basics.push_back(std::move(sign));
      basics.push_back(std::move(sign5));
    }
  }
  return basics;
}

}  // namespace detail

// All real non-principal characters mod q, sorted lexicographically by value
// table. Empty for q < 3.
inline std::vector<RealCharacter> enumerate_real_characters(std::int64_t q) {
  std::vector<RealCharacter> out;
  if (q < 3) return out;
  const auto basics = detail::basic_sign_characters(q);
  const std::size_t r = basics.size();
  std::vector<std::vector<std::int8_t>> tables;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
    std::vector<std::int8_t> t(static_cast<std::size_t>(q), 0);
    for (std::int64_t a = 0; a < q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      int v = 1;
      for (std::size_t j = 0; j < r; ++j) {
        if (mask >> j & 1) v *= basics[j][a];
      }
      t[a] = static_cast<std::int8_t>(v);
    }
    tables.push_back(std::move(t));
  }
  std::sort(tables.begin(), tables.end());
  tables.erase(std::unique(tables.begin(), tables.end()), tables.end());
  for (auto& t : tables) out.emplace_back(q, std::move(t));
  return out;
}

// Convenience: the character with the given index in enumeration order.
inline RealCharacter real_character(std::int64_t q, std::size_t index) {
  auto all = enumerate_real_characters(q);
  if (index >= all.size()) {
    throw range_error("no real non-principal character mod " + std::to_string(q) +
                      " with index " + std::to_string(index));
  }
  return all[index];
}

}  // namespace moblike
