#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperconv {

// Elementary abelian group Z_p^n for p in {2, 3}. Elements are encoded as
// integers 0 .. p^n-1 read as base-p digit vectors; digit j (least
// significant first) is coordinate x_{j+1}, and 0 encodes the zero vector.
struct group {
  int prime;
  int rank;

  group(int p, int n) : prime(p), rank(n) {
    if (p != 2 && p != 3)
      throw std::domain_error("group: only primes 2 and 3 are supported");
    if (n < 1 || n > 20) throw std::domain_error("group: rank out of range");
  }

  long long size() const {
    long long s = 1;
    for (int i = 0; i < rank; ++i) s *= prime;
    return s;
  }

  long long add(long long a, long long b) const {
    if (prime == 2) return a ^ b;
    long long r = 0, pw = 1;
    for (int i = 0; i < rank; ++i) {
      r += ((a % 3 + b % 3) % 3) * pw;
      a /= 3;
      b /= 3;
      pw *= 3;
    }
    return r;
  }

  long long neg(long long a) const {
    if (prime == 2) return a;
    long long r = 0, pw = 1;
    for (int i = 0; i < rank; ++i) {
      r += ((3 - a % 3) % 3) * pw;
      a /= 3;
      pw *= 3;
    }
    return r;
  }

  long long sub(long long a, long long b) const { return add(a, neg(b)); }

  bool operator==(const group& o) const {
    return prime == o.prime && rank == o.rank;
  }
  bool operator!=(const group& o) const { return !(*this == o); }
};

// Standard inner product on F_2^n (parity of the bitwise AND).
inline int dot2(long long a, long long b) {
  return __builtin_parityll((unsigned long long)(a & b));
}

// Vector <-> binary-string conversion; character j of the string is
// coordinate x_{j+1}, matching the encoding's digit order.
inline std::string format_vec2(long long v, int n) {
  std::string s(n, '0');
  for (int j = 0; j < n; ++j)
    if ((v >> j) & 1) s[j] = '1';
  return s;
}

inline long long parse_vec2(const std::string& s, int n) {
  if ((int)s.size() != n)
    throw std::invalid_argument("vector string '" + s + "' is not of length " +
                                std::to_string(n));
  long long v = 0;
  for (int j = 0; j < n; ++j) {
    if (s[j] == '1') v |= 1LL << j;
    else if (s[j] != '0')
      throw std::invalid_argument("vector string '" + s +
                                  "' contains a character other than 0/1");
  }
  return v;
}

}  // namespace hyperconv
