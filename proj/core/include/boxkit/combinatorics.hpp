#ifndef BOXKIT_COMBINATORICS_HPP
#define BOXKIT_COMBINATORICS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "boxkit/errors.hpp"

namespace boxkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Binomial coefficient with the convention C(a,b) = 0 for b < 0 or b > a.
// Negative a is rejected: no formula in this codebase produces one.
inline BigInt binom(long long a, long long b) {
    if (a < 0) throw ParamError("binom: negative upper index " + std::to_string(a));
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    BigInt r = 1;
    for (long long i = 1; i <= b; ++i) {
        r *= (a - b + i);
        r /= i;
    }
    return r;
}

inline long long binom_ll(long long a, long long b) {
    BigInt r = binom(a, b);
    if (r > std::numeric_limits<long long>::max())
        throw ParamError("binom_ll: value does not fit in 64 bits");
    return static_cast<long long>(r);
}

inline BigInt ceil_div(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ParamError("ceil_div: zero denominator");
    BigInt q = num / den;  // truncates toward zero
    if (num % den != 0 && ((num > 0) == (den > 0))) ++q;
    return q;
}

inline BigInt ceil_rational(const Rational& r) {
    return ceil_div(numerator(r), denominator(r));
}

// Advance a k-subset of {1..n} (sorted ascending) to its lexicographic
// successor; returns false from the last subset.
inline bool next_k_subset(std::vector<int>& s, int n) {
    int k = static_cast<int>(s.size());
    for (int i = k - 1; i >= 0; --i) {
        if (s[i] < n - (k - 1 - i)) {
            ++s[i];
            for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// All k-subsets of {1..n} in lexicographic order. This order defines vertex
// ids for Kneser graphs everywhere in the library.
inline std::vector<std::vector<int>> k_subsets_lex(int n, int k) {
    if (k < 0 || n < 0 || k > n) throw ParamError("k_subsets_lex: need 0 <= k <= n");
    std::vector<std::vector<int>> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i + 1;
    do {
        out.push_back(s);
    } while (next_k_subset(s, n));
    return out;
}

inline std::string subset_label(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    out += "}";
    return out;
}

}  // namespace boxkit

#endif
