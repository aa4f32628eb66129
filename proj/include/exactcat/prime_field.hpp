#pragma once

#include <string>

#include "exactcat/errors.hpp"

namespace exactcat {

/// The field F_p for a prime 2 <= p <= 97.  Elements are canonical
/// representatives in [0, p); every operation returns a canonical value.
class PrimeField {
public:
    explicit PrimeField(int p) : p_(p) {
        if (p < 2 || p > 97 || !is_prime(p))
            throw invalid_input("PrimeField: p must be a prime in [2, 97], got " +
                                std::to_string(p));
    }

    int order() const { return p_; }

    /// Canonical representative of x mod p (handles negatives).
    int reduce(long long x) const {
        long long r = x % p_;
        return static_cast<int>(r < 0 ? r + p_ : r);
    }

    int add(int a, int b) const { return (a + b) % p_; }
    int sub(int a, int b) const { return reduce(a - b); }
    int mul(int a, int b) const { return (a * b) % p_; }
    int neg(int a) const { return a == 0 ? 0 : p_ - a; }

    /// Multiplicative inverse; a must be nonzero mod p.
    int inv(int a) const {
        a = reduce(a);
        if (a == 0) throw invalid_input("PrimeField::inv: zero is not invertible");
        // Fermat: a^(p-2).  p <= 97 keeps everything in int range.
        int result = 1, base = a, e = p_ - 2;
        while (e > 0) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    bool operator==(const PrimeField&) const = default;

private:
    static bool is_prime(int n) {
        for (int d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return n >= 2;
    }

    int p_;
};

}  // namespace exactcat
