#include "resq/integer.hpp"

#include "resq/errors.hpp"

#include <array>

namespace resq {

namespace {

using u128 = unsigned __int128;

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
    std::uint64_t x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exponent != 0) {
        if (exponent & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exponent >>= 1U;
    }
    return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q) {
    a %= q;
    if (a == 0) throw DomainError("zero has no inverse modulo " + std::to_string(q));
    return pow_mod(a, q - 2, q);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    static constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t p : kBases) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : kBases) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

void require_prime(std::uint64_t q, const char* what) {
    if (!is_prime(q)) {
        throw DomainError(std::string(what) + " " + std::to_string(q) + " is not prime");
    }
}

void require_odd_prime(std::uint64_t q, const char* what) {
    if (q == 2 || !is_prime(q)) {
        throw DomainError(std::string(what) + " " + std::to_string(q) + " is not an odd prime");
    }
}

Valuation valuation(const Integer& n, std::uint64_t q) {
    require_prime(q);
    if (n == 0) return Valuation::infinite();
    Integer rest;
    Integer prime(static_cast<unsigned long>(q));
    mp_bitcnt_t e = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t());
    return Valuation(e);
}

std::uint64_t residue(const Integer& n, std::uint64_t m) {
    Integer modulus(static_cast<unsigned long>(m));
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), modulus.get_mpz_t());
    return r.get_ui();
}

Integer pow(const Integer& base, std::uint64_t exponent) {
    Integer result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

Rational pow(const Rational& base, std::uint64_t exponent) {
    Rational result(pow(Integer(base.get_num()), exponent), pow(Integer(base.get_den()), exponent));
    result.canonicalize();
    return result;
}

Integer mod_floor(const Integer& n, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace resq
