#include "qnil/conic.hpp"

#include "qnil/algebra.hpp"
#include "qnil/errors.hpp"

namespace qnil::local {

namespace {

BigInt mod_positive(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

// Tonelli-Shanks for an odd prime p and a quadratic residue a.
BigInt sqrt_mod_prime(const BigInt& a_in, const BigInt& p) {
    BigInt a = mod_positive(a_in, p);
    if (a == 0 || p == 2) return a;
    BigInt q = p - 1;
    unsigned long s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    BigInt z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    BigInt c, r, t, b;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    BigInt e = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        BigInt tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        b = c;
        for (unsigned long k = 0; k + i + 1 < m; ++k) b = b * b % p;
        r = r * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return r;
}

BigInt gcd3(const BigInt& x, const BigInt& y, const BigInt& z) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    return g;
}

// Squarefree core and rational root of r != 0: r = core * root^2.
std::pair<BigInt, Rational> rational_squarefree(const Rational& r) {
    auto [core, root] = squarefree_part(r.numerator() * r.denominator());
    return {core, Rational(root, r.denominator())};
}

}  // namespace

std::pair<BigInt, BigInt> squarefree_part(const BigInt& n) {
    if (n == 0) throw PreconditionError("squarefree_part(0)");
    BigInt core = 1, root = 1;
    auto primes = factor(n);
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        std::size_t e = j - i;
        if (e % 2 == 1) core *= primes[i];
        for (std::size_t k = 0; k < e / 2; ++k) root *= primes[i];
        i = j;
    }
    if (n < 0) core = -core;
    return {core, root};
}

std::optional<BigInt> sqrt_mod_squarefree(const BigInt& a, const BigInt& m) {
    if (m < 1) throw PreconditionError("sqrt_mod_squarefree: modulus must be positive");
    BigInt t = 0, mod = 1;
    if (m > 1) {
        for (const auto& p : factor(m)) {
            BigInt ap = mod_positive(a, p);
            if (p != 2 && ap != 0 && mpz_legendre(ap.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
            BigInt r = sqrt_mod_prime(ap, p);
            // combine t mod `mod` with r mod p
            BigInt inv;
            mpz_invert(inv.get_mpz_t(), mod.get_mpz_t(), p.get_mpz_t());
            BigInt step = mod_positive(BigInt((r - t) * inv), p);
            t += mod * step;
            mod *= p;
        }
    }
    t = mod_positive(t, m);
    if (2 * t > m) t -= m;
    return t;
}

std::optional<std::array<BigInt, 3>> solve_lagrange(const BigInt& A, const BigInt& B) {
    if (A == 0 || B == 0) throw PreconditionError("solve_lagrange: zero coefficient");
    if (A == 1) return std::array<BigInt, 3>{1, 1, 0};
    if (B == 1) return std::array<BigInt, 3>{1, 0, 1};
    if (::abs(A) > ::abs(B)) {
        auto r = solve_lagrange(B, A);
        if (!r) return std::nullopt;
        return std::array<BigInt, 3>{(*r)[0], (*r)[2], (*r)[1]};
    }
    BigInt absb = ::abs(B);
    if (absb == 1) return std::nullopt;  // A = B = -1
    auto t = sqrt_mod_squarefree(A, absb);
    if (!t) return std::nullopt;
    // (t^2 - A) = B k' is a norm from Q(sqrt A), so B and k' have the same solvability.
    BigInt kp = (*t * *t - A) / B;
    auto [k, s] = squarefree_part(kp);
    auto r = solve_lagrange(A, k);
    if (!r) return std::nullopt;
    const auto& [x, u, v] = *r;
    std::array<BigInt, 3> out{*t * x + A * u, x + *t * u, k * s * v};
    BigInt g = gcd3(out[0], out[1], out[2]);
    for (auto& c : out) c /= g;
    return out;
}

std::optional<std::pair<Rational, Rational>> represent_binary(const Rational& a, const Rational& b, const Rational& c) {
    if (a.is_zero() || b.is_zero() || c.is_zero()) throw PreconditionError("represent_binary: zero coefficient");
    // Multiply by a: (a x)^2 = (ac) w^2 + (-ab) y^2, with x = X / (a W), y = Y / W.
    auto [alpha, ra] = rational_squarefree(a * c);
    auto [beta, rb] = rational_squarefree(-a * b);
    auto sol = solve_lagrange(alpha, beta);
    if (!sol) return std::nullopt;
    const auto& [X, U, V] = *sol;
    if (U == 0) throw PreconditionError("represent_binary: -ab is a rational square");
    Rational w = Rational(U) / ra;
    Rational y = Rational(V) / rb;
    Rational x = Rational(X) / (a * w);
    Rational yy = y / w;
    if (!(a * x * x + b * yy * yy == c)) throw VerificationFailure("represent_binary: solution does not verify");
    return std::make_pair(x, yy);
}

}  // namespace qnil::local
