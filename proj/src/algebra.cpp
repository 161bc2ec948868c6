#include "qnil/algebra.hpp"

#include "qnil/errors.hpp"

#include <algorithm>

namespace qnil {

namespace local {

namespace {

BigInt pollard_rho(const BigInt& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        BigInt x = 2, y = 2, d = 1;
        auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            BigInt diff = ::abs(BigInt(x - y));
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

void factor_into(BigInt n, std::vector<BigInt>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        out.push_back(n);
        return;
    }
    BigInt d = pollard_rho(n);
    factor_into(d, out);
    factor_into(BigInt(n / d), out);
}

// Squarefree integer in the square class of r (r != 0).
BigInt square_class_rep(const Rational& r) {
    BigInt n = r.numerator() * r.denominator();
    int s = sgn(n);
    BigInt out = 1;
    auto primes = factor(n);
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        if ((j - i) % 2 == 1) out *= primes[i];
        i = j;
    }
    return s < 0 ? BigInt(-out) : out;
}

unsigned long valuation(BigInt& n, const BigInt& p) {
    unsigned long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

int legendre(const BigInt& u, const BigInt& p) { return mpz_legendre(u.get_mpz_t(), p.get_mpz_t()); }

int mod8(const BigInt& u) {
    BigInt r = u % 8;
    if (r < 0) r += 8;
    return static_cast<int>(r.get_si());
}

}  // namespace

std::vector<BigInt> factor(const BigInt& n) {
    if (n == 0) throw PreconditionError("factor(0)");
    BigInt m = ::abs(n);
    std::vector<BigInt> out;
    for (unsigned long p = 2; p < 10000; ++p) {
        if (BigInt(p) * p > m) break;
        while (m % p == 0) {
            out.emplace_back(p);
            m /= p;
        }
    }
    factor_into(m, out);
    std::sort(out.begin(), out.end());
    return out;
}

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    if (a.is_zero() || b.is_zero()) throw ParameterError("Hilbert symbol of zero");
    if (v.is_real()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
    BigInt u = square_class_rep(a);
    BigInt w = square_class_rep(b);
    const BigInt& p = v.prime;
    unsigned long alpha = valuation(u, p);
    unsigned long beta = valuation(w, p);
    if (p == 2) {
        int eu = ((mod8(u) - 1) / 2) % 2;
        int ew = ((mod8(w) - 1) / 2) % 2;
        int ou = (mod8(u) == 3 || mod8(u) == 5) ? 1 : 0;
        int ow = (mod8(w) == 3 || mod8(w) == 5) ? 1 : 0;
        unsigned long e = static_cast<unsigned long>(eu * ew) + alpha * ow + beta * ou;
        return e % 2 == 0 ? 1 : -1;
    }
    int sign = 1;
    BigInt half = (p - 1) / 2;
    if ((alpha * beta) % 2 == 1 && half % 2 == 1) sign = -sign;
    if (beta % 2 == 1) sign *= legendre(u, p);
    if (alpha % 2 == 1) sign *= legendre(w, p);
    return sign;
}

std::vector<Place> relevant_places(const Rational& a, const Rational& b) {
    std::vector<BigInt> primes{2};
    for (const BigInt& n : {a.numerator(), a.denominator(), b.numerator(), b.denominator()}) {
        if (n == 0) continue;
        for (auto& p : factor(n)) primes.push_back(p);
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    std::vector<Place> places{Place{0}};
    for (auto& p : primes) places.push_back(Place{p});
    return places;
}

std::vector<Place> ramified_places(const Rational& a, const Rational& b) {
    std::vector<Place> out;
    for (auto& v : relevant_places(a, b)) {
        if (hilbert_symbol(a, b, v) == -1) out.push_back(v);
    }
    return out;
}

bool is_local_square(const Rational& e, const Place& v) {
    if (e.is_zero()) return true;
    if (v.is_real()) return e.sign() > 0;
    BigInt u = square_class_rep(e);
    const BigInt& p = v.prime;
    if (valuation(u, p) % 2 == 1) return false;
    if (p == 2) return mod8(u) == 1;
    return legendre(u, p) == 1;
}

}  // namespace local

bool is_division(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) throw ParameterError("quaternion algebra parameters must be nonzero");
    return !local::ramified_places(a, b).empty();
}

AlgebraParams::AlgebraParams() {
    static const auto hamilton = std::make_shared<const Data>(
        Data{Rational(-1), Rational(-1), Rational(-1), local::ramified_places(Rational(-1), Rational(-1))});
    data_ = hamilton;
}

AlgebraParams AlgebraParams::create(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) throw ParameterError("quaternion algebra parameters must be nonzero");
    auto ram = local::ramified_places(a, b);
    if (ram.empty()) {
        throw NonDivisionAlgebra("(" + a.to_string() + "," + b.to_string() + ") is a split quaternion algebra");
    }
    return AlgebraParams(std::make_shared<const Data>(Data{a, b, -(a * b), std::move(ram)}));
}

}  // namespace qnil
