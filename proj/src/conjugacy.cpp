#include "qnil/conjugacy.hpp"

#include "qnil/conic.hpp"
#include "qnil/errors.hpp"

#include <algorithm>
#include <numeric>

#include <sstream>

namespace qnil {

ConjClass ConjClass::of(const Quaternion& q) { return ConjClass{q.trace(), q.norm(), q.is_central(), q}; }

bool ConjClass::contains(const Quaternion& q) const {
    if (central) return q == representative;
    return !q.is_central() && q.trace() == trace && q.norm() == norm;
}

bool operator==(const ConjClass& x, const ConjClass& y) {
    if (x.central != y.central) return false;
    if (x.central) return x.representative == y.representative;
    return x.trace == y.trace && x.norm == y.norm;
}

std::string ConjClass::to_string() const {
    std::ostringstream os;
    os << "[t=" << trace << ",N=" << norm << "] rep=" << representative;
    return os.str();
}

RatMatrix left_mul_matrix(const Quaternion& p) {
    RatMatrix m(4, 4);
    for (int col = 0; col < 4; ++col) {
        Quaternion img = p * Quaternion::basis(p.algebra(), col);
        for (int row = 0; row < 4; ++row) m(row, col) = img.coord(row);
    }
    return m;
}

RatMatrix right_mul_matrix(const Quaternion& q) {
    RatMatrix m(4, 4);
    for (int col = 0; col < 4; ++col) {
        Quaternion img = Quaternion::basis(q.algebra(), col) * q;
        for (int row = 0; row < 4; ++row) m(row, col) = img.coord(row);
    }
    return m;
}

Quaternion quaternion_from_coords(const AlgebraParams& alg, std::span<const Rational> coords) {
    return Quaternion(alg, coords[0], coords[1], coords[2], coords[3]);
}

bool are_conjugate(const Quaternion& p, const Quaternion& q) {
    require_same_algebra(p, q);
    if (p.is_central() || q.is_central()) return p == q;
    return p.trace() == q.trace() && p.norm() == q.norm();
}

Quaternion conjugator(const Quaternion& p, const Quaternion& q) {
    if (!are_conjugate(p, q)) throw ObstructionError("conjugator: " + p.to_string() + " and " + q.to_string() + " are not conjugate");
    if (q.is_central()) return Quaternion::scalar(q.algebra(), 1);
    // g q = p g  <=>  (R_q - L_p) g = 0
    auto basis = kernel(right_mul_matrix(q) - left_mul_matrix(p));
    if (basis.empty()) throw VerificationFailure("conjugator: empty intertwiner space");
    Quaternion g = quaternion_from_coords(q.algebra(), basis.front());
    if (!(g * q == p * g)) throw VerificationFailure("conjugator: witness does not verify");
    return g;
}

std::optional<Quaternion> sylvester_solve(const Quaternion& p, const Quaternion& q, const Quaternion& d) {
    require_same_algebra(p, q);
    require_same_algebra(p, d);
    RatMatrix sys = left_mul_matrix(p) - right_mul_matrix(q);
    std::vector<Rational> rhs(d.coords().begin(), d.coords().end());
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    Quaternion c = quaternion_from_coords(p.algebra(), *sol);
    if (!(p * c - c * q == d)) throw VerificationFailure("sylvester_solve: solution does not verify");
    return c;
}

Quaternion translate_conjugate(const Quaternion& p, const Quaternion& q) {
    require_same_algebra(p, q);
    if (p.trace() != q.trace()) throw PreconditionError("translate_conjugate: traces differ");
    const AlgebraParams& alg = p.algebra();
    if (p == q) return Quaternion(alg);
    // Hyperplane N(q) - N(p) + polar(q - p, r) = 0, linear in r's coordinates.
    Quaternion u = q - p;
    std::array<Rational, 4> coef;
    for (int t = 0; t < 4; ++t) coef[t] = polar_form(u, Quaternion::basis(alg, t));
    Rational rhs = p.norm() - q.norm();
    int pivot = 0;
    while (coef[pivot].is_zero()) ++pivot;  // u != 0 and the polar form is nondegenerate
    std::optional<Quaternion> found;
    constexpr std::int64_t kMaxHeight = 64;
    for_each_tuple_by_height(3, 0, kMaxHeight, [&](std::span<const std::int64_t> free) {
        std::array<Rational, 4> c;
        Rational acc = rhs;
        for (int t = 0, f = 0; t < 4; ++t) {
            if (t == pivot) continue;
            c[t] = Rational(free[f++]);
            acc -= coef[t] * c[t];
        }
        c[pivot] = acc / coef[pivot];
        Quaternion r = quaternion_from_coords(alg, c);
        if ((p + r).is_central() || (q + r).is_central()) return false;
        found = std::move(r);
        return true;
    });
    if (!found) throw BudgetExhausted("translate_conjugate: hyperplane search exhausted");
    if (!are_conjugate(p + *found, q + *found)) throw VerificationFailure("translate_conjugate: result does not verify");
    return *found;
}

std::pair<Quaternion, Quaternion> pure_as_commutator(const Quaternion& p) {
    if (!p.trace().is_zero()) throw PreconditionError("pure_as_commutator: trace is nonzero");
    const AlgebraParams& alg = p.algebra();
    if (p.is_zero()) return {Quaternion(alg), Quaternion(alg)};
    Quaternion zero(alg);
    Quaternion r = translate_conjugate(p, zero);
    Quaternion g = conjugator(p + r, r);  // g r g^-1 = p + r
    Quaternion u = g * r;
    Quaternion v = g.inverse();
    if (!(commutator(u, v) == p)) throw VerificationFailure("pure_as_commutator: pair does not verify");
    return {u, v};
}

bool has_pure_sqrt(const AlgebraParams& alg, const Rational& e) {
    if (e.is_zero()) return true;
    // A nonzero rational square would give a zero divisor (s - c)(s + c).
    if (e.is_square()) return false;
    // Q(sqrt e) embeds iff it is a field at every ramified place.
    for (const auto& v : alg.ramified()) {
        if (local::is_local_square(e, v)) return false;
    }
    return true;
}

std::optional<Quaternion> sqrt_pure(const AlgebraParams& alg, const Rational& e, const SearchConfig& cfg) {
    if (e.is_zero()) return Quaternion(alg);
    if (!has_pure_sqrt(alg, e)) return std::nullopt;
    const Rational& a = alg.a();
    const Rational& b = alg.b();
    const Rational& k2 = alg.k_square();
    auto verified = [&](Quaternion s) {
        if (!(s * s == Quaternion::scalar(alg, e)) || !s.trace().is_zero()) {
            throw VerificationFailure("sqrt_pure: result does not verify");
        }
        return s;
    };
    // Small answers first: s = (x i + y j + z k)/w with a x^2 + b y^2 - ab z^2 = e w^2.
    std::optional<Quaternion> found;
    constexpr std::int64_t kQuickHeight = 3;
    for_each_tuple_by_height(3, 1, std::min(kQuickHeight, cfg.sqrt_height), [&](std::span<const std::int64_t> t) {
        Rational x(t[0]), y(t[1]), z(t[2]);
        Rational f = a * x * x + b * y * y + k2 * z * z;
        if (f.is_zero()) return false;
        Rational w2 = f / e;
        if (!w2.is_square()) return false;
        Rational inv_w = w2.sqrt().inverse();
        found = Quaternion(alg, 0, x * inv_w, y * inv_w, z * inv_w);
        return true;
    });
    if (found) return verified(*found);
    // Otherwise fix z and solve the conic a x^2 + b y^2 = e + ab z^2.
    for_each_tuple_by_height(2, 0, cfg.sqrt_height, [&](std::span<const std::int64_t> t) {
        // z = t0 / t1 in lowest terms
        if (t[1] <= 0 || std::gcd(t[0], t[1]) != 1) return false;
        Rational z(t[0], t[1]);
        Rational c = e - k2 * z * z;
        if (c.is_zero()) {
            found = Quaternion(alg, 0, 0, 0, z);
            return true;
        }
        auto xy = local::represent_binary(a, b, c);
        if (!xy) return false;
        found = Quaternion(alg, 0, xy->first, xy->second, z);
        return true;
    });
    if (!found) {
        throw BudgetExhausted("sqrt_pure: no pure square root of " + e.to_string() + " with height(z) <= " +
                              std::to_string(cfg.sqrt_height));
    }
    return verified(*found);
}

std::optional<Quaternion> class_representative(const AlgebraParams& alg, const Rational& t, const Rational& n,
                                               const SearchConfig& cfg) {
    Rational half = t / Rational(2);
    // q = t/2 + s with s pure and s^2 = t^2/4 - n
    Rational disc = half * half - n;
    if (disc.is_zero()) return Quaternion::scalar(alg, half);
    auto s = sqrt_pure(alg, disc, cfg);
    if (!s) return std::nullopt;
    return Quaternion::scalar(alg, half) + *s;
}

}  // namespace qnil
