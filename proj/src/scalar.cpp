#include "pseudochar/scalar.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "pseudochar/errors.hpp"

namespace pseudochar {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

std::uint64_t reduce(std::int64_t v, std::uint64_t m) {
    // Widen before the remainder: |INT64_MIN| is not representable as int64.
    __int128 r = static_cast<__int128>(v) % static_cast<__int128>(m);
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t m) {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return mpz_fdiv_ui(v.get_mpz_t(), m);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

/// Extended Euclid. Returns false when gcd(a, m) != 1.
bool inverse_mod(std::uint64_t a, std::uint64_t m, std::uint64_t& out) {
    __int128 t = 0, new_t = 1;
    __int128 r = m, new_r = a;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) return false;
    if (t < 0) t += m;
    out = static_cast<std::uint64_t>(t);
    return true;
}

[[noreturn]] void mismatch(const Scalar& a, const Scalar& b) {
    if (a.ring().kind() == b.ring().kind())
        throw ModulusMismatch("scalar modulus mismatch: " + a.ring().to_string() + " vs " + b.ring().to_string());
    throw BackendMismatch("scalar backend mismatch: " + a.ring().to_string() + " vs " + b.ring().to_string());
}

template <class Op>
Scalar combine(const Scalar& a, const Scalar& b, Op op) {
    const auto& va = a.value();
    const auto& vb = b.value();
    if (va.index() != vb.index()) mismatch(a, b);
    if (const auto* ra = std::get_if<Residue>(&va)) {
        if (ra->modulus() != std::get<Residue>(vb).modulus()) mismatch(a, b);
    }
    return std::visit(
        [&](const auto& x) -> Scalar {
            using T = std::decay_t<decltype(x)>;
            return op(x, std::get<T>(vb));
        },
        va);
}

}  // namespace

Residue::Residue(std::int64_t value, std::uint64_t modulus) : modulus_(modulus) {
    if (modulus < 2 || modulus > kMaxModulus)
        throw PreconditionFailed("modulus must lie in [2, 2^62], got " + std::to_string(modulus));
    value_ = reduce(value, modulus);
}

ScalarRing ScalarRing::modular(std::uint64_t modulus) {
    if (modulus < 2 || modulus > kMaxModulus)
        throw PreconditionFailed("modulus must lie in [2, 2^62], got " + std::to_string(modulus));
    return ScalarRing(Kind::Modular, modulus);
}

ScalarRing ScalarRing::parse(const std::string& text) {
    if (text == "rational" || text == "Q") return rational();
    if (text == "poly" || text == "polynomial") return polynomial();
    if (text.rfind("mod:", 0) == 0) {
        std::uint64_t m = 0;
        const char* first = text.data() + 4;
        const char* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, m);
        if (ec != std::errc() || ptr != last || first == last) throw ParseError("bad modulus in ring '" + text + "'");
        if (m < 2 || m > kMaxModulus) throw ParseError("modulus out of range in ring '" + text + "'");
        return modular(m);
    }
    throw ParseError("unknown ring '" + text + "' (expected rational, poly or mod:<m>)");
}

Scalar ScalarRing::zero() const { return from_int(0); }
Scalar ScalarRing::one() const { return from_int(1); }

Scalar ScalarRing::from_int(std::int64_t n) const {
    switch (kind_) {
        case Kind::Rational:
            return Scalar(mpq_class(mpz_class(static_cast<long>(n))));
        case Kind::Modular:
            return Scalar(Residue(n, modulus_));
        case Kind::Polynomial:
            return Scalar(Polynomial(mpq_class(mpz_class(static_cast<long>(n)))));
    }
    return {};
}

Scalar ScalarRing::from_integer(const mpz_class& n) const {
    switch (kind_) {
        case Kind::Rational:
            return Scalar(mpq_class(n));
        case Kind::Modular:
            return Scalar(Residue(static_cast<std::int64_t>(reduce(n, modulus_)), modulus_));
        case Kind::Polynomial:
            return Scalar(Polynomial(mpq_class(n)));
    }
    return {};
}

Scalar ScalarRing::from_rational(const mpq_class& q) const {
    switch (kind_) {
        case Kind::Rational:
            return Scalar(q);
        case Kind::Modular: {
            Scalar num = from_integer(q.get_num());
            Scalar den = from_integer(q.get_den());
            return num * den.inverse();
        }
        case Kind::Polynomial:
            return Scalar(Polynomial(q));
    }
    return {};
}

std::string ScalarRing::to_string() const {
    switch (kind_) {
        case Kind::Rational:
            return "rational";
        case Kind::Modular:
            return "mod:" + std::to_string(modulus_);
        case Kind::Polynomial:
            return "poly";
    }
    return "?";
}

Scalar::Scalar(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }

Scalar Scalar::rational(long num, long den) { return Scalar(mpq_class(num, den)); }

ScalarRing Scalar::ring() const {
    switch (value_.index()) {
        case 0:
            return ScalarRing::rational();
        case 1:
            return ScalarRing::modular(std::get<Residue>(value_).modulus());
        default:
            return ScalarRing::polynomial();
    }
}

bool Scalar::is_zero() const {
    return std::visit(
        [](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, mpq_class>) return x == 0;
            else if constexpr (std::is_same_v<T, Residue>) return x.value() == 0;
            else return x.is_zero();
        },
        value_);
}

bool Scalar::is_one() const { return *this == ring().one(); }

Scalar Scalar::operator-() const {
    return std::visit(
        [](const auto& x) -> Scalar {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, mpq_class>) return Scalar(mpq_class(-x));
            else if constexpr (std::is_same_v<T, Residue>)
                return Scalar(Residue::reduced(x.value() == 0 ? 0 : x.modulus() - x.value(), x.modulus()));
            else return Scalar(-x);
        },
        value_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, mpq_class>) return Scalar(mpq_class(x + y));
        else if constexpr (std::is_same_v<T, Residue>) {
            std::uint64_t s = x.value() + y.value();
            if (s >= x.modulus()) s -= x.modulus();
            return Scalar(Residue::reduced(s, x.modulus()));
        } else return Scalar(x + y);
    });
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, mpq_class>) return Scalar(mpq_class(x * y));
        else if constexpr (std::is_same_v<T, Residue>)
            return Scalar(Residue::reduced(mul_mod(x.value(), y.value(), x.modulus()), x.modulus()));
        else return Scalar(x * y);
    });
}

Scalar Scalar::times(std::int64_t n) const { return *this * ring().from_int(n); }

Scalar Scalar::pow(unsigned e) const {
    Scalar result = ring().one();
    Scalar base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

Scalar Scalar::inverse() const {
    return std::visit(
        [this](const auto& x) -> Scalar {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, mpq_class>) {
                if (x == 0) throw NotInvertible("0 is not invertible in Q");
                return Scalar(mpq_class(1 / x));
            } else if constexpr (std::is_same_v<T, Residue>) {
                std::uint64_t inv = 0;
                if (!inverse_mod(x.value(), x.modulus(), inv))
                    throw NotInvertible(to_string() + " is not invertible mod " + std::to_string(x.modulus()));
                return Scalar(Residue::reduced(inv, x.modulus()));
            } else {
                if (!x.is_constant() || x.is_zero())
                    throw NotInvertible("polynomial " + x.to_string() + " is not invertible");
                return Scalar(Polynomial(mpq_class(1 / x.constant_term())));
            }
        },
        value_);
}

bool operator==(const Scalar& a, const Scalar& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (a.value_.index() != b.value_.index()) return a.value_.index() <=> b.value_.index();
    return std::visit(
        [&](const auto& x) -> std::strong_ordering {
            using T = std::decay_t<decltype(x)>;
            const T& y = std::get<T>(b.value_);
            if constexpr (std::is_same_v<T, mpq_class>) {
                int c = cmp(x, y);
                return c < 0 ? std::strong_ordering::less
                             : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
            } else {
                return x <=> y;
            }
        },
        a.value_);
}

std::string Scalar::to_string() const {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, mpq_class>) return x.get_str();
            else if constexpr (std::is_same_v<T, Residue>) return std::to_string(x.value());
            else return x.to_string();
        },
        value_);
}

mpz_class factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Scalar inverse_of_factorial(unsigned d, const ScalarRing& ring) {
    if (d == 0) throw PreconditionFailed("inverse_of_factorial needs d >= 1");
    Scalar f = ring.from_integer(factorial(d));
    if (ring.kind() == ScalarRing::Kind::Modular && f.is_zero())
        throw NotInvertible(std::to_string(d) + "! not invertible mod " + std::to_string(ring.modulus()));
    try {
        return f.inverse();
    } catch (const NotInvertible&) {
        throw NotInvertible(std::to_string(d) + "! not invertible mod " + std::to_string(ring.modulus()));
    }
}

}  // namespace pseudochar
