#include "cyclic/rational.hpp"

#include "cyclic/errors.hpp"

#include <cctype>
#include <ostream>

namespace cyclic {

Rational::Rational(long n, long d) {
    if (d == 0) throw ValidationError("rational denominator must be nonzero");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    if (sgn(v_.get_den()) == 0) throw ValidationError("rational denominator must be nonzero");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&] { throw ParseError("invalid rational literal: '" + std::string(text) + "'"); };
    if (text.empty()) fail();
    auto is_int = [&](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!is_int(num)) fail();
    if (slash != std::string_view::npos && !is_int(den)) fail();

    auto strip_plus = [](std::string_view s) {
        return std::string(s[0] == '+' ? s.substr(1) : s);
    };
    mpz_class n(strip_plus(num), 10);
    mpz_class d(1);
    if (slash != std::string_view::npos) {
        d = mpz_class(strip_plus(den), 10);
        if (sgn(d) == 0) fail();
    }
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

mpz_class Rational::height() const {
    mpz_class n = ::abs(v_.get_num());
    return n > v_.get_den() ? n : mpz_class(v_.get_den());
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}
Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}
Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}
Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ValidationError("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace cyclic
