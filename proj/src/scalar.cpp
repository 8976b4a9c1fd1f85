#include "tlau/scalar.hpp"
#include "tlau/errors.hpp"

#include <ostream>
#include <stdexcept>

namespace tlau {

mpq_class Scalar::parse_rational(std::string_view text)
{
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.empty()) throw std::invalid_argument("empty rational");
    if (s.front() == '+') s.erase(s.begin());
    auto valid = [](const std::string& part) {
        std::size_t start = (!part.empty() && part[0] == '-') ? 1 : 0;
        if (part.size() <= start) return false;
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(num) || !valid(den) || den[0] == '-')
        throw std::invalid_argument("malformed rational '" + s + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

Scalar Scalar::inverse() const
{
    if (is_zero()) throw Error("inverse of zero scalar");
    if (is_real()) return Scalar(mpq_class(1) / re_);
    mpq_class norm = re_ * re_ + im_ * im_;
    return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b)
{
    if (a.is_real() && b.is_real()) {
        re_ += a.re_ * b.re_;
        return;
    }
    *this += a * b;
}

std::string Scalar::to_string() const
{
    if (is_real()) return re_.get_str();
    std::string out = re_.get_str();
    out += sgn(im_) < 0 ? "-" : "+";
    out += mpq_class(abs(im_)).get_str();
    out += "i";
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

} // namespace tlau
