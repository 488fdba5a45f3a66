#include "airyderiv/polytext.hpp"

#include <cctype>
#include <stdexcept>

namespace airyderiv {

std::string format_poly(const Poly& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    const auto c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        const Rational& v = c[k];
        if (v == 0) continue;
        const bool neg = sgn(v) < 0;
        const Rational mag = neg ? Rational(-v) : v;
        if (neg) out += '-';
        else if (!out.empty()) out += '+';
        if (k == 0 || mag != 1) {
            const std::string s = mag.get_str();
            const bool frac = mag.get_den() != 1;
            out += (frac && k > 0) ? "(" + s + ")" : s;
        }
        if (k >= 1) out += 'x';
        if (k >= 2) out += '^' + std::to_string(k);
    }
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s)
    {
        for (char ch : s)
            if (!std::isspace(static_cast<unsigned char>(ch))) text_ += ch;
    }

    Poly run()
    {
        if (text_.empty()) fail("empty");
        Poly out;
        bool first = true;
        while (pos_ < text_.size()) {
            bool neg = false;
            if (peek() == '+' || peek() == '-') {
                neg = text_[pos_++] == '-';
            } else if (!first) {
                fail("expected sign");
            }
            first = false;
            out += term(neg);
        }
        return out;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const char* why) const
    {
        throw std::invalid_argument(std::string("parse_poly: ") + why + " in \"" + text_ + "\"");
    }

    std::string digits()
    {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return text_.substr(start, pos_ - start);
    }

    Rational number()
    {
        std::string s = digits();
        if (peek() == '/') {
            ++pos_;
            s += '/' + digits();
        }
        Rational r;
        if (r.set_str(s, 10) != 0 || r.get_den() == 0) fail("bad number");
        r.canonicalize();
        return r;
    }

    Poly term(bool neg)
    {
        Rational c(1);
        bool have_coeff = false;
        if (peek() == '(') {
            ++pos_;
            c = number();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            have_coeff = true;
        } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = number();
            have_coeff = true;
        }
        if (have_coeff && peek() == '*') ++pos_;
        std::size_t power = 0;
        if (peek() == 'x') {
            ++pos_;
            power = 1;
            if (peek() == '^') {
                ++pos_;
                power = std::stoul(digits());
            }
        } else if (!have_coeff) {
            fail("expected term");
        }
        return Poly::monomial(neg ? Rational(-c) : c, power);
    }

    std::string text_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).run(); }

}  // namespace airyderiv
