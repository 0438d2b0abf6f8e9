#include "kloc/gaussq.hpp"

#include <cctype>

namespace kloc {

Rational norm(const GaussianRational& z) {
    return z.re * z.re + z.im * z.im;
}

GaussianRational inverse(const GaussianRational& z) {
    if (z.is_zero()) throw DivisionByZero("inverse of zero");
    const Rational n = norm(z);
    return {z.re / n, -(z.im / n)};
}

int scalar_compare(const GaussianRational& a, const GaussianRational& b) {
    if (a.re < b.re) return -1;
    if (b.re < a.re) return 1;
    if (a.im < b.im) return -1;
    if (b.im < a.im) return 1;
    return 0;
}

namespace {

struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, pos);
    }

    // sign? — returns -1 or +1, advancing past an explicit sign.
    int scan_sign() {
        if (!done() && (peek() == '+' || peek() == '-')) {
            const int s = peek() == '-' ? -1 : 1;
            ++pos;
            return s;
        }
        return 1;
    }

    bool at_digit() const { return !done() && std::isdigit(static_cast<unsigned char>(peek())); }

    mpz_class scan_int() {
        if (!at_digit()) fail("expected digit");
        const std::size_t start = pos;
        while (at_digit()) ++pos;
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    }

    // rat := int ("/" int)
    Rational scan_rat() {
        mpz_class num = scan_int();
        mpz_class den = 1;
        if (!done() && peek() == '/') {
            ++pos;
            const std::size_t den_pos = pos;
            den = scan_int();
            if (den == 0) throw ParseError("zero denominator", den_pos);
        }
        return Rational(num, den);
    }
};

}  // namespace

GaussianRational parse_scalar(std::string_view text) {
    Scanner s{text};
    if (s.done()) s.fail("empty scalar");

    const int first_sign = s.scan_sign();
    bool have_rat = false;
    Rational first(1);
    if (s.at_digit()) {
        first = s.scan_rat();
        have_rat = true;
    }

    // imag alone: sign? rat? "i"
    if (!s.done() && s.peek() == 'i') {
        ++s.pos;
        if (!s.done()) s.fail("trailing characters after 'i'");
        return {Rational(0), first_sign < 0 ? -first : first};
    }

    if (!have_rat) s.fail("expected digit or 'i'");
    const Rational real = first_sign < 0 ? -first : first;
    if (s.done()) return {real, Rational(0)};

    // real sign imag
    if (s.peek() != '+' && s.peek() != '-') s.fail("expected '+', '-', or end of scalar");
    const int imag_sign = s.scan_sign();
    Rational imag(1);
    if (s.at_digit()) imag = s.scan_rat();
    if (s.done() || s.peek() != 'i') s.fail("expected 'i'");
    ++s.pos;
    if (!s.done()) s.fail("trailing characters after 'i'");
    return {real, imag_sign < 0 ? -imag : imag};
}

namespace {

// Coefficient of the imaginary part, with "1" and "-1" reduced to the
// bare sign so that "i" and "-i" come out as such.
std::string imag_str(const Rational& im) {
    if (im == Rational(1)) return "i";
    if (im == Rational(-1)) return "-i";
    return im.str() + "i";
}

}  // namespace

std::string format_scalar(const GaussianRational& z) {
    if (z.im.is_zero()) return z.re.str();
    if (z.re.is_zero()) return imag_str(z.im);
    std::string out = z.re.str();
    if (z.im.sign() > 0) out += '+';
    out += imag_str(z.im);
    return out;
}

}  // namespace kloc
