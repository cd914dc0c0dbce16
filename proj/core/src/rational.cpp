#include "ndslab/rational.hpp"

#include <cctype>

namespace ndslab {

namespace {
unsigned g_denominator_bit_limit = 512;
}

void Rational::set_denominator_bit_limit(unsigned bits) { g_denominator_bit_limit = bits; }
unsigned Rational::denominator_bit_limit() { return g_denominator_bit_limit; }

void Rational::check_budget() const {
    const bigint den = denominator();
    if (boost::multiprecision::msb(den) + 1 > g_denominator_bit_limit) {
        throw RationalOverflowError("rational denominator exceeds " +
                                    std::to_string(g_denominator_bit_limit) +
                                    " bits: " + str());
    }
}

Rational::Rational(rep v) : v_(std::move(v)) { check_budget(); }

Rational::Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = rep(num, den);
    check_budget();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    return Rational(Rational::rep(a.v_ / b.v_));
}

std::string Rational::str() const {
    std::string n = numerator().str();
    if (denominator() == 1) return n;
    return n + "/" + denominator().str();
}

Rational Rational::parse(std::string_view text) {
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string_view::npos) throw std::invalid_argument("empty rational literal");
    text = text.substr(begin, end - begin + 1);

    bool negative = false;
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    auto digits = [&](std::string& out) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            out.push_back(text[pos]);
            ++pos;
        }
        return pos > start;
    };

    std::string ipart;
    if (!digits(ipart)) throw std::invalid_argument("bad rational literal: " + std::string(text));

    bigint num(ipart);
    bigint den(1);
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::string fpart;
        if (!digits(fpart)) throw std::invalid_argument("bad decimal literal: " + std::string(text));
        for (std::size_t i = 0; i < fpart.size(); ++i) den *= 10;
        num = num * den + bigint(fpart);
    } else if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::string qpart;
        if (!digits(qpart)) throw std::invalid_argument("bad rational literal: " + std::string(text));
        den = bigint(qpart);
        if (den == 0) throw std::domain_error("rational with zero denominator: " + std::string(text));
    }
    if (pos != text.size()) throw std::invalid_argument("trailing junk in rational literal: " + std::string(text));
    if (negative) num = -num;
    return Rational(rep(num, den));
}

}  // namespace ndslab
