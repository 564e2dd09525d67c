#include "hcc/types.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>

namespace hcc {

std::string to_decimal(const Rat& r, int digits) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    bool neg = num < 0;
    if (neg) num = -num;
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // round half up at the last kept digit
    Int scaled = (num * scale * 2 + den) / (den * 2);
    Int ip = scaled / scale;
    Int fp = scaled % scale;
    std::ostringstream os;
    if (neg && (ip != 0 || fp != 0)) os << '-';
    os << ip;
    if (digits > 0) {
        std::string f = fp.str();
        os << '.' << std::string(digits - static_cast<int>(f.size()), '0') << f;
    }
    return os.str();
}

std::string to_sci(const Int& v, int sig) {
    if (v == 0) return "0";
    Int a = v < 0 ? Int(-v) : v;
    std::string d = a.str();
    int exp = static_cast<int>(d.size()) - 1;
    std::string mant;
    if (static_cast<int>(d.size()) <= sig) {
        mant = d;
    } else {
        // round the (sig+1)-digit prefix
        long long prefix = std::stoll(d.substr(0, sig + 1));
        prefix = (prefix + 5) / 10;
        mant = std::to_string(prefix);
        if (static_cast<int>(mant.size()) > sig) {  // rounding carried over
            mant = mant.substr(0, sig);
            ++exp;
        }
    }
    while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
    std::string m = mant.substr(0, 1);
    if (mant.size() > 1) m += "." + mant.substr(1);
    std::ostringstream os;
    if (v < 0) os << '-';
    if (exp == 0) {
        os << m;
    } else {
        os << m << 'e' << exp;
    }
    return os.str();
}

std::string rat_to_string(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace hcc
