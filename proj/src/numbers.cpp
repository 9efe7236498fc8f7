#include "schurlc/numbers.hpp"

namespace schurlc {

Int int_factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int int_pow2(unsigned long n) {
    Int r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), n);
    return r;
}

std::string int_to_decimal(const Int& v) { return v.get_str(10); }

Int int_from_decimal(const std::string& s) {
    if (s.empty()) fail(ErrorCode::ParseError, "empty integer literal");
    size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) fail(ErrorCode::ParseError, "bare sign");
    for (size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') fail(ErrorCode::ParseError, "bad integer literal '" + s + "'");
    return Int(s, 10);
}

} // namespace schurlc
