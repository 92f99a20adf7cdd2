#include "addel/scalar/rational.hpp"

namespace addel {

Rat Rat::from_string(const std::string& s) {
    auto bad = [&] { throw ParseError("bad rational literal '" + s + "'", 0, 0); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(s);
            return Rat(mpq_class(n));
        }
        mpz_class n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw DivisionByZero{};
        mpq_class q(n, d);
        q.canonicalize();
        return Rat(q);
    } catch (const std::invalid_argument&) {
        bad();
    }
    return Rat();  // unreachable
}

}  // namespace addel
