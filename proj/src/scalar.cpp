#include "hopfcyc/scalar.hpp"

namespace hopfcyc {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw InputError("not a rational number: '" + s + "'");
    if (q.get_den() == 0) throw InputError("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string Field::name() const { return p == 0 ? "q" : "f" + std::to_string(p); }

Field Field::parse(std::string_view text) {
    if (text == "q" || text == "Q") return {};
    if (text.size() >= 2 && (text[0] == 'f' || text[0] == 'F')) {
        std::uint64_t p = 0;
        for (char c : text.substr(1)) {
            if (c < '0' || c > '9') throw InputError("bad field '" + std::string(text) + "'");
            p = p * 10 + static_cast<std::uint64_t>(c - '0');
            if (p > (1ULL << 31)) throw InputError("prime too large: " + std::string(text));
        }
        if (p < 2) throw InputError("bad field '" + std::string(text) + "'");
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw InputError(std::to_string(p) + " is not prime");
        return Field{p};
    }
    throw InputError("bad field '" + std::string(text) + "' (expected q or f<p>)");
}

}  // namespace hopfcyc
