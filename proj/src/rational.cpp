#include "antipode/rational.hpp"

#include <cctype>

namespace antipode {

Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Int ceil_rat(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Int round_nearest(const Rat& x) {
    return floor_rat(x + make_rat(1, 2));
}

std::string rat_to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::optional<Rat> parse_rat(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::string s(text);
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!valid_int(num) || !valid_int(den)) return std::nullopt;
        Rat q(Int(num), Int(den));
        if (q.get_den() == 0) return std::nullopt;
        q.canonicalize();
        return q;
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
        if (head.empty() || head == "-" || head == "+") head += "0";
        if (!valid_int(head) || tail.empty()) return std::nullopt;
        for (char c : tail)
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        Int scale = 1;
        for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
        Int whole(head);
        Int frac(tail);
        Int num = whole * scale + (head[0] == '-' ? -frac : frac);
        Rat q(num, scale);
        q.canonicalize();
        return q;
    }
    if (!valid_int(s)) return std::nullopt;
    return Rat(Int(s));
}

}  // namespace antipode
